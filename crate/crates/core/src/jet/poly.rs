use alloc::collections::btree_map::{self, BTreeMap};
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Display, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use crate::arith::{int, Rational, Var, XYPoly};

/// A jet coordinate: knows how total derivatives shift it.
pub trait JetVariable: Ord + Clone + Display {
    /// The coordinate obtained by one more total derivative in `dir`.
    fn shifted(&self, dir: Var) -> Self;
}

/// Product of jet coordinates with positive exponents.
///
/// Ordered by total degree, then lexicographically on the sorted variable list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial<V: Ord> {
    powers: BTreeMap<V, u32>,
}

impl<V: Ord> Default for Monomial<V> {
    fn default() -> Self {
        Monomial {
            powers: BTreeMap::new(),
        }
    }
}

impl<V: Ord + Clone> Monomial<V> {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: V) -> Self {
        Self::pow(v, 1)
    }

    pub fn pow(v: V, e: u32) -> Self {
        let mut m = Self::one();
        if e > 0 {
            m.powers.insert(v, e);
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.powers.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn exponent(&self, v: &V) -> u32 {
        self.powers.get(v).copied().unwrap_or(0)
    }

    pub fn powers(&self) -> btree_map::Iter<'_, V, u32> {
        self.powers.iter()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, e) in &other.powers {
            *out.powers.entry(v.clone()).or_insert(0) += e;
        }
        out
    }

    /// Removes one factor `v`. Panics if `v` is absent.
    fn without_one(&self, v: &V) -> Self {
        let mut out = self.clone();
        match out.powers.get_mut(v) {
            Some(e) if *e > 1 => *e -= 1,
            Some(_) => {
                out.powers.remove(v);
            }
            None => panic!("variable not in monomial"),
        }
        out
    }

    pub fn map_vars<W: Ord + Clone>(&self, mut f: impl FnMut(&V) -> W) -> Monomial<W> {
        let mut out = Monomial::one();
        for (v, e) in &self.powers {
            *out.powers.entry(f(v)).or_insert(0) += e;
        }
        out
    }
}

impl<V: Ord> Ord for Monomial<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        let d1: u32 = self.powers.values().sum();
        let d2: u32 = other.powers.values().sum();
        d1.cmp(&d2)
            .then_with(|| self.powers.iter().cmp(other.powers.iter()))
    }
}

impl<V: Ord> PartialOrd for Monomial<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<V: Ord + Display> Display for Monomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.powers.iter().enumerate() {
            if i > 0 {
                f.write_char('*')?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial in jet coordinates `V` with `XYPoly` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JetPoly<V: Ord> {
    terms: BTreeMap<Monomial<V>, XYPoly>,
}

impl<V: Ord> Default for JetPoly<V> {
    fn default() -> Self {
        JetPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<V: JetVariable> JetPoly<V> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The jet-free polynomial `a(x, y)`.
    pub fn coefficient(a: XYPoly) -> Self {
        Self::term(a, Monomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::coefficient(XYPoly::constant(c))
    }

    pub fn var(v: V) -> Self {
        Self::term(XYPoly::one(), Monomial::var(v))
    }

    pub fn term(a: XYPoly, m: Monomial<V>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, a);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial<V>, XYPoly> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial<V>) -> XYPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial<V>, a: XYPoly) {
        if a.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(a);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &a;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Every jet coordinate that occurs.
    pub fn variables(&self) -> BTreeSet<V> {
        self.terms
            .keys()
            .flat_map(|m| m.powers.keys().cloned())
            .collect()
    }

    /// Highest monomial degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Every monomial has degree exactly one.
    pub fn is_linear(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 1)
    }

    /// Coefficients of a linear polynomial, keyed by coordinate.
    pub fn linear_coefficients(&self) -> Option<BTreeMap<V, XYPoly>> {
        if !self.is_linear() {
            return None;
        }
        Some(
            self.terms
                .iter()
                .map(|(m, a)| {
                    (
                        m.powers.keys().next().cloned().expect("degree one"),
                        a.clone(),
                    )
                })
                .collect(),
        )
    }

    /// Multiplication by a coefficient `a(x, y)`.
    pub fn scale_by(&self, a: &XYPoly) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * a);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.scale_by(&XYPoly::constant(c.clone()))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::coefficient(XYPoly::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `∂p/∂v`.
    pub fn partial(&self, v: &V) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                out.add_term(m.without_one(v), a.scale(&int(e.into())));
            }
        }
        out
    }

    /// Total derivative in `dir`: the coefficient partial plus the chain rule
    /// through every coordinate, each coordinate moving to
    /// [`JetVariable::shifted`].
    pub fn total_derivative(&self, dir: Var) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.diff(dir));
            for (v, e) in &m.powers {
                let rest = m.without_one(v).mul(&Monomial::var(v.shifted(dir)));
                out.add_term(rest, a.scale(&int((*e).into())));
            }
        }
        out
    }

    /// `D_x^a D_y^b p`.
    pub fn total_derivative_n(&self, a: u32, b: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..a {
            out = out.total_derivative(Var::X);
        }
        for _ in 0..b {
            out = out.total_derivative(Var::Y);
        }
        out
    }

    /// Substitutes every coordinate through `f`.
    pub fn map_vars<W: JetVariable>(&self, mut f: impl FnMut(&V) -> W) -> JetPoly<W> {
        let mut out = JetPoly::zero();
        for (m, a) in &self.terms {
            out.add_term(m.map_vars(&mut f), a.clone());
        }
        out
    }

    /// Coordinates of `self` in the basis of `(monomial, x^i y^j)` pairs.
    pub fn flat_coefficients(&self) -> Vec<((Monomial<V>, crate::arith::Exponent), Rational)> {
        self.terms
            .iter()
            .flat_map(|(m, a)| a.terms().map(move |(e, c)| ((m.clone(), *e), c.clone())))
            .collect()
    }
}

impl<V: JetVariable> From<XYPoly> for JetPoly<V> {
    fn from(a: XYPoly) -> Self {
        JetPoly::coefficient(a)
    }
}

impl<V: JetVariable> Display for JetPoly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (idx, (m, a)) in self.terms.iter().rev().enumerate() {
            let single = a.is_single_term();
            let negative = single && a.leading_is_negative();
            match (idx, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if single {
                let (e, c) = a.terms().next().expect("single term");
                let bare_one = c.abs().is_one() && e.degree() == 0;
                if m.is_one() || !bare_one {
                    crate::arith::poly_write_unsigned_term(&mut out, c, *e);
                    if !m.is_one() {
                        out.push('*');
                    }
                }
            } else {
                let _ = write!(out, "({a})");
                if !m.is_one() {
                    out.push('*');
                }
            }
            if !m.is_one() {
                let _ = write!(out, "{m}");
            }
        }
        f.write_str(&out)
    }
}

impl<V: JetVariable> Add<&JetPoly<V>> for &JetPoly<V> {
    type Output = JetPoly<V>;
    fn add(self, rhs: &JetPoly<V>) -> JetPoly<V> {
        let mut out = self.clone();
        for (m, a) in &rhs.terms {
            out.add_term(m.clone(), a.clone());
        }
        out
    }
}

impl<V: JetVariable> Sub<&JetPoly<V>> for &JetPoly<V> {
    type Output = JetPoly<V>;
    fn sub(self, rhs: &JetPoly<V>) -> JetPoly<V> {
        let mut out = self.clone();
        for (m, a) in &rhs.terms {
            out.add_term(m.clone(), -a);
        }
        out
    }
}

impl<V: JetVariable> Mul<&JetPoly<V>> for &JetPoly<V> {
    type Output = JetPoly<V>;
    fn mul(self, rhs: &JetPoly<V>) -> JetPoly<V> {
        let mut out = JetPoly::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(ma.mul(mb), a * b);
            }
        }
        out
    }
}

impl<V: JetVariable> Neg for &JetPoly<V> {
    type Output = JetPoly<V>;
    fn neg(self) -> JetPoly<V> {
        self.scale(&int(-1))
    }
}

impl<V: JetVariable> Add for JetPoly<V> {
    type Output = JetPoly<V>;
    fn add(self, rhs: JetPoly<V>) -> JetPoly<V> {
        &self + &rhs
    }
}

impl<V: JetVariable> Sub for JetPoly<V> {
    type Output = JetPoly<V>;
    fn sub(self, rhs: JetPoly<V>) -> JetPoly<V> {
        &self - &rhs
    }
}

impl<V: JetVariable> Mul for JetPoly<V> {
    type Output = JetPoly<V>;
    fn mul(self, rhs: JetPoly<V>) -> JetPoly<V> {
        &self * &rhs
    }
}

impl<V: JetVariable> Neg for JetPoly<V> {
    type Output = JetPoly<V>;
    fn neg(self) -> JetPoly<V> {
        -&self
    }
}
