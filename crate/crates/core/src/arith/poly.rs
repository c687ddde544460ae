use alloc::collections::btree_map::{self, BTreeMap};
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt::{self, Write};
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::{int, Rational};

/// One of the two independent variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
}

/// Exponent pair of a monomial `x^x y^y`.
///
/// Ordered degree-lexicographically: by total degree, then by the power of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponent {
    pub x: u32,
    pub y: u32,
}

impl Exponent {
    pub const fn new(x: u32, y: u32) -> Self {
        Exponent { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.x).cmp(&(other.degree(), other.x))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x` and `y` with rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct XYPoly {
    terms: BTreeMap<Exponent, Rational>,
}

impl XYPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// `c · x^i · y^j`.
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(Exponent::new(i, j), c);
        p
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Self::x(),
            Var::Y => Self::y(),
        }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging repeats and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Exponent::new(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending degree-lex order.
    pub fn terms(&self) -> btree_map::Iter<'_, Exponent, Rational> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&Exponent::new(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    pub fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        XYPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Multiplication by `x^i y^j`.
    pub fn shift(&self, i: u32, j: u32) -> Self {
        XYPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (Exponent::new(e.x + i, e.y + j), a.clone()))
                .collect(),
        }
    }

    /// Partial derivative in `var`.
    pub fn diff(&self, var: Var) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            match var {
                Var::X if e.x > 0 => {
                    out.add_term(Exponent::new(e.x - 1, e.y), c * int(e.x.into()));
                }
                Var::Y if e.y > 0 => {
                    out.add_term(Exponent::new(e.x, e.y - 1), c * int(e.y.into()));
                }
                _ => {}
            }
        }
        out
    }

    /// `∂_x^i ∂_y^j` applied to `self`.
    pub fn diff_n(&self, i: u32, j: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..i {
            if out.is_zero() {
                break;
            }
            out = out.diff(Var::X);
        }
        for _ in 0..j {
            if out.is_zero() {
                break;
            }
            out = out.diff(Var::Y);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exchanges `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        XYPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent::new(e.y, e.x), c.clone()))
                .collect(),
        }
    }

    /// True when the printed form is a single signed term, so it needs no
    /// parentheses when used as a factor.
    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading coefficient is negative (in printing order).
    pub fn leading_is_negative(&self) -> bool {
        self.terms
            .values()
            .next_back()
            .is_some_and(|c| c.is_negative())
    }
}

fn write_monomial(out: &mut String, e: Exponent) {
    let mut first = true;
    for (name, p) in [("x", e.x), ("y", e.y)] {
        if p == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if p > 1 {
            let _ = write!(out, "^{p}");
        }
    }
}

/// Writes `|c|·x^i y^j` with the conventions of the canonical text form.
pub(crate) fn write_unsigned_term(out: &mut String, c: &Rational, e: Exponent) {
    let a = c.abs();
    if e.degree() == 0 {
        let _ = write!(out, "{a}");
    } else {
        if !a.is_one() {
            let _ = write!(out, "{a}*");
        }
        write_monomial(out, e);
    }
}

impl fmt::Display for XYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            match (idx, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            write_unsigned_term(&mut out, c, *e);
        }
        f.write_str(&out)
    }
}

impl From<Rational> for XYPoly {
    fn from(c: Rational) -> Self {
        XYPoly::constant(c)
    }
}

impl Zero for XYPoly {
    fn zero() -> Self {
        XYPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for XYPoly {
    fn one() -> Self {
        XYPoly::one()
    }
}

impl AddAssign<&XYPoly> for XYPoly {
    fn add_assign(&mut self, rhs: &XYPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&XYPoly> for XYPoly {
    fn sub_assign(&mut self, rhs: &XYPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&XYPoly> for &XYPoly {
    type Output = XYPoly;
    fn add(self, rhs: &XYPoly) -> XYPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&XYPoly> for &XYPoly {
    type Output = XYPoly;
    fn sub(self, rhs: &XYPoly) -> XYPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&XYPoly> for &XYPoly {
    type Output = XYPoly;
    fn mul(self, rhs: &XYPoly) -> XYPoly {
        let mut out = XYPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(Exponent::new(ea.x + eb.x, ea.y + eb.y), ca * cb);
            }
        }
        out
    }
}

impl Neg for &XYPoly {
    type Output = XYPoly;
    fn neg(self) -> XYPoly {
        XYPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<XYPoly> for XYPoly {
            type Output = XYPoly;
            fn $m(self, rhs: XYPoly) -> XYPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&XYPoly> for XYPoly {
            type Output = XYPoly;
            fn $m(self, rhs: &XYPoly) -> XYPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<XYPoly> for &XYPoly {
            type Output = XYPoly;
            fn $m(self, rhs: XYPoly) -> XYPoly {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for XYPoly {
    type Output = XYPoly;
    fn neg(self) -> XYPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn x() -> XYPoly {
        XYPoly::x()
    }
    fn y() -> XYPoly {
        XYPoly::y()
    }

    #[test]
    fn products_and_cancellation() {
        assert_eq!(&x() * &y(), XYPoly::monomial(int(1), 1, 1));
        let lhs = (&x() + &y()) * (&x() - &y());
        let rhs = XYPoly::monomial(int(1), 2, 0) - XYPoly::monomial(int(1), 0, 2);
        assert_eq!(lhs, rhs);
        let sq = x().pow(2);
        let diff = &sq - &sq;
        assert!(diff.is_zero());
        assert_eq!(diff.len(), 0);
    }

    #[test]
    fn partial_derivatives() {
        let x2y = XYPoly::monomial(int(1), 2, 1);
        assert_eq!(x2y.diff(Var::X), XYPoly::monomial(int(2), 1, 1));
        assert!(XYPoly::constant(rat(7, 2)).diff(Var::Y).is_zero());
        assert!(x().pow(3).diff(Var::Y).is_zero());
    }

    #[test]
    fn canonical_text() {
        let p = XYPoly::monomial(rat(3, 2), 2, 1) - y() + XYPoly::one();
        assert_eq!(p.to_string(), "3/2*x^2*y - y + 1");
        assert_eq!(XYPoly::zero().to_string(), "0");
        assert_eq!((-&x()).to_string(), "-x");
        let q = x().pow(2) + &x() * &y() + y().pow(2);
        assert_eq!(q.to_string(), "x^2 + x*y + y^2");
        assert_eq!(XYPoly::constant(rat(-5, 3)).to_string(), "-5/3");
    }

    pub(crate) fn arb_poly() -> impl Strategy<Value = XYPoly> {
        prop::collection::vec((0u32..4, 0u32..4, -5i64..6, 1i64..4), 0..6).prop_map(|ts| {
            XYPoly::from_terms(
                ts.into_iter()
                    .map(|(i, j, n, d)| (Exponent::new(i, j), rat(n, d))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn mixed_partials_commute(a in arb_poly()) {
            prop_assert_eq!(a.diff(Var::X).diff(Var::Y), a.diff(Var::Y).diff(Var::X));
        }

        #[test]
        fn leibniz_rule(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).diff(Var::X);
            let rhs = &a.diff(Var::X) * &b + &a * &b.diff(Var::X);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
