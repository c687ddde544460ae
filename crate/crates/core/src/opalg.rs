//! Linear operators in total derivatives with polynomial coefficients.
//!
//! A [`TDOperator`] is stored in normal form `Σ a_pq(x,y) · D_x^p · D_y^q`, all
//! coefficients to the left of all derivations. `D_x` and `D_y` commute with
//! each other; moving a derivation past a coefficient uses
//! `D_x ∘ a = a · D_x + a_x` (and the same for `y`).

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{int, rat, Rational, XYPoly};
use crate::error::Error;

/// Derivation multi-index `D_x^p D_y^q`, ordered by `(p + q, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Deriv {
    pub p: u32,
    pub q: u32,
}

impl Deriv {
    pub const fn new(p: u32, q: u32) -> Self {
        Deriv { p, q }
    }

    pub fn order(self) -> u32 {
        self.p + self.q
    }
}

impl Ord for Deriv {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.order(), self.p).cmp(&(other.order(), other.p))
    }
}

impl PartialOrd for Deriv {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Named building blocks of operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Dx,
    Dy,
    /// `J = x D_x − y D_y`.
    J,
    One,
    Mul(XYPoly),
}

/// The two families of the skew/self-adjoint adapted basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// `Q_kl = (J + l/2)^k D_x^l`.
    Q,
    /// `Q̄_kl = (J − l/2)^k D_y^l`, `l ≥ 1`.
    Qbar,
}

/// Direction of the derivation power in [`TDOperator::monomial`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TDOperator {
    terms: BTreeMap<Deriv, XYPoly>,
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * int(i64::from(n - i)) / int(i64::from(i + 1));
    }
    acc
}

impl TDOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::mul(XYPoly::one())
    }

    pub fn dx() -> Self {
        Self::term(XYPoly::one(), 1, 0)
    }

    pub fn dy() -> Self {
        Self::term(XYPoly::one(), 0, 1)
    }

    /// `J = x D_x − y D_y`.
    pub fn j() -> Self {
        let mut op = Self::term(XYPoly::x(), 1, 0);
        op.add_term(Deriv::new(0, 1), -XYPoly::y());
        op
    }

    /// Multiplication by `a`.
    pub fn mul(a: XYPoly) -> Self {
        Self::term(a, 0, 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::mul(XYPoly::constant(c))
    }

    /// `a · D_x^p D_y^q`.
    pub fn term(a: XYPoly, p: u32, q: u32) -> Self {
        let mut op = Self::zero();
        op.add_term(Deriv::new(p, q), a);
        op
    }

    /// `L = D_x D_y − 1`, the operator of the equation.
    pub fn klein_gordon() -> Self {
        &Self::term(XYPoly::one(), 1, 1) - &Self::one()
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::Dx => Self::dx(),
            Generator::Dy => Self::dy(),
            Generator::J => Self::j(),
            Generator::One => Self::one(),
            Generator::Mul(a) => Self::mul(a),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(p + q, p)` order.
    pub fn terms(&self) -> btree_map::Iter<'_, Deriv, XYPoly> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: u32, q: u32) -> XYPoly {
        self.terms
            .get(&Deriv::new(p, q))
            .cloned()
            .unwrap_or_default()
    }

    /// Highest `p + q` present; `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|d| d.order()).max()
    }

    pub fn add_term(&mut self, d: Deriv, a: XYPoly) {
        if a.is_zero() {
            return;
        }
        match self.terms.entry(d) {
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

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (d, a) in &self.terms {
            out.add_term(*d, a.scale(c));
        }
        out
    }

    /// Normal-ordered product `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (da, a) in &self.terms {
            for (db, b) in &other.terms {
                // a D_x^p D_y^q ∘ b D^β = a Σ C(p,i) C(q,j) (∂_x^i ∂_y^j b) D_x^{p-i} D_y^{q-j} D^β
                for i in 0..=da.p {
                    for j in 0..=da.q {
                        let db_ij = b.diff_n(i, j);
                        if db_ij.is_zero() {
                            continue;
                        }
                        let c = binomial(da.p, i) * binomial(da.q, j);
                        let coeff = (a * &db_ij).scale(&c);
                        out.add_term(Deriv::new(da.p - i + db.p, da.q - j + db.q), coeff);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    /// `[A, B] = A∘B − B∘A`.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.compose(other) - &other.compose(self)
    }

    /// Formal adjoint: `(a D_x^p D_y^q)^† = (−1)^{p+q} D_x^p D_y^q ∘ a`.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for (d, a) in &self.terms {
            let sign = if d.order() % 2 == 0 { int(1) } else { int(-1) };
            let moved = Self::term(XYPoly::one(), d.p, d.q).compose(&Self::mul(a.clone()));
            out = &out + &moved.scale(&sign);
        }
        out
    }

    /// `((A − A^†)/2, (A + A^†)/2)`: skew-adjoint and self-adjoint parts.
    pub fn skew_self_split(&self) -> (Self, Self) {
        let adj = self.adjoint();
        let half = rat(1, 2);
        ((self - &adj).scale(&half), (self + &adj).scale(&half))
    }

    pub fn is_skew_adjoint(&self) -> bool {
        (self + &self.adjoint()).is_zero()
    }

    pub fn is_self_adjoint(&self) -> bool {
        (self - &self.adjoint()).is_zero()
    }

    /// Basis operators adapted to the adjoint:
    /// `Q_kl = (J + l/2)^k D_x^l` and `Q̄_kl = (J − l/2)^k D_y^l` (`l ≥ 1`).
    pub fn basis(kind: BasisKind, k: u32, l: u32) -> Result<Self, Error> {
        let shift = rat(i64::from(l), 2);
        let (shifted, deriv) = match kind {
            BasisKind::Q => (&Self::j() + &Self::constant(shift), Self::dx()),
            BasisKind::Qbar => {
                if l == 0 {
                    return Err(Error::QbarZeroShift { k });
                }
                (&Self::j() - &Self::constant(shift), Self::dy())
            }
        };
        Ok(shifted.pow(k).compose(&deriv.pow(l)))
    }

    /// `J^k ∘ D_x^l` (side X) or `J^k ∘ D_y^l` (side Y).
    pub fn monomial(side: Side, k: u32, l: u32) -> Self {
        let d = match side {
            Side::X => Self::dx(),
            Side::Y => Self::dy(),
        };
        Self::j().pow(k).compose(&d.pow(l))
    }

    /// Action on a function `g(x, y)`: `Σ a_pq ∂_x^p ∂_y^q g`.
    pub fn apply_to_poly(&self, g: &XYPoly) -> XYPoly {
        let mut out = XYPoly::zero();
        for (d, a) in &self.terms {
            out += &(a * &g.diff_n(d.p, d.q));
        }
        out
    }
}

impl fmt::Display for TDOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (idx, (d, a)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                out.push_str(" + ");
            }
            let show_coeff = d.order() == 0 || !a.is_one();
            if show_coeff {
                let _ = write!(out, "({a})");
            }
            let mut sep = show_coeff;
            for (name, n) in [("Dx", d.p), ("Dy", d.q)] {
                if n == 0 {
                    continue;
                }
                if sep {
                    out.push('*');
                }
                sep = true;
                out.push_str(name);
                if n > 1 {
                    let _ = write!(out, "^{n}");
                }
            }
        }
        f.write_str(&out)
    }
}

impl Add<&TDOperator> for &TDOperator {
    type Output = TDOperator;
    fn add(self, rhs: &TDOperator) -> TDOperator {
        let mut out = self.clone();
        for (d, a) in &rhs.terms {
            out.add_term(*d, a.clone());
        }
        out
    }
}

impl Sub<&TDOperator> for &TDOperator {
    type Output = TDOperator;
    fn sub(self, rhs: &TDOperator) -> TDOperator {
        let mut out = self.clone();
        for (d, a) in &rhs.terms {
            out.add_term(*d, -a);
        }
        out
    }
}

impl Neg for &TDOperator {
    type Output = TDOperator;
    fn neg(self) -> TDOperator {
        self.scale(&int(-1))
    }
}

/// Composition.
impl Mul<&TDOperator> for &TDOperator {
    type Output = TDOperator;
    fn mul(self, rhs: &TDOperator) -> TDOperator {
        self.compose(rhs)
    }
}

impl Zero for TDOperator {
    fn zero() -> Self {
        TDOperator::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for TDOperator {
    type Output = TDOperator;
    fn add(self, rhs: TDOperator) -> TDOperator {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn x() -> XYPoly {
        XYPoly::x()
    }
    fn y() -> XYPoly {
        XYPoly::y()
    }

    #[test]
    fn generators() {
        let j = TDOperator::generator(Generator::J);
        assert_eq!(j.coeff(1, 0), x());
        assert_eq!(j.coeff(0, 1), -y());
        assert_eq!(j.terms().count(), 2);
        assert_eq!(
            TDOperator::generator(Generator::One).coeff(0, 0),
            XYPoly::one()
        );
        let x2 = x().pow(2);
        assert_eq!(
            TDOperator::generator(Generator::Mul(x2.clone())),
            TDOperator::term(x2, 0, 0)
        );
    }

    #[test]
    fn derivation_past_j() {
        let (dx, dy, j, one) = (
            TDOperator::dx(),
            TDOperator::dy(),
            TDOperator::j(),
            TDOperator::one(),
        );
        let lhs = dx.compose(&j);
        let mut expected = TDOperator::term(x(), 2, 0);
        expected.add_term(Deriv::new(1, 1), -y());
        expected.add_term(Deriv::new(1, 0), XYPoly::one());
        assert_eq!(lhs, expected);
        assert_eq!(lhs, (&j + &one).compose(&dx));

        let lhs = dy.compose(&j);
        let mut expected = TDOperator::term(x(), 1, 1);
        expected.add_term(Deriv::new(0, 2), -y());
        expected.add_term(Deriv::new(0, 1), -XYPoly::one());
        assert_eq!(lhs, expected);
        assert_eq!(lhs, (&j - &one).compose(&dy));
    }

    #[test]
    fn commutators() {
        let (dx, dy, j) = (TDOperator::dx(), TDOperator::dy(), TDOperator::j());
        assert_eq!(dx.commutator(&j), dx);
        assert!(dx.commutator(&dy).is_zero());
        assert_eq!(dy.commutator(&j), -&dy);
        assert!(TDOperator::klein_gordon().commutator(&j).is_zero());
    }

    #[test]
    fn adjoints_of_generators() {
        assert_eq!(TDOperator::dx().adjoint(), -&TDOperator::dx());
        assert_eq!(TDOperator::j().adjoint(), -&TDOperator::j());
        let m = TDOperator::mul(&x() * &y());
        assert_eq!(m.adjoint(), m);
        let l = TDOperator::klein_gordon();
        assert_eq!(l.adjoint(), l);
    }

    #[test]
    fn basis_operators() {
        assert_eq!(
            TDOperator::basis(BasisKind::Q, 0, 0).unwrap(),
            TDOperator::one()
        );
        let q11 = TDOperator::basis(BasisKind::Q, 1, 1).unwrap();
        let expected =
            (&TDOperator::j() + &TDOperator::constant(rat(1, 2))).compose(&TDOperator::dx());
        assert_eq!(q11, expected);
        // x Dx^2 - y DxDy + 1/2 Dx
        assert_eq!(q11.coeff(2, 0), x());
        assert_eq!(q11.coeff(1, 1), -y());
        assert_eq!(q11.coeff(1, 0), XYPoly::constant(rat(1, 2)));
        let q21 = TDOperator::basis(BasisKind::Q, 2, 1).unwrap();
        assert_eq!(q21.adjoint(), -&q21);
        assert_eq!(
            TDOperator::basis(BasisKind::Qbar, 3, 0),
            Err(Error::QbarZeroShift { k: 3 })
        );
    }

    #[test]
    fn monomials() {
        assert_eq!(TDOperator::monomial(Side::X, 0, 1), TDOperator::dx());
        let j = TDOperator::j();
        assert_eq!(
            TDOperator::monomial(Side::X, 3, 0),
            j.compose(&j).compose(&j)
        );
        let l = TDOperator::klein_gordon();
        for side in [Side::X, Side::Y] {
            for k in 0..=6 {
                for m in 0..=(6 - k) {
                    assert!(l.commutator(&TDOperator::monomial(side, k, m)).is_zero());
                }
            }
        }
    }

    #[test]
    fn split_into_skew_and_self() {
        assert_eq!(
            TDOperator::dx().skew_self_split(),
            (TDOperator::dx(), TDOperator::zero())
        );
        assert_eq!(
            TDOperator::one().skew_self_split(),
            (TDOperator::zero(), TDOperator::one())
        );
        let q11 = TDOperator::basis(BasisKind::Q, 1, 1).unwrap();
        assert_eq!(q11.skew_self_split(), (TDOperator::zero(), q11.clone()));
    }

    #[test]
    fn adjoint_parity_of_basis() {
        for k in 0..=4 {
            for l in 0..=4 {
                let sign = if (k + l) % 2 == 0 { int(1) } else { int(-1) };
                let q = TDOperator::basis(BasisKind::Q, k, l).unwrap();
                assert_eq!(q.adjoint(), q.scale(&sign), "Q({k},{l})");
                if l >= 1 {
                    let qb = TDOperator::basis(BasisKind::Qbar, k, l).unwrap();
                    assert_eq!(qb.adjoint(), qb.scale(&sign), "Qbar({k},{l})");
                }
            }
        }
    }

    #[test]
    fn enveloping_relations() {
        let (e1, e2, e3) = (TDOperator::dx(), TDOperator::dy(), TDOperator::j());
        assert!(e1.commutator(&e2).is_zero());
        assert_eq!(e1.commutator(&e3), e1);
        assert_eq!(e2.commutator(&e3), -&e2);
    }

    #[test]
    fn canonical_text() {
        let op = TDOperator::dx().compose(&TDOperator::j());
        assert_eq!(op.to_string(), "(x)*Dx^2 + (-y)*Dx*Dy + Dx");
        assert_eq!(TDOperator::klein_gordon().to_string(), "Dx*Dy + (-1)");
        assert_eq!(TDOperator::zero().to_string(), "0");
        assert_eq!(TDOperator::one().to_string(), "(1)");
    }

    pub(crate) fn arb_op() -> impl Strategy<Value = TDOperator> {
        let coeff = prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 1..3).prop_map(|ts| {
            XYPoly::from_terms(
                ts.into_iter()
                    .map(|(i, j, c)| (crate::arith::Exponent::new(i, j), int(c))),
            )
        });
        prop::collection::vec((0u32..3, 0u32..3, coeff), 0..4).prop_map(|ts| {
            let mut op = TDOperator::zero();
            for (p, q, a) in ts {
                if p + q <= 3 {
                    op.add_term(Deriv::new(p, q), a);
                }
            }
            op
        })
    }

    fn test_functions() -> Vec<XYPoly> {
        let mut out = Vec::new();
        for i in 0..6 {
            for j in 0..6 {
                out.push(XYPoly::monomial(int(1), i, j));
            }
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        // Operators act faithfully on polynomials, so composition is checked
        // against applying the factors one after the other.
        #[test]
        fn compose_matches_successive_action(a in arb_op(), b in arb_op()) {
            let ab = a.compose(&b);
            for g in test_functions() {
                prop_assert_eq!(ab.apply_to_poly(&g), a.apply_to_poly(&b.apply_to_poly(&g)));
            }
        }

        #[test]
        fn compose_is_associative(a in arb_op(), b in arb_op(), c in arb_op()) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn adjoint_is_involutive_antihomomorphism(a in arb_op(), b in arb_op()) {
            prop_assert_eq!(a.adjoint().adjoint(), a.clone());
            prop_assert_eq!(a.compose(&b).adjoint(), b.adjoint().compose(&a.adjoint()));
        }

        #[test]
        fn identity_is_neutral(a in arb_op()) {
            prop_assert_eq!(TDOperator::one().compose(&a), a.clone());
            prop_assert_eq!(a.compose(&TDOperator::one()), a);
        }

        #[test]
        fn split_recombines(a in arb_op()) {
            let (skew, selfadj) = a.skew_self_split();
            prop_assert!(skew.is_skew_adjoint());
            prop_assert!(selfadj.is_self_adjoint());
            prop_assert_eq!(&skew + &selfadj, a);
        }
    }
}
