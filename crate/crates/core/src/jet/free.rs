use core::fmt;

use super::poly::{JetPoly, JetVariable};
use super::reduced::{JetVar, ReducedJetPoly};
use crate::arith::{rat, Var, XYPoly};
use crate::opalg::TDOperator;

/// Free coordinate `u(a,b) = ∂_x^a ∂_y^b u` of the single field `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeVar {
    pub a: u32,
    pub b: u32,
}

impl FreeVar {
    pub const fn new(a: u32, b: u32) -> Self {
        FreeVar { a, b }
    }
}

impl fmt::Display for FreeVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u({},{})", self.a, self.b)
    }
}

impl JetVariable for FreeVar {
    fn shifted(&self, dir: Var) -> Self {
        match dir {
            Var::X => FreeVar::new(self.a + 1, self.b),
            Var::Y => FreeVar::new(self.a, self.b + 1),
        }
    }
}

/// Differential polynomial on the full jet space of `u`.
pub type FreeJetPoly = JetPoly<FreeVar>;

impl FreeJetPoly {
    /// `u(a,b)`.
    pub fn u(a: u32, b: u32) -> Self {
        Self::var(FreeVar::new(a, b))
    }

    /// Highest `a + b` present; `None` stands for `−∞`.
    pub fn order(&self) -> Option<u32> {
        self.variables().iter().map(|v| v.a + v.b).max()
    }

    /// The Lagrangian `−(u_x u_y + u²)/2`.
    pub fn lagrangian() -> Self {
        let uxuy = &Self::u(1, 0) * &Self::u(0, 1);
        (&uxuy + &Self::u(0, 0).pow(2)).scale_by(&XYPoly::constant(rat(-1, 2)))
    }

    /// The left-hand side `u_xy − u` of the equation.
    pub fn equation() -> Self {
        &Self::u(1, 1) - &Self::u(0, 0)
    }
}

/// `a` applied to `u` without any on-shell substitution: `Σ a_pq · u(p,q)`.
pub fn apply_operator_free(a: &TDOperator) -> FreeJetPoly {
    let mut out = FreeJetPoly::zero();
    for (d, c) in a.terms() {
        out = &out + &FreeJetPoly::u(d.p, d.q).scale_by(c);
    }
    out
}

/// Euler operator `E_u(p) = Σ (−1)^{a+b} D_x^a D_y^b ∂p/∂u(a,b)`.
pub fn euler_operator(p: &FreeJetPoly) -> FreeJetPoly {
    let mut out = FreeJetPoly::zero();
    for v in p.variables() {
        let term = p.partial(&v).total_derivative_n(v.a, v.b);
        if (v.a + v.b) % 2 == 0 {
            out = &out + &term;
        } else {
            out = &out - &term;
        }
    }
    out
}

/// Restriction to solutions: `u(a,b) ↦ u[a − b]`.
pub fn reduce(p: &FreeJetPoly) -> ReducedJetPoly {
    p.map_vars(|v| JetVar::u(i64::from(v.a) - i64::from(v.b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Exponent};

    fn lagrangian() -> FreeJetPoly {
        FreeJetPoly::lagrangian()
    }
    use crate::jet::Monomial;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn u(a: u32, b: u32) -> FreeJetPoly {
        FreeJetPoly::u(a, b)
    }

    #[test]
    fn free_derivatives_keep_mixed_terms() {
        assert_eq!(u(0, 0).total_derivative(Var::X), u(1, 0));
        assert_eq!(u(1, 0).total_derivative(Var::Y), u(1, 1));
        // D_x(−(u_x u_y + u²)/2) = −(u_xx u_y + u_x u_xy + 2 u u_x)/2
        let half = XYPoly::constant(rat(-1, 2));
        let expected = (&(&(&u(2, 0) * &u(0, 1)) + &(&u(1, 0) * &u(1, 1)))
            + &(&u(0, 0) * &u(1, 0)).scale(&int(2)))
            .scale_by(&half);
        assert_eq!(lagrangian().total_derivative(Var::X), expected);
    }

    #[test]
    fn euler_lagrange_equation() {
        assert_eq!(euler_operator(&lagrangian()), FreeJetPoly::equation());
        // E_u(u(u_xy − u)) = 2u_xy − 2u by hand
        let p = &u(0, 0) * &FreeJetPoly::equation();
        assert_eq!(euler_operator(&p), FreeJetPoly::equation().scale(&int(2)));
        // E_u(2u_x(u_xy − u)) = 0: u_x is a conservation-law characteristic
        let q = &u(1, 0).scale(&int(2)) * &FreeJetPoly::equation();
        assert!(euler_operator(&q).is_zero());
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce(&u(1, 1)), ReducedJetPoly::u(0));
        assert_eq!(reduce(&u(2, 1)), ReducedJetPoly::u(1));
        assert!(reduce(&FreeJetPoly::equation()).is_zero());
        assert_eq!(reduce(&u(0, 3)), ReducedJetPoly::u(-3));
    }

    #[test]
    fn operator_application() {
        let j = apply_operator_free(&TDOperator::j());
        assert_eq!(
            j,
            &u(1, 0).scale_by(&XYPoly::x()) - &u(0, 1).scale_by(&XYPoly::y())
        );
        assert_eq!(j.to_string(), "x*u(1,0) - y*u(0,1)");
        assert_eq!(
            apply_operator_free(&TDOperator::klein_gordon()),
            FreeJetPoly::equation()
        );
    }

    pub(crate) fn arb_free() -> impl Strategy<Value = FreeJetPoly> {
        let var = (0u32..3, 0u32..3).prop_map(|(a, b)| FreeVar::new(a, b));
        let mono = prop::collection::vec(var, 0..3).prop_map(|vs| {
            vs.into_iter()
                .fold(Monomial::one(), |m, v| m.mul(&Monomial::var(v)))
        });
        let coeff = prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 1..3).prop_map(|ts| {
            XYPoly::from_terms(
                ts.into_iter()
                    .map(|(i, j, c)| (Exponent::new(i, j), int(c))),
            )
        });
        prop::collection::vec((mono, coeff), 0..4).prop_map(|ts| {
            let mut p = FreeJetPoly::zero();
            for (m, a) in ts {
                p.add_term(m, a);
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn divergences_are_annihilated(p in arb_free(), q in arb_free()) {
            prop_assert!(euler_operator(&p.total_derivative(Var::X)).is_zero());
            let div = &p.total_derivative(Var::X) + &q.total_derivative(Var::Y);
            prop_assert!(euler_operator(&div).is_zero());
        }

        #[test]
        fn reduction_is_a_differential_morphism(p in arb_free()) {
            for dir in [Var::X, Var::Y] {
                prop_assert_eq!(reduce(&p.total_derivative(dir)), reduce(&p).total_derivative(dir));
            }
        }

        #[test]
        fn reduction_is_multiplicative(p in arb_free(), q in arb_free()) {
            prop_assert_eq!(reduce(&(&p * &q)), &reduce(&p) * &reduce(&q));
        }
    }
}
