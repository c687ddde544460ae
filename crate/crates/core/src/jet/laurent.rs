use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use crate::arith::{Exponent, Rational, Var, XYPoly};

/// Laurent polynomial in `λ` with `XYPoly` coefficients: the scalar factor
/// left after evaluating on `e^{λx + λ^{-1}y}` and dividing out the
/// exponential.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentEval {
    terms: BTreeMap<i64, XYPoly>,
}

impl LaurentEval {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `λ^power · a(x, y)`.
    pub fn term(power: i64, a: XYPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(power, a);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, power: i64, a: XYPoly) {
        if a.is_zero() {
            return;
        }
        match self.terms.entry(power) {
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

    pub fn terms(&self) -> btree_map::Iter<'_, i64, XYPoly> {
        self.terms.iter()
    }

    /// Multiplication by `λ^n`.
    pub fn mul_lambda(&self, n: i64) -> Self {
        LaurentEval {
            terms: self.terms.iter().map(|(k, a)| (k + n, a.clone())).collect(),
        }
    }

    /// Partial derivative of every coefficient.
    pub fn diff(&self, var: Var) -> Self {
        let mut out = Self::zero();
        for (k, a) in &self.terms {
            out.add_term(*k, a.diff(var));
        }
        out
    }

    /// Coordinates in the monomial basis `λ^k x^i y^j`.
    pub fn flat_coefficients(&self) -> Vec<((i64, Exponent), Rational)> {
        self.terms
            .iter()
            .flat_map(|(k, a)| a.terms().map(move |(e, c)| ((*k, *e), c.clone())))
            .collect()
    }
}

impl Add<&LaurentEval> for &LaurentEval {
    type Output = LaurentEval;
    fn add(self, rhs: &LaurentEval) -> LaurentEval {
        let mut out = self.clone();
        for (k, a) in &rhs.terms {
            out.add_term(*k, a.clone());
        }
        out
    }
}

impl fmt::Display for LaurentEval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (k, a)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "({a})")?,
                1 => write!(f, "({a})*lambda")?,
                _ => write!(f, "({a})*lambda^{k}")?,
            }
        }
        Ok(())
    }
}
