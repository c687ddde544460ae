//! Generalized symmetries of `u_xy = u` in reduced evolutionary form.
//!
//! A characteristic `η` on the reduced jet is a symmetry iff
//! `𝒟_x 𝒟_y η = η`. For linear characteristics `η = Σ_{|k|≤n} η^k(x,y) u[k]`
//! that criterion splits, coefficient by coefficient in `u[k]`, into
//!
//! ```text
//! η^k_xy + η^{k-1}_y + η^{k+1}_x = 0,   k = −n−1, …, n+1,
//! ```
//!
//! with `η^k = 0` for `|k| > n`. [`solve_linear_determining`] solves that
//! system exactly over polynomial coefficients of bounded total degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith::{Exponent, RationalMatrix, Var, XYPoly};
use crate::error::Error;
use crate::jet::{
    apply_operator_reduced, eval_exp_family, reduced_total_derivative, FieldId, ReducedJetPoly,
};
use crate::opalg::{Side, TDOperator};

/// Exact basis of linear symmetries of order at most `order` found with
/// coefficient degree at most `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryBasis {
    pub order: u32,
    pub degree: u32,
    pub elements: Vec<ReducedJetPoly>,
}

impl SymmetryBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }
}

/// The assembled determining system for order `n` and degree bound `d`.
///
/// Unknowns are the coefficients of `x^i y^j` (`i + j ≤ d`) in each `η^k`,
/// `|k| ≤ n`; rows are the `x^A y^B` coefficients of the equations `Δ_k`.
#[derive(Debug, Clone)]
pub struct DeterminingSystem {
    pub order: u32,
    pub degree: u32,
    /// `(k, exponent)` for every column.
    pub unknowns: Vec<(i64, Exponent)>,
    /// `(k, exponent)` for every row: equation `Δ_k`, coefficient of `x^A y^B`.
    pub equations: Vec<(i64, Exponent)>,
    pub matrix: RationalMatrix,
}

impl DeterminingSystem {
    pub fn assemble(n: u32, d: u32) -> Self {
        let n = i64::from(n);
        let mut unknowns = Vec::new();
        for k in -n..=n {
            for total in 0..=d {
                for i in (0..=total).rev() {
                    unknowns.push((k, Exponent::new(i, total - i)));
                }
            }
        }
        // Each unknown c·x^i y^j in η^k feeds Δ_k through η^k_xy, Δ_{k+1}
        // through η^{(k+1)-1}_y and Δ_{k-1} through η^{(k-1)+1}_x.
        let mut entries: BTreeMap<(i64, Exponent), Vec<(usize, i64)>> = BTreeMap::new();
        for (col, &(k, e)) in unknowns.iter().enumerate() {
            let (i, j) = (i64::from(e.x), i64::from(e.y));
            if e.x > 0 && e.y > 0 {
                entries
                    .entry((k, Exponent::new(e.x - 1, e.y - 1)))
                    .or_default()
                    .push((col, i * j));
            }
            if e.y > 0 {
                entries
                    .entry((k + 1, Exponent::new(e.x, e.y - 1)))
                    .or_default()
                    .push((col, j));
            }
            if e.x > 0 {
                entries
                    .entry((k - 1, Exponent::new(e.x - 1, e.y)))
                    .or_default()
                    .push((col, i));
            }
        }
        let mut matrix = RationalMatrix::zeros(entries.len(), unknowns.len());
        let mut equations = Vec::with_capacity(entries.len());
        for (row, (key, cols)) in entries.into_iter().enumerate() {
            for (col, v) in cols {
                let cur = matrix.get(row, col).clone();
                matrix.set(row, col, cur + crate::arith::int(v));
            }
            equations.push(key);
        }
        DeterminingSystem {
            order: n as u32,
            degree: d,
            unknowns,
            equations,
            matrix,
        }
    }

    /// Maps a solution vector back to the characteristic `Σ η^k u[k]`.
    pub fn characteristic(&self, v: &[crate::arith::Rational]) -> ReducedJetPoly {
        let mut coeffs: BTreeMap<i64, XYPoly> = BTreeMap::new();
        for (&(k, e), c) in self.unknowns.iter().zip(v) {
            coeffs.entry(k).or_default().add_term(e, c.clone());
        }
        coeffs
            .into_iter()
            .fold(ReducedJetPoly::zero(), |acc, (k, a)| {
                &acc + &ReducedJetPoly::u(k).scale_by(&a)
            })
    }
}

/// Solves the determining equations for linear characteristics of order at
/// most `n` with polynomial coefficients of total degree at most `d`.
pub fn solve_linear_determining(n: u32, d: u32) -> Result<SymmetryBasis, Error> {
    if d < n {
        return Err(Error::DegreeBelowOrder {
            degree: d,
            order: n,
        });
    }
    let system = DeterminingSystem::assemble(n, d);
    let elements = system
        .matrix
        .nullspace()
        .iter()
        .map(|v| system.characteristic(v))
        .collect();
    Ok(SymmetryBasis {
        order: n,
        degree: d,
        elements,
    })
}

/// Dimension of the symmetries of order exactly `n`: `dim Λ^n − dim Λ^{n−1}`.
pub fn graded_dimension(n: u32, d: u32) -> Result<usize, Error> {
    let top = solve_linear_determining(n, d)?.dim();
    let below = match n {
        0 => 0,
        _ => solve_linear_determining(n - 1, d)?.dim(),
    };
    Ok(top - below)
}

/// `𝒟_x 𝒟_y η = η`.
pub fn is_generalized_symmetry(eta: &ReducedJetPoly) -> bool {
    reduced_total_derivative(&reduced_total_derivative(eta, Var::X), Var::Y) == *eta
}

/// `𝒟^k`: `𝒟_x^k` for `k ≥ 0`, `𝒟_y^{-k}` for `k < 0`.
pub fn reduced_total_derivative_signed(p: &ReducedJetPoly, k: i64) -> ReducedJetPoly {
    let (dir, n) = if k >= 0 { (Var::X, k) } else { (Var::Y, -k) };
    (0..n).fold(p.clone(), |acc, _| reduced_total_derivative(&acc, dir))
}

/// Prolonged action of the evolutionary field `η ∂_u` on `p`:
/// `Σ_k (∂p/∂u[k]) · 𝒟^k η`. Coordinates of other fields are left alone.
pub fn prolonged_action(eta: &ReducedJetPoly, p: &ReducedJetPoly) -> ReducedJetPoly {
    let mut out = ReducedJetPoly::zero();
    for v in p.variables().into_iter().filter(|v| v.field == FieldId::U) {
        let dp = p.partial(&v);
        out = &out + &(&dp * &reduced_total_derivative_signed(eta, v.index));
    }
    out
}

/// Reduced Lie bracket `[η¹ ∂_u, η² ∂_u]`.
pub fn reduced_bracket(eta1: &ReducedJetPoly, eta2: &ReducedJetPoly) -> ReducedJetPoly {
    &prolonged_action(eta1, eta2) - &prolonged_action(eta2, eta1)
}

/// Rank of the exponential-family evaluations of `basis`. Equal to the list
/// length iff no nontrivial combination vanishes on all `e^{λx+λ^{-1}y}`.
pub fn independence_rank(basis: &[ReducedJetPoly]) -> Result<usize, Error> {
    let mut index: BTreeMap<(i64, Exponent), usize> = BTreeMap::new();
    let mut rows = Vec::with_capacity(basis.len());
    for eta in basis {
        if !eta.only_u() {
            return Err(Error::MixedFields);
        }
        if !eta.is_linear() {
            return Err(Error::NotLinear);
        }
        let coeffs = eval_exp_family(eta)?.flat_coefficients();
        for (key, _) in &coeffs {
            let next = index.len();
            index.entry(*key).or_insert(next);
        }
        rows.push(coeffs);
    }
    let mut m = RationalMatrix::zeros(rows.len(), index.len());
    for (r, coeffs) in rows.into_iter().enumerate() {
        for (key, c) in coeffs {
            m.set(r, index[&key], c);
        }
    }
    Ok(m.rank())
}

/// The `2n + 1` recursion-operator characteristics of order `n`:
/// `J^n u`, then `J^k D_x^{n−k} u` and `J^k D_y^{n−k} u` for `k < n`,
/// reduced on shell.
pub fn monomial_characteristics(n: u32) -> Vec<ReducedJetPoly> {
    let mut ops = alloc::vec![TDOperator::monomial(Side::X, n, 0)];
    for k in 0..n {
        ops.push(TDOperator::monomial(Side::X, k, n - k));
        ops.push(TDOperator::monomial(Side::Y, k, n - k));
    }
    ops.iter()
        .map(|a| apply_operator_reduced(a, FieldId::U))
        .collect()
}

/// The four essential characteristics `(e₀, e₁, e₂, e₃) = (u, −u[1], −u[−1], −𝒥u)`
/// of `u∂_u`, `∂_x`, `∂_y` and `x∂_x − y∂_y`.
pub fn essential_characteristics() -> [ReducedJetPoly; 4] {
    let u = |k| ReducedJetPoly::u(k);
    let ju = &u(1).scale_by(&XYPoly::x()) - &u(-1).scale_by(&XYPoly::y());
    [u(0), -&u(1), -&u(-1), -&ju]
}
