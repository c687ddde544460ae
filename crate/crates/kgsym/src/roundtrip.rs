//! Randomized print/parse round-trips with a fixed seed, so repeated runs
//! produce identical reports.

use kgsym_core::{rat, FieldId, Rational, ReducedJetPoly, TDOperator, XYPoly};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::parse::{parse_jet, parse_operator};

pub const SEED: u64 = 0x6b67_7379_6d00_0001;

fn rational(rng: &mut StdRng) -> Rational {
    rat(rng.random_range(-6..=6), rng.random_range(1..=4))
}

pub fn random_xy(rng: &mut StdRng, max_degree: u32) -> XYPoly {
    let mut p = XYPoly::zero();
    for _ in 0..rng.random_range(0..=3) {
        let i = rng.random_range(0..=max_degree);
        let j = rng.random_range(0..=max_degree - i);
        p = &p + &XYPoly::monomial(rational(rng), i, j);
    }
    p
}

/// Operator of order at most `max_order` with polynomial coefficients.
pub fn random_operator(rng: &mut StdRng, max_order: u32) -> TDOperator {
    let mut op = TDOperator::zero();
    for _ in 0..rng.random_range(0..=4) {
        let p = rng.random_range(0..=max_order);
        let q = rng.random_range(0..=max_order - p);
        op = &op + &TDOperator::term(random_xy(rng, 2), p, q);
    }
    op
}

/// Jet polynomial in `u` and `f` with indices in `±max_order`.
pub fn random_jet(rng: &mut StdRng, max_order: i64, max_degree: u32) -> ReducedJetPoly {
    let mut out = ReducedJetPoly::zero();
    for _ in 0..rng.random_range(0..=4) {
        let mut m = ReducedJetPoly::coefficient(random_xy(rng, 2));
        for _ in 0..rng.random_range(0..=max_degree) {
            let field = if rng.random_bool(0.8) {
                FieldId::U
            } else {
                FieldId::F
            };
            m = &m * &ReducedJetPoly::field_var(field, rng.random_range(-max_order..=max_order));
        }
        out = &out + &m;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTrip {
    pub operators: usize,
    pub jets: usize,
    pub failures: Vec<String>,
}

impl RoundTrip {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run(count: usize) -> RoundTrip {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    for _ in 0..count {
        let op = random_operator(&mut rng, 3);
        let text = op.to_string();
        match parse_operator(&text) {
            Ok(back) if back == op => {}
            Ok(back) => failures.push(format!("operator {text} came back as {back}")),
            Err(e) => failures.push(format!("operator {text}: {e}")),
        }
    }
    for _ in 0..count {
        let p = random_jet(&mut rng, 4, 2);
        let text = p.to_string();
        match parse_jet(&text) {
            Ok(back) if back == p => {}
            Ok(back) => failures.push(format!("jet {text} came back as {back}")),
            Err(e) => failures.push(format!("jet {text}: {e}")),
        }
    }
    RoundTrip {
        operators: count,
        jets: count,
        failures,
    }
}
