//! Report payloads and their JSON / text renderings. Every number is
//! carried as a decimal string; see `crates/kgsym/docs/report-schema.json`.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    /// All arithmetic is exact; always `true`.
    pub exact: bool,
    pub result: Payload,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Dims {
        rows: Vec<DimRow>,
    },
    Basis {
        order: String,
        degree: String,
        dimension: String,
        elements: Vec<String>,
    },
    Symmetry {
        characteristic: String,
        is_symmetry: bool,
    },
    Bracket {
        left: String,
        right: String,
        bracket: String,
    },
    Adjoint {
        operator: String,
        adjoint: String,
        skew_adjoint: bool,
        self_adjoint: bool,
    },
    Commutator {
        left: String,
        right: String,
        commutator: String,
    },
    Variational {
        operator: String,
        variational: bool,
    },
    VariationalBasis {
        order: String,
        operators: Vec<BasisRow>,
    },
    Current(CurrentReport),
    Verification {
        max_order: String,
        checks: Vec<CheckRow>,
        all_passed: bool,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct DimRow {
    pub order: String,
    pub dimension: String,
    pub cumulative: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct BasisRow {
    pub family: String,
    pub k: String,
    pub l: String,
    pub operator: String,
    pub variational: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurrentReport {
    pub family: String,
    pub params: Vec<String>,
    pub t: String,
    pub x: String,
    pub order: String,
    pub divergence_free: bool,
    /// Present for currents built off shell.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub id: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        match &self.result {
            Payload::Dims { rows } => {
                let _ = writeln!(w, "order  dim  cumulative");
                for r in rows {
                    let _ = writeln!(
                        w,
                        "{:>5}  {:>3}  {:>10}",
                        r.order, r.dimension, r.cumulative
                    );
                }
            }
            Payload::Basis {
                order,
                degree,
                dimension,
                elements,
            } => {
                let _ = writeln!(w, "order {order}, degree {degree}: dimension {dimension}");
                for e in elements {
                    let _ = writeln!(w, "  {e}");
                }
            }
            Payload::Symmetry {
                characteristic,
                is_symmetry,
            } => {
                let _ = writeln!(w, "{characteristic}\nsymmetry: {is_symmetry}");
            }
            Payload::Bracket { bracket, .. } => {
                let _ = writeln!(w, "{bracket}");
            }
            Payload::Adjoint {
                adjoint,
                skew_adjoint,
                self_adjoint,
                ..
            } => {
                let _ = writeln!(
                    w,
                    "{adjoint}\nskew-adjoint: {skew_adjoint}\nself-adjoint: {self_adjoint}"
                );
            }
            Payload::Commutator { commutator, .. } => {
                let _ = writeln!(w, "{commutator}");
            }
            Payload::Variational {
                operator,
                variational,
            } => {
                let _ = writeln!(w, "{operator}\nvariational: {variational}");
            }
            Payload::VariationalBasis { order, operators } => {
                let _ = writeln!(w, "k + l = {order}");
                for r in operators {
                    let _ = writeln!(
                        w,
                        "  {}({},{})  variational: {}  {}",
                        r.family, r.k, r.l, r.variational, r.operator
                    );
                }
            }
            Payload::Current(c) => {
                let _ = writeln!(w, "{}({})", c.family, c.params.join(","));
                let _ = writeln!(w, "  T = {}\n  X = {}", c.t, c.x);
                let _ = writeln!(
                    w,
                    "  order: {}\n  divergence-free: {}",
                    c.order, c.divergence_free
                );
                if let Some(eta) = &c.characteristic {
                    let _ = writeln!(w, "  characteristic: {eta}");
                }
            }
            Payload::Verification {
                checks, all_passed, ..
            } => {
                for c in checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(w, "[{mark}] {:>2} {}: {}", c.id, c.name, c.detail);
                }
                let _ = writeln!(
                    w,
                    "{}",
                    if *all_passed {
                        "all checks passed"
                    } else {
                        "some checks failed"
                    }
                );
            }
        }
        out
    }
}
