//! Command-line surface and dispatch.

use clap::{Parser, Subcommand, ValueEnum};
use kgsym_core::checks::verify_all;
use kgsym_core::jet::lift_to_operator;
use kgsym_core::noether::{
    current_c0, current_c0_bar, current_ctilde, current_minimal, is_variational_linear,
};
use kgsym_core::symmetry::{
    graded_dimension, is_generalized_symmetry, reduced_bracket, solve_linear_determining,
};
use kgsym_core::{BasisKind, ConservedCurrent, CurrentFamily, FieldId, TDOperator};

use crate::parse::{parse_jet, parse_operator, ParseError};
use crate::report::{BasisRow, CheckRow, CurrentReport, DimRow, Payload, Report};
use crate::roundtrip;

#[derive(Debug, Parser)]
#[command(
    name = "kgsym",
    version,
    about = "Exact symmetries and conservation laws of u_xy = u"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions of the linear symmetry spaces by order.
    Dims {
        #[arg(long)]
        max_order: u32,
    },
    /// Basis of linear generalized symmetries of one order.
    Basis {
        #[arg(long)]
        order: u32,
        /// Degree bound on coefficients; defaults to order + 2.
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Test a reduced characteristic against the determining equations.
    CheckSymmetry {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Bracket of two reduced characteristics.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Formal adjoint of an operator.
    Adjoint {
        #[arg(allow_hyphen_values = true)]
        op: String,
    },
    /// Commutator of two operators.
    Commutator {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Whether an operator generates a variational symmetry.
    Variational {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Read EXPR as a reduced characteristic and lift it to pure derivatives first.
        #[arg(long)]
        reduced: bool,
    },
    /// Variational test over the basis operators with k + l = ORDER.
    VariationalBasis {
        #[arg(long)]
        order: u32,
    },
    /// Build a conserved current: C1|C1bar|C2|C2bar KP LP, C0|C0bar FIELD, Ctilde OPEXPR.
    Current {
        family: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Run every verification check.
    VerifyAll {
        #[arg(long, default_value_t = 5)]
        max_order: u32,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] kgsym_core::Error),
    #[error("{0}")]
    Usage(String),
}

/// Report plus whether every verification in it passed.
pub struct Outcome {
    pub report: Report,
    pub verified: bool,
}

fn ok(command: String, result: Payload) -> Outcome {
    Outcome {
        report: Report {
            command,
            exact: true,
            result,
        },
        verified: true,
    }
}

fn family_name(kind: BasisKind) -> &'static str {
    match kind {
        BasisKind::Q => "Q",
        BasisKind::Qbar => "Qbar",
    }
}

fn echo(cmd: &Command) -> String {
    match cmd {
        Command::Dims { max_order } => format!("dims --max-order {max_order}"),
        Command::Basis {
            order,
            degree: Some(d),
        } => format!("basis --order {order} --degree {d}"),
        Command::Basis {
            order,
            degree: None,
        } => format!("basis --order {order}"),
        Command::CheckSymmetry { expr } => format!("check-symmetry {expr}"),
        Command::Bracket { left, right } => format!("bracket {left} {right}"),
        Command::Adjoint { op } => format!("adjoint {op}"),
        Command::Commutator { left, right } => format!("commutator {left} {right}"),
        Command::Variational {
            expr,
            reduced: true,
        } => format!("variational --reduced {expr}"),
        Command::Variational {
            expr,
            reduced: false,
        } => format!("variational {expr}"),
        Command::VariationalBasis { order } => format!("variational-basis --order {order}"),
        Command::Current { family, args } => format!("current {family} {}", args.join(" "))
            .trim_end()
            .to_string(),
        Command::VerifyAll { max_order } => format!("verify-all --max-order {max_order}"),
    }
}

pub fn run(cmd: &Command) -> Result<Outcome, CliError> {
    let command = echo(cmd);
    Ok(match cmd {
        Command::Dims { max_order } => {
            let mut rows = Vec::new();
            let mut total = 0usize;
            for n in 0..=*max_order {
                let d = graded_dimension(n, n + 2)?;
                total += d;
                rows.push(DimRow {
                    order: n.to_string(),
                    dimension: d.to_string(),
                    cumulative: total.to_string(),
                });
            }
            ok(command, Payload::Dims { rows })
        }
        Command::Basis { order, degree } => {
            let b = solve_linear_determining(*order, degree.unwrap_or(order + 2))?;
            ok(
                command,
                Payload::Basis {
                    order: b.order.to_string(),
                    degree: b.degree.to_string(),
                    dimension: b.dim().to_string(),
                    elements: b.elements.iter().map(ToString::to_string).collect(),
                },
            )
        }
        Command::CheckSymmetry { expr } => {
            let eta = parse_jet(expr)?;
            let is_symmetry = is_generalized_symmetry(&eta);
            ok(
                command,
                Payload::Symmetry {
                    characteristic: eta.to_string(),
                    is_symmetry,
                },
            )
        }
        Command::Bracket { left, right } => {
            let (a, b) = (parse_jet(left)?, parse_jet(right)?);
            let bracket = reduced_bracket(&a, &b).to_string();
            ok(
                command,
                Payload::Bracket {
                    left: a.to_string(),
                    right: b.to_string(),
                    bracket,
                },
            )
        }
        Command::Adjoint { op } => {
            let a = parse_operator(op)?;
            ok(
                command,
                Payload::Adjoint {
                    operator: a.to_string(),
                    adjoint: a.adjoint().to_string(),
                    skew_adjoint: a.is_skew_adjoint(),
                    self_adjoint: a.is_self_adjoint(),
                },
            )
        }
        Command::Commutator { left, right } => {
            let (a, b) = (parse_operator(left)?, parse_operator(right)?);
            let commutator = a.commutator(&b).to_string();
            ok(
                command,
                Payload::Commutator {
                    left: a.to_string(),
                    right: b.to_string(),
                    commutator,
                },
            )
        }
        Command::Variational { expr, reduced } => {
            let a = if *reduced {
                lift_to_operator(&parse_jet(expr)?)?
            } else {
                parse_operator(expr)?
            };
            let variational = is_variational_linear(&a);
            ok(
                command,
                Payload::Variational {
                    operator: a.to_string(),
                    variational,
                },
            )
        }
        Command::VariationalBasis { order } => {
            let mut operators = Vec::new();
            for kind in [BasisKind::Q, BasisKind::Qbar] {
                for k in 0..=*order {
                    let l = order - k;
                    if kind == BasisKind::Qbar && l == 0 {
                        continue;
                    }
                    let q = TDOperator::basis(kind, k, l)?;
                    operators.push(BasisRow {
                        family: family_name(kind).into(),
                        k: k.to_string(),
                        l: l.to_string(),
                        variational: is_variational_linear(&q),
                        operator: q.to_string(),
                    });
                }
            }
            ok(
                command,
                Payload::VariationalBasis {
                    order: order.to_string(),
                    operators,
                },
            )
        }
        Command::Current { family, args } => {
            let c = build_current(family, args)?;
            let report = current_report(&c, args)?;
            ok(command, Payload::Current(report))
        }
        Command::VerifyAll { max_order } => {
            let mut checks: Vec<CheckRow> = verify_all(*max_order)
                .into_iter()
                .map(|c| CheckRow {
                    id: c.id.to_string(),
                    name: c.name.into(),
                    passed: c.passed,
                    detail: c.detail,
                })
                .collect();
            checks.push(roundtrip_check());
            let all_passed = checks.iter().all(|c| c.passed);
            let mut out = ok(
                command,
                Payload::Verification {
                    max_order: max_order.to_string(),
                    checks,
                    all_passed,
                },
            );
            out.verified = all_passed;
            out
        }
    })
}

pub const ROUNDTRIP_COUNT: usize = 1000;

pub fn roundtrip_check() -> CheckRow {
    let r = roundtrip::run(ROUNDTRIP_COUNT);
    let detail = match r.failures.first() {
        None => format!("{} operators, {} jet polynomials", r.operators, r.jets),
        Some(first) => format!("{} failures; first: {first}", r.failures.len()),
    };
    CheckRow {
        id: "11".into(),
        name: "parser round-trip".into(),
        passed: r.passed(),
        detail,
    }
}

fn field_arg(args: &[String]) -> Result<FieldId, CliError> {
    let [name] = args else {
        return Err(CliError::Usage("expected one field name".into()));
    };
    let mut chars = name.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => {
            FieldId::new(c).ok_or_else(|| CliError::Usage(format!("bad field name '{name}'")))
        }
        _ => Err(CliError::Usage(format!("bad field name '{name}'"))),
    }
}

fn shifts(args: &[String]) -> Result<(u32, u32), CliError> {
    let [kp, lp] = args else {
        return Err(CliError::Usage("expected KP LP".into()));
    };
    let parse = |s: &String| {
        s.parse::<u32>()
            .map_err(|_| CliError::Usage(format!("bad shift '{s}'")))
    };
    Ok((parse(kp)?, parse(lp)?))
}

fn build_current(family: &str, args: &[String]) -> Result<ConservedCurrent, CliError> {
    let minimal = |f| -> Result<ConservedCurrent, CliError> {
        let (kp, lp) = shifts(args)?;
        Ok(current_minimal(f, kp, lp)?)
    };
    match family {
        "C0" => Ok(current_c0(field_arg(args)?)?),
        "C0bar" => Ok(current_c0_bar(field_arg(args)?)?),
        "Ctilde" => {
            let [op] = args else {
                return Err(CliError::Usage("expected one operator".into()));
            };
            Ok(current_ctilde(&parse_operator(op)?)?)
        }
        "C1" => minimal(CurrentFamily::C1),
        "C1bar" => minimal(CurrentFamily::C1Bar),
        "C2" => minimal(CurrentFamily::C2),
        "C2bar" => minimal(CurrentFamily::C2Bar),
        other => Err(CliError::Usage(format!("unknown family '{other}'"))),
    }
}

fn current_report(c: &ConservedCurrent, args: &[String]) -> Result<CurrentReport, CliError> {
    let characteristic = c.characteristic().transpose()?.map(|eta| eta.to_string());
    Ok(CurrentReport {
        family: c.family.name().into(),
        params: args.to_vec(),
        t: c.t.to_string(),
        x: c.x.to_string(),
        order: c.order().unwrap_or(0).to_string(),
        divergence_free: c.is_conserved(),
        characteristic,
    })
}
