//! `qg` — exact symbolic computations in matrix quantum groups.
//!
//! Exit codes: 0 on success / all checks passing, 1 when a check fails,
//! 2 on usage or parse errors.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use qg_core::hopf::{builtin, Builtin, Presentation, QTensor};
use qg_core::ncalg::fmt_word;
use qg_core::parse::{parse_element, parse_presentation, parse_scalar, serialize_presentation};
use qg_core::report::CheckReport;
use qg_core::scalar::QScalar;
use qg_core::sphere::CParam;
use qg_core::{corep, haar, lorentz, spin, sphere};

#[derive(Parser)]
#[command(
    name = "qg",
    about = "Exact symbolic quantum-group computations",
    long_about = "Exact symbolic computations in matrix quantum groups.\n\n\
        Built-in algebras: slq2, sl_t1_2, slq3, slqn:<N>, suq2, suq11, slq2r.\n\
        Generators are named a, b, c, d for 2x2 algebras, w11..wNN in general,\n\
        and em1, e0, e1 for quantum spheres.  Elements use `*` for products,\n\
        `^k` for powers, and the postfix `^*` for the star involution,\n\
        e.g. \"a*a^*\".  Scalars use integer literals, q, `^` integer powers,\n\
        `+ - * /` and parentheses, e.g. \"(1-q^2)/(1+q^2)\"."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct AlgebraOpt {
    /// Built-in algebra name (slq2, sl_t1_2, slq3, slqn:<N>, suq2, suq11, slq2r).
    #[arg(long, conflicts_with = "file")]
    algebra: Option<String>,
    /// Presentation file to load instead of a built-in.
    #[arg(long)]
    file: Option<String>,
    /// Specialize q to this rational value (default: symbolic q).
    #[arg(long, value_name = "RATIONAL")]
    q: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an element to its normal form.
    Normalize {
        #[command(flatten)]
        alg: AlgebraOpt,
        element: String,
    },
    /// Apply the comultiplication to an element.
    Delta {
        #[command(flatten)]
        alg: AlgebraOpt,
        element: String,
    },
    /// Apply the antipode to an element.
    Antipode {
        #[command(flatten)]
        alg: AlgebraOpt,
        element: String,
    },
    /// Apply the star involution to an element.
    Star {
        #[command(flatten)]
        alg: AlgebraOpt,
        element: String,
    },
    /// Verify confluence and the Hopf(-*) axioms on basis words.
    CheckHopf {
        #[command(flatten)]
        alg: AlgebraOpt,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Print and verify the fundamental corepresentation matrix.
    Corep {
        #[command(flatten)]
        alg: AlgebraOpt,
    },
    /// Compute the intertwiner space between two spin corepresentations.
    Mor {
        #[command(flatten)]
        alg: AlgebraOpt,
        /// Left spin, as twice the spin value (e.g. 1 for spin 1/2).
        #[arg(long)]
        left: usize,
        /// Right spin, as twice the spin value.
        #[arg(long)]
        right: usize,
    },
    /// Build and verify a spin-l corepresentation.
    Spin {
        #[command(flatten)]
        alg: AlgebraOpt,
        /// Twice the spin value.
        #[arg(long)]
        two_l: usize,
    },
    /// Clebsch-Gordan multiplicities of a tensor product of spins.
    Clebsch {
        #[command(flatten)]
        alg: AlgebraOpt,
        /// Twice the first spin.
        #[arg(long)]
        two_a: usize,
        /// Twice the second spin.
        #[arg(long)]
        two_b: usize,
    },
    /// Evaluate the Haar functional on an element.
    Haar {
        #[command(flatten)]
        alg: AlgebraOpt,
        /// Spin cutoff L (an integer or half-integer such as 3/2).
        #[arg(long)]
        spin_cutoff: String,
        element: String,
    },
    /// Verify the Peter-Weyl orthogonality relations for a pair of spins.
    PwCheck {
        #[command(flatten)]
        alg: AlgebraOpt,
        #[arg(long)]
        spin_cutoff: String,
        /// Twice the first spin.
        #[arg(long)]
        two_a: usize,
        /// Twice the second spin.
        #[arg(long)]
        two_b: usize,
    },
    /// Certify positive definiteness of the Haar Gram matrix at a rational q.
    Gram {
        #[command(flatten)]
        alg: AlgebraOpt,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Rational evaluation point in (0,1), e.g. 1/2.
        #[arg(long)]
        q0: String,
    },
    /// Verify the quantum-sphere coaction.
    Sphere {
        /// q value: "symbolic" or a rational such as 1 or 1/2.
        #[arg(long, default_value = "symbolic")]
        q: String,
        /// Family parameter: "symbolic", "inf", "c(n)", or a scalar expression.
        #[arg(long, default_value = "symbolic")]
        c: String,
        /// Action to run.
        #[arg(default_value = "check")]
        action: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the Lorentz conditions for a candidate X matrix.
    Lorentz {
        #[command(flatten)]
        alg: AlgebraOpt,
        /// Candidate matrix: "flip", "zero", or "identity".
        #[arg(long, value_name = "flip|zero|identity")]
        x: String,
    },
    /// Parse a presentation file and echo its canonical serialization.
    Parse {
        /// Path to a presentation file.
        path: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_presentation(alg: &AlgebraOpt, default: &str) -> Result<Arc<Presentation>, String> {
    let pres = if let Some(path) = &alg.file {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        parse_presentation(&text).map_err(|e| format!("{path}: {e}"))?
    } else {
        let name = alg.algebra.as_deref().unwrap_or(default);
        let b = Builtin::parse(name).ok_or_else(|| format!("unknown algebra '{name}'"))?;
        builtin(b).map_err(|e| e.to_string())?
    };
    let pres = match &alg.q {
        None => pres,
        Some(qtext) => {
            let q0 = parse_rational(qtext)?;
            pres.specialize(&q0).map_err(|e| e.to_string())?
        }
    };
    Ok(Arc::new(pres))
}

fn parse_rational(text: &str) -> Result<BigRational, String> {
    text.parse::<BigRational>()
        .map_err(|_| format!("'{text}' is not a rational number"))
}

/// A spin cutoff like "1" or "3/2", returned as twice its value.
fn parse_two_l(text: &str) -> Result<usize, String> {
    let r = parse_rational(text)?;
    let doubled = &r * BigRational::from(BigInt::from(2));
    if !doubled.is_integer() || doubled < BigRational::from(BigInt::from(0)) {
        return Err(format!("'{text}' is not a nonnegative half-integer"));
    }
    doubled
        .to_integer()
        .try_into()
        .map_err(|_| format!("'{text}' is too large"))
}

fn fmt_tensor(t: &QTensor, pres: &Presentation) -> String {
    let names = pres.names();
    let mut parts = Vec::new();
    for ((u, v), c) in t.terms() {
        let mut s = String::new();
        if !c.is_one() {
            s.push_str(&format!("{c} "));
        }
        s.push_str(&fmt_word(u, &names));
        s.push('@');
        s.push_str(&fmt_word(v, &names));
        parts.push(s);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn emit_value(format: Format, value: &str) {
    match format {
        Format::Text => println!("{value}"),
        Format::Json => println!("{}", serde_json::json!({ "value": value })),
    }
}

fn emit_report(format: Format, rep: &CheckReport) -> ExitCode {
    match format {
        Format::Text => print!("{rep}"),
        Format::Json => {
            let items: Vec<_> = rep
                .items
                .iter()
                .map(|it| {
                    serde_json::json!({
                        "name": it.name,
                        "pass": it.pass,
                        "witness": it.witness,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "title": rep.title,
                    "pass": rep.all_pass(),
                    "items": items,
                })
            );
        }
    }
    if rep.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn fmt_matrix(entries: &[String], rows: usize, cols: usize) -> String {
    let mut out = String::from("[");
    for i in 0..rows {
        if i > 0 {
            out.push_str(",\n ");
        }
        out.push('[');
        out.push_str(
            &(0..cols)
                .map(|j| format!("\"{}\"", entries[i * cols + j]))
                .collect::<Vec<_>>()
                .join(", "),
        );
        out.push(']');
    }
    out.push(']');
    out
}

fn run(cmd: Command) -> Result<ExitCode, String> {
    match cmd {
        Command::Normalize { alg, element } => {
            let pres = load_presentation(&alg, "slq2")?;
            let x = parse_element(&element, &pres).map_err(|e| e.to_string())?;
            emit_value(alg.format, &pres.fmt_element(&x));
            Ok(ExitCode::SUCCESS)
        }
        Command::Delta { alg, element } => {
            let pres = load_presentation(&alg, "slq2")?;
            let x = parse_element(&element, &pres).map_err(|e| e.to_string())?;
            let t = pres.delta(&x);
            emit_value(alg.format, &fmt_tensor(&t, &pres));
            Ok(ExitCode::SUCCESS)
        }
        Command::Antipode { alg, element } => {
            let pres = load_presentation(&alg, "slq2")?;
            let x = parse_element(&element, &pres).map_err(|e| e.to_string())?;
            let s = pres.antipode(&x).map_err(|e| e.to_string())?;
            emit_value(alg.format, &pres.fmt_element(&s));
            Ok(ExitCode::SUCCESS)
        }
        Command::Star { alg, element } => {
            let pres = load_presentation(&alg, "suq2")?;
            let x = parse_element(&element, &pres).map_err(|e| e.to_string())?;
            let s = pres.star(&x).map_err(|e| e.to_string())?;
            emit_value(alg.format, &pres.fmt_element(&s));
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckHopf { alg, max_degree } => {
            let pres = load_presentation(&alg, "slq2")?;
            let mut rep = pres.check_confluence(max_degree, None);
            let axioms = pres.check_hopf_axioms(max_degree);
            rep.items.extend(axioms.items);
            Ok(emit_report(alg.format, &rep))
        }
        Command::Corep { alg } => {
            let pres = load_presentation(&alg, "slq2")?;
            let v = corep::Corep::fundamental(&pres).map_err(|e| e.to_string())?;
            print_corep(&alg, &pres, &v);
            Ok(ExitCode::SUCCESS)
        }
        Command::Mor { alg, left, right } => {
            let pres = load_presentation(&alg, "suq2")?;
            let v = spin::spin_corep(&pres, left).map_err(|e| e.to_string())?;
            let w = spin::spin_corep(&pres, right).map_err(|e| e.to_string())?;
            let basis = corep::mor_space(&v, &w).map_err(|e| e.to_string())?;
            match alg.format {
                Format::Text => {
                    println!("dim Mor = {}", basis.len());
                    for m in &basis {
                        let entries: Vec<String> = (0..m.rows)
                            .flat_map(|i| (0..m.cols).map(move |j| (i, j)))
                            .map(|(i, j)| format!("{}", m.at(i, j)))
                            .collect();
                        println!("{}", fmt_matrix(&entries, m.rows, m.cols));
                    }
                }
                Format::Json => {
                    let mats: Vec<Vec<Vec<String>>> = basis
                        .iter()
                        .map(|m| {
                            (0..m.rows)
                                .map(|i| {
                                    (0..m.cols).map(|j| format!("{}", m.at(i, j))).collect()
                                })
                                .collect()
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({ "dim": basis.len(), "basis": mats })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spin { alg, two_l } => {
            let pres = load_presentation(&alg, "suq2")?;
            let v = spin::spin_corep(&pres, two_l).map_err(|e| e.to_string())?;
            print_corep(&alg, &pres, &v);
            Ok(ExitCode::SUCCESS)
        }
        Command::Clebsch { alg, two_a, two_b } => {
            let pres = load_presentation(&alg, "suq2")?;
            let table =
                spin::clebsch_gordan_table(&pres, two_a, two_b).map_err(|e| e.to_string())?;
            match alg.format {
                Format::Text => {
                    for (two_c, mult) in &table {
                        println!("2c={two_c} multiplicity={mult}");
                    }
                }
                Format::Json => {
                    let rows: Vec<_> = table
                        .iter()
                        .map(|(c, m)| serde_json::json!({ "two_c": c, "multiplicity": m }))
                        .collect();
                    println!("{}", serde_json::json!(rows));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Haar {
            alg,
            spin_cutoff,
            element,
        } => {
            let pres = load_presentation(&alg, "suq2")?;
            let two_l = parse_two_l(&spin_cutoff)?;
            let pw = haar::build_pw_basis(&pres, two_l).map_err(|e| e.to_string())?;
            let x = parse_element(&element, &pres).map_err(|e| e.to_string())?;
            let h = pw.haar(&x).map_err(|e| e.to_string())?;
            emit_value(alg.format, &format!("{h}"));
            Ok(ExitCode::SUCCESS)
        }
        Command::PwCheck {
            alg,
            spin_cutoff,
            two_a,
            two_b,
        } => {
            let pres = load_presentation(&alg, "suq2")?;
            let two_l = parse_two_l(&spin_cutoff)?;
            let pw = haar::build_pw_basis(&pres, two_l).map_err(|e| e.to_string())?;
            let rep = haar::check_pw_relations(&pw, two_a, two_b).map_err(|e| e.to_string())?;
            Ok(emit_report(alg.format, &rep))
        }
        Command::Gram { alg, degree, q0 } => {
            let pres = load_presentation(&alg, "suq2")?;
            let q0 = parse_rational(&q0)?;
            let pw = haar::build_pw_basis(&pres, 2 * degree).map_err(|e| e.to_string())?;
            let rep = haar::gram_positivity(&pw, degree, &q0).map_err(|e| e.to_string())?;
            Ok(emit_report(alg.format, &rep))
        }
        Command::Sphere {
            q,
            c,
            action,
            format,
        } => {
            if action != "check" {
                return Err(format!("unknown sphere action '{action}'"));
            }
            let cparam = parse_c_param(&c)?;
            let rep = if q == "symbolic" {
                sphere::sphere(&cparam)
                    .map_err(|e| e.to_string())?
                    .check_coaction()
            } else {
                let q0 = parse_rational(&q)?;
                sphere::sphere_at_q(&cparam, &q0)
                    .map_err(|e| e.to_string())?
                    .check_coaction()
            };
            Ok(emit_report(format, &rep))
        }
        Command::Lorentz { alg, x } => {
            let pres = load_presentation(&alg, "suq2")?;
            let xmat = match x.as_str() {
                "flip" => lorentz::tau(),
                "zero" => qg_core::linalg::Mat::zeros(4, 4),
                "identity" => qg_core::linalg::Mat::identity(4),
                other => return Err(format!("unknown X matrix '{other}'")),
            };
            let rep = lorentz::check_lorentz_x(&pres, &xmat).map_err(|e| e.to_string())?;
            Ok(emit_report(alg.format, &rep))
        }
        Command::Parse { path } => {
            let text = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
            let pres = parse_presentation(&text).map_err(|e| format!("{path}: {e}"))?;
            print!("{}", serialize_presentation(&pres));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_c_param(text: &str) -> Result<CParam, String> {
    match text {
        "symbolic" => Ok(CParam::Symbolic),
        "inf" | "infinity" => Ok(CParam::Infinity),
        other => {
            if let Some(rest) = other.strip_prefix("c(").and_then(|s| s.strip_suffix(')')) {
                let n: usize = rest
                    .parse()
                    .map_err(|_| format!("bad c(n) argument '{rest}'"))?;
                return Ok(CParam::Finite(sphere::c_special(n)));
            }
            let v: QScalar = parse_scalar(other).map_err(|e| e.to_string())?;
            Ok(CParam::Finite(v))
        }
    }
}

fn print_corep(alg: &AlgebraOpt, pres: &Presentation, v: &corep::Corep) {
    let entries: Vec<String> = v.entries().iter().map(|e| pres.fmt_element(e)).collect();
    match alg.format {
        Format::Text => println!("{}", fmt_matrix(&entries, v.dim(), v.dim())),
        Format::Json => {
            let rows: Vec<Vec<&String>> = (0..v.dim())
                .map(|i| (0..v.dim()).map(|j| &entries[i * v.dim() + j]).collect())
                .collect();
            println!("{}", serde_json::json!({ "dim": v.dim(), "matrix": rows }));
        }
    }
}
