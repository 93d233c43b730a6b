//! Command-line front end. `run` never panics on bad input; it returns a report
//! whose exit code is nonzero only for usage, I/O and parse errors.

use std::fs;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{check_identity, poly_check, PolyVerdict, Verdict};
use crate::depolarization as dep;
use crate::error::{Error, Result};
use crate::format;
use crate::homlie::gv_basis;
use crate::identity::{consequence_space, depolarize_coeffs, encode_distributive, implies_all, polarize_coeffs, Identity, Implication};
use crate::linalg::{fmt_vec, parse_rational, Rational};
use crate::operad::{dim_arity3, dual_relations, free_dims, is_self_dual, orbit_span};
use crate::sigma3::{module_rank, GroupAlgebraElement};
use crate::superalgebra::{check_signed, SignedIdentity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "depolar", version, about = "Exact calculus for degree-3 nonassociative identities")]
struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients λ1..λ12 of an identity after polarization.
    Polarize { id_file: String },
    /// Identity with the given polarized coefficients.
    Depolarize { lambda_file: String },
    /// Identity carried by a distributive law.
    EncodeDist { law_file: String },
    /// Whether the family (all files but the last) implies the target (last file).
    Implies {
        #[arg(required = true, num_args = 2..)]
        files: Vec<String>,
    },
    /// Distributive laws implied by a family.
    Consequences {
        #[arg(required = true)]
        family: Vec<String>,
    },
    /// Dimension of the Σ3-module generated by a group algebra element.
    ModuleRank {
        #[arg(required = true, allow_hyphen_values = true, num_args = 1..)]
        vector: Vec<String>,
    },
    /// Solved depolarization problems.
    Solve {
        #[arg(value_enum)]
        problem: Problem,
    },
    /// Arity-3 operad computations.
    Operad {
        #[command(subcommand)]
        op: OperadCommand,
    },
    /// Check an identity on a structure-constant algebra.
    Verify { alg_file: String, id_file: String },
    /// Check an identity in the polynomial model f•g = fg, [f,g] = f'g - fg'.
    PolyCheck {
        law: String,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hom-Lie computations.
    Homlie {
        #[command(subcommand)]
        op: HomlieCommand,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Problem {
    Poisson,
    Transposed,
}

#[derive(Subcommand, Debug)]
enum OperadCommand {
    Dim3 { ids: Vec<String> },
    Dual { ids: Vec<String> },
    Selfdual { ids: Vec<String> },
    FreeDims {
        #[arg(long)]
        max: usize,
        ids: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum HomlieCommand {
    /// Basis of the endomorphisms f with [f(x),y] + [x,f(y)] = 0.
    Gv { alg_file: String },
}

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub format: OutputFormat,
    pub text: String,
    pub json: Value,
    pub exit_code: i32,
}

impl Report {
    pub fn render(&self) -> String {
        match self.format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

fn r(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn rv(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(r).collect())
}

fn identity_json(id: &Identity) -> Value {
    json!({ "left": rv(&id.left.0), "right": rv(&id.right.0) })
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io { path: path.to_string(), message: e.to_string() })
}

fn read_identity(path: &str) -> Result<Identity> {
    format::parse_identity(&read(path)?, path)
}

fn read_identities(paths: &[String]) -> Result<Vec<Identity>> {
    paths.iter().map(|p| read_identity(p)).collect()
}

fn named_law(name: &str) -> Option<Identity> {
    Some(match name {
        "jacobi" => dep::jacobi(),
        "associativity" => dep::associativity(),
        "leibniz" => dep::leibniz(),
        "transposed-leibniz" => dep::transposed_leibniz(),
        "aa-cyclic" => dep::aa_cyclic(),
        "poisson" => dep::poisson(),
        "anti-pre-lie" => dep::anti_pre_lie(),
        "flexibility" => dep::flexibility(),
        _ => return None,
    })
}

fn verdict_text(v: &Verdict) -> (String, Value) {
    match v {
        Verdict::Pass => ("PASS\n".into(), json!({ "pass": true })),
        Verdict::Fail { triple, residual } => {
            let t = triple.map(|i| i + 1);
            (
                format!("FAIL\ntriple: e{} e{} e{}\nresidual: {}\n", t[0], t[1], t[2], fmt_vec(residual)),
                json!({ "pass": false, "triple": t, "residual": rv(residual) }),
            )
        }
    }
}

fn execute(cmd: &Command) -> Result<(String, Value)> {
    match cmd {
        Command::Polarize { id_file } => {
            let p = polarize_coeffs(&read_identity(id_file)?);
            Ok((format::write_lambda(&p), json!({ "lambda": rv(&p.lambda) })))
        }
        Command::Depolarize { lambda_file } => {
            let id = depolarize_coeffs(&format::parse_lambda(&read(lambda_file)?, lambda_file)?);
            Ok((format::write_identity(&id), identity_json(&id)))
        }
        Command::EncodeDist { law_file } => {
            let id = encode_distributive(&format::parse_law(&read(law_file)?, law_file)?);
            Ok((format::write_identity(&id), identity_json(&id)))
        }
        Command::Implies { files } => {
            let (family, target) = files.split_at(files.len() - 1);
            let family = read_identities(family)?;
            let target = read_identity(&target[0])?;
            match implies_all(&family, &target) {
                Implication::Implied { witness } => {
                    let mut text = String::from("IMPLIED\n");
                    for (k, u) in witness.iter().enumerate() {
                        text.push_str(&format!("witness {}: {}\n", k + 1, u));
                    }
                    let w: Vec<Value> = witness.iter().map(|u| rv(&u.0)).collect();
                    Ok((text, json!({ "implied": true, "witness": w })))
                }
                Implication::NotImplied { certificate, rhs, .. } => {
                    let residual = certificate.residual(&rhs);
                    let text = format!(
                        "NO SOLUTION\ncertificate: {}\nresidual: {}\n",
                        fmt_vec(&certificate.multipliers),
                        residual
                    );
                    Ok((
                        text,
                        json!({ "implied": false, "certificate": rv(&certificate.multipliers), "residual": r(&residual) }),
                    ))
                }
            }
        }
        Command::Consequences { family } => {
            let basis = consequence_space(&read_identities(family)?);
            let mut text = format!("dimension {}\n", basis.len());
            for rho in &basis {
                text.push_str(&format!("rho: {}\n", fmt_vec(rho)));
            }
            let b: Vec<Value> = basis.iter().map(|v| rv(v)).collect();
            Ok((text, json!({ "dimension": basis.len(), "basis": b })))
        }
        Command::ModuleRank { vector } => {
            let joined = vector.join(" ");
            let v = format::parse_group_element(&joined, "<vector>")?;
            let k = module_rank(&v)?;
            Ok((format!("{k}\n"), json!({ "rank": k })))
        }
        Command::Solve { problem: Problem::Poisson } => {
            let s = dep::solve_poisson()?;
            let text = format!(
                "{}\nparams: {}\nwitness: {}\n",
                s.identity,
                fmt_vec(&s.params),
                s.witness
            );
            Ok((
                text,
                json!({ "identity": identity_json(&s.identity), "params": rv(&s.params), "witness": rv(&s.witness.0) }),
            ))
        }
        Command::Solve { problem: Problem::Transposed } => {
            let t = dep::solve_transposed()?;
            let mut text = String::from("NO SOLUTION\n");
            for e in &t.equations {
                text.push_str(&format!("equation: {} = {}\n", fmt_vec(&e[..3]), e[3]));
            }
            text.push_str(&format!(
                "certificate: {}\nresidual: {}\n",
                fmt_vec(&t.certificate.multipliers),
                t.certificate.residual(&t.rhs)
            ));
            let eqs: Vec<Value> = t.equations.iter().map(|e| rv(e)).collect();
            Ok((
                text,
                json!({
                    "solvable": false,
                    "equations": eqs,
                    "certificate": rv(&t.certificate.multipliers),
                    "residual": r(&t.certificate.residual(&t.rhs)),
                }),
            ))
        }
        Command::Operad { op } => operad(op),
        Command::Verify { alg_file, id_file } => {
            let alg = format::parse_algebra(&read(alg_file)?, alg_file)?;
            let text = read(id_file)?;
            let signed = format::is_signed_identity_text(&text);
            let graded = alg.grading().is_some();
            let verdict = if signed || graded {
                let sid = if signed {
                    format::parse_signed_identity(&text, id_file)?
                } else {
                    SignedIdentity::koszul(&format::parse_identity(&text, id_file)?)
                };
                let alg = if graded { alg } else { alg.clone().with_grading(Some(vec![0; alg.dim()]))? };
                check_signed(&alg, &sid)?
            } else {
                check_identity(&alg, &format::parse_identity(&text, id_file)?)?
            };
            let (t, mut j) = verdict_text(&verdict);
            j["graded"] = json!(graded);
            Ok((t, j))
        }
        Command::PolyCheck { law, degree, trials, seed } => {
            let id = match named_law(law) {
                Some(id) => id,
                None => read_identity(law)?,
            };
            match poly_check(&id, *degree, *trials, *seed) {
                PolyVerdict::Pass { checked } => {
                    Ok((format!("PASS\nchecked: {checked}\n"), json!({ "pass": true, "checked": checked })))
                }
                PolyVerdict::Fail { witness, residual } => {
                    let w: Vec<String> = witness.iter().map(|p| p.to_string()).collect();
                    let text = format!(
                        "FAIL\nx1: {}\nx2: {}\nx3: {}\nresidual: {}\n",
                        w[0], w[1], w[2], residual
                    );
                    Ok((text, json!({ "pass": false, "witness": w, "residual": residual.to_string() })))
                }
            }
        }
        Command::Homlie { op: HomlieCommand::Gv { alg_file } } => {
            let alg = format::parse_algebra(&read(alg_file)?, alg_file)?;
            let basis = gv_basis(&alg)?;
            let mut text = format!("dimension {}\n", basis.len());
            for f in &basis {
                text.push('\n');
                text.push_str(&format::write_endomorphism(f));
            }
            let b: Vec<Value> = basis.iter().map(|f| Value::Array(f.0.row_vecs().iter().map(|row| rv(row)).collect())).collect();
            Ok((text, json!({ "dimension": basis.len(), "basis": b })))
        }
    }
}

fn operad(op: &OperadCommand) -> Result<(String, Value)> {
    match op {
        OperadCommand::Dim3 { ids } => {
            let d = dim_arity3(&read_identities(ids)?);
            Ok((format!("{d}\n"), json!({ "dim3": d })))
        }
        OperadCommand::Dual { ids } => {
            let dual = dual_relations(&orbit_span(&read_identities(ids)?));
            let mut text = format!("dimension {}\n", dual.dim());
            for v in dual.basis() {
                text.push_str(&format!("{}\n", fmt_vec(v)));
            }
            let b: Vec<Value> = dual.basis().iter().map(|v| rv(v)).collect();
            Ok((text, json!({ "dimension": dual.dim(), "basis": b })))
        }
        OperadCommand::Selfdual { ids } => {
            let s = is_self_dual(&orbit_span(&read_identities(ids)?));
            let text = format!("self-dual: {}\nKoszulity is not checked\n", if s { "yes" } else { "no" });
            Ok((text, json!({ "self_dual": s })))
        }
        OperadCommand::FreeDims { max, ids } => {
            let d = free_dims(&read_identities(ids)?, *max)?;
            let s: Vec<String> = d.iter().map(usize::to_string).collect();
            Ok((format!("{}\n", s.join(" ")), json!({ "dims": d })))
        }
    }
}

fn error_json(e: &Error) -> Value {
    match e {
        Error::Parse { path, line, column, message } => {
            json!({ "path": path, "line": line, "column": column, "message": message })
        }
        other => json!({ "message": other.to_string() }),
    }
}

/// Parse arguments (program name first) and execute.
pub fn run<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let echo = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    let wants_json = args.windows(2).any(|w| w[0] == "--format" && w[1] == "json")
        || args.iter().any(|a| a == "--format=json");
    let fallback = if wants_json { OutputFormat::Json } else { OutputFormat::Text };
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Report {
                command: echo.clone(),
                format: fallback,
                text: e.to_string(),
                json: json!({ "command": echo, "error": { "message": e.to_string() } }),
                exit_code: code,
            };
        }
    };
    match execute(&cli.command) {
        Ok((text, result)) => Report {
            json: json!({ "command": echo, "result": result }),
            command: echo,
            format: cli.format,
            text,
            exit_code: 0,
        },
        Err(e) => Report {
            json: json!({ "command": echo, "error": error_json(&e) }),
            command: echo,
            format: cli.format,
            text: format!("error: {e}\n"),
            exit_code: 2,
        },
    }
}

/// Parse a rational given on the command line.
pub fn parse_arg_rational(s: &str) -> Option<Rational> {
    parse_rational(s)
}

pub fn group_element_arg(s: &str) -> Result<GroupAlgebraElement> {
    format::parse_group_element(s, "<vector>")
}
