use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nilcomm_core::catalog::catalog;
use nilcomm_core::classifier::{branch_so7_to_so6, classify_triple, CaseCTau, TripleSpec};
use nilcomm_core::metaplectic::{
    d3_dimension_report, default_scan_bound, multiplicity_free_scan, ScanOutcome,
};
use nilcomm_core::nilpotent::octonion::{octonion_table, quaternion_table};
use nilcomm_core::nilpotent::{pfaffian, CaseAlgebra, CaseTag};
use nilcomm_core::notation::{parse_case_b_tau, parse_center, parse_weight, parse_weight_list};
use nilcomm_core::sweep::{self, PRESETS};
use nilcomm_core::tensor::{okada_row_tensor, tensor_klimyk};
use nilcomm_core::weights::{AlgebraType, Family, HighestWeight};
use nilcomm_core::{json as doc, Error, Limits};

#[derive(Parser, Debug)]
#[command(
    name = "nilcomm",
    version,
    about = "Exact checks for commutative triples over two-step nilmanifolds"
)]
struct Cli {
    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Largest module dimension a single computation may expand
    #[arg(long, global = true, env = "NILCOMM_CEILING", default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    ceiling: u64,

    /// Write the result to a file instead of standard output
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Worker threads (defaults to the number of cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Klimyk,
    Okada,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Table {
    Quaternion,
    Octonion,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a tensor product of two irreducible modules
    Tensor {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value_t = Method::Klimyk)]
        method: Method,
    },
    /// Scan the truncated metaplectic spectrum tensored with τ| for repeats
    Scan {
        #[arg(long)]
        algebra: String,
        /// Components of τ|, e.g. "[(2,1,0)]"
        #[arg(long)]
        tau: String,
        #[arg(long)]
        max_j: Option<u32>,
        /// Also list dim P_j(C^4) against the (j,0,0) dimensions (D3 only)
        #[arg(long)]
        dim_report: bool,
    },
    /// Pfaffian of B_λ at a center element
    Pfaffian {
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        center: String,
        /// Include the skew matrix and the stabilizer dimension
        #[arg(long)]
        matrix: bool,
    },
    /// Decide commutativity of a triple up to a scan bound
    Classify {
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: Option<usize>,
        /// Case A: u(2n) weight; case B: "(r, [η])"; case C: so(7) weight
        #[arg(long, conflicts_with = "tau_so6")]
        tau: Option<String>,
        /// Case C only: the so(6) restriction, e.g. "[(1,1,1)]"
        #[arg(long)]
        tau_so6: Option<String>,
        #[arg(long)]
        max_j: Option<u32>,
    },
    /// Branch an so(7) module to so(6)
    Branch {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        weight: String,
    },
    /// Run a named batch check, or "all"
    Sweep { name: String },
    /// Print the quaternion or octonion unit multiplication table
    Table {
        #[arg(value_enum, default_value_t = Table::Octonion)]
        which: Table,
    },
    /// List the known commutative triples
    Catalog,
}

/// A finished command: its JSON document, its text rendering, and whether
/// it reports a failed check.
struct Outcome {
    json: Value,
    text: String,
    failed: bool,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Outcome {
            json,
            text,
            failed: false,
        }
    }
}

fn algebra(tag: &str) -> Result<AlgebraType, Error> {
    tag.parse()
}

fn case_algebra(case: &str, n: Option<usize>) -> Result<CaseAlgebra, Error> {
    let tag: CaseTag = case.parse()?;
    if tag == CaseTag::C && n.is_some() {
        return Err(Error::Parse("case C has no rank; drop --n".into()));
    }
    CaseAlgebra::new(tag, n)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let limits = Limits {
        max_dim: cli.ceiling,
    };
    match &cli.command {
        Command::Tensor {
            algebra: tag,
            left,
            right,
            method,
        } => {
            let alg = algebra(tag)?;
            let (a, b) = (parse_weight(alg, left)?, parse_weight(alg, right)?);
            let d = match method {
                Method::Klimyk => tensor_klimyk(&a, &b, &limits)?,
                Method::Okada => {
                    let c = b.coords2();
                    if alg.family() != Family::D || c[1..].iter().any(|&x| x != 0) {
                        return Err(Error::Unsupported(
                            "the one-row method needs a D algebra and a right factor (s,0,...,0)"
                                .into(),
                        ));
                    }
                    okada_row_tensor(&a, (c[0] / 2) as u32)?
                }
            };
            let method = match method {
                Method::Klimyk => "klimyk",
                Method::Okada => "okada",
            };
            Ok(Outcome::ok(
                json!({
                    "left": doc::weight(&a),
                    "right": doc::weight(&b),
                    "method": method,
                    "decomposition": doc::decomposition(&d),
                }),
                d.to_string(),
            ))
        }
        Command::Scan {
            algebra: tag,
            tau,
            max_j,
            dim_report,
        } => {
            let alg = algebra(tag)?;
            let tau = parse_weight_list(alg, tau)?;
            let j = max_j.unwrap_or_else(|| default_scan_bound(&tau));
            let verdict = multiplicity_free_scan(alg, &tau, j, &limits)?;
            let mut value = doc::verdict(&verdict);
            let mut text = match &verdict.outcome {
                ScanOutcome::MultiplicityFree => {
                    format!("MultiplicityFree up to J={}", verdict.scanned_j)
                }
                ScanOutcome::Duplicate(cert) => {
                    let occ: Vec<String> = cert
                        .occurrences
                        .iter()
                        .map(|o| format!("j={} (x{})", o.j, o.mult))
                        .collect();
                    format!(
                        "Duplicate {} at {} [scanned J={}]",
                        cert.sigma,
                        occ.join(", "),
                        verdict.scanned_j
                    )
                }
            };
            if *dim_report {
                if alg != algebra("D3")? {
                    return Err(Error::Unsupported(
                        "the dimension report is defined for D3".into(),
                    ));
                }
                let rows = d3_dimension_report(j)?;
                value["dimensionReport"] = rows
                    .iter()
                    .map(|r| json!({"j": r.j, "polynomialDim": r.polynomial_dim, "oneRowDim": r.one_row_dim}))
                    .collect();
                text.push_str("\n j  dim P_j(C^4)  dim (j,0,0)");
                for r in rows {
                    text.push_str(&format!(
                        "\n{:>2}  {:>12}  {:>11}",
                        r.j, r.polynomial_dim, r.one_row_dim
                    ));
                }
            }
            Ok(Outcome::ok(value, text))
        }
        Command::Pfaffian {
            case,
            n,
            center,
            matrix,
        } => {
            let case = case_algebra(case, *n)?;
            let x = parse_center(&case, center)?;
            let form = case.b_lambda_matrix(&x)?;
            let pf = pfaffian(&form)?;
            let mut value = json!({
                "case": case.to_string(),
                "center": x.to_string(),
                "pfaffian": doc::rational(&pf),
                "squareIntegrable": !num_is_zero(&pf),
            });
            let mut text = nilcomm_core::rational::format(&pf);
            if *matrix {
                let stab = case.stabilizer_dimension(&x)?;
                value["matrix"] = doc::skew_form(&form);
                value["stabilizerDim"] = json!(stab);
                for row in form.rows() {
                    let cells: Vec<String> =
                        row.iter().map(nilcomm_core::rational::format).collect();
                    text.push_str(&format!("\n[{}]", cells.join(", ")));
                }
                text.push_str(&format!("\nstabilizer dimension {stab}"));
            }
            Ok(Outcome::ok(value, text))
        }
        Command::Classify {
            case,
            n,
            tau,
            tau_so6,
            max_j,
        } => {
            let case = case_algebra(case, *n)?;
            let spec = triple_spec(case, tau.as_deref(), tau_so6.as_deref())?;
            let c = classify_triple(&spec, *max_j, &limits)?;
            let mut text = match c.certificate() {
                None => format!("Commutative up to J={}", c.scanned_j),
                Some(cert) => format!(
                    "NonCommutative: {} repeats at j ∈ {:?} [scanned J={}]",
                    cert.sigma,
                    cert.degrees(),
                    c.scanned_j
                ),
            };
            text.push_str(&format!("\nrestriction: {}", c.restriction));
            for f in &c.flags {
                text.push_str(&format!("\nflag: {f}"));
            }
            Ok(Outcome::ok(doc::classification(&c), text))
        }
        Command::Branch { from, to, weight } => {
            let (src, dst) = (algebra(from)?, algebra(to)?);
            if src != algebra("B3")? || dst != algebra("D3")? {
                return Err(Error::Unsupported(format!(
                    "branching {src} -> {dst}; only B3 -> D3 is available"
                )));
            }
            let lambda = parse_weight(src, weight)?;
            let d = branch_so7_to_so6(&lambda)?;
            Ok(Outcome::ok(
                json!({"from": src.to_string(), "to": dst.to_string(), "weight": doc::weight(&lambda), "decomposition": doc::decomposition(&d)}),
                d.to_string(),
            ))
        }
        Command::Sweep { name } => {
            let names: Vec<&str> = if name == "all" {
                PRESETS.iter().map(|p| p.name).collect()
            } else {
                vec![name.as_str()]
            };
            let mut reports = Vec::new();
            for n in names {
                reports.push(sweep::run(n, &limits)?);
            }
            let failed = reports.iter().any(|r| !r.passed());
            let mut lines = Vec::new();
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                lines.push(format!("{status} {} ({} checks)", r.name, r.checked));
                lines.extend(r.failures.iter().map(|f| format!("  failure: {f}")));
                lines.extend(r.notes.iter().map(|n| format!("  note: {n}")));
            }
            let value: Vec<Value> = reports
                .iter()
                .map(|r| json!({"name": r.name, "passed": r.passed(), "checked": r.checked, "failures": r.failures, "notes": r.notes}))
                .collect();
            Ok(Outcome {
                json: json!({"sweeps": value}),
                text: lines.join("\n"),
                failed,
            })
        }
        Command::Table { which } => {
            let (table, names): (_, Vec<String>) = match which {
                Table::Quaternion => (
                    quaternion_table(),
                    ["1", "i", "j", "k"].map(String::from).to_vec(),
                ),
                Table::Octonion => (octonion_table(), (0..8).map(|i| format!("e{i}")).collect()),
            };
            let value = serde_json::to_value(&table).expect("table serializes");
            let mut text = String::new();
            for row in &table {
                let cells: Vec<String> = row
                    .iter()
                    .map(|u| {
                        format!(
                            "{:>4}",
                            format!("{}{}", if u.sign < 0 { "-" } else { "" }, names[u.index])
                        )
                    })
                    .collect();
                text.push_str(&cells.join(""));
                text.push('\n');
            }
            Ok(Outcome::ok(
                json!({"units": names, "products": value}),
                text.trim_end().to_string(),
            ))
        }
        Command::Catalog => {
            let entries = catalog();
            let text: Vec<String> = entries
                .iter()
                .map(|e| {
                    let case = e
                        .reproduced_by
                        .as_deref()
                        .map(|c| format!(" [case {c}]"))
                        .unwrap_or_default();
                    format!(
                        "{}. K = {}; N = {}; τ: {}{case}",
                        e.item, e.group, e.nilpotent, e.tau
                    )
                })
                .collect();
            Ok(Outcome::ok(
                serde_json::to_value(&entries).expect("catalog serializes"),
                text.join("\n"),
            ))
        }
    }
}

fn num_is_zero(q: &nilcomm_core::rational::Rational) -> bool {
    *q == nilcomm_core::rational::zero()
}

fn missing_tau() -> Error {
    Error::Parse("--tau is required for this case".into())
}

fn triple_spec(
    case: CaseAlgebra,
    tau: Option<&str>,
    tau_so6: Option<&str>,
) -> Result<TripleSpec, Error> {
    if tau_so6.is_some() && case != CaseAlgebra::C {
        return Err(Error::Parse("--tau-so6 applies to case C only".into()));
    }
    Ok(match case {
        CaseAlgebra::A { n } => {
            let alg = AlgebraType::new(Family::A, 2 * n)?;
            TripleSpec::A {
                n,
                tau: parse_weight(alg, tau.ok_or_else(missing_tau)?)?,
            }
        }
        CaseAlgebra::B { n } => {
            let (r, eta) = parse_case_b_tau(n, tau.ok_or_else(missing_tau)?)?;
            TripleSpec::B { n, r, eta }
        }
        CaseAlgebra::C => match tau_so6 {
            Some(t) => TripleSpec::C {
                tau: CaseCTau::So6(parse_weight_list(algebra("D3")?, t)?),
            },
            None => {
                let w: HighestWeight = parse_weight(algebra("B3")?, tau.ok_or_else(missing_tau)?)?;
                TripleSpec::C {
                    tau: CaseCTau::So7(w),
                }
            }
        },
    })
}

fn emit(cli_output: Option<&PathBuf>, body: &str) -> std::io::Result<()> {
    match cli_output {
        Some(path) => fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let json_requested = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if json_requested {
                let v = json!({"error": {"code": "E_USAGE", "message": e.to_string().trim_end()}});
                print!("{}", doc::render(&v));
            } else {
                let _ = e.print();
            }
            return ExitCode::from(1);
        }
    };

    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("warning: could not configure {t} threads: {e}");
        }
    }

    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                doc::render(&out.json)
            } else {
                format!("{}\n", out.text)
            };
            if let Err(e) = emit(cli.output.as_ref(), &body) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if out.failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let code = if e.is_usage() { 1 } else { 2 };
            if cli.json {
                print!("{}", doc::render(&doc::error(&e)));
            } else {
                eprintln!("error[{}]: {e}", e.code());
            }
            ExitCode::from(code)
        }
    }
}
