//! Command-line front end: parse matroid descriptions, compute polynomials
//! and coproducts, take minors and duals, and run the verification suites.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on input errors.

mod spec;

use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::json;

use matroid_hopf::checks::{run_suite, CheckReport, Suite};
use matroid_hopf::corpus::CorpusCase;
use matroid_hopf::hopf::{coproduct, TensorSum};
use matroid_hopf::matroid::{GroundSubset, Matroid};
use matroid_hopf::poly::{MultiPoly, Var};
use matroid_hopf::tutte::{self, q_universal, recipe_closed_form};

use spec::{parse_spec, MatroidSpec};

#[derive(Parser)]
#[command(
    name = "matroid-hopf",
    version,
    about = "Exact matroid computations: Tutte polynomials, coproducts, and identity verification"
)]
struct Cli {
    /// Matroid description file (JSON; '-' reads stdin)
    #[arg(long, global = true, value_name = "FILE")]
    spec: Option<String>,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Ground-set size bound for verification corpora
    #[arg(long, global = true, default_value_t = 6, value_name = "N")]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tutte polynomial of the matroid given by --spec
    Tutte {
        /// Evaluate at rational values, e.g. --eval x=1,y=1
        #[arg(long, value_name = "VAR=VALUE,..")]
        eval: Option<String>,

        /// Algorithm: rank-sum, deletion-contraction, or closed-form
        #[arg(long, default_value = "rank-sum", value_name = "NAME")]
        algo: String,
    },

    /// Four-variable deletion/contraction polynomial Q(x,y,a,b)
    Q {
        /// Compute by the closed form instead of the recursion
        #[arg(long)]
        closed_form: bool,

        /// Check that the recursion and the closed form agree
        #[arg(long)]
        check: bool,
    },

    /// Coproduct terms (one per subset of the ground set)
    Coproduct,

    /// Dual matroid
    Dual,

    /// Delete elements from the matroid
    Delete {
        #[arg(long, value_delimiter = ',', value_name = "E,..")]
        elements: Vec<u8>,
    },

    /// Contract elements of the matroid
    Contract {
        #[arg(long, value_delimiter = ',', value_name = "E,..")]
        elements: Vec<u8>,
    },

    /// Run a verification suite: axioms, tutte, hopf, flow, or all
    Verify { suite: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Tutte { eval, algo } => cmd_tutte(&cli, eval.as_deref(), algo),
        Command::Q { closed_form, check } => cmd_q(&cli, *closed_form, *check),
        Command::Coproduct => cmd_coproduct(&cli),
        Command::Dual => {
            let (_, m) = load_spec(&cli, "dual")?;
            print_matroid(&cli, &m.dual());
            Ok(ExitCode::SUCCESS)
        }
        Command::Delete { elements } => {
            let (_, m) = load_spec(&cli, "delete")?;
            let t = element_set(&m, elements)?;
            print_matroid(&cli, &m.delete(t));
            Ok(ExitCode::SUCCESS)
        }
        Command::Contract { elements } => {
            let (_, m) = load_spec(&cli, "contract")?;
            let t = element_set(&m, elements)?;
            print_matroid(&cli, &m.contract(t));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => cmd_verify(&cli, suite),
    }
}

fn load_spec(cli: &Cli, command: &str) -> Result<(MatroidSpec, Matroid), String> {
    let path = cli
        .spec
        .as_ref()
        .ok_or_else(|| format!("the {command} command requires --spec FILE"))?;
    let text = if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        buffer
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
    };
    parse_spec(&text).map_err(|e| e.to_string())
}

fn element_set(m: &Matroid, elements: &[u8]) -> Result<GroundSubset, String> {
    for &e in elements {
        if e as usize >= 64 || !m.labels().contains(e) {
            return Err(format!("element {e} is not in the ground set {}", m.labels()));
        }
    }
    Ok(GroundSubset::from_elements(elements.iter().copied()))
}

fn parse_assignment(text: &str) -> Result<Vec<(Var, BigRational)>, String> {
    text.split(',')
        .map(|pair| {
            let (name, value) = pair
                .split_once('=')
                .ok_or_else(|| format!("malformed assignment '{pair}', expected VAR=VALUE"))?;
            let var = Var::from_name(name.trim())
                .ok_or_else(|| format!("unknown variable '{}' in --eval", name.trim()))?;
            let value = BigRational::from_str(value.trim())
                .map_err(|e| format!("invalid rational '{}': {e}", value.trim()))?;
            Ok((var, value))
        })
        .collect()
}

fn print_poly(cli: &Cli, p: &MultiPoly) {
    if cli.json {
        println!("{}", json!({ "polynomial": p.to_string() }));
    } else {
        println!("{p}");
    }
}

fn matroid_value(m: &Matroid) -> serde_json::Value {
    let labels: Vec<u8> = m.labels().elements().collect();
    let bases: Vec<Vec<u8>> = m.bases().iter().map(|b| b.elements().collect()).collect();
    json!({ "labels": labels, "bases": bases })
}

fn print_matroid(cli: &Cli, m: &Matroid) {
    if cli.json {
        println!("{}", matroid_value(m));
    } else {
        println!("labels: {}", m.labels());
        let bases: Vec<String> = m.bases().iter().map(|b| b.to_string()).collect();
        println!("bases: {}", bases.join(","));
    }
}

fn cmd_tutte(cli: &Cli, eval: Option<&str>, algo: &str) -> Result<ExitCode, String> {
    let (_, m) = load_spec(cli, "tutte")?;
    let algorithm = tutte::algorithm_by_name(algo).ok_or_else(|| {
        let names: Vec<&str> = tutte::algorithms().iter().map(|a| a.name()).collect();
        format!("unknown algorithm '{algo}' (available: {})", names.join(", "))
    })?;
    let t = algorithm.compute(&m).map_err(|e| e.to_string())?;
    let result = match eval {
        Some(text) => t.poly().eval(&parse_assignment(text)?),
        None => t.into_poly(),
    };
    print_poly(cli, &result);
    Ok(ExitCode::SUCCESS)
}

fn cmd_q(cli: &Cli, closed_form: bool, check: bool) -> Result<ExitCode, String> {
    let (_, m) = load_spec(cli, "q")?;
    if check {
        let recursive = q_universal(&m).map_err(|e| e.to_string())?;
        let closed = recipe_closed_form(&m).map_err(|e| e.to_string())?;
        let agree = recursive == closed;
        if cli.json {
            println!("{}", json!({ "check": if agree { "OK" } else { "MISMATCH" } }));
        } else {
            println!("{}", if agree { "OK" } else { "MISMATCH" });
        }
        return Ok(if agree {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    let q = if closed_form {
        recipe_closed_form(&m).map_err(|e| e.to_string())?
    } else {
        q_universal(&m).map_err(|e| e.to_string())?
    };
    print_poly(cli, q.poly());
    Ok(ExitCode::SUCCESS)
}

fn cmd_coproduct(cli: &Cli) -> Result<ExitCode, String> {
    let (_, m) = load_spec(cli, "coproduct")?;
    let cp: TensorSum = coproduct(&m).map_err(|e| e.to_string())?;
    if cli.json {
        let terms: Vec<serde_json::Value> = cp
            .terms()
            .iter()
            .map(|(c, l, r)| {
                json!({
                    "coeff": c.to_string(),
                    "left": matroid_value(l),
                    "right": matroid_value(r),
                })
            })
            .collect();
        println!("{}", json!({ "terms": terms }));
    } else {
        for (c, l, r) in cp.terms() {
            println!("{c} * {l} (x) {r}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli, suite: &str) -> Result<ExitCode, String> {
    let selected = if suite == "all" {
        None
    } else {
        Some(Suite::from_name(suite).ok_or_else(|| {
            format!("unknown suite '{suite}' (available: axioms, tutte, hopf, flow, all)")
        })?)
    };
    let extra = match &cli.spec {
        Some(path) => {
            let (_, m) = load_spec(cli, "verify")?;
            vec![CorpusCase {
                name: format!("user:{path}"),
                matroid: m,
            }]
        }
        None => Vec::new(),
    };
    let reports = run_suite(selected, cli.max_n, &extra);
    let failed: usize = reports.iter().filter(|r| !r.passed()).count();
    if cli.json {
        println!("{}", verify_json(suite, cli.max_n, &reports, failed));
    } else {
        for report in &reports {
            if report.passed() {
                println!("check {}: pass ({} cases)", report.name, report.cases);
            } else {
                println!(
                    "check {}: FAIL ({} of {} cases)",
                    report.name,
                    report.failures.len(),
                    report.cases
                );
                for failure in &report.failures {
                    println!("  {failure}");
                }
            }
        }
        if failed == 0 {
            println!("suite {suite}: PASS ({} checks)", reports.len());
        } else {
            println!(
                "suite {suite}: FAIL ({failed} of {} checks failed)",
                reports.len()
            );
        }
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn verify_json(
    suite: &str,
    max_n: usize,
    reports: &[CheckReport],
    failed: usize,
) -> serde_json::Value {
    let checks: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "suite": r.suite.name(),
                "cases": r.cases,
                "passed": r.passed(),
                "failures": r.failures,
            })
        })
        .collect();
    json!({
        "suite": suite,
        "max_n": max_n,
        "passed": failed == 0,
        "checks": checks,
    })
}
