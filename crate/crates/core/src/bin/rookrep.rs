use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rookrep::branching::{bratteli_graph, ExportFormat};
use rookrep::combinatorics::Multipartition;
use rookrep::grothendieck::{
    apply_word, bialgebra_coproduct, bialgebra_product, counit, parse_word, GrothBasisVec, GrothVector,
};
use rookrep::jucysmurphy::{is_prime, jm_spectrum};
use rookrep::monoid::enumerate_elements;
use rookrep::seminormal::rook_irrep;
use rookrep::verify::{self, Params, Suite};
use rookrep::Error;

const MAX_N: usize = 6;
const MAX_R: usize = 8;

/// Representations of generalized rook monoids, computed exactly.
#[derive(Parser)]
#[command(name = "rookrep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List every element of C_r ≀ R_n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Seminormal irreducible representation V_λ at level n.
    Irrep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        /// Multipartition as JSON, e.g. '[[2,1],[]]'.
        #[arg(long)]
        lambda: String,
    },
    /// Bratteli diagram up to level nmax.
    Bratteli {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Jucys-Murphy eigenvalues on the seminormal basis of V_λ.
    JmSpectrum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        lambda: String,
    },
    /// Apply a word in e_i, f_i, A, B (rightmost first) to a class (λ, m).
    Groth {
        #[arg(long)]
        p: u64,
        /// Operators separated by spaces, e.g. "f0 f1 e0 B A".
        #[arg(long, default_value = "")]
        apply: String,
        /// Starting class as LAMBDA:M, e.g. "[2,1]:0".
        #[arg(long, default_value = "[]:0")]
        start: String,
    },
    /// Characteristic-zero product (with --y) or coproduct and counit of (λ, m).
    Bialgebra {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: Option<String>,
    },
    /// Run a verification suite; exits with status 1 when a check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        degree: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn guard_n(n: usize) -> Result<(), Failure> {
    if n > MAX_N {
        return Err(Failure::Usage(format!("n = {n} exceeds the limit {MAX_N}")));
    }
    Ok(())
}

fn guard_r(r: usize) -> Result<(), Failure> {
    if r == 0 || r > MAX_R {
        return Err(Failure::Usage(format!("r must be between 1 and {MAX_R}")));
    }
    Ok(())
}

fn guard_p(p: u64) -> Result<(), Failure> {
    if !is_prime(p) {
        return Err(Failure::Usage(format!("p = {p} is not prime")));
    }
    Ok(())
}

fn parse_lambda(text: &str, r: Option<usize>) -> Result<Multipartition, Failure> {
    let lambda = Multipartition::from_json_str(text)?;
    guard_r(lambda.r())?;
    if let Some(r) = r {
        if r != lambda.r() {
            return Err(Failure::Usage(format!("--lambda has {} components but --r is {r}", lambda.r())));
        }
    }
    Ok(lambda)
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Enumerate { n, r } => {
            guard_n(n)?;
            guard_r(r)?;
            let elements = enumerate_elements(n, r)?;
            let list: Vec<Value> = elements.iter().map(|e| e.to_json()).collect();
            Ok(pretty(&json!({ "n": n, "r": r, "count": elements.len(), "elements": list })))
        }
        Command::Irrep { n, r, lambda } => {
            guard_n(n)?;
            let lambda = parse_lambda(&lambda, r)?;
            Ok(pretty(&rook_irrep(&lambda, n)?.to_json()))
        }
        Command::Bratteli { r, nmax, format } => {
            guard_n(nmax)?;
            guard_r(r)?;
            let format = match format {
                Format::Json => ExportFormat::Json,
                Format::Dot => ExportFormat::Dot,
            };
            Ok(bratteli_graph(r, nmax)?.export(format).trim_end().to_string())
        }
        Command::JmSpectrum { n, r, lambda } => {
            guard_n(n)?;
            let lambda = parse_lambda(&lambda, r)?;
            Ok(pretty(&jm_spectrum(&rook_irrep(&lambda, n)?)?.to_json()))
        }
        Command::Groth { p, apply, start } => {
            guard_p(p)?;
            let word = parse_word(&apply)?;
            let start: GrothBasisVec = start.parse()?;
            let v = GrothVector::basis(start, Some(p))?;
            Ok(pretty(&apply_word(&word, &v)?.to_json()))
        }
        Command::Bialgebra { x, y } => {
            let x: GrothBasisVec = x.parse()?;
            match y {
                Some(y) => {
                    let y: GrothBasisVec = y.parse()?;
                    if x.degree() + y.degree() > MAX_N * 2 {
                        return Err(Failure::Usage("degree too large".into()));
                    }
                    Ok(pretty(&json!({ "product": bialgebra_product(&x, &y).to_json() })))
                }
                None => {
                    if x.degree() > MAX_N * 2 {
                        return Err(Failure::Usage("degree too large".into()));
                    }
                    let terms: Vec<Value> = bialgebra_coproduct(&x)
                        .iter()
                        .map(|((a, b), c)| json!({ "left": a.to_string(), "right": b.to_string(), "coeff": rookrep::exactnum::rational_to_json(c) }))
                        .collect();
                    Ok(pretty(&json!({
                        "coproduct": terms,
                        "counit": rookrep::exactnum::rational_to_json(&counit(&x)),
                    })))
                }
            }
        }
        Command::Verify { suite, n, r, p, degree } => {
            let suite: Suite = suite.parse()?;
            if let Some(n) = n {
                guard_n(n)?;
            }
            if let Some(r) = r {
                guard_r(r)?;
            }
            if let Some(p) = p {
                guard_p(p)?;
            }
            let reports = verify::run(suite, &Params { n, r, p, degree })?;
            let passed = reports.iter().all(|rep| rep.passed());
            let json: Vec<Value> = reports.iter().map(|rep| rep.to_json()).collect();
            let text = pretty(&json!({ "passed": passed, "suites": json }));
            if passed {
                Ok(text)
            } else {
                emit(&text);
                Err(Failure::Verification("verification failed".into()))
            }
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}
