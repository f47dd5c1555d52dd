use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use shufflecube::claims::{verify_claims, ClaimsOptions, DEFAULT_SEED};
use shufflecube::cli::{
    cmd_analyze, cmd_generate, cmd_route, read_cycle, Check, Fixture, Format, EXIT_CLAIM_FAILURE,
    EXIT_PASS, EXIT_USAGE,
};
use shufflecube::hamiltonian::{hamiltonian_cycle, validate_cycle, HamiltonianCycle};
use shufflecube::{Dimension, Error, TopologyKind};

/// Shuffle-cube networks: generation, analysis, routing and Hamiltonian cycles.
#[derive(Parser, Debug)]
#[command(name = "shufflecube", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a whole graph as an edge list, DOT or JSON.
    Generate {
        #[arg(long)]
        kind: TopologyKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "edges")]
        format: Format,
    },
    /// Run structural checks (all of them when none are named).
    Analyze {
        #[arg(long)]
        kind: TopologyKind,
        #[arg(long)]
        n: usize,
        /// degree, girth, bipartite, cliques, diameter, transitivity, equivalence
        checks: Vec<Check>,
        /// Also write the result to this file.
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// Shortest path between two vertices (SSQ or BSQ).
    Route {
        #[arg(long)]
        kind: TopologyKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// Emit or validate Hamiltonian cycles, one vertex per line.
    Hamiltonian {
        #[command(subcommand)]
        action: HamiltonianAction,
    },
    /// Recompute every claim for the given dimensions; exit 1 if any fails.
    VerifyClaims {
        #[arg(required = true, num_args = 1..)]
        ns: Vec<usize>,
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Include per-record timings (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Subcommand, Debug)]
enum HamiltonianAction {
    Emit(CycleSource),
    /// Read a cycle from --input (or stdin) unless --fixture is given.
    Validate {
        #[command(flatten)]
        source: CycleSource,
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct CycleSource {
    #[arg(long)]
    kind: Option<TopologyKind>,
    #[arg(long)]
    n: Option<usize>,
    /// h1 (SSQ_6) or h2 (BSQ_6)
    #[arg(long)]
    fixture: Option<Fixture>,
}

impl CycleSource {
    fn resolve(&self) -> Result<(TopologyKind, Dimension), Error> {
        let fixture = self.fixture.map(Fixture::cycle);
        let kind = self
            .kind
            .or(fixture.as_ref().map(|c| c.kind))
            .ok_or_else(|| Error::Usage("--kind or --fixture is required".into()))?;
        let n = self
            .n
            .or(fixture.as_ref().map(|c| c.dim.n()))
            .ok_or_else(|| Error::Usage("--n or --fixture is required".into()))?;
        Ok((kind, Dimension::new(n)?))
    }
}

fn write_json(path: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    if let Some(p) = path {
        std::fs::write(p, text)
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Generate { kind, n, format } => {
            print!("{}", cmd_generate(kind, Dimension::new(n)?, format)?);
            Ok(EXIT_PASS)
        }
        Command::Analyze {
            kind,
            n,
            checks,
            json,
        } => {
            let checks = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks
            };
            let value = cmd_analyze(kind, Dimension::new(n)?, &checks)?;
            let text = serde_json::to_string_pretty(&value).expect("serializable") + "\n";
            print!("{text}");
            write_json(&json, &text)?;
            Ok(EXIT_PASS)
        }
        Command::Route {
            kind,
            n,
            from,
            to,
            json,
        } => {
            let report = cmd_route(kind, Dimension::new(n)?, &from, &to)?;
            print!("{}", report.to_text());
            write_json(
                &json,
                &(serde_json::to_string_pretty(&report).expect("serializable") + "\n"),
            )?;
            Ok(if report.consistent() {
                EXIT_PASS
            } else {
                EXIT_CLAIM_FAILURE
            })
        }
        Command::Hamiltonian { action } => match action {
            HamiltonianAction::Emit(source) => {
                let cycle = match source.fixture {
                    Some(f) => f.cycle(),
                    None => {
                        let (kind, dim) = source.resolve()?;
                        hamiltonian_cycle(kind, dim)?
                    }
                };
                print!("{}", cycle.to_lines());
                Ok(EXIT_PASS)
            }
            HamiltonianAction::Validate { source, input } => {
                let (kind, dim) = source.resolve()?;
                let vertices = match (source.fixture, input) {
                    (Some(f), None) => f.cycle().vertices,
                    (Some(_), Some(_)) => {
                        return Err(Error::Usage("give either --fixture or --input".into()))
                    }
                    (None, Some(path)) => {
                        let text = std::fs::read_to_string(&path).map_err(|e| {
                            Error::Usage(format!("cannot read {}: {e}", path.display()))
                        })?;
                        read_cycle(&text, dim)?
                    }
                    (None, None) => {
                        let mut text = String::new();
                        std::io::stdin()
                            .read_to_string(&mut text)
                            .map_err(|e| Error::Usage(format!("cannot read stdin: {e}")))?;
                        read_cycle(&text, dim)?
                    }
                };
                let cycle = HamiltonianCycle {
                    kind,
                    dim,
                    vertices,
                };
                match validate_cycle(kind, dim, &cycle.vertices) {
                    Ok(()) => {
                        println!(
                            "valid: Hamiltonian cycle of {kind}_{} ({} vertices)",
                            dim.n(),
                            cycle.len()
                        );
                        Ok(EXIT_PASS)
                    }
                    Err(v) => {
                        println!(
                            "invalid: {}",
                            serde_json::to_string(&v).expect("serializable")
                        );
                        Ok(EXIT_CLAIM_FAILURE)
                    }
                }
            }
        },
        Command::VerifyClaims {
            ns,
            json,
            seed,
            timings,
        } => {
            let report = verify_claims(&ns, &ClaimsOptions { seed, timings })?;
            print!("{}", report.summary());
            write_json(&json, &report.to_json())?;
            Ok(if report.pass {
                EXIT_PASS
            } else {
                EXIT_CLAIM_FAILURE
            })
        }
    }
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    ExitCode::from(code as u8)
}
