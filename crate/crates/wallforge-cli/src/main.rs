use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wallforge::abacus::{self, Sector, TupleImage};
use wallforge::crystal;
use wallforge::qseries::{string_function, StringCase};
use wallforge::{Content, Family, Model, Wall};

#[derive(Parser)]
#[command(name = "wallforge", version, about = "Young walls and their abacus bijections")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Target {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: u32,
    /// Index i of the highest weight Λ_i.
    #[arg(long, default_value_t = 0)]
    lambda: u32,
    /// B1 walls on Λ_0 counted against Λ_1 (content γ + mδ).
    #[arg(long)]
    cross: bool,
}

impl Target {
    fn model(&self) -> Result<Model, Fail> {
        let model = Model::new(self.family, self.n, self.lambda).map_err(usage)?;
        if self.cross && !(self.family == Family::B1 && self.lambda == 0) {
            return Err(Fail::Usage("--cross needs --family B1 --lambda 0".into()));
        }
        Ok(model)
    }

    fn sector(&self) -> Sector {
        if self.cross { Sector::Cross } else { Sector::Diagonal }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Bijection,
    Oracle,
    Series,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Full,
    Counts,
    Examples,
}

#[derive(Subcommand)]
enum Cmd {
    /// Weight multiplicities |Z(Λ)_{Λ-mδ}| as CSV.
    Count {
        #[command(flatten)]
        target: Target,
        /// A single m or a range such as 0..5 (inclusive).
        #[arg(long, default_value = "0..5")]
        m: String,
        #[arg(long, value_enum, default_value = "bijection")]
        method: Method,
    },
    /// Apply π to a JSON wall.
    Map {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Apply π⁻¹ to a JSON tuple.
    Invmap {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Reduce a JSON wall by the abacus moves.
    Reduce {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Export the crystal graph grown from the ground state.
    Crystal {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// DOT output path (stdout if omitted).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Coefficients of a string function.
    Series {
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the counting methods and replay the examples.
    Verify {
        #[arg(long, value_enum, default_value = "full")]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        max_m: u64,
    },
    /// Replay the worked examples.
    Examples,
}

enum Fail {
    Usage(String),
    Mismatch(String),
}

fn usage(e: impl std::fmt::Display) -> Fail {
    Fail::Usage(e.to_string())
}

fn read_json(input: &Option<PathBuf>) -> Result<Value, Fail> {
    let text = match input {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Fail::Usage(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(usage)?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Fail::Usage(format!("bad JSON input: {e}")))
}

fn parse_range(s: &str) -> Result<(u64, u64), Fail> {
    let num = |x: &str| x.trim().parse::<u64>().map_err(|_| Fail::Usage(format!("bad --m value {s:?}")));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(Fail::Usage(format!("empty range {s:?}")));
            }
            Ok((a, b))
        }
        None => num(s).map(|m| (m, m)),
    }
}

fn target_content(model: &Model, sector: Sector, m: u64) -> Result<Content, Fail> {
    let d = model.data().delta_content(m);
    Ok(match sector {
        Sector::Diagonal => d,
        Sector::Cross => Content(model.data().gamma.clone().ok_or_else(|| usage("no γ for this family"))?).add(&d),
    })
}

fn count(target: &Target, m: u64, method: Method) -> Result<String, Fail> {
    let model = target.model()?;
    let sector = target.sector();
    Ok(match method {
        Method::Oracle => model.enumerate_content(&target_content(&model, sector, m)?).map_err(usage)?.len().to_string(),
        Method::Bijection => abacus::enumerate_targets(&model, sector, m).map_err(usage)?.len().to_string(),
        Method::Series => {
            let case = StringCase::for_weight(target.family, target.n, target.lambda, target.cross).map_err(usage)?;
            let s = string_function(target.family, target.n, case).map_err(usage)?.expand_q(m as usize).map_err(usage)?;
            s.coeff(m as usize).map_err(usage)?.to_string()
        }
    })
}

/// Every (family, smallest rank, level-one Λ) plus A2even at n = 2 and the cross string.
fn verification_targets() -> Vec<Target> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let mut ranks = vec![family.min_rank()];
        if family == Family::A2even {
            ranks.push(2);
        }
        for n in ranks {
            let data = wallforge::AffineData::new(family, n).expect("minimal rank");
            for &lambda in &data.level1_weights {
                out.push(Target { family, n, lambda, cross: false });
            }
        }
    }
    out.push(Target { family: Family::B1, n: 3, lambda: 0, cross: true });
    out
}

fn verify_counts(max_m: u64, out: &mut String) -> Result<Vec<String>, Fail> {
    let targets = verification_targets();
    let rows: Vec<Result<Vec<(String, bool)>, Fail>> = std::thread::scope(|scope| {
        let handles: Vec<_> = targets
            .iter()
            .map(|t| {
                scope.spawn(move || {
                    (0..=max_m)
                        .map(|m| {
                            let o = count(t, m, Method::Oracle)?;
                            let b = count(t, m, Method::Bijection)?;
                            let s = count(t, m, Method::Series)?;
                            let ok = o == b && b == s;
                            let sector = if t.cross { "cross" } else { "diag" };
                            let row = format!("{},{},{},{sector},{m},{o},{b},{s},{}", t.family, t.n, t.lambda, if ok { "ok" } else { "MISMATCH" });
                            Ok((row, ok))
                        })
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verification thread")).collect()
    });
    let mut failures = Vec::new();
    out.push_str("family,n,lambda,sector,m,oracle,bijection,series,status\n");
    for r in rows {
        for (row, ok) in r? {
            if !ok {
                failures.push(row.clone());
            }
            out.push_str(&row);
            out.push('\n');
        }
    }
    Ok(failures)
}

fn verify_examples(out: &mut String) -> Result<Vec<String>, Fail> {
    let mut failures = Vec::new();
    for c in wallforge::examples::run_all().map_err(usage)? {
        let status = if c.ok() { "ok" } else { "MISMATCH" };
        out.push_str(&format!("{status}: {}: {}\n", c.name, c.actual));
        if !c.ok() {
            failures.push(format!("{}: expected {}, got {}", c.name, c.expected, c.actual));
        }
    }
    Ok(failures)
}

fn run(cli: Cli) -> Result<String, Fail> {
    let mut out = String::new();
    match cli.cmd {
        Cmd::Count { target, m, method } => {
            let (lo, hi) = parse_range(&m)?;
            out.push_str("m,count\n");
            for m in lo..=hi {
                out.push_str(&format!("{m},{}\n", count(&target, m, method)?));
            }
        }
        Cmd::Map { target, input } => {
            let model = target.model()?;
            let wall = Wall::from_json(&read_json(&input)?).map_err(usage)?;
            let (m, tuple) = abacus::pi_forward(&model, &wall).map_err(usage)?;
            let v = json!({ "m": m, "notation": tuple.exponent_notation(), "tuple": tuple });
            out.push_str(&serde_json::to_string_pretty(&v).expect("json"));
            out.push('\n');
        }
        Cmd::Invmap { target, input } => {
            let model = target.model()?;
            let v = read_json(&input)?;
            let v = v.get("tuple").cloned().unwrap_or(v);
            let tuple: TupleImage = serde_json::from_value(v).map_err(|e| Fail::Usage(format!("bad tuple: {e}")))?;
            let wall = abacus::pi_inverse(&model, &tuple).map_err(usage)?;
            out.push_str(&wall.to_json().to_string());
            out.push('\n');
        }
        Cmd::Reduce { target, input } => {
            let model = target.model()?;
            let wall = Wall::from_json(&read_json(&input)?).map_err(usage)?;
            let (reduced, red) = abacus::reduce_wall(&model, &wall).map_err(usage)?;
            let v = json!({
                "reduced": reduced.to_json(),
                "beads": red.reduced.to_json(&model),
                "moves": red.moves,
                "delta_removed": red.delta_removed,
            });
            out.push_str(&serde_json::to_string_pretty(&v).expect("json"));
            out.push('\n');
        }
        Cmd::Crystal { target, depth, dot } => {
            let model = target.model()?;
            let g = crystal::crystal_graph(&model, depth);
            match dot {
                Some(p) => std::fs::write(&p, g.to_dot()).map_err(|e| Fail::Usage(format!("{}: {e}", p.display())))?,
                None => out.push_str(&g.to_dot()),
            }
        }
        Cmd::Series { case, n, order, json } => {
            let case = StringCase::parse(&case).map_err(usage)?;
            let f = string_function(case.family(), n, case).map_err(usage)?;
            let s = f.expand_q(order).map_err(usage)?;
            if json {
                out.push_str(&s.to_json().to_string());
            } else {
                out.push_str(&s.to_string());
            }
            out.push('\n');
        }
        Cmd::Verify { suite, max_m } => {
            let mut failures = Vec::new();
            if matches!(suite, Suite::Full | Suite::Counts) {
                failures.extend(verify_counts(max_m, &mut out)?);
            }
            if matches!(suite, Suite::Full | Suite::Examples) {
                failures.extend(verify_examples(&mut out)?);
            }
            if !failures.is_empty() {
                print!("{out}");
                return Err(Fail::Mismatch(failures.join("\n")));
            }
        }
        Cmd::Examples => {
            let failures = verify_examples(&mut out)?;
            if !failures.is_empty() {
                print!("{out}");
                return Err(Fail::Mismatch(failures.join("\n")));
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli) {
        Ok(text) => match output {
            Some(p) => match std::fs::write(&p, text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {}: {e}", p.display());
                    ExitCode::from(2)
                }
            },
            None => {
                print!("{text}");
                ExitCode::SUCCESS
            }
        },
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Mismatch(msg)) => {
            eprintln!("verification failed:\n{msg}");
            ExitCode::from(1)
        }
    }
}
