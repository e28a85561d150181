mod dot;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use relindex::absmodel::{check_axioms, load_model, Axiom};
use relindex::domains::classify;
use relindex::exec::Execution;
use relindex::indexcore::{core_of, relation_index, CoreMode, Policy};
use relindex::isomorph::{find_isomorphism, verify_witness};
use relindex::laws::{manifest::MANIFEST, run_suite, SuiteConfig, DEFAULT_EXHAUSTIVE_LIMIT};
use relindex::pointlattice::{decompose_to_pairs, point_law_suite, points};
use relindex::relcore::relation_from_json;
use relindex::{Carrier, Relation};

#[derive(Parser)]
#[command(name = "relindex", version, about = "Indexes, cores and laws of finite relations")]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Min,
    Max,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    SameType,
    Quotient,
}

#[derive(Subcommand)]
enum Cmd {
    /// Predicates of a relation with evidence.
    Classify {
        rel: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// A verified index of a relation.
    Index {
        rel: PathBuf,
        #[arg(long, value_enum, default_value = "min")]
        policy: PolicyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        dot: bool,
    },
    /// A core with its witnesses.
    Core {
        rel: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "min")]
        policy: PolicyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        dot: bool,
    },
    /// Decides isomorphism; exit status 1 when not isomorphic.
    Iso { rel1: PathBuf, rel2: PathBuf },
    /// The pairs a∘⊤∘b below a relation.
    Decompose {
        rel: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Points of a carrier and the point laws.
    Points { size: usize },
    /// Runs the law registry; exit status 1 on any failure.
    Laws {
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        /// Instances per size combination too large to enumerate.
        #[arg(long, default_value_t = 0)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Glob over law ids.
        #[arg(long, default_value = "*")]
        filter: String,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        exhaustive_limit: u64,
        #[arg(long)]
        sequential: bool,
        /// Print the coverage manifest instead of running.
        #[arg(long)]
        manifest: bool,
    },
    /// Axiom report for an abstract model file.
    Model { file: PathBuf },
}

fn policy(p: PolicyArg, seed: u64) -> Policy {
    match p {
        PolicyArg::Min => Policy::Smallest,
        PolicyArg::Max => Policy::Largest,
        PolicyArg::Random => Policy::Seeded(seed),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> Result<Relation> {
    relation_from_json(&read(path)?).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn json_out<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialisable") + "\n"
}

fn table(r: &Relation) -> String {
    format!("{} ~ {}\n{r}", r.src().name(), r.dst().name())
}

/// Output text and whether the answer was positive.
fn run(cli: &Cli) -> Result<(String, bool)> {
    let pretty = cli.pretty;
    Ok(match &cli.cmd {
        Cmd::Classify { rel, dot } => {
            let r = load(rel)?;
            if *dot {
                return Ok((dot::render(&r, None), true));
            }
            let rep = classify(&r);
            if pretty {
                let v = serde_json::to_value(&rep)?;
                let mut out = table(&r);
                for (k, f) in v.as_object().expect("object") {
                    let _ = writeln!(out, "{k:>14}: {}", f["holds"]);
                }
                (out, true)
            } else {
                (json_out(&rep), true)
            }
        }
        Cmd::Index { rel, policy: p, seed, dot } => {
            let r = load(rel)?;
            let cert = relation_index(&r, policy(*p, *seed))?;
            if *dot {
                return Ok((dot::render(&r, Some(&cert.index)), cert.is_index()));
            }
            let out = if pretty {
                format!("relation\n{}index\n{}{:?}\n", table(&r), table(&cert.index), cert.checks)
            } else {
                json_out(&cert)
            };
            (out, cert.is_index())
        }
        Cmd::Core { rel, mode, policy: p, seed, dot } => {
            let r = load(rel)?;
            let mode = match mode {
                ModeArg::SameType => CoreMode::SameType,
                ModeArg::Quotient => CoreMode::Quotient,
            };
            let d = core_of(&r, mode, policy(*p, *seed))?;
            if *dot {
                return Ok((dot::render(&d.core, None), d.checks.all()));
            }
            let out = if pretty {
                format!(
                    "core\n{}lambda\n{}rho\n{}{:?}\n",
                    table(&d.core),
                    table(&d.lambda),
                    table(&d.rho),
                    d.checks
                )
            } else {
                json_out(&d)
            };
            (out, d.checks.all())
        }
        Cmd::Iso { rel1, rel2 } => {
            let (r, s) = (load(rel1)?, load(rel2)?);
            match find_isomorphism(&r, &s)? {
                Some(w) => {
                    let checks = verify_witness(&r, &s, &w.phi, &w.psi)?;
                    let out = if pretty {
                        format!("isomorphic\nphi\n{}psi\n{}", table(&w.phi), table(&w.psi))
                    } else {
                        json_out(&json!({"isomorphic": true, "phi": w.phi, "psi": w.psi, "checks": checks}))
                    };
                    (out, true)
                }
                None => {
                    let out = if pretty {
                        "not isomorphic\n".to_string()
                    } else {
                        json_out(&json!({"isomorphic": false}))
                    };
                    (out, false)
                }
            }
        }
        Cmd::Decompose { rel, dot } => {
            let r = load(rel)?;
            if *dot {
                return Ok((dot::render(&r, None), true));
            }
            let pairs = decompose_to_pairs(&r);
            let out = if pretty {
                pairs
                    .iter()
                    .map(|&(a, b)| format!("{} ⊤ {}\n", r.src().label(a), r.dst().label(b)))
                    .collect()
            } else {
                let labelled: Vec<[&str; 2]> =
                    pairs.iter().map(|&(a, b)| [r.src().label(a), r.dst().label(b)]).collect();
                json_out(&json!({"pairs": pairs, "labels": labelled}))
            };
            (out, true)
        }
        Cmd::Points { size } => {
            let c = Carrier::indexed("A", *size);
            let laws = point_law_suite(&c);
            let ok = laws.iter().all(|l| l.holds);
            let pts: Vec<Vec<[usize; 2]>> = points(&c)
                .iter()
                .map(|p| p.pairs().map(|(a, b)| [a, b]).collect())
                .collect();
            let out = if pretty {
                let mut s = format!("{} points\n", pts.len());
                for l in &laws {
                    let _ = writeln!(s, "{:>28}: {}", l.law, l.holds);
                }
                s
            } else {
                json_out(&json!({"size": size, "points": pts, "laws": laws}))
            };
            (out, ok)
        }
        Cmd::Laws {
            max_size,
            samples,
            seed,
            filter,
            exhaustive_limit,
            sequential,
            manifest,
        } => {
            if *manifest {
                return Ok((json_out(&MANIFEST), true));
            }
            let cfg = SuiteConfig {
                max_size: *max_size,
                samples: *samples,
                seed: *seed,
                filter: filter.clone(),
                exhaustive_limit: *exhaustive_limit,
                execution: if *sequential { Execution::Sequential } else { Execution::Parallel },
            };
            let reports = run_suite(&cfg)?;
            let ok = reports.iter().all(|r| r.passed());
            let out = if pretty {
                let mut s = String::new();
                for r in &reports {
                    let verdict = if r.passed() { "ok" } else { "FAIL" };
                    let mode = serde_json::to_value(r.mode)?;
                    let _ = writeln!(
                        s,
                        "{verdict:4} {:36} {:11} {:>10} instances",
                        r.id,
                        mode.as_str().unwrap_or(""),
                        r.instances
                    );
                    if let Some(c) = &r.counterexample {
                        let _ = writeln!(s, "     counterexample: {}", serde_json::to_string(c)?);
                    }
                }
                let failed = reports.iter().filter(|r| !r.passed()).count();
                let _ = writeln!(s, "{} laws, {failed} failed", reports.len());
                s
            } else {
                json_out(&reports)
            };
            (out, ok)
        }
        Cmd::Model { file } => {
            let m = load_model(&read(file)?).map_err(|e| anyhow!("{}: {e}", file.display()))?;
            let rep = check_axioms(&m);
            let out = if pretty {
                let mut s = format!("{} elements\n", m.size());
                for a in Axiom::ALL {
                    let o = rep.get(a);
                    let name = serde_json::to_value(a)?;
                    let cx = o.counterexample.as_ref().map(|c| c.join(", ")).unwrap_or_default();
                    let _ = writeln!(s, "{:>16}: {} {cx}", name.as_str().unwrap_or(""), o.holds);
                }
                s
            } else {
                json_out(&json!({"elements": m.names(), "report": rep}))
            };
            (out, true)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, positive)) => {
            print!("{out}");
            if positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
