//! `domhad`: exact search and verification for dominating clique minors.
//!
//! Exit codes: 0 success, 1 negative result (failed verification, missed
//! target, or a hunt that found violations), 2 usage or input error,
//! 3 budget exhausted.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use domhad::construct::{self, PeelBase};
use domhad::graph::Graph;
use domhad::hunt::{self, HuntConfig};
use domhad::invariants;
use domhad::minor::{self, CertificateFile, HdOutcome, SearchOutcome};
use domhad::pattern;
use domhad::seagull;
use domhad::theorems::{self, Status};
use domhad::{catalog, from_graph6, to_graph6};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "domhad",
    version,
    about = "Dominating clique minors: exact solver, certificates, seagull packing, theorem checks and counterexample hunts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact invariants (alpha, omega, chi, degrees, anti-matching).
    Invariants {
        /// graph6 record.
        graph6: String,
        #[arg(long)]
        json: bool,
    },
    /// Induced-subgraph freeness against catalog patterns.
    Freeness {
        graph6: String,
        /// Comma-separated catalog names.
        #[arg(long, value_delimiter = ',', required = true)]
        patterns: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Dominating Hadwiger number, or a single target decision.
    Hd {
        graph6: String,
        /// Decide h_d >= target instead of optimizing.
        #[arg(long)]
        target: Option<usize>,
        /// Node-expansion budget.
        #[arg(long, default_value_t = u64::MAX)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Validate a certificate JSON file against its embedded graph.
    /// Accepts a bare certificate object or `hd --json` output (the
    /// embedded "certificate" is used); `-` reads from stdin.
    VerifyCert {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Seagull packing feasibility report.
    Seagulls {
        graph6: String,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build a certificate by a named constructive method.
    Construct {
        graph6: String,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a theorem verdict on a graph.
    Check {
        graph6: String,
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = u64::MAX)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run (or resume) a hunt campaign from a JSON config.
    Hunt {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        resume: bool,
    },
    /// Resolve a catalog name, or emit the whole manifest.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        json: bool,
        /// Emit DOT instead of a summary.
        #[arg(long)]
        dot: bool,
    },
    /// Enumerate graphs with independence number at most two (graph6 lines).
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Emit the triangle-free complements instead.
        #[arg(long)]
        complements: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Omega,
    Mindeg,
    Peel,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn parse_graph(text: &str) -> Result<Graph, String> {
    from_graph6(text.trim()).map_err(|e| format!("bad graph6 record: {e}"))
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Invariants { graph6, json } => {
            let g = parse_graph(&graph6)?;
            let bundle = invariants::bundle(&g).map_err(|e| e.to_string())?;
            if json {
                let mut v = serde_json::to_value(&bundle).expect("serializable");
                v.as_object_mut()
                    .expect("object")
                    .insert("schema".into(), json!("domhad/invariants/v1"));
                println!(
                    "{}",
                    serde_json::to_string_pretty(&v).expect("serializable")
                );
            } else {
                println!(
                    "n={} m={} alpha={} omega={} (witness {}) chi={} delta={} Delta={} anti_mu={}",
                    bundle.n,
                    bundle.m,
                    bundle.alpha,
                    bundle.omega,
                    bundle.omega_witness,
                    bundle.chi,
                    bundle.delta,
                    bundle.delta_max,
                    bundle.anti_mu
                );
            }
            Ok(EXIT_OK)
        }
        Command::Freeness {
            graph6,
            patterns,
            json,
        } => {
            let g = parse_graph(&graph6)?;
            let verdicts = pattern::is_free(&g, &patterns).map_err(|e| e.to_string())?;
            if json {
                let v = json!({ "schema": "domhad/freeness/v1", "free": verdicts });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&v).expect("serializable")
                );
            } else {
                for (name, free) in &verdicts {
                    println!("{name}: {}", if *free { "free" } else { "contains" });
                }
            }
            Ok(EXIT_OK)
        }
        Command::Hd {
            graph6,
            target,
            budget,
            json,
        } => {
            let g = parse_graph(&graph6)?;
            match target {
                Some(t) => {
                    if t == 0 {
                        return Err("target must be at least 1".into());
                    }
                    let result =
                        minor::has_dominating_kt(&g, t, budget).map_err(|e| e.to_string())?;
                    let (code, payload) = match result.outcome {
                        SearchOutcome::Found(cert) => (
                            EXIT_OK,
                            json!({
                                "schema": "domhad/hd/v1",
                                "target": t,
                                "decision": "found",
                                "nodes": result.stats.nodes,
                                "certificate": CertificateFile::new(&g, &cert),
                            }),
                        ),
                        SearchOutcome::Absent => (
                            EXIT_NEGATIVE,
                            json!({
                                "schema": "domhad/hd/v1",
                                "target": t,
                                "decision": "absent",
                                "nodes": result.stats.nodes,
                            }),
                        ),
                        SearchOutcome::Exhausted => (
                            EXIT_BUDGET,
                            json!({
                                "schema": "domhad/hd/v1",
                                "target": t,
                                "decision": "budget-exhausted",
                                "nodes": result.stats.nodes,
                            }),
                        ),
                    };
                    emit_hd(&payload, json);
                    Ok(code)
                }
                None => {
                    let outcome = minor::hd(&g, budget);
                    let (code, payload) = match &outcome {
                        HdOutcome::Exact {
                            value,
                            certificate,
                            stats,
                        } => (
                            EXIT_OK,
                            json!({
                                "schema": "domhad/hd/v1",
                                "hd": value,
                                "nodes": stats.nodes,
                                "certificate": certificate
                                    .as_ref()
                                    .map(|c| CertificateFile::new(&g, c)),
                            }),
                        ),
                        HdOutcome::Exhausted {
                            lower,
                            upper,
                            certificate,
                            stats,
                        } => (
                            EXIT_BUDGET,
                            json!({
                                "schema": "domhad/hd/v1",
                                "hd_interval": [lower, upper],
                                "nodes": stats.nodes,
                                "certificate": certificate
                                    .as_ref()
                                    .map(|c| CertificateFile::new(&g, c)),
                            }),
                        ),
                    };
                    emit_hd(&payload, json);
                    Ok(code)
                }
            }
        }
        Command::VerifyCert { file, json } => {
            let text = if file.as_os_str() == "-" {
                use std::io::Read;
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| format!("cannot read stdin: {e}"))?;
                buf
            } else {
                std::fs::read_to_string(&file)
                    .map_err(|e| format!("cannot read {}: {e}", file.display()))?
            };
            let mut value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| format!("bad certificate file: {e}"))?;
            if value.get("branch_sets").is_none() {
                if let Some(inner) = value.get("certificate") {
                    value = inner.clone();
                }
            }
            let parsed: CertificateFile =
                serde_json::from_value(value).map_err(|e| format!("bad certificate file: {e}"))?;
            let g = parse_graph(&parsed.graph6)?;
            if g.n() != parsed.n {
                return Err(format!(
                    "certificate file claims n={}, graph6 decodes to n={}",
                    parsed.n,
                    g.n()
                ));
            }
            match minor::verify_dominating(&g, &parsed.certificate()) {
                Ok(()) => {
                    if json {
                        println!(
                            "{}",
                            json!({ "schema": "domhad/verify/v1", "valid": true,
                                    "order": parsed.branch_sets.len() })
                        );
                    } else {
                        println!("valid certificate of order {}", parsed.branch_sets.len());
                    }
                    Ok(EXIT_OK)
                }
                Err(violation) => {
                    if json {
                        println!(
                            "{}",
                            json!({ "schema": "domhad/verify/v1", "valid": false,
                                    "violation": violation })
                        );
                    } else {
                        println!("invalid certificate: {violation}");
                    }
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Seagulls { graph6, ell, json } => {
            let g = parse_graph(&graph6)?;
            let report = seagull::feasibility(&g, ell).map_err(|e| e.to_string())?;
            let (max_packing, witness) = seagull::max_disjoint_seagulls(&g);
            if json {
                let mut v = serde_json::to_value(&report).expect("serializable");
                let obj = v.as_object_mut().expect("object");
                obj.insert("schema".into(), json!("domhad/seagulls/v1"));
                obj.insert("max_packing".into(), json!(max_packing));
                obj.insert(
                    "packing_witness".into(),
                    serde_json::to_value(&witness).expect("serializable"),
                );
                println!(
                    "{}",
                    serde_json::to_string_pretty(&v).expect("serializable")
                );
            } else {
                println!(
                    "ell={} size:{} connectivity:{} (kappa={}) capacity:{} anti-matching:{} (mu={})",
                    report.ell,
                    verdict_mark(report.cond_size),
                    verdict_mark(report.cond_connectivity),
                    report.kappa,
                    verdict_mark(report.cond_capacity),
                    verdict_mark(report.cond_anti_matching),
                    report.anti_matching_size,
                );
                if let Some(cc) = report.min_capacity {
                    println!("min capacity {} at clique {}", cc.capacity(), cc.clique);
                }
                println!("max disjoint seagulls: {max_packing}");
                if report.exception_w5_ell2 {
                    println!("exception pair: G = W_5 with ell = 2");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Construct {
            graph6,
            method,
            json,
        } => {
            let g = parse_graph(&graph6)?;
            let built = match method {
                Method::Omega => {
                    construct::build_omega_certificate(&g).map_err(|e| e.to_string())?
                }
                Method::Mindeg => {
                    construct::build_mindeg_certificate(&g).map_err(|e| e.to_string())?
                }
                Method::Peel => {
                    construct::peel_dominating_edges(&g, PeelBase::Exact { budget: u64::MAX })
                }
            };
            if json {
                let v = json!({
                    "schema": "domhad/construct/v1",
                    "provenance": built.provenance.to_string(),
                    "order": built.certificate.order(),
                    "certificate": CertificateFile::new(&g, &built.certificate),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&v).expect("serializable")
                );
            } else {
                println!(
                    "order {} via {}",
                    built.certificate.order(),
                    built.provenance
                );
                for (i, set) in built.certificate.branch_sets().iter().enumerate() {
                    println!("  T_{}: {}", i + 1, set);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            graph6,
            theorem,
            budget,
            json,
        } => {
            let g = parse_graph(&graph6)?;
            let verdict =
                theorems::check_theorem(&g, &theorem, budget).map_err(|e| e.to_string())?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&verdict).expect("serializable")
                );
            } else {
                println!("{}: {:?}", verdict.theorem, verdict.status);
                for h in &verdict.hypotheses {
                    println!("  hypothesis {}: {}", h.clause, verdict_mark(h.holds));
                }
                if let Some(c) = &verdict.conclusion {
                    println!("  conclusion {}: {:?}", c.statement, c.outcome);
                    if let Some(p) = &c.provenance {
                        println!("  provenance: {p}");
                    }
                }
            }
            Ok(match verdict.status {
                Status::Pass | Status::NotApplicable => EXIT_OK,
                Status::Fail => EXIT_NEGATIVE,
                Status::BudgetExhausted => EXIT_BUDGET,
            })
        }
        Command::Hunt { config, resume } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| format!("cannot read {}: {e}", config.display()))?;
            let parsed: HuntConfig =
                serde_json::from_str(&text).map_err(|e| format!("bad hunt config: {e}"))?;
            let report = hunt::run_hunt(&parsed, resume).map_err(|e| e.to_string())?;
            print!("{}", report.full_json());
            Ok(if !report.complete {
                EXIT_BUDGET
            } else if report.violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Catalog { name, json, dot } => match name {
            Some(name) => {
                let g = catalog::catalog(&name).map_err(|e| e.to_string())?;
                if dot {
                    print!("{}", to_dot(&g, &name));
                } else if json {
                    let v = json!({
                        "schema": "domhad/catalog/v1",
                        "name": name,
                        "graph6": to_graph6(&g),
                        "order": g.n(),
                        "size": g.edge_count(),
                    });
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&v).expect("serializable")
                    );
                } else {
                    println!(
                        "{name}: {} ({} vertices, {} edges)",
                        to_graph6(&g),
                        g.n(),
                        g.edge_count()
                    );
                }
                Ok(EXIT_OK)
            }
            None => {
                // Manifest of every documented name.
                if dot {
                    return Err("--dot needs a single catalog name".into());
                }
                if json {
                    let entries: Vec<_> = catalog::documented_names()
                        .into_iter()
                        .map(|name| {
                            let g = catalog::catalog(name).expect("documented name");
                            json!({
                                "name": name,
                                "graph6": to_graph6(&g),
                                "order": g.n(),
                                "size": g.edge_count(),
                            })
                        })
                        .collect();
                    let v = json!({ "schema": "domhad/catalog-manifest/v1", "entries": entries });
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&v).expect("serializable")
                    );
                } else {
                    for name in catalog::documented_names() {
                        let g = catalog::catalog(name).expect("documented name");
                        println!(
                            "{name}\t{}\t{} vertices, {} edges",
                            to_graph6(&g),
                            g.n(),
                            g.edge_count()
                        );
                    }
                }
                Ok(EXIT_OK)
            }
        },
        Command::Enumerate { n, complements } => {
            let graphs = if complements {
                hunt::triangle_free_graphs(n).map_err(|e| e.to_string())?
            } else {
                hunt::enumerate_alpha2(n).map_err(|e| e.to_string())?
            };
            for g in &graphs {
                println!("{}", to_graph6(g));
            }
            Ok(EXIT_OK)
        }
    }
}

fn emit_hd(payload: &serde_json::Value, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(payload).expect("serializable")
        );
        return;
    }
    if let Some(v) = payload.get("hd") {
        println!("h_d = {v}");
    } else if let Some(range) = payload.get("hd_interval") {
        println!("h_d in {range} (budget exhausted)");
    } else {
        println!("target {}: {}", payload["target"], payload["decision"]);
    }
    if let Some(cert) = payload.get("certificate").filter(|c| !c.is_null()) {
        println!("{}", serde_json::to_string(cert).expect("serializable"));
    }
}

fn verdict_mark(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "FAILS"
    }
}

fn to_dot(g: &Graph, name: &str) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let safe: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    writeln!(out, "graph {safe} {{").expect("infallible");
    for v in 0..g.n() {
        writeln!(out, "  {v};").expect("infallible");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("infallible");
    }
    writeln!(out, "}}").expect("infallible");
    out
}
