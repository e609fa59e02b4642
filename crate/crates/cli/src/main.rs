//! szk: construct Suzuki 2-groups and their ambient simple groups, and run
//! named verification suites over them with machine-readable reports.
//!
//! Exit codes: 0 all checks pass, 1 a verification claim failed,
//! 2 usage/parse/resource error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use szk_core::catalog::{catalog, suites};
use szk_core::chartab::Verdict;
use szk_core::group::Group;
use szk_core::normal::verify_normal_laws_all;
use szk_core::report::Report;
use szk_core::simple::ti_check;
use szk_core::spec::{build_spec, BuiltGroup};
use szk_core::suites::{heights_computation, run_suite};
use szk_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "szk",
    version,
    about = "Suzuki 2-group toolkit: exhaustive construction and verification of the \
             exponent-4 families and their ambient simple groups"
)]
struct Cli {
    /// Worker threads for parallel phases (default: all cores); results are
    /// identical for every thread count
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write the machine-readable report to this path
    #[arg(long, global = true)]
    json: Option<PathBuf>,

    /// Treat inconclusive verdicts as failures
    #[arg(long, global = true)]
    strict: bool,

    /// Override the field-defining polynomial (hex bitmask, e.g. 0xb)
    #[arg(long, global = true, value_parser = parse_hex)]
    poly: Option<u32>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a group and report its basic invariants
    Construct {
        /// Group spec, e.g. "A(m=3,l=1)", "B(m=2,l=1,eps=auto)", "sz(8)",
        /// "sdp(A(m=3,l=1); singer(xi=0x2), frob(j=1))"
        #[arg(long)]
        group: String,
    },
    /// Run a named verification suite (see `szk catalog` for the list)
    Verify {
        /// Suite name: higman, lemma22, aut21, suzuki-property, cor42,
        /// heights, ti, identify
        suite: String,
        /// Group spec the suite applies to (for cor42: the list letter A or B)
        #[arg(long)]
        group: Option<String>,
    },
    /// Compute the irreducible character degree table
    Chartable {
        #[arg(long)]
        group: String,
    },
    /// Character height profile against the family prediction
    Heights {
        #[arg(long)]
        group: String,
    },
    /// Enumerate the normal subgroups and check the structure laws
    NormalSubgroups {
        #[arg(long)]
        group: String,
    },
    /// Count Sylow 2-subgroup conjugates and check pairwise trivial
    /// intersection in an ambient group
    Ti {
        #[arg(long)]
        group: String,
    },
    /// Identify an ambient Sylow 2-subgroup against the order-64 catalog
    Identify {
        #[arg(long)]
        group: String,
    },
    /// List every constructible group and named suite
    Catalog,
}

fn parse_hex(s: &str) -> std::result::Result<u32, String> {
    let t = s.trim().trim_start_matches("0x").trim_start_matches("0X");
    u32::from_str_radix(t, 16).map_err(|e| format!("not a hex polynomial mask: {e}"))
}

fn write_json(path: &Option<PathBuf>, payload: &str) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, payload)
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

/// Pretty-print a serializable payload with a trailing newline,
/// byte-identical across runs.
fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.cmd {
        Cmd::Construct { group } => {
            let built = build_spec(group, cli.poly)?;
            let mut r = Report::new("construct", &built.label(), built.field_spec());
            match &built {
                BuiltGroup::Field(f) => {
                    return Err(Error::Usage(format!(
                        "{f} is a field spec, not a group; use a family, ambient, or sdp spec"
                    )));
                }
                BuiltGroup::Suzuki(g) => {
                    let q = g.field().q() as usize;
                    r.push_bool(
                        "order",
                        "group order is q² (pairs) or q³ (triples)",
                        g.order() == q * q || g.order() == q * q * q,
                        format!("|P| = {}, q = {q}", g.order()),
                    );
                    r.push_bool(
                        "twist",
                        "the defining twist is admissible",
                        true,
                        format!(
                            "θ = x^(2^{}), order {}{}",
                            g.twist(),
                            g.theta_order(),
                            g.warning().map(|w| format!("; note: {w}")).unwrap_or_default()
                        ),
                    );
                }
                BuiltGroup::Ambient(a) => {
                    r.push_bool(
                        "order",
                        "closure order matches the classical formula",
                        true,
                        format!("|G| = {}", a.group.order()),
                    );
                    r.push_bool(
                        "sylow",
                        "a Sylow 2-subgroup of order 64 was located",
                        a.sylow.len() == 64,
                        format!("{} unipotent elements", a.sylow.len()),
                    );
                }
                BuiltGroup::SdpSuzuki(s) => {
                    r.push_bool(
                        "order",
                        "extension order is |P| · |E|",
                        s.order() == s.base().order() * s.complement_order(),
                        format!(
                            "|G| = {} = {} · {}",
                            s.order(),
                            s.base().order(),
                            s.complement_order()
                        ),
                    );
                }
                BuiltGroup::SdpSylow(s) => {
                    r.push_bool(
                        "order",
                        "extension order is |P| · |E|",
                        s.order() == s.base().order() * s.complement_order(),
                        format!(
                            "|G| = {} = {} · {}",
                            s.order(),
                            s.base().order(),
                            s.complement_order()
                        ),
                    );
                }
                BuiltGroup::SdpAmbient(s) => {
                    r.push_bool(
                        "order",
                        "extension order is |G₀| · |E|",
                        s.order() == s.base().order() * s.complement_order(),
                        format!(
                            "|G| = {} = {} · {}",
                            s.order(),
                            s.base().order(),
                            s.complement_order()
                        ),
                    );
                }
            }
            print!("{}", r.render_text());
            write_json(&cli.json, &r.to_json())?;
            Ok(r.exit_code(cli.strict))
        }
        Cmd::Verify { suite, group } => {
            let r = run_suite(suite, group.as_deref(), cli.poly)?;
            print!("{}", r.render_text());
            write_json(&cli.json, &r.to_json())?;
            Ok(r.exit_code(cli.strict))
        }
        Cmd::Chartable { group } | Cmd::Heights { group } => {
            let hc = heights_computation(group, cli.poly)?;
            println!("group: {}", hc.group);
            println!("splitting prime: {}", hc.prime);
            let degs: Vec<String> = hc
                .degrees
                .iter()
                .map(|(d, k)| format!("{d}×{k}"))
                .collect();
            println!("degrees (degree×count): {}", degs.join(", "));
            let hts: Vec<String> = hc
                .heights
                .iter()
                .map(|(h, k)| format!("{h}: {k}"))
                .collect();
            println!("heights (height: count): {}", hts.join(", "));
            println!("prediction: {:?}", hc.prediction);
            println!("verdict: {:?}", hc.verdict);
            write_json(&cli.json, &to_json(&hc))?;
            Ok(match hc.verdict {
                Verdict::Pass => 0,
                Verdict::Inconclusive => {
                    if cli.strict {
                        1
                    } else {
                        0
                    }
                }
                Verdict::Fail => 1,
            })
        }
        Cmd::NormalSubgroups { group } => {
            let built = build_spec(group, cli.poly)?;
            let g = built.suzuki().ok_or_else(|| {
                Error::Usage("normal-subgroup laws apply to the family groups (A/B/C/D)".into())
            })?;
            let summary = verify_normal_laws_all(g)?;
            println!("group: {}", summary.group);
            println!("normal subgroups: {}", summary.normal_count);
            for (clause, applicable, passed, waived) in &summary.clause_stats {
                println!("clause {clause}: {passed}/{applicable} (waived {waived})");
            }
            for f in &summary.failures {
                println!("failure: {f}");
            }
            write_json(&cli.json, &to_json(&summary))?;
            Ok(if summary.all_hold() { 0 } else { 1 })
        }
        Cmd::Ti { group } => {
            let built = build_spec(group, cli.poly)?;
            let amb = built
                .ambient()
                .ok_or_else(|| Error::Usage("ti applies to sz(8) or su3(4) only".into()))?;
            let rep = ti_check(amb)?;
            println!("group: {}", rep.group);
            println!("sylow order: {}", rep.sylow_order);
            println!("conjugates: {}", rep.conjugates);
            println!("pairwise trivial intersection: {}", rep.ti);
            println!(
                "normalizer order: {} (orbit·stabilizer consistent: {})",
                rep.normalizer_order, rep.orbit_stabilizer_consistent
            );
            write_json(&cli.json, &to_json(&rep))?;
            Ok(if rep.ti && rep.orbit_stabilizer_consistent {
                0
            } else {
                1
            })
        }
        Cmd::Identify { group } => {
            let r = run_suite("identify", Some(group), cli.poly)?;
            print!("{}", r.render_text());
            write_json(&cli.json, &r.to_json())?;
            Ok(r.exit_code(cli.strict))
        }
        Cmd::Catalog => {
            println!("constructible groups:");
            for e in catalog() {
                println!("  {:<22} order {:>6}  — {}", e.spec, e.order, e.constraint);
            }
            println!();
            println!("verification suites:");
            for s in suites() {
                println!("  {:<16} {}", s.name, s.summary);
                println!("  {:<16}   accepts: {}; budget: {}", "", s.accepts, s.budget);
            }
            #[derive(serde::Serialize)]
            struct CatalogDoc {
                groups: Vec<szk_core::catalog::CatalogEntry>,
                suites: Vec<szk_core::catalog::SuiteInfo>,
            }
            write_json(
                &cli.json,
                &to_json(&CatalogDoc {
                    groups: catalog(),
                    suites: suites(),
                }),
            )?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // Die silently on a closed pipe (e.g. `szk catalog | head`) instead of
    // panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let started = Instant::now();
    match run(&cli) {
        Ok(code) => {
            // Wall-clock time goes to the human stream only; report files
            // must be byte-identical across runs.
            eprintln!("elapsed: {:.2?}", started.elapsed());
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
