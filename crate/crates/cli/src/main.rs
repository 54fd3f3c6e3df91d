use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chiefcheck::catalog::{self, GroupExpr};
use chiefcheck::classify::GroupAnalysis;
use chiefcheck::embedding::{self, Verdict};
use chiefcheck::harness::{self, RunOptions, TheoremId};
use chiefcheck::{arith, parse_cycles, subgroup, Error, FiniteGroup, Subgroup, DEFAULT_ELEMENT_CAP};

const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_COUNTEREXAMPLE: u8 = 4;

#[derive(Parser)]
#[command(name = "chiefcheck", version, about = "Chief series and subgroup embedding checks on permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one embedding property of a subgroup.
    Check {
        #[arg(long)]
        group: PathBuf,
        /// Subgroup generators in cycle notation, separated by ';'.
        #[arg(long)]
        subgroup: String,
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: usize,
    },
    /// Class flags and canonical subgroups.
    Invariants {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: usize,
    },
    /// Print a chief series, or all of them up to a limit.
    Chief {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        enumerate_limit: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: usize,
    },
    /// Check the registered theorems over the built-in corpus.
    Verify {
        /// A theorem id, a comma-separated list, or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, default_value_t = 400)]
        max_order: u64,
        #[arg(long)]
        include_example_1875: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = harness::DEFAULT_INSTANCE_LIMIT)]
        instance_limit: usize,
    },
    /// Corpus listing.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long, default_value_t = 400)]
        max_order: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    PartialSPi,
    PartialPi,
    Cap,
    GenCap,
    SQuasinormal,
    SQnEmbedded,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource_cap() { EXIT_CAP } else { EXIT_USAGE })
        }
    }
}

fn load_group(path: &Path, cap: usize) -> chiefcheck::Result<(String, FiniteGroup)> {
    let (name, expr) = catalog::read_group_file(path)?;
    Ok((name, catalog::build(&expr, cap)?))
}

fn parse_subgroup(g: &FiniteGroup, text: &str) -> chiefcheck::Result<Subgroup> {
    let mut seed = Vec::new();
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let perm = parse_cycles(part, g.degree())?;
        let x = g
            .index_of(&perm)
            .ok_or_else(|| Error::NotAnElement(perm.to_string()))?;
        seed.push(x);
    }
    Ok(subgroup::span(g, &seed))
}

fn run(command: Command) -> chiefcheck::Result<u8> {
    match command {
        Command::Check {
            group,
            subgroup: gens,
            property,
            prime,
            format,
            cap,
        } => {
            let (_, g) = load_group(&group, cap)?;
            let h = parse_subgroup(&g, &gens)?;
            let a = GroupAnalysis::new(&g)?;
            let verdict = match property {
                Property::PartialSPi => {
                    let p = match prime {
                        Some(p) => p,
                        None => match arith::prime_divisors(h.order_u64())[..] {
                            [p] => p,
                            _ => {
                                return Err(Error::InvalidArgument(
                                    "--prime is required unless the subgroup is a non-trivial p-group".into(),
                                ))
                            }
                        },
                    };
                    embedding::partial_s_pi(&a, &h, p)?
                }
                Property::PartialPi => embedding::partial_pi(&a, &h)?,
                Property::Cap => embedding::cap(&a, &h)?,
                Property::GenCap => embedding::gen_cap(&a, &h)?,
                Property::SQuasinormal => Verdict {
                    holds: embedding::s_quasinormal(&a, &h)?,
                    witness: None,
                    refutation: None,
                    note: None,
                },
                Property::SQnEmbedded => embedding::s_qn_embedded(&a, &h)?,
            };
            match format {
                Format::Json => {
                    let out = serde_json::json!({
                        "property": property.to_possible_value().unwrap().get_name(),
                        "group_order": g.order(),
                        "subgroup_order": h.order(),
                        "verdict": verdict,
                    });
                    println!("{}", serde_json::to_string_pretty(&out).expect("serialisable"));
                }
                Format::Text => {
                    println!("holds: {}", verdict.holds);
                    let orders = |ids: &[usize]| {
                        ids.iter()
                            .map(|&i| a.lattice().order(i).to_string())
                            .collect::<Vec<_>>()
                            .join(" < ")
                    };
                    if let Some(w) = &verdict.witness {
                        println!("witness series (orders): {}", orders(w));
                    }
                    if let Some(r) = &verdict.refutation {
                        println!(
                            "refuted at factor of orders {} / {}: {}",
                            a.lattice().order(r.upper),
                            a.lattice().order(r.lower),
                            r.clause
                        );
                    }
                    if let Some(n) = &verdict.note {
                        println!("note: {n}");
                    }
                }
            }
            Ok(0)
        }
        Command::Invariants { group, format, cap } => {
            let (name, g) = load_group(&group, cap)?;
            let report = GroupAnalysis::new(&g)?.report()?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serialisable")
                ),
                Format::Text => {
                    println!("{name}: order {}, degree {}", report.order, report.degree);
                    println!(
                        "abelian {} nilpotent {} soluble {} supersoluble {}",
                        report.abelian, report.nilpotent, report.soluble, report.supersoluble
                    );
                    println!("chief factor orders: {:?}", report.chief_factor_orders);
                    for (label, s) in [
                        ("Z(G)", &report.center),
                        ("Z_inf(G)", &report.hypercentre),
                        ("Z_U(G)", &report.u_hypercentre),
                        ("F(G)", &report.fitting),
                        ("F*(G)", &report.f_star),
                        ("G'", &report.derived_subgroup),
                        ("G^N", &report.nilpotent_residual),
                    ] {
                        println!("{label:<9} order {}", s.order);
                    }
                    for p in &report.primes {
                        println!(
                            "p={}: p-soluble {} p-supersoluble {} p-nilpotent {}; |Sylow| {} (x{}), O_p {}, O_p' {}, F_p {}",
                            p.p,
                            p.p_soluble,
                            p.p_supersoluble,
                            p.p_nilpotent,
                            p.sylow.order,
                            p.sylow_count,
                            p.o_p.order,
                            p.o_p_prime.order,
                            p.f_p.order
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Chief {
            group,
            enumerate_limit,
            cap,
        } => {
            let (name, g) = load_group(&group, cap)?;
            let lattice = chiefcheck::normal::normal_lattice(&g)?;
            let series = match enumerate_limit {
                Some(limit) => lattice.chief_series_enumerate(limit)?,
                None => vec![lattice.some_chief_series()],
            };
            println!("{name}: {} normal subgroups", lattice.len());
            for s in series {
                let orders: Vec<String> = s.chain.iter().map(|&i| lattice.order(i).to_string()).collect();
                println!("{}   factors {:?}", orders.join(" < "), s.factor_orders);
            }
            Ok(0)
        }
        Command::Verify {
            theorem,
            max_order,
            include_example_1875,
            jobs,
            out,
            instance_limit,
        } => {
            let opts = RunOptions {
                theorems: TheoremId::parse_list(&theorem)?,
                max_order,
                include_1875: include_example_1875,
                jobs,
                instance_limit,
                ..RunOptions::default()
            };
            let report = harness::run_corpus(&opts)?;
            report.write_json(&out)?;
            for t in &report.theorems {
                println!(
                    "{:<9} instances {:>6}  vacuous {:>6}  confirmed {:>6}  counterexamples {}",
                    t.id.as_str(),
                    t.instances,
                    t.vacuous,
                    t.confirmed,
                    t.counterexamples
                );
            }
            println!(
                "{} groups, {} ms, report written to {}",
                report.corpus.group_count,
                report.timing_ms,
                out.display()
            );
            Ok(if report.counterexamples() > 0 {
                EXIT_COUNTEREXAMPLE
            } else {
                0
            })
        }
        Command::Catalog {
            action: CatalogAction::List { max_order },
        } => {
            let entries: Vec<(String, GroupExpr)> = catalog::corpus_entries()
                .into_iter()
                .filter(|(_, e)| e.expected_order().is_some_and(|o| o <= max_order))
                .collect();
            for (name, e) in entries {
                println!("{name:<12} {:>5}  {e}", e.expected_order().unwrap());
            }
            let big = catalog::order_1875_group();
            println!(
                "{:<12} {:>5}  {big}  (with --include-example-1875)",
                catalog::ORDER_1875_NAME,
                1875
            );
            Ok(0)
        }
    }
}
