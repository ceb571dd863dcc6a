//! Command-line front end: tableau rendering, derived-set computation,
//! supercharacter decomposition, oracle cross-checks and the rank-12 suite.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use superpattern::basicset::{derived_sets, w_matrix, BasicSet};
use superpattern::charfn::ClassFunction;
use superpattern::error::Error;
use superpattern::render;
use superpattern::scalars::{parse_fq_config, FqCtx};
use superpattern::superdecomp::{
    census, ladder_certificate, orthogonality_check, partition_check, Strategy,
};
use superpattern::tables::{character_table, Budgets};
use superpattern::u13;
use superpattern::unigroup::{EnumeratedGroup, PatternGroup, UniCtx};

#[derive(Parser)]
#[command(name = "superpattern", version, about)]
struct Cli {
    /// Output format: text or json.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Worker threads (0 = library default).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArgs {
    /// Field size q = p^f (built-in modulus table).
    #[arg(long, short)]
    q: Option<u32>,
    /// Characteristic, used with --f (and optionally --modulus).
    #[arg(long)]
    p: Option<u32>,
    /// Extension degree.
    #[arg(long)]
    f: Option<u32>,
    /// Modulus coefficients, constant-first, comma-separated.
    #[arg(long)]
    modulus: Option<String>,
}

impl FieldArgs {
    fn build(&self) -> Result<Arc<FqCtx>, Error> {
        match (self.q, self.p, self.f) {
            (Some(q), None, None) => Ok(Arc::new(FqCtx::for_order(q)?)),
            (None, Some(p), Some(f)) => {
                let spec = match &self.modulus {
                    Some(m) => format!("p={p} f={f} modulus={m}"),
                    None => format!("p={p} f={f}"),
                };
                Ok(Arc::new(parse_fq_config(&spec)?))
            }
            _ => Err(Error::Invalid("specify either --q or --p with --f".into())),
        }
    }
}

#[derive(Args)]
struct BudgetArgs {
    /// Element budget for group enumeration (env ENUM_BUDGET).
    #[arg(long)]
    enum_budget: Option<u64>,
    /// Element budget for character tables (env TABLE_BUDGET).
    #[arg(long)]
    table_budget: Option<u64>,
}

impl BudgetArgs {
    fn build(&self) -> Budgets {
        let mut b = Budgets::from_env();
        if let Some(v) = self.enum_budget {
            b.enum_elements = v;
        }
        if let Some(v) = self.table_budget {
            b.table_elements = v;
        }
        b
    }
}

#[derive(Subcommand)]
enum Command {
    /// Render the root tableau with a basic set and its interaction roots.
    Tableau {
        #[arg(long)]
        n: u8,
        /// Basic set, e.g. 1-4,2-5,5-6.
        #[arg(long = "D")]
        d: String,
    },
    /// Monomial matrix and interaction roots of a basic set.
    Derived {
        #[arg(long)]
        n: u8,
        #[arg(long = "D")]
        d: String,
    },
    /// Constituent census of the supercharacter attached to (D, phi).
    Decompose {
        #[arg(long)]
        n: u8,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "D")]
        d: String,
        /// Nonzero scalars, positional over D in column order (default all 1).
        #[arg(long)]
        phi: Option<String>,
        #[arg(long, default_value = "auto")]
        strategy: String,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Every nonprincipal irreducible lies in exactly one supercharacter.
    PartitionCheck {
        #[arg(long)]
        n: u8,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Full irreducible character table of U_n(q) or a pattern subgroup.
    OracleTable {
        #[arg(long)]
        n: u8,
        #[command(flatten)]
        field: FieldArgs,
        /// Closed support of a pattern subgroup (default: all roots).
        #[arg(long)]
        support: Option<String>,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// The rank-12 sample decomposition.
    U13 {
        #[command(subcommand)]
        sub: U13Command,
    },
    /// Condensed self-verification; exit code 0 iff all assertions pass.
    Selftest {
        /// quick or full.
        #[arg(long, default_value = "quick")]
        level: String,
        #[arg(long, default_value_t = 0xc0ffee)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum U13Command {
    /// Constituent census: symbolic in q, or evaluated at a concrete q.
    Census {
        #[arg(long, short)]
        q: Option<u32>,
        #[arg(long, default_value_t = false)]
        symbolic: bool,
    },
    /// Verify every branch of the decomposition tree at a concrete q.
    Verify {
        #[arg(long, short)]
        q: u32,
        /// Sampled value tuples per branch when exhaustion is infeasible.
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, default_value_t = 12345)]
        seed: u64,
    },
    /// The non-real constituent pair at q = 2^f.
    Irrational {
        #[arg(long, short)]
        f: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if cli.format == "json" {
                println!(
                    "{}",
                    json!({ "error": e.to_string(), "budget": e.is_budget() })
                );
            } else {
                eprintln!("error: {e}");
            }
            if e.is_budget() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let json_out = cli.format == "json";
    match &cli.command {
        Command::Tableau { n, d } => {
            let d = BasicSet::parse(*n, d)?;
            if json_out {
                let m = render::marks_for(&d);
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "n": d.n,
                        "D": d.to_string(),
                        "gamma": m.gamma.to_string(),
                        "nu": m.nu.to_string(),
                        "rendered": render::tableau(&d),
                    }))
                    .unwrap()
                );
            } else {
                print!("{}", render::tableau(&d));
            }
        }
        Command::Derived { n, d } => {
            let d = BasicSet::parse(*n, d)?;
            let ds = derived_sets(&d);
            let w = w_matrix(&d);
            let gamma: Vec<String> = ds.gamma.values().map(|r| r.to_string()).collect();
            let nu: Vec<String> = ds.nu.values().map(|r| r.to_string()).collect();
            if json_out {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "n": d.n,
                        "D": d.to_string(),
                        "wD": w.matrix(),
                        "gamma": gamma,
                        "nu": nu,
                        "delta_size": ds.delta_set().len(),
                    }))
                    .unwrap()
                );
            } else {
                println!("D = {d} (n = {})", d.n);
                println!("w_D =");
                for row in w.matrix() {
                    println!(
                        "  {}",
                        row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
                    );
                }
                println!("Gamma_D = {}", gamma.join(","));
                println!("Lambda_D = {}", nu.join(","));
            }
        }
        Command::Decompose { n, field, d, phi, strategy, budgets } => {
            let fq = field.build()?;
            let d = BasicSet::parse(*n, d)?;
            let phi: Vec<u8> = match phi {
                Some(t) => t
                    .split(',')
                    .map(|x| x.trim().parse::<u8>().map_err(|e| Error::Parse(e.to_string())))
                    .collect::<Result<_, _>>()?,
                None => vec![1; d.k()],
            };
            let strategy: Strategy = strategy.parse()?;
            let c = census(&fq, &d, &phi, strategy, &budgets.build())?;
            if json_out {
                println!("{}", serde_json::to_string_pretty(&c).unwrap());
            } else {
                println!(
                    "census for D = {} over F_{} (strategy {}):",
                    c.d, c.q, c.strategy
                );
                for rec in &c.records {
                    println!(
                        "  degree q^{} x multiplicity q^{}, count {}{}",
                        rec.degree_exp,
                        rec.mult_exp,
                        rec.count,
                        match rec.rational {
                            Some(true) => " (rational)",
                            Some(false) => " (irrational)",
                            None => "",
                        }
                    );
                }
                println!(
                    "  [U:V_D R_D] = q^{}, supercharacter degree q^{}",
                    c.index_exp, c.lambda_deg_exp
                );
            }
        }
        Command::PartitionCheck { n, field, budgets } => {
            let fq = field.build()?;
            let rep = partition_check(&fq, *n, &budgets.build())?;
            if json_out {
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                println!(
                    "U_{}({}) with {} classes, {} supercharacters, {} nonprincipal irreducibles: {}",
                    rep.n,
                    rep.q,
                    rep.class_count,
                    rep.supercharacter_count,
                    rep.nonprincipal,
                    if rep.ok { "each covered exactly once (PASS)" } else { "FAIL" }
                );
            }
            if !rep.ok {
                return Err(Error::Inconsistency("partition check failed".into()));
            }
        }
        Command::OracleTable { n, field, support, budgets } => {
            let fq = field.build()?;
            let ctx = UniCtx::new(fq, *n);
            let pattern = match support {
                Some(text) => {
                    PatternGroup::new(superpattern::roots::RootSet::parse(*n, text)?)?
                }
                None => PatternGroup::full(*n),
            };
            let b = budgets.build();
            let g = EnumeratedGroup::pattern(&ctx, &pattern, b.enum_elements)?;
            let t = character_table(&g, &b)?;
            print_table(&t, &g, json_out);
        }
        Command::U13 { sub } => run_u13(sub, json_out)?,
        Command::Selftest { level, seed } => return selftest(level, *seed, json_out),
    }
    Ok(())
}

fn print_table(
    t: &superpattern::tables::CharacterTable,
    g: &Arc<EnumeratedGroup>,
    json_out: bool,
) {
    if json_out {
        println!("{}", serde_json::to_string_pretty(&t.to_json()).unwrap());
    } else {
        println!("group of order {} with {} classes", g.order(), g.class_count());
        for chi in &t.irreducibles {
            let vals: Vec<String> = chi.values.iter().map(|v| v.to_string()).collect();
            println!("  deg {}: [{}]", chi.degree_int().unwrap(), vals.join(", "));
        }
    }
}

fn run_u13(sub: &U13Command, json_out: bool) -> Result<(), Error> {
    match sub {
        U13Command::Census { q, symbolic } => {
            let c = u13::census_symbolic()?;
            if *symbolic || q.is_none() {
                if json_out {
                    println!("{}", serde_json::to_string_pretty(&c).unwrap());
                } else {
                    println!("constituent families of the reduced problem (degree at R level):");
                    for (e, p) in &c.families {
                        println!("  degree q^{e} x mult q^{e}: count {p}");
                    }
                    println!("reference closed forms:");
                    for ((e, p), ok) in c.reference.iter().zip(&c.family_matches) {
                        println!(
                            "  degree q^{e}: {p}  [{}]",
                            if *ok { "matches" } else { "DIFFERS from the verified ledger" }
                        );
                    }
                    println!(
                        "mass identity sum(count*deg*mult) = q^15: {}",
                        if c.mass_ok { "holds" } else { "FAILS" }
                    );
                    println!(
                        "at q = 2: {:?}, total {}",
                        c.counts_at_2, c.total_at_2
                    );
                }
            }
            if let Some(qv) = q {
                let rows: Vec<_> = c
                    .families
                    .iter()
                    .map(|(e, p)| (e, p.eval(*qv as i64)))
                    .collect();
                if json_out {
                    let list: Vec<_> = rows
                        .iter()
                        .map(|(e, v)| json!({"degree_exp": e, "count": v}))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&json!({"q": qv, "families": list})).unwrap());
                } else {
                    println!("evaluated at q = {qv}:");
                    for (e, v) in rows {
                        println!("  degree q^{e} (= {}): count {v}", (*qv as u64).pow(*e));
                    }
                }
            }
        }
        U13Command::Verify { q, samples, seed } => {
            let fq = Arc::new(FqCtx::for_order(*q)?);
            let ledger = u13::verify_cases(&fq, *samples, *seed)?;
            if json_out {
                println!("{}", serde_json::to_string_pretty(&ledger).unwrap());
            } else {
                println!("all branch verifications passed at q = {q}:");
                for line in &ledger.verified {
                    println!("  - {line}");
                }
                for b in &ledger.branches {
                    println!(
                        "  {}: degree q^{}, count {}",
                        b.name, b.degree_exp, b.count
                    );
                }
                println!(
                    "nilpotency class: {} (full reduction), {} (final case)",
                    ledger.nilpotency.0, ledger.nilpotency.1
                );
            }
        }
        U13Command::Irrational { f } => {
            let rep = u13::irrational_pair(*f)?;
            if json_out {
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                println!("q = {}: x(a) has order {} for every nonzero a", rep.q, rep.x_order);
                println!("a_0 = {} gives extension values {:?}", rep.a0, rep.extension_values);
                println!(
                    "induced values at the distinguished element: {:?} (conjugate pair: {}, non-real: {})",
                    rep.induced_values, rep.induced_conjugate_pair, rep.induced_nonreal
                );
                println!(
                    "branch count {} of ambient degree q^{}; not-well-induced total {}",
                    rep.branch_count, rep.degree_exp_ambient, rep.not_well_induced_total
                );
            }
        }
    }
    Ok(())
}

fn selftest(level: &str, seed: u64, json_out: bool) -> Result<(), Error> {
    let full = level == "full";
    let mut results: Vec<(String, bool, String)> = Vec::new();
    let mut record = |name: &str, r: Result<String, Error>| {
        match r {
            Ok(note) => results.push((name.into(), true, note)),
            Err(e) => results.push((name.into(), false, e.to_string())),
        }
    };

    record("combinatorics", selftest_combinatorics());
    record("orthogonality-u4-2", {
        let fq = Arc::new(FqCtx::for_order(2)?);
        orthogonality_check(&fq, 4, &Budgets::from_env())
            .map(|n| format!("{n} supercharacters pairwise orthogonal"))
    });
    record("partition-u3-u4", {
        (|| {
            for q in [2u32, 3] {
                let fq = Arc::new(FqCtx::for_order(q)?);
                for n in [3u8, 4] {
                    let rep = partition_check(&fq, n, &Budgets::from_env())?;
                    if !rep.ok {
                        return Err(Error::Inconsistency(format!("U_{n}({q})")));
                    }
                }
            }
            Ok("U_3, U_4 over F_2 and F_3".to_string())
        })()
    });
    record("sample-families", selftest_sample_families());
    record("u13-ledger", {
        u13::census_symbolic().map(|c| {
            format!(
                "mass {} / reference families matching: {:?}",
                if c.mass_ok { "ok" } else { "BAD" },
                c.family_matches
            )
        })
    });
    record("u13-irrational", {
        u13::irrational_pair(1).map(|r| {
            format!(
                "pair of non-real constituents: {} of degree exponent {}",
                r.branch_count, r.degree_exp_ambient
            )
        })
    });
    if full {
        record("partition-u5-2", {
            let fq = Arc::new(FqCtx::for_order(2)?);
            partition_check(&fq, 5, &Budgets::from_env()).and_then(|rep| {
                if rep.ok {
                    Ok(format!("{} classes", rep.class_count))
                } else {
                    Err(Error::Inconsistency("U_5(2) coverage".into()))
                }
            })
        });
        record("u13-verify-q3", {
            let fq = Arc::new(FqCtx::for_order(3)?);
            u13::verify_cases(&fq, 8, seed).map(|l| format!("{} branches", l.branches.len()))
        });
    }

    let ok = results.iter().all(|(_, pass, _)| *pass);
    if json_out {
        let list: Vec<_> = results
            .iter()
            .map(|(n, p, note)| json!({"check": n, "pass": p, "note": note}))
            .collect();
        println!("{}", serde_json::to_string_pretty(&json!({"pass": ok, "checks": list})).unwrap());
    } else {
        for (n, p, note) in &results {
            println!("{}: {n} — {note}", if *p { "PASS" } else { "FAIL" });
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Error::Inconsistency("selftest failures".into()))
    }
}

fn selftest_combinatorics() -> Result<String, Error> {
    use superpattern::roots::RootSet;
    let d = BasicSet::parse(6, "2-3,1-4,3-5")?;
    let w = w_matrix(&d);
    if w.matrix() != vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]] {
        return Err(Error::Inconsistency("monomial matrix example".into()));
    }
    let d7 = BasicSet::parse(7, "1-2,3-4,4-5,2-6")?;
    let ds = derived_sets(&d7);
    if ds.gamma_set() != RootSet::parse(7, "1-1,1-2,1-3,3-3")?
        || ds.nu_set() != RootSet::parse(7, "2-2,2-3")?
    {
        return Err(Error::Inconsistency("interaction roots example".into()));
    }
    ladder_certificate(&d7)?;
    Ok("printed examples reproduced".into())
}

fn selftest_sample_families() -> Result<String, Error> {
    use superpattern::basicset::{d1_family, d2_family};
    for (k, n, q) in [(2u8, 5u8, 2u32), (2, 5, 3), (3, 7, 2)] {
        let fq = Arc::new(FqCtx::for_order(q)?);
        let d = d1_family(k, n)?;
        let c = census(&fq, &d, &vec![1; d.k()], Strategy::Auto, &Budgets::from_env())?;
        if c.total_count() != 1 || c.records[0].mult_exp != (k - 1) as u32 {
            return Err(Error::Inconsistency(format!("first family at ({k},{n},{q})")));
        }
    }
    for (m, n, q) in [(1u8, 3u8, 2u32), (1, 3, 3), (2, 5, 2)] {
        let fq = Arc::new(FqCtx::for_order(q)?);
        let d = d2_family(m, n)?;
        let c = census(&fq, &d, &vec![1; d.k()], Strategy::Auto, &Budgets::from_env())?;
        if c.total_count() != 1 {
            return Err(Error::Inconsistency(format!("second family at ({m},{n},{q})")));
        }
    }
    let _ = ClassFunction::trivial;
    Ok("single-constituent families verified".into())
}
