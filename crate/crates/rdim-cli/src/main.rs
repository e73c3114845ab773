//! Command-line driver: ingest group specs, run the pipeline, verify the
//! named checks, and emit reports.
//!
//! Exit codes: 0 all checks pass, 1 a check FAILED (a finding worth reading),
//! 2 usage or resource errors.

use clap::{Parser, Subcommand};
use rdim::classes::conjugacy_classes;
use rdim::corpus::{standard_corpus, CorpusEntry};
use rdim::cyclotomic::CycInt;
use rdim::group::{canonical_table_json, load_group, parse_spec, GroupSpec, LoadLimits};
use rdim::harness::{
    analyze, run_check, survey, survey_csv, Cache, CheckId, CheckReport, HarnessOptions,
    LoadLimitsOpt,
};
use rdim::solver::SolverConfig;
use rdim::structure::{
    abelian_invariants, center, minimal_normal_subgroups, nilpotency_class, socle_decomposition,
    Subgroup,
};
use rdim::theorems::{check_theorem_e, check_theorem_f, JordanBound, Outcome};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rdim", version, about = "Exact representation dimension toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cache directory for verified tables and certificates
    /// (default: $RDIM_CACHE_DIR when set).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Largest group order the loader accepts.
    #[arg(long, global = true, default_value_t = 10_000)]
    max_order: usize,

    /// Branch-and-bound node budget before the solver reports exhaustion.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    node_limit: u64,

    /// Worker threads for corpus runs (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Include corpus entries flagged slow.
    #[arg(long, global = true)]
    slow: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Order, center, socle, and minimal normal subgroups of a group.
    Info { spec: PathBuf },
    /// Exact character table dump.
    Chartab { spec: PathBuf },
    /// Representation dimension with its certificate.
    Rdim { spec: PathBuf },
    /// Run a named check (A, B, C, D, E, F, cal, camina) on a spec or the corpus.
    Verify {
        check: String,
        spec: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
    },
    /// Full corpus survey as CSV.
    Survey {
        #[arg(long)]
        corpus: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cache maintenance.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
    /// Corpus listing and export.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Stats,
    Clear,
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    Export { dir: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn options(cli: &Cli) -> HarnessOptions {
    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("RDIM_CACHE_DIR").map(PathBuf::from));
    HarnessOptions {
        limits: LoadLimitsOpt(LoadLimits {
            max_order: cli.max_order,
        }),
        solver: SolverConfig {
            node_limit: cli.node_limit,
        },
        cache_dir,
        include_slow: cli.slow,
        jobs: cli.jobs,
    }
}

fn load_spec_file(path: &Path) -> anyhow::Result<GroupSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    Ok(parse_spec(&text)?)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let opts = options(&cli);
    match &cli.command {
        Command::Info { spec } => {
            let spec = load_spec_file(spec)?;
            cmd_info(&spec, &opts)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Chartab { spec } => {
            let spec = load_spec_file(spec)?;
            cmd_chartab(&spec, &opts)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Rdim { spec } => {
            let spec = load_spec_file(spec)?;
            cmd_rdim(&spec, &opts)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { check, spec, corpus } => {
            let check: CheckId = check.parse()?;
            let report = if *corpus || matches!(check, CheckId::Cal) {
                run_check(check, &standard_corpus()?, &opts)?
            } else {
                let path = spec
                    .as_ref()
                    .ok_or_else(|| anyhow::anyhow!("verify needs a spec file or --corpus"))?;
                let parsed = load_spec_file(path)?;
                let entry = CorpusEntry {
                    id: path.display().to_string(),
                    spec: parsed,
                    slow: false,
                };
                verify_single(check, &entry, &opts)?
            };
            for line in &report.lines {
                println!("{line}");
            }
            println!(
                "verify {:?}: {} passed, {} failed, {} skipped",
                check, report.passed, report.failed, report.skipped
            );
            if report.failed > 0 {
                println!("CHECK FAILED: see the lines above for the offending instances");
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Survey { corpus, out } => {
            if !corpus {
                anyhow::bail!("survey currently runs on the corpus; pass --corpus");
            }
            let rows = survey(&standard_corpus()?, &opts);
            let csv = survey_csv(&rows);
            match out {
                Some(path) => std::fs::write(path, &csv)?,
                None => print!("{csv}"),
            }
            let failures = rows
                .iter()
                .filter(|r| {
                    r.error.is_some()
                        || [&r.thm_a, &r.thm_b, &r.thm_c, &r.thm_d, &r.thm_rank, &r.camina]
                            .iter()
                            .any(|v| v.contains("FAIL") || v.contains("DISAGREE"))
                })
                .count();
            if failures > 0 {
                eprintln!("{failures} survey rows contain failures");
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Cache { action } => {
            let dir = opts
                .cache_dir
                .clone()
                .ok_or_else(|| anyhow::anyhow!("no cache directory (set --cache-dir or RDIM_CACHE_DIR)"))?;
            let cache = Cache::new(dir);
            match action {
                CacheAction::Stats => {
                    let (files, bytes) = cache.stats()?;
                    println!("{files} files, {bytes} bytes");
                }
                CacheAction::Clear => {
                    let removed = cache.clear()?;
                    println!("removed {removed} files");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { action } => {
            match action {
                CorpusAction::List => {
                    for e in standard_corpus()? {
                        let g = load_group(&e.spec, &LoadLimits { max_order: 100_000 })?;
                        println!(
                            "{}\t|G| = {}{}",
                            e.id,
                            g.order(),
                            if e.slow { "\t(slow)" } else { "" }
                        );
                    }
                }
                CorpusAction::Export { dir } => {
                    std::fs::create_dir_all(dir)?;
                    let mut count = 0;
                    for e in standard_corpus()? {
                        if e.slow && !cli.slow {
                            continue;
                        }
                        let g = load_group(&e.spec, &LoadLimits { max_order: 100_000 })?;
                        let path = dir.join(format!("{}.json", e.id));
                        std::fs::write(&path, canonical_table_json(&g))?;
                        count += 1;
                    }
                    println!("exported {count} group specs to {}", dir.display());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_info(spec: &GroupSpec, opts: &HarnessOptions) -> anyhow::Result<()> {
    let g = load_group(spec, &LoadLimits::default())?;
    let _ = opts;
    println!("order: {}", g.order());
    println!("exponent: {}", g.exponent());
    println!("abelian: {}", g.is_abelian());
    if let Some((p, n)) = g.p_group() {
        println!("p-group: {p}^{n}");
        if let Some(c) = nilpotency_class(&g) {
            println!("nilpotency class: {c}");
        }
    }
    let z = center(&g);
    println!("center: order {}", z.order());
    if g.is_abelian() {
        let inv = abelian_invariants(&g)?;
        println!(
            "abelian invariants: {} (rank {})",
            inv.divisors
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" | "),
            inv.rank
        );
    }
    let cd = conjugacy_classes(&g)?;
    println!("conjugacy classes: {}", cd.count());
    let minimals = minimal_normal_subgroups(&g, &cd);
    println!(
        "minimal normal subgroups: {} with orders [{}]",
        minimals.len(),
        minimals
            .iter()
            .map(|m| m.order().to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    if g.order() > 1 {
        let soc = socle_decomposition(&g, &cd)?;
        println!(
            "socle: order {} = nonabelian part {} x abelian factors {:?}",
            soc.socle.order(),
            soc.nonabelian_part.order(),
            soc.abelian_orders
        );
    }
    Ok(())
}

fn format_value(v: &CycInt) -> String {
    if let Some(n) = v.as_int() {
        return n.to_string();
    }
    let mut terms = Vec::new();
    for (i, &c) in v.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{i}"),
        };
        let term = match (c, i) {
            (1, _) if i > 0 => var,
            (-1, _) if i > 0 => format!("-{var}"),
            _ if i == 0 => c.to_string(),
            _ => format!("{c}{var}"),
        };
        terms.push(term);
    }
    terms.join("+").replace("+-", "-")
}

fn cmd_chartab(spec: &GroupSpec, opts: &HarnessOptions) -> anyhow::Result<()> {
    let a = analyze("cli", spec, opts)?;
    let t = &a.table;
    println!(
        "order {} | {} classes | exponent {} | field prime {}",
        a.group.order(),
        a.classes.count(),
        t.exponent(),
        t.dixon_prime()
    );
    println!(
        "class sizes: [{}]  (z = a primitive {}th root of unity)",
        a.classes
            .sizes()
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(", "),
        t.exponent()
    );
    for (i, row) in t.rows().iter().enumerate() {
        let values = row
            .values
            .iter()
            .map(format_value)
            .collect::<Vec<_>>()
            .join(", ");
        println!("chi_{i} (degree {}): {values}", row.degree);
    }
    Ok(())
}

fn cmd_rdim(spec: &GroupSpec, opts: &HarnessOptions) -> anyhow::Result<()> {
    let a = analyze("cli", spec, opts)?;
    println!("rdim = {}", a.rdim);
    let cert = &a.certificate;
    println!(
        "certificate: rows {:?} with degrees {:?} (table {})",
        cert.rows, cert.degrees, cert.table_hash
    );
    for (m, row) in &cert.witness {
        println!(
            "  minimal normal #{m} (order {}) excluded by row {row}",
            a.minimals[*m].order()
        );
    }
    Ok(())
}

/// Single-spec variant of verify: A-D and camina run directly; E and F run
/// over the canonical normal subgroups of the group.
fn verify_single(check: CheckId, entry: &CorpusEntry, opts: &HarnessOptions) -> anyhow::Result<CheckReport> {
    use rdim::theorems as thm;
    let mut report = CheckReport::default();
    match check {
        CheckId::E | CheckId::F => {
            let a = analyze(&entry.id, &entry.spec, opts)?;
            let g = &a.group;
            let mut subs = vec![
                Subgroup::trivial(g),
                center(g),
                rdim::structure::derived_subgroup(g),
                Subgroup::full(g),
            ];
            let cd = conjugacy_classes(g)?;
            if g.order() > 1 {
                subs.push(socle_decomposition(g, &cd)?.socle);
            }
            let mut seen = std::collections::HashSet::new();
            subs.retain(|s| seen.insert(s.elements().to_vec()));
            for n_sub in &subs {
                if check == CheckId::E {
                    let r = check_theorem_e(g, n_sub, &JordanBound::default(), &opts.solver)?;
                    let line = format!(
                        "|N| = {}: rdim(G/N) = {} <= {} : {}",
                        n_sub.order(),
                        r.rdim_quotient,
                        r.bound,
                        r.holds
                    );
                    report.record(line, if r.holds { Outcome::Pass } else { Outcome::Fail });
                } else {
                    match check_theorem_f(g, n_sub, &opts.solver) {
                        Ok(r) => {
                            let line = format!(
                                "|N| = {}: rdim(G/N) = {} <= {} : {}",
                                n_sub.order(),
                                r.rdim_quotient,
                                r.bound,
                                r.holds
                            );
                            report.record(line, if r.holds { Outcome::Pass } else { Outcome::Fail });
                        }
                        Err(rdim::Error::NotAbelian) => {
                            report.record(
                                format!("|N| = {}: skipped (quotient not abelian)", n_sub.order()),
                                Outcome::Skipped,
                            );
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
            }
        }
        CheckId::Cal => unreachable!("cal never takes a spec"),
        _ => {
            let a = analyze(&entry.id, &entry.spec, opts)?;
            let g = &a.group;
            let t = &a.table;
            if g.order() == 1 {
                report.record("trivial group: skipped".into(), Outcome::Skipped);
                return Ok(report);
            }
            let v = match check {
                CheckId::A => Some(thm::classify_theorem_a(g, t, a.rdim)?),
                CheckId::B => Some(thm::check_theorem_b(g, t, a.rdim)?),
                CheckId::C => match g.p_group() {
                    Some((2, _)) => Some(thm::check_theorem_c(g, t, a.rdim)?),
                    _ => None,
                },
                CheckId::D => match g.p_group() {
                    Some((p, _)) if p > 2 => Some(thm::check_theorem_d(g, t, a.rdim)?),
                    _ => None,
                },
                CheckId::Camina => {
                    if center(g).order() == 1 {
                        report.record("trivial center: skipped".into(), Outcome::Skipped);
                        return Ok(report);
                    }
                    let pair = thm::is_camina_pair(g, &a.classes);
                    let ramified = thm::all_fully_ramified_over_center(t)?;
                    let outcome = if pair == ramified { Outcome::Pass } else { Outcome::Fail };
                    report.record(
                        format!("camina = {pair}, fully ramified = {ramified}"),
                        outcome,
                    );
                    return Ok(report);
                }
                _ => unreachable!(),
            };
            match v {
                Some(v) => {
                    let line = format!(
                        "{}: branch {} {:?} (rdim = {}, |G| = {})",
                        entry.id,
                        v.branch,
                        v.outcome,
                        a.rdim,
                        g.order()
                    );
                    report.record(line, v.outcome);
                }
                None => report.record(
                    format!("{}: check does not apply to this group", entry.id),
                    Outcome::Skipped,
                ),
            }
        }
    }
    Ok(report)
}
