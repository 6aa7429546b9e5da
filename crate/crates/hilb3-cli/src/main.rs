use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use hilb3::bounds::{self, IdealRecord, ScanOpts, VerificationReport};
use hilb3::cache::TangentCache;
use hilb3::checks::{self, CheckParams};
use hilb3::enumerate;
use hilb3::lattice::{parse_ideal, render_monomial3, Staircase2, Staircase3};
use hilb3::{hom2d, svg, tangent3d};

mod output;

use output::Format;

/// Staircase toolkit: tangent spaces of Hilbert schemes of points on affine
/// 3-space at monomial ideals, 2-variable hom calculus, Borel-fixed
/// enumeration, and exhaustive bound verification.
#[derive(Parser)]
#[command(name = "hilb3", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

const EXIT_OK: u8 = 0;
const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Subcommand)]
enum Command {
    /// Tangent-space dimension and bound chain for one ideal.
    Tangent(TangentArgs),
    /// Graded hom analysis for a pair of ideals in y and z.
    Hom2d(Hom2dArgs),
    /// Stream all Borel-fixed ideals of a colength.
    Enumerate(EnumerateArgs),
    /// Run a named verification check (see `hilb3 checks`).
    Verify(VerifyArgs),
    /// List the registered verification checks.
    Checks,
    /// Render a staircase diagram (or a pair with ghost arrows) as SVG.
    Figure(FigureArgs),
    /// Merge verification reports from sharded runs.
    Merge(MergeArgs),
}

#[derive(Args)]
struct TangentArgs {
    /// Generator list, e.g. "x^2,y^2,z^3,xz,yz^2,xy".
    ideal: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Print the per-degree certificate trace.
    #[arg(long)]
    trace: bool,
    /// Tangent cache file (defaults to $HILB3_CACHE when set).
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Include elapsed time in the output.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct Hom2dArgs {
    /// First ideal (maps out of it), in y and z.
    ideal: String,
    /// Second ideal (maps into its quotient), in y and z.
    other: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Dump one line per (shift, component).
    #[arg(long)]
    dump: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    colength: usize,
    /// Restrict to shard I of N, written I/N.
    #[arg(long, value_parser = parse_shard)]
    shard: Option<(u64, u64)>,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check name: bound, conjecture, necessary, monotonicity, m1-bound.
    check: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    colength: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    /// Worker threads (0 = automatic).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Restrict to shard I of N, written I/N.
    #[arg(long, value_parser = parse_shard)]
    shard: Option<(u64, u64)>,
    /// Tangent cache file (defaults to $HILB3_CACHE when set).
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Include elapsed times in the output.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct FigureArgs {
    /// Ideal to draw; with a second ideal, draws the pair with ghost arrows.
    ideal: String,
    other: Option<String>,
    /// Output path; stdout when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MergeArgs {
    /// Files whose last nonempty line is a report JSON (as produced by
    /// `verify --format records`).
    reports: Vec<PathBuf>,
}

fn parse_shard(text: &str) -> Result<(u64, u64), String> {
    let (index, count) = text
        .split_once('/')
        .ok_or_else(|| "expected I/N".to_string())?;
    let index: u64 = index.trim().parse().map_err(|_| "bad shard index")?;
    let count: u64 = count.trim().parse().map_err(|_| "bad shard count")?;
    if count == 0 || index >= count {
        return Err(format!("shard {index}/{count} out of range"));
    }
    Ok((index, count))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_USAGE
        }
    };
    ExitCode::from(code)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Tangent(args) => cmd_tangent(args),
        Command::Hom2d(args) => cmd_hom2d(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Checks => cmd_checks(),
        Command::Figure(args) => cmd_figure(args),
        Command::Merge(args) => cmd_merge(args),
    }
}

fn open_cache(flag: Option<PathBuf>) -> anyhow::Result<Option<Arc<TangentCache>>> {
    let path = flag.or_else(|| std::env::var_os("HILB3_CACHE").map(PathBuf::from));
    match path {
        Some(path) => Ok(Some(Arc::new(TangentCache::open(&path)?))),
        None => Ok(None),
    }
}

fn parse_staircase3(text: &str) -> anyhow::Result<Staircase3> {
    let parsed = parse_ideal(text)?;
    for dropped in &parsed.dropped {
        eprintln!(
            "warning: dropped non-minimal generator {}",
            render_monomial3(dropped)
        );
    }
    Ok(parsed.to_staircase3()?)
}

fn parse_staircase2(text: &str) -> anyhow::Result<Staircase2> {
    let parsed = parse_ideal(text)?;
    for dropped in &parsed.dropped {
        eprintln!(
            "warning: dropped non-minimal generator {}",
            render_monomial3(dropped)
        );
    }
    Ok(parsed.to_staircase2()?)
}

fn cmd_tangent(args: TangentArgs) -> anyhow::Result<u8> {
    let started = std::time::Instant::now();
    let ideal = parse_staircase3(&args.ideal)?;
    let cache = open_cache(args.cache)?;
    let mut record = bounds::ideal_record(&ideal, cache.as_deref());
    if args.timings {
        record.elapsed_ms = Some(started.elapsed().as_millis() as u64);
    }

    match args.format {
        Format::Table => {
            let (m1, m2, m3) = ideal.pure_exponents();
            println!("ideal: {}", record.ideal);
            println!("l: {}", record.l);
            println!("m: ({m1}, {m2}, {m3})");
            let slices: Vec<String> = ideal
                .decompose()
                .iter()
                .enumerate()
                .map(|(i, s)| format!("I_{i} = ({})", s.render()))
                .collect();
            println!("slices: {}", slices.join("  "));
            println!("T: {}", record.tangent);
            match record.psi {
                Some(value) => println!("psi(m1): {value}"),
                None => println!("psi(m1): out of domain"),
            }
            match record.bound_chain {
                Some([b1, b2, b3]) => println!(
                    "chain: T={} <= b1={b1} <= b2={b2} <= b3={b3}",
                    record.tangent
                ),
                None => println!("chain: n/a (ideal is not Borel-fixed)"),
            }
            if let Some(ms) = record.elapsed_ms {
                println!("elapsed_ms: {ms}");
            }
        }
        Format::Records => println!("{}", serde_json::to_string(&record)?),
        Format::Csv => {
            println!("{}", output::RECORD_CSV_HEADER);
            println!("{}", output::record_csv_row(&record));
        }
        Format::Lines => anyhow::bail!("lines format applies to enumerate only"),
    }

    if args.trace {
        for line in tangent3d::tangent_trace(&ideal) {
            println!("{line}");
        }
    }

    // The chain contract must hold for Borel-fixed input.
    if ideal.is_borel() {
        if let Err(err) = tangent3d::upper_bound_chain(&ideal, cache.as_deref()) {
            eprintln!("error: {err}");
            return Ok(EXIT_COUNTEREXAMPLE);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_hom2d(args: Hom2dArgs) -> anyhow::Result<u8> {
    let j = parse_staircase2(&args.ideal)?;
    let jp = parse_staircase2(&args.other)?;
    let by_components = hom2d::hom2_by_components(&j, &jp);
    let by_formula = hom2d::hom2_by_formula(&j, &jp);
    let ghosts = hom2d::ghost_vectors(&j, &jp);
    let t = hom2d::t_statistic(&j, &jp);
    let ap = hom2d::set_ap(&j, &jp).len();
    let an = hom2d::set_an(&j, &jp).len();
    let bn = hom2d::set_bn(&j, &jp).len();
    let ghost_list: Vec<String> = ghosts.iter().map(|s| s.to_string()).collect();

    match args.format {
        Format::Table => {
            println!("J: {}", j.render());
            println!("J': {}", jp.render());
            println!("l: {}", j.colength());
            println!("l': {}", jp.colength());
            println!("h(J'): {}", jp.height());
            println!("hom (components): {by_components}");
            println!("hom (formula): {by_formula}");
            println!("t: {t}");
            println!("ghosts: {}", ghost_list.join(" "));
            println!("|A_p|: {ap}");
            println!("|A_n|: {an}");
            println!("|B_n|: {bn}");
        }
        Format::Records | Format::Csv => {
            let value = serde_json::json!({
                "J": j.render(),
                "Jprime": jp.render(),
                "l": j.colength(),
                "lprime": jp.colength(),
                "h": jp.height(),
                "hom_components": by_components,
                "hom_formula": by_formula,
                "t": t,
                "ghosts": ghost_list,
                "A_p": ap,
                "A_n": an,
                "B_n": bn,
            });
            println!("{value}");
        }
        Format::Lines => anyhow::bail!("lines format applies to enumerate only"),
    }

    if args.dump {
        for line in hom2d::component_dump(&j, &jp) {
            println!("{line}");
        }
    }

    if by_components != by_formula {
        eprintln!("error: hom routes disagree: components={by_components} formula={by_formula}");
        return Ok(EXIT_COUNTEREXAMPLE);
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(args: EnumerateArgs) -> anyhow::Result<u8> {
    let ideals: Vec<Staircase3> = sorted_ideals(args.colength, args.shard);
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    if args.format == Format::Csv {
        writeln!(out, "ideal,l,m1,m2,m3")?;
    }
    for ideal in ideals {
        let (m1, m2, m3) = ideal.pure_exponents();
        match args.format {
            Format::Lines => writeln!(out, "{}", ideal.render())?,
            Format::Records => {
                let value = serde_json::json!({
                    "ideal": ideal.render(),
                    "l": ideal.colength(),
                    "m1": m1, "m2": m2, "m3": m3,
                });
                writeln!(out, "{value}")?;
            }
            Format::Csv => writeln!(
                out,
                "\"{}\",{},{m1},{m2},{m3}",
                ideal.render(),
                ideal.colength()
            )?,
            Format::Table => anyhow::bail!("enumerate supports lines, records, csv"),
        }
    }
    Ok(EXIT_OK)
}

/// Canonical-order enumeration, optionally restricted to one shard.
fn sorted_ideals(l: usize, shard: Option<(u64, u64)>) -> Vec<Staircase3> {
    match shard {
        Some((index, count)) => {
            let mut out: Vec<(String, Staircase3)> =
                enumerate::stream_borel3_sharded(l, index, count)
                    .map(|s| (s.render(), s))
                    .collect();
            out.sort_by(|a, b| a.0.cmp(&b.0));
            out.into_iter().map(|(_, s)| s).collect()
        }
        None => enumerate::enum_borel3(l),
    }
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<u8> {
    let Some(check) = checks::find(&args.check) else {
        eprintln!(
            "error: unknown check '{}'; available: {}",
            args.check,
            checks::registry()
                .iter()
                .map(|c| c.name())
                .collect::<Vec<_>>()
                .join(", ")
        );
        return Ok(EXIT_USAGE);
    };
    let cache = open_cache(args.cache)?;
    let params = CheckParams {
        k: args.k,
        colength: args.colength,
        k_max: args.k_max,
        scan: ScanOpts {
            jobs: args.jobs,
            shard: args.shard,
            cache: cache.clone(),
        },
    };

    let report = match check.run(&params) {
        Ok(report) => report,
        Err(err @ hilb3::Error::Domain { .. }) => {
            eprintln!("error: {err}");
            return Ok(EXIT_USAGE);
        }
        Err(err) => return Err(err.into()),
    };

    emit_report(&report, args.format, args.timings, &params)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    })
}

fn emit_report(
    report: &VerificationReport,
    format: Format,
    timings: bool,
    params: &CheckParams,
) -> anyhow::Result<()> {
    match format {
        Format::Table => {
            println!("check: {}", report.check);
            if let Some(k) = report.k {
                println!("k: {k}");
            }
            if let Some(l) = report.colength {
                println!("colength: {l}");
            }
            println!("ideals scanned: {}", report.ideals_scanned);
            if let Some(max) = report.max_tangent {
                println!("max T: {max}");
                println!("maximizers: {}", report.maximizers.join(" ; "));
            }
            for violation in &report.violations {
                println!("violation: {}: {}", violation.ideal, violation.message);
            }
            if timings {
                println!("elapsed_ms: {}", report.elapsed_ms);
            }
            println!("result: {}", if report.passed() { "PASS" } else { "FAIL" });
        }
        Format::Records => {
            // Per-ideal records first, then the report as the last line.
            if let Some(l) = report.colength {
                for record in verify_records(l as usize, params, timings)? {
                    println!("{}", serde_json::to_string(&record)?);
                }
            }
            println!("{}", report_json(report, timings)?);
        }
        Format::Csv => {
            println!("{}", output::RECORD_CSV_HEADER);
            if let Some(l) = report.colength {
                for record in verify_records(l as usize, params, timings)? {
                    println!("{}", output::record_csv_row(&record));
                }
            }
            eprintln!("{}", report_json(report, timings)?);
        }
        Format::Lines => anyhow::bail!("lines format applies to enumerate only"),
    }
    Ok(())
}

fn report_json(report: &VerificationReport, timings: bool) -> anyhow::Result<String> {
    let mut value = serde_json::to_value(report)?;
    if !timings {
        value.as_object_mut().unwrap().remove("elapsed_ms");
    }
    Ok(serde_json::to_string(&value)?)
}

fn verify_records(
    l: usize,
    params: &CheckParams,
    timings: bool,
) -> anyhow::Result<Vec<IdealRecord>> {
    let ideals = sorted_ideals(l, params.scan.shard);
    let cache = params.scan.cache.clone();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.scan.jobs)
        .build()?;
    let mut records = pool.install(|| {
        use rayon::prelude::*;
        ideals
            .par_iter()
            .map(|ideal| bounds::ideal_record(ideal, cache.as_deref()))
            .collect::<Vec<_>>()
    });
    if !timings {
        for r in &mut records {
            r.elapsed_ms = None;
        }
    }
    Ok(records)
}

fn cmd_checks() -> anyhow::Result<u8> {
    for check in checks::registry() {
        println!("{:<14} {}", check.name(), check.summary());
    }
    Ok(EXIT_OK)
}

fn cmd_figure(args: FigureArgs) -> anyhow::Result<u8> {
    let svg_text = match &args.other {
        Some(other) => {
            let j = parse_staircase2(&args.ideal)?;
            let jp = parse_staircase2(other)?;
            svg::pair2_svg(&j, &jp)
        }
        None => {
            let parsed = parse_ideal(&args.ideal)?;
            match parsed.to_staircase2() {
                Ok(s) => svg::staircase2_svg(&s),
                Err(_) => svg::staircase3_svg(&parsed.to_staircase3()?),
            }
        }
    };
    match args.output {
        Some(path) => std::fs::write(path, svg_text)?,
        None => print!("{svg_text}"),
    }
    Ok(EXIT_OK)
}

fn cmd_merge(args: MergeArgs) -> anyhow::Result<u8> {
    if args.reports.is_empty() {
        anyhow::bail!("no report files given");
    }
    let mut reports = Vec::new();
    for path in &args.reports {
        let text = std::fs::read_to_string(path)?;
        let line = text
            .lines()
            .rev()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| anyhow::anyhow!("{}: empty file", path.display()))?;
        let mut report: VerificationReport = serde_json::from_str(line)?;
        report.maximizers.sort();
        reports.push(report);
    }
    let merged = bounds::merge_reports(&reports)?;
    println!("{}", serde_json::to_string(&merged)?);
    Ok(if merged.passed() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    })
}
