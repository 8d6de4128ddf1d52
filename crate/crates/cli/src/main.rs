use std::fmt::Write as _;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use zforce_core::constructions::{
    counterexample_graph, five_leg_spider, gap_family, prism, twin_spider,
};
use zforce_core::enumerate::{decode, pair_count};
use zforce_core::forcing::{closure, closure_with, reversal};
use zforce_core::forts::{enumerate_forts_with, fort_from_failed_closure};
use zforce_core::io::{parse_graph_auto, to_edge_list, to_graph6};
use zforce_core::limits::{Limits, HARD_SWEEP_ORDER, WARN_ENUMERATION_ORDER};
use zforce_core::minimal::{
    count_minimal_zfs, enumerate_minimal_zfs, max_minimal_zfs, shrink_to_minimal,
    zero_forcing_number,
};
use zforce_core::verify::{sweep_record, verify_claim, Claim, ClaimParams, VerificationReport};
use zforce_core::{is_zero_forcing_set, Error, Family, Graph, VertexSet};

#[derive(Parser)]
#[command(
    name = "zforce",
    version,
    about = "Zero forcing sets, forts and Z̄ on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Clone)]
struct Opts {
    /// Built-in family, e.g. `cycle:7`, `spider:5,5,5`, `prism:2`
    #[arg(long = "gen", global = true, value_name = "FAMILY:PARAMS")]
    family: Option<String>,
    /// File holding one graph (graph6 line or `n <order>` edge list); `-` reads stdin
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Vertex set as comma-separated ids, e.g. `0,3,5`
    #[arg(long, global = true, value_name = "IDS")]
    set: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Largest order for sweeps
    #[arg(long = "max-n", global = true, value_name = "K")]
    max_n: Option<usize>,
    /// Largest order for full subset scans
    #[arg(long, global = true, value_name = "K")]
    cap: Option<usize>,
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true, value_name = "K")]
    workers: Option<usize>,
    /// Seed for randomized force schedules
    #[arg(long, global = true, value_name = "K")]
    seed: Option<u64>,
    /// Emit one JSON object per graph during sweeps
    #[arg(long, global = true)]
    stream: bool,
    /// Allow sweeps at order 7
    #[arg(long, global = true)]
    long_runtime: bool,
    /// Report elapsed time as 0 so reports are byte-for-byte reproducible
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Report,
}

#[derive(Subcommand)]
enum Command {
    /// Closure of --set with the chronological force list
    Closure,
    /// Is --set a zero forcing set? Exits 1 if not
    CheckZfs,
    /// Terminus of a zero forcing set
    Reverse,
    /// All forts, or the minimal ones
    Forts {
        #[arg(long)]
        minimal: bool,
    },
    /// Zero forcing number Z(G)
    Znumber,
    /// Largest size of a minimal zero forcing set
    Zbar,
    /// Number of minimal zero forcing sets
    CountMinimal,
    /// List every minimal zero forcing set
    EnumerateMinimal,
    /// Shrink --set to a minimal zero forcing set
    Shrink,
    /// Print a built-in family
    Gen {
        /// Edge-list output instead of graph6
        #[arg(long)]
        edges: bool,
    },
    /// Run a claim driver
    Verify {
        /// Claim id; `list` prints the ids
        claim: String,
        /// Inclusive parameter range, e.g. `5..10` or `7`
        #[arg(long = "range", visible_alias = "n", value_name = "LO..HI")]
        range: Option<String>,
    },
    /// Sweep every labeled graph up to --max-n for a characterization claim
    Sweep { claim: String },
}

/// Failures that map to exit status 1 rather than 2.
struct ClaimFailed;

enum Failure {
    Usage(String),
    Claim,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RouteDisagreement(_) | Error::ValidationFailed(_) => {
                eprintln!("error: {e}");
                Failure::Claim
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<ClaimFailed> for Failure {
    fn from(_: ClaimFailed) -> Self {
        Failure::Claim
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claim) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn run(cli: Cli) -> Outcome {
    let opts = cli.opts;
    if let Some(w) = opts.workers {
        if w == 0 {
            return Err(usage("--workers must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    let limits = Limits::new(
        zforce_core::vertex_set::MAX_ORDER,
        opts.cap
            .unwrap_or(zforce_core::limits::HARD_ENUMERATION_CAP),
        opts.max_n.unwrap_or(6).min(HARD_SWEEP_ORDER),
    )?;
    if let Some(k) = opts.max_n {
        if k == 0 || k > HARD_SWEEP_ORDER {
            return Err(usage(format!("--max-n must be in 1..={HARD_SWEEP_ORDER}")));
        }
    }
    let out = io::stdout();
    let mut out = BufWriter::new(out.lock());
    let result = match cli.command {
        Command::Verify { claim, range } => verify(&opts, &claim, range.as_deref(), &mut out),
        Command::Sweep { claim } => sweep(&opts, &limits, &claim, &mut out),
        Command::Gen { edges } => {
            let g = load_graph(&opts)?;
            if edges {
                write!(out, "{}", to_edge_list(&g))?;
            } else {
                writeln!(out, "{}", to_graph6(&g))?;
            }
            Ok(())
        }
        cmd => graph_command(cmd, &opts, &limits, &mut out),
    };
    out.flush()?;
    result
}

fn load_graph(opts: &Opts) -> Result<Graph, Failure> {
    match (&opts.family, &opts.input) {
        (Some(_), Some(_)) => Err(usage("give either --gen or --input, not both")),
        (None, None) => Err(usage("a graph is required: use --gen or --input")),
        (Some(spec), None) => Ok(build_family(spec)?),
        (None, Some(path)) => {
            let text = if path.as_os_str() == "-" {
                io::read_to_string(io::stdin())?
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?
            };
            Ok(parse_graph_auto(&text, zforce_core::vertex_set::MAX_ORDER)?)
        }
    }
}

fn build_family(spec: &str) -> zforce_core::Result<Graph> {
    let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let num = || {
        arg.trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidParameter(format!("`{name}` takes one integer parameter")))
    };
    match name {
        "prism" => prism(num()?),
        "five_leg_spider" => five_leg_spider(num()?),
        "twin_spider" => twin_spider(num()?),
        "counterexample" => counterexample_graph(num()?),
        "gap" => gap_family(num()?),
        _ => spec.parse::<Family>()?.build(),
    }
}

fn load_set(opts: &Opts, g: &Graph) -> Result<VertexSet, Failure> {
    let text = opts
        .set
        .as_deref()
        .ok_or_else(|| usage("this command needs --set"))?;
    let mut s = VertexSet::EMPTY;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| usage(format!("bad vertex id `{part}` in --set")))?;
        g.check_vertex(v)?;
        s.insert(v);
    }
    Ok(s)
}

fn check_scan(g: &Graph, limits: &Limits) -> Outcome {
    limits.check_enumeration(g)?;
    if g.order() > WARN_ENUMERATION_ORDER {
        eprintln!(
            "warning: full subset scan on {} vertices ({} subsets) may take a while",
            g.order(),
            1u64 << g.order()
        );
    }
    Ok(())
}

fn emit(out: &mut impl Write, format: Format, human: &str, report: Value) -> Outcome {
    match format {
        Format::Human => write!(out, "{human}")?,
        Format::Report => writeln!(out, "{report}")?,
    }
    Ok(())
}

fn set_list(sets: &[VertexSet]) -> Value {
    json!(sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>())
}

fn graph_command(cmd: Command, opts: &Opts, limits: &Limits, out: &mut impl Write) -> Outcome {
    let g = load_graph(opts)?;
    let fmt = opts.format;
    match cmd {
        Command::Closure => {
            let s = load_set(opts, &g)?;
            let r = match opts.seed {
                None => closure(&g, s),
                Some(seed) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    closure_with(&g, s, |avail| rng.gen_range(0..avail.len()))
                }
            };
            let full = r.closure == g.vertices();
            let mut h = format!(
                "closure  {}\nforcing  {}\n",
                r.closure,
                if full { "yes" } else { "no" }
            );
            for f in &r.forces {
                writeln!(h, "  {} -> {}", f.source, f.target).unwrap();
            }
            writeln!(h, "terminus {}", r.terminus).unwrap();
            let forces: Vec<_> = r.forces.iter().map(|f| [f.source, f.target]).collect();
            emit(
                out,
                fmt,
                &h,
                json!({
                    "set": s, "closure": r.closure, "zero_forcing": full,
                    "forces": forces, "terminus": r.terminus,
                }),
            )
        }
        Command::CheckZfs => {
            let s = load_set(opts, &g)?;
            let ok = is_zero_forcing_set(&g, s);
            if ok {
                emit(
                    out,
                    fmt,
                    &format!("{s} is a zero forcing set\n"),
                    json!({"set": s, "zero_forcing": true}),
                )
            } else {
                let fort = fort_from_failed_closure(&g, s)?;
                emit(
                    out,
                    fmt,
                    &format!("{s} is not a zero forcing set; unforced fort {fort}\n"),
                    json!({"set": s, "zero_forcing": false, "fort": fort}),
                )?;
                Err(ClaimFailed.into())
            }
        }
        Command::Reverse => {
            let s = load_set(opts, &g)?;
            if !is_zero_forcing_set(&g, s) {
                return Err(usage(format!("{s} is not a zero forcing set")));
            }
            let t = reversal(&g, s);
            emit(
                out,
                fmt,
                &format!("reversal {t}\n"),
                json!({"set": s, "reversal": t}),
            )
        }
        Command::Forts { minimal } => {
            check_scan(&g, limits)?;
            let forts = enumerate_forts_with(&g, minimal, limits)?;
            let sets: Vec<_> = forts.iter().collect();
            let mut h = format!(
                "{} {}forts\n",
                sets.len(),
                if minimal { "minimal " } else { "" }
            );
            for f in &sets {
                writeln!(h, "  {f}").unwrap();
            }
            emit(
                out,
                fmt,
                &h,
                json!({"minimal_only": minimal, "count": sets.len(), "forts": set_list(&sets)}),
            )
        }
        Command::Znumber => {
            check_scan(&g, limits)?;
            let (z, w) = zero_forcing_number(&g)?;
            emit(
                out,
                fmt,
                &format!("Z = {z}\nwitness {w}\n"),
                json!({"z": z, "witness": w}),
            )
        }
        Command::Zbar => {
            check_scan(&g, limits)?;
            let (zbar, w) = max_minimal_zfs(&g)?;
            emit(
                out,
                fmt,
                &format!("Z̄ = {zbar}\nwitness {w}\n"),
                json!({"zbar": zbar, "witness": w}),
            )
        }
        Command::CountMinimal => {
            check_scan(&g, limits)?;
            let c = count_minimal_zfs(&g)?;
            emit(
                out,
                fmt,
                &format!("{c} minimal zero forcing sets\n"),
                json!({"count": c.to_string()}),
            )
        }
        Command::EnumerateMinimal => {
            check_scan(&g, limits)?;
            let sets = enumerate_minimal_zfs(&g)?;
            let mut h = String::new();
            for s in &sets {
                writeln!(h, "{s}").unwrap();
            }
            emit(
                out,
                fmt,
                &h,
                json!({"count": sets.len(), "sets": set_list(&sets)}),
            )
        }
        Command::Shrink => {
            let s = load_set(opts, &g)?;
            let m = match shrink_to_minimal(&g, s) {
                Err(Error::NotZeroForcing) => {
                    return Err(usage(format!("{s} is not a zero forcing set")))
                }
                r => r?,
            };
            emit(out, fmt, &format!("{m}\n"), json!({"set": s, "minimal": m}))
        }
        Command::Gen { .. } | Command::Verify { .. } | Command::Sweep { .. } => unreachable!(),
    }
}

fn parse_claim(id: &str) -> Result<Claim, Failure> {
    Ok(id.parse::<Claim>()?)
}

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || {
        usage(format!(
            "bad range `{text}`; expected LO..HI or a single value"
        ))
    };
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match text.split_once("..") {
        Some((lo, hi)) => Ok((num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?)),
        None => {
            let v = num(text)?;
            Ok((v, v))
        }
    }
}

fn print_report(out: &mut impl Write, opts: &Opts, mut r: VerificationReport) -> Outcome {
    if opts.no_timing {
        r.elapsed = 0.0;
    }
    match opts.format {
        Format::Report => writeln!(
            out,
            "{}",
            serde_json::to_string(&r).expect("reports serialize")
        )?,
        Format::Human => {
            writeln!(out, "claim    {}", r.claim)?;
            writeln!(out, "params   {}", r.params)?;
            writeln!(out, "verdict  {}", if r.passed() { "pass" } else { "FAIL" })?;
            writeln!(out, "elapsed  {:.3}s", r.elapsed)?;
            for w in &r.witnesses {
                write!(out, "  {}", w.label)?;
                if let Some(g6) = &w.graph6 {
                    write!(out, "  [{g6}]")?;
                }
                if !w.sets.is_empty() {
                    let sets: Vec<_> = w.sets.iter().map(|s| s.to_string()).collect();
                    write!(out, "  {}", sets.join(" "))?;
                }
                writeln!(out)?;
            }
            if let Some(c) = &r.counterexample {
                writeln!(out, "counterexample [{}]: {}", c.graph6, c.detail)?;
                for s in &c.sets {
                    writeln!(out, "  {s}")?;
                }
            }
        }
    }
    if r.passed() {
        Ok(())
    } else {
        Err(ClaimFailed.into())
    }
}

fn verify(opts: &Opts, claim: &str, range: Option<&str>, out: &mut impl Write) -> Outcome {
    if claim == "list" {
        for c in Claim::ALL {
            let (key, lo, hi) = c.default_range();
            writeln!(out, "{:<28} {key} {lo}..{hi}", c.id())?;
        }
        return Ok(());
    }
    let claim = parse_claim(claim)?;
    let mut params = match range {
        Some(r) => {
            let (lo, hi) = parse_range(r)?;
            ClaimParams::range(lo, hi)
        }
        None => ClaimParams::default(),
    };
    if claim.is_sweep() {
        if let (None, Some(k)) = (params.range, opts.max_n) {
            params = ClaimParams::range(1, k);
        }
        check_sweep_order(opts, params.range.map_or(claim.default_range().2, |r| r.1))?;
    }
    let report = verify_claim(claim, params)?;
    print_report(out, opts, report)
}

fn check_sweep_order(opts: &Opts, hi: usize) -> Outcome {
    if hi >= HARD_SWEEP_ORDER && !opts.long_runtime {
        return Err(usage(format!(
            "sweeps at order {hi} take minutes; pass --long-runtime to run them"
        )));
    }
    Ok(())
}

fn sweep(opts: &Opts, limits: &Limits, claim: &str, out: &mut impl Write) -> Outcome {
    let claim = parse_claim(claim)?;
    if !claim.is_sweep() {
        return Err(usage(format!("{claim} is not a sweep claim; use `verify`")));
    }
    let hi = limits.sweep_max_order;
    check_sweep_order(opts, hi)?;
    if !opts.stream {
        let report = verify_claim(claim, ClaimParams::range(1, hi))?;
        return print_report(out, opts, report);
    }
    const BATCH: u64 = 1 << 12;
    let mut failed = 0u64;
    let mut total = 0u64;
    for n in 1..=hi {
        let count = 1u64 << pair_count(n);
        let mut start = 0;
        while start < count {
            let end = (start + BATCH).min(count);
            let records = (start..end)
                .into_par_iter()
                .map(|c| sweep_record(claim, &decode(n, c)))
                .collect::<zforce_core::Result<Vec<_>>>()?;
            for r in records {
                total += 1;
                failed += u64::from(!r.holds);
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&r).expect("records serialize")
                )?;
            }
            start = end;
        }
    }
    writeln!(
        out,
        "{}",
        json!({"claim": claim.id(), "graphs": total, "failures": failed})
    )?;
    if failed == 0 {
        Ok(())
    } else {
        Err(ClaimFailed.into())
    }
}
