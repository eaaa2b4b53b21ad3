use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use digraph_spectra::bounds::{BoundReport, CSV_HEADER};
use digraph_spectra::digraph::{
    clique_number, girth, is_strongly_connected, parse_edge_list, vertex_connectivity,
    write_edge_list,
};
use digraph_spectra::families::{FamilyKind, FamilyParams, FamilySpec};
use digraph_spectra::spectral;
use digraph_spectra::transforms::{contract, insert_vertex, redirect_arc};
use digraph_spectra::verify::{
    extremal_ranking, Direction, Metric, Ranking, Sweep, TheoremId, TheoremReport, Verdict,
    VerifyParams,
};
use digraph_spectra::{Digraph, Error};

// Writes that fail (typically a closed pipe) are ignored rather than panicking.
macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "dspectra", version, about = "Spectral radii, bounds and extremal checks for strongly connected digraphs")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Worker threads for exhaustive sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Comparison tolerance for verification and ranking.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Structural parameters, ρ, q and the Perron vector of one digraph.
    Compute {
        #[command(flatten)]
        input: Input,
        /// Accept multi-arcs (structural parameters are then omitted).
        #[arg(long)]
        allow_multi: bool,
    },
    /// Every degree-based upper and lower bound next to the exact q.
    Bounds {
        #[command(flatten)]
        input: Input,
        /// Emit the four comparison rows: K_n minus an arc, D1, D2 and D3.
        #[arg(long)]
        table1: bool,
    },
    /// Write a family member as an edge list.
    Family {
        /// cycle, complete, complete-minus-arc, B, Bprime, C, Cprime, theta, theta-hat, K3, D1, D2, D3
        name: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Apply an arc transformation and write the result as an edge list.
    Transform {
        #[arg(value_enum)]
        action: Action,
        /// Edge-list file (`-` for standard input).
        file: PathBuf,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        /// New head for `redirect`.
        #[arg(long)]
        w: Option<usize>,
    },
    /// Rank isomorphism classes of all strongly connected digraphs of order n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "q")]
        metric: String,
        #[arg(long, conflicts_with = "max")]
        min: bool,
        #[arg(long)]
        max: bool,
        #[arg(long, default_value_t = 4)]
        top: usize,
    },
    /// Check a claim over a range of orders.
    Verify {
        #[arg(long)]
        theorem: String,
        /// Order range such as `4..10`, `4..=10` or `5`.
        #[arg(long)]
        n: Option<String>,
        /// Random digraphs on 6..9 vertices added to the bound sweep.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Action {
    Redirect,
    Contract,
    Insert,
}

#[derive(Args, Default)]
struct ParamArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
}

impl ParamArgs {
    fn params(&self) -> FamilyParams {
        FamilyParams {
            n: self.n,
            d: self.d,
            g: self.g,
            k: self.k,
            m: self.m,
            a: self.a,
            b: self.b,
            c: self.c,
        }
    }
}

#[derive(Args)]
struct Input {
    /// Edge-list file (`-` for standard input).
    file: Option<PathBuf>,
    /// Build a family member instead of reading a file.
    #[arg(long, conflicts_with = "file")]
    family: Option<String>,
    #[command(flatten)]
    params: ParamArgs,
}

impl Input {
    fn load(&self) -> Result<(String, Digraph), Failure> {
        match (&self.file, &self.family) {
            (Some(path), _) => {
                let text = read_input(path)?;
                let name = path.display().to_string();
                Ok((name, parse_edge_list(&text)?))
            }
            (None, Some(name)) => {
                let spec = family_spec(name, &self.params)?;
                Ok((spec.to_string(), spec.build()?))
            }
            (None, None) => Err(Failure::usage("give an edge-list file or --family")),
        }
    }
}

fn family_spec(name: &str, p: &ParamArgs) -> Result<FamilySpec, Failure> {
    Ok(name.parse::<FamilyKind>()?.with_params(&p.params())?)
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("reading {}: {e}", path.display())))?;
    }
    Ok(text)
}

/// An error with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::UnknownTheorem(_) | Error::InvalidParameter(_) => 2,
            Error::NotSimple { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Twelve significant digits, trailing zeros removed.
fn real(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&magnitude) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Compute { input, allow_multi } => compute(cli, input, *allow_multi),
        Command::Bounds { input, table1 } => bounds(cli, input, *table1),
        Command::Family { name, params } => {
            let d = family_spec(name, params)?.build()?;
            match cli.format {
                Format::Json => outln!("{}", json(&d)),
                _ => out!("{}", write_edge_list(&d)),
            }
            Ok(0)
        }
        Command::Transform { action, file, u, v, w } => {
            let d = parse_edge_list(&read_input(file)?)?;
            let h = match action {
                Action::Redirect => {
                    let w = w.ok_or_else(|| Failure::usage("redirect needs --w"))?;
                    redirect_arc(&d, *u, *v, w)?
                }
                Action::Contract => contract(&d, *u, *v)?,
                Action::Insert => insert_vertex(&d, *u, *v)?,
            };
            match cli.format {
                Format::Json => outln!("{}", json(&h)),
                _ => out!("{}", write_edge_list(&h)),
            }
            Ok(0)
        }
        Command::Enumerate { n, metric, min, max, top } => {
            let metric: Metric = metric.parse()?;
            let direction = if *max && !*min { Direction::Max } else { Direction::Min };
            let sweep = Sweep::get(*n, cli.workers)?;
            let ranking = extremal_ranking(&sweep, metric, direction, *top, cli.tolerance)?;
            print_ranking(cli.format, &ranking);
            Ok(0)
        }
        Command::Verify { theorem, n, samples, seed, timing } => {
            let id: TheoremId = theorem.parse()?;
            let mut params = VerifyParams::defaults_for(id);
            if let Some(range) = n {
                (params.n_min, params.n_max) = parse_range(range)?;
            }
            params.tolerance = cli.tolerance;
            params.workers = cli.workers;
            params.random_samples = *samples;
            params.seed = *seed;
            let report = verify_theorem(id, &params)?;
            print_report(cli.format, &report, *timing);
            Ok(match report.verdict {
                Verdict::Violated if !report.conjecture => 1,
                _ => 0,
            })
        }
    }
}

use digraph_spectra::verify::verify_theorem;

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::usage(format!("invalid range `{s}` (expected N, A..B or A..=B)"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        Ok((num(a)?, num(b)?))
    } else {
        let n = num(s)?;
        Ok((n, n))
    }
}

#[derive(Serialize)]
struct ComputeReport {
    name: String,
    n: usize,
    arcs: usize,
    simple: bool,
    strongly_connected: bool,
    girth: Option<usize>,
    clique_number: Option<usize>,
    vertex_connectivity: Option<usize>,
    rho: f64,
    q: f64,
    q_enclosure: [f64; 2],
    perron_vector: Option<Vec<f64>>,
}

fn compute(cli: &Cli, input: &Input, allow_multi: bool) -> Result<u8, Failure> {
    let (name, d) = input.load()?;
    if !allow_multi {
        d.require_simple()?;
    }
    let strong = is_strongly_connected(&d);
    let simple = d.is_simple();
    let q = spectral::q(&d)?;
    let report = ComputeReport {
        name,
        n: d.n(),
        arcs: d.arc_count(),
        simple,
        strongly_connected: strong,
        girth: girth(&d),
        clique_number: simple.then(|| clique_number(&d)).transpose()?,
        vertex_connectivity: (simple && strong && d.n() >= 2)
            .then(|| vertex_connectivity(&d))
            .transpose()?,
        rho: spectral::rho(&d)?.radius,
        q: q.radius,
        q_enclosure: [q.cw_lower, q.cw_upper],
        perron_vector: q.perron_vector,
    };
    let opt = |x: Option<usize>, none: &str| x.map_or(none.to_string(), |v| v.to_string());
    let vector = |v: &Option<Vec<f64>>, sep: &str| {
        v.as_ref().map_or("-".to_string(), |x| {
            x.iter().map(|&c| real(c)).collect::<Vec<_>>().join(sep)
        })
    };
    match cli.format {
        Format::Json => outln!("{}", json(&report)),
        Format::Csv => {
            outln!("name,n,arcs,simple,strongly_connected,girth,clique_number,vertex_connectivity,rho,q,perron_vector");
            outln!(
                "{},{},{},{},{},{},{},{},{},{},{}",
                report.name,
                report.n,
                report.arcs,
                report.simple,
                report.strongly_connected,
                opt(report.girth, "inf"),
                opt(report.clique_number, ""),
                opt(report.vertex_connectivity, ""),
                real(report.rho),
                real(report.q),
                vector(&report.perron_vector, ";")
            );
        }
        Format::Plain => {
            outln!("name: {}", report.name);
            outln!("n: {}", report.n);
            outln!("arcs: {}", report.arcs);
            outln!("simple: {}", report.simple);
            outln!("strongly connected: {}", report.strongly_connected);
            outln!("girth: {}", opt(report.girth, "inf"));
            outln!("clique number: {}", opt(report.clique_number, "-"));
            outln!("vertex connectivity: {}", opt(report.vertex_connectivity, "-"));
            outln!("rho: {}", real(report.rho));
            outln!("q: {}", real(report.q));
            outln!("q enclosure: [{}, {}]", real(q.cw_lower), real(q.cw_upper));
            outln!("perron vector: {}", vector(&report.perron_vector, " "));
        }
    }
    Ok(0)
}

fn bounds(cli: &Cli, input: &Input, table1: bool) -> Result<u8, Failure> {
    let reports = if table1 {
        let n = input.params.n.unwrap_or(6);
        let d = input.params.d.unwrap_or(4);
        let g = input.params.g.unwrap_or(3);
        [
            FamilySpec::CompleteMinusArc { n },
            FamilySpec::HubCycle { n },
            FamilySpec::CliquePath { n, d },
            FamilySpec::CycleWithPath { n, g },
        ]
        .iter()
        .map(|s| BoundReport::new(s.to_string(), &s.build()?))
        .collect::<Result<Vec<_>, _>>()?
    } else {
        let (name, d) = input.load()?;
        vec![BoundReport::new(name, &d)?]
    };
    match cli.format {
        Format::Json => outln!("{}", json(&reports)),
        Format::Csv => {
            outln!("{CSV_HEADER}");
            for r in &reports {
                outln!("{}", r.csv_row(real));
            }
        }
        Format::Plain => {
            let header: Vec<&str> = CSV_HEADER.split(',').collect();
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    outln!();
                }
                for (key, value) in header.iter().zip(r.fields(real)) {
                    outln!("{key}: {value}");
                }
            }
        }
    }
    Ok(0)
}

fn arcs_text(d: &Digraph) -> String {
    d.arcs()
        .map(|(u, v, _)| format!("{u}>{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_ranking(format: Format, r: &Ranking) {
    match format {
        Format::Json => outln!("{}", json(r)),
        Format::Csv => {
            outln!("rank,value,exact_root,adjudicated,canonical,arcs");
            for e in &r.entries {
                outln!(
                    "{},{},{},{},{},{}",
                    e.rank,
                    real(e.value),
                    real(e.exact_root),
                    e.adjudicated,
                    e.canonical,
                    arcs_text(&e.digraph)
                );
            }
        }
        Format::Plain => {
            let dir = match r.direction {
                Direction::Min => "minimum",
                Direction::Max => "maximum",
            };
            outln!("{dir} {} over strongly connected digraphs on {} vertices", r.metric, r.n);
            for e in &r.entries {
                outln!(
                    "{:>3}  {:<16} {}{}",
                    e.rank,
                    real(e.value),
                    arcs_text(&e.digraph),
                    if e.adjudicated { "  (exact tie-break)" } else { "" }
                );
            }
        }
    }
}

fn print_report(format: Format, r: &TheoremReport, timing: bool) {
    let verdict = match r.verdict {
        Verdict::Verified => "verified",
        Verdict::Violated => "violated",
        Verdict::Skipped => "skipped",
    };
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(r).expect("report serializes");
            if !timing {
                v.as_object_mut().map(|o| o.remove("elapsed_seconds"));
            }
            outln!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        Format::Csv => {
            outln!("theorem,range,verdict,conjecture,instances");
            outln!("{},{},{},{},{}", r.theorem, r.range, verdict, r.conjecture, r.instances);
        }
        Format::Plain => {
            outln!("{}: {}", r.theorem, r.claim);
            outln!("range: {}", r.range);
            if r.conjecture {
                outln!("evidence: {verdict} (conjecture; this is evidence, not a proof)");
            } else {
                outln!("verdict: {verdict}");
            }
            outln!("instances: {}", r.instances);
            for d in &r.details {
                outln!("  {d}");
            }
            if let Some(d) = &r.counterexample {
                outln!("counterexample:");
                out!("{}", write_edge_list(d));
            }
            if timing {
                outln!("elapsed: {:.3}s", r.elapsed_seconds);
            }
        }
    }
}
