//! `mono2t` command-line front end.

mod svg;

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use mono2t_core::candidates::{prune_dominated, standard_candidates};
use mono2t_core::exact::{exact_min_transmitters, ExactMode};
use mono2t_core::instances::{fixture, random_monotone, Fixture};
use mono2t_core::solution::TransmitterDoc;
use mono2t_core::visibility::{Power, Scene};
use mono2t_core::{approximate_2transmitters, parse_polygon, Error, OrthoPolygon, Solution};
use serde::Serialize;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Breach(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Breach(_) => 3,
            Failure::Budget(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Input(m) => write!(f, "invalid input: {m}"),
            Failure::Breach(m) => write!(f, "invariant breach: {m}"),
            Failure::Budget(m) => write!(f, "budget exhausted: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Polygon(_) | Error::UnknownFixture(_) | Error::Solution(_) => {
                Failure::Input(e.to_string())
            }
            Error::NoSolutionWithinBudget(_) => Failure::Budget(e.to_string()),
            Error::InvalidPower(_) => Failure::Usage(e.to_string()),
            other => Failure::Breach(other.to_string()),
        }
    }
}

type Outcome<T = ()> = Result<T, Failure>;

#[derive(Parser, Debug)]
#[command(
    name = "mono2t",
    version,
    about = "Guard monotone orthogonal polygons with 2-transmitters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a polygon file and print its slab summary.
    Validate { file: PathBuf },
    /// Print the candidate segments as JSON.
    Candidates {
        file: PathBuf,
        /// Drop dominated candidates first.
        #[arg(long)]
        pruned: bool,
    },
    /// Solve and print the solution JSON.
    Solve(SolveArgs),
    /// Run approx and exact with k = 2 and report the ratio.
    Compare {
        file: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Emit a random or named polygon as JSON.
    Gen(GenArgs),
    /// Generate instances, solve both ways and emit CSV rows.
    Bench(BenchArgs),
    /// Draw a polygon and optionally a solution as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Alg {
    Approx,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Standard,
    Dense,
}

impl From<Mode> for ExactMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Standard => ExactMode::Standard,
            Mode::Dense => ExactMode::Dense,
        }
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    alg: Alg,
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=2))]
    k: u32,
    #[arg(long, value_enum, default_value = "standard")]
    mode: Mode,
    /// Largest subset size the exact search tries.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, conflicts_with_all = ["slabs", "seed"])]
    fixture: Option<String>,
    #[arg(long, required_unless_present = "fixture", value_parser = clap::value_parser!(u64).range(1..))]
    slabs: Option<u64>,
    #[arg(long = "max-h", default_value_t = 8, value_parser = clap::value_parser!(i64).range(2..))]
    max_h: i64,
    #[arg(long = "max-w", default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
    max_w: i64,
    #[arg(long, required_unless_present = "fixture")]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    count: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    slabs: u64,
    #[arg(long)]
    seed: u64,
    #[arg(long = "max-h", default_value_t = 8, value_parser = clap::value_parser!(i64).range(2..))]
    max_h: i64,
    #[arg(long = "max-w", default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
    max_w: i64,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    file: PathBuf,
    #[arg(long)]
    solution: Option<PathBuf>,
    /// Shade the region of the transmitter at this index.
    #[arg(long, requires = "solution")]
    vis: Option<usize>,
    #[arg(long)]
    svg: PathBuf,
}

fn read_text(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_polygon(path: &Path) -> Outcome<OrthoPolygon> {
    let text = read_text(path)?;
    parse_polygon(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_solution(path: &Path, p: &OrthoPolygon) -> Outcome<Solution> {
    let text = read_text(path)?;
    Solution::from_json(&text, p).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print(text: &str) -> Outcome {
    let mut out = io::stdout().lock();
    match writeln!(out, "{text}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            Err(Failure::Input(format!("stdout: {e}")))
        }
        _ => Ok(()),
    }
}

/// Milliseconds rounded to whole microseconds.
fn millis(d: Duration) -> f64 {
    d.as_micros() as f64 / 1e3
}

fn budget_for(p: &OrthoPolygon, budget: Option<usize>) -> usize {
    budget.unwrap_or_else(|| p.profile().slab_count())
}

fn validate(file: &Path) -> Outcome {
    let p = load_polygon(file)?;
    let prof = p.profile();
    print(&format!(
        "valid: {} vertices, {} slabs, m = {}, x in {}, y in {}, area {}",
        p.vertices().len(),
        prof.slab_count(),
        p.m(),
        prof.x_range(),
        prof.y_range(),
        prof.area()
    ))?;
    for (w, s) in prof.xs().windows(2).zip(prof.spans()) {
        print(&format!("  slab [{}, {}]: y {}", w[0], w[1], s))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CandidateDoc {
    count: usize,
    pruned: bool,
    transmitters: Vec<TransmitterDoc>,
}

fn candidates(file: &Path, pruned: bool) -> Outcome {
    let p = load_polygon(file)?;
    let mut set = standard_candidates(&p);
    if pruned {
        set = prune_dominated(&set, &p, Power::Two)?;
    }
    let doc = CandidateDoc {
        count: set.len(),
        pruned,
        transmitters: set.iter().map(TransmitterDoc::from).collect(),
    };
    print(&serde_json::to_string_pretty(&doc).expect("candidates serialize"))
}

fn solve(args: &SolveArgs) -> Outcome {
    let p = load_polygon(&args.file)?;
    let k = Power::try_from(args.k)?;
    let sol = match args.alg {
        Alg::Approx => {
            if k != Power::Two {
                return Err(Failure::Usage("--alg approx requires --k 2".into()));
            }
            approximate_2transmitters(&p)?
        }
        Alg::Exact => exact_min_transmitters(&p, k, args.mode.into(), budget_for(&p, args.budget))?,
    };
    let json = sol.to_json();
    print(&json)?;
    if let Some(path) = &args.json {
        write_file(path, &json)?;
    }
    if let Some(path) = &args.svg {
        write_file(path, &svg::render(&p, &sol.transmitters, None))?;
    }
    Ok(())
}

fn compare(file: &Path, budget: Option<usize>) -> Outcome {
    let p = load_polygon(file)?;
    let approx = approximate_2transmitters(&p)?;
    let exact =
        exact_min_transmitters(&p, Power::Two, ExactMode::Standard, budget_for(&p, budget))?;
    let ratio = approx.count() as f64 / exact.count() as f64;
    print(&format!("approx {}", approx.count()))?;
    print(&format!("exact {}", exact.count()))?;
    print(&format!("ratio {ratio:?}"))?;
    if !approx.coverage_complete {
        return Err(Failure::Breach(
            "approximate solution does not cover the polygon".into(),
        ));
    }
    if approx.count() > 2 * exact.count() {
        return Err(Failure::Breach(format!(
            "ratio {}/{} exceeds 2",
            approx.count(),
            exact.count()
        )));
    }
    Ok(())
}

fn generate(args: &GenArgs) -> Outcome {
    let p = match &args.fixture {
        Some(name) => fixture(name.parse::<Fixture>()?),
        None => random_monotone(
            args.slabs.expect("required by clap") as usize,
            args.max_h,
            args.max_w,
            args.seed.expect("required by clap"),
        ),
    };
    let json = p.to_json();
    match &args.out {
        Some(path) => write_file(path, &format!("{json}\n")),
        None => print(&json),
    }
}

#[derive(Serialize)]
struct BenchRow {
    seed: u64,
    n: usize,
    m: usize,
    approx_size: usize,
    exact_size: usize,
    ratio: f64,
    approx_ms: f64,
    exact_ms: f64,
}

fn bench(args: &BenchArgs) -> Outcome {
    let sink: Box<dyn Write> = match &args.csv {
        Some(path) => Box::new(
            fs::File::create(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = csv::Writer::from_writer(sink);
    let mut breach = None;
    for i in 0..args.count {
        let seed = args.seed.wrapping_add(i);
        let p = random_monotone(args.slabs as usize, args.max_h, args.max_w, seed);

        let t = Instant::now();
        let approx = approximate_2transmitters(&p)?;
        let approx_ms = millis(t.elapsed());

        let t = Instant::now();
        let exact =
            exact_min_transmitters(&p, Power::Two, ExactMode::Standard, budget_for(&p, None))?;
        let exact_ms = millis(t.elapsed());

        if !approx.coverage_complete || approx.count() > 2 * exact.count() {
            breach.get_or_insert(seed);
        }
        w.serialize(BenchRow {
            seed,
            n: p.vertices().len(),
            m: p.m(),
            approx_size: approx.count(),
            exact_size: exact.count(),
            ratio: approx.count() as f64 / exact.count() as f64,
            approx_ms,
            exact_ms,
        })
        .map_err(|e| Failure::Input(format!("csv: {e}")))?;
    }
    w.flush().map_err(|e| Failure::Input(format!("csv: {e}")))?;
    match breach {
        Some(seed) => Err(Failure::Breach(format!(
            "seed {seed} violates the ratio or coverage"
        ))),
        None => Ok(()),
    }
}

fn render(args: &RenderArgs) -> Outcome {
    let p = load_polygon(&args.file)?;
    let sol = args
        .solution
        .as_deref()
        .map(|path| load_solution(path, &p))
        .transpose()?;
    let transmitters = sol.as_ref().map_or(&[][..], |s| &s.transmitters);
    let shade = match (args.vis, &sol) {
        (Some(i), Some(s)) => {
            let t = s.transmitters.get(i).ok_or_else(|| {
                Failure::Input(format!(
                    "--vis {i} but the solution has {} transmitters",
                    s.count()
                ))
            })?;
            let scene = Scene::new(p.profile(), &s.transmitters);
            Some(scene.region(t, s.k)?)
        }
        _ => None,
    };
    write_file(&args.svg, &svg::render(&p, transmitters, shade.as_ref()))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Candidates { file, pruned } => candidates(&file, pruned),
        Command::Solve(args) => solve(&args),
        Command::Compare { file, budget } => compare(&file, budget),
        Command::Gen(args) => generate(&args),
        Command::Bench(args) => bench(&args),
        Command::Render(args) => render(&args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("mono2t: {f}");
            ExitCode::from(f.code())
        }
    }
}
