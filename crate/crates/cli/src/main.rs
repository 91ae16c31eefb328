//! `toric-nash`: Hilbert bases, Nash blowup charts and resolution DAGs of
//! affine toric surfaces from the command line.
//!
//! Exit codes: 0 ok, 1 internal or overflow error, 2 malformed input,
//! 3 lattice index ≠ 1, 4 depth cap reached, 5 IO failure.

mod input;
mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use toric_nash::{
    fraction_shape, hilbert_basis, hj_expand, is_smooth, nash_blowup, normal_form, resolve, scan,
    self_intersections, theta_profile, Error, FractionShape, ScanStatus, Status, DEFAULT_MAX_DEPTH,
};

use input::{GammaArgs, Malformed};

#[derive(Parser)]
#[command(
    name = "toric-nash",
    version,
    about = "Nash blowups of affine toric surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert basis, continued fraction and dual graph of the cone of Γ.
    Hilbert {
        #[command(flatten)]
        gamma: GammaArgs,
    },
    /// One row per chart of the Nash blowup of X_Γ.
    Nash {
        #[command(flatten)]
        gamma: GammaArgs,
    },
    /// Iterate Nash blowups until every chart is smooth.
    Resolve {
        #[command(flatten)]
        gamma: GammaArgs,
        #[arg(long, env = "MAX_DEPTH", default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        /// Keep GL(2,Z)-equivalent charts as separate nodes.
        #[arg(long)]
        no_dedupe: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Resolve every cone ((1,0),(p,q)) with q ≤ QMAX and write a CSV table.
    Scan {
        #[arg(long)]
        qmax: u64,
        #[arg(long, env = "MAX_DEPTH", default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        /// Output file. Relative paths are taken inside $TORIC_NASH_OUT_DIR
        /// when it is set. Without it the table goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "TORIC_NASH_OUT_DIR", hide_env_values = true)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

enum Failure {
    Malformed(String),
    Index(String),
    DepthCap,
    Io(String),
    Other(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Self::Other(_) => 1,
            Self::Malformed(_) => 2,
            Self::Index(_) => 3,
            Self::DepthCap => 4,
            Self::Io(_) => 5,
        }
    }
}

impl From<Malformed> for Failure {
    fn from(m: Malformed) -> Self {
        Self::Malformed(m.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LatticeIndex(_) => Self::Index(e.to_string()),
            Error::Overflow => Self::Other(format!(
                "{e}; the input is too large for 64-bit coordinates"
            )),
            _ => Self::Other(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Self::Io(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Parses and builds Γ. Engine errors at this stage blame the input.
fn load(gamma: &GammaArgs) -> Result<toric_nash::Gens, Failure> {
    gamma.parse()?.generators().map_err(|e| match e {
        Error::Overflow | Error::LatticeIndex(_) => Failure::from(e),
        _ => Failure::Malformed(e.to_string()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Hilbert { gamma } => cmd_hilbert(&gamma),
        Command::Nash { gamma } => cmd_nash(&gamma),
        Command::Resolve {
            gamma,
            max_depth,
            no_dedupe,
            format,
        } => cmd_resolve(&gamma, max_depth, !no_dedupe, format),
        Command::Scan {
            qmax,
            max_depth,
            out,
            out_dir,
        } => cmd_scan(qmax, max_depth, out, out_dir),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Malformed(m) => eprintln!("error: malformed input: {m}"),
                Failure::Index(m) => eprintln!("error: {m}"),
                Failure::DepthCap => eprintln!("depth cap reached before every chart was smooth"),
                Failure::Io(m) => eprintln!("error: io: {m}"),
                Failure::Other(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn emit(s: &str) -> Outcome {
    let mut out = io::stdout().lock();
    out.write_all(s.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn list(v: &[impl std::fmt::Display]) -> String {
    let items: Vec<_> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(","))
}

fn cmd_hilbert(gamma: &GammaArgs) -> Outcome {
    let g = load(gamma)?;
    let cone = g.cone().map_err(|e| Malformed(e.to_string()))?;
    let nf = normal_form(&cone)?;
    let hb = hilbert_basis(&cone)?;
    let fraction = hj_expand(nf.p, nf.q)?;
    let shape = match fraction_shape(&fraction) {
        _ if fraction.is_empty() => "smooth".to_string(),
        FractionShape::OneSegment => "one segment".to_string(),
        FractionShape::TwoSegments {
            position, value, ..
        } => {
            format!("two segments (entry {value} at position {position})")
        }
        FractionShape::Fibonacci => "fibonacci".to_string(),
        FractionShape::Other => "other".to_string(),
    };
    let mut s = String::new();
    s += &format!("cone: {cone}\n");
    s += &format!("normal form: {}/{}\n", nf.p, nf.q);
    s += &format!("hilbert basis: {}\n", list(hb.as_slice()));
    s += &format!("fraction: {fraction}\n");
    s += &format!("shape: {shape}\n");
    s += &format!(
        "theta edges: {}\n",
        theta_profile(&cone)?.compact_edge_count
    );
    s += &format!(
        "self-intersections: {}\n",
        list(&self_intersections(&cone)?)
    );
    s += &format!("smooth: {}\n", if is_smooth(&hb)? { "yes" } else { "no" });
    emit(&s)
}

fn cmd_nash(gamma: &GammaArgs) -> Outcome {
    let g = load(gamma)?;
    g.lattice_index().map_err(Failure::from).and_then(|i| {
        if i == 1 {
            Ok(())
        } else {
            Err(Failure::Index(format!("lattice index is {i}, expected 1")))
        }
    })?;
    let charts = nash_blowup(&g)?;
    let mut s = format!("gamma: {}\ncharts: {}\n", list(g.as_slice()), charts.len());
    for c in &charts {
        let class = toric_nash::classify(&c.minimal)?;
        s += &format!(
            "vertex {}  pair {},{}  chart {}  minimal {}  {}{}\n",
            c.vertex,
            c.pair.0 + 1,
            c.pair.1 + 1,
            list(c.chart_gens.as_slice()),
            list(c.minimal.as_slice()),
            class,
            if c.ambiguous {
                "  (ambiguous vertex)"
            } else {
                ""
            }
        );
    }
    emit(&s)
}

fn cmd_resolve(gamma: &GammaArgs, max_depth: usize, dedupe: bool, format: Format) -> Outcome {
    let g = load(gamma)?;
    let index = g.lattice_index()?;
    if index != 1 {
        return Err(Failure::Index(format!(
            "lattice index is {index}, expected 1"
        )));
    }
    let tree = resolve(&g, max_depth, dedupe)?;
    let s = match format {
        Format::Text => render::text(&tree),
        Format::Json => render::json(&tree, dedupe),
        Format::Dot => render::dot(&tree),
    };
    emit(&s)?;
    match tree.status {
        Status::Resolved => Ok(()),
        Status::DepthCapReached => Err(Failure::DepthCap),
    }
}

fn cmd_scan(
    qmax: u64,
    max_depth: usize,
    out: Option<PathBuf>,
    out_dir: Option<PathBuf>,
) -> Outcome {
    if qmax < 2 {
        return Err(Failure::Malformed(format!(
            "--qmax must be at least 2, got {qmax}"
        )));
    }
    let target = match (out, out_dir) {
        (Some(p), Some(dir)) if p.is_relative() => Some(dir.join(p)),
        (Some(p), _) => Some(p),
        (None, _) => None,
    };
    let sink: Box<dyn Write> = match &target {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    let rows = scan::<i64>(qmax, max_depth);
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    w.write_record(["p", "q", "theta_edges", "depth", "status"])?;
    let opt = |v: Option<usize>| v.map(|d| d.to_string()).unwrap_or_default();
    for r in &rows {
        w.write_record([
            r.p.to_string(),
            r.q.to_string(),
            opt(r.theta_edges),
            opt(r.depth),
            r.status.name().to_string(),
        ])?;
        if let ScanStatus::Error(e) = &r.status {
            eprintln!("{}/{}: {e}", r.p, r.q);
        }
    }
    w.flush()?;
    let count = |s: &str| rows.iter().filter(|r| r.status.name() == s).count();
    eprintln!(
        "{} cones: {} resolved, {} at depth cap, {} errors{}",
        rows.len(),
        count("resolved"),
        count("depth_cap"),
        count("error"),
        target
            .map(|p| format!("; wrote {}", p.display()))
            .unwrap_or_default()
    );
    Ok(())
}
