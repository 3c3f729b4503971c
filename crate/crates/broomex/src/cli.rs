//! Command-line front end: construct, count, detect, enumerate, search,
//! verify and nbrhood subcommands over graph6 streams.
//!
//! Output is deterministic for a fixed invocation: graph and report orderings
//! are canonical and nothing time- or host-dependent is printed.

use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::detect::{find_broom, BroomWitness};
use crate::enumerate::for_each_graph;
use crate::families::{make_broom, make_f, make_h, make_hstar, BroomSpec};
use crate::graph::{Graph, Objective};
use crate::graph6::{graph6_decode, graph6_encode};
use crate::hypergraph::{classify_rsets, has_berge_path};
use crate::search::{
    extremal_search_opts, verify_predictions_opts, ExtremalReport, SearchOptions, VerifySummary,
};

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

#[derive(Parser)]
#[command(
    name = "broomex",
    version,
    about = "Extremal degree-power and star-count tooling over broom-free graphs"
)]
pub struct Cli {
    /// Worker threads for search and verify; 1 keeps everything sequential.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named family as one graph6 line.
    Construct(ConstructArgs),
    /// Evaluate an objective on each input graph.
    Count(CountArgs),
    /// Decide broom containment for each input graph.
    Detect(DetectArgs),
    /// Stream all graphs on n vertices up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Exhaustive extremal search at fixed parameters.
    Search(SearchArgs),
    /// Sweep a range of n and compare against the closed forms.
    Verify(VerifyArgs),
    /// Classify r-sets by common neighborhood and probe Berge paths.
    Nbrhood(NbrhoodArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "H")]
    H,
    #[value(name = "Hstar")]
    Hstar,
    #[value(name = "F")]
    F,
    #[value(name = "star")]
    Star,
    #[value(name = "path")]
    Path,
    #[value(name = "broom")]
    Broom,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Er,
    Stars,
}

impl From<ObjectiveArg> for Objective {
    fn from(a: ObjectiveArg) -> Objective {
        match a {
            ObjectiveArg::Er => Objective::Er,
            ObjectiveArg::Stars => Objective::Stars,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFormat {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct ConstructArgs {
    /// Which family to build.
    #[arg(long)]
    family: FamilyArg,
    /// Vertex count. For broom it must equal ell + s.
    #[arg(long)]
    n: u32,
    /// Clique size for H and Hstar.
    #[arg(long)]
    k: Option<u32>,
    /// Broom path length.
    #[arg(long)]
    ell: Option<u32>,
    /// Broom leaf count.
    #[arg(long)]
    s: Option<u32>,
    /// Write here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CountArgs {
    /// er sums degree powers, stars counts r-leaf stars.
    #[arg(long)]
    what: ObjectiveArg,
    #[arg(long)]
    r: u32,
    /// graph6 lines; standard input when omitted.
    file: Option<PathBuf>,
}

#[derive(Args)]
struct DetectArgs {
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    s: u32,
    /// Emit JSON with an embedding instead of a bare verdict.
    #[arg(long)]
    witness: bool,
    file: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Restrict to B(ell, s)-free graphs (give both ell and s).
    #[arg(long, requires = "s")]
    ell: Option<u32>,
    #[arg(long, requires = "ell")]
    s: Option<u32>,
    #[arg(long)]
    connected: bool,
    /// Print just the class count.
    #[arg(long)]
    count_only: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    s: u32,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    objective: ObjectiveArg,
    #[arg(long, value_enum, default_value_t = SearchFormat::Text)]
    format: SearchFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    s: u32,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    nmin: u32,
    #[arg(long)]
    nmax: u32,
    #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
    format: VerifyFormat,
}

#[derive(Args)]
struct NbrhoodArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    s: u32,
    file: Option<PathBuf>,
}

pub fn run(cli: Cli) -> CliResult<()> {
    let opts = SearchOptions {
        threads: cli.threads.max(1),
        prune: true,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Construct(args) => construct(args, &mut out),
        Command::Count(args) => count(args, &mut out),
        Command::Detect(args) => detect(args, &mut out),
        Command::Enumerate(args) => enumerate(args, &mut out),
        Command::Search(args) => search(args, opts, &mut out),
        Command::Verify(args) => verify(args, opts, &mut out),
        Command::Nbrhood(args) => nbrhood(args, &mut out),
    }
}

fn construct(args: ConstructArgs, out: &mut impl Write) -> CliResult<()> {
    let need = |opt: Option<u32>, flag: &str| -> CliResult<u32> {
        opt.ok_or_else(|| format!("--{flag} is required for this family").into())
    };
    let graph = match args.family {
        FamilyArg::H => make_h(need(args.k, "k")?, args.n)?,
        FamilyArg::Hstar => make_hstar(need(args.k, "k")?, args.n)?,
        FamilyArg::F => make_f(args.n)?,
        FamilyArg::Star => Graph::star(args.n as usize)?,
        FamilyArg::Path => Graph::path(args.n as usize)?,
        FamilyArg::Broom => {
            let spec = BroomSpec::new(need(args.ell, "ell")?, need(args.s, "s")?)?;
            if args.n != spec.broom_order() {
                return Err(format!(
                    "broom B({},{}) has {} vertices, but --n {} was given",
                    spec.ell(),
                    spec.s(),
                    spec.broom_order(),
                    args.n
                )
                .into());
            }
            make_broom(&spec)?
        }
    };
    let line = graph6_encode(&graph)?;
    match args.output {
        Some(path) => {
            let mut f = File::create(path)?;
            writeln!(f, "{line}")?;
        }
        None => writeln!(out, "{line}")?,
    }
    Ok(())
}

fn read_graphs(path: Option<&Path>) -> CliResult<Vec<Graph>> {
    let mut text = String::new();
    match path {
        Some(p) => {
            BufReader::new(File::open(p)?).read_to_string(&mut text)?;
        }
        None => {
            io::stdin().lock().read_to_string(&mut text)?;
        }
    }
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(graph6_decode(line).map_err(|e| format!("line {}: {e}", i + 1))?);
    }
    Ok(graphs)
}

fn count(args: CountArgs, out: &mut impl Write) -> CliResult<()> {
    let objective: Objective = args.what.into();
    for g in read_graphs(args.file.as_deref())? {
        writeln!(out, "{}", objective.evaluate(&g, args.r)?)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct DetectLine {
    contains: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    leaves: Option<Vec<usize>>,
}

fn detect(args: DetectArgs, out: &mut impl Write) -> CliResult<()> {
    let spec = BroomSpec::new(args.ell, args.s)?;
    for g in read_graphs(args.file.as_deref())? {
        let witness = find_broom(&g, &spec);
        if args.witness {
            let line = match witness {
                Some(BroomWitness { path, leaves }) => DetectLine {
                    contains: true,
                    path: Some(path),
                    leaves: Some(leaves),
                },
                None => DetectLine {
                    contains: false,
                    path: None,
                    leaves: None,
                },
            };
            writeln!(out, "{}", serde_json::to_string(&line)?)?;
        } else {
            writeln!(out, "{}", witness.is_some())?;
        }
    }
    Ok(())
}

fn enumerate(args: EnumerateArgs, out: &mut impl Write) -> CliResult<()> {
    let filter = match (args.ell, args.s) {
        (Some(ell), Some(s)) => Some(BroomSpec::new(ell, s)?),
        _ => None,
    };
    if args.count_only {
        let count = crate::enumerate::enumerate_count(args.n, filter.as_ref(), args.connected)?;
        writeln!(out, "{count}")?;
        return Ok(());
    }
    let mut io_err: Option<io::Error> = None;
    for_each_graph(args.n, filter.as_ref(), args.connected, |g| {
        if io_err.is_some() {
            return;
        }
        match graph6_encode(g) {
            Ok(line) => {
                if let Err(e) = writeln!(out, "{line}") {
                    io_err = Some(e);
                }
            }
            Err(_) => unreachable!("enumerated graphs stay far below the graph6 cap"),
        }
    })?;
    match io_err {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}

fn search(args: SearchArgs, opts: SearchOptions, out: &mut impl Write) -> CliResult<()> {
    let spec = BroomSpec::new(args.ell, args.s)?;
    let report = extremal_search_opts(&spec, args.n, args.r, args.objective.into(), &opts)?;
    match args.format {
        SearchFormat::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        SearchFormat::Text => write_report_text(&report, out)?,
    }
    Ok(())
}

fn write_report_text(report: &ExtremalReport, out: &mut impl Write) -> io::Result<()> {
    writeln!(
        out,
        "B({},{})  n={}  r={}  objective={}",
        report.spec.ell(),
        report.spec.s(),
        report.n,
        report.r,
        report.objective
    )?;
    writeln!(
        out,
        "  optimum={}  predicted={}({})  agrees={}  unique_and_matches={}",
        report.optimum,
        report.predicted_value,
        report.predicted_family,
        report.agrees,
        report.unique_and_matches
    )?;
    writeln!(out, "  optimizers: {}", report.optimizers.join(" "))
}

fn verify(args: VerifyArgs, opts: SearchOptions, out: &mut impl Write) -> CliResult<()> {
    let spec = BroomSpec::new(args.ell, args.s)?;
    let summary = verify_predictions_opts(&spec, args.r, args.nmin, args.nmax, &opts)?;
    match args.format {
        VerifyFormat::Json => writeln!(out, "{}", serde_json::to_string(&summary)?)?,
        VerifyFormat::Csv => write_verify_csv(&summary, out)?,
        VerifyFormat::Text => write_verify_text(&summary, out)?,
    }
    Ok(())
}

/// One CSV row per n, both objectives side by side. graph6 uses only bytes
/// 63..=126, so ';' is a safe separator inside the optimizer cells.
fn write_verify_csv(summary: &VerifySummary, out: &mut impl Write) -> CliResult<()> {
    writeln!(
        out,
        "ell,s,r,n,predicted_family,\
         er_optimum,er_predicted,er_agrees,er_unique_and_matches,er_optimizers,\
         stars_optimum,stars_predicted,stars_agrees,stars_unique_and_matches,stars_optimizers"
    )?;
    let er = &summary.sweeps[0];
    let stars = &summary.sweeps[1];
    for (a, b) in er.reports.iter().zip(&stars.reports) {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            summary.spec.ell(),
            summary.spec.s(),
            summary.r,
            a.n,
            // Keep the cell free of the CSV separator.
            a.predicted_family.to_string().replace(',', ";"),
            a.optimum,
            a.predicted_value,
            a.agrees,
            a.unique_and_matches,
            a.optimizers.join(";"),
            b.optimum,
            b.predicted_value,
            b.agrees,
            b.unique_and_matches,
            b.optimizers.join(";"),
        )?;
    }
    Ok(())
}

fn write_verify_text(summary: &VerifySummary, out: &mut impl Write) -> CliResult<()> {
    writeln!(
        out,
        "B({},{})  r={}  n in {}..={}",
        summary.spec.ell(),
        summary.spec.s(),
        summary.r,
        summary.n_min,
        summary.n_max
    )?;
    for sweep in &summary.sweeps {
        let claim = if sweep.uniqueness_claimed {
            "agreement and uniqueness"
        } else {
            "agreement only"
        };
        match sweep.threshold {
            Some(n0) => writeln!(out, "  {}: {claim} from n = {n0} onward", sweep.objective)?,
            None => writeln!(out, "  {}: no all-good suffix in range", sweep.objective)?,
        }
        for rep in &sweep.reports {
            writeln!(
                out,
                "    n={:<2} optimum={:<8} predicted={:<8} agrees={:<5} unique_and_matches={:<5} optimizers={}",
                rep.n,
                rep.optimum,
                rep.predicted_value,
                rep.agrees,
                rep.unique_and_matches,
                rep.optimizers.join(" ")
            )?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct NbrhoodLine {
    r: u32,
    ell: u32,
    s: u32,
    k: u32,
    sizes: NbrhoodSizes,
    berge_path_k_plus_1: bool,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct NbrhoodSizes {
    H1: usize,
    H2: usize,
    H3: usize,
    H4: usize,
}

fn nbrhood(args: NbrhoodArgs, out: &mut impl Write) -> CliResult<()> {
    let spec = BroomSpec::new(args.ell, args.s)?;
    for g in read_graphs(args.file.as_deref())? {
        let cls = classify_rsets(&g, args.r, &spec)?;
        let [h1, h2, h3, h4] = cls.sizes();
        let line = NbrhoodLine {
            r: args.r,
            ell: spec.ell(),
            s: spec.s(),
            k: spec.k(),
            sizes: NbrhoodSizes {
                H1: h1,
                H2: h2,
                H3: h3,
                H4: h4,
            },
            berge_path_k_plus_1: has_berge_path(&cls.h2, spec.k() as usize + 1),
        };
        writeln!(out, "{}", serde_json::to_string(&line)?)?;
    }
    Ok(())
}
