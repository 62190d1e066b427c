//! `cobar`: build simplicial sets and run the cobar, π₁, comparison and
//! Lie-model pipelines from the command line.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cobar::coalgebra::{chains_map, normalized_chains, DgCoalgebra};
use cobar::corpus;
use cobar::homology::Bounds;
use cobar::report::{
    build_summary, chains_summary, compare_report, free_lie_report, loop_homology_report, nogo_report, pi1_report,
    Report, Status, DEFAULT_MAX_ELEMENTS,
};
use cobar::simplicial::{collapse_map, minimal_sphere, nerve, nerve_map, GroupTable, SimplicialMap, SimplicialSet};
use cobar::Error;

#[derive(Parser)]
#[command(name = "cobar", version, about = "Cobar constructions, fundamental groups and Lie models of simplicial sets")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Cobar degree bound N.
    #[arg(short = 'N', long = "deg-bound", global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    deg_bound: u64,
    /// Word-length bound L.
    #[arg(short = 'L', long = "word-bound", global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    word_bound: u64,
    /// Gröbner degree bound.
    #[arg(short = 'G', long = "groebner-bound", global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    groebner_bound: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exit with code 3 when the bounds leave a verdict undecided.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Write a simplicial set or map as canonical JSON.
    #[command(subcommand)]
    Build(Build),
    /// Dimensions and axiom checks of normalized chains.
    Chains {
        /// Simplicial-set file, coalgebra file or corpus name.
        input: String,
        /// Also write the coalgebra as JSON.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Fundamental group from the group-like elements of H0 of the cobar construction.
    Pi1 {
        /// Simplicial-set file.
        space: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
        max_elements: usize,
    },
    /// Homology of the cobar construction through degree N.
    LoopHomology {
        /// Simplicial-set file, coalgebra file or corpus name.
        input: String,
    },
    /// Quasi-isomorphism and Ω-quasi-isomorphism verdicts for a map.
    Compare {
        /// Simplicial-map file.
        map: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
        max_elements: usize,
    },
    /// Whether k[G] could be the symmetric algebra on H0 of the Lie model.
    Nogo {
        /// Cocommutative coalgebra file, simplicial-set file or corpus name.
        input: String,
        /// Group name (z3, s3, z2xz2, ...) or group-table file.
        #[arg(long)]
        group: String,
    },
    /// Free graded Lie algebra dimensions and the PBW comparison.
    Lie {
        /// Generator degrees.
        #[arg(required = true)]
        degrees: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// List the named coalgebras accepted in place of a file.
    Corpus,
}

#[derive(Subcommand)]
enum Build {
    /// The minimal n-sphere: a basepoint and one n-simplex.
    Sphere {
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The nerve of a finite group, truncated above --trunc.
    Nerve {
        /// Group name or group-table file.
        group: String,
        #[arg(long, default_value_t = 3)]
        trunc: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Validate a simplicial-set file and rewrite it canonically.
    Json {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The map of nerves induced by a group homomorphism.
    NerveMap {
        source: String,
        target: String,
        /// Images of the source elements in table order, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        hom: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        trunc: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The map from a simplicial set to the point.
    Collapse {
        space: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Failures carry the exit code they map to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundTooSmall(_) | Error::TruncationTooLarge { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, format!("{contents}\n"))
        .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))
}

fn load_space(path: &Path) -> Result<SimplicialSet, Failure> {
    SimplicialSet::from_json_str(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_group(arg: &str) -> Result<GroupTable, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        GroupTable::from_json_str(&read(path)?).map_err(|e| input_error(format!("{arg}: {e}")))
    } else {
        Ok(GroupTable::by_name(arg)?)
    }
}

/// A coalgebra file (recognised by its `basis` key), the normalized chains
/// of a simplicial-set file, or a corpus entry.
fn load_coalgebra(arg: &str) -> Result<DgCoalgebra, Failure> {
    let path = Path::new(arg);
    if !path.is_file() {
        return Ok(corpus::by_name(arg)?);
    }
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| input_error(format!("{arg}: {e}")))?;
    let parsed = if value.get("basis").is_some() {
        DgCoalgebra::from_json_str(&text)
    } else {
        SimplicialSet::from_json_str(&text).and_then(|s| normalized_chains(&s))
    };
    parsed.map_err(|e| input_error(format!("{arg}: {e}")))
}

/// Writes `json` to `output` and returns the summary, or returns `json`
/// itself as the report when no output path is given.
fn emit(json: String, output: Option<PathBuf>, summary: Report) -> Result<Report, Failure> {
    match output {
        Some(path) => {
            write(&path, &json)?;
            Ok(summary)
        }
        None => {
            let value = serde_json::from_str(&json).expect("builders emit valid JSON");
            Ok(Report { json: value, text: json, status: summary.status })
        }
    }
}

fn build(cmd: Build) -> Result<Report, Failure> {
    match cmd {
        Build::Sphere { n, output } => {
            let s = minimal_sphere(n)?;
            emit(s.to_json_string(), output, build_summary(&s))
        }
        Build::Nerve { group, trunc, output } => {
            let s = nerve(&load_group(&group)?, trunc)?;
            emit(s.to_json_string(), output, build_summary(&s))
        }
        Build::Json { file, output } => {
            let s = load_space(&file)?;
            let summary = build_summary(&s);
            if summary.status != Status::Success {
                return Err(input_error(format!("{}: {}", file.display(), summary.text.trim_end())));
            }
            emit(s.to_json_string(), output, summary)
        }
        Build::NerveMap { source, target, hom, trunc, output } => {
            let f = nerve_map(&load_group(&source)?, &load_group(&target)?, &hom, trunc)?;
            let summary = build_summary(f.source());
            emit(map_json(&f), output, summary)
        }
        Build::Collapse { space, output } => {
            let f = collapse_map(&load_space(&space)?);
            let summary = build_summary(f.source());
            emit(map_json(&f), output, summary)
        }
    }
}

fn map_json(f: &SimplicialMap) -> String {
    serde_json::to_string_pretty(&f.to_json()).expect("maps serialize")
}

fn corpus_report() -> Report {
    let names: Vec<&str> = corpus::all().into_iter().map(|(n, _)| n).collect();
    let mut text = String::new();
    for (name, c) in corpus::all() {
        text.push_str(&format!("{name:<22} reduced dims {:?}\n", c.dims()));
    }
    Report { json: serde_json::json!({ "coalgebras": names }), text, status: Status::Success }
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let o = &cli.opts;
    let bounds =
        Bounds { degree: o.deg_bound as usize, word: o.word_bound as usize, groebner: o.groebner_bound as usize };
    match cli.command {
        Command::Build(b) => build(b),
        Command::Chains { input, output } => {
            let c = load_coalgebra(&input)?;
            if let Some(path) = output {
                write(&path, &c.to_json_string())?;
            }
            Ok(chains_summary(&c))
        }
        Command::Pi1 { space, max_elements } => Ok(pi1_report(&load_space(&space)?, bounds, max_elements)?),
        Command::LoopHomology { input } => Ok(loop_homology_report(&load_coalgebra(&input)?, bounds)?),
        Command::Compare { map, max_elements } => {
            let f = SimplicialMap::from_json_str(&read(&map)?)
                .map_err(|e| input_error(format!("{}: {e}", map.display())))?;
            Ok(compare_report(&chains_map(&f)?, bounds, max_elements)?)
        }
        Command::Nogo { input, group } => Ok(nogo_report(&load_coalgebra(&input)?, &load_group(&group)?, bounds)?),
        Command::Lie { degrees, max_degree } => {
            if degrees.contains(&0) {
                return Err(input_error("generator degrees must be positive"));
            }
            Ok(free_lie_report(&degrees, max_degree))
        }
        Command::Corpus => Ok(corpus_report()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, strict) = (cli.opts.format, cli.opts.strict);
    match run(cli) {
        Ok(report) => {
            match format {
                Format::Json => println!("{}", report.json_string()),
                Format::Text => print!("{}", report.text),
            }
            ExitCode::from(match report.status {
                Status::Success => 0,
                Status::VerdictFail => 1,
                Status::Indeterminate if strict => 3,
                Status::Indeterminate => 0,
            })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
