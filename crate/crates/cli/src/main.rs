//! `positroid`: command-line front end to the positroid library.
//!
//! Matroid files use the library's plain-text format; a FILE of `-` reads
//! standard input. Exit status is 2 for usage and parse errors and 1 for
//! domain errors, with the library error name on standard error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use positroid::census::{census, to_csv};
use positroid::classify::classify;
use positroid::connectivity::{canonical_tree_decomposition, connected_components, envelope_tree, TreeDecomposition};
use positroid::constructions::{circuit_matroid, cocircuit_matroid, n_graph, n_relaxed, uniform, wheel, whirl};
use positroid::matroid::find_minor;
use positroid::positroid::{decorated_permutation_of, envelope_class_with, envelope_positroid, grassmann_necklace_of, is_positroid, DEFAULT_BUDGET};
use positroid::{GroundSet, Matroid, Strategy};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "positroid", version, about = "Ordered matroids, positroids and envelope classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, basis count, circuits, loops and coloops.
    Info {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Decorated permutation in cycle notation.
    Perm {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Grassmann necklace.
    Necklace {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Positroid envelope, as a matroid file.
    Envelope {
        #[arg(default_value = "-")]
        file: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Every member of a positroid's envelope class.
    Class {
        #[arg(default_value = "-")]
        file: String,
        /// Largest search space (number of candidate families) to enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Canonical tree decomposition of each connected component.
    Decompose {
        #[arg(default_value = "-")]
        file: String,
        /// Also write the trees in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Positroid, binary and ternary classification.
    Classify {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a named matroid.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        /// R N for uniform, R for the wheel family, N for circuit and cocircuit.
        #[arg(required = true)]
        args: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Prints `true` or `false`.
    IsPositroid {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Searches FILE for a minor isomorphic to TARGET.
    Minor { file: String, target: String },
    /// CSV table of every positroid on N elements.
    Census {
        n: usize,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Uniform,
    Whirl,
    Wheel,
    Ngraph,
    Nrelaxed,
    Circuit,
    Cocircuit,
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{name}: {source}", name = .source.name())]
    Domain {
        #[from]
        source: positroid::Error,
    },
    #[error("io: {0}")]
    Io(#[from] io::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain { source } if source.is_parse() => 2,
            _ => 1,
        }
    }
}

type Outcome = Result<String, Failure>;

fn read_input(file: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if file == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(file)?;
    }
    Ok(text)
}

fn load(file: &str) -> Result<Matroid, Failure> {
    Ok(Matroid::parse(&read_input(file)?)?)
}

/// Writes to `path` if given, otherwise returns the text for standard output.
fn emit(text: String, path: Option<&Path>) -> Outcome {
    match path {
        Some(p) => {
            fs::write(p, text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn info(m: &Matroid) -> String {
    let g = m.ground();
    let mut out = format!("ground: {g}\nrank: {}\nbases: {}\n", m.rank(), m.num_bases());
    out.push_str(&format!("circuits: {}\n", m.circuits().render().join(" ")));
    out.push_str(&format!("loops: {}\ncoloops: {}\n", g.render(m.loops()), g.render(m.coloops())));
    out
}

fn tree_text(t: &TreeDecomposition) -> String {
    let mut out = String::new();
    for (i, n) in t.nodes.iter().enumerate() {
        let labels = n.matroid.ground().render(n.matroid.full());
        out.push_str(&format!("node {i}: {} {labels}", n.kind.name()));
        if let Some(c) = n.class_size {
            out.push_str(&format!(" class {c}"));
        }
        out.push('\n');
    }
    for e in &t.edges {
        out.push_str(&format!("edge {} -- {} via {}\n", e.a, e.b, e.connector));
    }
    out
}

fn decompose(m: &Matroid, dot: Option<&Path>) -> Outcome {
    let mut text = String::new();
    let mut dots = String::new();
    for (k, c) in connected_components(m).iter().enumerate() {
        let t = if is_positroid(c) { envelope_tree(c)? } else { canonical_tree_decomposition(c)? };
        text.push_str(&format!("component {k}: {}\n", c.ground().render(c.full())));
        text.push_str(&tree_text(&t));
        dots.push_str(&t.to_dot());
    }
    if let Some(p) = dot {
        fs::write(p, dots)?;
    }
    Ok(text)
}

fn construct(kind: Kind, args: &[usize]) -> Result<Matroid, Failure> {
    let want = if matches!(kind, Kind::Uniform) { 2 } else { 1 };
    if args.len() != want {
        return Err(Failure::Usage(format!("expected {want} integer argument(s), got {}", args.len())));
    }
    let n = args[0];
    let m = match kind {
        Kind::Uniform => uniform(args[0], args[1])?,
        Kind::Whirl => whirl(n)?,
        Kind::Wheel => wheel(n)?.1,
        Kind::Ngraph => n_graph(n)?.1,
        Kind::Nrelaxed => n_relaxed(n)?,
        Kind::Circuit => circuit_matroid(GroundSet::range(n))?,
        Kind::Cocircuit => cocircuit_matroid(GroundSet::range(n))?,
    };
    Ok(m)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Info { file } => Ok(info(&load(&file)?)),
        Command::Perm { file } => Ok(format!("{}\n", decorated_permutation_of(&load(&file)?).render())),
        Command::Necklace { file } => Ok(grassmann_necklace_of(&load(&file)?).render()),
        Command::Envelope { file, output } => emit(envelope_positroid(&load(&file)?).to_text(), output.as_deref()),
        Command::Class { file, budget } => {
            let class = envelope_class_with(&load(&file)?, budget, Strategy::default())?;
            let mut out = format!("# class size: {}\n", class.len());
            for (i, m) in class.members.iter().enumerate() {
                out.push_str(&format!("# member {}\n{}", i + 1, m.to_text()));
            }
            Ok(out)
        }
        Command::Decompose { file, dot } => decompose(&load(&file)?, dot.as_deref()),
        Command::Classify { file, format } => {
            let c = classify(&load(&file)?);
            Ok(match format {
                Format::Text => c.render_text(),
                Format::Kv => c.render_kv(),
            })
        }
        Command::Construct { kind, args, output } => emit(construct(kind, &args)?.to_text(), output.as_deref()),
        Command::IsPositroid { file } => Ok(format!("{}\n", is_positroid(&load(&file)?))),
        Command::Minor { file, target } => {
            if file == "-" && target == "-" {
                return Err(Failure::Usage("only one of FILE and TARGET can be standard input".into()));
            }
            let (m, t) = (load(&file)?, load(&target)?);
            Ok(match find_minor(&m, &t) {
                Some(w) => format!("delete: {}\ncontract: {}\n", m.ground().render(w.delete), m.ground().render(w.contract)),
                None => "none\n".into(),
            })
        }
        Command::Census { n, rank, budget } => Ok(to_csv(&census(n, rank, budget, Strategy::default())?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
