//! Command-line front end: read a tree, lay it out, write SVG, JSON, or a
//! one-line report.
//!
//! Exit codes: 0 success, 1 unreadable input or bad arguments, 2 the input
//! is not a tree, 3 the layout failed its own verification.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use convex_tree::{
    drawing_json, layout, morph, parse_json, parse_newick, report_line, to_svg, Drawing, Embedding, LayoutError,
    LayoutOptions, LengthStrategy, ParseError, RenderOptions, Tree, TreeError, Verification,
};

#[derive(Parser)]
#[command(name = "convex-tree", version, about = "Tree drawings with convex faces and optimal angular resolution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lay out a tree given as Newick or JSON (`-` reads standard input).
    Layout {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        /// Edge-length strategy.
        #[arg(long, default_value = "uniform", value_parser = parse_lengths)]
        lengths: LengthStrategy,
        /// Draw the concentric guide circles of a radial layout.
        #[arg(long)]
        circles: bool,
        /// Drawing units per unit of length in SVG output.
        #[arg(long, default_value_t = 40.0, value_parser = parse_scale)]
        scale: f64,
    },
    /// Interpolate between two length strategies; prints a JSON array of
    /// drawings, one per frame.
    Morph {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "uniform", value_parser = parse_lengths)]
        from: LengthStrategy,
        #[arg(long, default_value = "radial", value_parser = parse_lengths)]
        to: LengthStrategy,
        /// Number of frames, including both ends.
        #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(u32).range(2..))]
        frames: u32,
    },
}

#[derive(clap::Args)]
struct Common {
    /// Keep the input's rotation system instead of choosing the best one.
    #[arg(long)]
    fixed_embedding: bool,
    /// Vertex at the origin (and the center of radial layouts).
    #[arg(long)]
    placement_root: Option<usize>,
    /// Skip the quadratic crossing check; faces and resolution are still checked.
    #[arg(long)]
    no_verify: bool,
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Json,
    Report,
}

fn parse_lengths(s: &str) -> Result<LengthStrategy, String> {
    s.parse()
}

fn parse_scale(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("scale must be a positive number, got {s:?}")),
    }
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure { code: if e.is_structural() { 2 } else { 1 }, message: e.to_string() }
    }
}

impl From<LayoutError> for Failure {
    fn from(e: LayoutError) -> Self {
        let code = match &e {
            LayoutError::Parse(p) if p.is_structural() => 2,
            LayoutError::Tree(TreeError::MissingWeight(..)) => 1,
            LayoutError::Tree(_) => 2,
            LayoutError::Verification(_) => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn read_tree(input: &PathBuf) -> Result<Tree, Failure> {
    let text = if input.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(input).map_err(|e| Failure::usage(format!("{}: {e}", input.display())))?
    };
    let tree = if text.trim_start().starts_with('{') { parse_json(&text)? } else { parse_newick(&text)? };
    Ok(tree)
}

fn options(common: &Common, lengths: LengthStrategy) -> LayoutOptions {
    let mode = if common.fixed_embedding { Embedding::Fixed } else { Embedding::Free };
    let mut opts = LayoutOptions::new(mode).lengths(lengths).verify(if common.no_verify {
        Verification::Linear
    } else {
        Verification::Full
    });
    if let Some(root) = common.placement_root {
        opts = opts.placement_root(root);
    }
    opts
}

fn check_root(tree: &Tree, common: &Common) -> Result<(), Failure> {
    match common.placement_root {
        Some(r) if r >= tree.len() => {
            Err(Failure::usage(format!("placement root {r} is out of range for {} vertices", tree.len())))
        }
        _ => Ok(()),
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    let result = match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| format!("standard output: {e}"))
        }
    };
    result.map_err(Failure::usage)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Layout { input, common, format, lengths, circles, scale } => {
            let tree = read_tree(&input)?;
            check_root(&tree, &common)?;
            let drawing = layout(&tree, &options(&common, lengths))?;
            let text = match format {
                Format::Svg => to_svg(&drawing, &RenderOptions { scale, circles, ..RenderOptions::default() }),
                Format::Json => drawing_json(&drawing) + "\n",
                Format::Report => report_line(&drawing.report) + "\n",
            };
            emit(&common.output, &text)
        }
        Command::Morph { input, common, from, to, frames } => {
            let tree = read_tree(&input)?;
            check_root(&tree, &common)?;
            let a = layout(&tree, &options(&common, from))?;
            let b = layout(&tree, &options(&common, to))?;
            let steps = frames - 1;
            let docs: Vec<String> = (0..=steps)
                .map(|i| morph(&a, &b, f64::from(i) / f64::from(steps)).map(|d: Drawing| drawing_json(&d)))
                .collect::<Result<_, _>>()?;
            emit(&common.output, &format!("[\n{}\n]\n", docs.join(",\n")))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
