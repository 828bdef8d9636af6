use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Shear coordinates on the Farey tessellation.
///
/// Every result is computed on a finite part of the tessellation: the depth
/// and the fan windows used are part of each output.
#[derive(Debug, Parser)]
#[command(name = "farey-shear", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format; tables default to csv, shear and lambda files to json.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Window {
    /// Fan indices `LO:HI` of the window centers; with --window-k.
    #[arg(long, allow_hyphen_values = true, requires = "window_k")]
    pub window_m: Option<String>,
    /// Largest window half-width k; with --window-m.
    #[arg(long, requires = "window_m")]
    pub window_k: Option<u32>,
    /// Comma-separated fan tips.
    #[arg(long, default_value = "1/0,0/1,1/1")]
    pub tips: String,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    /// Comma-separated edge keys.
    #[arg(long, conflicts_with = "fan")]
    pub chain: Option<String>,
    /// Use the fan chain at this tip instead, from --start walking by --step.
    #[arg(long)]
    pub fan: Option<String>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub start: i64,
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    pub step: i64,
    /// Number of series terms; defaults to one less than the chain length.
    #[arg(long)]
    pub terms: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the edges and triangles up to a depth with their generations.
    Tessellate {
        #[arg(long, default_value_t = 8)]
        depth: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Shear file of a built-in circle homeomorphism.
    ShearFromMap {
        /// moebius, piecewise_linear, power or fan_earthquake.
        #[arg(long)]
        family: String,
        /// Comma-separated parameters.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        params: String,
        #[arg(long, default_value_t = 8)]
        depth: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate the characteristic map of a shear file.
    CharMap {
        shear: PathBuf,
        /// Comma-separated vertices; all vertices within depth when absent.
        #[arg(long)]
        vertices: Option<String>,
        #[arg(long)]
        depth: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Fan ratios over a window and the resulting distortion estimate.
    QsCheck {
        shear: PathBuf,
        #[arg(long)]
        depth: Option<u32>,
        #[command(flatten)]
        window: Window,
        #[command(flatten)]
        output: Output,
    },
    /// Deviation of fan ratios from 1, bucketed by generation.
    SymCheck {
        shear: PathBuf,
        #[arg(long)]
        depth: Option<u32>,
        #[command(flatten)]
        window: Window,
        /// Comma-separated generation thresholds.
        #[arg(long, default_value = "0,2,4,6")]
        buckets: String,
        #[command(flatten)]
        output: Output,
    },
    /// Leaf-length series along a chain.
    HomeoCheck {
        shear: PathBuf,
        #[arg(long)]
        depth: Option<u32>,
        #[command(flatten)]
        chain: ChainArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Decorated tessellations given by lambda lengths.
    Lambda {
        #[command(subcommand)]
        command: LambdaCommand,
    },
    /// Fan-ratio proximity of two shear files.
    Distance {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        depth: Option<u32>,
        #[command(flatten)]
        window: Window,
        #[command(flatten)]
        output: Output,
    },
    /// SVG of the image tessellation.
    Render {
        /// A shear file, or a lambda file with --lambda.
        input: PathBuf,
        #[arg(long)]
        lambda: bool,
        #[arg(long)]
        depth: Option<u32>,
        /// disk or half-plane-clip.
        #[arg(long, default_value = "disk")]
        model: String,
        #[arg(long, default_value_t = 1.0)]
        stroke_width: f64,
        #[arg(long, default_value_t = 800)]
        size: u32,
        /// Comma-separated edge keys to highlight.
        #[arg(long)]
        highlight: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum LambdaCommand {
    /// Shear file of the developed lambda lengths.
    ToShear {
        lambda: PathBuf,
        #[arg(long)]
        depth: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Ratios of horocyclic-length sums over fan windows.
    CheckE {
        lambda: PathBuf,
        #[arg(long)]
        depth: Option<u32>,
        #[command(flatten)]
        window: Window,
        /// Also report whether all lambda lengths lie in [1/K, K].
        #[arg(long)]
        pinched: Option<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Leaf-length series along a chain from lambda lengths.
    SeriesD {
        lambda: PathBuf,
        #[arg(long)]
        depth: Option<u32>,
        #[command(flatten)]
        chain: ChainArgs,
        /// First leaf arc; anchored on the decorating horocycle when absent.
        #[arg(long)]
        first_term: Option<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Vertex positions and horocycles of the developed decoration.
    Develop {
        lambda: PathBuf,
        #[arg(long)]
        depth: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
}
