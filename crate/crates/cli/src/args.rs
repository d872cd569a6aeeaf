use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "alphametric", version, about = "Eccentricities, centers and metric classification of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit the JSON report (the default).
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV rows instead of JSON (bench and ecc only).
    #[arg(long, global = true)]
    pub csv: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the metric: alpha index, thinness, disk convexity, triangle condition.
    Profile(InputArgs),
    /// Eccentricities: exact, approximated from a sweep pair, or lower bounds from a given pair.
    Ecc(EccArgs),
    /// Find a central or nearly central vertex.
    Center(CenterArgs),
    /// BFS spanning tree approximating the eccentricities.
    Tree(TreeArgs),
    /// Generate seeded graphs as edge lists with JSON sidecars.
    Gen(GenArgs),
    /// Run an invariant suite over a seeded corpus.
    Verify(VerifyArgs),
    /// Compare approximate centers with exact ones over a corpus.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge-list file; `-` reads standard input.
    #[arg(long, short)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct AlphaArgs {
    /// Skip the classifier and take the alpha index as given.
    #[arg(long = "assert-alpha", visible_alias = "alpha", value_name = "I")]
    pub assert_alpha: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EccKind {
    Exact,
    Approx,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Linear,
    Mdp,
}

#[derive(Debug, Args)]
pub struct EccArgs {
    pub kind: EccKind,
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "mdp")]
    pub mode: Mode,
    /// Mutually distant pair for `lower`; found by sweeps when omitted.
    #[arg(long, num_args = 2, value_names = ["X", "Y"])]
    pub pair: Option<Vec<usize>>,
    #[command(flatten)]
    pub alpha: AlphaArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CenterAlgo {
    Alpha1,
    #[value(name = "alpha1-delta")]
    Alpha1Delta,
    #[value(name = "rad-plus-1")]
    RadPlus1,
    Oracle,
}

#[derive(Debug, Args)]
pub struct CenterArgs {
    #[arg(required_unless_present = "algo_flag", conflicts_with = "algo_flag")]
    pub algo: Option<CenterAlgo>,
    #[arg(long = "algo", id = "algo_flag", value_enum)]
    pub algo_flag: Option<CenterAlgo>,
    #[command(flatten)]
    pub input: InputArgs,
    /// Include per-iteration search state.
    #[arg(long)]
    pub trace: bool,
    #[command(flatten)]
    pub alpha: AlphaArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeKind {
    Mdp,
    Sweep,
    Alpha1,
}

#[derive(Debug, Args)]
pub struct TreeArgs {
    pub kind: TreeKind,
    #[command(flatten)]
    pub input: InputArgs,
    /// Also write the tree as an edge list.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub alpha: AlphaArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Chordal,
    DistanceHereditary,
    Ptolemaic,
    GluedBlocks,
    Cycle,
    Path,
    Grid,
    Pattern,
    GnpConnected,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub class: GenKind,
    #[arg(long, short)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 3)]
    pub max_attach: usize,
    /// Edge probability for gnp-connected.
    #[arg(long, default_value_t = 0.1)]
    pub p: f64,
    /// Columns for grid.
    #[arg(long, default_value_t = 4)]
    pub cols: usize,
    /// Pattern name (c4, c5, c6, p5, k4, diamond, w6pp).
    #[arg(long)]
    pub name: Option<String>,
    /// Pendant, true-twin and false-twin weights for distance-hereditary.
    #[arg(long, value_delimiter = ',', num_args = 3, default_values_t = [2, 1, 1])]
    pub mix: Vec<u32>,
    /// Chordal, pentagon and wheel weights for glued-blocks.
    #[arg(long, value_delimiter = ',', num_args = 3, default_values_t = [6, 1, 1])]
    pub block_mix: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CorpusArg {
    Chordal,
    DistanceHereditary,
    Ptolemaic,
    GluedBlocks,
    Mixed,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    #[arg(long, value_enum, default_value = "chordal")]
    pub corpus: CorpusArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    #[arg(long, default_value_t = 8)]
    pub n_min: usize,
    #[arg(long, default_value_t = 120)]
    pub n_max: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    pub suite: String,
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// Verify a single graph instead of a generated corpus.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub alpha: AlphaArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[arg(long, value_enum, default_value = "mdp")]
    pub mode: Mode,
}
