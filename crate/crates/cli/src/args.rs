use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "schubert-ed", version, about = "Effective good divisibility of rational homogeneous varieties")]
pub struct Cli {
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Cap on Bruhat comparisons per scan; 0 means unlimited.
    #[arg(long, global = true, default_value_t = 0)]
    pub budget_pairs: u64,
    /// Wall-clock cap per scan in seconds; 0 means unlimited.
    #[arg(long, global = true, default_value_t = 0)]
    pub budget_seconds: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for enumeration caches.
    #[arg(long, global = true, env = "SCHUBERT_ED_CACHE")]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymbolSource {
    Partition,
    Indexset,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// A, B, C, D, E6, E7, E8, F4, G2 (or E with --rank).
    #[arg(long)]
    pub family: String,
    /// Required for A to D.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Excluded nodes, comma separated or repeated.
    #[arg(long = "node", value_delimiter = ',', required_unless_present = "flag")]
    pub nodes: Vec<usize>,
    /// Exclude every node (the complete flag variety).
    #[arg(long, conflicts_with = "nodes")]
    pub flag: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Effective good divisibility of G/P.
    Ed {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
    },
    /// Bruhat comparison of two words.
    Bruhat {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Length histogram of the minimal coset representatives.
    Wp {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Conversions between partitions, index sets and their duals.
    Symbols {
        /// B or D.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        from: SymbolSource,
        /// Comma-separated parts or entries.
        #[arg(long, value_delimiter = ',')]
        value: Vec<usize>,
        /// Type-D tag for partitions with a part equal to k.
        #[arg(long, default_value_t = 0)]
        t: u8,
    },
    /// Numeric obstruction to non-constant morphisms.
    Morphism {
        #[command(flatten)]
        source: SpecArgs,
        /// Use this e.d. for the source instead of computing it.
        #[arg(long)]
        source_ed: Option<usize>,
        #[arg(long, requires_all = ["target_node"], conflicts_with = "q")]
        target_family: Option<String>,
        #[arg(long)]
        target_rank: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        target_node: Vec<usize>,
        /// Excluded nodes of Q for a target Q/P̄ in the source group.
        #[arg(long, value_delimiter = ',')]
        q: Vec<usize>,
        /// Excluded nodes of P̄; defaults to all nodes.
        #[arg(long, value_delimiter = ',', requires = "q")]
        pbar: Vec<usize>,
    },
    /// Run verification suites.
    Verify {
        /// table1-classical, table1-exceptional, table2, table3, prop34,
        /// prop310, prop24, duality, dictionary or all.
        #[arg(long, value_delimiter = ',', required = true)]
        suite: Vec<String>,
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        m: Option<usize>,
        /// Include the E8 nodes 2 to 6 in table1-exceptional.
        #[arg(long)]
        heavy_e8: bool,
    },
    /// Inspect or clear the enumeration cache.
    Cache {
        #[arg(long, conflicts_with = "list")]
        clear: bool,
        #[arg(long)]
        list: bool,
    },
}
