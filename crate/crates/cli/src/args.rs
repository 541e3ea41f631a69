use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone)]
#[command(name = "d2kit", version, about = "Presentations, algebraic 2-complexes and their invariants")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Coset limit for every enumeration.
    #[arg(long, global = true, default_value_t = 5000)]
    pub max_cosets: usize,
    /// State budget for deficiency searches and solver budget for certification.
    #[arg(long, global = true, default_value_t = 200)]
    pub budget: usize,
    /// Reserved; no computation is randomized.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Invariants report for one presentation.
    Analyze {
        file: PathBuf,
        /// Compare against the `.expect` file next to the input.
        #[arg(long)]
        check: bool,
    },
    /// Group order by coset enumeration.
    Order { file: PathBuf },
    /// Search for a single normal generator.
    NormalGen {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Search even when the group is not perfect.
        #[arg(long)]
        search_non_perfect: bool,
    },
    /// Presentation complex of a `.fp` file, as `.acx`.
    Chain {
        file: PathBuf,
        /// Build over the integral group ring of the enumerated group.
        #[arg(long)]
        finite: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Wedge `n` two-spheres onto a complex.
    Wedge {
        file: PathBuf,
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Attach 3-cells to a 2-complex.
    Attach {
        file: PathBuf,
        /// Attach one 3-cell by the inclusion of this 2-cell (default: the last).
        #[arg(long, conflicts_with = "entries")]
        slot: Option<usize>,
        /// Row-major `d3` entries in `.acx` notation, `f2` rows.
        #[arg(long)]
        entries: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether `d3` of a 3-complex is split injective.
    Split { file: PathBuf },
    /// Quotient of a split 3-complex to a 2-complex.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a verified chain homotopy equivalence.
    CertifyEquiv { source: PathBuf, target: PathBuf },
    /// One table row per `.fp` file in a directory.
    Report {
        /// Defaults to `$D2KIT_CORPUS`, then `corpus`.
        dir: Option<PathBuf>,
        /// JSON-lines sidecar path (default `<dir>/report.jsonl`).
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Check every `.fp` file that has an `.expect` file.
    Check {
        /// Defaults to `$D2KIT_CORPUS`, then `corpus`.
        dir: Option<PathBuf>,
    },
}
