use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qx_core::service::{AnalyzeRequest, CatalogAction, PlotKind, RoadmapAction};

/// Quantum economic advantage analyzer.
#[derive(Debug, Parser)]
#[command(name = "qx", version, about)]
pub struct Cli {
    /// Directory holding scenarios.json, catalog.json and roadmaps/*.csv.
    /// Defaults to $QX_DATA_DIR, then the built-in data.
    #[arg(long, global = true, value_name = "DIR")]
    pub data_dir: Option<PathBuf>,

    /// Output format: text, json, csv, markdown or svg-plot-data.
    #[arg(long, global = true)]
    pub format: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Default)]
pub struct Overhead {
    /// Named hardware scenario (base, optimistic, pessimistic, appendix,
    /// serial, cost).
    #[arg(long)]
    pub scenario: Option<String>,

    /// Overhead constant C, e.g. `1e6` or `10^5.5`. Overrides the
    /// scenario's constant.
    #[arg(long = "C", visible_alias = "c", value_name = "C")]
    pub c: Option<String>,
}

/// An algorithm pair, from the catalog or written out.
#[derive(Debug, Args, Clone, Default)]
pub struct PairArgs {
    /// Catalog entry with a quantum algorithm, e.g. `grover`.
    #[arg(long)]
    pub id: Option<String>,
    #[arg(long, conflicts_with = "id")]
    pub classical: Option<String>,
    #[arg(long, conflicts_with = "id")]
    pub quantum: Option<String>,
    /// Logical qubits needed at size n (default `n`).
    #[arg(long, conflicts_with = "id")]
    pub qubits: Option<String>,
    /// Data loading cost.
    #[arg(long, conflicts_with = "id")]
    pub loading: Option<String>,
    /// What n counts: elements, bits or variables_log2.
    #[arg(long, conflicts_with = "id")]
    pub semantics: Option<String>,
    #[command(flatten)]
    pub overhead: Overhead,
    /// Roadmap provider (default ibm).
    #[arg(long)]
    pub provider: Option<String>,
    /// Years to report, e.g. `2024,2026..2030`.
    #[arg(long)]
    pub years: Option<String>,
}

impl PairArgs {
    pub fn request(&self, year: Option<f64>) -> AnalyzeRequest {
        AnalyzeRequest {
            id: self.id.clone(),
            classical: self.classical.clone(),
            quantum: self.quantum.clone(),
            qubits: self.qubits.clone(),
            loading: self.loading.clone(),
            semantics: self.semantics.clone(),
            scenario: self.overhead.scenario.clone(),
            c: self.overhead.c.clone(),
            provider: self.provider.clone(),
            years: self.years.clone(),
            year,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RoadmapCmd {
    Fit,
    Project,
    YearFor,
}

impl From<RoadmapCmd> for RoadmapAction {
    fn from(c: RoadmapCmd) -> Self {
        match c {
            RoadmapCmd::Fit => RoadmapAction::Fit,
            RoadmapCmd::Project => RoadmapAction::Project,
            RoadmapCmd::YearFor => RoadmapAction::YearFor,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CatalogCmd {
    List,
    Classify,
}

impl From<CatalogCmd> for CatalogAction {
    fn from(c: CatalogCmd) -> Self {
        match c {
            CatalogCmd::List => CatalogAction::List,
            CatalogCmd::Classify => CatalogAction::Classify,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PlotCmd {
    Crossover,
    Wedge,
    Roadmap,
}

impl From<PlotCmd> for PlotKind {
    fn from(c: PlotCmd) -> Self {
        match c {
            PlotCmd::Crossover => PlotKind::Crossover,
            PlotCmd::Wedge => PlotKind::Wedge,
            PlotCmd::Roadmap => PlotKind::Roadmap,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Problem size beyond which the quantum algorithm wins.
    Threshold {
        #[arg(long)]
        classical: String,
        #[arg(long)]
        quantum: String,
        #[command(flatten)]
        overhead: Overhead,
    },
    /// Thresholds for the canonical 6x6 runtime grid.
    Grid {
        #[command(flatten)]
        overhead: Overhead,
    },
    /// Threshold, qubit needs and first feasible year for a pair.
    Analyze {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Quantum-advantaged problem sizes in one year.
    Qaps {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        year: f64,
    },
    /// Provider qubit growth fit.
    Roadmap {
        #[arg(value_enum, default_value = "fit")]
        action: RoadmapCmd,
        #[arg(long)]
        provider: Option<String>,
        /// Year to project to (with `project`).
        #[arg(long)]
        year: Option<f64>,
        /// Physical qubit count (with `year-for`).
        #[arg(long)]
        qubits: Option<f64>,
    },
    /// List or classify the problem catalog.
    Catalog {
        #[arg(value_enum, default_value = "list")]
        action: CatalogCmd,
        /// Only entries carrying this tag.
        #[arg(long)]
        tag: Option<String>,
        /// With `classify`: also compare entries without a quantum algorithm
        /// against the canonical quantum runtimes.
        #[arg(long)]
        include_unpaired: bool,
        #[command(flatten)]
        overhead: Overhead,
    },
    /// Series data for charts.
    Plot {
        #[arg(value_enum)]
        kind: PlotCmd,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Run the HTTP API.
    Serve {
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}
