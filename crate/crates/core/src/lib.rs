//! Quantum economic advantage analysis.
//!
//! Given a classical and a quantum runtime (written in a small complexity
//! DSL) and a hardware scenario, this crate finds the threshold problem size
//! `n*` beyond which the quantum machine wins despite its constant-factor
//! overhead, decides whether the problem fits on the projected hardware, and
//! reports the calendar year in which the advantage first becomes feasible.
//!
//! ```
//! use qx_core::{parse, solve_threshold, LogMagnitude, ProblemSize, Threshold};
//!
//! let classical = parse("n").unwrap();
//! let quantum = parse("sqrt(n)").unwrap();
//! let t = solve_threshold(&classical, &quantum, LogMagnitude::from_log10(6.0)).unwrap();
//! match t {
//!     Threshold::Finite(c) => assert_eq!(c.n_star, ProblemSize::Exact(1_000_000_000_000)),
//!     Threshold::NoAdvantage => unreachable!(),
//! }
//! ```

pub mod advantage;
pub mod catalog;
pub mod crossover;
pub mod data;
pub mod error;
pub mod expr;
pub mod hardware;
pub mod magnitude;
pub mod service;

pub use advantage::{
    analyze, convert_size_semantics, effective_quantum_runtime, qaps, AdvantageReport,
    AlgorithmPair, QapsInterval, SizeConversion, SizeSemantics,
};
pub use catalog::{classify_catalog, load_catalog, save_catalog, CatalogEntry, ClassifiedEntry};
pub use crossover::{
    solve_threshold, speedup_at, threshold_grid, Crossover, DisplayRule, Grid, GridCell,
    ProblemSize, Threshold, TrafficLight, CANONICAL_RUNTIMES,
};
pub use data::DataStore;
pub use error::{Error, Result};
pub use expr::{asymptotic_compare, eval_log10, parse, Asymptotic, ComplexityExpr, Rational};
pub use hardware::{
    estimate_runtime, fit_growth, logical_qubits_available, project_qubits, scenario_constant,
    year_for_qubits, Basis, GrowthModel, HardwareScenario, Machine, RoadmapPoint, RoadmapStatus,
};
pub use magnitude::LogMagnitude;
