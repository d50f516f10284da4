//! Classical-vs-quantum performance gap and qubit roadmaps.

mod roadmap;
mod runtime;
mod scenario;

pub use roadmap::{
    fit_growth, load_roadmap_csv, logical_qubits_available, project_qubits, read_roadmap_csv,
    write_roadmap_csv, year_for_qubits, GrowthModel, RoadmapPoint, RoadmapStatus,
};
pub use runtime::{
    estimate_runtime, Machine, CLASSICAL_OPS_PER_DOLLAR, CLASSICAL_OPS_PER_SEC,
    QUANTUM_OPS_PER_DOLLAR, QUANTUM_OPS_PER_SEC, SECONDS_PER_DAY, SECONDS_PER_YEAR,
};
pub use scenario::{
    builtin_scenarios, parse_scenarios_json, scenario_constant, Basis, HardwareScenario,
    DEFAULT_EC_QUBIT_RATIO,
};
