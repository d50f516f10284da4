use serde::{Deserialize, Serialize};

use super::scenario::HardwareScenario;
use crate::magnitude::LogMagnitude;

/// Two-qubit gate rate of current superconducting machines (~555 ns/gate).
pub const QUANTUM_OPS_PER_SEC: f64 = 2e6;
/// Top-end CPU clock.
pub const CLASSICAL_OPS_PER_SEC: f64 = 5e9;
pub const CLASSICAL_OPS_PER_DOLLAR: f64 = 1e14;
pub const QUANTUM_OPS_PER_DOLLAR: f64 = 1e8;

pub const SECONDS_PER_DAY: f64 = 86_400.0;
/// Julian year.
pub const SECONDS_PER_YEAR: f64 = 31_557_600.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Machine {
    Classical,
    Quantum,
}

/// Wall-clock seconds to execute `ops` operations at `rate` ops/sec. On the
/// quantum machine each logical operation costs `c_gate_overhead` physical
/// gate operations.
pub fn estimate_runtime(
    ops: LogMagnitude,
    s: &HardwareScenario,
    machine: Machine,
    rate: f64,
) -> LogMagnitude {
    assert!(rate > 0.0, "operation rate must be positive");
    let rate = LogMagnitude::from_log10(rate.log10());
    match machine {
        Machine::Classical => ops / rate,
        Machine::Quantum => ops * LogMagnitude::from_log10(s.c_gate_overhead.log10()) / rate,
    }
}
