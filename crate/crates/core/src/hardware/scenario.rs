use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::magnitude::LogMagnitude;

/// Physical qubits per logical qubit unless a scenario says otherwise.
pub const DEFAULT_EC_QUBIT_RATIO: f64 = 1000.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// Wall-clock speed of one processor each.
    Serial,
    /// Operations per dollar, which lets the classical side parallelise.
    CostParallel,
}

/// The overhead model `C = c_speed * c_gate_overhead * c_alg_constant`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HardwareScenario {
    pub name: String,
    /// Classical operations per quantum gate operation.
    pub c_speed: f64,
    /// Physical gates needed to emulate one logical gate.
    pub c_gate_overhead: f64,
    /// Ratio of the classical to the quantum algorithm's hidden constant.
    pub c_alg_constant: f64,
    /// Physical qubits per logical qubit.
    pub ec_qubit_ratio: f64,
    pub basis: Basis,
}

impl HardwareScenario {
    pub fn new(
        name: impl Into<String>,
        c_speed: f64,
        c_gate_overhead: f64,
        c_alg_constant: f64,
        ec_qubit_ratio: f64,
        basis: Basis,
    ) -> Result<Self, Error> {
        let s = HardwareScenario {
            name: name.into(),
            c_speed,
            c_gate_overhead,
            c_alg_constant,
            ec_qubit_ratio,
            basis,
        };
        s.validate()?;
        Ok(s)
    }

    /// A scenario whose whole overhead sits in `c_speed`.
    pub fn with_constant(name: impl Into<String>, c: LogMagnitude) -> Self {
        HardwareScenario {
            name: name.into(),
            c_speed: c.value(),
            c_gate_overhead: 1.0,
            c_alg_constant: 1.0,
            ec_qubit_ratio: DEFAULT_EC_QUBIT_RATIO,
            basis: Basis::Serial,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        let bad = |message: String| Error::InvalidScenario {
            name: self.name.clone(),
            message,
        };
        for (field, v) in [
            ("c_speed", self.c_speed),
            ("c_gate_overhead", self.c_gate_overhead),
            ("c_alg_constant", self.c_alg_constant),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(bad(format!("{field} must be a positive number (got {v})")));
            }
        }
        if !(self.ec_qubit_ratio.is_finite() && self.ec_qubit_ratio >= 1.0) {
            return Err(bad(format!(
                "ec_qubit_ratio must be >= 1 (got {})",
                self.ec_qubit_ratio
            )));
        }
        Ok(())
    }

    pub fn constant(&self) -> LogMagnitude {
        scenario_constant(self)
    }
}

pub fn scenario_constant(s: &HardwareScenario) -> LogMagnitude {
    LogMagnitude::from_log10(s.c_speed.log10() + s.c_gate_overhead.log10() + s.c_alg_constant.log10())
}

/// Reads a JSON array of scenarios; unknown fields are rejected.
pub fn parse_scenarios_json(text: &str) -> Result<Vec<HardwareScenario>, Error> {
    let scenarios: Vec<HardwareScenario> =
        serde_json::from_str(text).map_err(|e| Error::InvalidScenario {
            name: "<file>".into(),
            message: e.to_string(),
        })?;
    for s in &scenarios {
        s.validate()?;
    }
    Ok(scenarios)
}

/// The named presets: `base` (C = 10^6), `optimistic` (10^4), `pessimistic`
/// (10^8), `appendix` (10^3), and the two hardware-table rows `serial`
/// (2500 x 100) and `cost` (10^6 x 100).
pub fn builtin_scenarios() -> Vec<HardwareScenario> {
    let mk = |name: &str, speed: f64, overhead: f64, basis| HardwareScenario {
        name: name.to_string(),
        c_speed: speed,
        c_gate_overhead: overhead,
        c_alg_constant: 1.0,
        ec_qubit_ratio: DEFAULT_EC_QUBIT_RATIO,
        basis,
    };
    vec![
        mk("base", 1e4, 100.0, Basis::CostParallel),
        mk("optimistic", 100.0, 100.0, Basis::Serial),
        mk("pessimistic", 1e6, 100.0, Basis::CostParallel),
        mk("appendix", 10.0, 100.0, Basis::Serial),
        mk("serial", 2500.0, 100.0, Basis::Serial),
        mk("cost", 1e6, 100.0, Basis::CostParallel),
    ]
}
