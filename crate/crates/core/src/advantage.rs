//! Joins the threshold with hardware feasibility: when does the quantum
//! machine both win and fit?

use std::f64::consts::LOG10_2;

use serde::{Deserialize, Serialize};

use crate::crossover::{solve_threshold, ProblemSize, Threshold, X_CAP};
use crate::error::Error;
use crate::expr::{asymptotic_compare, eval_log10, eval_log10_raw, Asymptotic, ComplexityExpr};
use crate::expr::X_MIN;
use crate::hardware::{
    logical_qubits_available, year_for_qubits, GrowthModel, HardwareScenario,
};
use crate::magnitude::{LogMagnitude, EXACT_LOG10_LIMIT};

/// What `n` counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SizeSemantics {
    /// Number of input elements.
    Elements,
    /// Bit-length of an input value.
    Bits,
    /// Search space of `2^m` assignments over `m` variables.
    VariablesLog2,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmPair {
    pub id: String,
    pub problem_name: String,
    pub classical_runtime: ComplexityExpr,
    pub quantum_runtime: ComplexityExpr,
    /// Logical qubits as a function of `n`.
    pub qubit_requirement: ComplexityExpr,
    /// Cost of loading the input into the quantum machine, if it matters.
    pub data_loading: Option<ComplexityExpr>,
    pub size_semantics: SizeSemantics,
    pub citation: String,
}

/// The quantum runtime after accounting for data loading: the asymptotic
/// maximum of computation and loading. The flag tells whether loading won.
pub fn effective_quantum_runtime(pair: &AlgorithmPair) -> Result<(ComplexityExpr, bool), Error> {
    match &pair.data_loading {
        None => Ok((pair.quantum_runtime.clone(), false)),
        Some(loading) => match asymptotic_compare(&pair.quantum_runtime, loading)? {
            Asymptotic::Less => Ok((loading.clone(), true)),
            Asymptotic::Equal | Asymptotic::Greater => Ok((pair.quantum_runtime.clone(), false)),
        },
    }
}

/// Quantum-advantaged problem sizes in one year: above the threshold and
/// small enough to fit on the projected hardware.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum QapsInterval {
    Empty,
    Range {
        lower: ProblemSize,
        /// `None` when the qubit requirement never exceeds what is available.
        upper: Option<ProblemSize>,
    },
}

impl QapsInterval {
    pub fn is_empty(&self) -> bool {
        matches!(self, QapsInterval::Empty)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct YearQaps {
    pub year: f64,
    pub qaps: QapsInterval,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdvantageReport {
    pub pair_id: String,
    pub threshold: Threshold,
    pub logical_qubits_at_threshold: Option<LogMagnitude>,
    pub physical_qubits_at_threshold: Option<LogMagnitude>,
    /// Fractional year at which the hardware first holds the problem at `n*`.
    pub first_advantage_year: Option<f64>,
    pub loading_bound_applied: bool,
    pub qaps_by_year: Vec<YearQaps>,
}

impl AdvantageReport {
    /// `(floor, ceil)` of the first advantage year, e.g. `2026-2027`.
    pub fn first_advantage_range(&self) -> Option<(i64, i64)> {
        self.first_advantage_year
            .map(|y| (y.floor() as i64, y.ceil().max(y.floor() + 1.0) as i64))
    }
}

/// Whole logical qubits needed at size `n`.
fn logical_qubits_needed(pair: &AlgorithmPair, n: ProblemSize) -> Result<LogMagnitude, Error> {
    let raw = eval_log10(&pair.qubit_requirement, n.log10())?;
    Ok(match raw.ceil_integer() {
        Some(q) => LogMagnitude::from_log10((q.max(1) as f64).log10()),
        None => raw,
    })
}

fn threshold_for(pair: &AlgorithmPair, scenario: &HardwareScenario) -> Result<(Threshold, bool), Error> {
    let (quantum, loading_bound) = effective_quantum_runtime(pair)?;
    let threshold = solve_threshold(&pair.classical_runtime, &quantum, scenario.constant())?;
    Ok((threshold, loading_bound))
}

/// Full advantage report for one algorithm pair.
pub fn analyze(
    pair: &AlgorithmPair,
    scenario: &HardwareScenario,
    model: &GrowthModel,
    years: &[f64],
) -> Result<AdvantageReport, Error> {
    if years.is_empty() {
        return Err(Error::InvalidParameter {
            name: "years",
            message: "at least one year is required".into(),
        });
    }
    if years.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidParameter {
            name: "years",
            message: "years must be ascending".into(),
        });
    }
    let (threshold, loading_bound_applied) = threshold_for(pair, scenario)?;
    let Some(n_star) = threshold.n_star() else {
        return Ok(AdvantageReport {
            pair_id: pair.id.clone(),
            threshold,
            logical_qubits_at_threshold: None,
            physical_qubits_at_threshold: None,
            first_advantage_year: None,
            loading_bound_applied,
            qaps_by_year: Vec::new(),
        });
    };
    check_monotone(&pair.qubit_requirement)?;
    let logical = logical_qubits_needed(pair, n_star)?;
    let physical = logical * LogMagnitude::from_log10(scenario.ec_qubit_ratio.log10());
    let first_year = year_for_qubits(model, physical);
    let qaps_by_year = years
        .iter()
        .map(|&year| {
            Ok(YearQaps {
                year,
                qaps: qaps_for_threshold(pair, n_star, scenario, model, year)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(AdvantageReport {
        pair_id: pair.id.clone(),
        threshold,
        logical_qubits_at_threshold: Some(logical),
        physical_qubits_at_threshold: Some(physical),
        first_advantage_year: Some(first_year),
        loading_bound_applied,
        qaps_by_year,
    })
}

/// The QAPS interval for `year`. The lower end is the threshold; the upper
/// end is the largest `n` whose qubit requirement fits in the whole logical
/// qubits available that year.
pub fn qaps(
    pair: &AlgorithmPair,
    scenario: &HardwareScenario,
    model: &GrowthModel,
    year: f64,
) -> Result<QapsInterval, Error> {
    let (threshold, _) = threshold_for(pair, scenario)?;
    let Some(n_star) = threshold.n_star() else {
        return Err(Error::InvalidParameter {
            name: "pair",
            message: format!("`{}` has no quantum advantage, so no QAPS", pair.id),
        });
    };
    check_monotone(&pair.qubit_requirement)?;
    qaps_for_threshold(pair, n_star, scenario, model, year)
}

fn qaps_for_threshold(
    pair: &AlgorithmPair,
    n_star: ProblemSize,
    scenario: &HardwareScenario,
    model: &GrowthModel,
    year: f64,
) -> Result<QapsInterval, Error> {
    let available = logical_qubits_available(model, year, scenario.ec_qubit_ratio);
    // whole qubits only
    let budget = match available.floor_integer() {
        Some(0) => return Ok(QapsInterval::Empty),
        Some(k) => (k as f64).log10(),
        None => available.log10(),
    };
    let req = &pair.qubit_requirement;
    let fits = |x: f64| eval_log10_raw(req, x) <= budget + 1e-12 * (1.0 + budget.abs());

    let x_star = n_star.log10();
    if !fits(x_star) {
        return Ok(QapsInterval::Empty);
    }
    // bracket the last size that still fits
    let mut lo = x_star;
    let mut hi = x_star.max(1.0) * 2.0;
    while fits(hi) {
        lo = hi;
        hi *= 2.0;
        if hi > X_CAP {
            return Ok(QapsInterval::Range {
                lower: n_star,
                upper: None,
            });
        }
    }
    for _ in 0..200 {
        if hi - lo <= 1e-12 * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let upper = if lo < EXACT_LOG10_LIMIT {
        let mut m = 10f64.powf(lo).floor();
        while m >= 2.0 && !fits(m.log10()) {
            m -= 1.0;
        }
        while fits((m + 1.0).log10()) && (m + 1.0).log10() < EXACT_LOG10_LIMIT {
            m += 1.0;
        }
        ProblemSize::from_integer(m as u64)
    } else {
        ProblemSize::Magnitude(LogMagnitude::from_log10(lo))
    };
    if upper < n_star {
        return Ok(QapsInterval::Empty);
    }
    Ok(QapsInterval::Range {
        lower: n_star,
        upper: Some(upper),
    })
}

/// Samples the requirement along a ladder of sizes; it must never decrease.
fn check_monotone(req: &ComplexityExpr) -> Result<(), Error> {
    let mut prev = f64::NEG_INFINITY;
    let mut x = X_MIN;
    while x <= 1e6 {
        let v = eval_log10_raw(req, x);
        if v < prev - 1e-9 * (1.0 + prev.abs()) {
            return Err(Error::NonMonotoneQubitRequirement(req.render()));
        }
        prev = v;
        x *= 1.25;
    }
    Ok(())
}

/// A threshold restated in other units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SizeConversion {
    pub semantics: SizeSemantics,
    pub size: ProblemSize,
    /// For bit-length sizes: the value `2^n*` the bits can express. `None`
    /// when even its exponent overflows.
    pub value: Option<LogMagnitude>,
}

pub fn convert_size_semantics(n_star: ProblemSize, semantics: SizeSemantics) -> SizeConversion {
    match semantics {
        SizeSemantics::Elements => SizeConversion {
            semantics,
            size: n_star,
            value: None,
        },
        SizeSemantics::VariablesLog2 => {
            let m = match n_star {
                ProblemSize::Exact(v) => u64::BITS as u64 - (v - 1).leading_zeros() as u64,
                ProblemSize::Magnitude(mag) => (mag.log10() / LOG10_2).ceil() as u64,
            };
            SizeConversion {
                semantics,
                size: ProblemSize::from_integer(m),
                value: None,
            }
        }
        SizeSemantics::Bits => {
            let bits = match n_star {
                ProblemSize::Exact(v) => v as f64,
                ProblemSize::Magnitude(mag) => mag.value(),
            };
            let log10_value = bits * LOG10_2;
            SizeConversion {
                semantics,
                size: n_star,
                value: log10_value.is_finite().then(|| LogMagnitude::from_log10(log10_value)),
            }
        }
    }
}
