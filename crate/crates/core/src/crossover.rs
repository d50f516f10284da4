//! Threshold problem size: the smallest `n` beyond which `f(n) >= C g(n)`
//! holds for good.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::expr::{asymptotic_compare, eval_log10_raw, parse, Asymptotic, ComplexityExpr};
use crate::expr::X_MIN;
use crate::magnitude::{LogMagnitude, EXACT_LOG10_LIMIT};

/// Bracket search gives up beyond this `log10(n)`.
pub const X_CAP: f64 = 1e9;

/// Thresholds at or below this size count as near-term relevant.
pub const GREEN_LIMIT: f64 = 1e5;

/// The canonical runtimes of the grids, most expensive first, as
/// (label, DSL text).
pub const CANONICAL_RUNTIMES: [(&str, &str); 6] = [
    ("exp n", "exp(n)"),
    ("n^3", "n^3"),
    ("n^2", "n^2"),
    ("n log n", "n log(n)"),
    ("n", "n"),
    ("log n", "log(n)"),
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemSize {
    /// At least 2 and below `10^15`.
    Exact(u64),
    Magnitude(LogMagnitude),
}

impl ProblemSize {
    /// Picks the exact form when `x < 15`; `x` is rounded to the nearest
    /// integer in that case.
    pub fn from_log10(x: f64) -> Self {
        if x < EXACT_LOG10_LIMIT {
            let v = 10f64.powf(x).round().max(2.0) as u64;
            ProblemSize::Exact(v)
        } else {
            ProblemSize::Magnitude(LogMagnitude::from_log10(x))
        }
    }

    pub fn from_integer(v: u64) -> Self {
        if (v as f64) < 10f64.powf(EXACT_LOG10_LIMIT) {
            ProblemSize::Exact(v)
        } else {
            ProblemSize::Magnitude(LogMagnitude::from_log10((v as f64).log10()))
        }
    }

    pub fn log10(&self) -> f64 {
        match self {
            ProblemSize::Exact(v) => (*v as f64).log10(),
            ProblemSize::Magnitude(m) => m.log10(),
        }
    }

    pub fn exact(&self) -> Option<u64> {
        match self {
            ProblemSize::Exact(v) => Some(*v),
            ProblemSize::Magnitude(_) => None,
        }
    }

    pub fn display(&self, rule: &DisplayRule) -> String {
        match self {
            ProblemSize::Exact(v) if (*v as f64) < 10f64.powf(rule.exact_below_log10) => {
                v.to_string()
            }
            _ => format!("10^{}", self.log10().round() as i64),
        }
    }
}

impl PartialOrd for ProblemSize {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        match (self, other) {
            (ProblemSize::Exact(a), ProblemSize::Exact(b)) => a.partial_cmp(b),
            _ => self.log10().partial_cmp(&other.log10()),
        }
    }
}

impl fmt::Display for ProblemSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(&DisplayRule::default()))
    }
}

/// How problem sizes are printed: exact integers below
/// `10^exact_below_log10`, otherwise `10^k` with `k` rounded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DisplayRule {
    pub exact_below_log10: f64,
}

impl Default for DisplayRule {
    fn default() -> Self {
        DisplayRule {
            exact_below_log10: 4.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crossover {
    /// Smallest integer size at or past the continuous root.
    pub n_star: ProblemSize,
    /// `log10` of the continuous root of `f(n) = C g(n)`.
    pub log10_root: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Threshold {
    Finite(Crossover),
    NoAdvantage,
}

impl Threshold {
    pub fn crossover(&self) -> Option<&Crossover> {
        match self {
            Threshold::Finite(c) => Some(c),
            Threshold::NoAdvantage => None,
        }
    }

    pub fn n_star(&self) -> Option<ProblemSize> {
        self.crossover().map(|c| c.n_star)
    }

    pub fn class(&self) -> TrafficLight {
        TrafficLight::of(self)
    }

    pub fn display(&self, rule: &DisplayRule) -> String {
        match self {
            Threshold::Finite(c) => c.n_star.display(rule),
            Threshold::NoAdvantage => "no-advantage".to_string(),
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(&DisplayRule::default()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrafficLight {
    /// `n* <= 10^5`.
    Green,
    /// Finite `n* > 10^5`.
    Yellow,
    /// No asymptotic advantage.
    Red,
}

impl TrafficLight {
    pub fn of(t: &Threshold) -> Self {
        match t {
            Threshold::NoAdvantage => TrafficLight::Red,
            Threshold::Finite(c) => {
                if c.n_star.log10() <= GREEN_LIMIT.log10() {
                    TrafficLight::Green
                } else {
                    TrafficLight::Yellow
                }
            }
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            TrafficLight::Green => "green",
            TrafficLight::Yellow => "yellow",
            TrafficLight::Red => "red",
        }
    }
}

impl fmt::Display for TrafficLight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `h(x) = log10 f(10^x) - log10 C - log10 g(10^x)`.
struct Gap<'a> {
    classical: &'a ComplexityExpr,
    quantum: &'a ComplexityExpr,
    log10_c: f64,
}

impl Gap<'_> {
    fn at(&self, x: f64) -> Result<f64, Error> {
        let f = eval_log10_raw(self.classical, x);
        let g = eval_log10_raw(self.quantum, x);
        let h = f - self.log10_c - g;
        if h.is_nan() {
            return Err(Error::Overflow { x });
        }
        Ok(h)
    }

    /// Slack for `h >= 0` tests at integer points: relative float noise of
    /// the two evaluations.
    fn slack(&self, x: f64) -> f64 {
        let f = eval_log10_raw(self.classical, x).abs();
        let g = eval_log10_raw(self.quantum, x).abs();
        4.0 * f64::EPSILON * (1.0 + f + g + self.log10_c.abs())
    }
}

/// Solves `f(n*) = C g(n*)` for the threshold beyond which the quantum
/// runtime (scaled by the overhead `C`) stays below the classical one.
///
/// Returns [`Threshold::NoAdvantage`] unless `classical` grows strictly
/// faster than `quantum`. Among several crossings the largest root is
/// reported, and if the classical side is already slower at `n = 2` with no
/// crossing at all, the threshold is 2.
pub fn solve_threshold(
    classical: &ComplexityExpr,
    quantum: &ComplexityExpr,
    c: LogMagnitude,
) -> Result<Threshold, Error> {
    let log10_c = c.log10();
    if log10_c.is_nan() || log10_c < 0.0 {
        return Err(Error::InvalidConstant { log10: log10_c });
    }
    if asymptotic_compare(classical, quantum)? != Asymptotic::Greater {
        return Ok(Threshold::NoAdvantage);
    }
    let gap = Gap {
        classical,
        quantum,
        log10_c,
    };

    // Doubling scan: remember the last sample where quantum was not yet
    // ahead, stop after three rising positive samples in a row.
    let mut x = X_MIN;
    let mut last_nonpositive: Option<f64> = None;
    let mut positive_run = 0;
    let mut prev_h = f64::NEG_INFINITY;
    loop {
        let h = gap.at(x)?;
        if h <= 0.0 {
            last_nonpositive = Some(x);
            positive_run = 0;
        } else if h > prev_h {
            positive_run += 1;
        } else {
            positive_run = 0;
        }
        prev_h = h;
        if positive_run >= 3 {
            break;
        }
        x *= 2.0;
        if x > X_CAP {
            return Err(Error::BracketFailed { cap: X_CAP });
        }
    }

    let Some(lo) = last_nonpositive else {
        return Ok(Threshold::Finite(Crossover {
            n_star: ProblemSize::Exact(2),
            log10_root: X_MIN,
        }));
    };
    let root = bisect(&gap, lo, lo * 2.0)?;

    let n_star = if root < EXACT_LOG10_LIMIT {
        ProblemSize::from_integer(smallest_integer_at_or_past(&gap, root, lo)?)
    } else {
        ProblemSize::Magnitude(LogMagnitude::from_log10(root))
    };
    Ok(Threshold::Finite(Crossover {
        n_star,
        log10_root: root,
    }))
}

/// Bisects a bracket with `h(lo) <= 0 < h(hi)` down to a relative width of
/// `1e-12`; returns the upper end.
fn bisect(gap: &Gap<'_>, mut lo: f64, mut hi: f64) -> Result<f64, Error> {
    for _ in 0..200 {
        if hi - lo <= 1e-12 * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if gap.at(mid)? <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

/// Smallest integer `m >= 2` near `10^root` with `h(log10 m) >= 0`, treating
/// float noise at an exact root (e.g. `1000^3 = 10^6 * 1000`) as a hit.
fn smallest_integer_at_or_past(gap: &Gap<'_>, root: f64, lo: f64) -> Result<u64, Error> {
    let floor_n = 10f64.powf(lo).ceil().max(2.0);
    let ok = |m: f64| -> Result<bool, Error> {
        let x = m.log10();
        Ok(gap.at(x)? >= -gap.slack(x))
    };
    let mut m = 10f64.powf(root).ceil().max(2.0);
    while m > floor_n && ok(m - 1.0)? {
        m -= 1.0;
    }
    while !ok(m)? {
        m += 1.0;
    }
    Ok(m as u64)
}

/// Signed `log10(f(n) / (C g(n)))`: positive means the quantum machine is
/// faster by that many decades.
pub fn speedup_at(
    classical: &ComplexityExpr,
    quantum: &ComplexityExpr,
    c: LogMagnitude,
    n: ProblemSize,
) -> Result<f64, Error> {
    let x = n.log10();
    let f = crate::expr::eval_log10(classical, x)?;
    let g = crate::expr::eval_log10(quantum, x)?;
    Ok(f.log10() - c.log10() - g.log10())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridCell {
    pub threshold: Threshold,
    pub class: TrafficLight,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub classical: Vec<ComplexityExpr>,
    pub quantum: Vec<ComplexityExpr>,
    pub c: LogMagnitude,
    /// Row-major: `cells[i][j]` pairs `classical[i]` with `quantum[j]`.
    pub cells: Vec<Vec<GridCell>>,
}

pub fn canonical_runtimes() -> Vec<ComplexityExpr> {
    CANONICAL_RUNTIMES
        .iter()
        .map(|(_, text)| parse(text).expect("canonical runtimes parse"))
        .collect()
}

/// Thresholds for every classical/quantum combination. Rows are computed on
/// separate threads.
pub fn threshold_grid(
    classical: &[ComplexityExpr],
    quantum: &[ComplexityExpr],
    c: LogMagnitude,
) -> Result<Grid, Error> {
    let rows: Vec<Result<Vec<GridCell>, Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = classical
            .iter()
            .map(|f| {
                s.spawn(move || {
                    quantum
                        .iter()
                        .map(|g| {
                            let threshold = solve_threshold(f, g, c)?;
                            Ok(GridCell {
                                threshold,
                                class: threshold.class(),
                            })
                        })
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("grid worker panicked"))
            .collect()
    });
    let cells = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(Grid {
        classical: classical.to_vec(),
        quantum: quantum.to_vec(),
        c,
        cells,
    })
}
