use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::eval::eval_log10_raw;
use super::ComplexityExpr;
use crate::error::Error;

/// Asymptotic order of `f` relative to `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Asymptotic {
    Less,
    Equal,
    Greater,
}

impl Asymptotic {
    pub fn reverse(self) -> Self {
        match self {
            Asymptotic::Less => Asymptotic::Greater,
            Asymptotic::Equal => Asymptotic::Equal,
            Asymptotic::Greater => Asymptotic::Less,
        }
    }
}

impl From<Asymptotic> for Ordering {
    fn from(a: Asymptotic) -> Ordering {
        match a {
            Asymptotic::Less => Ordering::Less,
            Asymptotic::Equal => Ordering::Equal,
            Asymptotic::Greater => Ordering::Greater,
        }
    }
}

/// Rungs are `x = 2^k` on the `log10(n)` axis, from `n = 100` up to about
/// `n = 10^(6.9e10)`.
const LADDER: std::ops::RangeInclusive<i32> = 1..=36;

/// Rung-to-rung change (in decades) below which the difference counts as
/// settled.
const SETTLE_TOL: f64 = 1e-3;

/// Sign of `lim log f(n) - log g(n)`, read off the difference of
/// [`eval_log10`](super::eval_log10) values along a geometric ladder.
///
/// Rungs where either side leaves `f64` range, or where the difference is
/// lost in rounding, are skipped; if only one side overflows the difference
/// is an unambiguous `±inf`. The verdict comes from
/// the three highest usable rungs: a difference that is positive and still
/// rising is `Greater`, negative and still falling is `Less`, and one that
/// has stopped moving is `Equal`.
pub fn asymptotic_compare(f: &ComplexityExpr, g: &ComplexityExpr) -> Result<Asymptotic, Error> {
    if f == g {
        return Ok(Asymptotic::Equal);
    }
    let mut diffs: Vec<f64> = Vec::new();
    for k in LADDER {
        let x = 2f64.powi(k);
        let a = eval_log10_raw(f, x);
        let b = eval_log10_raw(g, x);
        if a.is_nan() || b.is_nan() {
            break;
        }
        match (a.is_finite(), b.is_finite()) {
            (true, true) => {
                // the difference drowns in the rounding of huge operands
                let noise = 4.0 * f64::EPSILON * a.abs().max(b.abs());
                let d = a - b;
                if noise > SETTLE_TOL * 1e-2 && d.abs() < 1e6 * noise {
                    continue;
                }
                diffs.push(d);
            }
            (false, true) => diffs.push(a),
            (true, false) => diffs.push(-b),
            (false, false) => break,
        }
        if diffs.last().is_some_and(|d| d.is_infinite()) {
            // already decisive; one side has left f64 range for good
            break;
        }
    }

    if let Some(&last) = diffs.last() {
        if last == f64::INFINITY {
            return Ok(Asymptotic::Greater);
        }
        if last == f64::NEG_INFINITY {
            return Ok(Asymptotic::Less);
        }
    }
    if diffs.len() < 3 {
        return Err(Error::Inconclusive);
    }
    let tail = &diffs[diffs.len() - 3..];
    let steps = [tail[1] - tail[0], tail[2] - tail[1]];
    let scale = 1.0 + tail[2].abs() * 1e-12;
    if steps.iter().all(|s| s.abs() <= SETTLE_TOL * scale) {
        return Ok(Asymptotic::Equal);
    }
    if tail[2] > 0.0 && steps.iter().all(|&s| s > 0.0) {
        return Ok(Asymptotic::Greater);
    }
    if tail[2] < 0.0 && steps.iter().all(|&s| s < 0.0) {
        return Ok(Asymptotic::Less);
    }
    Err(Error::Inconclusive)
}
