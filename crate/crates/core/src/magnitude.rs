use std::fmt;
use std::ops::{Div, Mul};

use serde::{Deserialize, Serialize};

/// Largest base-10 exponent for which a magnitude may be turned into an
/// exact integer.
pub const EXACT_LOG10_LIMIT: f64 = 15.0;

/// A nonnegative quantity stored as its base-10 logarithm.
///
/// Products become sums of exponents, so sizes like `10^434294` are as
/// cheap to handle as `1000`. Zero is represented by an exponent of `-inf`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LogMagnitude {
    log10_value: f64,
}

impl LogMagnitude {
    pub const ONE: LogMagnitude = LogMagnitude { log10_value: 0.0 };
    pub const ZERO: LogMagnitude = LogMagnitude {
        log10_value: f64::NEG_INFINITY,
    };

    pub fn from_log10(log10_value: f64) -> Self {
        LogMagnitude { log10_value }
    }

    /// Returns `None` for negative or NaN inputs.
    pub fn from_value(value: f64) -> Option<Self> {
        if value.is_nan() || value < 0.0 {
            return None;
        }
        Some(LogMagnitude {
            log10_value: value.log10(),
        })
    }

    pub fn log10(self) -> f64 {
        self.log10_value
    }

    /// The represented value as a float; `inf` once it exceeds `f64::MAX`.
    pub fn value(self) -> f64 {
        10f64.powf(self.log10_value)
    }

    pub fn is_zero(self) -> bool {
        self.log10_value == f64::NEG_INFINITY
    }

    /// Rounds to the nearest integer, only below `10^15` where `f64` still
    /// resolves unit steps.
    pub fn to_exact_integer(self) -> Option<u64> {
        if self.is_zero() {
            return Some(0);
        }
        if !self.log10_value.is_finite() || self.log10_value >= EXACT_LOG10_LIMIT {
            return None;
        }
        Some(self.value().round() as u64)
    }

    pub fn ceil_integer(self) -> Option<u64> {
        if self.is_zero() {
            return Some(0);
        }
        if !self.log10_value.is_finite() || self.log10_value >= EXACT_LOG10_LIMIT {
            return None;
        }
        let v = self.value();
        // absorb float noise on exact integers such as 10^3
        let r = v.round();
        if (v - r).abs() <= 1e-9 * r.max(1.0) {
            Some(r as u64)
        } else {
            Some(v.ceil() as u64)
        }
    }

    pub fn floor_integer(self) -> Option<u64> {
        if self.is_zero() {
            return Some(0);
        }
        if !self.log10_value.is_finite() || self.log10_value >= EXACT_LOG10_LIMIT {
            return None;
        }
        let v = self.value();
        let r = v.round();
        if (v - r).abs() <= 1e-9 * r.max(1.0) {
            Some(r as u64)
        } else {
            Some(v.floor() as u64)
        }
    }
}

impl Mul for LogMagnitude {
    type Output = LogMagnitude;

    fn mul(self, rhs: LogMagnitude) -> LogMagnitude {
        if self.is_zero() || rhs.is_zero() {
            return LogMagnitude::ZERO;
        }
        LogMagnitude::from_log10(self.log10_value + rhs.log10_value)
    }
}

impl Div for LogMagnitude {
    type Output = LogMagnitude;

    fn div(self, rhs: LogMagnitude) -> LogMagnitude {
        if self.is_zero() {
            return LogMagnitude::ZERO;
        }
        LogMagnitude::from_log10(self.log10_value - rhs.log10_value)
    }
}

impl fmt::Display for LogMagnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.log10_value.abs() < 6.0 {
            write!(f, "{}", format_sig(self.value(), 6))
        } else {
            write!(f, "10^{}", format_sig(self.log10_value, 6))
        }
    }
}

/// Rounds `v` to `digits` significant digits, trimming trailing zeros.
pub fn round_sig(v: f64, digits: u32) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    let magnitude = v.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits as i32 - 1 - magnitude);
    (v * scale).round() / scale
}

pub fn format_sig(v: f64, digits: u32) -> String {
    let r = round_sig(v, digits);
    if r == r.trunc() && r.abs() < 1e15 {
        format!("{}", r as i64)
    } else {
        format!("{r}")
    }
}
