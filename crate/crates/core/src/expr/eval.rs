use std::f64::consts::{LN_10, LOG10_2, LOG10_E};

use super::{rational_to_f64, ComplexityExpr};
use crate::error::Error;
use crate::magnitude::LogMagnitude;

/// Smallest admissible `log10(n)`.
pub const X_MIN: f64 = LOG10_2;

/// `log10(f(10^x))`, computed structurally so it never materialises `f`.
///
/// Logarithm arguments are floored at 2, the same floor as the domain of
/// `n`, so nested logarithms stay positive for small `n`.
pub fn eval_log10(expr: &ComplexityExpr, x: f64) -> Result<LogMagnitude, Error> {
    if x.is_nan() || x < X_MIN - 1e-12 {
        return Err(Error::Domain { x });
    }
    let v = eval_log10_raw(expr, x);
    if v.is_finite() {
        Ok(LogMagnitude::from_log10(v))
    } else {
        Err(Error::Overflow { x })
    }
}

/// Unchecked variant of [`eval_log10`]: may return `±inf` once the result
/// leaves `f64` range, or NaN when two infinities cancel.
pub fn eval_log10_raw(expr: &ComplexityExpr, x: f64) -> f64 {
    match expr {
        ComplexityExpr::Const(r) => (*r.numer() as f64).log10() - (*r.denom() as f64).log10(),
        ComplexityExpr::Var => x,
        ComplexityExpr::Log(c) => {
            let inner = eval_log10_raw(c, x).max(LOG10_2);
            // log10(ln v) = log10(log10(v) * ln 10)
            inner.log10() + LN_10.log10()
        }
        ComplexityExpr::Exp(c) => {
            let inner = eval_log10_raw(c, x);
            // log10(e^v) = v * log10(e) with v = 10^inner
            if inner > 308.0 {
                f64::INFINITY
            } else {
                10f64.powf(inner) * LOG10_E
            }
        }
        ComplexityExpr::Pow(c, q) => {
            let q = rational_to_f64(*q);
            if q == 0.0 {
                0.0
            } else {
                q * eval_log10_raw(c, x)
            }
        }
        ComplexityExpr::Mul(cs) => cs.iter().map(|c| eval_log10_raw(c, x)).sum(),
        ComplexityExpr::Add(cs) => {
            let terms: Vec<f64> = cs.iter().map(|c| eval_log10_raw(c, x)).collect();
            log_sum_exp10(&terms)
        }
    }
}

fn log_sum_exp10(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    let sum: f64 = terms.iter().map(|t| 10f64.powf(t - max)).sum();
    max + sum.log10()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn ev(text: &str, x: f64) -> f64 {
        eval_log10(&parse(text).unwrap(), x).unwrap().log10()
    }

    #[test]
    fn cube_at_hundred() {
        assert_relative_eq!(ev("n^3", 2.0), 6.0, max_relative = 1e-12);
    }

    #[test]
    fn nfs_at_2048_bits() {
        let v = ev("exp((64/9)^(1/3) n^(1/3) log(n)^(2/3))", 2048f64.log10());
        assert!((v - 41.0).abs() <= 0.2, "got {v}");
    }

    #[test]
    fn exp_identity() {
        assert_relative_eq!(ev("exp(n)", 23f64.log10()), 23.0 * LOG10_E, max_relative = 1e-12);
    }

    #[test]
    fn domain_floor() {
        let e = parse("n").unwrap();
        assert!(matches!(eval_log10(&e, 0.2), Err(Error::Domain { .. })));
        assert!(eval_log10(&e, 2f64.log10()).is_ok());
    }

    #[test]
    fn overflow_reported() {
        let e = parse("exp(n)").unwrap();
        assert!(matches!(eval_log10(&e, 400.0), Err(Error::Overflow { .. })));
    }

    #[test]
    fn nested_log_floor_keeps_values_positive() {
        // ln(ln 2) < 0 without the floor
        let v = ev("log(log(n))", X_MIN);
        assert_relative_eq!(v, 2f64.ln().log10(), max_relative = 1e-12);
        assert_relative_eq!(ev("log(2)", 1.0), 2f64.ln().log10(), max_relative = 1e-12);
    }

    #[test]
    fn sums_use_log_sum_exp() {
        assert_relative_eq!(ev("n + n", 3.0), 3.0 + LOG10_2, max_relative = 1e-12);
        assert_relative_eq!(ev("n^2 + 1", 200.0), 400.0, max_relative = 1e-12);
    }

    /// Direct floating evaluation with the same logarithm floor.
    fn direct(e: &ComplexityExpr, n: f64) -> f64 {
        match e {
            ComplexityExpr::Const(r) => *r.numer() as f64 / *r.denom() as f64,
            ComplexityExpr::Var => n,
            ComplexityExpr::Log(c) => direct(c, n).max(2.0).ln(),
            ComplexityExpr::Exp(c) => direct(c, n).exp(),
            ComplexityExpr::Pow(c, q) => direct(c, n).powf(*q.numer() as f64 / *q.denom() as f64),
            ComplexityExpr::Mul(cs) => cs.iter().map(|c| direct(c, n)).product(),
            ComplexityExpr::Add(cs) => cs.iter().map(|c| direct(c, n)).sum(),
        }
    }

    fn small_expr() -> impl Strategy<Value = ComplexityExpr> {
        let leaf = prop_oneof![
            Just(ComplexityExpr::Var),
            (1i64..20, 1i64..4).prop_map(|(p, q)| ComplexityExpr::Const(crate::Rational::new(p, q))),
        ];
        leaf.prop_recursive(3, 12, 3, |inner| {
            prop_oneof![
                inner.clone().prop_map(ComplexityExpr::log),
                (inner.clone(), -3i64..4, 1i64..3)
                    .prop_map(|(b, p, q)| ComplexityExpr::pow(b, crate::Rational::new(p, q))),
                prop::collection::vec(inner.clone(), 2..4).prop_map(ComplexityExpr::Mul),
                prop::collection::vec(inner, 2..4).prop_map(ComplexityExpr::Add),
            ]
        })
    }

    proptest! {
        #[test]
        fn matches_direct_evaluation(e in small_expr(), n in 2u32..10_000) {
            let n = n as f64;
            let want = direct(&e, n);
            prop_assume!(want.is_finite() && want > 0.0 && want < 1e300 && want > 1e-300);
            let got = 10f64.powf(eval_log10_raw(&e, n.log10()));
            prop_assert!(((got - want) / want).abs() <= 1e-6, "{} at n={}: {} vs {}", e, n, got, want);
        }

        #[test]
        fn product_is_sum_of_logs(a in small_expr(), b in small_expr(), x in 0.31f64..6.0) {
            let prod = ComplexityExpr::Mul(vec![a.clone(), b.clone()]);
            let lhs = eval_log10_raw(&prod, x);
            let rhs = eval_log10_raw(&a, x) + eval_log10_raw(&b, x);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
        }

        #[test]
        fn monotone_atoms_are_nondecreasing(e in small_expr(), x1 in 0.31f64..8.0, dx in 0.0f64..8.0) {
            prop_assume!(e.is_syntactically_monotone());
            let a = eval_log10_raw(&e, x1);
            let b = eval_log10_raw(&e, x1 + dx);
            prop_assert!(b >= a - 1e-9 * (1.0 + a.abs()));
        }
    }
}
