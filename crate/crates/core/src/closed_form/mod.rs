//! Closed-form evaluators for the weighted counts.
//!
//! Everything is built from two quantities:
//!
//! * [`count_c`]`(M, N)`, the number of unrestricted paths from the origin to
//!   `(M, N)`, and
//! * [`count_f`]`(M, N)`, the same count with a left wall at `x = 0`, written
//!   as a difference of two binomials and evaluated literally for every `M`.
//!
//! The public entry points check their domain and return [`FormulaError`]
//! outside it. The [`formal`] submodule exposes the unchecked expressions for
//! identities that compare formulas outside their natural range.

mod multiplicity;
mod one_restriction;
mod strips;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

pub use multiplicity::{
    multiplicity, poly_p, poly_q, pq_recurrence_check, pq_table, PqCounterexample, PqValue,
    StripIndex,
};
pub use one_restriction::{
    filter1_left, filter1_neg, filter1_right, filter2_left, filter2_neg, filter2_right, wall_left,
    wall_right,
};
pub use strips::{
    two_filters, two_filters_from_even, two_filters_from_odd, wall_filter_right,
    wall_filter_strip1, wall_two_filters,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("InvalidN: binomial top argument must be non-negative, got {0}")]
    InvalidN(i64),
    #[error("DomainError in {formula}: {reason}")]
    Domain {
        formula: &'static str,
        reason: String,
    },
}

pub(crate) fn domain(formula: &'static str, reason: impl Into<String>) -> FormulaError {
    FormulaError::Domain {
        formula,
        reason: reason.into(),
    }
}

pub(crate) fn require(
    ok: bool,
    formula: &'static str,
    reason: impl FnOnce() -> String,
) -> Result<(), FormulaError> {
    if ok {
        Ok(())
    } else {
        Err(domain(formula, reason()))
    }
}

pub(crate) fn require_row(formula: &'static str, n: i64) -> Result<(), FormulaError> {
    require(n >= 0, formula, || {
        format!("row N = {n} must be non-negative")
    })
}

/// `n choose k`, zero whenever `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> Result<BigInt, FormulaError> {
    if n < 0 {
        return Err(FormulaError::InvalidN(n));
    }
    Ok(choose(n, k))
}

/// [`binom`] for callers that already know `n >= 0`.
pub(crate) fn choose(n: i64, k: i64) -> BigInt {
    debug_assert!(n >= 0);
    if k < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k.min(n - k)))
}

/// Half the distance `(N - M) / 2`, or `None` when `N - M` is odd.
fn half_gap(m: i64, n: i64) -> Option<i64> {
    let gap = n - m;
    (gap.rem_euclid(2) == 0).then_some(gap / 2)
}

/// Unrestricted paths from the origin to `(M, N)`: `binom(N, (N - M) / 2)`.
///
/// Zero on a parity mismatch or when `|M| > N`. `N` must be non-negative.
pub fn count_c(m: i64, n: i64) -> BigInt {
    match half_gap(m, n) {
        Some(h) if n >= 0 => choose(n, h),
        _ => BigInt::zero(),
    }
}

/// `binom(N, (N - M) / 2) - binom(N, (N - M) / 2 - 1)`, evaluated as written
/// for every integer `M`. For `M >= 0` this counts the paths that never step
/// left of a wall at `x = 0`; for negative `M` it is a signed term that the
/// strip formulas rely on.
pub fn count_f(m: i64, n: i64) -> BigInt {
    match half_gap(m, n) {
        Some(h) if n >= 0 => choose(n, h) - choose(n, h - 1),
        _ => BigInt::zero(),
    }
}

/// `(-1)^k` applied to `value`.
pub(crate) fn signed(k: i64, value: BigInt) -> BigInt {
    if k.rem_euclid(2) == 0 {
        value
    } else {
        -value
    }
}

/// `sum_{k = lo}^{hi} term(k)`; empty when `hi < lo`.
pub(crate) fn sum_range(lo: i64, hi: i64, term: impl Fn(i64) -> BigInt) -> BigInt {
    (lo..=hi).map(term).sum()
}

/// Unchecked formula bodies, valid as algebraic expressions for any
/// `(l, M, N)` with `l >= 1` and `N >= 0`.
pub mod formal {
    pub use super::strips::formal::*;
}
