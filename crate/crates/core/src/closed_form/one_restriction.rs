//! Counts with a single wall or a single filter, starting at the origin.
//!
//! Each count is the unrestricted binomial corrected by at most one shifted
//! binomial: the paths that a reflection maps onto a mirrored start point.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{choose, count_c, require, require_row, FormulaError};

/// `binom(N, (N - M) / 2 + shift)`, or zero on a parity mismatch.
fn shifted(m: i64, n: i64, shift: i64) -> BigInt {
    let gap = n - m;
    if gap.rem_euclid(2) != 0 {
        return BigInt::zero();
    }
    choose(n, gap / 2 + shift)
}

/// Paths with a left wall at `a <= 0`, ending at `M >= a`.
pub fn wall_left(a: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    const NAME: &str = "wall_left";
    require_row(NAME, n)?;
    require(a <= 0, NAME, || format!("wall axis a = {a} must be <= 0"))?;
    require(m >= a, NAME, || {
        format!("endpoint M = {m} lies left of the wall at {a}")
    })?;
    Ok(count_c(m, n) - shifted(m, n, a - 1))
}

/// Paths with a right wall at `b >= 0`, ending at `M <= b`.
pub fn wall_right(b: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    const NAME: &str = "wall_right";
    require_row(NAME, n)?;
    require(b >= 0, NAME, || format!("wall axis b = {b} must be >= 0"))?;
    require(m <= b, NAME, || {
        format!("endpoint M = {m} lies right of the wall at {b}")
    })?;
    Ok(count_c(m, n) - shifted(m, n, b + 1))
}

fn left_of_filter(name: &'static str, d: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    require_row(name, n)?;
    require(d > 0, name, || {
        format!("filter axis d = {d} must be positive")
    })?;
    require(m < d, name, || {
        format!("endpoint M = {m} must lie left of the filter at {d}")
    })?;
    // A one-way filter seen from the left acts as a right wall at d - 1.
    Ok(count_c(m, n) - shifted(m, n, d))
}

fn right_of_negative_filter(
    name: &'static str,
    d: i64,
    m: i64,
    n: i64,
) -> Result<BigInt, FormulaError> {
    require_row(name, n)?;
    require(d >= 1, name, || {
        format!(
            "filter axis -d = {} must lie strictly left of the start",
            -d
        )
    })?;
    require(m >= -d, name, || {
        format!("endpoint M = {m} must not lie left of the filter at {}", -d)
    })?;
    // Extra weight equals the unrestricted paths from the mirrored start (-2d, 0).
    Ok(count_c(m, n) + shifted(m, n, -d))
}

/// Type-1 filter at `d > 0`, endpoint left of it (`M < d`).
pub fn filter1_left(d: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    left_of_filter("filter1_left", d, m, n)
}

/// Type-1 filter at `d > 0`, endpoint on or right of it (`M >= d`). The
/// weight-2 returns exactly make up for the forbidden crossings.
pub fn filter1_right(d: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    const NAME: &str = "filter1_right";
    require_row(NAME, n)?;
    require(d > 0, NAME, || {
        format!("filter axis d = {d} must be positive")
    })?;
    require(m >= d, NAME, || {
        format!("endpoint M = {m} must lie on or right of the filter at {d}")
    })?;
    Ok(count_c(m, n))
}

/// Type-1 filter at `-d` with `d >= 1`, endpoint `M >= -d`.
pub fn filter1_neg(d: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    right_of_negative_filter("filter1_neg", d, m, n)
}

/// Type-2 filter at `d > 0`, endpoint left of it (`M < d`).
pub fn filter2_left(d: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    left_of_filter("filter2_left", d, m, n)
}

/// Type-2 filter at `d > 0`, endpoint strictly right of it: twice the
/// unrestricted count.
pub fn filter2_right(d: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    const NAME: &str = "filter2_right";
    require_row(NAME, n)?;
    require(d > 0, NAME, || {
        format!("filter axis d = {d} must be positive")
    })?;
    require(m > d, NAME, || {
        format!("endpoint M = {m} must lie right of the filter at {d}")
    })?;
    Ok(count_c(m, n) * 2)
}

/// Type-2 filter at `-d` with `d >= 1`, endpoint `M >= -d`.
pub fn filter2_neg(d: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    right_of_negative_filter("filter2_neg", d, m, n)
}
