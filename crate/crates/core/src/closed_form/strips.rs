//! Counts between a wall and filters, or between two filters.
//!
//! The sums run over images of the start point under the reflections in the
//! bounding axes. Upper limits are floors of linear expressions in `N`; a
//! limit below the lower bound means the sum is empty.

use num_bigint::BigInt;

use super::{require, require_row, FormulaError};

/// Evaluators without domain checks.
pub mod formal {
    use num_bigint::BigInt;

    use crate::closed_form::{count_c, count_f, signed, sum_range};

    fn floor_div(a: i64, b: i64) -> i64 {
        a.div_euclid(b)
    }

    /// Wall at 0 and type-1 filter at `l - 1`, endpoint inside the strip.
    pub fn desire1(l: i64, m: i64, n: i64) -> BigInt {
        count_f(m, n)
            + sum_range(1, floor_div(n + l, 2 * l), |k| count_f(m - 2 * k * l, n))
            + sum_range(1, floor_div(n, 2 * l), |k| count_f(m + 2 * k * l, n))
    }

    /// Wall at 0 and type-1 filter at `l - 1`, endpoint right of the filter.
    pub fn desire2(l: i64, m: i64, n: i64) -> BigInt {
        count_f(m, n)
            + sum_range(1, floor_div(n - l + 1, 2 * l), |k| {
                count_f(m + 2 * k * l, n)
            })
    }

    /// The terms that [`desire1`] has and [`desire2`] lacks: reflections of
    /// the start that land right of the origin.
    pub fn desire_gap(l: i64, m: i64, n: i64) -> BigInt {
        sum_range(1, floor_div(n + l, 2 * l), |k| count_f(m - 2 * k * l, n))
    }

    /// The `F_{M + 2kl}` terms whose index lies between the two upper limits
    /// of [`desire1`] and [`desire2`]. Together with [`desire_gap`] this
    /// accounts for the full difference `desire1 - desire2` at any `(M, N)`;
    /// it vanishes whenever `M >= l - 1`.
    pub fn desire_boundary(l: i64, m: i64, n: i64) -> BigInt {
        let lo = floor_div(n - l + 1, 2 * l) + 1;
        let hi = floor_div(n, 2 * l);
        sum_range(lo, hi, |k| count_f(m + 2 * k * l, n))
    }

    /// Type-1 filter at `l - 1`, type-2 filter at `2l - 1`, start at the origin.
    pub fn th3(l: i64, m: i64, n: i64) -> BigInt {
        sum_range(0, floor_div(n - l + 1, 2 * l), |k| {
            signed(k, count_c(m + 2 * k * l, n))
        }) + sum_range(2, floor_div(n + 2 * l, 2 * l), |k| {
            signed(k - 1, count_c(m - 2 * k * l + 2, n))
        })
    }

    /// As [`th3`], starting at `(-2Al, 0)`.
    pub fn th32(a: i64, l: i64, m: i64, n: i64) -> BigInt {
        sum_range(a, floor_div(n - l + 1, 2 * l), |k| {
            signed(k - a, count_c(m + 2 * k * l, n))
        }) + sum_range(a, floor_div(n - 2 * l, 2 * l), |k| {
            signed(k - a + 1, count_c(m - 2 * (k + 2) * l + 2, n))
        })
    }

    /// As [`th3`], starting at `(-2Bl - 2, 0)`.
    ///
    /// The first sum uses `C_{M + 2kl + 2}`: the start sits two columns left
    /// of `-2Bl`, so every image moves two columns left as well.
    pub fn th33(b: i64, l: i64, m: i64, n: i64) -> BigInt {
        th33_with_offset(b, l, m, n, 2)
    }

    /// [`th33`] with `C_{M + 2kl - 2}` in the first sum. Kept to show that
    /// this variant disagrees with the path count.
    pub fn th33_printed(b: i64, l: i64, m: i64, n: i64) -> BigInt {
        th33_with_offset(b, l, m, n, -2)
    }

    fn th33_with_offset(b: i64, l: i64, m: i64, n: i64, offset: i64) -> BigInt {
        sum_range(b, floor_div(n - l - 1, 2 * l), |k| {
            signed(k - b, count_c(m + 2 * k * l + offset, n))
        }) + sum_range(b, floor_div(n - 2 - 2 * l, 2 * l), |k| {
            signed(k - b + 1, count_c(m - 2 * (k + 2) * l, n))
        })
    }

    /// Wall at 0, type-1 filter at `l - 1`, type-2 filter at `2l - 1`.
    pub fn th4(l: i64, m: i64, n: i64) -> BigInt {
        sum_range(0, floor_div(n - l + 1, 4 * l), |k| {
            count_f(m + 4 * k * l, n)
        }) + sum_range(0, floor_div(n - 2 * l, 4 * l), |k| {
            count_f(m - 4 * k * l - 4 * l, n)
        })
    }
}

fn require_l(name: &'static str, l: i64) -> Result<(), FormulaError> {
    require(l >= 2, name, || format!("l = {l} must be at least 2"))
}

fn require_second_strip(name: &'static str, l: i64, m: i64, n: i64) -> Result<(), FormulaError> {
    require_l(name, l)?;
    require_row(name, n)?;
    require(l - 1 <= m && m < 2 * l - 1, name, || {
        format!(
            "endpoint M = {m} must satisfy {} <= M < {}",
            l - 1,
            2 * l - 1
        )
    })
}

/// Wall at 0 and type-1 filter at `l - 1`, for `0 <= M <= l - 2`.
pub fn wall_filter_strip1(l: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    const NAME: &str = "wall_filter_strip1";
    require_l(NAME, l)?;
    require_row(NAME, n)?;
    require((0..=l - 2).contains(&m), NAME, || {
        format!("endpoint M = {m} must satisfy 0 <= M <= {}", l - 2)
    })?;
    Ok(formal::desire1(l, m, n))
}

/// Wall at 0 and type-1 filter at `l - 1`, for `M > l - 2`.
pub fn wall_filter_right(l: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    const NAME: &str = "wall_filter_right";
    require_l(NAME, l)?;
    require_row(NAME, n)?;
    require(m > l - 2, NAME, || {
        format!("endpoint M = {m} must exceed {}", l - 2)
    })?;
    Ok(formal::desire2(l, m, n))
}

/// Type-1 filter at `l - 1` and type-2 filter at `2l - 1`, no wall, for
/// `l - 1 <= M < 2l - 1`.
pub fn two_filters(l: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    require_second_strip("two_filters", l, m, n)?;
    Ok(formal::th3(l, m, n))
}

/// [`two_filters`] with the start moved to `(-2Al, 0)`, `A >= 0`.
pub fn two_filters_from_even(a: i64, l: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    const NAME: &str = "two_filters_from_even";
    require(a >= 0, NAME, || {
        format!("shift A = {a} must be non-negative")
    })?;
    require_second_strip(NAME, l, m, n)?;
    Ok(formal::th32(a, l, m, n))
}

/// [`two_filters`] with the start moved to `(-2Bl - 2, 0)`, `B >= 0`.
pub fn two_filters_from_odd(b: i64, l: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    const NAME: &str = "two_filters_from_odd";
    require(b >= 0, NAME, || {
        format!("shift B = {b} must be non-negative")
    })?;
    require_second_strip(NAME, l, m, n)?;
    Ok(formal::th33(b, l, m, n))
}

/// Wall at 0, type-1 filter at `l - 1` and type-2 filter at `2l - 1`, for
/// `l - 1 <= M < 2l - 1`.
pub fn wall_two_filters(l: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    require_second_strip("wall_two_filters", l, m, n)?;
    Ok(formal::th4(l, m, n))
}
