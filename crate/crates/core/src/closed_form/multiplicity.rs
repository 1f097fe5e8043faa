//! The weighted count on the full periodic arrangement.
//!
//! Strip `j >= 2` is the column band `[(j-1)l - 1, jl - 1)`. The count there
//! is `2^(j-2)` times a combination of wall-corrected terms whose
//! coefficients are the polynomial families `P_j(k)` and `Q_j(k)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{choose, count_f, formal, require, require_row, sum_range, FormulaError};

/// Index of the strip containing endpoint column `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StripIndex(pub i64);

impl StripIndex {
    /// `floor((M + 1) / l) + 1` for `M >= 0`.
    pub fn of(l: i64, m: i64) -> StripIndex {
        StripIndex((m + 1).div_euclid(l) + 1)
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// Half-open column range `[lo, hi)` covered by this strip.
    pub fn columns(self, l: i64) -> (i64, i64) {
        let j = self.0;
        if j == 1 {
            (0, l - 1)
        } else {
            ((j - 1) * l - 1, j * l - 1)
        }
    }
}

/// `P_j(k)` and `Q_j(k)` together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqValue {
    pub j: i64,
    pub k: i64,
    pub p: BigInt,
    pub q: BigInt,
}

fn pq_sum(j: i64, k: i64, parity: i64) -> BigInt {
    (0..=j / 2)
        .map(|i| {
            let outer = choose(j - 2, 2 * i + parity);
            let top = k - i + j - 2;
            if outer.is_zero() || top < 0 {
                BigInt::zero()
            } else {
                outer * choose(top, j - 2)
            }
        })
        .sum()
}

fn require_pq(name: &'static str, j: i64, k: i64) -> Result<(), FormulaError> {
    require(j >= 2, name, || format!("j = {j} must be at least 2"))?;
    require(k >= 0, name, || format!("k = {k} must be non-negative"))
}

/// `sum_i binom(j-2, 2i) * binom(k-i+j-2, j-2)`.
pub fn poly_p(j: i64, k: i64) -> Result<BigInt, FormulaError> {
    require_pq("poly_p", j, k)?;
    Ok(pq_sum(j, k, 0))
}

/// `sum_i binom(j-2, 2i+1) * binom(k-i+j-2, j-2)`.
pub fn poly_q(j: i64, k: i64) -> Result<BigInt, FormulaError> {
    require_pq("poly_q", j, k)?;
    Ok(pq_sum(j, k, 1))
}

/// `P_j(k)`, `Q_j(k)` for `2 <= j <= j_max`, `0 <= k <= k_max`, ordered by
/// `j` then `k`.
pub fn pq_table(j_max: i64, k_max: i64) -> Vec<PqValue> {
    let mut out = Vec::new();
    for j in 2..=j_max {
        for k in 0..=k_max {
            out.push(PqValue {
                j,
                k,
                p: pq_sum(j, k, 0),
                q: pq_sum(j, k, 1),
            });
        }
    }
    out
}

/// A point where the closed forms break the recurrence in `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqCounterexample {
    /// The family that failed, `'P'` or `'Q'`.
    pub family: char,
    /// Index of the family member that was recomputed (`j + 1`).
    pub j: i64,
    pub k: i64,
    pub from_recurrence: BigInt,
    pub closed_form: BigInt,
}

/// Checks, for `2 <= j < j_max` and `0 <= k <= k_max`,
///
/// ```text
/// P_{j+1}(k) = sum_{n<=k} P_j(n) + sum_{n<=k-1} Q_j(n)
/// Q_{j+1}(k) = sum_{n<=k} P_j(n) + sum_{n<=k}   Q_j(n)
/// ```
///
/// and returns the first failure. Vacuously fine when `j_max < 3`.
pub fn pq_recurrence_check(j_max: i64, k_max: i64) -> Result<(), PqCounterexample> {
    for j in 2..j_max {
        let mut p_prefix = BigInt::zero();
        let mut q_prefix = BigInt::zero();
        for k in 0..=k_max {
            let q_before = q_prefix.clone();
            p_prefix += pq_sum(j, k, 0);
            q_prefix += pq_sum(j, k, 1);
            let expect_p = &p_prefix + &q_before;
            let expect_q = &p_prefix + &q_prefix;
            let got_p = pq_sum(j + 1, k, 0);
            if got_p != expect_p {
                return Err(PqCounterexample {
                    family: 'P',
                    j: j + 1,
                    k,
                    from_recurrence: expect_p,
                    closed_form: got_p,
                });
            }
            let got_q = pq_sum(j + 1, k, 1);
            if got_q != expect_q {
                return Err(PqCounterexample {
                    family: 'Q',
                    j: j + 1,
                    k,
                    from_recurrence: expect_q,
                    closed_form: got_q,
                });
            }
        }
    }
    Ok(())
}

/// Weighted number of paths from the origin to `(M, N)` on the canonical
/// periodic arrangement with parameter `l`.
///
/// Strip 1 (`M <= l - 2`) never touches the first filter, so the wall-and-filter
/// strip count applies there directly.
pub fn multiplicity(l: i64, m: i64, n: i64) -> Result<BigInt, FormulaError> {
    const NAME: &str = "multiplicity";
    require(l >= 2, NAME, || format!("l = {l} must be at least 2"))?;
    require_row(NAME, n)?;
    require(m >= 0, NAME, || {
        format!("endpoint M = {m} must be non-negative")
    })?;
    require((m + n).rem_euclid(2) == 0, NAME, || {
        format!("M + N = {} must be even", m + n)
    })?;
    require(m <= n, NAME, || {
        format!("endpoint M = {m} exceeds row N = {n}")
    })?;

    let j = StripIndex::of(l, m).get();
    if j == 1 {
        return Ok(formal::desire1(l, m, n));
    }
    let limit = |num: i64| num.div_euclid(4 * l);
    let p = |k| pq_sum(j, k, 0);
    let q = |k| pq_sum(j, k, 1);

    let body = sum_range(0, limit(n - (j - 1) * l + 1), |k| {
        p(k) * count_f(m + 4 * k * l, n)
    }) + sum_range(0, limit(n - j * l), |k| {
        p(k) * count_f(m - 4 * k * l - 2 * j * l, n)
    }) - sum_range(0, limit(n - (j + 1) * l + 1), |k| {
        q(k) * count_f(m + 2 * l + 4 * k * l, n)
    }) - sum_range(0, limit(n - (j + 2) * l), |k| {
        q(k) * count_f(m - 4 * k * l - 2 * (j + 1) * l, n)
    });
    Ok(body * (BigInt::one() << (j - 2) as usize))
}
