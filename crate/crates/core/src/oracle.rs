//! Ground truth by brute force.
//!
//! Two independent counters live here. [`dp_count`] pushes weighted counts one
//! row at a time through [`Arrangement::step_weight`]. [`enumerate_paths`]
//! walks every path depth-first and multiplies step weights along the way.
//! They share nothing but the step rule, so agreement between them is a
//! meaningful check on either.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lattice::{Arrangement, Direction, LatticePoint, Step};

/// Largest row [`enumerate_paths`] accepts.
pub const ENUMERATION_LIMIT: i64 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("InvalidQuery: endpoint row {end_n} lies below the start row {start_y}")]
    InvalidQuery { start_y: i64, end_n: i64 },
    #[error("TooLarge: enumeration is limited to {ENUMERATION_LIMIT} rows, got {0}")]
    TooLarge(i64),
}

/// Paths from `start` to `(end_m, end_n)` under `arrangement`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathQuery {
    pub start: LatticePoint,
    pub end_m: i64,
    pub end_n: i64,
    pub arrangement: Arrangement,
}

impl PathQuery {
    /// A query starting at the origin.
    pub fn from_origin(end_m: i64, end_n: i64, arrangement: Arrangement) -> Self {
        PathQuery {
            start: LatticePoint::ORIGIN,
            end_m,
            end_n,
            arrangement,
        }
    }

    pub fn starting_at(start_x: i64, end_m: i64, end_n: i64, arrangement: Arrangement) -> Self {
        PathQuery {
            start: LatticePoint::new(start_x, 0),
            end_m,
            end_n,
            arrangement,
        }
    }

    /// Number of steps a path takes.
    pub fn length(&self) -> Result<i64, OracleError> {
        let len = self.end_n - self.start.y;
        if len < 0 {
            return Err(OracleError::InvalidQuery {
                start_y: self.start.y,
                end_n: self.end_n,
            });
        }
        Ok(len)
    }

    /// Same query with the start and every axis moved `by` columns right.
    pub fn shifted(&self, by: i64) -> Self {
        PathQuery {
            start: LatticePoint::new(self.start.x + by, self.start.y),
            end_m: self.end_m + by,
            end_n: self.end_n,
            arrangement: self.arrangement.shifted(by),
        }
    }
}

/// A single row of the weighted-count table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    /// Number of steps taken to reach this row.
    pub steps: i64,
    offset: i64,
    values: Vec<BigInt>,
}

impl Row {
    /// Weighted number of paths ending in column `x`; zero outside the window.
    pub fn get(&self, x: i64) -> BigInt {
        self.get_ref(x).cloned().unwrap_or_default()
    }

    fn get_ref(&self, x: i64) -> Option<&BigInt> {
        let i = x - self.offset;
        if i < 0 {
            return None;
        }
        self.values.get(i as usize)
    }

    /// `(column, value)` for every nonzero entry, left to right.
    pub fn nonzero(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(i, v)| (self.offset + i as i64, v))
    }
}

/// Row-by-row propagation of weighted counts from a single start column.
///
/// The window covers every column reachable within `max_steps` steps, and the
/// step weights for that window are resolved once up front.
pub struct RowSweep {
    offset: i64,
    right: Vec<Option<u32>>,
    left: Vec<Option<u32>>,
    current: Row,
    max_steps: i64,
}

impl RowSweep {
    pub fn new(arrangement: &Arrangement, start_x: i64, max_steps: i64) -> Self {
        let max_steps = max_steps.max(0);
        let mut lo = start_x - max_steps;
        // Nothing can pass a left wall that sits left of the start.
        if let Some(w) = arrangement.leftmost_wall().filter(|&w| w <= start_x) {
            lo = lo.max(w);
        }
        let hi = start_x + max_steps;
        let width = (hi - lo + 1) as usize;
        let weight = |x: i64, d: Direction| arrangement.step_weight(x, d);
        let right = (lo..=hi).map(|x| weight(x, Direction::Right)).collect();
        let left = (lo..=hi).map(|x| weight(x, Direction::Left)).collect();
        let mut values = vec![BigInt::zero(); width];
        values[(start_x - lo) as usize] = BigInt::one();
        RowSweep {
            offset: lo,
            right,
            left,
            current: Row {
                steps: 0,
                offset: lo,
                values,
            },
            max_steps,
        }
    }

    pub fn row(&self) -> &Row {
        &self.current
    }

    /// Advances one row. Returns `false` once `max_steps` rows are done.
    pub fn advance(&mut self) -> bool {
        if self.current.steps >= self.max_steps {
            return false;
        }
        let width = self.current.values.len();
        let mut next = vec![BigInt::zero(); width];
        for (i, v) in self.current.values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if let Some(w) = self.right[i] {
                if i + 1 < width {
                    add_weighted(&mut next[i + 1], v, w);
                }
            }
            if let Some(w) = self.left[i] {
                if i > 0 {
                    add_weighted(&mut next[i - 1], v, w);
                }
            }
        }
        self.current = Row {
            steps: self.current.steps + 1,
            offset: self.offset,
            values: next,
        };
        true
    }
}

fn add_weighted(acc: &mut BigInt, v: &BigInt, w: u32) {
    if w == 1 {
        *acc += v;
    } else {
        *acc += v * w;
    }
}

impl Iterator for RowSweep {
    type Item = Row;

    /// Yields the start row first, then every following row.
    fn next(&mut self) -> Option<Row> {
        if self.current.steps < 0 {
            return None;
        }
        let row = self.current.clone();
        if !self.advance() {
            // Mark exhausted after handing out the final row.
            self.current.steps = -1;
        }
        Some(row)
    }
}

/// Weighted number of allowed paths for `q`, by row dynamic programming.
///
/// Parity-impossible and out-of-reach endpoints give zero.
pub fn dp_count(q: &PathQuery) -> Result<BigInt, OracleError> {
    let len = q.length()?;
    let mut sweep = RowSweep::new(&q.arrangement, q.start.x, len);
    while sweep.advance() {}
    Ok(sweep.row().get(q.end_m))
}

/// A concrete path together with the product of its step weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPath {
    pub points: Vec<LatticePoint>,
    pub weight: BigInt,
}

impl WeightedPath {
    /// The step letters, e.g. `RRL`.
    pub fn word(&self) -> String {
        self.points
            .windows(2)
            .map(|p| if p[1].x > p[0].x { 'R' } else { 'L' })
            .collect()
    }
}

/// Calls `visit` once for every allowed path of `q`, with its steps and weight.
pub fn for_each_path<F>(q: &PathQuery, mut visit: F) -> Result<(), OracleError>
where
    F: FnMut(&[(Step, LatticePoint)], &BigInt),
{
    let len = q.length()?;
    if len > ENUMERATION_LIMIT {
        return Err(OracleError::TooLarge(q.end_n));
    }
    let mut trail = Vec::with_capacity(len as usize);
    // Weights stay below 2^24 under the row guard, so u64 is exact here.
    walk(
        q,
        q.start,
        len,
        1,
        &mut trail,
        &mut |t: &[(Step, LatticePoint)], w: u64| visit(t, &BigInt::from(w)),
    );
    Ok(())
}

fn walk<F>(
    q: &PathQuery,
    at: LatticePoint,
    remaining: i64,
    weight: u64,
    trail: &mut Vec<(Step, LatticePoint)>,
    visit: &mut F,
) where
    F: FnMut(&[(Step, LatticePoint)], u64),
{
    if remaining == 0 {
        if at.x == q.end_m {
            visit(trail, weight);
        }
        return;
    }
    if (q.end_m - at.x).abs() > remaining {
        return;
    }
    for (step, next) in q.arrangement.allowed_steps(at) {
        trail.push((step, next));
        walk(
            q,
            next,
            remaining - 1,
            weight * u64::from(step.weight),
            trail,
            visit,
        );
        trail.pop();
    }
}

/// Every allowed path of `q`, in lexicographic order with `R` before `L`.
pub fn enumerate_paths(q: &PathQuery) -> Result<Vec<WeightedPath>, OracleError> {
    let mut out = Vec::new();
    for_each_path(q, |trail, weight| {
        let mut points = Vec::with_capacity(trail.len() + 1);
        points.push(q.start);
        points.extend(trail.iter().map(|(_, p)| *p));
        out.push(WeightedPath {
            points,
            weight: weight.clone(),
        });
    })?;
    Ok(out)
}

/// Sum of path weights by enumeration, without materialising the paths.
pub fn enumerate_weight_sum(q: &PathQuery) -> Result<BigInt, OracleError> {
    let mut total = BigInt::zero();
    for_each_path(q, |_, w| total += w)?;
    Ok(total)
}
