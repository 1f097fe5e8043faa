//! Differential verification: every closed form against the row oracle.
//!
//! Each suite walks a parameter grid, builds the arrangement a formula is
//! about, runs one [`RowSweep`] per arrangement and start point, and records
//! one [`Cell`] per `(formula, parameters)` pair. Cells come out in a fixed
//! order, so two runs with the same [`SweepSpec`] (or seed) produce identical
//! reports.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closed_form::{self, count_c, FormulaError};
use crate::lattice::{Arrangement, LatticePoint, Restriction, RestrictionKind, Semantics};
use crate::oracle::{dp_count, enumerate_weight_sum, PathQuery, Row, RowSweep};

/// Rows above this are never enumerated by the property suite.
pub const PROPERTY_MAX_ROW: i64 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("invalid sweep: {0}")]
    InvalidSpec(String),
}

/// The grid a suite runs over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub l_values: Vec<i64>,
    pub n_max: i64,
    /// Largest filter or wall offset in the single-restriction suite.
    pub d_max: i64,
    /// Largest strip index checked for the periodic arrangement.
    pub strips_max: i64,
    /// Largest `A`/`B` start shift for the two-filter counts.
    pub shift_max: i64,
    pub semantics: Semantics,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            l_values: vec![2, 3, 4, 5],
            n_max: 48,
            d_max: 6,
            strips_max: 5,
            shift_max: 3,
            semantics: Semantics::LandingDoubled,
        }
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), VerifyError> {
        let bad = |msg: String| Err(VerifyError::InvalidSpec(msg));
        if self.n_max < 0 {
            return bad(format!("n_max = {} must be non-negative", self.n_max));
        }
        if let Some(l) = self.l_values.iter().find(|&&l| l < 2) {
            return bad(format!("l = {l} must be at least 2"));
        }
        if self.d_max < 0 || self.strips_max < 1 || self.shift_max < 0 {
            return bad("d_max and shift_max must be >= 0, strips_max >= 1".to_string());
        }
        Ok(())
    }
}

/// A parameter value: integers for coordinates, text for arrangements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<String> for ParamValue {
    fn from(v: String) -> Self {
        ParamValue::Text(v)
    }
}

pub type Params = BTreeMap<String, ParamValue>;

/// One formula evaluation next to its oracle value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub formula_id: String,
    pub parameters: Params,
    #[serde(with = "decimal")]
    pub formula_value: BigInt,
    #[serde(with = "decimal")]
    pub oracle_value: BigInt,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl Cell {
    pub fn new(
        formula_id: &str,
        parameters: Params,
        formula_value: BigInt,
        oracle_value: BigInt,
    ) -> Self {
        let matches = formula_value == oracle_value;
        Cell {
            formula_id: formula_id.to_string(),
            parameters,
            formula_value,
            oracle_value,
            matches,
        }
    }

    pub fn int_param(&self, name: &str) -> Option<i64> {
        match self.parameters.get(name) {
            Some(ParamValue::Int(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn text_param(&self, name: &str) -> Option<&str> {
        match self.parameters.get(name) {
            Some(ParamValue::Text(v)) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CompareReport {
    pub cells: Vec<Cell>,
    pub summary: Summary,
}

impl CompareReport {
    pub fn from_cells(cells: Vec<Cell>) -> Self {
        let summary = Summary {
            total: cells.len(),
            mismatches: cells.iter().filter(|c| !c.matches).count(),
        };
        CompareReport { cells, summary }
    }

    /// Concatenates reports in order.
    pub fn merge(reports: impl IntoIterator<Item = CompareReport>) -> Self {
        CompareReport::from_cells(reports.into_iter().flat_map(|r| r.cells).collect())
    }

    pub fn is_clean(&self) -> bool {
        self.summary.mismatches == 0
    }

    pub fn mismatched(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.matches)
    }

    pub fn cells_for<'a>(&'a self, formula_id: &'a str) -> impl Iterator<Item = &'a Cell> + 'a {
        self.cells
            .iter()
            .filter(move |c| c.formula_id == formula_id)
    }

    /// The cell for `formula_id` whose integer parameters include all of `ints`.
    pub fn find<'a>(&'a self, formula_id: &'a str, ints: &[(&str, i64)]) -> Option<&'a Cell> {
        self.cells_for(formula_id)
            .find(|c| ints.iter().all(|(k, v)| c.int_param(k) == Some(*v)))
    }
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// Collects cells for one arrangement and start column, sweeping rows once.
struct Grid<'a> {
    cells: &'a mut Vec<Cell>,
    arrangement: Arrangement,
    start_x: i64,
    n_max: i64,
    base: Params,
}

impl<'a> Grid<'a> {
    fn new(cells: &'a mut Vec<Cell>, arrangement: Arrangement, start_x: i64, n_max: i64) -> Self {
        let mut base = Params::new();
        base.insert("arrangement".into(), arrangement.to_string().into());
        if start_x != 0 {
            base.insert("start".into(), start_x.into());
        }
        Grid {
            cells,
            arrangement,
            start_x,
            n_max,
            base,
        }
    }

    fn param(mut self, name: &str, value: i64) -> Self {
        self.base.insert(name.into(), value.into());
        self
    }

    /// For every row and every reachable endpoint `M` accepted by `in_domain`,
    /// evaluates `formula(M, N)` and compares it to the oracle row entry.
    fn run<D, F>(self, formula_id: &str, in_domain: D, formula: F)
    where
        D: Fn(i64, i64) -> bool,
        F: Fn(i64, i64) -> Result<BigInt, FormulaError>,
    {
        self.run_many(&[(formula_id, &in_domain, &formula)]);
    }

    #[allow(clippy::type_complexity)]
    fn run_many(
        self,
        formulas: &[(
            &str,
            &dyn Fn(i64, i64) -> bool,
            &dyn Fn(i64, i64) -> Result<BigInt, FormulaError>,
        )],
    ) {
        for row in RowSweep::new(&self.arrangement, self.start_x, self.n_max) {
            let n = row.steps;
            for &(id, in_domain, formula) in formulas {
                for m in reachable(self.start_x, n) {
                    if !in_domain(m, n) {
                        continue;
                    }
                    let mut params = self.base.clone();
                    params.insert("M".into(), m.into());
                    params.insert("N".into(), n.into());
                    let value = formula(m, n).expect("grid stays inside the formula domain");
                    self.cells.push(Cell::new(id, params, value, row.get(m)));
                }
            }
        }
    }
}

/// Endpoint columns with the right parity within reach of `start_x` in `n` steps.
fn reachable(start_x: i64, n: i64) -> impl Iterator<Item = i64> {
    (0..=n).map(move |i| start_x - n + 2 * i)
}

fn arrangement(restrictions: Vec<Restriction>, semantics: Semantics) -> Arrangement {
    Arrangement::new(restrictions, semantics).expect("suite arrangements are valid")
}

/// Every single-restriction count against the oracle.
pub fn run_lemma_suite(spec: &SweepSpec) -> Result<CompareReport, VerifyError> {
    spec.validate()?;
    let sem = spec.semantics;
    let n_max = spec.n_max;
    let mut cells = Vec::new();

    Grid::new(&mut cells, arrangement(vec![], sem), 0, n_max).run(
        "count_c",
        |_, _| true,
        |m, n| Ok(count_c(m, n)),
    );

    for d in 0..=spec.d_max {
        let a = -d;
        Grid::new(
            &mut cells,
            arrangement(vec![Restriction::wall_left(a)], sem),
            0,
            n_max,
        )
        .param("a", a)
        .run(
            "wall_left",
            |m, _| m >= a,
            |m, n| closed_form::wall_left(a, m, n),
        );
        Grid::new(
            &mut cells,
            arrangement(vec![Restriction::wall_right(d)], sem),
            0,
            n_max,
        )
        .param("b", d)
        .run(
            "wall_right",
            |m, _| m <= d,
            |m, n| closed_form::wall_right(d, m, n),
        );
    }

    for d in 1..=spec.d_max {
        let left1 = |m: i64, _| m < d;
        let right1 = |m: i64, _| m >= d;
        let right2 = |m: i64, _| m > d;
        let neg = |m: i64, _| m >= -d;
        let f1_left = |m, n| closed_form::filter1_left(d, m, n);
        let f1_right = |m, n| closed_form::filter1_right(d, m, n);
        let f2_left = |m, n| closed_form::filter2_left(d, m, n);
        let f2_right = |m, n| closed_form::filter2_right(d, m, n);
        Grid::new(
            &mut cells,
            arrangement(vec![Restriction::filter1(d)], sem),
            0,
            n_max,
        )
        .param("d", d)
        .run_many(&[
            ("filter1_left", &left1, &f1_left),
            ("filter1_right", &right1, &f1_right),
        ]);
        Grid::new(
            &mut cells,
            arrangement(vec![Restriction::filter1(-d)], sem),
            0,
            n_max,
        )
        .param("d", d)
        .run("filter1_neg", neg, |m, n| closed_form::filter1_neg(d, m, n));
        Grid::new(
            &mut cells,
            arrangement(vec![Restriction::filter2(d)], sem),
            0,
            n_max,
        )
        .param("d", d)
        .run_many(&[
            ("filter2_left", &left1, &f2_left),
            ("filter2_right", &right2, &f2_right),
        ]);
        Grid::new(
            &mut cells,
            arrangement(vec![Restriction::filter2(-d)], sem),
            0,
            n_max,
        )
        .param("d", d)
        .run("filter2_neg", neg, |m, n| closed_form::filter2_neg(d, m, n));
    }
    Ok(CompareReport::from_cells(cells))
}

/// The wall/filter strip counts and the periodic multiplicity against the oracle.
pub fn run_theorem_suite(spec: &SweepSpec) -> Result<CompareReport, VerifyError> {
    spec.validate()?;
    let sem = spec.semantics;
    let n_max = spec.n_max;
    let mut cells = Vec::new();

    for &l in &spec.l_values {
        let wall = Restriction::wall_left(0);
        let f1 = Restriction::filter1(l - 1);
        let f2 = Restriction::filter2(2 * l - 1);
        let strip2 = move |m: i64, _| l - 1 <= m && m < 2 * l - 1;

        let strip1 = |m: i64, _| (0..=l - 2).contains(&m);
        let right = |m: i64, _| m > l - 2;
        let d1 = |m, n| closed_form::wall_filter_strip1(l, m, n);
        let d2 = |m, n| closed_form::wall_filter_right(l, m, n);
        Grid::new(&mut cells, arrangement(vec![wall, f1], sem), 0, n_max)
            .param("l", l)
            .run_many(&[
                ("wall_filter_strip1", &strip1, &d1),
                ("wall_filter_right", &right, &d2),
            ]);

        Grid::new(&mut cells, arrangement(vec![f1, f2], sem), 0, n_max)
            .param("l", l)
            .run("two_filters", strip2, |m, n| {
                closed_form::two_filters(l, m, n)
            });

        for shift in 0..=spec.shift_max {
            Grid::new(
                &mut cells,
                arrangement(vec![f1, f2], sem),
                -2 * shift * l,
                n_max,
            )
            .param("l", l)
            .param("A", shift)
            .run("two_filters_from_even", strip2, |m, n| {
                closed_form::two_filters_from_even(shift, l, m, n)
            });
            Grid::new(
                &mut cells,
                arrangement(vec![f1, f2], sem),
                -2 * shift * l - 2,
                n_max,
            )
            .param("l", l)
            .param("B", shift)
            .run("two_filters_from_odd", strip2, |m, n| {
                closed_form::two_filters_from_odd(shift, l, m, n)
            });
        }

        Grid::new(&mut cells, arrangement(vec![wall, f1, f2], sem), 0, n_max)
            .param("l", l)
            .run("wall_two_filters", strip2, |m, n| {
                closed_form::wall_two_filters(l, m, n)
            });

        let canonical = Arrangement::canonical(l, n_max)
            .expect("l validated")
            .with_semantics(sem);
        let strips_max = spec.strips_max;
        Grid::new(&mut cells, canonical, 0, n_max)
            .param("l", l)
            .run(
                "multiplicity",
                |m, n| m >= 0 && m <= n && closed_form::StripIndex::of(l, m).get() <= strips_max,
                |m, n| closed_form::multiplicity(l, m, n),
            );
    }
    Ok(CompareReport::from_cells(cells))
}

/// Algebraic identities between the two wall-and-filter formulas, evaluated
/// formally over `l_values`, every `N <= n_max` and every `|M| <= N`.
///
/// `desire_gap` cells compare `desire1 - desire2` with the reflected-start
/// terms alone, on `M >= l - 1`. `desire_split` cells compare the same
/// difference with gap plus boundary terms on every `M`, for `N >= l - 1`
/// (below that the first sum is empty and the split does not apply).
pub fn run_identity_suite(spec: &SweepSpec) -> Result<CompareReport, VerifyError> {
    use closed_form::formal;
    spec.validate()?;
    let mut cells = Vec::new();
    for &l in &spec.l_values {
        for n in 0..=spec.n_max {
            for m in reachable(0, n) {
                let mut params = Params::new();
                params.insert("l".into(), l.into());
                params.insert("M".into(), m.into());
                params.insert("N".into(), n.into());
                let diff = formal::desire1(l, m, n) - formal::desire2(l, m, n);
                let gap = formal::desire_gap(l, m, n);
                if m >= l - 1 {
                    cells.push(Cell::new(
                        "desire_gap",
                        params.clone(),
                        diff.clone(),
                        gap.clone(),
                    ));
                }
                if n >= l - 1 {
                    let split = gap + formal::desire_boundary(l, m, n);
                    cells.push(Cell::new("desire_split", params, diff, split));
                }
            }
        }
    }
    Ok(CompareReport::from_cells(cells))
}

const KINDS: [RestrictionKind; 4] = [
    RestrictionKind::WallLeft,
    RestrictionKind::WallRight,
    RestrictionKind::Filter1,
    RestrictionKind::Filter2,
];

/// A random valid arrangement with up to three restrictions near the origin.
pub fn random_arrangement(rng: &mut impl Rng) -> Arrangement {
    loop {
        let count = rng.gen_range(0..=3);
        let mut restrictions: Vec<Restriction> = (0..count)
            .map(|_| Restriction {
                kind: *KINDS.choose(rng).expect("non-empty"),
                axis: rng.gen_range(-6..=6),
            })
            .collect();
        restrictions.sort_by_key(|r| r.axis);
        let semantics = if rng.gen_bool(0.5) {
            Semantics::LandingDoubled
        } else {
            Semantics::PaperLiteral
        };
        if let Ok(arr) = Arrangement::new(restrictions, semantics) {
            return arr;
        }
    }
}

/// Row `n` recomputed from row `n - 1` by pushing every entry through
/// [`Arrangement::allowed_steps`].
fn row_image(arrangement: &Arrangement, previous: &Row, x: i64) -> BigInt {
    let mut total = BigInt::zero();
    for (from, value) in previous.nonzero() {
        for (step, next) in arrangement.allowed_steps(LatticePoint::new(from, previous.steps)) {
            if next.x == x {
                total += value * step.weight;
            }
        }
    }
    total
}

/// Randomised oracle properties, reproducible from `seed`.
///
/// Per case: `dp_vs_enumeration` (match also requires a non-negative count),
/// `translation`, `row_recurrence`, and `dp_vs_binomial` when the arrangement
/// is empty. Case 0 always uses the empty arrangement.
pub fn run_property_suite(seed: u64, cases: usize) -> Result<CompareReport, VerifyError> {
    if cases == 0 {
        return Err(VerifyError::InvalidSpec(
            "cases must be at least 1".to_string(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells = Vec::new();
    for case in 0..cases {
        let arr = if case == 0 {
            Arrangement::unrestricted()
        } else {
            random_arrangement(&mut rng)
        };
        let start_x = rng.gen_range(-3..=3);
        let n = rng.gen_range(0..=PROPERTY_MAX_ROW);
        let m = start_x - n + 2 * rng.gen_range(0..=n);
        let shift = *[-10, -7, -3, -1, 1, 2, 5, 9]
            .choose(&mut rng)
            .expect("non-empty");
        let q = PathQuery::starting_at(start_x, m, n, arr.clone());

        let mut params = Params::new();
        params.insert("case".into(), (case as i64).into());
        params.insert("arrangement".into(), arr.to_string().into());
        params.insert(
            "semantics".into(),
            arr.semantics().name().to_string().into(),
        );
        params.insert("start".into(), start_x.into());
        params.insert("M".into(), m.into());
        params.insert("N".into(), n.into());

        let dp = dp_count(&q).expect("row is non-negative");
        let enumerated = enumerate_weight_sum(&q).expect("row within enumeration limit");
        let mut cell = Cell::new("dp_vs_enumeration", params.clone(), dp.clone(), enumerated);
        cell.matches &= !dp.is_negative();
        cells.push(cell);

        let mut shifted_params = params.clone();
        shifted_params.insert("shift".into(), shift.into());
        let shifted = dp_count(&q.shifted(shift)).expect("row is non-negative");
        cells.push(Cell::new(
            "translation",
            shifted_params,
            shifted,
            dp.clone(),
        ));

        if n > 0 {
            let mut sweep = RowSweep::new(&arr, start_x, n);
            for _ in 1..n {
                sweep.advance();
            }
            let previous = sweep.row().clone();
            let image = row_image(&arr, &previous, m);
            cells.push(Cell::new(
                "row_recurrence",
                params.clone(),
                image,
                dp.clone(),
            ));
        }

        if arr.restrictions().is_empty() {
            cells.push(Cell::new(
                "dp_vs_binomial",
                params,
                count_c(m - start_x, n),
                dp,
            ));
        }
    }
    Ok(CompareReport::from_cells(cells))
}

/// Which cells a semantics change can affect: those whose arrangement has a
/// type-2 filter.
pub fn touches_filter2(cell: &Cell) -> bool {
    cell.text_param("arrangement")
        .is_some_and(|a| a.contains("F2@"))
}
