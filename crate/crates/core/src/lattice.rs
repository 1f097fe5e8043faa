//! The lattice, its two steps, and the restrictions that constrain them.
//!
//! Every path lives on the checkerboard lattice `{(x, y) : x + y even}` and
//! moves one row up per step, either to the right `(+1, +1)` or to the left
//! `(-1, +1)`. A [`Restriction`] pins down which steps leave a column and how
//! much they weigh. An [`Arrangement`] is a validated, sorted collection of
//! restrictions together with the [`Semantics`] used to resolve filter
//! weights. [`Arrangement::allowed_steps`] is the only place in the crate that
//! decides what a path may do next; both oracles and the verification harness
//! go through it.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A point of the lattice. `y` is the row (time), `x` the column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// Whether the point lies on the even sublattice.
    pub fn is_even(self) -> bool {
        (self.x + self.y).rem_euclid(2) == 0
    }

    pub fn after(self, dir: Direction) -> Self {
        LatticePoint {
            x: self.x + dir.dx(),
            y: self.y + 1,
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Right,
    Left,
}

impl Direction {
    pub fn dx(self) -> i64 {
        match self {
            Direction::Right => 1,
            Direction::Left => -1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Direction::Right => 'R',
            Direction::Left => 'L',
        }
    }
}

/// One step of a path with its resolved weight (1 or 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub direction: Direction,
    pub weight: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RestrictionKind {
    /// Only the rightward step leaves the axis column.
    WallLeft,
    /// Only the leftward step leaves the axis column.
    WallRight,
    /// One-way rightward column; re-entering it from the right costs weight 2.
    Filter1,
    /// One-way rightward column; landing on it from either side costs weight 2
    /// (under [`Semantics::LandingDoubled`]).
    Filter2,
}

impl RestrictionKind {
    pub fn is_filter(self) -> bool {
        matches!(self, RestrictionKind::Filter1 | RestrictionKind::Filter2)
    }

    fn token(self) -> &'static str {
        match self {
            RestrictionKind::WallLeft => "W",
            RestrictionKind::WallRight => "WR",
            RestrictionKind::Filter1 => "F1",
            RestrictionKind::Filter2 => "F2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Restriction {
    pub kind: RestrictionKind,
    pub axis: i64,
}

impl Restriction {
    pub fn wall_left(axis: i64) -> Self {
        Restriction {
            kind: RestrictionKind::WallLeft,
            axis,
        }
    }

    pub fn wall_right(axis: i64) -> Self {
        Restriction {
            kind: RestrictionKind::WallRight,
            axis,
        }
    }

    pub fn filter1(axis: i64) -> Self {
        Restriction {
            kind: RestrictionKind::Filter1,
            axis,
        }
    }

    pub fn filter2(axis: i64) -> Self {
        Restriction {
            kind: RestrictionKind::Filter2,
            axis,
        }
    }

    pub fn shifted(self, by: i64) -> Self {
        Restriction {
            axis: self.axis + by,
            ..self
        }
    }

    /// The `(column, direction)` pairs whose availability or weight this
    /// restriction decides. Two restrictions conflict iff their claims meet.
    fn claims(self) -> Vec<(i64, Direction)> {
        let a = self.axis;
        match self.kind {
            RestrictionKind::WallLeft | RestrictionKind::WallRight => {
                vec![(a, Direction::Right), (a, Direction::Left)]
            }
            RestrictionKind::Filter1 => vec![
                (a, Direction::Right),
                (a, Direction::Left),
                (a + 1, Direction::Left),
            ],
            RestrictionKind::Filter2 => vec![
                (a - 1, Direction::Right),
                (a, Direction::Right),
                (a, Direction::Left),
                (a + 1, Direction::Left),
            ],
        }
    }
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind.token(), self.axis)
    }
}

/// How weight 2 is distributed around a type-2 filter.
///
/// Type-1 filters are resolved identically in both modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Semantics {
    /// Every step landing on a type-2 axis weighs 2; the forced departure
    /// weighs 1. This is the reading under which the closed forms hold.
    #[default]
    LandingDoubled,
    /// The departure `(d, y) -> (d + 1, y + 1)` and the return
    /// `(d + 1, y) -> (d, y + 1)` weigh 2; the arrival from the left weighs 1.
    PaperLiteral,
}

impl Semantics {
    pub fn name(self) -> &'static str {
        match self {
            Semantics::LandingDoubled => "landing",
            Semantics::PaperLiteral => "literal",
        }
    }
}

impl FromStr for Semantics {
    type Err = ArrangementError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "landing" | "landing-doubled" | "default" => Ok(Semantics::LandingDoubled),
            "literal" | "paper-literal" => Ok(Semantics::PaperLiteral),
            other => Err(ArrangementError::UnknownSemantics(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("UnsortedAxes: {first} is listed before {second}")]
    UnsortedAxes {
        first: Restriction,
        second: Restriction,
    },
    #[error("OverlappingRestrictions: {first} and {second} claim the same step")]
    OverlappingRestrictions {
        first: Restriction,
        second: Restriction,
    },
    #[error("WallInsideFilterBand: {wall} sits inside the weighted band of {filter}")]
    WallInsideFilterBand {
        wall: Restriction,
        filter: Restriction,
    },
    #[error("InvalidL: l must be at least 2, got {0}")]
    InvalidL(i64),
    #[error("cannot parse arrangement token `{0}`")]
    BadToken(String),
    #[error("unknown semantics `{0}` (expected `landing` or `literal`)")]
    UnknownSemantics(String),
}

/// A validated arrangement of restrictions.
///
/// Construct through [`Arrangement::new`], [`Arrangement::canonical`] or by
/// parsing the `W@0;F1@4;F2@9` text form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Arrangement {
    restrictions: Vec<Restriction>,
    semantics: Semantics,
}

impl Arrangement {
    /// The arrangement with no restrictions at all.
    pub fn unrestricted() -> Self {
        Arrangement::default()
    }

    pub fn new(
        restrictions: Vec<Restriction>,
        semantics: Semantics,
    ) -> Result<Self, ArrangementError> {
        validate(&restrictions)?;
        Ok(Arrangement {
            restrictions,
            semantics,
        })
    }

    /// The periodic arrangement: a left wall at 0, a type-1 filter at `l - 1`
    /// and type-2 filters at `n*l - 1` for `n >= 2`, truncated to the axes a
    /// path ending on row `max_row` could ever reach.
    pub fn canonical(l: i64, max_row: i64) -> Result<Self, ArrangementError> {
        if l < 2 {
            return Err(ArrangementError::InvalidL(l));
        }
        let mut restrictions = vec![Restriction::wall_left(0), Restriction::filter1(l - 1)];
        let mut n = 2;
        while n * l - 1 <= max_row + 1 {
            restrictions.push(Restriction::filter2(n * l - 1));
            n += 1;
        }
        Arrangement::new(restrictions, Semantics::LandingDoubled)
    }

    pub fn restrictions(&self) -> &[Restriction] {
        &self.restrictions
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn with_semantics(mut self, semantics: Semantics) -> Self {
        self.semantics = semantics;
        self
    }

    /// Every axis moved by `by` columns.
    pub fn shifted(&self, by: i64) -> Self {
        Arrangement {
            restrictions: self.restrictions.iter().map(|r| r.shifted(by)).collect(),
            semantics: self.semantics,
        }
    }

    pub fn contains_kind(&self, kind: RestrictionKind) -> bool {
        self.restrictions.iter().any(|r| r.kind == kind)
    }

    /// Leftmost left-wall axis, if any.
    pub fn leftmost_wall(&self) -> Option<i64> {
        self.restrictions
            .iter()
            .filter(|r| r.kind == RestrictionKind::WallLeft)
            .map(|r| r.axis)
            .min()
    }

    fn at(&self, x: i64) -> Option<Restriction> {
        // At most a handful of restrictions in practice; sorted, so stop early.
        self.restrictions
            .iter()
            .take_while(|r| r.axis <= x)
            .find(|r| r.axis == x)
            .copied()
    }

    /// The weight of the step from column `x` in direction `dir`, or `None`
    /// when the step is forbidden.
    pub fn step_weight(&self, x: i64, dir: Direction) -> Option<u32> {
        if let Some(r) = self.at(x) {
            return match (r.kind, dir) {
                (RestrictionKind::WallLeft, Direction::Right) => Some(1),
                (RestrictionKind::WallRight, Direction::Left) => Some(1),
                (RestrictionKind::WallLeft | RestrictionKind::WallRight, _) => None,
                (_, Direction::Left) => None,
                (RestrictionKind::Filter1, Direction::Right) => Some(1),
                (RestrictionKind::Filter2, Direction::Right) => match self.semantics {
                    Semantics::LandingDoubled => Some(1),
                    Semantics::PaperLiteral => Some(2),
                },
            };
        }
        let target = x + dir.dx();
        match self.at(target) {
            Some(r) if r.kind.is_filter() => match (r.kind, dir, self.semantics) {
                (_, Direction::Left, _) => Some(2),
                (RestrictionKind::Filter2, Direction::Right, Semantics::LandingDoubled) => Some(2),
                _ => Some(1),
            },
            _ => Some(1),
        }
    }

    /// The steps a path standing at `at` may take next, with resolved weights.
    pub fn allowed_steps(&self, at: LatticePoint) -> Vec<(Step, LatticePoint)> {
        [Direction::Right, Direction::Left]
            .into_iter()
            .filter_map(|direction| {
                self.step_weight(at.x, direction)
                    .map(|weight| (Step { direction, weight }, at.after(direction)))
            })
            .collect()
    }
}

/// Checks the arrangement invariants and reports the first violation.
pub fn validate(restrictions: &[Restriction]) -> Result<(), ArrangementError> {
    for pair in restrictions.windows(2) {
        if pair[1].axis < pair[0].axis {
            return Err(ArrangementError::UnsortedAxes {
                first: pair[0],
                second: pair[1],
            });
        }
    }
    for (i, &first) in restrictions.iter().enumerate() {
        for &second in &restrictions[i + 1..] {
            if second.axis - first.axis > 2 {
                break;
            }
            let a = first.claims();
            if !second.claims().iter().any(|c| a.contains(c)) {
                continue;
            }
            return Err(match (first.kind.is_filter(), second.kind.is_filter()) {
                (false, true) => ArrangementError::WallInsideFilterBand {
                    wall: first,
                    filter: second,
                },
                (true, false) => ArrangementError::WallInsideFilterBand {
                    wall: second,
                    filter: first,
                },
                _ => ArrangementError::OverlappingRestrictions { first, second },
            });
        }
    }
    Ok(())
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.restrictions.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for Restriction {
    type Err = ArrangementError;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let bad = || ArrangementError::BadToken(token.to_string());
        let (kind, axis) = token.trim().split_once('@').ok_or_else(bad)?;
        let kind = match kind.trim() {
            "W" | "WL" => RestrictionKind::WallLeft,
            "WR" => RestrictionKind::WallRight,
            "F1" => RestrictionKind::Filter1,
            "F2" => RestrictionKind::Filter2,
            _ => return Err(bad()),
        };
        let axis = axis.trim().parse().map_err(|_| bad())?;
        Ok(Restriction { kind, axis })
    }
}

/// Parses `W@0;F1@4;F2@9`. Commas are accepted as separators too. The empty
/// string is the unrestricted arrangement. Semantics default to
/// [`Semantics::LandingDoubled`].
impl FromStr for Arrangement {
    type Err = ArrangementError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let restrictions = s
            .split([';', ','])
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Restriction>, _>>()?;
        Arrangement::new(restrictions, Semantics::LandingDoubled)
    }
}
