//! Acceptance criteria, one line each. Runs with a custom harness so the
//! report is always printed: `cargo test -p filterpaths-cli --test acceptance`.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` are still evaluated at full
//! strength; their FAIL line is expected and does not fail the run. If one of
//! them starts passing, the run fails so the list gets updated.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use filterpaths::closed_form::{formal, poly_p, poly_q, pq_recurrence_check, StripIndex};
use filterpaths::lattice::{Arrangement, Semantics};
use filterpaths::oracle::{enumerate_paths, PathQuery};
use filterpaths::verify::{
    run_identity_suite, run_lemma_suite, run_property_suite, run_theorem_suite, CompareReport,
    SweepSpec,
};
use filterpaths::ExactInt;

const KNOWN_UNATTAINABLE: &[u32] = &[7];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

fn summary(report: &CompareReport) -> String {
    format!(
        "cells={} mismatches={}",
        report.summary.total, report.summary.mismatches
    )
}

/// Keeps only cells whose formula id is in `ids`.
fn only(report: &CompareReport, ids: &[&str]) -> CompareReport {
    CompareReport::from_cells(
        report
            .cells
            .iter()
            .filter(|c| ids.contains(&c.formula_id.as_str()))
            .cloned()
            .collect(),
    )
}

fn first_mismatch(report: &CompareReport) -> String {
    match report.mismatched().next() {
        Some(c) => format!(
            " first: {} {:?} formula {} oracle {}",
            c.formula_id, c.parameters, c.formula_value, c.oracle_value
        ),
        None => String::new(),
    }
}

fn lemma_suite() -> Outcome {
    let spec = SweepSpec {
        n_max: 32,
        d_max: 6,
        semantics: Semantics::LandingDoubled,
        ..SweepSpec::default()
    };
    let report = run_lemma_suite(&spec).expect("valid spec");
    let per_lemma = [
        "count_c",
        "wall_left",
        "wall_right",
        "filter1_left",
        "filter1_right",
        "filter1_neg",
        "filter2_left",
        "filter2_right",
        "filter2_neg",
    ];
    let missing: Vec<_> = per_lemma
        .iter()
        .filter(|id| report.cells_for(id).next().is_none())
        .collect();
    Outcome::new(
        report.is_clean() && missing.is_empty(),
        format!(
            "{}{}{}",
            summary(&report),
            first_mismatch(&report),
            if missing.is_empty() {
                String::new()
            } else {
                format!(" missing: {missing:?}")
            }
        ),
    )
}

const THEOREM_IDS: &[&str] = &[
    "wall_filter_strip1",
    "wall_filter_right",
    "two_filters",
    "two_filters_from_even",
    "two_filters_from_odd",
    "wall_two_filters",
];

fn theorem_suite() -> Outcome {
    let spec = SweepSpec {
        l_values: vec![2, 3, 4, 5, 6],
        n_max: 40,
        shift_max: 3,
        strips_max: 1,
        ..SweepSpec::default()
    };
    let report = only(&run_theorem_suite(&spec).expect("valid spec"), THEOREM_IDS);
    let shifts_covered = (0..=3).all(|s| {
        report.find("two_filters_from_even", &[("A", s)]).is_some()
            && report.find("two_filters_from_odd", &[("B", s)]).is_some()
    });
    Outcome::new(
        report.is_clean() && shifts_covered,
        format!(
            "{} A,B<=3 covered={shifts_covered}{}",
            summary(&report),
            first_mismatch(&report)
        ),
    )
}

fn criterion3_spec() -> SweepSpec {
    SweepSpec {
        l_values: vec![2, 3, 4, 5],
        n_max: 48,
        strips_max: 5,
        ..SweepSpec::default()
    }
}

fn enumerated_canonical(l: i64, m: i64, n: i64) -> ExactInt {
    let arr = Arrangement::canonical(l, n).expect("l >= 2");
    let paths = enumerate_paths(&PathQuery::from_origin(m, n, arr)).expect("short row");
    paths.iter().map(|p| p.weight.clone()).sum()
}

fn multiplicity_grid() -> Outcome {
    let report = only(
        &run_theorem_suite(&criterion3_spec()).expect("valid spec"),
        &["multiplicity"],
    );
    let anchors = [(2, 1, 7, 8), (2, 3, 5, 8), (2, 3, 7, 24), (2, 4, 4, 2)];
    let mut notes = Vec::new();
    let mut anchors_ok = true;
    for (l, m, n, expected) in anchors {
        let enumerated = enumerated_canonical(l, m, n);
        let cell = report.find("multiplicity", &[("l", l), ("M", m), ("N", n)]);
        let ok = enumerated == expected.into()
            && cell.is_some_and(|c| c.matches && c.formula_value == expected.into());
        if !ok {
            notes.push(format!("anchor ({l},{m},{n}) enumerated {enumerated}"));
        }
        anchors_ok &= ok;
    }
    let max_strip = report
        .cells
        .iter()
        .filter_map(|c| c.int_param("l").zip(c.int_param("M")))
        .map(|(l, m)| StripIndex::of(l, m).get())
        .max();
    Outcome::new(
        report.is_clean() && anchors_ok && max_strip == Some(5),
        format!(
            "{} anchors re-enumerated={anchors_ok} max strip={max_strip:?}{}{}",
            summary(&report),
            first_mismatch(&report),
            notes.join("; ")
        ),
    )
}

fn negative_control() -> Outcome {
    let spec = SweepSpec {
        l_values: vec![2],
        n_max: 8,
        d_max: 2,
        semantics: Semantics::PaperLiteral,
        ..SweepSpec::default()
    };
    let report = run_lemma_suite(&spec).expect("valid spec");
    let cell = report.find("filter2_right", &[("d", 1), ("M", 2), ("N", 4)]);
    let cell_ok = cell
        .is_some_and(|c| !c.matches && c.formula_value == 8.into() && c.oracle_value == 12.into());
    let status = Command::new(env!("CARGO_BIN_EXE_filterpaths"))
        .args([
            "compare",
            "--l",
            "2",
            "--n-max",
            "8",
            "--d-max",
            "2",
            "--suite",
            "lemma",
            "--semantics",
            "literal",
        ])
        .output()
        .expect("binary runs")
        .status
        .code();
    Outcome::new(
        cell_ok && status == Some(1),
        format!(
            "filter2_right(d=1,M=2,N=4) 8 vs 12={cell_ok} compare exit={status:?} {}",
            summary(&report)
        ),
    )
}

fn pq_check() -> Outcome {
    let verdict = pq_recurrence_check(12, 30);
    let init =
        (0..=30).all(|k| poly_p(2, k).unwrap() == 1.into() && poly_q(2, k).unwrap() == 0.into());
    Outcome::new(
        verdict.is_ok() && init,
        format!(
            "recurrence ok={} P_2=1,Q_2=0 for k<=30: {init}",
            verdict.is_ok()
        ),
    )
}

fn properties() -> Outcome {
    let report = run_property_suite(2024, 200).expect("cases >= 1");
    let dp_enum = only(&report, &["dp_vs_enumeration"]);
    let translation = only(&report, &["translation"]);
    let counts_ok = dp_enum.summary.total == 200 && translation.summary.total == 200;

    let multiplicity = only(
        &run_theorem_suite(&criterion3_spec()).expect("valid spec"),
        &["multiplicity"],
    );
    let mut divisibility_cells = 0;
    let mut indivisible = 0;
    for c in &multiplicity.cells {
        let j = StripIndex::of(c.int_param("l").unwrap(), c.int_param("M").unwrap()).get();
        if j >= 2 {
            divisibility_cells += 1;
            let unit = ExactInt::from(1) << (j - 2) as usize;
            if &c.oracle_value % &unit != 0.into() {
                indivisible += 1;
            }
        }
    }
    Outcome::new(
        report.is_clean() && counts_ok && indivisible == 0,
        format!(
            "dp=enum {} translation {} all {}; 2^(j-2) divides {}/{}",
            summary(&dp_enum),
            summary(&translation),
            summary(&report),
            divisibility_cells - indivisible,
            divisibility_cells
        ),
    )
}

/// Evaluated on every `|M| <= N` of matching parity, as the criterion states
/// no narrower range. Counts on `M >= 0` and `M >= l - 1` are reported alongside.
fn note_identity() -> Outcome {
    let mut total = 0;
    let mut failures = 0;
    let mut nonneg = (0, 0);
    let mut example = None;
    for l in 2..=5 {
        for n in 0..=40 {
            for m in (-n..=n).step_by(2) {
                total += 1;
                let diff = formal::desire1(l, m, n) - formal::desire2(l, m, n);
                let rhs = formal::desire_gap(l, m, n);
                if m >= 0 {
                    nonneg.0 += 1;
                }
                if diff != rhs {
                    failures += 1;
                    if m >= 0 {
                        nonneg.1 += 1;
                    }
                    example.get_or_insert(format!("l={l} M={m} N={n}: {diff} vs {rhs}"));
                }
            }
        }
    }
    let spec = SweepSpec {
        l_values: vec![2, 3, 4, 5],
        n_max: 40,
        ..SweepSpec::default()
    };
    let scoped = only(
        &run_identity_suite(&spec).expect("valid spec"),
        &["desire_gap"],
    );
    Outcome::new(
        failures == 0,
        format!(
            "all |M|<=N: cells={total} mismatches={failures}{}; on M>=0: cells={} mismatches={}; on M>=l-1: {}",
            example.map(|e| format!(" (first {e})")).unwrap_or_default(),
            nonneg.0,
            nonneg.1,
            summary(&scoped)
        ),
    )
}

fn main() -> ExitCode {
    type Check = fn() -> Outcome;
    let criteria: [(u32, &str, Option<u64>, Check); 7] = [
        (1, "single-restriction counts", Some(60), lemma_suite),
        (2, "wall and filter strip counts", Some(120), theorem_suite),
        (
            3,
            "multiplicity on the canonical arrangement",
            Some(180),
            multiplicity_grid,
        ),
        (
            4,
            "literal-semantics negative control",
            None,
            negative_control,
        ),
        (5, "P/Q recurrences", Some(5), pq_check),
        (6, "oracle properties and divisibility", None, properties),
        (7, "desire1 - desire2 gap identity", None, note_identity),
    ];

    let mut unexpected = 0;
    for (id, name, limit, check) in criteria {
        let started = Instant::now();
        let outcome = check();
        let elapsed = started.elapsed();
        let in_time = limit.is_none_or(|s| elapsed < Duration::from_secs(s));
        let pass = outcome.pass && in_time;
        let known = KNOWN_UNATTAINABLE.contains(&id);
        let verdict = match (pass, known) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "FAIL (known)",
            (true, true) => "PASS (unexpected)",
        };
        if pass == known {
            unexpected += 1;
        }
        let budget = limit.map(|s| format!(" limit {s}s")).unwrap_or_default();
        println!(
            "criterion {id} {name}: {verdict} [{:.2}s{budget}] {}",
            elapsed.as_secs_f64(),
            outcome.detail
        );
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
