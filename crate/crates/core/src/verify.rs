//! Cross-validation of the enumerator against the closed forms, and of both
//! against embedded reference tables and OEIS prefixes.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::formulas::{self, format_decimal, Count};
use crate::region::{Corner, CornerSet, RegionFamily};
use crate::tiling::{enumerate_tilings, Ensemble};

/// Tilings of `m x n` rectangles, `m, n` in `1..=7`.
pub const RECT_TABLE: [[u64; 7]; 7] = [
    [1, 2, 3, 4, 5, 6, 7],
    [2, 4, 7, 11, 16, 22, 29],
    [3, 7, 14, 25, 41, 63, 92],
    [4, 11, 25, 50, 91, 154, 246],
    [5, 16, 41, 91, 182, 336, 582],
    [6, 22, 63, 154, 336, 672, 1254],
    [7, 29, 92, 246, 582, 1254, 2508],
];

/// Mean tiling size of `m x n` rectangles to three places as listed in the
/// reference table, `m, n` in `1..=7`.
pub const AVG_TABLE: [[&str; 7]; 7] = [
    ["1", "1.5", "2", "2.5", "3", "3.5", "4"],
    ["1.5", "2.5", "3.286", "4", "4.688", "5.364", "6.034"],
    ["2", "3.286", "4.286", "5.16", "5.976", "6.762", "7.533"],
    ["2.5", "4", "5.16", "6.16", "7.077", "7.948", "8.793"],
    ["3", "4.688", "5.976", "7.077", "8.077", "9.018", "9.923"],
    [
        "3.5", "5.364", "6.762", "7.948", "9.018", "10.018", "10.974",
    ],
    ["4", "6.034", "7.533", "8.793", "9.923", "10.974", "11.934"],
];

/// Cells of [`AVG_TABLE`] that disagree with the exact mean:
/// `(m, n, listed, exact)`. The 7x7 mean is 30030/2508.
pub const AVG_TABLE_ERRATA: [(u32, u32, &str, &str); 1] = [(7, 7, "11.934", "11.974")];

/// Frame tiling counts, `m, n` in `3..=7`.
pub const FRAME_TABLE: [[u64; 5]; 5] = [
    [16, 34, 58, 88, 124],
    [34, 68, 112, 166, 230],
    [58, 112, 180, 262, 358],
    [88, 166, 262, 376, 508],
    [124, 230, 358, 508, 680],
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown sequence `{0}` (expected A051597, A051601 or A132370)")]
    UnknownSequence(String),
}

/// One mismatch found by a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    fn new(instance: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Failure {
            instance: instance.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub instances_checked: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn from_instances(name: &str, results: Vec<Vec<Failure>>) -> Self {
        CheckReport {
            name: name.to_string(),
            instances_checked: results.len(),
            failures: results.into_iter().flatten().collect(),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<12} {:>9}  {}",
            self.name,
            self.instances_checked,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for fail in &self.failures {
            writeln!(
                f,
                "  - {}: expected {}, actual {}",
                fail.instance, fail.expected, fail.actual
            )?;
        }
        Ok(())
    }
}

/// Plain-text table for several reports.
pub fn render_reports(reports: &[CheckReport]) -> String {
    let mut out = format!("{:<12} {:>9}  {}\n", "check", "instances", "result");
    for report in reports {
        out.push_str(&report.to_string());
    }
    out
}

fn enumerate(family: RegionFamily) -> Ensemble {
    let region = family
        .build()
        .expect("family parameters are generated in range");
    enumerate_tilings(&region).expect("test regions fit the enumerator")
}

fn compare(
    failures: &mut Vec<Failure>,
    instance: &str,
    what: &str,
    expected: impl fmt::Display,
    actual: impl fmt::Display,
) {
    let (e, a) = (expected.to_string(), actual.to_string());
    if e != a {
        failures.push(Failure::new(format!("{instance} {what}"), e, a));
    }
}

fn check_rectangle(m: u32, n: u32) -> Vec<Failure> {
    let mut failures = Vec::new();
    let id = format!("rect {m}x{n}");
    let ensemble = enumerate(RegionFamily::Rectangle { m, n });

    compare(
        &mut failures,
        &id,
        "count",
        formulas::rect_count(m, n),
        ensemble.len(),
    );
    compare(
        &mut failures,
        &id,
        "recursion",
        formulas::rect_count(m, n),
        formulas::rect_count_by_recursion(m, n),
    );
    let (lo, hi) = formulas::rect_bounds(m, n);
    compare(
        &mut failures,
        &id,
        "min size",
        lo,
        ensemble.min_size().unwrap_or(0),
    );
    compare(
        &mut failures,
        &id,
        "max size",
        hi,
        ensemble.max_size().unwrap_or(0),
    );
    for r in 0..=hi + 1 {
        let got = ensemble
            .size_distribution()
            .get(&(r as usize))
            .copied()
            .unwrap_or(0);
        compare(
            &mut failures,
            &id,
            &format!("size {r}"),
            formulas::rect_size_count(m, n, r as i64),
            got,
        );
    }
    compare(
        &mut failures,
        &id,
        "maximal count",
        formulas::rect_max_count(m, n),
        ensemble.maximal().count(),
    );
    if let Some(mean) = ensemble.mean_size() {
        compare(
            &mut failures,
            &id,
            "mean size",
            formulas::rect_avg_size(m, n),
            mean,
        );
    }
    match ensemble.hv_polynomial() {
        Ok(poly) => compare(
            &mut failures,
            &id,
            "hv polynomial",
            formulas::rect_hv_gf(m, n),
            poly,
        ),
        Err(e) => failures.push(Failure::new(format!("{id} hv polynomial"), "polynomial", e)),
    }
    failures
}

/// Enumerate every `m x n` rectangle with `m + n <= max_sum` and compare
/// counts, size bounds, size distribution, maximal count, mean size and the
/// direction polynomial with the closed forms.
pub fn crosscheck_rectangles(max_sum: u32) -> CheckReport {
    let instances: Vec<(u32, u32)> = (1..max_sum)
        .flat_map(|m| (1..max_sum).map(move |n| (m, n)))
        .filter(|&(m, n)| m + n <= max_sum)
        .collect();
    let results = instances
        .par_iter()
        .map(|&(m, n)| check_rectangle(m, n))
        .collect();
    CheckReport::from_instances("rectangles", results)
}

#[derive(Clone, Copy, Debug)]
enum FamilyCheck {
    Corners(u32, u32, CornerSet),
    Trimmed(u32, u32, u32),
    CornerRegion(u32, u32, Corner),
    Frame(u32, u32),
}

impl FamilyCheck {
    fn family(self) -> RegionFamily {
        match self {
            FamilyCheck::Corners(m, n, corners) => RegionFamily::RectMinusCorners { m, n, corners },
            FamilyCheck::Trimmed(m, n, r) => RegionFamily::TrimmedRectangle { m, n, r },
            FamilyCheck::CornerRegion(m, n, corner) => RegionFamily::CornerRegion { m, n, corner },
            FamilyCheck::Frame(m, n) => RegionFamily::Frame { m, n },
        }
    }

    fn formula(self) -> Result<Count, formulas::FormulaError> {
        formulas::family_count(&self.family())
    }

    fn run(self) -> Vec<Failure> {
        let family = self.family();
        let actual = enumerate(family).len();
        let mut failures = Vec::new();
        match self.formula() {
            Ok(expected) => compare(
                &mut failures,
                &family.to_string(),
                "count",
                expected,
                actual,
            ),
            Err(e) => failures.push(Failure::new(family.to_string(), e, actual)),
        }
        if let FamilyCheck::Trimmed(m, n, 1) = self {
            if m >= 2 && n >= 2 {
                let ne = formulas::corner_removed_count(m, n, CornerSet::new(&[Corner::NE]));
                if let (Ok(ne), Ok(trimmed)) = (ne, self.formula()) {
                    compare(
                        &mut failures,
                        &family.to_string(),
                        "vs NE corner",
                        ne,
                        trimmed,
                    );
                }
            }
        }
        failures
    }
}

fn family_instances(max_dim: u32) -> Vec<FamilyCheck> {
    let dims = |lo: u32| (lo..=max_dim).flat_map(move |m| (lo..=max_dim).map(move |n| (m, n)));
    let mut out = Vec::new();
    for set in CornerSet::all() {
        let need = match set.len() {
            0 => 1,
            1 => 2,
            _ => 3,
        };
        out.extend(dims(need).map(|(m, n)| FamilyCheck::Corners(m, n, set)));
    }
    for (m, n) in dims(1) {
        out.extend((0..m).map(|r| FamilyCheck::Trimmed(m, n, r)));
    }
    for corner in Corner::ALL {
        out.extend(dims(2).map(|(m, n)| FamilyCheck::CornerRegion(m, n, corner)));
    }
    out.extend(dims(3).map(|(m, n)| FamilyCheck::Frame(m, n)));
    out
}

/// Enumerate every built-in family region with sides up to `max_dim` and
/// compare against its closed form.
pub fn crosscheck_families(max_dim: u32) -> CheckReport {
    let results = family_instances(max_dim)
        .par_iter()
        .map(|check| check.run())
        .collect();
    CheckReport::from_instances("families", results)
}

/// Compare the closed forms with the embedded reference tables and the
/// OEIS prefixes derived from them.
pub fn check_reference_tables() -> CheckReport {
    let mut results = Vec::new();
    for m in 1..=7u32 {
        for n in 1..=7u32 {
            let mut failures = Vec::new();
            let id = format!("table {m}x{n}");
            compare(
                &mut failures,
                &id,
                "count",
                RECT_TABLE[m as usize - 1][n as usize - 1],
                formulas::rect_count(m, n),
            );
            let printed = AVG_TABLE[m as usize - 1][n as usize - 1];
            let expected = AVG_TABLE_ERRATA
                .iter()
                .find(|e| e.0 == m && e.1 == n)
                .map_or(printed, |e| e.3);
            compare(
                &mut failures,
                &id,
                "mean",
                trim_decimal(expected),
                trim_decimal(&format_decimal(&formulas::rect_avg_size(m, n), 3)),
            );
            results.push(failures);
        }
    }
    for m in 3..=7u32 {
        for n in 3..=7u32 {
            let mut failures = Vec::new();
            let got = formulas::frame_count(m, n)
                .map(|c| c.to_string())
                .unwrap_or_default();
            compare(
                &mut failures,
                &format!("table frame {m}x{n}"),
                "count",
                FRAME_TABLE[m as usize - 3][n as usize - 3],
                got,
            );
            results.push(failures);
        }
    }
    for seq in Sequence::ALL {
        let mut failures = Vec::new();
        let expected = seq.table_prefix();
        let got = oeis_prefix(seq.id(), expected.len()).expect("known id");
        let got: Vec<u64> = got
            .iter()
            .map(|c| c.try_into().unwrap_or(u64::MAX))
            .collect();
        compare(
            &mut failures,
            seq.id(),
            "prefix",
            format!("{expected:?}"),
            format!("{got:?}"),
        );
        results.push(failures);
    }
    CheckReport::from_instances("tables", results)
}

fn trim_decimal(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// The OEIS arrays emitted by [`oeis_prefix`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    /// Rectangles, from `1 x 1`.
    A051597,
    /// Rectangles missing the southeast corner, from `2 x 2`.
    A051601,
    /// Frames, from `3 x 3`.
    A132370,
}

impl Sequence {
    pub const ALL: [Sequence; 3] = [Sequence::A051597, Sequence::A051601, Sequence::A132370];

    pub fn id(self) -> &'static str {
        match self {
            Sequence::A051597 => "A051597",
            Sequence::A051601 => "A051601",
            Sequence::A132370 => "A132370",
        }
    }

    /// Smallest side length of the array; the reading starts at
    /// `(origin, origin)`.
    pub fn origin(self) -> u32 {
        match self {
            Sequence::A051597 => 1,
            Sequence::A051601 => 2,
            Sequence::A132370 => 3,
        }
    }

    fn value(self, m: u32, n: u32) -> Count {
        match self {
            Sequence::A051597 => formulas::rect_count(m, n),
            Sequence::A051601 => {
                formulas::corner_removed_count(m, n, CornerSet::new(&[Corner::SE]))
                    .expect("origin keeps m, n >= 2")
            }
            Sequence::A132370 => formulas::frame_count(m, n).expect("origin keeps m, n >= 3"),
        }
    }

    /// Complete antidiagonals readable from the reference tables.
    fn table_prefix(self) -> Vec<u64> {
        let (lo, hi) = match self {
            Sequence::A051597 => (1, 7),
            Sequence::A051601 => (2, 7),
            Sequence::A132370 => (3, 7),
        };
        let mut out = Vec::new();
        for sum in 2 * lo..=hi + lo {
            for m in lo..=sum - lo {
                let n = sum - m;
                let v = match self {
                    Sequence::A051597 => RECT_TABLE[m as usize - 1][n as usize - 1],
                    // T^SE = T - C(m+n-2, m-1), with the binomial read off the
                    // maximal-tiling counts
                    Sequence::A051601 => {
                        let t = RECT_TABLE[m as usize - 1][n as usize - 1];
                        let max: u64 = formulas::rect_max_count(m, n).try_into().unwrap_or(0);
                        t - max
                    }
                    Sequence::A132370 => FRAME_TABLE[m as usize - 3][n as usize - 3],
                };
                out.push(v);
            }
        }
        out
    }
}

impl std::str::FromStr for Sequence {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Sequence::ALL
            .into_iter()
            .find(|seq| seq.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| VerifyError::UnknownSequence(s.to_string()))
    }
}

/// First `len` terms of the array read by antidiagonals (constant `m + n`,
/// `m` ascending).
pub fn oeis_prefix(id: &str, len: usize) -> Result<Vec<Count>, VerifyError> {
    let seq: Sequence = id.parse()?;
    let lo = seq.origin();
    let mut out = Vec::with_capacity(len);
    let mut sum = 2 * lo;
    while out.len() < len {
        for m in lo..=sum - lo {
            if out.len() == len {
                break;
            }
            out.push(seq.value(m, sum - m));
        }
        sum += 1;
    }
    Ok(out)
}

/// Rectangles, families and reference tables in one run.
pub fn run_all(max_sum: u32, max_dim: u32) -> Vec<CheckReport> {
    vec![
        crosscheck_rectangles(max_sum),
        crosscheck_families(max_dim),
        check_reference_tables(),
    ]
}
