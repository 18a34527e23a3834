//! Exact counting formulas for spotlight tilings of rectangles and of the
//! rectangle-derived families (missing corners, trimmed last column, corner
//! L-shapes, frames).
//!
//! Dimensions follow the region module: `m` rows, `n` columns. Every count is
//! an arbitrary-precision integer and every average an exact rational.

mod poly;

pub use poly::BiPoly;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::region::{Corner, CornerSet, RegionFamily};

pub type Count = BigUint;
pub type Ratio = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("parameters outside the formula's domain: {0}")]
    Domain(String),
}

fn domain<T>(msg: String) -> Result<T, FormulaError> {
    Err(FormulaError::Domain(msg))
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> Count {
    if b < 0 || b as u64 > a {
        return Count::zero();
    }
    let k = (b as u64).min(a - b as u64);
    let mut acc = Count::one();
    for i in 1..=k {
        // acc * (a - k + i) is divisible by i at every step
        acc = acc * (a - k + i) / i;
    }
    acc
}

fn binom_i(a: i64, b: i64) -> Count {
    if a < 0 {
        Count::zero()
    } else {
        binomial(a as u64, b)
    }
}

fn int(x: Count) -> BigInt {
    BigInt::from(x)
}

fn to_count(x: BigInt, what: &str) -> Count {
    x.to_biguint()
        .unwrap_or_else(|| panic!("{what} evaluated to a negative number"))
}

/// Number of tilings of an `m x n` rectangle; 1 when either side is zero.
pub fn rect_count(m: u32, n: u32) -> Count {
    if m == 0 || n == 0 {
        return Count::one();
    }
    let (m, n) = (m as u64, n as u64);
    binomial(m + n, m as i64) - binomial(m + n - 2, m as i64 - 1)
}

/// [`rect_count`] through the first-tile recursion
/// `T(m,n) = T(m-1,n) + T(m,n-1)` for `mn > 1`, with `T(1,1) = 1` and
/// `T(m,0) = T(0,n) = 1`.
pub fn rect_count_by_recursion(m: u32, n: u32) -> Count {
    let (m, n) = (m as usize, n as usize);
    let mut table = vec![vec![Count::one(); n + 1]; m + 1];
    for i in 1..=m {
        for j in 1..=n {
            if i * j > 1 {
                table[i][j] = &table[i - 1][j] + &table[i][j - 1];
            }
        }
    }
    table[m][n].clone()
}

/// `(fewest, most)` spotlights used by a tiling of an `m x n` rectangle.
pub fn rect_bounds(m: u32, n: u32) -> (u64, u64) {
    if m == 0 || n == 0 {
        return (0, 0);
    }
    (m.min(n) as u64, (m + n - 1) as u64)
}

/// Number of tilings of maximal size.
pub fn rect_max_count(m: u32, n: u32) -> Count {
    if m == 0 || n == 0 {
        return Count::one();
    }
    binomial((m + n - 2) as u64, m as i64 - 1)
}

/// Number of tilings of an `m x n` rectangle using exactly `r` spotlights.
pub fn rect_size_count(m: u32, n: u32, r: i64) -> Count {
    if m == 0 || n == 0 {
        return if r == 0 { Count::one() } else { Count::zero() };
    }
    let (mi, ni) = (m as i64, n as i64);
    let max = mi + ni - 1;
    if r <= 0 || r > max {
        Count::zero()
    } else if r == max {
        rect_max_count(m, n)
    } else {
        binom_i(r - 1, mi - 1) + binom_i(r - 1, ni - 1)
    }
}

fn ratio(num: i64, den: i64) -> Ratio {
    Ratio::new(num.into(), den.into())
}

/// Exact mean tiling size over all tilings of an `m x n` rectangle, from the
/// closed form.
pub fn rect_avg_size(m: u32, n: u32) -> Ratio {
    if m == 0 || n == 0 {
        return Ratio::zero();
    }
    let (m, n) = (m as i64, n as i64);
    let lead = ratio(m * n * (m + n - 1), (m + n) * (m + n - 1) - m * n);
    lead * (Ratio::one() + ratio(n - 1, m + 1) + ratio(m - 1, n + 1))
}

/// Mean size computed as `sum r * t(r) / sum t(r)` over [`rect_size_count`].
pub fn rect_avg_size_from_distribution(m: u32, n: u32) -> Ratio {
    let (lo, hi) = rect_bounds(m, n);
    let mut weighted = BigInt::zero();
    let mut total = BigInt::zero();
    for r in lo..=hi {
        let t = int(rect_size_count(m, n, r as i64));
        weighted += &t * BigInt::from(r);
        total += t;
    }
    Ratio::new(weighted, total)
}

/// Horizontal/vertical generating polynomial over the non-maximal tilings of
/// an `m x n` rectangle. Zero for `1 x 1`.
pub fn rect_hv_gf(m: u32, n: u32) -> BiPoly {
    let mut poly = BiPoly::zero();
    if m == 0 || n == 0 || (m == 1 && n == 1) {
        return poly;
    }
    let (mi, ni) = (m as i64, n as i64);
    for r in 0..=(ni - 2) {
        poly.add_term(m, r as u32, binom_i(r + mi - 1, mi - 1));
    }
    for r in 0..=(mi - 2) {
        poly.add_term(r as u32, n, binom_i(r + ni - 1, ni - 1));
    }
    poly
}

/// `T` with the zero-dimension convention, as a signed integer.
fn t(m: i64, n: i64) -> BigInt {
    debug_assert!(m >= 0 && n >= 0);
    int(rect_count(m as u32, n as u32))
}

/// Rectangle missing its southeast corner; `T - C(m+n-2, m-1)`, which also
/// covers one-wide strips (`1 x k` gives `k - 1`). Zero dimensions follow the
/// `T` convention.
fn t_se(m: i64, n: i64) -> BigInt {
    if m == 0 || n == 0 {
        return BigInt::one();
    }
    t(m, n) - int(binom_i(m + n - 2, m - 1))
}

/// Number of tilings of an `m x n` rectangle with the given corner cells
/// removed. Single corners need `m, n >= 2`; larger subsets need `m, n >= 3`.
pub fn corner_removed_count(m: u32, n: u32, corners: CornerSet) -> Result<Count, FormulaError> {
    let need = match corners.len() {
        0 => 1,
        1 => 2,
        _ => 3,
    };
    if m < need || n < need {
        return domain(format!(
            "corners {corners} need m, n >= {need} (got {m}x{n})"
        ));
    }
    Ok(to_count(
        corner_removed_signed(m as i64, n as i64, corners),
        "corner count",
    ))
}

fn corner_removed_signed(m: i64, n: i64, corners: CornerSet) -> BigInt {
    use Corner::*;
    let has = |c| corners.contains(c);
    let k = |x: i64| BigInt::from(x);

    if !has(NW) {
        let ne_sw = has(NE) as i64 + has(SW) as i64;
        return if has(SE) {
            t_se(m, n) - ne_sw
        } else {
            t(m, n) - ne_sw
        };
    }

    // Two northwest corners: first tile from the corner below or beside the
    // hole, giving the three-term recursion. `base` is T or T^SE.
    let base = |a: i64, b: i64| if has(SE) { t_se(a, b) } else { t(a, b) };
    match (has(NE), has(SW)) {
        (false, false) => {
            base(m - 1, n - 1) + k(n - 1) * base(m - 2, n) + k(m - 1) * base(m, n - 2)
        }
        (true, false) => {
            base(m - 1, n - 1) + k(n - 2) * base(m - 2, n) + k(m - 1) * base(m, n - 2) - k(m) + 1
        }
        // transpose of the (NW, NE) case
        (false, true) => {
            base(m - 1, n - 1) + k(m - 2) * base(m, n - 2) + k(n - 1) * base(m - 2, n) - k(n) + 1
        }
        (true, true) => {
            base(m - 1, n - 1) + k(n - 2) * base(m - 2, n) + k(m - 2) * base(m, n - 2) - k(m) - k(n)
                + 4
        }
    }
}

/// Tilings lost when the top `r` cells of a region's last column are removed,
/// where `n` counts the columns up to and including that column: vertical
/// tiles must fill the `n - 1` columns to its left, interleaved with `k < r`
/// horizontal tiles over its top, giving `sum_{k<r} C(n-1+k, k)`.
pub fn trimmed_column_delta(n: u32, r: u32) -> Result<Count, FormulaError> {
    if n < 1 {
        return domain("difference column needs n >= 1".to_string());
    }
    let n = n as u64;
    Ok((0..r as u64).map(|k| binomial(n - 1 + k, k as i64)).sum())
}

/// Tilings of an `m x n` rectangle whose last column lost its top `r` cells,
/// `0 <= r <= m - 1`.
pub fn trimmed_rect_count(m: u32, n: u32, r: u32) -> Result<Count, FormulaError> {
    if m < 1 || n < 1 || r >= m {
        return domain(format!(
            "trimmed rectangle needs m, n >= 1 and r < m (got {m}x{n}, r = {r})"
        ));
    }
    Ok(rect_count(m, n) - trimmed_column_delta(n, r)?)
}

/// Tilings of the L-shape formed by a column of `m` and a row of `n` cells
/// meeting at `corner`. Valid for `m, n >= 2`.
pub fn corner_region_count(m: u32, n: u32, corner: Corner) -> Result<Count, FormulaError> {
    if m < 2 || n < 2 {
        return domain(format!(
            "corner region formula needs m, n >= 2 (got {m}x{n})"
        ));
    }
    let (m, n) = (m as u64, n as u64);
    let value = match corner {
        Corner::NW => m + n - 2,
        Corner::NE => n * (m - 1) + 1,
        Corner::SW => m * (n - 1) + 1,
        Corner::SE => 2 * (m - 1) * (n - 1) + 1,
    };
    Ok(Count::from(value))
}

/// Closed form for the width-1 `m x n` frame, `m, n >= 3`:
/// `2(m-2)(n-2)(m+n-2) + (m-2)(m+1) + (n-2)(n+1)`.
///
/// Exhaustive enumeration agrees only at `3 x 3`; elsewhere it finds
/// `(m-2)^2 + (n-2)^2 - 2` fewer tilings than this expression.
pub fn frame_count(m: u32, n: u32) -> Result<Count, FormulaError> {
    if m < 3 || n < 3 {
        return domain(format!("frame needs m, n >= 3 (got {m}x{n})"));
    }
    let (m, n) = (Count::from(m), Count::from(n));
    let two = Count::from(2u32);
    let one = Count::one();
    let a = &m - &two;
    let b = &n - &two;
    Ok(&two * &a * &b * (&m + &n - &two) + &a * (&m + &one) + &b * (&n + &one))
}

/// Closed-form count for a built-in family.
pub fn family_count(family: &RegionFamily) -> Result<Count, FormulaError> {
    match *family {
        RegionFamily::Rectangle { m, n } if m >= 1 && n >= 1 => Ok(rect_count(m, n)),
        RegionFamily::Rectangle { m, n } => {
            domain(format!("rectangle needs m, n >= 1 (got {m}x{n})"))
        }
        RegionFamily::RectMinusCorners { m, n, corners } => corner_removed_count(m, n, corners),
        RegionFamily::Frame { m, n } => frame_count(m, n),
        RegionFamily::CornerRegion { m, n, corner } => corner_region_count(m, n, corner),
        RegionFamily::TrimmedRectangle { m, n, r } => trimmed_rect_count(m, n, r),
    }
}

/// Decimal rendering rounded half away from zero, e.g. `5.160`.
pub fn format_decimal(value: &Ratio, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = value * Ratio::from_integer(scale.clone());
    let rounded = (scaled.abs() + Ratio::new(1.into(), 2.into()))
        .floor()
        .to_integer();
    let (whole, frac) = rounded.div_rem(&scale);
    let sign = if value.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{:0>width$}", frac, width = places as usize)
}

/// Nearest `f64`, for display only.
pub fn to_f64(value: &Ratio) -> f64 {
    value.numer().to_f64().unwrap_or(f64::NAN) / value.denom().to_f64().unwrap_or(f64::NAN)
}
