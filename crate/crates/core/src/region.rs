//! Grid regions: finite sets of unit cells on the square lattice.
//!
//! Rows grow southward and columns grow eastward, so `(0, 0)` is the
//! northwest-most cell of a normalized region. Regions are plain cell sets and
//! may be empty or disconnected; [`Region::is_connected_region`] checks for the
//! nonempty, 4-connected shapes that tilings are defined on.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A unit cell. Ordered row-major: first by `row`, then by `col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }

    pub const fn north(self) -> Cell {
        Cell::new(self.row - 1, self.col)
    }

    pub const fn south(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub const fn west(self) -> Cell {
        Cell::new(self.row, self.col - 1)
    }

    pub const fn east(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub fn neighbors(self) -> [Cell; 4] {
        [self.north(), self.west(), self.east(), self.south()]
    }
}

impl From<(i32, i32)> for Cell {
    fn from((row, col): (i32, i32)) -> Self {
        Cell::new(row, col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// One of the four corners of a rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Corner {
    NW,
    NE,
    SW,
    SE,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::NW, Corner::NE, Corner::SW, Corner::SE];

    fn bit(self) -> u8 {
        match self {
            Corner::NW => 1,
            Corner::NE => 2,
            Corner::SW => 4,
            Corner::SE => 8,
        }
    }

    pub fn opposite(self) -> Corner {
        match self {
            Corner::NW => Corner::SE,
            Corner::NE => Corner::SW,
            Corner::SW => Corner::NE,
            Corner::SE => Corner::NW,
        }
    }

    /// Reflection across the northwest-southeast diagonal.
    pub fn transposed(self) -> Corner {
        match self {
            Corner::NE => Corner::SW,
            Corner::SW => Corner::NE,
            c => c,
        }
    }

    /// The corner cell of an `m x n` rectangle (m rows, n columns).
    pub fn cell_in(self, m: u32, n: u32) -> Cell {
        let last_row = m as i32 - 1;
        let last_col = n as i32 - 1;
        match self {
            Corner::NW => Cell::new(0, 0),
            Corner::NE => Cell::new(0, last_col),
            Corner::SW => Cell::new(last_row, 0),
            Corner::SE => Cell::new(last_row, last_col),
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Corner::NW => "NW",
            Corner::NE => "NE",
            Corner::SW => "SW",
            Corner::SE => "SE",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Corner {
    type Err = RegionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "NW" => Ok(Corner::NW),
            "NE" => Ok(Corner::NE),
            "SW" => Ok(Corner::SW),
            "SE" => Ok(Corner::SE),
            other => Err(RegionError::UnknownCorner(other.to_string())),
        }
    }
}

/// A subset of the four rectangle corners.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CornerSet(u8);

impl CornerSet {
    pub const EMPTY: CornerSet = CornerSet(0);
    pub const FULL: CornerSet = CornerSet(15);

    pub fn new(corners: &[Corner]) -> Self {
        corners.iter().fold(CornerSet::EMPTY, |set, &c| set.with(c))
    }

    /// All 16 subsets, ordered by bit pattern.
    pub fn all() -> impl Iterator<Item = CornerSet> {
        (0u8..16).map(CornerSet)
    }

    pub fn with(self, corner: Corner) -> Self {
        CornerSet(self.0 | corner.bit())
    }

    pub fn contains(self, corner: Corner) -> bool {
        self.0 & corner.bit() != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Corner> {
        Corner::ALL.into_iter().filter(move |&c| self.contains(c))
    }

    pub fn transposed(self) -> Self {
        CornerSet::new(&self.iter().map(Corner::transposed).collect::<Vec<_>>())
    }

    /// True if the set holds a pair of diagonally opposite corners.
    pub fn has_opposite_pair(self) -> bool {
        self.iter().any(|c| self.contains(c.opposite()))
    }

    /// Smallest `min(m, n)` for which the corner-removed rectangle is defined.
    pub fn min_dimension(self) -> u32 {
        match self.len() {
            0 => 1,
            1 => 2,
            2 if !self.has_opposite_pair() => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for CornerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let names: Vec<String> = self.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

impl std::str::FromStr for CornerSet {
    type Err = RegionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split([',', '+'])
            .filter(|part| !part.trim().is_empty())
            .try_fold(CornerSet::EMPTY, |set, part| Ok(set.with(part.parse()?)))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegionError {
    #[error("invalid region parameters: {0}")]
    Parameter(String),
    #[error("unknown corner `{0}` (expected NW, NE, SW or SE)")]
    UnknownCorner(String),
    #[error("unexpected character {ch:?} at line {line}, column {column}")]
    Parse {
        line: usize,
        column: usize,
        ch: char,
    },
}

/// A finite set of cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Region {
    cells: BTreeSet<Cell>,
}

impl Region {
    pub fn new() -> Self {
        Region::default()
    }

    pub fn rectangle(rows: u32, cols: u32) -> Self {
        (0..rows as i32)
            .flat_map(|r| (0..cols as i32).map(move |c| Cell::new(r, c)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn insert(&mut self, cell: Cell) -> bool {
        self.cells.insert(cell)
    }

    pub fn remove(&mut self, cell: Cell) -> bool {
        self.cells.remove(&cell)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl DoubleEndedIterator<Item = Cell> + ExactSizeIterator + '_ {
        self.cells.iter().copied()
    }

    /// Row-major minimum cell.
    pub fn first(&self) -> Option<Cell> {
        self.cells.first().copied()
    }

    /// `(min_row, min_col, max_row, max_col)`, or `None` for the empty region.
    pub fn bounds(&self) -> Option<(i32, i32, i32, i32)> {
        let first = self.cells.first()?;
        let mut b = (first.row, first.col, first.row, first.col);
        for c in &self.cells {
            b.0 = b.0.min(c.row);
            b.1 = b.1.min(c.col);
            b.2 = b.2.max(c.row);
            b.3 = b.3.max(c.col);
        }
        Some(b)
    }

    /// `(rows, cols)` of the bounding box.
    pub fn dimensions(&self) -> (u32, u32) {
        match self.bounds() {
            Some((r0, c0, r1, c1)) => ((r1 - r0 + 1) as u32, (c1 - c0 + 1) as u32),
            None => (0, 0),
        }
    }

    /// True when the region fills its bounding box.
    pub fn is_rectangle(&self) -> bool {
        let (rows, cols) = self.dimensions();
        !self.is_empty() && self.len() == (rows * cols) as usize
    }

    /// Nonempty and 4-connected.
    pub fn is_connected_region(&self) -> bool {
        !self.is_empty() && self.connected_components().len() == 1
    }

    /// Cells whose north and west neighbors both lie outside the region, in
    /// row-major order.
    pub fn nw_corners(&self) -> Vec<Cell> {
        self.cells
            .iter()
            .copied()
            .filter(|&c| self.is_nw_corner(c))
            .collect()
    }

    pub fn is_nw_corner(&self, cell: Cell) -> bool {
        self.contains(cell) && !self.contains(cell.north()) && !self.contains(cell.west())
    }

    /// Maximal 4-connected subsets, ordered by their smallest cell.
    pub fn connected_components(&self) -> Vec<Region> {
        let mut seen = BTreeSet::new();
        let mut components = Vec::new();
        for &start in &self.cells {
            if !seen.insert(start) {
                continue;
            }
            let mut component = Region::new();
            let mut queue = VecDeque::from([start]);
            while let Some(cell) = queue.pop_front() {
                component.insert(cell);
                for next in cell.neighbors() {
                    if self.contains(next) && seen.insert(next) {
                        queue.push_back(next);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    pub fn translated(&self, d_row: i32, d_col: i32) -> Region {
        self.cells
            .iter()
            .map(|c| Cell::new(c.row + d_row, c.col + d_col))
            .collect()
    }

    /// Translate so the minimum row and column are both 0.
    pub fn normalize(&self) -> Region {
        match self.bounds() {
            Some((r0, c0, _, _)) => self.translated(-r0, -c0),
            None => Region::new(),
        }
    }

    /// Reflection across the northwest-southeast diagonal.
    pub fn transpose(&self) -> Region {
        self.cells.iter().map(|c| Cell::new(c.col, c.row)).collect()
    }

    pub fn difference(&self, other: &Region) -> Region {
        Region {
            cells: self.cells.difference(&other.cells).copied().collect(),
        }
    }

    /// Parse the `#`/`.` grid format. Rows run north to south; short lines are
    /// padded with absent cells. The result is normalized.
    pub fn parse_grid(text: &str) -> Result<Region, RegionError> {
        let mut region = Region::new();
        for (row, line) in text.lines().enumerate() {
            for (col, ch) in line.chars().enumerate() {
                match ch {
                    '#' => {
                        region.insert(Cell::new(row as i32, col as i32));
                    }
                    '.' => {}
                    // tolerate CRLF input
                    '\r' if col + 1 == line.chars().count() => {}
                    _ => {
                        return Err(RegionError::Parse {
                            line: row + 1,
                            column: col + 1,
                            ch,
                        })
                    }
                }
            }
        }
        Ok(region.normalize())
    }

    /// Emit the normalized bounding-box grid, one line per row, each line
    /// terminated by `\n`. The empty region serializes to the empty string.
    pub fn to_grid(&self) -> String {
        let Some((r0, c0, r1, c1)) = self.bounds() else {
            return String::new();
        };
        let mut out = String::with_capacity(((r1 - r0 + 1) * (c1 - c0 + 2)) as usize);
        for r in r0..=r1 {
            for c in c0..=c1 {
                out.push(if self.contains(Cell::new(r, c)) {
                    '#'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }
}

impl FromIterator<Cell> for Region {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Region {
            cells: iter.into_iter().collect(),
        }
    }
}

impl<'a> FromIterator<&'a Cell> for Region {
    fn from_iter<I: IntoIterator<Item = &'a Cell>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid())
    }
}

/// Named region families.
///
/// `m` is always the number of rows and `n` the number of columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionFamily {
    Rectangle {
        m: u32,
        n: u32,
    },
    /// Rectangle with the listed corner cells removed.
    RectMinusCorners {
        m: u32,
        n: u32,
        corners: CornerSet,
    },
    /// Width-1 ring around a centered `(m-2) x (n-2)` hole.
    Frame {
        m: u32,
        n: u32,
    },
    /// A column of `m` and a row of `n` sharing one cell at the named corner.
    CornerRegion {
        m: u32,
        n: u32,
        corner: Corner,
    },
    /// Rectangle minus the top `r` cells of its rightmost column.
    TrimmedRectangle {
        m: u32,
        n: u32,
        r: u32,
    },
}

impl RegionFamily {
    pub fn validate(&self) -> Result<(), RegionError> {
        let fail = |msg: String| Err(RegionError::Parameter(msg));
        match *self {
            RegionFamily::Rectangle { m, n } if m < 1 || n < 1 => {
                fail(format!("rectangle needs m, n >= 1 (got {m}x{n})"))
            }
            RegionFamily::RectMinusCorners { m, n, corners } => {
                let need = corners.min_dimension();
                if m < need || n < need {
                    fail(format!(
                        "removing corners {corners} needs m, n >= {need} (got {m}x{n})"
                    ))
                } else {
                    Ok(())
                }
            }
            RegionFamily::Frame { m, n } if m < 3 || n < 3 => {
                fail(format!("frame needs m, n >= 3 (got {m}x{n})"))
            }
            RegionFamily::CornerRegion { m, n, .. } if m < 1 || n < 1 => {
                fail(format!("corner region needs m, n >= 1 (got {m}x{n})"))
            }
            RegionFamily::TrimmedRectangle { m, n, r } if m < 1 || n < 1 || r >= m => fail(
                format!("trimmed rectangle needs m, n >= 1 and r <= m - 1 (got {m}x{n}, r = {r})"),
            ),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Region, RegionError> {
        self.validate()?;
        let region = match *self {
            RegionFamily::Rectangle { m, n } => Region::rectangle(m, n),
            RegionFamily::RectMinusCorners { m, n, corners } => {
                let mut region = Region::rectangle(m, n);
                for corner in corners.iter() {
                    region.remove(corner.cell_in(m, n));
                }
                region
            }
            RegionFamily::Frame { m, n } => {
                let (last_row, last_col) = (m as i32 - 1, n as i32 - 1);
                Region::rectangle(m, n)
                    .cells()
                    .filter(|c| c.row == 0 || c.col == 0 || c.row == last_row || c.col == last_col)
                    .collect()
            }
            RegionFamily::CornerRegion { m, n, corner } => {
                let at = corner.cell_in(m, n);
                let column = (0..m as i32).map(|r| Cell::new(r, at.col));
                let row = (0..n as i32).map(|c| Cell::new(at.row, c));
                column.chain(row).collect()
            }
            RegionFamily::TrimmedRectangle { m, n, r } => Region::rectangle(m, n)
                .cells()
                .filter(|c| !(c.col == n as i32 - 1 && c.row < r as i32))
                .collect(),
        };
        Ok(region)
    }
}

impl fmt::Display for RegionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionFamily::Rectangle { m, n } => write!(f, "rect {m}x{n}"),
            RegionFamily::RectMinusCorners { m, n, corners } => {
                write!(f, "rect {m}x{n} minus {corners}")
            }
            RegionFamily::Frame { m, n } => write!(f, "frame {m}x{n}"),
            RegionFamily::CornerRegion { m, n, corner } => {
                write!(f, "corner region {corner} {m}x{n}")
            }
            RegionFamily::TrimmedRectangle { m, n, r } => write!(f, "trimmed rect {m}x{n} r={r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(cells: &[(i32, i32)]) -> Region {
        cells.iter().map(|&c| Cell::from(c)).collect()
    }

    fn cells(list: &[(i32, i32)]) -> Vec<Cell> {
        list.iter().map(|&c| Cell::from(c)).collect()
    }

    fn frame(m: u32, n: u32) -> Region {
        RegionFamily::Frame { m, n }.build().unwrap()
    }

    #[test]
    fn nw_corners_examples() {
        assert_eq!(Region::rectangle(3, 4).nw_corners(), cells(&[(0, 0)]));
        assert_eq!(frame(3, 3).nw_corners(), cells(&[(0, 0)]));
        let plus = region(&[(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]);
        assert_eq!(plus.nw_corners(), cells(&[(0, 1), (1, 0)]));
        assert!(Region::new().nw_corners().is_empty());
    }

    #[test]
    fn components_examples() {
        let pair = region(&[(0, 0), (0, 2)]);
        assert_eq!(
            pair.connected_components(),
            vec![region(&[(0, 0)]), region(&[(0, 2)])]
        );

        let mut u_shape = frame(3, 3);
        for c in 0..3 {
            u_shape.remove(Cell::new(0, c));
        }
        let comps = u_shape.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 5);

        let square = Region::rectangle(2, 2);
        assert_eq!(square.connected_components(), vec![square.clone()]);
        assert!(Region::new().connected_components().is_empty());
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            region(&[(2, 3), (2, 4)]).normalize(),
            region(&[(0, 0), (0, 1)])
        );
        assert_eq!(region(&[(5, 5)]).normalize(), region(&[(0, 0)]));
        let r = Region::rectangle(2, 3);
        assert_eq!(r.normalize(), r);
        assert_eq!(Region::new().normalize(), Region::new());
    }

    #[test]
    fn build_examples() {
        let r = RegionFamily::Rectangle { m: 2, n: 3 }.build().unwrap();
        assert_eq!(r.len(), 6);
        assert_eq!(r.dimensions(), (2, 3));

        let se = RegionFamily::CornerRegion {
            m: 2,
            n: 2,
            corner: Corner::SE,
        }
        .build()
        .unwrap();
        assert_eq!(se, region(&[(0, 1), (1, 0), (1, 1)]));

        let f = frame(3, 3);
        assert_eq!(f.len(), 8);
        assert!(!f.contains(Cell::new(1, 1)));
    }

    #[test]
    fn corner_region_has_m_plus_n_minus_one_cells() {
        for corner in Corner::ALL {
            for m in 1..5 {
                for n in 1..5 {
                    let r = RegionFamily::CornerRegion { m, n, corner }.build().unwrap();
                    assert_eq!(r.len() as u32, m + n - 1, "{corner} {m}x{n}");
                    assert!(r.is_connected_region());
                }
            }
        }
        let nw = RegionFamily::CornerRegion {
            m: 3,
            n: 2,
            corner: Corner::NW,
        }
        .build()
        .unwrap();
        assert_eq!(nw, region(&[(0, 0), (0, 1), (1, 0), (2, 0)]));
    }

    #[test]
    fn se_removed_square_is_nw_corner_region() {
        let a = RegionFamily::RectMinusCorners {
            m: 2,
            n: 2,
            corners: CornerSet::new(&[Corner::SE]),
        }
        .build()
        .unwrap();
        assert_eq!(a, region(&[(0, 0), (0, 1), (1, 0)]));
        let b = RegionFamily::CornerRegion {
            m: 2,
            n: 2,
            corner: Corner::NW,
        }
        .build()
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn trimmed_rectangle_removes_top_of_last_column() {
        let r = RegionFamily::TrimmedRectangle { m: 3, n: 3, r: 2 }
            .build()
            .unwrap();
        assert_eq!(r.len(), 7);
        assert!(!r.contains(Cell::new(0, 2)));
        assert!(!r.contains(Cell::new(1, 2)));
        assert!(r.contains(Cell::new(2, 2)));
        let same = RegionFamily::TrimmedRectangle { m: 3, n: 3, r: 0 }
            .build()
            .unwrap();
        assert_eq!(same, Region::rectangle(3, 3));
    }

    #[test]
    fn family_parameter_errors() {
        let bad = [
            RegionFamily::Rectangle { m: 0, n: 3 },
            RegionFamily::Frame { m: 2, n: 5 },
            RegionFamily::TrimmedRectangle { m: 3, n: 3, r: 3 },
            RegionFamily::RectMinusCorners {
                m: 2,
                n: 5,
                corners: CornerSet::new(&[Corner::NW, Corner::SE]),
            },
            RegionFamily::RectMinusCorners {
                m: 1,
                n: 5,
                corners: CornerSet::new(&[Corner::NE]),
            },
            RegionFamily::CornerRegion {
                m: 0,
                n: 1,
                corner: Corner::NW,
            },
        ];
        for family in bad {
            assert!(
                matches!(family.build(), Err(RegionError::Parameter(_))),
                "{family} should be rejected"
            );
        }
        assert!(RegionFamily::RectMinusCorners {
            m: 2,
            n: 2,
            corners: CornerSet::new(&[Corner::NE, Corner::SE]),
        }
        .build()
        .is_ok());
    }

    #[test]
    fn grid_examples() {
        assert_eq!(
            Region::parse_grid("##\n##").unwrap(),
            Region::rectangle(2, 2)
        );
        assert_eq!(Region::parse_grid("###\n#.#\n###").unwrap(), frame(3, 3));
        let l = Region::parse_grid(".#\n##").unwrap();
        assert_eq!(l, region(&[(0, 1), (1, 0), (1, 1)]));
        assert_eq!(l.to_grid(), ".#\n##\n");
        // uneven lines are padded
        assert_eq!(Region::parse_grid("#\n##\n").unwrap().to_grid(), "#.\n##\n");
        assert_eq!(Region::new().to_grid(), "");
    }

    #[test]
    fn grid_parse_error_reports_position() {
        let err = Region::parse_grid("##\n#x").unwrap_err();
        assert_eq!(
            err,
            RegionError::Parse {
                line: 2,
                column: 2,
                ch: 'x'
            }
        );
    }

    #[test]
    fn corner_set_parsing() {
        let set: CornerSet = "nw,SE".parse().unwrap();
        assert_eq!(set, CornerSet::new(&[Corner::NW, Corner::SE]));
        assert_eq!(set.to_string(), "{NW,SE}");
        assert!("NW,XX".parse::<CornerSet>().is_err());
        assert_eq!(CornerSet::all().count(), 16);
        assert_eq!(
            CornerSet::new(&[Corner::NE]).transposed(),
            CornerSet::new(&[Corner::SW])
        );
    }
}
