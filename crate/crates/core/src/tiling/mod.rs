//! Spotlight tilings.
//!
//! A spotlight is cast from a northwest corner of the still-untiled cells and
//! runs east or south until it leaves the region or meets an earlier tile. A
//! tiling is the final picture, so two placement sequences producing the same
//! set of tiles are the same tiling. Length-1 tiles carry no visible direction
//! and are always stored as [`Direction::Undirected`].

mod enumerate;
mod export;

pub use enumerate::{enumerate_tilings, BranchOrder, Ensemble, Enumerator};
pub use export::{SpotRecord, TilingRecord};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::region::{Cell, Region};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error("{0} is not a northwest corner of the untiled region")]
    NotNwCorner(Cell),
    #[error("spotlights overlap at {0}")]
    Overlap(Cell),
    #[error("a spotlight covers {0}, which is outside the region")]
    OutsideRegion(Cell),
    #[error("cell {0} is not covered by any spotlight")]
    Uncovered(Cell),
    #[error("spotlight at {0} is undirected but longer than one cell")]
    LongUndirected(Cell),
    #[error("the spotlights do not form a reachable tiling of the region")]
    Unreachable,
    #[error("region has {cells} cells; enumeration supports at most {max}")]
    RegionTooLarge { cells: usize, max: usize },
    #[error("operation requires a rectangular region")]
    NotRectangle,
    #[error("malformed tiling record: {0}")]
    Record(String),
}

/// The direction a spotlight is cast in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Horizontal,
    Vertical,
}

impl Axis {
    pub const BOTH: [Axis; 2] = [Axis::Horizontal, Axis::Vertical];

    pub fn step(self, cell: Cell) -> Cell {
        match self {
            Axis::Horizontal => cell.east(),
            Axis::Vertical => cell.south(),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::Horizontal => "H",
            Axis::Vertical => "V",
        })
    }
}

/// Visible orientation of a placed spotlight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "H")]
    Horizontal,
    #[serde(rename = "V")]
    Vertical,
    /// Only for length-1 tiles.
    #[serde(rename = "U")]
    Undirected,
}

impl From<Axis> for Direction {
    fn from(axis: Axis) -> Self {
        match axis {
            Axis::Horizontal => Direction::Horizontal,
            Axis::Vertical => Direction::Vertical,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Horizontal => "H",
            Direction::Vertical => "V",
            Direction::Undirected => "U",
        })
    }
}

/// A placed tile: `len` cells starting at `origin`, running east (`H`) or
/// south (`V`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spotlight {
    pub origin: Cell,
    pub dir: Direction,
    pub len: u32,
}

impl Spotlight {
    pub fn new(origin: Cell, dir: Direction, len: u32) -> Self {
        Spotlight { origin, dir, len }
    }

    pub fn single(origin: Cell) -> Self {
        Spotlight::new(origin, Direction::Undirected, 1)
    }

    /// Same tile with the length-1 orientation dropped.
    pub fn canonical(self) -> Self {
        if self.len == 1 {
            Spotlight::single(self.origin)
        } else {
            self
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> {
        let Spotlight { origin, dir, len } = *self;
        (0..len as i32).map(move |k| match dir {
            Direction::Vertical => Cell::new(origin.row + k, origin.col),
            _ => Cell::new(origin.row, origin.col + k),
        })
    }

    pub fn last_cell(&self) -> Cell {
        self.cells().last().unwrap_or(self.origin)
    }
}

impl fmt::Display for Spotlight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.dir, self.len, self.origin)
    }
}

/// One step of a placement sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub corner: Cell,
    pub axis: Axis,
}

impl Placement {
    pub fn new(corner: Cell, axis: Axis) -> Self {
        Placement { corner, axis }
    }
}

/// Cast a maximal spotlight from `corner` over the `untiled` cells.
pub fn cast_spotlight(
    untiled: &Region,
    corner: Cell,
    axis: Axis,
) -> Result<Spotlight, TilingError> {
    if !untiled.is_nw_corner(corner) {
        return Err(TilingError::NotNwCorner(corner));
    }
    Ok(cast_unchecked(untiled, corner, axis))
}

fn cast_unchecked(untiled: &Region, corner: Cell, axis: Axis) -> Spotlight {
    let mut len = 1;
    let mut next = axis.step(corner);
    while untiled.contains(next) {
        len += 1;
        next = axis.step(next);
    }
    Spotlight::new(corner, axis.into(), len).canonical()
}

/// Canonical form: length-1 tiles undirected, sorted by origin (row-major).
pub fn canonical_form(spots: &[Spotlight]) -> Result<Vec<Spotlight>, TilingError> {
    let mut seen = BTreeSet::new();
    for spot in spots {
        if spot.dir == Direction::Undirected && spot.len != 1 {
            return Err(TilingError::LongUndirected(spot.origin));
        }
        for cell in spot.cells() {
            if !seen.insert(cell) {
                return Err(TilingError::Overlap(cell));
            }
        }
    }
    let mut out: Vec<Spotlight> = spots.iter().map(|s| s.canonical()).collect();
    out.sort();
    Ok(out)
}

/// Check that `spots` exactly partition `region`.
pub fn check_partition(region: &Region, spots: &[Spotlight]) -> Result<(), TilingError> {
    let mut covered = BTreeSet::new();
    for spot in spots {
        if spot.len == 0 {
            return Err(TilingError::Record(format!(
                "zero-length spotlight at {}",
                spot.origin
            )));
        }
        if spot.dir == Direction::Undirected && spot.len != 1 {
            return Err(TilingError::LongUndirected(spot.origin));
        }
        for cell in spot.cells() {
            if !region.contains(cell) {
                return Err(TilingError::OutsideRegion(cell));
            }
            if !covered.insert(cell) {
                return Err(TilingError::Overlap(cell));
            }
        }
    }
    match region.cells().find(|c| !covered.contains(c)) {
        Some(cell) => Err(TilingError::Uncovered(cell)),
        None => Ok(()),
    }
}

/// Axes along which casting from `spot.origin` over `untiled` reproduces
/// `spot` exactly. When both casts give the same isolated cell only
/// `Horizontal` is reported.
fn matching_axes(untiled: &Region, spot: &Spotlight) -> Vec<Axis> {
    if !untiled.is_nw_corner(spot.origin) {
        return Vec::new();
    }
    let candidates: &[Axis] = match spot.dir {
        Direction::Horizontal => &[Axis::Horizontal],
        Direction::Vertical => &[Axis::Vertical],
        Direction::Undirected => &Axis::BOTH,
    };
    let mut axes: Vec<Axis> = candidates
        .iter()
        .copied()
        .filter(|&axis| cast_unchecked(untiled, spot.origin, axis).len == spot.len)
        .collect();
    if axes.len() == 2 {
        axes.truncate(1);
    }
    axes
}

/// Find one legal placement sequence realizing `spots` on `region`.
///
/// A tile that is castable stays castable after other tiles are placed: its
/// own cells stay untiled, and the cells north and west of its origin and past
/// its far end can only become tiled. So placing any currently castable tile
/// never blocks a solution, and a greedy scan in row-major order is complete.
pub fn find_witness(region: &Region, spots: &[Spotlight]) -> Option<Vec<Placement>> {
    check_partition(region, spots).ok()?;
    let mut untiled = region.clone();
    let mut remaining: Vec<Spotlight> = spots.to_vec();
    remaining.sort();
    let mut witness = Vec::with_capacity(spots.len());
    while !remaining.is_empty() {
        let (pos, axis) = remaining
            .iter()
            .enumerate()
            .find_map(|(i, s)| matching_axes(&untiled, s).first().map(|&a| (i, a)))?;
        let spot = remaining.remove(pos);
        for cell in spot.cells() {
            untiled.remove(cell);
        }
        witness.push(Placement::new(spot.origin, axis));
    }
    Some(witness)
}

/// True iff `spots` partition `region` and some legal placement order
/// produces them.
pub fn is_valid_tiling(region: &Region, spots: &[Spotlight]) -> bool {
    find_witness(region, spots).is_some()
}

/// Every legal placement sequence producing `spots`. Exponential in the number
/// of independent tiles; intended for small instances.
pub fn all_witnesses(region: &Region, spots: &[Spotlight]) -> Vec<Vec<Placement>> {
    fn walk(
        untiled: &mut Region,
        remaining: &mut Vec<Spotlight>,
        prefix: &mut Vec<Placement>,
        out: &mut Vec<Vec<Placement>>,
    ) {
        if remaining.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..remaining.len() {
            let spot = remaining[i];
            for axis in matching_axes(untiled, &spot) {
                remaining.remove(i);
                spot.cells().for_each(|c| {
                    untiled.remove(c);
                });
                prefix.push(Placement::new(spot.origin, axis));
                walk(untiled, remaining, prefix, out);
                prefix.pop();
                spot.cells().for_each(|c| {
                    untiled.insert(c);
                });
                remaining.insert(i, spot);
            }
        }
    }

    let mut out = Vec::new();
    if check_partition(region, spots).is_err() {
        return out;
    }
    let mut untiled = region.clone();
    let mut remaining = spots.to_vec();
    remaining.sort();
    walk(&mut untiled, &mut remaining, &mut Vec::new(), &mut out);
    out
}

/// Horizontal, vertical and undirected tile counts of a tiling.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct DirectionCounts {
    pub h: usize,
    pub v: usize,
    pub u: usize,
}

/// A tiling in canonical form plus one placement sequence that produces it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling {
    spots: Vec<Spotlight>,
    witness: Vec<Placement>,
}

impl Tiling {
    /// Both arguments must already be consistent; callers outside the
    /// enumerator go through [`Tiling::from_spots`] or [`Tiling::from_witness`].
    pub(crate) fn from_parts(spots: Vec<Spotlight>, witness: Vec<Placement>) -> Self {
        debug_assert!(spots.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(spots.len(), witness.len());
        Tiling { spots, witness }
    }

    /// Validate `spots` against `region` and attach a witness.
    pub fn from_spots(region: &Region, spots: &[Spotlight]) -> Result<Self, TilingError> {
        let spots = canonical_form(spots)?;
        check_partition(region, &spots)?;
        let witness = find_witness(region, &spots).ok_or(TilingError::Unreachable)?;
        Ok(Tiling { spots, witness })
    }

    /// Replay a placement sequence on `region`. The sequence must cover the
    /// whole region.
    pub fn from_witness(region: &Region, witness: &[Placement]) -> Result<Self, TilingError> {
        let mut untiled = region.clone();
        let mut spots = Vec::with_capacity(witness.len());
        for p in witness {
            let spot = cast_spotlight(&untiled, p.corner, p.axis)?;
            for cell in spot.cells() {
                untiled.remove(cell);
            }
            spots.push(spot);
        }
        if let Some(cell) = untiled.first() {
            return Err(TilingError::Uncovered(cell));
        }
        spots.sort();
        Ok(Tiling {
            spots,
            witness: witness.to_vec(),
        })
    }

    pub fn spots(&self) -> &[Spotlight] {
        &self.spots
    }

    pub fn witness(&self) -> &[Placement] {
        &self.witness
    }

    /// Number of spotlights.
    pub fn size(&self) -> usize {
        self.spots.len()
    }

    /// The covered cells.
    pub fn region(&self) -> Region {
        self.spots.iter().flat_map(|s| s.cells()).collect()
    }

    /// Direction counts attributed through the witness: each tile counts in
    /// the direction it was cast, except a tile whose east and south
    /// neighbors were both unavailable at placement time, which counts as
    /// undirected.
    pub fn direction_counts(&self) -> DirectionCounts {
        direction_counts_for(&self.region(), &self.witness)
    }
}

/// [`Tiling::direction_counts`] for an arbitrary witness of a tiling of
/// `region`.
pub fn direction_counts_for(region: &Region, witness: &[Placement]) -> DirectionCounts {
    let mut untiled = region.clone();
    let mut counts = DirectionCounts::default();
    for p in witness {
        let east_open = untiled.contains(p.corner.east());
        let south_open = untiled.contains(p.corner.south());
        match (east_open || south_open, p.axis) {
            (false, _) => counts.u += 1,
            (true, Axis::Horizontal) => counts.h += 1,
            (true, Axis::Vertical) => counts.v += 1,
        }
        for cell in cast_unchecked(&untiled, p.corner, p.axis).cells() {
            untiled.remove(cell);
        }
    }
    counts
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.spots.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::RegionFamily;

    fn c(row: i32, col: i32) -> Cell {
        Cell::new(row, col)
    }

    fn h(row: i32, col: i32, len: u32) -> Spotlight {
        Spotlight::new(c(row, col), Direction::Horizontal, len)
    }

    fn v(row: i32, col: i32, len: u32) -> Spotlight {
        Spotlight::new(c(row, col), Direction::Vertical, len)
    }

    fn u(row: i32, col: i32) -> Spotlight {
        Spotlight::single(c(row, col))
    }

    fn u_shape() -> Region {
        let mut r = RegionFamily::Frame { m: 3, n: 3 }.build().unwrap();
        for col in 0..3 {
            r.remove(c(0, col));
        }
        r
    }

    #[test]
    fn cast_examples() {
        let rect = Region::rectangle(3, 4);
        assert_eq!(
            cast_spotlight(&rect, c(0, 0), Axis::Horizontal).unwrap(),
            h(0, 0, 4)
        );
        let one = Region::rectangle(1, 1);
        assert_eq!(
            cast_spotlight(&one, c(0, 0), Axis::Horizontal).unwrap(),
            u(0, 0)
        );
        assert_eq!(
            cast_spotlight(&u_shape(), c(1, 2), Axis::Vertical).unwrap(),
            v(1, 2, 2)
        );
    }

    #[test]
    fn cast_rejects_non_corner() {
        let rect = Region::rectangle(2, 2);
        assert_eq!(
            cast_spotlight(&rect, c(1, 1), Axis::Horizontal),
            Err(TilingError::NotNwCorner(c(1, 1)))
        );
        assert_eq!(
            cast_spotlight(&rect, c(5, 5), Axis::Vertical),
            Err(TilingError::NotNwCorner(c(5, 5)))
        );
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(canonical_form(&[v(0, 0, 1)]).unwrap(), vec![u(0, 0)]);
        let already = vec![h(0, 0, 2), u(1, 0)];
        assert_eq!(canonical_form(&already).unwrap(), already);
        assert_eq!(
            canonical_form(&[v(0, 1, 2), h(1, 0, 1)]).unwrap(),
            vec![v(0, 1, 2), u(1, 0)]
        );
        assert_eq!(
            canonical_form(&[h(0, 0, 2), v(0, 1, 2)]),
            Err(TilingError::Overlap(c(0, 1)))
        );
    }

    #[test]
    fn validity_examples() {
        let square = Region::rectangle(2, 2);
        assert!(!is_valid_tiling(
            &square,
            &[u(0, 0), u(0, 1), u(1, 0), u(1, 1)]
        ));
        assert!(is_valid_tiling(
            &Region::rectangle(1, 2),
            &[u(0, 0), u(0, 1)]
        ));
        // partition failures
        assert!(!is_valid_tiling(&square, &[h(0, 0, 2)]));
        assert!(!is_valid_tiling(&square, &[h(0, 0, 2), h(1, 0, 3)]));
        // a horizontal tile that stops short of the boundary is not maximal
        assert!(!is_valid_tiling(
            &Region::rectangle(1, 3),
            &[h(0, 0, 2), u(0, 2)]
        ));
    }

    #[test]
    fn seven_tilings_of_two_by_three_are_valid() {
        let rect = Region::rectangle(2, 3);
        let tilings = [
            vec![h(0, 0, 3), h(1, 0, 3)],
            vec![h(0, 0, 3), v(1, 0, 1), h(1, 1, 2)],
            vec![h(0, 0, 3), u(1, 0), u(1, 1), u(1, 2)],
            vec![v(0, 0, 2), h(0, 1, 2), h(1, 1, 2)],
            vec![v(0, 0, 2), h(0, 1, 2), u(1, 1), u(1, 2)],
            vec![v(0, 0, 2), v(0, 1, 2), u(0, 2), u(1, 2)],
            vec![v(0, 0, 2), v(0, 1, 2), v(0, 2, 2)],
        ];
        for spots in &tilings {
            assert!(is_valid_tiling(&rect, spots), "{spots:?}");
        }
    }

    #[test]
    fn witness_replay_round_trip() {
        let rect = Region::rectangle(2, 3);
        let witness = vec![
            Placement::new(c(0, 0), Axis::Vertical),
            Placement::new(c(0, 1), Axis::Horizontal),
            Placement::new(c(1, 1), Axis::Vertical),
            Placement::new(c(1, 2), Axis::Horizontal),
        ];
        let t = Tiling::from_witness(&rect, &witness).unwrap();
        assert_eq!(t.spots(), &[v(0, 0, 2), h(0, 1, 2), u(1, 1), u(1, 2)]);
        let again = Tiling::from_spots(&rect, t.spots()).unwrap();
        assert_eq!(again.spots(), t.spots());
        assert_eq!(
            Tiling::from_witness(&rect, &witness[..2]),
            Err(TilingError::Uncovered(c(1, 1)))
        );
    }

    #[test]
    fn direction_counts_examples() {
        let row = Region::rectangle(1, 3);
        let t = Tiling::from_witness(
            &row,
            &[
                Placement::new(c(0, 0), Axis::Vertical),
                Placement::new(c(0, 1), Axis::Horizontal),
            ],
        )
        .unwrap();
        assert_eq!(t.direction_counts(), DirectionCounts { h: 1, v: 1, u: 0 });

        let rect = Region::rectangle(3, 4);
        let rows: Vec<Placement> = (0..3)
            .map(|r| Placement::new(c(r, 0), Axis::Horizontal))
            .collect();
        let t = Tiling::from_witness(&rect, &rows).unwrap();
        assert_eq!(t.direction_counts(), DirectionCounts { h: 3, v: 0, u: 0 });
    }

    #[test]
    fn all_witnesses_of_disconnected_singles() {
        // two independent cells may be placed in either order
        let region: Region = [c(0, 0), c(0, 2)].into_iter().collect();
        let ws = all_witnesses(&region, &[u(0, 0), u(0, 2)]);
        assert_eq!(ws.len(), 2);
        assert!(all_witnesses(
            &Region::rectangle(2, 2),
            &[u(0, 0), u(0, 1), u(1, 0), u(1, 1)]
        )
        .is_empty());
    }
}
