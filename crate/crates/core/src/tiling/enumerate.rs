use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Axis, Placement, Spotlight, Tiling, TilingError};
use crate::formulas::BiPoly;
use crate::region::{Cell, Region};

type Mask = u128;
const MAX_CELLS: usize = Mask::BITS as usize;

/// Order in which the enumerator explores (corner, axis) branches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BranchOrder {
    /// Corners row-major, horizontal before vertical.
    #[default]
    RowMajor,
    /// Branches shuffled at every state by a generator seeded with the value.
    Shuffled(u64),
}

/// Exhaustive spotlight-tiling enumerator.
///
/// Every northwest corner of the untiled cells is tried in both directions,
/// and the remainder is solved recursively. Results are memoized on the
/// untiled cell set, which fully determines what can still happen, and
/// duplicates are merged by canonical form. The first witness reached for a
/// tiling is the one kept.
#[derive(Clone, Copy, Debug)]
pub struct Enumerator {
    pub order: BranchOrder,
    /// Solve connected components of the remainder independently.
    pub split_components: bool,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            order: BranchOrder::RowMajor,
            split_components: true,
        }
    }
}

/// All distinct tilings of `region`, in canonical order.
pub fn enumerate_tilings(region: &Region) -> Result<Ensemble, TilingError> {
    Enumerator::default().enumerate(region)
}

impl Enumerator {
    pub fn shuffled(seed: u64) -> Self {
        Enumerator {
            order: BranchOrder::Shuffled(seed),
            ..Enumerator::default()
        }
    }

    pub fn enumerate(&self, region: &Region) -> Result<Ensemble, TilingError> {
        if region.len() > MAX_CELLS {
            return Err(TilingError::RegionTooLarge {
                cells: region.len(),
                max: MAX_CELLS,
            });
        }
        let grid = Grid::new(region);
        let mut solver = Solver {
            grid: &grid,
            memo: HashMap::new(),
            rng: match self.order {
                BranchOrder::RowMajor => None,
                BranchOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            },
            split: self.split_components,
        };
        let full = grid.full_mask();
        let partials = solver.solve(full);
        let mut tilings: Vec<Tiling> = partials
            .iter()
            .map(|p| Tiling::from_parts(p.spots.clone(), p.witness.clone()))
            .collect();
        tilings.sort_by(|a, b| a.spots().cmp(b.spots()));
        Ok(Ensemble::new(region.clone(), tilings))
    }
}

/// Row-major indexing of a region's cells with precomputed neighbors.
struct Grid {
    cells: Vec<Cell>,
    north: Vec<Option<usize>>,
    west: Vec<Option<usize>>,
    east: Vec<Option<usize>>,
    south: Vec<Option<usize>>,
}

impl Grid {
    fn new(region: &Region) -> Self {
        let cells: Vec<Cell> = region.cells().collect();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let lookup = |f: fn(Cell) -> Cell| -> Vec<Option<usize>> {
            cells.iter().map(|&c| index.get(&f(c)).copied()).collect()
        };
        Grid {
            north: lookup(Cell::north),
            west: lookup(Cell::west),
            east: lookup(Cell::east),
            south: lookup(Cell::south),
            cells,
        }
    }

    fn full_mask(&self) -> Mask {
        if self.cells.len() == MAX_CELLS {
            Mask::MAX
        } else {
            (1 << self.cells.len()) - 1
        }
    }

    fn has(mask: Mask, idx: Option<usize>) -> bool {
        idx.is_some_and(|i| mask >> i & 1 == 1)
    }

    fn is_nw_corner(&self, mask: Mask, i: usize) -> bool {
        !Self::has(mask, self.north[i]) && !Self::has(mask, self.west[i])
    }

    fn cast(&self, mask: Mask, i: usize, axis: Axis) -> (Mask, u32) {
        let step = match axis {
            Axis::Horizontal => &self.east,
            Axis::Vertical => &self.south,
        };
        let mut bits: Mask = 1 << i;
        let mut len = 1;
        let mut cur = i;
        while let Some(next) = step[cur].filter(|&n| mask >> n & 1 == 1) {
            bits |= 1 << next;
            len += 1;
            cur = next;
        }
        (bits, len)
    }

    /// Connected components of `mask`, ordered by lowest cell index.
    fn components(&self, mask: Mask) -> Vec<Mask> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp: Mask = 1 << start;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for n in [self.north[i], self.west[i], self.east[i], self.south[i]]
                    .into_iter()
                    .flatten()
                {
                    if mask >> n & 1 == 1 && comp >> n & 1 == 0 {
                        comp |= 1 << n;
                        stack.push(n);
                    }
                }
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
struct Partial {
    spots: Vec<Spotlight>,
    witness: Vec<Placement>,
}

struct Solver<'g> {
    grid: &'g Grid,
    memo: HashMap<Mask, Rc<Vec<Partial>>>,
    rng: Option<ChaCha8Rng>,
    split: bool,
}

impl Solver<'_> {
    fn solve(&mut self, mask: Mask) -> Rc<Vec<Partial>> {
        if let Some(hit) = self.memo.get(&mask) {
            return Rc::clone(hit);
        }
        let result = if mask == 0 {
            vec![Partial::default()]
        } else {
            let comps = if self.split {
                self.grid.components(mask)
            } else {
                vec![mask]
            };
            if comps.len() > 1 {
                self.product(&comps)
            } else {
                self.expand(mask)
            }
        };
        let result = Rc::new(result);
        self.memo.insert(mask, Rc::clone(&result));
        result
    }

    fn expand(&mut self, mask: Mask) -> Vec<Partial> {
        let grid = self.grid;
        let mut branches = Vec::new();
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if !grid.is_nw_corner(mask, i) {
                continue;
            }
            let (h_bits, h_len) = grid.cast(mask, i, Axis::Horizontal);
            let (v_bits, v_len) = grid.cast(mask, i, Axis::Vertical);
            branches.push((i, Axis::Horizontal, h_bits, h_len));
            // an isolated cell gives the same tile either way
            if !(h_len == 1 && v_len == 1) {
                branches.push((i, Axis::Vertical, v_bits, v_len));
            }
        }
        if let Some(rng) = self.rng.as_mut() {
            branches.shuffle(rng);
        }

        let mut found: BTreeMap<Vec<Spotlight>, Vec<Placement>> = BTreeMap::new();
        for (i, axis, bits, len) in branches {
            let corner = grid.cells[i];
            let spot = Spotlight::new(corner, axis.into(), len).canonical();
            let placement = Placement::new(corner, axis);
            for rest in self.solve(mask & !bits).iter() {
                let mut spots = rest.spots.clone();
                let at = spots.partition_point(|s| *s < spot);
                spots.insert(at, spot);
                found.entry(spots).or_insert_with(|| {
                    let mut witness = Vec::with_capacity(rest.witness.len() + 1);
                    witness.push(placement);
                    witness.extend_from_slice(&rest.witness);
                    witness
                });
            }
        }
        found
            .into_iter()
            .map(|(spots, witness)| Partial { spots, witness })
            .collect()
    }

    /// Independent components combine freely; witnesses concatenate in
    /// component order.
    fn product(&mut self, comps: &[Mask]) -> Vec<Partial> {
        let mut acc = vec![Partial::default()];
        for &comp in comps {
            let part = self.solve(comp);
            let mut next = Vec::with_capacity(acc.len() * part.len());
            for a in &acc {
                for b in part.iter() {
                    let mut spots = a.spots.clone();
                    spots.extend_from_slice(&b.spots);
                    spots.sort();
                    let mut witness = a.witness.clone();
                    witness.extend_from_slice(&b.witness);
                    next.push(Partial { spots, witness });
                }
            }
            acc = next;
        }
        acc.sort_by(|a, b| a.spots.cmp(&b.spots));
        acc
    }
}

/// The distinct tilings of a region with size statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ensemble {
    region: Region,
    tilings: Vec<Tiling>,
    distribution: BTreeMap<usize, usize>,
}

impl Ensemble {
    fn new(region: Region, tilings: Vec<Tiling>) -> Self {
        let mut distribution = BTreeMap::new();
        for t in &tilings {
            *distribution.entry(t.size()).or_insert(0) += 1;
        }
        Ensemble {
            region,
            tilings,
            distribution,
        }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    /// Tilings sorted by canonical form.
    pub fn tilings(&self) -> &[Tiling] {
        &self.tilings
    }

    pub fn len(&self) -> usize {
        self.tilings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tilings.is_empty()
    }

    /// Number of tilings of each size.
    pub fn size_distribution(&self) -> &BTreeMap<usize, usize> {
        &self.distribution
    }

    pub fn min_size(&self) -> Option<usize> {
        self.distribution.keys().next().copied()
    }

    pub fn max_size(&self) -> Option<usize> {
        self.distribution.keys().next_back().copied()
    }

    /// Tilings using the largest number of spotlights.
    pub fn maximal(&self) -> impl Iterator<Item = &Tiling> {
        let max = self.max_size();
        self.tilings.iter().filter(move |t| Some(t.size()) == max)
    }

    pub fn contains(&self, spots: &[Spotlight]) -> bool {
        self.tilings
            .binary_search_by(|t| t.spots().cmp(spots))
            .is_ok()
    }

    /// Exact mean tiling size.
    pub fn mean_size(&self) -> Option<BigRational> {
        if self.tilings.is_empty() {
            return None;
        }
        let total: usize = self.tilings.iter().map(Tiling::size).sum();
        Some(BigRational::new(
            BigInt::from(total),
            BigInt::from(self.len()),
        ))
    }

    /// Sum of `H^h V^v` over the non-maximal tilings. Only defined for
    /// rectangles.
    pub fn hv_polynomial(&self) -> Result<BiPoly, TilingError> {
        if !self.region.is_rectangle() {
            return Err(TilingError::NotRectangle);
        }
        let max = self.max_size();
        let mut poly = BiPoly::zero();
        for t in self.tilings.iter().filter(|t| Some(t.size()) != max) {
            let counts = t.direction_counts();
            poly.add_term(counts.h as u32, counts.v as u32, 1u32.into());
        }
        Ok(poly)
    }
}
