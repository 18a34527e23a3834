//! JSON interchange for single tilings.
//!
//! ```json
//! {"region":"##\n##\n","spots":[{"row":0,"col":0,"dir":"H","len":2}, ...]}
//! ```
//!
//! Coordinates refer to the normalized region grid and spots are listed in
//! canonical order.

use serde::{Deserialize, Serialize};

use super::{Direction, Spotlight, Tiling, TilingError};
use crate::region::{Cell, Region};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpotRecord {
    pub row: i32,
    pub col: i32,
    pub dir: Direction,
    pub len: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingRecord {
    pub region: String,
    pub spots: Vec<SpotRecord>,
}

impl TilingRecord {
    pub fn new(region: &Region, tiling: &Tiling) -> Self {
        let (r0, c0) = region.bounds().map_or((0, 0), |b| (b.0, b.1));
        let mut spots: Vec<Spotlight> = tiling
            .spots()
            .iter()
            .map(|s| {
                Spotlight::new(
                    Cell::new(s.origin.row - r0, s.origin.col - c0),
                    s.dir,
                    s.len,
                )
            })
            .collect();
        spots.sort();
        TilingRecord {
            region: region.to_grid(),
            spots: spots
                .into_iter()
                .map(|s| SpotRecord {
                    row: s.origin.row,
                    col: s.origin.col,
                    dir: s.dir,
                    len: s.len,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tiling records always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, TilingError> {
        serde_json::from_str(text).map_err(|e| TilingError::Record(e.to_string()))
    }

    /// Rebuild and validate the region and tiling.
    pub fn to_tiling(&self) -> Result<(Region, Tiling), TilingError> {
        let region =
            Region::parse_grid(&self.region).map_err(|e| TilingError::Record(e.to_string()))?;
        let spots: Vec<Spotlight> = self
            .spots
            .iter()
            .map(|s| Spotlight::new(Cell::new(s.row, s.col), s.dir, s.len))
            .collect();
        let tiling = Tiling::from_spots(&region, &spots)?;
        Ok((region, tiling))
    }
}
