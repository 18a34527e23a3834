//! Spotlight tilings of grid regions.
//!
//! A spotlight is cast from a northwest corner of the untiled cells, east or
//! south, and runs until it meets a tiled cell or the region boundary.
//! [`tiling`] enumerates and validates tilings built this way, [`formulas`]
//! holds the closed-form counts for rectangles and related families, and
//! [`verify`] checks the two against each other.
//!
//! ```
//! use spotlight_core::{enumerate_tilings, formulas, Region};
//!
//! let ensemble = enumerate_tilings(&Region::rectangle(2, 3)).unwrap();
//! assert_eq!(ensemble.len(), 7);
//! assert_eq!(formulas::rect_count(2, 3), 7u32.into());
//! ```

pub mod formulas;
pub mod region;
pub mod tiling;
pub mod verify;

pub use formulas::{BiPoly, Count, FormulaError, Ratio};
pub use region::{Cell, Corner, CornerSet, Region, RegionError, RegionFamily};
pub use tiling::{
    enumerate_tilings, Axis, BranchOrder, Direction, DirectionCounts, Ensemble, Enumerator,
    Placement, Spotlight, Tiling, TilingError, TilingRecord,
};
pub use verify::{CheckReport, Failure, Sequence, VerifyError};
