//! Criterion benchmarks for the enumerator and the closed forms live in
//! `benches/`. This library only provides shared inputs.

use spotlight_core::{Corner, CornerSet, RegionFamily};

/// Regions used by the enumeration benchmarks, with a label each.
pub fn enumeration_inputs() -> Vec<(String, RegionFamily)> {
    vec![
        ("rect 4x4".into(), RegionFamily::Rectangle { m: 4, n: 4 }),
        ("rect 6x6".into(), RegionFamily::Rectangle { m: 6, n: 6 }),
        ("rect 7x7".into(), RegionFamily::Rectangle { m: 7, n: 7 }),
        (
            "rect 6x6 minus NW".into(),
            RegionFamily::RectMinusCorners {
                m: 6,
                n: 6,
                corners: CornerSet::new(&[Corner::NW]),
            },
        ),
        ("frame 6x6".into(), RegionFamily::Frame { m: 6, n: 6 }),
        (
            "trimmed 6x6 r=3".into(),
            RegionFamily::TrimmedRectangle { m: 6, n: 6, r: 3 },
        ),
    ]
}
