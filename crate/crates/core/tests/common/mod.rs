#![allow(dead_code)]

use spotlight_core::region::{Corner, CornerSet, Region, RegionFamily};
use spotlight_core::tiling::{
    canonical_form, check_partition, is_valid_tiling, Ensemble, Enumerator, Spotlight, Tiling,
};

/// Canonical spot lists of an ensemble, ignoring witnesses.
pub fn spot_sets(ensemble: &Ensemble) -> Vec<Vec<Spotlight>> {
    ensemble
        .tilings()
        .iter()
        .map(|t| t.spots().to_vec())
        .collect()
}

/// Partition, canonical form, dedup and witness invariants of one ensemble.
pub fn check_invariants(region: &Region, ensemble: &Ensemble) -> Result<(), String> {
    let tilings = ensemble.tilings();
    if !tilings.windows(2).all(|w| w[0].spots() < w[1].spots()) {
        return Err("tilings not strictly sorted (duplicate or out of order)".into());
    }
    let total: usize = ensemble.size_distribution().values().sum();
    if total != tilings.len() {
        return Err(format!(
            "distribution sums to {total}, expected {}",
            tilings.len()
        ));
    }
    for t in tilings {
        let spots = t.spots();
        check_partition(region, spots).map_err(|e| format!("{e}: {spots:?}"))?;
        if canonical_form(spots).as_deref() != Ok(spots) {
            return Err(format!("not canonical: {spots:?}"));
        }
        if !is_valid_tiling(region, spots) {
            return Err(format!("not reachable: {spots:?}"));
        }
        let replay = Tiling::from_witness(region, t.witness()).map_err(|e| e.to_string())?;
        if replay.spots() != spots {
            return Err(format!(
                "witness replays to {:?}, not {spots:?}",
                replay.spots()
            ));
        }
        if t.witness().len() != spots.len() {
            return Err("witness length differs from tiling size".into());
        }
    }
    Ok(())
}

/// Re-enumerate with shuffled branch orders and without component splitting
/// and compare the tiling sets.
pub fn check_order_independence(
    region: &Region,
    ensemble: &Ensemble,
    seeds: &[u64],
) -> Result<(), String> {
    let expected = spot_sets(ensemble);
    let mut variants: Vec<(String, Enumerator)> = seeds
        .iter()
        .map(|&s| (format!("seed {s}"), Enumerator::shuffled(s)))
        .collect();
    variants.push((
        "unsplit".into(),
        Enumerator {
            split_components: false,
            ..Enumerator::default()
        },
    ));
    for (label, enumerator) in variants {
        let other = enumerator.enumerate(region).map_err(|e| e.to_string())?;
        if spot_sets(&other) != expected {
            return Err(format!(
                "{label} gives {} tilings vs {}",
                other.len(),
                expected.len()
            ));
        }
        check_invariants(region, &other).map_err(|e| format!("{label}: {e}"))?;
    }
    Ok(())
}

/// Every built-in family instance with at most `max_cells` cells.
pub fn small_family_regions(max_cells: usize) -> Vec<(RegionFamily, Region)> {
    let mut families = Vec::new();
    for m in 1..=max_cells as u32 {
        for n in 1..=max_cells as u32 {
            if (m * n) as usize > 3 * max_cells {
                continue;
            }
            families.push(RegionFamily::Rectangle { m, n });
            families.push(RegionFamily::Frame { m, n });
            for corners in CornerSet::all().filter(|c| !c.is_empty()) {
                families.push(RegionFamily::RectMinusCorners { m, n, corners });
            }
            for corner in Corner::ALL {
                families.push(RegionFamily::CornerRegion { m, n, corner });
            }
            for r in 0..m {
                families.push(RegionFamily::TrimmedRectangle { m, n, r });
            }
        }
    }
    families
        .into_iter()
        .filter_map(|f| f.build().ok().map(|r| (f, r)))
        .filter(|(_, r)| !r.is_empty() && r.len() <= max_cells)
        .collect()
}
