//! Text and SVG drawings of tilings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use spotlight_core::{Cell, Direction, Region, Tiling};

/// One character per cell of the bounding box: `H`, `V` or `o` at a tile's
/// origin, `>` or `v` along it, `.` outside the region. Rows are joined by
/// `\n` with no trailing newline.
pub fn render_ascii(tiling: &Tiling) -> String {
    let region = tiling.region();
    let Some((r0, c0, r1, c1)) = region.bounds() else {
        return String::new();
    };
    let mut glyphs: BTreeMap<Cell, char> = BTreeMap::new();
    for spot in tiling.spots() {
        let (head, tail) = match spot.dir {
            Direction::Horizontal => ('H', '>'),
            Direction::Vertical => ('V', 'v'),
            Direction::Undirected => ('o', 'o'),
        };
        for (i, cell) in spot.cells().enumerate() {
            glyphs.insert(cell, if i == 0 { head } else { tail });
        }
    }
    (r0..=r1)
        .map(|r| {
            (c0..=c1)
                .map(|c| glyphs.get(&Cell::new(r, c)).copied().unwrap_or('.'))
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

const UNIT: i32 = 32;
const INSET: i32 = 4;
const PAD: i32 = 8;

fn draw_tiling(out: &mut String, tiling: &Tiling, region: &Region, dx: i32, dy: i32) {
    let Some((r0, c0, _, _)) = region.bounds() else {
        return;
    };
    let x = |c: i32| dx + (c - c0) * UNIT;
    let y = |r: i32| dy + (r - r0) * UNIT;
    for cell in region.cells() {
        let _ = writeln!(
            out,
            r##"  <rect x="{}" y="{}" width="{UNIT}" height="{UNIT}" fill="#f4f4f4" stroke="#bbbbbb"/>"##,
            x(cell.col),
            y(cell.row)
        );
    }
    for spot in tiling.spots() {
        let (rows, cols) = match spot.dir {
            Direction::Vertical => (spot.len as i32, 1),
            _ => (1, spot.len as i32),
        };
        let (left, top) = (x(spot.origin.col) + INSET, y(spot.origin.row) + INSET);
        let (w, h) = (cols * UNIT - 2 * INSET, rows * UNIT - 2 * INSET);
        let _ = writeln!(
            out,
            r##"  <rect x="{left}" y="{top}" width="{w}" height="{h}" rx="8" fill="#ffe08a" stroke="#8a6d00" stroke-width="2"/>"##
        );
        let (cx, cy) = (left + w / 2, top + h / 2);
        match spot.dir {
            Direction::Undirected => {
                let _ = writeln!(
                    out,
                    r##"  <circle cx="{cx}" cy="{cy}" r="4" fill="#8a6d00"/>"##
                );
            }
            Direction::Horizontal => {
                let tip = left + w - 6;
                let _ = writeln!(
                    out,
                    r##"  <path d="M{} {cy} H{tip} M{} {} L{tip} {cy} L{} {}" fill="none" stroke="#8a6d00" stroke-width="2"/>"##,
                    left + 6,
                    tip - 6,
                    cy - 5,
                    tip - 6,
                    cy + 5
                );
            }
            Direction::Vertical => {
                let tip = top + h - 6;
                let _ = writeln!(
                    out,
                    r##"  <path d="M{cx} {} V{tip} M{} {} L{cx} {tip} L{} {}" fill="none" stroke="#8a6d00" stroke-width="2"/>"##,
                    top + 6,
                    cx - 5,
                    tip - 6,
                    cx + 5,
                    tip - 6
                );
            }
        }
    }
}

/// Standalone SVG of one tiling of `region`.
pub fn render_svg(tiling: &Tiling, region: &Region) -> String {
    render_svg_gallery(std::slice::from_ref(tiling), region, 1)
}

/// Several tilings of the same region in rows of `per_row`.
pub fn render_svg_gallery(tilings: &[Tiling], region: &Region, per_row: usize) -> String {
    let (rows, cols) = region.dimensions();
    let (cell_w, cell_h) = (cols as i32 * UNIT + PAD, rows as i32 * UNIT + PAD);
    let per_row = per_row.max(1);
    let grid_cols = tilings.len().clamp(1, per_row) as i32;
    let grid_rows = tilings.len().div_ceil(per_row).max(1) as i32;
    let (width, height) = (grid_cols * cell_w + PAD, grid_rows * cell_h + PAD);
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    );
    for (i, tiling) in tilings.iter().enumerate() {
        let (gr, gc) = ((i / per_row) as i32, (i % per_row) as i32);
        draw_tiling(
            &mut out,
            tiling,
            region,
            PAD + gc * cell_w,
            PAD + gr * cell_h,
        );
    }
    out.push_str("</svg>\n");
    out
}
