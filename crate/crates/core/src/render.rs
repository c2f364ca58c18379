//! Deterministic SVG emission: coded-tiling windows with optional difference
//! overlays, and orbit-boundary scatter plots with fitted strips.

use crate::nonexpansive::StripFit;
use crate::tileset::Configuration;
use std::collections::BTreeSet;
use std::fmt::Write;

/// Fixed fill colors for tile labels 0..10.
pub const LABEL_COLORS: [&str; 11] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6",
];

const CELL: i64 = 20;

/// Renders a coded window as an SVG grid. Cells in `diff` get a translucent
/// overlay. `checksums` (data-file digests) are embedded in a metadata
/// comment so every artifact records the data it came from.
pub fn svg_configuration(
    config: &Configuration,
    diff: Option<&BTreeSet<(i64, i64)>>,
    checksums: &[(&str, &str)],
) -> String {
    let (x0, y0, x1, y1) = config.window;
    let w = (x1 - x0 + 1) * CELL;
    let h = (y1 - y0 + 1) * CELL;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    write_checksums(&mut s, checksums);
    for ((cx, cy), t) in &config.cells {
        let px = (cx - x0) * CELL;
        let py = (y1 - cy) * CELL;
        let _ = writeln!(
            s,
            "<rect x=\"{px}\" y=\"{py}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{}\" stroke=\"#333\" stroke-width=\"0.5\"/>",
            LABEL_COLORS[*t as usize]
        );
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-size=\"9\" text-anchor=\"middle\" fill=\"#000\">{t}</text>",
            px + CELL / 2,
            py + CELL / 2 + 3
        );
    }
    if let Some(diff) = diff {
        for (cx, cy) in diff {
            if *cx < x0 || *cx > x1 || *cy < y0 || *cy > y1 {
                continue;
            }
            let px = (cx - x0) * CELL;
            let py = (y1 - cy) * CELL;
            let _ = writeln!(
                s,
                "<rect x=\"{px}\" y=\"{py}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"#000\" fill-opacity=\"0.35\"/>"
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Renders an integer point set as a scatter plot, optionally annotated with
/// a fitted strip direction.
pub fn svg_scatter(
    points: &BTreeSet<(i64, i64)>,
    window: (i64, i64, i64, i64),
    fit: Option<&StripFit>,
    checksums: &[(&str, &str)],
) -> String {
    let (x0, y0, x1, y1) = window;
    const UNIT: i64 = 8;
    let w = (x1 - x0 + 1) * UNIT;
    let h = (y1 - y0 + 1) * UNIT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    write_checksums(&mut s, checksums);
    if let Some(fit) = fit {
        let _ = writeln!(
            s,
            "<!-- strip-fit direction: ({}, {}); squared width: {} -->",
            fit.direction.0, fit.direction.1, fit.width_sq
        );
    }
    let _ = writeln!(
        s,
        "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"#fff\"/>"
    );
    for (px, py) in points {
        let cx = (px - x0) * UNIT + UNIT / 2;
        let cy = (y1 - py) * UNIT + UNIT / 2;
        let _ = writeln!(s, "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"2.5\" fill=\"#1f3b73\"/>");
    }
    s.push_str("</svg>\n");
    s
}

fn write_checksums(s: &mut String, checksums: &[(&str, &str)]) {
    for (name, digest) in checksums {
        let _ = writeln!(s, "<!-- data {name} sha256 {digest} -->");
    }
}
