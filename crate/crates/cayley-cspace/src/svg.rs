// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Deterministic SVG emission: a drawing of one realization (edges solid,
//! base non-edge dashed) and a number-line diagram of an interval set with
//! endpoint provenance labels.

use crate::cspace::CspaceResult;
use crate::linkage::Linkage;
use crate::realize::Realization;
use std::fmt::Write;

const CANVAS: f64 = 480.0;
const MARGIN: f64 = 40.0;

fn fmt(x: f64) -> String {
    // Shortest round-trip decimal, fixed across runs.
    format!("{x}")
}

/// Renders one realization of the linkage: vertices as labelled circles,
/// edges as solid segments, and the base non-edge dashed.
pub fn render_realization(l: &Linkage, r: &Realization) -> String {
    let xs: Vec<f64> = (0..r.len()).map(|v| r.point(v).x).collect();
    let ys: Vec<f64> = (0..r.len()).map(|v| r.point(v).y).collect();
    let (min_x, max_x) = bounds(&xs);
    let (min_y, max_y) = bounds(&ys);
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let scale = (CANVAS - 2.0 * MARGIN) / span;
    let sx = |x: f64| MARGIN + (x - min_x) * scale;
    // Flip y so mathematical "up" points up on screen.
    let sy = |y: f64| CANVAS - MARGIN - (y - min_y) * scale;

    let mut out = String::new();
    header(&mut out);
    let (b0, b1) = l.base_nonedge();
    writeln!(
        out,
        r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888" stroke-width="1.5" stroke-dasharray="6 4"/>"##,
        fmt(sx(r.point(b0).x)),
        fmt(sy(r.point(b0).y)),
        fmt(sx(r.point(b1).x)),
        fmt(sy(r.point(b1).y)),
    )
    .unwrap();
    for &(u, v) in l.graph().edges() {
        writeln!(
            out,
            r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#1a1a1a" stroke-width="2"/>"##,
            fmt(sx(r.point(u).x)),
            fmt(sy(r.point(u).y)),
            fmt(sx(r.point(v).x)),
            fmt(sy(r.point(v).y)),
        )
        .unwrap();
    }
    for i in 0..r.len() {
        let p = r.point(i);
        writeln!(
            out,
            r##"  <circle cx="{}" cy="{}" r="4" fill="#c0392b"/>"##,
            fmt(sx(p.x)),
            fmt(sy(p.y)),
        )
        .unwrap();
        writeln!(
            out,
            r##"  <text x="{}" y="{}" font-size="12" font-family="monospace">v{}</text>"##,
            fmt(sx(p.x) + 6.0),
            fmt(sy(p.y) - 6.0),
            i + 1,
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Renders the configuration space as segments on a number line, with each
/// endpoint labelled by its value and, when analytic, the extreme step and
/// variant that produced it.
pub fn render_interval_diagram(r: &CspaceResult) -> String {
    let hi = r
        .intervals
        .intervals()
        .iter()
        .map(|iv| iv.hi)
        .fold(1.0_f64, f64::max);
    let scale = (CANVAS - 2.0 * MARGIN) / (hi * 1.05);
    let sx = |x: f64| MARGIN + x * scale;
    let y = CANVAS / 2.0;

    let mut out = String::new();
    header(&mut out);
    writeln!(
        out,
        r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888" stroke-width="1"/>"##,
        fmt(MARGIN),
        fmt(y),
        fmt(CANVAS - MARGIN),
        fmt(y),
    )
    .unwrap();
    for iv in r.intervals.intervals() {
        writeln!(
            out,
            r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#2471a3" stroke-width="6" stroke-linecap="round"/>"##,
            fmt(sx(iv.lo)),
            fmt(y),
            fmt(sx(iv.hi)),
            fmt(y),
        )
        .unwrap();
        for (x, prov) in [(iv.lo, &iv.lo_provenance), (iv.hi, &iv.hi_provenance)] {
            let label = match prov {
                Some(p) if !p.oracle_fallback => {
                    format!("{} (step {}, variant {})", fmt(x), p.step, p.variant)
                }
                _ => fmt(x),
            };
            writeln!(
                out,
                r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#1a1a1a" stroke-width="1.5"/>"##,
                fmt(sx(x)),
                fmt(y - 10.0),
                fmt(sx(x)),
                fmt(y + 10.0),
            )
            .unwrap();
            writeln!(
                out,
                r##"  <text x="{}" y="{}" font-size="10" font-family="monospace" transform="rotate(-45 {} {})">{}</text>"##,
                fmt(sx(x)),
                fmt(y - 16.0),
                fmt(sx(x)),
                fmt(y - 16.0),
                label,
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(values: &[f64]) -> (f64, f64) {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (min, max)
}

fn header(out: &mut String) {
    writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"##,
        c = CANVAS as u32,
    )
    .unwrap();
}
