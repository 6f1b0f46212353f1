use std::fmt::Write;

use cwinv_core::lattice::LatticePointSet;
use cwinv_core::{Error, Result};

const UNIT: u32 = 40;
const MARGIN: u32 = 50;

/// Scatter plot of a pair set on a unit grid, depth across and dim up.
/// The axes run from 0 to `n` on both sides so plots for the same `n` line
/// up; the output depends only on the set.
pub fn emit_scatter_svg(set: &LatticePointSet) -> Result<String> {
    if set.arity != 2 {
        return Err(Error::Arity {
            expected: 2,
            got: set.arity,
        });
    }
    let top = set
        .points
        .iter()
        .flat_map(|p| p.iter().copied())
        .max()
        .unwrap_or(0)
        .max(set.n as u32);
    let side = top * UNIT;
    let width = side + 2 * MARGIN;
    let x = |a: u32| MARGIN + a * UNIT;
    let y = |b: u32| MARGIN + side - b * UNIT;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{width}" viewBox="0 0 {width} {width}">"#
    );
    let _ = writeln!(s, r#"<rect width="{width}" height="{width}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle">{} n={}</text>"#,
        width / 2,
        MARGIN / 2,
        set.provenance.kind_name(),
        set.n
    );
    let _ = writeln!(s, r##"<g stroke="#cccccc" stroke-width="1">"##);
    for k in 0..=top {
        let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, x(k), y(0), x(k), y(top));
        let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, x(0), y(k), x(top), y(k));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g stroke="black" stroke-width="2">"#);
    let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, x(0), y(0), x(top), y(0));
    let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, x(0), y(0), x(0), y(top));
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="11" text-anchor="middle">"#);
    for k in 0..=top {
        let _ = writeln!(s, r#"<text x="{}" y="{}">{k}</text>"#, x(k), y(0) + 16);
        let _ = writeln!(s, r#"<text x="{}" y="{}">{k}</text>"#, x(0) - 14, y(k) + 4);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="13" text-anchor="middle">depth</text>"#,
        x(top) / 2 + MARGIN / 2,
        y(0) + 36
    );
    let _ = writeln!(
        s,
        r#"<text x="{lx}" y="{ly}" font-family="sans-serif" font-size="13" text-anchor="middle" transform="rotate(-90 {lx} {ly})">dim</text>"#,
        lx = MARGIN / 2 - 8,
        ly = y(top / 2)
    );
    let _ = writeln!(s, r#"<g fill="black">"#);
    for p in &set.points {
        let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="6"/>"#, x(p[0]), y(p[1]));
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    Ok(s)
}
