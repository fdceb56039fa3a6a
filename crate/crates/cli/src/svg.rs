//! SVG rendering of a polygon, its transmitters and one visibility region.

use std::fmt::Write;

use mono2t_core::visibility::RectUnion;
use mono2t_core::{OrthoPolygon, Transmitter};

/// SVG units per polygon unit.
const SCALE: i64 = 40;
const MARGIN: i64 = 20;

struct Frame {
    left: i64,
    top: i64,
}

impl Frame {
    fn x(&self, x: i64) -> i64 {
        MARGIN + (x - self.left) * SCALE
    }

    // Screen y grows downwards.
    fn y(&self, y: i64) -> i64 {
        MARGIN + (self.top - y) * SCALE
    }
}

pub fn render(p: &OrthoPolygon, transmitters: &[Transmitter], shade: Option<&RectUnion>) -> String {
    let (xr, yr) = (p.profile().x_range(), p.profile().y_range());
    let f = Frame {
        left: xr.lo,
        top: yr.hi,
    };
    let width = xr.len() * SCALE + 2 * MARGIN;
    let height = yr.len() * SCALE + 2 * MARGIN;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();

    if let Some(region) = shade {
        writeln!(
            out,
            r##"  <g fill="#2a9d8f" fill-opacity="0.4" stroke="none">"##
        )
        .unwrap();
        for i in region.cells().ones() {
            let c = region.grid().cell(i);
            writeln!(
                out,
                r#"    <rect x="{}" y="{}" width="{}" height="{}"/>"#,
                f.x(c.x.lo),
                f.y(c.y.hi),
                c.x.len() * SCALE,
                c.y.len() * SCALE
            )
            .unwrap();
        }
        writeln!(out, "  </g>").unwrap();
    }

    let mut d = String::new();
    for (i, v) in p.vertices().iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        write!(d, "{cmd}{} {} ", f.x(v.x), f.y(v.y)).unwrap();
    }
    d.push('Z');
    writeln!(
        out,
        r##"  <path d="{d}" fill="none" stroke="#264653" stroke-width="1.5"/>"##
    )
    .unwrap();

    for t in transmitters {
        let ([x1, x2], [y1, y2]) = (t.x_coords(), t.y_coords());
        writeln!(
            out,
            r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#e76f51" stroke-width="3" stroke-linecap="round"><title>{t}</title></line>"##,
            f.x(x1),
            f.y(y1),
            f.x(x2),
            f.y(y2)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
