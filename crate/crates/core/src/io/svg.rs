use std::fmt::Write;

use crate::persistence::PersistenceDiagram;

#[derive(Copy, Clone, Debug)]
pub struct SvgOptions {
    /// Width and height of the square canvas, in pixels.
    pub size: f64,
    pub margin: f64,
    /// Disk radius for multiplicity one; larger multiplicities scale by its square root.
    pub radius: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            size: 400.0,
            margin: 40.0,
            radius: 4.0,
        }
    }
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Deterministic SVG of a diagram: the diagonal, proper cornerpoints as
/// disks, and cornerpoints at infinity as triangles on a band at the top.
pub fn render_svg(d: &PersistenceDiagram, opts: &SvgOptions) -> String {
    let coords: Vec<f64> = d
        .cornerpoints()
        .iter()
        .flat_map(|c| [c.birth, c.death])
        .filter(|x| x.is_finite())
        .collect();
    let (mut lo, mut hi) = coords
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &x| (l.min(x), h.max(x)));
    if coords.is_empty() {
        (lo, hi) = (0.0, 1.0);
    } else if lo == hi {
        (lo, hi) = (lo - 0.5, hi + 0.5);
    }
    let pad = (hi - lo) * 0.05;
    let (lo, hi) = (lo - pad, hi + pad);

    let s = opts.size;
    let m = opts.margin;
    let band = m * 0.5;
    let plot = s - 2.0 * m;
    let x = |t: f64| m + (t - lo) / (hi - lo) * plot;
    let y = |t: f64| s - m - (t - lo) / (hi - lo) * plot;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s:.0}" height="{s:.0}" viewBox="0 0 {s:.0} {s:.0}">"#
    );
    let title = match d.meta.mode {
        Some(mode) => format!("{} ({mode})", d.meta.feature),
        None => d.meta.feature.clone(),
    };
    let _ = writeln!(out, "<title>{}</title>", esc(&title));
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{s:.0}" height="{s:.0}" fill="white"/>"#
    );
    let _ = writeln!(
        out,
        r##"<rect x="{m:.2}" y="{:.2}" width="{plot:.2}" height="{band:.2}" fill="#f0f0f0"/>"##,
        m - band
    );
    let _ = writeln!(
        out,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1"/>"#,
        x(lo),
        y(lo),
        x(hi),
        y(hi)
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="start">{lo:.3}</text>"#,
        m,
        s - m + 14.0
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="end">{hi:.3}</text>"#,
        s - m,
        s - m + 14.0
    );

    for c in d.cornerpoints() {
        let r = opts.radius * (c.multiplicity as f64).sqrt();
        let cx = x(c.birth);
        let cy = if c.is_at_infinity() { m - band / 2.0 } else { y(c.death) };
        if c.is_at_infinity() {
            let _ = writeln!(
                out,
                r##"<polygon points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}" fill="#c0392b"/>"##,
                cx,
                cy - r,
                cx - r,
                cy + r,
                cx + r,
                cy + r
            );
        } else {
            let _ = writeln!(
                out,
                r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" fill="#2c3e50"/>"##
            );
        }
        if c.multiplicity > 1 {
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-size="10">{}</text>"#,
                cx + r + 2.0,
                cy - r,
                c.multiplicity
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
