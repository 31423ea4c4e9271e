//! Planar picture of a rank-two cone of sections.

use std::fmt::Write;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

/// Support points of `inv(m)` as dots, the cone's boundary rays as arrows
/// from the origin and the cone itself shaded between them.
pub fn plot_cone(names: &[String], points: &[Vec<i64>], rays: &[Vec<i64>], title: &str) -> String {
    let reach = points
        .iter()
        .flat_map(|p| p.iter().map(|x| x.abs()))
        .max()
        .unwrap_or(1)
        .max(2) as f64
        + 1.0;
    let scale = (SIZE / 2.0 - MARGIN) / reach;
    let c = SIZE / 2.0;
    let at = |x: f64, y: f64| (c + x * scale, c - y * scale);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<title>{}</title>"#, escape(title));
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    // Grid and axes.
    let r = reach as i64;
    for k in -r..=r {
        let (x0, y0) = at(k as f64, -reach);
        let (x1, y1) = at(k as f64, reach);
        let _ = writeln!(
            s,
            r##"<line x1="{x0:.1}" y1="{y0:.1}" x2="{x1:.1}" y2="{y1:.1}" stroke="#eee"/>"##
        );
        let (x0, y0) = at(-reach, k as f64);
        let (x1, y1) = at(reach, k as f64);
        let _ = writeln!(
            s,
            r##"<line x1="{x0:.1}" y1="{y0:.1}" x2="{x1:.1}" y2="{y1:.1}" stroke="#eee"/>"##
        );
    }
    let (x0, y0) = at(-reach, 0.0);
    let (x1, y1) = at(reach, 0.0);
    let _ = writeln!(
        s,
        r##"<line x1="{x0:.1}" y1="{y0:.1}" x2="{x1:.1}" y2="{y1:.1}" stroke="#888"/>"##
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="14">{}</text>"#,
        x1 - 14.0,
        y1 - 6.0,
        escape(&names[0])
    );
    let (x0, y0) = at(0.0, -reach);
    let (x1, y1) = at(0.0, reach);
    let _ = writeln!(
        s,
        r##"<line x1="{x0:.1}" y1="{y0:.1}" x2="{x1:.1}" y2="{y1:.1}" stroke="#888"/>"##
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="14">{}</text>"#,
        x1 + 6.0,
        y1 + 14.0,
        escape(&names[1])
    );

    // Rays are extended to the edge of the picture.
    let ends: Vec<(f64, f64)> = rays
        .iter()
        .map(|v| {
            let (x, y) = (v[0] as f64, v[1] as f64);
            let t = reach / x.abs().max(y.abs());
            at(x * t, y * t)
        })
        .collect();
    if ends.len() == 2 {
        let _ = writeln!(
            s,
            r##"<polygon points="{c:.1},{c:.1} {:.1},{:.1} {:.1},{:.1}" fill="#4a90d9" fill-opacity="0.15"/>"##,
            ends[0].0, ends[0].1, ends[1].0, ends[1].1
        );
    }
    for (v, (x, y)) in rays.iter().zip(&ends) {
        let _ = writeln!(
            s,
            r##"<line x1="{c:.1}" y1="{c:.1}" x2="{x:.1}" y2="{y:.1}" stroke="#1f5fa8" stroke-width="2"><title>ray ({}, {})</title></line>"##,
            v[0], v[1]
        );
    }
    for p in points {
        let (x, y) = at(p[0] as f64, p[1] as f64);
        let _ = writeln!(
            s,
            r##"<circle cx="{x:.1}" cy="{y:.1}" r="4" fill="#c0392b"><title>({}, {})</title></circle>"##,
            p[0], p[1]
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_every_point_and_ray() {
        let names = vec!["a".to_string(), "z".to_string()];
        let svg = plot_cone(
            &names,
            &[vec![0, 1], vec![1, 2]],
            &[vec![1, 0], vec![-2, -1]],
            "t",
        );
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(svg.contains(">a</text>") && svg.contains(">z</text>"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
