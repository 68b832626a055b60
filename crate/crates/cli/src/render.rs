//! SVG pictures of a lattice arrangement `P + L`.
//!
//! Each translate meeting the window is drawn with a translucent fill, so
//! overlap depth shows as darker shading. Coordinates become floats only
//! when written out; the legend reports exact coverage counts at nine probe
//! points.

use std::fmt::Write as _;

use multifold_core::oracle::generic_coverage;
use multifold_core::{clip, ConvexRegion, CsPolygon, Lattice2, Point2, Rational, Vec2};

use crate::io::{write_text, IoError};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    /// lower-left and upper-right corners
    pub window: (Point2, Point2),
    pub stroke_width: f64,
    /// probe marker colours by coverage count; the last one repeats
    pub palette: Vec<String>,
    /// pixels per unit
    pub scale: f64,
}

const PALETTE: [&str; 8] = ["#ffffff", "#d8e6f3", "#a9c6e4", "#74a2d0", "#4a7fb8", "#2e5f99", "#1c4274", "#0e2748"];

impl RenderSpec {
    /// Window `[-w, w]^2` with `w` five times the largest vertex coordinate.
    pub fn for_polygon(p: &CsPolygon) -> RenderSpec {
        let r = p.half_vertices().iter().flat_map(|v| [v.x.abs(), v.y.abs()]).max().expect("nonempty polygon");
        let w = r * Rational::from(5);
        RenderSpec::with_window(Vec2::new(-&w, -&w), Vec2::new(w.clone(), w))
    }

    pub fn with_window(lo: Point2, hi: Point2) -> RenderSpec {
        let span = (&hi.x - &lo.x).max(&hi.y - &lo.y).to_f64();
        RenderSpec {
            window: (lo, hi),
            stroke_width: 1.0,
            palette: PALETTE.iter().map(|s| s.to_string()).collect(),
            scale: if span > 0.0 { 600.0 / span } else { 40.0 },
        }
    }

    fn colour(&self, count: u32) -> &str {
        let i = (count as usize).min(self.palette.len().saturating_sub(1));
        self.palette.get(i).map(|s| s.as_str()).unwrap_or("#000000")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rendering {
    pub svg: String,
    /// lattice vectors of the translates drawn
    pub translates: Vec<Point2>,
    /// probe points with their exact coverage count (`None` when no
    /// generic point was found nearby)
    pub probes: Vec<(Point2, Option<u32>)>,
}

/// Translates whose interior meets the window. The search range comes from
/// the bounding boxes of `P` and the window in lattice coordinates.
pub fn translates_in_window(p: &CsPolygon, lattice: &Lattice2, lo: &Point2, hi: &Point2) -> Vec<Point2> {
    let coords = |v: &Point2| lattice.coordinates(v);
    let poly: Vec<(Rational, Rational)> = p.vertices().iter().map(coords).collect();
    let corners = [lo.clone(), Vec2::new(hi.x.clone(), lo.y.clone()), hi.clone(), Vec2::new(lo.x.clone(), hi.y.clone())];
    let win: Vec<(Rational, Rational)> = corners.iter().map(coords).collect();
    let span = |pts: &[(Rational, Rational)], first: bool| {
        let vals: Vec<&Rational> = pts.iter().map(|(s, t)| if first { s } else { t }).collect();
        let min = vals.iter().copied().min().expect("nonempty").clone();
        let max = vals.iter().copied().max().expect("nonempty").clone();
        (min, max)
    };
    let ((ps0, ps1), (pt0, pt1)) = (span(&poly, true), span(&poly, false));
    let ((ws0, ws1), (wt0, wt1)) = (span(&win, true), span(&win, false));
    let int = |r: Rational| r.to_i64().expect("window of reasonable size");
    let (i0, i1) = (int((&ws0 - &ps1).floor()), int((&ws1 - &ps0).ceil()));
    let (j0, j1) = (int((&wt0 - &pt1).floor()), int((&wt1 - &pt0).ceil()));
    let window = ConvexRegion::rectangle(&lo.x, &lo.y, &hi.x, &hi.y);
    let region = p.to_region();
    let mut out = Vec::new();
    for i in i0..=i1 {
        for j in j0..=j1 {
            let lambda = lattice.point(&Rational::from(i), &Rational::from(j));
            let overlap = clip(&[region.translate(&lambda), window.clone()]);
            if overlap.area().is_positive() {
                out.push(lambda);
            }
        }
    }
    out
}

fn probe_points(lo: &Point2, hi: &Point2) -> Vec<Point2> {
    let mut pts = Vec::new();
    for fy in [3, 2, 1] {
        for fx in [1, 2, 3] {
            let x = &lo.x + (&hi.x - &lo.x) * Rational::new(fx, 4);
            let y = &lo.y + (&hi.y - &lo.y) * Rational::new(fy, 4);
            pts.push(Vec2::new(x, y));
        }
    }
    pts
}

pub fn render_svg(p: &CsPolygon, lattice: &Lattice2, spec: &RenderSpec) -> Rendering {
    let (lo, hi) = &spec.window;
    let translates = translates_in_window(p, lattice, lo, hi);
    let probes: Vec<(Point2, Option<u32>)> = probe_points(lo, hi)
        .into_iter()
        .map(|x| {
            let c = generic_coverage(p, lattice, &x).ok().map(|s| s.open);
            (x, c)
        })
        .collect();

    let margin = 20.0;
    let legend = 70.0;
    let (x0, y1) = (lo.x.to_f64(), hi.y.to_f64());
    let w = (&hi.x - &lo.x).to_f64() * spec.scale;
    let h = (&hi.y - &lo.y).to_f64() * spec.scale;
    let sx = |x: &Rational| (x.to_f64() - x0) * spec.scale + margin;
    let sy = |y: &Rational| (y1 - y.to_f64()) * spec.scale + margin;
    let (width, height) = (w + 2.0 * margin, h + 2.0 * margin + legend);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{width:.1}" height="{height:.1}" fill="#ffffff"/>"##);
    let _ = writeln!(s, r#"<defs><clipPath id="window"><rect x="{margin:.1}" y="{margin:.1}" width="{w:.3}" height="{h:.3}"/></clipPath></defs>"#);
    let _ = writeln!(s, r##"<g clip-path="url(#window)" stroke="#1c4274" stroke-width="{:.2}" stroke-linejoin="round">"##, spec.stroke_width);
    let ring = p.vertices();
    for lambda in &translates {
        let pts: Vec<String> = ring
            .iter()
            .map(|v| {
                let q = v + lambda;
                format!("{:.3},{:.3}", sx(&q.x), sy(&q.y))
            })
            .collect();
        let base = lambda.is_zero();
        let _ = writeln!(
            s,
            r##"<polygon points="{}" fill="#4a7fb8" fill-opacity="0.12"{}/>"##,
            pts.join(" "),
            if base { r##" stroke="#b03a2e" stroke-width="2.5""## } else { "" }
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r##"<rect x="{margin:.1}" y="{margin:.1}" width="{w:.3}" height="{h:.3}" fill="none" stroke="#000000" stroke-width="0.5"/>"##);
    for (x, c) in &probes {
        let fill = c.map(|c| spec.colour(c)).unwrap_or("#ff0000");
        let label = c.map(|c| c.to_string()).unwrap_or_else(|| "?".into());
        let (cx, cy) = (sx(&x.x), sy(&x.y));
        let _ = writeln!(s, r##"<circle cx="{cx:.3}" cy="{cy:.3}" r="6" fill="{fill}" stroke="#000000"/>"##);
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="11">{label}</text>"#,
            cx + 8.0,
            cy + 4.0
        );
    }
    let counts: Vec<String> = probes.iter().map(|(_, c)| c.map(|c| c.to_string()).unwrap_or_else(|| "?".into())).collect();
    let ty = h + 2.0 * margin + 18.0;
    let _ = writeln!(
        s,
        r#"<text x="{margin:.1}" y="{ty:.1}" font-family="sans-serif" font-size="13">translates drawn: {}; window [{},{}]x[{},{}]</text>"#,
        translates.len(),
        lo.x,
        hi.x,
        lo.y,
        hi.y
    );
    let _ = writeln!(
        s,
        r#"<text x="{margin:.1}" y="{:.1}" font-family="sans-serif" font-size="13">exact coverage at the 9 probes: {}</text>"#,
        ty + 20.0,
        counts.join(" ")
    );
    let _ = writeln!(s, "</svg>");
    Rendering { svg: s, translates, probes }
}

pub fn write_svg(p: &CsPolygon, lattice: &Lattice2, spec: &RenderSpec, path: &str) -> Result<Rendering, IoError> {
    let r = render_svg(p, lattice, spec);
    write_text(path, &r.svg)?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use multifold_core::pt;

    fn unit_square() -> CsPolygon {
        CsPolygon::from_half_vertices(&[pt(1, 2, -1, 2), pt(1, 2, 1, 2)]).unwrap()
    }

    #[test]
    fn unit_square_patch() {
        let sq = unit_square();
        let spec = RenderSpec::for_polygon(&sq);
        assert_eq!(spec.window.1, pt(5, 2, 5, 2));
        let r = render_svg(&sq, &Lattice2::integer(), &spec);
        assert_eq!(r.translates.len(), 25);
        assert!(r.probes.iter().all(|(_, c)| *c == Some(1)));
        assert_eq!(r.svg.matches("<polygon ").count(), 25);
        assert!(r.svg.contains("exact coverage at the 9 probes: 1 1 1 1 1 1 1 1 1"));
    }

    #[test]
    fn small_window_clips() {
        let sq = unit_square();
        let spec = RenderSpec::with_window(pt(0, 1, 0, 1), pt(1, 1, 1, 2));
        let r = render_svg(&sq, &Lattice2::integer(), &spec);
        // squares centred at (0,0), (1,0)
        assert_eq!(r.translates.len(), 2);
    }

    #[test]
    fn decagon_legend_counts_five() {
        let p = multifold_core::families::decagon_from_vertex(&pt(-29, 48, 19, 24)).unwrap();
        let spec = RenderSpec::with_window(pt(-2, 1, -2, 1), pt(2, 1, 2, 1));
        let r = render_svg(&p, &Lattice2::integer(), &spec);
        assert!(r.probes.iter().all(|(_, c)| *c == Some(5)));
        assert!(r.svg.contains("exact coverage at the 9 probes: 5 5 5 5 5 5 5 5 5"));
    }
}
