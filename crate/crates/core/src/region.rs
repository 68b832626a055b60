//! Convex regions, exact clipping, point location and lattice point counts.

use std::cmp::Ordering;

use crate::affine::AffineMap;
use crate::error::{ConvexityDefect, DefectKind, GeometryError};
use crate::lattice::Lattice2;
use crate::rational::Rational;
use crate::vector::{orient, Point2, Vec2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionKind {
    Empty,
    Point,
    Segment,
    Polygon,
}

/// `{ p : n . p >= c }`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPlane {
    pub normal: Vec2,
    pub offset: Rational,
}

impl HalfPlane {
    /// The closed half-plane to the left of the directed line `a -> b`.
    pub fn left_of(a: &Point2, b: &Point2) -> HalfPlane {
        let e = b - a;
        let normal = Vec2::new(-&e.y, e.x);
        let offset = normal.dot(a);
        HalfPlane { normal, offset }
    }

    pub fn value(&self, p: &Point2) -> Rational {
        self.normal.dot(p) - &self.offset
    }

    fn contradiction() -> HalfPlane {
        HalfPlane { normal: Vec2::zero(), offset: Rational::one() }
    }
}

/// A convex region stored as its strictly convex counterclockwise vertex
/// ring, starting at the lexicographically least vertex. Fewer than three
/// vertices encode the degenerate cases.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConvexRegion {
    vertices: Vec<Point2>,
}

impl ConvexRegion {
    pub fn empty() -> ConvexRegion {
        ConvexRegion { vertices: Vec::new() }
    }

    /// Convex hull of an arbitrary point set (Andrew's monotone chain,
    /// collinear points dropped).
    pub fn hull(points: &[Point2]) -> ConvexRegion {
        let mut pts: Vec<Point2> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() <= 2 {
            return ConvexRegion { vertices: pts };
        }
        let mut lower: Vec<Point2> = Vec::new();
        for p in &pts {
            while lower.len() >= 2
                && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p).signum() <= 0
            {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<Point2> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2
                && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p).signum() <= 0
            {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        if lower.len() == 2 && lower[0] == lower[1] {
            lower.pop();
        }
        ConvexRegion { vertices: lower }
    }

    /// Accepts a strictly convex ring in either orientation.
    pub fn from_vertices(ring: &[Point2]) -> Result<ConvexRegion, GeometryError> {
        check_strictly_convex(ring).map_err(GeometryError::NotConvex)?;
        Ok(ConvexRegion::hull(ring))
    }

    pub fn triangle(a: &Point2, b: &Point2, c: &Point2) -> Result<ConvexRegion, GeometryError> {
        ConvexRegion::from_vertices(&[a.clone(), b.clone(), c.clone()])
    }

    pub fn rectangle(xmin: &Rational, ymin: &Rational, xmax: &Rational, ymax: &Rational) -> ConvexRegion {
        ConvexRegion::hull(&[
            Vec2::new(xmin.clone(), ymin.clone()),
            Vec2::new(xmax.clone(), ymin.clone()),
            Vec2::new(xmax.clone(), ymax.clone()),
            Vec2::new(xmin.clone(), ymax.clone()),
        ])
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn kind(&self) -> RegionKind {
        match self.vertices.len() {
            0 => RegionKind::Empty,
            1 => RegionKind::Point,
            2 => RegionKind::Segment,
            _ => RegionKind::Polygon,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.kind() != RegionKind::Polygon
    }

    pub fn area(&self) -> Rational {
        shoelace2(&self.vertices).abs() * Rational::new(1, 2)
    }

    /// Edge half-planes for a polygon; equivalent constraint sets for the
    /// degenerate kinds.
    pub fn half_planes(&self) -> Vec<HalfPlane> {
        let v = &self.vertices;
        match self.kind() {
            RegionKind::Empty => vec![HalfPlane::contradiction()],
            RegionKind::Point => {
                let p = &v[0];
                vec![
                    HalfPlane { normal: Vec2::ints(1, 0), offset: p.x.clone() },
                    HalfPlane { normal: Vec2::ints(-1, 0), offset: -&p.x },
                    HalfPlane { normal: Vec2::ints(0, 1), offset: p.y.clone() },
                    HalfPlane { normal: Vec2::ints(0, -1), offset: -&p.y },
                ]
            }
            RegionKind::Segment => {
                let (a, b) = (&v[0], &v[1]);
                let e = b - a;
                vec![
                    HalfPlane::left_of(a, b),
                    HalfPlane::left_of(b, a),
                    HalfPlane { offset: e.dot(a), normal: e.clone() },
                    HalfPlane { offset: -e.dot(b), normal: -e },
                ]
            }
            RegionKind::Polygon => (0..v.len())
                .map(|i| HalfPlane::left_of(&v[i], &v[(i + 1) % v.len()]))
                .collect(),
        }
    }

    pub fn locate(&self, p: &Point2) -> Location {
        match self.kind() {
            RegionKind::Empty => Location::Exterior,
            RegionKind::Point | RegionKind::Segment => {
                if self.half_planes().iter().all(|h| h.value(p).signum() >= 0) {
                    Location::Boundary
                } else {
                    Location::Exterior
                }
            }
            RegionKind::Polygon => locate_in_ring(&self.vertices, p),
        }
    }

    pub fn translate(&self, t: &Vec2) -> ConvexRegion {
        ConvexRegion::hull(&self.vertices.iter().map(|v| v + t).collect::<Vec<_>>())
    }

    /// Point reflection through the origin.
    pub fn negate(&self) -> ConvexRegion {
        ConvexRegion::hull(&self.vertices.iter().map(|v| -v).collect::<Vec<_>>())
    }

    pub fn map(&self, m: &AffineMap) -> ConvexRegion {
        ConvexRegion::hull(&self.vertices.iter().map(|v| m.apply(v)).collect::<Vec<_>>())
    }

    /// Average of the vertices.
    pub fn vertex_centroid(&self) -> Option<Point2> {
        if self.vertices.is_empty() {
            return None;
        }
        let n = Rational::from_integer(self.vertices.len() as i64);
        let sx: Rational = self.vertices.iter().map(|v| &v.x).sum();
        let sy: Rational = self.vertices.iter().map(|v| &v.y).sum();
        Some(Vec2::new(sx / &n, sy / &n))
    }

    /// Axis-aligned bounding box `(min, max)`, or `None` for the empty region.
    pub fn bounding_box(&self) -> Option<(Point2, Point2)> {
        bounding_box(&self.vertices)
    }
}

pub(crate) fn bounding_box(points: &[Point2]) -> Option<(Point2, Point2)> {
    let first = points.first()?;
    let (mut lo, mut hi) = (first.clone(), first.clone());
    for p in &points[1..] {
        if p.x < lo.x {
            lo.x = p.x.clone();
        }
        if p.y < lo.y {
            lo.y = p.y.clone();
        }
        if p.x > hi.x {
            hi.x = p.x.clone();
        }
        if p.y > hi.y {
            hi.y = p.y.clone();
        }
    }
    Some((lo, hi))
}

/// Twice the signed area of a closed ring.
pub fn shoelace2(ring: &[Point2]) -> Rational {
    let n = ring.len();
    (0..n).map(|i| ring[i].cross(&ring[(i + 1) % n])).sum()
}

/// Locates `p` against a strictly convex ring of either orientation.
pub(crate) fn locate_in_ring(ring: &[Point2], p: &Point2) -> Location {
    let n = ring.len();
    let sign = shoelace2(ring).signum();
    let mut on_line = false;
    for i in 0..n {
        let s = orient(&ring[i], &ring[(i + 1) % n], p).signum() * sign;
        if s < 0 {
            return Location::Exterior;
        }
        if s == 0 {
            on_line = true;
        }
    }
    if on_line {
        Location::Boundary
    } else {
        Location::Interior
    }
}

// 0 for directions in [0, pi), 1 for [pi, 2 pi)
fn half_of(e: &Vec2) -> u8 {
    if e.y.is_positive() || (e.y.is_zero() && e.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Exact comparison of direction angles in `[0, 2 pi)`.
pub(crate) fn angle_cmp(a: &Vec2, b: &Vec2) -> Ordering {
    half_of(a)
        .cmp(&half_of(b))
        .then_with(|| match b.cross(a).signum() {
            -1 => Ordering::Less,
            1 => Ordering::Greater,
            _ => Ordering::Equal,
        })
}

/// Checks that a closed vertex ring is strictly convex and simple.
/// Returns the orientation sign (+1 counterclockwise, -1 clockwise).
pub fn check_strictly_convex(ring: &[Point2]) -> Result<i32, ConvexityDefect> {
    let n = ring.len();
    if n < 3 {
        return Err(ConvexityDefect {
            vertices: [0, 1 % n.max(1), 2 % n.max(1)],
            kind: DefectKind::TooFewVertices,
        });
    }
    let triple = |i: usize| [i, (i + 1) % n, (i + 2) % n];
    let turns: Vec<i32> = (0..n)
        .map(|i| orient(&ring[i], &ring[(i + 1) % n], &ring[(i + 2) % n]).signum())
        .collect();
    let sign = match shoelace2(ring).signum() {
        0 => turns.iter().copied().find(|s| *s != 0).unwrap_or(0),
        s => s,
    };
    for (i, t) in turns.iter().enumerate() {
        if *t == 0 {
            return Err(ConvexityDefect { vertices: triple(i), kind: DefectKind::Collinear });
        }
        if *t != sign {
            return Err(ConvexityDefect { vertices: triple(i), kind: DefectKind::ReflexTurn });
        }
    }
    let edges: Vec<Vec2> = (0..n).map(|i| &ring[(i + 1) % n] - &ring[i]).collect();
    let wraps = (0..n)
        .filter(|&i| {
            let ord = angle_cmp(&edges[(i + 1) % n], &edges[i]);
            if sign > 0 {
                ord == Ordering::Less
            } else {
                ord == Ordering::Greater
            }
        })
        .count();
    if wraps != 1 {
        return Err(ConvexityDefect { vertices: triple(0), kind: DefectKind::MultipleWinding });
    }
    Ok(sign)
}

fn clip_half_plane(subject: &[Point2], h: &HalfPlane) -> Vec<Point2> {
    let n = subject.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let cur = &subject[i];
        let next = &subject[(i + 1) % n];
        let fc = h.value(cur);
        let fn_ = h.value(next);
        if fc.signum() >= 0 {
            out.push(cur.clone());
        }
        if fc.signum() * fn_.signum() < 0 {
            let t = &fc / (&fc - &fn_);
            out.push(cur + &(next - cur).scale(&t));
        }
    }
    out
}

/// Exact intersection of convex regions by successive half-plane clipping.
/// An empty list yields the empty region.
pub fn clip(regions: &[ConvexRegion]) -> ConvexRegion {
    let Some(first) = regions.first() else {
        return ConvexRegion::empty();
    };
    let mut subject: Vec<Point2> = first.vertices.clone();
    for r in &regions[1..] {
        for h in r.half_planes() {
            if subject.is_empty() {
                return ConvexRegion::empty();
            }
            subject = clip_half_plane(&subject, &h);
        }
        subject = ConvexRegion::hull(&subject).vertices;
    }
    ConvexRegion::hull(&subject)
}

// y-extent of the closed region on the vertical line at x
fn column_extent(ring: &[Point2], x: &Rational) -> Option<(Rational, Rational)> {
    let n = ring.len();
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    let mut push = |y: Rational| {
        if lo.as_ref().map_or(true, |l| &y < l) {
            lo = Some(y.clone());
        }
        if hi.as_ref().map_or(true, |h| &y > h) {
            hi = Some(y);
        }
    };
    for i in 0..n {
        let p = &ring[i];
        let q = &ring[(i + 1) % n];
        if &p.x == x {
            push(p.y.clone());
        }
        if (&p.x < x && x < &q.x) || (&q.x < x && x < &p.x) {
            push(&p.y + (&q.y - &p.y) * (x - &p.x) / (&q.x - &p.x));
        }
    }
    Some((lo?, hi?))
}

/// Lattice points of a closed convex region: `(interior, boundary)`.
pub fn lattice_point_counts(region: &ConvexRegion, lattice: &Lattice2) -> (u64, u64) {
    let ring: Vec<Point2> = region
        .vertices()
        .iter()
        .map(|v| {
            let (s, t) = lattice.coordinates(v);
            Vec2::new(s, t)
        })
        .collect();
    let Some((lo, hi)) = bounding_box(&ring) else {
        return (0, 0);
    };
    let x0 = lo.x.ceil().to_i64().expect("region too large to count");
    let x1 = hi.x.floor().to_i64().expect("region too large to count");
    let degenerate = region.is_degenerate();
    let (mut interior, mut boundary) = (0u64, 0u64);
    for xi in x0..=x1 {
        let x = Rational::from_integer(xi);
        let Some((ylo, yhi)) = column_extent(&ring, &x) else {
            continue;
        };
        let y0 = ylo.ceil().to_i64().unwrap();
        let y1 = yhi.floor().to_i64().unwrap();
        if y1 < y0 {
            continue;
        }
        let total = (y1 - y0 + 1) as u64;
        if degenerate || x == lo.x || x == hi.x {
            boundary += total;
            continue;
        }
        let mut b = 0;
        if ylo.is_integer() {
            b += 1;
        }
        if yhi.is_integer() && yhi != ylo {
            b += 1;
        }
        boundary += b;
        interior += total - b;
    }
    (interior, boundary)
}
