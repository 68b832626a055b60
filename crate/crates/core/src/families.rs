//! Constructors for the five-fold lattice tiles and the decagon frame.

use std::fmt;

use crate::error::{ConvexityDefect, GeometryError};
use crate::polygon::CsPolygon;
use crate::rational::{q, Rational};
use crate::region::{check_strictly_convex, clip, ConvexRegion, Location};
use crate::vector::{Point2, Vec2};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyParam {
    Parallelogram(Vec2, Vec2),
    Hexagon(Point2, Point2, Point2),
    OctagonA(Rational),
    OctagonB(Rational),
    Decagon(Point2),
}

impl FamilyParam {
    pub fn build(&self) -> Result<CsPolygon, FamilyError> {
        match self {
            FamilyParam::Parallelogram(b1, b2) => parallelogram_tile(b1, b2),
            FamilyParam::Hexagon(a, b, c) => hexagon_tile(a, b, c),
            FamilyParam::OctagonA(alpha) => octagon_a(alpha),
            FamilyParam::OctagonB(beta) => octagon_b(beta),
            FamilyParam::Decagon(v1) => decagon_from_vertex(v1),
        }
    }
}

/// Which `T_i` failed to contain `v_i` in its interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutsideWDiagnosis {
    /// 0-based; `T_i` has `i = index + 1`
    pub index: usize,
    pub vertex: Point2,
    pub location: Location,
}

impl fmt::Display for OutsideWDiagnosis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = self.index + 1;
        match self.location {
            Location::Boundary => write!(f, "v{i} = {} lies on the boundary of T{i}", self.vertex),
            _ => write!(f, "v{i} = {} lies outside T{i}", self.vertex),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("{family} parameter {value} outside the open interval ({lo}, {hi}){}",
        .degeneracy.as_ref().map(|d| format!(": {d}")).unwrap_or_default())]
    ParamOutOfRange {
        family: &'static str,
        value: Rational,
        lo: Rational,
        hi: Rational,
        degeneracy: Option<ConvexityDefect>,
    },
    #[error("first vertex outside the interior of W: {0}")]
    OutsideW(OutsideWDiagnosis),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

fn with_negatives(half: &[Point2]) -> Vec<Point2> {
    let mut ring = half.to_vec();
    ring.extend(half.iter().map(|v| -v));
    ring
}

fn ranged(
    family: &'static str,
    value: &Rational,
    lo: Rational,
    hi: Rational,
    half: Vec<Point2>,
) -> Result<CsPolygon, FamilyError> {
    if value <= &lo || value >= &hi {
        let degeneracy = check_strictly_convex(&with_negatives(&half)).err();
        return Err(FamilyError::ParamOutOfRange { family, value: value.clone(), lo, hi, degeneracy });
    }
    Ok(CsPolygon::from_half_vertices(&half)?)
}

/// `(-a,-3/2), (1-a,-3/2), (1+a,-1/2), (1-a,1/2)` and negatives, `0 < a < 1/4`.
pub fn octagon_a(alpha: &Rational) -> Result<CsPolygon, FamilyError> {
    let one = Rational::one();
    let half = vec![
        Vec2::new(-alpha, q(-3, 2)),
        Vec2::new(&one - alpha, q(-3, 2)),
        Vec2::new(&one + alpha, q(-1, 2)),
        Vec2::new(&one - alpha, q(1, 2)),
    ];
    ranged("octagon-a", alpha, q(0, 1), q(1, 4), half)
}

/// `(b,-2), (1+b,-2), (1-b,0), (b,1)` and negatives, `1/4 < b < 1/3`.
pub fn octagon_b(beta: &Rational) -> Result<CsPolygon, FamilyError> {
    let one = Rational::one();
    let half = vec![
        Vec2::new(beta.clone(), q(-2, 1)),
        Vec2::new(&one + beta, q(-2, 1)),
        Vec2::new(&one - beta, q(0, 1)),
        Vec2::new(beta.clone(), q(1, 1)),
    ];
    ranged("octagon-b", beta, q(1, 4), q(1, 3), half)
}

pub fn hexagon_tile(v1: &Point2, v2: &Point2, v3: &Point2) -> Result<CsPolygon, FamilyError> {
    Ok(CsPolygon::from_half_vertices(&[v1.clone(), v2.clone(), v3.clone()])?)
}

/// The parallelogram with vertices `+-(b1 + b2)/2`, `+-(b2 - b1)/2`.
pub fn parallelogram_tile(b1: &Vec2, b2: &Vec2) -> Result<CsPolygon, FamilyError> {
    let h = q(1, 2);
    let a = (b1 + b2).scale(&h);
    let b = (b2 - b1).scale(&h);
    Ok(CsPolygon::from_half_vertices(&[a, b])?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecagonFrame {
    /// `u_1..u_10`
    pub midpoints: Vec<Point2>,
    /// `L_i` as the pair `(u_i, u_{i+1})`
    pub lines: Vec<(Point2, Point2)>,
    /// `v'_i = L_{i-2} ∩ L_i`
    pub corners: Vec<Point2>,
    /// `T_i = (v'_i, u_i, u_{i-1})`
    pub triangles: Vec<ConvexRegion>,
    pub w: ConvexRegion,
}

fn line_intersection(a: &(Point2, Point2), b: &(Point2, Point2)) -> Point2 {
    let d1 = &a.1 - &a.0;
    let d2 = &b.1 - &b.0;
    let den = d1.cross(&d2);
    assert!(!den.is_zero(), "parallel frame lines");
    let t = (&b.0 - &a.0).cross(&d2) / den;
    &a.0 + &d1.scale(&t)
}

/// Frame midpoints `u_1..u_5`; the rest are their negatives.
pub fn frame_midpoints() -> Vec<Point2> {
    let half = vec![
        Vec2::ints(0, 1),
        Vec2::ints(1, 1),
        Vec2::new(q(3, 2), q(1, 2)),
        Vec2::new(q(3, 2), q(0, 1)),
        Vec2::new(q(1, 1), q(-1, 2)),
    ];
    with_negatives(&half)
}

pub fn decagon_frame() -> DecagonFrame {
    let u = frame_midpoints();
    let at = |i: i64| -> usize { i.rem_euclid(10) as usize };
    let lines: Vec<(Point2, Point2)> =
        (0..10).map(|i| (u[at(i)].clone(), u[at(i + 1)].clone())).collect();
    let corners: Vec<Point2> =
        (0..10).map(|i| line_intersection(&lines[at(i - 2)], &lines[at(i)])).collect();
    let triangles: Vec<ConvexRegion> = (0..10)
        .map(|i| {
            ConvexRegion::triangle(&corners[at(i)], &u[at(i)], &u[at(i - 1)])
                .expect("frame triangles are nondegenerate")
        })
        .collect();
    let two = Rational::from_integer(2);
    let (u1, u2, u3, u4) = (&u[0], &u[1], &u[2], &u[3]);
    let s4 = (u1 - u2 + u3 - u4).scale(&two);
    let s3 = (u1 - u2 + u3).scale(&two);
    let s2 = (u1 - u2).scale(&two);
    let s1 = u1.scale(&two);
    let w = clip(&[
        triangles[4].translate(&s4),
        triangles[3].negate().translate(&s3),
        triangles[2].translate(&s2),
        triangles[1].negate().translate(&s1),
        triangles[0].clone(),
    ]);
    DecagonFrame { midpoints: u, lines, corners, triangles, w }
}

pub fn region_w() -> ConvexRegion {
    decagon_frame().w
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexChain {
    /// `v_1..v_10` with `v_{i+1} = 2 u_i - v_i`
    pub vertices: Vec<Point2>,
    /// `2 u_10 - v_10 == v_1`
    pub closes: bool,
    /// `v_{5+i} == -v_i` for all `i`
    pub antipodal: bool,
}

pub fn vertex_chain(v1: &Point2) -> VertexChain {
    let u = frame_midpoints();
    let two = Rational::from_integer(2);
    let mut vertices = vec![v1.clone()];
    for ui in u.iter().take(9) {
        let next = ui.scale(&two) - vertices.last().unwrap();
        vertices.push(next);
    }
    let closes = &u[9].scale(&two) - &vertices[9] == *v1;
    let antipodal = (0..5).all(|i| vertices[i + 5] == -&vertices[i]);
    VertexChain { vertices, closes, antipodal }
}

/// The five-fold decagon tile with midpoints `u_i` through `v1`, defined
/// exactly when `v1` is interior to W.
pub fn decagon_from_vertex(v1: &Point2) -> Result<CsPolygon, FamilyError> {
    let frame = decagon_frame();
    let chain = vertex_chain(v1);
    for (i, (v, t)) in chain.vertices.iter().zip(&frame.triangles).enumerate() {
        let location = t.locate(v);
        if location != Location::Interior {
            return Err(FamilyError::OutsideW(OutsideWDiagnosis { index: i, vertex: v.clone(), location }));
        }
    }
    Ok(CsPolygon::from_vertices(&chain.vertices)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::DefectKind;
    use crate::vector::pt;

    #[test]
    fn octagon_a_vertices() {
        let p = octagon_a(&q(1, 8)).unwrap();
        assert_eq!(p.vertex(0), pt(-1, 8, -3, 2));
        assert_eq!(p.edge_vector(0), Vec2::ints(1, 0));
        assert_eq!(p.area(), q(5, 1));
    }

    fn defect(e: FamilyError) -> ConvexityDefect {
        match e {
            FamilyError::ParamOutOfRange { degeneracy: Some(d), .. } => d,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn octagon_boundaries() {
        let d = defect(octagon_a(&q(0, 1)).unwrap_err());
        assert_eq!((d.vertices, d.kind), ([1, 2, 3], DefectKind::Collinear));
        let d = defect(octagon_a(&q(1, 4)).unwrap_err());
        assert_eq!((d.vertices, d.kind), ([2, 3, 4], DefectKind::Collinear));
        let d = defect(octagon_b(&q(1, 4)).unwrap_err());
        assert_eq!((d.vertices, d.kind), ([2, 3, 4], DefectKind::Collinear));
        let d = defect(octagon_b(&q(1, 3)).unwrap_err());
        assert_eq!((d.vertices, d.kind), ([1, 2, 3], DefectKind::Collinear));
        let msg = octagon_a(&q(0, 1)).unwrap_err().to_string();
        assert!(msg.contains("v2, v3, v4 are collinear"), "{msg}");
    }

    #[test]
    fn octagon_b_midpoints() {
        let p = octagon_b(&q(7, 24)).unwrap();
        assert_eq!(p.midpoint(1), Vec2::ints(1, -1));
        assert_eq!(p.midpoint(2), pt(1, 2, 1, 2));
        assert_eq!(p.midpoint(3), pt(0, 1, 3, 2));
        assert_eq!(p.area(), q(5, 1));
    }

    #[test]
    fn small_tiles() {
        let h = hexagon_tile(&Vec2::ints(1, 0), &Vec2::ints(0, 1), &Vec2::ints(-1, 1)).unwrap();
        assert_eq!(h.area(), q(3, 1));
        let bad = hexagon_tile(&Vec2::ints(1, 0), &Vec2::ints(0, 1), &Vec2::ints(1, 1));
        assert!(matches!(bad, Err(FamilyError::Geometry(GeometryError::NotConvex(_)))));
        let sq = parallelogram_tile(&Vec2::ints(1, 0), &Vec2::ints(0, 1)).unwrap();
        assert_eq!(sq.area(), q(1, 1));
        assert!(parallelogram_tile(&Vec2::ints(1, 1), &Vec2::ints(2, 2)).is_err());
    }

    #[test]
    fn frame_geometry() {
        let f = decagon_frame();
        assert_eq!(f.corners[1], pt(2, 3, 4, 3));
        for i in 0..5 {
            assert_eq!(f.corners[i + 5], -&f.corners[i]);
            assert_eq!(f.triangles[i + 5], f.triangles[i].negate());
        }
        let alt = &f.midpoints[0] - &f.midpoints[1] + &f.midpoints[2] - &f.midpoints[3] + &f.midpoints[4];
        assert!(alt.is_zero());
        let mut w: Vec<Point2> = f.w.vertices().to_vec();
        w.sort();
        let mut expect = vec![pt(-1, 2, 1, 1), pt(-1, 2, 3, 4), pt(-2, 3, 2, 3), pt(-3, 4, 3, 4)];
        expect.sort();
        assert_eq!(w, expect);
        assert_eq!(f.w.area(), q(1, 24));
    }

    #[test]
    fn chains() {
        let c = vertex_chain(&pt(-29, 48, 19, 24));
        assert_eq!(c.vertices[1], pt(29, 48, 29, 24));
        assert!(c.closes && c.antipodal);
        let c = vertex_chain(&Vec2::zero());
        assert!(c.closes && c.antipodal);
    }

    #[test]
    fn decagons() {
        for v1 in [pt(-29, 48, 19, 24), pt(-5, 8, 3, 4)] {
            let d = decagon_from_vertex(&v1).unwrap();
            assert_eq!(d.area(), q(5, 1));
            let mut mids = d.midpoints();
            mids.sort();
            let mut frame = frame_midpoints();
            frame.sort();
            assert_eq!(mids, frame);
        }
        match decagon_from_vertex(&pt(-1, 2, 7, 8)) {
            Err(FamilyError::OutsideW(d)) => assert_eq!(d.location, Location::Boundary),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(decagon_from_vertex(&Vec2::zero()), Err(FamilyError::OutsideW(_))));
        assert!(decagon_from_vertex(&pt(-1, 2, 1, 1)).is_err());
    }
}
