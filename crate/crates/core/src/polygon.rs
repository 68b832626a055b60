use crate::affine::AffineMap;
use crate::error::GeometryError;
use crate::lattice::Lattice2;
use crate::rational::Rational;
use crate::region::{check_strictly_convex, lattice_point_counts, locate_in_ring, shoelace2, ConvexRegion, Location};
use crate::vector::{Point2, Vec2};

/// A strictly convex polygon with vertices `v1..vm, -v1..-vm`, listed
/// counterclockwise. Only the first half is stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CsPolygon {
    half: Vec<Point2>,
}

fn reversed_keeping_first(ring: Vec<Point2>) -> Vec<Point2> {
    let mut out = Vec::with_capacity(ring.len());
    out.push(ring[0].clone());
    out.extend(ring[1..].iter().rev().cloned());
    out
}

impl CsPolygon {
    /// Validates a full `2m` vertex list in the given labeling; only the
    /// orientation is normalized (keeping `v1` first).
    pub fn from_vertices(vertices: &[Point2]) -> Result<CsPolygon, GeometryError> {
        let n = vertices.len();
        if n % 2 == 1 {
            return Err(GeometryError::OddVertexCount(n));
        }
        if n < 4 {
            return Err(GeometryError::TooFewVertices(n));
        }
        let m = n / 2;
        for i in 0..m {
            if vertices[m + i] != -&vertices[i] {
                return Err(GeometryError::NotCentrallySymmetric { index: i, m });
            }
        }
        let sign = check_strictly_convex(vertices).map_err(GeometryError::NotConvex)?;
        let ring = if sign < 0 {
            reversed_keeping_first(vertices.to_vec())
        } else {
            vertices.to_vec()
        };
        Ok(CsPolygon { half: ring[..m].to_vec() })
    }

    /// Builds the polygon `v1..vm, -v1..-vm`.
    pub fn from_half_vertices(half: &[Point2]) -> Result<CsPolygon, GeometryError> {
        let mut ring = half.to_vec();
        ring.extend(half.iter().map(|v| -v));
        CsPolygon::from_vertices(&ring)
    }

    pub fn m(&self) -> usize {
        self.half.len()
    }

    pub fn half_vertices(&self) -> &[Point2] {
        &self.half
    }

    /// Vertex `v_{i+1}` for 0-based `i`, taken modulo `2m`.
    pub fn vertex(&self, i: usize) -> Point2 {
        let m = self.m();
        let i = i % (2 * m);
        if i < m {
            self.half[i].clone()
        } else {
            -&self.half[i - m]
        }
    }

    pub fn vertices(&self) -> Vec<Point2> {
        (0..2 * self.m()).map(|i| self.vertex(i)).collect()
    }

    /// Edge `G_{i+1} = [v_{i+1}, v_{i+2}]`.
    pub fn edge(&self, i: usize) -> (Point2, Point2) {
        (self.vertex(i), self.vertex(i + 1))
    }

    pub fn edge_vector(&self, i: usize) -> Vec2 {
        let (a, b) = self.edge(i);
        b - a
    }

    pub fn midpoint(&self, i: usize) -> Point2 {
        let (a, b) = self.edge(i);
        a.midpoint(&b)
    }

    pub fn midpoints(&self) -> Vec<Point2> {
        (0..2 * self.m()).map(|i| self.midpoint(i)).collect()
    }

    pub fn area(&self) -> Rational {
        shoelace2(&self.vertices()).abs() * Rational::new(1, 2)
    }

    pub fn locate(&self, p: &Point2) -> Location {
        locate_in_ring(&self.vertices(), p)
    }

    pub fn to_region(&self) -> ConvexRegion {
        ConvexRegion::hull(&self.vertices())
    }

    pub fn lattice_point_counts(&self, lattice: &Lattice2) -> (u64, u64) {
        lattice_point_counts(&self.to_region(), lattice)
    }

    pub fn is_lattice_polygon(&self, lattice: &Lattice2) -> bool {
        self.half.iter().all(|v| lattice.contains(v))
    }

    /// Image under a linear map, keeping the labeling of `v1`.
    pub fn map_linear(&self, map: &AffineMap) -> Result<CsPolygon, GeometryError> {
        if !map.is_linear() {
            return Err(GeometryError::NonzeroTranslation);
        }
        let ring: Vec<Point2> = self.vertices().iter().map(|v| map.apply_linear(v)).collect();
        CsPolygon::from_vertices(&ring)
    }

    pub fn scaled(&self, k: &Rational) -> Result<CsPolygon, GeometryError> {
        let map = AffineMap::linear(k.clone(), Rational::zero(), Rational::zero(), k.clone())?;
        self.map_linear(&map)
    }

    /// Same polygon relabeled so that `v1` is the lexicographically least vertex.
    pub fn canonically_rotated(&self) -> CsPolygon {
        let ring = self.vertices();
        let start = (0..ring.len()).min_by(|&a, &b| ring[a].cmp(&ring[b])).unwrap();
        let m = self.m();
        CsPolygon { half: (0..m).map(|i| ring[(start + i) % ring.len()].clone()).collect() }
    }
}

/// Validates a raw `2m` vertex list and rotates it so that `v1` is the
/// lexicographically least vertex.
pub fn validate_cs_polygon(vertices: &[Point2]) -> Result<CsPolygon, GeometryError> {
    Ok(CsPolygon::from_vertices(vertices)?.canonically_rotated())
}

pub fn area(p: &CsPolygon) -> Rational {
    p.area()
}

/// Applies the same linear map to a polygon and its lattice.
pub fn apply_map(
    map: &AffineMap,
    p: &CsPolygon,
    lattice: &Lattice2,
) -> Result<(CsPolygon, Lattice2), GeometryError> {
    if !map.is_linear() {
        return Err(GeometryError::NonzeroTranslation);
    }
    Ok((p.map_linear(map)?, lattice.transform(map)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::{ConvexityDefect, DefectKind};
    use crate::rational::q;
    use crate::vector::pt;

    fn neg_all(half: &[Point2]) -> Vec<Point2> {
        let mut v = half.to_vec();
        v.extend(half.iter().map(|p| -p));
        v
    }

    #[test]
    fn square() {
        let v = vec![pt(1, 2, 1, 2), pt(-1, 2, 1, 2), pt(-1, 2, -1, 2), pt(1, 2, -1, 2)];
        let s = validate_cs_polygon(&v).unwrap();
        assert_eq!(s.m(), 2);
        assert_eq!(s.vertex(0), pt(-1, 2, -1, 2));
        assert_eq!(s.area(), q(1, 1));
        assert_eq!(s.locate(&Vec2::zero()), Location::Interior);
        assert_eq!(s.locate(&pt(1, 2, 0, 1)), Location::Boundary);
        assert_eq!(s.locate(&Vec2::ints(2, 0)), Location::Exterior);
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        let cw = vec![pt(1, 2, 1, 2), pt(1, 2, -1, 2), pt(-1, 2, -1, 2), pt(-1, 2, 1, 2)];
        let s = CsPolygon::from_vertices(&cw).unwrap();
        assert_eq!(s.vertex(0), pt(1, 2, 1, 2));
        assert_eq!(s.vertex(1), pt(-1, 2, 1, 2));
        assert!(shoelace2(&s.vertices()).is_positive());
    }

    #[test]
    fn validation_errors() {
        let odd = vec![Vec2::ints(1, 0), Vec2::ints(0, 1), Vec2::ints(-1, 0)];
        assert_eq!(validate_cs_polygon(&odd), Err(GeometryError::OddVertexCount(3)));
        let asym = vec![Vec2::ints(1, 0), Vec2::ints(0, 1), Vec2::ints(-1, 0), Vec2::ints(0, -2)];
        assert_eq!(
            validate_cs_polygon(&asym),
            Err(GeometryError::NotCentrallySymmetric { index: 1, m: 2 })
        );
        // alpha = 0 degeneration of octagon family A
        let flat = neg_all(&[pt(0, 1, -3, 2), pt(1, 1, -3, 2), pt(1, 1, -1, 2), pt(1, 1, 1, 2)]);
        assert_eq!(
            validate_cs_polygon(&flat),
            Err(GeometryError::NotConvex(ConvexityDefect {
                vertices: [1, 2, 3],
                kind: DefectKind::Collinear
            }))
        );
    }

    #[test]
    fn d8_area() {
        let half = [pt(1, 2, -3, 2), pt(3, 2, -1, 2), pt(3, 2, 1, 2), pt(1, 2, 3, 2)];
        let d8 = CsPolygon::from_half_vertices(&half).unwrap();
        assert_eq!(d8.area(), q(7, 1));
        assert_eq!(d8.midpoint(0), pt(1, 1, -1, 1));
        assert_eq!(d8.midpoint(4), -d8.midpoint(0));
    }

    #[test]
    fn decagon_area_and_counts() {
        let half: Vec<Point2> =
            [(0, 1), (4, 2), (6, 2), (5, 1), (3, 0)].iter().map(|&(x, y)| Vec2::ints(x, y)).collect();
        let mut ring = half.clone();
        ring.extend(half.iter().map(|p| -p));
        ring.reverse();
        let d = validate_cs_polygon(&ring).unwrap();
        assert_eq!(d.area(), q(18, 1));
        assert_eq!(d.lattice_point_counts(&Lattice2::integer()), (13, 12));
    }

    #[test]
    fn apply_map_rules() {
        let sq = CsPolygon::from_half_vertices(&[pt(1, 2, 1, 2), pt(-1, 2, 1, 2)]).unwrap();
        let z = Lattice2::integer();
        let (p, l) = apply_map(&AffineMap::identity(), &sq, &z).unwrap();
        assert_eq!((p, l), (sq.clone(), z.clone()));
        let shift = AffineMap::new(q(1, 1), q(0, 1), q(0, 1), q(1, 1), Vec2::ints(1, 0)).unwrap();
        assert_eq!(apply_map(&shift, &sq, &z), Err(GeometryError::NonzeroTranslation));
        let flip = AffineMap::unimodular(0, 1, 1, 0).unwrap();
        let (p, l) = apply_map(&flip, &sq, &z).unwrap();
        assert_eq!(p.area(), sq.area());
        assert!(l.is_integer_lattice());
    }
}
