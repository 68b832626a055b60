//! Brute-force coverage counting: how many lattice translates of a polygon
//! contain a given point.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::lattice::Lattice2;
use crate::polygon::CsPolygon;
use crate::rational::Rational;
use crate::region::{bounding_box, shoelace2};
use crate::vector::{Point2, Vec2};

/// Denominator of the random sample coordinates (a prime).
pub const SAMPLE_DENOMINATOR: i64 = 9973;

/// Perturbation attempts before a point is declared unresolvable.
pub const MAX_PERTURBATIONS: i64 = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageSample {
    pub point: Point2,
    /// translates containing the point in their interior
    pub open: u32,
    /// translates containing the point at all
    pub closed: u32,
}

impl CoverageSample {
    pub fn is_generic(&self) -> bool {
        self.open == self.closed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("no generic point found near {0} after {MAX_PERTURBATIONS} perturbations")]
    NonGenericUnresolvable(Point2),
    #[error("need at least one sample")]
    NoSamples,
}

/// The polygon in lattice coordinates, counterclockwise, with its edges.
struct Counter<'a> {
    lattice: &'a Lattice2,
    ring: Vec<Vec2>,
    edges: Vec<Vec2>,
    lo: Vec2,
    hi: Vec2,
}

impl<'a> Counter<'a> {
    fn new(p: &CsPolygon, lattice: &'a Lattice2) -> Counter<'a> {
        let mut ring: Vec<Vec2> = p
            .vertices()
            .iter()
            .map(|v| {
                let (s, t) = lattice.coordinates(v);
                Vec2::new(s, t)
            })
            .collect();
        if shoelace2(&ring).is_negative() {
            ring.reverse();
        }
        let n = ring.len();
        let edges = (0..n).map(|i| &ring[(i + 1) % n] - &ring[i]).collect();
        let (lo, hi) = bounding_box(&ring).expect("nonempty polygon");
        Counter { lattice, ring, edges, lo, hi }
    }

    fn count_coords(&self, q: &Vec2) -> (u32, u32) {
        let one = Rational::one();
        let i0 = (&q.x - &self.hi.x).ceil() - &one;
        let i1 = (&q.x - &self.lo.x).floor() + &one;
        let j0 = (&q.y - &self.hi.y).ceil() - &one;
        let j1 = (&q.y - &self.lo.y).floor() + &one;
        let (i0, i1) = (i0.to_i64().unwrap(), i1.to_i64().unwrap());
        let (j0, j1) = (j0.to_i64().unwrap(), j1.to_i64().unwrap());
        // side of q - lambda w.r.t. edge k is base[k] - cross(e_k, lambda)
        let base: Vec<Rational> = self
            .edges
            .iter()
            .zip(&self.ring)
            .map(|(e, v)| e.cross(&(q - v)))
            .collect();
        let (mut open, mut closed) = (0, 0);
        for i in i0..=i1 {
            for j in j0..=j1 {
                let lambda = Vec2::ints(i, j);
                let mut inside = true;
                let mut strict = true;
                for (e, b) in self.edges.iter().zip(&base) {
                    let s = (b - e.cross(&lambda)).signum();
                    if s < 0 {
                        inside = false;
                        break;
                    }
                    if s == 0 {
                        strict = false;
                    }
                }
                if inside {
                    closed += 1;
                    if strict {
                        open += 1;
                    }
                }
            }
        }
        (open, closed)
    }

    fn count(&self, p: &Point2) -> CoverageSample {
        let (s, t) = self.lattice.coordinates(p);
        let (open, closed) = self.count_coords(&Vec2::new(s, t));
        CoverageSample { point: p.clone(), open, closed }
    }

    fn generic(&self, p: &Point2) -> Result<CoverageSample, OracleError> {
        let (s, t) = self.lattice.coordinates(p);
        let d2 = SAMPLE_DENOMINATOR * SAMPLE_DENOMINATOR;
        for j in 0..=MAX_PERTURBATIONS {
            let q = Vec2::new(&s + Rational::new(j, d2), &t + Rational::new(j * j + j.signum(), d2));
            let (open, closed) = self.count_coords(&q);
            if open == closed {
                let point = self.lattice.point(&q.x, &q.y);
                return Ok(CoverageSample { point, open, closed });
            }
        }
        Err(OracleError::NonGenericUnresolvable(p.clone()))
    }
}

/// Counts the translates `P + lambda`, `lambda` in the lattice, containing `p`.
pub fn coverage_count(p: &CsPolygon, lattice: &Lattice2, point: &Point2) -> CoverageSample {
    Counter::new(p, lattice).count(point)
}

/// Count at the first generic point of the deterministic perturbation
/// sequence starting at `point` (the point itself when it is generic).
pub fn generic_coverage(
    p: &CsPolygon,
    lattice: &Lattice2,
    point: &Point2,
) -> Result<CoverageSample, OracleError> {
    Counter::new(p, lattice).generic(point)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleOrigin {
    Random,
    /// just inside or outside a vertex of the polygon
    VertexProbe,
    /// just inside or outside an edge midpoint
    EdgeProbe,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSample {
    pub origin: SampleOrigin,
    pub sample: CoverageSample,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryCheck {
    pub sample: CoverageSample,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleFailure {
    /// a generic sample whose count differs from k
    Count(CoverageSample),
    /// a boundary point violating closed >= k or open <= k
    Boundary(CoverageSample),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVerdict {
    pub k: u32,
    pub samples: Vec<OracleSample>,
    pub boundary: Vec<BoundaryCheck>,
    pub failure: Option<OracleFailure>,
}

impl MultiplicityVerdict {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn random_points(lattice: &Lattice2, n: usize, seed: u64) -> Vec<Point2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let a = rng.gen_range(0..SAMPLE_DENOMINATOR);
            let b = rng.gen_range(0..SAMPLE_DENOMINATOR);
            lattice.point(
                &Rational::new(a, SAMPLE_DENOMINATOR),
                &Rational::new(b, SAMPLE_DENOMINATOR),
            )
        })
        .collect()
}

fn radial_probes(points: &[Point2]) -> Vec<Point2> {
    let inward = Rational::new(SAMPLE_DENOMINATOR - 1, SAMPLE_DENOMINATOR);
    let outward = Rational::new(SAMPLE_DENOMINATOR + 1, SAMPLE_DENOMINATOR);
    points.iter().flat_map(|v| [v.scale(&inward), v.scale(&outward)]).collect()
}

/// Checks that `P + lattice` covers generic points exactly `k` times.
///
/// Samples are `n_samples` seeded random points of the fundamental cell
/// plus radial probes next to every vertex and edge midpoint; boundary points (the first `m`
/// vertices and midpoints) are checked against the packing and covering
/// inequalities.
pub fn verify_multiplicity(
    p: &CsPolygon,
    lattice: &Lattice2,
    k: u32,
    n_samples: usize,
    seed: u64,
) -> Result<MultiplicityVerdict, OracleError> {
    if n_samples == 0 {
        return Err(OracleError::NoSamples);
    }
    let counter = Counter::new(p, lattice);
    let mut points: Vec<(SampleOrigin, Point2)> = random_points(lattice, n_samples, seed)
        .into_iter()
        .map(|x| (SampleOrigin::Random, x))
        .collect();
    points.extend(radial_probes(&p.vertices()).into_iter().map(|x| (SampleOrigin::VertexProbe, x)));
    // thin gaps or overlaps along an edge show up right next to its midpoint
    points.extend(radial_probes(&p.midpoints()).into_iter().map(|x| (SampleOrigin::EdgeProbe, x)));
    let samples: Vec<OracleSample> = points
        .par_iter()
        .map(|(origin, x)| counter.generic(x).map(|sample| OracleSample { origin: *origin, sample }))
        .collect::<Result<_, _>>()?;

    let mut boundary_points: Vec<Point2> = p.half_vertices().to_vec();
    boundary_points.extend((0..p.m()).map(|i| p.midpoint(i)));
    let boundary: Vec<BoundaryCheck> = boundary_points
        .par_iter()
        .map(|x| {
            let sample = counter.count(x);
            let ok = sample.closed >= k && sample.open <= k;
            BoundaryCheck { sample, ok }
        })
        .collect();

    let failure = samples
        .iter()
        .find(|s| s.sample.open != k)
        .map(|s| OracleFailure::Count(s.sample.clone()))
        .or_else(|| {
            boundary
                .iter()
                .find(|b| !b.ok)
                .map(|b| OracleFailure::Boundary(b.sample.clone()))
        });
    Ok(MultiplicityVerdict { k, samples, boundary, failure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::pt;

    fn poly(half: &[Point2]) -> CsPolygon {
        CsPolygon::from_half_vertices(half).unwrap()
    }

    fn square() -> CsPolygon {
        poly(&[pt(1, 2, -1, 2), pt(1, 2, 1, 2)])
    }

    #[test]
    fn square_counts() {
        let z = Lattice2::integer();
        let s = coverage_count(&square(), &z, &pt(1, 3, 1, 3));
        assert_eq!((s.open, s.closed), (1, 1));
        let s = coverage_count(&square(), &z, &pt(1, 2, 0, 1));
        assert_eq!((s.open, s.closed), (0, 2));
        assert!(!s.is_generic());
        let s = coverage_count(&square(), &z, &pt(1, 2, 1, 2));
        assert_eq!((s.open, s.closed), (0, 4));
    }

    #[test]
    fn d8_and_hexagon() {
        let z = Lattice2::integer();
        let d8 = poly(&[pt(1, 2, -3, 2), pt(3, 2, -1, 2), pt(3, 2, 1, 2), pt(1, 2, 3, 2)]);
        let s = coverage_count(&d8, &z, &pt(1, 7, 2, 11));
        assert_eq!((s.open, s.closed), (7, 7));
        let h = poly(&[Vec2::ints(1, 0), Vec2::ints(0, 1), Vec2::ints(-1, 1)]);
        let s = coverage_count(&h, &z, &pt(1, 5, 1, 7));
        assert_eq!((s.open, s.closed), (3, 3));
    }

    #[test]
    fn verdicts() {
        let z = Lattice2::integer();
        let v = verify_multiplicity(&square(), &z, 1, 50, 3).unwrap();
        assert!(v.passed());
        assert_eq!(v.samples.len(), 50 + 8 + 8);
        assert_eq!(v.boundary.len(), 4);
        let v = verify_multiplicity(&square(), &z, 2, 50, 3).unwrap();
        match v.failure {
            Some(OracleFailure::Count(s)) => assert_eq!(s.open, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(verify_multiplicity(&square(), &z, 1, 0, 3), Err(OracleError::NoSamples));
    }

    #[test]
    fn perturbation_leaves_boundary() {
        let z = Lattice2::integer();
        let s = generic_coverage(&square(), &z, &pt(1, 2, 0, 1)).unwrap();
        assert!(s.is_generic());
        assert_eq!(s.open, 1);
        assert_ne!(s.point, pt(1, 2, 0, 1));
    }

    #[test]
    fn deterministic_per_seed() {
        let z = Lattice2::integer();
        let a = verify_multiplicity(&square(), &z, 1, 20, 9).unwrap();
        let b = verify_multiplicity(&square(), &z, 1, 20, 9).unwrap();
        assert_eq!(a, b);
        let c = verify_multiplicity(&square(), &z, 1, 20, 10).unwrap();
        assert_ne!(a.samples, c.samples);
    }

    #[test]
    fn edge_probes_find_thin_gaps() {
        // area 99/100: a gap strip 1/100 thick along the top and bottom edges
        let z = Lattice2::integer();
        let p = poly(&[pt(1, 2, 49, 100), pt(-1, 2, 1, 2)]);
        let v = verify_multiplicity(&p, &z, 1, 1, 3).unwrap();
        let failed = v.samples.iter().find(|s| s.sample.open != 1).expect("a probe lands in the gap");
        assert_eq!(failed.origin, SampleOrigin::EdgeProbe);
        assert!(!v.passed());
    }
}
