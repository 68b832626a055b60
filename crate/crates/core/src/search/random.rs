//! Random polygons satisfying Bolle's conditions for the integer lattice.
//!
//! Edges are distinct integer vectors sorted by angle, which makes every
//! midpoint half-integral. For odd `m` the vertices are additionally shifted
//! by an alternating small vector, which keeps the midpoints in place and
//! moves the polygon off the half-integral grid.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SearchError;
use crate::lattice::Lattice2;
use crate::polygon::CsPolygon;
use crate::rational::Rational;
use crate::region::angle_cmp;
use crate::vector::{Point2, Vec2};

const MAX_ATTEMPTS: usize = 10_000;
const SHIFT_DENOMINATOR: i64 = 97;

fn upper(v: Vec2) -> Vec2 {
    if v.y.is_negative() || (v.y.is_zero() && v.x.is_negative()) {
        -v
    } else {
        v
    }
}

fn attempt(m: usize, bound: i64, rng: &mut ChaCha8Rng) -> Option<CsPolygon> {
    let r = (bound / m.div_ceil(2) as i64).max(1);
    let mut edges: Vec<Vec2> = Vec::with_capacity(m);
    let mut tries = 0;
    while edges.len() < m {
        tries += 1;
        if tries > 50 * m {
            return None;
        }
        let e = Vec2::ints(rng.gen_range(-r..=r), rng.gen_range(-r..=r));
        if e.is_zero() {
            continue;
        }
        let e = upper(e);
        if edges.iter().any(|f| f.cross(&e).is_zero()) {
            continue;
        }
        edges.push(e);
    }
    edges.sort_by(angle_cmp);
    let total = edges.iter().fold(Vec2::zero(), |acc, e| acc + e.clone());
    let mut v = total.scale(&Rational::new(-1, 2));
    let mut half: Vec<Point2> = Vec::with_capacity(m);
    for e in &edges {
        half.push(v.clone());
        v = &v + e;
    }
    if m % 2 == 1 {
        let d = Vec2::new(
            Rational::new(rng.gen_range(-8..=8), SHIFT_DENOMINATOR),
            Rational::new(rng.gen_range(-8..=8), SHIFT_DENOMINATOR),
        );
        for (i, h) in half.iter_mut().enumerate() {
            *h = if i % 2 == 0 { &*h - &d } else { &*h + &d };
        }
    }
    let limit = Rational::from_integer(bound);
    if half.iter().any(|h| h.x.abs() > limit || h.y.abs() > limit) {
        return None;
    }
    CsPolygon::from_half_vertices(&half).ok()
}

/// A random centrally symmetric `2m`-gon passing Bolle's conditions for
/// the integer lattice, with all coordinates in `[-bound, bound]`.
/// Deterministic for a given seed.
pub fn random_bolle_polygon(m: usize, bound: i64, seed: u64) -> Result<(CsPolygon, Lattice2), SearchError> {
    if m >= 2 && bound >= 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..MAX_ATTEMPTS {
            if let Some(p) = attempt(m, bound, &mut rng) {
                return Ok((p, Lattice2::integer()));
            }
        }
    }
    Err(SearchError::GenerationExhausted { m, bound, attempts: MAX_ATTEMPTS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bolle::check_bolle;

    #[test]
    fn passes_bolle_and_respects_bound() {
        for (m, bound) in [(2, 3), (3, 4), (4, 6), (5, 8), (6, 10), (7, 12)] {
            for seed in 0..20 {
                let (p, l) = random_bolle_polygon(m, bound, seed).unwrap();
                assert_eq!(p.m(), m);
                let rep = check_bolle(&p, &l).unwrap();
                assert!(rep.passed(), "m={m} seed={seed}: {rep}");
                assert!(rep.multiplicity.unwrap() >= m as u64 / 2);
                for v in p.half_vertices() {
                    assert!(v.x.abs() <= Rational::from_integer(bound));
                    assert!(v.y.abs() <= Rational::from_integer(bound));
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_bolle_polygon(5, 8, 42), random_bolle_polygon(5, 8, 42));
        assert_ne!(random_bolle_polygon(5, 8, 42), random_bolle_polygon(5, 8, 43));
    }

    #[test]
    fn odd_m_leaves_half_grid() {
        let off = (0..20)
            .filter(|&s| {
                let (p, _) = random_bolle_polygon(5, 8, s).unwrap();
                p.half_vertices().iter().any(|v| !(v.x.clone() * Rational::from(2)).is_integer())
            })
            .count();
        assert!(off > 10);
    }

    #[test]
    fn exhausted() {
        assert!(matches!(
            random_bolle_polygon(6, 1, 0),
            Err(SearchError::GenerationExhausted { m: 6, bound: 1, .. })
        ));
        assert!(random_bolle_polygon(1, 5, 0).is_err());
    }
}
