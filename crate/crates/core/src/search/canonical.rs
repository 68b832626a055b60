//! Canonical representatives of integral polygons under GL(2, Z).
//!
//! Every edge direction is sent to the positive x-axis (both
//! orientations), the remaining shear freedom is fixed by reducing the
//! following edge, and the lexicographically least sorted vertex list wins.

use num_integer::Integer;

use super::SearchError;
use crate::polygon::{validate_cs_polygon, CsPolygon};
use crate::rational::Rational;
use crate::vector::{Point2, Vec2};

type P = (i128, i128);

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

fn to_int(v: &Point2) -> Result<P, SearchError> {
    if !v.is_integral() {
        return Err(SearchError::NonIntegralVertices(v.clone()));
    }
    let x = v.x.to_i64().ok_or_else(|| SearchError::Overflow(v.x.clone()))?;
    let y = v.y.to_i64().ok_or_else(|| SearchError::Overflow(v.y.clone()))?;
    Ok((x as i128, y as i128))
}

fn images(ring: &[P]) -> Vec<Vec<P>> {
    let n = ring.len();
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let (ex, ey) = (ring[(i + 1) % n].0 - ring[i].0, ring[(i + 1) % n].1 - ring[i].1);
        let g = ex.gcd(&ey);
        let (px, py) = (ex / g, ey / g);
        let (_, s, t) = ext_gcd(px, py);
        for eps in [1i128, -1] {
            // rows (s, t) and eps * (-py, px): sends (px, py) to (1, 0)
            let m = |v: &P| (s * v.0 + t * v.1, eps * (-py * v.0 + px * v.1));
            let mut w: Vec<P> = ring.iter().map(m).collect();
            let a = w[(i + 1) % n];
            let b = w[(i + 2) % n];
            let (fx, fy) = (b.0 - a.0, b.1 - a.1);
            let k = if fy > 0 { -fx.div_euclid(fy) } else { fx.div_euclid(-fy) };
            for v in w.iter_mut() {
                v.0 += k * v.1;
            }
            out.push(w);
        }
    }
    out
}

fn sorted(v: &[P]) -> Vec<P> {
    let mut s = v.to_vec();
    s.sort();
    s
}

/// Canonical representative of an integral polygon under unimodular maps,
/// vertex rotation and reflection. Two integral polygons are equivalent
/// exactly when their canonical forms are equal.
pub fn canonical_form(p: &CsPolygon) -> Result<CsPolygon, SearchError> {
    let ring: Vec<P> = p.vertices().iter().map(to_int).collect::<Result<_, _>>()?;
    let reversed: Vec<P> = ring.iter().rev().copied().collect();
    // the shear is fixed by the edge after the chosen one, so both
    // traversal directions are needed for invariance under reflections
    let best = images(&ring)
        .into_iter()
        .chain(images(&reversed))
        .map(|w| (sorted(&w), w))
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("a polygon has edges")
        .1;
    let pts: Vec<Point2> = best
        .iter()
        .map(|&(x, y)| Vec2::ints(x as i64, y as i64))
        .collect();
    Ok(validate_cs_polygon(&pts).expect("unimodular image of a valid polygon"))
}

/// Scales a rational polygon by the least common denominator of its
/// coordinates and returns the canonical form of the result with the factor.
pub fn canonical_form_scaled(p: &CsPolygon) -> Result<(CsPolygon, Rational), SearchError> {
    let mut l = num_bigint::BigInt::from(1);
    for v in p.half_vertices() {
        l = l.lcm(&v.x.denom()).lcm(&v.y.denom());
    }
    let factor = Rational::from(l);
    let scaled = p.scaled(&factor).expect("positive scaling keeps validity");
    Ok((canonical_form(&scaled)?, factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AffineMap;
    use crate::rational::q;

    fn poly(half: &[(i64, i64)]) -> CsPolygon {
        CsPolygon::from_half_vertices(&half.iter().map(|&(x, y)| Vec2::ints(x, y)).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn ext_gcd_identity() {
        for (a, b) in [(3, 5), (-4, 7), (0, -1), (6, 0), (-9, -6)] {
            let (g, s, t) = ext_gcd(a, b);
            assert_eq!(s * a + t * b, g);
            assert_eq!(g, a.gcd(&b));
        }
    }

    #[test]
    fn square_and_shear() {
        let sq = poly(&[(1, 1), (-1, 1)]);
        let sheared = sq.map_linear(&AffineMap::unimodular(1, 1, 0, 1).unwrap()).unwrap();
        assert_eq!(canonical_form(&sq).unwrap(), canonical_form(&sheared).unwrap());
    }

    #[test]
    fn survivor_matches_standard_frame() {
        // doubled midpoints of the decagon survivor, listed clockwise
        let survivor = poly(&[(0, 1), (4, 2), (6, 2), (5, 1), (3, 0)]);
        let standard = poly(&[(0, 2), (2, 2), (3, 1), (3, 0), (2, -1)]);
        assert_eq!(canonical_form(&survivor).unwrap(), canonical_form(&standard).unwrap());
        let reflected = survivor.map_linear(&AffineMap::unimodular(-1, 0, 0, 1).unwrap()).unwrap();
        assert_eq!(canonical_form(&reflected).unwrap(), canonical_form(&survivor).unwrap());
    }

    #[test]
    fn reflection_of_asymmetric_octagon() {
        let p = poly(&[(-1, -12), (7, -12), (9, -4), (7, 4)]);
        for (a, b, c, d) in [(-1, 0, 0, 1), (1, 0, 0, -1), (0, 1, 1, 0), (2, 1, 1, 1), (-3, 2, 1, -1)] {
            let img = p.map_linear(&AffineMap::unimodular(a, b, c, d).unwrap()).unwrap();
            assert_eq!(canonical_form(&img).unwrap(), canonical_form(&p).unwrap());
        }
    }

    #[test]
    fn idempotent_and_rejects_fractions() {
        let h = poly(&[(2, 0), (1, 3), (-1, 2)]);
        let c = canonical_form(&h).unwrap();
        assert_eq!(canonical_form(&c).unwrap(), c);
        let half = CsPolygon::from_half_vertices(&[Vec2::new(q(1, 2), q(1, 2)), Vec2::new(q(-1, 2), q(1, 2))])
            .unwrap();
        assert!(matches!(canonical_form(&half), Err(SearchError::NonIntegralVertices(_))));
        let (c2, f) = canonical_form_scaled(&half).unwrap();
        assert_eq!(f, q(2, 1));
        assert_eq!(c2, canonical_form(&poly(&[(1, 1), (-1, 1)])).unwrap());
    }

    #[test]
    fn different_shapes_differ() {
        // both of area 6
        let a = poly(&[(-1, 1), (-2, 0), (-1, -1)]);
        let b = poly(&[(1, 1), (-2, 1)]);
        assert_eq!(a.area(), b.area());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }
}
