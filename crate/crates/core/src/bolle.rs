//! Bolle's criterion for k-fold lattice tiles and the structural lemmas
//! around it.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::lattice::Lattice2;
use crate::polygon::CsPolygon;
use crate::rational::Rational;
use crate::vector::{Point2, Vec2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeStatus {
    MidpointInHalfLattice,
    LatticeVectorEdge,
    Fail,
}

impl EdgeStatus {
    pub fn label(&self) -> &'static str {
        match self {
            EdgeStatus::MidpointInHalfLattice => "midpoint-in-half-lattice",
            EdgeStatus::LatticeVectorEdge => "lattice-vector",
            EdgeStatus::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeVerdict {
    /// 0-based; edge `G_{index+1}`
    pub index: usize,
    pub status: EdgeStatus,
    pub witness: Option<Point2>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BolleReport {
    pub edges: Vec<EdgeVerdict>,
    pub area_ratio: Rational,
    pub multiplicity: Option<u64>,
}

impl BolleReport {
    pub fn passed(&self) -> bool {
        self.multiplicity.is_some()
    }
}

impl fmt::Display for BolleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.edges {
            write!(f, "G{}: {}", e.index + 1, e.status.label())?;
            if let Some(w) = &e.witness {
                write!(f, " witness={w}")?;
            }
            writeln!(f)?;
        }
        match self.multiplicity {
            Some(k) => writeln!(f, "PASS k={k}"),
            None => writeln!(f, "FAIL"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BolleError {
    #[error("internal contradiction: every edge passes but area/det = {0} is not a positive integer")]
    InternalContradiction(Rational),
    #[error("precondition violated: the polygon does not pass Bolle's criterion")]
    PreconditionViolated,
    #[error("alternating midpoint sum needs odd m, got m = {0}")]
    EvenM(usize),
}

fn big(r: &Rational) -> BigInt {
    debug_assert!(r.is_integer());
    r.numer()
}

/// The point of the half lattice in the open segment `(a, b)` closest to the
/// midpoint (ties broken towards `a`), found by solving the line equation
/// over the integers.
pub fn half_lattice_point_in_open_segment(
    a: &Point2,
    b: &Point2,
    lattice: &Lattice2,
) -> Option<Point2> {
    let two = Rational::from_integer(2);
    // doubled lattice coordinates: the half lattice becomes Z^2
    let (s0, t0) = lattice.coordinates(a);
    let (s1, t1) = lattice.coordinates(b);
    let a2 = Vec2::new(&s0 * &two, &t0 * &two);
    let b2 = Vec2::new(&s1 * &two, &t1 * &two);
    let dir = &b2 - &a2;
    if dir.is_zero() {
        return None;
    }
    let l = dir.x.denom().lcm(&dir.y.denom());
    let lr = Rational::from(l);
    let ix = big(&(&dir.x * &lr));
    let iy = big(&(&dir.y * &lr));
    let g = ix.gcd(&iy);
    let (dx, dy) = (&ix / &g, &iy / &g);
    // dir = span * (dx, dy)
    let span = Rational::from(g) / &lr;
    let d = Vec2::new(Rational::from(dx.clone()), Rational::from(dy.clone()));
    let c = d.cross(&a2);
    if !c.is_integer() {
        return None;
    }
    let ci = big(&c);
    let e = dx.extended_gcd(&dy);
    let (mut s, mut t) = (e.x, e.y);
    if e.gcd.is_negative() {
        s = -s;
        t = -t;
    }
    debug_assert!(e.gcd.abs().is_one());
    let p0 = Vec2::new(Rational::from(-(t * &ci)), Rational::from(s * &ci));
    let sigma0 = (&p0 - &a2).dot(&d) / d.dot(&d);
    let target = &span / &two;
    let j0 = (&target - &sigma0).floor();
    let lo = &sigma0 + &j0;
    let hi = &lo + Rational::one();
    let mut best: Option<Rational> = None;
    for sigma in [lo, hi] {
        if !sigma.is_positive() || sigma >= span {
            continue;
        }
        let better = match &best {
            None => true,
            Some(cur) => (&sigma - &target).abs() < (cur - &target).abs(),
        };
        if better {
            best = Some(sigma);
        }
    }
    let sigma = best?;
    let z = &a2 + &d.scale(&sigma);
    let half = Rational::new(1, 2);
    Some(lattice.point(&(&z.x * &half), &(&z.y * &half)))
}

fn edge_verdict(p: &CsPolygon, lattice: &Lattice2, i: usize) -> EdgeVerdict {
    let (a, b) = p.edge(i);
    let u = a.midpoint(&b);
    if lattice.contains_half(&u) {
        return EdgeVerdict { index: i, status: EdgeStatus::MidpointInHalfLattice, witness: Some(u) };
    }
    if lattice.contains(&(&b - &a)) {
        if let Some(w) = half_lattice_point_in_open_segment(&a, &b, lattice) {
            return EdgeVerdict { index: i, status: EdgeStatus::LatticeVectorEdge, witness: Some(w) };
        }
    }
    EdgeVerdict { index: i, status: EdgeStatus::Fail, witness: None }
}

/// Evaluates the edge conditions on `G_1..G_m`; the remaining edges follow
/// by central symmetry.
pub fn check_bolle(p: &CsPolygon, lattice: &Lattice2) -> Result<BolleReport, BolleError> {
    let edges: Vec<EdgeVerdict> = (0..p.m()).map(|i| edge_verdict(p, lattice, i)).collect();
    let area_ratio = p.area() / lattice.det();
    let all_pass = edges.iter().all(|e| e.status != EdgeStatus::Fail);
    let multiplicity = if all_pass {
        match area_ratio.to_i64() {
            Some(k) if k > 0 => Some(k as u64),
            _ => return Err(BolleError::InternalContradiction(area_ratio)),
        }
    } else {
        None
    };
    Ok(BolleReport { edges, area_ratio, multiplicity })
}

/// Least 0-based edge index whose edge vector lies in the lattice.
pub fn find_lattice_edge(p: &CsPolygon, lattice: &Lattice2) -> Result<Option<usize>, BolleError> {
    if !check_bolle(p, lattice)?.passed() {
        return Err(BolleError::PreconditionViolated);
    }
    Ok((0..p.m()).find(|&i| lattice.contains(&p.edge_vector(i))))
}

/// `sum_{i=1..m} (-1)^i u_i`.
pub fn alternating_midpoint_sum(p: &CsPolygon) -> Result<Vec2, BolleError> {
    let m = p.m();
    if m % 2 == 0 {
        return Err(BolleError::EvenM(m));
    }
    let mut sum = Vec2::zero();
    for i in 0..m {
        let u = p.midpoint(i);
        // 0-based i is edge i+1, so u_1 enters with a minus sign
        sum = if i % 2 == 0 { sum - u } else { sum + u };
    }
    Ok(sum)
}

/// `m - 1` for even `m`, `m - 2` for odd `m`.
pub fn tau_star_lower_bound(m: usize) -> usize {
    assert!(m >= 2, "a centrally symmetric polygon has m >= 2");
    if m % 2 == 0 {
        m - 1
    } else {
        m - 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnownBound {
    pub value: usize,
    pub source: &'static str,
}

/// Sharper lower bounds on the multiplicity known for small `m`.
pub fn tau_star_best_known_bound(m: usize) -> KnownBound {
    let (value, source) = match m {
        2 => (1, "parallelogram"),
        3 => (1, "centrally symmetric hexagon"),
        4 => (5, "no octagonal 2-, 3- or 4-fold lattice tile"),
        5 => (5, "decagon bound"),
        6 => (6, "dodecagon bound"),
        7 => (6, "tetradecagon bound"),
        _ => (tau_star_lower_bound(m), "general bound"),
    };
    KnownBound { value, source }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::vector::pt;

    fn poly(half: &[Point2]) -> CsPolygon {
        CsPolygon::from_half_vertices(half).unwrap()
    }

    fn family_a(alpha: Rational) -> CsPolygon {
        let one = Rational::one();
        poly(&[
            Vec2::new(-&alpha, q(-3, 2)),
            Vec2::new(&one - &alpha, q(-3, 2)),
            Vec2::new(&one + &alpha, q(-1, 2)),
            Vec2::new(&one - &alpha, q(1, 2)),
        ])
    }

    #[test]
    fn unit_square_k1() {
        let sq = poly(&[pt(1, 2, -1, 2), pt(1, 2, 1, 2)]);
        let r = check_bolle(&sq, &Lattice2::integer()).unwrap();
        assert_eq!(r.multiplicity, Some(1));
        assert_eq!(find_lattice_edge(&sq, &Lattice2::integer()), Ok(Some(0)));
    }

    #[test]
    fn d8_k7() {
        let d8 = poly(&[pt(1, 2, -3, 2), pt(3, 2, -1, 2), pt(3, 2, 1, 2), pt(1, 2, 3, 2)]);
        let r = check_bolle(&d8, &Lattice2::integer()).unwrap();
        assert_eq!(r.multiplicity, Some(7));
    }

    #[test]
    fn family_a_report_text() {
        let p = family_a(q(1, 8));
        let r = check_bolle(&p, &Lattice2::integer()).unwrap();
        let text = r.to_string();
        assert!(text.starts_with("G1: lattice-vector witness=(1/2,-3/2)\n"), "{text}");
        assert!(text.contains("G2: midpoint-in-half-lattice witness=(1,-1)\n"));
        assert!(text.ends_with("PASS k=5\n"));
        assert_eq!(find_lattice_edge(&p, &Lattice2::integer()), Ok(Some(0)));
        let scaled = p.scaled(&q(3, 2)).unwrap();
        let r = check_bolle(&scaled, &Lattice2::integer()).unwrap();
        assert!(!r.passed());
        assert!(r.to_string().ends_with("FAIL\n"));
        assert_eq!(
            find_lattice_edge(&scaled, &Lattice2::integer()),
            Err(BolleError::PreconditionViolated)
        );
    }

    #[test]
    fn hexagon_k3() {
        let h = poly(&[Vec2::ints(1, 0), Vec2::ints(0, 1), Vec2::ints(-1, 1)]);
        let r = check_bolle(&h, &Lattice2::integer()).unwrap();
        assert_eq!(r.multiplicity, Some(3));
        assert_eq!(alternating_midpoint_sum(&h), Ok(Vec2::zero()));
    }

    #[test]
    fn witness_search() {
        let z = Lattice2::integer();
        // no half-integer point strictly inside
        assert_eq!(half_lattice_point_in_open_segment(&Vec2::ints(0, 0), &pt(1, 2, 0, 1), &z), None);
        assert_eq!(
            half_lattice_point_in_open_segment(&Vec2::ints(0, 0), &Vec2::ints(1, 0), &z),
            Some(pt(1, 2, 0, 1))
        );
        // line x = 1/3 misses the half lattice entirely
        assert_eq!(half_lattice_point_in_open_segment(&pt(1, 3, 0, 1), &pt(1, 3, 5, 1), &z), None);
        // tie between 1/2 and 1 around the midpoint 3/4 goes towards a
        assert_eq!(
            half_lattice_point_in_open_segment(&pt(1, 4, 1, 1), &pt(5, 4, 1, 1), &z),
            Some(pt(1, 2, 1, 1))
        );
        let skew = Lattice2::new(Vec2::ints(2, 1), Vec2::ints(0, 3)).unwrap();
        let w = half_lattice_point_in_open_segment(&Vec2::zero(), &Vec2::ints(2, 1), &skew).unwrap();
        assert_eq!(w, Vec2::new(q(1, 1), q(1, 2)));
    }

    #[test]
    fn lemma_helpers() {
        assert_eq!(tau_star_lower_bound(4), 3);
        assert_eq!(tau_star_lower_bound(5), 3);
        assert_eq!(tau_star_lower_bound(7), 5);
        assert_eq!(tau_star_best_known_bound(6).value, 6);
        assert_eq!(tau_star_best_known_bound(7).value, 6);
        let sq = poly(&[pt(1, 2, -1, 2), pt(1, 2, 1, 2)]);
        assert_eq!(alternating_midpoint_sum(&sq), Err(BolleError::EvenM(2)));
    }
}
