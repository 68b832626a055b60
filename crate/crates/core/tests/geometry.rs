use num_bigint::BigInt;
use num_rational::BigRational;

use multifold_core::region::shoelace2;
use multifold_core::{
    clip, lattice_point_counts, pt, q, AffineMap, ConvexRegion, CsPolygon, GeometryError, Lattice2, Location, Rational,
    Vec2,
};

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn as_big(r: &Rational) -> BigRational {
    BigRational::new(r.numer(), r.denom())
}

#[test]
fn arithmetic_matches_bigrational_past_i64() {
    let mut a = q(i64::MAX / 3, 7);
    let mut oracle = big(i64::MAX / 3, 7);
    for step in 1..40i64 {
        let b = q(step * 1_000_003 + 1, step + 2);
        let bb = big(step * 1_000_003 + 1, step + 2);
        a = match step % 4 {
            0 => &a + &b,
            1 => &a * &b,
            2 => &a - &b,
            _ => &a / &b,
        };
        oracle = match step % 4 {
            0 => &oracle + &bb,
            1 => &oracle * &bb,
            2 => &oracle - &bb,
            _ => &oracle / &bb,
        };
        assert_eq!(as_big(&a), oracle, "step {step}");
    }
    // a value that shrinks back fits the small form again and compares equal
    let back = &(&a * &q(0, 1)) + &q(3, 4);
    assert_eq!(back, q(3, 4));
    assert_eq!(back.to_i64_pair(), Some((3, 4)));
}

#[test]
fn parse_and_display() {
    assert_eq!("-3/2".parse::<Rational>().unwrap(), q(-3, 2));
    assert_eq!("6/-4".parse::<Rational>().unwrap(), q(-3, 2));
    assert_eq!(" 7 ".parse::<Rational>().unwrap(), q(7, 1));
    assert!("1/0".parse::<Rational>().is_err());
    assert!("".parse::<Rational>().is_err());
    assert_eq!(q(10, -4).to_string(), "-5/2");
    assert_eq!(q(8, 4).to_string(), "2");
}

#[test]
fn clip_of_two_squares() {
    let a = ConvexRegion::rectangle(&q(0, 1), &q(0, 1), &q(2, 1), &q(2, 1));
    let b = a.translate(&pt(1, 1, 1, 2));
    let c = clip(&[a.clone(), b]);
    assert_eq!(c.area(), q(3, 2));
    let far = a.translate(&Vec2::ints(5, 0));
    assert!(clip(&[a.clone(), far]).area().is_zero());
    // touching along an edge leaves a degenerate region
    let touch = a.translate(&Vec2::ints(2, 0));
    assert!(clip(&[a, touch]).is_degenerate());
}

#[test]
fn locate_on_d8() {
    let d8 = CsPolygon::from_half_vertices(&[pt(1, 2, -3, 2), pt(3, 2, -1, 2), pt(3, 2, 1, 2), pt(1, 2, 3, 2)]).unwrap();
    assert_eq!(d8.area(), q(7, 1));
    assert_eq!(d8.locate(&Vec2::zero()), Location::Interior);
    assert_eq!(d8.locate(&pt(3, 2, 0, 1)), Location::Boundary);
    assert_eq!(d8.locate(&pt(3, 2, 1, 2)), Location::Boundary);
    assert_eq!(d8.locate(&Vec2::ints(2, 0)), Location::Exterior);
    assert_eq!(d8.locate(&Vec2::ints(1, 1)), Location::Boundary);
    assert_eq!(d8.locate(&pt(1, 1, 49, 50)), Location::Interior);
}

fn brute_counts(region: &ConvexRegion, r: i64) -> (u64, u64) {
    let mut counts = (0, 0);
    for x in -r..=r {
        for y in -r..=r {
            match region.locate(&Vec2::ints(x, y)) {
                Location::Interior => counts.0 += 1,
                Location::Boundary => counts.1 += 1,
                Location::Exterior => {}
            }
        }
    }
    counts
}

#[test]
fn pick_on_lattice_polygons() {
    let z = Lattice2::integer();
    let rings: [&[(i64, i64)]; 4] = [
        &[(0, 0), (4, 0), (4, 3), (0, 3)],
        &[(0, 0), (5, 1), (2, 4)],
        &[(-2, -1), (1, -3), (3, 0), (2, 2), (-1, 3)],
        &[(0, 0), (7, 3), (1, 1)],
    ];
    for ring in rings {
        let pts: Vec<Vec2> = ring.iter().map(|&(x, y)| Vec2::ints(x, y)).collect();
        let region = ConvexRegion::from_vertices(&pts).unwrap();
        let (i, b) = brute_counts(&region, 8);
        assert_eq!(lattice_point_counts(&region, &z), (i, b), "{ring:?}");
        let pick = q(i as i64, 1) + q(b as i64, 2) - q(1, 1);
        assert_eq!(pick, region.area(), "{ring:?}");
        assert_eq!(shoelace2(&pts).abs(), region.area() * q(2, 1));
    }
}

#[test]
fn polygon_validation_errors() {
    assert_eq!(
        CsPolygon::from_vertices(&[Vec2::ints(1, 0), Vec2::ints(0, 1), Vec2::ints(-1, 0)]),
        Err(GeometryError::OddVertexCount(3))
    );
    let skew = [Vec2::ints(1, 0), Vec2::ints(0, 1), Vec2::ints(-1, 0), Vec2::ints(1, -1)];
    assert!(matches!(CsPolygon::from_vertices(&skew), Err(GeometryError::NotCentrallySymmetric { .. })));
    let flat = [Vec2::ints(1, 0), Vec2::ints(1, 1), Vec2::ints(1, 2)];
    assert!(matches!(CsPolygon::from_half_vertices(&flat), Err(GeometryError::NotConvex(_))));
}

#[test]
fn unimodular_maps_and_lattices() {
    let shear = AffineMap::unimodular(1, 3, 0, 1).unwrap();
    assert!(AffineMap::unimodular(2, 0, 0, 1).is_err());
    let z = Lattice2::integer();
    let mapped = z.transform(&shear);
    assert!(mapped.same_lattice(&z));
    let l = Lattice2::new(Vec2::ints(2, 0), Vec2::ints(1, 1)).unwrap();
    assert_eq!(l.det(), &q(2, 1));
    assert!(l.contains(&Vec2::ints(3, 1)));
    assert!(!l.contains(&Vec2::ints(1, 0)));
    assert!(l.contains_half(&pt(1, 2, 1, 2)));
    let back = shear.inverse().compose(&shear);
    assert_eq!(back.apply(&pt(2, 3, -5, 7)), pt(2, 3, -5, 7));
}
