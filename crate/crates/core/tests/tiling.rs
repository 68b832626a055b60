use multifold_core::bolle::{
    alternating_midpoint_sum, check_bolle, find_lattice_edge, tau_star_best_known_bound, tau_star_lower_bound,
    EdgeStatus,
};
use multifold_core::families::{
    decagon_from_vertex, hexagon_tile, octagon_a, octagon_b, parallelogram_tile, region_w, FamilyError,
};
use multifold_core::oracle::{coverage_count, verify_multiplicity};
use multifold_core::{pt, q, CsPolygon, DefectKind, Lattice2, Location, Vec2};

fn d8() -> CsPolygon {
    CsPolygon::from_half_vertices(&[pt(1, 2, -3, 2), pt(3, 2, -1, 2), pt(3, 2, 1, 2), pt(1, 2, 3, 2)]).unwrap()
}

#[test]
fn d8_is_seven_fold() {
    let z = Lattice2::integer();
    let r = check_bolle(&d8(), &z).unwrap();
    assert_eq!(r.multiplicity, Some(7));
    assert!(r.edges.iter().all(|e| e.status == EdgeStatus::MidpointInHalfLattice));
    assert!(verify_multiplicity(&d8(), &z, 7, 200, 0).unwrap().passed());
    assert!(!verify_multiplicity(&d8(), &z, 6, 50, 0).unwrap().passed());
}

#[test]
fn octagon_a_edge_one_is_a_lattice_vector() {
    let z = Lattice2::integer();
    let p = octagon_a(&q(1, 8)).unwrap();
    let r = check_bolle(&p, &z).unwrap();
    assert_eq!(r.edges[0].status, EdgeStatus::LatticeVectorEdge);
    assert_eq!(r.edges[0].witness, Some(pt(1, 2, -3, 2)));
    assert_eq!(find_lattice_edge(&p, &z), Ok(Some(0)));
    assert_eq!(p.area(), q(5, 1));
}

#[test]
fn boundary_parameters_degenerate() {
    for r in [octagon_a(&q(0, 1)), octagon_a(&q(1, 4)), octagon_b(&q(1, 4)), octagon_b(&q(1, 3))] {
        match r {
            Err(FamilyError::ParamOutOfRange { degeneracy: Some(d), .. }) => assert_eq!(d.kind, DefectKind::Collinear),
            other => panic!("expected a collinear degeneracy, got {other:?}"),
        }
    }
    assert!(matches!(octagon_b(&q(1, 2)), Err(FamilyError::ParamOutOfRange { .. })));
}

#[test]
fn fedorov_tiles_are_single() {
    let z = Lattice2::integer();
    let sq = parallelogram_tile(&Vec2::ints(1, 0), &Vec2::ints(0, 1)).unwrap();
    assert_eq!(check_bolle(&sq, &z).unwrap().multiplicity, Some(1));
    // the hexagon tiles once for its own lattice, three times for Z^2
    let h = hexagon_tile(&Vec2::ints(1, 0), &Vec2::ints(1, 1), &Vec2::ints(0, 1)).unwrap();
    assert_eq!(check_bolle(&h, &z).unwrap().multiplicity, Some(3));
    let own = Lattice2::new(Vec2::ints(2, 1), Vec2::ints(1, 2)).unwrap();
    assert_eq!(check_bolle(&h, &own).unwrap().multiplicity, Some(1));
    assert!(verify_multiplicity(&h, &own, 1, 100, 4).unwrap().passed());
}

#[test]
fn decagons_from_w() {
    let z = Lattice2::integer();
    let w = region_w();
    let centre = w.vertex_centroid().unwrap();
    let p = decagon_from_vertex(&centre).unwrap();
    assert_eq!(p.m(), 5);
    assert_eq!(p.area(), q(5, 1));
    assert_eq!(check_bolle(&p, &z).unwrap().multiplicity, Some(5));
    assert_eq!(alternating_midpoint_sum(&p).unwrap(), Vec2::zero());
    for corner in w.vertices() {
        assert_eq!(w.locate(corner), Location::Boundary);
        assert!(decagon_from_vertex(corner).is_err());
    }
    assert!(matches!(decagon_from_vertex(&Vec2::zero()), Err(FamilyError::OutsideW(_))));
}

#[test]
fn coverage_is_periodic() {
    let z = Lattice2::integer();
    let p = octagon_b(&q(7, 24)).unwrap();
    let x = pt(3, 101, 17, 53);
    let base = coverage_count(&p, &z, &x);
    for (a, b) in [(1, 0), (0, 1), (-3, 2), (5, -7)] {
        let shifted = coverage_count(&p, &z, &(&x + &Vec2::ints(a, b)));
        assert_eq!((shifted.open, shifted.closed), (base.open, base.closed));
    }
    assert_eq!(base.open, 5);
}

#[test]
fn known_bounds() {
    assert_eq!(tau_star_lower_bound(4), 3);
    assert_eq!(tau_star_lower_bound(5), 3);
    assert_eq!(tau_star_best_known_bound(5).value, 5);
    assert_eq!(tau_star_best_known_bound(6).value, 6);
    assert_eq!(tau_star_best_known_bound(7).value, 6);
    assert_eq!(tau_star_best_known_bound(10).value, 9);
}
