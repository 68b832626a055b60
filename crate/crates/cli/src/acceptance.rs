//! The acceptance suite, shared by `multifold selftest` and the
//! `acceptance` test target. Each criterion returns one line of evidence.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use multifold_core::bolle::{alternating_midpoint_sum, check_bolle, find_lattice_edge};
use multifold_core::families::{
    decagon_from_vertex, hexagon_tile, octagon_a, octagon_b, parallelogram_tile, region_w, FamilyError,
};
use multifold_core::oracle::verify_multiplicity;
use multifold_core::search::canonical::canonical_form_scaled;
use multifold_core::search::decagon::search_decagon_frames;
use multifold_core::search::octagon::{search_octagon_configs, EdgeKind, OctagonFamily};
use multifold_core::search::random_bolle_polygon;
use multifold_core::{
    apply_map, pt, q, AffineMap, ConvexRegion, CsPolygon, DefectKind, Lattice2, Location, Point2, Rational,
    Vec2,
};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: {} ({:.2} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub name: String,
    pub polygon: CsPolygon,
    pub lattice: Lattice2,
    pub k: u64,
}

pub const ALPHAS: [(i64, i64); 5] = [(1, 16), (1, 8), (3, 16), (1, 5), (6, 25)];
pub const BETAS: [(i64, i64); 5] = [(13, 48), (7, 24), (5, 16), (31, 96), (8, 25)];

pub fn d8() -> CsPolygon {
    CsPolygon::from_half_vertices(&[pt(1, 2, -3, 2), pt(3, 2, -1, 2), pt(3, 2, 1, 2), pt(1, 2, 3, 2)])
        .expect("D8 is convex")
}

/// The vertices of W as stated for the decagon family.
pub fn w_quadrilateral() -> [Point2; 4] {
    [pt(-1, 2, 1, 1), pt(-1, 2, 3, 4), pt(-2, 3, 2, 3), pt(-3, 4, 3, 4)]
}

/// Families at sampled parameters, hexagons, parallelograms and D8.
pub fn corpus() -> Vec<CorpusItem> {
    let z = Lattice2::integer();
    let mut items = vec![CorpusItem { name: "D8".into(), polygon: d8(), lattice: z.clone(), k: 7 }];
    for (n, d) in ALPHAS {
        let a = q(n, d);
        items.push(CorpusItem { name: format!("octagon-a {a}"), polygon: octagon_a(&a).expect("in range"), lattice: z.clone(), k: 5 });
    }
    for (n, d) in BETAS {
        let b = q(n, d);
        items.push(CorpusItem { name: format!("octagon-b {b}"), polygon: octagon_b(&b).expect("in range"), lattice: z.clone(), k: 5 });
    }
    for v1 in [pt(-29, 48, 19, 24), pt(-5, 8, 3, 4), pt(-7, 12, 5, 6)] {
        items.push(CorpusItem {
            name: format!("decagon {v1}"),
            polygon: decagon_from_vertex(&v1).expect("interior of W"),
            lattice: z.clone(),
            k: 5,
        });
    }
    let hexagons: [([i64; 2], [i64; 2], [i64; 2], u64); 3] =
        [([1, 0], [0, 1], [-1, 1], 3), ([1, 0], [1, 1], [0, 1], 3), ([-1, 1], [-2, 0], [-1, -1], 6)];
    for (a, b, c, k) in hexagons {
        let (a, b, c) = (Vec2::ints(a[0], a[1]), Vec2::ints(b[0], b[1]), Vec2::ints(c[0], c[1]));
        items.push(CorpusItem {
            name: format!("hexagon {a} {b} {c}"),
            polygon: hexagon_tile(&a, &b, &c).expect("convex"),
            lattice: z.clone(),
            k,
        });
    }
    for seed in [3, 11] {
        let (h, l) = random_bolle_polygon(3, 4, seed).expect("generator");
        let v = h.half_vertices();
        let k = check_bolle(&h, &l).ok().and_then(|r| r.multiplicity).expect("Bolle by construction");
        items.push(CorpusItem {
            name: format!("hexagon {} {} {}", v[0], v[1], v[2]),
            polygon: hexagon_tile(&v[0], &v[1], &v[2]).expect("convex"),
            lattice: l,
            k,
        });
    }
    for (b1, b2, k) in [((1, 0), (0, 1), 1), ((1, 0), (1, 2), 2), ((2, 1), (1, 3), 5)] {
        let (b1, b2) = (Vec2::ints(b1.0, b1.1), Vec2::ints(b2.0, b2.1));
        items.push(CorpusItem {
            name: format!("parallelogram {b1} {b2}"),
            polygon: parallelogram_tile(&b1, &b2).expect("independent"),
            lattice: z.clone(),
            k,
        });
    }
    items
}

fn bolle_k(p: &CsPolygon, l: &Lattice2) -> Option<u64> {
    check_bolle(p, l).ok().filter(|r| r.passed()).and_then(|r| r.multiplicity)
}

fn oracle_ok(p: &CsPolygon, l: &Lattice2, k: u64, samples: usize, seed: u64) -> bool {
    verify_multiplicity(p, l, k as u32, samples, seed).map(|v| v.passed()).unwrap_or(false)
}

fn finish(id: u32, name: &'static str, start: Instant, limit: Option<f64>, ok: bool, detail: String) -> CriterionResult {
    let elapsed = start.elapsed();
    let in_time = limit.map_or(true, |l| elapsed.as_secs_f64() < l);
    let detail = if in_time { detail } else { format!("{detail}; over the {}s limit", limit.unwrap_or(0.0)) };
    CriterionResult { id, name, passed: ok && in_time, detail, elapsed }
}

pub fn criterion_1() -> CriterionResult {
    let start = Instant::now();
    let p = d8();
    let z = Lattice2::integer();
    let report = check_bolle(&p, &z).expect("odd-free input");
    let verdict = verify_multiplicity(&p, &z, 7, 200, 1).expect("generic samples");
    let ok = report.passed() && report.multiplicity == Some(7) && verdict.passed();
    let detail = format!(
        "check: {}; oracle count 7 at {} samples: {}",
        report.to_string().lines().last().unwrap_or(""),
        verdict.samples.len(),
        verdict.passed()
    );
    finish(1, "D8 seven-fold", start, Some(1.0), ok, detail)
}

fn collinear_rejection(r: Result<CsPolygon, FamilyError>) -> bool {
    matches!(
        r,
        Err(FamilyError::ParamOutOfRange { degeneracy: Some(d), .. }) if d.kind == DefectKind::Collinear
    )
}

pub fn criterion_2() -> CriterionResult {
    let start = Instant::now();
    let z = Lattice2::integer();
    let mut bad = Vec::new();
    let params = ALPHAS.iter().map(|&(n, d)| ("alpha", q(n, d), octagon_a(&q(n, d)))).chain(
        BETAS.iter().map(|&(n, d)| ("beta", q(n, d), octagon_b(&q(n, d)))),
    );
    let mut checked = 0;
    for (name, value, built) in params {
        checked += 1;
        let ok = match &built {
            Ok(p) => p.area() == q(5, 1) && bolle_k(p, &z) == Some(5) && oracle_ok(p, &z, 5, 200, 7),
            Err(_) => false,
        };
        if !ok {
            bad.push(format!("{name}={value}"));
        }
    }
    let boundary = [octagon_a(&q(0, 1)), octagon_a(&q(1, 4)), octagon_b(&q(1, 4)), octagon_b(&q(1, 3))];
    let rejected = boundary.into_iter().filter(|r| collinear_rejection(r.clone())).count();
    let ok = bad.is_empty() && rejected == 4;
    let detail = format!(
        "{} of {checked} parameters give area 5, Bolle k=5 and oracle k=5; {rejected}/4 boundary values rejected as collinear{}",
        checked - bad.len(),
        if bad.is_empty() { String::new() } else { format!("; failing: {}", bad.join(", ")) }
    );
    finish(2, "octagon families", start, Some(5.0), ok, detail)
}

pub fn criterion_3() -> CriterionResult {
    let start = Instant::now();
    let w = region_w();
    let got: BTreeSet<Point2> = w.vertices().iter().cloned().collect();
    let want: BTreeSet<Point2> = w_quadrilateral().into_iter().collect();
    let ok = got == want;
    let list: Vec<String> = w.vertices().iter().map(|v| v.to_string()).collect();
    finish(3, "region W", start, None, ok, format!("W = {}", list.join(", ")))
}

pub fn criterion_4() -> CriterionResult {
    let start = Instant::now();
    let z = Lattice2::integer();
    let w = ConvexRegion::from_vertices(&w_quadrilateral()).expect("convex quadrilateral");
    let (n, mut interior, mut successes, mut mismatches, mut failures) = (32, 0, 0, Vec::new(), Vec::new());
    for i in 0..n {
        for j in 0..n {
            let v1 = Vec2::new(q(-3, 4) + Rational::new(i, 4 * (n - 1)), q(2, 3) + Rational::new(j, 3 * (n - 1)));
            let inside = w.locate(&v1) == Location::Interior;
            interior += usize::from(inside);
            match decagon_from_vertex(&v1) {
                Ok(p) => {
                    successes += 1;
                    if !inside {
                        mismatches.push(v1.to_string());
                    }
                    let ok = p.area() == q(5, 1) && bolle_k(&p, &z) == Some(5) && oracle_ok(&p, &z, 5, 100, (i * n + j) as u64);
                    if !ok {
                        failures.push(v1.to_string());
                    }
                }
                Err(_) if inside => mismatches.push(v1.to_string()),
                Err(_) => {}
            }
        }
    }
    let ok = mismatches.is_empty() && failures.is_empty() && successes == interior && successes > 0;
    let detail = format!(
        "{successes} successes, {interior} interior grid points, {} mismatches, {} verification failures",
        mismatches.len(),
        failures.len()
    );
    finish(4, "decagon vertex grid", start, Some(30.0), ok, detail)
}

pub fn criterion_5() -> CriterionResult {
    let start = Instant::now();
    let r = search_decagon_frames(19);
    let quads: BTreeSet<(i64, i64, i64, i64)> =
        r.branch("2.1.2").map(|b| b.candidates.iter().map(|c| c.gaps).collect()).unwrap_or_default();
    let want: BTreeSet<(i64, i64, i64, i64)> = [(1, 1, 3, 1), (1, 1, 4, 1), (1, 1, 5, 1), (1, 1, 5, 2)].into();
    let pruned = r.pruned_lines();
    let has = |label: &str, area: &str| pruned.iter().any(|l| l.contains(label) && l.contains(&format!("area {area} ")));
    let (a25, a22) = (has("branch 2.1.3 ", "25"), has("branch 2.1.7 ", "22"));
    let ok = r.classes.len() == 1 && r.classes[0].area == q(18, 1) && quads == want && a25 && a22 && r.window_ok;
    let detail = format!(
        "{} class(es), area {}; 2.1.2 quadruples {:?}; area 25 pruned: {a25}; area 22 pruned: {a22}",
        r.classes.len(),
        r.classes.first().map(|c| c.area.to_string()).unwrap_or_default(),
        quads
    );
    finish(5, "decagon frame enumeration", start, Some(60.0), ok, detail)
}

pub fn criterion_6() -> CriterionResult {
    let start = Instant::now();
    let r = search_octagon_configs();
    let mids = |a: [(i64, i64, i64, i64); 3]| a.map(|(xn, xd, yn, yd)| pt(xn, xd, yn, yd));
    let expect_a = mids([(1, 1, -1, 1), (1, 1, 0, 1), (1, 2, 1, 1)]);
    let expect_b = mids([(1, 1, -1, 1), (1, 2, 1, 2), (0, 1, 3, 2)]);
    let class_ok = |fam: OctagonFamily, want: &[Point2; 3]| {
        r.classes.iter().any(|c| {
            let rep = &c.representative;
            c.family == Some(fam)
                && rep.midpoints() == *want
                && rep.base() == Vec2::ints(1, 0)
                && c.spot_checks.len() == 5
                && c.spot_checks.iter().all(|(_, k)| *k == Some(5))
        })
    };
    let a_lattice_edge = r.classes.iter().any(|c| {
        c.family == Some(OctagonFamily::A)
            && c.representative.edges.iter().all(|e| matches!(e, EdgeKind::Midpoint(_)))
            && !Lattice2::integer().contains_half(&c.representative.sample_polygon().midpoint(0))
    });
    let ok = r.classes.len() == 2
        && class_ok(OctagonFamily::A, &expect_a)
        && class_ok(OctagonFamily::B, &expect_b)
        && a_lattice_edge
        && r.window_ok
        && r.all_consistent();
    let reps: Vec<String> = r.classes.iter().map(|c| c.representative.to_string()).collect();
    let detail = format!("{} classes: {}; branch bounds consistent: {}", r.classes.len(), reps.join(" | "), r.all_consistent());
    finish(6, "octagon configuration enumeration", start, Some(60.0), ok, detail)
}

const NUDGES: [(i64, i64); 8] = [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, 1), (1, -1), (-1, -1)];

/// Up to `n` valid polygons with one vertex pair moved by 1/100.
pub fn near_misses(p: &CsPolygon, n: usize) -> Vec<CsPolygon> {
    let m = p.m();
    let mut out = Vec::new();
    for j in 0..8 * m {
        if out.len() == n {
            break;
        }
        let (dx, dy) = NUDGES[(j / m + j) % 8];
        let mut half = p.half_vertices().to_vec();
        half[j % m] = &half[j % m] + &Vec2::new(Rational::new(dx, 100), Rational::new(dy, 100));
        if let Ok(c) = CsPolygon::from_half_vertices(&half) {
            out.push(c);
        }
    }
    out
}

pub fn criterion_7() -> CriterionResult {
    let start = Instant::now();
    let (mut compared, mut disagreements, mut bolle_pass) = (0, Vec::new(), 0);
    for item in corpus() {
        let mut polys = vec![item.polygon.clone()];
        polys.extend(near_misses(&item.polygon, 10));
        for (idx, p) in polys.iter().enumerate() {
            let report = check_bolle(p, &item.lattice).expect("valid");
            let k = match report.multiplicity {
                Some(k) if report.passed() => k,
                _ => {
                    let ratio = &report.area_ratio;
                    (ratio + q(1, 2)).floor().to_i64().unwrap_or(1).max(1) as u64
                }
            };
            let oracle = oracle_ok(p, &item.lattice, k, 100, idx as u64);
            compared += 1;
            bolle_pass += usize::from(report.passed());
            if oracle != report.passed() {
                disagreements.push(format!("{} #{idx}", item.name));
            }
        }
    }
    let ok = disagreements.is_empty();
    let detail = format!(
        "{compared} polygons ({bolle_pass} Bolle passes), {} disagreements{}",
        disagreements.len(),
        if ok { String::new() } else { format!(": {}", disagreements.join(", ")) }
    );
    finish(7, "oracle and Bolle agree", start, None, ok, detail)
}

pub fn criterion_8() -> CriterionResult {
    let start = Instant::now();
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    for (m, bound, least) in [(5usize, 8i64, 5u64), (6, 10, 6)] {
        for seed in 0..10_000u64 {
            match random_bolle_polygon(m, bound, seed) {
                Ok((p, l)) => {
                    checked += 1;
                    match bolle_k(&p, &l) {
                        Some(k) if k >= least => {}
                        other => counterexamples.push(format!("m={m} seed={seed} k={other:?}")),
                    }
                }
                Err(e) => counterexamples.push(format!("m={m} seed={seed}: {e}")),
            }
        }
    }
    let ok = counterexamples.is_empty() && checked == 20_000;
    let detail = format!(
        "{checked} random polygons (m=5 and m=6), {} counterexamples{}",
        counterexamples.len(),
        counterexamples.first().map(|c| format!(", first {c}")).unwrap_or_default()
    );
    finish(8, "random lower bounds", start, Some(120.0), ok, detail)
}

/// A random product of elementary integer matrices.
pub fn random_unimodular(rng: &mut ChaCha8Rng) -> AffineMap {
    let (mut a, mut b, mut c, mut d) = (1i64, 0i64, 0i64, 1i64);
    for _ in 0..4 {
        let k = rng.gen_range(-2..=2);
        match rng.gen_range(0..4) {
            0 => (a, b) = (a + k * c, b + k * d),
            1 => (c, d) = (c + k * a, d + k * b),
            2 => (a, b, c, d) = (c, d, a, b),
            _ => (a, b) = (-a, -b),
        }
    }
    AffineMap::unimodular(a, b, c, d).expect("elementary steps keep det = +-1")
}

pub fn criterion_9() -> CriterionResult {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let maps: Vec<AffineMap> = (0..100).map(|_| random_unimodular(&mut rng)).collect();
    let mut changed = Vec::new();
    let items = corpus();
    for item in &items {
        let k0 = bolle_k(&item.polygon, &item.lattice);
        let c0 = canonical_form_scaled(&item.polygon).expect("rational").0;
        for (i, map) in maps.iter().enumerate() {
            let (p, l) = apply_map(map, &item.polygon, &item.lattice).expect("linear map");
            let k = bolle_k(&p, &l);
            let oracle = k.is_some_and(|k| oracle_ok(&p, &l, k, 16, i as u64));
            let same_canon = if l.is_integer_lattice() {
                canonical_form_scaled(&p).expect("rational").0 == c0
            } else {
                true
            };
            if k != k0 || !oracle || !same_canon {
                changed.push(format!("{} map {i}", item.name));
            }
        }
    }
    let ok = changed.is_empty();
    let detail = format!(
        "{} polygons x {} maps; {} changes{}",
        items.len(),
        maps.len(),
        changed.len(),
        changed.first().map(|c| format!(", first {c}")).unwrap_or_default()
    );
    finish(9, "unimodular invariance", start, None, ok, detail)
}

/// Interior and boundary integer points by direct point location.
pub fn brute_force_counts(p: &CsPolygon) -> (u64, u64) {
    let r = p.half_vertices().iter().flat_map(|v| [v.x.abs(), v.y.abs()]).max().expect("nonempty");
    let r = r.ceil().to_i64().expect("small polygon");
    let (mut inside, mut boundary) = (0, 0);
    for x in -r..=r {
        for y in -r..=r {
            match p.locate(&Vec2::ints(x, y)) {
                Location::Interior => inside += 1,
                Location::Boundary => boundary += 1,
                Location::Exterior => {}
            }
        }
    }
    (inside, boundary)
}

pub fn criterion_10() -> CriterionResult {
    let start = Instant::now();
    let z = Lattice2::integer();
    let mut polys: Vec<(CsPolygon, Lattice2)> = corpus().into_iter().map(|i| (i.polygon, i.lattice)).collect();
    for m in 2..=7 {
        for seed in 0..20 {
            polys.push(random_bolle_polygon(m, 2 * m as i64 + 2, seed).expect("generator"));
        }
    }
    let (mut odd, mut even, mut pick) = (0, 0, 0);
    let mut failures = Vec::new();
    for (p, l) in &polys {
        if p.m() % 2 == 1 {
            odd += 1;
            if alternating_midpoint_sum(p).map(|s| !s.is_zero()).unwrap_or(true) {
                failures.push(format!("midpoint sum of {:?}", p.half_vertices()));
            }
        } else if check_bolle(p, l).map(|r| r.passed()).unwrap_or(false) {
            even += 1;
            if !matches!(find_lattice_edge(p, l), Ok(Some(_))) {
                failures.push(format!("no lattice edge in {:?}", p.half_vertices()));
            }
        }
        // Pick on the polygon itself or on its double, whichever is integral
        let two = Rational::from(2);
        let lattice_version = if p.is_lattice_polygon(&z) {
            Some(p.clone())
        } else {
            p.scaled(&two).ok().filter(|d| d.is_lattice_polygon(&z))
        };
        if let Some(d) = lattice_version {
            pick += 1;
            let (i, b) = brute_force_counts(&d);
            let pick_area = Rational::from(i as i64) + Rational::new(b as i64, 2) - Rational::one();
            if pick_area != d.area() || d.lattice_point_counts(&z) != (i, b) {
                failures.push(format!("Pick fails on {:?}", d.half_vertices()));
            }
        }
    }
    let ok = failures.is_empty() && odd > 0 && even > 0 && pick > 0;
    let detail = format!(
        "{odd} odd-m midpoint sums, {even} even-m lattice edges, {pick} Pick identities; {} failures",
        failures.len()
    );
    finish(10, "structural identities", start, None, ok, detail)
}

pub fn run_one(id: u32) -> Option<CriterionResult> {
    let f: fn() -> CriterionResult = match id {
        1 => criterion_1,
        2 => criterion_2,
        3 => criterion_3,
        4 => criterion_4,
        5 => criterion_5,
        6 => criterion_6,
        7 => criterion_7,
        8 => criterion_8,
        9 => criterion_9,
        10 => criterion_10,
        _ => return None,
    };
    Some(f())
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=10).filter_map(run_one).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_multiplicities_are_certified() {
        for item in corpus() {
            assert_eq!(bolle_k(&item.polygon, &item.lattice), Some(item.k), "{}", item.name);
        }
    }

    #[test]
    fn near_misses_are_distinct_and_valid() {
        for item in corpus() {
            let nm = near_misses(&item.polygon, 10);
            assert_eq!(nm.len(), 10, "{}", item.name);
            assert!(nm.iter().all(|p| *p != item.polygon && p.m() == item.polygon.m()));
        }
    }

    #[test]
    fn random_maps_are_unimodular() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            assert!(random_unimodular(&mut rng).is_unimodular());
        }
    }
}
