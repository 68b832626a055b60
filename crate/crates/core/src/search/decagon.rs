//! Enumeration of normalized lattice decagon frames.
//!
//! A frame is the decagon `Q` whose vertices are the doubled edge midpoints
//! `u'_1..u'_10` of a five-fold decagon tile of `Z^2`. Its vertices obey the
//! alternating relation `u'_1 - u'_2 + u'_3 - u'_4 + u'_5 = 0`, and `Q` has
//! area at most 19 for a five-fold tile.
//!
//! Two enumerations are run. The general one fixes `u'_1 = (0, g)` and
//! bounds every other vertex through triangle and parallelogram areas
//! inside `Q`, so it is complete by construction. The replay follows the
//! classical parametrization by the gaps `(p1, q1) = u'_3 - u'_4`,
//! `(p2, q2) = u'_5 - u'_6` and the step `u'_3 - u'_2 = (a, b)`, and reports
//! which branches of the hand proof (labelled `2.1.1` to `2.1.19`) are empty
//! and which are excluded only by area.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use super::canonical::canonical_form;
use crate::polygon::CsPolygon;
use crate::rational::Rational;
use crate::vector::{Point2, Vec2};

type I = (i64, i64);

fn cross(a: I, b: I) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn sub(a: I, b: I) -> I {
    (a.0 - b.0, a.1 - b.1)
}

fn ring(u: &[I; 5]) -> [I; 10] {
    let mut r = [(0, 0); 10];
    for i in 0..5 {
        r[i] = u[i];
        r[i + 5] = (-u[i].0, -u[i].1);
    }
    r
}

fn area2(r: &[I]) -> i64 {
    let n = r.len();
    (0..n).map(|i| cross(r[i], r[(i + 1) % n])).sum::<i64>().abs()
}

fn half(v: I) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

fn before(a: I, b: I) -> bool {
    let (ha, hb) = (half(a), half(b));
    ha < hb || (ha == hb && cross(a, b) > 0)
}

/// Strictly convex with a single winding, in either orientation.
fn strictly_convex(r: &[I]) -> bool {
    let n = r.len();
    let edges: Vec<I> = (0..n).map(|i| sub(r[(i + 1) % n], r[i])).collect();
    let mut sign = 0;
    for i in 0..n {
        let c = cross(edges[i], edges[(i + 1) % n]).signum();
        if c == 0 || (sign != 0 && c != sign) {
            return false;
        }
        sign = c;
    }
    let dirs: Vec<I> = if sign > 0 { edges } else { edges.into_iter().rev().collect() };
    let descents = (0..n).filter(|&i| !before(dirs[i], dirs[(i + 1) % n])).count();
    descents == 1
}

/// One normalized frame: `u'_1..u'_5`, the other half by symmetry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecagonFrameCandidate {
    pub u: [Point2; 5],
}

impl DecagonFrameCandidate {
    fn from_ints(u: &[I; 5]) -> DecagonFrameCandidate {
        DecagonFrameCandidate { u: u.map(|(x, y)| Vec2::ints(x, y)) }
    }

    pub fn vertex(&self, i: usize) -> Point2 {
        if i < 5 {
            self.u[i].clone()
        } else {
            -&self.u[i - 5]
        }
    }

    /// Slopes of `u'_{i+1} - u'_i` for `i = 1..5`; `None` for vertical steps.
    pub fn slopes(&self) -> [Option<Rational>; 5] {
        std::array::from_fn(|i| {
            let d = &self.vertex(i + 1) - &self.vertex(i);
            (!d.x.is_zero()).then(|| &d.y / &d.x)
        })
    }

    /// `(p1, q1) = u'_3 - u'_4` and `(p2, q2) = u'_5 - u'_6`.
    pub fn gaps(&self) -> (Vec2, Vec2) {
        (&self.u[2] - &self.u[3], &self.u[4] + &self.u[0])
    }

    pub fn polygon(&self) -> CsPolygon {
        CsPolygon::from_half_vertices(&self.u).expect("candidates are strictly convex")
    }

    pub fn area(&self) -> Rational {
        self.polygon().area()
    }

    /// `u'_1 = g * primitive`.
    pub fn multiplier(&self) -> i64 {
        self.u[0].y.to_i64().expect("integral frame").abs()
    }

    /// Whether some `u'_i` is a primitive lattice vector.
    pub fn has_primitive(&self) -> bool {
        self.u.iter().any(|v| {
            let (x, y) = (v.x.to_i64().expect("integral"), v.y.to_i64().expect("integral"));
            x.gcd(&y) == 1
        })
    }
}

impl fmt::Display for DecagonFrameCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.u.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecagonClass {
    pub canonical: CsPolygon,
    pub area: Rational,
    /// normalized frames in this class, sorted
    pub members: Vec<DecagonFrameCandidate>,
}

fn general_candidates(max_area: i64) -> Vec<[I; 5]> {
    let a = max_area;
    let gs: Vec<i64> = (1..=a / 2).collect();
    gs.par_iter()
        .flat_map_iter(|&g| {
            let xmax = a / (2 * g);
            let mut out = Vec::new();
            for x2 in 1..=xmax {
                for y2 in 0..x2 {
                    let yrange = |x: i64| {
                        // 2 |x2 y - y2 x| <= a
                        let lo = (2 * y2 * x - a).div_euclid(2 * x2)
                            + i64::from((2 * y2 * x - a).rem_euclid(2 * x2) != 0);
                        let hi = (2 * y2 * x + a).div_euclid(2 * x2);
                        lo..=hi
                    };
                    for x3 in 1..=xmax {
                        for y3 in yrange(x3) {
                            for x4 in 1..=xmax {
                                for y4 in yrange(x4) {
                                    let u5 = (x2 - x3 + x4, -g + y2 - y3 + y4);
                                    if u5.0 <= 0 || u5.0 > xmax {
                                        continue;
                                    }
                                    let u = [(0, g), (x2, y2), (x3, y3), (x4, y4), u5];
                                    let r = ring(&u);
                                    if area2(&r) <= 2 * a && strictly_convex(&r) {
                                        out.push(u);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            out
        })
        .collect()
}

/// All normalized frames with `u'_1 = (0, g)`, the other half-vertices to
/// the right (`x > 0`), `0 <= y'_2 < x'_2` and area at most `max_area`.
pub fn enumerate_decagon_frames(max_area: i64) -> Vec<DecagonFrameCandidate> {
    let mut v: Vec<DecagonFrameCandidate> =
        general_candidates(max_area).iter().map(DecagonFrameCandidate::from_ints).collect();
    v.sort();
    v
}

/// Branch label of the replay for `u'_3 - u'_2 = (a, b)`.
pub fn replay_label(b: i64, a: i64) -> Option<&'static str> {
    Some(match (b, a) {
        (0, 1) => "2.1.1",
        (0, 2) => "2.1.2",
        (0, 3) => "2.1.3",
        (0, a) if a >= 4 => "2.1.4",
        (1, 1) => "2.1.5",
        (1, 2) => "2.1.6",
        (1, 3) => "2.1.7",
        (1, 4) => "2.1.8",
        (1, a) if a >= 5 => "2.1.9",
        (2, 3) => "2.1.10",
        (2, 4) => "2.1.11",
        (2, 5) => "2.1.12",
        (2, 6) => "2.1.13",
        (3, 4) => "2.1.14",
        (3, 5) => "2.1.15",
        (3, 6) => "2.1.16",
        (4, 5) => "2.1.17",
        (4, 6) => "2.1.18",
        (5, 6) => "2.1.19",
        _ => return None,
    })
}

const REPLAY_LABELS: [&str; 19] = [
    "2.1.1", "2.1.2", "2.1.3", "2.1.4", "2.1.5", "2.1.6", "2.1.7", "2.1.8", "2.1.9", "2.1.10", "2.1.11",
    "2.1.12", "2.1.13", "2.1.14", "2.1.15", "2.1.16", "2.1.17", "2.1.18", "2.1.19",
];

const RUN_RANGE: i64 = 8;
const RISE_RANGE: (i64, i64) = (-16, 56);
const GAP_RANGE: i64 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayCandidate {
    /// `(p1, q1, p2, q2)`
    pub gaps: (i64, i64, i64, i64),
    pub frame: DecagonFrameCandidate,
    pub area: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayBranch {
    /// `2.1.1` .. `2.1.19`, or `2.1.x` for steps outside the labelled table
    pub label: String,
    /// `(b, a)` pairs covered
    pub steps: Vec<(i64, i64)>,
    /// convex candidates before the area filter
    pub candidates: Vec<ReplayCandidate>,
}

/// Replay configurations rejected by each filter, in filter order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReplayRejections {
    pub x3_bound: u64,
    pub x3_not_max: u64,
    pub slope_window: u64,
    pub not_convex: u64,
}

impl ReplayRejections {
    fn add(&mut self, o: &ReplayRejections) {
        self.x3_bound += o.x3_bound;
        self.x3_not_max += o.x3_not_max;
        self.slope_window += o.slope_window;
        self.not_convex += o.not_convex;
    }
}

fn replay_step(b: i64, a: i64) -> (Vec<ReplayCandidate>, ReplayRejections) {
    let mut rej = ReplayRejections::default();
    let mut out = Vec::new();
    for p1 in 1..=GAP_RANGE {
        for q1 in 1..=GAP_RANGE {
            for p2 in 1..=GAP_RANGE {
                for q2 in 1..=GAP_RANGE {
                    let u1 = (0, 1);
                    let u5 = (p2, q2 - 1);
                    let u4 = (p2 + a, q2 + b);
                    let u3 = (u4.0 + p1, u4.1 + q1);
                    let u2 = (u3.0 - a, u3.1 - b);
                    let u = [u1, u2, u3, u4, u5];
                    if u3.0 > 8 {
                        rej.x3_bound += 1;
                        continue;
                    }
                    if [u1, u2, u4, u5].iter().any(|v| v.0.abs() >= u3.0) {
                        rej.x3_not_max += 1;
                        continue;
                    }
                    // slope of u'_1 u'_2 below 1
                    if u2.0 <= 0 || u2.1 - 1 >= u2.0 {
                        rej.slope_window += 1;
                        continue;
                    }
                    let r = ring(&u);
                    if !strictly_convex(&r) {
                        rej.not_convex += 1;
                        continue;
                    }
                    let frame = DecagonFrameCandidate::from_ints(&u);
                    out.push(ReplayCandidate {
                        gaps: (p1, q1, p2, q2),
                        area: Rational::new(area2(&r), 2),
                        frame,
                    });
                }
            }
        }
    }
    (out, rej)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecagonSearchReport {
    pub max_area: i64,
    pub classes: Vec<DecagonClass>,
    /// the nineteen labelled branches followed by `2.1.x`
    pub replay: Vec<ReplayBranch>,
    pub replay_rejections: ReplayRejections,
    /// general-search survivors with `u'_1 = g * primitive`, `g >= 2`
    pub multiplied_survivors: BTreeMap<i64, usize>,
    /// survivors with no primitive `u'_i`, by parity of the multiplier
    /// of `u'_1` (even, odd)
    pub nonprimitive_frames: [usize; 2],
    /// replay candidates lie strictly inside the enumeration ranges
    pub window_ok: bool,
}

impl DecagonSearchReport {
    pub fn branch(&self, label: &str) -> Option<&ReplayBranch> {
        self.replay.iter().find(|b| b.label == label)
    }

    /// One line per branch or candidate rejected by the search.
    pub fn pruned_lines(&self) -> Vec<String> {
        let limit = Rational::from_integer(self.max_area);
        let mut lines = Vec::new();
        for br in &self.replay {
            let head = match br.steps.as_slice() {
                [(b, a)] => format!("branch {} (rise {b}, run {a})", br.label),
                _ if br.label == "2.1.x" => format!("branch {} (steps outside the table)", br.label),
                _ => format!("branch {} ({} steps)", br.label, br.steps.len()),
            };
            if br.candidates.is_empty() {
                lines.push(format!("{head}: no convex configuration"));
            }
            for c in br.candidates.iter().filter(|c| c.area > limit) {
                let (p1, q1, p2, q2) = c.gaps;
                lines.push(format!(
                    "{head}: (p1,q1,p2,q2)=({p1},{q1},{p2},{q2}) area {} > {}",
                    c.area, self.max_area
                ));
            }
        }
        for (n, name) in self.nonprimitive_frames.iter().zip(["even", "odd"]) {
            if *n == 0 {
                lines.push(format!(
                    "no primitive u'_i, u'_1 an {name} multiple: no convex frame with area <= {}",
                    self.max_area
                ));
            }
        }
        lines
    }
}

fn classify(frames: &[DecagonFrameCandidate]) -> Vec<DecagonClass> {
    let mut map: BTreeMap<Vec<Point2>, DecagonClass> = BTreeMap::new();
    for f in frames {
        let c = canonical_form(&f.polygon()).expect("integral frame");
        map.entry(c.vertices())
            .or_insert_with(|| DecagonClass { area: c.area(), canonical: c, members: Vec::new() })
            .members
            .push(f.clone());
    }
    map.into_values().collect()
}

/// Runs both enumerations and groups the survivors by canonical form.
pub fn search_decagon_frames(max_area: i64) -> DecagonSearchReport {
    let frames = enumerate_decagon_frames(max_area);
    let classes = classify(&frames);
    let mut multiplied_survivors = BTreeMap::new();
    for g in 2..=max_area / 2 {
        multiplied_survivors.insert(g, frames.iter().filter(|f| f.multiplier() == g).count());
    }
    let mut nonprimitive_frames = [0, 0];
    for f in frames.iter().filter(|f| !f.has_primitive()) {
        nonprimitive_frames[(f.multiplier() % 2) as usize] += 1;
    }

    let steps: Vec<(i64, i64)> = (RISE_RANGE.0..=RISE_RANGE.1)
        .flat_map(|b| (-RUN_RANGE..=RUN_RANGE).map(move |a| (b, a)))
        .collect();
    let results: Vec<((i64, i64), Vec<ReplayCandidate>, ReplayRejections)> = steps
        .par_iter()
        .map(|&(b, a)| {
            let (c, r) = replay_step(b, a);
            ((b, a), c, r)
        })
        .collect();

    let mut replay: Vec<ReplayBranch> = REPLAY_LABELS
        .iter()
        .chain(std::iter::once(&"2.1.x"))
        .map(|l| ReplayBranch { label: l.to_string(), steps: Vec::new(), candidates: Vec::new() })
        .collect();
    let mut replay_rejections = ReplayRejections::default();
    let mut window_ok = true;
    for ((b, a), cands, rej) in results {
        replay_rejections.add(&rej);
        let label = replay_label(b, a).unwrap_or("2.1.x");
        let br = replay.iter_mut().find(|br| br.label == label).expect("known label");
        br.steps.push((b, a));
        for c in &cands {
            let (p1, q1, p2, q2) = c.gaps;
            window_ok &= a.abs() < RUN_RANGE
                && b > RISE_RANGE.0
                && b < RISE_RANGE.1
                && [p1, q1, p2, q2].iter().all(|&g| g < GAP_RANGE);
        }
        br.candidates.extend(cands);
    }
    for br in &mut replay {
        br.candidates.sort_by(|x, y| x.gaps.cmp(&y.gaps));
    }
    DecagonSearchReport {
        max_area,
        classes,
        replay,
        replay_rejections,
        multiplied_survivors,
        nonprimitive_frames,
        window_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn convexity_check() {
        let u = [(0, 1), (4, 2), (6, 2), (5, 1), (3, 0)];
        assert!(strictly_convex(&ring(&u)));
        let star = [(0, 1), (6, 2), (4, 2), (5, 1), (3, 0)];
        assert!(!strictly_convex(&ring(&star)));
        let mut rev = ring(&u);
        rev.reverse();
        assert!(strictly_convex(&rev));
    }

    #[test]
    fn labels() {
        assert_eq!(replay_label(0, 2), Some("2.1.2"));
        assert_eq!(replay_label(0, 7), Some("2.1.4"));
        assert_eq!(replay_label(1, 6), Some("2.1.9"));
        assert_eq!(replay_label(5, 6), Some("2.1.19"));
        assert_eq!(replay_label(2, 2), None);
    }

    #[test]
    fn step_0_2() {
        let (c, _) = replay_step(0, 2);
        let quads: Vec<_> = c.iter().map(|c| c.gaps).collect();
        assert_eq!(quads, vec![(1, 1, 3, 1), (1, 1, 4, 1), (1, 1, 5, 1), (1, 1, 5, 2)]);
        let areas: Vec<_> = c.iter().map(|c| c.area.clone()).collect();
        assert_eq!(areas, vec![q(18, 1), q(22, 1), q(26, 1), q(25, 1)]);
        assert_eq!(
            c[0].frame,
            DecagonFrameCandidate::from_ints(&[(0, 1), (4, 2), (6, 2), (5, 1), (3, 0)])
        );
    }

    #[test]
    fn frame_accessors() {
        let f = DecagonFrameCandidate::from_ints(&[(0, 1), (4, 2), (6, 2), (5, 1), (3, 0)]);
        assert_eq!(f.gaps(), (Vec2::ints(1, 1), Vec2::ints(3, 1)));
        assert_eq!(f.slopes()[0], Some(q(1, 4)));
        assert_eq!(f.area(), q(18, 1));
        assert_eq!(f.multiplier(), 1);
        assert_eq!(f.to_string(), "(0,1),(4,2),(6,2),(5,1),(3,0)");
    }

    #[test]
    fn small_area_search_is_empty() {
        assert!(enumerate_decagon_frames(12).is_empty());
    }
}
