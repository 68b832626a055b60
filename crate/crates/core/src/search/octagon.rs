//! Enumeration of normalized octagon configurations with multiplicity five.
//!
//! The octagon has a lattice edge `G1 = [v1, v2] = (k, 0)` at height
//! `y1 in {-3/2, -2, -5/2}`, and `v1 = (x1, y1)` with `x1` in a half-open
//! window of length `|y1|` (any other `x1` is a lattice translate away,
//! after a shear fixing `G1`). The edges `G2, G3, G4` rise by positive
//! integers summing to `-2 y1`. Each of them either has its midpoint in
//! `Z^2 / 2` (fixing the midpoint makes the next vertex an affine reflection
//! of the previous one) or is a lattice vector `(k, rise)`. So every vertex
//! abscissa is `+-x1 + c`, turn signs and area are affine in `x1`, and each
//! configuration is decided exactly on an interval of `x1`.
//!
//! Configurations are then sorted into the branches of the hand proof, and
//! the smallest area seen in each rejected branch is compared with the bound
//! the proof gives for it.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use super::canonical::canonical_form_scaled;
use crate::bolle::check_bolle;
use crate::error::GeometryError;
use crate::families::{octagon_a, octagon_b};
use crate::lattice::Lattice2;
use crate::polygon::CsPolygon;
use crate::rational::{q, Rational};
use crate::region::{check_strictly_convex, shoelace2};
use crate::vector::{Point2, Vec2};

/// Half-integral midpoint abscissas range over `[-MIDPOINT_RANGE, MIDPOINT_RANGE]`.
const MIDPOINT_RANGE: i64 = 5;
/// Lattice edge runs range over `[-RUN_RANGE, RUN_RANGE]`.
const RUN_RANGE: i64 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// midpoint in `Z^2 / 2`
    Midpoint(Point2),
    /// lattice edge vector whose midpoint is not half-integral
    LatticeEdge(Vec2),
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeKind::Midpoint(p) => write!(f, "midpoint {p}"),
            EdgeKind::LatticeEdge(e) => write!(f, "edge {e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ParamRange {
    Point(Rational),
    /// `lo < x1 < hi`, or `lo <= x1 < hi` when `lo_closed`
    Interval { lo: Rational, hi: Rational, lo_closed: bool },
}

impl ParamRange {
    pub fn contains(&self, x: &Rational) -> bool {
        match self {
            ParamRange::Point(p) => p == x,
            ParamRange::Interval { lo, hi, lo_closed } => (x > lo || (*lo_closed && x == lo)) && x < hi,
        }
    }

    /// The point, or the midpoint of the interval.
    pub fn sample(&self) -> Rational {
        match self {
            ParamRange::Point(p) => p.clone(),
            ParamRange::Interval { lo, hi, .. } => (lo + hi) * q(1, 2),
        }
    }

    /// `n` equally spaced interior parameters.
    pub fn samples(&self, n: i64) -> Vec<Rational> {
        match self {
            ParamRange::Point(p) => vec![p.clone()],
            ParamRange::Interval { lo, hi, .. } => {
                (1..=n).map(|j| lo + (hi - lo) * Rational::new(j, n + 1)).collect()
            }
        }
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamRange::Point(p) => write!(f, "= {p}"),
            ParamRange::Interval { lo, hi, lo_closed } => {
                write!(f, "in {}{lo},{hi})", if *lo_closed { "[" } else { "(" })
            }
        }
    }
}

/// Area bound that the hand proof gives for a branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AreaBound {
    /// the branch contains no octagon at all
    Empty,
    AtLeast(i64),
    Above(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OctagonBranch {
    /// `G1 = (k, 0)` with `k >= 2`
    WideBase,
    /// `y1 <= -5/2`
    TallBase,
    Case1G2Vertical,
    Case1G3Vertical,
    Case1G4Vertical,
    /// `u3` strictly rightmost
    Sub1_1,
    /// `u2` strictly rightmost, `x3 > x2`
    Sub1_2Right,
    /// `u2` strictly rightmost, `x2 > x3`
    Sub1_2Left,
    /// `u2`, `u3` tied rightmost
    Sub1_3,
    Case1Mirrored,
    Case2Vertical,
    /// `G2` or `G4` a lattice edge rising by 2, run 1
    Sub2_1Narrow,
    Sub2_1Wide,
    /// `G3` a lattice edge rising by 2, run 1
    Sub2_2Narrow,
    Sub2_2Wide,
    Sub2_3_1,
    Sub2_3_2Right,
    /// `u2` rightmost, `x2 > x3`, `G2` rising by 1
    Sub2_3_2LeftLow,
    /// `u2` rightmost, `x2 > x3`, `G2` rising by 2
    Sub2_3_2LeftHigh,
    Sub2_3_3,
    Case2_3Mirrored,
    Case2Other,
}

impl OctagonBranch {
    pub const ALL: [OctagonBranch; 22] = [
        OctagonBranch::WideBase,
        OctagonBranch::TallBase,
        OctagonBranch::Case1G2Vertical,
        OctagonBranch::Case1G3Vertical,
        OctagonBranch::Case1G4Vertical,
        OctagonBranch::Sub1_1,
        OctagonBranch::Sub1_2Right,
        OctagonBranch::Sub1_2Left,
        OctagonBranch::Sub1_3,
        OctagonBranch::Case1Mirrored,
        OctagonBranch::Case2Vertical,
        OctagonBranch::Sub2_1Narrow,
        OctagonBranch::Sub2_1Wide,
        OctagonBranch::Sub2_2Narrow,
        OctagonBranch::Sub2_2Wide,
        OctagonBranch::Sub2_3_1,
        OctagonBranch::Sub2_3_2Right,
        OctagonBranch::Sub2_3_2LeftLow,
        OctagonBranch::Sub2_3_2LeftHigh,
        OctagonBranch::Sub2_3_3,
        OctagonBranch::Case2_3Mirrored,
        OctagonBranch::Case2Other,
    ];

    pub fn name(&self) -> &'static str {
        use OctagonBranch::*;
        match self {
            WideBase => "G1 = (k,0), k >= 2",
            TallBase => "y1 <= -5/2",
            Case1G2Vertical => "1, G2 vertical",
            Case1G3Vertical => "1, G3 vertical",
            Case1G4Vertical => "1, G4 vertical",
            Sub1_1 => "1.1",
            Sub1_2Right => "1.2, x3 > x2",
            Sub1_2Left => "1.2, x2 > x3",
            Sub1_3 => "1.3",
            Case1Mirrored => "1, mirrored",
            Case2Vertical => "2, vertical edge",
            Sub2_1Narrow => "2.1, k = 1",
            Sub2_1Wide => "2.1, k >= 2",
            Sub2_2Narrow => "2.2, k = 1",
            Sub2_2Wide => "2.2, k >= 2",
            Sub2_3_1 => "2.3.1",
            Sub2_3_2Right => "2.3.2, x3 > x2",
            Sub2_3_2LeftLow => "2.3.2, x2 > x3, G2 rises 1",
            Sub2_3_2LeftHigh => "2.3.2, x2 > x3, G2 rises 2",
            Sub2_3_3 => "2.3.3",
            Case2_3Mirrored => "2.3, mirrored",
            Case2Other => "2, other",
        }
    }

    pub fn bound(&self) -> AreaBound {
        use OctagonBranch::*;
        match self {
            WideBase | TallBase | Sub1_2Right => AreaBound::Above(5),
            Case1G2Vertical | Case1G4Vertical | Sub1_2Left | Sub2_1Narrow | Sub2_3_2LeftLow | Case2Other => {
                AreaBound::Empty
            }
            Case1G3Vertical | Sub1_1 => AreaBound::AtLeast(7),
            Sub1_3 | Case1Mirrored | Sub2_3_2LeftHigh | Case2_3Mirrored => AreaBound::AtLeast(5),
            Case2Vertical | Sub2_2Narrow | Sub2_3_2Right | Sub2_3_3 => AreaBound::AtLeast(6),
            Sub2_1Wide | Sub2_2Wide => AreaBound::Above(8),
            Sub2_3_1 => AreaBound::AtLeast(8),
        }
    }

    pub fn bound_text(&self) -> String {
        match (self, self.bound()) {
            (OctagonBranch::Sub1_1, _) => "area >= 4x'_3+1 >= 7".to_string(),
            (_, AreaBound::Empty) => "no such octagon".to_string(),
            (_, AreaBound::AtLeast(v)) => format!("area >= {v}"),
            (_, AreaBound::Above(v)) => format!("area > {v}"),
        }
    }
}

impl fmt::Display for OctagonBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One configuration: vertex abscissas `x(v_i) = slopes[i] * x1 + offsets[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctagonConfigCandidate {
    pub base_length: i64,
    pub y1: Rational,
    pub rises: [i64; 3],
    pub slopes: [i64; 4],
    pub offsets: [Rational; 4],
    pub x1: ParamRange,
    /// kinds of `G2, G3, G4` at the sample parameter
    pub edges: [EdgeKind; 3],
    pub branch: OctagonBranch,
    /// area at the sample parameter (constant on surviving intervals)
    pub area: Rational,
}

impl OctagonConfigCandidate {
    pub fn ys(&self) -> [Rational; 4] {
        let r = &self.rises;
        let y1 = &self.y1;
        [
            y1.clone(),
            y1.clone(),
            y1 + Rational::from(r[0]),
            y1 + Rational::from(r[0] + r[1]),
        ]
    }

    pub fn half_vertices_at(&self, x1: &Rational) -> Vec<Point2> {
        let ys = self.ys();
        (0..4)
            .map(|i| Vec2::new(Rational::from(self.slopes[i]) * x1 + &self.offsets[i], ys[i].clone()))
            .collect()
    }

    pub fn polygon_at(&self, x1: &Rational) -> Result<CsPolygon, GeometryError> {
        CsPolygon::from_half_vertices(&self.half_vertices_at(x1))
    }

    pub fn sample_polygon(&self) -> CsPolygon {
        self.polygon_at(&self.x1.sample()).expect("candidate is convex at its sample parameter")
    }

    /// Midpoints `u2, u3, u4` at the sample parameter.
    pub fn midpoints(&self) -> [Point2; 3] {
        let p = self.sample_polygon();
        [p.midpoint(1), p.midpoint(2), p.midpoint(3)]
    }

    pub fn base(&self) -> Vec2 {
        Vec2::ints(self.base_length, 0)
    }
}

impl fmt::Display for OctagonConfigCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u2, u3, u4] = self.midpoints();
        write!(
            f,
            "y1={} G1={} u2={u2} u3={u3} u4={u4} x1 {} area {}",
            self.y1,
            self.base(),
            self.x1,
            self.area
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OctagonFamily {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctagonClass {
    pub family: Option<OctagonFamily>,
    /// member with the lexicographically largest `(u2, u3, u4)`
    pub representative: OctagonConfigCandidate,
    pub members: Vec<OctagonConfigCandidate>,
    /// Bolle multiplicity at interior sample parameters of the representative
    pub spot_checks: Vec<(Rational, Option<u64>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedOctagonBranch {
    pub branch: OctagonBranch,
    /// distinct configurations of area other than 5
    pub configurations: usize,
    /// infimum of their areas
    pub min_area: Option<Rational>,
    pub min_attained: bool,
    /// area-5 configurations that fell in this branch
    pub survivors: usize,
}

impl PrunedOctagonBranch {
    /// Whether the enumeration agrees with the bound of the hand proof.
    pub fn consistent(&self) -> bool {
        let bound = self.branch.bound();
        let five_ok = self.survivors == 0 || bound == AreaBound::AtLeast(5);
        five_ok
            && match (bound, &self.min_area) {
                (_, None) => true,
                (AreaBound::Empty, Some(_)) => false,
                (AreaBound::AtLeast(v), Some(a)) => *a >= Rational::from(v),
                (AreaBound::Above(v), Some(a)) => {
                    *a > Rational::from(v) || (*a == Rational::from(v) && !self.min_attained)
                }
            }
    }

    pub fn line(&self) -> String {
        let min = match &self.min_area {
            None => "none".to_string(),
            Some(a) if self.min_attained => format!("min area {a}"),
            Some(a) => format!("inf area {a}"),
        };
        format!(
            "branch {}: {} configurations, {min}; bound {} [{}]",
            self.branch,
            self.configurations,
            self.branch.bound_text(),
            if self.consistent() { "consistent" } else { "INCONSISTENT" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctagonSearchReport {
    pub classes: Vec<OctagonClass>,
    /// one entry per branch, in `OctagonBranch::ALL` order
    pub pruned: Vec<PrunedOctagonBranch>,
    /// area-5 configurations before deduplication by canonical form
    pub raw_survivors: usize,
    /// surviving parameters lie strictly inside the enumeration ranges
    pub window_ok: bool,
}

impl OctagonSearchReport {
    pub fn pruned_lines(&self) -> Vec<String> {
        self.pruned.iter().map(|p| p.line()).collect()
    }

    pub fn all_consistent(&self) -> bool {
        self.pruned.iter().all(|p| p.consistent())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    H,
    L,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Key {
    Points(Vec<Point2>),
    Family([i64; 4], [Rational; 4], Rational, [i64; 3], Rational, Rational),
}

enum Found {
    Survivor(OctagonConfigCandidate, bool),
    Pruned(OctagonBranch, Rational, bool),
}

fn compositions(n: i64) -> Vec<[i64; 3]> {
    let mut v = Vec::new();
    for a in 1..n {
        for b in 1..n - a {
            v.push([a, b, n - a - b]);
        }
    }
    v
}

fn is_half(x: &Rational) -> bool {
    (x * Rational::from(2)).is_integer()
}

fn half_point(p: &Point2) -> bool {
    is_half(&p.x) && is_half(&p.y)
}

fn branch_of(base: i64, y1: &Rational, rises: &[i64; 3], p: &CsPolygon) -> OctagonBranch {
    use OctagonBranch::*;
    if base > 1 {
        return WideBase;
    }
    if *y1 < q(-2, 1) {
        return TallBase;
    }
    let v: Vec<Point2> = (0..5).map(|i| p.vertex(i)).collect();
    let vertical = |i: usize| v[i - 1].x == v[i].x; // G_i for i = 2..4
    let u: Vec<Point2> = (0..4).map(|i| p.midpoint(i)).collect(); // u[1] = u2
    let (x2, x3, x4) = (&u[1].x, &u[2].x, &u[3].x);
    if *y1 == q(-3, 2) {
        if vertical(2) {
            return Case1G2Vertical;
        }
        if vertical(3) {
            return Case1G3Vertical;
        }
        if vertical(4) {
            return Case1G4Vertical;
        }
        if x3 > x2 && x3 > x4 {
            Sub1_1
        } else if x2 > x3 && x2 > x4 {
            if v[2].x > v[1].x {
                Sub1_2Right
            } else {
                Sub1_2Left
            }
        } else if x2 == x3 && x3 > x4 {
            Sub1_3
        } else {
            Case1Mirrored
        }
    } else {
        if vertical(2) || vertical(3) || vertical(4) {
            return Case2Vertical;
        }
        let run = |i: usize| (&v[i].x - &v[i - 1].x).abs();
        if rises[0] == 2 && !half_point(&u[1]) {
            return if run(2) == Rational::one() { Sub2_1Narrow } else { Sub2_1Wide };
        }
        if rises[2] == 2 && !half_point(&u[3]) {
            return if run(4) == Rational::one() { Sub2_1Narrow } else { Sub2_1Wide };
        }
        if rises[1] == 2 && !half_point(&u[2]) {
            return if run(3) == Rational::one() { Sub2_2Narrow } else { Sub2_2Wide };
        }
        if u[1..4].iter().all(half_point) {
            if x3 > x2 && x3 > x4 {
                Sub2_3_1
            } else if x2 > x3 && x2 > x4 {
                if v[2].x > v[1].x {
                    Sub2_3_2Right
                } else if rises[0] == 1 {
                    Sub2_3_2LeftLow
                } else {
                    Sub2_3_2LeftHigh
                }
            } else if x2 == x3 && x3 > x4 {
                Sub2_3_3
            } else {
                Case2_3Mirrored
            }
        } else {
            Case2Other
        }
    }
}

fn edge_kinds(p: &CsPolygon) -> [EdgeKind; 3] {
    std::array::from_fn(|i| {
        let m = p.midpoint(i + 1);
        if half_point(&m) {
            EdgeKind::Midpoint(m)
        } else {
            EdgeKind::LatticeEdge(p.edge_vector(i + 1))
        }
    })
}

/// Affine description of one branch of the enumeration tree.
struct Forms {
    base: i64,
    y1: Rational,
    rises: [i64; 3],
    ys: [Rational; 5],
    s: [i64; 5],
    c: [Rational; 5],
}

impl Forms {
    fn half(&self, x1: &Rational) -> Vec<Point2> {
        (0..4)
            .map(|i| Vec2::new(Rational::from(self.s[i]) * x1 + &self.c[i], self.ys[i].clone()))
            .collect()
    }

    fn ring(&self, x1: &Rational) -> Vec<Point2> {
        let h = self.half(x1);
        let mut r = h.clone();
        r.extend(h.iter().map(|v| -v));
        r
    }

    fn candidate(&self, x1: ParamRange, p: &CsPolygon) -> OctagonConfigCandidate {
        OctagonConfigCandidate {
            base_length: self.base,
            y1: self.y1.clone(),
            rises: self.rises,
            slopes: [self.s[0], self.s[1], self.s[2], self.s[3]],
            offsets: [self.c[0].clone(), self.c[1].clone(), self.c[2].clone(), self.c[3].clone()],
            x1,
            edges: edge_kinds(p),
            branch: branch_of(self.base, &self.y1, &self.rises, p),
            area: p.area(),
        }
    }

    /// Decides a single parameter value.
    fn point(&self, x1: &Rational, out: &mut Vec<(Key, Found)>) {
        let ring = self.ring(x1);
        if check_strictly_convex(&ring) != Ok(1) {
            return;
        }
        let p = CsPolygon::from_vertices(&ring).expect("checked convex");
        if !check_bolle(&p, &Lattice2::integer()).map(|r| r.passed()).unwrap_or(false) {
            return;
        }
        let key = Key::Points(ring);
        let area = p.area();
        if area == Rational::from(5) {
            out.push((key, Found::Survivor(self.candidate(ParamRange::Point(x1.clone()), &p), true)));
        } else {
            out.push((key, Found::Pruned(branch_of(self.base, &self.y1, &self.rises, &p), area, true)));
        }
    }

    /// Decides a whole interval of parameters where every edge has a fixed
    /// half-integral midpoint.
    fn interval(&self, lo: &Rational, hi: &Rational, out: &mut Vec<(Key, Found)>) {
        let turns = |x: &Rational| -> Vec<Rational> {
            let r = self.ring(x);
            (0..8)
                .map(|i| (&r[(i + 1) % 8] - &r[i]).cross(&(&r[(i + 2) % 8] - &r[(i + 1) % 8])))
                .collect()
        };
        let (f0, f1) = (turns(&Rational::zero()), turns(&Rational::one()));
        let (mut l, mut h, mut closed) = (lo.clone(), hi.clone(), true);
        for (a, b) in f0.iter().zip(&f1) {
            let slope = b - a;
            if slope.is_zero() {
                if !a.is_positive() {
                    return;
                }
                continue;
            }
            let root = -a / &slope;
            if slope.is_positive() {
                if root >= l {
                    closed = false;
                    l = root;
                }
            } else if root < h {
                h = root;
            }
        }
        if l >= h {
            return;
        }
        let range = ParamRange::Interval { lo: l.clone(), hi: h.clone(), lo_closed: closed };
        let mid = range.sample();
        let p = CsPolygon::from_vertices(&self.ring(&mid)).expect("interior of the convexity interval");
        if !check_bolle(&p, &Lattice2::integer()).map(|r| r.passed()).unwrap_or(false) {
            return;
        }
        let area = |x: &Rational| shoelace2(&self.ring(x)) * q(1, 2);
        let (al, ah) = (area(&l), area(&h));
        let five = Rational::from(5);
        let key = Key::Family(
            [self.s[0], self.s[1], self.s[2], self.s[3]],
            [self.c[0].clone(), self.c[1].clone(), self.c[2].clone(), self.c[3].clone()],
            self.y1.clone(),
            self.rises,
            l.clone(),
            h.clone(),
        );
        if al == five && ah == five {
            out.push((key, Found::Survivor(self.candidate(range, &p), true)));
            return;
        }
        let branch = branch_of(self.base, &self.y1, &self.rises, &p);
        let (min, attained) = if al <= ah { (al.clone(), closed) } else { (ah.clone(), false) };
        out.push((key.clone(), Found::Pruned(branch, min, attained)));
        // an isolated area-5 parameter inside the interval
        if (al < five && five < ah) || (ah < five && five < al) {
            let x = &l + (&h - &l) * ((&five - &al) / (&ah - &al));
            self.point(&x, out);
        }
    }
}

fn decide(
    forms: &Forms,
    kinds: &[Kind; 3],
    params: &[Rational; 3],
    lo: &Rational,
    hi: &Rational,
    out: &mut Vec<(Key, Found)>,
) {
    // closing condition v5 = -v1
    if forms.s[4] == 1 {
        let x1 = -&forms.c[4] * q(1, 2);
        if &x1 >= lo && &x1 < hi {
            forms.point(&x1, out);
        }
        return;
    }
    if !forms.c[4].is_zero() {
        return;
    }
    if kinds.iter().all(|k| *k == Kind::H) {
        forms.interval(lo, hi, out);
        return;
    }
    // a lattice edge needs a half-lattice point in its interior, which pins
    // x1 to finitely many values
    let mut xs: Vec<Rational> = Vec::new();
    for i in 0..3 {
        if kinds[i] != Kind::L {
            continue;
        }
        let (si, ci) = (Rational::from(forms.s[i + 1]), &forms.c[i + 1]);
        let rise = forms.rises[i];
        for t in 1..2 * rise {
            let shift = ci + &params[i] * Rational::new(t, 2 * rise);
            let (a, b) = (&si * lo + &shift, &si * hi + &shift);
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            let n0 = (a * Rational::from(2)).floor().to_i64().expect("small");
            let n1 = (b * Rational::from(2)).ceil().to_i64().expect("small");
            for n in n0..=n1 {
                let x1 = &si * (Rational::new(n, 2) - &shift);
                if &x1 >= lo && &x1 < hi {
                    xs.push(x1);
                }
            }
        }
    }
    xs.sort();
    xs.dedup();
    for x1 in &xs {
        forms.point(x1, out);
    }
}

fn explore(base: i64, y1: &Rational, rises: [i64; 3], kinds: [Kind; 3]) -> Vec<(Key, Found)> {
    let halfwidth = y1.abs() * q(1, 2);
    let centre = Rational::new(-base, 2);
    let (lo, hi) = (&centre - &halfwidth, &centre + &halfwidth);
    let mut ys = [y1.clone(), y1.clone(), Rational::zero(), Rational::zero(), -y1];
    ys[2] = y1 + Rational::from(rises[0]);
    ys[3] = &ys[2] + Rational::from(rises[1]);

    let ranges: Vec<Vec<Rational>> = kinds
        .iter()
        .map(|k| match k {
            Kind::H => (-2 * MIDPOINT_RANGE..=2 * MIDPOINT_RANGE).map(|j| Rational::new(j, 2)).collect(),
            Kind::L => (-RUN_RANGE..=RUN_RANGE).map(Rational::from).collect(),
        })
        .collect();

    let mut out = Vec::new();
    for p0 in &ranges[0] {
        for p1 in &ranges[1] {
            for p2 in &ranges[2] {
                let params = [p0.clone(), p1.clone(), p2.clone()];
                let mut s = [1i64, 1, 0, 0, 0];
                let mut c = [Rational::zero(), Rational::from(base), Rational::zero(), Rational::zero(), Rational::zero()];
                for i in 0..3 {
                    match kinds[i] {
                        Kind::H => {
                            s[i + 2] = -s[i + 1];
                            c[i + 2] = &params[i] * Rational::from(2) - &c[i + 1];
                        }
                        Kind::L => {
                            s[i + 2] = s[i + 1];
                            c[i + 2] = &c[i + 1] + &params[i];
                        }
                    }
                }
                let forms = Forms { base, y1: y1.clone(), rises, ys: ys.clone(), s, c };
                let before = out.len();
                decide(&forms, &kinds, &params, &lo, &hi, &mut out);
                let window_ok = kinds.iter().zip(&params).all(|(k, p)| match k {
                    Kind::H => p.abs() < Rational::from(MIDPOINT_RANGE),
                    Kind::L => p.abs() < Rational::from(RUN_RANGE),
                });
                for entry in &mut out[before..] {
                    if let Found::Survivor(_, ok) = &mut entry.1 {
                        *ok &= window_ok;
                    }
                }
            }
        }
    }
    out
}

fn work_items() -> Vec<(i64, Rational, [i64; 3], [Kind; 3])> {
    let mut items = Vec::new();
    for base in [1, 2] {
        for y1 in [q(-3, 2), q(-2, 1), q(-5, 2)] {
            let total = (-&y1 * Rational::from(2)).to_i64().expect("half-integral height");
            for rises in compositions(total) {
                for mask in 0..8 {
                    let kinds = std::array::from_fn(|i| if mask >> i & 1 == 0 { Kind::H } else { Kind::L });
                    items.push((base, y1.clone(), rises, kinds));
                }
            }
        }
    }
    items
}

fn raw_search() -> (Vec<OctagonConfigCandidate>, bool, BTreeMap<OctagonBranch, PrunedOctagonBranch>) {
    let found: Vec<(Key, Found)> = work_items()
        .par_iter()
        .flat_map_iter(|(base, y1, rises, kinds)| explore(*base, y1, *rises, *kinds))
        .collect();
    let mut seen: HashSet<Key> = HashSet::new();
    let mut survivors = Vec::new();
    let mut window_ok = true;
    let mut pruned: BTreeMap<OctagonBranch, PrunedOctagonBranch> = OctagonBranch::ALL
        .iter()
        .map(|&b| {
            (b, PrunedOctagonBranch { branch: b, configurations: 0, min_area: None, min_attained: false, survivors: 0 })
        })
        .collect();
    for (key, f) in found {
        if !seen.insert(key) {
            continue;
        }
        match f {
            Found::Survivor(c, ok) => {
                window_ok &= ok;
                pruned.get_mut(&c.branch).expect("known branch").survivors += 1;
                survivors.push(c);
            }
            Found::Pruned(branch, area, attained) => {
                let e = pruned.get_mut(&branch).expect("known branch");
                e.configurations += 1;
                let better = match &e.min_area {
                    None => true,
                    Some(m) => area < *m || (area == *m && attained && !e.min_attained),
                };
                if better {
                    e.min_area = Some(area);
                    e.min_attained = attained;
                }
            }
        }
    }
    (survivors, window_ok, pruned)
}

fn family_of(canonical: &CsPolygon) -> Option<OctagonFamily> {
    let a = canonical_form_scaled(&octagon_a(&q(1, 8)).expect("valid")).expect("rational").0;
    let b = canonical_form_scaled(&octagon_b(&q(7, 24)).expect("valid")).expect("rational").0;
    if *canonical == a {
        Some(OctagonFamily::A)
    } else if *canonical == b {
        Some(OctagonFamily::B)
    } else {
        None
    }
}

fn classify(survivors: Vec<OctagonConfigCandidate>) -> Vec<OctagonClass> {
    let mut map: BTreeMap<Vec<Point2>, Vec<OctagonConfigCandidate>> = BTreeMap::new();
    for c in survivors {
        let (canon, _) = canonical_form_scaled(&c.sample_polygon()).expect("rational polygon");
        map.entry(canon.vertices()).or_default().push(c);
    }
    let mut classes: Vec<OctagonClass> = map
        .into_values()
        .map(|mut members| {
            members.sort_by_key(|m| std::cmp::Reverse(m.midpoints()));
            let representative = members[0].clone();
            let canon = canonical_form_scaled(&representative.sample_polygon()).expect("rational").0;
            let spot_checks = representative
                .x1
                .samples(5)
                .into_iter()
                .map(|x| {
                    let k = representative
                        .polygon_at(&x)
                        .ok()
                        .and_then(|p| check_bolle(&p, &Lattice2::integer()).ok())
                        .and_then(|r| r.multiplicity);
                    (x, k)
                })
                .collect();
            OctagonClass { family: family_of(&canon), representative, members, spot_checks }
        })
        .collect();
    classes.sort_by(|a, b| (a.family.is_none(), a.family).cmp(&(b.family.is_none(), b.family)));
    classes
}

/// Area-5 configuration classes, one representative each.
pub fn enumerate_octagon_configs() -> Vec<OctagonConfigCandidate> {
    search_octagon_configs().classes.into_iter().map(|c| c.representative).collect()
}

/// Full enumeration with the per-branch pruning report.
pub fn search_octagon_configs() -> OctagonSearchReport {
    let (survivors, window_ok, pruned) = raw_search();
    let raw_survivors = survivors.len();
    OctagonSearchReport { classes: classify(survivors), pruned: pruned.into_values().collect(), raw_survivors, window_ok }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_of_small_heights() {
        assert_eq!(compositions(3), vec![[1, 1, 1]]);
        assert_eq!(compositions(4).len(), 3);
        assert_eq!(compositions(5).len(), 6);
    }

    #[test]
    fn param_ranges() {
        let r = ParamRange::Interval { lo: q(-1, 4), hi: q(0, 1), lo_closed: false };
        assert!(!r.contains(&q(-1, 4)));
        assert!(r.contains(&q(-1, 8)));
        assert_eq!(r.sample(), q(-1, 8));
        assert_eq!(r.samples(3), vec![q(-3, 16), q(-1, 8), q(-1, 16)]);
        assert_eq!(r.to_string(), "in (-1/4,0)");
    }

    #[test]
    fn family_a_branch() {
        let p = octagon_a(&q(1, 8)).unwrap();
        assert_eq!(branch_of(1, &q(-3, 2), &[1, 1, 1], &p), OctagonBranch::Sub1_3);
        let b = octagon_b(&q(7, 24)).unwrap();
        assert_eq!(branch_of(1, &q(-2, 1), &[2, 1, 1], &b), OctagonBranch::Sub2_3_2LeftHigh);
    }

    #[test]
    fn consistency_rules() {
        let mut e = PrunedOctagonBranch {
            branch: OctagonBranch::WideBase,
            configurations: 1,
            min_area: Some(q(5, 1)),
            min_attained: false,
            survivors: 0,
        };
        assert!(e.consistent());
        e.min_attained = true;
        assert!(!e.consistent());
        e.branch = OctagonBranch::Sub1_3;
        assert!(e.consistent());
        e.branch = OctagonBranch::Sub2_1Narrow;
        assert!(!e.consistent());
    }
}
