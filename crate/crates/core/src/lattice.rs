use crate::affine::AffineMap;
use crate::error::GeometryError;
use crate::rational::Rational;
use crate::vector::{Point2, Vec2};

/// The lattice `Z b1 + Z b2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice2 {
    b1: Vec2,
    b2: Vec2,
    det: Rational,
}

impl Lattice2 {
    pub fn new(b1: Vec2, b2: Vec2) -> Result<Lattice2, GeometryError> {
        let det = b1.cross(&b2).abs();
        if det.is_zero() {
            return Err(GeometryError::DegenerateLattice);
        }
        Ok(Lattice2 { b1, b2, det })
    }

    pub fn integer() -> Lattice2 {
        Lattice2::new(Vec2::ints(1, 0), Vec2::ints(0, 1)).unwrap()
    }

    pub fn basis(&self) -> (&Vec2, &Vec2) {
        (&self.b1, &self.b2)
    }

    pub fn det(&self) -> &Rational {
        &self.det
    }

    pub fn is_integer_lattice(&self) -> bool {
        self.same_lattice(&Lattice2::integer())
    }

    /// Coordinates `(s, t)` with `p = s b1 + t b2`.
    pub fn coordinates(&self, p: &Point2) -> (Rational, Rational) {
        let c = self.b1.cross(&self.b2);
        (p.cross(&self.b2) / &c, self.b1.cross(p) / &c)
    }

    pub fn point(&self, s: &Rational, t: &Rational) -> Point2 {
        self.b1.scale(s) + self.b2.scale(t)
    }

    pub fn contains(&self, p: &Point2) -> bool {
        let (s, t) = self.coordinates(p);
        s.is_integer() && t.is_integer()
    }

    /// Membership in the half lattice.
    pub fn contains_half(&self, p: &Point2) -> bool {
        let two = Rational::from_integer(2);
        self.contains(&p.scale(&two))
    }

    /// Image under the linear part of `map`.
    pub fn transform(&self, map: &AffineMap) -> Lattice2 {
        Lattice2::new(map.apply_linear(&self.b1), map.apply_linear(&self.b2))
            .expect("non-singular image of a lattice")
    }

    /// Equality as point sets, independent of the chosen basis.
    pub fn same_lattice(&self, other: &Lattice2) -> bool {
        self.det == other.det && self.contains(&other.b1) && self.contains(&other.b2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::vector::pt;

    #[test]
    fn membership() {
        let l = Lattice2::new(Vec2::ints(2, 0), Vec2::ints(1, 1)).unwrap();
        assert_eq!(l.det(), &q(2, 1));
        assert!(l.contains(&Vec2::ints(3, 1)));
        assert!(!l.contains(&Vec2::ints(1, 0)));
        assert!(l.contains_half(&Vec2::ints(1, 0)));
        assert!(!l.contains_half(&pt(1, 2, 0, 1)));
        let (s, t) = l.coordinates(&pt(1, 2, 3, 2));
        assert_eq!(l.point(&s, &t), pt(1, 2, 3, 2));
    }

    #[test]
    fn degenerate_basis() {
        assert_eq!(
            Lattice2::new(Vec2::ints(1, 2), Vec2::ints(-2, -4)),
            Err(GeometryError::DegenerateLattice)
        );
    }

    #[test]
    fn basis_independent_equality() {
        let l = Lattice2::new(Vec2::ints(1, 1), Vec2::ints(0, 1)).unwrap();
        assert!(l.is_integer_lattice());
        assert_ne!(l, Lattice2::integer());
    }
}
