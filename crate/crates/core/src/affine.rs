use crate::error::GeometryError;
use crate::rational::Rational;
use crate::vector::{Point2, Vec2};

/// `p -> M p + t` with `M = [[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
    t: Vec2,
    det: Rational,
}

impl AffineMap {
    pub fn new(
        a: Rational,
        b: Rational,
        c: Rational,
        d: Rational,
        t: Vec2,
    ) -> Result<AffineMap, GeometryError> {
        let det = &a * &d - &b * &c;
        if det.is_zero() {
            return Err(GeometryError::SingularMap);
        }
        Ok(AffineMap { a, b, c, d, t, det })
    }

    pub fn linear(
        a: Rational,
        b: Rational,
        c: Rational,
        d: Rational,
    ) -> Result<AffineMap, GeometryError> {
        AffineMap::new(a, b, c, d, Vec2::zero())
    }

    pub fn identity() -> AffineMap {
        AffineMap::unimodular(1, 0, 0, 1).unwrap()
    }

    /// Integer matrix with determinant +-1.
    pub fn unimodular(a: i64, b: i64, c: i64, d: i64) -> Result<AffineMap, GeometryError> {
        let m = AffineMap::linear(a.into(), b.into(), c.into(), d.into())?;
        if !m.is_unimodular() {
            return Err(GeometryError::NotUnimodular);
        }
        Ok(m)
    }

    pub fn matrix(&self) -> [[&Rational; 2]; 2] {
        [[&self.a, &self.b], [&self.c, &self.d]]
    }

    pub fn translation(&self) -> &Vec2 {
        &self.t
    }

    pub fn det(&self) -> &Rational {
        &self.det
    }

    pub fn is_linear(&self) -> bool {
        self.t.is_zero()
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_linear()
            && [&self.a, &self.b, &self.c, &self.d].iter().all(|e| e.is_integer())
            && self.det.abs() == Rational::one()
    }

    pub fn apply_linear(&self, v: &Vec2) -> Vec2 {
        Vec2::new(&self.a * &v.x + &self.b * &v.y, &self.c * &v.x + &self.d * &v.y)
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        self.apply_linear(p) + &self.t
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let a = &self.a * &other.a + &self.b * &other.c;
        let b = &self.a * &other.b + &self.b * &other.d;
        let c = &self.c * &other.a + &self.d * &other.c;
        let d = &self.c * &other.b + &self.d * &other.d;
        let t = self.apply(&other.t);
        AffineMap::new(a, b, c, d, t).expect("product of non-singular maps")
    }

    pub fn inverse(&self) -> AffineMap {
        let inv = self.det.recip();
        let a = &self.d * &inv;
        let b = -(&self.b * &inv);
        let c = -(&self.c * &inv);
        let d = &self.a * &inv;
        let lin = AffineMap::linear(a, b, c, d).expect("inverse is non-singular");
        let t = -lin.apply_linear(&self.t);
        AffineMap { t, ..lin }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::vector::pt;

    #[test]
    fn singular_rejected() {
        assert_eq!(
            AffineMap::linear(q(1, 1), q(2, 1), q(2, 1), q(4, 1)),
            Err(GeometryError::SingularMap)
        );
        assert_eq!(AffineMap::unimodular(2, 0, 0, 1), Err(GeometryError::NotUnimodular));
    }

    #[test]
    fn compose_and_invert() {
        let m = AffineMap::new(q(1, 2), q(-1, 1), q(0, 1), q(1, 2), pt(1, 3, 0, 1)).unwrap();
        let inv = m.inverse();
        let p = pt(5, 7, -2, 3);
        assert_eq!(inv.apply(&m.apply(&p)), p);
        assert_eq!(m.compose(&inv), AffineMap::identity());
        assert_eq!(m.det(), &q(1, 4));
    }
}
