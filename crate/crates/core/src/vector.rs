use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::rational::Rational;

/// A point or vector in the plane with exact coordinates.
///
/// Ordering is lexicographic in (x, y).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vec2 {
    pub x: Rational,
    pub y: Rational,
}

pub type Point2 = Vec2;

impl Vec2 {
    pub fn new(x: Rational, y: Rational) -> Vec2 {
        Vec2 { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Vec2 {
        Vec2::new(Rational::from_integer(x), Rational::from_integer(y))
    }

    pub fn zero() -> Vec2 {
        Vec2::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn cross(&self, other: &Vec2) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vec2) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn scale(&self, k: &Rational) -> Vec2 {
        Vec2::new(&self.x * k, &self.y * k)
    }

    pub fn midpoint(&self, other: &Vec2) -> Vec2 {
        let half = Rational::new(1, 2);
        Vec2::new((&self.x + &other.x) * &half, (&self.y + &other.y) * &half)
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }
}

/// Twice the signed area of the triangle (a, b, c); positive when counterclockwise.
pub fn orient(a: &Vec2, b: &Vec2, c: &Vec2) -> Rational {
    (b - a).cross(&(c - a))
}

macro_rules! vec_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Vec2> for &Vec2 {
            type Output = Vec2;
            fn $method(self, rhs: &Vec2) -> Vec2 {
                Vec2::new((&self.x).$method(&rhs.x), (&self.y).$method(&rhs.y))
            }
        }
        impl $tr<Vec2> for Vec2 {
            type Output = Vec2;
            fn $method(self, rhs: Vec2) -> Vec2 {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Vec2> for Vec2 {
            type Output = Vec2;
            fn $method(self, rhs: &Vec2) -> Vec2 {
                (&self).$method(rhs)
            }
        }
        impl $tr<Vec2> for &Vec2 {
            type Output = Vec2;
            fn $method(self, rhs: Vec2) -> Vec2 {
                self.$method(&rhs)
            }
        }
    };
}

vec_binop!(Add, add);
vec_binop!(Sub, sub);

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        -&self
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Builds a point from two `num/den` pairs.
pub fn pt(xn: i64, xd: i64, yn: i64, yd: i64) -> Vec2 {
    Vec2::new(Rational::new(xn, xd), Rational::new(yn, yd))
}
