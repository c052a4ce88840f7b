use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{self, Scalar};

/// A point of the rational plane, also read as the complex number `x + iy`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(scalar::int(x), scalar::int(y))
    }

    /// `(xn/xd, yn/yd)`, convenient for fixtures.
    pub fn from_ratios(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point::new(scalar::ratio(xn, xd), scalar::ratio(yn, yd))
    }

    pub fn origin() -> Self {
        Point::new(Scalar::zero(), Scalar::zero())
    }

    /// The complex unit `1 + 0i`.
    pub fn one() -> Self {
        Point::new(Scalar::one(), Scalar::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, k: &Scalar) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn dot(&self, other: &Point) -> Scalar {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the planar cross product.
    pub fn cross(&self, other: &Point) -> Scalar {
        &self.x * &other.y - &self.y * &other.x
    }

    /// Squared modulus `|z|^2`.
    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }

    pub fn dist_sq(&self, other: &Point) -> Scalar {
        (self - other).norm_sq()
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        (self + other).scale(&scalar::ratio(1, 2))
    }

    /// Quarter turn counter-clockwise, i.e. multiplication by `i`.
    pub fn rot90(&self) -> Point {
        Point::new(-&self.y, self.x.clone())
    }

    pub fn conj(&self) -> Point {
        Point::new(self.x.clone(), -&self.y)
    }

    /// Complex division; `None` when `other` is zero.
    pub fn checked_div(&self, other: &Point) -> Option<Point> {
        let n = other.norm_sq();
        if n.is_zero() {
            return None;
        }
        let num = self * &other.conj();
        Some(Point::new(num.x / &n, num.y / &n))
    }

    /// Complex reciprocal; `None` at zero.
    pub fn recip(&self) -> Option<Point> {
        Point::one().checked_div(self)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (scalar::to_f64(&self.x), scalar::to_f64(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Point> for Point {
            type Output = Point;
            fn $method(self, rhs: Point) -> Point {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Point> for Point {
            type Output = Point;
            fn $method(self, rhs: &Point) -> Point {
                (&self).$method(rhs)
            }
        }
        impl $trait<Point> for &Point {
            type Output = Point;
            fn $method(self, rhs: Point) -> Point {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&Point> for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

/// Complex multiplication.
impl Mul<&Point> for &Point {
    type Output = Point;
    fn mul(self, rhs: &Point) -> Point {
        Point::new(
            &self.x * &rhs.x - &self.y * &rhs.y,
            &self.x * &rhs.y + &self.y * &rhs.x,
        )
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        -&self
    }
}
