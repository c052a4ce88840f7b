use std::fmt;

use num_traits::Zero;

use super::Point;
use crate::error::{GeometryError, Result};
use crate::scalar::Scalar;

/// A circle held by its center and squared radius; radii themselves may be
/// irrational and are never formed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circle {
    center: Point,
    radius_sq: Scalar,
}

impl Circle {
    pub fn new(center: Point, radius_sq: Scalar) -> Result<Circle> {
        if radius_sq <= Scalar::zero() {
            return Err(GeometryError::NonPositiveRadius);
        }
        Ok(Circle { center, radius_sq })
    }

    /// Unit circle at the origin.
    pub fn unit() -> Circle {
        Circle {
            center: Point::origin(),
            radius_sq: crate::scalar::int(1),
        }
    }

    /// Circle with the given center passing through `p`.
    pub fn centered_through(center: Point, p: &Point) -> Result<Circle> {
        let r2 = center.dist_sq(p);
        Circle::new(center, r2)
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius_sq(&self) -> &Scalar {
        &self.radius_sq
    }

    /// Power of `p`: `|p - center|^2 - r^2`.
    pub fn power(&self, p: &Point) -> Scalar {
        self.center.dist_sq(p) - &self.radius_sq
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.power(p).is_zero()
    }
}

impl fmt::Display for Circle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "center {} r^2 {}", self.center, self.radius_sq)
    }
}
