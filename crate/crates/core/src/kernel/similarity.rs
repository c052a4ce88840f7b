use std::fmt;

use num_traits::One;

use super::Point;
use crate::error::{GeometryError, Result};
use crate::scalar::Scalar;

/// The direct similarity `z ↦ alpha·z + beta` of the complex plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Similarity {
    alpha: Point,
    beta: Point,
}

impl Similarity {
    pub fn new(alpha: Point, beta: Point) -> Result<Similarity> {
        if alpha.is_zero() {
            return Err(GeometryError::DegenerateInput("similarity multiplier is zero"));
        }
        Ok(Similarity { alpha, beta })
    }

    pub fn identity() -> Similarity {
        Similarity { alpha: Point::one(), beta: Point::origin() }
    }

    pub fn alpha(&self) -> &Point {
        &self.alpha
    }

    pub fn beta(&self) -> &Point {
        &self.beta
    }

    pub fn apply(&self, z: &Point) -> Point {
        &self.alpha * z + &self.beta
    }

    /// Square of the dilation ratio, `|alpha|^2`.
    pub fn ratio_sq(&self) -> Scalar {
        self.alpha.norm_sq()
    }

    pub fn is_congruence(&self) -> bool {
        self.ratio_sq().is_one()
    }

    /// `beta / (1 - alpha)`; `None` for translations (including the identity).
    pub fn fixed_point(&self) -> Option<Point> {
        self.beta.checked_div(&(Point::one() - &self.alpha))
    }

    pub fn inverse(&self) -> Similarity {
        let inv = self.alpha.recip().expect("alpha is nonzero");
        let beta = -(&inv * &self.beta);
        Similarity { alpha: inv, beta }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Similarity) -> Similarity {
        Similarity {
            alpha: &self.alpha * &other.alpha,
            beta: &self.alpha * &other.beta + &self.beta,
        }
    }
}

impl fmt::Display for Similarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "z -> ({} + {}i)z + ({} + {}i)",
            self.alpha.x, self.alpha.y, self.beta.x, self.beta.y
        )
    }
}

/// The direct similarity carrying `source[i]` to `target[i]` for every `i`,
/// if one exists.
///
/// Fitted on the first two pairs and confirmed exactly on the rest. Returns
/// `Ok(None)` when some remaining pair disagrees; errors when the lists are
/// unusable or the first two source points coincide.
pub fn similarity_between(source: &[Point], target: &[Point]) -> Result<Option<Similarity>> {
    if source.len() != target.len() || source.len() < 2 {
        return Err(GeometryError::DegenerateInput("point lists must have equal length >= 2"));
    }
    let ds = &source[1] - &source[0];
    let dt = &target[1] - &target[0];
    let alpha = dt.checked_div(&ds).ok_or(GeometryError::CoincidentPoints)?;
    if alpha.is_zero() {
        // Target collapses: not a similarity.
        return Ok(None);
    }
    let beta = &target[0] - &alpha * &source[0];
    let map = Similarity { alpha, beta };
    let all_match = source[2..]
        .iter()
        .zip(&target[2..])
        .all(|(s, t)| &map.apply(s) == t);
    Ok(all_match.then_some(map))
}
