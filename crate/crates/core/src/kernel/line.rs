use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Point;
use crate::error::{GeometryError, Result};
use crate::scalar::Scalar;

/// The locus `l·x + m·y + n = 0`.
///
/// Coefficients are stored as coprime integers with the first nonzero of
/// `(l, m, n)` positive, so two `Line` values are equal exactly when they
/// describe the same line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    l: Scalar,
    m: Scalar,
    n: Scalar,
}

impl Line {
    pub fn new(l: Scalar, m: Scalar, n: Scalar) -> Result<Line> {
        if l.is_zero() && m.is_zero() {
            return Err(GeometryError::DegenerateLine);
        }
        let coeffs = [l, m, n];
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let leading_negative = ints
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_negative());
        if leading_negative {
            gcd = -gcd;
        }
        let mut it = ints.into_iter().map(|c| Scalar::from_integer(c / &gcd));
        Ok(Line {
            l: it.next().unwrap(),
            m: it.next().unwrap(),
            n: it.next().unwrap(),
        })
    }

    pub fn from_ints(l: i64, m: i64, n: i64) -> Result<Line> {
        Line::new(crate::scalar::int(l), crate::scalar::int(m), crate::scalar::int(n))
    }

    pub fn l(&self) -> &Scalar {
        &self.l
    }

    pub fn m(&self) -> &Scalar {
        &self.m
    }

    pub fn n(&self) -> &Scalar {
        &self.n
    }

    /// Normal vector `(l, m)`.
    pub fn normal(&self) -> Point {
        Point::new(self.l.clone(), self.m.clone())
    }

    /// Direction vector `(m, -l)`.
    pub fn direction(&self) -> Point {
        Point::new(self.m.clone(), -&self.l)
    }

    /// Signed value of the defining form at `p`; zero exactly on the line.
    pub fn eval(&self, p: &Point) -> Scalar {
        &self.l * &p.x + &self.m * &p.y + &self.n
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_parallel_to(&self, other: &Line) -> bool {
        self.normal().cross(&other.normal()).is_zero()
    }
}

/// Renders as e.g. `x - 3y + 11 = 0`.
impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coef, var) in [(&self.l, "x"), (&self.m, "y"), (&self.n, "")] {
            if coef.is_zero() {
                continue;
            }
            let sign = if coef.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            let mag = coef.abs();
            if mag.is_one() && !var.is_empty() {
                f.write_str(var)?;
            } else {
                write!(f, "{mag}{var}")?;
            }
            first = false;
        }
        f.write_str(" = 0")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn normal_form_is_canonical() {
        let a = Line::new(ratio(-1, 2), ratio(3, 2), ratio(-11, 2)).unwrap();
        let b = Line::from_ints(1, -3, 11).unwrap();
        assert_eq!(a, b);
        assert_eq!(Line::from_ints(0, -4, 8).unwrap(), Line::from_ints(0, 1, -2).unwrap());
        assert_eq!(Line::from_ints(0, 0, 1), Err(GeometryError::DegenerateLine));
    }

    #[test]
    fn display() {
        assert_eq!(Line::from_ints(1, -3, 11).unwrap().to_string(), "x - 3y + 11 = 0");
        assert_eq!(Line::from_ints(0, -2, 0).unwrap().to_string(), "y = 0");
        assert_eq!(Line::from_ints(30, -5, 7).unwrap().to_string(), "30x - 5y + 7 = 0");
    }
}
