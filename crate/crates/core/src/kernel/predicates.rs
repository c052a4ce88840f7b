use num_traits::Zero;

use super::{Circle, Line, Point};
use crate::scalar::Scalar;

/// Twice the signed area of `pqr`.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Scalar {
    (q - p).cross(&(r - p))
}

pub fn is_collinear(p: &Point, q: &Point, r: &Point) -> bool {
    orientation(p, q, r).is_zero()
}

/// Collinearity of a multiset: duplicates are ignored, fewer than three
/// distinct points are trivially collinear.
pub fn all_collinear(points: &[&Point]) -> bool {
    let mut distinct: Vec<&Point> = Vec::with_capacity(points.len());
    for p in points {
        if !distinct.contains(p) {
            distinct.push(p);
        }
    }
    match distinct.as_slice() {
        [p, q, rest @ ..] => rest.iter().all(|r| is_collinear(p, q, r)),
        _ => true,
    }
}

/// The in-circle determinant with rows `(x, y, x^2 + y^2, 1)`.
pub fn concyclic_determinant(p: &Point, q: &Point, r: &Point, s: &Point) -> Scalar {
    // Translate s to the origin and expand the remaining 3x3 minor.
    let rows: Vec<(Scalar, Scalar, Scalar)> = [p, q, r]
        .iter()
        .map(|v| {
            let d = *v - s;
            let w = d.norm_sq();
            (d.x, d.y, w)
        })
        .collect();
    let (a, b, c) = (&rows[0], &rows[1], &rows[2]);
    &a.0 * (&b.1 * &c.2 - &b.2 * &c.1) - &a.1 * (&b.0 * &c.2 - &b.2 * &c.0)
        + &a.2 * (&b.0 * &c.1 - &b.1 * &c.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Concyclicity {
    Concyclic,
    NotConcyclic,
    /// All four points on one line: determinant vanishes but no circle exists.
    CollinearDegenerate,
}

pub fn concyclicity(p: &Point, q: &Point, r: &Point, s: &Point) -> Concyclicity {
    if all_collinear(&[p, q, r, s]) {
        Concyclicity::CollinearDegenerate
    } else if concyclic_determinant(p, q, r, s).is_zero() {
        Concyclicity::Concyclic
    } else {
        Concyclicity::NotConcyclic
    }
}

pub fn is_concyclic(p: &Point, q: &Point, r: &Point, s: &Point) -> bool {
    concyclicity(p, q, r, s) == Concyclicity::Concyclic
}

/// Anything a point can lie on.
pub trait Carrier {
    /// Exact residual of the defining equation at `p`.
    fn residual(&self, p: &Point) -> Scalar;
}

impl Carrier for Line {
    fn residual(&self, p: &Point) -> Scalar {
        self.eval(p)
    }
}

impl Carrier for Circle {
    fn residual(&self, p: &Point) -> Scalar {
        self.power(p)
    }
}

pub fn incident<C: Carrier + ?Sized>(carrier: &C, p: &Point) -> bool {
    carrier.residual(p).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
        Point::from_ratios(xn, xd, yn, yd)
    }

    #[test]
    fn collinearity_examples() {
        assert!(is_collinear(&pt(17, 5, 24, 5), &Point::from_ints(-2, 3), &pt(-7, 5, 16, 5)));
        assert!(!is_collinear(&Point::origin(), &Point::from_ints(1, 0), &Point::from_ints(0, 1)));
    }

    #[test]
    fn multiset_collinearity_ignores_duplicates() {
        let f = [pt(21, 5, 22, 5), pt(-7, 5, 36, 5), pt(17, 5, 24, 5), pt(17, 5, 24, 5)];
        assert!(all_collinear(&f.iter().collect::<Vec<_>>()));
        let p = Point::from_ints(1, 1);
        assert!(all_collinear(&[&p, &p, &p]));
    }

    #[test]
    fn concyclic_examples() {
        let u = Point::origin();
        let v = Point::from_ints(2, 2);
        let l = Point::from_ints(-1, 1);
        let m = pt(7, 5, 14, 5);
        assert!(is_concyclic(&u, &v, &l, &m));
        let off = Point::from_ints(3, 3);
        assert_eq!(concyclicity(&u, &v, &l, &off), Concyclicity::NotConcyclic);
        let line: Vec<Point> = (0..4).map(|i| Point::from_ints(i, 2 * i)).collect();
        assert_eq!(
            concyclicity(&line[0], &line[1], &line[2], &line[3]),
            Concyclicity::CollinearDegenerate
        );
        assert!(!is_concyclic(&line[0], &line[1], &line[2], &line[3]));
    }

    #[test]
    fn incidence_examples() {
        let perspectrix = Line::from_ints(1, -3, 11).unwrap();
        assert!(incident(&perspectrix, &pt(2, 5, 19, 5)));
        assert!(incident(&Circle::unit(), &pt(-3, 5, 4, 5)));
        assert!(!incident(&Circle::unit(), &Point::from_ints(1, 1)));
    }
}
