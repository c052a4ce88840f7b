//! Ruler-and-compass constructions over exact rationals.
//!
//! Intersections with circles are only ever taken when one common point is
//! already known, so the second root follows rationally from Vieta.

use num_traits::{One, Zero};

use super::{Circle, Line, Point};
use crate::error::{GeometryError, Result};
use crate::scalar::{self, Scalar};

/// Tangent-half-angle parameter of a unit-circle point; `Infinity` closes the
/// parametrization at `(-1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CircleParam {
    Finite(Scalar),
    Infinity,
}

/// Result of a second-intersection construction. `tangent` is set when the
/// carriers touch at the known point, in which case `point` is that point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intersection {
    pub point: Point,
    pub tangent: bool,
}

pub fn point_on_unit_circle(t: &CircleParam) -> Point {
    match t {
        CircleParam::Infinity => Point::new(scalar::int(-1), Scalar::zero()),
        CircleParam::Finite(t) => {
            let t2 = t * t;
            let d = Scalar::one() + &t2;
            Point::new((Scalar::one() - &t2) / &d, (t * scalar::int(2)) / &d)
        }
    }
}

pub fn line_through(p: &Point, q: &Point) -> Result<Line> {
    if p == q {
        return Err(GeometryError::CoincidentPoints);
    }
    // Normal is the direction q - p turned a quarter.
    let l = &p.y - &q.y;
    let m = &q.x - &p.x;
    let n = -(&l * &p.x + &m * &p.y);
    Line::new(l, m, n)
}

pub fn meet(a: &Line, b: &Line) -> Result<Point> {
    let det = a.l() * b.m() - a.m() * b.l();
    if det.is_zero() {
        return Err(GeometryError::ParallelLines);
    }
    let x = (a.m() * b.n() - a.n() * b.m()) / &det;
    let y = (a.n() * b.l() - a.l() * b.n()) / &det;
    Ok(Point::new(x, y))
}

pub fn perpendicular_bisector(p: &Point, q: &Point) -> Result<Line> {
    if p == q {
        return Err(GeometryError::CoincidentPoints);
    }
    // |X - p|^2 = |X - q|^2  <=>  2(q - p)·X + |p|^2 - |q|^2 = 0
    let d = q - p;
    Line::new(
        &d.x * scalar::int(2),
        &d.y * scalar::int(2),
        p.norm_sq() - q.norm_sq(),
    )
}

/// Line through `p` perpendicular to `l`.
pub fn perpendicular_at(p: &Point, l: &Line) -> Line {
    let d = l.direction();
    Line::new(d.x.clone(), d.y.clone(), -d.dot(p)).expect("direction of a valid line is nonzero")
}

/// Line through `p` parallel to `l`.
pub fn parallel_through(p: &Point, l: &Line) -> Line {
    Line::new(l.l().clone(), l.m().clone(), -l.normal().dot(p))
        .expect("normal of a valid line is nonzero")
}

pub fn circle_through(p: &Point, q: &Point, r: &Point) -> Result<Circle> {
    if super::orientation(p, q, r).is_zero() {
        return Err(GeometryError::CollinearPoints);
    }
    let center = meet(&perpendicular_bisector(p, q)?, &perpendicular_bisector(p, r)?)?;
    let r2 = center.dist_sq(p);
    Circle::new(center, r2)
}

pub fn second_intersection_with_line(c: &Circle, l: &Line, known: &Point) -> Result<Intersection> {
    if !c.contains(known) || !l.contains(known) {
        return Err(GeometryError::NotIncident);
    }
    // known + t·d on the circle: t^2 |d|^2 + 2t d·(known - center) = 0.
    let d = l.direction();
    let t = -(d.dot(&(known - c.center())) * scalar::int(2)) / d.norm_sq();
    let tangent = t.is_zero();
    Ok(Intersection {
        point: known + d.scale(&t),
        tangent,
    })
}

/// The line of equal power with respect to two non-concentric circles.
pub fn radical_axis(c1: &Circle, c2: &Circle) -> Result<Line> {
    let (p, q) = (c1.center(), c2.center());
    if p == q {
        return Err(if c1.radius_sq() == c2.radius_sq() {
            GeometryError::IdenticalCircles
        } else {
            GeometryError::DegenerateInput("concentric circles have no radical axis")
        });
    }
    // power1(X) - power2(X) = 2(q - p)·X + |p|^2 - |q|^2 - r1^2 + r2^2
    let d = q - p;
    Line::new(
        &d.x * scalar::int(2),
        &d.y * scalar::int(2),
        p.norm_sq() - q.norm_sq() - c1.radius_sq() + c2.radius_sq(),
    )
}

pub fn second_intersection_of_circles(c1: &Circle, c2: &Circle, known: &Point) -> Result<Intersection> {
    if c1 == c2 {
        return Err(GeometryError::IdenticalCircles);
    }
    if !c1.contains(known) || !c2.contains(known) {
        return Err(GeometryError::NotIncident);
    }
    let axis = radical_axis(c1, c2)?;
    second_intersection_with_line(c1, &axis, known)
}

pub fn antipode(c: &Circle, p: &Point) -> Result<Point> {
    if !c.contains(p) {
        return Err(GeometryError::NotOnCircle);
    }
    Ok(c.center().scale(&scalar::int(2)) - p)
}

pub fn tangent_at(c: &Circle, p: &Point) -> Result<Line> {
    if !c.contains(p) {
        return Err(GeometryError::NotOnCircle);
    }
    let radius = line_through(c.center(), p)?;
    Ok(perpendicular_at(p, &radius))
}

pub fn circumcenter(p: &Point, q: &Point, r: &Point) -> Result<Point> {
    circle_through(p, q, r).map(|c| c.center().clone())
}

/// Meet of two altitudes, cross-checked against `p + q + r - 2·circumcenter`.
pub fn orthocentre(p: &Point, q: &Point, r: &Point) -> Result<Point> {
    if super::orientation(p, q, r).is_zero() {
        return Err(GeometryError::CollinearPoints);
    }
    let alt_p = perpendicular_at(p, &line_through(q, r)?);
    let alt_q = perpendicular_at(q, &line_through(p, r)?);
    let h = meet(&alt_p, &alt_q)?;
    debug_assert_eq!(
        h,
        p + q + r - circumcenter(p, q, r)?.scale(&scalar::int(2)),
        "orthocentre identity"
    );
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn pt(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
        Point::from_ratios(xn, xd, yn, yd)
    }

    fn fin(n: i64) -> CircleParam {
        CircleParam::Finite(int(n))
    }

    #[test]
    fn unit_circle_parametrization() {
        assert_eq!(point_on_unit_circle(&fin(0)), Point::from_ints(1, 0));
        assert_eq!(point_on_unit_circle(&fin(1)), Point::from_ints(0, 1));
        assert_eq!(point_on_unit_circle(&fin(2)), pt(-3, 5, 4, 5));
        assert_eq!(point_on_unit_circle(&CircleParam::Infinity), Point::from_ints(-1, 0));
    }

    #[test]
    fn line_through_examples() {
        let l = line_through(&Point::from_ints(0, -1), &Point::from_ints(0, 1)).unwrap();
        assert_eq!(l, Line::from_ints(1, 0, 0).unwrap());
        let l = line_through(&pt(17, 5, 24, 5), &Point::from_ints(-2, 3)).unwrap();
        assert_eq!(l, Line::from_ints(1, -3, 11).unwrap());
        let l = line_through(&Point::origin(), &Point::from_ints(1, 1)).unwrap();
        assert_eq!(l, Line::from_ints(1, -1, 0).unwrap());
        assert_eq!(
            line_through(&Point::origin(), &Point::origin()),
            Err(GeometryError::CoincidentPoints)
        );
    }

    #[test]
    fn meet_examples() {
        let p = meet(&Line::from_ints(5, -5, 7).unwrap(), &Line::from_ints(3, 1, -15).unwrap());
        assert_eq!(p.unwrap(), pt(17, 5, 24, 5));
        let o = meet(&Line::from_ints(1, 0, 0).unwrap(), &Line::from_ints(0, 1, 0).unwrap());
        assert_eq!(o.unwrap(), Point::origin());
        let par = meet(&Line::from_ints(1, 0, 0).unwrap(), &Line::from_ints(1, 0, -1).unwrap());
        assert_eq!(par, Err(GeometryError::ParallelLines));
        let same = Line::from_ints(2, 3, 1).unwrap();
        assert_eq!(meet(&same, &same), Err(GeometryError::ParallelLines));
    }

    #[test]
    fn bisector_examples() {
        let b = perpendicular_bisector(&Point::origin(), &Point::from_ints(2, 0)).unwrap();
        assert_eq!(b, Line::from_ints(1, 0, -1).unwrap());
        let b = perpendicular_bisector(&Point::from_ints(1, 0), &pt(-7, 5, 2, 5)).unwrap();
        assert_eq!(b, Line::from_ints(30, -5, 7).unwrap());
        let b = perpendicular_bisector(&Point::from_ints(0, -1), &Point::from_ints(0, 3)).unwrap();
        assert_eq!(b, Line::from_ints(0, 1, -1).unwrap());
        assert!(perpendicular_bisector(&Point::origin(), &Point::origin()).is_err());
    }

    #[test]
    fn perpendicular_and_parallel() {
        let x_axis = Line::from_ints(0, 1, 0).unwrap();
        assert_eq!(perpendicular_at(&Point::origin(), &x_axis), Line::from_ints(1, 0, 0).unwrap());
        assert_eq!(
            parallel_through(&Point::from_ints(0, 1), &x_axis),
            Line::from_ints(0, 1, -1).unwrap()
        );
        let diag = Line::from_ints(1, -1, 0).unwrap();
        assert_eq!(
            perpendicular_at(&Point::from_ints(1, 0), &diag),
            Line::from_ints(1, 1, -1).unwrap()
        );
    }

    #[test]
    fn circle_through_examples() {
        let c = circle_through(&Point::from_ints(1, 0), &Point::from_ints(0, 1), &Point::from_ints(-1, 0))
            .unwrap();
        assert_eq!(c, Circle::unit());
        let c = circle_through(&Point::from_ints(0, -1), &Point::from_ints(0, 3), &Point::from_ints(-2, 3))
            .unwrap();
        assert_eq!((c.center(), c.radius_sq()), (&Point::from_ints(-1, 1), &int(5)));
        let c = circle_through(&Point::origin(), &Point::from_ints(2, 2), &Point::from_ints(1, 0)).unwrap();
        assert_eq!((c.center(), c.radius_sq()), (&pt(1, 2, 3, 2), &ratio(5, 2)));
        let err = circle_through(&Point::origin(), &Point::from_ints(1, 1), &Point::from_ints(2, 2));
        assert_eq!(err, Err(GeometryError::CollinearPoints));
    }

    #[test]
    fn second_intersection_with_line_examples() {
        let x0 = Line::from_ints(1, 0, 0).unwrap();
        let hit = second_intersection_with_line(&Circle::unit(), &x0, &Point::from_ints(0, 1)).unwrap();
        assert_eq!(hit, Intersection { point: Point::from_ints(0, -1), tangent: false });

        let c2 = Circle::new(Point::from_ints(2, 2), int(5)).unwrap();
        let hit = second_intersection_with_line(&c2, &x0, &Point::from_ints(0, 1)).unwrap();
        assert_eq!(hit.point, Point::from_ints(0, 3));
        // y = x/3 + 1
        let kb = Line::from_ints(1, -3, 3).unwrap();
        let hit = second_intersection_with_line(&c2, &kb, &Point::from_ints(0, 1)).unwrap();
        assert_eq!(hit.point, pt(21, 5, 12, 5));

        let tangent = Line::from_ints(0, 1, -1).unwrap();
        let hit = second_intersection_with_line(&Circle::unit(), &tangent, &Point::from_ints(0, 1)).unwrap();
        assert_eq!(hit, Intersection { point: Point::from_ints(0, 1), tangent: true });

        let off = second_intersection_with_line(&Circle::unit(), &x0, &Point::origin());
        assert_eq!(off, Err(GeometryError::NotIncident));
    }

    #[test]
    fn second_intersection_of_circles_examples() {
        let pent = Circle::new(pt(1, 2, 3, 2), ratio(5, 2)).unwrap();
        let hit = second_intersection_of_circles(&Circle::unit(), &pent, &Point::from_ints(1, 0)).unwrap();
        assert_eq!(hit.point, pt(-4, 5, 3, 5));
        assert_eq!(radical_axis(&Circle::unit(), &pent).unwrap(), Line::from_ints(1, 3, -1).unwrap());

        let s2 = Circle::new(Point::from_ints(0, 1), int(2)).unwrap();
        let s3 = Circle::new(pt(3, 5, -4, 5), ratio(4, 5)).unwrap();
        let hit = second_intersection_of_circles(&s2, &s3, &Point::from_ints(1, 0)).unwrap();
        assert_eq!(hit.point, pt(-1, 5, -2, 5));

        let outer = Circle::new(Point::from_ints(2, 0), int(1)).unwrap();
        let hit = second_intersection_of_circles(&Circle::unit(), &outer, &Point::from_ints(1, 0)).unwrap();
        assert_eq!(hit, Intersection { point: Point::from_ints(1, 0), tangent: true });

        assert_eq!(
            second_intersection_of_circles(&Circle::unit(), &Circle::unit(), &Point::from_ints(1, 0)),
            Err(GeometryError::IdenticalCircles)
        );
        assert_eq!(
            second_intersection_of_circles(&Circle::unit(), &pent, &Point::from_ints(0, 1)),
            Err(GeometryError::NotIncident)
        );
    }

    #[test]
    fn antipode_and_tangent() {
        assert_eq!(antipode(&Circle::unit(), &Point::from_ints(1, 0)).unwrap(), Point::from_ints(-1, 0));
        assert_eq!(
            tangent_at(&Circle::unit(), &Point::from_ints(0, 1)).unwrap(),
            Line::from_ints(0, 1, -1).unwrap()
        );
        let pent = Circle::new(pt(1, 2, 3, 2), ratio(5, 2)).unwrap();
        assert_eq!(antipode(&pent, &pt(-4, 5, 3, 5)).unwrap(), pt(9, 5, 12, 5));
        assert_eq!(antipode(&Circle::unit(), &Point::origin()), Err(GeometryError::NotOnCircle));
        assert_eq!(tangent_at(&Circle::unit(), &Point::origin()), Err(GeometryError::NotOnCircle));
    }

    #[test]
    fn orthocentre_examples() {
        let h = orthocentre(&Point::origin(), &Point::from_ints(1, 0), &Point::from_ints(0, 1)).unwrap();
        assert_eq!(h, Point::origin());
        let h = orthocentre(&Point::from_ints(0, -1), &pt(-3, 5, 4, 5), &pt(-4, 5, 3, 5)).unwrap();
        assert_eq!(h, pt(-7, 5, 2, 5));
        let h = orthocentre(&Point::from_ints(0, 3), &pt(21, 5, 12, 5), &Point::from_ints(4, 3)).unwrap();
        assert_eq!(h, pt(21, 5, 22, 5));
        let err = orthocentre(&Point::origin(), &Point::from_ints(1, 1), &Point::from_ints(3, 3));
        assert_eq!(err, Err(GeometryError::CollinearPoints));
    }
}
