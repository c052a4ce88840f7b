//! Stand-alone checks of the two auxiliary lemmas on arbitrary inputs.

use thiserror::Error;

use super::report::{CheckResult, Checker, Witness};
use crate::error::GeometryError;
use crate::kernel::{
    antipode, circle_through, is_collinear, line_through, meet, perpendicular_at, radical_axis,
    second_intersection_of_circles, Circle, Line, Point,
};
use crate::scalar::Scalar;

/// Inputs on which a lemma says nothing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaInputError {
    #[error("base points are collinear")]
    Collinear,
    #[error("{0}")]
    Coincident(&'static str),
    #[error("S is not on the circumcircle (power {power})")]
    OffCircle { power: Scalar },
    #[error("the three circles are coaxial")]
    Coaxial,
    #[error("two of the circles are tangent at J")]
    Tangent,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// How three lines sit relative to one another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Concurrency {
    At(Point),
    /// The first two lines meet at `point`; the third misses it by `residual`.
    Missed { point: Point, residual: Scalar },
    /// The first two lines are parallel.
    Parallel,
}

pub fn concurrency(lines: &[Line; 3]) -> Concurrency {
    match meet(&lines[0], &lines[1]) {
        Err(_) => Concurrency::Parallel,
        Ok(point) => {
            let residual = lines[2].eval(&point);
            if num_traits::Zero::is_zero(&residual) {
                Concurrency::At(point)
            } else {
                Concurrency::Missed { point, residual }
            }
        }
    }
}

/// Lines through P, Q, R perpendicular to SP, SQ, SR.
pub fn lemma1_perpendiculars(p: &Point, q: &Point, r: &Point, s: &Point) -> Result<[Line; 3], GeometryError> {
    let perp = |v: &Point| line_through(s, v).map(|l| perpendicular_at(v, &l));
    Ok([perp(p)?, perp(q)?, perp(r)?])
}

/// Lines through P, Q, R meeting at S on circle PQR have perpendiculars at
/// P, Q, R concurrent at the antipode of S.
pub fn check_lemma1(p: &Point, q: &Point, r: &Point, s: &Point) -> Result<CheckResult, LemmaInputError> {
    if is_collinear(p, q, r) {
        return Err(LemmaInputError::Collinear);
    }
    if s == p || s == q || s == r {
        return Err(LemmaInputError::Coincident("S coincides with one of P, Q, R"));
    }
    let circle = circle_through(p, q, r)?;
    if !circle.contains(s) {
        return Err(LemmaInputError::OffCircle { power: circle.power(s) });
    }
    let t = antipode(&circle, s)?;
    let lines = lemma1_perpendiculars(p, q, r, s)?;

    let mut ck = Checker::new("lemma1");
    ck.info(Witness::point("T", &t));
    match concurrency(&lines) {
        Concurrency::At(point) => {
            ck.require_equal("concurrency point = antipode of S", &point, &t);
        }
        Concurrency::Missed { residual, .. } => ck.fail(Witness::scalar("third perpendicular residual", &residual)),
        Concurrency::Parallel => ck.fail(Witness::text("perpendiculars", "first two are parallel")),
    }
    Ok(ck.finish())
}

/// The three second intersections of the circles in the second lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma2Points {
    /// S2 ∩ S3.
    pub a: Point,
    /// S1 ∩ S2.
    pub b: Point,
    /// S1 ∩ S3.
    pub d: Point,
}

/// S1 through J, O, L; S2 through J centred at L; S3 through J centred at O.
pub fn lemma2_points(j: &Point, o: &Point, l: &Point) -> Result<Lemma2Points, LemmaInputError> {
    if is_collinear(j, o, l) {
        return Err(LemmaInputError::Collinear);
    }
    let s1 = circle_through(j, o, l)?;
    let s2 = Circle::centered_through(l.clone(), j)?;
    let s3 = Circle::centered_through(o.clone(), j)?;
    if radical_axis(&s1, &s2)? == radical_axis(&s1, &s3)? {
        return Err(LemmaInputError::Coaxial);
    }
    let second = |c1: &Circle, c2: &Circle| -> Result<Point, LemmaInputError> {
        let hit = second_intersection_of_circles(c1, c2, j)?;
        if hit.tangent {
            return Err(LemmaInputError::Tangent);
        }
        Ok(hit.point)
    };
    Ok(Lemma2Points {
        a: second(&s2, &s3)?,
        b: second(&s1, &s2)?,
        d: second(&s1, &s3)?,
    })
}

/// Checks O, A, B and L, A, D collinear. The triple L, B, D as printed in the
/// lemma's original statement is evaluated and recorded in the notes only.
pub fn check_lemma2(j: &Point, o: &Point, l: &Point) -> Result<CheckResult, LemmaInputError> {
    let pts = lemma2_points(j, o, l)?;
    Ok(lemma2_result(o, l, &pts))
}

pub(crate) fn lemma2_result(o: &Point, l: &Point, pts: &Lemma2Points) -> CheckResult {
    let mut ck = lemma2_checker(o, l, pts);
    ck.note(printed_triple_note(l, pts));
    ck.finish()
}

pub(crate) fn lemma2_checker(o: &Point, l: &Point, pts: &Lemma2Points) -> Checker {
    let mut ck = Checker::new("lemma2");
    ck.require_collinear("O, A, B collinear", &[o, &pts.a, &pts.b]);
    ck.require_collinear("L, A, D collinear", &[l, &pts.a, &pts.d]);
    ck.info(Witness::point("A", &pts.a));
    ck.info(Witness::point("B", &pts.b));
    ck.info(Witness::point("D", &pts.d));
    ck
}

pub fn printed_triple_holds(l: &Point, pts: &Lemma2Points) -> bool {
    is_collinear(l, &pts.b, &pts.d)
}

fn printed_triple_note(l: &Point, pts: &Lemma2Points) -> String {
    format!("printed triple L, B, D collinear: {}", printed_triple_holds(l, pts))
}
