use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use super::labels::{CenterLabel, CircleLabel, PointLabel};
use super::seed::ConfigurationSeed;
use crate::error::GeometryError;
use crate::kernel::{
    circle_through, line_through, meet, point_on_unit_circle, second_intersection_with_line,
    Circle, Point,
};

/// Why a seed does not yield a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegenerateReason {
    DuplicateParameter,
    IdenticalCircles,
    /// A line through K is tangent to the second circle, so a, b or c is K.
    TangentAtK,
    /// A pair of corresponding sides is parallel: a perspectrix point at infinity.
    ParallelSides,
    CoincidentPoints,
    ConstructionFailure,
}

impl DegenerateReason {
    pub fn code(self) -> &'static str {
        match self {
            DegenerateReason::DuplicateParameter => "duplicate-parameter",
            DegenerateReason::IdenticalCircles => "identical-circles",
            DegenerateReason::TangentAtK => "tangent-at-k",
            DegenerateReason::ParallelSides => "parallel-sides",
            DegenerateReason::CoincidentPoints => "coincident-points",
            DegenerateReason::ConstructionFailure => "construction-failure",
        }
    }
}

impl fmt::Display for DegenerateReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("degenerate seed ({reason}): {detail}")]
pub struct DegenerateSeed {
    pub reason: DegenerateReason,
    pub detail: String,
}

impl DegenerateSeed {
    fn new(reason: DegenerateReason, detail: impl Into<String>) -> Self {
        DegenerateSeed { reason, detail: detail.into() }
    }
}

/// The ten points, J, the five circles and their centers.
///
/// Values built by [`build_configuration`] satisfy the incidence structure
/// by construction. [`WoodDesarguesConfiguration::from_parts`] and the
/// setters accept anything, so that loaded or tampered data can be verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WoodDesarguesConfiguration {
    seed: Option<ConfigurationSeed>,
    j: Point,
    points: [Point; 10],
    circles: [Circle; 5],
    centers: [Point; 5],
}

impl WoodDesarguesConfiguration {
    pub fn from_parts(
        seed: Option<ConfigurationSeed>,
        j: Point,
        points: [Point; 10],
        circles: [Circle; 5],
        centers: [Point; 5],
    ) -> Self {
        WoodDesarguesConfiguration { seed, j, points, circles, centers }
    }

    pub fn seed(&self) -> Option<&ConfigurationSeed> {
        self.seed.as_ref()
    }

    pub fn j(&self) -> &Point {
        &self.j
    }

    pub fn point(&self, label: PointLabel) -> &Point {
        &self.points[label.index()]
    }

    pub fn points(&self) -> impl Iterator<Item = (PointLabel, &Point)> {
        PointLabel::ALL.into_iter().zip(self.points.iter())
    }

    pub fn circle(&self, label: CircleLabel) -> &Circle {
        &self.circles[label.index()]
    }

    pub fn circles(&self) -> impl Iterator<Item = (CircleLabel, &Circle)> {
        CircleLabel::ALL.into_iter().zip(self.circles.iter())
    }

    pub fn center(&self, label: CenterLabel) -> &Point {
        &self.centers[label.index()]
    }

    pub fn centers(&self) -> impl Iterator<Item = (CenterLabel, &Point)> {
        CenterLabel::ALL.into_iter().zip(self.centers.iter())
    }

    /// Center of the circle with the given label.
    pub fn center_of(&self, circle: CircleLabel) -> &Point {
        self.center(circle.center())
    }

    pub fn quadrangle(&self, circle: CircleLabel) -> [Point; 4] {
        circle.vertices().map(|v| self.point(v).clone())
    }

    pub fn set_point(&mut self, label: PointLabel, p: Point) {
        self.points[label.index()] = p;
    }

    pub fn set_j(&mut self, p: Point) {
        self.j = p;
    }

    pub fn set_center(&mut self, label: CenterLabel, p: Point) {
        self.centers[label.index()] = p;
    }

    pub fn set_circle(&mut self, label: CircleLabel, c: Circle) {
        self.circles[label.index()] = c;
    }
}

/// Constructs the configuration from its seed.
///
/// Circle 1 is the unit circle; J, K, A, B, C sit on it at the seeded
/// parameters. Circle 2 passes through J and K with the seeded center, a, b, c
/// are the second meets of AK, BK, CK with it, and 1, 2, 3 are BC∩bc, CA∩ca,
/// AB∩ab.
pub fn build_configuration(seed: &ConfigurationSeed) -> Result<WoodDesarguesConfiguration, DegenerateSeed> {
    use DegenerateReason::*;
    use PointLabel as P;

    if seed.has_duplicate_parameter() {
        return Err(DegenerateSeed::new(DuplicateParameter, "unit-circle parameters must be pairwise distinct"));
    }
    let [j, k, a, b, c] = seed.params().map(point_on_unit_circle);

    let center2 = k.midpoint(&j) + (&k - &j).rot90().scale(&seed.s);
    if center2.is_zero() {
        return Err(DegenerateSeed::new(IdenticalCircles, "second circle coincides with the unit circle"));
    }
    let circle2 = Circle::centered_through(center2, &j)
        .map_err(|e| DegenerateSeed::new(ConstructionFailure, e.to_string()))?;

    let construction = |e: GeometryError| DegenerateSeed::new(ConstructionFailure, e.to_string());
    let through_k = |p: &Point, name: &str| -> Result<Point, DegenerateSeed> {
        let line = line_through(&k, p).map_err(construction)?;
        let hit = second_intersection_with_line(&circle2, &line, &k).map_err(construction)?;
        if hit.tangent {
            return Err(DegenerateSeed::new(TangentAtK, format!("line K{name} is tangent to the second circle")));
        }
        Ok(hit.point)
    };
    let sa = through_k(&a, "A")?;
    let sb = through_k(&b, "B")?;
    let sc = through_k(&c, "C")?;

    let side_meet = |p: &Point, q: &Point, r: &Point, s: &Point, name: &str| -> Result<Point, DegenerateSeed> {
        let l1 = line_through(p, q).map_err(construction)?;
        let l2 = line_through(r, s).map_err(construction)?;
        meet(&l1, &l2).map_err(|e| match e {
            GeometryError::ParallelLines => {
                DegenerateSeed::new(ParallelSides, format!("sides meeting at {name} are parallel"))
            }
            other => construction(other),
        })
    };
    let p1 = side_meet(&b, &c, &sb, &sc, "1")?;
    let p2 = side_meet(&c, &a, &sc, &sa, "2")?;
    let p3 = side_meet(&a, &b, &sa, &sb, "3")?;

    let points = [a, b, c, k, sa, sb, sc, p1, p2, p3];
    for (i, p) in points.iter().enumerate() {
        if p == &j {
            return Err(DegenerateSeed::new(CoincidentPoints, format!("{} coincides with J", P::ALL[i])));
        }
        if let Some(d) = points[i + 1..].iter().position(|q| q == p) {
            return Err(DegenerateSeed::new(
                CoincidentPoints,
                format!("{} coincides with {}", P::ALL[i], P::ALL[i + 1 + d]),
            ));
        }
    }

    let circles = CircleLabel::ALL.map(|label| {
        let [p, q, r, _] = label.vertices().map(|v| &points[v.index()]);
        circle_through(p, q, r)
    });
    if let Some(e) = circles.iter().find_map(|c| c.as_ref().err()) {
        return Err(construction(e.clone()));
    }
    let circles = circles.map(Result::unwrap);
    let centers = circles.clone().map(|c| c.center().clone());
    debug_assert!(centers[0].x.is_zero() && centers[0].y.is_zero());

    Ok(WoodDesarguesConfiguration {
        seed: Some(seed.clone()),
        j,
        points,
        circles,
        centers,
    })
}
