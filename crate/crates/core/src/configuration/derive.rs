//! Figures derived from a configuration: the twenty orthocentres, the ten
//! common Hagge centres and the circle through the five centers.

use std::collections::BTreeMap;

use super::build::WoodDesarguesConfiguration;
use super::labels::{CenterLabel, CircleLabel, PointLabel};
use super::table::perspective_table;
use crate::error::{GeometryError, Result};
use crate::kernel::{
    antipode, circle_through, is_collinear, meet, orthocentre, perpendicular_bisector,
    second_intersection_of_circles, Circle, Intersection, Point,
};

/// Orthocentres of the twenty triangles, keyed by (circle, omitted vertex).
///
/// The triangle `circle \ v` carries two roles: it is `H_circle(v)` for the
/// quadrangle it is cut from, and `F_other(v)` for the other circle through
/// `v`, whose four perspectrix lines it is bounded by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orthocentres {
    slots: BTreeMap<(CircleLabel, PointLabel), Point>,
}

impl Orthocentres {
    /// Orthocentre of the triangle of `circle`'s quadrangle omitting `v`.
    pub fn h(&self, circle: CircleLabel, v: PointLabel) -> &Point {
        &self.slots[&(circle, v)]
    }

    /// Orthocentre of the triangle bounded by the three perspectrices of
    /// `circle`'s quadrangle other than the one of the perspective at `v`.
    pub fn f(&self, circle: CircleLabel, v: PointLabel) -> &Point {
        &self.slots[&(v.other_circle(circle), v)]
    }

    pub fn h_quadrangle(&self, circle: CircleLabel) -> [Point; 4] {
        circle.vertices().map(|v| self.h(circle, v).clone())
    }

    pub fn f_quadruple(&self, circle: CircleLabel) -> [Point; 4] {
        circle.vertices().map(|v| self.f(circle, v).clone())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(CircleLabel, PointLabel), &Point)> {
        self.slots.iter()
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }
}

/// The common Hagge circle of the perspective at one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HaggeCentre {
    pub h: Point,
    pub orthocentre_1: Point,
    pub orthocentre_2: Point,
    pub circle: Circle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PentagonFigure {
    /// The circle through J and the five centers.
    pub circle: Circle,
    /// Second meet of the pentagon circle with each of the five circles.
    pub meets: BTreeMap<CircleLabel, Intersection>,
    /// Antipode of Z on circle ABCK.
    pub x: Point,
    /// Antipode of Z on the pentagon circle.
    pub y: Point,
}

impl PentagonFigure {
    pub fn meet_with(&self, circle: CircleLabel) -> &Point {
        &self.meets[&circle].point
    }

    /// Second meet with circle ABCK.
    pub fn z(&self) -> &Point {
        self.meet_with(CircleLabel::Abck)
    }

    /// Second meet with circle Aa23.
    pub fn w(&self) -> &Point {
        self.meet_with(CircleLabel::Aa23)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedFigures {
    pub orthocentres: Result<Orthocentres>,
    /// Keyed by perspective vertex; empty when the orthocentres failed.
    pub hagge: BTreeMap<PointLabel, Result<HaggeCentre>>,
    pub pentagon: Result<PentagonFigure>,
}

pub fn derive_orthocentres(config: &WoodDesarguesConfiguration) -> Result<Orthocentres> {
    let mut slots = BTreeMap::new();
    for circle in CircleLabel::ALL {
        for v in circle.vertices() {
            let tri: Vec<&Point> = circle
                .vertices()
                .into_iter()
                .filter(|p| *p != v)
                .map(|p| config.point(p))
                .collect();
            slots.insert((circle, v), orthocentre(tri[0], tri[1], tri[2])?);
        }
    }
    Ok(Orthocentres { slots })
}

/// Hagge centre of the perspective at `vertex`: the meet of the perpendicular
/// bisectors of J with the two orthocentres.
pub fn hagge_centre(j: &Point, h1: &Point, h2: &Point) -> Result<HaggeCentre> {
    if is_collinear(j, h1, h2) {
        return Err(GeometryError::DegenerateInput("J and the two orthocentres are collinear"));
    }
    let h = meet(&perpendicular_bisector(j, h1)?, &perpendicular_bisector(j, h2)?)?;
    let circle = circle_through(j, h1, h2)?;
    debug_assert_eq!(circle.center(), &h);
    Ok(HaggeCentre {
        h,
        orthocentre_1: h1.clone(),
        orthocentre_2: h2.clone(),
        circle,
    })
}

pub fn derive_hagge_centres(
    config: &WoodDesarguesConfiguration,
    orthocentres: &Orthocentres,
) -> BTreeMap<PointLabel, Result<HaggeCentre>> {
    perspective_table()
        .iter()
        .map(|row| {
            let h1 = orthocentres.h(row.circle1(), row.vertex);
            let h2 = orthocentres.h(row.circle2(), row.vertex);
            (row.vertex, hagge_centre(config.j(), h1, h2))
        })
        .collect()
}

pub fn derive_pentagon(config: &WoodDesarguesConfiguration) -> Result<PentagonFigure> {
    let j = config.j();
    let circle = circle_through(config.center(CenterLabel::U), config.center(CenterLabel::V), j)?;
    let mut meets = BTreeMap::new();
    for label in CircleLabel::ALL {
        meets.insert(label, second_intersection_of_circles(&circle, config.circle(label), j)?);
    }
    let z = &meets[&CircleLabel::Abck].point;
    let x = antipode(config.circle(CircleLabel::Abck), z)?;
    let y = antipode(&circle, z)?;
    Ok(PentagonFigure { circle, meets, x, y })
}

pub fn derive_figures(config: &WoodDesarguesConfiguration) -> DerivedFigures {
    let orthocentres = derive_orthocentres(config);
    let hagge = match &orthocentres {
        Ok(o) => derive_hagge_centres(config, o),
        Err(_) => BTreeMap::new(),
    };
    DerivedFigures {
        orthocentres,
        hagge,
        pentagon: derive_pentagon(config),
    }
}
