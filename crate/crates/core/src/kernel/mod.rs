//! Exact planar primitives and the constructions and predicates built on them.

mod circle;
mod construct;
mod line;
mod point;
mod predicates;
mod similarity;

pub use circle::Circle;
pub use construct::{
    antipode, circle_through, circumcenter, line_through, meet, orthocentre, parallel_through,
    perpendicular_at, perpendicular_bisector, point_on_unit_circle, radical_axis,
    second_intersection_of_circles, second_intersection_with_line, tangent_at, CircleParam,
    Intersection,
};
pub use line::Line;
pub use point::Point;
pub use predicates::{
    all_collinear, concyclic_determinant, concyclicity, incident, is_collinear, is_concyclic,
    orientation, Carrier, Concyclicity,
};
pub use similarity::{similarity_between, Similarity};
