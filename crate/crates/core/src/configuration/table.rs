use std::fmt;

use super::labels::{CircleLabel, PointLabel};

/// One perspective pair: `triangle1` and `triangle2` correspond vertex by
/// vertex, their joins concur at `vertex`, and the meets of corresponding
/// sides are the `perspectrix` points, `perspectrix[i]` lying on the sides
/// opposite vertex `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerspectiveRecord {
    pub triangle1: [PointLabel; 3],
    pub triangle2: [PointLabel; 3],
    pub vertex: PointLabel,
    pub perspectrix: [PointLabel; 3],
}

impl PerspectiveRecord {
    /// The circle whose quadrangle, less `vertex`, is `triangle1`.
    pub fn circle1(&self) -> CircleLabel {
        circle_of(&self.triangle1)
    }

    pub fn circle2(&self) -> CircleLabel {
        circle_of(&self.triangle2)
    }
}

fn circle_of(triangle: &[PointLabel; 3]) -> CircleLabel {
    CircleLabel::ALL
        .into_iter()
        .find(|c| triangle.iter().all(|p| c.vertices().contains(p)))
        .expect("every table triangle is inscribed in one of the five circles")
}

fn labels(text: &str) -> [PointLabel; 3] {
    let mut out = [PointLabel::A; 3];
    for (slot, ch) in out.iter_mut().zip(text.chars()) {
        *slot = PointLabel::from_name(ch.encode_utf8(&mut [0; 4])).expect("table label");
    }
    out
}

const ROWS: [(&str, &str, &str, &str); 10] = [
    ("ABC", "abc", "K", "123"),
    ("KBC", "a32", "A", "1cb"),
    ("AKC", "3b1", "B", "c2a"),
    ("ABK", "21c", "C", "ba3"),
    ("Cc2", "Bb3", "1", "aAK"),
    ("Aa3", "Cc1", "2", "bBK"),
    ("Bb1", "Aa2", "3", "cCK"),
    ("Kbc", "A32", "a", "1CB"),
    ("Kca", "B13", "b", "2AC"),
    ("Kab", "C21", "c", "3BA"),
];

/// The ten perspectives of the configuration, in their standard order.
pub fn perspective_table() -> [PerspectiveRecord; 10] {
    ROWS.map(|(t1, t2, v, p)| PerspectiveRecord {
        triangle1: labels(t1),
        triangle2: labels(t2),
        vertex: PointLabel::from_name(v).expect("table label"),
        perspectrix: labels(p),
    })
}

impl fmt::Display for PerspectiveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |t: &[PointLabel; 3]| t.iter().map(|l| l.name()).collect::<String>();
        write!(
            f,
            "{} / {} from {} on {}",
            join(&self.triangle1),
            join(&self.triangle2),
            self.vertex,
            join(&self.perspectrix)
        )
    }
}
