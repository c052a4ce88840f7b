use std::fmt;

/// The ten points of the configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointLabel {
    A,
    B,
    C,
    K,
    SmallA,
    SmallB,
    SmallC,
    P1,
    P2,
    P3,
}

impl PointLabel {
    pub const ALL: [PointLabel; 10] = [
        PointLabel::A,
        PointLabel::B,
        PointLabel::C,
        PointLabel::K,
        PointLabel::SmallA,
        PointLabel::SmallB,
        PointLabel::SmallC,
        PointLabel::P1,
        PointLabel::P2,
        PointLabel::P3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            PointLabel::A => "A",
            PointLabel::B => "B",
            PointLabel::C => "C",
            PointLabel::K => "K",
            PointLabel::SmallA => "a",
            PointLabel::SmallB => "b",
            PointLabel::SmallC => "c",
            PointLabel::P1 => "1",
            PointLabel::P2 => "2",
            PointLabel::P3 => "3",
        }
    }

    pub fn from_name(name: &str) -> Option<PointLabel> {
        PointLabel::ALL.into_iter().find(|l| l.name() == name)
    }

    /// The two circles of the configuration through this point, in
    /// [`CircleLabel::ALL`] order.
    pub fn circles(self) -> [CircleLabel; 2] {
        let mut it = CircleLabel::ALL
            .into_iter()
            .filter(|c| c.vertices().contains(&self));
        [it.next().unwrap(), it.next().unwrap()]
    }

    /// The circle through this point other than `circle`.
    pub fn other_circle(self, circle: CircleLabel) -> CircleLabel {
        let [first, second] = self.circles();
        debug_assert!(first == circle || second == circle);
        if first == circle {
            second
        } else {
            first
        }
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The five circles, named by their cyclic quadrangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CircleLabel {
    Abck,
    AbcSmall,
    Aa23,
    Bb31,
    Cc12,
}

impl CircleLabel {
    pub const ALL: [CircleLabel; 5] = [
        CircleLabel::Abck,
        CircleLabel::AbcSmall,
        CircleLabel::Aa23,
        CircleLabel::Bb31,
        CircleLabel::Cc12,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            CircleLabel::Abck => "ABCK",
            CircleLabel::AbcSmall => "abcK",
            CircleLabel::Aa23 => "Aa23",
            CircleLabel::Bb31 => "Bb31",
            CircleLabel::Cc12 => "Cc12",
        }
    }

    pub fn from_name(name: &str) -> Option<CircleLabel> {
        CircleLabel::ALL.into_iter().find(|l| l.name() == name)
    }

    /// The quadrangle inscribed in this circle, in its conventional order.
    pub fn vertices(self) -> [PointLabel; 4] {
        use PointLabel::*;
        match self {
            CircleLabel::Abck => [A, B, C, K],
            CircleLabel::AbcSmall => [SmallA, SmallB, SmallC, K],
            CircleLabel::Aa23 => [A, SmallA, P2, P3],
            CircleLabel::Bb31 => [B, SmallB, P3, P1],
            CircleLabel::Cc12 => [C, SmallC, P1, P2],
        }
    }

    pub fn center(self) -> CenterLabel {
        CenterLabel::ALL[self.index()]
    }
}

impl fmt::Display for CircleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Centers of the five circles: U of ABCK, V of abcK, L of Aa23, M of Bb31,
/// N of Cc12.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CenterLabel {
    U,
    V,
    L,
    M,
    N,
}

impl CenterLabel {
    pub const ALL: [CenterLabel; 5] =
        [CenterLabel::U, CenterLabel::V, CenterLabel::L, CenterLabel::M, CenterLabel::N];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["U", "V", "L", "M", "N"][self.index()]
    }

    pub fn from_name(name: &str) -> Option<CenterLabel> {
        CenterLabel::ALL.into_iter().find(|l| l.name() == name)
    }

    pub fn circle(self) -> CircleLabel {
        CircleLabel::ALL[self.index()]
    }
}

impl fmt::Display for CenterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
