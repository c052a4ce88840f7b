use std::fmt;

use crate::kernel::CircleParam;
use crate::scalar::{self, Scalar};

/// Six rational parameters fixing a configuration: unit-circle parameters
/// for J, K, A, B, C and the offset `s` placing the second circle's center
/// at `midpoint(J, K) + s·rot90(K - J)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConfigurationSeed {
    pub t_j: CircleParam,
    pub t_k: CircleParam,
    pub t_a: CircleParam,
    pub t_b: CircleParam,
    pub t_c: CircleParam,
    pub s: Scalar,
}

impl ConfigurationSeed {
    /// `(tJ, tK, tA, tB, tC, s) = (0, 1, -1, 2, 3, -3/2)`.
    pub fn reference() -> Self {
        let fin = |n| CircleParam::Finite(scalar::int(n));
        ConfigurationSeed {
            t_j: fin(0),
            t_k: fin(1),
            t_a: fin(-1),
            t_b: fin(2),
            t_c: fin(3),
            s: scalar::ratio(-3, 2),
        }
    }

    pub fn params(&self) -> [&CircleParam; 5] {
        [&self.t_j, &self.t_k, &self.t_a, &self.t_b, &self.t_c]
    }

    pub fn has_duplicate_parameter(&self) -> bool {
        let p = self.params();
        (0..5).any(|i| (i + 1..5).any(|j| p[i] == p[j]))
    }
}

impl fmt::Display for CircleParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircleParam::Finite(t) => write!(f, "{t}"),
            CircleParam::Infinity => f.write_str("inf"),
        }
    }
}

/// The seed-text form `tJ=..,tK=..,tA=..,tB=..,tC=..,s=..`.
impl fmt::Display for ConfigurationSeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tJ={},tK={},tA={},tB={},tC={},s={}",
            self.t_j, self.t_k, self.t_a, self.t_b, self.t_c, self.s
        )
    }
}
