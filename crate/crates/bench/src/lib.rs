//! Shared inputs for the benchmarks in `benches/`.

use tenpoint_core::scalar::ratio;
use tenpoint_core::{build_configuration, CircleParam, ConfigurationSeed, WoodDesarguesConfiguration};

/// The first `n` buildable seeds of a fixed sweep whose parameters grow in
/// height, so later configurations carry larger numerators.
pub fn sweep(n: usize) -> Vec<(ConfigurationSeed, WoodDesarguesConfiguration)> {
    let mut out = Vec::with_capacity(n);
    let mut k: i64 = 1;
    while out.len() < n {
        let t = |a: i64, b: i64| CircleParam::Finite(ratio(a, b));
        let seed = ConfigurationSeed {
            t_j: t(0, 1),
            t_k: t(1, k + 1),
            t_a: t(-k, 3),
            t_b: t(k + 2, 2),
            t_c: t(2 * k + 5, k + 1),
            s: ratio(-(k % 7) - 1, 2 + k % 5),
        };
        if let Ok(config) = build_configuration(&seed) {
            out.push((seed, config));
        }
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_is_deterministic_and_buildable() {
        let a = sweep(8);
        assert_eq!(a.len(), 8);
        assert_eq!(a, sweep(8));
    }
}
