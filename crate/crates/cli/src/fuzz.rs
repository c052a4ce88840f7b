//! Deterministic fuzz campaigns over random rational seeds.
//!
//! Seeds come from xorshift64* so a campaign replays bit for bit from its
//! policy. Each seed draws tJ, tK, tA, tB, tC, s in that order, each as a
//! numerator in `[-N, N]` followed by a denominator in `[1, N]`.

use std::collections::BTreeMap;

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tenpoint_core::scalar::{self, Scalar};
use tenpoint_core::verifier::check_names;
use tenpoint_core::{
    build_configuration, verify_all, CheckStatus, CircleParam, ConfigurationSeed,
    VerificationReport, WoodDesarguesConfiguration,
};

use crate::error::CliError;

/// Marsaglia's xorshift64 with the `*` output multiplier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xorshift64Star {
    state: u64,
}

const SEED_MIX: u64 = 0x9E37_79B9_7F4A_7C15;

impl Xorshift64Star {
    pub fn new(seed: u64) -> Self {
        let state = seed ^ SEED_MIX;
        Xorshift64Star { state: if state == 0 { SEED_MIX } else { state } }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform-by-modulo draw from `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    pub fn rational(&mut self, max_magnitude: u32) -> Scalar {
        let n = i64::from(max_magnitude);
        let num = self.range_inclusive(-n, n);
        let den = self.range_inclusive(1, n);
        scalar::ratio(num, den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FuzzPolicy {
    pub count: usize,
    pub rng_seed: u64,
    pub max_magnitude: u32,
    /// Rejections allowed while looking for any one valid seed.
    pub max_retries: u32,
}

impl FuzzPolicy {
    pub const DEFAULT_RETRIES: u32 = 1000;

    pub fn new(count: usize, rng_seed: u64, max_magnitude: u32) -> Self {
        FuzzPolicy { count, rng_seed, max_magnitude, max_retries: Self::DEFAULT_RETRIES }
    }
}

pub fn draw_seed(rng: &mut Xorshift64Star, max_magnitude: u32) -> ConfigurationSeed {
    let mut t = || CircleParam::Finite(rng.rational(max_magnitude));
    let (t_j, t_k, t_a, t_b, t_c) = (t(), t(), t(), t(), t());
    let s = rng.rational(max_magnitude);
    ConfigurationSeed { t_j, t_k, t_a, t_b, t_c, s }
}

/// Valid seeds in draw order together with the count of each rejection reason.
pub struct SeedStream {
    pub seeds: Vec<(ConfigurationSeed, WoodDesarguesConfiguration)>,
    pub rejections: BTreeMap<String, usize>,
}

pub fn generate_seeds(policy: &FuzzPolicy) -> Result<SeedStream, CliError> {
    let mut rng = Xorshift64Star::new(policy.rng_seed);
    let mut seeds = Vec::with_capacity(policy.count);
    let mut rejections = BTreeMap::new();
    for index in 0..policy.count {
        let mut recent: Vec<String> = Vec::new();
        let mut retries = 0u32;
        loop {
            let seed = draw_seed(&mut rng, policy.max_magnitude);
            match build_configuration(&seed) {
                Ok(config) => {
                    seeds.push((seed, config));
                    break;
                }
                Err(e) => {
                    *rejections.entry(e.reason.code().to_string()).or_insert(0) += 1;
                    recent.push(format!("{} ({seed})", e.reason));
                    if recent.len() > 3 {
                        recent.remove(0);
                    }
                    retries += 1;
                    if retries > policy.max_retries {
                        return Err(CliError::RetryBudget { index, reasons: recent.join("; ") });
                    }
                }
            }
        }
    }
    Ok(SeedStream { seeds, rejections })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckTally {
    pub name: String,
    pub pass: usize,
    pub fail: usize,
    pub degenerate_pass: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignEntry {
    pub index: usize,
    pub seed: String,
    pub status: String,
    pub failed: Vec<String>,
    pub degenerate: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignSummary {
    pub seeds: usize,
    pub pass: usize,
    pub degenerate_pass: usize,
    pub fail: usize,
    pub rejections: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub policy: FuzzPolicy,
    pub summary: CampaignSummary,
    pub rejections: BTreeMap<String, usize>,
    pub checks: Vec<CheckTally>,
    pub entries: Vec<CampaignEntry>,
}

impl CampaignReport {
    pub fn all_ok(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("campaign serializes");
        s.push('\n');
        s
    }
}

fn entry(index: usize, seed: &ConfigurationSeed, report: &VerificationReport) -> CampaignEntry {
    let with = |s: CheckStatus| report.results.iter().filter(|r| r.status == s).map(|r| r.name.clone()).collect::<Vec<_>>();
    let failed = with(CheckStatus::Fail);
    let degenerate = with(CheckStatus::DegeneratePass);
    let status = if !failed.is_empty() {
        CheckStatus::Fail
    } else if !degenerate.is_empty() {
        CheckStatus::DegeneratePass
    } else {
        CheckStatus::Pass
    };
    CampaignEntry { index, seed: seed.to_string(), status: status.as_str().into(), failed, degenerate }
}

/// Verifies `policy.count` valid seeds. With `parallel`, verification runs on
/// the rayon pool; results are merged in seed order either way.
pub fn run_campaign(policy: &FuzzPolicy, parallel: bool) -> Result<CampaignReport, CliError> {
    let stream = generate_seeds(policy)?;
    let verify = |(i, (seed, config)): (usize, &(ConfigurationSeed, WoodDesarguesConfiguration))| {
        let report = verify_all(config);
        (entry(i, seed, &report), report)
    };
    let verified: Vec<(CampaignEntry, VerificationReport)> = if parallel {
        stream.seeds.par_iter().enumerate().map(verify).collect()
    } else {
        stream.seeds.iter().enumerate().map(verify).collect()
    };

    let mut tallies: IndexMap<String, CheckTally> = check_names()
        .into_iter()
        .map(|name| (name.clone(), CheckTally { name, pass: 0, fail: 0, degenerate_pass: 0 }))
        .collect();
    for (_, report) in &verified {
        for r in &report.results {
            let t = tallies.get_mut(&r.name).expect("registered check");
            match r.status {
                CheckStatus::Pass => t.pass += 1,
                CheckStatus::Fail => t.fail += 1,
                CheckStatus::DegeneratePass => t.degenerate_pass += 1,
            }
        }
    }
    let entries: Vec<CampaignEntry> = verified.into_iter().map(|(e, _)| e).collect();
    let count = |s: &str| entries.iter().filter(|e| e.status == s).count();
    let summary = CampaignSummary {
        seeds: entries.len(),
        pass: count("pass"),
        degenerate_pass: count("degenerate-pass"),
        fail: count("fail"),
        rejections: stream.rejections.values().sum(),
    };
    Ok(CampaignReport {
        policy: *policy,
        summary,
        rejections: stream.rejections,
        checks: tallies.into_values().collect(),
        entries,
    })
}
