//! The `tJ=..,tK=..,tA=..,tB=..,tC=..,s=..` seed format.

use tenpoint_core::scalar;
use tenpoint_core::{CircleParam, ConfigurationSeed};

use crate::error::CliError;

const KEYS: [&str; 6] = ["tJ", "tK", "tA", "tB", "tC", "s"];

pub fn parse_param(text: &str) -> Result<CircleParam, CliError> {
    if text.trim() == "inf" {
        return Ok(CircleParam::Infinity);
    }
    scalar::parse(text)
        .map(CircleParam::Finite)
        .map_err(|e| CliError::Parse(e.to_string()))
}

pub fn format_param(p: &CircleParam) -> String {
    match p {
        CircleParam::Finite(t) => scalar::to_canonical(t),
        CircleParam::Infinity => "inf".to_string(),
    }
}

pub fn parse_seed(text: &str) -> Result<ConfigurationSeed, CliError> {
    let mut params: [Option<CircleParam>; 5] = Default::default();
    let mut s = None;
    for field in text.split(',') {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("expected key=value, got {:?}", field.trim())))?;
        let idx = KEYS
            .iter()
            .position(|k| *k == key.trim())
            .ok_or_else(|| CliError::Parse(format!("unknown seed key {:?}", key.trim())))?;
        let fresh = if idx == 5 {
            let v = scalar::parse(value).map_err(|e| CliError::Parse(format!("s: {e}")))?;
            s.replace(v).is_none()
        } else {
            let v = parse_param(value).map_err(|e| CliError::Parse(format!("{}: {e}", KEYS[idx])))?;
            params[idx].replace(v).is_none()
        };
        if !fresh {
            return Err(CliError::Parse(format!("seed key {} given twice", KEYS[idx])));
        }
    }
    let missing = |i: usize| CliError::Parse(format!("missing seed key {}", KEYS[i]));
    let [t_j, t_k, t_a, t_b, t_c] = params;
    Ok(ConfigurationSeed {
        t_j: t_j.ok_or_else(|| missing(0))?,
        t_k: t_k.ok_or_else(|| missing(1))?,
        t_a: t_a.ok_or_else(|| missing(2))?,
        t_b: t_b.ok_or_else(|| missing(3))?,
        t_c: t_c.ok_or_else(|| missing(4))?,
        s: s.ok_or_else(|| missing(5))?,
    })
}
