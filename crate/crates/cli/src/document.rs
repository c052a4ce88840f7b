//! JSON documents: configurations, verification reports and fuzz campaigns.
//!
//! Rationals are written as canonical `"p/q"` strings, never as floats.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use tenpoint_core::scalar::{self, Scalar};
use tenpoint_core::{
    CenterLabel, Circle, CircleLabel, ConfigurationSeed, Point, PointLabel, VerificationReport,
    WoodDesarguesConfiguration,
};

use crate::error::CliError;
use crate::seed_text::{format_param, parse_param};

pub type Coord = [String; 2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedDoc {
    #[serde(rename = "tJ")]
    pub t_j: String,
    #[serde(rename = "tK")]
    pub t_k: String,
    #[serde(rename = "tA")]
    pub t_a: String,
    #[serde(rename = "tB")]
    pub t_b: String,
    #[serde(rename = "tC")]
    pub t_c: String,
    pub s: String,
}

impl SeedDoc {
    pub fn from_seed(seed: &ConfigurationSeed) -> Self {
        SeedDoc {
            t_j: format_param(&seed.t_j),
            t_k: format_param(&seed.t_k),
            t_a: format_param(&seed.t_a),
            t_b: format_param(&seed.t_b),
            t_c: format_param(&seed.t_c),
            s: scalar::to_canonical(&seed.s),
        }
    }

    pub fn to_seed(&self) -> Result<ConfigurationSeed, CliError> {
        let schema = |e: CliError| CliError::Schema(format!("seed: {e}"));
        Ok(ConfigurationSeed {
            t_j: parse_param(&self.t_j).map_err(schema)?,
            t_k: parse_param(&self.t_k).map_err(schema)?,
            t_a: parse_param(&self.t_a).map_err(schema)?,
            t_b: parse_param(&self.t_b).map_err(schema)?,
            t_c: parse_param(&self.t_c).map_err(schema)?,
            s: parse_scalar(&self.s, "seed.s")?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct CircleDoc {
    pub center: Coord,
    pub radius_squared: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    pub seed: Option<SeedDoc>,
    pub points: IndexMap<String, Coord>,
    pub j: Coord,
    pub circles: IndexMap<String, CircleDoc>,
    pub centers: IndexMap<String, Coord>,
}

fn coord(p: &Point) -> Coord {
    [scalar::to_canonical(&p.x), scalar::to_canonical(&p.y)]
}

fn parse_scalar(text: &str, field: &str) -> Result<Scalar, CliError> {
    scalar::parse(text).map_err(|e| CliError::Schema(format!("{field}: {e}")))
}

fn parse_point(c: &Coord, field: &str) -> Result<Point, CliError> {
    Ok(Point::new(parse_scalar(&c[0], field)?, parse_scalar(&c[1], field)?))
}

/// Looks up every label exactly once and rejects unknown keys.
fn labelled<L: Copy, T, U>(
    map: &IndexMap<String, T>,
    all: &[L],
    name: impl Fn(L) -> &'static str,
    field: &str,
    convert: impl Fn(&T, &str) -> Result<U, CliError>,
) -> Result<Vec<U>, CliError> {
    if let Some(unknown) = map.keys().find(|k| !all.iter().any(|l| name(*l) == k.as_str())) {
        return Err(CliError::Schema(format!("{field}: unknown label {unknown:?}")));
    }
    all.iter()
        .map(|l| {
            let key = name(*l);
            let value = map
                .get(key)
                .ok_or_else(|| CliError::Schema(format!("{field}: missing label {key:?}")))?;
            convert(value, &format!("{field}.{key}"))
        })
        .collect()
}

impl ConfigDocument {
    pub fn from_configuration(config: &WoodDesarguesConfiguration) -> Self {
        ConfigDocument {
            seed: config.seed().map(SeedDoc::from_seed),
            points: config.points().map(|(l, p)| (l.name().to_string(), coord(p))).collect(),
            j: coord(config.j()),
            circles: config
                .circles()
                .map(|(l, c)| {
                    let doc = CircleDoc {
                        center: coord(c.center()),
                        radius_squared: scalar::to_canonical(c.radius_sq()),
                    };
                    (l.name().to_string(), doc)
                })
                .collect(),
            centers: config.centers().map(|(l, p)| (l.name().to_string(), coord(p))).collect(),
        }
    }

    pub fn to_configuration(&self) -> Result<WoodDesarguesConfiguration, CliError> {
        let seed = self.seed.as_ref().map(SeedDoc::to_seed).transpose()?;
        let points = labelled(&self.points, &PointLabel::ALL, PointLabel::name, "points", parse_point)?;
        let circles = labelled(&self.circles, &CircleLabel::ALL, CircleLabel::name, "circles", |c: &CircleDoc, f| {
            let center = parse_point(&c.center, f)?;
            let r2 = parse_scalar(&c.radius_squared, f)?;
            Circle::new(center, r2).map_err(|e| CliError::Schema(format!("{f}: {e}")))
        })?;
        let centers = labelled(&self.centers, &CenterLabel::ALL, CenterLabel::name, "centers", parse_point)?;
        let j = parse_point(&self.j, "j")?;
        Ok(WoodDesarguesConfiguration::from_parts(
            seed,
            j,
            points.try_into().expect("ten labels"),
            circles.try_into().expect("five labels"),
            centers.try_into().expect("five labels"),
        ))
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub label: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub name: String,
    pub status: String,
    pub witnesses: Vec<WitnessDoc>,
    pub notes: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SummaryDoc {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub degenerate_pass: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetadataDoc {
    pub assumptions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub seed: Option<SeedDoc>,
    pub results: Vec<ResultDoc>,
    pub summary: SummaryDoc,
    pub metadata: MetadataDoc,
}

impl ReportDocument {
    pub fn from_report(report: &VerificationReport) -> Self {
        ReportDocument {
            seed: report.seed.as_ref().map(SeedDoc::from_seed),
            results: report
                .results
                .iter()
                .map(|r| ResultDoc {
                    name: r.name.clone(),
                    status: r.status.as_str().to_string(),
                    witnesses: r
                        .witnesses
                        .iter()
                        .map(|w| WitnessDoc { label: w.label.clone(), value: w.value.clone() })
                        .collect(),
                    notes: r.notes.clone(),
                })
                .collect(),
            summary: SummaryDoc {
                total: report.summary.total,
                pass: report.summary.pass,
                fail: report.summary.fail,
                degenerate_pass: report.summary.degenerate_pass,
            },
            metadata: MetadataDoc {
                assumptions: report.assumptions.iter().map(|s| s.to_string()).collect(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}
