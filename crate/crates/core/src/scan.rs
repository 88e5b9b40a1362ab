//! Bounded enumeration of reduced sums and per-sum verdict records.

use std::collections::BTreeMap;
use std::io::Write;

use itertools::Itertools;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::invariants::determinant_sum;
use crate::knotsum::{KnotSum, TorusKnotFactor};
use crate::obstruct::{evaluate, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    /// Only `±T(2,q)` factors.
    TwoStrand,
    /// All `±T(p,q)` with `p <= max_p`.
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Which signs a scan draws factors from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Signs {
    #[default]
    Both,
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanConfigError {
    #[error("max-q must be at least 3, got {0}")]
    MaxQ(u64),
    #[error("max-p must be at least 2, got {0}")]
    MaxP(u64),
    #[error("max-factors must be at least 1")]
    MaxFactors,
    #[error("the two-strand family fixes max-p = 2, got {0}")]
    TwoStrandMaxP(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    max_q: u64,
    max_p: u64,
    max_factors_per_sign: usize,
    family: Family,
    signs: Signs,
}

impl ScanConfig {
    /// `max_p` defaults to 2 for the two-strand family and to `max_q - 1`
    /// otherwise.
    pub fn new(
        family: Family,
        max_q: u64,
        max_p: Option<u64>,
        max_factors_per_sign: usize,
    ) -> Result<Self, ScanConfigError> {
        if max_q < 3 {
            return Err(ScanConfigError::MaxQ(max_q));
        }
        let max_p = match (family, max_p) {
            (Family::TwoStrand, None | Some(2)) => 2,
            (Family::TwoStrand, Some(p)) => return Err(ScanConfigError::TwoStrandMaxP(p)),
            (Family::General, Some(p)) if p < 2 => return Err(ScanConfigError::MaxP(p)),
            (Family::General, Some(p)) => p,
            (Family::General, None) => max_q - 1,
        };
        if max_factors_per_sign == 0 {
            return Err(ScanConfigError::MaxFactors);
        }
        Ok(Self {
            max_q,
            max_p,
            max_factors_per_sign,
            family,
            signs: Signs::Both,
        })
    }

    pub fn with_signs(mut self, signs: Signs) -> Self {
        self.signs = signs;
        self
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Every positive torus knot `T(p,q)` with `2 <= p < q` inside the bounds.
    pub fn universe(&self) -> Vec<TorusKnotFactor> {
        (2..=self.max_p)
            .flat_map(|p| (p + 1..=self.max_q).map(move |q| (p, q)))
            .filter(|(p, q)| p.gcd(q) == 1)
            .map(|(p, q)| TorusKnotFactor::positive(p, q))
            .collect()
    }
}

/// All reduced sums in `config`, sorted canonically, without duplicates.
pub fn enumerate(config: &ScanConfig) -> Vec<KnotSum> {
    let universe = config.universe();
    let multisets = |enabled: bool| -> Vec<Vec<TorusKnotFactor>> {
        let max = if enabled {
            config.max_factors_per_sign
        } else {
            0
        };
        (0..=max)
            .flat_map(|n| universe.iter().copied().combinations_with_replacement(n))
            .collect()
    };
    let positives = multisets(config.signs != Signs::Negative);
    let negatives = multisets(config.signs != Signs::Positive);

    let mut sums: Vec<KnotSum> = positives
        .iter()
        .cartesian_product(negatives.iter())
        .filter(|(pos, neg)| !pos.iter().any(|f| neg.contains(f)))
        .map(|(pos, neg)| {
            KnotSum::from_factors(pos.iter().copied().chain(neg.iter().map(|f| f.mirror())))
        })
        .collect();
    sums.sort();
    sums.dedup();
    sums
}

/// One line of scan output. CSV and JSON-lines carry the same fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScanRecord {
    pub expr: String,
    pub status: String,
    /// Reason codes joined with `;`.
    pub reasons: String,
    pub det_plus: String,
    pub det_minus_other: String,
    pub det_minus_two: String,
    pub candidate_det: Option<String>,
    pub candidate_alex_degree: Option<i64>,
}

impl ScanRecord {
    pub fn new(verdict: &Verdict) -> Self {
        let split = verdict.input.split();
        Self {
            expr: verdict.input.to_string(),
            status: verdict.status.as_str().to_owned(),
            reasons: verdict.reasons.iter().map(|r| r.code()).join(";"),
            det_plus: determinant_sum(&split.k_plus).to_string(),
            det_minus_other: determinant_sum(&split.k_minus_other).to_string(),
            det_minus_two: determinant_sum(&split.k_minus_two).to_string(),
            candidate_det: verdict
                .candidate_determinant
                .as_ref()
                .map(|d| d.to_string()),
            candidate_alex_degree: verdict
                .candidate_alexander
                .as_ref()
                .and_then(|p| p.max_deg()),
        }
    }
}

/// Record counts per status and per reason code.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    pub by_status: BTreeMap<String, usize>,
    pub by_reason: BTreeMap<String, usize>,
}

impl ScanSummary {
    pub fn add(&mut self, v: &Verdict) {
        self.total += 1;
        *self
            .by_status
            .entry(v.status.as_str().to_owned())
            .or_default() += 1;
        for r in &v.reasons {
            *self.by_reason.entry(r.code().to_owned()).or_default() += 1;
        }
    }
}

/// Evaluates every enumerated sum. Work runs in parallel; results keep the
/// canonical order.
pub fn run(config: &ScanConfig) -> Vec<Verdict> {
    enumerate(config).par_iter().map(evaluate).collect()
}

/// JSON numbers for determinant columns; the record itself keeps strings.
fn json_record(r: &ScanRecord) -> serde_json::Value {
    let num = |s: &str| serde_json::Value::Number(s.parse().expect("decimal"));
    serde_json::json!({
        "expr": r.expr,
        "status": r.status,
        "reasons": if r.reasons.is_empty() { vec![] } else { r.reasons.split(';').collect::<Vec<_>>() },
        "det_plus": num(&r.det_plus),
        "det_minus_other": num(&r.det_minus_other),
        "det_minus_two": num(&r.det_minus_two),
        "candidate_det": r.candidate_det.as_deref().map(num),
        "candidate_alex_degree": r.candidate_alex_degree,
    })
}

/// Writes one record per verdict to `out` and returns the summary.
pub fn write_records<W: Write>(
    verdicts: &[Verdict],
    format: Format,
    out: W,
) -> std::io::Result<ScanSummary> {
    let mut summary = ScanSummary::default();
    match format {
        Format::Json => {
            let mut out = out;
            for v in verdicts {
                summary.add(v);
                serde_json::to_writer(&mut out, &json_record(&ScanRecord::new(v)))?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for v in verdicts {
                summary.add(v);
                w.serialize(ScanRecord::new(v))?;
            }
            w.flush()?;
        }
    }
    Ok(summary)
}

/// Parses JSON-lines scan output back into records.
pub fn read_json_records(text: &str) -> serde_json::Result<Vec<ScanRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l)?;
            let s = |key: &str| match &v[key] {
                serde_json::Value::String(x) => x.clone(),
                other => other.to_string(),
            };
            Ok(ScanRecord {
                expr: s("expr"),
                status: s("status"),
                reasons: v["reasons"]
                    .as_array()
                    .map(|a| a.iter().filter_map(|r| r.as_str()).join(";"))
                    .unwrap_or_default(),
                det_plus: s("det_plus"),
                det_minus_other: s("det_minus_other"),
                det_minus_two: s("det_minus_two"),
                candidate_det: (!v["candidate_det"].is_null()).then(|| s("candidate_det")),
                candidate_alex_degree: v["candidate_alex_degree"].as_i64(),
            })
        })
        .collect()
}

pub fn read_csv_records(text: &str) -> csv::Result<Vec<ScanRecord>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect()
}
