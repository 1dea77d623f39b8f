//! Exhaustive classification of every ideal of one type.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_ideal_unchecked, ClassificationRecord};
use crate::ideals::{enumerate_ideals, BadIdealKind, Ideal};
use crate::rootsystem::RootSystem;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub chain_peelable: usize,
    pub supersolvable: usize,
    pub non_supersolvable: usize,
    pub line_closed: usize,
    pub bad_ideal_free: usize,
    pub koszul: usize,
    pub star_witnesses: usize,
    pub f4_witnesses: usize,
    pub greedy_peeling_stuck: usize,
}

impl Summary {
    pub fn of(records: &[ClassificationRecord]) -> Self {
        let count = |f: &dyn Fn(&ClassificationRecord) -> bool| records.iter().filter(|r| f(r)).count();
        Summary {
            chain_peelable: count(&|r| r.chain_peelable),
            supersolvable: count(&|r| r.supersolvable),
            non_supersolvable: count(&|r| !r.supersolvable),
            line_closed: count(&|r| r.line_closed),
            bad_ideal_free: count(&|r| r.bad_ideal_free),
            koszul: count(&|r| r.koszul),
            star_witnesses: count(&|r| r.bad_ideal.as_ref().is_some_and(|w| w.kind == BadIdealKind::Star)),
            f4_witnesses: count(&|r| r.bad_ideal.as_ref().is_some_and(|w| w.kind == BadIdealKind::F4)),
            greedy_peeling_stuck: count(&|r| r.greedy_peeling_stuck),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub ideal: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurveyReport {
    pub schema: u32,
    pub tool_version: String,
    pub type_label: String,
    pub ideal_count: usize,
    pub records: Vec<ClassificationRecord>,
    pub summary: Summary,
    pub equivalence_ok: bool,
    pub violations: Vec<Violation>,
    pub timing_seconds: f64,
}

impl SurveyReport {
    /// Builds a report from records already in canonical order.
    pub fn from_records(rs: &RootSystem, records: Vec<ClassificationRecord>, timing_seconds: f64) -> Self {
        let violations: Vec<Violation> = records
            .iter()
            .flat_map(|r| r.violations().into_iter().map(|detail| Violation { ideal: r.ideal.clone(), detail }))
            .collect();
        SurveyReport {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            type_label: rs.label().to_string(),
            ideal_count: records.len(),
            summary: Summary::of(&records),
            equivalence_ok: violations.is_empty(),
            violations,
            records,
            timing_seconds,
        }
    }
}

/// Classifies every ideal on `jobs` worker threads (0 means one per
/// core). Records are sorted by size, then by the list of root indices,
/// so the result does not depend on `jobs`.
pub fn survey(rs: &RootSystem, jobs: usize) -> SurveyReport {
    let start = Instant::now();
    let ideals: Vec<_> = enumerate_ideals(rs).map(|i| i.members()).collect();
    let classify = || -> Vec<_> {
        ideals
            .par_iter()
            .map(|&m| {
                let ideal = Ideal::new(rs, m).expect("enumerated ideal");
                ((m.len(), m.to_vec()), classify_ideal_unchecked(&ideal))
            })
            .collect()
    };
    let mut keyed = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(classify),
        Err(_) => classify(),
    };
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let records = keyed.into_iter().map(|(_, r)| r).collect();
    SurveyReport::from_records(rs, records, start.elapsed().as_secs_f64())
}
