//! Batch smoothness sweeps over a whole Weyl group.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::schubert::SchubertVariety;
use crate::singloc::{smoothness_report, SmoothnessOptions};
use crate::weyl::WeylGroup;

pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepFilter {
    /// Keep only elements of exactly this length.
    pub length: Option<usize>,
    /// Keep only elements of at most this length.
    pub max_length: Option<usize>,
}

impl SweepFilter {
    fn keep(&self, len: usize) -> bool {
        self.length.is_none_or(|l| l == len) && self.max_length.is_none_or(|m| len <= m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub word: Vec<usize>,
    pub length: usize,
    pub smooth: bool,
    pub max_singular: usize,
    pub poincare_symmetric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub entries: Vec<SweepEntry>,
    pub count: usize,
    pub smooth: usize,
    pub singular: usize,
    pub poincare_symmetric: usize,
}

/// One summary line per element, ordered by length then canonical word.
/// Runs on the current rayon pool.
pub fn sweep(group: &WeylGroup, filter: SweepFilter, budget: usize, opts: SmoothnessOptions) -> Result<SweepReport> {
    let elements: Vec<_> = group.all_elements(budget)?.into_iter().filter(|w| filter.keep(w.length())).collect();
    let entries = elements
        .par_iter()
        .map(|w| {
            let mut var = SchubertVariety::new(group, w.clone());
            let report = smoothness_report(&mut var, opts)?;
            let p = var.interval().rank_table();
            Ok(SweepEntry {
                word: w.reduced_word(),
                length: w.length(),
                smooth: report.is_smooth(),
                max_singular: report.max_singular().len(),
                poincare_symmetric: p.iter().eq(p.iter().rev()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let smooth = entries.iter().filter(|e| e.smooth).count();
    Ok(SweepReport {
        type_name: group.root_system().descriptor().to_string(),
        count: entries.len(),
        smooth,
        singular: entries.len() - smooth,
        poincare_symmetric: entries.iter().filter(|e| e.poincare_symmetric).count(),
        entries,
    })
}
