//! Serializable report shapes. Roots are integer coordinate vectors in the
//! simple-root basis; elements are canonical reduced words.

use serde::{Deserialize, Serialize};

use crate::peterson::Translate;
use crate::rootsys::RootSystem;
use crate::schubert::{SchubertVariety, WeightSet};
use crate::singloc::{SmoothnessReport, Verdict};
use crate::weyl::{BruhatInterval, WeylElement, WeylGroup};

pub const UNVERIFIED_LABEL: &str = "unverified-by-paper";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictEntry {
    pub element: Vec<usize>,
    pub length: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub word: Vec<usize>,
    pub dim: usize,
    pub verdicts: Vec<VerdictEntry>,
    pub max_singular: Vec<Vec<usize>>,
    pub poincare: Vec<usize>,
    pub rationally_smooth: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<String>,
}

impl SmoothnessJson {
    pub fn new(var: &mut SchubertVariety<'_>, report: &SmoothnessReport, rationally_smooth: bool) -> SmoothnessJson {
        let poincare = var.interval().rank_table().to_vec();
        SmoothnessJson {
            type_name: var.root_system().descriptor().to_string(),
            word: report.top().reduced_word(),
            dim: report.top().length(),
            verdicts: report
                .elements()
                .iter()
                .zip(report.verdicts())
                .map(|(e, &verdict)| VerdictEntry { element: e.reduced_word(), length: e.length(), verdict })
                .collect(),
            max_singular: report.max_singular().iter().map(WeylElement::reduced_word).collect(),
            poincare,
            rationally_smooth,
            verification: report.unverified().then(|| UNVERIFIED_LABEL.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslateJson {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub curve_root: Vec<i32>,
    pub tau: Vec<Vec<i32>>,
    #[serde(rename = "equals_TE")]
    pub equals_te: bool,
}

impl TranslateJson {
    pub fn new(rs: &RootSystem, t: &Translate, te: &WeightSet) -> TranslateJson {
        TranslateJson {
            x: t.x.reduced_word(),
            y: t.y.reduced_word(),
            curve_root: rs.coords(t.curve_root).to_vec(),
            tau: t.tau.to_coords(rs),
            equals_te: t.tau == *te,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub coords: Vec<i32>,
    pub height: i32,
    pub positive: bool,
    pub long: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i32>>,
    pub count: usize,
    pub roots: Vec<RootEntry>,
}

impl RootsJson {
    pub fn new(rs: &RootSystem) -> RootsJson {
        RootsJson {
            type_name: rs.descriptor().to_string(),
            rank: rs.rank(),
            cartan_matrix: rs.cartan_matrix().to_vec(),
            count: rs.num_roots(),
            roots: rs
                .roots()
                .map(|r| RootEntry {
                    coords: rs.coords(r).to_vec(),
                    height: rs.height(r),
                    positive: rs.is_positive(r),
                    long: rs.is_long(r),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub word: Vec<usize>,
    pub length: usize,
    pub inverse: Vec<usize>,
    /// Images of the simple roots.
    pub simple_images: Vec<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one_line: Option<Vec<usize>>,
}

impl ElementJson {
    pub fn new(group: &WeylGroup, w: &WeylElement) -> ElementJson {
        let rs = group.root_system();
        ElementJson {
            type_name: rs.descriptor().to_string(),
            word: w.reduced_word(),
            length: w.length(),
            inverse: group.inverse(w).reduced_word(),
            simple_images: (1..=rs.rank()).map(|i| rs.coords(w.apply(rs.simple_root(i).unwrap())).to_vec()).collect(),
            one_line: crate::oracle::to_permutation(group, w).ok().map(|p| p.one_line().to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalEntry {
    pub word: Vec<usize>,
    pub length: usize,
    /// Indices (into `elements`) of the elements covered by this one.
    pub covers: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub word: Vec<usize>,
    pub size: usize,
    pub rank_table: Vec<usize>,
    pub elements: Vec<IntervalEntry>,
}

impl IntervalJson {
    pub fn new(rs: &RootSystem, iv: &BruhatInterval) -> IntervalJson {
        IntervalJson {
            type_name: rs.descriptor().to_string(),
            word: iv.top().reduced_word(),
            size: iv.len(),
            rank_table: iv.rank_table().to_vec(),
            elements: iv
                .elements()
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let mut covers = iv.covers_below(i).to_vec();
                    covers.sort_unstable();
                    IntervalEntry { word: e.reduced_word(), length: e.length(), covers }
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentBoundsJson {
    pub x: Vec<usize>,
    pub lower: Vec<Vec<i32>>,
    pub upper: Vec<Vec<i32>>,
    pub exact: bool,
}

impl TangentBoundsJson {
    pub fn new(rs: &RootSystem, b: &crate::singloc::TangentBounds) -> TangentBoundsJson {
        TangentBoundsJson {
            x: b.x.reduced_word(),
            lower: b.lower.to_coords(rs),
            upper: b.upper.to_coords(rs),
            exact: b.exact().is_some(),
        }
    }
}
