//! Independent checks used by the test and acceptance suites.
//!
//! Nothing in the decision engine calls into this module. The type A
//! pattern criterion (3412 / 4231 avoidance) lives here as an external
//! oracle only.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::peterson::{bbt_weights, m_star_run, s_weight_classes, translate_weights, v_c_weights_with, DeltaRule};
use crate::rootsys::{Series, TypeDescriptor};
use crate::schubert::SchubertVariety;
use crate::singloc::{smooth_at, smoothness_report, tangent_space_bounds, SmoothnessOptions, SmoothnessReport};
use crate::weyl::{WeylElement, WeylGroup};

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Option<Permutation> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Permutation(one_line))
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn inversions(&self) -> usize {
        let p = &self.0;
        (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
    }

    /// `self ∘ other` as functions.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }
}

fn single_type_a(group: &WeylGroup) -> Result<usize> {
    match group.root_system().descriptor().factors() {
        [f] if f.series == Series::A => Ok(f.rank),
        _ => Err(Error::NotTypeA),
    }
}

/// The permutation `pi` with `w(e_i - e_j) = e_pi(i) - e_pi(j)`, where simple
/// root `i` is `e_i - e_{i+1}`.
pub fn to_permutation(group: &WeylGroup, w: &WeylElement) -> Result<Permutation> {
    let n = single_type_a(group)?;
    let rs = group.root_system();
    // decode a root as (a, b) meaning e_a - e_b, 1-based
    let decode = |c: &[i32]| -> (usize, usize) {
        let first = c.iter().position(|&x| x != 0).unwrap();
        let last = c.iter().rposition(|&x| x != 0).unwrap();
        if c[first] > 0 {
            (first + 1, last + 2)
        } else {
            (last + 2, first + 1)
        }
    };
    let mut pi = vec![0usize; n + 1];
    for i in 1..=n {
        let (a, b) = decode(rs.coords(w.apply(rs.simple_root(i)?)));
        debug_assert!(pi[i - 1] == 0 || pi[i - 1] == a);
        pi[i - 1] = a;
        pi[i] = b;
    }
    Ok(Permutation::new(pi).expect("type A action is a permutation"))
}

pub fn from_permutation(group: &WeylGroup, p: &Permutation) -> Result<WeylElement> {
    let n = single_type_a(group)?;
    if p.0.len() != n + 1 {
        return Err(Error::NotTypeA);
    }
    let mut cur = p.0.clone();
    let mut letters = Vec::new();
    while let Some(i) = (0..n).find(|&i| cur[i] > cur[i + 1]) {
        cur.swap(i, i + 1);
        letters.push(i + 1);
    }
    letters.reverse();
    group.from_word(&letters)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    P3412,
    P4231,
}

impl Pattern {
    fn values(self) -> [usize; 4] {
        match self {
            Pattern::P3412 => [3, 4, 1, 2],
            Pattern::P4231 => [4, 2, 3, 1],
        }
    }
}

/// Quadruple enumeration for an order-isomorphic occurrence of `q`.
pub fn contains_pattern(p: &Permutation, q: Pattern) -> bool {
    let v = &p.0;
    let pat = q.values();
    let n = v.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let sub = [v[a], v[b], v[c], v[d]];
                    let iso = (0..4).all(|i| (0..4).all(|j| (sub[i] < sub[j]) == (pat[i] < pat[j])));
                    if iso {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Tally for one named invariant.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<String>,
}

impl CheckResult {
    fn named(name: &str) -> CheckResult {
        CheckResult { name: name.to_string(), ..Default::default() }
    }

    fn record(&mut self, ok: bool, context: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(context());
            }
        }
    }

    fn merge(&mut self, other: &CheckResult) {
        self.passed += other.passed;
        self.failed += other.failed;
        if self.first_counterexample.is_none() {
            self.first_counterexample = other.first_counterexample.clone();
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConsistencyConfig {
    pub budget: usize,
    /// Only sweep `w` with at most this length.
    pub max_length: Option<usize>,
    /// Recompute every verdict with the restricted `smooth_at` as well.
    pub check_smooth_at: bool,
}

impl Default for ConsistencyConfig {
    fn default() -> Self {
        ConsistencyConfig { budget: 2_000, max_length: None, check_smooth_at: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub elements: usize,
    pub checks: Vec<CheckResult>,
}

impl ConsistencyReport {
    /// All checks pass, ignoring the informational ones.
    pub fn passed(&self) -> bool {
        self.checks.iter().filter(|c| !is_informational(&c.name)).all(CheckResult::ok)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// TAP output, one line per check.
    pub fn tap(&self) -> String {
        let mut s = format!("1..{}\n", self.checks.len());
        for (i, c) in self.checks.iter().enumerate() {
            let status = if c.ok() { "ok" } else { "not ok" };
            let _ = write!(s, "{status} {} - {} ({} passed, {} failed)", i + 1, c.name, c.passed, c.failed);
            if let Some(ce) = &c.first_counterexample {
                let _ = write!(s, " # first counterexample: {ce}");
            }
            if is_informational(&c.name) {
                s.push_str(" # TODO informational, expected to fail");
            }
            s.push('\n');
        }
        s
    }
}

pub const CHECK_NAMES: &[&str] = &[
    "curve_count_at_least_dim",
    "deodhar_inequality",
    "criteria_agree",
    "report_consistent",
    "up_closed",
    "max_singular_antichain",
    "smooth_iff_translates",
    "smooth_implies_rationally_smooth",
    "simply_laced_pointwise_equivalence",
    "simply_laced_global_equivalence",
    "translate_dimension",
    "classes_preserved",
    "m_star_runs",
    "short_curve_containment",
    "long_curve_containment",
    "smooth_at_matches_report",
    "long_curve_containment_negative_delta_only",
    "tangent_bounds_consistent",
    "one_and_two_curve_agree",
];

/// Checks that record a known gap rather than an invariant.
pub const INFORMATIONAL: &[&str] = &["long_curve_containment_negative_delta_only"];

pub fn is_informational(name: &str) -> bool {
    INFORMATIONAL.contains(&name)
}

/// Per-`w` invariant checks, folded into `acc` (indexed like `CHECK_NAMES`).
pub fn check_variety(group: &WeylGroup, w: &WeylElement, cfg: &ConsistencyConfig) -> Vec<CheckResult> {
    let mut acc: Vec<CheckResult> = CHECK_NAMES.iter().map(|n| CheckResult::named(n)).collect();
    let rs = group.root_system();
    let simply_laced = rs.descriptor().is_simply_laced();
    let opts = SmoothnessOptions::default();
    let tag = |x: &WeylElement| format!("w=[{}] x=[{}]", w.word_string(), x.word_string());
    let mut var = SchubertVariety::new(group, w.clone());
    let dim = var.dim();
    let iv = var.interval().clone();

    for x in iv.elements() {
        let n = var.curve_count(x).unwrap();
        acc[0].record(n >= dim, || tag(x));
        acc[1].record(var.deodhar_check(x).unwrap(), || tag(x));
    }
    let rational = var.rationally_smooth();
    acc[2].record(rational.is_ok(), || format!("w=[{}] {rational:?}", w.word_string()));

    let report: SmoothnessReport = match smoothness_report(&mut var, opts) {
        Ok(r) => {
            acc[3].record(true, String::new);
            r
        }
        Err(e) => {
            acc[3].record(false, || format!("w=[{}]: {e}", w.word_string()));
            return acc;
        }
    };

    let smooth = |x: &WeylElement| report.is_smooth_at(x).unwrap();
    for (i, x) in iv.elements().iter().enumerate() {
        if smooth(x) {
            let ok = iv.covers_above(i).iter().all(|&j| smooth(&iv.elements()[j]));
            acc[4].record(ok, || tag(x));
        }
    }

    // antichain whose down-closure is the singular set
    let maxs = report.max_singular();
    let anti = maxs.iter().all(|a| maxs.iter().all(|b| a == b || !group.bruhat_leq(a, b)));
    let closure_ok = iv.elements().iter().all(|x| smooth(x) != maxs.iter().any(|m| group.bruhat_leq(x, m)));
    acc[5].record(anti && closure_ok, || format!("w=[{}]", w.word_string()));

    for x in iv.elements() {
        let te = var.curve_weights(x).unwrap();
        let diags = report.diagnostics(x);
        let all_equal = diags.iter().all(|d| d.equals_te);
        let ups_smooth = var.upward_curves(x).iter().all(|(_, y)| smooth(y));
        if diags.len() >= 2 {
            // one good curve with tau = TE versus two of them
            let agreeing = diags.iter().filter(|d| d.equals_te).count();
            let one = agreeing >= 1;
            let two = agreeing >= 2;
            acc[18].record(one == two, || tag(x));
        }
        // post hoc: smooth iff |E| = dim and every good upward translate is TE
        let predicted = te.len() == dim && ups_smooth && all_equal;
        acc[6].record(smooth(x) == predicted, || tag(x));
        let rs_at = var.rationally_smooth_at(x).unwrap();
        if smooth(x) {
            acc[7].record(rs_at, || tag(x));
        }
        if simply_laced {
            acc[8].record(smooth(x) == rs_at, || tag(x));
        }
    }
    if simply_laced {
        if let Ok((rsv, _)) = rational {
            acc[9].record(report.is_smooth() == rsv, || format!("w=[{}]", w.word_string()));
        }
    }

    // every translate along a good upward curve, at every fixed point
    for x in iv.elements() {
        let te = var.curve_weights(x).unwrap();
        for (mu, y) in var.upward_curves(x) {
            if !smooth(&y) {
                continue;
            }
            let ty = report.tangent_weights(&y).unwrap().clone();
            let ctx = || format!("{} mu={:?}", tag(x), rs.coords(mu));
            let mut runs_ok = true;
            for class in s_weight_classes(rs, &ty, mu) {
                if m_star_run(rs, &y, mu, &class).is_err() {
                    runs_ok = false;
                }
            }
            acc[12].record(runs_ok, ctx);
            let tau = match translate_weights(group, &y, mu, &ty) {
                Ok(t) => t,
                Err(_) => continue,
            };
            acc[10].record(tau.len() == dim, ctx);
            let mut before: Vec<usize> = s_weight_classes(rs, &ty, mu).iter().map(Vec::len).collect();
            let mut after: Vec<usize> = s_weight_classes(rs, &tau, mu).iter().map(Vec::len).collect();
            before.sort_unstable();
            after.sort_unstable();
            acc[11].record(before == after, ctx);
            if rs.is_short(mu) {
                acc[13].record(tau.is_subset(&te), ctx);
            } else {
                let bbt = bbt_weights(&var, x).unwrap();
                let vc = v_c_weights_with(&var, x, mu, true, DeltaRule::EitherSign).unwrap();
                acc[14].record(tau.is_subset(&bbt.union(&vc)), ctx);
                let narrow = v_c_weights_with(&var, x, mu, true, DeltaRule::NegativeOnly).unwrap();
                acc[16].record(tau.is_subset(&bbt.union(&narrow)), ctx);
            }
        }
    }

    match tangent_space_bounds(&var, &report) {
        Ok(bounds) => {
            for b in &bounds {
                let te = report.curve_weights(&b.x).unwrap();
                let ok = te.is_subset(&b.lower) && b.lower.len() >= dim && (b.exact().is_some() || !smooth(&b.x));
                acc[17].record(ok, || tag(&b.x));
            }
        }
        Err(e) => acc[17].record(false, || format!("w=[{}]: {e}", w.word_string())),
    }

    if cfg.check_smooth_at {
        for x in iv.elements() {
            let v = smooth_at(group, w, x, opts);
            acc[15].record(v.as_ref().ok() == Some(&smooth(x)), || tag(x));
        }
    }
    acc
}

/// Runs every invariant over all `w` of the group (or all `w` up to
/// `cfg.max_length`) and tallies the results.
pub fn exhaustive_consistency(descriptor: &TypeDescriptor, cfg: &ConsistencyConfig) -> Result<ConsistencyReport> {
    let group = WeylGroup::new(crate::rootsys::RootSystem::new(descriptor)?);
    let elements: Vec<WeylElement> = group
        .all_elements(cfg.budget)?
        .into_iter()
        .filter(|w| cfg.max_length.is_none_or(|m| w.length() <= m))
        .collect();
    let partials: Vec<Vec<CheckResult>> = elements.par_iter().map(|w| check_variety(&group, w, cfg)).collect();
    let mut checks: Vec<CheckResult> = CHECK_NAMES.iter().map(|n| CheckResult::named(n)).collect();
    for p in &partials {
        for (c, r) in checks.iter_mut().zip(p) {
            c.merge(r);
        }
    }
    if descriptor.to_string() == "B2" {
        let mut fixture = CheckResult::named("b2_worked_example");
        for (name, ok) in b2_fixture(&group) {
            fixture.record(ok, || name.to_string());
        }
        checks.push(fixture);
    }
    Ok(ConsistencyReport { type_name: descriptor.to_string(), elements: elements.len(), checks })
}

/// The B2 worked example with `w = s1 s2 s1` (1 = short simple root):
/// named boolean checks of every tabulated value.
pub fn b2_fixture(group: &WeylGroup) -> Vec<(&'static str, bool)> {
    use crate::peterson::{peterson_translate, TranslateRequest};
    use crate::schubert::WeightSet;

    let rs = group.root_system();
    let el = |w: &[usize]| group.from_word(w).unwrap();
    let root = |c: [i32; 2]| rs.root(&c).unwrap();
    let set = |cs: &[[i32; 2]]| WeightSet::from_roots(rs, cs.iter().map(|&c| root(c)));
    let mut var = SchubertVariety::new(group, el(&[1, 2, 1]));
    let report = smoothness_report(&mut var, SmoothnessOptions::default()).unwrap();
    // at the singular points the tangent space is larger than the curve span
    let omega_e = tangent_space_bounds(&var, &report)
        .unwrap()
        .into_iter()
        .find(|b| b.x.is_identity())
        .and_then(|b| b.exact().cloned())
        .unwrap_or_else(|| WeightSet::empty(rs));
    let cw = |x: &[usize]| var.curve_weights(&el(x)).unwrap();
    let tr = |y: &[usize], mu: [i32; 2]| peterson_translate(&var, &TranslateRequest::new(el(y), root(mu))).unwrap().tau;
    let mut out = vec![
        ("omega_w", cw(&[1, 2, 1]) == set(&[[1, 0], [1, 1], [2, 1]])),
        ("omega_ab", cw(&[1, 2]) == set(&[[1, 0], [2, 1], [-1, -1]])),
        ("omega_ba", cw(&[2, 1]) == set(&[[-1, 0], [0, 1], [1, 1]])),
        ("omega_e", omega_e == set(&[[0, -1], [-1, -1], [-1, 0], [-2, -1]])),
        ("tau_C_r_alpha", tr(&[2, 1], [0, 1]) == set(&[[-1, -1], [0, -1], [1, 0]])),
        ("tau_D_r_alpha", tr(&[1, 2], [2, 1]) == set(&[[-1, -1], [1, 0], [-2, -1]])),
        ("tau_D_r_beta", tr(&[1, 2], [1, 0]) == set(&[[-1, 0], [0, 1], [-1, -1]])),
        ("tau_C_r_beta", tr(&[2, 1], [1, 1]) == set(&[[-1, 0], [0, 1], [-1, -1]])),
    ];
    out.push(("smooth_at_r_beta", report.is_smooth_at(&el(&[2])) == Some(true)));
    out.push(("singular_at_r_alpha", report.is_smooth_at(&el(&[1])) == Some(false)));
    out.push(("singular_at_e", report.is_smooth_at(&el(&[])) == Some(false)));
    out.push(("singular_locus", report.max_singular() == [el(&[1])]));
    out
}
