//! Smoothness at every fixed point of `X(w)` and the singular locus.
//!
//! Fixed points are processed from the top of `[e, w]` down. A point lying
//! below a singular point is singular. A point of codimension one is
//! smooth. Otherwise every upward curve into `x` is good, and `x` is smooth
//! iff the Peterson translate along some upward curve equals the span of
//! the curve tangents at `x` (Schubert varieties are Cohen-Macaulay). The
//! two-curve form of the criterion and Deodhar's inequality are checked
//! alongside; a disagreement is reported as an internal inconsistency.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::peterson::translate_weights;
use crate::rootsys::Root;
use crate::schubert::{SchubertVariety, WeightSet};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Smooth,
    Singular,
}

impl Verdict {
    pub fn is_smooth(self) -> bool {
        self == Verdict::Smooth
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SmoothnessOptions {
    /// Run on G2 factors anyway. Verdicts are then flagged as unverified.
    pub allow_g2: bool,
}

/// One translate compared against the curve tangent span at `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveDiagnostic {
    pub y: WeylElement,
    pub curve_root: Root,
    pub tau: WeightSet,
    pub equals_te: bool,
}

#[derive(Debug, Clone)]
pub struct SmoothnessReport {
    w: WeylElement,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    verdicts: Vec<Verdict>,
    curve_weights: Vec<WeightSet>,
    diagnostics: Vec<Vec<CurveDiagnostic>>,
    max_singular: Vec<WeylElement>,
    unverified: bool,
}

impl SmoothnessReport {
    pub fn top(&self) -> &WeylElement {
        &self.w
    }

    /// Fixed points, longest first.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn verdicts(&self) -> &[Verdict] {
        &self.verdicts
    }

    pub fn verdict(&self, x: &WeylElement) -> Option<Verdict> {
        self.index.get(x).map(|&i| self.verdicts[i])
    }

    pub fn is_smooth_at(&self, x: &WeylElement) -> Option<bool> {
        self.verdict(x).map(Verdict::is_smooth)
    }

    /// `Phi(x, w)` for smooth `x`; these are then the tangent weights.
    pub fn tangent_weights(&self, x: &WeylElement) -> Option<&WeightSet> {
        let i = *self.index.get(x)?;
        self.verdicts[i].is_smooth().then(|| &self.curve_weights[i])
    }

    pub fn curve_weights(&self, x: &WeylElement) -> Option<&WeightSet> {
        self.index.get(x).map(|&i| &self.curve_weights[i])
    }

    /// Translates computed at `x`; empty for `w` and for points below a
    /// singular point.
    pub fn diagnostics(&self, x: &WeylElement) -> &[CurveDiagnostic] {
        self.index.get(x).map_or(&[], |&i| &self.diagnostics[i])
    }

    pub fn max_singular(&self) -> &[WeylElement] {
        &self.max_singular
    }

    pub fn singular_points(&self) -> impl Iterator<Item = &WeylElement> {
        self.elements.iter().zip(&self.verdicts).filter(|(_, v)| !v.is_smooth()).map(|(e, _)| e)
    }

    pub fn is_smooth(&self) -> bool {
        self.max_singular.is_empty()
    }

    /// True when the variety lives over a G2 factor, where the decision
    /// rule is not backed by the theory it implements.
    pub fn unverified(&self) -> bool {
        self.unverified
    }
}

fn check_g2(group: &WeylGroup, opts: SmoothnessOptions) -> Result<bool> {
    let g2 = group.root_system().descriptor().has_g2();
    if g2 && !opts.allow_g2 {
        return Err(Error::G2Disallowed);
    }
    Ok(g2)
}

struct Decided {
    verdicts: Vec<Verdict>,
    curve_weights: Vec<WeightSet>,
    diagnostics: Vec<Vec<CurveDiagnostic>>,
}

/// Runs the descent over `elements`, an up-closed subset of `[e, w]`
/// sorted by length descending.
fn decide(var: &SchubertVariety<'_>, elements: &[WeylElement], index: &HashMap<WeylElement, usize>) -> Result<Decided> {
    let group = var.group();
    let dim = var.dim();
    let n = elements.len();
    let mut verdicts = vec![Verdict::Smooth; n];
    let mut curve_weights = Vec::with_capacity(n);
    let mut diagnostics = vec![Vec::new(); n];
    let inconsistent =
        |x: &WeylElement, what: &str| Err(Error::InternalInconsistency(format!("at [{}]: {what}", x.word_string())));

    for (i, x) in elements.iter().enumerate() {
        let te = var.curve_weights_unchecked(x);
        let codim = dim - x.length();
        if codim == 0 {
            curve_weights.push(te);
            continue;
        }
        let ups = var.upward_curves(x);
        let up_idx: Vec<usize> =
            ups.iter().map(|(_, y)| *index.get(y).expect("upward endpoints are in the up-closed set")).collect();
        if ups.len() < codim {
            return inconsistent(x, "fewer upward curves than the codimension");
        }
        if up_idx.iter().any(|&j| !verdicts[j].is_smooth()) {
            verdicts[i] = Verdict::Singular;
            curve_weights.push(te);
            continue;
        }
        let mut diag = Vec::with_capacity(ups.len());
        for ((mu, y), &j) in ups.iter().zip(&up_idx) {
            let tau = translate_weights(group, y, *mu, &curve_weights[j])?;
            if tau.len() != dim {
                return inconsistent(x, "translate dimension differs from dim X");
            }
            let equals_te = tau == te;
            diag.push(CurveDiagnostic { y: y.clone(), curve_root: *mu, tau, equals_te });
        }
        let agreeing = diag.iter().filter(|d| d.equals_te).count();
        let smooth = codim == 1 || agreeing >= 1;
        if smooth && agreeing != diag.len() {
            return inconsistent(x, "smooth point with a translate different from TE");
        }
        if agreeing == 1 && diag.len() >= 2 {
            return inconsistent(x, "one-curve and two-curve criteria disagree");
        }
        if smooth && te.len() != dim {
            return inconsistent(x, "smooth point with more curves than dim X");
        }
        verdicts[i] = if smooth { Verdict::Smooth } else { Verdict::Singular };
        curve_weights.push(te);
        diagnostics[i] = diag;
    }
    Ok(Decided { verdicts, curve_weights, diagnostics })
}

/// Verdicts at every fixed point of `X(w)`.
pub fn smoothness_report(var: &mut SchubertVariety<'_>, opts: SmoothnessOptions) -> Result<SmoothnessReport> {
    let unverified = check_g2(var.group(), opts)?;
    let iv = var.interval().clone();
    let elements = iv.elements().to_vec();
    let index: HashMap<WeylElement, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let d = decide(var, &elements, &index)?;
    let max_singular = (0..elements.len())
        .filter(|&i| !d.verdicts[i].is_smooth())
        .filter(|&i| iv.covers_above(i).iter().all(|&j| d.verdicts[j].is_smooth()))
        .map(|i| elements[i].clone())
        .collect();
    Ok(SmoothnessReport {
        w: var.top().clone(),
        elements,
        index,
        verdicts: d.verdicts,
        curve_weights: d.curve_weights,
        diagnostics: d.diagnostics,
        max_singular,
        unverified,
    })
}

/// Lower and upper bounds on the weights of the Zariski tangent space
/// `T_x X(w)` at one fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentBounds {
    pub x: WeylElement,
    pub lower: WeightSet,
    pub upper: WeightSet,
}

impl TangentBounds {
    /// The tangent weights, when the bounds meet.
    pub fn exact(&self) -> Option<&WeightSet> {
        (self.lower == self.upper).then_some(&self.lower)
    }
}

/// Tangent weight bounds at every fixed point, in report order.
///
/// The lower bound collects the curve tangents and the translates along
/// upward curves with a smooth upper end; the upper bound starts from
/// `T_x(G/B)`. At smooth points both are `Phi(x, w)`. For a simple
/// reflection `s` with `s w < w` the variety is stable under the minimal
/// parabolic of `s`, so `T_{s x} = s T_x`, and both bounds are moved
/// across such pairs until nothing changes.
pub fn tangent_space_bounds(var: &SchubertVariety<'_>, report: &SmoothnessReport) -> Result<Vec<TangentBounds>> {
    let group = var.group();
    let rs = group.root_system();
    let elements = report.elements();
    let mut lower = Vec::with_capacity(elements.len());
    let mut upper = Vec::with_capacity(elements.len());
    for (i, x) in elements.iter().enumerate() {
        if report.verdicts[i].is_smooth() {
            lower.push(report.curve_weights[i].clone());
            upper.push(report.curve_weights[i].clone());
            continue;
        }
        let mut lo = report.curve_weights[i].clone();
        for (mu, y) in var.upward_curves(x) {
            if let Some(ty) = report.tangent_weights(&y) {
                lo = lo.union(&translate_weights(group, &y, mu, ty)?);
            }
        }
        lower.push(lo);
        upper.push(WeightSet::from_roots(rs, rs.roots().filter(|&g| !rs.is_positive(x.apply_inverse(g)))));
    }

    let w = report.top();
    let movers: Vec<WeylElement> = (1..=rs.rank())
        .filter(|&i| group.is_left_descent(w, i))
        .map(|i| group.simple_reflection(i))
        .collect::<Result<_>>()?;
    let moved = |s: &WeylElement, set: &WeightSet| WeightSet::from_roots(rs, set.iter().map(|g| s.apply(g)));
    let mut changed = true;
    while changed {
        changed = false;
        for s in &movers {
            for (i, x) in elements.iter().enumerate() {
                let j = report.index[&group.mul(s, x)];
                let lo = lower[j].union(&moved(s, &lower[i]));
                let up = upper[j].intersection(&moved(s, &upper[i]));
                if lo != lower[j] || up != upper[j] {
                    lower[j] = lo;
                    upper[j] = up;
                    changed = true;
                }
            }
        }
    }
    for (i, x) in elements.iter().enumerate() {
        if !lower[i].is_subset(&upper[i]) {
            return Err(Error::InternalInconsistency(format!("at [{}]: tangent weight bounds cross", x.word_string())));
        }
    }
    Ok(elements
        .iter()
        .zip(lower.into_iter().zip(upper))
        .map(|(x, (lower, upper))| TangentBounds { x: x.clone(), lower, upper })
        .collect())
}

/// Verdict at `x`, computed over `[x, w]` only.
pub fn smooth_at(group: &WeylGroup, w: &WeylElement, x: &WeylElement, opts: SmoothnessOptions) -> Result<bool> {
    check_g2(group, opts)?;
    let var = SchubertVariety::lazy(group, w.clone());
    let elements = group.upper_interval(x, w)?;
    let index: HashMap<WeylElement, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let d = decide(&var, &elements, &index)?;
    Ok(d.verdicts[index[x]].is_smooth())
}

/// Maximal singular fixed points; empty iff `X(w)` is smooth.
pub fn singular_locus(group: &WeylGroup, w: &WeylElement, opts: SmoothnessOptions) -> Result<Vec<WeylElement>> {
    let mut var = SchubertVariety::new(group, w.clone());
    Ok(smoothness_report(&mut var, opts)?.max_singular)
}

/// Smoothness of the Schubert variety `X(w W_J)` in `G/P_J` at the fixed
/// point `x W_J`. `w` and `x` are minimal coset representatives. The
/// preimage in `G/B` is `X(w w_0(J))` and the projection is smooth, so the
/// verdict is read off at `x`.
pub fn gp_smooth_at(
    group: &WeylGroup,
    subset: &[usize],
    w: &WeylElement,
    x: &WeylElement,
    opts: SmoothnessOptions,
) -> Result<bool> {
    let w0j = group.longest_in(subset)?;
    if !group.is_minimal_in_coset(w, subset) || !group.is_minimal_in_coset(x, subset) {
        return Err(Error::NotMinimalRepresentative);
    }
    if !group.bruhat_leq(x, w) {
        return Err(Error::QuotientOrder);
    }
    let pulled_back = group.mul(w, &w0j);
    smooth_at(group, &pulled_back, x, opts)
}
