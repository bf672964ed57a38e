//! Peterson translates of tangent spaces along T-curves in `G/B`.
//!
//! Everything is computed on weight sets. `T_y(G/B)` is multiplicity free,
//! so a T-stable subspace is determined by its weights.
//!
//! For a curve from `y` down to `x = r_alpha y` (`alpha > 0`), the tangent
//! weights at `y` are grouped into classes that differ by multiples of
//! `alpha`. Each class of size `l` is replaced by the bottom `l` members of
//! the run of its `alpha`-string whose image under `y^{-1}` is negative, and
//! the union of these runs is reflected by `r_alpha`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::schubert::{SchubertVariety, WeightSet};
use crate::weyl::{WeylElement, WeylGroup};

/// Partitions `weights` into classes of roots differing by integer
/// multiples of `alpha`. Members of a class are listed top-down along
/// `alpha`; classes are ordered by their top member.
pub fn s_weight_classes(rs: &RootSystem, weights: &WeightSet, alpha: Root) -> Vec<Vec<Root>> {
    let pos_alpha = rs.abs(alpha);
    let mut classes: BTreeMap<Root, Vec<(usize, Root)>> = BTreeMap::new();
    for gamma in weights.iter() {
        let (key, pos) = if rs.abs(gamma) == pos_alpha {
            (pos_alpha, usize::from(gamma != pos_alpha))
        } else {
            let string = rs.alpha_string(pos_alpha, gamma);
            let pos = string.iter().position(|&r| r == gamma).expect("root lies on its string");
            (string[0], pos)
        };
        classes.entry(key).or_default().push((pos, gamma));
    }
    let mut out: Vec<Vec<Root>> = classes
        .into_values()
        .map(|mut c| {
            c.sort();
            c.into_iter().map(|(_, r)| r).collect()
        })
        .collect();
    out.sort_by_key(|c| c[0]);
    out
}

/// The string, the run of members with negative `y^{-1}`-image, and the
/// chosen bottom-anchored run of an M* construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingRun {
    /// Full `alpha`-string through the class, top first.
    pub string: Vec<Root>,
    /// Positions `start..end` of the negative run within `string`.
    pub run: std::ops::Range<usize>,
    /// Chosen members, top (the leading weight) first.
    pub members: Vec<Root>,
}

impl LeadingRun {
    pub fn leading_weight(&self) -> Root {
        self.members[0]
    }
}

/// Weights of `M*` for one class: `{beta, beta - alpha, ..., beta - (l-1) alpha}`
/// where `y^{-1}` of each member is negative and `beta - l alpha` is either
/// not a root or has positive `y^{-1}`-image.
pub fn m_star(rs: &RootSystem, y: &WeylElement, alpha: Root, class: &[Root]) -> Result<Vec<Root>> {
    Ok(m_star_run(rs, y, alpha, class)?.members)
}

pub fn m_star_run(rs: &RootSystem, y: &WeylElement, alpha: Root, class: &[Root]) -> Result<LeadingRun> {
    let l = class.len();
    assert!(l > 0, "empty S-weight class");
    let alpha = rs.abs(alpha);
    let string = if rs.abs(class[0]) == alpha { class.to_vec() } else { rs.alpha_string(alpha, class[0]) };
    if class.iter().any(|c| !string.contains(c)) {
        return Err(Error::ClassNotOnString);
    }
    let negative: Vec<bool> = string.iter().map(|&s| !rs.is_positive(y.apply_inverse(s))).collect();
    let start = negative.iter().position(|&n| n).unwrap_or(0);
    let end = negative[start..].iter().position(|&n| !n).map_or(string.len(), |k| start + k);
    if negative[end..].iter().any(|&n| n) {
        return Err(Error::NonConsecutiveRun);
    }
    // literal leading-weight condition, scanned over every start position
    let candidates: Vec<usize> = (0..string.len())
        .filter(|&p| p + l <= string.len())
        .filter(|&p| negative[p..p + l].iter().all(|&n| n))
        .filter(|&p| p + l == string.len() || !negative[p + l])
        .collect();
    match candidates.as_slice() {
        [] => Err(Error::RunTooShort { class: l, run: end - start }),
        [p] => Ok(LeadingRun { members: string[*p..*p + l].to_vec(), string, run: start..end }),
        many => Err(Error::AmbiguousLeadingWeight(many.len())),
    }
}

/// An upward T-curve `C` from `x = r_alpha y` up to `y`, with `alpha > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslateRequest {
    pub y: WeylElement,
    pub alpha: Root,
}

impl TranslateRequest {
    pub fn new(y: WeylElement, alpha: Root) -> TranslateRequest {
        TranslateRequest { y, alpha }
    }

    /// The curve joining `x` and `y = r_mu x`, for `x < y`.
    pub fn between(group: &WeylGroup, x: &WeylElement, y: &WeylElement) -> Result<TranslateRequest> {
        let rs = group.root_system();
        rs.positive_roots()
            .find(|&mu| group.reflect_left(mu, x) == *y)
            .filter(|_| y.length() > x.length())
            .map(|mu| TranslateRequest::new(y.clone(), mu))
            .ok_or(Error::NotAnUpwardCurve)
    }

    pub fn lower(&self, group: &WeylGroup) -> WeylElement {
        group.reflect_left(self.alpha, &self.y)
    }
}

/// Weights of the Peterson translate `tau_C(X, x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translate {
    pub x: WeylElement,
    pub y: WeylElement,
    pub curve_root: Root,
    pub tau: WeightSet,
}

/// Translate of the subspace with weights `tangent` at `y` along the curve
/// `U_alpha y` down to `r_alpha y`.
pub fn translate_weights(group: &WeylGroup, y: &WeylElement, alpha: Root, tangent: &WeightSet) -> Result<WeightSet> {
    let rs = group.root_system();
    let mut tau = WeightSet::empty(rs);
    for class in s_weight_classes(rs, tangent, alpha) {
        for m in m_star(rs, y, alpha, &class)? {
            tau.insert(rs.reflect(alpha, m));
        }
    }
    Ok(tau)
}

fn validate(var: &SchubertVariety<'_>, req: &TranslateRequest) -> Result<WeylElement> {
    let group = var.group();
    let rs = group.root_system();
    if !rs.is_positive(req.alpha) || rs.is_positive(req.y.apply_inverse(req.alpha)) {
        return Err(Error::NotAnUpwardCurve);
    }
    if !var.contains(&req.y) {
        return Err(Error::NotInInterval);
    }
    Ok(req.lower(group))
}

/// `tau_C(X(w), x)` for the curve in `req`, assuming `X(w)` is smooth at
/// `req.y` so that its tangent weights are `curve_weights(w, y)`.
pub fn peterson_translate(var: &SchubertVariety<'_>, req: &TranslateRequest) -> Result<Translate> {
    let x = validate(var, req)?;
    let tangent = var.curve_weights(&req.y)?;
    let tau = translate_weights(var.group(), &req.y, req.alpha, &tangent)?;
    Ok(Translate { x, y: req.y.clone(), curve_root: req.alpha, tau })
}

/// Equality of two translates into the same fixed point.
pub fn translates_equal(
    var: &SchubertVariety<'_>,
    first: &TranslateRequest,
    second: &TranslateRequest,
) -> Result<bool> {
    let a = peterson_translate(var, first)?;
    let b = peterson_translate(var, second)?;
    if a.x != b.x {
        return Err(Error::MismatchedBase);
    }
    Ok(a.tau == b.tau)
}

/// Weights of the submodule generated by the curve weights at `x` under
/// the isotropy algebra of `x` (root spaces `gamma > 0` with
/// `x^{-1}(gamma) > 0`), inside `T_x(G/B)`.
pub fn bbt_weights(var: &SchubertVariety<'_>, x: &WeylElement) -> Result<WeightSet> {
    let rs = var.root_system();
    let mut set = var.curve_weights(x)?;
    let isotropy: Vec<Root> = rs.positive_roots().filter(|&g| rs.is_positive(x.apply_inverse(g))).collect();
    let mut frontier: Vec<Root> = set.iter().collect();
    while let Some(s) = frontier.pop() {
        for &g in &isotropy {
            if let Some(t) = rs.add(s, g) {
                if !rs.is_positive(x.apply_inverse(t)) && !set.contains(t) {
                    set.insert(t);
                    frontier.push(t);
                }
            }
        }
    }
    Ok(set)
}

/// Which sign of `delta = mu + gamma` contributes to `V_C`.
///
/// Keeping only `delta < 0` loses weights that the translates along long
/// curves do carry (already in B2 at `x = r_alpha`, curve to
/// `r_alpha r_beta`), so both signs are the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeltaRule {
    /// Only `delta < 0` with `x^{-1}(delta) > 0`.
    NegativeOnly,
    /// Also `delta > 0` with `x^{-1}(delta) < 0`.
    #[default]
    EitherSign,
}

impl DeltaRule {
    fn admits(self, rs: &RootSystem, x: &WeylElement, delta: Root) -> bool {
        let pre = rs.is_positive(x.apply_inverse(delta));
        if rs.is_positive(delta) {
            self == DeltaRule::EitherSign && !pre
        } else {
            pre
        }
    }
}

/// Weights of `V_C` for the long curve from `x` up to `y = r_mu x`: the
/// negative roots `gamma = -(mu + phi) / 2` with `phi` long, positive and
/// orthogonal to `mu`, `-phi` a curve weight at `x` but not at `y`, and
/// `delta = mu + gamma` a root whose sign flips under `x^{-1}`.
///
/// `upper_smooth` states that the caller has established smoothness of
/// `X(w)` at `y`. Roots of simply-laced factors are never long, so the set
/// is empty there.
pub fn v_c_weights(var: &SchubertVariety<'_>, x: &WeylElement, mu: Root, upper_smooth: bool) -> Result<WeightSet> {
    v_c_weights_with(var, x, mu, upper_smooth, DeltaRule::default())
}

/// [`v_c_weights`] with an explicit rule for the sign of `delta`.
pub fn v_c_weights_with(
    var: &SchubertVariety<'_>,
    x: &WeylElement,
    mu: Root,
    upper_smooth: bool,
    rule: DeltaRule,
) -> Result<WeightSet> {
    let group = var.group();
    let rs = group.root_system();
    let mut out = WeightSet::empty(rs);
    let simply_laced = rs.descriptor().factors()[rs.factor_of(mu)].is_simply_laced();
    if simply_laced {
        return Ok(out);
    }
    if !rs.is_long(mu) {
        return Err(Error::CurveNotLong);
    }
    let mu = rs.abs(mu);
    if !upper_smooth {
        return Err(Error::NotSmoothUpperPoint);
    }
    let y = group.reflect_left(mu, x);
    if !rs.is_positive(x.apply_inverse(mu)) {
        return Err(Error::NotAnUpwardCurve);
    }
    let te_x = var.curve_weights(x)?;
    let t_y = var.curve_weights(&y)?;
    for phi in rs.positive_roots() {
        if !rs.is_long(phi) || rs.form2(phi, mu) != 0 {
            continue;
        }
        let neg_phi = rs.neg(phi);
        if !te_x.contains(neg_phi) || t_y.contains(neg_phi) {
            continue;
        }
        let sum: Vec<i32> = rs.coords(mu).iter().zip(rs.coords(phi)).map(|(a, b)| a + b).collect();
        if sum.iter().any(|c| c % 2 != 0) {
            continue;
        }
        let half: Vec<i32> = sum.iter().map(|c| -c / 2).collect();
        let Some(gamma) = rs.try_root(&half) else { continue };
        if rs.is_positive(gamma) {
            continue;
        }
        let Some(delta) = rs.add(mu, gamma) else { continue };
        if rule.admits(rs, x, delta) {
            out.insert(gamma);
        }
    }
    Ok(out)
}
