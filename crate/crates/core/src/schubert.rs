//! Combinatorics of a single Schubert variety `X(w)` in `G/B`.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::weyl::{BruhatInterval, WeylElement, WeylGroup};

/// A set of roots, stored as a bitset over the interned root list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightSet {
    bits: FixedBitSet,
}

impl WeightSet {
    pub fn empty(rs: &RootSystem) -> WeightSet {
        WeightSet { bits: FixedBitSet::with_capacity(rs.num_roots()) }
    }

    pub fn from_roots(rs: &RootSystem, roots: impl IntoIterator<Item = Root>) -> WeightSet {
        let mut s = WeightSet::empty(rs);
        for r in roots {
            s.insert(r);
        }
        s
    }

    pub fn from_coords(rs: &RootSystem, coords: &[&[i32]]) -> Result<WeightSet> {
        let roots = coords.iter().map(|c| rs.root(c)).collect::<Result<Vec<_>>>()?;
        Ok(WeightSet::from_roots(rs, roots))
    }

    pub fn insert(&mut self, r: Root) {
        self.bits.insert(r.index());
    }

    pub fn contains(&self, r: Root) -> bool {
        self.bits.contains(r.index())
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Root> + '_ {
        self.bits.ones().map(Root::from_index)
    }

    pub fn is_subset(&self, other: &WeightSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &WeightSet) -> WeightSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        WeightSet { bits }
    }

    pub fn intersection(&self, other: &WeightSet) -> WeightSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        WeightSet { bits }
    }

    pub fn difference(&self, other: &WeightSet) -> WeightSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        WeightSet { bits }
    }

    /// Coordinate vectors, sorted lexicographically.
    pub fn to_coords(&self, rs: &RootSystem) -> Vec<Vec<i32>> {
        let mut v: Vec<Vec<i32>> = self.iter().map(|r| rs.coords(r).to_vec()).collect();
        v.sort();
        v
    }
}

impl fmt::Debug for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

/// The checks of the rational smoothness theorem, evaluated separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSmoothness {
    pub poincare: Vec<usize>,
    pub poincare_symmetric: bool,
    /// `|E(X, x)| = l(w)` at every fixed point.
    pub curve_counts_equal_dim: bool,
    /// `2 * sum of lengths == l(w) * |[e, w]|`.
    pub average_length_half: bool,
}

impl RationalSmoothness {
    pub fn verdict(&self) -> bool {
        self.poincare_symmetric
    }
}

/// `X(w)` together with its fixed points `[e, w]`.
///
/// Membership queries use the stored interval when it was built and the
/// subword matcher otherwise.
#[derive(Debug, Clone)]
pub struct SchubertVariety<'g> {
    group: &'g WeylGroup,
    w: WeylElement,
    w_word: Vec<usize>,
    interval: Option<BruhatInterval>,
}

impl<'g> SchubertVariety<'g> {
    /// Builds the variety and enumerates its fixed points.
    pub fn new(group: &'g WeylGroup, w: WeylElement) -> SchubertVariety<'g> {
        let interval = Some(group.lower_interval(&w));
        let w_word = w.reduced_word();
        SchubertVariety { group, w, w_word, interval }
    }

    /// Builds the variety without enumerating `[e, w]`.
    pub fn lazy(group: &'g WeylGroup, w: WeylElement) -> SchubertVariety<'g> {
        let w_word = w.reduced_word();
        SchubertVariety { group, w, w_word, interval: None }
    }

    pub fn from_word(group: &'g WeylGroup, word: &[usize]) -> Result<SchubertVariety<'g>> {
        Ok(SchubertVariety::new(group, group.from_word(word)?))
    }

    pub fn group(&self) -> &'g WeylGroup {
        self.group
    }

    pub fn root_system(&self) -> &'g RootSystem {
        self.group.root_system()
    }

    pub fn top(&self) -> &WeylElement {
        &self.w
    }

    pub fn dim(&self) -> usize {
        self.w.length()
    }

    /// The fixed-point interval; built on first use for lazy varieties.
    pub fn interval(&mut self) -> &BruhatInterval {
        if self.interval.is_none() {
            self.interval = Some(self.group.lower_interval(&self.w));
        }
        self.interval.as_ref().unwrap()
    }

    pub fn interval_if_built(&self) -> Option<&BruhatInterval> {
        self.interval.as_ref()
    }

    pub fn contains(&self, x: &WeylElement) -> bool {
        match &self.interval {
            Some(iv) => iv.contains(x),
            None => self.group.bruhat_leq_word(x, &self.w_word),
        }
    }

    fn check(&self, x: &WeylElement) -> Result<()> {
        if x.perm().len() != self.w.perm().len() {
            return Err(Error::ForeignElement);
        }
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotInInterval)
        }
    }

    /// `{gamma : x^{-1}(gamma) < 0, r_gamma x <= w}`, the weights of the
    /// tangent lines to T-curves in `X(w)` through `x`.
    pub fn curve_weights(&self, x: &WeylElement) -> Result<WeightSet> {
        self.check(x)?;
        Ok(self.curve_weights_unchecked(x))
    }

    pub(crate) fn curve_weights_unchecked(&self, x: &WeylElement) -> WeightSet {
        let rs = self.root_system();
        let mut out = WeightSet::empty(rs);
        for gamma in rs.roots() {
            if rs.is_positive(x.apply_inverse(gamma)) {
                continue;
            }
            if self.contains(&self.group.reflect_left(gamma, x)) {
                out.insert(gamma);
            }
        }
        out
    }

    /// `|E(X(w), x)|`.
    pub fn curve_count(&self, x: &WeylElement) -> Result<usize> {
        let n = self.curve_weights(x)?.len();
        debug_assert!(n >= self.dim());
        Ok(n)
    }

    /// Upward T-curves at `x`: pairs `(mu, r_mu x)` with `mu > 0` and
    /// `x < r_mu x <= w`.
    pub fn upward_curves(&self, x: &WeylElement) -> Vec<(Root, WeylElement)> {
        let rs = self.root_system();
        rs.positive_roots()
            .filter(|&mu| rs.is_positive(x.apply_inverse(mu)))
            .map(|mu| (mu, self.group.reflect_left(mu, x)))
            .filter(|(_, y)| self.contains(y))
            .collect()
    }

    /// Edges of the Bruhat graph as pairs of indices into the interval,
    /// lower endpoint first.
    pub fn bruhat_graph(&mut self) -> Vec<(usize, usize)> {
        let group = self.group;
        let iv = self.interval();
        let rs = group.root_system();
        let mut edges = Vec::new();
        for (i, x) in iv.elements().iter().enumerate() {
            for mu in rs.positive_roots() {
                if !rs.is_positive(x.apply_inverse(mu)) {
                    continue;
                }
                if let Some(j) = iv.index_of(&group.reflect_left(mu, x)) {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    /// Deodhar's inequality at `x`: at least `l(w) - l(x)` reflections `r`
    /// with `x < r x <= w`.
    pub fn deodhar_check(&self, x: &WeylElement) -> Result<bool> {
        self.check(x)?;
        Ok(self.upward_curves(x).len() >= self.dim() - x.length())
    }

    /// Evaluates the Poincaré symmetry, curve count and average length
    /// criteria independently; they must agree.
    pub fn rationally_smooth(&mut self) -> Result<(bool, RationalSmoothness)> {
        let dim = self.dim();
        let elements = self.interval().elements().to_vec();
        let poincare = self.interval().rank_table().to_vec();
        let poincare_symmetric = poincare.iter().eq(poincare.iter().rev());
        let curve_counts_equal_dim = elements.iter().all(|x| self.curve_weights_unchecked(x).len() == dim);
        let total: usize = elements.iter().map(WeylElement::length).sum();
        let average_length_half = 2 * total == dim * elements.len();
        let ev = RationalSmoothness { poincare, poincare_symmetric, curve_counts_equal_dim, average_length_half };
        if poincare_symmetric != curve_counts_equal_dim || poincare_symmetric != average_length_half {
            return Err(Error::CriteriaDisagree(format!("{ev:?}")));
        }
        Ok((poincare_symmetric, ev))
    }

    /// Pointwise rational smoothness: `|E(X, y)| = l(w)` for every
    /// `y` in `[x, w]`.
    pub fn rationally_smooth_at(&self, x: &WeylElement) -> Result<bool> {
        self.check(x)?;
        let dim = self.dim();
        let upper: Vec<WeylElement> = match &self.interval {
            Some(iv) => iv.elements().iter().filter(|y| self.group.bruhat_leq(x, y)).cloned().collect(),
            None => self.group.upper_interval(x, &self.w)?,
        };
        Ok(upper.iter().all(|y| self.curve_weights_unchecked(y).len() == dim))
    }
}
