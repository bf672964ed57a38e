//! Weyl group elements, Bruhat order and lower intervals.
//!
//! An element is stored as the permutation it induces on the interned root
//! list. Equality and hashing only look at that permutation; the reduced
//! word is derived data. Words use 1-based simple indices.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

type Perm = Box<[u16]>;

#[derive(Clone)]
pub struct WeylElement {
    perm: Perm,
    inv: Perm,
    length: usize,
    word: Vec<u8>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state)
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[{}]", self.word_string())
    }
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.length
    }

    /// Canonical reduced word, 1-based simple indices.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.word.iter().map(|&s| s as usize).collect()
    }

    pub fn word_string(&self) -> String {
        self.word.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// `w(gamma)`.
    pub fn apply(&self, gamma: Root) -> Root {
        Root::from_index(self.perm[gamma.index()] as usize)
    }

    /// `w^{-1}(gamma)`.
    pub fn apply_inverse(&self, gamma: Root) -> Root {
        Root::from_index(self.inv[gamma.index()] as usize)
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }
}

/// Weyl group of a root system, with precomputed reflection permutations.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    /// Permutation of `r_gamma` for each positive root `gamma`.
    reflections: Vec<Perm>,
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> WeylGroup {
        Self::from_arc(Arc::new(rs))
    }

    pub fn from_arc(rs: Arc<RootSystem>) -> WeylGroup {
        let reflections =
            rs.positive_roots().map(|g| rs.roots().map(|b| rs.reflect(g, b).index() as u16).collect()).collect();
        WeylGroup { rs, reflections }
    }

    pub fn parse(descriptor: &str) -> Result<WeylGroup> {
        Ok(WeylGroup::new(RootSystem::parse(descriptor)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    fn is_neg(&self, i: u16) -> bool {
        i as usize >= self.rs.num_positive()
    }

    pub(crate) fn element_from_perm(&self, perm: Perm) -> WeylElement {
        let n = perm.len();
        let mut inv = vec![0u16; n].into_boxed_slice();
        for (i, &p) in perm.iter().enumerate() {
            inv[p as usize] = i as u16;
        }
        let rank = self.rank();
        let mut cur = perm.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..rank).find(|&i| self.is_neg(cur[i])) {
            rev.push((i + 1) as u8);
            cur = self.right_simple(&cur, i);
        }
        rev.reverse();
        WeylElement { length: rev.len(), word: rev, perm, inv }
    }

    /// `p * s_i` for 0-based `i`.
    fn right_simple(&self, p: &[u16], i: usize) -> Perm {
        let s = &self.reflections[i];
        s.iter().map(|&j| p[j as usize]).collect()
    }

    fn compose(&self, a: &[u16], b: &[u16]) -> Perm {
        b.iter().map(|&j| a[j as usize]).collect()
    }

    pub fn identity(&self) -> WeylElement {
        let perm: Perm = (0..self.rs.num_roots() as u16).collect();
        WeylElement { inv: perm.clone(), perm, length: 0, word: Vec::new() }
    }

    /// Simple reflection with 1-based index.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        let root = self.rs.simple_root(i)?;
        Ok(self.reflection_of(root))
    }

    /// Product of simple reflections; the word need not be reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let rank = self.rank();
        let mut perm: Perm = (0..self.rs.num_roots() as u16).collect();
        for &i in word {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            perm = self.right_simple(&perm, i - 1);
        }
        Ok(self.element_from_perm(perm))
    }

    /// Parses a comma-separated word such as `"2,1,3"`; the empty string is
    /// the identity.
    pub fn parse_word(&self, s: &str) -> Result<WeylElement> {
        self.from_word(&parse_word(s)?)
    }

    pub fn reflection_of(&self, gamma: Root) -> WeylElement {
        let g = self.rs.abs(gamma);
        self.element_from_perm(self.reflections[g.index()].clone())
    }

    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        self.element_from_perm(self.compose(&a.perm, &b.perm))
    }

    pub fn inverse(&self, a: &WeylElement) -> WeylElement {
        WeylElement {
            perm: a.inv.clone(),
            inv: a.perm.clone(),
            length: a.length,
            word: a.word.iter().rev().copied().collect::<Vec<_>>(),
        }
        .recanonicalize(self)
    }

    /// `r_gamma * x`.
    pub fn reflect_left(&self, gamma: Root, x: &WeylElement) -> WeylElement {
        let r = &self.reflections[self.rs.abs(gamma).index()];
        self.element_from_perm(x.perm.iter().map(|&j| r[j as usize]).collect())
    }

    /// `x * s_i` for a 1-based simple index.
    pub fn mul_simple_right(&self, x: &WeylElement, i: usize) -> WeylElement {
        self.element_from_perm(self.right_simple(&x.perm, i - 1))
    }

    pub fn is_right_descent(&self, x: &WeylElement, i: usize) -> bool {
        self.is_neg(x.perm[i - 1])
    }

    pub fn is_left_descent(&self, x: &WeylElement, i: usize) -> bool {
        self.is_neg(x.inv[i - 1])
    }

    /// Inversion count `|{gamma > 0 : w^{-1}(gamma) < 0}|`, recomputed from
    /// the action.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        self.rs.positive_roots().filter(|&g| !self.rs.is_positive(w.apply_inverse(g))).count()
    }

    /// Bruhat comparison `x <= w` by greedy subword matching against the
    /// canonical reduced word of `w`, read from the right.
    pub fn bruhat_leq(&self, x: &WeylElement, w: &WeylElement) -> bool {
        self.bruhat_leq_word(x, &w.reduced_word())
    }

    /// Same as [`bruhat_leq`](Self::bruhat_leq) against any reduced word of `w`.
    pub fn bruhat_leq_word(&self, x: &WeylElement, w_word: &[usize]) -> bool {
        if x.length > w_word.len() {
            return false;
        }
        let mut cur = x.perm.clone();
        let mut remaining = x.length;
        for &s in w_word.iter().rev() {
            if remaining == 0 {
                return true;
            }
            if self.is_neg(cur[s - 1]) {
                cur = self.right_simple(&cur, s - 1);
                remaining -= 1;
            }
        }
        remaining == 0
    }

    /// All `x <= w`, generated from subwords of the reduced word of `w`.
    pub fn lower_interval(&self, w: &WeylElement) -> BruhatInterval {
        let mut set: HashSet<Perm> = HashSet::new();
        set.insert(self.identity().perm);
        for s in w.reduced_word() {
            let new: Vec<Perm> = set.iter().map(|p| self.right_simple(p, s - 1)).collect();
            set.extend(new);
        }
        let elements: Vec<WeylElement> = set.into_iter().map(|p| self.element_from_perm(p)).collect();
        BruhatInterval::build(self, w.clone(), elements)
    }

    /// `[x, w]`, built by walking up cover relations from `x`.
    pub fn upper_interval(&self, x: &WeylElement, w: &WeylElement) -> Result<Vec<WeylElement>> {
        let w_word = w.reduced_word();
        if !self.bruhat_leq_word(x, &w_word) {
            return Err(Error::NotInInterval);
        }
        let mut seen: HashSet<WeylElement> = HashSet::new();
        seen.insert(x.clone());
        let mut layer = vec![x.clone()];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for y in &layer {
                for g in self.rs.positive_roots() {
                    if !self.rs.is_positive(y.apply_inverse(g)) {
                        continue;
                    }
                    let z = self.reflect_left(g, y);
                    if z.length == y.length + 1 && !seen.contains(&z) && self.bruhat_leq_word(&z, &w_word) {
                        seen.insert(z.clone());
                        next.push(z);
                    }
                }
            }
            layer = next;
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        sort_canonical_desc(&mut out);
        Ok(out)
    }

    /// `c_k = |{x <= w : l(x) = k}|`.
    pub fn poincare(&self, w: &WeylElement) -> Vec<usize> {
        self.lower_interval(w).rank_table().to_vec()
    }

    /// Every element of the group, sorted by length then canonical word.
    pub fn all_elements(&self, budget: usize) -> Result<Vec<WeylElement>> {
        let mut seen: HashSet<Perm> = HashSet::new();
        let id = self.identity().perm;
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for i in 0..self.rank() {
                let q = self.right_simple(&p, i);
                if seen.insert(q.clone()) {
                    if seen.len() > budget {
                        return Err(Error::BudgetExceeded { size: seen.len(), budget });
                    }
                    queue.push_back(q);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().map(|p| self.element_from_perm(p)).collect();
        out.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.word.cmp(&b.word)));
        Ok(out)
    }

    /// Longest element of the parabolic subgroup generated by `subset`
    /// (1-based simple indices).
    pub fn longest_in(&self, subset: &[usize]) -> Result<WeylElement> {
        for &j in subset {
            self.rs.simple_root(j)?;
        }
        let mut cur = self.identity();
        while let Some(&j) = subset.iter().find(|&&j| !self.is_right_descent(&cur, j)) {
            cur = self.mul_simple_right(&cur, j);
        }
        Ok(cur)
    }

    pub fn longest_element(&self) -> WeylElement {
        let all: Vec<usize> = (1..=self.rank()).collect();
        self.longest_in(&all).expect("indices in range")
    }

    /// True iff `x` is the minimal-length representative of `x W_J`.
    pub fn is_minimal_in_coset(&self, x: &WeylElement, subset: &[usize]) -> bool {
        subset.iter().all(|&j| !self.is_right_descent(x, j))
    }

    /// Minimal representative of `x W_J`.
    pub fn minimal_in_coset(&self, x: &WeylElement, subset: &[usize]) -> WeylElement {
        let mut cur = x.clone();
        while let Some(&j) = subset.iter().find(|&&j| self.is_right_descent(&cur, j)) {
            cur = self.mul_simple_right(&cur, j);
        }
        cur
    }

    /// Elements of the parabolic subgroup `W_J`.
    pub fn parabolic_subgroup(&self, subset: &[usize]) -> Vec<WeylElement> {
        let mut seen: HashSet<WeylElement> = HashSet::new();
        let id = self.identity();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for &j in subset {
                let y = self.mul_simple_right(&x, j);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        sort_canonical_desc(&mut out);
        out
    }
}

impl WeylElement {
    fn recanonicalize(self, g: &WeylGroup) -> WeylElement {
        g.element_from_perm(self.perm)
    }
}

pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::BadDescriptor(format!("bad word {s:?}"))))
        .collect()
}

/// Length descending, then canonical word ascending.
pub(crate) fn sort_canonical_desc(v: &mut [WeylElement]) {
    v.sort_by(|a, b| b.length.cmp(&a.length).then_with(|| a.word.cmp(&b.word)));
}

/// The lower Bruhat interval `[e, w]` with its cover relations.
#[derive(Debug, Clone)]
pub struct BruhatInterval {
    top: WeylElement,
    elements: Vec<WeylElement>,
    rank_table: Vec<usize>,
    covers_down: Vec<Vec<usize>>,
    covers_up: Vec<Vec<usize>>,
    index: HashMap<WeylElement, usize>,
}

impl BruhatInterval {
    fn build(g: &WeylGroup, top: WeylElement, mut elements: Vec<WeylElement>) -> BruhatInterval {
        sort_canonical_desc(&mut elements);
        let index: HashMap<WeylElement, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rank_table = vec![0; top.length + 1];
        for e in &elements {
            rank_table[e.length] += 1;
        }
        let mut covers_down = vec![Vec::new(); elements.len()];
        let mut covers_up = vec![Vec::new(); elements.len()];
        let rs = g.root_system();
        for (i, y) in elements.iter().enumerate() {
            for gamma in rs.positive_roots() {
                if rs.is_positive(y.apply_inverse(gamma)) {
                    continue;
                }
                let r = &g.reflections[gamma.index()];
                let perm: Perm = y.perm.iter().map(|&j| r[j as usize]).collect();
                let j = *index.get(&g.element_from_perm(perm)).expect("interval is downward closed");
                if elements[j].length + 1 == y.length {
                    covers_down[i].push(j);
                    covers_up[j].push(i);
                }
            }
        }
        BruhatInterval { top, elements, rank_table, covers_down, covers_up, index }
    }

    pub fn top(&self) -> &WeylElement {
        &self.top
    }

    /// Elements sorted by length descending, then canonical word.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank_table(&self) -> &[usize] {
        &self.rank_table
    }

    pub fn index_of(&self, x: &WeylElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &WeylElement) -> bool {
        self.index.contains_key(x)
    }

    pub fn covers_below(&self, i: usize) -> &[usize] {
        &self.covers_down[i]
    }

    pub fn covers_above(&self, i: usize) -> &[usize] {
        &self.covers_up[i]
    }

    pub fn cover_count(&self) -> usize {
        self.covers_down.iter().map(Vec::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[allow(clippy::needless_range_loop)]
    fn brute_bruhat(g: &WeylGroup, all: &[WeylElement]) -> HashMap<(usize, usize), bool> {
        // transitive closure of x -> r_gamma x with length increase
        let idx: HashMap<&WeylElement, usize> = all.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let n = all.len();
        let mut le = vec![vec![false; n]; n];
        for i in 0..n {
            le[i][i] = true;
            for gamma in g.root_system().positive_roots() {
                let y = g.reflect_left(gamma, &all[i]);
                if y.length() > all[i].length() {
                    le[i][idx[&y]] = true;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut out = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                out.insert((i, j), le[i][j]);
            }
        }
        out
    }

    #[test]
    fn words_and_lengths() {
        let g = WeylGroup::parse("B2").unwrap();
        assert!(g.from_word(&[]).unwrap().is_identity());
        let w = g.from_word(&[1, 2, 1]).unwrap();
        assert_eq!(w.length(), 3);
        assert_eq!(w.reduced_word(), vec![1, 2, 1]);
        assert!(matches!(g.from_word(&[3]), Err(Error::IndexOutOfRange { .. })));
        let a2 = WeylGroup::parse("A2").unwrap();
        assert!(a2.from_word(&[1, 1]).unwrap().is_identity());
    }

    #[test]
    fn apply_in_b2() {
        let g = WeylGroup::parse("B2").unwrap();
        let rs = g.root_system();
        let w = g.from_word(&[1, 2, 1]).unwrap();
        let a = rs.simple_root(1).unwrap();
        assert_eq!(rs.coords(w.apply(a)), &[-1, -1]);
        let ra = g.simple_reflection(1).unwrap();
        assert_eq!(ra.apply(a), rs.neg(a));
        assert_eq!(g.identity().apply(a), a);
    }

    #[test]
    fn reflections() {
        let g = WeylGroup::parse("B2").unwrap();
        let rs = g.root_system();
        assert_eq!(g.reflection_of(rs.root(&[2, 1]).unwrap()).length(), 3);
        assert_eq!(g.reflection_of(rs.root(&[1, 0]).unwrap()).length(), 1);
        let a2 = WeylGroup::parse("A2").unwrap();
        let r = a2.reflection_of(a2.root_system().root(&[1, 1]).unwrap());
        assert_eq!(r, a2.from_word(&[1, 2, 1]).unwrap());
        let neg = a2.root_system().root(&[-1, -1]).unwrap();
        assert_eq!(a2.reflection_of(neg), r);
    }

    #[test]
    fn length_is_inversion_count() {
        for t in ["A3", "B3", "C3", "A2xA1"] {
            let g = WeylGroup::parse(t).unwrap();
            for w in g.all_elements(10_000).unwrap() {
                assert_eq!(w.length(), g.inversion_count(&w));
            }
        }
    }

    #[test]
    fn bruhat_matches_reflection_closure() {
        for t in ["B2", "A3", "B3", "C3"] {
            let g = WeylGroup::parse(t).unwrap();
            let all = g.all_elements(10_000).unwrap();
            let brute = brute_bruhat(&g, &all);
            for (i, x) in all.iter().enumerate() {
                for (j, w) in all.iter().enumerate() {
                    assert_eq!(g.bruhat_leq(x, w), brute[&(i, j)], "{t} {x:?} {w:?}");
                }
            }
        }
    }

    #[test]
    fn bruhat_independent_of_reduced_word() {
        let g = WeylGroup::parse("A3").unwrap();
        let all = g.all_elements(100).unwrap();
        let w = g.from_word(&[2, 1, 3, 2]).unwrap();
        let other = [2, 3, 1, 2];
        assert_eq!(g.from_word(&other).unwrap(), w);
        for x in &all {
            assert_eq!(g.bruhat_leq(x, &w), g.bruhat_leq_word(x, &other));
        }
    }

    #[test]
    fn bruhat_partial_order_and_inverse() {
        for t in ["B2", "A3"] {
            let g = WeylGroup::parse(t).unwrap();
            let all = g.all_elements(100).unwrap();
            for x in &all {
                assert!(g.bruhat_leq(x, x));
                for y in &all {
                    let xy = g.bruhat_leq(x, y);
                    if xy && g.bruhat_leq(y, x) {
                        assert_eq!(x, y);
                    }
                    assert_eq!(xy, g.bruhat_leq(&g.inverse(x), &g.inverse(y)));
                    if xy {
                        for z in &all {
                            if g.bruhat_leq(y, z) {
                                assert!(g.bruhat_leq(x, z));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn b2_examples() {
        let g = WeylGroup::parse("B2").unwrap();
        let w = g.from_word(&[1, 2, 1]).unwrap();
        assert!(g.bruhat_leq(&g.identity(), &w));
        assert!(g.bruhat_leq(&g.from_word(&[2]).unwrap(), &w));
        let w0 = g.longest_element();
        assert_eq!(w0.length(), 4);
        assert!(!g.bruhat_leq(&w0, &g.from_word(&[1]).unwrap()));
    }

    #[test]
    fn intervals() {
        let g = WeylGroup::parse("B2").unwrap();
        let all = g.all_elements(100).unwrap();
        let w = g.from_word(&[1, 2, 1]).unwrap();
        let iv = g.lower_interval(&w);
        let brute = all.iter().filter(|x| g.bruhat_leq(x, &w)).count();
        assert_eq!(iv.len(), brute);
        assert_eq!(iv.len(), 6);
        assert_eq!(iv.rank_table(), &[1, 2, 2, 1]);
        assert_eq!(g.lower_interval(&g.identity()).rank_table(), &[1]);

        let a2 = WeylGroup::parse("A2").unwrap();
        let w0 = a2.longest_element();
        assert_eq!(a2.poincare(&w0), vec![1, 2, 2, 1]);
        assert_eq!(a2.poincare(&a2.from_word(&[2]).unwrap()), vec![1, 1]);
        assert_eq!(a2.poincare(&a2.identity()), vec![1]);
    }

    #[test]
    fn covers_are_unique_reflections() {
        for t in ["A3", "B3"] {
            let g = WeylGroup::parse(t).unwrap();
            let w0 = g.longest_element();
            let iv = g.lower_interval(&w0);
            assert_eq!(iv.len(), g.all_elements(1000).unwrap().len());
            for (i, y) in iv.elements().iter().enumerate() {
                for &j in iv.covers_below(i) {
                    let x = &iv.elements()[j];
                    assert_eq!(x.length() + 1, y.length());
                    let n = g.root_system().positive_roots().filter(|&gm| g.reflect_left(gm, x) == *y).count();
                    assert_eq!(n, 1);
                }
            }
        }
    }

    #[test]
    fn interval_downward_closed_and_sorted() {
        let g = WeylGroup::parse("C3").unwrap();
        let all = g.all_elements(100).unwrap();
        for w in all.iter().step_by(5) {
            let iv = g.lower_interval(w);
            for x in &all {
                assert_eq!(iv.contains(x), g.bruhat_leq(x, w));
            }
            assert_eq!(iv.rank_table().iter().sum::<usize>(), iv.len());
            assert_eq!(iv.elements()[0], *w);
            assert!(iv.elements().windows(2).all(|p| p[0].length() >= p[1].length()));
        }
    }

    #[test]
    fn upper_interval_matches_filter() {
        let g = WeylGroup::parse("B3").unwrap();
        let w = g.from_word(&[1, 2, 3, 2, 1, 2]).unwrap();
        let iv = g.lower_interval(&w);
        for x in iv.elements().iter().step_by(3) {
            let up = g.upper_interval(x, &w).unwrap();
            let brute = iv.elements().iter().filter(|y| g.bruhat_leq(x, y)).count();
            assert_eq!(up.len(), brute);
        }
    }

    #[test]
    fn parabolic_pieces() {
        let g = WeylGroup::parse("A3").unwrap();
        let w0j = g.longest_in(&[1, 2]).unwrap();
        assert_eq!(w0j.length(), 3);
        assert_eq!(g.parabolic_subgroup(&[1, 3]).len(), 4);
        let x = g.from_word(&[2, 1]).unwrap();
        assert!(g.is_minimal_in_coset(&x, &[2]));
        assert!(!g.is_minimal_in_coset(&x, &[1]));
        assert_eq!(g.minimal_in_coset(&x, &[1]), g.from_word(&[2]).unwrap());
    }
}
