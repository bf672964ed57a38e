//! Finite crystallographic root systems built from Cartan data.
//!
//! Roots are stored as integer coordinate vectors in the basis of simple
//! roots and interned: a [`Root`] is an index into the canonical root list
//! of its [`RootSystem`]. Positive roots come first, sorted by height and
//! then by descending coordinates, so simple root `i` has index `i - 1`.
//! The negative of the positive root with index `k` has index `k + N`,
//! where `N` is the number of positive roots.
//!
//! Simple-root numbering per series:
//!
//! * `A_n`, `D_n`, `E_n`, `F4`: Bourbaki.
//! * `B_n`: node 1 is the short simple root, nodes 2..n are long.
//! * `C_n`: node 1 is the long simple root, nodes 2..n are short.
//! * `G2`: node 1 short, node 2 long.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl Series {
    fn from_char(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// One simple factor of a (possibly reducible) type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub series: Series,
    pub rank: usize,
}

impl Factor {
    pub fn new(series: Series, rank: usize) -> Result<Factor> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(Factor { series, rank })
        } else {
            Err(Error::InvalidRank { series, rank })
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.series, Series::A | Series::D | Series::E)
    }

    /// Squared lengths of the simple roots (short roots have length 1).
    fn simple_lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.series {
            Series::A | Series::D | Series::E => vec![1; n],
            Series::B => (0..n).map(|i| if i == 0 { 1 } else { 2 }).collect(),
            Series::C => (0..n).map(|i| if i == 0 { 2 } else { 1 }).collect(),
            Series::F => vec![2, 2, 1, 1],
            Series::G => vec![1, 3],
        }
    }

    /// Edges of the Dynkin diagram, 0-based.
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.series {
            Series::A | Series::B | Series::C | Series::F | Series::G => {
                (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
            }
            Series::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Series::E => {
                let mut e = vec![(0, 2), (1, 3), (2, 3)];
                e.extend((3..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Number of roots predicted by the classification.
    pub fn expected_root_count(&self) -> usize {
        let n = self.rank;
        match (self.series, n) {
            (Series::A, _) => n * (n + 1),
            (Series::B, _) | (Series::C, _) => 2 * n * n,
            (Series::D, _) => 2 * n * (n - 1),
            (Series::E, 6) => 72,
            (Series::E, 7) => 126,
            (Series::E, _) => 240,
            (Series::F, _) => 48,
            (Series::G, _) => 12,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// A product of simple factors, written like `A3xA1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeDescriptor(Vec<Factor>);

impl TypeDescriptor {
    pub fn new(factors: Vec<Factor>) -> Result<TypeDescriptor> {
        if factors.is_empty() {
            return Err(Error::BadDescriptor(String::new()));
        }
        Ok(TypeDescriptor(factors))
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|f| f.rank).sum()
    }

    pub fn has_g2(&self) -> bool {
        self.0.iter().any(|f| f.series == Series::G)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.0.iter().all(Factor::is_simply_laced)
    }

    pub fn expected_root_count(&self) -> usize {
        self.0.iter().map(Factor::expected_root_count).sum()
    }
}

impl FromStr for TypeDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadDescriptor(s.to_string());
        let lower = s.trim().to_ascii_lowercase();
        if lower.is_empty() {
            return Err(bad());
        }
        let mut factors = Vec::new();
        for part in lower.split('x') {
            let mut chars = part.chars();
            let series = chars.next().and_then(Series::from_char).ok_or_else(bad)?;
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            factors.push(Factor::new(series, rank)?);
        }
        TypeDescriptor::new(factors)
    }
}

impl fmt::Display for TypeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Interned root: an index into [`RootSystem::roots`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(u32);

impl Root {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Root {
        Root(i as u32)
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    descriptor: TypeDescriptor,
    cartan: Vec<Vec<i32>>,
    /// Twice the invariant form on simple roots; integral.
    form2: Vec<Vec<i64>>,
    coords: Vec<Vec<i32>>,
    lookup: HashMap<Vec<i32>, Root>,
    n_pos: usize,
    factor_ranges: Vec<Range<usize>>,
    root_factor: Vec<usize>,
    norm2: Vec<i64>,
    long_norm2: Vec<Option<i64>>,
}

impl RootSystem {
    /// Builds the root system, rejecting G2 factors.
    pub fn new(descriptor: &TypeDescriptor) -> Result<RootSystem> {
        Self::with_options(descriptor, false)
    }

    pub fn with_options(descriptor: &TypeDescriptor, allow_g2: bool) -> Result<RootSystem> {
        if descriptor.has_g2() && !allow_g2 {
            return Err(Error::G2Disallowed);
        }
        let rank = descriptor.rank();
        let mut form2 = vec![vec![0i64; rank]; rank];
        let mut factor_ranges = Vec::new();
        let mut offset = 0;
        for factor in descriptor.factors() {
            let d = factor.simple_lengths();
            for i in 0..factor.rank {
                form2[offset + i][offset + i] = 2 * d[i];
            }
            for (i, j) in factor.edges() {
                let v = -d[i].max(d[j]);
                form2[offset + i][offset + j] = v;
                form2[offset + j][offset + i] = v;
            }
            factor_ranges.push(offset..offset + factor.rank);
            offset += factor.rank;
        }
        let cartan: Vec<Vec<i32>> =
            (0..rank).map(|i| (0..rank).map(|j| (2 * form2[i][j] / form2[i][i]) as i32).collect()).collect();

        let positives = positive_closure(&cartan);
        let mut positives: Vec<Vec<i32>> = positives.into_iter().collect();
        positives.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = positives.len();
        let mut coords = positives.clone();
        coords.extend(positives.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let lookup = coords.iter().enumerate().map(|(i, c)| (c.clone(), Root::from_index(i))).collect();

        let root_factor: Vec<usize> = coords
            .iter()
            .map(|c| {
                factor_ranges
                    .iter()
                    .position(|r| c[r.clone()].iter().any(|&x| x != 0))
                    .expect("root has a nonzero coordinate")
            })
            .collect();
        let norm2: Vec<i64> = coords.iter().map(|c| bilinear(&form2, c, c)).collect();
        let long_norm2 = descriptor
            .factors()
            .iter()
            .enumerate()
            .map(|(k, factor)| {
                if factor.is_simply_laced() {
                    None
                } else {
                    (0..coords.len()).filter(|&i| root_factor[i] == k).map(|i| norm2[i]).max()
                }
            })
            .collect();

        Ok(RootSystem {
            descriptor: descriptor.clone(),
            cartan,
            form2,
            coords,
            lookup,
            n_pos,
            factor_ranges,
            root_factor,
            norm2,
            long_norm2,
        })
    }

    pub fn parse(descriptor: &str) -> Result<RootSystem> {
        RootSystem::new(&descriptor.parse()?)
    }

    pub fn descriptor(&self) -> &TypeDescriptor {
        &self.descriptor
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `cartan_matrix()[i][j]` is the pairing of simple root `j` with the
    /// coroot of simple root `i`.
    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn num_roots(&self) -> usize {
        self.coords.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        (0..self.coords.len()).map(Root::from_index)
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = Root> + '_ {
        (0..self.n_pos).map(Root::from_index)
    }

    /// Simple root with 1-based index `i`.
    pub fn simple_root(&self, i: usize) -> Result<Root> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(Root::from_index(i - 1))
    }

    pub fn coords(&self, r: Root) -> &[i32] {
        &self.coords[r.index()]
    }

    pub fn root(&self, coords: &[i32]) -> Result<Root> {
        self.try_root(coords).ok_or_else(|| Error::NotARoot(coords.to_vec()))
    }

    pub fn try_root(&self, coords: &[i32]) -> Option<Root> {
        self.lookup.get(coords).copied()
    }

    pub fn is_positive(&self, r: Root) -> bool {
        r.index() < self.n_pos
    }

    pub fn neg(&self, r: Root) -> Root {
        let i = r.index();
        if i < self.n_pos {
            Root::from_index(i + self.n_pos)
        } else {
            Root::from_index(i - self.n_pos)
        }
    }

    /// The positive root among `r` and `-r`.
    pub fn abs(&self, r: Root) -> Root {
        if self.is_positive(r) {
            r
        } else {
            self.neg(r)
        }
    }

    pub fn height(&self, r: Root) -> i32 {
        self.coords(r).iter().sum()
    }

    /// `a + b` if it is a root.
    pub fn add(&self, a: Root, b: Root) -> Option<Root> {
        let sum: Vec<i32> = self.coords(a).iter().zip(self.coords(b)).map(|(x, y)| x + y).collect();
        self.try_root(&sum)
    }

    /// `a + k * b` if it is a root.
    pub fn add_multiple(&self, a: Root, k: i32, b: Root) -> Option<Root> {
        let v: Vec<i32> = self.coords(a).iter().zip(self.coords(b)).map(|(x, y)| x + k * y).collect();
        self.try_root(&v)
    }

    /// Twice the invariant form, which is integral.
    pub fn form2(&self, a: Root, b: Root) -> i64 {
        bilinear(&self.form2, self.coords(a), self.coords(b))
    }

    /// The invariant form, normalized so that short roots have squared
    /// length 1 in every factor.
    pub fn form(&self, a: Root, b: Root) -> Rational64 {
        Rational64::new(self.form2(a, b), 2)
    }

    pub fn form_coords(&self, a: &[i32], b: &[i32]) -> Rational64 {
        Rational64::new(bilinear(&self.form2, a, b), 2)
    }

    /// `<beta, alpha^vee> = 2 F(beta, alpha) / F(alpha, alpha)`.
    pub fn pairing(&self, beta: Root, alpha: Root) -> i32 {
        let num = 2 * self.form2(beta, alpha);
        let den = self.norm2[alpha.index()];
        debug_assert_eq!(num % den, 0);
        (num / den) as i32
    }

    pub fn reflect_coords(&self, alpha: Root, v: &[i32]) -> Vec<i32> {
        let num = 2 * bilinear(&self.form2, v, self.coords(alpha));
        let k = (num / self.norm2[alpha.index()]) as i32;
        v.iter().zip(self.coords(alpha)).map(|(x, a)| x - k * a).collect()
    }

    /// `r_alpha(beta) = beta - <beta, alpha^vee> alpha`.
    pub fn reflect(&self, alpha: Root, beta: Root) -> Root {
        let k = self.pairing(beta, alpha);
        self.add_multiple(beta, -k, alpha).expect("reflection of a root is a root")
    }

    pub fn factor_of(&self, r: Root) -> usize {
        self.root_factor[r.index()]
    }

    pub fn factor_range(&self, k: usize) -> Range<usize> {
        self.factor_ranges[k].clone()
    }

    /// True iff `r` has maximal length in a factor that is not simply laced.
    /// Every root of a simply-laced factor counts as short.
    pub fn is_long(&self, r: Root) -> bool {
        match self.long_norm2[self.factor_of(r)] {
            Some(max) => self.norm2[r.index()] == max,
            None => false,
        }
    }

    pub fn is_short(&self, r: Root) -> bool {
        !self.is_long(r)
    }

    /// The `alpha`-string through `beta`, top (largest multiple of `alpha`)
    /// first. For `beta = ±alpha` the string degenerates to `[beta]`.
    pub fn alpha_string(&self, alpha: Root, beta: Root) -> Vec<Root> {
        if beta == alpha || beta == self.neg(alpha) {
            return vec![beta];
        }
        let mut top = beta;
        while let Some(next) = self.add(top, alpha) {
            top = next;
        }
        let mut string = vec![top];
        let neg_alpha = self.neg(alpha);
        while let Some(next) = self.add(*string.last().unwrap(), neg_alpha) {
            string.push(next);
        }
        let bottom = *string.last().unwrap();
        // root strings are unbroken
        for k in 2..=4 {
            assert!(
                self.add_multiple(top, k, alpha).is_none() && self.add_multiple(bottom, -k, alpha).is_none(),
                "broken root string"
            );
        }
        string
    }
}

fn bilinear(m: &[Vec<i64>], a: &[i32], b: &[i32]) -> i64 {
    let mut s = 0;
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            s += ai as i64 * m[i][j] * bj as i64;
        }
    }
    s
}

/// Positive roots: orbit of the simple roots under simple reflections,
/// restricted to the positive cone. A simple reflection permutes the
/// positive roots other than its own root, so closure inside the positive
/// cone reaches every positive root.
fn positive_closure(cartan: &[Vec<i32>]) -> std::collections::HashSet<Vec<i32>> {
    let rank = cartan.len();
    let mut seen = std::collections::HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..rank {
            let k: i32 = (0..rank).map(|j| cartan[i][j] * v[j]).sum();
            if k == 0 {
                continue;
            }
            let mut u = v.clone();
            u[i] -= k;
            if u.iter().all(|&c| c >= 0) && u.iter().any(|&c| c > 0) && seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn classification_counts() {
        for s in ["A1", "A2", "A5", "B2", "B4", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "A3xA1", "B2xA2"] {
            let r = rs(s);
            assert_eq!(r.num_roots(), r.descriptor().expected_root_count(), "{s}");
        }
    }

    #[test]
    fn b2_lengths() {
        let r = rs("B2");
        let long = r.roots().filter(|&g| r.is_long(g)).count();
        assert_eq!((r.num_roots(), long), (8, 4));
        let a = r.simple_root(1).unwrap();
        let b = r.simple_root(2).unwrap();
        assert!(r.is_long(r.root(&[2, 1]).unwrap()));
        assert!(!r.is_long(r.root(&[1, 1]).unwrap()));
        assert_eq!(r.pairing(b, a), -2);
        assert_eq!(r.pairing(a, b), -1);
        assert_eq!(r.reflect(a, b), r.root(&[2, 1]).unwrap());
        let ab = r.root(&[1, 1]).unwrap();
        assert_eq!(r.reflect(ab, r.root(&[-2, -1]).unwrap()), b);
        assert_eq!(r.form(a, a), Rational64::from_integer(1));
        assert_eq!(r.form(b, b), Rational64::from_integer(2));
    }

    #[test]
    fn simply_laced_has_no_long_roots() {
        let r = rs("A3");
        assert!(r.roots().all(|g| !r.is_long(g)));
        let r = rs("A2");
        assert_eq!(r.pairing(r.simple_root(1).unwrap(), r.simple_root(2).unwrap()), -1);
    }

    #[test]
    fn strings() {
        let r = rs("A2");
        let a1 = r.simple_root(1).unwrap();
        let a2 = r.simple_root(2).unwrap();
        assert_eq!(r.alpha_string(a1, a2), vec![r.root(&[1, 1]).unwrap(), a2]);
        let r = rs("B2");
        let ab = r.root(&[1, 1]).unwrap();
        let s = r.alpha_string(ab, r.root(&[-1, 0]).unwrap());
        let expect: Vec<_> = [[0, 1], [-1, 0], [-2, -1]].iter().map(|c| r.root(c).unwrap()).collect();
        assert_eq!(s, expect);
        let d = rs("D4");
        let a1 = d.simple_root(1).unwrap();
        let a3 = d.simple_root(3).unwrap();
        assert_eq!(d.pairing(a3, a1), 0);
        assert_eq!(d.alpha_string(a1, a3), vec![a3]);
    }

    #[test]
    fn descriptor_parsing() {
        let t: TypeDescriptor = "a3Xa1".parse().unwrap();
        assert_eq!(t.to_string(), "A3xA1");
        assert!(matches!("B1".parse::<TypeDescriptor>(), Err(Error::InvalidRank { .. })));
        assert!(matches!("E5".parse::<TypeDescriptor>(), Err(Error::InvalidRank { .. })));
        assert!(matches!("Q3".parse::<TypeDescriptor>(), Err(Error::BadDescriptor(_))));
        assert!(matches!("".parse::<TypeDescriptor>(), Err(Error::BadDescriptor(_))));
        assert!(matches!(RootSystem::parse("G2"), Err(Error::G2Disallowed)));
        let g = RootSystem::with_options(&"G2".parse().unwrap(), true).unwrap();
        assert_eq!(g.num_roots(), 12);
    }

    #[test]
    fn simple_roots_first() {
        let r = rs("E8");
        for i in 1..=8 {
            let c = r.coords(r.simple_root(i).unwrap());
            assert_eq!(c.iter().sum::<i32>(), 1);
            assert_eq!(c[i - 1], 1);
        }
    }
}
