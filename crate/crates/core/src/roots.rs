//! Type A_{n-1} positive-root combinatorics in the tableau model.
//!
//! The positive root alpha_{i,j} = alpha_i + ... + alpha_j (1 <= i <= j <= n-1)
//! corresponds to the strict upper matrix position (i, j+1) of an n x n
//! unitriangular matrix.  Root sets are bitsets over the n(n-1)/2 positions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_N: u8 = 16;

/// alpha_{i,j}, 1-based with i <= j <= n-1; sits at matrix entry (i, j+1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: u8,
    pub j: u8,
}

impl Root {
    pub fn new(i: u8, j: u8) -> Result<Root> {
        if i == 0 || j < i {
            return Err(Error::Invalid(format!("invalid root ({i},{j})")));
        }
        Ok(Root { i, j })
    }

    pub const fn of(i: u8, j: u8) -> Root {
        Root { i, j }
    }

    /// Simple root alpha_i.
    pub const fn simple(i: u8) -> Root {
        Root { i, j: i }
    }

    pub fn valid_for(self, n: u8) -> bool {
        self.i >= 1 && self.i <= self.j && self.j < n
    }

    /// Matrix column of the entry (row is `i`): j + 1.
    pub fn mat_col(self) -> u8 {
        self.j + 1
    }

    /// Height j - i + 1: the number of simple summands.
    pub fn height(self) -> u8 {
        self.j - self.i + 1
    }

    pub fn parse(text: &str) -> Result<Root> {
        let (a, b) = text
            .trim()
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("root must look like `i-j`, got `{text}`")))?;
        let i = a.trim().parse().map_err(|_| Error::Parse(format!("bad root `{text}`")))?;
        let j = b.trim().parse().map_err(|_| Error::Parse(format!("bad root `{text}`")))?;
        Root::new(i, j)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{}]", self.i, self.j)
    }
}

pub fn root_count(n: u8) -> usize {
    (n as usize) * (n as usize - 1) / 2
}

/// Row-major index of a root among the n(n-1)/2 positions.
pub fn root_index(r: Root, n: u8) -> usize {
    debug_assert!(r.valid_for(n));
    let i = r.i as usize;
    let nn = n as usize;
    // row k holds the n - k roots alpha_{k,k}..alpha_{k,n-1}
    let before: usize = (1..i).map(|k| nn - k).sum();
    before + (r.j - r.i) as usize
}

pub fn root_from_index(idx: usize, n: u8) -> Root {
    let mut rest = idx;
    for i in 1..n {
        let row = (n - i) as usize;
        if rest < row {
            return Root::of(i, i + rest as u8);
        }
        rest -= row;
    }
    panic!("root index {idx} out of range for n = {n}");
}

pub fn all_roots(n: u8) -> Vec<Root> {
    (0..root_count(n)).map(|k| root_from_index(k, n)).collect()
}

/// The partial sum rule: alpha_{i,j} + alpha_{j+1,k} = alpha_{i,k}, in either
/// argument order; all other pairs do not add to a root.
pub fn add_roots(a: Root, b: Root) -> Option<Root> {
    if b.i == a.j + 1 {
        Some(Root::of(a.i, b.j))
    } else if a.i == b.j + 1 {
        Some(Root::of(b.i, a.j))
    } else {
        None
    }
}

/// Oriented composition: Some only when a's row segment continues into b,
/// i.e. row(b) = col(a) + 1.  The commutator [x_a(c), x_b(d)] then equals
/// x_{a+b}(cd); the reversed order carries the opposite sign.
pub fn compose_forward(a: Root, b: Root) -> Option<Root> {
    (b.i == a.j + 1).then(|| Root::of(a.i, b.j))
}

/// Compares by column: Some(Less) when a is strictly to the left of b.
pub fn cmp_r(a: Root, b: Root) -> Option<Ordering> {
    match a.j.cmp(&b.j) {
        Ordering::Equal => None,
        o => Some(o),
    }
}

/// Compares by row: Some(Less) when a is strictly above b.
pub fn cmp_b(a: Root, b: Root) -> Option<Ordering> {
    match a.i.cmp(&b.i) {
        Ordering::Equal => None,
        o => Some(o),
    }
}

/// A set of positive roots for a fixed n, stored as a bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSet {
    pub n: u8,
    bits: u128,
}

impl RootSet {
    pub fn empty(n: u8) -> RootSet {
        // n = 1 is the empty system (no positive roots)
        assert!((1..=MAX_N).contains(&n));
        RootSet { n, bits: 0 }
    }

    pub fn full(n: u8) -> RootSet {
        let mut s = RootSet::empty(n);
        s.bits = if root_count(n) == 128 {
            u128::MAX
        } else {
            (1u128 << root_count(n)) - 1
        };
        s
    }

    pub fn from_roots<I: IntoIterator<Item = Root>>(n: u8, roots: I) -> RootSet {
        let mut s = RootSet::empty(n);
        for r in roots {
            s.insert(r);
        }
        s
    }

    pub fn insert(&mut self, r: Root) {
        assert!(r.valid_for(self.n), "root {r} invalid for n = {}", self.n);
        self.bits |= 1 << root_index(r, self.n);
    }

    pub fn remove(&mut self, r: Root) {
        self.bits &= !(1 << root_index(r, self.n));
    }

    pub fn contains(&self, r: Root) -> bool {
        r.valid_for(self.n) && self.bits & (1 << root_index(r, self.n)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        assert_eq!(self.n, other.n);
        RootSet { n: self.n, bits: self.bits | other.bits }
    }

    pub fn inter(&self, other: &RootSet) -> RootSet {
        assert_eq!(self.n, other.n);
        RootSet { n: self.n, bits: self.bits & other.bits }
    }

    pub fn minus(&self, other: &RootSet) -> RootSet {
        assert_eq!(self.n, other.n);
        RootSet { n: self.n, bits: self.bits & !other.bits }
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Root> + '_ {
        let n = self.n;
        let bits = self.bits;
        (0..root_count(n)).filter(move |k| bits >> k & 1 == 1).map(move |k| root_from_index(k, n))
    }

    /// Closed under the partial root addition.
    pub fn is_closed(&self) -> bool {
        let roots: Vec<Root> = self.iter().collect();
        for (k, &a) in roots.iter().enumerate() {
            for &b in &roots[k..] {
                for sum in [add_roots(a, b), add_roots(b, a)].into_iter().flatten() {
                    if sum.valid_for(self.n) && !self.contains(sum) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Smallest closed superset.
    pub fn closure(&self) -> RootSet {
        let mut s = *self;
        loop {
            let mut grew = false;
            let roots: Vec<Root> = s.iter().collect();
            for &a in &roots {
                for &b in &roots {
                    if let Some(c) = add_roots(a, b) {
                        if c.valid_for(s.n) && !s.contains(c) {
                            s.insert(c);
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                return s;
            }
        }
    }

    pub fn parse(n: u8, text: &str) -> Result<RootSet> {
        let mut s = RootSet::empty(n);
        for tok in text.split(',') {
            if tok.trim().is_empty() {
                continue;
            }
            let r = Root::parse(tok)?;
            if !r.valid_for(n) {
                return Err(Error::Invalid(format!("root {r} out of range for n = {n}")));
            }
            s.insert(r);
        }
        Ok(s)
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// arm(alpha_{i,j}) = { alpha_{i,k} : i <= k < j }, the roots to the left on
/// the same row.  Empty for simple roots.
pub fn arm(a: Root, n: u8) -> RootSet {
    RootSet::from_roots(n, (a.i..a.j).map(|k| Root::of(a.i, k)))
}

/// leg(alpha_{i,j}) = { alpha_{k,j} : i < k <= j }, the roots below on the
/// same column.
pub fn leg(a: Root, n: u8) -> RootSet {
    RootSet::from_roots(n, (a.i + 1..=a.j).map(|k| Root::of(k, a.j)))
}

/// hook = arm + leg + the root itself.
pub fn hook(a: Root, n: u8) -> RootSet {
    let mut h = arm(a, n).union(&leg(a, n));
    h.insert(a);
    h
}
