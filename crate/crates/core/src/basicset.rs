//! Basic sets and their derived combinatorial data.
//!
//! A basic set is a nonempty set of positive roots with pairwise distinct
//! rows and columns.  Sorted by column it is D = {tau_1 < ... < tau_k}; the
//! monomial matrix w_D records the row order against the column order, and
//! for each pair i < j exactly one interaction root exists:
//!
//! * gamma_{i,j} on the row of tau_i with gamma + tau_j a root (rows in the
//!   same relative order as columns), or
//! * nu_{i,j} on the row of tau_j with nu + tau_i a root (rows reversed).
//!
//! Gamma_D and Lambda_D collect them; Delta_D is the union and is a copy of
//! the rank k-1 positive system under the pair re-indexing.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{arm, Root, RootSet};

/// A basic set, stored sorted ascending by column (the `<_r` order), so that
/// `roots[i-1]` is tau_i in 1-based indexing.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasicSet {
    pub n: u8,
    roots: Vec<Root>,
}

/// True iff the roots form a basic set for rank n-1: nonempty, in range, no
/// shared row or column.
pub fn validate(n: u8, roots: &[Root]) -> bool {
    if roots.is_empty() || n < 2 {
        return false;
    }
    for (k, a) in roots.iter().enumerate() {
        if !a.valid_for(n) {
            return false;
        }
        for b in &roots[k + 1..] {
            if a.i == b.i || a.j == b.j {
                return false;
            }
        }
    }
    true
}

impl BasicSet {
    pub fn new(n: u8, mut roots: Vec<Root>) -> Result<BasicSet> {
        if !validate(n, &roots) {
            return Err(Error::Invalid(format!(
                "not a basic set for n = {n}: {roots:?}"
            )));
        }
        roots.sort_by_key(|r| r.j);
        Ok(BasicSet { n, roots })
    }

    pub fn parse(n: u8, text: &str) -> Result<BasicSet> {
        let roots: Result<Vec<Root>> = text.split(',').map(Root::parse).collect();
        BasicSet::new(n, roots?)
    }

    pub fn k(&self) -> usize {
        self.roots.len()
    }

    /// tau_i, 1-based, in ascending column order.
    pub fn tau(&self, i: usize) -> Root {
        self.roots[i - 1]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root_set(&self) -> RootSet {
        RootSet::from_roots(self.n, self.roots.iter().copied())
    }

    pub fn contains(&self, r: Root) -> bool {
        self.roots.contains(&r)
    }

    /// Rank of tau_i (1-based) in the ascending row order.
    pub fn row_rank(&self, i: usize) -> usize {
        let row = self.tau(i).i;
        1 + self.roots.iter().filter(|t| t.i < row).count()
    }
}

impl fmt::Display for BasicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in &self.roots {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for BasicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{{{self}}}")
    }
}

/// A k x k permutation matrix; `perm[j]` is the (0-based) row of the 1 in
/// column j.  Products compose left-to-right: (a * b) applies a first.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MonomialPerm {
    pub k: usize,
    perm: Vec<u8>,
}

impl MonomialPerm {
    pub fn new(perm: Vec<u8>) -> Result<MonomialPerm> {
        let k = perm.len();
        let mut seen = vec![false; k];
        for &p in &perm {
            if p as usize >= k || seen[p as usize] {
                return Err(Error::Invalid("not a permutation".into()));
            }
            seen[p as usize] = true;
        }
        Ok(MonomialPerm { k, perm })
    }

    pub fn identity(k: usize) -> MonomialPerm {
        MonomialPerm { k, perm: (0..k as u8).collect() }
    }

    /// The longest element: the antidiagonal matrix.
    pub fn w0(k: usize) -> MonomialPerm {
        MonomialPerm { k, perm: (0..k as u8).rev().collect() }
    }

    /// Row of the 1 in column j (0-based).
    pub fn row_of(&self, j: usize) -> usize {
        self.perm[j] as usize
    }

    pub fn inverse(&self) -> MonomialPerm {
        let mut inv = vec![0u8; self.k];
        for (j, &i) in self.perm.iter().enumerate() {
            inv[i as usize] = j as u8;
        }
        MonomialPerm { k: self.k, perm: inv }
    }

    /// Left-to-right composition: (a.compose(b))(j) = b(a(j)).
    pub fn compose(&self, other: &MonomialPerm) -> MonomialPerm {
        assert_eq!(self.k, other.k);
        MonomialPerm {
            k: self.k,
            perm: (0..self.k).map(|j| other.perm[self.perm[j] as usize]).collect(),
        }
    }

    /// 0/1 matrix rows.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.k]; self.k];
        for (j, &i) in self.perm.iter().enumerate() {
            m[i as usize][j] = 1;
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &i)| i as usize == j)
    }
}

impl std::ops::Mul for &MonomialPerm {
    type Output = MonomialPerm;
    fn mul(self, rhs: &MonomialPerm) -> MonomialPerm {
        self.compose(rhs)
    }
}

/// w_D: entry (i, j) is 1 iff tau_j (column order) is the i-th element of D
/// in the ascending row order.
pub fn w_matrix(d: &BasicSet) -> MonomialPerm {
    let k = d.k();
    let perm = (1..=k).map(|j| (d.row_rank(j) - 1) as u8).collect();
    MonomialPerm { k, perm }
}

/// Derived interaction data of a basic set.
#[derive(Clone, Debug)]
pub struct DerivedSets {
    pub n: u8,
    pub k: usize,
    /// gamma_{i,j} keyed by 1-based column-order pairs i < j.
    pub gamma: BTreeMap<(usize, usize), Root>,
    /// nu_{i,j} keyed likewise.
    pub nu: BTreeMap<(usize, usize), Root>,
    /// Rows of D sorted ascending: row of theta_a for 1-based a.
    pub rows_sorted: Vec<u8>,
}

impl DerivedSets {
    pub fn gamma_set(&self) -> RootSet {
        RootSet::from_roots(self.n, self.gamma.values().copied())
    }

    pub fn nu_set(&self) -> RootSet {
        RootSet::from_roots(self.n, self.nu.values().copied())
    }

    pub fn delta_set(&self) -> RootSet {
        self.gamma_set().union(&self.nu_set())
    }

    /// The root omega_{a,b} on the row of theta_a composing into theta_b's
    /// row, for 1-based a < b in the row order.  Every Delta_D member arises
    /// exactly once this way.
    pub fn omega(&self, a: usize, b: usize) -> Root {
        Root::of(self.rows_sorted[a - 1], self.rows_sorted[b - 1] - 1)
    }

    /// Re-indexing Delta_D -> positive roots of rank k-1: omega_{a,b} maps to
    /// alpha_{a,b-1}.
    pub fn reindex_map(&self) -> BTreeMap<Root, Root> {
        let mut map = BTreeMap::new();
        for a in 1..=self.k {
            for b in a + 1..=self.k {
                map.insert(self.omega(a, b), Root::of(a as u8, b as u8 - 1));
            }
        }
        map
    }

    /// Gamma_D seen inside the rank k-1 system under the re-indexing.
    pub fn gamma_reindexed(&self) -> RootSet {
        let map = self.reindex_map();
        RootSet::from_roots(self.k as u8, self.gamma.values().map(|g| map[g]))
    }

    pub fn nu_reindexed(&self) -> RootSet {
        let map = self.reindex_map();
        RootSet::from_roots(self.k as u8, self.nu.values().map(|g| map[g]))
    }
}

/// Computes gamma/nu for every pair i < j in column order.
pub fn derived_sets(d: &BasicSet) -> DerivedSets {
    let k = d.k();
    let mut gamma = BTreeMap::new();
    let mut nu = BTreeMap::new();
    for i in 1..=k {
        for j in i + 1..=k {
            let (ti, tj) = (d.tau(i), d.tau(j));
            if ti.i < tj.i {
                // row of tau_i, composing into tau_j: alpha_{row_i, row_j - 1}
                let g = Root::of(ti.i, tj.i - 1);
                debug_assert!(crate::roots::add_roots(g, tj).is_some());
                gamma.insert((i, j), g);
            } else {
                let v = Root::of(tj.i, ti.i - 1);
                debug_assert!(crate::roots::add_roots(v, ti).is_some());
                nu.insert((i, j), v);
            }
        }
    }
    let mut rows_sorted: Vec<u8> = d.roots().iter().map(|r| r.i).collect();
    rows_sorted.sort_unstable();
    DerivedSets { n: d.n, k, gamma, nu, rows_sorted }
}

/// Support of V_D: all positive roots minus the arms of D.
pub fn v_pattern(d: &BasicSet) -> RootSet {
    let mut s = RootSet::full(d.n);
    for &t in d.roots() {
        s = s.minus(&arm(t, d.n));
    }
    s
}

/// Support of K_D: V_D minus D itself.
pub fn k_pattern(d: &BasicSet) -> RootSet {
    v_pattern(d).minus(&d.root_set())
}

/// D_1 family: {alpha_{1,k}, alpha_{2,2k-1}, alpha_{3,2k-2}, ...,
/// alpha_{k,k+1}, alpha_{k+1,2k}}, for k >= 2 and 2k < n.
pub fn d1_family(k: u8, n: u8) -> Result<BasicSet> {
    if k < 2 || 2 * (k as u32) >= n as u32 {
        return Err(Error::Invalid(format!("d1 family needs k >= 2 and 2k < n, got k={k}, n={n}")));
    }
    let mut roots = vec![Root::of(1, k)];
    for r in 2..=k {
        roots.push(Root::of(r, 2 * k + 1 - r));
    }
    roots.push(Root::of(k + 1, 2 * k));
    BasicSet::new(n, roots)
}

/// D_2 family: {alpha_{1,2}, alpha_{2,3}, ..., alpha_{2m-1,2m}}, m >= 1,
/// 2m < n.
pub fn d2_family(m: u8, n: u8) -> Result<BasicSet> {
    if m < 1 || 2 * (m as u32) >= n as u32 {
        return Err(Error::Invalid(format!("d2 family needs m >= 1 and 2m < n, got m={m}, n={n}")));
    }
    BasicSet::new(n, (1..=2 * m - 1).map(|i| Root::of(i, i + 1)).collect())
}

/// All basic sets for rank n-1 (exponential in n; intended for small n).
pub fn enumerate_basic_sets(n: u8) -> Vec<BasicSet> {
    let all = crate::roots::all_roots(n);
    let mut out = Vec::new();
    let mut current: Vec<Root> = Vec::new();
    fn rec(all: &[Root], from: usize, current: &mut Vec<Root>, n: u8, out: &mut Vec<BasicSet>) {
        for idx in from..all.len() {
            let r = all[idx];
            if current.iter().any(|c| c.i == r.i || c.j == r.j) {
                continue;
            }
            current.push(r);
            out.push(BasicSet::new(n, current.clone()).unwrap());
            rec(all, idx + 1, current, n, out);
            current.pop();
        }
    }
    rec(&all, 0, &mut current, n, &mut out);
    out.sort_by(|a, b| (a.k(), a.roots()).cmp(&(b.k(), b.roots())));
    out
}

/// All nonzero scalar assignments phi in E(D): one s in F_q^x per tau.
pub fn enumerate_phis(k: usize, q: u32) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * (q as usize - 1));
        for prefix in &out {
            for s in 1..q as u8 {
                let mut v = prefix.clone();
                v.push(s);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::roots::{cmp_b, cmp_r};

    #[test]
    fn validation() {
        assert!(validate(4, &[Root::of(1, 2), Root::of(2, 3)]));
        assert!(!validate(4, &[Root::of(1, 2), Root::of(1, 3)]));
        assert!(!validate(4, &[]));
        // the U_13 sample set
        let d = sample13();
        assert_eq!(d.k(), 9);
    }

    pub(crate) fn sample13() -> BasicSet {
        BasicSet::parse(13, "1-4,2-5,5-6,6-7,7-8,3-9,4-10,8-11,9-12").unwrap()
    }

    #[test]
    fn tau_order_is_total_on_basic_sets() {
        let d = sample13();
        for i in 1..=d.k() {
            for j in i + 1..=d.k() {
                assert!(cmp_r(d.tau(i), d.tau(j)).is_some());
                assert!(cmp_b(d.tau(i), d.tau(j)).is_some());
            }
        }
    }

    #[test]
    fn w_matrix_examples() {
        // D = {a23, a14, a35}: printed 3x3 monomial matrix
        let d = BasicSet::parse(6, "2-3,1-4,3-5").unwrap();
        let w = w_matrix(&d);
        assert_eq!(w.matrix(), vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        // D_2 gives the identity
        let d2 = d2_family(2, 6).unwrap();
        assert!(w_matrix(&d2).is_identity());
        // the 9x9 sample
        let w13 = w_matrix(&sample13());
        let expect_rows: [usize; 9] = [1, 2, 5, 6, 7, 3, 4, 8, 9]; // row of the 1 per column
        for (j, &i) in expect_rows.iter().enumerate() {
            assert_eq!(w13.row_of(j), i - 1);
        }
    }

    #[test]
    fn derived_sets_example_n7() {
        let d = BasicSet::parse(7, "1-2,3-4,4-5,2-6").unwrap();
        let ds = derived_sets(&d);
        assert_eq!(
            ds.gamma_set(),
            RootSet::parse(7, "1-1,1-2,1-3,3-3").unwrap()
        );
        assert_eq!(ds.nu_set(), RootSet::parse(7, "2-2,2-3").unwrap());
        // single root: no pairs
        let single = BasicSet::parse(3, "1-2").unwrap();
        let ds1 = derived_sets(&single);
        assert!(ds1.gamma_set().is_empty() && ds1.nu_set().is_empty());
    }

    #[test]
    fn derived_sets_row_formula() {
        // tau_i = alpha_{m,i'}, tau_j = alpha_{l,j'}, m < l -> gamma = alpha_{m,l-1}
        let d = BasicSet::parse(8, "2-3,5-6").unwrap();
        let ds = derived_sets(&d);
        assert_eq!(ds.gamma[&(1, 2)], Root::of(2, 4));
    }

    #[test]
    fn pattern_supports() {
        let d = BasicSet::parse(2, "1-1").unwrap();
        assert_eq!(v_pattern(&d), RootSet::parse(2, "1-1").unwrap());
        assert!(k_pattern(&d).is_empty());
        for n in [4u8, 5] {
            for d in enumerate_basic_sets(n) {
                let v = v_pattern(&d);
                let k = k_pattern(&d);
                assert!(v.is_closed(), "V_D not closed for {d:?}");
                assert!(k.is_closed(), "K_D not closed for {d:?}");
                assert_eq!(v.len() - k.len(), d.k());
            }
        }
    }

    #[test]
    fn families() {
        assert_eq!(
            d1_family(2, 5).unwrap(),
            BasicSet::parse(5, "1-2,2-3,3-4").unwrap()
        );
        assert_eq!(d2_family(1, 3).unwrap(), BasicSet::parse(3, "1-2").unwrap());
        assert!(d1_family(2, 4).is_err());
        assert!(d2_family(3, 6).is_err());
        // d1(3,7): central block is the longest element of S_2
        let w = w_matrix(&d1_family(3, 7).unwrap());
        assert_eq!(
            w.matrix(),
            vec![
                vec![1, 0, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 0, 1]
            ]
        );
        // w_D of d2 is the identity of size 2m-1
        assert!(w_matrix(&d2_family(3, 8).unwrap()).is_identity());
    }

    #[test]
    fn basic_set_counts_small() {
        // n = 4: 6 singletons + 7 pairs + 1 triple
        assert_eq!(enumerate_basic_sets(4).len(), 14);
    }
}
