//! ASCII tableau rendering: the staircase of positive roots with a basic set
//! and its derived data marked.
//!
//! Cell markers: `D` a root of the basic set, `*` a root of D inside R_D,
//! `o` an interaction root dying in the reduction (inside K_D), `R` the
//! other row interaction roots (Gamma), `C` the column interaction roots
//! (Lambda), `a`/`l` arm and leg cells, `.` other support.

use crate::basicset::{derived_sets, k_pattern, v_pattern, BasicSet};
use crate::roots::{arm, leg, Root, RootSet};

pub struct TableauMarks {
    pub d: RootSet,
    pub gamma: RootSet,
    pub nu: RootSet,
    pub arms: RootSet,
    pub legs: RootSet,
    /// Gamma roots inside K_D: the part of R_D dying in the reduction.
    pub bullets: RootSet,
}

pub fn marks_for(d: &BasicSet) -> TableauMarks {
    let n = d.n;
    let ds = derived_sets(d);
    let mut arms = RootSet::empty(n);
    let mut legs = RootSet::empty(n);
    for &t in d.roots() {
        arms = arms.union(&arm(t, n));
        legs = legs.union(&leg(t, n));
    }
    let gamma = ds.gamma_set();
    TableauMarks {
        d: d.root_set(),
        bullets: gamma.inter(&k_pattern(d)),
        gamma,
        nu: ds.nu_set(),
        arms,
        legs,
    }
}

/// Renders the full staircase for rank n-1 with the given marks.
pub fn tableau(d: &BasicSet) -> String {
    let n = d.n;
    let m = marks_for(d);
    let mut out = String::new();
    let cell = |r: Root| -> char {
        if m.d.contains(r) {
            if m.gamma.contains(r) {
                '*'
            } else {
                'D'
            }
        } else if m.bullets.contains(r) {
            'o'
        } else if m.gamma.contains(r) {
            'R'
        } else if m.nu.contains(r) {
            'C'
        } else if m.arms.contains(r) {
            'a'
        } else if m.legs.contains(r) {
            'l'
        } else {
            '.'
        }
    };
    out.push_str("    ");
    for j in 1..n {
        out.push_str(&format!("{j:>2}"));
    }
    out.push('\n');
    for i in 1..n {
        out.push_str(&format!("{i:>3} "));
        for j in 1..n {
            if j < i {
                out.push_str("  ");
            } else {
                out.push(' ');
                out.push(cell(Root::of(i, j)));
            }
        }
        out.push('\n');
    }
    let v = v_pattern(d);
    out.push_str(&format!(
        "D = {d}   |V_D| = q^{}   |R_D| = q^{}   |C_D| = q^{}\n",
        v.len(),
        m.gamma.len(),
        m.nu.len()
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_the_small_example() {
        let d = BasicSet::parse(6, "2-3,1-4,3-5").unwrap();
        let t = tableau(&d);
        // the three cells of D are marked in the grid (legend line excluded)
        let grid: String = t.lines().filter(|l| !l.contains('=')).collect();
        assert_eq!(grid.matches('D').count() + grid.matches('*').count(), 3);
        assert!(t.contains("|R_D| = q^"));
    }

    #[test]
    fn single_cell() {
        let d = BasicSet::parse(2, "1-1").unwrap();
        let t = tableau(&d);
        assert!(t.lines().count() >= 3);
    }

    #[test]
    fn sample13_counts() {
        let d = crate::basicset::tests::sample13();
        let m = marks_for(&d);
        assert_eq!(m.gamma.len(), 30);
        // 5 stars and 10 bullets among the 30 cells
        assert_eq!(m.d.inter(&m.gamma).len(), 5);
        assert_eq!(m.bullets.len(), 10);
        let t = tableau(&d);
        let grid: String = t.lines().filter(|l| !l.contains('=')).collect();
        assert_eq!(grid.matches('*').count(), 5);
        assert_eq!(grid.matches('o').count(), 10);
        assert_eq!(grid.matches('R').count(), 15);
    }
}
