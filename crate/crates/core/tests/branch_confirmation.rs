//! Group-level confirmation of the corrected final-case branch counts in the
//! rank-12 sample, independent of the inertia machinery: the constituents
//! are exhibited as explicit induced class functions on fully enumerated
//! quotients, their irreducibility is a Frobenius norm computation, and the
//! central-character mass identity sum chi(1)^2 = [G : Z] pins the count.
//!
//! The two single-nonzero-value branches behave differently:
//!
//! * keeping the boundary root 1-2 leaves a 7-path of interacting roots;
//!   over a fixed central character there are exactly two constituents of
//!   degree q^3;
//! * keeping the middle root 2-3 leaves a 2-path and a 6-path; over a fixed
//!   central character there is exactly one constituent, of degree q^4, so
//!   the branch contributes no degree-q^3 constituents at all.

use std::sync::Arc;

use superpattern::charfn::{ClassFunction, LinearChar};
use superpattern::roots::{Root, RootSet};
use superpattern::scalars::{FqCtx, Rat};
use superpattern::u13;
use superpattern::unigroup::{EnumeratedGroup, PatternGroup, UniMatrix};

const BULLETS: &str = "1-5,1-6,1-7,1-8,2-6,2-7,2-8,5-7,5-8,6-8";
const STARS: &str = "1-4,2-5,5-6,6-7,7-8";

fn setup(extra_dead: &str) -> (Arc<FqCtx>, u13::Sample2, RootSet) {
    let fq = Arc::new(FqCtx::for_order(2).unwrap());
    let s = u13::sample2_problem(&fq).unwrap();
    let mut dead = RootSet::parse(9, BULLETS).unwrap();
    for r in RootSet::parse(9, "1-3,3-8").unwrap().iter() {
        dead.insert(r);
    }
    for r in RootSet::parse(9, extra_dead).unwrap().iter() {
        dead.insert(r);
    }
    (fq, s, dead)
}

fn quotient(s: &u13::Sample2, dead: &RootSet) -> Arc<EnumeratedGroup> {
    EnumeratedGroup::quotient(&s.ctx, &PatternGroup::new(s.r_support).unwrap(), dead, 1 << 20)
        .unwrap()
}

fn induce_theta(
    grp: &Arc<EnumeratedGroup>,
    dead: &RootSet,
    subgroup: &str,
    coeffs: &str,
) -> ClassFunction {
    let sup = RootSet::parse(9, subgroup).unwrap();
    let coeff_roots: Vec<(Root, u8)> =
        RootSet::parse(9, coeffs).unwrap().iter().map(|r| (r, 1)).collect();
    let lin = LinearChar::new(sup, *dead, coeff_roots).unwrap();
    ClassFunction::induce_linear(&lin, grp, 2).unwrap()
}

/// Central roots of the quotient, by the alive-sum scan.
fn central_count(s: &u13::Sample2, dead: &RootSet) -> usize {
    let alive = s.r_support.minus(dead);
    alive
        .iter()
        .filter(|&a| {
            alive.iter().all(|b| {
                superpattern::roots::add_roots(a, b)
                    .is_none_or(|c| !c.valid_for(9) || !alive.contains(c))
            })
        })
        .count()
}

#[test]
fn middle_root_branch_has_a_single_degree_16_constituent() {
    // branch: value nonzero at 2-3, zero at 1-2, 3-7, 4-8; the central
    // character further fixes value 0 at the vertex 4-7, which then dies
    let (_, s, dead) = setup("1-2,3-7,4-8,4-7");
    let alive = s.r_support.minus(&dead);
    assert_eq!(alive.len(), 14);
    // abelian subgroup: stars, the kept root, and an independent set
    let tsup = format!("{STARS},2-3,1-1,2-2,5-5,7-7");
    let grp = quotient(&s, &dead);
    let chi = induce_theta(&grp, &dead, &tsup, &format!("{STARS},2-3"));
    assert_eq!(grp.order(), 1 << 14);
    assert_eq!(chi.degree_int().unwrap(), 16);
    // irreducible, by the exact Frobenius norm over the enumerated quotient
    assert_eq!(chi.norm().unwrap(), Rat::from_integer(1));
    // it lies over the nontrivial character of the kept central root
    let z = UniMatrix::root_element(&grp.ctx, Root::of(2, 3), 1);
    assert_eq!(
        chi.value_at(&z).unwrap().as_rational().unwrap(),
        Rat::from_integer(-16)
    );
    // mass over a fixed central character: [G : Z] = 2^8 = 16^2, so this
    // single constituent exhausts it: the branch has no degree-8
    // constituents over this character at all
    assert_eq!(central_count(&s, &dead), 6);
    assert_eq!(grp.order() >> 6, 16 * 16);
}

#[test]
fn middle_root_branch_other_central_character() {
    // same branch, central character with a nonzero value at the vertex
    // 4-7 (which is central once the three roots die); the group is the
    // full 2^15 branch quotient
    let (_, s, dead) = setup("1-2,3-7,4-8");
    let alive = s.r_support.minus(&dead);
    assert_eq!(alive.len(), 15);
    let tsup = format!("{STARS},2-3,4-7,1-1,2-2,5-5,7-7");
    let grp = quotient(&s, &dead);
    let chi = induce_theta(&grp, &dead, &tsup, &format!("{STARS},2-3,4-7"));
    assert_eq!(grp.order(), 1 << 15);
    assert_eq!(chi.degree_int().unwrap(), 16);
    assert_eq!(chi.norm().unwrap(), Rat::from_integer(1));
    // mass [G : Z] = 2^8 = 16^2 again: one constituent per central
    // character, two characters in the branch, in total (q-1)q = 2
    // constituents of degree q^4 and none of degree q^3
    assert_eq!(central_count(&s, &dead), 7);
    assert_eq!(grp.order() >> 7, 16 * 16);
}

#[test]
fn boundary_root_branch_has_two_degree_8_constituents() {
    // branch: value nonzero at 1-2, zero at 2-3, 3-7, 4-8; the central
    // character fixes value 0 at the two isolated vertices 3-3 and 4-7
    let (_, s, dead) = setup("2-3,3-7,4-8,3-3,4-7");
    let alive = s.r_support.minus(&dead);
    assert_eq!(alive.len(), 13);
    let tsup = format!("{STARS},1-2,2-2,2-4,6-6,8-8");
    // two extensions differing in a free coefficient
    let grp = quotient(&s, &dead);
    let chi1 = induce_theta(&grp, &dead, &tsup, &format!("{STARS},1-2"));
    let chi2 = induce_theta(&grp, &dead, &tsup, &format!("{STARS},1-2,2-2"));
    assert_eq!(grp.order(), 1 << 13);
    assert_eq!(chi1.degree_int().unwrap(), 8);
    assert_eq!(chi2.degree_int().unwrap(), 8);
    assert_eq!(chi1.norm().unwrap(), Rat::from_integer(1));
    assert_eq!(chi2.norm().unwrap(), Rat::from_integer(1));
    // distinct constituents over the same central character
    assert_eq!(chi1.inner(&chi2).unwrap(), Rat::from_integer(0));
    let z = UniMatrix::root_element(&grp.ctx, Root::of(1, 2), 1);
    for chi in [&chi1, &chi2] {
        assert_eq!(
            chi.value_at(&z).unwrap().as_rational().unwrap(),
            Rat::from_integer(-8),
            "lies over the nontrivial character of the kept root"
        );
    }
    // mass: [G : Z] = 2^7 = 2 * 8^2: the two exhibited constituents exhaust
    // the central character, matching the count two of degree q^3 here
    assert_eq!(central_count(&s, &dead), 6);
    assert_eq!(grp.order() >> 6, 2 * 8 * 8);
}

#[test]
fn boundary_root_branch_nonzero_isolated_values() {
    // boundary branch with nonzero values at both isolated vertices: the
    // full 2^15 quotient, still two constituents of degree q^3 per
    // character; over the four characters that is (q-1)q^3 = 8 in total
    let (_, s, dead) = setup("2-3,3-7,4-8");
    let alive = s.r_support.minus(&dead);
    assert_eq!(alive.len(), 15);
    let tsup = format!("{STARS},1-2,3-3,4-7,2-2,2-4,6-6,8-8");
    let grp = quotient(&s, &dead);
    let chi1 = induce_theta(&grp, &dead, &tsup, &format!("{STARS},1-2,3-3,4-7"));
    let chi2 = induce_theta(&grp, &dead, &tsup, &format!("{STARS},1-2,3-3,4-7,2-2"));
    assert_eq!(grp.order(), 1 << 15);
    for chi in [&chi1, &chi2] {
        assert_eq!(chi.degree_int().unwrap(), 8);
        assert_eq!(chi.norm().unwrap(), Rat::from_integer(1));
    }
    assert_eq!(chi1.inner(&chi2).unwrap(), Rat::from_integer(0));
    // mass [G : Z] = 2^7 = 2 * 8^2 once more
    assert_eq!(central_count(&s, &dead), 8);
    assert_eq!(grp.order() >> 8, 2 * 8 * 8);
}
