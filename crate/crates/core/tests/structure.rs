//! Structural identities of the reduction: kernel containment, the value of
//! the induced character on the base subgroup, the tensor factorization, and
//! the regular-character specialization.

use std::sync::Arc;

use superpattern::basicset::{enumerate_basic_sets, k_pattern, v_pattern, BasicSet};
use superpattern::charfn::{ClassFunction, LinearChar};
use superpattern::roots::{Root, RootSet};
use superpattern::scalars::{ambient_order, CycloValue, FqCtx, Rat};
use superpattern::superdecomp::{lambda_d, reduce};
use superpattern::tables::{character_table, decompose, Budgets};
use superpattern::unigroup::{normal_form, EnumeratedGroup, PatternGroup, UniCtx};

fn vr_group(
    fq: &Arc<FqCtx>,
    d: &BasicSet,
) -> (UniCtx, Arc<EnumeratedGroup>, RootSet, RootSet) {
    let ctx = UniCtx::new(fq.clone(), d.n);
    let red = reduce(d, &vec![1; d.k()]).unwrap();
    let v = v_pattern(d);
    let vr = v.union(&red.r_support);
    let g = EnumeratedGroup::pattern(&ctx, &PatternGroup::new(vr).unwrap(), 1 << 20).unwrap();
    (ctx, g, v, red.r_support)
}

#[test]
fn kernel_and_base_value_of_the_reduced_induction() {
    // K_D lies in the kernel of lambda_D induced to V_D R_D, and on V_D the
    // induced function is [V_D R_D : V_D] * lambda_D
    for q in [2u32, 3] {
        let fq = Arc::new(FqCtx::for_order(q).unwrap());
        for d in enumerate_basic_sets(4) {
            let (ctx, vr, v, _) = vr_group(&fq, &d);
            let m = ambient_order(q, 4);
            let lam = lambda_d(&d, &vec![1; d.k()]).unwrap();
            let ind = ClassFunction::induce_linear(&lam, &vr, m).unwrap();
            let index = (vr.order() / (q as usize).pow(v.len() as u32)) as i128;
            // value at every K_D root element equals the degree
            for r in k_pattern(&d).iter() {
                for c in fq.nonzero() {
                    let g = superpattern::unigroup::UniMatrix::root_element(&ctx, r, c);
                    assert_eq!(
                        ind.value_at(&g).unwrap(),
                        &ind.degree(),
                        "K_D not in the kernel for D = {d}"
                    );
                }
            }
            // on V_D: induced = [VR : V] * lambda
            let vgrp =
                EnumeratedGroup::pattern(&ctx, &PatternGroup::new(v).unwrap(), 1 << 20).unwrap();
            for el in vgrp.elements.iter().step_by((vgrp.order() / 16).max(1)) {
                let lhs = ind.value_at(el).unwrap().clone();
                let rhs = lam
                    .value(&ctx, el, m)
                    .scale(&Rat::from_integer(index));
                assert_eq!(lhs, rhs, "wrong induced value on V_D for D = {d}");
            }
            // induced values lie in Z[zeta_p]
            assert!(ind.values_in_order(q_p(q)), "values escape Z[zeta_p] for D = {d}");
        }
    }
}

fn q_p(q: u32) -> u32 {
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    p
}

#[test]
fn tensor_factorization_of_the_reduction() {
    // lambda_D^{V_D R_D} = Lambda'' (x) Ind_{V_D}(lambda'), where lambda'
    // carries the coefficient roots inside R_D, lambda'' the others, and
    // Lambda'' extends lambda'' through the V-part of the normal form.
    let fq = Arc::new(FqCtx::for_order(2).unwrap());
    for d in enumerate_basic_sets(4).into_iter().chain(enumerate_basic_sets(5)) {
        let (ctx, vr, v, gamma) = vr_group(&fq, &d);
        if vr.order() > 1 << 12 {
            continue;
        }
        let m = ambient_order(2, d.n as u32);
        let full = lambda_d(&d, &vec![1; d.k()]).unwrap();
        let inside: Vec<(Root, u8)> =
            full.coeffs.iter().copied().filter(|(r, _)| gamma.contains(*r)).collect();
        let outside: Vec<(Root, u8)> =
            full.coeffs.iter().copied().filter(|(r, _)| !gamma.contains(*r)).collect();
        let lam_in = LinearChar::new(v, RootSet::empty(d.n), inside).unwrap();
        let lam_out = LinearChar::new(v, RootSet::empty(d.n), outside).unwrap();
        // Lambda'': evaluate lambda'' on the V-part of x = w * v
        let ext_out = |x: &superpattern::unigroup::UniMatrix| -> CycloValue {
            let w = normal_form(&ctx, x, &v);
            let vpart = w.inv(&ctx).mul(&ctx, x);
            lam_out.value(&ctx, &vpart, m)
        };
        // multiplicativity of the extension
        for (i, a) in vr.elements.iter().enumerate().step_by(7) {
            let b = &vr.elements[(i * 13 + 5) % vr.order()];
            assert_eq!(
                ext_out(&a.mul(&ctx, b)),
                ext_out(a).mul(&ext_out(b)).unwrap(),
                "extension not multiplicative for D = {d}"
            );
        }
        let lhs = ClassFunction::induce_linear(&full, &vr, m).unwrap();
        let ind_in = ClassFunction::induce_linear(&lam_in, &vr, m).unwrap();
        for c in 0..vr.class_count() {
            let rep = vr.class_rep(c);
            let rhs = ext_out(rep).mul(&ind_in.values[c]).unwrap();
            assert_eq!(lhs.values[c], rhs, "tensor factorization fails for D = {d}");
        }
    }
}

#[test]
fn trivial_intersection_gives_the_regular_character() {
    // D = {a12, a23} in U_4: V cap R = 1, so the reduced induction is
    // equivalent to the regular character of R_D
    let fq = Arc::new(FqCtx::for_order(2).unwrap());
    let d = BasicSet::parse(4, "1-2,2-3").unwrap();
    let (ctx, vr, _, gamma) = vr_group(&fq, &d);
    let m = ambient_order(2, 4);
    let lam = lambda_d(&d, &[1; 2]).unwrap();
    let ind = ClassFunction::induce_linear(&lam, &vr, m).unwrap();
    let r_grp = EnumeratedGroup::pattern(&ctx, &PatternGroup::new(gamma).unwrap(), 1 << 20).unwrap();
    let table = character_table(&r_grp, &Budgets::default()).unwrap();
    let reg = ClassFunction::regular(&r_grp, table.m);
    let dec_reg = decompose(&reg, &table).unwrap();
    // restricted to R_D, the induced character has the same decomposition
    let restricted = ind.restrict_to(&r_grp).unwrap();
    let dec_res = decompose(&restricted, &table).unwrap();
    assert_eq!(dec_reg, dec_res);
    // regular character: every irreducible with multiplicity its degree
    for (i, mult) in dec_reg {
        assert_eq!(mult as i128, table.irreducibles[i].degree_int().unwrap());
    }
}

#[test]
fn golden_table_u3_2() {
    let fq = Arc::new(FqCtx::for_order(2).unwrap());
    let ctx = UniCtx::new(fq, 3);
    let g = EnumeratedGroup::pattern(&ctx, &PatternGroup::full(3), 1 << 20).unwrap();
    let t = character_table(&g, &Budgets::default()).unwrap();
    let got = serde_json::to_string_pretty(&t.to_json()).unwrap();
    let golden = include_str!("golden/u3_2_table.json");
    assert_eq!(got.trim(), golden.trim(), "golden table drifted");
}
