//! Exact class-function algebra over enumerated groups: linear characters of
//! pattern subgroups, induction, restriction, tensor, conjugation and inner
//! products, all in the cyclotomic value ring.

use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::roots::{add_roots, Root, RootSet};
use crate::scalars::{additive_char_at, CycloValue, Rat};
use crate::unigroup::{EnumeratedGroup, GroupKind, UniCtx, UniMatrix};

/// A linear character of a pattern subgroup (possibly of a quotient),
/// realized as root-coefficient data: the value at g is
/// phi(sum_a s_a * g[a]).
///
/// Construction enforces the structural condition making this a
/// homomorphism: no coefficient root is a composable sum of two roots of the
/// domain's full support (alive or dead), so products and collection never
/// feed a coefficient position.
#[derive(Clone, Debug)]
pub struct LinearChar {
    /// Alive support of the domain subgroup.
    pub domain: RootSet,
    /// Killed pattern of the ambient quotient (empty for plain groups).
    pub dead: RootSet,
    /// Coefficient per root; roots not listed act trivially.
    pub coeffs: Vec<(Root, u8)>,
}

impl LinearChar {
    pub fn new(domain: RootSet, dead: RootSet, coeffs: Vec<(Root, u8)>) -> Result<LinearChar> {
        let full = domain.union(&dead);
        for &(r, s) in &coeffs {
            if s == 0 {
                return Err(Error::Invalid(format!("zero coefficient at {r}")));
            }
            if !domain.contains(r) {
                return Err(Error::Invalid(format!("coefficient root {r} outside domain")));
            }
        }
        for a in full.iter() {
            for b in full.iter() {
                if let Some(c) = add_roots(a, b) {
                    if c.valid_for(full.n) && coeffs.iter().any(|&(r, _)| r == c) {
                        return Err(Error::Invalid(format!(
                            "coefficient root {c} = {a} + {b} breaks multiplicativity"
                        )));
                    }
                }
            }
        }
        Ok(LinearChar { domain, dead, coeffs })
    }

    /// Domain order as q^e.
    pub fn domain_exp(&self) -> u32 {
        self.domain.len() as u32
    }

    pub fn contains(&self, ctx: &UniCtx, g: &UniMatrix) -> bool {
        g.support(ctx).is_subset(&self.domain)
    }

    /// The coefficient-sum in F_q; g must be a canonical representative.
    pub fn eval_scalar(&self, ctx: &UniCtx, g: &UniMatrix) -> u8 {
        let mut acc = 0u8;
        for &(r, s) in &self.coeffs {
            let e = g.get(ctx, r);
            if e != 0 {
                acc = ctx.fq.add(acc, ctx.fq.mul(s, e));
            }
        }
        acc
    }

    /// Value at a canonical representative, at cyclotomic order m (p | m).
    pub fn value(&self, ctx: &UniCtx, g: &UniMatrix, m: u32) -> CycloValue {
        additive_char_at(&ctx.fq, self.eval_scalar(ctx, g), m)
    }

    pub fn is_trivial_on_root(&self, r: Root) -> bool {
        self.coeffs.iter().all(|&(c, _)| c != r)
    }
}

/// A class function stored on class representatives of an enumerated group.
#[derive(Clone)]
pub struct ClassFunction {
    pub group: Arc<EnumeratedGroup>,
    pub values: Vec<CycloValue>,
    pub m: u32,
}

impl ClassFunction {
    pub fn trivial(group: &Arc<EnumeratedGroup>, m: u32) -> ClassFunction {
        ClassFunction {
            group: group.clone(),
            values: vec![CycloValue::one(m); group.class_count()],
            m,
        }
    }

    /// Regular character: |G| at the identity, 0 elsewhere.
    pub fn regular(group: &Arc<EnumeratedGroup>, m: u32) -> ClassFunction {
        let mut values = vec![CycloValue::zero(m); group.class_count()];
        values[0] = CycloValue::from_int(group.order() as i128, m);
        ClassFunction { group: group.clone(), values, m }
    }

    /// Evaluates a linear character on the group it is defined on.
    pub fn from_linear(
        lin: &LinearChar,
        group: &Arc<EnumeratedGroup>,
        m: u32,
    ) -> Result<ClassFunction> {
        let ctx = &group.ctx;
        let values = (0..group.class_count())
            .map(|c| lin.value(ctx, group.class_rep(c), m))
            .collect();
        Ok(ClassFunction { group: group.clone(), values, m })
    }

    pub fn degree(&self) -> CycloValue {
        // identity is element 0, class 0 by construction
        debug_assert!(self.group.class_rep(0).is_identity());
        self.values[0].clone()
    }

    pub fn degree_int(&self) -> Result<i128> {
        self.degree()
            .as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
            .ok_or_else(|| Error::Inconsistency("non-integer degree".into()))
    }

    pub fn value_at(&self, g: &UniMatrix) -> Result<&CycloValue> {
        let c = self
            .group
            .class_of(g)
            .ok_or_else(|| Error::Invalid("element outside the group".into()))?;
        Ok(&self.values[c as usize])
    }

    fn check_same_group(&self, other: &ClassFunction) -> Result<()> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(Error::Invalid("class functions on different groups".into()));
        }
        Ok(())
    }

    /// Re-expresses all values at cyclotomic order m2 (current order must
    /// divide m2).
    pub fn embed_to(&self, m2: u32) -> Result<ClassFunction> {
        if m2 == self.m {
            return Ok(self.clone());
        }
        let values: Result<Vec<_>> = self.values.iter().map(|v| v.embed(m2)).collect();
        Ok(ClassFunction { group: self.group.clone(), values: values?, m: m2 })
    }

    /// Embeds both functions into the lcm of their orders.
    fn unify(&self, other: &ClassFunction) -> Result<(ClassFunction, ClassFunction)> {
        self.check_same_group(other)?;
        let m = num_integer::lcm(self.m, other.m);
        Ok((self.embed_to(m)?, other.embed_to(m)?))
    }

    /// (1/|G|) sum over classes of size * chi(rep) * conj(psi(rep)); exact.
    pub fn inner(&self, other: &ClassFunction) -> Result<Rat> {
        let (a, b) = self.unify(other)?;
        let mut acc = CycloValue::zero(a.m);
        for (c, cl) in self.group.classes.iter().enumerate() {
            let term = a.values[c].mul(&b.values[c].conj())?;
            acc = acc.add(&term.scale(&Rat::from_integer(cl.size as i128)))?;
        }
        let val = acc.scale(&Rat::new(1, self.group.order() as i128));
        val.as_rational()
            .ok_or_else(|| Error::Inconsistency(format!("non-rational inner product {val}")))
    }

    pub fn norm(&self) -> Result<Rat> {
        self.inner(self)
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        let (x, y) = self.unify(other)?;
        let values: Result<Vec<_>> =
            x.values.iter().zip(&y.values).map(|(a, b)| a.add(b)).collect();
        Ok(ClassFunction { group: self.group.clone(), values: values?, m: x.m })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        let (x, y) = self.unify(other)?;
        let values: Result<Vec<_>> =
            x.values.iter().zip(&y.values).map(|(a, b)| a.sub(b)).collect();
        Ok(ClassFunction { group: self.group.clone(), values: values?, m: x.m })
    }

    pub fn scale_int(&self, c: i128) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(&Rat::from_integer(c))).collect(),
            m: self.m,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Pointwise product (character of the tensor product).
    pub fn tensor(&self, other: &ClassFunction) -> Result<ClassFunction> {
        let (x, y) = self.unify(other)?;
        let values: Result<Vec<_>> =
            x.values.iter().zip(&y.values).map(|(a, b)| a.mul(b)).collect();
        Ok(ClassFunction { group: self.group.clone(), values: values?, m: x.m })
    }

    /// Complex conjugate character.
    pub fn conjugate_values(&self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.conj()).collect(),
            m: self.m,
        }
    }

    /// ^g chi, with the convention (^g chi)(x) = chi(g x g^{-1}).
    pub fn conj_by(&self, g: &UniMatrix) -> Result<ClassFunction> {
        let grp = &self.group;
        let values: Result<Vec<_>> = (0..grp.class_count())
            .map(|c| {
                let x = grp.class_rep(c);
                let gxginv = grp.mulg(&grp.mulg(g, x), &grp.invg(g));
                let cc = grp
                    .class_of(&gxginv)
                    .ok_or_else(|| Error::Invalid("conjugate leaves the group".into()))?;
                Ok(self.values[cc as usize].clone())
            })
            .collect();
        Ok(ClassFunction { group: grp.clone(), values: values?, m: self.m })
    }

    /// Standard induced class function from a subgroup to `big`:
    /// (chi^G)(g) = (1/|H|) sum_{x in G, x g x^{-1} in H} chi(x g x^{-1}).
    pub fn induce_to(&self, big: &Arc<EnumeratedGroup>) -> Result<ClassFunction> {
        let small = &self.group;
        if small.order() > big.order() || big.kind != small.kind {
            return Err(Error::Invalid("induction requires a subgroup of the big group".into()));
        }
        // (chi^G)(g) = (1/|H|) sum_{x in G, x g x^{-1} in H} chi(x g x^{-1});
        // as x runs over G the conjugates cover the class of g exactly
        // |C_G(g)| times each, so the sum collapses to the class members
        // lying in H.
        let members = big.class_members();
        let values: Result<Vec<_>> = (0..big.class_count())
            .into_par_iter()
            .map(|c| {
                let mut acc = CycloValue::zero(self.m);
                for &yi in &members[c] {
                    let y = &big.elements[yi as usize];
                    if let Some(i) = small.index_of(y) {
                        acc = acc.add(&self.values[small.class_of_index(i) as usize])?;
                    }
                }
                let centralizer = big.order() as i128 / big.classes[c].size as i128;
                Ok(acc.scale(&Rat::new(centralizer, small.order() as i128)))
            })
            .collect();
        Ok(ClassFunction { group: big.clone(), values: values?, m: self.m })
    }

    /// Fast-path induction of a linear character of a pattern subgroup; the
    /// subgroup is never enumerated.
    pub fn induce_linear(
        lin: &LinearChar,
        big: &Arc<EnumeratedGroup>,
        m: u32,
    ) -> Result<ClassFunction> {
        let ctx = &big.ctx;
        match &big.kind {
            GroupKind::Plain => {
                if !lin.dead.is_empty() {
                    return Err(Error::Invalid("quotient character on a plain group".into()));
                }
            }
            GroupKind::Quotient { dead } => {
                if *dead != lin.dead {
                    return Err(Error::Invalid("quotient contexts differ".into()));
                }
            }
        }
        let h_order = (ctx.q() as i128).pow(lin.domain_exp());
        let members = big.class_members();
        let values: Result<Vec<_>> = (0..big.class_count())
            .into_par_iter()
            .map(|c| {
                let mut acc = CycloValue::zero(m);
                for &yi in &members[c] {
                    let y = &big.elements[yi as usize];
                    if lin.contains(ctx, y) {
                        acc = acc.add(&lin.value(ctx, y, m))?;
                    }
                }
                let centralizer = big.order() as i128 / big.classes[c].size as i128;
                Ok(acc.scale(&Rat::new(centralizer, h_order)))
            })
            .collect();
        Ok(ClassFunction { group: big.clone(), values: values?, m })
    }

    /// Inflation along a semidirect splitting: `big`'s support must split as
    /// a normal pattern `h_support` (in the kernel) times the support of
    /// this function's group, and the value at g is the value at the
    /// complement part of its normal form.
    pub fn inflate_to(
        &self,
        big: &Arc<EnumeratedGroup>,
        h_support: &RootSet,
    ) -> Result<ClassFunction> {
        if !matches!(big.kind, GroupKind::Plain) {
            return Err(Error::Invalid("inflation through quotients is not supported".into()));
        }
        let big_support = big.support;
        if !crate::unigroup::is_normal_pattern(h_support, &big_support) {
            return Err(Error::Invalid("inflation kernel is not normal".into()));
        }
        let k_support = big_support.minus(h_support);
        if !k_support.is_closed() {
            return Err(Error::Invalid("no complement: the splitting is not semidirect".into()));
        }
        let values: Result<Vec<_>> = (0..big.class_count())
            .map(|c| {
                let rep = big.class_rep(c);
                let kpart = crate::unigroup::normal_form(&big.ctx, rep, h_support);
                Ok(self.value_at(&kpart)?.clone())
            })
            .collect();
        Ok(ClassFunction { group: big.clone(), values: values?, m: self.m })
    }

    /// Restriction to an enumerated subgroup (same element representation).
    pub fn restrict_to(&self, small: &Arc<EnumeratedGroup>) -> Result<ClassFunction> {
        let values: Result<Vec<_>> = (0..small.class_count())
            .map(|c| {
                let rep = small.class_rep(c);
                Ok(self.value_at(rep)?.clone())
            })
            .collect();
        Ok(ClassFunction { group: small.clone(), values: values?, m: self.m })
    }

    /// True iff every value lies in Q(zeta_sub).
    pub fn values_in_order(&self, sub: u32) -> bool {
        self.values.iter().all(|v| v.lies_in_order(sub))
    }

    pub fn is_real(&self) -> bool {
        self.values.iter().all(|v| v.is_real())
    }

    pub fn is_rational(&self) -> bool {
        self.values.iter().all(|v| v.as_rational().is_some())
    }
}

/// Multiplicity of `irr` in `chi` when both are characters: the inner
/// product, demanded to be a nonnegative integer.
pub fn multiplicity(chi: &ClassFunction, irr: &ClassFunction) -> Result<u64> {
    let r = chi.inner(irr)?;
    if !r.is_integer() || r < Rat::zero() {
        return Err(Error::Inconsistency(format!("multiplicity {r} is not a nonnegative integer")));
    }
    Ok(r.to_integer() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basicset::{v_pattern, BasicSet};
    use crate::scalars::{ambient_order, FqCtx};
    use crate::unigroup::PatternGroup;

    fn setup(q: u32, n: u8) -> (UniCtx, Arc<EnumeratedGroup>) {
        let ctx = UniCtx::new(Arc::new(FqCtx::for_order(q).unwrap()), n);
        let g = EnumeratedGroup::pattern(&ctx, &PatternGroup::full(n), 1 << 20).unwrap();
        (ctx, g)
    }

    #[test]
    fn phi_alpha_s_basics() {
        let (ctx, _) = setup(2, 3);
        let a = Root::of(1, 2);
        let dom = RootSet::from_roots(3, [a]);
        let lin = LinearChar::new(dom, RootSet::empty(3), vec![(a, 1)]).unwrap();
        let x0 = UniMatrix::root_element(&ctx, a, 0);
        let x1 = UniMatrix::root_element(&ctx, a, 1);
        assert_eq!(lin.value(&ctx, &x0, 2), CycloValue::one(2));
        assert_eq!(lin.value(&ctx, &x1, 2), CycloValue::from_int(-1, 2));
        // s = 0 rejected
        assert!(LinearChar::new(dom, RootSet::empty(3), vec![(a, 0)]).is_err());
    }

    #[test]
    fn distinct_scalars_give_distinct_characters() {
        let fq = Arc::new(FqCtx::for_order(5).unwrap());
        let ctx = UniCtx::new(fq, 3);
        let a = Root::of(1, 2);
        let dom = RootSet::from_roots(3, [a]);
        let mut seen = Vec::new();
        for s in ctx.fq.nonzero() {
            let lin = LinearChar::new(dom, RootSet::empty(3), vec![(a, s)]).unwrap();
            let vals: Vec<CycloValue> = ctx
                .fq
                .elements()
                .map(|d| lin.value(&ctx, &UniMatrix::root_element(&ctx, a, d), 5))
                .collect();
            assert!(!seen.contains(&vals));
            seen.push(vals);
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn linear_chars_are_multiplicative() {
        // lambda_D on V_D for a sample D, random pairs
        for (q, n) in [(2u32, 4u8), (3, 4), (2, 5)] {
            let (ctx, _) = setup(q, n);
            for d in crate::basicset::enumerate_basic_sets(n) {
                let v = v_pattern(&d);
                let coeffs: Vec<(Root, u8)> = d.roots().iter().map(|&t| (t, 1)).collect();
                let lam = LinearChar::new(v, RootSet::empty(n), coeffs).unwrap();
                let vg = EnumeratedGroup::pattern(
                    &ctx,
                    &PatternGroup::new(v).unwrap(),
                    1 << 20,
                )
                .unwrap();
                let mut state = 7u64;
                let mut next = move || {
                    state = state.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
                    (state >> 33) as usize
                };
                for _ in 0..200 {
                    let a = &vg.elements[next() % vg.order()];
                    let b = &vg.elements[next() % vg.order()];
                    let lhs = lam.value(&ctx, &a.mul(&ctx, b), ctx.fq.p);
                    let rhs = lam
                        .value(&ctx, a, ctx.fq.p)
                        .mul(&lam.value(&ctx, b, ctx.fq.p))
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
                // trivial on K_D root subgroups
                for r in crate::basicset::k_pattern(&d).iter() {
                    let g = UniMatrix::root_element(&ctx, r, 1);
                    assert_eq!(lam.value(&ctx, &g, ctx.fq.p), CycloValue::one(ctx.fq.p));
                }
                // identity maps to 1
                assert_eq!(
                    lam.value(&ctx, &UniMatrix::identity(&ctx), ctx.fq.p),
                    CycloValue::one(ctx.fq.p)
                );
            }
        }
    }

    #[test]
    fn induced_trivial_character_degree() {
        let (ctx, g) = setup(2, 3);
        let v = RootSet::parse(3, "1-2,2-2").unwrap();
        let lin = LinearChar::new(v, RootSet::empty(3), vec![]).unwrap();
        let ind = ClassFunction::induce_linear(&lin, &g, 2).unwrap();
        assert_eq!(ind.degree_int().unwrap(), 2); // [G:H]
        let _ = ctx;
    }

    #[test]
    fn elementary_character_is_irreducible() {
        // induce(lambda_{a12,1} on V, U_3(2)): degree 2, norm 1
        let (_, g) = setup(2, 3);
        let d = BasicSet::parse(3, "1-2").unwrap();
        let v = v_pattern(&d);
        let lin = LinearChar::new(v, RootSet::empty(3), vec![(Root::of(1, 2), 1)]).unwrap();
        let ind = ClassFunction::induce_linear(&lin, &g, 2).unwrap();
        assert_eq!(ind.degree_int().unwrap(), 2);
        assert_eq!(ind.norm().unwrap(), Rat::from_integer(1));
    }

    #[test]
    fn frobenius_reciprocity_and_transitivity() {
        let (ctx, g) = setup(2, 4);
        let m = ambient_order(2, 4);
        // H = pattern on row 2..: abelian-ish subgroup
        let hsup = RootSet::parse(4, "2-2,2-3,3-3,1-3").unwrap();
        let h = EnumeratedGroup::pattern(&ctx, &PatternGroup::new(hsup).unwrap(), 1 << 20).unwrap();
        let lin = LinearChar::new(hsup, RootSet::empty(4), vec![(Root::of(1, 3), 1)]).unwrap();
        let chi = ClassFunction::from_linear(&lin, &h, m).unwrap();
        let ind = chi.induce_to(&g).unwrap();
        // Frobenius: <ind chi, ind chi>_G = <chi, res ind chi>_H
        let lhs = ind.norm().unwrap();
        let rhs = chi.inner(&ind.restrict_to(&h).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        // transitivity through an intermediate pattern group
        let msup = RootSet::parse(4, "2-2,2-3,3-3,1-3,1-2").unwrap();
        let mid = EnumeratedGroup::pattern(&ctx, &PatternGroup::new(msup).unwrap(), 1 << 20).unwrap();
        let two_step = chi.induce_to(&mid).unwrap().induce_to(&g).unwrap();
        let one_step = chi.induce_to(&g).unwrap();
        for c in 0..g.class_count() {
            assert_eq!(two_step.values[c], one_step.values[c]);
        }
    }

    #[test]
    fn supercharacter_is_the_tensor_of_elementary_characters() {
        // the product over D of the induced one-root characters equals the
        // induction of their combined character, on every basic set of the
        // rank-3 system over F_2
        let (ctx, g) = setup(2, 4);
        let m = ambient_order(2, 4);
        for d in crate::basicset::enumerate_basic_sets(4) {
            let mut product = ClassFunction::trivial(&g, m);
            for &t in d.roots() {
                let single = BasicSet::new(4, vec![t]).unwrap();
                let lin = LinearChar::new(
                    v_pattern(&single),
                    RootSet::empty(4),
                    vec![(t, 1)],
                )
                .unwrap();
                let elem = ClassFunction::induce_linear(&lin, &g, m).unwrap();
                assert_eq!(elem.norm().unwrap(), Rat::from_integer(1), "elementary char reducible");
                product = product.tensor(&elem).unwrap();
            }
            let lam = LinearChar::new(
                v_pattern(&d),
                RootSet::empty(4),
                d.roots().iter().map(|&t| (t, 1)).collect(),
            )
            .unwrap();
            let xi = ClassFunction::induce_linear(&lam, &g, m).unwrap();
            for c in 0..g.class_count() {
                assert_eq!(product.values[c], xi.values[c], "tensor identity fails for {d}");
            }
        }
        let _ = ctx;
    }

    #[test]
    fn conjugation_convention_pinned() {
        // (^g chi)(x) = chi(g x g^{-1})
        let (ctx, g) = setup(2, 3);
        let m = 4;
        let hsup = RootSet::parse(3, "1-1,1-2").unwrap();
        let h = EnumeratedGroup::pattern(&ctx, &PatternGroup::new(hsup).unwrap(), 1 << 20).unwrap();
        let lin = LinearChar::new(hsup, RootSet::empty(3), vec![(Root::simple(1), 1)]).unwrap();
        let chi = ClassFunction::from_linear(&lin, &h, m).unwrap();
        let y = UniMatrix::root_element(&ctx, Root::simple(2), 1);
        let tw = chi.conj_by(&y).unwrap();
        for c in 0..h.class_count() {
            let x = h.class_rep(c);
            let gxg = h.mulg(&h.mulg(&y, x), &h.invg(&y));
            assert_eq!(tw.values[c], *chi.value_at(&gxg).unwrap());
        }
        // ^g chi = chi for central g
        let z = UniMatrix::root_element(&ctx, Root::of(1, 2), 1);
        let tw2 = chi.conj_by(&z).unwrap();
        for c in 0..h.class_count() {
            assert_eq!(tw2.values[c], chi.values[c]);
        }
        let _ = g;
    }

    #[test]
    fn inflate_then_restrict_is_the_identity() {
        let (ctx, _) = setup(2, 4);
        let m = 4;
        // big = pattern on rows 1..3 with H = its top row, K = the rest
        let big_sup = RootSet::parse(4, "1-3,2-2,2-3,3-3").unwrap();
        let h_sup = RootSet::parse(4, "1-3").unwrap();
        let k_sup = big_sup.minus(&h_sup);
        let big =
            EnumeratedGroup::pattern(&ctx, &PatternGroup::new(big_sup).unwrap(), 1 << 20).unwrap();
        let small =
            EnumeratedGroup::pattern(&ctx, &PatternGroup::new(k_sup).unwrap(), 1 << 20).unwrap();
        let lin = LinearChar::new(k_sup, RootSet::empty(4), vec![(Root::simple(2), 1)]).unwrap();
        let chi = ClassFunction::from_linear(&lin, &small, m).unwrap();
        let inflated = chi.inflate_to(&big, &h_sup).unwrap();
        // H lands in the kernel
        let h_el = UniMatrix::root_element(&ctx, Root::of(1, 3), 1);
        assert_eq!(inflated.value_at(&h_el).unwrap(), &inflated.degree());
        // restricting back gives the original
        let back = inflated.restrict_to(&small).unwrap();
        for c in 0..small.class_count() {
            assert_eq!(back.values[c], chi.values[c]);
        }
        // a non-semidirect split is rejected
        assert!(chi.inflate_to(&big, &RootSet::parse(4, "2-3").unwrap()).is_err());
    }

    #[test]
    fn inner_product_basics() {
        let (_, g) = setup(2, 3);
        let m = 4;
        let one = ClassFunction::trivial(&g, m);
        assert_eq!(one.norm().unwrap(), Rat::from_integer(1));
        let reg = ClassFunction::regular(&g, m);
        assert_eq!(reg.inner(&one).unwrap(), Rat::from_integer(1));
    }
}
