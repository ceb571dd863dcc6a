//! Concrete computation in U_n(q): unitriangular matrices, pattern subgroups,
//! normal forms modulo normal pattern subgroups, enumeration, conjugacy
//! classes and structural predicates.

use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::basicset::MonomialPerm;
use crate::error::{Error, Result};
use crate::roots::{add_roots, all_roots, root_count, root_index, Root, RootSet};
use crate::scalars::FqCtx;

/// Ambient context: the field and the matrix size.
#[derive(Clone)]
pub struct UniCtx {
    pub fq: Arc<FqCtx>,
    pub n: u8,
}

impl UniCtx {
    pub fn new(fq: Arc<FqCtx>, n: u8) -> UniCtx {
        assert!((2..=crate::roots::MAX_N).contains(&n));
        UniCtx { fq, n }
    }

    pub fn q(&self) -> u32 {
        self.fq.q
    }

    /// Roots sorted by increasing height, ties by row: the collection order.
    pub fn collection_order(&self, set: &RootSet) -> Vec<Root> {
        let mut v: Vec<Root> = set.iter().collect();
        v.sort_by_key(|r| (r.height(), r.i));
        v
    }
}

/// An upper unitriangular matrix; strict upper entries indexed by root
/// position, diagonal implicitly 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniMatrix {
    entries: Box<[u8]>,
}

impl UniMatrix {
    pub fn identity(ctx: &UniCtx) -> UniMatrix {
        UniMatrix { entries: vec![0; root_count(ctx.n)].into_boxed_slice() }
    }

    pub fn root_element(ctx: &UniCtx, r: Root, c: u8) -> UniMatrix {
        let mut m = UniMatrix::identity(ctx);
        m.set(ctx, r, c);
        m
    }

    #[inline]
    pub fn get(&self, ctx: &UniCtx, r: Root) -> u8 {
        self.entries[root_index(r, ctx.n)]
    }

    #[inline]
    pub fn set(&mut self, ctx: &UniCtx, r: Root, c: u8) {
        self.entries[root_index(r, ctx.n)] = c;
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|&c| c == 0)
    }

    pub fn support(&self, ctx: &UniCtx) -> RootSet {
        RootSet::from_roots(
            ctx.n,
            all_roots(ctx.n).into_iter().filter(|&r| self.get(ctx, r) != 0),
        )
    }

    pub fn key(&self) -> Box<[u8]> {
        self.entries.clone()
    }

    pub fn mul(&self, ctx: &UniCtx, other: &UniMatrix) -> UniMatrix {
        let fq = &ctx.fq;
        let mut out = UniMatrix::identity(ctx);
        for r in all_roots(ctx.n) {
            let mut acc = fq.add(self.get(ctx, r), other.get(ctx, r));
            // cross terms: (i,m) * (m+1, j) for m in i..j
            for m in r.i..r.j {
                let a = self.get(ctx, Root::of(r.i, m));
                if a == 0 {
                    continue;
                }
                let b = other.get(ctx, Root::of(m + 1, r.j));
                if b != 0 {
                    acc = fq.add(acc, fq.mul(a, b));
                }
            }
            out.set(ctx, r, acc);
        }
        out
    }

    pub fn inv(&self, ctx: &UniCtx) -> UniMatrix {
        let fq = &ctx.fq;
        let mut out = UniMatrix::identity(ctx);
        // X A = I: X_{i,c} = -A_{i,c} - sum_{i<k<c} X_{i,k} A_{k,c}; fill by
        // increasing height so the needed X entries exist.
        let mut order: Vec<Root> = all_roots(ctx.n);
        order.sort_by_key(|r| r.height());
        for r in order {
            let mut acc = self.get(ctx, r);
            for m in r.i..r.j {
                let x = out.get(ctx, Root::of(r.i, m));
                if x == 0 {
                    continue;
                }
                let a = self.get(ctx, Root::of(m + 1, r.j));
                if a != 0 {
                    acc = fq.add(acc, fq.mul(x, a));
                }
            }
            out.set(ctx, r, fq.neg(acc));
        }
        out
    }

    /// Right multiplication by a root element, in place.
    pub fn mul_root_right(&mut self, ctx: &UniCtx, r: Root, c: u8) {
        if c == 0 {
            return;
        }
        let fq = &ctx.fq;
        // (W * x_r(c)) adds c * W[:, row(r)] into matrix column col(r)
        let cur = self.get(ctx, r);
        self.set(ctx, r, fq.add(cur, c));
        for i in 1..r.i {
            let w = self.get(ctx, Root::of(i, r.i - 1));
            if w != 0 {
                let tgt = Root::of(i, r.j);
                let cur = self.get(ctx, tgt);
                self.set(ctx, tgt, fq.add(cur, fq.mul(w, c)));
            }
        }
    }

    /// x^{-1} y^{-1} x y.
    pub fn commutator(&self, ctx: &UniCtx, other: &UniMatrix) -> UniMatrix {
        self.inv(ctx)
            .mul(ctx, &other.inv(ctx))
            .mul(ctx, self)
            .mul(ctx, other)
    }

    /// y^{-1} x y where x = self.
    pub fn conjugate_by(&self, ctx: &UniCtx, y: &UniMatrix) -> UniMatrix {
        y.inv(ctx).mul(ctx, self).mul(ctx, y)
    }

    pub fn pow(&self, ctx: &UniCtx, e: u32) -> UniMatrix {
        let mut acc = UniMatrix::identity(ctx);
        for _ in 0..e {
            acc = acc.mul(ctx, self);
        }
        acc
    }

    pub fn order(&self, ctx: &UniCtx) -> u32 {
        let mut acc = self.clone();
        let mut o = 1;
        while !acc.is_identity() {
            acc = acc.mul(ctx, self);
            o += 1;
        }
        o
    }

    /// Full n x n text form: semicolon-separated rows of comma-separated
    /// entries (field element codes).
    pub fn display(&self, ctx: &UniCtx) -> String {
        let n = ctx.n;
        let mut rows = Vec::new();
        for i in 1..=n {
            let mut row = Vec::new();
            for j in 1..=n {
                let v = match j.cmp(&i) {
                    std::cmp::Ordering::Less => 0,
                    std::cmp::Ordering::Equal => 1,
                    std::cmp::Ordering::Greater => self.get(ctx, Root::of(i, j - 1)),
                };
                row.push(v.to_string());
            }
            rows.push(row.join(","));
        }
        rows.join(";")
    }

    pub fn parse(ctx: &UniCtx, text: &str) -> Result<UniMatrix> {
        let n = ctx.n as usize;
        let rows: Vec<&str> = text.split(';').collect();
        if rows.len() != n {
            return Err(Error::Parse(format!("expected {n} rows")));
        }
        let mut m = UniMatrix::identity(ctx);
        for (i, row) in rows.iter().enumerate() {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != n {
                return Err(Error::Parse(format!("row {} needs {n} entries", i + 1)));
            }
            for (j, cell) in cells.iter().enumerate() {
                let v: u8 =
                    cell.trim().parse().map_err(|_| Error::Parse(format!("bad entry `{cell}`")))?;
                if v as u32 >= ctx.q() {
                    return Err(Error::Parse(format!("entry {v} not in F_{}", ctx.q())));
                }
                match j.cmp(&i) {
                    std::cmp::Ordering::Less if v != 0 => {
                        return Err(Error::Parse("matrix not upper triangular".into()))
                    }
                    std::cmp::Ordering::Equal if v != 1 => {
                        return Err(Error::Parse("diagonal must be 1".into()))
                    }
                    std::cmp::Ordering::Greater => {
                        m.set(ctx, Root::of(i as u8 + 1, j as u8), v);
                    }
                    _ => {}
                }
            }
        }
        Ok(m)
    }
}

impl fmt::Debug for UniMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U{:?}", self.entries)
    }
}

/// A pattern subgroup: all unitriangular matrices supported on a closed set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PatternGroup {
    pub n: u8,
    pub support: RootSet,
}

impl PatternGroup {
    pub fn new(support: RootSet) -> Result<PatternGroup> {
        if !support.is_closed() {
            return Err(Error::Invalid(format!("support {support:?} is not closed")));
        }
        Ok(PatternGroup { n: support.n, support })
    }

    pub fn full(n: u8) -> PatternGroup {
        PatternGroup { n, support: RootSet::full(n) }
    }

    pub fn contains(&self, ctx: &UniCtx, g: &UniMatrix) -> bool {
        g.support(ctx).is_subset(&self.support)
    }

    pub fn order_exp(&self) -> u32 {
        self.support.len() as u32
    }

    /// Generators: one root element per support root and additive basis scalar.
    pub fn generators(&self, ctx: &UniCtx) -> Vec<UniMatrix> {
        let mut gens = Vec::new();
        for r in self.support.iter() {
            for b in ctx.fq.additive_basis() {
                gens.push(UniMatrix::root_element(ctx, r, b));
            }
        }
        gens
    }
}

/// True iff the pattern on `inner` is normal in the pattern on `outer`:
/// every composable sum of an inner root with an outer root stays inner.
pub fn is_normal_pattern(inner: &RootSet, outer: &RootSet) -> bool {
    if !inner.is_subset(outer) {
        return false;
    }
    for a in inner.iter() {
        for b in outer.iter() {
            if let Some(c) = add_roots(a, b) {
                if c.valid_for(outer.n) && outer.contains(c) && !inner.contains(c) {
                    return false;
                }
            }
        }
    }
    true
}

/// Canonical coset representative of g modulo the normal pattern subgroup on
/// `dead`: the unique element of g*K with zero entries at every dead
/// position.  Collection runs over the dead roots in increasing height
/// (ties by row); peeling a root only touches strictly greater heights.
pub fn normal_form(ctx: &UniCtx, g: &UniMatrix, dead: &RootSet) -> UniMatrix {
    let mut w = g.clone();
    for r in ctx.collection_order(dead) {
        let c = w.get(ctx, r);
        if c != 0 {
            w.mul_root_right(ctx, r, ctx.fq.neg(c));
        }
    }
    w
}

/// How an enumerated group multiplies: as-is, or modulo a normal pattern.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupKind {
    Plain,
    /// Quotient by the pattern subgroup on `dead`; elements are canonical
    /// coset representatives (zero at dead positions).
    Quotient { dead: RootSet },
}

/// A fully enumerated group (pattern, quotient of a pattern, or generated
/// subgroup) with class data.
pub struct EnumeratedGroup {
    pub ctx: UniCtx,
    pub kind: GroupKind,
    /// Union of the element supports (the alive pattern for pattern groups).
    pub support: RootSet,
    pub elements: Vec<UniMatrix>,
    index: FxHashMap<Box<[u8]>, u32>,
    generators: Vec<UniMatrix>,
    pub classes: Vec<ConjClass>,
    class_of: Vec<u32>,
    inv_of: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: u32,
    pub size: u32,
}

impl EnumeratedGroup {
    /// Enumerates a pattern group by direct assignment of its support.
    pub fn pattern(ctx: &UniCtx, p: &PatternGroup, budget: u64) -> Result<Arc<EnumeratedGroup>> {
        Self::quotient(ctx, p, &RootSet::empty(ctx.n), budget)
    }

    /// Enumerates P/K for a normal pattern subgroup K (support `dead`).
    /// Elements are the canonical representatives: arbitrary entries at
    /// alive support positions, zero elsewhere.
    pub fn quotient(
        ctx: &UniCtx,
        p: &PatternGroup,
        dead: &RootSet,
        budget: u64,
    ) -> Result<Arc<EnumeratedGroup>> {
        if !dead.is_empty() && !is_normal_pattern(dead, &p.support) {
            return Err(Error::Invalid(format!(
                "pattern {dead:?} is not normal in {:?}",
                p.support
            )));
        }
        let alive: Vec<Root> = p.support.minus(dead).iter().collect();
        let q = ctx.q() as u128;
        let count = q
            .checked_pow(alive.len() as u32)
            .ok_or(Error::EnumBudget { needed: u128::MAX, budget: budget as u128 })?;
        if count > budget as u128 {
            return Err(Error::EnumBudget { needed: count, budget: budget as u128 });
        }
        let kind = if dead.is_empty() {
            GroupKind::Plain
        } else {
            GroupKind::Quotient { dead: *dead }
        };
        let mut elements = Vec::with_capacity(count as usize);
        let mut digits = vec![0u8; alive.len()];
        loop {
            let mut m = UniMatrix::identity(ctx);
            for (r, &c) in alive.iter().zip(&digits) {
                m.set(ctx, *r, c);
            }
            elements.push(m);
            // odometer over base-q digits, most significant last
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    break;
                }
                digits[pos] += 1;
                if (digits[pos] as u32) < ctx.q() {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
        let mut index = FxHashMap::default();
        for (k, m) in elements.iter().enumerate() {
            index.insert(m.key(), k as u32);
        }
        let alive_set = RootSet::from_roots(ctx.n, alive.iter().copied());
        let generators = PatternGroup { n: ctx.n, support: alive_set }.generators(ctx);
        let mut g = EnumeratedGroup {
            ctx: ctx.clone(),
            kind,
            support: alive_set,
            elements,
            index,
            generators,
            classes: Vec::new(),
            class_of: Vec::new(),
            inv_of: Vec::new(),
        };
        g.compute_inverses();
        g.compute_classes();
        Ok(Arc::new(g))
    }

    /// Breadth-first closure of a generating set (kind inherited from the
    /// caller: products are reduced modulo `dead` if given).
    pub fn from_generators(
        ctx: &UniCtx,
        gens: &[UniMatrix],
        dead: Option<&RootSet>,
        budget: u64,
    ) -> Result<Arc<EnumeratedGroup>> {
        let kind = match dead {
            Some(d) if !d.is_empty() => GroupKind::Quotient { dead: *d },
            _ => GroupKind::Plain,
        };
        let reduce = |m: UniMatrix| match &kind {
            GroupKind::Plain => m,
            GroupKind::Quotient { dead } => normal_form(ctx, &m, dead),
        };
        let gens: Vec<UniMatrix> = gens.iter().map(|g| reduce(g.clone())).collect();
        let mut elements = vec![UniMatrix::identity(ctx)];
        let mut index = FxHashMap::default();
        index.insert(elements[0].key(), 0u32);
        let mut frontier = 0usize;
        while frontier < elements.len() {
            let cur = elements[frontier].clone();
            frontier += 1;
            for g in &gens {
                let next = reduce(cur.mul(ctx, g));
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(next.key()) {
                    if elements.len() as u64 >= budget {
                        return Err(Error::EnumBudget {
                            needed: elements.len() as u128 + 1,
                            budget: budget as u128,
                        });
                    }
                    e.insert(elements.len() as u32);
                    elements.push(next);
                }
            }
        }
        let support = elements
            .iter()
            .fold(RootSet::empty(ctx.n), |acc, e| acc.union(&e.support(ctx)));
        let mut g = EnumeratedGroup {
            ctx: ctx.clone(),
            kind,
            support,
            elements,
            index,
            generators: gens,
            classes: Vec::new(),
            class_of: Vec::new(),
            inv_of: Vec::new(),
        };
        g.compute_inverses();
        g.compute_classes();
        Ok(Arc::new(g))
    }

    /// Product in the group (reduced for quotients).
    pub fn mulg(&self, a: &UniMatrix, b: &UniMatrix) -> UniMatrix {
        let m = a.mul(&self.ctx, b);
        match &self.kind {
            GroupKind::Plain => m,
            GroupKind::Quotient { dead } => normal_form(&self.ctx, &m, dead),
        }
    }

    pub fn invg(&self, a: &UniMatrix) -> UniMatrix {
        let m = a.inv(&self.ctx);
        match &self.kind {
            GroupKind::Plain => m,
            GroupKind::Quotient { dead } => normal_form(&self.ctx, &m, dead),
        }
    }

    pub fn reduce(&self, a: &UniMatrix) -> UniMatrix {
        match &self.kind {
            GroupKind::Plain => a.clone(),
            GroupKind::Quotient { dead } => normal_form(&self.ctx, a, dead),
        }
    }

    pub fn conj(&self, x: &UniMatrix, y: &UniMatrix) -> UniMatrix {
        self.mulg(&self.mulg(&self.invg(y), x), y)
    }

    pub fn comm(&self, x: &UniMatrix, y: &UniMatrix) -> UniMatrix {
        self.mulg(&self.mulg(&self.invg(x), &self.invg(y)), &self.mulg(x, y))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, g: &UniMatrix) -> Option<u32> {
        self.index.get(&g.key()).copied()
    }

    pub fn contains(&self, g: &UniMatrix) -> bool {
        self.index.contains_key(&g.key())
    }

    fn compute_inverses(&mut self) {
        self.inv_of = self
            .elements
            .iter()
            .map(|e| self.index[&self.invg(e).key()])
            .collect();
    }

    /// Cached inverse of the element with the given index.
    pub fn inverse_elem(&self, i: u32) -> &UniMatrix {
        &self.elements[self.inv_of[i as usize] as usize]
    }

    fn compute_classes(&mut self) {
        let n = self.elements.len();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<ConjClass> = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            class_of[start] = cid;
            let mut size = 1u32;
            stack.push(start as u32);
            while let Some(cur) = stack.pop() {
                let x = self.elements[cur as usize].clone();
                for g in &self.generators {
                    let y = self.conj(&x, g);
                    let yi = self.index[&y.key()];
                    if class_of[yi as usize] == u32::MAX {
                        class_of[yi as usize] = cid;
                        size += 1;
                        stack.push(yi);
                    }
                }
            }
            let p = self.ctx.fq.p;
            let mut s = size;
            while s.is_multiple_of(p) {
                s /= p;
            }
            assert_eq!(s, 1, "class size {size} is not a power of the characteristic");
            classes.push(ConjClass { rep: start as u32, size });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of_index(&self, el: u32) -> u32 {
        self.class_of[el as usize]
    }

    pub fn class_of(&self, g: &UniMatrix) -> Option<u32> {
        self.index_of(g).map(|i| self.class_of[i as usize])
    }

    pub fn class_rep(&self, c: usize) -> &UniMatrix {
        &self.elements[self.classes[c].rep as usize]
    }

    /// Element indices grouped by class.
    pub fn class_members(&self) -> Vec<Vec<u32>> {
        let mut members = vec![Vec::new(); self.classes.len()];
        for (i, &c) in self.class_of.iter().enumerate() {
            members[c as usize].push(i as u32);
        }
        members
    }

    /// Class of the inverse of each class representative.
    pub fn inverse_classes(&self) -> Vec<u32> {
        self.classes
            .iter()
            .map(|c| self.class_of(&self.invg(&self.elements[c.rep as usize])).unwrap())
            .collect()
    }

    pub fn exponent(&self) -> u32 {
        let mut m = 1u32;
        for c in &self.classes {
            let o = self.element_order(&self.elements[c.rep as usize]);
            m = num_integer::lcm(m, o);
        }
        m
    }

    pub fn element_order(&self, g: &UniMatrix) -> u32 {
        let mut acc = g.clone();
        let mut o = 1;
        while !acc.is_identity() {
            acc = self.mulg(&acc, g);
            o += 1;
        }
        o
    }

    /// Element indices of the center.
    pub fn center(&self) -> Vec<u32> {
        (0..self.elements.len() as u32)
            .filter(|&i| {
                let x = &self.elements[i as usize];
                self.generators.iter().all(|g| self.mulg(x, g) == self.mulg(g, x))
            })
            .collect()
    }

    /// Normal closure of the given elements, as a generated subgroup.
    fn normal_closure(&self, seed: Vec<UniMatrix>, budget: u64) -> Result<Vec<UniMatrix>> {
        let mut elements = vec![UniMatrix::identity(&self.ctx)];
        let mut index = FxHashMap::default();
        index.insert(elements[0].key(), 0u32);
        let mut frontier = 0usize;
        let mut gens = seed;
        // close the generating set under conjugation lazily
        let mut gi = 0;
        while gi < gens.len() {
            let g = gens[gi].clone();
            for h in &self.generators {
                let c = self.conj(&g, h);
                if !gens.contains(&c) {
                    gens.push(c);
                }
                if gens.len() as u64 > budget {
                    return Err(Error::EnumBudget {
                        needed: gens.len() as u128,
                        budget: budget as u128,
                    });
                }
            }
            gi += 1;
        }
        while frontier < elements.len() {
            let cur = elements[frontier].clone();
            frontier += 1;
            for g in &gens {
                let next = self.mulg(&cur, g);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(next.key()) {
                    if elements.len() as u64 >= budget {
                        return Err(Error::EnumBudget {
                            needed: elements.len() as u128 + 1,
                            budget: budget as u128,
                        });
                    }
                    e.insert(elements.len() as u32);
                    elements.push(next);
                }
            }
        }
        Ok(elements)
    }

    pub fn derived_subgroup(&self, budget: u64) -> Result<Vec<UniMatrix>> {
        let mut seed = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = self.comm(a, b);
                if !c.is_identity() && !seed.contains(&c) {
                    seed.push(c);
                }
            }
        }
        self.normal_closure(seed, budget)
    }

    /// Frattini subgroup of a p-group: G^p [G,G].
    pub fn frattini(&self, budget: u64) -> Result<Vec<UniMatrix>> {
        let p = self.ctx.fq.p;
        let mut seed = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = self.comm(a, b);
                if !c.is_identity() && !seed.contains(&c) {
                    seed.push(c);
                }
            }
            let mut ppow = a.clone();
            for _ in 1..p {
                ppow = self.mulg(&ppow, a);
            }
            if !ppow.is_identity() && !seed.contains(&ppow) {
                seed.push(ppow);
            }
        }
        self.normal_closure(seed, budget)
    }

    /// Some(t) iff the group is special of type q^(1+2t): derived = center =
    /// Frattini, with |center| = q and |G| = q^(1+2t).
    pub fn is_special(&self, budget: u64) -> Result<Option<u32>> {
        let q = self.ctx.q() as usize;
        let z: Vec<Box<[u8]>> =
            self.center().iter().map(|&i| self.elements[i as usize].key()).collect();
        if z.len() != q {
            return Ok(None);
        }
        let mut d: Vec<Box<[u8]>> =
            self.derived_subgroup(budget)?.iter().map(|m| m.key()).collect();
        let mut f: Vec<Box<[u8]>> = self.frattini(budget)?.iter().map(|m| m.key()).collect();
        let mut zs = z.clone();
        zs.sort();
        d.sort();
        f.sort();
        if d != zs || f != zs {
            return Ok(None);
        }
        // |G| = q^(1+2t)
        let mut e = 0u32;
        let mut m = self.order();
        while m > 1 {
            if !m.is_multiple_of(q) {
                return Ok(None);
            }
            m /= q;
            e += 1;
        }
        if e % 2 == 1 && e >= 1 {
            Ok(Some((e - 1) / 2))
        } else {
            Ok(None)
        }
    }
}

/// Support of U_k intersected with its conjugate by the monomial matrix w,
/// as a root set of rank k-1: position (i,j), i < j, survives iff the
/// permutation pulls it back to an upper position.
pub fn intersect_conjugate(k: usize, w: &MonomialPerm) -> RootSet {
    assert_eq!(w.k, k);
    let winv = w.inverse();
    let mut s = RootSet::empty(k as u8);
    for i in 1..=k {
        for j in i + 1..=k {
            if winv.row_of(i - 1) < winv.row_of(j - 1) {
                s.insert(Root::of(i as u8, j as u8 - 1));
            }
        }
    }
    s
}
