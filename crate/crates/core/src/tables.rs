//! Independent character-table oracle for small groups.
//!
//! Tables are computed by the class-matrix method: the structure constants
//! of the class algebra are diagonalized over a prime field F_l with
//! l = 1 (mod m) and l > 2 sqrt(|G|) (m the group exponent), the common
//! eigenvectors give the central characters, degrees are recovered from the
//! second orthogonality relation, and values are lifted to Z[zeta_m] by a
//! discrete Fourier inversion over the power map of each class.

use std::sync::Arc;

use num_traits::Zero;

use crate::charfn::ClassFunction;
use crate::error::{Error, Result};
use crate::scalars::{CycloValue, Rat};
use crate::unigroup::EnumeratedGroup;

/// Budgets for enumeration and table computation; env keys `ENUM_BUDGET` and
/// `TABLE_BUDGET` override the element limits.
#[derive(Clone, Debug)]
pub struct Budgets {
    pub enum_elements: u64,
    pub table_elements: u64,
    pub table_classes: usize,
}

impl Default for Budgets {
    fn default() -> Budgets {
        Budgets { enum_elements: 1 << 20, table_elements: 1 << 15, table_classes: 300 }
    }
}

impl Budgets {
    pub fn from_env() -> Budgets {
        let mut b = Budgets::default();
        if let Some(v) = std::env::var("ENUM_BUDGET").ok().and_then(|s| s.parse().ok()) {
            b.enum_elements = v;
        }
        if let Some(v) = std::env::var("TABLE_BUDGET").ok().and_then(|s| s.parse().ok()) {
            b.table_elements = v;
        }
        b
    }
}

pub struct CharacterTable {
    pub group: Arc<EnumeratedGroup>,
    pub irreducibles: Vec<ClassFunction>,
    pub m: u32,
}

mod modl {
    //! Dense linear algebra over F_l, l a small odd prime.

    pub fn powmod(mut b: u64, mut e: u64, l: u64) -> u64 {
        let mut acc = 1u64;
        b %= l;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % l;
            }
            b = b * b % l;
            e >>= 1;
        }
        acc
    }

    pub fn inv(a: u64, l: u64) -> u64 {
        powmod(a, l - 2, l)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(m: &mut [Vec<u64>], l: u64) -> Vec<usize> {
        let rows = m.len();
        if rows == 0 {
            return vec![];
        }
        let cols = m[0].len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            if let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) {
                m.swap(r, pr);
                let piv_inv = inv(m[r][c], l);
                for x in m[r].iter_mut() {
                    *x = *x * piv_inv % l;
                }
                for i in 0..rows {
                    if i != r && m[i][c] != 0 {
                        let f = m[i][c];
                        let pivot_row = m[r].clone();
                        for (cc, x) in m[i].iter_mut().enumerate() {
                            *x = (*x + (l - f) * pivot_row[cc]) % l;
                        }
                    }
                }
                pivots.push(c);
                r += 1;
            }
        }
        pivots
    }

    /// Basis of the kernel of a (rows x cols) matrix.
    pub fn kernel(mut m: Vec<Vec<u64>>, cols: usize, l: u64) -> Vec<Vec<u64>> {
        let pivots = rref(&mut m, l);
        let mut basis = Vec::new();
        let piv_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..cols {
            if piv_set.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                if m[r][free] != 0 {
                    v[pc] = (l - m[r][free]) % l;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves B * x = y for x, where B is (n x d) with full column rank.
    pub fn solve_full_rank(b: &[Vec<u64>], y: &[u64], l: u64) -> Vec<u64> {
        let n = b.len();
        let d = b[0].len();
        let mut aug: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row = b[i].clone();
                row.push(y[i] % l);
                row
            })
            .collect();
        let pivots = rref(&mut aug, l);
        let mut x = vec![0u64; d];
        for (r, &pc) in pivots.iter().enumerate() {
            assert!(pc < d, "inconsistent system");
            x[pc] = aug[r][d];
        }
        x
    }

    /// det(a) for a square matrix, destructive Gauss.
    pub fn det(mut a: Vec<Vec<u64>>, l: u64) -> u64 {
        let n = a.len();
        let mut det = 1u64;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| a[i][c] != 0) else {
                return 0;
            };
            if pr != c {
                a.swap(c, pr);
                det = (l - det) % l;
            }
            det = det * a[c][c] % l;
            let piv_inv = inv(a[c][c], l);
            for i in c + 1..n {
                if a[i][c] != 0 {
                    let f = a[i][c] * piv_inv % l;
                    let pivot_row = a[c].clone();
                    for (cc, x) in a[i].iter_mut().enumerate().skip(c) {
                        *x = (*x + (l - f) * pivot_row[cc]) % l;
                    }
                }
            }
        }
        det
    }

    /// Coefficients of det(A - x I) by evaluation at d+1 points and Lagrange
    /// interpolation; constant-first, degree d.
    pub fn charpoly(a: &[Vec<u64>], l: u64) -> Vec<u64> {
        let d = a.len();
        let points: Vec<u64> = (0..=d as u64).collect();
        let values: Vec<u64> = points
            .iter()
            .map(|&x| {
                let mut m = a.to_vec();
                for (i, row) in m.iter_mut().enumerate() {
                    row[i] = (row[i] + l - x % l) % l;
                }
                det(m, l)
            })
            .collect();
        // Lagrange interpolation
        let mut coeffs = vec![0u64; d + 1];
        for (i, &xi) in points.iter().enumerate() {
            // numerator polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
            let mut num = vec![0u64; d + 1];
            num[0] = 1;
            let mut deg = 0;
            let mut denom = 1u64;
            for (j, &xj) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                // multiply num by (x - xj)
                deg += 1;
                for k in (1..=deg).rev() {
                    num[k] = (num[k - 1] + num[k] * (l - xj % l)) % l;
                }
                num[0] = num[0] * (l - xj % l) % l;
                denom = denom * ((xi + l - xj % l) % l) % l;
            }
            let f = values[i] * inv(denom, l) % l;
            for k in 0..=d {
                coeffs[k] = (coeffs[k] + f * num[k]) % l;
            }
        }
        coeffs
    }

    pub fn poly_eval(c: &[u64], x: u64, l: u64) -> u64 {
        c.iter().rev().fold(0u64, |acc, &ck| (acc * x + ck) % l)
    }
}

/// Finds the smallest prime l = 1 (mod m) with l > max(2 sqrt(|G|), bound).
fn find_prime(m: u32, order: usize, min_extra: u64) -> Result<u64> {
    let need = (2.0 * (order as f64).sqrt()).ceil() as u64;
    let need = need.max(min_extra) + 1;
    let mut l = (need / m as u64) * m as u64 + 1;
    while l < need || !crate::scalars::fq::is_prime(l as u32) || !(l - 1).is_multiple_of(m as u64) {
        l += m as u64;
        if l > 1 << 30 {
            return Err(Error::TableBudget("no suitable prime found".into()));
        }
    }
    Ok(l)
}

/// Full irreducible character table over Z[zeta_m], m = exponent(G).
pub fn character_table(
    group: &Arc<EnumeratedGroup>,
    budgets: &Budgets,
) -> Result<CharacterTable> {
    let k = group.class_count();
    if group.order() as u64 > budgets.table_elements {
        return Err(Error::TableBudget(format!(
            "group order {} exceeds table budget {}",
            group.order(),
            budgets.table_elements
        )));
    }
    if k > budgets.table_classes {
        return Err(Error::TableBudget(format!(
            "{k} classes exceed table budget {}",
            budgets.table_classes
        )));
    }
    let m = group.exponent();
    let l = find_prime(m, group.order(), k as u64)?;
    // primitive m-th root of unity in F_l
    let z = {
        let mut g = 2u64;
        loop {
            let cand = modl::powmod(g, (l - 1) / m as u64, l);
            let mut ok = cand != 1 || m == 1;
            let mut t = cand;
            for _ in 1..m {
                if t == 1 {
                    ok = false;
                    break;
                }
                t = t * cand % l;
            }
            if ok && t == 1 {
                break cand;
            }
            g += 1;
        }
    };

    // members per class
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); k];
    for i in 0..group.order() as u32 {
        members[group.class_of_index(i) as usize].push(i);
    }
    let class_sizes: Vec<u64> = group.classes.iter().map(|c| c.size as u64).collect();

    // class matrices A_r with (A_r)[s][t] = #{x in C_r, y in C_s : x y = z_t},
    // computed by fixing z_t and scanning x in C_r (y = x^{-1} z_t).
    #[allow(clippy::needless_range_loop)]
    let class_matrix = |r: usize| -> Vec<Vec<u64>> {
        let mut a = vec![vec![0u64; k]; k];
        for t in 0..k {
            let zt = group.class_rep(t).clone();
            for &xi in &members[r] {
                let x = &group.elements[xi as usize];
                let y = group.mulg(&group.invg(x), &zt);
                let s = group.class_of(&y).expect("closure") as usize;
                a[s][t] += 1;
            }
        }
        a
    };

    // split the common eigenspaces, iterating class matrices by increasing
    // class size (deterministic); subspaces are column bases.
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    let mut order: Vec<usize> = (1..k).collect();
    order.sort_by_key(|&r| (class_sizes[r], r));
    for &r in &order {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let a = class_matrix(r);
        let mut next = Vec::new();
        for basis in subspaces.drain(..) {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let d = basis.len();
            // restriction C of A to the subspace: A * B = B * C, solved
            // column by column.
            let bt: Vec<Vec<u64>> = (0..k).map(|i| basis.iter().map(|b| b[i]).collect()).collect();
            let mut c = vec![vec![0u64; d]; d];
            for (j, bvec) in basis.iter().enumerate() {
                // y = A * b_j
                let y: Vec<u64> = (0..k)
                    .map(|i| {
                        let mut acc = 0u64;
                        for (t, &bt_t) in bvec.iter().enumerate() {
                            acc = (acc + a[i][t] * bt_t) % l;
                        }
                        acc
                    })
                    .collect();
                let x = modl::solve_full_rank(&bt, &y, l);
                for i in 0..d {
                    c[i][j] = x[i];
                }
            }
            let cp = modl::charpoly(&c, l);
            let mut eigensplit = Vec::new();
            for lam in 0..l {
                if modl::poly_eval(&cp, lam, l) != 0 {
                    continue;
                }
                let mut shifted = c.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = (row[i] + l - lam) % l;
                }
                let ker = modl::kernel(shifted, d, l);
                if !ker.is_empty() {
                    // map back to length-k vectors
                    let sub: Vec<Vec<u64>> = ker
                        .iter()
                        .map(|kv| {
                            (0..k)
                                .map(|i| {
                                    let mut acc = 0u64;
                                    for (j, &kj) in kv.iter().enumerate() {
                                        acc = (acc + basis[j][i] * kj) % l;
                                    }
                                    acc
                                })
                                .collect()
                        })
                        .collect();
                    eigensplit.push(sub);
                }
            }
            let total: usize = eigensplit.iter().map(|s| s.len()).sum();
            if total != d {
                return Err(Error::Inconsistency(
                    "class matrix failed to act diagonalizably".into(),
                ));
            }
            next.extend(eigensplit);
        }
        subspaces = next;
    }
    if subspaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Inconsistency("eigenspaces not fully split".into()));
    }

    // normalize each eigenvector at the identity class (index 0)
    let mut omegas: Vec<Vec<u64>> = subspaces.into_iter().map(|mut s| s.pop().unwrap()).collect();
    for w in omegas.iter_mut() {
        let w0 = w[0];
        if w0 == 0 {
            return Err(Error::Inconsistency("central character vanishes at 1".into()));
        }
        let f = modl::inv(w0, l);
        for x in w.iter_mut() {
            *x = *x * f % l;
        }
    }

    // degrees from sum_s w(s) w(s*) / |C_s| = |G| / d^2
    let inv_classes = group.inverse_classes();
    let gsize = (group.order() as u64) % l;
    let mut degrees = Vec::with_capacity(k);
    for w in &omegas {
        let mut c = 0u64;
        for s in 0..k {
            let term = w[s] * w[inv_classes[s] as usize] % l * modl::inv(class_sizes[s] % l, l) % l;
            c = (c + term) % l;
        }
        let dsq = gsize * modl::inv(c, l) % l;
        let bound = (group.order() as f64).sqrt() as u64 + 1;
        let d = (1..=bound)
            .find(|&d| d * d % l == dsq)
            .ok_or_else(|| Error::Inconsistency("no degree matches eigenvalue data".into()))?;
        degrees.push(d);
    }

    // power maps: class of rep^t for t in 0..m
    let power_class: Vec<Vec<usize>> = (0..k)
        .map(|s| {
            let rep = group.class_rep(s);
            let mut acc = group.reduce(&crate::unigroup::UniMatrix::identity(&group.ctx));
            let mut row = Vec::with_capacity(m as usize);
            for _ in 0..m {
                row.push(group.class_of(&acc).unwrap() as usize);
                acc = group.mulg(&acc, rep);
            }
            row
        })
        .collect();

    // character values mod l, then lift by Fourier inversion over the power
    // map: the multiplicity of zeta^j in chi(g_s) is
    // (1/m) sum_t chi(g_s^t) z^{-jt}.
    let minv = modl::inv(m as u64 % l, l);
    let zinv = modl::inv(z, l);
    let mut irreducibles = Vec::with_capacity(k);
    for (idx, w) in omegas.iter().enumerate() {
        let d = degrees[idx];
        let chi_mod: Vec<u64> = (0..k)
            .map(|s| d * w[s] % l * modl::inv(class_sizes[s] % l, l) % l)
            .collect();
        let mut values = Vec::with_capacity(k);
        #[allow(clippy::needless_range_loop)]
        for s in 0..k {
            let mut val = CycloValue::zero(m);
            let mut total = 0u64;
            for j in 0..m as u64 {
                let mut acc = 0u64;
                for (t, &pc) in power_class[s].iter().enumerate() {
                    acc = (acc + chi_mod[pc] * modl::powmod(zinv, j * t as u64, l)) % l;
                }
                let nj = acc * minv % l;
                total += nj;
                if nj != 0 {
                    val = val.add(&CycloValue::root_pow(m, j as i64).scale(&Rat::from_integer(nj as i128)))?;
                }
            }
            if total != d {
                return Err(Error::Inconsistency(format!(
                    "lifted multiplicities sum to {total}, expected degree {d}"
                )));
            }
            values.push(val);
        }
        irreducibles.push(ClassFunction { group: group.clone(), values, m });
    }

    // canonical order: by degree, then by the value vector
    irreducibles.sort_by(|a, b| {
        let da = a.degree_int().unwrap_or(i128::MAX);
        let db = b.degree_int().unwrap_or(i128::MAX);
        da.cmp(&db).then_with(|| format!("{:?}", a.values).cmp(&format!("{:?}", b.values)))
    });

    let table = CharacterTable { group: group.clone(), irreducibles, m };
    table.verify()?;
    Ok(table)
}

impl CharacterTable {
    /// Serialization with class representatives, sizes and value coefficient
    /// vectors; stable across runs, suitable as a golden-file format.
    pub fn to_json(&self) -> serde_json::Value {
        let g = &self.group;
        let classes: Vec<serde_json::Value> = g
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| {
                serde_json::json!({
                    "rep": g.class_rep(i).display(&g.ctx),
                    "size": c.size,
                })
            })
            .collect();
        let irreducibles: Vec<serde_json::Value> = self
            .irreducibles
            .iter()
            .map(|chi| {
                let values: Vec<Vec<String>> = chi
                    .values
                    .iter()
                    .map(|v| {
                        v.coeffs()
                            .iter()
                            .map(|c| format!("{}/{}", c.numer(), c.denom()))
                            .collect()
                    })
                    .collect();
                serde_json::json!({
                    "degree": chi.degree_int().unwrap().to_string(),
                    "value_coeffs": values,
                })
            })
            .collect();
        serde_json::json!({
            "order": g.order(),
            "cyclotomic_order": self.m,
            "classes": classes,
            "irreducibles": irreducibles,
        })
    }

    /// Exact verification: row and column orthogonality and the degree sum.
    pub fn verify(&self) -> Result<()> {
        let k = self.group.class_count();
        if self.irreducibles.len() != k {
            return Err(Error::Inconsistency("irreducible count != class count".into()));
        }
        let mut degsum = 0i128;
        for chi in &self.irreducibles {
            degsum += chi.degree_int()?.pow(2);
        }
        if degsum != self.group.order() as i128 {
            return Err(Error::Inconsistency(format!(
                "sum of squared degrees {degsum} != |G| = {}",
                self.group.order()
            )));
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate() {
                let ip = a.inner(b)?;
                let expect = if i == j { Rat::from_integer(1) } else { Rat::zero() };
                if ip != expect {
                    return Err(Error::Inconsistency(format!(
                        "row orthogonality fails at ({i},{j}): {ip}"
                    )));
                }
            }
        }
        // column orthogonality: sum_chi chi(g_s) conj(chi(g_t)) = delta_st |C_G(g_s)|
        for s in 0..k {
            for t in 0..k {
                let mut acc = CycloValue::zero(self.m);
                for chi in &self.irreducibles {
                    acc = acc.add(&chi.values[s].mul(&chi.values[t].conj())?)?;
                }
                let expect = if s == t {
                    CycloValue::from_int(
                        self.group.order() as i128 / self.group.classes[s].size as i128,
                        self.m,
                    )
                } else {
                    CycloValue::zero(self.m)
                };
                if acc != expect {
                    return Err(Error::Inconsistency(format!(
                        "column orthogonality fails at ({s},{t})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Degrees, ascending.
    pub fn degrees(&self) -> Vec<i128> {
        let mut v: Vec<i128> =
            self.irreducibles.iter().map(|c| c.degree_int().unwrap()).collect();
        v.sort();
        v
    }

    /// All degrees are powers of q; returns the exponents.
    pub fn degree_exponents(&self, q: u32) -> Result<Vec<u32>> {
        self.degrees()
            .iter()
            .map(|&d| {
                let mut e = 0;
                let mut d = d;
                while d > 1 {
                    if d % q as i128 != 0 {
                        return Err(Error::Inconsistency(format!("degree {d} not a power of {q}")));
                    }
                    d /= q as i128;
                    e += 1;
                }
                Ok(e)
            })
            .collect()
    }
}

/// Multiplicities of each irreducible in a class function; every
/// inner product must be a nonnegative integer.
pub fn decompose(chi: &ClassFunction, table: &CharacterTable) -> Result<Vec<(usize, u64)>> {
    let mut out = Vec::new();
    let mut remaining = chi.clone();
    for (i, irr) in table.irreducibles.iter().enumerate() {
        let m = crate::charfn::multiplicity(chi, irr)?;
        if m > 0 {
            out.push((i, m));
            remaining = remaining.sub(&irr.scale_int(m as i128))?;
        }
    }
    if !remaining.is_zero() {
        return Err(Error::Inconsistency(
            "class function is not a nonnegative combination of irreducibles".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FqCtx;
    use crate::unigroup::{PatternGroup, UniCtx};

    fn table(q: u32, n: u8) -> CharacterTable {
        let ctx = UniCtx::new(Arc::new(FqCtx::for_order(q).unwrap()), n);
        let g = EnumeratedGroup::pattern(&ctx, &PatternGroup::full(n), 1 << 20).unwrap();
        character_table(&g, &Budgets::default()).unwrap()
    }

    #[test]
    fn u3_2_table() {
        let t = table(2, 3);
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn u3_3_table() {
        let t = table(3, 3);
        let mut lin = 0;
        let mut deg3 = 0;
        for d in t.degrees() {
            match d {
                1 => lin += 1,
                3 => deg3 += 1,
                other => panic!("unexpected degree {other}"),
            }
        }
        assert_eq!((lin, deg3), (9, 2));
    }

    #[test]
    fn u4_2_table() {
        let t = table(2, 4);
        assert_eq!(t.irreducibles.len(), 16);
        let sq: i128 = t.degrees().iter().map(|d| d * d).sum();
        assert_eq!(sq, 64);
        assert!(t.degree_exponents(2).is_ok());
    }

    #[test]
    fn regular_character_decomposition() {
        let t = table(2, 3);
        let reg = ClassFunction::regular(&t.group, t.m);
        let dec = decompose(&reg, &t).unwrap();
        assert_eq!(dec.len(), t.irreducibles.len());
        for (i, m) in dec {
            assert_eq!(m as i128, t.irreducibles[i].degree_int().unwrap());
        }
    }

    #[test]
    fn budget_rejection() {
        let ctx = UniCtx::new(Arc::new(FqCtx::for_order(2).unwrap()), 5);
        let g = EnumeratedGroup::pattern(&ctx, &PatternGroup::full(5), 1 << 20).unwrap();
        let tight = Budgets { table_elements: 100, ..Budgets::default() };
        assert!(matches!(
            character_table(&g, &tight),
            Err(Error::TableBudget(_))
        ));
    }

    #[test]
    fn u5_2_table_degrees_are_powers_of_two() {
        let t = table(2, 5);
        assert_eq!(t.irreducibles.len(), 61);
        let sq: i128 = t.degrees().iter().map(|d| d * d).sum();
        assert_eq!(sq, 1024);
        t.degree_exponents(2).unwrap();
    }
}
