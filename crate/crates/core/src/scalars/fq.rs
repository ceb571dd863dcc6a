//! Exact arithmetic in F_q, q = p^f, with table-driven operations.
//!
//! Elements are stored as `u8` codes in `0..q`; the code of an element with
//! coefficient vector (c_0, ..., c_{f-1}) over F_p is sum c_i p^i.  All
//! products and sums go through precomputed tables, so group enumeration
//! never touches polynomial arithmetic.

use crate::error::{Error, Result};

/// Built-in monic irreducible moduli for small (p, f), constant coefficient
/// first.  Degree-1 entries are implicit (q prime uses the fast path).
const MODULUS_TABLE: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),          // t^2 + t + 1
    (2, 3, &[1, 1, 0, 1]),       // t^3 + t + 1
    (2, 4, &[1, 1, 0, 0, 1]),    // t^4 + t + 1
    (2, 5, &[1, 0, 1, 0, 0, 1]), // t^5 + t^2 + 1
    (3, 2, &[1, 0, 1]),          // t^2 + 1
    (3, 3, &[1, 2, 0, 1]),       // t^3 + 2t + 1
    (5, 2, &[2, 0, 1]),          // t^2 + 2
    (7, 2, &[1, 0, 1]),          // t^2 + 1
];

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Field context for F_q.  Construction validates primality of p and
/// irreducibility of the modulus by trial factorization.
#[derive(Debug)]
pub struct FqCtx {
    pub p: u32,
    pub f: u32,
    pub q: u32,
    /// Monic modulus, constant-first, length f+1.
    pub modulus: Vec<u32>,
    add_t: Vec<u8>,
    mul_t: Vec<u8>,
    neg_t: Vec<u8>,
    inv_t: Vec<u8>,
    trace_t: Vec<u8>,
}

impl FqCtx {
    pub fn new(p: u32, f: u32, modulus: Option<Vec<u32>>) -> Result<FqCtx> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("p = {p} is not prime")));
        }
        if f == 0 {
            return Err(Error::InvalidField("f must be positive".into()));
        }
        let q = p
            .checked_pow(f)
            .filter(|&q| q <= 256)
            .ok_or_else(|| Error::InvalidField(format!("q = {p}^{f} too large (max 256)")))?;
        let modulus = match modulus {
            Some(m) => m,
            None if f == 1 => vec![0, 1],
            None => MODULUS_TABLE
                .iter()
                .find(|(tp, tf, _)| *tp == p && *tf == f)
                .map(|(_, _, m)| m.to_vec())
                .ok_or_else(|| {
                    Error::InvalidField(format!("no built-in modulus for p={p}, f={f}"))
                })?,
        };
        if modulus.len() != f as usize + 1 || modulus[f as usize] % p != 1 {
            return Err(Error::InvalidField(
                "modulus must be monic of degree f, constant-first".into(),
            ));
        }
        let modulus: Vec<u32> = modulus.iter().map(|c| c % p).collect();
        if f > 1 && !poly_irreducible(&modulus, p) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:?} is reducible over F_{p}"
            )));
        }

        let qe = q as usize;
        let mut ctx = FqCtx {
            p,
            f,
            q,
            modulus,
            add_t: vec![0; qe * qe],
            mul_t: vec![0; qe * qe],
            neg_t: vec![0; qe],
            inv_t: vec![0; qe],
            trace_t: vec![0; qe],
        };
        for a in 0..q {
            for b in 0..q {
                ctx.add_t[(a * q + b) as usize] = ctx.add_slow(a, b) as u8;
                ctx.mul_t[(a * q + b) as usize] = ctx.mul_slow(a, b) as u8;
            }
        }
        for a in 0..q {
            let mut neg = 0;
            for b in 0..q {
                if ctx.add_t[(a * q + b) as usize] == 0 {
                    neg = b;
                }
            }
            ctx.neg_t[a as usize] = neg as u8;
            if a != 0 {
                for b in 0..q {
                    if ctx.mul_t[(a * q + b) as usize] == 1 {
                        ctx.inv_t[a as usize] = b as u8;
                    }
                }
            }
        }
        // trace(x) = x + x^p + ... + x^(p^(f-1)), landing in the prime field
        for a in 0..q as u8 {
            let mut acc = 0u8;
            let mut power = a;
            for _ in 0..f {
                acc = ctx.add(acc, power);
                let mut xp = 1u8;
                for _ in 0..p {
                    xp = ctx.mul(xp, power);
                }
                power = xp;
            }
            assert!((acc as u32) < p, "trace must land in F_p");
            ctx.trace_t[a as usize] = acc;
        }
        Ok(ctx)
    }

    /// Field of prime order q (fast path) or prime power via the built-in table.
    pub fn for_order(q: u32) -> Result<FqCtx> {
        let (p, f) = factor_prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("q = {q} is not a prime power")))?;
        FqCtx::new(p, f, None)
    }

    fn coeffs(&self, a: u32) -> Vec<u32> {
        let mut v = vec![0; self.f as usize];
        let mut a = a;
        for c in v.iter_mut() {
            *c = a % self.p;
            a /= self.p;
        }
        v
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_coeffs(&self, v: &[u32]) -> u32 {
        v.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.from_coeffs(&sum)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let f = self.f as usize;
        let mut prod = vec![0u32; 2 * f];
        for (i, x) in ca.iter().enumerate() {
            for (j, y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce modulo the monic modulus
        for d in (f..2 * f).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for k in 0..f {
                let sub = (c * self.modulus[k]) % self.p;
                prod[d - f + k] = (prod[d - f + k] + self.p * self.p - sub) % self.p;
            }
        }
        self.from_coeffs(&prod[..f])
    }

    #[inline(always)]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add_t[a as usize * self.q as usize + b as usize]
    }
    #[inline(always)]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul_t[a as usize * self.q as usize + b as usize]
    }
    #[inline(always)]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg_t[a as usize]
    }
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }
    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::Invalid("division by zero in F_q".into()));
        }
        Ok(self.inv_t[a as usize])
    }
    pub fn div(&self, a: u8, b: u8) -> Result<u8> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// trace: F_q -> F_p, x + x^p + ... + x^{p^{f-1}}.
    #[inline]
    pub fn trace(&self, a: u8) -> u8 {
        self.trace_t[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }
    pub fn nonzero(&self) -> impl Iterator<Item = u8> {
        1..self.q as u8
    }
    /// An F_p-basis of F_q as additive group: 1, t, ..., t^{f-1}.
    pub fn additive_basis(&self) -> Vec<u8> {
        (0..self.f).map(|i| self.p.pow(i) as u8).collect()
    }
}

fn factor_prime_power(q: u32) -> Option<(u32, u32)> {
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut f = 0;
            let mut m = q;
            while m.is_multiple_of(p) {
                m /= p;
                f += 1;
            }
            return (m == 1).then_some((p, f));
        }
        p += 1;
    }
    (q > 1).then_some((q, 1))
}

/// Trial factorization: a monic polynomial of degree f >= 2 over F_p is
/// irreducible iff no monic polynomial of degree 1..=f/2 divides it.
fn poly_irreducible(m: &[u32], p: u32) -> bool {
    let f = m.len() - 1;
    for d in 1..=f / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut div = vec![0u32; d + 1];
            let mut c = code;
            for coeff in div.iter_mut().take(d) {
                *coeff = c % p;
                c /= p;
            }
            div[d] = 1;
            if poly_rem_is_zero(m, &div, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(num: &[u32], den: &[u32], p: u32) -> bool {
    let mut rem: Vec<u32> = num.iter().map(|c| c % p).collect();
    let dd = den.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - dd;
            for k in 0..=dd {
                rem[shift + k] = (rem[shift + k] + p * p - (lead * den[k]) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// Parses a `key=value` field description, e.g. `p=2 f=2 modulus=1,1,1`
/// (modulus constant-first, optional when a built-in entry exists).
pub fn parse_fq_config(text: &str) -> Result<FqCtx> {
    let mut p = None;
    let mut f = None;
    let mut modulus = None;
    for tok in text.split_whitespace() {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got `{tok}`")))?;
        match key {
            "p" => p = Some(value.parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?),
            "f" => f = Some(value.parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?),
            "modulus" => {
                let coeffs: std::result::Result<Vec<u32>, _> =
                    value.split(',').map(|c| c.trim().parse::<u32>()).collect();
                modulus = Some(coeffs.map_err(|e| Error::Parse(e.to_string()))?);
            }
            other => return Err(Error::Parse(format!("unknown key `{other}`"))),
        }
    }
    let p = p.ok_or_else(|| Error::Parse("missing p".into()))?;
    let f = f.ok_or_else(|| Error::Parse("missing f".into()))?;
    FqCtx::new(p, f, modulus)
}
