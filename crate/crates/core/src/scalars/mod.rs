//! Scalar arithmetic: finite fields F_q and the cyclotomic value ring, plus
//! the fixed nontrivial additive character of F_q.

pub mod cyclo;
pub mod fq;

pub use cyclo::{euler_phi, rat, CycloValue, Rat};
pub use fq::{parse_fq_config, FqCtx};

/// The fixed nontrivial additive character phi: x -> zeta_p^{trace(x)}.
/// Multiplicative over addition and surjective onto the p-th roots of unity.
pub fn additive_char(fq: &FqCtx, x: u8) -> CycloValue {
    CycloValue::root_pow(fq.p, fq.trace(x) as i64)
}

/// Same character expressed at a larger cyclotomic order m (p | m).
pub fn additive_char_at(fq: &FqCtx, x: u8, m: u32) -> CycloValue {
    debug_assert_eq!(m % fq.p, 0);
    CycloValue::root_pow(m, fq.trace(x) as i64 * (m / fq.p) as i64)
}

/// Smallest cyclotomic order containing all character values of a group of
/// exponent dividing p^ceil(log_p n): used as the per-computation order.
pub fn ambient_order(p: u32, n: u32) -> u32 {
    let mut m = 1;
    while m < n {
        m *= p;
    }
    m.max(p)
}
