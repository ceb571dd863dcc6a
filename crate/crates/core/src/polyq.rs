//! Polynomials in the indeterminate q with exact integer coefficients, used
//! for symbolic constituent counts and mass identities.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer polynomial, constant coefficient first, normalized (no trailing
/// zeros).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyQ {
    coeffs: Vec<i64>,
}

impl PolyQ {
    pub fn zero() -> PolyQ {
        PolyQ { coeffs: vec![] }
    }

    pub fn int(c: i64) -> PolyQ {
        PolyQ { coeffs: vec![c] }.normalized()
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> PolyQ {
        PolyQ { coeffs }.normalized()
    }

    /// The monomial q.
    pub fn q() -> PolyQ {
        PolyQ { coeffs: vec![0, 1] }
    }

    /// q - 1.
    pub fn qm1() -> PolyQ {
        PolyQ { coeffs: vec![-1, 1] }
    }

    pub fn q_pow(e: u32) -> PolyQ {
        let mut c = vec![0i64; e as usize + 1];
        c[e as usize] = 1;
        PolyQ { coeffs: c }
    }

    fn normalized(mut self) -> PolyQ {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(0) + other.coeffs.get(i).copied().unwrap_or(0)
            })
            .collect();
        PolyQ { coeffs }.normalized()
    }

    pub fn sub(&self, other: &PolyQ) -> PolyQ {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> PolyQ {
        PolyQ { coeffs: self.coeffs.iter().map(|x| x * c).collect() }.normalized()
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        if self.is_zero() || other.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyQ { coeffs }.normalized()
    }

    pub fn pow(&self, e: u32) -> PolyQ {
        let mut acc = PolyQ::int(1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0i64, |acc, &c| acc * q + c)
    }

    pub fn eval_u128(&self, q: u128) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * q as i128 + c as i128)
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let p = PolyQ::qm1().pow(2).mul(&PolyQ::q_pow(2)); // q^2 (q-1)^2
        assert_eq!(p.eval(2), 4);
        assert_eq!(p.eval(3), 36);
        assert_eq!(p.coeffs(), &[0, 0, 1, -2, 1]);
        assert_eq!(PolyQ::int(5).add(&PolyQ::int(-5)), PolyQ::zero());
        let a = PolyQ::from_coeffs(vec![1, 2]);
        let b = PolyQ::from_coeffs(vec![-1, 1]);
        assert_eq!(a.mul(&b), PolyQ::from_coeffs(vec![-1, -1, 2]));
        assert_eq!(format!("{}", a.mul(&b)), "2*q^2 - q - 1");
    }
}
