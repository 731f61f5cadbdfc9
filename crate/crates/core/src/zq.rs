//! Scalar arithmetic modulo a prime power `p^n`.
//!
//! Values are plain `u64` canonical representatives in `[0, p^n)`. The modulus
//! is kept in a [`Zq`] descriptor rather than in every element; all element
//! containers in this crate (Galois ring elements, chain ring elements) store
//! bare coordinates and route arithmetic through their context.  The modulus
//! is capped below `2^63` so that sums never overflow and products fit in
//! `u128`.

use crate::{Error, Result};

/// Modulus descriptor for `Z/p^n`. Primality of `p` is validated on creation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Zq {
    p: u64,
    n: u32,
    modulus: u64,
}

impl Zq {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::BadParameters("precision exponent must be positive".into()));
        }
        let modulus = checked_pow(p, n).ok_or(Error::ModulusTooLarge { p, n })?;
        Ok(Zq { p, n, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce_u64(&self, v: u64) -> u64 {
        v % self.modulus
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.modulus as i64) as u64
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        let s = x + y;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    pub fn neg(&self, x: u64) -> u64 {
        if x == 0 {
            0
        } else {
            self.modulus - x
        }
    }

    pub fn sub(&self, x: u64, y: u64) -> u64 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        (x as u128 * y as u128 % self.modulus as u128) as u64
    }

    pub fn pow(&self, x: u64, mut k: u64) -> u64 {
        let mut base = x;
        let mut acc = 1 % self.modulus;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// p-adic valuation of the canonical representative; `n` for zero.
    pub fn val(&self, x: u64) -> u32 {
        if x == 0 {
            return self.n;
        }
        let mut x = x;
        let mut v = 0;
        while x % self.p == 0 {
            x /= self.p;
            v += 1;
        }
        v
    }

    /// Integer quotient by `p` of the canonical representative.
    /// Callers must ensure `p | x`; any unit multiple of the result is an
    /// equally valid "division by p", this picks the representative one.
    pub fn div_p(&self, x: u64) -> u64 {
        debug_assert_eq!(x % self.p, 0);
        x / self.p
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `p^n` if it fits below `2^63`, else `None`.
pub(crate) fn checked_pow(p: u64, n: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(p)?;
        if acc >= 1 << 63 {
            return None;
        }
    }
    Some(acc)
}

pub(crate) fn pow_u128(p: u128, n: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Prime factorization by trial division; adequate for the group orders that
/// arise at enumerable sizes.
pub(crate) fn factorize(mut x: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d as u128 * d as u128 <= x as u128 {
        if x % d == 0 {
            let mut k = 0;
            while x % d == 0 {
                x /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if x > 1 {
        out.push((x, 1));
    }
    out
}

/// Order of `x` in a finite group of order `group_order`, given `pow`.
pub(crate) fn multiplicative_order<T, F>(one: &T, x: &T, group_order: u64, pow: F) -> u64
where
    T: PartialEq,
    F: Fn(&T, u64) -> T,
{
    let mut d = group_order;
    for (l, k) in factorize(group_order) {
        for _ in 0..k {
            if d % l == 0 && pow(x, d / l) == *one {
                d /= l;
            } else {
                break;
            }
        }
    }
    debug_assert!(pow(x, d) == *one);
    d
}
