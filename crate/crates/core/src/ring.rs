//! A minimal commutative-ring abstraction.
//!
//! Arithmetic contexts (scalars mod `p^n`, Galois rings, polynomial rings,
//! quotient towers) implement [`Ring`] so that dense polynomial arithmetic and
//! the division-free determinant are written once.  Elements carry no back
//! reference to their context; every operation takes the ring explicitly.

use crate::{Error, Result};
use std::fmt::Debug;

pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }
}

impl Ring for crate::zq::Zq {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.modulus()
    }
    fn add(&self, x: &u64, y: &u64) -> u64 {
        Zq::add(self, *x, *y)
    }
    fn neg(&self, x: &u64) -> u64 {
        Zq::neg(self, *x)
    }
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        Zq::mul(self, *x, *y)
    }
}

use crate::zq::Zq;

// --- dense univariate polynomials over an arbitrary ring ---
//
// A polynomial is a coefficient vector in ascending degree with no trailing
// zeros; the zero polynomial is the empty vector.

pub(crate) fn ptrim<R: Ring>(ring: &R, mut v: Vec<R::Elem>) -> Vec<R::Elem> {
    while v.last().map_or(false, |c| ring.is_zero(c)) {
        v.pop();
    }
    v
}

pub(crate) fn pdeg<T>(v: &[T]) -> Option<usize> {
    v.len().checked_sub(1)
}

pub(crate) fn padd<R: Ring>(ring: &R, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
    let mut out = Vec::with_capacity(x.len().max(y.len()));
    for i in 0..x.len().max(y.len()) {
        let c = match (x.get(i), y.get(i)) {
            (Some(a), Some(b)) => ring.add(a, b),
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.clone(),
            (None, None) => unreachable!(),
        };
        out.push(c);
    }
    ptrim(ring, out)
}

pub(crate) fn pneg<R: Ring>(ring: &R, x: &[R::Elem]) -> Vec<R::Elem> {
    x.iter().map(|c| ring.neg(c)).collect()
}

pub(crate) fn psub<R: Ring>(ring: &R, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
    padd(ring, x, &pneg(ring, y))
}

pub(crate) fn pmul<R: Ring>(ring: &R, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        if ring.is_zero(a) {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
        }
    }
    ptrim(ring, out)
}

pub(crate) fn pscale<R: Ring>(ring: &R, c: &R::Elem, x: &[R::Elem]) -> Vec<R::Elem> {
    ptrim(ring, x.iter().map(|a| ring.mul(c, a)).collect())
}

pub(crate) fn peval<R: Ring>(ring: &R, x: &[R::Elem], at: &R::Elem) -> R::Elem {
    let mut acc = ring.zero();
    for c in x.iter().rev() {
        acc = ring.add(&ring.mul(&acc, at), c);
    }
    acc
}

/// Quotient and remainder by a monic divisor.  Requires no inversions, so it
/// works over any ring implementing [`Ring`].
pub(crate) fn pdivmod_monic<R: Ring>(
    ring: &R,
    num: &[R::Elem],
    den: &[R::Elem],
) -> Result<(Vec<R::Elem>, Vec<R::Elem>)> {
    let d = match pdeg(den) {
        Some(d) if den[d] == ring.one() => d,
        _ => return Err(Error::NonMonicDivisor),
    };
    let mut rem: Vec<R::Elem> = num.to_vec();
    if rem.len() <= d {
        return Ok((Vec::new(), ptrim(ring, rem)));
    }
    let mut quo = vec![ring.zero(); rem.len() - d];
    for i in (d..rem.len()).rev() {
        let c = rem[i].clone();
        if ring.is_zero(&c) {
            continue;
        }
        quo[i - d] = c.clone();
        for j in 0..=d {
            let t = ring.mul(&c, &den[j]);
            rem[i - d + j] = ring.sub(&rem[i - d + j], &t);
        }
    }
    Ok((ptrim(ring, quo), ptrim(ring, rem)))
}

/// The polynomial ring over a base ring, itself a [`Ring`].  Used where the
/// determinant must be taken over polynomial entries.
pub struct PolyRing<'a, R: Ring>(pub &'a R);

impl<R: Ring> Ring for PolyRing<'_, R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Vec<R::Elem> {
        Vec::new()
    }
    fn one(&self) -> Vec<R::Elem> {
        vec![self.0.one()]
    }
    fn add(&self, x: &Vec<R::Elem>, y: &Vec<R::Elem>) -> Vec<R::Elem> {
        padd(self.0, x, y)
    }
    fn neg(&self, x: &Vec<R::Elem>) -> Vec<R::Elem> {
        pneg(self.0, x)
    }
    fn mul(&self, x: &Vec<R::Elem>, y: &Vec<R::Elem>) -> Vec<R::Elem> {
        pmul(self.0, x, y)
    }
    fn is_zero(&self, x: &Vec<R::Elem>) -> bool {
        x.is_empty()
    }
}

/// Division-free determinant.  Laplace expansion for small matrices, the
/// Samuelson–Berkowitz recursion beyond that.
pub fn determinant<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> Result<R::Elem> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquareMatrix);
    }
    if n == 0 {
        return Ok(ring.one());
    }
    if n <= 6 {
        let mut cols: Vec<usize> = (0..n).collect();
        Ok(det_laplace(ring, m, 0, &mut cols))
    } else {
        Ok(det_berkowitz(ring, m))
    }
}

fn det_laplace<R: Ring>(ring: &R, m: &[Vec<R::Elem>], row: usize, cols: &mut Vec<usize>) -> R::Elem {
    if cols.is_empty() {
        return ring.one();
    }
    let mut acc = ring.zero();
    for i in 0..cols.len() {
        let a = &m[row][cols[i]];
        if ring.is_zero(a) {
            continue;
        }
        let c = cols.remove(i);
        let minor = det_laplace(ring, m, row + 1, cols);
        cols.insert(i, c);
        let term = ring.mul(a, &minor);
        acc = if i % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

/// Characteristic polynomial coefficients (monic, descending) of the
/// submatrix indexed by `idx`, by the Berkowitz recursion.
fn berk_charpoly<R: Ring>(ring: &R, m: &[Vec<R::Elem>], idx: &[usize]) -> Vec<R::Elem> {
    let k = idx.len();
    if k == 0 {
        return vec![ring.one()];
    }
    let i0 = idx[0];
    let rest = &idx[1..];
    // Toeplitz column: [1, -a, -R C, -R M C, -R M^2 C, ...]
    let mut col = Vec::with_capacity(k + 1);
    col.push(ring.one());
    col.push(ring.neg(&m[i0][i0]));
    let mut w: Vec<R::Elem> = rest.iter().map(|&j| m[j][i0].clone()).collect();
    for step in 2..=k {
        if step > 2 {
            let next: Vec<R::Elem> = rest
                .iter()
                .map(|&r| {
                    let mut s = ring.zero();
                    for (t, &c) in rest.iter().enumerate() {
                        s = ring.add(&s, &ring.mul(&m[r][c], &w[t]));
                    }
                    s
                })
                .collect();
            w = next;
        }
        let mut dot = ring.zero();
        for (t, &c) in rest.iter().enumerate() {
            dot = ring.add(&dot, &ring.mul(&m[i0][c], &w[t]));
        }
        col.push(ring.neg(&dot));
    }
    let prev = berk_charpoly(ring, m, rest);
    // Multiply by the (k+1) x k lower-triangular Toeplitz matrix of `col`.
    let mut out = vec![ring.zero(); k + 1];
    for (i, o) in out.iter_mut().enumerate() {
        for (j, p) in prev.iter().enumerate() {
            if i >= j && i - j <= k {
                *o = ring.add(o, &ring.mul(&col[i - j], p));
            }
        }
    }
    out
}

fn det_berkowitz<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    let idx: Vec<usize> = (0..n).collect();
    let c = berk_charpoly(ring, m, &idx);
    // char(0) = det(-A) = (-1)^n det(A)
    if n % 2 == 0 {
        c[n].clone()
    } else {
        ring.neg(&c[n])
    }
}
