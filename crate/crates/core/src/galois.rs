//! The Galois ring `GR(p^n, f) = (Z/p^n)[X]/(h)`, `h` monic of degree `f` and
//! irreducible mod `p`.
//!
//! This is the coefficient ring over which everything else is built: for a
//! chain ring with invariants `(a, e, f, p)` the relevant precision is
//! `n = ceil(a/e)`.  Elements are coordinate vectors of length `f` in the
//! basis `1, b, ..., b^(f-1)` where `b` is the class of `X`; each coordinate
//! is a canonical representative mod `p^n`.
//!
//! Up to isomorphism the ring depends only on `(p, n, f)`, and the residue
//! field `GR(p, f)` is recovered by reducing both the coordinates and `h`
//! mod `p`.  The Teichmuller set (roots of `x^(p^f) = x`) gives canonical
//! multiplicative representatives of the residue field, computed by iterating
//! `x -> x^(p^f)` to its fixed point.

use crate::ring::{self, Ring};
use crate::zq::{self, Zq};
use crate::{Error, Result};
use std::sync::OnceLock;

/// Element of a [`GaloisRing`]: coordinates in the power basis of `b`,
/// ascending, always of length `f`.  Ordering is lexicographic on the
/// coordinates, which is also the order of the serialized encoding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrElem {
    pub(crate) coords: Vec<u64>,
}

impl GrElem {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn encode(&self) -> Vec<u64> {
        self.coords.clone()
    }
}

#[derive(Debug, Clone)]
pub struct GaloisRing {
    zq: Zq,
    f: usize,
    /// Monic, length `f + 1`, coefficients in `[0, p^n)`, irreducible mod `p`.
    h: Vec<u64>,
    /// The root of `h` congruent to `b^p` mod `p`; evaluating coordinates at
    /// this root is the Frobenius lift.
    b_frob: GrElem,
    rho: OnceLock<Vec<GrElem>>,
}

impl PartialEq for GaloisRing {
    fn eq(&self, other: &Self) -> bool {
        self.zq == other.zq && self.f == other.f && self.h == other.h
    }
}

impl Eq for GaloisRing {}

impl GaloisRing {
    /// Build `(Z/p^n)[X]/(h)` for a caller-supplied `h`.
    pub fn new(p: u64, n: u32, f: usize, h: &[u64]) -> Result<Self> {
        let zq = Zq::new(p, n)?;
        if f == 0 {
            return Err(Error::BadParameters("residue degree f must be positive".into()));
        }
        // Unit inversion and Teichmuller lifting exponentiate by values on
        // the order of p^(f + n - 1); insist that this fits a machine word.
        if zq::checked_pow(p, f as u32 + n - 1).is_none()
            || zq::pow_u128(p as u128, f as u32 * n).is_none()
        {
            return Err(Error::ModulusTooLarge { p, n: f as u32 * n });
        }
        if h.len() != f + 1 {
            return Err(Error::DegreeMismatch { expected: f, found: h.len().checked_sub(1) });
        }
        let h: Vec<u64> = h.iter().map(|&c| zq.reduce_u64(c)).collect();
        if h[f] != 1 {
            return Err(Error::NonMonicDivisor);
        }
        let zp = Zq::new(p, 1)?;
        let hbar: Vec<u64> = h.iter().map(|&c| c % p).collect();
        if !is_irreducible_mod_p(&zp, &hbar) {
            return Err(Error::NotIrreducible { p });
        }
        let mut ring = GaloisRing { zq, f, h, b_frob: GrElem { coords: vec![0; f] }, rho: OnceLock::new() };
        ring.b_frob = ring.frobenius_root();
        Ok(ring)
    }

    /// The canonical copy: `h` is [`canonical_irreducible`]`(p, f)` lifted
    /// coefficient-wise.
    pub fn canonical(p: u64, n: u32, f: usize) -> Result<Self> {
        let h = canonical_irreducible(p, f)?;
        GaloisRing::new(p, n, f, &h)
    }

    pub fn p(&self) -> u64 {
        self.zq.p()
    }

    pub fn n(&self) -> u32 {
        self.zq.n()
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn h(&self) -> &[u64] {
        &self.h
    }

    pub fn zq(&self) -> &Zq {
        &self.zq
    }

    /// `p^n`, the scalar modulus and also the additive order of 1.
    pub fn characteristic(&self) -> u64 {
        self.zq.modulus()
    }

    pub fn size(&self) -> u128 {
        zq::pow_u128(self.p() as u128, self.f as u32 * self.n()).unwrap()
    }

    pub fn residue_size(&self) -> u64 {
        zq::checked_pow(self.p(), self.f as u32).unwrap()
    }

    pub fn unit_count(&self) -> u128 {
        let q = self.residue_size() as u128;
        (q - 1) * zq::pow_u128(self.p() as u128, (self.n() - 1) * self.f as u32).unwrap()
    }

    /// Exponent multiple used for inversion: every unit satisfies
    /// `x^((p^f - 1) p^(n-1)) = 1`.
    fn unit_exponent(&self) -> u64 {
        (self.residue_size() - 1) * zq::checked_pow(self.p(), self.n() - 1).unwrap()
    }

    // --- element constructors ---

    pub fn zero(&self) -> GrElem {
        GrElem { coords: vec![0; self.f] }
    }

    pub fn one(&self) -> GrElem {
        self.embed_int(1)
    }

    /// The class of `X`.
    pub fn b(&self) -> GrElem {
        if self.f == 1 {
            GrElem { coords: vec![self.zq.neg(self.h[0])] }
        } else {
            let mut coords = vec![0; self.f];
            coords[1] = 1;
            GrElem { coords }
        }
    }

    pub fn embed_int(&self, v: i64) -> GrElem {
        let mut coords = vec![0; self.f];
        coords[0] = self.zq.reduce_i64(v);
        GrElem { coords }
    }

    pub fn from_coords(&self, coords: &[u64]) -> Result<GrElem> {
        if coords.len() != self.f {
            return Err(Error::DegreeMismatch { expected: self.f - 1, found: coords.len().checked_sub(1) });
        }
        Ok(GrElem { coords: coords.iter().map(|&c| self.zq.reduce_u64(c)).collect() })
    }

    // --- arithmetic ---

    pub fn add(&self, x: &GrElem, y: &GrElem) -> GrElem {
        debug_assert_eq!(x.coords.len(), self.f);
        GrElem {
            coords: x.coords.iter().zip(&y.coords).map(|(&a, &b)| self.zq.add(a, b)).collect(),
        }
    }

    pub fn neg(&self, x: &GrElem) -> GrElem {
        GrElem { coords: x.coords.iter().map(|&a| self.zq.neg(a)).collect() }
    }

    pub fn sub(&self, x: &GrElem, y: &GrElem) -> GrElem {
        GrElem {
            coords: x.coords.iter().zip(&y.coords).map(|(&a, &b)| self.zq.sub(a, b)).collect(),
        }
    }

    pub fn scalar_mul(&self, c: u64, x: &GrElem) -> GrElem {
        GrElem { coords: x.coords.iter().map(|&a| self.zq.mul(c, a)).collect() }
    }

    pub fn mul(&self, x: &GrElem, y: &GrElem) -> GrElem {
        let f = self.f;
        debug_assert!(x.coords.len() == f && y.coords.len() == f);
        let mut t = vec![0u64; 2 * f - 1];
        for (i, &a) in x.coords.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coords.iter().enumerate() {
                t[i + j] = self.zq.add(t[i + j], self.zq.mul(a, b));
            }
        }
        // reduce X^(f+k) via the monic h
        for i in (f..2 * f - 1).rev() {
            let c = t[i];
            if c == 0 {
                continue;
            }
            t[i] = 0;
            for j in 0..f {
                t[i - f + j] = self.zq.sub(t[i - f + j], self.zq.mul(c, self.h[j]));
            }
        }
        t.truncate(f);
        GrElem { coords: t }
    }

    pub fn pow(&self, x: &GrElem, mut k: u64) -> GrElem {
        let mut base = x.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, x: &GrElem) -> bool {
        x.coords.iter().all(|&c| c == 0)
    }

    /// Units are exactly the elements with nonzero residue.
    pub fn is_unit(&self, x: &GrElem) -> bool {
        x.coords.iter().any(|&c| c % self.p() != 0)
    }

    /// p-adic valuation: the largest `v` with `x` in `p^v GR`; `n` for zero.
    pub fn val(&self, x: &GrElem) -> u32 {
        x.coords.iter().map(|&c| self.zq.val(c)).min().unwrap()
    }

    pub fn inv_unit(&self, x: &GrElem) -> Result<GrElem> {
        if !self.is_unit(x) {
            return Err(Error::NotAUnit);
        }
        Ok(self.pow(x, self.unit_exponent() - 1))
    }

    /// Exact division by `p^k` of every coordinate representative.
    pub fn div_p(&self, x: &GrElem) -> GrElem {
        GrElem { coords: x.coords.iter().map(|&c| self.zq.div_p(c)).collect() }
    }

    // --- residue field and lifts ---

    /// The residue field `GR(p, f)` with the reduced `h`.
    pub fn residue_field(&self) -> GaloisRing {
        let hbar: Vec<u64> = self.h.iter().map(|&c| c % self.p()).collect();
        GaloisRing::new(self.p(), 1, self.f, &hbar).expect("reduction of a valid context")
    }

    /// Same `h`, lower precision `n2 <= n`.
    pub fn reduce_precision(&self, n2: u32) -> Result<GaloisRing> {
        if n2 == 0 || n2 > self.n() {
            return Err(Error::BadParameters(format!("precision {n2} out of range 1..={}", self.n())));
        }
        let m = zq::checked_pow(self.p(), n2).unwrap();
        let h: Vec<u64> = self.h.iter().map(|&c| c % m).collect();
        GaloisRing::new(self.p(), n2, self.f, &h)
    }

    /// Image of `x` under reduction into `target`, which must have the same
    /// `(p, f)` and `h` congruent to ours (lower precision).
    pub fn reduce_elem(&self, target: &GaloisRing, x: &GrElem) -> GrElem {
        debug_assert!(target.p() == self.p() && target.f == self.f && target.n() <= self.n());
        GrElem { coords: x.coords.iter().map(|&c| c % target.characteristic()).collect() }
    }

    pub fn residue(&self, x: &GrElem) -> GrElem {
        GrElem { coords: x.coords.iter().map(|&c| c % self.p()).collect() }
    }

    /// Coordinate-wise lift of a residue-field element (coordinates < p).
    pub fn lift_plain(&self, xbar: &GrElem) -> GrElem {
        debug_assert!(xbar.coords.iter().all(|&c| c < self.p()));
        GrElem { coords: xbar.coords.clone() }
    }

    /// The Teichmuller representative with the same residue as `x`: the fixed
    /// point of `y -> y^(p^f)` reached from `x`.  Convergence within `n + 1`
    /// iterations is asserted.
    pub fn teichmuller(&self, x: &GrElem) -> GrElem {
        let q = self.residue_size();
        let mut y = x.clone();
        for _ in 0..=self.n() {
            let y2 = self.pow(&y, q);
            if y2 == y {
                return y;
            }
            y = y2;
        }
        assert!(self.pow(&y, q) == y, "Teichmuller iteration failed to stabilize");
        y
    }

    pub fn teich_lift(&self, xbar: &GrElem) -> GrElem {
        self.teichmuller(&self.lift_plain(xbar))
    }

    /// Is `x` a Teichmuller representative (`x^(p^f) = x`)?
    pub fn in_teichmuller_set(&self, x: &GrElem) -> bool {
        self.pow(x, self.residue_size()) == *x
    }

    /// All `p^f` Teichmuller representatives, sorted, computed once per
    /// context.
    pub fn rho_set(&self) -> &[GrElem] {
        self.rho.get_or_init(|| {
            let p = self.p();
            let count = self.residue_size();
            let mut out = Vec::with_capacity(count as usize);
            for mut ix in 0..count {
                let coords: Vec<u64> = (0..self.f)
                    .map(|_| {
                        let d = ix % p;
                        ix /= p;
                        d
                    })
                    .collect();
                out.push(self.teichmuller(&GrElem { coords }));
            }
            out.sort();
            out.dedup();
            assert_eq!(out.len() as u64, count, "Teichmuller lifts must be distinct");
            out
        })
    }

    // --- Frobenius ---

    /// The root of `h` congruent to `b^p`, found by Newton lifting.
    fn frobenius_root(&self) -> GrElem {
        let b = self.b();
        let mut r = self.pow(&b, self.p());
        if self.n() == 1 {
            return r;
        }
        let h_at = |x: &GrElem| {
            // Horner with scalar coefficients of h (monic)
            let mut acc = self.one();
            for &c in self.h[..self.f].iter().rev() {
                acc = self.mul(&acc, x);
                acc.coords[0] = self.zq.add(acc.coords[0], c);
            }
            acc
        };
        let dh_at = |x: &GrElem| {
            let mut acc = self.zero();
            for i in (1..=self.f).rev() {
                acc = self.mul(&acc, x);
                let c = self.zq.mul(i as u64 % self.characteristic(), self.h[i]);
                acc.coords[0] = self.zq.add(acc.coords[0], c);
            }
            acc
        };
        for _ in 0..=self.n() {
            let v = h_at(&r);
            if self.is_zero(&v) {
                return r;
            }
            let d = self.inv_unit(&dh_at(&r)).expect("h is separable mod p");
            r = self.sub(&r, &self.mul(&v, &d));
        }
        assert!(self.is_zero(&h_at(&r)), "Newton iteration for the Frobenius root did not converge");
        r
    }

    /// The Frobenius automorphism: the unique ring automorphism reducing to
    /// `x -> x^p` on the residue field.  Coordinates are re-evaluated at the
    /// lifted root `b_frob`.
    pub fn frobenius(&self, x: &GrElem) -> GrElem {
        let mut acc = self.zero();
        for &c in x.coords.iter().rev() {
            acc = self.mul(&acc, &self.b_frob);
            acc.coords[0] = self.zq.add(acc.coords[0], c);
        }
        acc
    }

    // --- enumeration and unit-group structure ---

    pub fn enumerate(&self) -> impl Iterator<Item = GrElem> + '_ {
        let m = self.characteristic() as u128;
        (0..self.size()).map(move |mut ix| {
            let coords: Vec<u64> = (0..self.f)
                .map(|_| {
                    let d = (ix % m) as u64;
                    ix /= m;
                    d
                })
                .collect();
            GrElem { coords }
        })
    }

    /// Multiplicative order of a unit.
    pub fn unit_order(&self, x: &GrElem) -> Result<u64> {
        if !self.is_unit(x) {
            return Err(Error::NotAUnit);
        }
        let order = self.unit_count();
        let order = u64::try_from(order)
            .map_err(|_| Error::BudgetExceeded { what: "unit group order", actual: order, limit: u64::MAX as u128 })?;
        Ok(zq::multiplicative_order(&self.one(), x, order, |y, k| self.pow(y, k)))
    }
}

impl Ring for GaloisRing {
    type Elem = GrElem;

    fn zero(&self) -> GrElem {
        GaloisRing::zero(self)
    }
    fn one(&self) -> GrElem {
        GaloisRing::one(self)
    }
    fn add(&self, x: &GrElem, y: &GrElem) -> GrElem {
        GaloisRing::add(self, x, y)
    }
    fn neg(&self, x: &GrElem) -> GrElem {
        GaloisRing::neg(self, x)
    }
    fn mul(&self, x: &GrElem, y: &GrElem) -> GrElem {
        GaloisRing::mul(self, x, y)
    }
    fn sub(&self, x: &GrElem, y: &GrElem) -> GrElem {
        GaloisRing::sub(self, x, y)
    }
    fn is_zero(&self, x: &GrElem) -> bool {
        GaloisRing::is_zero(self, x)
    }
}

/// Division-free determinant of a matrix over this ring.
pub fn det_division_free(ring: &GaloisRing, m: &[Vec<GrElem>]) -> Result<GrElem> {
    ring::determinant(ring, m)
}

/// The canonical monic irreducible of degree `f` over `F_p`: smallest integer
/// encoding `sum c_i p^i` over the non-leading coefficients.  Depends only on
/// `(p, f)`, so every precision level of the same context agrees on `h`.
pub fn canonical_irreducible(p: u64, f: usize) -> Result<Vec<u64>> {
    let zp = Zq::new(p, 1)?;
    if f == 0 {
        return Err(Error::BadParameters("degree must be positive".into()));
    }
    let total = zq::pow_u128(p as u128, f as u32)
        .ok_or(Error::ModulusTooLarge { p, n: f as u32 })?;
    for mut code in 0..total {
        let mut h: Vec<u64> = (0..f)
            .map(|_| {
                let d = (code % p as u128) as u64;
                code /= p as u128;
                d
            })
            .collect();
        h.push(1);
        if is_irreducible_mod_p(&zp, &h) {
            return Ok(h);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by all monic polynomials of degree up to `f/2`.
fn is_irreducible_mod_p(zp: &Zq, h: &[u64]) -> bool {
    let f = h.len() - 1;
    debug_assert_eq!(h[f], 1);
    if f == 1 {
        return true;
    }
    let p = zp.p();
    for d in 1..=f / 2 {
        let count = zq::pow_u128(p as u128, d as u32).unwrap();
        for mut code in 0..count {
            let mut g: Vec<u64> = (0..d)
                .map(|_| {
                    let c = (code % p as u128) as u64;
                    code /= p as u128;
                    c
                })
                .collect();
            g.push(1);
            let (_, r) = ring::pdivmod_monic(zp, h, &g).unwrap();
            if r.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Cyclic factor orders of the unit group of `GR(p^n, f)`, trivial factors
/// dropped.  The first entry, when present, is the residue part `p^f - 1`;
/// the rest describe the one-units.
pub fn unit_group_invariants(p: u64, f: usize, n: u32) -> Result<Vec<u64>> {
    if !zq::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if f == 0 || n == 0 {
        return Err(Error::BadParameters("f and n must be positive".into()));
    }
    let q1 = zq::checked_pow(p, f as u32).ok_or(Error::ModulusTooLarge { p, n: f as u32 })? - 1;
    let pk = |k: u32| zq::checked_pow(p, k).ok_or(Error::ModulusTooLarge { p, n: k });
    let mut out = Vec::new();
    if q1 > 1 {
        out.push(q1);
    }
    if n == 1 {
        return Ok(out);
    }
    if p == 2 {
        for _ in 0..f - 1 {
            out.push(pk(n - 1)?);
        }
        if n >= 3 {
            out.push(pk(n - 2)?);
        }
        out.push(2);
    } else {
        for _ in 0..f {
            out.push(pk(n - 1)?);
        }
    }
    Ok(out)
}

/// Exhaustively confirm that the multiplicative-order histogram of the unit
/// group matches the direct product of cyclic groups given by
/// [`unit_group_invariants`].
pub fn verify_unit_invariants(ring: &GaloisRing, max_size: u128) -> Result<bool> {
    if ring.size() > max_size {
        return Err(Error::BudgetExceeded { what: "|GR|", actual: ring.size(), limit: max_size });
    }
    use std::collections::BTreeMap;
    let mut actual: BTreeMap<u64, u128> = BTreeMap::new();
    for x in ring.enumerate() {
        if ring.is_unit(&x) {
            *actual.entry(ring.unit_order(&x)?).or_insert(0) += 1;
        }
    }
    let invariants = unit_group_invariants(ring.p(), ring.f(), ring.n())?;
    let mut predicted: BTreeMap<u64, u128> = BTreeMap::new();
    predicted.insert(1, 1);
    for d in invariants {
        let mut next: BTreeMap<u64, u128> = BTreeMap::new();
        for o2 in divisors(d) {
            let cnt = euler_phi(o2) as u128;
            for (&o1, &c1) in &predicted {
                *next.entry(lcm(o1, o2)).or_insert(0) += c1 * cnt;
            }
        }
        predicted = next;
    }
    Ok(actual == predicted)
}

fn divisors(x: u64) -> Vec<u64> {
    let mut out = vec![1];
    for (q, k) in zq::factorize(x) {
        let prev = out.clone();
        let mut qe = 1;
        for _ in 0..k {
            qe *= q;
            out.extend(prev.iter().map(|d| d * qe));
        }
    }
    out
}

fn euler_phi(x: u64) -> u64 {
    let mut out = x;
    for (q, _) in zq::factorize(x) {
        out = out / q * (q - 1);
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
