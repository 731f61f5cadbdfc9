//! Hensel lifting over a Galois ring.
//!
//! Two lifts are provided: a coprime factorization of a monic polynomial
//! lifts from the residue field to full precision (quadratically, updating
//! the Bezout witness each round), and a simple root lifts by Newton
//! iteration.  Both lifted objects are unique, which the callers rely on:
//! re-running with a different iteration schedule cannot change the answer.

use crate::galois::{GaloisRing, GrElem};
use crate::poly::GrPoly;
use crate::{Error, Result};

/// Bezout data over the residue field: `u g + v h = 1`.
#[derive(Debug, Clone)]
pub struct CoprimeWitness {
    pub u: GrPoly,
    pub v: GrPoly,
}

/// Extended Euclid over the residue field of `rw` (so `k.n() == 1`).
/// Fails with [`Error::NotCoprime`] when the gcd is not a unit.
pub fn bezout_witness(k: &GaloisRing, g: &GrPoly, h: &GrPoly) -> Result<CoprimeWitness> {
    debug_assert_eq!(k.n(), 1);
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut u0, mut u1) = (GrPoly::constant(k, k.one()), GrPoly::zero());
    let (mut v0, mut v1) = (GrPoly::zero(), GrPoly::constant(k, k.one()));
    while !r1.is_zero() {
        let lead = r1.coeffs().last().unwrap().clone();
        let inv = k.inv_unit(&lead).expect("nonzero leading coefficient over a field");
        let monic = r1.scale(k, &inv);
        let (q_monic, rem) = r0.divmod_monic(k, &monic)?;
        let q = q_monic.scale(k, &inv);
        (r0, r1) = (r1, rem);
        let us = u0.sub(k, &q.mul(k, &u1));
        (u0, u1) = (u1, us);
        let vs = v0.sub(k, &q.mul(k, &v1));
        (v0, v1) = (v1, vs);
    }
    if r0.degree() != Some(0) {
        return Err(Error::NotCoprime);
    }
    let inv = k.inv_unit(&r0.coeffs()[0]).expect("unit gcd");
    let witness = CoprimeWitness { u: u0.scale(k, &inv), v: v0.scale(k, &inv) };
    debug_assert_eq!(
        witness.u.mul(k, g).add(k, &witness.v.mul(k, h)),
        GrPoly::constant(k, k.one())
    );
    Ok(witness)
}

/// Given monic `f` over `rw` and a coprime factorization `f = gbar hbar` of
/// its reduction over the residue field, return the unique pair of monic
/// lifts `(g, h)` with `f = g h` exactly and `g = gbar`, `h = hbar` mod `p`.
pub fn lift_coprime_factorization(
    rw: &GaloisRing,
    f: &GrPoly,
    gbar: &GrPoly,
    hbar: &GrPoly,
) -> Result<(GrPoly, GrPoly)> {
    let k = rw.residue_field();
    if !f.is_monic(rw) || !gbar.is_monic(&k) || !hbar.is_monic(&k) {
        return Err(Error::NonMonicDivisor);
    }
    let dg = gbar.degree().unwrap();
    let dh = hbar.degree().unwrap();
    if f.degree() != Some(dg + dh) {
        return Err(Error::DegreeMismatch { expected: dg + dh, found: f.degree() });
    }
    if f.reduce_mod_p(rw) != gbar.mul(&k, hbar) {
        return Err(Error::ReductionMismatch);
    }
    let witness = bezout_witness(&k, gbar, hbar)?;

    let mut g = gbar.lift_plain(rw);
    let mut h = hbar.lift_plain(rw);
    if rw.n() == 1 {
        return Ok((g, h));
    }
    let mut s = witness.u.lift_plain(rw);
    let mut t = witness.v.lift_plain(rw);
    let one = GrPoly::constant(rw, rw.one());

    // Invariant at precision p^m: f = g h and s g + t h = 1, both mod p^m.
    // Each round doubles m (capped at n), correcting factors first and the
    // witness second.  Working mod p^(2m) makes the degree bookkeeping exact:
    // correction coefficients above the target degrees vanish identically
    // after reduction.
    let mut mexp = 1u32;
    while mexp < rw.n() {
        let m2 = (2 * mexp).min(rw.n());
        let modulus = reduce_ctx(rw, m2);
        let red = |x: &GrPoly| x.reduce_to(rw, &modulus).lift_into(rw);

        let e = red(&f.sub(rw, &g.mul(rw, &h)));
        let (q, r) = s.mul(rw, &e).divmod_monic(rw, &h)?;
        g = red(&g.add(rw, &t.mul(rw, &e)).add(rw, &q.mul(rw, &g)));
        h = red(&h.add(rw, &r));
        assert!(g.degree() == Some(dg) && g.is_monic(rw), "factor lift lost its degree");
        assert!(h.degree() == Some(dh) && h.is_monic(rw), "factor lift lost its degree");

        if m2 < rw.n() {
            let b = red(&s.mul(rw, &g).add(rw, &t.mul(rw, &h)).sub(rw, &one));
            let (c, d) = s.mul(rw, &b).divmod_monic(rw, &h)?;
            s = red(&s.sub(rw, &d));
            t = red(&t.sub(rw, &t.mul(rw, &b)).sub(rw, &c.mul(rw, &g)));
        }
        mexp = m2;
    }
    assert_eq!(g.mul(rw, &h), *f, "lift must recover f exactly");
    Ok((g, h))
}

fn reduce_ctx(rw: &GaloisRing, n2: u32) -> GaloisRing {
    rw.reduce_precision(n2).expect("precision within range")
}

impl GrPoly {
    /// Plain re-lift used by the Hensel loop: coordinates of a reduced copy
    /// are already canonical in the larger ring.
    fn lift_into(&self, rw: &GaloisRing) -> GrPoly {
        GrPoly::decode(rw, &self.encode()).expect("reduced coordinates embed")
    }
}

/// Newton lifting of a simple root: `rbar` is a residue-field root of the
/// reduction of `f`; returns the unique root of `f` in `rw` over it.
pub fn lift_root(rw: &GaloisRing, f: &GrPoly, rbar: &GrElem) -> Result<GrElem> {
    let k = rw.residue_field();
    let fbar = f.reduce_mod_p(rw);
    if !k.is_zero(&fbar.eval(&k, rbar)) {
        return Err(Error::NotARoot);
    }
    if !k.is_unit(&fbar.derivative(&k).eval(&k, rbar)) {
        return Err(Error::RootNotSimple);
    }
    let df = f.derivative(rw);
    let mut r = rw.lift_plain(rbar);
    for _ in 0..=rw.n() {
        let v = f.eval(rw, &r);
        if rw.is_zero(&v) {
            return Ok(r);
        }
        let inv = rw.inv_unit(&df.eval(rw, &r)).expect("derivative stays a unit");
        r = rw.sub(&r, &rw.mul(&v, &inv));
    }
    assert!(rw.is_zero(&f.eval(rw, &r)), "Newton iteration did not converge");
    Ok(r)
}
