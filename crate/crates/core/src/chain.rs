//! Finite chain rings presented by Eisenstein polynomials.
//!
//! A chain ring with invariants `(a, e, f, p)` and coefficient ring
//! `R = GR(p^n, f)`, `n = ceil(a/e)`, is realized as `R[Y] / (q, Y^a)` for an
//! Eisenstein polynomial `q` of degree `e` (monic, lower coefficients
//! divisible by `p`, constant term of valuation exactly one).  The class of
//! `Y` is a uniformizer `π` with `π^e ~ p`.
//!
//! Elements use a canonical normal form of `e` coefficients over `R`: writing
//! `m = a mod e` (with `m = e` when `e | a`), coefficient positions below `m`
//! carry full precision mod `p^n` while positions from `m` on are reduced mod
//! `p^(n-1)`, because `p^(n-1) Y^j` lies in the ideal `(q, Y^a)` exactly for
//! `j >= m`.  This gives `p^(f a)` distinct forms, one per ring element, and
//! makes equality structural.
//!
//! When `a = e` the ring is the equal-characteristic truncated polynomial
//! ring `k[Y]/(Y^a)`; no presenting polynomial exists (`n = 1` admits no
//! Eisenstein polynomials) and none is accepted.

use crate::galois::{GaloisRing, GrElem};
use crate::hensel;
use crate::poly::GrPoly;
use crate::ring;
use crate::zq::{self};
use crate::{Budget, Error, Result};
use serde::{Deserialize, Serialize};

/// The four numeric invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeParams {
    pub a: u32,
    pub e: u32,
    pub f: u32,
    pub p: u64,
}

impl TypeParams {
    pub fn new(a: u32, e: u32, f: u32, p: u64) -> Result<Self> {
        if a == 0 || e == 0 || f == 0 {
            return Err(Error::BadParameters("a, e, f must be positive".into()));
        }
        if e > a {
            return Err(Error::BadParameters(format!("e = {e} must not exceed a = {a}")));
        }
        if !zq::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(TypeParams { a, e, f, p })
    }

    /// Precision of the coefficient ring: `ceil(a/e)`, the additive order of
    /// 1 is `p^a0`.
    pub fn a0(&self) -> u32 {
        (self.a + self.e - 1) / self.e
    }

    /// Boundary of full-precision coefficient positions.
    pub fn m(&self) -> u32 {
        if self.a % self.e == 0 {
            self.e
        } else {
            self.a % self.e
        }
    }

    pub fn is_neat(&self) -> bool {
        self.a % self.e == 0
    }

    /// The canonical coefficient ring `GR(p^a0, f)`.
    pub fn coefficient_ring(&self) -> Result<GaloisRing> {
        GaloisRing::canonical(self.p, self.a0(), self.f as usize)
    }

    /// `p^(f a)`, saturating on overflow.
    pub fn ring_size(&self) -> u128 {
        zq::pow_u128(self.p as u128, self.f * self.a).unwrap_or(u128::MAX)
    }
}

impl std::fmt::Display for TypeParams {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fm, "({}, {}, {}, {})", self.a, self.e, self.f, self.p)
    }
}

/// A validated Eisenstein polynomial: monic of degree `e`, all lower
/// coefficients in `p R`, constant term of valuation exactly 1.  Ordering is
/// lexicographic on the serialized encoding (coefficients ascending).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EisensteinPoly {
    poly: GrPoly,
}

impl EisensteinPoly {
    pub fn new(rw: &GaloisRing, e: u32, poly: GrPoly) -> Result<Self> {
        if !is_eisenstein(rw, e, &poly) {
            return Err(Error::NotEisenstein { expected: e as usize });
        }
        Ok(EisensteinPoly { poly })
    }

    pub fn poly(&self) -> &GrPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap()
    }

    pub fn encode(&self) -> Vec<Vec<u64>> {
        self.poly.encode()
    }

    pub fn decode(rw: &GaloisRing, e: u32, data: &[Vec<u64>]) -> Result<Self> {
        EisensteinPoly::new(rw, e, GrPoly::decode(rw, data)?)
    }
}

/// Eisenstein test; always false at precision 1, where `p R - p^2 R` is
/// empty.
pub fn is_eisenstein(rw: &GaloisRing, e: u32, q: &GrPoly) -> bool {
    let e = e as usize;
    rw.n() >= 2
        && q.degree() == Some(e)
        && q.is_monic(rw)
        && q.coeffs()[..e].iter().all(|c| c.coords().len() == rw.f() && rw.val(c) >= 1)
        && rw.val(&q.coeffs()[0]) == 1
}

/// Element of a [`ChainRing`] in normal form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainElem {
    coeffs: Vec<GrElem>,
}

impl ChainElem {
    /// Coefficients over the coefficient ring, ascending powers of `π`,
    /// always of length `e`.
    pub fn coeffs(&self) -> &[GrElem] {
        &self.coeffs
    }

    pub fn encode(&self) -> Vec<Vec<u64>> {
        self.coeffs.iter().map(|c| c.encode()).collect()
    }
}

#[derive(Debug, Clone)]
pub struct ChainRing {
    params: TypeParams,
    rw: GaloisRing,
    m: u32,
    /// `p^(a0 - 1)`: the modulus of coefficient positions `>= m`.
    trunc_mod: u64,
    q: Option<EisensteinPoly>,
    /// `P` with `π P = p`; `None` in equal characteristic where `p = 0`.
    p_over_pi: Option<ChainElem>,
}

impl PartialEq for ChainRing {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params && self.q == other.q
    }
}

impl Eq for ChainRing {}

impl ChainRing {
    pub fn new(a: u32, e: u32, f: u32, p: u64, q: Option<EisensteinPoly>) -> Result<Self> {
        ChainRing::with_params(TypeParams::new(a, e, f, p)?, q)
    }

    pub fn with_params(params: TypeParams, q: Option<EisensteinPoly>) -> Result<Self> {
        let rw = params.coefficient_ring()?;
        let equal_char = params.a == params.e;
        let q = match (equal_char, q) {
            (true, None) => None,
            (true, Some(_)) => {
                return Err(Error::BadParameters(
                    "equal characteristic (a = e) takes no presenting polynomial".into(),
                ))
            }
            (false, None) => {
                return Err(Error::BadParameters(
                    "a > e requires a presenting Eisenstein polynomial".into(),
                ))
            }
            // re-validate against our own context: the polynomial may have
            // been built elsewhere
            (false, Some(q)) => Some(EisensteinPoly::decode(&rw, params.e, &q.encode())?),
        };
        let m = params.m();
        debug_assert_eq!((params.a0() - 1) * params.e + m, params.a);
        let trunc_mod = zq::checked_pow(params.p, params.a0() - 1).unwrap();
        let mut ring = ChainRing { params, rw, m, trunc_mod, q, p_over_pi: None };
        if let Some(q) = ring.q.clone() {
            let e = params.e as usize;
            let eta = ring.rw.div_p(&q.poly().coeffs()[0]);
            let neg_inv = ring.rw.neg(&ring.rw.inv_unit(&eta).expect("Eisenstein constant / p is a unit"));
            let mut base = vec![ring.rw.zero(); e];
            base[e - 1] = ring.rw.one();
            for j in 0..e.saturating_sub(1) {
                base[j] = ring.rw.add(&base[j], &q.poly().coeffs()[j + 1]);
            }
            let witness = ring.normalize(base.iter().map(|c| ring.rw.mul(&neg_inv, c)).collect());
            ring.p_over_pi = Some(witness);
            let p_elem = ring.embed_int(params.p as i64);
            assert_eq!(
                ring.mul(&ring.pi(), ring.p_over_pi.as_ref().unwrap()),
                p_elem,
                "π-division witness must satisfy π P = p"
            );
            assert!(
                self_check_root(&ring, q.poly()),
                "the presenting polynomial must annihilate π"
            );
        }
        Ok(ring)
    }

    pub fn params(&self) -> TypeParams {
        self.params
    }

    pub fn a(&self) -> u32 {
        self.params.a
    }

    pub fn e(&self) -> u32 {
        self.params.e
    }

    pub fn a0(&self) -> u32 {
        self.params.a0()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn galois(&self) -> &GaloisRing {
        &self.rw
    }

    pub fn presenting(&self) -> Option<&EisensteinPoly> {
        self.q.as_ref()
    }

    /// `P` with `π P = p`, when `a > e`.
    pub fn p_over_pi(&self) -> Option<&ChainElem> {
        self.p_over_pi.as_ref()
    }

    pub fn size(&self) -> u128 {
        self.params.ring_size()
    }

    // --- element constructors ---

    fn normalize(&self, mut coeffs: Vec<GrElem>) -> ChainElem {
        debug_assert_eq!(coeffs.len(), self.params.e as usize);
        for c in coeffs.iter_mut().skip(self.m as usize) {
            for v in c.coords.iter_mut() {
                *v %= self.trunc_mod;
            }
        }
        ChainElem { coeffs }
    }

    fn from_poly_vec(&self, mut v: Vec<GrElem>) -> ChainElem {
        let e = self.params.e as usize;
        match &self.q {
            Some(q) if v.len() > e => {
                let (_, r) = ring::pdivmod_monic(&self.rw, &v, q.poly().coeffs()).unwrap();
                v = r;
            }
            None => v.truncate(e),
            _ => {}
        }
        v.resize(e, self.rw.zero());
        self.normalize(v)
    }

    pub fn zero(&self) -> ChainElem {
        ChainElem { coeffs: vec![self.rw.zero(); self.params.e as usize] }
    }

    pub fn one(&self) -> ChainElem {
        self.embed_rw(&self.rw.one())
    }

    pub fn embed_int(&self, v: i64) -> ChainElem {
        self.embed_rw(&self.rw.embed_int(v))
    }

    /// Image of a coefficient-ring element.
    pub fn embed_rw(&self, x: &GrElem) -> ChainElem {
        let mut coeffs = vec![self.rw.zero(); self.params.e as usize];
        coeffs[0] = x.clone();
        self.normalize(coeffs)
    }

    /// The distinguished uniformizer: the class of `Y`.
    pub fn pi(&self) -> ChainElem {
        self.from_poly_vec(vec![self.rw.zero(), self.rw.one()])
    }

    pub fn from_coeff_vectors(&self, data: &[Vec<u64>]) -> Result<ChainElem> {
        if data.len() != self.params.e as usize {
            return Err(Error::DegreeMismatch {
                expected: self.params.e as usize - 1,
                found: data.len().checked_sub(1),
            });
        }
        let coeffs = data.iter().map(|c| self.rw.from_coords(c)).collect::<Result<Vec<_>>>()?;
        Ok(self.normalize(coeffs))
    }

    // --- arithmetic ---

    pub fn add(&self, x: &ChainElem, y: &ChainElem) -> ChainElem {
        self.normalize(
            x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| self.rw.add(a, b)).collect(),
        )
    }

    pub fn sub(&self, x: &ChainElem, y: &ChainElem) -> ChainElem {
        self.normalize(
            x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| self.rw.sub(a, b)).collect(),
        )
    }

    pub fn neg(&self, x: &ChainElem) -> ChainElem {
        self.normalize(x.coeffs.iter().map(|a| self.rw.neg(a)).collect())
    }

    pub fn mul(&self, x: &ChainElem, y: &ChainElem) -> ChainElem {
        self.from_poly_vec(ring::pmul(&self.rw, &x.coeffs, &y.coeffs))
    }

    pub fn pow(&self, x: &ChainElem, mut k: u64) -> ChainElem {
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

    pub fn is_zero(&self, x: &ChainElem) -> bool {
        x.coeffs.iter().all(|c| self.rw.is_zero(c))
    }

    pub fn is_unit(&self, x: &ChainElem) -> bool {
        self.rw.is_unit(&x.coeffs[0])
    }

    /// Residue of `x` in the residue field (an element of
    /// `galois().residue_field()`).
    pub fn residue(&self, x: &ChainElem) -> GrElem {
        self.rw.residue(&x.coeffs[0])
    }

    /// π-adic valuation: `ord(x) = max { i : x in 𝔭^i }`, with `ord(0) = a`.
    /// Computed from coefficient valuations; the terms `c_j π^j` of a normal
    /// form have pairwise distinct valuations `e val(c_j) + j`, so the
    /// minimum is exact.
    pub fn ord(&self, x: &ChainElem) -> u32 {
        let mut best = self.params.a;
        for (j, c) in x.coeffs.iter().enumerate() {
            if !self.rw.is_zero(c) {
                let v = self.params.e * self.rw.val(c) + j as u32;
                debug_assert!(v < self.params.a);
                best = best.min(v);
            }
        }
        best
    }

    /// Exact division by `π` of an element of the maximal ideal.  The result
    /// is one valid quotient (quotients differ by the annihilator of `π`, and
    /// agree whenever the quotient is multiplied by `π` again).
    pub fn div_pi(&self, x: &ChainElem) -> ChainElem {
        debug_assert!(self.rw.val(&x.coeffs[0]) >= 1, "div_pi needs an element of the maximal ideal");
        let e = self.params.e as usize;
        let mut shifted: Vec<GrElem> = x.coeffs[1..].to_vec();
        shifted.resize(e, self.rw.zero());
        let shifted = self.normalize(shifted);
        match &self.p_over_pi {
            None => shifted, // equal characteristic: p = 0, π = Y exactly
            Some(p_wit) => {
                let d = self.embed_rw(&self.rw.div_p(&x.coeffs[0]));
                self.add(&shifted, &self.mul(&d, p_wit))
            }
        }
    }

    /// The digit expansion `x = Σ r_i π^i` with all `r_i` in the Teichmuller
    /// set; unique, of length `a`.
    pub fn rho_expansion(&self, x: &ChainElem) -> Vec<GrElem> {
        let mut cur = x.clone();
        let mut out = Vec::with_capacity(self.params.a as usize);
        for _ in 0..self.params.a {
            let r = self.rw.teichmuller(&cur.coeffs[0]);
            let diff = self.sub(&cur, &self.embed_rw(&r));
            cur = self.div_pi(&diff);
            out.push(r);
        }
        out
    }

    pub fn from_expansion(&self, digits: &[GrElem]) -> Result<ChainElem> {
        if digits.len() != self.params.a as usize {
            return Err(Error::BadParameters(format!(
                "expansion must have exactly a = {} digits",
                self.params.a
            )));
        }
        for d in digits {
            let d = self.rw.from_coords(d.coords())?;
            if !self.rw.in_teichmuller_set(&d) {
                return Err(Error::NotATeichmullerRep);
            }
        }
        Ok(self.from_expansion_unchecked(digits))
    }

    fn from_expansion_unchecked(&self, digits: &[GrElem]) -> ChainElem {
        let pi = self.pi();
        let mut acc = self.zero();
        for d in digits.iter().rev() {
            acc = self.add(&self.mul(&acc, &pi), &self.embed_rw(d));
        }
        acc
    }

    // --- enumeration ---

    /// All elements, by counting through normal forms.
    pub fn elements(&self) -> impl Iterator<Item = ChainElem> + '_ {
        let f = self.params.f as usize;
        let full = self.rw.characteristic();
        let trunc = self.trunc_mod;
        let bounds: Vec<u64> = (0..self.params.e)
            .flat_map(|j| {
                let bound = if j < self.m { full } else { trunc };
                std::iter::repeat_n(bound, f)
            })
            .collect();
        let mut digits = vec![0u64; bounds.len()];
        let mut first = true;
        std::iter::from_fn(move || {
            if first {
                first = false;
            } else {
                let mut i = 0;
                loop {
                    if i == digits.len() {
                        return None;
                    }
                    digits[i] += 1;
                    if digits[i] < bounds[i] {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
            }
            let coeffs = digits.chunks(f).map(|c| GrElem { coords: c.to_vec() }).collect();
            Some(ChainElem { coeffs })
        })
    }

    /// `|U| = (p^f - 1) p^(f (a-2))` for `a >= 2`, else 0.
    pub fn uniformizer_count(&self) -> u128 {
        if self.params.a < 2 {
            return 0;
        }
        let qf = self.rw.residue_size() as u128;
        let tail = zq::pow_u128(qf, self.params.a - 2).unwrap_or(u128::MAX);
        (qf - 1).saturating_mul(tail)
    }

    /// The uniformizers: elements of valuation exactly 1, streamed directly
    /// in normal form.  For `e >= 2` an element has order 1 exactly when its
    /// position-1 coefficient is a unit and its constant coefficient lies in
    /// `pR_w`, higher positions being free; for `e = 1` it must be `p` times
    /// a unit.
    pub fn uniformizers(&self) -> impl Iterator<Item = ChainElem> + '_ {
        let f = self.params.f as usize;
        let full = self.rw.characteristic();
        let trunc = self.trunc_mod;
        let p = self.params.p;
        let grid = |bound: u64| -> Vec<GrElem> {
            let total = zq::pow_u128(bound as u128, f as u32).unwrap();
            (0..total)
                .map(|mut ix| {
                    let coords = (0..f)
                        .map(|_| {
                            let c = (ix % bound as u128) as u64;
                            ix /= bound as u128;
                            c
                        })
                        .collect();
                    GrElem { coords }
                })
                .collect()
        };
        let scale = |x: &GrElem| GrElem { coords: x.coords().iter().map(|c| c * p).collect() };
        let mut domains: Vec<Vec<GrElem>> = Vec::with_capacity(self.params.e as usize);
        if self.params.e == 1 {
            // the single coefficient is p times a unit
            let dom: Vec<GrElem> = grid(trunc)
                .into_iter()
                .filter(|d| self.rw.is_unit(d))
                .map(|d| scale(&d))
                .collect();
            domains.push(dom);
        } else {
            domains.push(grid(trunc).iter().map(&scale).collect());
            for j in 1..self.params.e {
                let dom = grid(if j < self.m { full } else { trunc });
                if j == 1 {
                    domains.push(dom.into_iter().filter(|x| self.rw.is_unit(x)).collect());
                } else {
                    domains.push(dom);
                }
            }
        }
        let count: u128 = domains.iter().map(|d| d.len() as u128).product();
        debug_assert_eq!(count, self.uniformizer_count());
        (0..count).map(move |mut ix| {
            let coeffs = domains
                .iter()
                .map(|d| {
                    let l = d.len() as u128;
                    let c = d[(ix % l) as usize].clone();
                    ix /= l;
                    c
                })
                .collect();
            ChainElem { coeffs }
        })
    }

    /// Evaluate a coefficient-ring polynomial at a ring element.
    pub fn eval_poly(&self, t: &GrPoly, x: &ChainElem) -> ChainElem {
        let mut acc = self.zero();
        for c in t.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, x), &self.embed_rw(c));
        }
        acc
    }

    pub fn roots_in_uniformizers(&self, t: &GrPoly) -> Vec<ChainElem> {
        self.uniformizers().filter(|u| self.is_zero(&self.eval_poly(t, u))).collect()
    }

    pub fn has_uniformizer_root(&self, t: &GrPoly) -> bool {
        self.uniformizers().any(|u| self.is_zero(&self.eval_poly(t, &u)))
    }

    /// Exhaustive root search over the whole ring, budget-guarded.
    pub fn roots_in_ring(&self, t: &GrPoly, budget: &Budget) -> Result<Vec<ChainElem>> {
        if self.size() > budget.max_ring {
            return Err(Error::BudgetExceeded {
                what: "|R|",
                actual: self.size(),
                limit: budget.max_ring,
            });
        }
        Ok(self.elements().filter(|x| self.is_zero(&self.eval_poly(t, x))).collect())
    }

    /// Multiplicative order of a unit; the unit group has order
    /// `(p^f - 1) p^(f (a - 1))`.
    pub fn unit_order(&self, x: &ChainElem) -> Result<u64> {
        if !self.is_unit(x) {
            return Err(Error::NotAUnit);
        }
        let qf = self.rw.residue_size() as u128;
        let order = (qf - 1)
            * zq::pow_u128(self.params.p as u128, self.params.f * (self.params.a - 1))
                .unwrap_or(u128::MAX);
        let order = u64::try_from(order).map_err(|_| Error::BudgetExceeded {
            what: "unit group order",
            actual: order,
            limit: u64::MAX as u128,
        })?;
        Ok(zq::multiplicative_order(&self.one(), x, order, |y, k| self.pow(y, k)))
    }

    // --- derived rings ---

    /// `R / 𝔭^i` for `0 < i < a`: equal characteristic for `i <= e`, else the
    /// chain ring of type `(i, e, f, p)` presented by `q` at reduced
    /// precision.
    pub fn quotient(&self, i: u32) -> Result<ChainRing> {
        if i == 0 || i >= self.params.a {
            return Err(Error::QuotientIndex { i, a: self.params.a });
        }
        let TypeParams { e, f, p, .. } = self.params;
        if i <= e {
            return ChainRing::new(i, i, f, p, None);
        }
        let sub = TypeParams::new(i, e, f, p)?;
        let rw2 = sub.coefficient_ring()?;
        let q = self.q.as_ref().expect("a > e here");
        let q2 = EisensteinPoly::new(&rw2, e, q.poly().reduce_to(&self.rw, &rw2))?;
        ChainRing::with_params(sub, Some(q2))
    }

    /// The smallest neat ring over this one: type `(a0 e, e, f, p)` with the
    /// same presenting polynomial.  Defined only when `e` does not divide
    /// `a`.
    pub fn neatification(&self) -> Result<ChainRing> {
        if self.params.is_neat() {
            return Err(Error::AlreadyNeat);
        }
        let TypeParams { e, f, p, .. } = self.params;
        ChainRing::new(self.params.a0() * e, e, f, p, self.q.clone())
    }

    pub fn info(&self) -> RingInfo {
        let TypeParams { a, f, p, .. } = self.params;
        let qf = self.rw.residue_size() as u128;
        let sizes = (0..=a)
            .map(|i| zq::pow_u128(p as u128, f * (a - i)).unwrap_or(u128::MAX))
            .collect();
        RingInfo {
            params: self.params,
            h: self.rw.h().to_vec(),
            q: self.q.as_ref().map(|q| q.encode()),
            order: self.size(),
            characteristic: self.rw.characteristic(),
            residue_order: self.rw.residue_size(),
            a0: self.params.a0(),
            m: self.m,
            neat: self.params.is_neat(),
            ideal_sizes: sizes,
            unit_count: self.size() - self.size() / qf,
            h0_order: self.rw.residue_size() - 1,
            h1_order: zq::pow_u128(p as u128, f * (a - 1)).unwrap_or(u128::MAX),
            uniformizer_count: self.uniformizer_count(),
        }
    }
}

fn self_check_root(ring: &ChainRing, q: &GrPoly) -> bool {
    ring.is_zero(&ring.eval_poly(q, &ring.pi()))
}

/// Closed-form structural data of a ring; all counts exact.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RingInfo {
    #[serde(flatten)]
    pub params: TypeParams,
    pub h: Vec<u64>,
    pub q: Option<Vec<Vec<u64>>>,
    pub order: u128,
    pub characteristic: u64,
    pub residue_order: u64,
    pub a0: u32,
    pub m: u32,
    pub neat: bool,
    /// `|𝔭^i|` for `i = 0..=a`.
    pub ideal_sizes: Vec<u128>,
    pub unit_count: u128,
    pub h0_order: u64,
    pub h1_order: u128,
    pub uniformizer_count: u128,
}

/// Derive the presenting polynomial of the ring `R_ω[π]` generated by a
/// uniformizer with `π^a = p π^e ε(π)`-style unit data: given `ε` over the
/// coefficient ring (unit constant term, degree below `a - e`), the monic
/// degree-`e` Eisenstein factor `g` of `Y^a + ε(Y) Y^e - p` is returned; `g`
/// is the minimal polynomial of such a uniformizer.
pub fn derive_presenting(a: u32, e: u32, f: u32, p: u64, eps: &GrPoly) -> Result<EisensteinPoly> {
    let params = TypeParams::new(a, e, f, p)?;
    if params.a == params.e {
        return Err(Error::EqualCharacteristic);
    }
    let rw = params.coefficient_ring()?;
    let eps = GrPoly::decode(&rw, &eps.encode())?;
    if eps.degree().map_or(true, |d| d as u32 >= a - e) {
        return Err(Error::DegreeMismatch {
            expected: (a - e - 1) as usize,
            found: eps.degree(),
        });
    }
    if !rw.is_unit(&eps.coeffs()[0]) {
        return Err(Error::NotAUnit);
    }
    // g0 = Y^a + eps(Y) Y^e - p
    let mut g0 = GrPoly::monomial(&rw, rw.one(), a as usize);
    g0 = g0.add(&rw, &eps.shift(e as usize));
    g0 = g0.sub(&rw, &GrPoly::constant(&rw, rw.embed_int(p as i64)));
    let k = rw.residue_field();
    let gbar = GrPoly::monomial(&k, k.one(), e as usize);
    let hbar = GrPoly::monomial(&k, k.one(), (a - e) as usize).add(&k, &eps.reduce_mod_p(&rw));
    let (g, _) = hensel::lift_coprime_factorization(&rw, &g0, &gbar, &hbar)?;
    EisensteinPoly::new(&rw, e, g)
}

/// Isomorphism test: types must agree, and the presenting polynomial of one
/// ring must have a root among the uniformizers of the other.
pub fn are_isomorphic(r1: &ChainRing, r2: &ChainRing, budget: &Budget) -> Result<bool> {
    if r1.params() != r2.params() {
        return Ok(false);
    }
    if r1.galois() != r2.galois() {
        return Err(Error::ContextMismatch);
    }
    match (r1.presenting(), r2.presenting()) {
        (None, None) => Ok(true),
        (Some(q1), Some(q2)) => {
            if q1 == q2 {
                return Ok(true);
            }
            if r1.uniformizer_count() > budget.max_ring {
                return Err(Error::BudgetExceeded {
                    what: "|U|",
                    actual: r1.uniformizer_count(),
                    limit: budget.max_ring,
                });
            }
            Ok(r1.has_uniformizer_root(q2.poly()))
        }
        _ => unreachable!("equal params fix equal characteristic"),
    }
}
