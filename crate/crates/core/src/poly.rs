//! Dense univariate polynomials over a [`GaloisRing`].
//!
//! Coefficients ascend by degree and carry no trailing zeros, so equality and
//! ordering are structural.  The indeterminate has no fixed name; the same
//! type serves `h(X)`, Eisenstein polynomials in `Y`, and resultants in `Z`.

use crate::galois::{GaloisRing, GrElem};
use crate::ring;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrPoly {
    coeffs: Vec<GrElem>,
}

impl GrPoly {
    pub fn zero() -> GrPoly {
        GrPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(ring: &GaloisRing, coeffs: Vec<GrElem>) -> GrPoly {
        GrPoly { coeffs: ring::ptrim(ring, coeffs) }
    }

    pub fn constant(ring: &GaloisRing, c: GrElem) -> GrPoly {
        GrPoly::from_coeffs(ring, vec![c])
    }

    /// Scalar coefficients, ascending: `[-2, 0, 1]` is `Y^2 - 2`.
    pub fn from_int_coeffs(ring: &GaloisRing, coeffs: &[i64]) -> GrPoly {
        GrPoly::from_coeffs(ring, coeffs.iter().map(|&c| ring.embed_int(c)).collect())
    }

    /// The monomial `c Y^k`.
    pub fn monomial(ring: &GaloisRing, c: GrElem, k: usize) -> GrPoly {
        let mut coeffs = vec![ring.zero(); k];
        coeffs.push(c);
        GrPoly::from_coeffs(ring, coeffs)
    }

    pub fn coeffs(&self) -> &[GrElem] {
        &self.coeffs
    }

    /// Coefficient of degree `i`, zero beyond the length.
    pub fn coeff(&self, ring: &GaloisRing, i: usize) -> GrElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self, ring: &GaloisRing) -> bool {
        self.coeffs.last().map_or(false, |c| *c == ring.one())
    }

    pub fn add(&self, ring: &GaloisRing, other: &GrPoly) -> GrPoly {
        GrPoly { coeffs: ring::padd(ring, &self.coeffs, &other.coeffs) }
    }

    pub fn sub(&self, ring: &GaloisRing, other: &GrPoly) -> GrPoly {
        GrPoly { coeffs: ring::psub(ring, &self.coeffs, &other.coeffs) }
    }

    pub fn neg(&self, ring: &GaloisRing) -> GrPoly {
        GrPoly { coeffs: ring::pneg(ring, &self.coeffs) }
    }

    pub fn mul(&self, ring: &GaloisRing, other: &GrPoly) -> GrPoly {
        GrPoly { coeffs: ring::pmul(ring, &self.coeffs, &other.coeffs) }
    }

    pub fn scale(&self, ring: &GaloisRing, c: &GrElem) -> GrPoly {
        GrPoly { coeffs: ring::pscale(ring, c, &self.coeffs) }
    }

    /// Multiply by `Y^k`.
    pub fn shift(&self, k: usize) -> GrPoly {
        if self.is_zero() {
            return GrPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + k);
        // a fresh zero needs a ring; splice plain zero coords of matching width
        let width = self.coeffs[0].coords.len();
        coeffs.resize(k, GrElem { coords: vec![0; width] });
        coeffs.extend(self.coeffs.iter().cloned());
        GrPoly { coeffs }
    }

    /// Drop all terms of degree `cap` and above.
    pub fn truncate(&self, ring: &GaloisRing, cap: usize) -> GrPoly {
        GrPoly { coeffs: ring::ptrim(ring, self.coeffs.iter().take(cap).cloned().collect()) }
    }

    pub fn eval(&self, ring: &GaloisRing, at: &GrElem) -> GrElem {
        ring::peval(ring, &self.coeffs, at)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn divmod_monic(&self, ring: &GaloisRing, den: &GrPoly) -> Result<(GrPoly, GrPoly)> {
        let (q, r) = ring::pdivmod_monic(ring, &self.coeffs, &den.coeffs)?;
        Ok((GrPoly { coeffs: q }, GrPoly { coeffs: r }))
    }

    pub fn derivative(&self, ring: &GaloisRing) -> GrPoly {
        if self.coeffs.len() <= 1 {
            return GrPoly::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| ring.scalar_mul((i as u64 + 1) % ring.characteristic(), c))
            .collect();
        GrPoly { coeffs: ring::ptrim(ring, coeffs) }
    }

    /// `self(inner(Y))` with all arithmetic truncated below degree `cap`.
    pub fn compose_truncated(&self, ring: &GaloisRing, inner: &GrPoly, cap: usize) -> GrPoly {
        let mut acc = GrPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(ring, inner).truncate(ring, cap);
            acc = acc.add(ring, &GrPoly::constant(ring, c.clone()));
        }
        acc
    }

    /// Image over the residue field of `ring`.
    pub fn reduce_mod_p(&self, ring: &GaloisRing) -> GrPoly {
        let k = ring.residue_field();
        GrPoly::from_coeffs(&k, self.coeffs.iter().map(|c| ring.residue(c)).collect())
    }

    /// Coordinate-wise plain lift of a residue-field polynomial into `ring`.
    pub fn lift_plain(&self, ring: &GaloisRing) -> GrPoly {
        GrPoly::from_coeffs(ring, self.coeffs.iter().map(|c| ring.lift_plain(c)).collect())
    }

    /// Image in a lower-precision copy of the same context.
    pub fn reduce_to(&self, ring: &GaloisRing, target: &GaloisRing) -> GrPoly {
        GrPoly::from_coeffs(target, self.coeffs.iter().map(|c| ring.reduce_elem(target, c)).collect())
    }

    pub fn encode(&self) -> Vec<Vec<u64>> {
        self.coeffs.iter().map(|c| c.encode()).collect()
    }

    pub fn decode(ring: &GaloisRing, data: &[Vec<u64>]) -> Result<GrPoly> {
        let coeffs = data.iter().map(|c| ring.from_coords(c)).collect::<Result<Vec<_>>>()?;
        Ok(GrPoly::from_coeffs(ring, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z8() -> GaloisRing {
        GaloisRing::canonical(2, 3, 1).unwrap()
    }

    #[test]
    fn divmod_example() {
        // (Y^4 + 2Y^2 - 3) / (Y^2 - 2) = Y^2 + 4 rem 5 over Z/8
        let ring = z8();
        let num = GrPoly::from_int_coeffs(&ring, &[-3, 0, 2, 0, 1]);
        let den = GrPoly::from_int_coeffs(&ring, &[-2, 0, 1]);
        let (q, r) = num.divmod_monic(&ring, &den).unwrap();
        assert_eq!(q, GrPoly::from_int_coeffs(&ring, &[4, 0, 1]));
        assert_eq!(r, GrPoly::from_int_coeffs(&ring, &[5]));
        assert!(num.divmod_monic(&ring, &GrPoly::from_int_coeffs(&ring, &[1, 2])).is_err());
    }

    #[test]
    fn compose_and_derive() {
        let ring = z8();
        // t(Y) = 1 + Y, inner = Y^2: t(Y^2) = 1 + Y^2
        let t = GrPoly::from_int_coeffs(&ring, &[1, 1]);
        let inner = GrPoly::from_int_coeffs(&ring, &[0, 0, 1]);
        assert_eq!(t.compose_truncated(&ring, &inner, 10), GrPoly::from_int_coeffs(&ring, &[1, 0, 1]));
        assert_eq!(t.compose_truncated(&ring, &inner, 2), GrPoly::from_int_coeffs(&ring, &[1]));
        let p = GrPoly::from_int_coeffs(&ring, &[5, 3, 0, 2]);
        assert_eq!(p.derivative(&ring), GrPoly::from_int_coeffs(&ring, &[3, 0, 6]));
    }

    #[test]
    fn reductions() {
        let ring = GaloisRing::canonical(3, 2, 2).unwrap();
        let p = GrPoly::from_int_coeffs(&ring, &[7, 3, 1]);
        let pbar = p.reduce_mod_p(&ring);
        assert_eq!(pbar.encode(), vec![vec![1, 0], vec![0, 0], vec![1, 0]]);
        let low = ring.reduce_precision(1).unwrap();
        assert_eq!(p.reduce_to(&ring, &low).encode(), pbar.encode());
    }

    proptest! {
        #[test]
        fn divmod_round_trip(num_c in prop::collection::vec(0u64..9, 0..7),
                             den_c in prop::collection::vec(0u64..9, 0..4)) {
            let ring = GaloisRing::canonical(3, 2, 1).unwrap();
            let num = GrPoly::decode(&ring, &num_c.iter().map(|&c| vec![c]).collect::<Vec<_>>()).unwrap();
            let mut den_v: Vec<Vec<u64>> = den_c.iter().map(|&c| vec![c]).collect();
            den_v.push(vec![1]); // force monic
            let den = GrPoly::decode(&ring, &den_v).unwrap();
            let (q, r) = num.divmod_monic(&ring, &den).unwrap();
            prop_assert!(r.degree().map_or(true, |d| d < den.degree().unwrap()));
            let back = q.mul(&ring, &den).add(&ring, &r);
            prop_assert_eq!(back, num);
        }
    }
}
