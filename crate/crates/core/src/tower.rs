//! Splitting towers: an independent model of the resultant action.
//!
//! For a monic `q` over the coefficient ring, successively adjoin roots
//! `u_1, u_2, ...` by forming quotients `N_{i+1} = N_i[Y]/(q_i)` and dividing
//! off `Y - u_i`, until `q` factors into linear terms.  Over the final ring,
//! `Res_Y(q(Y), Z - t(Y)Y) = prod_i (Z - t(u_i)u_i)`, which gives a way to
//! compute the action on Eisenstein polynomials with no Sylvester matrix in
//! sight.  The towers get big fast (dimension `e!` over the base), so this is
//! strictly a cross-check for small degrees, not the production path.

use crate::galois::{GaloisRing, GrElem};
use crate::poly::GrPoly;
use crate::ring::{self, Ring};

/// Element of a tower level: either a base-ring scalar or a coefficient
/// vector over the previous level, always of full fixed length (the degree of
/// that level's modulus), which keeps equality structural.
#[derive(Debug, Clone, PartialEq)]
pub(crate) enum TElem {
    Base(GrElem),
    Ext(Vec<TElem>),
}

pub(crate) struct Tower {
    base: GaloisRing,
    /// `mods[i]` presents level `i+1` over level `i`: monic, coefficients at
    /// depth `i`, length = degree + 1.
    mods: Vec<Vec<TElem>>,
}

/// View of one level of the tower as a [`Ring`].
pub(crate) struct Level<'a> {
    tower: &'a Tower,
    depth: usize,
}

impl Tower {
    fn level(&self, depth: usize) -> Level<'_> {
        Level { tower: self, depth }
    }

    /// Extension degree of the given level over the one below.
    fn ext_degree(&self, depth: usize) -> usize {
        self.mods[depth - 1].len() - 1
    }

    fn embed_up(&self, x: TElem, from_depth: usize, to_depth: usize) -> TElem {
        let mut cur = x;
        for k in from_depth..to_depth {
            let mut v = vec![self.level(k).zero(); self.ext_degree(k + 1)];
            v[0] = cur;
            cur = TElem::Ext(v);
        }
        cur
    }

    fn embed_scalar(&self, x: &GrElem, depth: usize) -> TElem {
        self.embed_up(TElem::Base(x.clone()), 0, depth)
    }

    /// Inverse of `embed_scalar` where defined; panics if `x` does not lie in
    /// the base ring, which cannot happen for symmetric expressions in the
    /// adjoined roots.
    fn project(&self, x: &TElem, depth: usize) -> GrElem {
        match x {
            TElem::Base(g) => g.clone(),
            TElem::Ext(v) => {
                let lower = self.level(depth - 1);
                assert!(
                    v[1..].iter().all(|c| lower.is_zero(c)),
                    "tower element does not descend to the base ring"
                );
                self.project(&v[0], depth - 1)
            }
        }
    }
}

impl Ring for Level<'_> {
    type Elem = TElem;

    fn zero(&self) -> TElem {
        if self.depth == 0 {
            TElem::Base(self.tower.base.zero())
        } else {
            let lower = self.tower.level(self.depth - 1);
            TElem::Ext(vec![lower.zero(); self.tower.ext_degree(self.depth)])
        }
    }

    fn one(&self) -> TElem {
        if self.depth == 0 {
            TElem::Base(self.tower.base.one())
        } else {
            let lower = self.tower.level(self.depth - 1);
            let mut v = vec![lower.zero(); self.tower.ext_degree(self.depth)];
            v[0] = lower.one();
            TElem::Ext(v)
        }
    }

    fn add(&self, x: &TElem, y: &TElem) -> TElem {
        match (x, y) {
            (TElem::Base(a), TElem::Base(b)) => TElem::Base(self.tower.base.add(a, b)),
            (TElem::Ext(a), TElem::Ext(b)) => {
                let lower = self.tower.level(self.depth - 1);
                TElem::Ext(a.iter().zip(b).map(|(u, v)| lower.add(u, v)).collect())
            }
            _ => unreachable!("mismatched tower depths"),
        }
    }

    fn neg(&self, x: &TElem) -> TElem {
        match x {
            TElem::Base(a) => TElem::Base(self.tower.base.neg(a)),
            TElem::Ext(a) => {
                let lower = self.tower.level(self.depth - 1);
                TElem::Ext(a.iter().map(|u| lower.neg(u)).collect())
            }
        }
    }

    fn mul(&self, x: &TElem, y: &TElem) -> TElem {
        match (x, y) {
            (TElem::Base(a), TElem::Base(b)) => TElem::Base(self.tower.base.mul(a, b)),
            (TElem::Ext(a), TElem::Ext(b)) => {
                let lower = self.tower.level(self.depth - 1);
                let d = self.tower.ext_degree(self.depth);
                let mut prod = ring::pmul(&lower, a, b);
                if prod.len() > d {
                    let (_, r) =
                        ring::pdivmod_monic(&lower, &prod, &self.tower.mods[self.depth - 1])
                            .expect("tower moduli are monic");
                    prod = r;
                }
                prod.resize(d, lower.zero());
                TElem::Ext(prod)
            }
            _ => unreachable!("mismatched tower depths"),
        }
    }
}

/// `prod_i (Z - t(u_i) u_i)` over the roots `u_1..u_e` of `q` in a splitting
/// tower, projected back to the base ring.
pub(crate) fn split_product(rw: &GaloisRing, q: &GrPoly, t: &GrPoly) -> GrPoly {
    assert!(q.is_monic(rw), "splitting requires a monic polynomial");
    let mut tower = Tower { base: rw.clone(), mods: Vec::new() };
    let mut roots: Vec<(usize, TElem)> = Vec::new();
    let mut depth = 0usize;
    let mut cur: Vec<TElem> = q.coeffs().iter().cloned().map(TElem::Base).collect();
    while cur.len() > 2 {
        tower.mods.push(cur.clone());
        depth += 1;
        let mut gen = vec![tower.level(depth - 1).zero(); tower.ext_degree(depth)];
        gen[1] = tower.level(depth - 1).one();
        let u = TElem::Ext(gen);
        let lifted: Vec<TElem> =
            cur.into_iter().map(|c| tower.embed_up(c, depth - 1, depth)).collect();
        let lvl = tower.level(depth);
        let divisor = [lvl.neg(&u), lvl.one()];
        let (quot, rem) = ring::pdivmod_monic(&lvl, &lifted, &divisor).unwrap();
        assert!(rem.iter().all(|c| lvl.is_zero(c)), "adjoined generator must be a root");
        roots.push((depth, u));
        cur = quot;
    }
    if cur.len() == 2 {
        let lvl = tower.level(depth);
        roots.push((depth, lvl.neg(&cur[0])));
    }
    let top = depth;
    let lvl = tower.level(top);
    let mut prod: Vec<TElem> = vec![lvl.one()];
    for (born, u) in roots {
        let u = tower.embed_up(u, born, top);
        let mut tu = lvl.zero();
        for c in t.coeffs().iter().rev() {
            tu = lvl.add(&lvl.mul(&tu, &u), &tower.embed_scalar(c, top));
        }
        tu = lvl.mul(&tu, &u);
        prod = ring::pmul(&lvl, &prod, &[lvl.neg(&tu), lvl.one()]);
    }
    GrPoly::from_coeffs(rw, prod.iter().map(|c| tower.project(c, top)).collect())
}
