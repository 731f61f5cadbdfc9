//! The resultant action on Eisenstein polynomials, orbits, and
//! classification.
//!
//! Fix a type `(a, e, f, p)` with `a > e` and let `R_w` be its coefficient
//! ring.  The unit group of `T = R_w[Y]/(Y^a)`, equipped with the
//! substitution product `t1 * t2 = t1(t2(Y)Y) t2(Y)`, acts on the set `∇` of
//! Eisenstein polynomials of degree `e` by
//!
//! ```text
//! t * q = Res_Y(q(Y), Z - t(Y)Y),
//! ```
//!
//! a monic degree-`e` polynomial in `Z` that is again Eisenstein.  The set
//! `Δ` of Eisenstein polynomials with a root in a ring `R` of the type is a
//! union of orbits, and the orbit partition of `∇` classifies the rings: one
//! class per orbit when `e | a`, and one class per distinct `Δ` in general.
//!
//! `t * q` only depends on `t` modulo `(q, p^(a0-1))`, so orbits are computed
//! by letting a transversal of that quotient act -- a set the same size as
//! `∇` itself -- rather than all of `T`.  The resultant is evaluated as a
//! division-free Sylvester determinant over `R_w[Z]`; an independent
//! splitting-tower evaluation is kept around as an oracle.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

pub use crate::chain::is_eisenstein;
use crate::chain::{ChainElem, ChainRing, EisensteinPoly, TypeParams};
use crate::galois::{GaloisRing, GrElem};
use crate::par;
use crate::poly::GrPoly;
use crate::ring::{self, PolyRing, Ring};
use crate::tower;
use crate::zq;
use crate::{Budget, Error, Result};

/// Everything needed to act on `∇`: the type parameters and the coefficient
/// ring.  Requires `a > e`; in equal characteristic `∇` is empty and there is
/// nothing to act on.
#[derive(Debug, Clone)]
pub struct ActionContext {
    params: TypeParams,
    rw: GaloisRing,
    m: u32,
}

/// A unit of `T = R_w[Y]/(Y^a)` under the substitution product.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubstUnit {
    poly: GrPoly,
}

impl SubstUnit {
    pub fn poly(&self) -> &GrPoly {
        &self.poly
    }
}

/// One orbit of the action: all members, sorted by encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    members: Vec<EisensteinPoly>,
}

impl Orbit {
    /// The lexicographically least member.
    pub fn representative(&self) -> &EisensteinPoly {
        &self.members[0]
    }

    pub fn members(&self) -> &[EisensteinPoly] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, q: &EisensteinPoly) -> bool {
        self.members.binary_search(q).is_ok()
    }
}

/// The invariant `Δ` of a concrete ring, relative to an orbit list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSet {
    /// Members of `∇` with a root in the ring, sorted by encoding.
    pub members: Vec<EisensteinPoly>,
    /// Indices (into the orbit list) of the orbits meeting `Δ`.
    pub orbit_ids: Vec<usize>,
    /// Whether `Δ` is exactly the union of those orbits.  Always true by the
    /// theory; computed literally here as a self-check.
    pub union_of_orbits: bool,
}

impl ActionContext {
    pub fn new(a: u32, e: u32, f: u32, p: u64) -> Result<Self> {
        let params = TypeParams::new(a, e, f, p)?;
        if params.a == params.e {
            return Err(Error::EqualCharacteristic);
        }
        let rw = params.coefficient_ring()?;
        Ok(ActionContext { m: params.m(), params, rw })
    }

    pub fn params(&self) -> TypeParams {
        self.params
    }

    pub fn galois(&self) -> &GaloisRing {
        &self.rw
    }

    fn pw(&self, exp: u32) -> u128 {
        zq::pow_u128(self.params.p as u128, exp).unwrap_or(u128::MAX)
    }

    /// `|∇| = (p^(f(a0-1)))^(e-1) (p^(f(a0-1)) - p^(f(a0-2)))`.
    pub fn nabla_size(&self) -> u128 {
        let TypeParams { e, f, .. } = self.params;
        let a0 = self.params.a0();
        let s = self.pw(f * (a0 - 1));
        let units = s - self.pw(f * (a0 - 2));
        (0..e - 1).fold(units, |acc, _| acc.saturating_mul(s))
    }

    /// `|T_x| = (p^f - 1) p^(f(a0 a - 1))`.
    pub fn t_group_order(&self) -> u128 {
        let TypeParams { a, f, .. } = self.params;
        let a0 = self.params.a0();
        (self.pw(f) - 1).saturating_mul(self.pw(f * (a0 * a - 1)))
    }

    /// `|U| = (p^f - 1) p^(f(a-2))` -- the uniformizer count of any ring of
    /// the type.
    pub fn uniformizer_count(&self) -> u128 {
        let TypeParams { a, f, .. } = self.params;
        (self.pw(f) - 1).saturating_mul(self.pw(f * (a - 2)))
    }

    /// The coefficient ring one precision step down, whose elements index
    /// both `∇` and the orbit transversal.
    fn reduced(&self) -> GaloisRing {
        self.rw.reduce_precision(self.rw.n() - 1).expect("a0 >= 2")
    }

    fn lift(&self, x: &GrElem) -> GrElem {
        self.rw.from_coords(x.coords()).expect("reduced coords are valid at full precision")
    }

    /// All of `∇`, sorted by encoding.
    pub fn enumerate_nabla(&self, budget: &Budget) -> Result<Vec<EisensteinPoly>> {
        let size = self.nabla_size();
        if size > budget.max_nabla {
            return Err(Error::BudgetExceeded {
                what: "|nabla|",
                actual: size,
                limit: budget.max_nabla,
            });
        }
        let rsub = self.reduced();
        let p = self.params.p;
        let scaled: Vec<GrElem> =
            rsub.enumerate().map(|d| self.rw.scalar_mul(p, &self.lift(&d))).collect();
        let scaled_units: Vec<GrElem> = rsub
            .enumerate()
            .filter(|d| rsub.is_unit(d))
            .map(|d| self.rw.scalar_mul(p, &self.lift(&d)))
            .collect();
        let mut domains = vec![scaled; self.params.e as usize];
        domains[0] = scaled_units;
        let mut out: Vec<EisensteinPoly> = coeff_products(&domains)
            .map(|mut coeffs| {
                coeffs.push(self.rw.one());
                EisensteinPoly::new(&self.rw, self.params.e, GrPoly::from_coeffs(&self.rw, coeffs))
                    .expect("constructed polynomials are Eisenstein")
            })
            .collect();
        out.sort();
        debug_assert_eq!(out.len() as u128, size);
        Ok(out)
    }

    /// The set `t * q` runs over as `t` runs over all of `T_x`: polynomials
    /// of degree `< e` with coordinates below `p^(a0-1)` and unit constant
    /// term.  Exactly `|∇|` of them.
    fn orbit_transversal(&self) -> Vec<GrPoly> {
        let rsub = self.reduced();
        let all: Vec<GrElem> = rsub.enumerate().map(|d| self.lift(&d)).collect();
        let units: Vec<GrElem> =
            rsub.enumerate().filter(|d| rsub.is_unit(d)).map(|d| self.lift(&d)).collect();
        let mut domains = vec![all; self.params.e as usize];
        domains[0] = units;
        coeff_products(&domains).map(|c| GrPoly::from_coeffs(&self.rw, c)).collect()
    }

    /// A transversal for the `t*u = t(u)u` action on uniformizers: degree
    /// `< e`, coordinates at position `j` taken mod `p^a0` for `j < m-1` and
    /// mod `p^(a0-1)` beyond, unit constant term.  `t -> t(π)π` maps it
    /// bijectively onto `U`.
    pub fn uniformizer_transversal(&self) -> Vec<GrPoly> {
        let rsub = self.reduced();
        let full: Vec<GrElem> = self.rw.enumerate().collect();
        let reduced: Vec<GrElem> = rsub.enumerate().map(|d| self.lift(&d)).collect();
        let mut domains: Vec<Vec<GrElem>> = (0..self.params.e)
            .map(|j| if j + 1 < self.m { full.clone() } else { reduced.clone() })
            .collect();
        domains[0].retain(|c| self.rw.is_unit(c));
        let out: Vec<GrPoly> =
            coeff_products(&domains).map(|c| GrPoly::from_coeffs(&self.rw, c)).collect();
        debug_assert_eq!(out.len() as u128, self.uniformizer_count());
        out
    }

    /// `t * q` via the Sylvester determinant of `q(Y)` and `Z - t(Y)Y` over
    /// `R_w[Z]`.  `t` may have any degree; only its class mod
    /// `(q, p^(a0-1))` matters.
    pub fn resultant_action(&self, t: &GrPoly, q: &EisensteinPoly) -> Result<EisensteinPoly> {
        let e = self.params.e as usize;
        if q.degree() != e {
            return Err(Error::DegreeMismatch { expected: e, found: Some(q.degree()) });
        }
        if !self.rw.is_unit(&q.poly().coeff(&self.rw, e)) {
            return Err(Error::ContextMismatch);
        }
        if !self.rw.is_unit(&t.coeff(&self.rw, 0)) {
            return Err(Error::NotAUnit);
        }
        let (_, tred) = t.divmod_monic(&self.rw, q.poly())?;
        let tc = tred.coeffs();
        let n = tc.len(); // deg + 1; nonzero since t(0) is a unit
        let pr = PolyRing(&self.rw);
        let cst = |x: GrElem| if self.rw.is_zero(&x) { Vec::new() } else { vec![x] };
        let size = e + n;
        let mut mat = vec![vec![pr.zero(); size]; size];
        for i in 0..n {
            for j in 0..=e {
                mat[i][i + j] = cst(q.poly().coeffs()[e - j].clone());
            }
        }
        for i in 0..e {
            for (j, c) in tc.iter().rev().enumerate() {
                mat[n + i][i + j] = cst(self.rw.neg(c));
            }
            mat[n + i][i + n] = vec![self.rw.zero(), self.rw.one()];
        }
        let det = ring::determinant(&pr, &mat)?;
        EisensteinPoly::new(&self.rw, self.params.e, GrPoly::from_coeffs(&self.rw, det))
    }

    /// `t * q` computed as `prod (Z - t(u_i)u_i)` over the roots `u_i` of `q`
    /// in a splitting tower.  Slow; exists to cross-check
    /// [`Self::resultant_action`].
    pub fn splitting_action(&self, t: &GrPoly, q: &EisensteinPoly) -> GrPoly {
        tower::split_product(&self.rw, q.poly(), t)
    }

    // --- the substitution group ---

    /// Validate and normalize a representative of `T_x`: reduced mod `Y^a`,
    /// unit constant term.
    pub fn subst_unit(&self, t: &GrPoly) -> Result<SubstUnit> {
        let t = GrPoly::decode(&self.rw, &t.encode())?;
        let t = t.truncate(&self.rw, self.params.a as usize);
        if !self.rw.is_unit(&t.coeff(&self.rw, 0)) {
            return Err(Error::NotAUnit);
        }
        Ok(SubstUnit { poly: t })
    }

    pub fn subst_identity(&self) -> SubstUnit {
        SubstUnit { poly: GrPoly::constant(&self.rw, self.rw.one()) }
    }

    /// `t1 * t2 = t1(t2(Y)Y) t2(Y) mod Y^a`.
    pub fn subst_product(&self, t1: &SubstUnit, t2: &SubstUnit) -> SubstUnit {
        let a = self.params.a as usize;
        let inner = t2.poly.shift(1).truncate(&self.rw, a);
        let comp = t1.poly.compose_truncated(&self.rw, &inner, a);
        SubstUnit { poly: comp.mul(&self.rw, &t2.poly).truncate(&self.rw, a) }
    }

    /// Inverse under the substitution product, by coefficient recursion:
    /// writing `v` for the inverse, `[Y^i](t * v)` is `t(0) v_i` plus terms
    /// in `v_0..v_(i-1)` only.
    pub fn subst_inverse(&self, t: &SubstUnit) -> SubstUnit {
        let a = self.params.a as usize;
        let u0inv = self.rw.inv_unit(&t.poly.coeff(&self.rw, 0)).expect("units have unit constant");
        let mut v = vec![u0inv.clone()];
        for i in 1..a {
            let partial = SubstUnit { poly: GrPoly::from_coeffs(&self.rw, v.clone()) };
            let wi = self.subst_product(t, &partial).poly.coeff(&self.rw, i);
            v.push(self.rw.neg(&self.rw.mul(&u0inv, &wi)));
            while v.len() < i + 1 {
                v.push(self.rw.zero());
            }
        }
        let inv = SubstUnit { poly: GrPoly::from_coeffs(&self.rw, v) };
        debug_assert_eq!(self.subst_product(t, &inv), self.subst_identity());
        inv
    }

    /// All of `T_x`, for exhaustive checks on tiny types.
    pub fn enumerate_subst_units(&self, budget: &Budget) -> Result<Vec<SubstUnit>> {
        let size = self.t_group_order();
        if size > budget.max_ring {
            return Err(Error::BudgetExceeded {
                what: "|T_x|",
                actual: size,
                limit: budget.max_ring,
            });
        }
        let all: Vec<GrElem> = self.rw.enumerate().collect();
        let units: Vec<GrElem> = self.rw.enumerate().filter(|c| self.rw.is_unit(c)).collect();
        let mut domains = vec![all; self.params.a as usize];
        domains[0] = units;
        let out: Vec<SubstUnit> = coeff_products(&domains)
            .map(|c| SubstUnit { poly: GrPoly::from_coeffs(&self.rw, c) })
            .collect();
        debug_assert_eq!(out.len() as u128, size);
        Ok(out)
    }

    /// The action `t * u = t(u)u` on uniformizers of a concrete ring.
    pub fn star_uniformizer(
        &self,
        ring: &ChainRing,
        t: &SubstUnit,
        u: &ChainElem,
    ) -> Result<ChainElem> {
        if ring.params() != self.params || ring.galois() != &self.rw {
            return Err(Error::ContextMismatch);
        }
        if ring.ord(u) != 1 {
            return Err(Error::NotAUniformizer);
        }
        Ok(ring.mul(&ring.eval_poly(&t.poly, u), u))
    }

    // --- orbits ---

    /// The full orbit of `q`, computed by acting with the orbit transversal.
    pub fn orbit(&self, q: &EisensteinPoly, budget: &Budget, jobs: usize) -> Result<Orbit> {
        let size = self.nabla_size();
        if size > budget.max_nabla {
            return Err(Error::BudgetExceeded {
                what: "|nabla|",
                actual: size,
                limit: budget.max_nabla,
            });
        }
        let ts = self.orbit_transversal();
        let images = par::map_indices(ts.len(), jobs, |i| self.resultant_action(&ts[i], q));
        let mut members = BTreeSet::new();
        for im in images {
            members.insert(im?);
        }
        Ok(Orbit { members: members.into_iter().collect() })
    }

    /// The orbit partition of `∇`, ordered by least representative.
    pub fn all_orbits(&self, budget: &Budget, jobs: usize) -> Result<Vec<Orbit>> {
        let nabla = self.enumerate_nabla(budget)?;
        let mut seen = vec![false; nabla.len()];
        let mut orbits = Vec::new();
        for (i, q) in nabla.iter().enumerate() {
            if seen[i] {
                continue;
            }
            let orbit = self.orbit(q, budget, jobs)?;
            for member in orbit.members() {
                let ix = nabla.binary_search(member).expect("the action stays inside nabla");
                seen[ix] = true;
            }
            orbits.push(orbit);
        }
        debug_assert_eq!(orbits.iter().map(Orbit::len).sum::<usize>(), nabla.len());
        Ok(orbits)
    }
}

/// Mixed-radix cartesian product of coefficient domains, position 0 varying
/// fastest.
fn coeff_products(domains: &[Vec<GrElem>]) -> impl Iterator<Item = Vec<GrElem>> + '_ {
    let total: u128 = domains.iter().map(|d| d.len() as u128).product();
    (0..total).map(move |mut ix| {
        domains
            .iter()
            .map(|d| {
                let l = d.len() as u128;
                let c = d[(ix % l) as usize].clone();
                ix /= l;
                c
            })
            .collect()
    })
}

/// The invariant `Δ` of `ring`, by scanning every member of every orbit for
/// roots among the uniformizers.
pub fn delta(
    ctx: &ActionContext,
    ring: &ChainRing,
    orbits: &[Orbit],
    budget: &Budget,
    jobs: usize,
) -> Result<DeltaSet> {
    if ring.params() != ctx.params || ring.galois() != &ctx.rw {
        return Err(Error::ContextMismatch);
    }
    let unifs = collect_uniformizers(ring, budget)?;
    let flat: Vec<(usize, &EisensteinPoly)> = orbits
        .iter()
        .enumerate()
        .flat_map(|(id, o)| o.members().iter().map(move |q| (id, q)))
        .collect();
    let hits = par::map_indices(flat.len(), jobs, |i| {
        let q = flat[i].1.poly();
        unifs.iter().any(|u| ring.is_zero(&ring.eval_poly(q, u)))
    });
    let mut members: Vec<EisensteinPoly> = Vec::new();
    let mut orbit_ids = BTreeSet::new();
    let mut per_orbit: BTreeMap<usize, usize> = BTreeMap::new();
    for ((id, q), hit) in flat.iter().zip(&hits) {
        if *hit {
            members.push((*q).clone());
            orbit_ids.insert(*id);
            *per_orbit.entry(*id).or_default() += 1;
        }
    }
    members.sort();
    let union_of_orbits =
        per_orbit.iter().all(|(id, count)| *count == orbits[*id].len());
    Ok(DeltaSet { members, orbit_ids: orbit_ids.into_iter().collect(), union_of_orbits })
}

fn collect_uniformizers(ring: &ChainRing, budget: &Budget) -> Result<Vec<ChainElem>> {
    if ring.uniformizer_count() > budget.max_ring {
        return Err(Error::BudgetExceeded {
            what: "|U|",
            actual: ring.uniformizer_count(),
            limit: budget.max_ring,
        });
    }
    Ok(ring.uniformizers().collect())
}

/// Number of relative automorphisms of `ring` over its coefficient ring:
/// the zeroes of the presenting polynomial, all of which are uniformizers.
/// For a neat ring this equals `|U| / |Δ|`.
pub fn aut_count(ring: &ChainRing, budget: &Budget) -> Result<u64> {
    let Some(q) = ring.presenting() else {
        return Err(Error::EqualCharacteristic);
    };
    let q = q.poly().clone();
    let unifs = collect_uniformizers(ring, budget)?;
    Ok(unifs.iter().filter(|u| ring.is_zero(&ring.eval_poly(&q, u))).count() as u64)
}

/// Summary of one orbit in a [`ClassificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSummary {
    pub id: usize,
    #[serde(rename = "rep")]
    pub representative: Vec<Vec<u64>>,
    pub size: u64,
}

/// Summary of one isomorphism class in a [`ClassificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoClassSummary {
    /// Encoding of a presenting Eisenstein polynomial; absent in equal
    /// characteristic, where the class is `k[Y]/(Y^a)`.
    #[serde(rename = "rep_q")]
    pub presenting: Option<Vec<Vec<u64>>>,
    /// Orbits making up the invariant `Δ` of this class.
    pub delta_orbit_ids: Vec<usize>,
    pub delta_size: u64,
    /// Zeroes of the presenting polynomial in the ring (relative
    /// automorphisms); `None` when the uniformizer scan exceeds the budget.
    pub aut_count: Option<u64>,
}

/// Complete classification of the rings of one type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    #[serde(rename = "type")]
    pub params: TypeParams,
    pub a0: u32,
    pub m: u32,
    pub equal_characteristic: bool,
    pub neat: bool,
    /// The monic polynomial presenting the coefficient ring over `Z/p^a0`.
    pub h: Vec<u64>,
    pub ring_order: u128,
    pub characteristic: u64,
    pub residue_order: u64,
    pub uniformizer_count: u128,
    pub nabla_size: u128,
    pub t_group_order: u128,
    pub orbits: Vec<OrbitSummary>,
    #[serde(rename = "iso_classes")]
    pub classes: Vec<IsoClassSummary>,
}

/// Classify the isomorphism types of the finite chain rings with invariants
/// `(a, e, f, p)`.
///
/// In equal characteristic there is a single class, `k[Y]/(Y^a)`.  Otherwise
/// the orbit partition of `∇` is computed; when `e | a` classes correspond to
/// orbits, and in general orbit representatives are deduplicated by their
/// invariant `Δ` (as a set of orbit indices, established by root-testing one
/// member per orbit, the counts being constant on orbits).
pub fn classify(
    a: u32,
    e: u32,
    f: u32,
    p: u64,
    budget: &Budget,
    jobs: usize,
) -> Result<ClassificationReport> {
    let params = TypeParams::new(a, e, f, p)?;
    if params.a == params.e {
        let k = GaloisRing::canonical(p, 1, f as usize)?;
        let uc = if a >= 2 {
            (k.residue_size() as u128 - 1)
                .saturating_mul(zq::pow_u128(p as u128, f * (a - 2)).unwrap_or(u128::MAX))
        } else {
            0
        };
        return Ok(ClassificationReport {
            params,
            a0: 1,
            m: e,
            equal_characteristic: true,
            neat: true,
            h: k.h().to_vec(),
            ring_order: params.ring_size(),
            characteristic: p,
            residue_order: k.residue_size(),
            uniformizer_count: uc,
            nabla_size: 0,
            t_group_order: (k.residue_size() as u128 - 1)
                .saturating_mul(zq::pow_u128(p as u128, f * (a - 1)).unwrap_or(u128::MAX)),
            orbits: Vec::new(),
            classes: vec![IsoClassSummary {
                presenting: None,
                delta_orbit_ids: Vec::new(),
                delta_size: 0,
                aut_count: None,
            }],
        });
    }

    let ctx = ActionContext::new(a, e, f, p)?;
    let orbits = ctx.all_orbits(budget, jobs)?;
    let scan_units = ctx.uniformizer_count() <= budget.max_ring;

    let class_of = |rep_ix: usize, ids: Vec<usize>| -> Result<IsoClassSummary> {
        let rep = orbits[rep_ix].representative().clone();
        let delta_size = ids.iter().map(|&i| orbits[i].len() as u64).sum();
        let aut = if scan_units {
            let ring = ChainRing::with_params(params, Some(rep.clone()))?;
            Some(aut_count(&ring, budget)?)
        } else {
            None
        };
        Ok(IsoClassSummary {
            presenting: Some(rep.encode()),
            delta_orbit_ids: ids,
            delta_size,
            aut_count: aut,
        })
    };

    let classes = if params.is_neat() {
        // one class per orbit; its Δ is exactly that orbit
        orbits
            .iter()
            .enumerate()
            .map(|(i, _)| class_of(i, vec![i]))
            .collect::<Result<Vec<_>>>()?
    } else {
        // deduplicate orbit representatives by Δ, root-testing one member of
        // each orbit against each representative ring (root counts are
        // constant on orbits, so one member decides the whole orbit)
        if !scan_units {
            return Err(Error::BudgetExceeded {
                what: "|U|",
                actual: ctx.uniformizer_count(),
                limit: budget.max_ring,
            });
        }
        let mut by_delta: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (i, orbit) in orbits.iter().enumerate() {
            let ring = ChainRing::with_params(params, Some(orbit.representative().clone()))?;
            let unifs = collect_uniformizers(&ring, budget)?;
            let hits = par::map_indices(orbits.len(), jobs, |j| {
                let q = orbits[j].representative().poly();
                unifs.iter().any(|u| ring.is_zero(&ring.eval_poly(q, u)))
            });
            let ids: Vec<usize> =
                hits.iter().enumerate().filter(|(_, h)| **h).map(|(j, _)| j).collect();
            debug_assert!(ids.binary_search(&i).is_ok(), "q has a root in its own ring");
            by_delta.entry(ids).or_insert(i);
        }
        by_delta
            .into_iter()
            .map(|(ids, rep_ix)| class_of(rep_ix, ids))
            .collect::<Result<Vec<_>>>()?
    };

    Ok(ClassificationReport {
        params,
        a0: params.a0(),
        m: params.m(),
        equal_characteristic: false,
        neat: params.is_neat(),
        h: ctx.rw.h().to_vec(),
        ring_order: params.ring_size(),
        characteristic: ctx.rw.characteristic(),
        residue_order: ctx.rw.residue_size(),
        uniformizer_count: ctx.uniformizer_count(),
        nabla_size: ctx.nabla_size(),
        t_group_order: ctx.t_group_order(),
        orbits: orbits
            .iter()
            .enumerate()
            .map(|(id, o)| OrbitSummary {
                id,
                representative: o.representative().encode(),
                size: o.len() as u64,
            })
            .collect(),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx622() -> ActionContext {
        ActionContext::new(6, 2, 1, 2).unwrap()
    }

    fn eis(ctx: &ActionContext, c: &[i64]) -> EisensteinPoly {
        EisensteinPoly::new(ctx.galois(), ctx.params().e, GrPoly::from_int_coeffs(ctx.galois(), c))
            .unwrap()
    }

    #[test]
    fn context_requires_unequal_characteristic() {
        assert_eq!(ActionContext::new(2, 2, 1, 2).unwrap_err(), Error::EqualCharacteristic);
        assert!(ActionContext::new(6, 2, 1, 2).is_ok());
    }

    #[test]
    fn nabla_622() {
        let ctx = ctx622();
        assert_eq!(ctx.nabla_size(), 8);
        let nabla = ctx.enumerate_nabla(&Budget::default()).unwrap();
        assert_eq!(nabla.len(), 8);
        // Y^2 + c1 Y + c0 with c1 in {0,2,4,6}, c0 in {2,6}
        let expect: Vec<EisensteinPoly> = [(2, 0), (2, 2), (2, 4), (2, 6), (6, 0), (6, 2), (6, 4), (6, 6)]
            .iter()
            .map(|&(c0, c1)| eis(&ctx, &[c0, c1, 1]))
            .collect();
        let mut expect = expect;
        expect.sort();
        assert_eq!(nabla, expect);
    }

    #[test]
    fn identity_acts_trivially() {
        let ctx = ctx622();
        let one = GrPoly::from_int_coeffs(ctx.galois(), &[1]);
        for q in ctx.enumerate_nabla(&Budget::default()).unwrap() {
            assert_eq!(ctx.resultant_action(&one, &q).unwrap(), q);
        }
    }

    #[test]
    fn resultant_matches_splitting_tower() {
        let ctx = ctx622();
        let ts = [
            GrPoly::from_int_coeffs(ctx.galois(), &[1]),
            GrPoly::from_int_coeffs(ctx.galois(), &[1, 1]),
            GrPoly::from_int_coeffs(ctx.galois(), &[3, 2, 1]),
            GrPoly::from_int_coeffs(ctx.galois(), &[5, 0, 0, 7]),
        ];
        for q in ctx.enumerate_nabla(&Budget::default()).unwrap() {
            for t in &ts {
                let via_det = ctx.resultant_action(t, &q).unwrap();
                let via_tower = ctx.splitting_action(t, &q);
                assert_eq!(via_det.poly(), &via_tower);
            }
        }
    }

    #[test]
    fn action_is_well_defined_on_classes() {
        let ctx = ctx622();
        let q = eis(&ctx, &[-2, 0, 1]);
        let t = GrPoly::from_int_coeffs(ctx.galois(), &[3, 1, 2]);
        let base = ctx.resultant_action(&t, &q).unwrap();
        // adding p^(a0-1) = 4 times anything changes nothing
        for j in 0..4 {
            let mut c = vec![0i64; j + 1];
            c[j] = 4;
            let tp = t.add(ctx.galois(), &GrPoly::from_int_coeffs(ctx.galois(), &c));
            assert_eq!(ctx.resultant_action(&tp, &q).unwrap(), base);
        }
        // adding multiples of q changes nothing
        let c = GrPoly::from_int_coeffs(ctx.galois(), &[5, 3]);
        let tp = t.add(ctx.galois(), &c.mul(ctx.galois(), q.poly()));
        assert_eq!(ctx.resultant_action(&tp, &q).unwrap(), base);
    }

    #[test]
    fn orbits_of_622_match_known_pairing() {
        let ctx = ctx622();
        let orbits = ctx.all_orbits(&Budget::default(), 1).unwrap();
        assert_eq!(orbits.len(), 4);
        assert!(orbits.iter().all(|o| o.len() == 2));
        let pair = |a: &[i64], b: &[i64]| {
            let wanted = {
                let mut v = vec![eis(&ctx, a), eis(&ctx, b)];
                v.sort();
                v
            };
            assert!(
                orbits.iter().any(|o| o.members() == wanted.as_slice()),
                "expected {a:?} and {b:?} to form an orbit"
            );
        };
        pair(&[-2, 0, 1], &[2, 4, 1]); // Y^2-2 ~ Y^2+4Y+2
        pair(&[2, 0, 1], &[-2, 4, 1]); // Y^2+2 ~ Y^2+4Y-2
        pair(&[2, 2, 1], &[2, -2, 1]); // Y^2+2Y+2 ~ Y^2-2Y+2
        pair(&[-2, 2, 1], &[-2, -2, 1]); // Y^2+2Y-2 ~ Y^2-2Y-2
    }

    #[test]
    fn orbit_sizes_4233() {
        let ctx = ActionContext::new(4, 2, 3, 3).unwrap();
        assert_eq!(ctx.nabla_size(), 702);
        let orbits = ctx.all_orbits(&Budget::default(), 2).unwrap();
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0].len(), 351);
        assert_eq!(orbits[1].len(), 351);
    }

    #[test]
    fn subst_group_identity_inverse_associativity() {
        let ctx = ActionContext::new(3, 2, 1, 2).unwrap();
        let units = ctx.enumerate_subst_units(&Budget::default()).unwrap();
        assert_eq!(units.len(), 32);
        let id = ctx.subst_identity();
        for t in &units {
            assert_eq!(&ctx.subst_product(t, &id), t);
            assert_eq!(&ctx.subst_product(&id, t), t);
            let inv = ctx.subst_inverse(t);
            assert_eq!(ctx.subst_product(&inv, t), id);
            assert_eq!(ctx.subst_product(t, &inv), id);
        }
        // associativity on a sample
        for (i, t1) in units.iter().enumerate().step_by(5) {
            for (j, t2) in units.iter().enumerate().step_by(7) {
                for t3 in units.iter().skip((i + j) % 3).step_by(11) {
                    let left = ctx.subst_product(t1, &ctx.subst_product(t2, t3));
                    let right = ctx.subst_product(&ctx.subst_product(t1, t2), t3);
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn action_axioms_via_group() {
        // (t1 * t2) * q == t1 * (t2 * q) on a small full group
        let ctx = ActionContext::new(3, 2, 1, 2).unwrap();
        let units = ctx.enumerate_subst_units(&Budget::default()).unwrap();
        let nabla = ctx.enumerate_nabla(&Budget::default()).unwrap();
        assert_eq!(nabla.len(), 2);
        for t1 in units.iter().step_by(3) {
            for t2 in units.iter().step_by(5) {
                let t12 = ctx.subst_product(t1, t2);
                for q in &nabla {
                    let seq = ctx
                        .resultant_action(t1.poly(), &ctx.resultant_action(t2.poly(), q).unwrap())
                        .unwrap();
                    let joint = ctx.resultant_action(t12.poly(), q).unwrap();
                    assert_eq!(seq, joint);
                }
            }
        }
    }

    #[test]
    fn star_compatibility() {
        // if q(u) = 0 then (t*q)(t*u) = 0
        let ctx = ctx622();
        let q = eis(&ctx, &[-2, 0, 1]);
        let ring = ChainRing::with_params(ctx.params(), Some(q.clone())).unwrap();
        let roots = ring.roots_in_uniformizers(q.poly());
        assert_eq!(roots.len(), 8);
        for t in ctx.uniformizer_transversal().into_iter().step_by(3) {
            let t = ctx.subst_unit(&t).unwrap();
            let tq = ctx.resultant_action(t.poly(), &q).unwrap();
            for u in &roots {
                let tu = ctx.star_uniformizer(&ring, &t, u).unwrap();
                assert!(ring.is_zero(&ring.eval_poly(tq.poly(), &tu)));
            }
        }
    }

    #[test]
    fn uniformizer_transversal_is_a_bijection_onto_u() {
        let ctx = ctx622();
        let q = eis(&ctx, &[-2, 0, 1]);
        let ring = ChainRing::with_params(ctx.params(), Some(q)).unwrap();
        let pi = ring.pi();
        let ts = ctx.uniformizer_transversal();
        assert_eq!(ts.len() as u128, ring.uniformizer_count());
        let images: BTreeSet<ChainElem> = ts
            .iter()
            .map(|t| {
                let t = ctx.subst_unit(t).unwrap();
                ctx.star_uniformizer(&ring, &t, &pi).unwrap()
            })
            .collect();
        let all: BTreeSet<ChainElem> = ring.uniformizers().collect();
        assert_eq!(images, all);
        assert_eq!(images.len(), ts.len());
    }

    #[test]
    fn delta_and_aut_622() {
        let ctx = ctx622();
        let budget = Budget::default();
        let orbits = ctx.all_orbits(&budget, 1).unwrap();
        let q = eis(&ctx, &[-2, 0, 1]);
        let ring = ChainRing::with_params(ctx.params(), Some(q.clone())).unwrap();
        let d = delta(&ctx, &ring, &orbits, &budget, 1).unwrap();
        assert!(d.union_of_orbits);
        assert_eq!(d.orbit_ids.len(), 1);
        let mut expect = vec![eis(&ctx, &[-2, 0, 1]), eis(&ctx, &[2, 4, 1])];
        expect.sort();
        assert_eq!(d.members, expect);
        assert_eq!(aut_count(&ring, &budget).unwrap(), 8);
        // Y^2+2 presents a different ring whose delta is the other orbit
        let q2 = eis(&ctx, &[2, 0, 1]);
        let ring2 = ChainRing::with_params(ctx.params(), Some(q2)).unwrap();
        let d2 = delta(&ctx, &ring2, &orbits, &budget, 1).unwrap();
        let mut expect2 = vec![eis(&ctx, &[2, 0, 1]), eis(&ctx, &[-2, 4, 1])];
        expect2.sort();
        assert_eq!(d2.members, expect2);
        assert_ne!(d.orbit_ids, d2.orbit_ids);
    }

    #[test]
    fn classify_622() {
        let report = classify(6, 2, 1, 2, &Budget::default(), 1).unwrap();
        assert_eq!(report.orbits.len(), 4);
        assert_eq!(report.classes.len(), 4);
        assert!(report.neat);
        assert!(!report.equal_characteristic);
        assert_eq!(report.nabla_size, 8);
        assert_eq!(report.t_group_order, 1 << 17);
        assert_eq!(report.uniformizer_count, 16);
        for class in &report.classes {
            assert_eq!(class.delta_size, 2);
            assert_eq!(class.aut_count, Some(8));
        }
    }

    #[test]
    fn classify_equal_characteristic() {
        let report = classify(3, 3, 2, 2, &Budget::default(), 1).unwrap();
        assert!(report.equal_characteristic);
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.orbits.len(), 0);
        assert_eq!(report.nabla_size, 0);
        assert_eq!(report.ring_order, 64);
        assert_eq!(report.classes[0].presenting, None);
    }

    #[test]
    fn classify_unramified() {
        // e = 1: a single orbit and a single class, aut count 1
        let report = classify(3, 1, 1, 3, &Budget::default(), 1).unwrap();
        assert_eq!(report.nabla_size, 6);
        assert_eq!(report.orbits.len(), 1);
        assert_eq!(report.orbits[0].size, 6);
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.classes[0].aut_count, Some(1));
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Budget { max_nabla: 4, max_ring: 1_000_000 };
        assert!(matches!(
            classify(6, 2, 1, 2, &tight, 1),
            Err(Error::BudgetExceeded { what: "|nabla|", .. })
        ));
    }
}
