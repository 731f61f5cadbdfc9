//! Exact arithmetic for finite chain rings.
//!
//! A finite chain ring is a finite local ring whose ideals form a chain;
//! equivalently a finite local principal ideal ring.  Every such ring is
//! determined by five invariants: the nilpotency index `a` of the maximal
//! ideal, the ramification index `e` (the valuation of `p`), the residue
//! degree `f`, the residue characteristic `p`, and -- once `(a, e, f, p)` are
//! fixed -- the set `Δ` of Eisenstein polynomials over the Galois coefficient
//! ring that have a root in the ring.  This crate constructs these rings,
//! computes in them exactly, and classifies the isomorphism types of a given
//! `(a, e, f, p)` by the orbit structure of a group action on Eisenstein
//! polynomials, evaluated through resultants.
//!
//! Modules build bottom-up:
//!
//! * [`zq`]: scalars mod `p^n`;
//! * [`ring`]: a minimal ring trait, dense polynomial kernels, and the
//!   division-free determinant;
//! * [`galois`]: the coefficient ring `GR(p^n, f)`, Teichmuller lifts,
//!   Frobenius, unit-group invariants;
//! * [`poly`]: polynomials over the coefficient ring;
//! * [`hensel`]: coprime factorization lifting and simple-root lifting;
//! * [`chain`]: the chain ring itself -- normal forms, valuations, digit
//!   expansions, uniformizers, quotients;
//! * [`action`]: Eisenstein polynomials, the substitution group and its
//!   resultant action, orbits, `Δ`, and classification reports.
//!
//! Everything is deterministic: elements and polynomials have canonical
//! encodings, sets are kept sorted by encoding, and reports serialize the
//! same bytes for the same input regardless of parallelism.

pub mod action;
pub mod chain;
pub mod galois;
pub mod hensel;
pub mod poly;
pub mod ring;
pub mod zq;

mod par;
mod tower;

pub use action::{
    aut_count, classify, delta, is_eisenstein, ActionContext, ClassificationReport, DeltaSet,
    IsoClassSummary, Orbit, OrbitSummary, SubstUnit,
};
pub use chain::{
    are_isomorphic, derive_presenting, ChainElem, ChainRing, EisensteinPoly, RingInfo, TypeParams,
};
pub use galois::{
    canonical_irreducible, det_division_free, unit_group_invariants, verify_unit_invariants,
    GaloisRing, GrElem,
};
pub use hensel::{lift_coprime_factorization, lift_root, CoprimeWitness};
pub use poly::GrPoly;

/// Limits for exhaustive work.  Operations that would enumerate more than
/// this fail with [`Error::BudgetExceeded`] instead of running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest Eisenstein set that will be materialized.
    pub max_nabla: u128,
    /// Largest ring (or uniformizer set) that will be scanned element-wise.
    pub max_ring: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nabla: 100_000, max_ring: 1_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus p^n = {p}^{n} is too large for exact machine arithmetic")]
    ModulusTooLarge { p: u64, n: u32 },
    #[error("polynomial is not irreducible modulo {p}")]
    NotIrreducible { p: u64 },
    #[error("degree mismatch: expected {expected}, found {found:?}")]
    DegreeMismatch { expected: usize, found: Option<usize> },
    #[error("division requires a monic divisor")]
    NonMonicDivisor,
    #[error("matrix is not square")]
    NonSquareMatrix,
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("factors are not coprime modulo p")]
    NotCoprime,
    #[error("input does not reduce to the stated factorization modulo p")]
    ReductionMismatch,
    #[error("value is not a root modulo p")]
    NotARoot,
    #[error("root is not simple modulo p")]
    RootNotSimple,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("element is not a uniformizer")]
    NotAUniformizer,
    #[error("expansion entry is not a Teichmuller representative")]
    NotATeichmullerRep,
    #[error("polynomial is not Eisenstein of degree {expected}")]
    NotEisenstein { expected: usize },
    #[error("quotient index {i} out of range 1..{a}")]
    QuotientIndex { i: u32, a: u32 },
    #[error("ring is already neat: e divides a")]
    AlreadyNeat,
    #[error("operation is undefined in equal characteristic (a = e)")]
    EqualCharacteristic,
    #[error("rings are presented over different coefficient rings")]
    ContextMismatch,
    #[error("{what} = {actual} exceeds the budget of {limit}")]
    BudgetExceeded { what: &'static str, actual: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
