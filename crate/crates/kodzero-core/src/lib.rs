//! Exact-arithmetic toolkit for the classification of symplectic sums of
//! rational and ruled 4-manifolds along positive-genus surfaces in the
//! Kodaira-dimension-zero regime.
//!
//! The crate is organised as a stack of small calculi:
//!
//! * [`intmat`] — arbitrary-precision integer matrices, Smith normal form
//!   with unimodular transforms, and rank-2 lattice reduction (Hermite bases
//!   and canonical coset representatives in `Z^2`).
//! * [`fpgroup`] — finitely presented groups as generator/relator data with
//!   free reduction, Tietze moves (adding and eliminating generators), and
//!   abelianization into invariant factors.
//! * [`homology`] — the second-homology lattices of the rational and ruled
//!   families (`CP^2` blown up, `S^2 x S^2`, and the `S^2`-bundles over a
//!   genus-`h` surface, blown up), anticanonical classes, the adjunction
//!   genus, and the numerical invariants `chi`, `sigma`, `c_1^2`.
//! * [`sumcalc`] — fiber sums along embedded surfaces: validity of a sum
//!   configuration, invariants of the sum, triviality and minimality
//!   predicates, and the blowup-trading moves that reduce a pair of summands
//!   to a standard pair.
//! * [`torusbundle`] — torus bundles over the torus presented by a commuting
//!   pair of `SL(2,Z)` monodromies and a twist vector, their fundamental
//!   groups and first homology, base changes, twist reduction, and the
//!   normal-form tags used to enumerate diffeomorphism families.
//! * [`glue`] — the two torus-complement pieces fibering over the annulus,
//!   their marked boundary data, normalization of boundary identifications
//!   into the even/odd standard forms, the glued fundamental group and the
//!   glued torus bundle, and the involution test distinguishing the two
//!   pieces.
//! * [`classifier`] — the end-to-end decision procedure: given two summands
//!   with distinguished surface classes, decide K3, Enriques, or a list of
//!   torus-bundle families (or reject with a reason), with a replayable
//!   certificate.
//!
//! The library is `no_std` (with `alloc`); all arithmetic is exact. The
//! companion binary crate provides the command-line interface and the file
//! formats.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod classifier;
pub mod fpgroup;
pub mod glue;
pub mod homology;
pub mod intmat;
pub mod sumcalc;
pub mod torusbundle;

pub use num_bigint::BigInt;

/// Three-valued truth for predicates that are decided only on part of their
/// domain: `True` and `False` are proofs, `Unknown` records that neither
/// direction is established by the implemented criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trilean {
    /// The predicate provably holds.
    True,
    /// The predicate provably fails.
    False,
    /// Neither direction is established.
    Unknown,
}

impl core::fmt::Display for Trilean {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Trilean::True => write!(f, "true"),
            Trilean::False => write!(f, "false"),
            Trilean::Unknown => write!(f, "unknown"),
        }
    }
}
