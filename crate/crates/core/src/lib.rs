//! Exact perturbative invariants of closed 3-manifolds.
//!
//! The crate turns classical topological data of a 3-manifold (first Betti
//! number, torsion order, cup-product and linking data, Alexander polynomial)
//! into:
//!
//! - the LMO invariant as a truncated formal series of diagram classes
//!   ([`lmo`]),
//! - Rozansky-Witten invariants for a hyper-Kähler target described by its
//!   weight data ([`rw`]),
//! - the `λ^k` invariants and their connected-sum algebra ([`lambda`]),
//!
//! and ships an exact Grassmann algebra with Berezin integration
//! ([`berezin`]) used to check the finite-dimensional zero-mode integrals.
//!
//! All arithmetic is exact over the rationals; see [`series`] for the
//! substrate.

#![allow(clippy::needless_range_loop)]

pub mod berezin;
pub mod cli;
pub mod error;
pub mod io;
pub mod lambda;
pub mod lmo;
pub mod manifold;
pub mod rw;
pub mod series;
pub mod wheels;

pub use error::{Error, ErrorKind, Result};
pub use series::{MultiPoly, Partition, Rational, Ring, SymmetricLaurent, TruncatedSeries};
