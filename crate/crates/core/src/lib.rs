//! Exact-arithmetic engine for representation-theoretic and Hodge-theoretic
//! computations on abelian varieties and classical groups.
//!
//! The crate is organised in layers:
//!
//! * [`exactlin`] — rational scalars, matrices and canonical subspace bases;
//! * [`partitions`] — Young diagrams, standard tableaux and Young symmetrizers;
//! * [`weylconstruct`] — the explicit tensor-space model of Weyl's construction
//!   for `Sp(2n)` and `O(2n)`: contractions, traceless tensors and the spaces
//!   obtained by intersecting Schur images with them;
//! * [`characters`] — an independent character-theoretic oracle (weight
//!   multisets, Weyl dimension formula, Freudenthal multiplicities, peeling);
//! * [`hodgemotive`] — bigraded Hodge tables, super plethysm, primitive
//!   filtration, Kleiman projector models, Molien counts;
//! * [`lefschetz`] — Albert-type descriptors of abelian varieties, Lefschetz
//!   group data, and coniveau certificates for `H^k(A^m)`.
//!
//! Everything is computed over ℚ with arbitrary-precision integers; there is
//! no floating point anywhere. All values are immutable after construction
//! and all operations are pure, so concurrent reads are safe. The crate is
//! `no_std` (with `alloc`); IO and the command-line front end live in the
//! companion `lefrep` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod characters;
pub mod exactlin;
pub mod hodgemotive;
pub mod lefschetz;
pub mod partitions;
pub mod weylconstruct;
