//! Exact computation in free groups and their automorphism groups.
//!
//! The crate provides, over the integers and with no floating point anywhere:
//!
//! - [`word`]: freely reduced words in a free group, endomorphisms given by
//!   generator images, and their composition.
//! - [`series`]: truncated Magnus expansions into noncommutative integer
//!   power series; lower-central-series weight and graded Lie classes.
//! - [`hall`]: basic commutators (Hall basis), the Witt rank formula, and
//!   realizations of basic commutators as words and tensors.
//! - [`zlin`]: exact integer linear algebra (rank, Smith normal form).
//! - [`liealg`]: derivations of the free Lie ring, their brackets, and graded
//!   ranks of finitely presented Lie rings.
//! - [`autgrp`]: named automorphism families (Magnus/McCool generators,
//!   partial inner automorphisms), relation verification suites, the
//!   Andreadakis filtration, Johnson homomorphisms and rank pipelines.
//! - [`cohom`]: Betti numbers of exterior-algebra quotients attached to
//!   almost-direct products of free groups.

pub mod autgrp;
pub mod cohom;
pub mod hall;
pub mod liealg;
pub mod series;
pub mod word;
pub mod zlin;
