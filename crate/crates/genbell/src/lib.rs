//! Exact engine and enumerator for generalized Bell and Stirling numbers.
//!
//! The crate computes S_{r,s}(n,k) and the row-sum Bell numbers B_{r,s}(n)
//! with arbitrary-precision integers along three independent routes — a
//! clique-absorption recurrence, a second published recurrence, and exact
//! falling-factorial coefficient extraction from the defining product
//! polynomial — and realizes the two combinatorial models behind the r = s
//! case: proper colourings of disjoint unions of cliques, and labelled
//! Eulerian digraphs whose edges split into ordered directed cycles, with
//! the explicit bijection between them.
//!
//! Computed families are cross-checked against committed sequence fixtures
//! (see [`crosscheck`]); truncated Dobinski-style series give floating-point
//! approximations of the same numbers (see [`dobinski`]).

pub mod colouring;
pub mod crosscheck;
pub mod digraph;
pub mod dobinski;
pub mod error;
pub mod numbers;
pub mod poly;
pub mod triangle;

pub use colouring::{
    enumerate_all_colourings, enumerate_colourings, for_each_colouring,
    for_each_colouring_any_k, is_proper, CliqueFamily, Colouring, VertexId,
};
pub use crosscheck::{
    check_sequence, load_fixtures, verify_conjectures, ConjectureReport, FixtureSet,
    SequenceCheck, SequenceFixture,
};
pub use digraph::{
    colouring_to_digraph, digraph_to_colouring, enumerate_digraphs, for_each_digraph,
    from_paths, to_paths, Edge, LabelledEulerianDigraph, LabelledPath, PathSystem,
};
pub use dobinski::{dobinski_bell, gen_dobinski};
pub use error::{Error, Result};
pub use numbers::{
    bell_mm, binomial, count_colourings_mixed, factorial, falling_factorial, gen_stirling_row,
    lah, stirling_mm, stirling_mm_blasiak, Natural, SignedInteger,
};
pub use poly::IntPolynomial;
pub use triangle::{Family, Triangle};
