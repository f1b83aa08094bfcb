//! Combinatorial machinery for surface cluster algebras with punctures:
//! snake/band/loop graphs, loopstrings and loop modules, perfect-matching
//! and submodule lattices, cluster-variable expansion, skein resolutions,
//! and an independent seed-mutation oracle. All identities are checked as
//! exact Laurent-polynomial equalities over arbitrary-precision integers.

pub mod laurent;
pub mod loopstrings;
pub mod graphs;
pub mod matchings;
pub mod quivers;
pub mod representations;
pub mod convert;

#[cfg(test)]
mod word_graph_tests;
