//! Cyclic subgroup graphs of finite groups and line-graph recognition.
//!
//! The crate builds the Hasse diagram of the cyclic subgroups of a finite
//! group, decides whether a graph is a line graph (by constructing a root
//! and, independently, by searching for the nine minimal forbidden induced
//! subgraphs), and checks which groups have a cyclic subgroup graph that is a
//! line graph over a catalog of small groups.

pub mod arith;
pub mod catalog;
pub mod graph;
pub mod group;
pub mod lattice;
pub mod line;
pub mod verify;
