//! Exact-arithmetic engine for jump Schelling games with self-inclusive
//! neighborhood utility.
//!
//! Agents of `k` types occupy the nodes of a connected location graph and
//! jump to empty nodes whenever that strictly increases their utility
//! `x_same / (1 + x_total)`, where `x_same` counts same-type occupied
//! neighbors and `x_total` counts all occupied neighbors. Every utility,
//! welfare, and ratio in this crate is an exact rational; equilibrium
//! conditions hinge on exact ties, so there is no floating point anywhere
//! in the computational paths.
//!
//! The crate is organized around five pieces:
//!
//! - [`model`]: topologies, games, assignments, and the utility function;
//! - [`dynamics`]: best-response jump dynamics with pluggable schedulers,
//!   the one-type ordinal potential, and cycle detection;
//! - [`analysis`]: equilibrium checking, brute-force enumeration of
//!   equilibria and optima, per-instance price of anarchy/stability, and
//!   the clique-based welfare decision problem;
//! - [`constructions`]: deterministic generators for the benchmark game
//!   families bundled with the crate, each with its reference assignments
//!   and closed-form expected values;
//! - [`verify`]: the verification battery that recomputes every bundled
//!   closed-form value from scratch (also reachable as the `verify-paper`
//!   CLI subcommand).
//!
//! See the `examples/` directory for runnable walkthroughs of each
//! capability, and the `schelling` binary for the file-based CLI.

pub mod analysis;
pub mod constructions;
pub mod dynamics;
pub mod error;
pub mod fraction;
pub mod io;
pub mod model;
pub mod verify;

pub use error::{Error, Violation};
pub use fraction::{frac, Fraction};
pub use model::{Assignment, Game, NeighborhoodCount, NodeId, Topology, TypeCounts, TypeId};
