//! Crate-wide error and validation-violation types.

use thiserror::Error;

use crate::model::{NodeId, TypeId};

/// Errors surfaced by the typed API.
///
/// Validation of whole game/assignment pairs reports [`Violation`] lists
/// instead; `Error` is for operations whose preconditions are broken.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node {node} is out of range (topology has {node_count} nodes)")]
    NodeOutOfRange { node: NodeId, node_count: u32 },

    #[error("node {0} is empty but the operation requires an occupant")]
    NodeEmpty(NodeId),

    #[error("node {0} is occupied but the operation requires an empty node")]
    NodeOccupied(NodeId),

    #[error("source and target of a jump must differ (both are {0})")]
    SameNode(NodeId),

    #[error("operation is only defined for one-type games (game has {0} types)")]
    MultiType(usize),

    #[error("max_steps must be positive")]
    ZeroMaxSteps,

    #[error("seeded-random scheduling requires a seed")]
    MissingSeed,

    #[error("mover whitelist node {0} is not occupied at trace start")]
    MoverNotOccupied(NodeId),

    #[error("enumeration cap of {cap} colorings exceeded")]
    CapExceeded { cap: u64 },

    #[error("invalid construction parameter: {0}")]
    InvalidParameter(String),

    #[error("construction search failed: {0}")]
    SearchFailed(String),

    #[error("invalid game data: {0:?}")]
    InvalidGame(Vec<Violation>),

    #[error("malformed fraction literal {0:?} (expected \"p/q\" or \"p\")")]
    BadFraction(String),
}

/// A single invariant violation found while validating raw game data or an
/// assignment against a game. Violations are data, not failures: callers
/// collect every one rather than stopping at the first.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("topology has no nodes")]
    NoNodes,

    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(NodeId, NodeId),

    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(NodeId, NodeId),

    #[error("edge ({0}, {1}) references a node outside the topology")]
    EdgeOutOfRange(NodeId, NodeId),

    #[error("topology not connected")]
    NotConnected,

    #[error("game must have at least one agent type")]
    NoTypes,

    #[error("type {0} has zero agents")]
    EmptyType(TypeId),

    #[error("game needs at least two agents (has {0})")]
    TooFewAgents(u32),

    #[error("topology has {nodes} nodes but the game needs more than {agents} (one empty node)")]
    NoEmptyNode { nodes: u32, agents: u32 },

    #[error("occupied node {0} is out of range")]
    OccupiedNodeOutOfRange(NodeId),

    #[error("node {node} carries unknown type {type_id}")]
    UnknownType { node: NodeId, type_id: TypeId },

    #[error("type count mismatch for type {type_id}: expected {expected}, found {found}")]
    TypeCountMismatch {
        type_id: TypeId,
        expected: u32,
        found: u32,
    },
}
