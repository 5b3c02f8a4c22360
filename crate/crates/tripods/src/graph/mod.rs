//! Digraph data model: vertices, edges, paths, linkages, tripods, and the
//! structural transformations used throughout the crate.
//!
//! All values are immutable after construction. Vertex identifiers are opaque
//! and totally ordered, and every set iterates in that order, so all
//! algorithms built on top are deterministic.

mod digraph;
mod path;
mod split;
mod transform;
mod tripod;
mod undirected;

pub use digraph::{Digraph, MigrationDigraph};
pub use path::{Linkage, Path};
pub use split::SplitGraph;
pub use transform::{linegraph, reverse, LineGraph};
pub use tripod::Tripod;
pub use undirected::UndirectedGraph;

use std::collections::BTreeSet;
use std::fmt;

/// Opaque vertex identifier. Ordering is total and drives every tie-break.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Convenience for tests and generators.
pub fn v(id: u32) -> Vertex {
    Vertex(id)
}

/// Errors raised by graph construction and the structural operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("edge endpoint {0} is not a declared vertex")]
    UnknownEndpoint(Vertex),
    #[error("vertex {0} is not in the digraph")]
    UnknownVertex(Vertex),
    #[error("set {role} contains {vertex}, which is not a vertex of the digraph")]
    TerminalOutsideGraph { role: &'static str, vertex: Vertex },
    #[error("path is empty")]
    EmptyPath,
    #[error("path repeats vertex {0}")]
    RepeatedVertex(Vertex),
    #[error("missing edge {0} -> {1}")]
    MissingEdge(Vertex, Vertex),
    #[error("paths are not pairwise vertex-disjoint: {0} is shared")]
    NotDisjoint(Vertex),
    #[error("vertex {0} does not lie on the path")]
    NotOnPath(Vertex),
    #[error("{from} occurs after {to} on the path")]
    SubpathOrder { from: Vertex, to: Vertex },
    #[error("{role} {vertex} has in-degree {indeg} and out-degree {outdeg}, \
             which violates the linegraph degree requirements")]
    LineGraphDegree {
        role: &'static str,
        vertex: Vertex,
        indeg: usize,
        outdeg: usize,
    },
}

pub(crate) fn check_subset(
    set: &BTreeSet<Vertex>,
    universe: &BTreeSet<Vertex>,
    role: &'static str,
) -> Result<(), GraphError> {
    for &x in set {
        if !universe.contains(&x) {
            return Err(GraphError::TerminalOutsideGraph { role, vertex: x });
        }
    }
    Ok(())
}
