use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{check_subset, GraphError, Vertex};

/// A finite simple loopless digraph.
///
/// Edges are stored as a set of ordered pairs; successor and predecessor
/// lists are materialised at construction so traversals are cheap and iterate
/// in vertex order.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>,
    succ: BTreeMap<Vertex, BTreeSet<Vertex>>,
    pred: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph{{V={:?}, E={:?}}}", self.vertices, self.edges)
    }
}

impl Digraph {
    /// Builds a digraph, rejecting loops and undeclared endpoints.
    /// Duplicate edges collapse (the edge set is a set).
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut edge_set = BTreeSet::new();
        for (u, w) in edges {
            if u == w {
                return Err(GraphError::LoopEdge(u));
            }
            if !vertices.contains(&u) {
                return Err(GraphError::UnknownEndpoint(u));
            }
            if !vertices.contains(&w) {
                return Err(GraphError::UnknownEndpoint(w));
            }
            edge_set.insert((u, w));
        }
        let mut succ: BTreeMap<Vertex, BTreeSet<Vertex>> =
            vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        let mut pred = succ.clone();
        for &(u, w) in &edge_set {
            succ.get_mut(&u).unwrap().insert(w);
            pred.get_mut(&w).unwrap().insert(u);
        }
        Ok(Digraph {
            vertices,
            edges: edge_set,
            succ,
            pred,
        })
    }

    pub fn empty() -> Self {
        Digraph::new([], []).unwrap()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, u: Vertex, w: Vertex) -> bool {
        self.edges.contains(&(u, w))
    }

    /// Successors of `v` in vertex order. Empty for unknown vertices.
    pub fn succ(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.succ.get(&v).into_iter().flatten().copied()
    }

    /// Predecessors of `v` in vertex order. Empty for unknown vertices.
    pub fn pred(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.pred.get(&v).into_iter().flatten().copied()
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.succ.get(&v).map_or(0, |s| s.len())
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.pred.get(&v).map_or(0, |s| s.len())
    }

    /// All vertices reachable from `starts` (including the starts themselves).
    pub fn reachable_from(&self, starts: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
        let mut seen: BTreeSet<Vertex> = starts
            .iter()
            .copied()
            .filter(|v| self.contains(*v))
            .collect();
        let mut queue: VecDeque<Vertex> = seen.iter().copied().collect();
        while let Some(u) = queue.pop_front() {
            for w in self.succ(u) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Subgraph induced on `keep`; `keep` may contain unknown vertices.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Digraph {
        let vertices: Vec<Vertex> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| keep.contains(v))
            .collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|(u, w)| keep.contains(u) && keep.contains(w))
            .collect();
        Digraph::new(vertices, edges).expect("induced subgraph is well formed")
    }

    /// Removes the given edges, keeping all vertices.
    pub fn delete_edges(&self, gone: &BTreeSet<(Vertex, Vertex)>) -> Digraph {
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !gone.contains(e))
            .collect();
        Digraph::new(self.vertices.iter().copied(), edges).expect("edge deletion is well formed")
    }
}

/// A digraph with designated sources `S` and sinks `T`.
///
/// `S` and `T` may overlap; a length-0 path on a vertex of `S ∩ T` counts as
/// an `S`–`T`-path.
#[derive(Clone, PartialEq, Eq)]
pub struct MigrationDigraph {
    base: Digraph,
    sources: BTreeSet<Vertex>,
    sinks: BTreeSet<Vertex>,
}

impl std::fmt::Debug for MigrationDigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MigrationDigraph{{{:?}, S={:?}, T={:?}}}",
            self.base, self.sources, self.sinks
        )
    }
}

impl MigrationDigraph {
    pub fn new(
        base: Digraph,
        sources: impl IntoIterator<Item = Vertex>,
        sinks: impl IntoIterator<Item = Vertex>,
    ) -> Result<Self, GraphError> {
        let sources: BTreeSet<Vertex> = sources.into_iter().collect();
        let sinks: BTreeSet<Vertex> = sinks.into_iter().collect();
        check_subset(&sources, base.vertex_set(), "sources")?;
        check_subset(&sinks, base.vertex_set(), "sinks")?;
        Ok(MigrationDigraph {
            base,
            sources,
            sinks,
        })
    }

    pub fn base(&self) -> &Digraph {
        &self.base
    }

    pub fn sources(&self) -> &BTreeSet<Vertex> {
        &self.sources
    }

    pub fn sinks(&self) -> &BTreeSet<Vertex> {
        &self.sinks
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.sources.contains(&v)
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.sinks.contains(&v)
    }

    /// Deletes `gone` from the digraph, dropping incident edges and
    /// restricting sources and sinks to the survivors.
    pub fn delete_vertices(&self, gone: &BTreeSet<Vertex>) -> Result<Self, GraphError> {
        for &x in gone {
            if !self.base.contains(x) {
                return Err(GraphError::UnknownVertex(x));
            }
        }
        let keep: BTreeSet<Vertex> = self
            .base
            .vertices()
            .filter(|v| !gone.contains(v))
            .collect();
        let base = self.base.induced(&keep);
        let sources = self.sources.iter().copied().filter(|v| keep.contains(v));
        let sinks = self.sinks.iter().copied().filter(|v| keep.contains(v));
        MigrationDigraph::new(base, sources, sinks)
    }

    /// Same digraph with `sources`/`sinks` replaced (both must be subsets of
    /// the vertex set).
    pub fn with_terminals(
        &self,
        sources: impl IntoIterator<Item = Vertex>,
        sinks: impl IntoIterator<Item = Vertex>,
    ) -> Result<Self, GraphError> {
        MigrationDigraph::new(self.base.clone(), sources, sinks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::v;

    #[test]
    fn rejects_loops_and_unknown_endpoints() {
        assert_eq!(
            Digraph::new([v(0)], [(v(0), v(0))]),
            Err(GraphError::LoopEdge(v(0)))
        );
        assert_eq!(
            Digraph::new([v(0)], [(v(0), v(1))]),
            Err(GraphError::UnknownEndpoint(v(1)))
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let d = Digraph::new([v(0), v(1)], [(v(0), v(1)), (v(0), v(1))]).unwrap();
        assert_eq!(d.edge_count(), 1);
    }

    #[test]
    fn delete_vertices_restricts_everything() {
        // Minimal tripod graph: s1 -> c, s2 -> c, c -> t.
        let (s1, s2, c, t) = (v(0), v(1), v(2), v(3));
        let d = Digraph::new([s1, s2, c, t], [(s1, c), (s2, c), (c, t)]).unwrap();
        let m = MigrationDigraph::new(d, [s1, s2], [t]).unwrap();

        let unchanged = m.delete_vertices(&BTreeSet::new()).unwrap();
        assert_eq!(unchanged, m);

        let without_centre = m.delete_vertices(&[c].into_iter().collect()).unwrap();
        assert_eq!(without_centre.base().edge_count(), 0);
        assert_eq!(without_centre.base().vertex_count(), 3);
        assert_eq!(without_centre.sources().len(), 2);

        let err = m.delete_vertices(&[v(9)].into_iter().collect());
        assert_eq!(err, Err(GraphError::UnknownVertex(v(9))));
    }

    #[test]
    fn terminals_must_be_vertices() {
        let d = Digraph::new([v(0)], []).unwrap();
        assert!(MigrationDigraph::new(d, [v(7)], []).is_err());
    }

    #[test]
    fn sources_and_sinks_may_overlap() {
        let d = Digraph::new([v(0), v(1)], [(v(0), v(1))]).unwrap();
        let m = MigrationDigraph::new(d, [v(0), v(1)], [v(1)]).unwrap();
        assert!(m.is_source(v(1)) && m.is_sink(v(1)));
    }
}
