use std::collections::{BTreeMap, BTreeSet};

use super::Vertex;

/// A small undirected simple graph, used by the Ramsey machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl UndirectedGraph {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        UndirectedGraph {
            adj: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect(),
        }
    }

    pub fn add_edge(&mut self, u: Vertex, w: Vertex) {
        assert!(u != w, "no loops");
        assert!(self.adj.contains_key(&u) && self.adj.contains_key(&w));
        self.adj.get_mut(&u).unwrap().insert(w);
        self.adj.get_mut(&w).unwrap().insert(u);
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, u: Vertex, w: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&w))
    }

    pub fn neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&u).into_iter().flatten().copied()
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adj.get(&u).map_or(0, |s| s.len())
    }

    /// Subgraph induced on `keep`.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> UndirectedGraph {
        let mut g = UndirectedGraph::new(keep.iter().copied().filter(|v| self.adj.contains_key(v)));
        for (&u, nbrs) in &self.adj {
            if !keep.contains(&u) {
                continue;
            }
            for &w in nbrs {
                if u < w && keep.contains(&w) {
                    g.add_edge(u, w);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, set: &BTreeSet<Vertex>) -> bool {
        set.iter().all(|&u| {
            set.iter()
                .all(|&w| u == w || self.adjacent(u, w))
        })
    }

    pub fn is_independent_set(&self, set: &BTreeSet<Vertex>) -> bool {
        set.iter()
            .all(|&u| set.iter().all(|&w| !self.adjacent(u, w)))
    }
}
