use std::collections::BTreeMap;

use super::{Digraph, GraphError, MigrationDigraph, Vertex};

/// Reverses every edge; the vertex set is preserved.
pub fn reverse(d: &Digraph) -> Digraph {
    Digraph::new(d.vertices(), d.edges().map(|(u, w)| (w, u)))
        .expect("reversal is well formed")
}

/// The linegraph of a migration digraph together with the edge/vertex
/// correspondence, produced by [`linegraph`].
#[derive(Clone, Debug)]
pub struct LineGraph {
    migration: MigrationDigraph,
    edge_of_vertex: BTreeMap<Vertex, (Vertex, Vertex)>,
    vertex_of_edge: BTreeMap<(Vertex, Vertex), Vertex>,
}

impl LineGraph {
    pub fn migration(&self) -> &MigrationDigraph {
        &self.migration
    }

    pub fn edge_of(&self, v: Vertex) -> Option<(Vertex, Vertex)> {
        self.edge_of_vertex.get(&v).copied()
    }

    pub fn vertex_of(&self, e: (Vertex, Vertex)) -> Option<Vertex> {
        self.vertex_of_edge.get(&e).copied()
    }
}

/// Builds the digraph on the edge set of `d`: `(e, f)` is an edge whenever
/// `head(e) = tail(f)`. Sources become the edges leaving old sources, sinks
/// the edges entering old sinks.
///
/// Requires every source of `d` to have in-degree 0 and out-degree 1, and
/// every sink in-degree 1 and out-degree 0; the offending terminal is named
/// otherwise.
pub fn linegraph(d: &MigrationDigraph) -> Result<LineGraph, GraphError> {
    for &s in d.sources() {
        let (indeg, outdeg) = (d.base().in_degree(s), d.base().out_degree(s));
        if indeg != 0 || outdeg != 1 {
            return Err(GraphError::LineGraphDegree {
                role: "source",
                vertex: s,
                indeg,
                outdeg,
            });
        }
    }
    for &t in d.sinks() {
        let (indeg, outdeg) = (d.base().in_degree(t), d.base().out_degree(t));
        if indeg != 1 || outdeg != 0 {
            return Err(GraphError::LineGraphDegree {
                role: "sink",
                vertex: t,
                indeg,
                outdeg,
            });
        }
    }

    let mut edge_of_vertex = BTreeMap::new();
    let mut vertex_of_edge = BTreeMap::new();
    for (i, e) in d.base().edges().enumerate() {
        let lv = Vertex(i as u32);
        edge_of_vertex.insert(lv, e);
        vertex_of_edge.insert(e, lv);
    }

    let mut edges = Vec::new();
    for (&e, &le) in &vertex_of_edge {
        // Successors of e are the edges leaving head(e).
        let (_, head) = e;
        for w in d.base().succ(head) {
            let f = (head, w);
            edges.push((le, vertex_of_edge[&f]));
        }
    }

    let base = Digraph::new(edge_of_vertex.keys().copied(), edges)
        .expect("linegraph is well formed");
    let sources: Vec<Vertex> = vertex_of_edge
        .iter()
        .filter(|((tail, _), _)| d.is_source(*tail))
        .map(|(_, &lv)| lv)
        .collect();
    let sinks: Vec<Vertex> = vertex_of_edge
        .iter()
        .filter(|((_, head), _)| d.is_sink(*head))
        .map(|(_, &lv)| lv)
        .collect();
    let migration = MigrationDigraph::new(base, sources, sinks)?;
    Ok(LineGraph {
        migration,
        edge_of_vertex,
        vertex_of_edge,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::v;

    #[test]
    fn reverse_examples() {
        let d = Digraph::new([v(0), v(1)], []).unwrap();
        assert_eq!(reverse(&d), d);

        let d = Digraph::new([v(0), v(1)], [(v(0), v(1))]).unwrap();
        let r = reverse(&d);
        assert!(r.has_edge(v(1), v(0)) && !r.has_edge(v(0), v(1)));
    }

    #[test]
    fn linegraph_of_two_edge_path() {
        // s -> a -> t with S = {s}, T = {t}.
        let (s, a, t) = (v(0), v(1), v(2));
        let d = Digraph::new([s, a, t], [(s, a), (a, t)]).unwrap();
        let m = MigrationDigraph::new(d, [s], [t]).unwrap();
        let lg = linegraph(&m).unwrap();
        assert_eq!(lg.migration().base().vertex_count(), 2);
        assert_eq!(lg.migration().base().edge_count(), 1);
        assert_eq!(lg.migration().sources().len(), 1);
        assert_eq!(lg.migration().sinks().len(), 1);
        let src = *lg.migration().sources().iter().next().unwrap();
        let snk = *lg.migration().sinks().iter().next().unwrap();
        assert_eq!(lg.edge_of(src), Some((s, a)));
        assert_eq!(lg.edge_of(snk), Some((a, t)));
        assert!(lg.migration().base().has_edge(src, snk));
    }

    #[test]
    fn linegraph_rejects_bad_degrees() {
        // Source with two outgoing edges.
        let (s, a, b) = (v(0), v(1), v(2));
        let d = Digraph::new([s, a, b], [(s, a), (s, b)]).unwrap();
        let m = MigrationDigraph::new(d, [s], []).unwrap();
        match linegraph(&m) {
            Err(GraphError::LineGraphDegree { role, vertex, .. }) => {
                assert_eq!(role, "source");
                assert_eq!(vertex, s);
            }
            other => panic!("expected degree error, got {other:?}"),
        }
    }

    #[test]
    fn linegraph_of_minimal_tripod() {
        let (s1, s2, c, t) = (v(0), v(1), v(2), v(3));
        // Pendant edges keep the terminal degrees legal.
        let d = Digraph::new([s1, s2, c, t], [(s1, c), (s2, c), (c, t)]).unwrap();
        let m = MigrationDigraph::new(d, [s1, s2], [t]).unwrap();
        let lg = linegraph(&m).unwrap();
        assert_eq!(lg.migration().base().vertex_count(), 3);
        // Edges: (s1c -> ct), (s2c -> ct).
        assert_eq!(lg.migration().base().edge_count(), 2);
        let ct = lg.vertex_of((c, t)).unwrap();
        for e in [(s1, c), (s2, c)] {
            let le = lg.vertex_of(e).unwrap();
            assert!(lg.migration().base().has_edge(le, ct));
        }
    }
}
