use std::collections::BTreeMap;

use super::{Digraph, GraphError, Path, Vertex};

/// Result of splitting every vertex `v` into `v_in -> v_out`.
///
/// Each original edge `(u, w)` becomes `(u_out, w_in)`, so a unit capacity on
/// the split edge models a unit vertex capacity. The mapping relates
/// originals and copies both ways.
#[derive(Clone, Debug)]
pub struct SplitGraph {
    graph: Digraph,
    in_of: BTreeMap<Vertex, Vertex>,
    out_of: BTreeMap<Vertex, Vertex>,
    original: BTreeMap<Vertex, (Vertex, Half)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    In,
    Out,
}

impl SplitGraph {
    /// Splits every vertex of `d`. Copies are minted as fresh identifiers
    /// `0..2|V|` in vertex order (`v_in` even, `v_out` odd).
    pub fn build(d: &Digraph) -> SplitGraph {
        let mut in_of = BTreeMap::new();
        let mut out_of = BTreeMap::new();
        let mut original = BTreeMap::new();
        for (i, v) in d.vertices().enumerate() {
            let vin = Vertex(2 * i as u32);
            let vout = Vertex(2 * i as u32 + 1);
            in_of.insert(v, vin);
            out_of.insert(v, vout);
            original.insert(vin, (v, Half::In));
            original.insert(vout, (v, Half::Out));
        }
        let mut edges: Vec<(Vertex, Vertex)> =
            d.vertices().map(|v| (in_of[&v], out_of[&v])).collect();
        edges.extend(d.edges().map(|(u, w)| (out_of[&u], in_of[&w])));
        let graph = Digraph::new(original.keys().copied(), edges)
            .expect("split graph is well formed");
        SplitGraph {
            graph,
            in_of,
            out_of,
            original,
        }
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn in_copy(&self, v: Vertex) -> Vertex {
        self.in_of[&v]
    }

    pub fn out_copy(&self, v: Vertex) -> Vertex {
        self.out_of[&v]
    }

    /// Original vertex and half for a copy, if `w` is a copy.
    pub fn original(&self, w: Vertex) -> Option<(Vertex, Half)> {
        self.original.get(&w).copied()
    }

    /// The unique lifted path alternating in/out copies.
    pub fn lift_path(&self, p: &Path) -> Path {
        let mut vertices = Vec::with_capacity(2 * p.vertices().len());
        for &v in p.vertices() {
            vertices.push(self.in_copy(v));
            vertices.push(self.out_copy(v));
        }
        Path::new(vertices).expect("lifted path is a path")
    }

    /// Projects a split-graph path back to original vertices, collapsing the
    /// in/out copies of each traversed vertex.
    pub fn project_path(&self, p: &Path) -> Result<Path, GraphError> {
        let mut vertices: Vec<Vertex> = Vec::new();
        for &w in p.vertices() {
            let (orig, _) = self
                .original(w)
                .ok_or(GraphError::UnknownVertex(w))?;
            if vertices.last() != Some(&orig) {
                vertices.push(orig);
            }
        }
        Path::new(vertices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::v;

    #[test]
    fn split_counts() {
        // Single vertex, no edges -> 2 vertices, 1 edge.
        let d = Digraph::new([v(0)], []).unwrap();
        let s = SplitGraph::build(&d);
        assert_eq!(s.graph().vertex_count(), 2);
        assert_eq!(s.graph().edge_count(), 1);

        // Single edge (a, b) -> 4 vertices, 3 edges.
        let d = Digraph::new([v(0), v(1)], [(v(0), v(1))]).unwrap();
        let s = SplitGraph::build(&d);
        assert_eq!(s.graph().vertex_count(), 4);
        assert_eq!(s.graph().edge_count(), 3);
        assert!(s
            .graph()
            .has_edge(s.out_copy(v(0)), s.in_copy(v(1))));
    }

    #[test]
    fn path_lifting_doubles_length() {
        let d = Digraph::new(
            [v(0), v(1), v(2)],
            [(v(0), v(1)), (v(1), v(2))],
        )
        .unwrap();
        let s = SplitGraph::build(&d);
        let p = Path::new(vec![v(0), v(1), v(2)]).unwrap();
        let lifted = s.lift_path(&p);
        assert_eq!(lifted.len(), 2 * p.len() + 1);
        lifted.validate_in(s.graph()).unwrap();
        assert_eq!(s.project_path(&lifted).unwrap(), p);
    }
}
