//! Vertex-capacitated maximum flow: maximum `A`–`B`-linkages, minimum vertex
//! separators, and the linkability test behind the gammoid oracles.
//!
//! Vertex capacities are realised through the split construction from
//! [`crate::graph::SplitGraph`]: the `v_in -> v_out` edge carries capacity 1
//! while every other edge is effectively uncapacitated, so a minimum cut
//! crosses split edges only and reads off as a vertex set.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::{
    Digraph, GraphError, Half, Linkage, MigrationDigraph, Path, SplitGraph, Vertex,
};

/// Outcome of [`max_linkage`]: a maximum linkage and a minimum separator of
/// the same size (strong duality is asserted at construction).
#[derive(Clone, Debug)]
pub struct MengerResult {
    pub linkage: Linkage,
    pub separator: BTreeSet<Vertex>,
}

impl MengerResult {
    /// The `A`–`B` vertex connectivity: `|linkage| = |separator|`.
    pub fn value(&self) -> usize {
        self.linkage.len()
    }
}

const INF: i64 = i64::MAX / 4;

struct FlowEdge {
    to: usize,
    cap: i64,
    rev: usize,
}

struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    edges: Vec<FlowEdge>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let e = self.edges.len();
        self.adj[from].push(e);
        self.edges.push(FlowEdge {
            to,
            cap,
            rev: e + 1,
        });
        self.adj[to].push(e + 1);
        self.edges.push(FlowEdge {
            to: from,
            cap: 0,
            rev: e,
        });
        e
    }

    /// Edmonds–Karp; exact on integral capacities.
    fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        loop {
            let mut parent: Vec<Option<usize>> = vec![None; self.adj.len()];
            let mut queue = VecDeque::new();
            queue.push_back(source);
            let mut found = false;
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    found = true;
                    break;
                }
                for &e in &self.adj[u] {
                    let edge = &self.edges[e];
                    if edge.cap > 0 && parent[edge.to].is_none() && edge.to != source {
                        parent[edge.to] = Some(e);
                        queue.push_back(edge.to);
                    }
                }
            }
            if !found {
                return total;
            }
            let mut bottleneck = INF;
            let mut v = sink;
            while v != source {
                let e = parent[v].unwrap();
                bottleneck = bottleneck.min(self.edges[e].cap);
                v = self.edges[self.edges[e].rev].to;
            }
            let mut v = sink;
            while v != source {
                let e = parent[v].unwrap();
                self.edges[e].cap -= bottleneck;
                let rev = self.edges[e].rev;
                self.edges[rev].cap += bottleneck;
                v = self.edges[rev].to;
            }
            total += bottleneck;
        }
    }

    /// Vertices reachable from `source` in the residual graph.
    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let edge = &self.edges[e];
                if edge.cap > 0 && !seen[edge.to] {
                    seen[edge.to] = true;
                    queue.push_back(edge.to);
                }
            }
        }
        seen
    }
}

struct VertexFlow {
    split: SplitGraph,
    net: FlowNetwork,
    index: BTreeMap<Vertex, usize>,
    verts: Vec<Vertex>,
    source: usize,
    sink: usize,
    value: usize,
}

/// Builds the unit-vertex-capacity network for `A`–`B` flows and runs it.
fn run_vertex_flow(d: &Digraph, a: &BTreeSet<Vertex>, b: &BTreeSet<Vertex>) -> VertexFlow {
    let split = SplitGraph::build(d);
    let verts: Vec<Vertex> = split.graph().vertices().collect();
    let index: BTreeMap<Vertex, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = verts.len();
    let (source, sink) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for v in d.vertices() {
        net.add_edge(index[&split.in_copy(v)], index[&split.out_copy(v)], 1);
    }
    for (u, w) in d.edges() {
        net.add_edge(index[&split.out_copy(u)], index[&split.in_copy(w)], INF);
    }
    for &v in a {
        net.add_edge(source, index[&split.in_copy(v)], INF);
    }
    for &v in b {
        net.add_edge(index[&split.out_copy(v)], sink, INF);
    }
    let value = net.max_flow(source, sink) as usize;
    VertexFlow {
        split,
        net,
        index,
        verts,
        source,
        sink,
        value,
    }
}

impl VertexFlow {
    /// Decomposes the flow into vertex-disjoint paths in the original graph.
    ///
    /// Every edge of the network carries at most one unit (throughput of each
    /// node is capped by its split edge), so following unconsumed flow edges
    /// from the super-source peels off one path per unit.
    fn extract_linkage(&self, d: &Digraph, a: &BTreeSet<Vertex>) -> Linkage {
        // Net flow left to consume on each forward edge; forward edges sit at
        // even indices and their reverse edge's residual equals their flow.
        let mut remaining: Vec<i64> = (0..self.net.edges.len())
            .map(|e| {
                if e % 2 == 0 {
                    self.net.edges[e + 1].cap
                } else {
                    0
                }
            })
            .collect();
        let mut paths = Vec::new();
        for &e in &self.net.adj[self.source] {
            if e % 2 != 0 || remaining[e] == 0 {
                continue;
            }
            remaining[e] -= 1;
            let mut here = self.net.edges[e].to;
            let mut originals = Vec::new();
            while here != self.sink {
                if let Some((orig, Half::In)) = self.split.original(self.verts[here]) {
                    originals.push(orig);
                }
                let mut next = None;
                for &f in &self.net.adj[here] {
                    if f % 2 == 0 && remaining[f] > 0 {
                        remaining[f] -= 1;
                        next = Some(self.net.edges[f].to);
                        break;
                    }
                }
                here = next.expect("flow conservation");
            }
            let path = Path::new(originals).expect("unit throughput keeps flow paths simple");
            debug_assert!(a.contains(&path.start()));
            debug_assert!(path.validate_in(d).is_ok());
            paths.push(path);
        }
        Linkage::new(paths).expect("unit vertex capacities force disjointness")
    }

    /// Separator: vertices whose in-copy is residually reachable from the
    /// super-source while the out-copy is not. Uncapacitated edges cannot
    /// cross the reachability frontier, so exactly `value` split edges do.
    fn extract_separator(&self) -> BTreeSet<Vertex> {
        let reach = self.net.residual_reachable(self.source);
        self.split
            .graph()
            .vertices()
            .filter_map(|w| match self.split.original(w) {
                Some((orig, Half::In)) => {
                    let vin = self.index[&w];
                    let vout = self.index[&self.split.out_copy(orig)];
                    (reach[vin] && !reach[vout]).then_some(orig)
                }
                _ => None,
            })
            .collect()
    }
}

/// Maximum `A`–`B`-linkage and a minimum vertex set meeting every `A`–`B`-path.
///
/// Separator vertices may include vertices of `A` or `B`; a vertex of
/// `A ∩ B` is itself a length-0 `A`–`B`-path and forces the separator to
/// contain it. When no `A`–`B`-path exists both parts are empty.
pub fn max_linkage(
    d: &Digraph,
    a: &BTreeSet<Vertex>,
    b: &BTreeSet<Vertex>,
) -> Result<MengerResult, GraphError> {
    for set in [a, b] {
        for &x in set {
            if !d.contains(x) {
                return Err(GraphError::UnknownVertex(x));
            }
        }
    }
    let flow = run_vertex_flow(d, a, b);
    let linkage = flow.extract_linkage(d, a);
    let separator = flow.extract_separator();
    assert_eq!(
        linkage.len(),
        flow.value,
        "flow decomposition must account for every unit"
    );
    assert_eq!(
        separator.len(),
        flow.value,
        "strong duality: min separator equals max linkage"
    );
    debug_assert!(separator_kills_all_paths(d, a, b, &separator));
    Ok(MengerResult { linkage, separator })
}

/// True iff no `A`–`B`-path survives deleting `f` (length-0 paths included).
pub fn separator_kills_all_paths(
    d: &Digraph,
    a: &BTreeSet<Vertex>,
    b: &BTreeSet<Vertex>,
    f: &BTreeSet<Vertex>,
) -> bool {
    let keep: BTreeSet<Vertex> = d.vertices().filter(|x| !f.contains(x)).collect();
    let rest = d.induced(&keep);
    let a_rest: BTreeSet<Vertex> = a.iter().copied().filter(|x| keep.contains(x)).collect();
    let reach = rest.reachable_from(&a_rest);
    !b.iter().any(|x| keep.contains(x) && reach.contains(x))
}

/// True iff an `X`–`Y`-linkage of size `|Y|` exists, i.e. every vertex of `Y`
/// is the end-vertex of one path. `Y = ∅` is linkable by the empty linkage.
pub fn is_linkable(
    d: &MigrationDigraph,
    x: &BTreeSet<Vertex>,
    y: &BTreeSet<Vertex>,
) -> Result<bool, GraphError> {
    if y.is_empty() {
        return Ok(true);
    }
    Ok(linkage_value(d.base(), x, y)? == y.len())
}

/// Max-flow value from `a` into `b` under unit vertex capacities, without
/// extracting witnesses.
pub fn linkage_value(
    d: &Digraph,
    a: &BTreeSet<Vertex>,
    b: &BTreeSet<Vertex>,
) -> Result<usize, GraphError> {
    for set in [a, b] {
        for &x in set {
            if !d.contains(x) {
                return Err(GraphError::UnknownVertex(x));
            }
        }
    }
    Ok(run_vertex_flow(d, a, b).value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::v;

    fn set(ids: &[u32]) -> BTreeSet<Vertex> {
        ids.iter().map(|&i| v(i)).collect()
    }

    #[test]
    fn single_edge() {
        let d = Digraph::new([v(0), v(1)], [(v(0), v(1))]).unwrap();
        let r = max_linkage(&d, &set(&[0]), &set(&[1])).unwrap();
        assert_eq!(r.value(), 1);
        assert_eq!(r.linkage.paths()[0].vertices(), &[v(0), v(1)]);
        assert!(r.separator == set(&[0]) || r.separator == set(&[1]));
    }

    #[test]
    fn diamond_has_connectivity_one() {
        // s -> a -> t, s -> b -> t.
        let d = Digraph::new(
            [v(0), v(1), v(2), v(3)],
            [(v(0), v(1)), (v(1), v(3)), (v(0), v(2)), (v(2), v(3))],
        )
        .unwrap();
        let r = max_linkage(&d, &set(&[0]), &set(&[3])).unwrap();
        assert_eq!(r.value(), 1);
        assert!(separator_kills_all_paths(&d, &set(&[0]), &set(&[3]), &r.separator));
    }

    #[test]
    fn two_disjoint_paths() {
        let d = Digraph::new(
            [v(0), v(1), v(2), v(3)],
            [(v(0), v(2)), (v(1), v(3))],
        )
        .unwrap();
        let r = max_linkage(&d, &set(&[0, 1]), &set(&[2, 3])).unwrap();
        assert_eq!(r.value(), 2);
        // No single vertex separates: check by exhaustive 1-subset deletion.
        for x in d.vertices() {
            let f = [x].into_iter().collect();
            assert!(!separator_kills_all_paths(&d, &set(&[0, 1]), &set(&[2, 3]), &f));
        }
    }

    #[test]
    fn overlap_forces_separator_membership() {
        let d = Digraph::new([v(0), v(1)], [(v(0), v(1))]).unwrap();
        let a = set(&[0]);
        let b = set(&[0, 1]);
        let r = max_linkage(&d, &a, &b).unwrap();
        assert_eq!(r.value(), 1);
        assert!(r.separator.contains(&v(0)));
    }

    #[test]
    fn no_path_means_empty_result() {
        let d = Digraph::new([v(0), v(1)], []).unwrap();
        let r = max_linkage(&d, &set(&[0]), &set(&[1])).unwrap();
        assert_eq!(r.value(), 0);
        assert!(r.linkage.is_empty() && r.separator.is_empty());
    }

    #[test]
    fn linkable_examples() {
        // Minimal tripod graph.
        let d = Digraph::new(
            [v(0), v(1), v(2), v(3)],
            [(v(0), v(2)), (v(1), v(2)), (v(2), v(3))],
        )
        .unwrap();
        let m = MigrationDigraph::new(d, [v(0), v(1)], [v(3)]).unwrap();
        assert!(is_linkable(&m, &set(&[0]), &set(&[])).unwrap());
        assert!(is_linkable(&m, &set(&[0]), &set(&[3])).unwrap());
        // Both sinks through the single centre: not linkable.
        let d2 = Digraph::new(
            [v(0), v(1), v(2), v(3), v(4)],
            [(v(0), v(2)), (v(1), v(2)), (v(2), v(3)), (v(2), v(4))],
        )
        .unwrap();
        let m2 = MigrationDigraph::new(d2, [v(0), v(1)], [v(3), v(4)]).unwrap();
        assert!(!is_linkable(&m2, &set(&[0, 1]), &set(&[3, 4])).unwrap());
    }

    #[test]
    fn comb_with_missing_source_is_not_linkable() {
        // 3 teeth but only 2 sources: flow caps at 2.
        let mut edges = Vec::new();
        // sources 0,1 feed a shared hub 2; hub reaches sinks 3,4,5.
        for s in [0, 1] {
            edges.push((v(s), v(2)));
        }
        for t in [3, 4, 5] {
            edges.push((v(2), v(t)));
        }
        let d = Digraph::new((0..6).map(v), edges).unwrap();
        let m = MigrationDigraph::new(d, [v(0), v(1)], [v(3), v(4), v(5)]).unwrap();
        assert!(!is_linkable(&m, &set(&[0, 1]), &set(&[3, 4, 5])).unwrap());
        assert_eq!(
            linkage_value(m.base(), &set(&[0, 1]), &set(&[3, 4, 5])).unwrap(),
            1 // everything funnels through the hub
        );
    }
}
