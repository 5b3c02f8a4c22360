use std::collections::BTreeSet;

use super::{Digraph, GraphError, Vertex};

/// A directed path, stored as its vertex sequence.
///
/// Vertices are distinct and the sequence is nonempty; a single vertex is a
/// length-0 path. Edges are recomputed against a host digraph on validation
/// rather than stored, so paths survive vertex deletions without going stale.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl std::fmt::Debug for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Path{:?}", self.vertices)
    }
}

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyPath);
        }
        let mut seen = BTreeSet::new();
        for &x in &vertices {
            if !seen.insert(x) {
                return Err(GraphError::RepeatedVertex(x));
            }
        }
        Ok(Path { vertices })
    }

    /// The length-0 path on a single vertex.
    pub fn single(v: Vertex) -> Self {
        Path { vertices: vec![v] }
    }

    pub fn start(&self) -> Vertex {
        *self.vertices.first().unwrap()
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    /// True for length-0 paths (a single vertex, no edges).
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.vertices.iter().copied().collect()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges().collect()
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Checks every consecutive pair against the host's edge set.
    pub fn validate_in(&self, host: &Digraph) -> Result<(), GraphError> {
        for &x in &self.vertices {
            if !host.contains(x) {
                return Err(GraphError::UnknownVertex(x));
            }
        }
        for (u, w) in self.edges() {
            if !host.has_edge(u, w) {
                return Err(GraphError::MissingEdge(u, w));
            }
        }
        Ok(())
    }

    /// Contiguous slice between the occurrences of `from` and `to`,
    /// inclusive. `from` must occur at or before `to`.
    pub fn subpath(&self, from: Vertex, to: Vertex) -> Result<Path, GraphError> {
        let i = self.position(from).ok_or(GraphError::NotOnPath(from))?;
        let j = self.position(to).ok_or(GraphError::NotOnPath(to))?;
        if i > j {
            return Err(GraphError::SubpathOrder { from, to });
        }
        Ok(Path {
            vertices: self.vertices[i..=j].to_vec(),
        })
    }

    /// Prefix ending at `to` (inclusive).
    pub fn prefix(&self, to: Vertex) -> Result<Path, GraphError> {
        self.subpath(self.start(), to)
    }

    /// Suffix starting at `from` (inclusive).
    pub fn suffix(&self, from: Vertex) -> Result<Path, GraphError> {
        self.subpath(from, self.end())
    }

    /// Concatenates two paths sharing exactly the junction vertex
    /// (`self.end() == other.start()`).
    pub fn join(&self, other: &Path) -> Result<Path, GraphError> {
        if self.end() != other.start() {
            return Err(GraphError::MissingEdge(self.end(), other.start()));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Path::new(vertices)
    }

    /// First vertex of `self` (in path order) that lies in `set`.
    pub fn first_in(&self, set: &BTreeSet<Vertex>) -> Option<Vertex> {
        self.vertices.iter().copied().find(|v| set.contains(v))
    }

    pub fn intersects(&self, other: &Path) -> bool {
        let set = other.vertex_set();
        self.vertices.iter().any(|v| set.contains(v))
    }
}

/// A family of pairwise vertex-disjoint paths, kept in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct Linkage {
    paths: Vec<Path>,
}

impl std::fmt::Debug for Linkage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Linkage{:?}", self.paths)
    }
}

impl Linkage {
    pub fn new(mut paths: Vec<Path>) -> Result<Self, GraphError> {
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        for p in &paths {
            for &x in p.vertices() {
                if !seen.insert(x) {
                    return Err(GraphError::NotDisjoint(x));
                }
            }
        }
        paths.sort();
        Ok(Linkage { paths })
    }

    pub fn empty() -> Self {
        Linkage { paths: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn iter(&self) -> impl Iterator<Item = &Path> {
        self.paths.iter()
    }

    pub fn starts(&self) -> BTreeSet<Vertex> {
        self.paths.iter().map(Path::start).collect()
    }

    pub fn ends(&self) -> BTreeSet<Vertex> {
        self.paths.iter().map(Path::end).collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.paths
            .iter()
            .flat_map(|p| p.vertices().iter().copied())
            .collect()
    }

    /// Keeps the canonically first `n` paths.
    pub fn truncate(&self, n: usize) -> Linkage {
        Linkage {
            paths: self.paths.iter().take(n).cloned().collect(),
        }
    }

    /// Sub-linkage of the paths satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&Path) -> bool) -> Linkage {
        Linkage {
            paths: self.paths.iter().filter(|p| keep(p)).cloned().collect(),
        }
    }

    pub fn validate_in(&self, host: &Digraph) -> Result<(), GraphError> {
        self.paths.iter().try_for_each(|p| p.validate_in(host))
    }

    /// The path ending at `v`, if any.
    pub fn path_ending_at(&self, v: Vertex) -> Option<&Path> {
        self.paths.iter().find(|p| p.end() == v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::v;

    fn path(ids: &[u32]) -> Path {
        Path::new(ids.iter().map(|&i| v(i)).collect()).unwrap()
    }

    #[test]
    fn subpath_examples() {
        let p = path(&[0, 1, 2, 3]);
        assert_eq!(p.subpath(p.start(), p.end()).unwrap(), p);
        assert_eq!(p.subpath(v(1), v(1)).unwrap(), Path::single(v(1)));
        assert_eq!(p.subpath(v(1), v(3)).unwrap(), path(&[1, 2, 3]));
        assert_eq!(
            p.subpath(v(3), v(1)),
            Err(GraphError::SubpathOrder {
                from: v(3),
                to: v(1)
            })
        );
        assert_eq!(p.subpath(v(7), v(1)), Err(GraphError::NotOnPath(v(7))));
    }

    #[test]
    fn path_invariants() {
        assert_eq!(Path::new(vec![]), Err(GraphError::EmptyPath));
        assert_eq!(
            Path::new(vec![v(0), v(1), v(0)]),
            Err(GraphError::RepeatedVertex(v(0)))
        );
        let p = Path::single(v(4));
        assert_eq!(p.len(), 0);
        assert_eq!(p.start(), p.end());
    }

    #[test]
    fn linkage_rejects_shared_vertices() {
        let a = path(&[0, 1]);
        let b = path(&[2, 1]);
        assert_eq!(
            Linkage::new(vec![a, b]),
            Err(GraphError::NotDisjoint(v(1)))
        );
    }

    #[test]
    fn path_validation_uses_host_edges() {
        let d = Digraph::new([v(0), v(1), v(2)], [(v(0), v(1))]).unwrap();
        assert!(path(&[0, 1]).validate_in(&d).is_ok());
        assert_eq!(
            path(&[0, 2]).validate_in(&d),
            Err(GraphError::MissingEdge(v(0), v(2)))
        );
    }
}
