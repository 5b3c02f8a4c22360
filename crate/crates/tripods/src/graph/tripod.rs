use std::collections::BTreeSet;

use super::{Path, Vertex};

/// Two branches from distinct start vertices merging at a centre, followed by
/// a common tail. Structural invariants (shared centre, pairwise disjointness
/// except at the centre, distinct starts) are enforced at construction;
/// membership of the starts in `S` and of the tail end in `T` depends on a
/// host digraph and is checked by [`crate::cert::verify_tripod`].
///
/// Any of the three paths may have length 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tripod {
    branch1: Path,
    branch2: Path,
    tail: Path,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TripodShapeError {
    #[error("branches end at {0} and {1}, not at a common centre")]
    BranchEnds(Vertex, Vertex),
    #[error("tail starts at {0}, not at the centre {1}")]
    TailStart(Vertex, Vertex),
    #[error("start vertices coincide at {0}")]
    EqualStarts(Vertex),
    #[error("{0} is shared by two pieces but is not the centre")]
    SharedVertex(Vertex),
}

impl std::fmt::Debug for Tripod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Tripod{{b1={:?}, b2={:?}, tail={:?}}}",
            self.branch1, self.branch2, self.tail
        )
    }
}

impl Tripod {
    /// Builds a tripod from its two branches (ending at the centre) and its
    /// tail (starting at the centre). Branches are stored with the smaller
    /// start vertex first.
    pub fn new(branch1: Path, branch2: Path, tail: Path) -> Result<Self, TripodShapeError> {
        let c = branch1.end();
        if branch2.end() != c {
            return Err(TripodShapeError::BranchEnds(c, branch2.end()));
        }
        if tail.start() != c {
            return Err(TripodShapeError::TailStart(tail.start(), c));
        }
        if branch1.start() == branch2.start() {
            return Err(TripodShapeError::EqualStarts(branch1.start()));
        }
        for (a, b) in [
            (&branch1, &branch2),
            (&branch1, &tail),
            (&branch2, &tail),
        ] {
            let set_b = b.vertex_set();
            for &x in a.vertices() {
                if x != c && set_b.contains(&x) {
                    return Err(TripodShapeError::SharedVertex(x));
                }
            }
        }
        let (branch1, branch2) = if branch1.start() <= branch2.start() {
            (branch1, branch2)
        } else {
            (branch2, branch1)
        };
        Ok(Tripod {
            branch1,
            branch2,
            tail,
        })
    }

    pub fn s1(&self) -> Vertex {
        self.branch1.start()
    }

    pub fn s2(&self) -> Vertex {
        self.branch2.start()
    }

    pub fn sink(&self) -> Vertex {
        self.tail.end()
    }

    pub fn centre(&self) -> Vertex {
        self.tail.start()
    }

    pub fn branch1(&self) -> &Path {
        &self.branch1
    }

    pub fn branch2(&self) -> &Path {
        &self.branch2
    }

    pub fn tail(&self) -> &Path {
        &self.tail
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        let mut set = self.branch1.vertex_set();
        set.extend(self.branch2.vertices());
        set.extend(self.tail.vertices());
        set
    }

    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        let mut set = self.branch1.edge_set();
        set.extend(self.branch2.edges());
        set.extend(self.tail.edges());
        set
    }

    pub fn edge_count(&self) -> usize {
        self.branch1.len() + self.branch2.len() + self.tail.len()
    }

    pub fn is_vertex_disjoint_from(&self, other: &Tripod) -> bool {
        self.vertex_set().is_disjoint(&other.vertex_set())
    }

    pub fn is_edge_disjoint_from(&self, other: &Tripod) -> bool {
        self.edge_set().is_disjoint(&other.edge_set())
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
    fn minimal_tripod() {
        let t = Tripod::new(path(&[0, 2]), path(&[1, 2]), path(&[2, 3])).unwrap();
        assert_eq!(t.centre(), v(2));
        assert_eq!(t.sink(), v(3));
        assert_eq!((t.s1(), t.s2()), (v(0), v(1)));
    }

    #[test]
    fn degenerate_pieces_are_allowed() {
        // Branch of length 0: the centre is itself a start vertex.
        let t = Tripod::new(Path::single(v(2)), path(&[1, 2]), path(&[2, 3])).unwrap();
        assert_eq!(t.centre(), v(2));
        // Tail of length 0: the centre is the sink.
        let t = Tripod::new(path(&[0, 2]), path(&[1, 2]), Path::single(v(2))).unwrap();
        assert_eq!(t.sink(), v(2));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(
            Tripod::new(path(&[0, 2]), path(&[0, 2]), path(&[2, 3])),
            Err(TripodShapeError::EqualStarts(v(0)))
        );
        assert_eq!(
            Tripod::new(path(&[0, 4, 2]), path(&[1, 4, 2]), path(&[2, 3])),
            Err(TripodShapeError::SharedVertex(v(4)))
        );
        assert_eq!(
            Tripod::new(path(&[0, 2]), path(&[1, 3]), path(&[2, 5])),
            Err(TripodShapeError::BranchEnds(v(2), v(3)))
        );
    }
}
