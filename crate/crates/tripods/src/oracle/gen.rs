//! Deterministic instance generators. Same parameters and seed always yield
//! the identical instance.
//!
//! Shape contracts used by the pipeline tests:
//!
//! * [`comb`] — `teeth` pairwise disjoint S–T-paths `s_i -> m_i -> t_i`
//!   ("teeth") plus a spine path visiting every `m_i` once; the spine
//!   intersects each tooth exactly once, which is the linkage-plus-
//!   transversal shape needed by the segment dichotomy. The seed permutes
//!   the order in which the spine visits the teeth.
//! * [`comb_shared_block`] — a comb in which a designated block of teeth is
//!   crossed twice by the spine, so two spine stretches see the same paths.
//! * [`crossing_grid`] — two S–T-linkages of size `m` over an `m × m` grid
//!   with identical end sets, disjoint start sets, and all `m²` pairwise
//!   intersections.
//! * [`doubled_gadget`] — `blocks` disjoint copies of a single crossing
//!   pair; across blocks there are no intersections at all.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::OracleError;
use crate::graph::{Digraph, Linkage, MigrationDigraph, Path, Vertex};

fn v(id: usize) -> Vertex {
    Vertex(id as u32)
}

/// A comb: disjoint vertical teeth crossed once each by a horizontal spine.
#[derive(Clone, Debug)]
pub struct Comb {
    pub migration: MigrationDigraph,
    /// The teeth, an S–T-linkage of size `teeth`.
    pub teeth: Linkage,
    /// The spine, a path intersecting every tooth exactly once.
    pub spine: Path,
}

/// Builds a comb with `teeth` teeth. Tooth `i` is `s_i -> m_i -> t_i`; the
/// spine visits the `m_i` in an order drawn from `seed` (`None` keeps the
/// natural order).
pub fn comb(teeth: usize, seed: Option<u64>) -> Result<Comb, OracleError> {
    if teeth == 0 {
        return Err(OracleError::InvalidParams("comb needs at least one tooth".into()));
    }
    // ids: s_i = 3i, m_i = 3i + 1, t_i = 3i + 2
    let mut order: Vec<usize> = (0..teeth).collect();
    if let Some(seed) = seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut edges = Vec::new();
    let mut tooth_paths = Vec::new();
    for i in 0..teeth {
        edges.push((v(3 * i), v(3 * i + 1)));
        edges.push((v(3 * i + 1), v(3 * i + 2)));
        tooth_paths.push(Path::new(vec![v(3 * i), v(3 * i + 1), v(3 * i + 2)]).unwrap());
    }
    let spine_vertices: Vec<Vertex> = order.iter().map(|&i| v(3 * i + 1)).collect();
    for w in spine_vertices.windows(2) {
        edges.push((w[0], w[1]));
    }
    let base = Digraph::new((0..3 * teeth).map(v), edges).unwrap();
    let sources = (0..teeth).map(|i| v(3 * i));
    let sinks = (0..teeth).map(|i| v(3 * i + 2));
    let migration = MigrationDigraph::new(base, sources, sinks).unwrap();
    Ok(Comb {
        migration,
        teeth: Linkage::new(tooth_paths).unwrap(),
        spine: Path::new(spine_vertices).unwrap(),
    })
}

/// A comb whose spine crosses an initial stretch of fresh teeth, then a
/// designated `shared` block, then more fresh teeth, then the same `shared`
/// block again (through second crossing vertices on those teeth).
///
/// Tooth `i < shared` is `s_i -> m_i -> m'_i -> t_i` with the spine passing
/// `m_i` on the first visit and `m'_i` on the second; all other teeth are
/// `s_i -> m_i -> t_i`.
pub fn comb_shared_block(
    first_fresh: usize,
    shared: usize,
    second_fresh: usize,
) -> Result<Comb, OracleError> {
    if shared == 0 {
        return Err(OracleError::InvalidParams(
            "shared block must be nonempty".into(),
        ));
    }
    let teeth = first_fresh + shared + second_fresh;
    // ids: tooth i uses 4i..4i+3 (s, m, m', t); m' unused for fresh teeth.
    let mut edges = Vec::new();
    let mut tooth_paths = Vec::new();
    for i in 0..teeth {
        let (s, m, m2, t) = (v(4 * i), v(4 * i + 1), v(4 * i + 2), v(4 * i + 3));
        edges.push((s, m));
        if i < shared {
            edges.push((m, m2));
            edges.push((m2, t));
            tooth_paths.push(Path::new(vec![s, m, m2, t]).unwrap());
        } else {
            edges.push((m, t));
            tooth_paths.push(Path::new(vec![s, m, t]).unwrap());
        }
    }
    // Spine: fresh block A (teeth shared..shared+first_fresh), first pass of
    // the shared block, fresh block B, second pass of the shared block.
    let mut spine_vertices = Vec::new();
    for i in shared..shared + first_fresh {
        spine_vertices.push(v(4 * i + 1));
    }
    for i in 0..shared {
        spine_vertices.push(v(4 * i + 1));
    }
    for i in shared + first_fresh..teeth {
        spine_vertices.push(v(4 * i + 1));
    }
    for i in 0..shared {
        spine_vertices.push(v(4 * i + 2));
    }
    for w in spine_vertices.windows(2) {
        edges.push((w[0], w[1]));
    }
    let base = Digraph::new((0..4 * teeth).map(v), edges).unwrap();
    let sources = (0..teeth).map(|i| v(4 * i));
    let sinks = (0..teeth).map(|i| v(4 * i + 3));
    let migration = MigrationDigraph::new(base, sources, sinks).unwrap();
    Ok(Comb {
        migration,
        teeth: Linkage::new(tooth_paths).unwrap(),
        spine: Path::new(spine_vertices).unwrap(),
    })
}

/// Two linkages with shared ends and all pairwise crossings.
#[derive(Clone, Debug)]
pub struct CrossingPair {
    pub migration: MigrationDigraph,
    pub p_linkage: Linkage,
    pub q_linkage: Linkage,
}

/// An `m × m` grid: columns carry the P-linkage, rows the Q-linkage, and
/// column `c` meets row `r` at the grid cell `(r, c)`. Column `i` and row
/// `i` both end at the shared sink `y_i`.
pub fn crossing_grid(m: usize) -> Result<CrossingPair, OracleError> {
    if m == 0 {
        return Err(OracleError::InvalidParams("grid needs m >= 1".into()));
    }
    let cell = |r: usize, c: usize| v(r * m + c);
    let p_start = |c: usize| v(m * m + c);
    let q_start = |r: usize| v(m * m + m + r);
    let sink = |i: usize| v(m * m + 2 * m + i);

    let mut edges = Vec::new();
    let mut p_paths = Vec::new();
    let mut q_paths = Vec::new();
    for c in 0..m {
        let mut path = vec![p_start(c)];
        path.extend((0..m).map(|r| cell(r, c)));
        path.push(sink(c));
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        p_paths.push(Path::new(path).unwrap());
    }
    for r in 0..m {
        let mut path = vec![q_start(r)];
        path.extend((0..m).map(|c| cell(r, c)));
        path.push(sink(r));
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        q_paths.push(Path::new(path).unwrap());
    }
    let n = m * m + 3 * m;
    let base = Digraph::new((0..n).map(v), edges).unwrap();
    let sources = (0..m).flat_map(|i| [p_start(i), q_start(i)]);
    let sinks = (0..m).map(sink);
    let migration = MigrationDigraph::new(base, sources, sinks).unwrap();
    Ok(CrossingPair {
        migration,
        p_linkage: Linkage::new(p_paths).unwrap(),
        q_linkage: Linkage::new(q_paths).unwrap(),
    })
}

/// `blocks` vertex-disjoint crossing pairs. Block `b` is
/// `s1_b -> c_b -> y_b` and `s2_b -> c_b -> y_b`: the two paths share the
/// centre and the sink, and distinct blocks share nothing.
pub fn doubled_gadget(blocks: usize) -> Result<CrossingPair, OracleError> {
    if blocks == 0 {
        return Err(OracleError::InvalidParams("need at least one block".into()));
    }
    let mut edges = Vec::new();
    let mut p_paths = Vec::new();
    let mut q_paths = Vec::new();
    for b in 0..blocks {
        let (s1, s2, c, y) = (v(4 * b), v(4 * b + 1), v(4 * b + 2), v(4 * b + 3));
        edges.push((s1, c));
        edges.push((s2, c));
        edges.push((c, y));
        p_paths.push(Path::new(vec![s1, c, y]).unwrap());
        q_paths.push(Path::new(vec![s2, c, y]).unwrap());
    }
    let base = Digraph::new((0..4 * blocks).map(v), edges).unwrap();
    let sources = (0..blocks).flat_map(|b| [v(4 * b), v(4 * b + 1)]);
    let sinks = (0..blocks).map(|b| v(4 * b + 3));
    let migration = MigrationDigraph::new(base, sources, sinks).unwrap();
    Ok(CrossingPair {
        migration,
        p_linkage: Linkage::new(p_paths).unwrap(),
        q_linkage: Linkage::new(q_paths).unwrap(),
    })
}

/// Random simple loopless digraph with independently sampled source and sink
/// sets (which may overlap).
pub fn erdos_renyi(
    n: usize,
    p: f64,
    sources: usize,
    sinks: usize,
    seed: u64,
) -> Result<MigrationDigraph, OracleError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(OracleError::InvalidParams(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    if sources > n || sinks > n {
        return Err(OracleError::InvalidParams(format!(
            "cannot pick {sources} sources / {sinks} sinks from {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for w in 0..n {
            if u != w && rng.gen_bool(p) {
                edges.push((v(u), v(w)));
            }
        }
    }
    let base = Digraph::new((0..n).map(v), edges).unwrap();
    let source_set = sample_vertices(&mut rng, n, sources);
    let sink_set = sample_vertices(&mut rng, n, sinks);
    Ok(MigrationDigraph::new(base, source_set, sink_set).unwrap())
}

/// Random layered DAG: `layers * width` vertices, forward edges between
/// consecutive layers with probability `p`; the first layer is `S`, the last
/// is `T`.
pub fn layered_dag(
    layers: usize,
    width: usize,
    p: f64,
    seed: u64,
) -> Result<MigrationDigraph, OracleError> {
    if layers == 0 || width == 0 {
        return Err(OracleError::InvalidParams(
            "layers and width must be positive".into(),
        ));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(OracleError::InvalidParams(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let at = |l: usize, w: usize| v(l * width + w);
    let mut edges = Vec::new();
    for l in 0..layers.saturating_sub(1) {
        for a in 0..width {
            for b in 0..width {
                if rng.gen_bool(p) {
                    edges.push((at(l, a), at(l + 1, b)));
                }
            }
        }
    }
    let base = Digraph::new((0..layers * width).map(v), edges).unwrap();
    let sources = (0..width).map(|w| at(0, w));
    let sinks = (0..width).map(|w| at(layers - 1, w));
    Ok(MigrationDigraph::new(base, sources, sinks).unwrap())
}

fn sample_vertices(rng: &mut ChaCha8Rng, n: usize, count: usize) -> Vec<Vertex> {
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let mut picked: Vec<usize> = ids.into_iter().take(count).collect();
    picked.sort_unstable();
    picked.into_iter().map(v).collect()
}
