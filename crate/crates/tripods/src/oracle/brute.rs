use std::collections::BTreeSet;
use std::ops::ControlFlow;

use super::OracleError;
use crate::detect::tripod_exists;
use crate::graph::{Digraph, MigrationDigraph, Path, Tripod, Vertex};

/// Default vertex cap for the exhaustive oracles.
pub const DEFAULT_CAP: usize = 14;

/// Expansion counter shared across a brute-force search. Exhaustion is a
/// hard error, never a silently truncated answer.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    start: u64,
    left: u64,
}

impl SearchBudget {
    pub fn new(nodes: u64) -> Self {
        SearchBudget {
            start: nodes,
            left: nodes,
        }
    }

    fn spend(&mut self) -> Result<(), OracleError> {
        if self.left == 0 {
            return Err(OracleError::BudgetExhausted(self.start));
        }
        self.left -= 1;
        Ok(())
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(2_000_000)
    }
}

/// Collects every simple `from`–`to` path avoiding `banned`, in
/// lexicographic order of the vertex sequence.
fn simple_paths(
    d: &Digraph,
    from: Vertex,
    to: Vertex,
    banned: &BTreeSet<Vertex>,
    budget: &mut SearchBudget,
) -> Result<Vec<Path>, OracleError> {
    let mut out = Vec::new();
    if banned.contains(&from) || banned.contains(&to) || !d.contains(from) || !d.contains(to) {
        return Ok(out);
    }
    fn go(
        d: &Digraph,
        to: Vertex,
        banned: &BTreeSet<Vertex>,
        stack: &mut Vec<Vertex>,
        on_path: &mut BTreeSet<Vertex>,
        budget: &mut SearchBudget,
        out: &mut Vec<Path>,
    ) -> Result<(), OracleError> {
        budget.spend()?;
        let here = *stack.last().unwrap();
        if here == to {
            out.push(Path::new(stack.clone()).unwrap());
            return Ok(());
        }
        for w in d.succ(here) {
            if banned.contains(&w) || on_path.contains(&w) {
                continue;
            }
            stack.push(w);
            on_path.insert(w);
            go(d, to, banned, stack, on_path, budget, out)?;
            stack.pop();
            on_path.remove(&w);
        }
        Ok(())
    }
    let mut stack = vec![from];
    let mut on_path: BTreeSet<Vertex> = [from].into_iter().collect();
    go(d, to, banned, &mut stack, &mut on_path, budget, &mut out)?;
    Ok(out)
}

/// Enumerates every tripod of `d` by direct path-triple search: a sink, a
/// centre, a centre-to-sink tail, then two branches from distinct sources
/// avoiding the pieces already chosen. Completely independent of the
/// reachability characterisation in [`crate::detect`], so the two can
/// falsify each other.
///
/// The callback receives the shared budget back, so searches layered on top
/// of the enumeration keep spending from the same allowance.
pub fn enumerate_tripods(
    d: &MigrationDigraph,
    budget: &mut SearchBudget,
    f: &mut dyn FnMut(&mut SearchBudget, &Tripod) -> Result<ControlFlow<()>, OracleError>,
) -> Result<ControlFlow<()>, OracleError> {
    let sources: Vec<Vertex> = d.sources().iter().copied().collect();
    let empty = BTreeSet::new();
    for &t in d.sinks() {
        for c in d.base().vertices() {
            for tail in simple_paths(d.base(), c, t, &empty, budget)? {
                let mut tail_block = tail.vertex_set();
                tail_block.remove(&c);
                for (i, &s1) in sources.iter().enumerate() {
                    for b1 in simple_paths(d.base(), s1, c, &tail_block, budget)? {
                        let mut block2 = tail_block.clone();
                        block2.extend(b1.vertices().iter().copied());
                        block2.remove(&c);
                        for &s2 in &sources[i + 1..] {
                            for b2 in simple_paths(d.base(), s2, c, &block2, budget)? {
                                let tripod = Tripod::new(b1.clone(), b2, tail.clone())
                                    .expect("pieces were built disjoint");
                                if f(budget, &tripod)?.is_break() {
                                    return Ok(ControlFlow::Break(()));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Complete backtracking search for `k` pairwise vertex-disjoint tripods.
/// `Ok(None)` means the search space was exhausted without success.
pub fn find_disjoint_tripods(
    d: &MigrationDigraph,
    k: usize,
    budget: &mut SearchBudget,
) -> Result<Option<Vec<Tripod>>, OracleError> {
    disjoint_search(d, k, budget, false)
}

/// Complete backtracking search for `k` pairwise edge-disjoint tripods.
pub fn find_edge_disjoint_tripods(
    d: &MigrationDigraph,
    k: usize,
    budget: &mut SearchBudget,
) -> Result<Option<Vec<Tripod>>, OracleError> {
    disjoint_search(d, k, budget, true)
}

fn disjoint_search(
    d: &MigrationDigraph,
    k: usize,
    budget: &mut SearchBudget,
    edge_mode: bool,
) -> Result<Option<Vec<Tripod>>, OracleError> {
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut found: Option<Vec<Tripod>> = None;
    enumerate_tripods(d, budget, &mut |budget, tripod| {
        let rest = if edge_mode {
            let base = d.base().delete_edges(&tripod.edge_set());
            MigrationDigraph::new(base, d.sources().iter().copied(), d.sinks().iter().copied())
                .expect("edge deletion keeps vertices")
        } else {
            d.delete_vertices(&tripod.vertex_set())
                .expect("tripod vertices belong to d")
        };
        Ok(match disjoint_search(&rest, k - 1, budget, edge_mode)? {
            Some(mut rest_tripods) => {
                rest_tripods.insert(0, tripod.clone());
                found = Some(rest_tripods);
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        })
    })?;
    Ok(found)
}

fn check_cap(d: &MigrationDigraph, cap: usize) -> Result<(), OracleError> {
    let size = d.base().vertex_count();
    if size > cap {
        return Err(OracleError::CapExceeded { size, cap });
    }
    Ok(())
}

/// Exact maximum number of pairwise vertex-disjoint tripods, by exhaustive
/// search. Guarded by the vertex cap.
pub fn brute_packing_number(d: &MigrationDigraph, cap: usize) -> Result<usize, OracleError> {
    check_cap(d, cap)?;
    let mut k = 0;
    loop {
        let mut budget = SearchBudget::default();
        match find_disjoint_tripods(d, k + 1, &mut budget)? {
            Some(_) => k += 1,
            None => return Ok(k),
        }
    }
}

/// Decision form: does a packing of size `k` exist? Cheaper than the full
/// maximum because the search exits on the first witness.
pub fn brute_packing_at_least(
    d: &MigrationDigraph,
    k: usize,
    cap: usize,
) -> Result<bool, OracleError> {
    check_cap(d, cap)?;
    let mut budget = SearchBudget::default();
    Ok(find_disjoint_tripods(d, k, &mut budget)?.is_some())
}

/// Exact maximum number of pairwise edge-disjoint tripods, guarded by an
/// edge cap.
pub fn brute_edge_packing_number(
    d: &MigrationDigraph,
    edge_cap: usize,
) -> Result<usize, OracleError> {
    let size = d.base().edge_count();
    if size > edge_cap {
        return Err(OracleError::EdgeCapExceeded {
            size,
            cap: edge_cap,
        });
    }
    let mut k = 0;
    loop {
        let mut budget = SearchBudget::default();
        match find_edge_disjoint_tripods(d, k + 1, &mut budget)? {
            Some(_) => k += 1,
            None => return Ok(k),
        }
    }
}

/// Minimum-cardinality vertex set whose deletion leaves the digraph
/// tripod-free, by subset enumeration in increasing size with the
/// polynomial emptiness test.
pub fn brute_min_hitting_set(
    d: &MigrationDigraph,
    cap: usize,
) -> Result<BTreeSet<Vertex>, OracleError> {
    check_cap(d, cap)?;
    if !tripod_exists(d) {
        return Ok(BTreeSet::new());
    }
    let vertices: Vec<Vertex> = d.base().vertices().collect();
    for size in 1..=vertices.len() {
        let mut answer = None;
        each_combination(&vertices, size, &mut |subset| {
            let gone: BTreeSet<Vertex> = subset.iter().copied().collect();
            let rest = d.delete_vertices(&gone).unwrap();
            if !tripod_exists(&rest) {
                answer = Some(gone);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(hs) = answer {
            return Ok(hs);
        }
    }
    unreachable!("deleting every vertex leaves no tripod");
}

/// Calls `f` on every `size`-subset of `items` in lexicographic order.
fn each_combination<T: Copy>(
    items: &[T],
    size: usize,
    f: &mut dyn FnMut(&[T]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn go<T: Copy>(
        items: &[T],
        size: usize,
        from: usize,
        acc: &mut Vec<T>,
        f: &mut dyn FnMut(&[T]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if acc.len() == size {
            return f(acc);
        }
        let need = size - acc.len();
        for i in from..=items.len().saturating_sub(need) {
            acc.push(items[i]);
            go(items, size, i + 1, acc, f)?;
            acc.pop();
        }
        ControlFlow::Continue(())
    }
    go(items, size, 0, &mut Vec::new(), f)
}

/// Maximum number of pairwise vertex-disjoint `A`–`B`-paths, by enumerating
/// the simple paths and backtracking over disjoint subfamilies.
pub fn brute_max_disjoint_paths(
    d: &Digraph,
    a: &BTreeSet<Vertex>,
    b: &BTreeSet<Vertex>,
    budget: &mut SearchBudget,
) -> Result<usize, OracleError> {
    let mut paths: Vec<BTreeSet<Vertex>> = Vec::new();
    let empty = BTreeSet::new();
    for &s in a {
        for &t in b {
            for p in simple_paths(d, s, t, &empty, budget)? {
                paths.push(p.vertex_set());
            }
        }
    }
    fn best(
        paths: &[BTreeSet<Vertex>],
        from: usize,
        used: &BTreeSet<Vertex>,
        budget: &mut SearchBudget,
    ) -> Result<usize, OracleError> {
        budget.spend()?;
        let mut best_here = 0;
        for i in from..paths.len() {
            if paths[i].is_disjoint(used) {
                let mut used2 = used.clone();
                used2.extend(paths[i].iter().copied());
                let sub = 1 + best(paths, i + 1, &used2, budget)?;
                best_here = best_here.max(sub);
            }
        }
        Ok(best_here)
    }
    best(&paths, 0, &BTreeSet::new(), budget)
}

/// Size of the minimum vertex set meeting every `A`–`B`-path, by subset
/// enumeration in increasing size.
pub fn brute_min_separator_size(
    d: &Digraph,
    a: &BTreeSet<Vertex>,
    b: &BTreeSet<Vertex>,
) -> usize {
    let vertices: Vec<Vertex> = d.vertices().collect();
    for size in 0..=vertices.len() {
        let mut ok = false;
        each_combination(&vertices, size, &mut |subset| {
            let f: BTreeSet<Vertex> = subset.iter().copied().collect();
            if crate::menger::separator_kills_all_paths(d, a, b, &f) {
                ok = true;
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if ok {
            return size;
        }
    }
    vertices.len()
}
