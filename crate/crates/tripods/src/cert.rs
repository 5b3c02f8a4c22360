//! Certificates and their verification.
//!
//! Every answer the pipeline produces is wrapped in a [`Certificate`]:
//! either a packing of pairwise disjoint tripods or a hitting set whose
//! deletion leaves the digraph tripod-free, plus the provenance chain of the
//! constructions that produced it and the claimed size bound. Verification
//! depends only on the certificate and the instance, never on how the
//! certificate was found.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::detect::tripod_exists;
use crate::graph::{GraphError, MigrationDigraph, Tripod, Vertex};

/// Payload of a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateBody {
    /// Pairwise vertex-disjoint tripods.
    Packing(Vec<Tripod>),
    /// Vertices meeting every tripod.
    HittingSet(BTreeSet<Vertex>),
    /// Pairwise edge-disjoint tripods.
    EdgePacking(Vec<Tripod>),
    /// Edges meeting every tripod.
    EdgeHittingSet(BTreeSet<(Vertex, Vertex)>),
}

impl CertificateBody {
    pub fn kind(&self) -> &'static str {
        match self {
            CertificateBody::Packing(_) => "packing",
            CertificateBody::HittingSet(_) => "hitting-set",
            CertificateBody::EdgePacking(_) => "edge-packing",
            CertificateBody::EdgeHittingSet(_) => "edge-hitting-set",
        }
    }

    pub fn is_packing(&self) -> bool {
        matches!(
            self,
            CertificateBody::Packing(_) | CertificateBody::EdgePacking(_)
        )
    }
}

/// A certified answer for a target `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub body: CertificateBody,
    pub k: usize,
    /// Ordered tags naming the constructions that produced the answer.
    pub provenance: Vec<String>,
    /// Claimed size bound for hitting kinds (`f1(k)` under the active bound
    /// table); `None` for packings.
    pub bound: Option<BigUint>,
}

impl Certificate {
    pub fn packing(tripods: Vec<Tripod>, k: usize, provenance: Vec<String>) -> Self {
        Certificate {
            body: CertificateBody::Packing(tripods),
            k,
            provenance,
            bound: None,
        }
    }

    pub fn hitting(
        set: BTreeSet<Vertex>,
        k: usize,
        bound: BigUint,
        provenance: Vec<String>,
    ) -> Self {
        Certificate {
            body: CertificateBody::HittingSet(set),
            k,
            provenance,
            bound: Some(bound),
        }
    }
}

/// Reason a tripod fails verification against a migration digraph.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TripodViolation {
    #[error("piece {piece} is not a path of the digraph: {source}")]
    BadPath {
        piece: &'static str,
        source: GraphError,
    },
    #[error("start {0} is not a source")]
    StartNotSource(Vertex),
    #[error("tail ends at {0}, which is not a sink")]
    EndNotSink(Vertex),
}

/// Checks every tripod invariant against `d`: the three pieces are paths of
/// `d`, the starts are two distinct sources, the tail ends in a sink, and
/// the pieces share exactly the centre. Structural invariants are already
/// enforced by [`Tripod::new`]; this revalidates against the host.
pub fn verify_tripod(d: &MigrationDigraph, r: &Tripod) -> Result<(), TripodViolation> {
    for (piece, path) in [
        ("branch1", r.branch1()),
        ("branch2", r.branch2()),
        ("tail", r.tail()),
    ] {
        path.validate_in(d.base())
            .map_err(|source| TripodViolation::BadPath { piece, source })?;
    }
    for s in [r.s1(), r.s2()] {
        if !d.is_source(s) {
            return Err(TripodViolation::StartNotSource(s));
        }
    }
    if !d.is_sink(r.sink()) {
        return Err(TripodViolation::EndNotSink(r.sink()));
    }
    Ok(())
}

/// First violated clause of a certificate, if any.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateViolation {
    #[error("packing has {got} tripods but k = {want}")]
    TooFewTripods { got: usize, want: usize },
    #[error("tripod #{index} is invalid: {reason}")]
    InvalidTripod {
        index: usize,
        reason: TripodViolation,
    },
    #[error("tripods #{0} and #{1} share a vertex")]
    TripodsShareVertex(usize, usize),
    #[error("tripods #{0} and #{1} share an edge")]
    TripodsShareEdge(usize, usize),
    #[error("hitting set contains {0}, which is not a vertex of the digraph")]
    UnknownHitVertex(Vertex),
    #[error("hitting set names edge {0} -> {1}, which is not in the digraph")]
    UnknownHitEdge(Vertex, Vertex),
    #[error("a tripod survives deleting the hitting set")]
    SurvivingTripod,
    #[error("hitting set has size {size}, above the claimed bound {bound}")]
    BoundExceeded { size: usize, bound: BigUint },
    #[error("hitting certificate carries no size bound")]
    MissingBound,
}

/// Verifies a certificate against `d` and the target `k`.
///
/// Packing kinds need at least `k` valid tripods, pairwise disjoint in the
/// appropriate sense. Hitting kinds must leave a tripod-free digraph after
/// deletion and respect the claimed bound.
pub fn verify_certificate(
    d: &MigrationDigraph,
    k: usize,
    cert: &Certificate,
) -> Result<(), CertificateViolation> {
    match &cert.body {
        CertificateBody::Packing(tripods) => {
            verify_packing(d, k, tripods, Tripod::is_vertex_disjoint_from, true)
        }
        CertificateBody::EdgePacking(tripods) => {
            verify_packing(d, k, tripods, Tripod::is_edge_disjoint_from, false)
        }
        CertificateBody::HittingSet(set) => {
            for &x in set {
                if !d.base().contains(x) {
                    return Err(CertificateViolation::UnknownHitVertex(x));
                }
            }
            check_bound(set.len(), cert)?;
            let rest = d
                .delete_vertices(set)
                .expect("membership was checked above");
            if tripod_exists(&rest) {
                return Err(CertificateViolation::SurvivingTripod);
            }
            Ok(())
        }
        CertificateBody::EdgeHittingSet(set) => {
            for &(u, w) in set {
                if !d.base().has_edge(u, w) {
                    return Err(CertificateViolation::UnknownHitEdge(u, w));
                }
            }
            check_bound(set.len(), cert)?;
            let rest_base = d.base().delete_edges(set);
            let rest = MigrationDigraph::new(
                rest_base,
                d.sources().iter().copied(),
                d.sinks().iter().copied(),
            )
            .expect("edge deletion keeps all vertices");
            if tripod_exists(&rest) {
                return Err(CertificateViolation::SurvivingTripod);
            }
            Ok(())
        }
    }
}

fn verify_packing(
    d: &MigrationDigraph,
    k: usize,
    tripods: &[Tripod],
    disjoint: impl Fn(&Tripod, &Tripod) -> bool,
    vertex_mode: bool,
) -> Result<(), CertificateViolation> {
    if tripods.len() < k {
        return Err(CertificateViolation::TooFewTripods {
            got: tripods.len(),
            want: k,
        });
    }
    for (i, t) in tripods.iter().enumerate() {
        verify_tripod(d, t)
            .map_err(|reason| CertificateViolation::InvalidTripod { index: i, reason })?;
    }
    for i in 0..tripods.len() {
        for j in i + 1..tripods.len() {
            if !disjoint(&tripods[i], &tripods[j]) {
                return Err(if vertex_mode {
                    CertificateViolation::TripodsShareVertex(i, j)
                } else {
                    CertificateViolation::TripodsShareEdge(i, j)
                });
            }
        }
    }
    Ok(())
}

fn check_bound(size: usize, cert: &Certificate) -> Result<(), CertificateViolation> {
    let bound = cert
        .bound
        .as_ref()
        .ok_or(CertificateViolation::MissingBound)?;
    if &BigUint::from(size) > bound {
        return Err(CertificateViolation::BoundExceeded {
            size,
            bound: bound.clone(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{v, Digraph, Path};

    fn minimal_tripod_graph() -> MigrationDigraph {
        let (s1, s2, c, t) = (v(0), v(1), v(2), v(3));
        let d = Digraph::new([s1, s2, c, t], [(s1, c), (s2, c), (c, t)]).unwrap();
        MigrationDigraph::new(d, [s1, s2], [t]).unwrap()
    }

    fn minimal_tripod() -> Tripod {
        Tripod::new(
            Path::new(vec![v(0), v(2)]).unwrap(),
            Path::new(vec![v(1), v(2)]).unwrap(),
            Path::new(vec![v(2), v(3)]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn verify_tripod_accepts_valid_and_names_failures() {
        let m = minimal_tripod_graph();
        assert!(verify_tripod(&m, &minimal_tripod()).is_ok());

        // A tripod whose branch start is not a source.
        let bad = Tripod::new(
            Path::new(vec![v(2)]).unwrap(),
            Path::new(vec![v(1), v(2)]).unwrap(),
            Path::new(vec![v(2), v(3)]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            verify_tripod(&m, &bad),
            Err(TripodViolation::StartNotSource(v(2)))
        );
    }

    #[test]
    fn empty_hitting_set_on_tripod_free_digraph() {
        let d = Digraph::new([v(0), v(1)], [(v(0), v(1))]).unwrap();
        let m = MigrationDigraph::new(d, [v(0)], [v(1)]).unwrap();
        let cert = Certificate::hitting(BTreeSet::new(), 1, BigUint::from(0u32), vec![]);
        assert!(verify_certificate(&m, 1, &cert).is_ok());
    }

    #[test]
    fn two_disjoint_tripods_verify_as_packing_of_two() {
        // Two copies of the minimal tripod graph side by side.
        let mut edges = Vec::new();
        for base in [0, 4] {
            edges.push((v(base), v(base + 2)));
            edges.push((v(base + 1), v(base + 2)));
            edges.push((v(base + 2), v(base + 3)));
        }
        let d = Digraph::new((0..8).map(v), edges).unwrap();
        let m = MigrationDigraph::new(d, [v(0), v(1), v(4), v(5)], [v(3), v(7)]).unwrap();
        let tripods: Vec<Tripod> = [0u32, 4]
            .into_iter()
            .map(|b| {
                Tripod::new(
                    Path::new(vec![v(b), v(b + 2)]).unwrap(),
                    Path::new(vec![v(b + 1), v(b + 2)]).unwrap(),
                    Path::new(vec![v(b + 2), v(b + 3)]).unwrap(),
                )
                .unwrap()
            })
            .collect();
        let cert = Certificate::packing(tripods.clone(), 2, vec![]);
        assert!(verify_certificate(&m, 2, &cert).is_ok());

        // Duplicating a tripod breaks disjointness.
        let dup = Certificate::packing(vec![tripods[0].clone(), tripods[0].clone()], 2, vec![]);
        assert_eq!(
            verify_certificate(&m, 2, &dup),
            Err(CertificateViolation::TripodsShareVertex(0, 1))
        );
    }

    #[test]
    fn hitting_set_missing_a_needed_vertex_is_rejected() {
        let m = minimal_tripod_graph();
        let good = Certificate::hitting(
            [v(2)].into_iter().collect(),
            2,
            BigUint::from(16u32),
            vec![],
        );
        assert!(verify_certificate(&m, 2, &good).is_ok());
        let empty = Certificate::hitting(BTreeSet::new(), 2, BigUint::from(16u32), vec![]);
        assert_eq!(
            verify_certificate(&m, 2, &empty),
            Err(CertificateViolation::SurvivingTripod)
        );
    }

    #[test]
    fn bound_violations_are_reported() {
        let m = minimal_tripod_graph();
        let cert = Certificate::hitting(
            [v(2)].into_iter().collect(),
            2,
            BigUint::from(0u32),
            vec![],
        );
        assert_eq!(
            verify_certificate(&m, 2, &cert),
            Err(CertificateViolation::BoundExceeded {
                size: 1,
                bound: BigUint::from(0u32)
            })
        );
    }
}
