//! Certifying packing/covering engine for tripods in migration digraphs.
//!
//! A *migration digraph* is a simple loopless digraph together with a set of
//! source vertices `S` and a set of sink vertices `T`. A *tripod* consists of
//! two paths from distinct sources that merge at a *centre* vertex and
//! continue along a common tail to a sink; any of the three pieces may have
//! length zero.
//!
//! Given such a digraph and a target `k`, [`pipeline::theorem1_certify`]
//! produces either `k` pairwise vertex-disjoint tripods or a vertex set that
//! meets every tripod, together with a provenance chain and a size bound.
//! Every answer carries an independently checkable witness; see
//! [`cert::verify_certificate`].
//!
//! The crate is organised as:
//!
//! * [`graph`] — digraphs, paths, linkages, tripods, and the structural
//!   transformations (reversal, deletion, vertex splitting, linegraph);
//! * [`menger`] — vertex-capacitated max-flow: maximum linkages, minimum
//!   separators, and the linkability test;
//! * [`matroid`] — gammoid independence oracles and matroid intersection
//!   with tight dual certificates;
//! * [`detect`] / [`cert`] — tripod detection, extraction, and certificate
//!   verification;
//! * [`onion`] — the auxiliary split digraph, onion-star harvesting, and the
//!   conversion of onion-stars into disjoint tripods;
//! * [`pipeline`] — bound arithmetic and the full certification recursion;
//! * [`oracle`] — brute-force oracles and deterministic instance generators;
//! * [`io`] — instance/certificate text formats and DOT export;
//! * [`batch`] — data-parallel helpers (rayon behind the `parallel` feature,
//!   with a sequential fallback).

pub mod batch;
pub mod cert;
pub mod detect;
pub mod graph;
pub mod io;
pub mod matroid;
pub mod menger;
pub mod onion;
pub mod oracle;
pub mod pipeline;

pub use cert::{Certificate, CertificateBody};
pub use graph::{Digraph, Linkage, MigrationDigraph, Path, Tripod, Vertex};
pub use pipeline::{BoundTable, CertifyConfig, G5Config, Route};
