//! Structural analysis and chromatic-bound verification for `(P5, H)`-free
//! graphs.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`]: dense adjacency-row graphs on at most 64 vertices.
//! * [`patterns`]: the forbidden-pattern catalog, induced-subgraph search and
//!   perfection via odd holes and antiholes.
//! * [`invariants`]: exact clique, independence and chromatic numbers,
//!   perfect divisions and the perfect-divisibility oracle.
//! * [`structure`]: 5-hole neighborhoods, cutsets, homogeneous sets,
//!   dominating cliques and the structural lemma checkers.
//! * [`colorers`]: constructive coloring pipelines with bound certificates.
//! * [`enumerate`]: non-isomorphic graph generation and graph6 interchange.
//! * [`harness`]: batch verification over graph universes.

pub mod bits;
pub mod colorers;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod patterns;
pub mod structure;

pub use colorers::{BoundCertificate, Pipeline};
pub use enumerate::{decode_graph6, encode_graph6};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use invariants::{Coloring, PerfectDivision};
pub use patterns::{Embedding, Pattern};
