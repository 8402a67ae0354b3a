//! Construction and certification of clique immersions in graphs with
//! independence number at most 2.
//!
//! Given such a graph, the crate can build an explicit strong, totally-odd
//! immersion of K_{chi(G)} when the complement maps into an Andrasfai
//! graph ([`vergara::construct_chi_immersion`]), or of K_{2*floor(n/5)}
//! unconditionally ([`gauthier::construct_2n5_immersion`]), and it can
//! independently verify any certificate ([`immersion::verify_immersion`]).

pub mod andrasfai;
pub mod certificate;
pub mod gauthier;
pub mod gen;
pub mod graph;
pub mod immersion;
pub mod oracles;
pub mod rng;
pub mod set;
pub mod vergara;

pub use certificate::{verify_certificate, Certificate, CertificatePath};
pub use graph::{parse_graph, serialize_graph, Graph, Path, SetMode};
pub use immersion::{
    construct_from_clique_coloring, verify_immersion, Immersion, VerificationReport, Violation,
    ViolationKind,
};
pub use set::VertexSet;
