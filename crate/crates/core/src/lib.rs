//! Zagreb indices and connectivity of bipartite graphs.
//!
//! The crate computes the first and second Zagreb indices, exact vertex and
//! edge connectivity, builds the extremal family `O_k ∨₁ (K₁ ∪ K_{n-r-1,r-k})`
//! and checks by exhaustive search which bipartite graphs of a given order
//! and connectivity maximise each index.

pub mod connectivity;
pub mod constructions;
mod error;
pub mod exec;
mod flow;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod transforms;
pub mod verify;

pub use connectivity::{
    edge_connectivity, edge_connectivity_value, is_k_connected, vertex_connectivity,
    vertex_connectivity_value, CutKind, CutMembers, CutWitness,
};
pub use constructions::{
    build_family, complete_bipartite, family_m1, family_m2, predict, predicted_extremal,
    FamilyParams, Mode, Prediction, VertexLayout,
};
pub use error::{GraphError, OracleError, ParamError, ParseError, TransformError};
pub use exec::Strategy;
pub use graph::{
    bipartition_of, is_bipartite, m1, m2, min_degree, Bipartition, Graph, Index, IndexValue,
};
pub use io::{decode_auto, decode_edge_list, decode_graph6, encode_edge_list, encode_graph6};
pub use oracle::{search_max, search_max_at_least, SearchReport, SearchSpec};
