//! Labelled hypertrees and bipartite trees: exact counts with prescribed
//! hyperedge sizes and vertex degrees, the bijective codes behind those
//! counts, uniform samplers built on the codes, and a brute-force oracle.
//!
//! ```
//! use hypertree_core::{decode, encode, Hypertree};
//!
//! let t = Hypertree::new(3, vec![vec![0, 1], vec![1, 2, 3]]).unwrap();
//! let code = encode(&t).unwrap();
//! assert_eq!(code.partition().blocks(), &[vec![1], vec![2, 3]]);
//! assert_eq!(code.word().letters(), &[1]);
//! assert_eq!(decode(&code).unwrap(), t);
//! ```

pub mod bipartite;
pub mod codec;
pub mod counting;
mod error;
pub mod json;
pub mod model;
pub mod oracle;
pub mod sampling;
pub mod selftest;
mod unionfind;

pub use bipartite::{decode_bipartite, encode_bipartite, BipartiteCode, BipartiteTree, Side};
pub use codec::{decode, encode, partition_of, HypertreeCode};
pub use counting::{BigCount, Probability};
pub use error::{Error, Result};
pub use model::{
    validate_hypertree, CodeWord, DegreeVector, Hyperedge, Hypergraph, Hypertree, SetPartition,
    SizePartition, Vertex,
};
