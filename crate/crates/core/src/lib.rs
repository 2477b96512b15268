//! Exact tools for link diagrams: PD codes, determinants (Goeritz and
//! Kauffman bracket), Tait graphs, pretzel/Montesinos/rational families,
//! quasi-alternating certificate search and census verification of
//! `c(L) <= det(L)`.
//!
//! ```
//! use qalink::{determinant, parse_pd, qa_search, qa::DEFAULT_BUDGET};
//!
//! let trefoil = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]").unwrap();
//! assert_eq!(determinant(&trefoil), 3.into());
//! let verdict = qa_search(&trefoil, DEFAULT_BUDGET);
//! assert!(verdict.certificate().is_some_and(qalink::verify_certificate));
//! ```

pub mod census;
pub mod diagram;
pub mod error;
pub mod families;
pub mod invariants;
pub mod linalg;
pub mod qa;
pub mod tait;
mod util;

pub use diagram::{parse_pd, Crossing, LinkDiagram, PdCode, Smoothing};
pub use error::{Error, Result};
pub use invariants::{determinant, determinant_oracle, kauffman_bracket, BracketPolynomial, Zeta8};
pub use num_bigint::BigInt;
pub use qa::{qa_search, quick_obstructions, verify_certificate, NotQaReason, QaCertificate, QaVerdict};
pub use tait::{spanning_tree_count, tait_graph, TaitGraph};
