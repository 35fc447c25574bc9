//! Construction and verification of MDS codes with prescribed hull
//! dimension, built from (extended) generalized Reed–Solomon codes over
//! finite fields, together with the entanglement-assisted quantum
//! error-correcting codes (EAQECCs) they induce.
//!
//! The crate is organized bottom-up:
//!
//! - [`gf`]: exact finite-field arithmetic `F_{p^e}` with the quadratic
//!   tower `F_q ⊂ F_{q²}` and conjugation `x ↦ x^q`;
//! - [`poly`]: univariate polynomials over a field context;
//! - [`linalg`]: dense exact matrices, row reduction, kernels, ranks;
//! - [`code`]: (extended) GRS codes, duals, hulls, minimum distance, and
//!   the polynomial dual-membership oracle;
//! - [`constructions`]: one factory per hull-dimension theorem (A1–A3
//!   Hermitian, B with hull reduction, C1–C6 Euclidean);
//! - [`eaqecc`]: entanglement counts, EAQECC parameter derivation, and the
//!   quantum Singleton bound;
//! - [`report`]: deterministic JSON/CSV/text run reports;
//! - [`tables`]: embedded expected result tables and sweep grids.
//!
//! Every claimed hull dimension is re-verified by exact linear algebra, and
//! every derived quantum parameter set is checked against the rank identity
//! and the Singleton bound; nothing is trusted from the construction alone.

pub mod code;
pub mod constructions;
pub mod eaqecc;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod tables;

pub use error::{Error, Result};
