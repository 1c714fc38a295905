//! Exact combinatorial invariants of central complex hyperplane arrangements.
//!
//! Given a central arrangement with rational normals and a factorization of
//! its defining polynomial, this crate computes, in exact arithmetic:
//!
//! - the intersection lattice, Mobius values, characteristic polynomials,
//!   and dense edges;
//! - freeness certificates (logarithmic derivation bases plus Saito's
//!   determinant criterion) or the Terao factorization obstruction;
//! - predicted Bernstein-Sato root sets for free arrangements, Maisonobe's
//!   generator, lower-bound zero-locus components for complete
//!   factorizations, and relative characteristic-cycle components with
//!   multiplicities;
//! - multivariable topological zeta functions with exact pole loci, and the
//!   strong-monodromy containment check.
//!
//! Every computation is over Q; there is no floating point anywhere, so set
//! and rational-function equalities are exact.

pub mod arrangement;
pub mod bsideal;
pub mod corpus;
pub mod error;
pub mod exactmath;
pub mod freeness;
pub mod lattice;
pub mod zeta;

pub use arrangement::{Arrangement, FactorizationKind, Hyperplane};
pub use error::{ArrError, Result};
pub use exactmath::{LinearForm, RatMatrix, Rational, SparsePoly};
pub use lattice::{Edge, Lattice};
