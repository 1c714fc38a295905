//! Exact rational linear algebra and sparse multivariate polynomial
//! arithmetic. Everything downstream (lattices, freeness certificates, zeta
//! functions) is built on these: all arithmetic is exact, no floating point
//! appears anywhere in the crate, and canonical forms (RREF, graded-lex term
//! order, primitive linear forms) are deterministic so outputs reproduce
//! byte-for-byte across runs.

mod linform;
mod matrix;
mod poly;
mod rational;

pub use linform::LinearForm;
pub use matrix::{KernelBasis, RatMatrix, RrefResult};
pub use poly::{Monomial, SparsePoly};
pub use rational::{format_rational, parse_rational, primitive_integer_vector};

pub(crate) use rational::monic_vector;

pub type Rational = num::BigRational;
pub type Integer = num::BigInt;
