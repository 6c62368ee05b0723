//! Exact arithmetic for monomial matrices.
//!
//! A monomial (generalized permutation) matrix is a product `A = D_x P_σ` of an
//! invertible diagonal matrix and a permutation matrix. This crate stores such
//! matrices sparsely as the pair `(x, σ)` and provides, over exact rationals:
//!
//! - permutations, their matrices and canonical cycle decomposition ([`permutation`]);
//! - the monomial algebra: products, Frobenius normal form, closed-form powers ([`monomial`]);
//! - univariate polynomials with the `r mod n` part decomposition, square-free
//!   decomposition and Sturm root counting ([`polynomial`]);
//! - closed-form evaluation of `p(A)` ([`evaluator`]);
//! - decision procedures for nonnegativity preservation on nonnegative monomial
//!   matrices, with explicit counterexamples ([`membership`]);
//! - naive dense reference implementations used as ground truth ([`oracle`]).
//!
//! Matrix and permutation semantics are 1-indexed at every public boundary
//! that talks about positions (permutation images, reported entries);
//! [`DenseMatrix`] indexing is the usual 0-based `(row, col)`.
//!
//! ```
//! use monomat::rational::int;
//! use monomat::{counterexample, eval_monomial, in_pn_mon, MonomialMatrix, Permutation, Polynomial};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let a = MonomialMatrix::new(
//!     vec![int(3), int(5), int(2), int(1)],
//!     Permutation::new(&[2, 3, 4, 1])?,
//! )?;
//! let p: Polynomial = "t^20 + 4*t^15 + 2*t^8 + 3*t^2 + t + 5".parse()?;
//! let value = eval_monomial(&p, &a);
//! assert_eq!(value[(0, 0)], int(24_301_805));
//! assert_eq!(a.frobenius_normal_form().reconstruct(), a);
//!
//! let q: Polynomial = "t^3 - 2*t^2 + t".parse()?;
//! let report = in_pn_mon(&q, 3)?;
//! assert!(!report.verdict);
//! let f = report.preferred_failure().expect("a failing part");
//! let c = counterexample(&q, f)?;
//! assert_eq!((c.position, c.value.clone()), ((1, 3), int(-2)));
//! # Ok(())
//! # }
//! ```

pub mod dense;
pub mod error;
pub mod evaluator;
pub mod io;
pub mod membership;
pub mod monomial;
pub mod oracle;
pub mod permutation;
pub mod polynomial;
pub mod rational;

pub use dense::DenseMatrix;
pub use error::{Error, Result};
pub use evaluator::{block_coefficients, eval_k, eval_monomial, BlockCoefficients, StructuredEval};
pub use membership::{counterexample, in_p1, in_pn_mon, Counterexample, Failure, MembershipReport};
pub use monomial::{FrobeniusForm, MonomialMatrix};
pub use permutation::Permutation;
pub use polynomial::Polynomial;
pub use rational::Rational;
