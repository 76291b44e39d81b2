//! Exact computation of the first Hochschild cohomology HH^1(A) of a
//! finite-dimensional quiver algebra A = KQ/I as a Lie algebra.
//!
//! The pipeline: a presentation (quiver + relations over Q or GF(p)) is
//! normalized into a reduction system, confluence is certified by an overlap
//! check, the irreducible-path basis of A is enumerated, the cochain complex
//! K(Q0||B) -> K(Q1||B) -> K(R||B) is assembled, and HH^1 = Ker d1 / Im d0 is
//! computed by exact sparse elimination. The Lie bracket on cocycles gives
//! structure constants, derived and lower-central series decide solvability,
//! and a battery of quiver-level sufficient criteria is evaluated and
//! cross-checked against a brute-force derivation oracle.
//!
//! ```
//! let pres = hh1::format::parse("field GF 3\nvertex e\narrow x e e\nrel x^3\n")?;
//! let fa = hh1::criteria::analyze(pres, true)?;
//! assert_eq!(fa.analysis.hh1.dim, 3);
//! assert!(fa.analysis.series.perfect);
//! assert!(fa.oracle.unwrap().agree);
//! # Ok::<(), hh1::Error>(())
//! ```

pub mod algebra;
pub mod cohomology;
pub mod corpus;
pub mod criteria;
pub mod error;
pub mod format;
pub mod lie;
pub mod linalg;
pub mod oracle;
pub mod pipeline;
pub mod rewriting;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
