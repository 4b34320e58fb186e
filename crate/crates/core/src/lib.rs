//! Exact computer algebra for monomial operators on Laurent-polynomial spaces.
//!
//! The engine works over the field `Q(q)` of rational functions in one
//! indeterminate `q` and manipulates three layers of objects:
//!
//! * [`scalar::QRat`] -- exact scalars, reduced fractions of polynomials in `q`;
//! * [`monop::MonOp`] / [`monop::OpSum`] -- monomial operators
//!   `t^a -> c * q^<l,a> * t^(A a + b)` on `n` Laurent variables and their
//!   canonical finite sums, closed under composition, inversion, embedding,
//!   tensoring and the formal partial trace;
//! * [`series::PSeries`] -- truncated formal power series in named spectral
//!   parameters with operator coefficients.
//!
//! On top of these, [`qgroup`] builds the generators of a centrally extended
//! quantized enveloping algebra acting on `N^2` variables together with the
//! associated R-matrices, and [`verify`] runs exact, order-by-order machine
//! checks of the tetrahedron equation, the derived Yang-Baxter equations, the
//! defining relations of the algebra and a q-exponential product identity.
//! [`parser`] evaluates ad-hoc operator expressions for the CLI.

pub mod error;
pub mod monop;
pub mod parser;
pub mod qgroup;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use monop::{Generator, IndexMap, IntMat, LPoly, MonOp, OpSum};
pub use scalar::{pochhammer, QPoly, QRat};
pub use series::{Direction, PSeries, ParamImage, ParamSubst};
pub use verify::{
    default_order, emit_report, run_suite, CheckStatus, ReportFormat, SuiteConfig, VerifyReport,
};
