//! Exact computations with finite-dimensional semisimple Hopf algebras given
//! by structure constants.
//!
//! The crate covers:
//!
//! - [`scalars`]: rationals, cyclotomic fields `Q(zeta_N)` and decidable subrings
//!   (`Z`, `Z_(p)`, `Z[zeta_N]`).
//! - [`hopf`]: structure-constant tensors, the contraction engine, the axiom
//!   checker and change of basis.
//! - [`integrals`]: the normalized two-sided integral and the tensor
//!   `nu = sum Lambda_1 (x) S(Lambda_2)`.
//! - [`wedderburn`]: center, primitive central idempotents, irreducible
//!   characters, the character pairing, idempotents rebuilt from characters and
//!   explicit simple modules.
//! - [`forms`]: weak integral forms, Frobenius-type certificates, Hermite normal
//!   form and an executable replay of the divisibility argument over `Z`.
//! - [`corpus`]: Cayley tables, group algebras and their duals.

pub mod corpus;
pub mod error;
pub mod forms;
pub mod hopf;
pub mod integrals;
pub mod linalg;
pub mod poly;
pub mod scalars;
pub mod wedderburn;

pub use error::{Error, Result, ScalarError};
pub use hopf::{AxiomReport, Element, HopfData, TensorSquare};

pub use linalg::Matrix;
pub use scalars::{FieldScalar, SubringSpec};
