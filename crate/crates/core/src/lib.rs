//! Exact computation in the ring of symmetric functions over ℤ[t] with the
//! dual stable Grothendieck basis `g_λ` and the (degree-truncated) stable
//! Grothendieck elements `G_λ`.
//!
//! Everything is expanded in the Schur basis internally; the `g` basis,
//! `G_λ`, the classical bases and all operators are conversions on top of it.

mod memo;

pub mod coeff;
pub mod error;
pub mod incidence;
pub mod lincomb;
pub mod mpoly;
pub mod operators;
pub mod partition;
pub mod pieri;
pub mod rpp;
pub mod series;
pub mod symfunc;

pub use coeff::{poly_eval_int, CoeffPoly};
pub use error::Error;
pub use lincomb::LinComb;
pub use mpoly::MultiPoly;
pub use partition::{Partition, SkewShape, StripKind};
pub use series::TruncSeries;
pub use symfunc::{SymFunc, TensorElem};
