//! Exact projective geometry for the classical involution theorems:
//! Menelaus bookkeeping, involutions on a line, conic pencils, and the
//! constructions built on them.
//!
//! Every claim is decided with exact rational arithmetic (or, for the
//! roots of a quadratic, exact arithmetic in `Q(√d)`); nothing is
//! compared with a floating-point tolerance.

pub mod error;
pub mod scalar;
pub mod projective;
pub mod space;
pub mod involution;
pub mod menelaus;
pub mod report;
pub mod conics;
pub mod theorems;
pub mod rng;
pub mod instance;
pub mod svg;
pub mod batch;

pub use error::{Error, Result};
pub use projective::{AffineChart, LineMap, PLine, PPoint, Param, QParam};
pub use scalar::{QuadExt, Rat};
