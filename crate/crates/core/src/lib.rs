#![no_std]
extern crate alloc;

pub mod algebra;
pub mod curve;
pub mod degree;
pub mod elements;
pub mod error;
pub mod riemannroch;
pub mod semigroup;

pub use curve::{CurveKind, CurveModel, Divisor, InfinityKind, Place, Sign};
pub use degree::{Degree, Valuation};
pub use elements::{FFElem, MinimumMethod, MinimumResult, MinimumStatus};
pub use error::{Error, Result};
