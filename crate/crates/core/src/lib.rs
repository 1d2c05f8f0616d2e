pub mod error;
pub mod expr;
pub mod kernel;
pub mod constructors;
pub mod linalg;
pub mod orbit;
pub mod poly;
pub mod properties;
pub mod report;
pub mod theorems;

pub use error::{Result, RingError};
pub use kernel::{Elem, ElementSet, FiniteRing, PrimeAlgebra, RingId, Side};
