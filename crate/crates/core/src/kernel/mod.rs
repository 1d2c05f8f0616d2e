//! Finite rings and the primitive queries every checker is built from.
//!
//! Every ring is materialised as dense addition and multiplication tables over
//! element handles `0..size`, with handle 0 the zero element. Prime-characteristic
//! algebras additionally keep their structure constants so annihilators can be
//! computed as kernels over ℤ_p.
//!
//! For a finite ring the Jacobson radical is nilpotent, so the Wedderburn radical,
//! the lower and upper nilradicals and the Levitzki radical all coincide with it.
//! Only [`FiniteRing::jacobson_radical`] is computed; 2-primality is decided by
//! comparing it with [`FiniteRing::nil_set`].

mod algebra;
mod ideal;
pub(crate) mod ring;
mod set;

pub use algebra::PrimeAlgebra;
pub use ring::{
    AxiomFailure, Construction, FiniteRing, Law, RingId, Side, Validation, DEFAULT_SIZE_CAP,
    EXHAUSTIVE_VALIDATION_LIMIT,
};
pub use set::ElementSet;

/// Dense element handle; `0` is always the zero of the ring.
pub type Elem = usize;
