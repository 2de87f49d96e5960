pub mod curves;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod resolution;
pub mod semigroup;
pub mod poly;

pub use error::{Error, Result};
pub use poly::{Field, FieldElement, Monomial, MonomialOrder, Polynomial, Ring, WeightVector};
