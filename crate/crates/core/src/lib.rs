pub mod contravariant;
pub mod covariant;
pub mod error;
pub mod field;
mod fp;
pub mod frobenius_module;
pub mod galois_ring;
pub mod io;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod random;
pub mod ring;
pub mod skew;
pub mod suite;
pub mod witt;

pub use error::{Error, ErrorClass, Result};
pub use field::{Embedding, Field, FieldElement};
pub use ring::{FieldRing, FrobeniusRing, Integer, IntegerRing, Ring};
