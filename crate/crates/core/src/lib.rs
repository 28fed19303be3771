//! Constacyclic codes with non-invertible shift constants over finite chain
//! rings and finite principal ideal rings.

pub mod algebra;
pub mod code;
pub mod duality;
pub mod error;
pub mod linalg;
pub mod pir;
pub mod ring;
pub mod sweep;
pub mod verify;

pub use error::{enumeration_cap, Error, Result};
pub use ring::{make_ring, ArithOp, ChainRing, ChainRingSpec, Elem, QuotientMap};
