//! Exact computer algebra for graded forms in characteristic `p`.
//!
//! The crate covers graded fields `k_1[t^{±e}]` and graded polynomial rings
//! over them, the skew ring `k_1[F]` of additive endomorphisms, Russell-type
//! forms of the additive group with an explicit trivialization, higher
//! derivations and logarithmic-derivative class groups, and tame cyclic
//! descent for discs.

pub mod cli;
pub mod degree;
pub mod error;
pub mod expr;
pub mod field;
pub mod graded;
pub mod hasse;
pub mod picard;
pub mod random;
pub mod report;
pub mod selfcheck;
pub mod poly;
pub mod russell;
pub mod skew;
pub mod tame;

pub use degree::{Degree, Order};
pub use error::{Error, Result};
pub use field::{Field, FieldDesc, FieldElem, FieldKind};
pub use graded::{GradedElem, GradedField, GradedPolyRing};
pub use poly::{Monomial, Poly};
