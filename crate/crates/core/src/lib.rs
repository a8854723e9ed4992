//! Exact computation of Jones-Wenzl idempotents.
//!
//! The crate is organised bottom-up:
//!
//! * [`qpoly`]: Laurent polynomials over the rationals and the field `Q(v)`.
//! * [`coxeter`]: enumeration of finite Coxeter groups (types A, B, F4, H3,
//!   H4 and I2(m)) with length, multiplication, Bruhat order and fully
//!   commutative flags.
//! * [`hecke`]: the Hecke algebra in the standard basis, Kazhdan-Lusztig
//!   polynomials (Soergel's normalisation) and the antisymmetriser.
//! * [`grank`]: graded ranks `sum_y v^-l(y) h_{y,x}` and the resulting
//!   idempotent coefficients.
//! * [`tl`]: the type A Temperley-Lieb diagram algebra and three independent
//!   constructions of the Jones-Wenzl idempotent.
//! * [`gtl`]: generalised Temperley-Lieb algebras as the fully commutative
//!   truncation of the Kazhdan-Lusztig basis.

pub mod coxeter;
pub mod error;
pub mod grank;
pub mod gtl;
pub mod hecke;
pub mod lincomb;
pub mod qpoly;
pub mod report;
pub mod tl;
pub mod verify;

pub use coxeter::{BuildOptions, CoxeterPresentation, ElementId, Family, GroupTable};
pub use error::{Error, Result};
pub use grank::GradedRank;
pub use gtl::GtlElt;
pub use hecke::{HeckeElt, KlTable};
pub use lincomb::LinComb;
pub use qpoly::{LaurentPoly, RatFunc};
pub use tl::{Diagram, LoopSign, TlElt};
