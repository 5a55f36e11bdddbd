//! Quaternionic lattices over `F_q(t)`: construction, word problem and Parikh images.

pub mod error;
pub mod ff;
pub mod lattice;
pub mod parikh;
pub mod quat;
pub mod repro;
pub mod rewrite;

pub use error::{Error, Result};
pub use ff::{FieldCtx, FieldSpec, Fq2Elem, FqElem, QuadExt};
pub use lattice::{GenLabel, LatticeParams, Letter, Presentation, Side, SquareTable, Word};
pub use rewrite::{is_identity, normal_form, NormalForm, Order};
