//! Exact integer polynomial arithmetic used throughout the crate.

mod bivariate;
mod cyclotomic;
mod int_poly;
pub mod modular;
mod roots;
mod squarefree;

pub use bivariate::BiPoly;
pub use cyclotomic::{cyclotomic, euler_phi, CyclotomicTable};
pub use int_poly::IntPoly;
pub(crate) use int_poly::write_poly;
pub use modular::PolyMatrix;
pub use roots::{aberth_roots, unit_circle_angles};
pub use squarefree::{squarefree_decomposition, SquarefreeFactor};
