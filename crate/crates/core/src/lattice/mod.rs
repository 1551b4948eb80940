//! Exact integer linear algebra over arbitrary-precision integers.

mod abelian;
mod exterior;
mod matrix;
mod ops;
mod smith;

pub use abelian::FinAbGroup;
pub use exterior::{binomial, exterior_power, exterior_power_with, k_subsets};
pub use matrix::IntMatrix;
pub use ops::{cokernel, kernel_saturated, matrix_order, rank, subquotient};
pub(crate) use ops::{is_singular, is_unimodular};
pub use smith::{smith_normal_form, SmithForm};
