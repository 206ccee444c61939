//! Exact coefficient arithmetic and sparse multivariate polynomial algebra.

mod normal_form;
mod polynomial;
mod radical;

pub use normal_form::{normal_form_mod_sphere, SphereIdeal};
pub use polynomial::{Monomial, Polynomial};
pub use radical::{integer, is_squarefree, rational, squarefree_decompose, Rational, RadicalScalar};
