//! Prime fields, polynomials and graded module presentations.

mod field;
mod module;
mod monomial;
mod polynomial;
mod ring;

pub use field::{Coeff, FieldSpec};
pub use module::{ideal_to_cyclic_module, make_presentation, twist, Column, FreeModule, Presentation};
pub use monomial::{monomials_of_degree, Monomial, MAX_VARS};
pub use polynomial::Polynomial;
pub use ring::{Ring, RingSpec};
