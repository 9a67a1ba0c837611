pub mod form;
pub mod operator;
pub mod space;

pub use form::{Bidegree, Form, Monomial, Weight};
pub use operator::{conj_vector, AlmostComplexModel, BlockKey, Differential, GradedOperator, Operators};
pub use space::{CoefficientModel, FormSpace};
