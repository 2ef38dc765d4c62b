pub mod acceptance;
pub mod error;
pub mod families;
pub mod field;
pub mod form;
pub mod galois;
pub mod groups;
pub mod matrix;
pub mod oracle;
pub mod report;
pub mod roots;
pub mod sample;

pub use error::{Error, Result};
pub use field::{Coef, CoefField, Rational};
pub use form::BinaryForm;
pub use matrix::Matrix;
