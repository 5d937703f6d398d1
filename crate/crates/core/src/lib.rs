pub mod basis;
pub mod bounds;
pub mod checks;
pub mod cli;
pub mod error;
pub mod fourier;
pub mod poly;
pub mod quaternion;
pub mod scalar;
pub mod special;

pub use error::{Error, Result};
pub use poly::{APoly, Monomial, ScalarPoly};
pub use quaternion::{Quaternion, ReducedQuaternion};
pub use scalar::{PiMultiple, Rational, Scalar};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
