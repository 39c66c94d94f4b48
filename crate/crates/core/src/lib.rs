pub mod error;
pub mod exactla;
pub mod cohom;
pub mod ff;
pub mod grading;
pub mod qsuper;
pub mod repmod;

pub use error::{Error, Result};
pub use exactla::{Matrix, Subspace};
pub use ff::{Fe, Field};
pub use grading::{Parity, Sdim};
pub use qsuper::{build_q2, SuperAlgebra};
