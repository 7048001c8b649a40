pub mod cli;
pub mod error;
pub mod polyring;
pub mod recurrence;
pub mod schur;
pub mod shapes;
pub mod spectra;
pub mod tableaux;
pub mod toeplitz;
pub mod widom;

pub use error::{Error, Result};
