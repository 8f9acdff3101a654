pub mod algebra;
pub mod artrans;
pub mod cli;
pub mod endalg;
pub mod endo;
pub mod error;
pub mod field;
pub mod gencog;
pub mod module;
pub mod poly;
pub mod quiver;
pub mod rep;
pub mod verify;
pub mod replicated;
pub mod window;

pub use error::{Error, Result};
