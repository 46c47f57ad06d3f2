pub mod error;
pub mod fibzeck;
pub mod limits;
pub mod measures;
pub mod strings;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
