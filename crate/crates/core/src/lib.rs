pub mod error;
pub mod exactlinalg;

pub use error::{Error, Result};
pub mod cli;
pub mod complex;
pub mod freegroup;
pub mod lie2;
pub mod nq;
pub mod racg;
pub mod verify;
