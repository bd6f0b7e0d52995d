pub mod branching;
pub mod combinatorics;
pub mod error;
pub mod exactnum;
pub mod grothendieck;
pub mod jucysmurphy;
pub mod monoid;
pub mod seminormal;
pub mod verify;

pub use error::{Error, Result};
