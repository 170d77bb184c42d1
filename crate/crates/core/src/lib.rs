//! Exact arithmetic for length-4 Büchi sequences: integer quadruples whose
//! squares have constant second difference 2.

pub mod curves;
pub mod error;
pub mod explorer;
pub mod families;
pub mod maps;
pub mod numkernel;
pub mod parse;
pub mod polyring;
pub mod quotient;
pub mod verify;

pub use error::{Error, Result};
