#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod lattice;

pub use error::{Error, Result};
pub mod coeff;
pub mod equivariant;
pub mod fan;
pub mod fgl;
pub mod monomial;
pub mod ordinary;
pub mod series;
