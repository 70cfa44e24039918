//! Exact combinatorics of regular semisimple Lusztig and Hessenberg varieties.

pub mod error;
pub mod poly;
pub mod rootsys;
pub mod weyl;
pub mod hess;
pub mod gkm;
pub mod charlib;
pub mod cache;
pub mod verify;

pub use error::{Error, Result};
