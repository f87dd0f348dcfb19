//! Exact computations of mod-p Chow rings of classifying spaces of finite
//! groups, assembled as inverse limits over categories of elementary abelian
//! p-subgroups.
//!
//! The crate is `no_std` and only needs an allocator. Every graded object is
//! handled degree by degree up to an explicit cutoff.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod fp;
pub mod graded;
pub mod groups;
pub mod quillen;
pub mod steenrod;
pub mod wreath;

pub use error::{Error, Result};
