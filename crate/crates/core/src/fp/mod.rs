//! Prime and extension fields plus dense linear algebra over F_p.

mod ext;
mod matrix;
mod prime;
mod subspace;

pub use ext::ExtField;
pub use matrix::{FpMatrix, Rref};
pub use prime::{has_pth_roots, is_prime, prime_power, PrimeField};
pub use subspace::Subspace;
