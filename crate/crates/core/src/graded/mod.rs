//! Polynomial algebras on degree-2 generators, their morphisms, and graded
//! families of subspaces (subrings, submodules, invariant rings).

mod family;
mod morphism;
mod poly;

pub use family::{hilbert, invariants, GradedRing, HilbertSeries, PolyFamily};
pub use morphism::AlgebraMorphism;
pub use poly::{monomial_degree, DegreeBasis, GradedBasis, Monomial, PolyAlgebra, PolyElement};
