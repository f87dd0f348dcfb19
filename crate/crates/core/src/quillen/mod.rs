//! Quillen categories of elementary abelian p-subgroups, their inverse
//! limits, stable elements and Swan invariants.

mod category;
mod limit;
mod stable;

pub use category::{build_category, Morphism, QuillenCat};
pub use limit::{limit_ring, steenrod_closure_check, ClosureReport, LimitRing};
pub use stable::{stable_elements, swan_invariants, Detector, StableSubring, SylowModel};
