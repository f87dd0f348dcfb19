//! Chow-ring models of wreath products `Z/p ≀ G` and `S_p ≀ G` in terms of
//! `M = CH^* BG`: the `St_1^ev` construction, the transfer image `τ`, and
//! restriction maps to the maximal elementary abelian subgroups.

mod model;
mod st;
mod tau;

pub use model::{wreath_model, wreath_restrictions, WreathModel, WreathRestrictions, WreathSymbol, WreathVariant};
pub use st::{
    check_r1ev_lemmas, lift, polynomial_tensor, r1ev, st1ev, tensor_algebra, torsion_free_image, v_power, R1evLemmas,
    R1evModule,
};
pub use tau::{
    canonical, free_orbits, is_diagonal, primitive_root, rotate, tau_subspace, tensors, w_image, w_orbits, Slot, TauSubspace,
};
