//! Finite permutation and matrix groups: enumeration, subgroup algorithms,
//! elementary abelian subgroups, wreath products and classical groups.

mod algorithms;
mod classical;
mod constructions;
mod elementary;
mod group;

pub use algorithms::{p_part, DoubleCosetDecomp};
pub use classical::{classical_group, matrix_closure, toral_witness, ClassicalFamily, ClassicalGroupData, WeylGenerator};
pub use constructions::{
    cyclic, elementary_abelian_perm, quaternion, regular_permutation_group, symmetric, symmetric_with_cap,
    wreath_product, WreathBase,
};
pub use elementary::ElemAbelianSubgroup;
pub use group::{FiniteGroup, GroupKind, Subgroup, DEFAULT_CAP};
