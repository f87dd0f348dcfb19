use alloc::sync::Arc;
use alloc::vec::Vec;

use super::group::{FiniteGroup, GroupKind, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::fp::ExtField;

/// The top group of a wreath product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WreathBase {
    /// Z/p generated by the cyclic rotation of the blocks.
    Cyclic,
    /// The full symmetric group on the blocks.
    Symmetric,
}

fn cycle(degree: usize, points: &[usize]) -> Vec<u32> {
    let mut img: Vec<u32> = (0..degree as u32).collect();
    for (k, &x) in points.iter().enumerate() {
        img[x] = points[(k + 1) % points.len()] as u32;
    }
    img
}

/// Z/n acting regularly on n points.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    let pts: Vec<usize> = (0..n).collect();
    FiniteGroup::permutation(n, &[cycle(n, &pts)], DEFAULT_CAP)
}

/// The symmetric group on n points.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    symmetric_with_cap(n, DEFAULT_CAP)
}

pub fn symmetric_with_cap(n: usize, cap: usize) -> Result<FiniteGroup> {
    let pts: Vec<usize> = (0..n).collect();
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &pts[..2]));
        gens.push(cycle(n, &pts));
    }
    FiniteGroup::permutation(n, &gens, cap)
}

/// (Z/p)^n as disjoint p-cycles on p n points.
pub fn elementary_abelian_perm(p: usize, n: usize) -> Result<FiniteGroup> {
    let degree = p * n;
    let gens: Vec<Vec<u32>> = (0..n).map(|k| cycle(degree, &(k * p..(k + 1) * p).collect::<Vec<_>>())).collect();
    FiniteGroup::permutation(degree.max(1), &if degree == 0 { Vec::new() } else { gens }, DEFAULT_CAP)
}

/// `base ≀ inner` acting on `p * d` points, point `(k, i)` of block `k`
/// being `k d + i`. Generators: the inner generators on block 0, the block
/// rotation, and for the symmetric base a block transposition.
pub fn wreath_product(base: WreathBase, inner: &FiniteGroup, p: usize, cap: usize) -> Result<FiniteGroup> {
    let GroupKind::Permutation { degree: d } = *inner.kind() else {
        return Err(Error::Unsupported("wreath products need a permutation inner group".into()));
    };
    let degree = p * d;
    let mut gens: Vec<Vec<u32>> = inner
        .generators()
        .iter()
        .map(|&g| {
            let img = inner.element(g);
            (0..degree).map(|x| if x < d { img[x] } else { x as u32 }).collect()
        })
        .collect();
    if p >= 2 {
        gens.push((0..degree).map(|x| ((x + d) % degree) as u32).collect());
        if base == WreathBase::Symmetric && p > 2 {
            gens.push(
                (0..degree)
                    .map(|x| match x / d {
                        0 => (x + d) as u32,
                        1 => (x - d) as u32,
                        _ => x as u32,
                    })
                    .collect(),
            );
        }
    }
    FiniteGroup::permutation(degree.max(1), &gens, cap)
}

/// The action of `group` on itself by left multiplication.
pub fn regular_permutation_group(group: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let n = group.order();
    let gens: Vec<Vec<u32>> =
        group.generators().iter().map(|&g| (0..n).map(|x| group.mul(g, x) as u32).collect()).collect();
    FiniteGroup::permutation(n, &gens, cap)
}

/// The quaternion group of order 8 inside SL_2(F_3).
pub fn quaternion() -> Result<FiniteGroup> {
    let f = Arc::new(ExtField::with_size(3)?);
    FiniteGroup::matrix(f, 2, &[alloc::vec![0, 1, 2, 0], alloc::vec![1, 1, 1, 2]], DEFAULT_CAP)
}
