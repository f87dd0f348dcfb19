use alloc::boxed::Box;
use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fp::ExtField;

/// Default bound on the number of elements materialized by enumeration.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// Permutations of `0..degree`, stored as image arrays.
    Permutation { degree: usize },
    /// Invertible `n x n` matrices over a finite field, stored row-major.
    Matrix { field: Arc<ExtField>, n: usize },
}

/// A finite group with its full, sorted element list.
///
/// Elements are addressed by their index in the sorted list; products are
/// computed on demand and located by binary search.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    kind: GroupKind,
    elements: Vec<Box<[u32]>>,
    generators: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// Permutation group from 0-based image arrays.
    pub fn permutation(degree: usize, generators: &[Vec<u32>], cap: usize) -> Result<Self> {
        for g in generators {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(Error::InvalidGenerator(format!("permutation of length {} on {degree} points", g.len())));
            }
            for &x in g {
                if x as usize >= degree || seen[x as usize] {
                    return Err(Error::InvalidGenerator(format!("{g:?} is not a permutation")));
                }
                seen[x as usize] = true;
            }
        }
        Self::enumerate(GroupKind::Permutation { degree }, generators, cap)
    }

    /// Matrix group from row-major entry arrays over `field`.
    pub fn matrix(field: Arc<ExtField>, n: usize, generators: &[Vec<u32>], cap: usize) -> Result<Self> {
        for g in generators {
            if g.len() != n * n {
                return Err(Error::InvalidGenerator(format!("matrix with {} entries, expected {}", g.len(), n * n)));
            }
            if g.iter().any(|&x| x >= field.size()) {
                return Err(Error::InvalidGenerator(format!("{g:?} has entries outside F_{}", field.size())));
            }
            if determinant(&field, n, g) == 0 {
                return Err(Error::InvalidGenerator(format!("{g:?} is singular")));
            }
        }
        Self::enumerate(GroupKind::Matrix { field, n }, generators, cap)
    }

    fn enumerate(kind: GroupKind, generators: &[Vec<u32>], cap: usize) -> Result<Self> {
        let id: Box<[u32]> = raw_identity(&kind).into();
        let gens: Vec<Box<[u32]>> = generators.iter().map(|g| g.clone().into_boxed_slice()).collect();
        let mut seen: BTreeSet<Box<[u32]>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id.clone());
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y: Box<[u32]> = raw_mul(&kind, &x, g).into();
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Box<[u32]>> = seen.into_iter().collect();
        let find = |x: &[u32]| elements.binary_search_by(|e| (**e).cmp(x)).expect("closed under products");
        let identity = find(&id);
        let generators = gens.iter().map(|g| find(g)).collect();
        let mut group = FiniteGroup { kind, elements, generators, inverse: Vec::new(), identity };
        group.inverse = (0..group.order()).map(|i| group.compute_inverse(i)).collect();
        Ok(group)
    }

    fn compute_inverse(&self, i: usize) -> usize {
        match &self.kind {
            GroupKind::Permutation { degree } => {
                let mut inv = vec![0u32; *degree];
                for (x, &y) in self.elements[i].iter().enumerate() {
                    inv[y as usize] = x as u32;
                }
                self.index_of(&inv).expect("closed under inverses")
            }
            GroupKind::Matrix { .. } => {
                let mut prev = self.identity;
                let mut cur = i;
                while cur != self.identity {
                    prev = cur;
                    cur = self.mul(cur, i);
                }
                prev
            }
        }
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn element(&self, i: usize) -> &[u32] {
        &self.elements[i]
    }
    pub fn index_of(&self, raw: &[u32]) -> Option<usize> {
        self.elements.binary_search_by(|e| (**e).cmp(raw)).ok()
    }
    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order()
    }

    /// Product `a * b`; for permutations `b` acts first.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let raw = raw_mul(&self.kind, &self.elements[a], &self.elements[b]);
        self.index_of(&raw).expect("closed under products")
    }

    /// Product of raw elements that need not lie in the group.
    pub fn mul_raw(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        raw_mul(&self.kind, a, b)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g h g^-1`.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inverse[g])
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut cur = a;
        let mut k = 1;
        while cur != self.identity {
            cur = self.mul(cur, a);
            k += 1;
        }
        k
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// The subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        let mut seen = BTreeSet::new();
        seen.insert(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let mut generators: Vec<usize> = gens.iter().copied().filter(|&g| g != self.identity).collect();
        generators.sort_unstable();
        generators.dedup();
        Subgroup { elements: seen.into_iter().collect(), generators }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { elements: (0..self.order()).collect(), generators: self.generators.clone() }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup { elements: vec![self.identity], generators: Vec::new() }
    }

    /// Subgroup from an element set known to be closed; finds a small
    /// generating set greedily in index order.
    pub fn subgroup_from_elements(&self, mut elements: Vec<usize>) -> Subgroup {
        elements.sort_unstable();
        elements.dedup();
        let mut generators: Vec<usize> = Vec::new();
        let mut span = self.trivial();
        for &x in &elements {
            if span.order() == elements.len() {
                break;
            }
            if !span.contains(x) {
                generators.push(x);
                span = self.subgroup(&generators);
            }
        }
        debug_assert_eq!(span.elements, elements, "element set is not a subgroup");
        Subgroup { elements, generators }
    }

    pub fn conjugate_subgroup(&self, g: usize, h: &Subgroup) -> Subgroup {
        let mut elements: Vec<usize> = h.elements.iter().map(|&x| self.conj(g, x)).collect();
        elements.sort_unstable();
        let mut generators: Vec<usize> = h.generators.iter().map(|&x| self.conj(g, x)).collect();
        generators.sort_unstable();
        Subgroup { elements, generators }
    }

    pub fn is_abelian(&self, h: &Subgroup) -> bool {
        h.generators.iter().all(|&a| h.generators.iter().all(|&b| self.commute(a, b)))
    }

    /// Cyclic ordering of the points for a permutation element, or the matrix
    /// entries; for display.
    pub fn describe(&self, i: usize) -> Vec<u32> {
        self.elements[i].to_vec()
    }
}

/// A subgroup of a [`FiniteGroup`], as sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
    pub fn intersect(&self, group: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let common = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        group.subgroup_from_elements(common)
    }
}

pub(crate) fn raw_identity(kind: &GroupKind) -> Vec<u32> {
    match kind {
        GroupKind::Permutation { degree } => (0..*degree as u32).collect(),
        GroupKind::Matrix { n, .. } => {
            let mut m = vec![0; n * n];
            for i in 0..*n {
                m[i * n + i] = 1;
            }
            m
        }
    }
}

pub(crate) fn raw_mul(kind: &GroupKind, a: &[u32], b: &[u32]) -> Vec<u32> {
    match kind {
        GroupKind::Permutation { .. } => b.iter().map(|&x| a[x as usize]).collect(),
        GroupKind::Matrix { field, n } => mat_mul(field, *n, a, b),
    }
}

pub(crate) fn mat_mul(field: &ExtField, n: usize, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut c = vec![0u32; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let y = b[k * n + j];
                if y != 0 {
                    c[i * n + j] = field.add(c[i * n + j], field.mul(x, y));
                }
            }
        }
    }
    c
}

pub(crate) fn determinant(field: &ExtField, n: usize, m: &[u32]) -> u32 {
    let mut a = m.to_vec();
    let mut det = 1u32;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| a[r * n + c] != 0) else {
            return 0;
        };
        if r != c {
            for j in 0..n {
                a.swap(r * n + j, c * n + j);
            }
            det = field.neg(det);
        }
        let pivot = a[c * n + c];
        det = field.mul(det, pivot);
        let inv = field.inv(pivot).expect("nonzero pivot");
        for r2 in c + 1..n {
            let factor = field.mul(a[r2 * n + c], inv);
            if factor != 0 {
                for j in c..n {
                    let v = field.mul(factor, a[c * n + j]);
                    a[r2 * n + j] = field.sub(a[r2 * n + j], v);
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_on_four_points() {
        let g = FiniteGroup::permutation(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 24);
        for x in g.elements() {
            assert_eq!(g.mul(x, g.inv(x)), g.identity());
        }
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::permutation(3, &[], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn gl2_f7_order() {
        let f = Arc::new(ExtField::with_size(7).unwrap());
        let gens = vec![vec![3, 0, 0, 1], vec![1, 1, 0, 1], vec![1, 0, 1, 1]];
        let g = FiniteGroup::matrix(f, 2, &gens, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 48 * 42);
        let x = g.index_of(&[0, 1, 1, 0]).unwrap();
        assert_eq!(g.mul(x, x), g.identity());
    }

    #[test]
    fn cap_is_enforced() {
        let r = FiniteGroup::permutation(5, &[vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]], 100);
        assert_eq!(r.unwrap_err(), Error::CapExceeded { cap: 100 });
    }

    #[test]
    fn invalid_generators() {
        assert!(FiniteGroup::permutation(3, &[vec![0, 0, 1]], 10).is_err());
        let f = Arc::new(ExtField::with_size(5).unwrap());
        assert!(FiniteGroup::matrix(f, 2, &[vec![1, 2, 2, 4]], 10).is_err());
    }
}
