use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::group::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// An elementary abelian p-subgroup with an ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElemAbelianSubgroup {
    p: usize,
    basis: Vec<usize>,
    subgroup: Subgroup,
    coords: BTreeMap<usize, Vec<u32>>,
}

impl ElemAbelianSubgroup {
    /// Uses the lexicographically least basis under the element order of
    /// the group: each basis element is the smallest element outside the span
    /// of the previous ones.
    pub fn canonical(group: &FiniteGroup, subgroup: &Subgroup, p: usize) -> Result<Self> {
        check_elementary(group, subgroup, p)?;
        let mut basis = Vec::new();
        let mut span = group.trivial();
        for &x in subgroup.elements() {
            if !span.contains(x) {
                basis.push(x);
                span = group.subgroup(&basis);
            }
        }
        Ok(Self::build(group, p, basis))
    }

    /// Uses the given ordered basis, which must be independent.
    pub fn with_basis(group: &FiniteGroup, basis: &[usize], p: usize) -> Result<Self> {
        let subgroup = group.subgroup(basis);
        check_elementary(group, &subgroup, p)?;
        if subgroup.order() != p.pow(basis.len() as u32) {
            return Err(Error::InvalidArgument(format!("basis {basis:?} is not independent")));
        }
        Ok(Self::build(group, p, basis.to_vec()))
    }

    fn build(group: &FiniteGroup, p: usize, basis: Vec<usize>) -> Self {
        let mut coords = BTreeMap::new();
        let r = basis.len();
        let mut c = vec![0u32; r];
        loop {
            let x = c.iter().zip(&basis).fold(group.identity(), |acc, (&e, &b)| group.mul(acc, group.pow(b, e as usize)));
            coords.insert(x, c.clone());
            let Some(i) = (0..r).find(|&i| (c[i] as usize) < p - 1) else {
                break;
            };
            c[i] += 1;
            for slot in c.iter_mut().take(i) {
                *slot = 0;
            }
        }
        let subgroup = group.subgroup(&basis);
        ElemAbelianSubgroup { p, basis, subgroup, coords }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }
    pub fn prime(&self) -> usize {
        self.p
    }

    /// Coordinates of `x` in the basis, or `None` when `x` is outside.
    pub fn coordinates(&self, x: usize) -> Option<&[u32]> {
        self.coords.get(&x).map(Vec::as_slice)
    }
}

fn check_elementary(group: &FiniteGroup, h: &Subgroup, p: usize) -> Result<()> {
    let ok = group.is_abelian(h) && h.generators().iter().all(|&x| group.pow(x, p) == group.identity());
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument("subgroup is not elementary abelian".into()))
    }
}

/// Conjugacy class labels of the elements of order p.
struct ClassLabels {
    label: BTreeMap<usize, usize>,
}

impl ClassLabels {
    fn new(group: &FiniteGroup, p: usize) -> Self {
        let mut label = BTreeMap::new();
        let mut next = 0;
        for x in group.elements_of_order(&group.whole(), p) {
            if label.contains_key(&x) {
                continue;
            }
            for g in group.elements() {
                label.entry(group.conj(g, x)).or_insert(next);
            }
            next += 1;
        }
        ClassLabels { label }
    }

    fn key(&self, group: &FiniteGroup, h: &Subgroup) -> Vec<usize> {
        let mut k: Vec<usize> = h.elements().iter().filter(|&&x| x != group.identity()).map(|x| self.label[x]).collect();
        k.sort_unstable();
        k
    }
}

impl FiniteGroup {
    /// One representative per conjugacy class of elementary abelian
    /// p-subgroups, including the trivial subgroup, ordered by rank and then
    /// by basis.
    ///
    /// Each representative is the conjugate whose canonical basis is least.
    pub fn elementary_abelian_reps(&self, p: usize) -> Vec<ElemAbelianSubgroup> {
        let labels = ClassLabels::new(self, p);
        let mut reps: Vec<Subgroup> = vec![self.trivial()];
        let mut level: Vec<Subgroup> = vec![self.trivial()];
        while !level.is_empty() {
            let mut candidates: BTreeSet<Subgroup> = BTreeSet::new();
            for e in &level {
                let c = self.centralizer(e);
                for x in self.elements_of_order(&c, p) {
                    if !e.contains(x) {
                        let mut gens = e.generators().to_vec();
                        gens.push(x);
                        let s = self.subgroup(&gens);
                        candidates.insert(self.subgroup_from_elements(s.elements().to_vec()));
                    }
                }
            }
            let mut by_key: BTreeMap<Vec<usize>, Vec<Subgroup>> = BTreeMap::new();
            let mut next = Vec::new();
            for cand in candidates {
                let bucket = by_key.entry(labels.key(self, &cand)).or_default();
                if bucket.iter().all(|r| self.conjugacy_witness(&cand, r).is_none()) {
                    bucket.push(cand.clone());
                    next.push(cand);
                }
            }
            reps.extend(next.iter().cloned());
            level = next;
        }
        let mut out: Vec<ElemAbelianSubgroup> = reps.iter().map(|h| self.least_conjugate(h, p)).collect();
        out.sort_by(|a, b| (a.rank(), &a.basis).cmp(&(b.rank(), &b.basis)));
        out
    }

    fn least_conjugate(&self, h: &Subgroup, p: usize) -> ElemAbelianSubgroup {
        let mut seen = BTreeSet::new();
        let mut best: Option<ElemAbelianSubgroup> = None;
        for g in self.elements() {
            let c = self.conjugate_subgroup(g, h);
            if !seen.insert(c.elements().to_vec()) {
                continue;
            }
            let e = ElemAbelianSubgroup::canonical(self, &c, p).expect("conjugates stay elementary abelian");
            if best.as_ref().map_or(true, |b| e.basis < b.basis) {
                best = Some(e);
            }
        }
        best.expect("at least the identity conjugate")
    }

    /// Every elementary abelian p-subgroup of `h` of positive rank, without
    /// identifying conjugates.
    pub fn elementary_abelian_subgroups_of(&self, h: &Subgroup, p: usize) -> Vec<Subgroup> {
        let mut all: BTreeSet<Subgroup> = BTreeSet::new();
        let mut level: Vec<Subgroup> = vec![self.trivial()];
        while !level.is_empty() {
            let mut next = BTreeSet::new();
            for e in &level {
                for x in self.elements_of_order(h, p) {
                    if !e.contains(x) && e.generators().iter().all(|&y| self.commute(x, y)) {
                        let mut gens = e.generators().to_vec();
                        gens.push(x);
                        let s = self.subgroup(&gens);
                        next.insert(self.subgroup_from_elements(s.elements().to_vec()));
                    }
                }
            }
            let fresh: Vec<Subgroup> = next.into_iter().filter(|s| !all.contains(s)).collect();
            all.extend(fresh.iter().cloned());
            level = fresh;
        }
        all.into_iter().collect()
    }

    /// The maximal members of [`FiniteGroup::elementary_abelian_subgroups_of`].
    pub fn maximal_elementary_abelian_subgroups_of(&self, h: &Subgroup, p: usize) -> Vec<Subgroup> {
        let all = self.elementary_abelian_subgroups_of(h, p);
        all.iter()
            .filter(|a| !all.iter().any(|b| b.order() > a.order() && a.is_subgroup_of(b)))
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::constructions::{elementary_abelian_perm, quaternion, symmetric};

    fn rank_counts(reps: &[ElemAbelianSubgroup]) -> Vec<usize> {
        let top = reps.iter().map(|e| e.rank()).max().unwrap_or(0);
        (0..=top).map(|r| reps.iter().filter(|e| e.rank() == r).count()).collect()
    }

    #[test]
    fn quaternion_has_only_the_centre() {
        let q = quaternion().unwrap();
        let reps = q.elementary_abelian_reps(2);
        assert_eq!(rank_counts(&reps), vec![1, 1]);
    }

    #[test]
    fn plane_over_f3() {
        let g = elementary_abelian_perm(3, 2).unwrap();
        assert_eq!(rank_counts(&g.elementary_abelian_reps(3)), vec![1, 4, 1]);
    }

    #[test]
    fn s4_at_two() {
        let g = symmetric(4).unwrap();
        assert_eq!(rank_counts(&g.elementary_abelian_reps(2)), vec![1, 2, 2]);
    }

    #[test]
    fn coordinates_round_trip() {
        let g = elementary_abelian_perm(3, 2).unwrap();
        let e = ElemAbelianSubgroup::canonical(&g, &g.whole(), 3).unwrap();
        assert_eq!(e.rank(), 2);
        for &x in e.subgroup().elements() {
            let c = e.coordinates(x).unwrap();
            let back = c.iter().zip(e.basis()).fold(g.identity(), |acc, (&k, &b)| g.mul(acc, g.pow(b, k as usize)));
            assert_eq!(back, x);
        }
    }

    #[test]
    fn no_p_torsion_gives_only_trivial() {
        let g = symmetric(3).unwrap();
        let reps = g.elementary_abelian_reps(5);
        assert_eq!(rank_counts(&reps), vec![1]);
    }
}
