use alloc::vec;
use alloc::vec::Vec;

use super::group::{FiniteGroup, Subgroup};

/// Partition of G into double cosets `K s_i H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetDecomp {
    pub representatives: Vec<usize>,
    /// `L_i = K ∩ s_i H s_i^-1`.
    pub intersections: Vec<Subgroup>,
    pub sizes: Vec<usize>,
}

impl DoubleCosetDecomp {
    /// Checks `sum |K||H|/|L_i| = |G|` and that the sizes add up.
    pub fn satisfies_counting(&self, group_order: usize, k: usize, h: usize) -> bool {
        let by_formula: usize = self.intersections.iter().map(|l| k * h / l.order()).sum();
        by_formula == group_order && self.sizes.iter().sum::<usize>() == group_order
    }
}

impl FiniteGroup {
    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let elems = self.elements().filter(|&g| h.generators().iter().all(|&x| self.commute(g, x))).collect();
        self.subgroup_from_elements(elems)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let elems = self.elements().filter(|&g| self.normalizes(g, h)).collect();
        self.subgroup_from_elements(elems)
    }

    pub fn normalizes(&self, g: usize, h: &Subgroup) -> bool {
        h.generators().iter().all(|&x| h.contains(self.conj(g, x)))
    }

    /// Some `g` with `g A g^-1 = B`, by exhaustive scan.
    pub fn conjugacy_witness(&self, a: &Subgroup, b: &Subgroup) -> Option<usize> {
        if a.order() != b.order() {
            return None;
        }
        self.elements().find(|&g| a.generators().iter().all(|&x| b.contains(self.conj(g, x))))
    }

    /// A Sylow p-subgroup, grown one factor of p at a time inside normalizers.
    pub fn sylow(&self, p: usize) -> Subgroup {
        let target = p_part(self.order(), p);
        let mut s = self.trivial();
        while s.order() < target {
            let n = self.normalizer(&s);
            let x = n
                .elements()
                .iter()
                .copied()
                .find(|&x| !s.contains(x) && s.contains(self.pow(x, p)))
                .expect("a p-subgroup below Sylow order has a p-extension in its normalizer");
            let mut gens = s.generators().to_vec();
            gens.push(x);
            s = self.subgroup(&gens);
        }
        s
    }

    pub fn double_cosets(&self, k: &Subgroup, h: &Subgroup) -> DoubleCosetDecomp {
        let mut seen = vec![false; self.order()];
        let mut out = DoubleCosetDecomp { representatives: Vec::new(), intersections: Vec::new(), sizes: Vec::new() };
        for g in self.elements() {
            if seen[g] {
                continue;
            }
            let mut size = 0;
            for &a in k.elements() {
                let ag = self.mul(a, g);
                for &b in h.elements() {
                    let x = self.mul(ag, b);
                    if !seen[x] {
                        seen[x] = true;
                        size += 1;
                    }
                }
            }
            let conj = self.conjugate_subgroup(g, h);
            out.representatives.push(g);
            out.intersections.push(k.intersect(self, &conj));
            out.sizes.push(size);
        }
        out
    }

    /// Elements of order exactly `p` in `h`.
    pub fn elements_of_order(&self, h: &Subgroup, p: usize) -> Vec<usize> {
        h.elements().iter().copied().filter(|&x| x != self.identity() && self.pow(x, p) == self.identity()).collect()
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    while n % p == 0 && n > 0 {
        n /= p;
        out *= p;
    }
    out
}
