use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::graded::{GradedRing, PolyFamily};
use crate::steenrod::phi;

/// A basis element of `M`: `(degree, index in the degree basis)`.
pub type Slot = (usize, usize);

/// All `p`-fold tensors of basis elements of total degree `d`.
pub fn tensors(m_dims: &[usize], p: usize, d: usize) -> Vec<Vec<Slot>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    extend(m_dims, p, d, &mut cur, &mut out);
    out
}

fn extend(m_dims: &[usize], p: usize, left: usize, cur: &mut Vec<Slot>, out: &mut Vec<Vec<Slot>>) {
    if cur.len() == p {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for e in (0..=left).step_by(2) {
        for b in 0..m_dims.get(e).copied().unwrap_or(0) {
            cur.push((e, b));
            extend(m_dims, p, left - e, cur, out);
            cur.pop();
        }
    }
}

/// `t` shifted by `s` positions: entry `k` moves to `k + s`.
pub fn rotate(t: &[Slot], s: usize) -> Vec<Slot> {
    let p = t.len();
    (0..p).map(|k| t[(k + p - s % p) % p]).collect()
}

/// Least rotation of `t`.
pub fn canonical(t: &[Slot]) -> Vec<Slot> {
    (0..t.len()).map(|s| rotate(t, s)).min().unwrap_or_default()
}

pub fn is_diagonal(t: &[Slot]) -> bool {
    t.windows(2).all(|w| w[0] == w[1])
}

/// The action of `g` in `(Z/p)^*` on tensor positions: entry `k` moves to
/// `g k mod p`.
pub fn w_image(t: &[Slot], g: usize) -> Vec<Slot> {
    let p = t.len();
    let mut out = t.to_vec();
    for (k, &x) in t.iter().enumerate() {
        out[(g * k) % p] = x;
    }
    out
}

/// Least primitive root mod `p`, generating `W = (Z/p)^*`.
pub fn primitive_root(p: usize) -> usize {
    (1..p.max(2))
        .find(|&g| {
            let mut x = g % p;
            let mut k = 1;
            while x != 1 % p {
                x = x * g % p;
                k += 1;
            }
            k == p - 1 || p == 2
        })
        .unwrap_or(1)
}

/// Canonical representatives of the free `Z/p`-orbits of degree-`d`
/// tensors, sorted.
pub fn free_orbits(m_dims: &[usize], p: usize, d: usize) -> Vec<Vec<Slot>> {
    let reps: BTreeSet<Vec<Slot>> = tensors(m_dims, p, d).iter().filter(|t| !is_diagonal(t)).map(|t| canonical(t)).collect();
    reps.into_iter().collect()
}

/// Free orbits grouped into `W`-orbits, each group sorted, groups sorted by
/// their first member.
pub fn w_orbits(reps: &[Vec<Slot>], p: usize) -> Vec<Vec<Vec<Slot>>> {
    let g = primitive_root(p);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in reps {
        if seen.contains(r) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut cur = r.clone();
        while orbit.insert(cur.clone()) {
            cur = canonical(&w_image(&cur, g));
        }
        seen.extend(orbit.iter().cloned());
        out.push(orbit.into_iter().collect());
    }
    out
}

/// Dimensions of the pieces of `0 -> τ -> (M^{⊗p})^{Z/p} -> ΦM -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSubspace {
    /// Number of distinct nonzero norms `sum_s σ^s t`.
    pub tau: Vec<usize>,
    /// `(M^{⊗p})^{Z/p}` by Burnside's orbit count.
    pub invariants: Vec<usize>,
    /// `ΦM` by degree dilation.
    pub phi: Vec<usize>,
    /// `τ^W`: orbits of `W` on the nonzero norms.
    pub tau_w: Vec<usize>,
}

impl TauSubspace {
    /// Whether `dim invariants = dim τ + dim ΦM` in every degree.
    pub fn is_exact(&self) -> bool {
        self.invariants.iter().zip(&self.tau).zip(&self.phi).all(|((i, t), f)| *i == t + f)
    }
}

fn norm(t: &[Slot], p: usize) -> BTreeMap<Vec<Slot>, usize> {
    let mut out = BTreeMap::new();
    for s in 0..p {
        *out.entry(rotate(t, s)).or_insert(0) += 1;
    }
    out.retain(|_, c| *c % p != 0);
    out
}

pub fn tau_subspace(m: &PolyFamily, cutoff: usize) -> TauSubspace {
    let p = m.algebra().p() as usize;
    let m_dims: Vec<usize> = m.dims().into_iter().take(cutoff + 1).collect();
    let g = primitive_root(p);
    let mut out = TauSubspace { tau: Vec::new(), invariants: Vec::new(), phi: phi(p as u32, &m_dims).dims(cutoff), tau_w: Vec::new() };
    for d in 0..=cutoff {
        let all = tensors(&m_dims, p, d);
        let fixed = all.iter().filter(|t| rotate(t, 1) == **t).count();
        out.invariants.push((all.len() + (p - 1) * fixed) / p);
        let norms: BTreeSet<Vec<Vec<Slot>>> =
            all.iter().map(|t| norm(t, p)).filter(|n| !n.is_empty()).map(|n| n.into_keys().collect()).collect();
        out.tau.push(norms.len());
        let mut w_classes = BTreeSet::new();
        for n in &norms {
            let mut orbit = BTreeSet::new();
            let mut cur = n.clone();
            while orbit.insert(cur.clone()) {
                let mut next: Vec<Vec<Slot>> = cur.iter().map(|t| w_image(t, g)).collect();
                next.sort();
                cur = next;
            }
            w_classes.insert(orbit.into_iter().next().expect("nonempty orbit"));
        }
        out.tau_w.push(w_classes.len());
    }
    out
}
