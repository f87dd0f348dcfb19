use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::st::{st1ev, tensor_algebra, v_power};
use super::tau::{canonical, free_orbits, primitive_root, rotate, w_image, w_orbits, Slot};
use crate::error::{Error, Result};
use crate::fp::FpMatrix;
use crate::graded::{GradedRing, PolyAlgebra, PolyElement, PolyFamily};
use crate::steenrod::SteenrodContext;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WreathVariant {
    /// `Z/p ≀ G`.
    Cp,
    /// `S_p ≀ G`, the `W = (Z/p)^*`-invariants of the `Cp` model.
    Sp,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum WreathSymbol {
    /// Sum of the norms of these free orbits: one orbit for `Cp`, a whole
    /// `W`-orbit for `Sp`.
    Norm(Vec<Vec<Slot>>),
    /// `α_i x_b`; `α_0 x_b` is `P x_b`, the unit when `x_b = 1`.
    Alpha { i: usize, b: Slot },
}

/// Basis of the Chow ring of `Z/p ≀ G` or `S_p ≀ G` built from a basis of
/// `M = CH^* BG`, degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathModel {
    variant: WreathVariant,
    inner: PolyFamily,
    cutoff: usize,
    basis: Vec<Vec<WreathSymbol>>,
}

pub fn wreath_model(m: &PolyFamily, variant: WreathVariant, cutoff: usize) -> Result<WreathModel> {
    if GradedRing::cutoff(m) < cutoff {
        return Err(Error::InvalidArgument(format!("inner module known to {} but {cutoff} is needed", GradedRing::cutoff(m))));
    }
    let p = m.algebra().p() as usize;
    let m_dims = m.dims();
    let basis = (0..=cutoff)
        .map(|d| {
            let orbits = free_orbits(&m_dims, p, d);
            let mut syms: Vec<WreathSymbol> = match variant {
                WreathVariant::Cp => orbits.into_iter().map(|o| WreathSymbol::Norm(vec![o])).collect(),
                WreathVariant::Sp => w_orbits(&orbits, p).into_iter().map(WreathSymbol::Norm).collect(),
            };
            for e in (0..=d / p).step_by(2) {
                let rest = d - p * e;
                if rest % 2 == 1 {
                    continue;
                }
                let i = rest / 2;
                if variant == WreathVariant::Sp && i % (p - 1) != 0 {
                    continue;
                }
                syms.extend((0..m_dims[e]).map(|b| WreathSymbol::Alpha { i, b: (e, b) }));
            }
            syms
        })
        .collect();
    Ok(WreathModel { variant, inner: m.clone(), cutoff, basis })
}

impl WreathModel {
    pub fn prime(&self) -> u32 {
        self.inner.algebra().p()
    }
    pub fn variant(&self) -> WreathVariant {
        self.variant
    }
    pub fn inner(&self) -> &PolyFamily {
        &self.inner
    }
    pub fn cutoff(&self) -> usize {
        self.cutoff
    }
    pub fn basis(&self, d: usize) -> &[WreathSymbol] {
        &self.basis[d]
    }
    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    /// Matrix of a generator of `W` on the degree-`d` basis of a `Cp` model:
    /// norms are permuted, `α_i x` is scaled by `g^i`.
    pub fn w_action(&self, d: usize) -> Result<FpMatrix> {
        if self.variant != WreathVariant::Cp {
            return Err(Error::InvalidArgument("W acts on the Cp model".into()));
        }
        let f = self.inner.algebra().field();
        let p = f.p() as usize;
        let g = primitive_root(p);
        let index: BTreeMap<&WreathSymbol, usize> = self.basis[d].iter().enumerate().map(|(k, s)| (s, k)).collect();
        let n = self.basis[d].len();
        let mut m = FpMatrix::zeros(f, n, n);
        for (col, s) in self.basis[d].iter().enumerate() {
            match s {
                WreathSymbol::Norm(orbits) => {
                    let image = WreathSymbol::Norm(vec![canonical(&w_image(&orbits[0], g))]);
                    m.set(index[&image], col, 1);
                }
                WreathSymbol::Alpha { i, .. } => m.set(col, col, f.pow(g as u32, *i as u64)),
            }
        }
        Ok(m)
    }

    /// The degree-`d` basis of this model in the coordinates of a `Cp` model
    /// over the same inner module.
    pub fn coordinates_in(&self, cp: &WreathModel, d: usize) -> Result<Vec<Vec<u32>>> {
        if cp.variant != WreathVariant::Cp || cp.inner != self.inner {
            return Err(Error::InvalidArgument("target must be the Cp model of the same module".into()));
        }
        let index: BTreeMap<&WreathSymbol, usize> = cp.basis[d].iter().enumerate().map(|(k, s)| (s, k)).collect();
        let lookup = |s: &WreathSymbol| {
            index.get(s).copied().ok_or_else(|| Error::InvariantViolation(format!("symbol {s:?} missing from the Cp model")))
        };
        self.basis[d]
            .iter()
            .map(|s| {
                let mut v = vec![0u32; cp.basis[d].len()];
                match s {
                    WreathSymbol::Norm(orbits) => {
                        for o in orbits {
                            v[lookup(&WreathSymbol::Norm(vec![o.clone()]))?] = 1;
                        }
                    }
                    WreathSymbol::Alpha { .. } => v[lookup(s)?] = 1,
                }
                Ok(v)
            })
            .collect()
    }
}

/// Restriction maps of a model over `M = F_p[w_1..w_n]` to the base
/// `E^p` and to the diagonal `Z/p × ΔE`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathRestrictions {
    /// `F_p[v_{k,j}]` with `v_{k,j}` at index `k n + j`.
    pub base: PolyAlgebra,
    /// `F_p[v, w_1..w_n]` with `v` at index 0.
    pub diagonal: PolyAlgebra,
    /// Per degree: rows the target monomials, columns the model basis.
    pub to_base: Vec<FpMatrix>,
    pub to_diagonal: Vec<FpMatrix>,
}

impl WreathRestrictions {
    /// Rank of the joint restriction in degree `d`.
    pub fn joint_rank(&self, d: usize) -> usize {
        let (b, g) = (&self.to_base[d], &self.to_diagonal[d]);
        let mut rows: Vec<Vec<u32>> = (0..b.rows()).map(|r| b.row(r).to_vec()).collect();
        rows.extend((0..g.rows()).map(|r| g.row(r).to_vec()));
        FpMatrix::from_rows(b.field(), b.cols(), &rows).expect("same column count").rank()
    }

    /// Degrees where the joint restriction is not injective.
    pub fn non_injective_degrees(&self) -> Vec<usize> {
        (0..self.to_base.len()).filter(|&d| self.joint_rank(d) < self.to_base[d].cols()).collect()
    }
}

fn place(x: &PolyElement, block: usize, target: PolyAlgebra) -> PolyElement {
    let n = x.algebra().ngens();
    let mut out = PolyElement::zero(target);
    for (m, c) in x.terms() {
        let mut e = vec![0; target.ngens()];
        e[block * n..(block + 1) * n].copy_from_slice(m);
        out = &out + &PolyElement::monomial(target, e, c);
    }
    out
}

pub fn wreath_restrictions(model: &WreathModel) -> Result<WreathRestrictions> {
    let inner = model.inner.algebra();
    if model.inner != PolyFamily::full(inner, GradedRing::cutoff(&model.inner)) {
        return Err(Error::Unsupported("restrictions need a polynomial inner module".into()));
    }
    let f = inner.field();
    let p = f.p() as usize;
    let n = inner.ngens();
    let ctx = SteenrodContext::new(f);
    let base = PolyAlgebra::new(f, n * p);
    let diagonal = tensor_algebra(inner);
    let elems: Vec<Vec<PolyElement>> = (0..=model.cutoff).map(|e| model.inner.elements(e)).collect();
    let elem = |s: Slot| &elems[s.0][s.1];
    let tensor = |t: &[Slot]| t.iter().enumerate().fold(PolyElement::one(base), |acc, (k, &s)| &acc * &place(elem(s), k, base));
    let mut to_base = Vec::with_capacity(model.cutoff + 1);
    let mut to_diagonal = Vec::with_capacity(model.cutoff + 1);
    for d in 0..=model.cutoff {
        let (bb, db) = (base.basis(d), diagonal.basis(d));
        let mut bcols = Vec::new();
        let mut dcols = Vec::new();
        for s in &model.basis[d] {
            let (rb, rd) = match s {
                WreathSymbol::Norm(orbits) => {
                    let mut x = PolyElement::zero(base);
                    for o in orbits {
                        for sh in 0..p {
                            x = &x + &tensor(&rotate(o, sh));
                        }
                    }
                    (x, PolyElement::zero(diagonal))
                }
                WreathSymbol::Alpha { i, b } => {
                    let rb = if *i == 0 { tensor(&vec![*b; p]) } else { PolyElement::zero(base) };
                    (rb, &v_power(diagonal, *i as u32) * &st1ev(&ctx, elem(*b))?)
                }
            };
            bcols.push(rb.to_vector(&bb)?);
            dcols.push(rd.to_vector(&db)?);
        }
        to_base.push(FpMatrix::from_columns(f, bb.len(), &bcols)?);
        to_diagonal.push(FpMatrix::from_columns(f, db.len(), &dcols)?);
    }
    Ok(WreathRestrictions { base, diagonal, to_base, to_diagonal })
}
