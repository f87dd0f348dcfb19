use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::limit::LimitRing;
use crate::error::{Error, Result};
use crate::fp::{FpMatrix, PrimeField, Subspace};
use crate::graded::{invariants, AlgebraMorphism, GradedRing, PolyAlgebra, PolyFamily};
use crate::groups::{p_part, ElemAbelianSubgroup, FiniteGroup, GroupKind, Subgroup};
use crate::wreath::{wreath_restrictions, WreathModel, WreathVariant};

/// An elementary abelian subgroup of the Sylow together with the restriction
/// of the model to it.
#[derive(Clone, Debug)]
pub struct Detector {
    pub subgroup: ElemAbelianSubgroup,
    /// Per degree: rows the monomials of `F_p[v_1..v_r]`, columns the model
    /// basis.
    pub restriction: Vec<FpMatrix>,
}

/// A model of the Chow ring of a Sylow p-subgroup, known through injective
/// restrictions to elementary abelian subgroups.
#[derive(Clone, Debug)]
pub struct SylowModel {
    field: PrimeField,
    sylow: Subgroup,
    dims: Vec<usize>,
    detectors: Vec<Detector>,
}

impl SylowModel {
    /// `F_p[v_1..v_r]` for an elementary abelian Sylow, detected by itself.
    pub fn polynomial(group: &FiniteGroup, p: usize, cutoff: usize) -> Result<Self> {
        let field = PrimeField::new(p as u32)?;
        let sylow = group.sylow(p);
        let e = ElemAbelianSubgroup::canonical(group, &sylow, p)
            .map_err(|_| Error::Unsupported("the polynomial model needs an elementary abelian Sylow".into()))?;
        let alg = PolyAlgebra::new(field, e.rank());
        let restriction: Vec<FpMatrix> = (0..=cutoff).map(|d| FpMatrix::identity(field, alg.dim(d))).collect();
        let dims = (0..=cutoff).map(|d| alg.dim(d)).collect();
        Self::from_detectors(group, p, sylow, dims, vec![Detector { subgroup: e, restriction }])
    }

    /// The model of `Z/p ≀ E` for an elementary abelian permutation group
    /// `inner` of degree `d`, sitting in `group` on the same `p d` points
    /// with block `k` the points `k d .. (k + 1) d`.
    pub fn from_wreath(group: &FiniteGroup, inner: &FiniteGroup, model: &WreathModel) -> Result<Self> {
        let p = model.prime() as usize;
        if model.variant() == WreathVariant::Sp && p != 2 {
            return Err(Error::Unsupported("S_p ≀ G is not a p-group for odd p".into()));
        }
        let (&GroupKind::Permutation { degree: d }, &GroupKind::Permutation { degree }) = (inner.kind(), group.kind()) else {
            return Err(Error::Unsupported("wreath models embed permutation groups".into()));
        };
        if degree != p * d {
            return Err(Error::DimensionMismatch { expected: p * d, found: degree });
        }
        let e = ElemAbelianSubgroup::canonical(inner, &inner.whole(), p)?;
        let n = e.rank();
        if n != model.inner().algebra().ngens() {
            return Err(Error::DimensionMismatch { expected: model.inner().algebra().ngens(), found: n });
        }
        let lookup = |perm: Vec<u32>| {
            group.index_of(&perm).ok_or_else(|| Error::InvalidArgument(format!("{perm:?} is not in the group")))
        };
        let on_block = |b: usize, k: usize| -> Vec<u32> {
            let img = inner.element(b);
            (0..degree).map(|x| if x / d == k { (k * d) as u32 + img[x % d] } else { x as u32 }).collect()
        };
        let mut base = Vec::with_capacity(n * p);
        for k in 0..p {
            for &b in e.basis() {
                base.push(lookup(on_block(b, k))?);
            }
        }
        let sigma = lookup((0..degree).map(|x| ((x + d) % degree) as u32).collect())?;
        let mut diagonal = vec![sigma];
        for j in 0..n {
            diagonal.push((0..p).fold(group.identity(), |acc, k| group.mul(acc, base[k * n + j])));
        }
        let mut gens = base.clone();
        gens.push(sigma);
        let sylow = group.subgroup(&gens);
        let r = wreath_restrictions(model)?;
        let detectors = vec![
            Detector { subgroup: ElemAbelianSubgroup::with_basis(group, &base, p)?, restriction: r.to_base },
            Detector { subgroup: ElemAbelianSubgroup::with_basis(group, &diagonal, p)?, restriction: r.to_diagonal },
        ];
        Self::from_detectors(group, p, sylow, model.dims(), detectors)
    }

    /// Checks that `sylow` is a Sylow subgroup containing every detector and
    /// that the joint restriction is injective in every degree.
    pub fn from_detectors(group: &FiniteGroup, p: usize, sylow: Subgroup, dims: Vec<usize>, detectors: Vec<Detector>) -> Result<Self> {
        let field = PrimeField::new(p as u32)?;
        if sylow.order() != p_part(group.order(), p) {
            return Err(Error::InvalidArgument(format!(
                "subgroup of order {} is not Sylow in a group of order {}",
                sylow.order(),
                group.order()
            )));
        }
        for det in &detectors {
            if !det.subgroup.subgroup().is_subgroup_of(&sylow) {
                return Err(Error::InvalidArgument("detector outside the Sylow subgroup".into()));
            }
            if det.restriction.len() != dims.len() {
                return Err(Error::DimensionMismatch { expected: dims.len(), found: det.restriction.len() });
            }
        }
        for (d, &n) in dims.iter().enumerate() {
            let mut rows = Vec::new();
            for det in &detectors {
                let m = &det.restriction[d];
                if m.cols() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: m.cols() });
                }
                rows.extend((0..m.rows()).map(|r| m.row(r).to_vec()));
            }
            if FpMatrix::from_rows(field, n, &rows)?.rank() < n {
                return Err(Error::InvariantViolation(format!("restriction to the detecting subgroups is not injective in degree {d}")));
            }
        }
        Ok(SylowModel { field, sylow, dims, detectors })
    }

    pub fn sylow(&self) -> &Subgroup {
        &self.sylow
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn detectors(&self) -> &[Detector] {
        &self.detectors
    }
    pub fn cutoff(&self) -> usize {
        self.dims.len() - 1
    }

    /// Restriction to the elementary abelian subgroup with ordered basis
    /// `f`, through a detector containing a Sylow-conjugate of it.
    pub fn restrict_to(&self, group: &FiniteGroup, f: &[usize]) -> Result<Vec<FpMatrix>> {
        for det in &self.detectors {
            for &s in self.sylow.elements() {
                let coords: Option<Vec<Vec<u32>>> =
                    f.iter().map(|&x| det.subgroup.coordinates(group.conj(s, x)).map(<[u32]>::to_vec)).collect();
                let Some(cols) = coords else {
                    continue;
                };
                let inclusion = FpMatrix::from_columns(self.field, det.subgroup.rank(), &cols)?;
                let pull = AlgebraMorphism::new(
                    PolyAlgebra::new(self.field, det.subgroup.rank()),
                    PolyAlgebra::new(self.field, f.len()),
                    inclusion.transpose(),
                )?
                .degree_matrices(self.cutoff());
                return pull.iter().zip(&det.restriction).map(|(a, b)| a.mul(b)).collect();
            }
        }
        Err(Error::InvariantViolation(format!("elementary abelian subgroup with basis {f:?} is not detected")))
    }

    fn image_ring(&self) -> LimitRing {
        LimitRing::product_ring(self.field, self.detectors.iter().map(|d| d.subgroup.rank()).collect(), self.cutoff())
    }
}

/// Elements of a Sylow model passing every stability condition, with their
/// image in the product of the detecting polynomial rings.
#[derive(Clone, Debug)]
pub struct StableSubring {
    parts: Vec<Subspace>,
    image: LimitRing,
}

impl StableSubring {
    /// Per degree: the stable subspace in model coordinates.
    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }
    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Subspace::dim).collect()
    }
    /// The stable elements restricted to the detectors, where products are
    /// computed.
    pub fn image(&self) -> &LimitRing {
        &self.image
    }
}

/// Elements `x` of the model with `res_F(x) = res_{g^-1 F g}(x)` for every
/// double coset representative `g` of `S \ G / S` and every maximal
/// elementary abelian `F` of `S ∩ g S g^-1`, the two restrictions compared
/// through the bases `f_i` and `g^-1 f_i g`.
pub fn stable_elements(group: &FiniteGroup, model: &SylowModel) -> Result<StableSubring> {
    let p = model.field.p() as usize;
    let s = &model.sylow;
    let cutoff = model.cutoff();
    let mut constraints: Vec<Subspace> = model.dims.iter().map(|&n| Subspace::zero(model.field, n)).collect();
    let dc = group.double_cosets(s, s);
    for (&g, l) in dc.representatives.iter().zip(&dc.intersections) {
        let g_inv = group.inv(g);
        for f in group.maximal_elementary_abelian_subgroups_of(l, p) {
            let basis = ElemAbelianSubgroup::canonical(group, &f, p)?.basis().to_vec();
            let moved: Vec<usize> = basis.iter().map(|&x| group.conj(g_inv, x)).collect();
            let (a, b) = (model.restrict_to(group, &basis)?, model.restrict_to(group, &moved)?);
            for d in 0..=cutoff {
                let diff = a[d].sub(&b[d])?;
                for r in 0..diff.rows() {
                    constraints[d].insert(diff.row(r).to_vec());
                }
            }
        }
    }
    let parts: Vec<Subspace> =
        constraints.iter().map(|c| Subspace::spanned_by(model.field, c.ambient_dim(), c.annihilator())).collect();
    let ring = model.image_ring();
    let images = parts
        .iter()
        .enumerate()
        .map(|(d, part)| {
            let vecs = part
                .basis()
                .iter()
                .map(|x| {
                    let mut out = Vec::new();
                    for det in &model.detectors {
                        out.extend(det.restriction[d].mul_vec(x)?);
                    }
                    Ok(out)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Subspace::spanned_by(model.field, ring.ambient_dim(d), vecs))
        })
        .collect::<Result<Vec<_>>>()?;
    let image = ring.with_parts(images);
    if image.dims() != parts.iter().map(Subspace::dim).collect::<Vec<_>>() {
        return Err(Error::InvariantViolation("stable elements lost under restriction".into()));
    }
    Ok(StableSubring { parts, image })
}

/// `F_p[S']^{N_G(S')}` for `S'` the elements of order dividing p in an
/// abelian Sylow subgroup.
pub fn swan_invariants(group: &FiniteGroup, p: usize, cutoff: usize) -> Result<PolyFamily> {
    let field = PrimeField::new(p as u32)?;
    let sylow = group.sylow(p);
    if !group.is_abelian(&sylow) {
        return Err(Error::NonAbelianSylow);
    }
    let omega: Vec<usize> = sylow.elements().iter().copied().filter(|&x| group.pow(x, p) == group.identity()).collect();
    let e = ElemAbelianSubgroup::canonical(group, &group.subgroup_from_elements(omega), p)?;
    let r = e.rank();
    let mut mats: BTreeSet<Vec<u32>> = BTreeSet::new();
    for &n in group.normalizer(e.subgroup()).elements() {
        let mut entries = vec![0u32; r * r];
        for (i, &b) in e.basis().iter().enumerate() {
            let c = e.coordinates(group.conj(n, b)).expect("normalizer preserves the subgroup");
            for (j, &cj) in c.iter().enumerate() {
                // transpose: row i holds the coordinates of n b_i n^-1
                entries[i * r + j] = cj;
            }
        }
        mats.insert(entries);
    }
    let mats: Vec<FpMatrix> = mats.into_iter().map(|m| FpMatrix::new(field, r, r, m)).collect::<Result<_>>()?;
    invariants(PolyAlgebra::new(field, r), &mats, cutoff)
}

impl GradedRing for StableSubring {
    fn cutoff(&self) -> usize {
        self.image.cutoff()
    }
    fn part(&self, d: usize) -> &Subspace {
        self.image.part(d)
    }
    fn product(&self, d1: usize, x: &[u32], d2: usize, y: &[u32]) -> Vec<u32> {
        self.image.product(d1, x, d2, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, elementary_abelian_perm, symmetric, wreath_product, WreathBase, DEFAULT_CAP};
    use crate::quillen::{build_category, limit_ring};
    use crate::wreath::wreath_model;

    fn limit_dims(g: &FiniteGroup, p: usize, cutoff: usize) -> Vec<usize> {
        limit_ring(&build_category(g, p).unwrap(), cutoff).dims()
    }

    #[test]
    fn s3_stable_matches_limit() {
        let g = symmetric(3).unwrap();
        let st = stable_elements(&g, &SylowModel::polynomial(&g, 3, 16).unwrap()).unwrap();
        assert_eq!(st.dims(), limit_dims(&g, 3, 16));
        assert_eq!(swan_invariants(&g, 3, 16).unwrap().dims(), limit_dims(&g, 3, 16));
    }

    #[test]
    fn normal_sylow_with_trivial_action_is_everything() {
        let g = elementary_abelian_perm(3, 2).unwrap();
        let model = SylowModel::polynomial(&g, 3, 8).unwrap();
        assert_eq!(stable_elements(&g, &model).unwrap().dims(), model.dims());
    }

    #[test]
    fn s4_through_the_dihedral_wreath_model() {
        let g = symmetric(4).unwrap();
        let inner = cyclic(2).unwrap();
        let m = PolyFamily::full(PolyAlgebra::new(PrimeField::new(2).unwrap(), 1), 12);
        let model = SylowModel::from_wreath(&g, &inner, &wreath_model(&m, WreathVariant::Cp, 12).unwrap()).unwrap();
        let st = stable_elements(&g, &model).unwrap();
        assert_eq!(st.dims(), limit_dims(&g, 2, 12));
        assert!(st.is_multiplicatively_closed());
    }

    #[test]
    fn wreath_model_of_the_whole_group() {
        let inner = cyclic(3).unwrap();
        let g = wreath_product(WreathBase::Cyclic, &inner, 3, DEFAULT_CAP).unwrap();
        let m = PolyFamily::full(PolyAlgebra::new(PrimeField::new(3).unwrap(), 1), 10);
        let model = SylowModel::from_wreath(&g, &inner, &wreath_model(&m, WreathVariant::Cp, 10).unwrap()).unwrap();
        assert_eq!(stable_elements(&g, &model).unwrap().dims(), model.dims());
    }

    #[test]
    fn swan_rejects_non_abelian_sylow() {
        assert_eq!(swan_invariants(&symmetric(4).unwrap(), 2, 4).unwrap_err(), Error::NonAbelianSylow);
    }
}
