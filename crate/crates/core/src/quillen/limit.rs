use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::category::QuillenCat;
use crate::error::{Error, Result};
use crate::fp::{PrimeField, Subspace};
use crate::graded::{AlgebraMorphism, GradedBasis, GradedRing, PolyAlgebra, PolyElement};
use crate::steenrod::{P0Family, SteenrodContext};

/// A graded subring of a finite product of polynomial rings
/// `F_p[v_1..v_r]`, one factor per component, stored per degree as a
/// subspace of the concatenated monomial coordinates.
///
/// Limits over a Quillen category are of this form with one component per
/// object; the images of stable elements use one component per detecting
/// subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitRing {
    field: PrimeField,
    cutoff: usize,
    ranks: Vec<usize>,
    bases: Vec<GradedBasis>,
    offsets: Vec<Vec<usize>>,
    parts: Vec<Subspace>,
}

impl LimitRing {
    /// The whole product ring, before any constraint.
    pub(crate) fn product_ring(field: PrimeField, ranks: Vec<usize>, cutoff: usize) -> Self {
        let bases: Vec<GradedBasis> = ranks.iter().map(|&r| GradedBasis::new(PolyAlgebra::new(field, r), cutoff)).collect();
        let offsets: Vec<Vec<usize>> = (0..=cutoff)
            .map(|d| {
                let mut acc = 0;
                let mut o: Vec<usize> = bases
                    .iter()
                    .map(|b| {
                        let here = acc;
                        acc += b.degree(d).len();
                        here
                    })
                    .collect();
                o.push(acc);
                o
            })
            .collect();
        let parts = offsets.iter().map(|o| Subspace::full(field, *o.last().expect("sentinel"))).collect();
        LimitRing { field, cutoff, ranks, bases, offsets, parts }
    }

    pub(crate) fn with_parts(mut self, parts: Vec<Subspace>) -> Self {
        debug_assert_eq!(parts.len(), self.cutoff + 1);
        self.parts = parts;
        self
    }

    pub fn prime(&self) -> u32 {
        self.field.p()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Ranks of the components.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn algebra(&self, component: usize) -> PolyAlgebra {
        self.bases[component].algebra()
    }

    pub fn ambient_dim(&self, d: usize) -> usize {
        *self.offsets[d].last().expect("sentinel")
    }

    /// Splits a degree-`d` coordinate vector into its components.
    pub fn split(&self, d: usize, x: &[u32]) -> Vec<PolyElement> {
        let o = &self.offsets[d];
        self.bases
            .iter()
            .enumerate()
            .map(|(a, b)| PolyElement::from_vector(b.algebra(), b.degree(d), &x[o[a]..o[a + 1]]))
            .collect()
    }

    /// Concatenates homogeneous degree-`d` components into coordinates.
    pub fn join(&self, d: usize, components: &[PolyElement]) -> Result<Vec<u32>> {
        if components.len() != self.bases.len() {
            return Err(Error::DimensionMismatch { expected: self.bases.len(), found: components.len() });
        }
        let mut out = Vec::with_capacity(self.ambient_dim(d));
        for (x, b) in components.iter().zip(&self.bases) {
            out.extend(x.to_vector(b.degree(d))?);
        }
        Ok(out)
    }

    /// The basis of degree `d` as families of polynomials.
    pub fn families(&self, d: usize) -> Vec<Vec<PolyElement>> {
        self.parts[d].basis().iter().map(|x| self.split(d, x)).collect()
    }

    /// Whether a family of components of degree `d` belongs to the ring.
    pub fn contains(&self, d: usize, components: &[PolyElement]) -> bool {
        d <= self.cutoff && self.join(d, components).is_ok_and(|v| self.parts[d].contains(&v))
    }

    /// Componentwise product, failing when the result leaves the ring.
    pub fn product_checked(&self, d1: usize, x: &[u32], d2: usize, y: &[u32]) -> Result<Vec<u32>> {
        let z = GradedRing::product(self, d1, x, d2, y);
        if self.parts[d1 + d2].contains(&z) {
            Ok(z)
        } else {
            Err(Error::InvariantViolation(format!("product of degrees {d1} and {d2} is not compatible")))
        }
    }
}

impl GradedRing for LimitRing {
    fn cutoff(&self) -> usize {
        self.cutoff
    }

    fn part(&self, d: usize) -> &Subspace {
        &self.parts[d]
    }

    fn product(&self, d1: usize, x: &[u32], d2: usize, y: &[u32]) -> Vec<u32> {
        let prods: Vec<PolyElement> = self.split(d1, x).iter().zip(self.split(d2, y)).map(|(a, b)| a * &b).collect();
        self.join(d1 + d2, &prods).expect("product of homogeneous components")
    }
}

impl P0Family for LimitRing {
    fn prime(&self) -> u32 {
        self.field.p()
    }
    fn cutoff(&self) -> usize {
        self.cutoff
    }
    fn ambient_dim(&self, d: usize) -> usize {
        LimitRing::ambient_dim(self, d)
    }
    fn basis(&self, d: usize) -> Vec<Vec<u32>> {
        self.parts[d].basis().to_vec()
    }
    fn p0(&self, d: usize, x: &[u32]) -> Vec<u32> {
        let p = self.field.p();
        let powers: Vec<PolyElement> = self.split(d, x).iter().map(|c| c.pow(p)).collect();
        self.join(p as usize * d, &powers).expect("p-th powers are homogeneous")
    }
}

/// The inverse limit of `F_p[v_1..v_r]` over the category, degree by degree:
/// the kernel of `(x_E) -> (f*(x_b) - x_a)` over all stored `f: E_a -> E_b`.
pub fn limit_ring(cat: &QuillenCat, cutoff: usize) -> LimitRing {
    let field = cat.field();
    let ranks = cat.ranks();
    let ring = LimitRing::product_ring(field, ranks.clone(), cutoff);
    let pullbacks: Vec<((usize, usize), Vec<crate::fp::FpMatrix>)> = cat
        .all_morphisms()
        .map(|((a, b), m)| {
            let src = PolyAlgebra::new(field, ranks[b]);
            let tgt = PolyAlgebra::new(field, ranks[a]);
            let f = AlgebraMorphism::new(src, tgt, m.matrix.transpose()).expect("ranks match the matrix");
            ((a, b), f.degree_matrices(cutoff))
        })
        .collect();
    let parts = (0..=cutoff)
        .map(|d| {
            let n = ring.ambient_dim(d);
            if d % 2 == 1 {
                return Subspace::zero(field, n);
            }
            let o = &ring.offsets[d];
            let mut rows = Subspace::zero(field, n);
            for ((a, b), mats) in &pullbacks {
                let m = &mats[d];
                for k in 0..m.rows() {
                    let mut row = vec![0u32; n];
                    row[o[*b]..o[*b + 1]].copy_from_slice(m.row(k));
                    row[o[*a] + k] = field.sub(row[o[*a] + k], 1);
                    rows.insert(row);
                }
            }
            Subspace::spanned_by(field, n, rows.annihilator())
        })
        .collect();
    ring.with_parts(parts)
}

/// Outcome of [`steenrod_closure_check`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureReport {
    /// Number of `(basis element, i)` pairs checked.
    pub checked: usize,
    /// `(degree, basis index, i)` with `P^i x` outside the ring.
    pub failures: Vec<(usize, usize, usize)>,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Applies every `P^i`, `i >= 1`, componentwise to every basis family whose
/// target degree stays within the cutoff.
pub fn steenrod_closure_check(ring: &LimitRing) -> ClosureReport {
    let ctx = SteenrodContext::new(ring.field());
    let step = 2 * (ring.prime() as usize - 1);
    let mut report = ClosureReport::default();
    for d in (0..=ring.cutoff).step_by(2) {
        for (k, fam) in ring.families(d).iter().enumerate() {
            let mut i = 1;
            while d + i * step <= ring.cutoff {
                let image: Vec<PolyElement> = fam.iter().map(|x| ctx.apply_p(i, x)).collect();
                report.checked += 1;
                if !ring.contains(d + i * step, &image) {
                    report.failures.push((d, k, i));
                }
                i += 1;
            }
        }
    }
    report
}
