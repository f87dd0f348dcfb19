use alloc::vec;
use alloc::vec::Vec;

use super::morphism::AlgebraMorphism;
use super::poly::{GradedBasis, Monomial, PolyAlgebra, PolyElement};
use crate::error::{Error, Result};
use crate::fp::{FpMatrix, Subspace};

/// Graded dimensions in degrees `0..=cutoff`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    pub cutoff: usize,
    pub dims: Vec<usize>,
}

impl HilbertSeries {
    pub fn new(dims: Vec<usize>) -> Self {
        HilbertSeries { cutoff: dims.len().saturating_sub(1), dims }
    }

    pub fn truncate(&self, cutoff: usize) -> Self {
        HilbertSeries::new(self.dims[..=cutoff.min(self.cutoff)].to_vec())
    }
}

/// Series from basis sizes, one entry per degree.
pub fn hilbert<T>(bases: &[Vec<T>]) -> HilbertSeries {
    HilbertSeries::new(bases.iter().map(Vec::len).collect())
}

/// A graded ring given by per-degree bases inside ambient coordinate spaces.
pub trait GradedRing {
    fn cutoff(&self) -> usize;
    fn part(&self, d: usize) -> &Subspace;
    /// Product of coordinate vectors of degrees `d1` and `d2`.
    fn product(&self, d1: usize, x: &[u32], d2: usize, y: &[u32]) -> Vec<u32>;

    fn dims(&self) -> Vec<usize> {
        (0..=self.cutoff()).map(|d| self.part(d).dim()).collect()
    }

    fn hilbert(&self) -> HilbertSeries {
        HilbertSeries::new(self.dims())
    }

    /// Degrees of a minimal generating set up to the cutoff, listed with
    /// multiplicity: degree d appears once for every dimension of the
    /// degree-d part not reached by products of lower positive degrees.
    fn generator_degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for d in (2..=self.cutoff()).step_by(2) {
            let top = self.part(d);
            let mut decomposable = Subspace::zero(top.field(), top.ambient_dim());
            for e in (2..=d / 2).step_by(2) {
                for x in self.part(e).basis() {
                    for y in self.part(d - e).basis() {
                        decomposable.insert(self.product(e, x, d - e, y));
                    }
                }
            }
            out.extend(core::iter::repeat(d).take(top.dim() - decomposable.dim()));
        }
        out
    }

    /// Whether every product of basis elements lands back in the ring.
    fn is_multiplicatively_closed(&self) -> bool {
        let c = self.cutoff();
        (0..=c).all(|d1| {
            (d1..=c - d1).all(|d2| {
                self.part(d1).basis().iter().all(|x| {
                    self.part(d2).basis().iter().all(|y| self.part(d1 + d2).contains(&self.product(d1, x, d2, y)))
                })
            })
        })
    }
}

/// Per-degree subspaces of a polynomial algebra, in monomial coordinates.
///
/// Used both for subrings (invariants) and for Steenrod-stable submodules
/// (monomial ideals, Frobenius images).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFamily {
    basis: GradedBasis,
    parts: Vec<Subspace>,
}

impl PolyFamily {
    pub fn from_parts(algebra: PolyAlgebra, parts: Vec<Subspace>) -> Result<Self> {
        let basis = GradedBasis::new(algebra, parts.len().saturating_sub(1));
        for (d, s) in parts.iter().enumerate() {
            if s.ambient_dim() != basis.degree(d).len() {
                return Err(Error::DimensionMismatch { expected: basis.degree(d).len(), found: s.ambient_dim() });
            }
        }
        Ok(PolyFamily { basis, parts })
    }

    pub fn full(algebra: PolyAlgebra, cutoff: usize) -> Self {
        let basis = GradedBasis::new(algebra, cutoff);
        let parts = (0..=cutoff).map(|d| Subspace::full(algebra.field(), basis.degree(d).len())).collect();
        PolyFamily { basis, parts }
    }

    /// Only the scalars: F_p concentrated in degree 0.
    pub fn scalars(algebra: PolyAlgebra, cutoff: usize) -> Self {
        let basis = GradedBasis::new(algebra, cutoff);
        let parts = (0..=cutoff)
            .map(|d| {
                let n = basis.degree(d).len();
                if d == 0 {
                    Subspace::full(algebra.field(), n)
                } else {
                    Subspace::zero(algebra.field(), n)
                }
            })
            .collect();
        PolyFamily { basis, parts }
    }

    /// The ideal generated by the given monomials.
    pub fn monomial_ideal(algebra: PolyAlgebra, generators: &[Monomial], cutoff: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != algebra.ngens()) {
            return Err(Error::DimensionMismatch { expected: algebra.ngens(), found: g.len() });
        }
        let basis = GradedBasis::new(algebra, cutoff);
        let f = algebra.field();
        let parts = (0..=cutoff)
            .map(|d| {
                let b = basis.degree(d);
                let units = b.monomials().iter().enumerate().filter(|(_, m)| {
                    generators.iter().any(|g| g.iter().zip(m.iter()).all(|(a, e)| a <= e))
                });
                Subspace::spanned_by(f, b.len(), units.map(|(i, _)| unit(b.len(), i)))
            })
            .collect();
        Ok(PolyFamily { basis, parts })
    }

    /// Image of the Frobenius x -> x^p, truncated at the same cutoff.
    pub fn frobenius_image(&self) -> Self {
        let a = self.algebra();
        let p = a.p() as usize;
        let cutoff = self.cutoff();
        let parts = (0..=cutoff)
            .map(|d| {
                let n = self.basis.degree(d).len();
                if d % p != 0 {
                    return Subspace::zero(a.field(), n);
                }
                let src = d / p;
                let vecs: Vec<Vec<u32>> = self
                    .elements(src)
                    .iter()
                    .map(|x| x.pow(a.p()).to_vector(self.basis.degree(d)).expect("degree p*d"))
                    .collect();
                Subspace::spanned_by(a.field(), n, vecs)
            })
            .collect();
        PolyFamily { basis: self.basis.clone(), parts }
    }

    pub fn algebra(&self) -> PolyAlgebra {
        self.basis.algebra()
    }
    pub fn cutoff(&self) -> usize {
        self.basis.cutoff()
    }
    pub fn graded_basis(&self) -> &GradedBasis {
        &self.basis
    }
    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }

    /// Basis elements of degree `d` as polynomials.
    pub fn elements(&self, d: usize) -> Vec<PolyElement> {
        let b = self.basis.degree(d);
        self.parts[d].basis().iter().map(|v| PolyElement::from_vector(self.algebra(), b, v)).collect()
    }

    /// Membership of a homogeneous element within the cutoff.
    pub fn contains(&self, x: &PolyElement) -> bool {
        let Some(d) = x.degree() else {
            return x.is_zero();
        };
        d <= self.cutoff() && x.to_vector(self.basis.degree(d)).map(|v| self.parts[d].contains(&v)).unwrap_or(false)
    }

    pub fn is_subfamily_of(&self, other: &PolyFamily) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| a.is_subspace_of(b))
    }

    pub fn intersect(&self, other: &PolyFamily) -> PolyFamily {
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| a.intersect(b)).collect();
        PolyFamily { basis: self.basis.clone(), parts }
    }
}

impl GradedRing for PolyFamily {
    fn cutoff(&self) -> usize {
        self.basis.cutoff()
    }
    fn part(&self, d: usize) -> &Subspace {
        &self.parts[d]
    }
    fn product(&self, d1: usize, x: &[u32], d2: usize, y: &[u32]) -> Vec<u32> {
        let a = self.algebra();
        let px = PolyElement::from_vector(a, self.basis.degree(d1), x);
        let py = PolyElement::from_vector(a, self.basis.degree(d2), y);
        (&px * &py).to_vector(self.basis.degree(d1 + d2)).expect("homogeneous product")
    }
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Invariants of F_p[v_1..v_n] under the substitution action of a finite
/// set of n x n matrices, which must be invertible and closed under products.
///
/// Each degree is the simultaneous kernel of `w* - id` over all `w`.
pub fn invariants(algebra: PolyAlgebra, group: &[FpMatrix], cutoff: usize) -> Result<PolyFamily> {
    let n = algebra.ngens();
    for w in group {
        if w.rows() != n || w.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: w.rows().max(w.cols()) });
        }
        w.inverse()?;
    }
    for a in group {
        for b in group {
            let ab = a.mul(b)?;
            if !group.contains(&ab) {
                return Err(Error::NotClosed);
            }
        }
    }
    let f = algebra.field();
    let mats: Vec<Vec<FpMatrix>> = group
        .iter()
        .map(|w| AlgebraMorphism::new(algebra, algebra, w.clone()).map(|m| m.degree_matrices(cutoff)))
        .collect::<Result<_>>()?;
    let parts = (0..=cutoff)
        .map(|d| {
            let dim = algebra.dim(d);
            let mut rows = Subspace::zero(f, dim);
            for per_degree in &mats {
                let m = per_degree[d].sub(&FpMatrix::identity(f, dim)).expect("square");
                for r in 0..m.rows() {
                    rows.insert(m.row(r).to_vec());
                }
            }
            Subspace::spanned_by(f, dim, rows.annihilator())
        })
        .collect();
    PolyFamily::from_parts(algebra, parts)
}
