use alloc::vec;
use alloc::vec::Vec;

use super::poly::{DegreeBasis, PolyAlgebra, PolyElement};
use crate::error::{Error, Result};
use crate::fp::FpMatrix;

/// Substitution homomorphism F_p[v_1..v_n] -> F_p[w_1..w_m] sending each
/// generator to a linear form.
///
/// The matrix is m x n; column `i` holds the image of `v_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraMorphism {
    source: PolyAlgebra,
    target: PolyAlgebra,
    matrix: FpMatrix,
}

impl AlgebraMorphism {
    pub fn new(source: PolyAlgebra, target: PolyAlgebra, matrix: FpMatrix) -> Result<Self> {
        if matrix.cols() != source.ngens() {
            return Err(Error::DimensionMismatch { expected: source.ngens(), found: matrix.cols() });
        }
        if matrix.rows() != target.ngens() {
            return Err(Error::DimensionMismatch { expected: target.ngens(), found: matrix.rows() });
        }
        if source.field() != target.field() || matrix.field() != source.field() {
            return Err(Error::InvalidArgument("morphism mixes primes".into()));
        }
        Ok(AlgebraMorphism { source, target, matrix })
    }

    /// Builds the morphism from the images of the generators, which must be
    /// homogeneous of degree 2 (or zero).
    pub fn from_images(source: PolyAlgebra, target: PolyAlgebra, images: &[PolyElement]) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::DimensionMismatch { expected: source.ngens(), found: images.len() });
        }
        let linear = target.basis(2);
        let cols = images
            .iter()
            .map(|x| {
                if x.algebra() != target {
                    return Err(Error::InvalidArgument("image lives in the wrong algebra".into()));
                }
                x.to_vector(&linear)
            })
            .collect::<Result<Vec<_>>>()?;
        // The degree-2 basis lists v_1, .., v_m in order.
        let m = FpMatrix::from_columns(target.field(), target.ngens(), &cols)?;
        Self::new(source, target, m)
    }

    pub fn identity(algebra: PolyAlgebra) -> Self {
        AlgebraMorphism { source: algebra, target: algebra, matrix: FpMatrix::identity(algebra.field(), algebra.ngens()) }
    }

    pub fn zero(source: PolyAlgebra, target: PolyAlgebra) -> Self {
        AlgebraMorphism { source, target, matrix: FpMatrix::zeros(source.field(), target.ngens(), source.ngens()) }
    }

    pub fn source(&self) -> PolyAlgebra {
        self.source
    }
    pub fn target(&self) -> PolyAlgebra {
        self.target
    }
    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        if next.source != self.target {
            return Err(Error::DimensionMismatch { expected: self.target.ngens(), found: next.source.ngens() });
        }
        Ok(AlgebraMorphism { source: self.source, target: next.target, matrix: next.matrix.mul(&self.matrix)? })
    }

    pub fn image_of_generator(&self, i: usize) -> PolyElement {
        let mut out = PolyElement::zero(self.target);
        for j in 0..self.target.ngens() {
            let c = self.matrix.get(j, i);
            if c != 0 {
                out = &out + &PolyElement::generator(self.target, j).scale(c);
            }
        }
        out
    }

    /// Substitutes the generator images into `x` and expands.
    pub fn apply(&self, x: &PolyElement) -> Result<PolyElement> {
        if x.algebra() != self.source {
            return Err(Error::DimensionMismatch { expected: self.source.ngens(), found: x.algebra().ngens() });
        }
        let images: Vec<PolyElement> = (0..self.source.ngens()).map(|i| self.image_of_generator(i)).collect();
        let mut out = PolyElement::zero(self.target);
        for (m, c) in x.terms() {
            let mut term = PolyElement::one(self.target).scale(c);
            for (img, &e) in images.iter().zip(m) {
                if e > 0 {
                    term = &term * &img.pow(e);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Matrix of the map on degree-`d` parts in the monomial bases.
    pub fn degree_matrix(&self, d: usize) -> FpMatrix {
        self.degree_matrices(d).pop().expect("at least degree 0")
    }

    /// Matrices of the degree parts for every degree `0..=cutoff`.
    ///
    /// Images are built incrementally: a monomial of degree d is the product of
    /// its first variable with a monomial of degree d - 2.
    pub fn degree_matrices(&self, cutoff: usize) -> Vec<FpMatrix> {
        let f = self.source.field();
        let m = self.target.ngens();
        let mut out = Vec::with_capacity(cutoff + 1);
        let mut prev_src: Option<DegreeBasis> = None;
        let mut prev_tgt: Option<DegreeBasis> = None;
        let mut prev_images: Vec<Vec<u32>> = Vec::new();
        for d in 0..=cutoff {
            let src = self.source.basis(d);
            let tgt = self.target.basis(d);
            if d % 2 == 1 {
                out.push(FpMatrix::zeros(f, 0, 0));
                continue;
            }
            let images: Vec<Vec<u32>> = if d == 0 {
                vec![vec![1 % f.p(); tgt.len()]; src.len()]
            } else {
                let (ps, pt) = (prev_src.as_ref().expect("set"), prev_tgt.as_ref().expect("set"));
                src.monomials()
                    .iter()
                    .map(|mono| {
                        let i = mono.iter().position(|&e| e > 0).expect("positive degree");
                        let mut lower = mono.clone();
                        lower[i] -= 1;
                        let base = &prev_images[ps.position(&lower).expect("lower monomial")];
                        let mut img = vec![0u32; tgt.len()];
                        for (t, &c) in pt.monomials().iter().zip(base) {
                            if c == 0 {
                                continue;
                            }
                            for j in 0..m {
                                let a = self.matrix.get(j, i);
                                if a != 0 {
                                    let mut up = t.clone();
                                    up[j] += 1;
                                    let k = tgt.position(&up).expect("target monomial");
                                    img[k] = f.add(img[k], f.mul(c, a));
                                }
                            }
                        }
                        img
                    })
                    .collect()
            };
            let mat = FpMatrix::from_columns(f, tgt.len(), &images).expect("consistent lengths");
            out.push(mat);
            prev_images = images;
            prev_src = Some(src);
            prev_tgt = Some(tgt);
        }
        out
    }
}
