use alloc::vec;
use alloc::vec::Vec;

use super::matrix::kernel_from_rref;
use super::{FpMatrix, PrimeField};

/// A subspace of F_p^n held as a fully reduced row-echelon basis.
///
/// Rows are kept sorted by pivot column with every pivot column cleared in
/// all other rows, so two equal subspaces always have identical bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![0; ambient];
            v[i] = 1 % field.p();
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn spanned_by<I: IntoIterator<Item = Vec<u32>>>(field: PrimeField, ambient: usize, vectors: I) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place against the basis, leaving the canonical remainder.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                let s = f.neg(c);
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(r, s));
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient dimension");
        let f = self.field;
        for x in v.iter_mut() {
            *x %= f.p();
        }
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[pc]).expect("nonzero");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                let s = f.neg(c);
                for (x, &r) in row.iter_mut().zip(&v) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(r, s));
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    /// Coefficients of `v` in terms of [`Subspace::basis`], if `v` lies in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc] % self.field.p()).collect())
    }

    /// Basis of `{x : r . x = 0 for every basis row r}`.
    pub fn annihilator(&self) -> Vec<Vec<u32>> {
        kernel_from_rref(self.field, self.ambient, &self.pivots, |i, c| self.rows[i][c])
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let f = self.field;
        // Solve sum a_i u_i = sum b_j w_j; the kernel of [U; W]^T gives (a, b).
        let (k, l) = (self.dim(), other.dim());
        let mut cols = Vec::with_capacity(k + l);
        cols.extend(self.rows.iter().cloned());
        cols.extend(other.rows.iter().map(|w| w.iter().map(|&x| f.neg(x)).collect::<Vec<_>>()));
        let m = FpMatrix::from_columns(f, self.ambient, &cols).expect("consistent lengths");
        let mut out = Subspace::zero(f, self.ambient);
        for coeffs in m.kernel() {
            let mut v = vec![0u32; self.ambient];
            for (a, u) in coeffs[..k].iter().zip(&self.rows) {
                if *a != 0 {
                    for (x, &y) in v.iter_mut().zip(u) {
                        *x = f.add(*x, f.mul(*a, y));
                    }
                }
            }
            out.insert(v);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// The basis as a matrix with one basis vector per row.
    pub fn to_matrix(&self) -> FpMatrix {
        FpMatrix::from_rows(self.field, self.ambient, &self.rows).expect("consistent lengths")
    }
}
