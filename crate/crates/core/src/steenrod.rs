//! Steenrod reduced powers on polynomial algebras with degree-2 generators.
//!
//! The total operation is the ring map with `P(v) = v + t v^p` on every
//! generator; `P^i` is the coefficient of `t^i`. At p = 2 this `P^i` is the
//! square `Sq^{2i}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fp::{FpMatrix, PrimeField};
use crate::graded::{GradedRing, Monomial, PolyAlgebra, PolyElement, PolyFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SteenrodContext {
    field: PrimeField,
}

impl SteenrodContext {
    pub fn new(field: PrimeField) -> Self {
        SteenrodContext { field }
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    /// Coefficients of `t^0, t^1, ..` in the total operation applied to `x`.
    pub fn total(&self, x: &PolyElement) -> Vec<PolyElement> {
        let top = x.terms().map(|(m, _)| m.iter().sum::<u32>() as usize).max().unwrap_or(0);
        (0..=top).map(|i| self.apply_p(i, x)).collect()
    }

    /// `P^i x`. Vanishes when `2i` exceeds the degree of every term.
    pub fn apply_p(&self, i: usize, x: &PolyElement) -> PolyElement {
        let alg = x.algebra();
        let mut out = PolyElement::zero(alg);
        let mut k = vec![0u32; alg.ngens()];
        for (m, c) in x.terms() {
            self.spread(m, i as u32, 0, &mut k, c, &mut out);
        }
        out
    }

    /// `P_0 x = P^{|x|/2} x`, defined on homogeneous elements.
    pub fn p0(&self, x: &PolyElement) -> Result<PolyElement> {
        if x.is_zero() {
            return Ok(x.clone());
        }
        let d = x.degree().ok_or(Error::Inhomogeneous)?;
        if d % 2 == 1 {
            return Err(Error::OddDegree(d));
        }
        Ok(self.apply_p(d / 2, x))
    }

    // Distributes `left` operations over the variables of `m` from index `at`,
    // accumulating prod_j C(m_j, k_j) v^{m + (p-1)k} into `out`.
    fn spread(&self, m: &Monomial, left: u32, at: usize, k: &mut Vec<u32>, coeff: u32, out: &mut PolyElement) {
        let f = self.field;
        if at == m.len() {
            if left == 0 {
                let mono = m.iter().zip(k.iter()).map(|(&a, &b)| a + b * (f.p() - 1)).collect();
                out.add_term(mono, coeff);
            }
            return;
        }
        let rest: u32 = m[at + 1..].iter().sum();
        let lo = left.saturating_sub(rest);
        for kj in lo..=left.min(m[at]) {
            let b = f.binomial(m[at] as u64, kj as u64);
            if b == 0 {
                continue;
            }
            k[at] = kj;
            self.spread(m, left - kj, at + 1, k, f.mul(coeff, b), out);
        }
        k[at] = 0;
    }
}

/// A graded family of subspaces with a `P_0` map, presented in ambient
/// coordinates per degree.
pub trait P0Family {
    fn prime(&self) -> u32;
    fn cutoff(&self) -> usize;
    fn ambient_dim(&self, d: usize) -> usize;
    fn basis(&self, d: usize) -> Vec<Vec<u32>>;
    /// `P_0` of a degree-`d` vector, in ambient coordinates of degree `p d`.
    fn p0(&self, d: usize, x: &[u32]) -> Vec<u32>;
}

/// Outcome of [`is_reduced`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedReport {
    pub reduced: bool,
    /// A nonzero kernel element of `P_0`, with its degree.
    pub witness: Option<(usize, Vec<u32>)>,
    pub checked_degrees: Vec<usize>,
    /// Nonzero degrees whose `P_0` image lies above the cutoff.
    pub unchecked_degrees: Vec<usize>,
}

/// Whether `P_0` is injective on every degree whose image is within the cutoff.
pub fn is_reduced<F: P0Family + ?Sized>(family: &F) -> ReducedReport {
    let p = family.prime() as usize;
    let field = PrimeField::new(family.prime()).expect("family over a prime field");
    let mut report = ReducedReport { reduced: true, witness: None, checked_degrees: Vec::new(), unchecked_degrees: Vec::new() };
    for d in (0..=family.cutoff()).step_by(2) {
        let basis = family.basis(d);
        if basis.is_empty() {
            continue;
        }
        if p * d > family.cutoff() {
            report.unchecked_degrees.push(d);
            continue;
        }
        report.checked_degrees.push(d);
        let images: Vec<Vec<u32>> = basis.iter().map(|b| family.p0(d, b)).collect();
        let m = FpMatrix::from_columns(field, family.ambient_dim(p * d), &images).expect("consistent lengths");
        if let Some(c) = m.kernel().into_iter().next() {
            if report.witness.is_none() {
                let mut w = vec![0u32; family.ambient_dim(d)];
                for (coef, b) in c.iter().zip(&basis) {
                    for (x, &y) in w.iter_mut().zip(b) {
                        *x = field.add(*x, field.mul(*coef, y));
                    }
                }
                report.witness = Some((d, w));
            }
            report.reduced = false;
        }
    }
    report
}

/// How repeated `P_0` ends on an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilpotenceOutcome {
    /// Reached zero after this many applications.
    Vanished(usize),
    /// The next degree exceeds the cutoff after this many applications.
    LeftWindow(usize),
}

pub fn iterate_p0<F: P0Family + ?Sized>(family: &F, d: usize, x: &[u32]) -> NilpotenceOutcome {
    let p = family.prime() as usize;
    let (mut deg, mut cur, mut steps) = (d, x.to_vec(), 0);
    loop {
        if cur.iter().all(|&c| c == 0) {
            return NilpotenceOutcome::Vanished(steps);
        }
        if deg == 0 || p * deg > family.cutoff() {
            return NilpotenceOutcome::LeftWindow(steps);
        }
        cur = family.p0(deg, &cur);
        deg *= p;
        steps += 1;
    }
}

impl P0Family for PolyFamily {
    fn prime(&self) -> u32 {
        self.algebra().p()
    }
    fn cutoff(&self) -> usize {
        GradedRing::cutoff(self)
    }
    fn ambient_dim(&self, d: usize) -> usize {
        self.graded_basis().degree(d).len()
    }
    fn basis(&self, d: usize) -> Vec<Vec<u32>> {
        self.part(d).basis().to_vec()
    }
    fn p0(&self, d: usize, x: &[u32]) -> Vec<u32> {
        let a = self.algebra();
        let px = PolyElement::from_vector(a, self.graded_basis().degree(d), x);
        let target = self.graded_basis().degree(a.p() as usize * d);
        px.pow(a.p()).to_vector(target).expect("p-th power is homogeneous")
    }
}

/// F_p[v_1..v_n] modulo a monomial ideal, with basis the standard monomials.
#[derive(Clone, Debug)]
pub struct QuotientFamily {
    algebra: PolyAlgebra,
    ideal: Vec<Monomial>,
    cutoff: usize,
}

impl QuotientFamily {
    pub fn new(algebra: PolyAlgebra, ideal: Vec<Monomial>, cutoff: usize) -> Result<Self> {
        if let Some(g) = ideal.iter().find(|g| g.len() != algebra.ngens()) {
            return Err(Error::DimensionMismatch { expected: algebra.ngens(), found: g.len() });
        }
        Ok(QuotientFamily { algebra, ideal, cutoff })
    }

    fn in_ideal(&self, m: &[u32]) -> bool {
        self.ideal.iter().any(|g| g.iter().zip(m).all(|(a, e)| a <= e))
    }

    /// Standard monomials of degree `d`.
    pub fn monomials(&self, d: usize) -> Vec<Monomial> {
        self.algebra.monomial_basis(d).into_iter().filter(|m| !self.in_ideal(m)).collect()
    }
}

impl P0Family for QuotientFamily {
    fn prime(&self) -> u32 {
        self.algebra.p()
    }
    fn cutoff(&self) -> usize {
        self.cutoff
    }
    fn ambient_dim(&self, d: usize) -> usize {
        self.monomials(d).len()
    }
    fn basis(&self, d: usize) -> Vec<Vec<u32>> {
        let n = self.ambient_dim(d);
        (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect()
    }
    fn p0(&self, d: usize, x: &[u32]) -> Vec<u32> {
        let mut px = PolyElement::zero(self.algebra);
        for (m, &c) in self.monomials(d).into_iter().zip(x) {
            px.add_term(m, c);
        }
        let power = px.pow(self.algebra.p());
        self.monomials(self.algebra.p() as usize * d).iter().map(|m| power.coefficient(m)).collect()
    }
}

/// The family with all degrees multiplied by p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiModule {
    p: usize,
    source: Vec<usize>,
}

impl PhiModule {
    pub fn dim(&self, d: usize) -> usize {
        if d % self.p == 0 {
            self.source.get(d / self.p).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// Dimensions for degrees `0..=cutoff`; degrees beyond the source data
    /// read as zero, so pick `cutoff <= p * source_cutoff`.
    pub fn dims(&self, cutoff: usize) -> Vec<usize> {
        (0..=cutoff).map(|d| self.dim(d)).collect()
    }

    pub fn source_cutoff(&self) -> usize {
        self.source.len().saturating_sub(1)
    }
}

/// Degree dilation by `p` of a family given by its dimensions.
pub fn phi(p: u32, source_dims: &[usize]) -> PhiModule {
    PhiModule { p: p as usize, source: source_dims.to_vec() }
}

/// Failures of Steenrod stability of a family: triples `(d, basis index, i)`
/// with `P^i b` outside the family, over all `i >= 1` whose target degree is
/// within the cutoff.
pub fn steenrod_failures(ctx: &SteenrodContext, family: &PolyFamily) -> Vec<(usize, usize, usize)> {
    let step = 2 * (ctx.p() as usize - 1);
    let mut out = Vec::new();
    for d in 0..=GradedRing::cutoff(family) {
        for (k, x) in family.elements(d).iter().enumerate() {
            let mut i = 1;
            while d + i * step <= GradedRing::cutoff(family) {
                if !family.contains(&ctx.apply_p(i, x)) {
                    out.push((d, k, i));
                }
                i += 1;
            }
        }
    }
    out
}
