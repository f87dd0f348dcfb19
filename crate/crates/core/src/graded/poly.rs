use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::fp::PrimeField;

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// F_p[v_1..v_n] with every generator in degree 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyAlgebra {
    field: PrimeField,
    ngens: usize,
}

impl PolyAlgebra {
    pub fn new(field: PrimeField, ngens: usize) -> Self {
        PolyAlgebra { field, ngens }
    }
    #[inline]
    pub fn field(self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn p(self) -> u32 {
        self.field.p()
    }
    #[inline]
    pub fn ngens(self) -> usize {
        self.ngens
    }

    /// Exponent vectors of degree `d` in descending lexicographic order, so
    /// that `v_1^k` comes first.
    pub fn monomial_basis(self, d: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d % 2 == 1 {
            return out;
        }
        let mut cur = vec![0u32; self.ngens];
        fill(&mut cur, 0, (d / 2) as u32, &mut out);
        out
    }

    pub fn dim(self, d: usize) -> usize {
        if d % 2 == 1 {
            return 0;
        }
        if self.ngens == 0 {
            return usize::from(d == 0);
        }
        binomial_usize(self.ngens - 1 + d / 2, d / 2)
    }

    pub fn basis(self, d: usize) -> DegreeBasis {
        DegreeBasis::new(self, d)
    }
}

fn fill(cur: &mut Vec<u32>, at: usize, left: u32, out: &mut Vec<Monomial>) {
    if at == cur.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if at + 1 == cur.len() {
        cur[at] = left;
        out.push(cur.clone());
        cur[at] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[at] = e;
        fill(cur, at + 1, left - e, out);
    }
    cur[at] = 0;
}

fn binomial_usize(n: usize, k: usize) -> usize {
    let k = k.min(n - k.min(n));
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Degree of a monomial in the doubled grading.
pub fn monomial_degree(m: &[u32]) -> usize {
    2 * m.iter().map(|&e| e as usize).sum::<usize>()
}

/// Monomial basis of one degree together with its position index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBasis {
    degree: usize,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn new(algebra: PolyAlgebra, degree: usize) -> Self {
        let monomials = algebra.monomial_basis(degree);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        DegreeBasis { degree, monomials, index }
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn len(&self) -> usize {
        self.monomials.len()
    }
    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }
    pub fn position(&self, m: &[u32]) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Monomial bases of all degrees up to a cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    algebra: PolyAlgebra,
    degrees: Vec<DegreeBasis>,
}

impl GradedBasis {
    pub fn new(algebra: PolyAlgebra, cutoff: usize) -> Self {
        GradedBasis { algebra, degrees: (0..=cutoff).map(|d| DegreeBasis::new(algebra, d)).collect() }
    }
    pub fn algebra(&self) -> PolyAlgebra {
        self.algebra
    }
    pub fn cutoff(&self) -> usize {
        self.degrees.len() - 1
    }
    pub fn degree(&self, d: usize) -> &DegreeBasis {
        &self.degrees[d]
    }
}

/// Sparse polynomial: exponent vectors mapped to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyElement {
    algebra: PolyAlgebra,
    terms: BTreeMap<Monomial, u32>,
}

impl PolyElement {
    pub fn zero(algebra: PolyAlgebra) -> Self {
        PolyElement { algebra, terms: BTreeMap::new() }
    }

    pub fn one(algebra: PolyAlgebra) -> Self {
        Self::monomial(algebra, vec![0; algebra.ngens], 1)
    }

    pub fn generator(algebra: PolyAlgebra, i: usize) -> Self {
        let mut m = vec![0; algebra.ngens];
        m[i] = 1;
        Self::monomial(algebra, m, 1)
    }

    pub fn monomial(algebra: PolyAlgebra, exps: Monomial, coeff: u32) -> Self {
        assert_eq!(exps.len(), algebra.ngens, "exponent vector length");
        let mut terms = BTreeMap::new();
        let c = coeff % algebra.p();
        if c != 0 {
            terms.insert(exps, c);
        }
        PolyElement { algebra, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, u32)>>(algebra: PolyAlgebra, terms: I) -> Result<Self> {
        let mut out = Self::zero(algebra);
        for (m, c) in terms {
            if m.len() != algebra.ngens {
                return Err(Error::DimensionMismatch { expected: algebra.ngens, found: m.len() });
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    /// Element of degree `d` with coordinates `v` in the monomial basis.
    pub fn from_vector(algebra: PolyAlgebra, basis: &DegreeBasis, v: &[u32]) -> Self {
        let mut out = Self::zero(algebra);
        for (m, &c) in basis.monomials().iter().zip(v) {
            out.add_term(m.clone(), c);
        }
        out
    }

    /// Coordinates in the monomial basis of `basis.degree()`.
    pub fn to_vector(&self, basis: &DegreeBasis) -> Result<Vec<u32>> {
        let mut v = vec![0; basis.len()];
        for (m, &c) in &self.terms {
            let i = basis.position(m).ok_or(Error::Inhomogeneous)?;
            v[i] = c;
        }
        Ok(v)
    }

    pub fn algebra(&self) -> PolyAlgebra {
        self.algebra
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }
    pub fn coefficient(&self, m: &[u32]) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The common degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| monomial_degree(m));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| monomial_degree(m) == d).map(|(m, &c)| (m.clone(), c)).collect();
        PolyElement { algebra: self.algebra, terms }
    }

    pub fn scale(&self, s: u32) -> Self {
        let f = self.algebra.field();
        let s = s % f.p();
        if s == 0 {
            return Self::zero(self.algebra);
        }
        let terms = self.terms.iter().map(|(m, &c)| (m.clone(), f.mul(c, s))).collect();
        PolyElement { algebra: self.algebra, terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.algebra);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: u32) {
        let f = self.algebra.field();
        let c = c % f.p();
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = f.add(*e.get(), c);
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

impl fmt::Debug for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let vars: Vec<(usize, u32)> = m.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e)).collect();
            if *c != 1 || vars.is_empty() {
                write!(f, "{c}")?;
            }
            for (i, e) in vars {
                if e == 1 {
                    write!(f, "v{}", i + 1)?;
                } else {
                    write!(f, "v{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a PolyElement> for &'a PolyElement {
    type Output = PolyElement;
    fn add(self, rhs: &'a PolyElement) -> PolyElement {
        assert_eq!(self.algebra, rhs.algebra, "operands live in different algebras");
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a PolyElement> for &'a PolyElement {
    type Output = PolyElement;
    fn sub(self, rhs: &'a PolyElement) -> PolyElement {
        self + &(-rhs)
    }
}

impl Neg for &PolyElement {
    type Output = PolyElement;
    fn neg(self) -> PolyElement {
        let f = self.algebra.field();
        let terms = self.terms.iter().map(|(m, &c)| (m.clone(), f.neg(c))).collect();
        PolyElement { algebra: self.algebra, terms }
    }
}

impl<'a> Mul<&'a PolyElement> for &'a PolyElement {
    type Output = PolyElement;
    fn mul(self, rhs: &'a PolyElement) -> PolyElement {
        assert_eq!(self.algebra, rhs.algebra, "operands live in different algebras");
        let f = self.algebra.field();
        let mut out = PolyElement::zero(self.algebra);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                let m = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(m, f.mul(ca, cb));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(p: u32, n: usize) -> PolyAlgebra {
        PolyAlgebra::new(PrimeField::new(p).unwrap(), n)
    }

    #[test]
    fn basis_counts() {
        assert_eq!(alg(3, 1).monomial_basis(8), vec![vec![4]]);
        assert_eq!(alg(3, 0).monomial_basis(0), vec![Vec::<u32>::new()]);
        assert!(alg(3, 0).monomial_basis(4).is_empty());
        assert_eq!(alg(5, 2).monomial_basis(6).len(), 4);
        assert!(alg(5, 2).monomial_basis(5).is_empty());
        for n in 0..5 {
            for d in (0..20).step_by(2) {
                assert_eq!(alg(2, n).monomial_basis(d).len(), alg(2, n).dim(d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn basis_order_is_descending_lex() {
        assert_eq!(alg(2, 2).monomial_basis(4), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn frobenius_in_char_p() {
        let a = alg(3, 2);
        let x = &PolyElement::generator(a, 0) + &PolyElement::generator(a, 1);
        let cube = x.pow(3);
        let expected = &PolyElement::generator(a, 0).pow(3) + &PolyElement::generator(a, 1).pow(3);
        assert_eq!(cube, expected);
        assert_eq!(cube.degree(), Some(6));
    }

    #[test]
    fn vector_round_trip() {
        let a = alg(5, 3);
        let b = a.basis(4);
        let v: Vec<u32> = (0..b.len() as u32).map(|i| i % 5).collect();
        let x = PolyElement::from_vector(a, &b, &v);
        assert_eq!(x.to_vector(&b).unwrap(), v);
        assert_eq!(x.to_vector(&a.basis(6)), Err(Error::Inhomogeneous));
    }
}
