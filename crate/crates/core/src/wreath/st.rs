use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fp::Subspace;
use crate::graded::{GradedRing, PolyAlgebra, PolyElement, PolyFamily};
use crate::steenrod::SteenrodContext;

/// `F_p[v] ⊗ F_p[w_1..w_n]` as `F_p[v, w_1..w_n]` with `v` at index 0.
pub fn tensor_algebra(inner: PolyAlgebra) -> PolyAlgebra {
    PolyAlgebra::new(inner.field(), inner.ngens() + 1)
}

/// `1 ⊗ x` in the tensor algebra.
pub fn lift(x: &PolyElement) -> PolyElement {
    let big = tensor_algebra(x.algebra());
    let mut out = PolyElement::zero(big);
    for (m, c) in x.terms() {
        let mut e = Vec::with_capacity(m.len() + 1);
        e.push(0);
        e.extend_from_slice(m);
        out = &out + &PolyElement::monomial(big, e, c);
    }
    out
}

/// `v^k ⊗ 1` in `algebra`, whose generator 0 is `v`.
pub fn v_power(algebra: PolyAlgebra, k: u32) -> PolyElement {
    let mut e = vec![0; algebra.ngens()];
    e[0] = k;
    PolyElement::monomial(algebra, e, 1)
}

/// `St_1^ev(x) = sum_{i=0}^{k} (-1)^i v^{i(p-1)} ⊗ P^{k-i} x` for `|x| = 2k`.
pub fn st1ev(ctx: &SteenrodContext, x: &PolyElement) -> Result<PolyElement> {
    let big = tensor_algebra(x.algebra());
    if x.is_zero() {
        return Ok(PolyElement::zero(big));
    }
    let d = x.degree().ok_or(Error::Inhomogeneous)?;
    let k = d / 2;
    let p = ctx.p();
    let f = x.algebra().field();
    let mut out = PolyElement::zero(big);
    for i in 0..=k {
        let sign = if i % 2 == 0 { 1 } else { f.neg(1) };
        let term = &v_power(big, i as u32 * (p - 1)) * &lift(&ctx.apply_p(k - i, x));
        out = &out + &term.scale(sign);
    }
    Ok(out)
}

/// The free `F_p[v^{p-1}]`-module spanned by `St_1^ev` of a basis of `M`,
/// inside `F_p[v] ⊗ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R1evModule {
    family: PolyFamily,
    /// Per degree: `(j, |x_b|, b)` for each generator `v^{j(p-1)} St(x_b)`.
    generators: Vec<Vec<(usize, usize, usize)>>,
}

impl R1evModule {
    pub fn family(&self) -> &PolyFamily {
        &self.family
    }

    pub fn dims(&self) -> Vec<usize> {
        self.family.dims()
    }

    pub fn generators(&self, d: usize) -> &[(usize, usize, usize)] {
        &self.generators[d]
    }

    /// Span of `z^p` over the basis `z` of degrees up to `cutoff / p`.
    pub fn frobenius(&self) -> PolyFamily {
        self.family.frobenius_image()
    }
}

/// Builds `R_1^ev M` up to `cutoff`, failing if the `St_1^ev` generators are
/// linearly dependent in some degree.
pub fn r1ev(m: &PolyFamily, cutoff: usize) -> Result<R1evModule> {
    let inner = m.algebra();
    let p = inner.p() as usize;
    if GradedRing::cutoff(m) < cutoff / p {
        return Err(Error::InvalidArgument(format!("inner module known to {} but {} is needed", GradedRing::cutoff(m), cutoff / p)));
    }
    let ctx = SteenrodContext::new(inner.field());
    let big = tensor_algebra(inner);
    let bases: Vec<_> = (0..=cutoff).map(|d| big.basis(d)).collect();
    let mut parts: Vec<Subspace> = bases.iter().map(|b| Subspace::zero(inner.field(), b.len())).collect();
    let mut generators = vec![Vec::new(); cutoff + 1];
    let step = 2 * (p - 1);
    for e in (0..=cutoff / p).step_by(2) {
        for (b, x) in m.elements(e).iter().enumerate() {
            let s = st1ev(&ctx, x)?;
            let mut j = 0;
            while p * e + j * step <= cutoff {
                let d = p * e + j * step;
                let y = &v_power(big, (j * (p - 1)) as u32) * &s;
                if !parts[d].insert(y.to_vector(&bases[d])?) {
                    return Err(Error::InvariantViolation(format!(
                        "St_1^ev generators dependent in degree {d} at v^{} St(x_{b}), |x_{b}| = {e}",
                        j * (p - 1)
                    )));
                }
                generators[d].push((j, e, b));
                j += 1;
            }
        }
    }
    Ok(R1evModule { family: PolyFamily::from_parts(big, parts)?, generators })
}

/// `F_p[v] ⊗ M` inside the tensor algebra, or `F_p[v^p] ⊗ M` when
/// `frobenius_v` is set.
pub fn polynomial_tensor(m: &PolyFamily, cutoff: usize, frobenius_v: bool) -> Result<PolyFamily> {
    let inner = m.algebra();
    let big = tensor_algebra(inner);
    let step = if frobenius_v { 2 * inner.p() as usize } else { 2 };
    let parts = (0..=cutoff)
        .map(|d| {
            let basis = big.basis(d);
            let mut s = Subspace::zero(inner.field(), basis.len());
            for a in (0..=d).step_by(step) {
                if d - a > GradedRing::cutoff(m) {
                    continue;
                }
                for x in m.elements(d - a) {
                    s.insert((&v_power(big, (a / 2) as u32) * &lift(&x)).to_vector(&basis)?);
                }
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;
    PolyFamily::from_parts(big, parts)
}

/// Outcome of the four structural checks on `R_1^ev M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R1evLemmas {
    /// `St_1^ev` of a basis is `Q`-free: `r1ev` succeeded.
    pub freeness: bool,
    /// Degrees where `dim (R_1^ev M)_d != sum_j dim (ΦM)_{d - 2j(p-1)}`.
    pub dimension_failures: Vec<usize>,
    /// `(R_1^ev M) ∩ (P ⊗ M') = R_1^ev M'` for the given submodule.
    pub intersection: bool,
    /// `(R_1^ev ΦM) ∩ (ΦP ⊗ M) ⊆ Φ R_1^ev M`.
    pub inclusion: bool,
}

impl R1evLemmas {
    pub fn all_hold(&self) -> bool {
        self.freeness && self.dimension_failures.is_empty() && self.intersection && self.inclusion
    }
}

/// Runs the four checks for `M` and a submodule `M' ⊆ M`, both known to
/// `cutoff`, with `M` reduced so that `ΦM` is the image of `P_0`.
pub fn check_r1ev_lemmas(m: &PolyFamily, sub: &PolyFamily, cutoff: usize) -> Result<R1evLemmas> {
    if !sub.is_subfamily_of(m) {
        return Err(Error::InvalidArgument("M' is not contained in M".into()));
    }
    let p = m.algebra().p() as usize;
    let r = match r1ev(m, cutoff) {
        Ok(r) => r,
        Err(Error::InvariantViolation(_)) => {
            return Ok(R1evLemmas { freeness: false, dimension_failures: Vec::new(), intersection: false, inclusion: false })
        }
        Err(e) => return Err(e),
    };
    let m_dims = m.dims();
    let phi_dim = |d: usize| if d % p == 0 && d / p < m_dims.len() { m_dims[d / p] } else { 0 };
    let step = 2 * (p - 1);
    let dimension_failures = (0..=cutoff)
        .filter(|&d| r.dims()[d] != (0..=d / step).map(|j| phi_dim(d - j * step)).sum::<usize>())
        .collect();
    let intersection = r.family().intersect(&polynomial_tensor(sub, cutoff, false)?) == *r1ev(sub, cutoff)?.family();
    let phi_m = m.frobenius_image();
    let lhs = r1ev(&phi_m, cutoff)?.family().intersect(&polynomial_tensor(m, cutoff, true)?);
    let inclusion = lhs.is_subfamily_of(&r.frobenius());
    Ok(R1evLemmas { freeness: true, dimension_failures, intersection, inclusion })
}

/// The degrees among `generator_degrees` divisible by `2r`.
pub fn torsion_free_image(generator_degrees: &[usize], r: usize) -> Vec<usize> {
    generator_degrees.iter().copied().filter(|d| r > 0 && d % (2 * r) == 0).collect()
}
