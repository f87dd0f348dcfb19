use alloc::collections::BTreeSet;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::elementary::ElemAbelianSubgroup;
use super::group::{mat_mul, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use crate::fp::{has_pth_roots, ExtField, FpMatrix, PrimeField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    Gl,
    Sl,
    /// Symplectic group of the form with antidiagonal blocks `[[0, A], [-A, 0]]`.
    Sp,
}

/// A Weyl group generator realized by an element normalizing the torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylGenerator {
    /// Diagonal position `k` is carried to `positions[k]`.
    pub positions: Vec<usize>,
    pub normalizer_element: usize,
    /// Action on the p-torsion of the torus, column `i` the image of basis
    /// element `i`.
    pub action: FpMatrix,
}

#[derive(Clone, Debug)]
pub struct ClassicalGroupData {
    pub family: ClassicalFamily,
    pub n: usize,
    pub q: u64,
    pub p: usize,
    pub field: Arc<ExtField>,
    pub group: FiniteGroup,
    /// Diagonal elements of the group.
    pub torus: Subgroup,
    /// p-torsion of the torus with its standard basis.
    pub torsion: ElemAbelianSubgroup,
    pub weyl_generators: Vec<WeylGenerator>,
    /// All products of the generator actions, sorted.
    pub weyl: Vec<FpMatrix>,
}

impl ClassicalGroupData {
    pub fn rank(&self) -> usize {
        self.torsion.rank()
    }

    pub fn is_diagonal(&self, g: usize) -> bool {
        is_diagonal(self.group.element(g), self.n)
    }
}

fn is_diagonal(m: &[u32], n: usize) -> bool {
    (0..n).all(|i| (0..n).all(|j| i == j || m[i * n + j] == 0))
}

fn expected_order(family: ClassicalFamily, n: usize, q: u128) -> u128 {
    match family {
        ClassicalFamily::Gl => (0..n as u32).map(|i| q.pow(n as u32) - q.pow(i)).product(),
        ClassicalFamily::Sl => expected_order(ClassicalFamily::Gl, n, q) / (q - 1),
        ClassicalFamily::Sp => {
            let m = (n / 2) as u32;
            q.pow(m * m) * (1..=m).map(|i| q.pow(2 * i) - 1).product::<u128>()
        }
    }
}

fn identity(n: usize) -> Vec<u32> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn symplectic_form(f: &ExtField, n: usize) -> Vec<u32> {
    let m = n / 2;
    let mut j = vec![0; n * n];
    for a in 0..n {
        j[a * n + (n - 1 - a)] = if a < m { 1 } else { f.neg(1) };
    }
    j
}

fn transpose(n: usize, a: &[u32]) -> Vec<u32> {
    let mut t = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            t[j * n + i] = a[i * n + j];
        }
    }
    t
}

fn additive_basis(f: &ExtField) -> Vec<u32> {
    (0..f.degree() as u64).map(|k| f.pow(f.primitive(), k)).collect()
}

fn elementary_transvections(f: &ExtField, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                for &c in &additive_basis(f) {
                    let mut m = identity(n);
                    m[i * n + j] = c;
                    out.push(m);
                }
            }
        }
    }
    out
}

fn symplectic_transvections(f: &ExtField, n: usize, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let j = symplectic_form(f, n);
    let mut out = Vec::new();
    for u in vectors {
        // row vector u^T J
        let ut_j: Vec<u32> =
            (0..n).map(|col| (0..n).fold(0, |acc, k| f.add(acc, f.mul(u[k], j[k * n + col])))).collect();
        for &c in &additive_basis(f) {
            let mut m = identity(n);
            for r in 0..n {
                for col in 0..n {
                    let v = f.mul(c, f.mul(u[r], ut_j[col]));
                    m[r * n + col] = f.sub(m[r * n + col], v);
                }
            }
            out.push(m);
        }
    }
    out
}

fn build_group(family: ClassicalFamily, f: &Arc<ExtField>, n: usize, cap: usize) -> Result<FiniteGroup> {
    let order = expected_order(family, n, f.size() as u128);
    if order > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    let group = match family {
        ClassicalFamily::Gl | ClassicalFamily::Sl => {
            let mut gens = elementary_transvections(f, n);
            if family == ClassicalFamily::Gl {
                let mut d = identity(n);
                d[0] = f.primitive();
                gens.push(d);
            }
            FiniteGroup::matrix(f.clone(), n, &gens, cap)?
        }
        ClassicalFamily::Sp => {
            let mut vectors = Vec::new();
            for i in 0..n {
                let mut u = vec![0; n];
                u[i] = 1;
                vectors.push(u.clone());
                for k in i + 1..n {
                    let mut w = u.clone();
                    w[k] = 1;
                    vectors.push(w);
                }
            }
            let g = FiniteGroup::matrix(f.clone(), n, &symplectic_transvections(f, n, &vectors), cap)?;
            if g.order() as u128 == order {
                g
            } else {
                let all: Vec<Vec<u32>> = (1..(f.size() as u64).pow(n as u32))
                    .map(|code| {
                        let mut rest = code;
                        (0..n)
                            .map(|_| {
                                let d = (rest % f.size() as u64) as u32;
                                rest /= f.size() as u64;
                                d
                            })
                            .collect()
                    })
                    .collect();
                FiniteGroup::matrix(f.clone(), n, &symplectic_transvections(f, n, &all), cap)?
            }
        }
    };
    if group.order() as u128 != order {
        return Err(Error::InvariantViolation(format!(
            "{family:?}_{n}(F_{}) enumerated to {} elements, expected {order}",
            f.size(),
            group.order()
        )));
    }
    Ok(group)
}

/// Diagonal exponent vectors of the standard basis of the torus p-torsion.
fn torsion_exponents(family: ClassicalFamily, n: usize, p: usize) -> Vec<Vec<u32>> {
    let neg1 = (p - 1) as u32;
    match family {
        ClassicalFamily::Gl => (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect(),
        ClassicalFamily::Sl => (0..n.saturating_sub(1))
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e[n - 1] = neg1 % p as u32;
                e
            })
            .collect(),
        ClassicalFamily::Sp => (0..n / 2)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e[n - 1 - i] = neg1 % p as u32;
                e
            })
            .collect(),
    }
}

/// Weyl generators as position permutations with signed permutation matrices.
fn weyl_generators(family: ClassicalFamily, f: &ExtField, n: usize) -> Vec<(Vec<usize>, Vec<u32>)> {
    let perm_matrix = |pos: &[usize]| {
        let mut m = vec![0; n * n];
        for (k, &t) in pos.iter().enumerate() {
            m[t * n + k] = 1;
        }
        m
    };
    let mut out = Vec::new();
    match family {
        ClassicalFamily::Gl | ClassicalFamily::Sl => {
            for i in 0..n.saturating_sub(1) {
                let mut pos: Vec<usize> = (0..n).collect();
                pos.swap(i, i + 1);
                let mut m = perm_matrix(&pos);
                if family == ClassicalFamily::Sl {
                    m[pos[0] * n] = f.neg(1);
                }
                out.push((pos, m));
            }
        }
        ClassicalFamily::Sp => {
            let m = n / 2;
            for i in 0..m.saturating_sub(1) {
                let mut pos: Vec<usize> = (0..n).collect();
                pos.swap(i, i + 1);
                pos.swap(n - 1 - i, n - 2 - i);
                out.push((pos.clone(), perm_matrix(&pos)));
            }
            if m >= 1 {
                let mut pos: Vec<usize> = (0..n).collect();
                pos.swap(m - 1, m);
                let mut mat = identity(n);
                mat[(m - 1) * n + (m - 1)] = 0;
                mat[m * n + m] = 0;
                mat[m * n + (m - 1)] = 1;
                mat[(m - 1) * n + m] = f.neg(1);
                out.push((pos, mat));
            }
        }
    }
    out
}

/// Builds GL_n, SL_n or Sp_n over F_q with its diagonal torus and the Weyl
/// group action on the p-torsion of the torus.
///
/// Every Weyl matrix is computed by conjugating with an explicit group
/// element and compared against the expected signed-permutation action.
pub fn classical_group(family: ClassicalFamily, n: usize, q: u64, p: usize, cap: usize) -> Result<ClassicalGroupData> {
    let roots = has_pth_roots(q, p as u64)?;
    if n == 0 || (family == ClassicalFamily::Sp && n % 2 == 1) {
        return Err(Error::InvalidArgument(format!("{family:?} needs a positive{} size, got {n}", if family == ClassicalFamily::Sp { " even" } else { "" })));
    }
    let field = Arc::new(ExtField::with_size(q)?);
    let group = build_group(family, &field, n, cap)?;
    let torus = group.subgroup_from_elements(group.elements().filter(|&g| is_diagonal(group.element(g), n)).collect());
    let fp = PrimeField::new(p as u32)?;

    let exps = if roots { torsion_exponents(family, n, p) } else { Vec::new() };
    let zeta = field.root_of_unity(p as u32).unwrap_or(1);
    let basis: Vec<usize> = exps
        .iter()
        .map(|e| {
            let mut m = identity(n);
            for (k, &x) in e.iter().enumerate() {
                m[k * n + k] = field.pow(zeta, x as u64);
            }
            group.index_of(&m).ok_or_else(|| Error::InvariantViolation(format!("torsion element {m:?} not in the group")))
        })
        .collect::<Result<_>>()?;
    let torsion = ElemAbelianSubgroup::with_basis(&group, &basis, p)?;
    let r = basis.len();

    let mut weyl_gens = Vec::new();
    if r > 0 {
        let exp_matrix = FpMatrix::from_columns(fp, n, &exps)?;
        for (pos, raw) in weyl_generators(family, &field, n) {
            let g = group
                .index_of(&raw)
                .ok_or_else(|| Error::InvariantViolation(format!("Weyl representative {raw:?} not in the group")))?;
            if family == ClassicalFamily::Sp {
                let j = symplectic_form(&field, n);
                let lhs = mat_mul(&field, n, &mat_mul(&field, n, &transpose(n, &raw), &j), &raw);
                if lhs != j {
                    return Err(Error::InvariantViolation("Weyl representative is not symplectic".into()));
                }
            }
            if !torus.generators().iter().all(|&t| is_diagonal(group.element(group.conj(g, t)), n)) {
                return Err(Error::InvariantViolation("Weyl representative does not normalize the torus".into()));
            }
            let mut cols = Vec::with_capacity(r);
            let mut expected = Vec::with_capacity(r);
            for (i, &b) in basis.iter().enumerate() {
                let c = torsion
                    .coordinates(group.conj(g, b))
                    .ok_or_else(|| Error::InvariantViolation("conjugate leaves the torus p-torsion".into()))?;
                cols.push(c.to_vec());
                let mut moved = vec![0u32; n];
                for (k, &t) in pos.iter().enumerate() {
                    moved[t] = exps[i][k];
                }
                let coords = exp_matrix
                    .solve(&moved)?
                    .ok_or_else(|| Error::InvariantViolation("Weyl action leaves the torsion lattice".into()))?;
                expected.push(coords);
            }
            let action = FpMatrix::from_columns(fp, r, &cols)?;
            if action != FpMatrix::from_columns(fp, r, &expected)? {
                return Err(Error::InvariantViolation(format!("Weyl action {action:?} differs from its expected form")));
            }
            weyl_gens.push(WeylGenerator { positions: pos, normalizer_element: g, action });
        }
    }
    let weyl = matrix_closure(fp, r, &weyl_gens.iter().map(|w| w.action.clone()).collect::<Vec<_>>(), cap)?;
    Ok(ClassicalGroupData { family, n, q, p, field, group, torus, torsion, weyl_generators: weyl_gens, weyl })
}

/// The group generated by invertible `r x r` matrices, identity included,
/// sorted by entries.
pub fn matrix_closure(f: PrimeField, r: usize, gens: &[FpMatrix], cap: usize) -> Result<Vec<FpMatrix>> {
    for g in gens {
        if g.rows() != r || g.cols() != r {
            return Err(Error::DimensionMismatch { expected: r, found: g.rows().max(g.cols()) });
        }
        if g.field() != f {
            return Err(Error::InvalidArgument("generator over a different field".into()));
        }
        if g.rank() < r {
            return Err(Error::NotInvertible);
        }
    }
    let id = FpMatrix::identity(f, r);
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut all = vec![id.clone()];
    seen.insert(id.entries().to_vec());
    let mut i = 0;
    while i < all.len() {
        for g in gens {
            let x = all[i].mul(g)?;
            if seen.insert(x.entries().to_vec()) {
                if all.len() == cap {
                    return Err(Error::CapExceeded { cap });
                }
                all.push(x);
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| a.entries().cmp(b.entries()));
    Ok(all)
}

/// Some `g` conjugating `e` into the diagonal torus, by exhaustive scan;
/// the identity is tried first.
pub fn toral_witness(data: &ClassicalGroupData, e: &ElemAbelianSubgroup) -> Option<usize> {
    let g = &data.group;
    let toral = |x: usize| e.basis().iter().all(|&b| data.is_diagonal(g.conj(x, b)));
    if toral(g.identity()) {
        return Some(g.identity());
    }
    g.elements().find(|&x| toral(x))
}
