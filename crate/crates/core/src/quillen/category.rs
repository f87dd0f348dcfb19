use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fp::{is_prime, FpMatrix, PrimeField};
use crate::groups::{ElemAbelianSubgroup, FiniteGroup};

/// A conjugation-induced map `E_source -> E_target`, columns the images of
/// the source basis in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub matrix: FpMatrix,
    /// The least group element inducing this map.
    pub element: usize,
}

/// Representatives of the conjugacy classes of elementary abelian
/// p-subgroups, the trivial one first, with every distinct linear map
/// between them induced by conjugation.
#[derive(Clone, Debug)]
pub struct QuillenCat {
    field: PrimeField,
    objects: Vec<ElemAbelianSubgroup>,
    morphisms: BTreeMap<(usize, usize), Vec<Morphism>>,
}

/// Builds the category by scanning every group element for every pair of
/// objects with `rank(a) <= rank(b)`. The trivial object only maps into
/// other objects, never receives a map from a nontrivial one.
pub fn build_category(group: &FiniteGroup, p: usize) -> Result<QuillenCat> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let field = PrimeField::new(p as u32)?;
    let objects = group.elementary_abelian_reps(p);
    let mut morphisms = BTreeMap::new();
    for (a, ea) in objects.iter().enumerate() {
        for (b, eb) in objects.iter().enumerate() {
            if ea.rank() > eb.rank() || (eb.rank() == 0 && ea.rank() > 0) {
                continue;
            }
            let maps = induced_maps(group, field, ea, eb);
            if !maps.is_empty() {
                morphisms.insert((a, b), maps);
            }
        }
    }
    Ok(QuillenCat { field, objects, morphisms })
}

fn induced_maps(group: &FiniteGroup, field: PrimeField, ea: &ElemAbelianSubgroup, eb: &ElemAbelianSubgroup) -> Vec<Morphism> {
    let mut seen: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    'elements: for g in group.elements() {
        let mut entries = vec![0u32; eb.rank() * ea.rank()];
        for (i, &x) in ea.basis().iter().enumerate() {
            let Some(c) = eb.coordinates(group.conj(g, x)) else {
                continue 'elements;
            };
            for (j, &cj) in c.iter().enumerate() {
                entries[j * ea.rank() + i] = cj;
            }
        }
        seen.entry(entries).or_insert(g);
        if ea.rank() == 0 {
            break;
        }
    }
    let mut out: Vec<Morphism> = seen
        .into_iter()
        .map(|(entries, element)| Morphism {
            matrix: FpMatrix::new(field, eb.rank(), ea.rank(), entries).expect("sized by ranks"),
            element,
        })
        .collect();
    out.sort_by_key(|m| m.element);
    out
}

impl QuillenCat {
    pub fn prime(&self) -> u32 {
        self.field.p()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn objects(&self) -> &[ElemAbelianSubgroup] {
        &self.objects
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.objects.iter().map(ElemAbelianSubgroup::rank).collect()
    }

    pub fn morphisms(&self, source: usize, target: usize) -> &[Morphism] {
        self.morphisms.get(&(source, target)).map_or(&[], Vec::as_slice)
    }

    /// Every stored morphism with its `(source, target)` pair.
    pub fn all_morphisms(&self) -> impl Iterator<Item = ((usize, usize), &Morphism)> {
        self.morphisms.iter().flat_map(|(&k, v)| v.iter().map(move |m| (k, m)))
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.values().map(Vec::len).sum()
    }

    /// Drops the morphisms rejected by `keep`.
    pub fn retain_morphisms<F: FnMut((usize, usize), &Morphism) -> bool>(&mut self, mut keep: F) {
        for (&k, v) in self.morphisms.iter_mut() {
            v.retain(|m| keep(k, m));
        }
        self.morphisms.retain(|_, v| !v.is_empty());
    }

    /// Whether the composite of any two composable stored maps is stored.
    pub fn is_closed_under_composition(&self) -> bool {
        self.all_morphisms().all(|((a, b), f)| {
            (0..self.objects.len()).all(|c| {
                self.morphisms(b, c).iter().all(|g| {
                    let gf = g.matrix.mul(&f.matrix).expect("composable");
                    self.morphisms(a, c).iter().any(|h| h.matrix == gf)
                })
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, elementary_abelian_perm, quaternion, symmetric};

    #[test]
    fn s3_at_three() {
        let c = build_category(&symmetric(3).unwrap(), 3).unwrap();
        assert_eq!(c.ranks(), vec![0, 1]);
        let selfs: Vec<u32> = c.morphisms(1, 1).iter().map(|m| m.matrix.get(0, 0)).collect();
        assert_eq!(selfs.len(), 2);
        assert!(selfs.contains(&1) && selfs.contains(&2));
        assert_eq!(c.morphisms(0, 1).len(), 1);
        assert!(c.morphisms(1, 0).is_empty());
        assert!(c.is_closed_under_composition());
    }

    #[test]
    fn quaternion_centre_has_trivial_automorphisms() {
        let c = build_category(&quaternion().unwrap(), 2).unwrap();
        assert_eq!(c.ranks(), vec![0, 1]);
        assert_eq!(c.morphisms(1, 1).len(), 1);
        assert_eq!(c.morphisms(1, 1)[0].matrix, FpMatrix::identity(c.field(), 1));
    }

    #[test]
    fn abelian_groups_only_have_inclusions() {
        let g = elementary_abelian_perm(2, 2).unwrap();
        let c = build_category(&g, 2).unwrap();
        assert_eq!(c.ranks(), vec![0, 1, 1, 1, 2]);
        for ((a, b), m) in c.all_morphisms() {
            assert_eq!(c.morphisms(a, b).len(), 1);
            if a == b {
                assert_eq!(m.matrix, FpMatrix::identity(c.field(), c.ranks()[a]));
            }
        }
        assert!(c.is_closed_under_composition());
    }

    #[test]
    fn p_prime_to_order_leaves_the_trivial_object() {
        let c = build_category(&cyclic(4).unwrap(), 3).unwrap();
        assert_eq!(c.ranks(), vec![0]);
        assert_eq!(c.num_morphisms(), 1);
    }
}
