use std::collections::BTreeSet;
use std::sync::LazyLock;

use chowlim_core::fp::{FpMatrix, PrimeField};
use chowlim_core::groups::{
    classical_group, cyclic, elementary_abelian_perm, p_part, quaternion, symmetric, symmetric_with_cap, toral_witness,
    wreath_product, ClassicalFamily, ElemAbelianSubgroup, FiniteGroup, Subgroup, WreathBase, DEFAULT_CAP,
};
use chowlim_core::Error;
use proptest::prelude::*;

static GL27: LazyLock<(FiniteGroup, Vec<ElemAbelianSubgroup>)> = LazyLock::new(|| {
    let g = classical_group(ClassicalFamily::Gl, 2, 7, 3, DEFAULT_CAP).unwrap().group;
    let reps = g.elementary_abelian_reps(3);
    (g, reps)
});

fn gl_order(n: u32, q: usize) -> usize {
    (0..n).map(|i| q.pow(n) - q.pow(i)).product()
}

fn sp_order(m: u32, q: usize) -> usize {
    q.pow(m * m) * (1..=m).map(|i| q.pow(2 * i) - 1).product::<usize>()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn random_subgroup(g: &FiniteGroup, picks: &[usize]) -> Subgroup {
    let elems: Vec<usize> = g.elements().collect();
    let gens: Vec<usize> = picks.iter().map(|&i| elems[i % elems.len()]).collect();
    g.subgroup(&gens)
}

#[test]
fn enumeration_orders() {
    for n in 1..=5 {
        assert_eq!(symmetric(n).unwrap().order(), factorial(n));
    }
    assert_eq!(cyclic(7).unwrap().order(), 7);
    assert_eq!(quaternion().unwrap().order(), 8);
    assert_eq!(elementary_abelian_perm(3, 2).unwrap().order(), 9);
    assert_eq!(classical_group(ClassicalFamily::Gl, 2, 7, 3, DEFAULT_CAP).unwrap().group.order(), gl_order(2, 7));
    assert_eq!(classical_group(ClassicalFamily::Gl, 2, 5, 2, DEFAULT_CAP).unwrap().group.order(), gl_order(2, 5));
    assert_eq!(classical_group(ClassicalFamily::Sl, 2, 7, 3, DEFAULT_CAP).unwrap().group.order(), gl_order(2, 7) / 6);
    assert_eq!(classical_group(ClassicalFamily::Sp, 2, 7, 3, DEFAULT_CAP).unwrap().group.order(), sp_order(1, 7));
    assert_eq!(classical_group(ClassicalFamily::Gl, 2, 4, 3, DEFAULT_CAP).unwrap().group.order(), gl_order(2, 4));
}

#[test]
fn caps_are_enforced() {
    assert_eq!(symmetric_with_cap(6, 100).unwrap_err(), Error::CapExceeded { cap: 100 });
    assert!(matches!(classical_group(ClassicalFamily::Gl, 3, 7, 3, 1000), Err(Error::CapExceeded { .. })));
    let s3 = symmetric(3).unwrap();
    assert!(matches!(wreath_product(WreathBase::Cyclic, &s3, 3, 100), Err(Error::CapExceeded { .. })));
}

#[test]
fn wreath_orders() {
    let c2 = cyclic(2).unwrap();
    let w = wreath_product(WreathBase::Cyclic, &c2, 2, DEFAULT_CAP).unwrap();
    assert_eq!(w.order(), 8);
    assert!(!w.is_abelian(&w.whole()));
    let s3 = symmetric(3).unwrap();
    assert_eq!(wreath_product(WreathBase::Cyclic, &s3, 3, DEFAULT_CAP).unwrap().order(), 6usize.pow(3) * 3);
    assert_eq!(wreath_product(WreathBase::Symmetric, &c2, 3, DEFAULT_CAP).unwrap().order(), 8 * 6);
}

#[test]
fn sylow_orders() {
    for n in 2..=5 {
        let g = symmetric(n).unwrap();
        for p in [2, 3, 5] {
            let s = g.sylow(p);
            assert_eq!(s.order(), p_part(factorial(n), p), "S_{n} at {p}");
            assert!(s.is_subgroup_of(&g.whole()));
        }
    }
    let gl = classical_group(ClassicalFamily::Gl, 2, 7, 3, DEFAULT_CAP).unwrap();
    assert_eq!(gl.group.sylow(3).order(), 9);
    assert_eq!(gl.group.sylow(2).order(), 32);
}

#[test]
fn elementary_abelian_classes() {
    let s4 = symmetric(4).unwrap();
    let reps = s4.elementary_abelian_reps(2);
    let ranks: Vec<usize> = reps.iter().map(|e| e.rank()).collect();
    // 1, <(12)>, <(12)(34)>, the normal V4 and <(12),(34)>.
    assert_eq!(ranks.iter().filter(|&&r| r == 0).count(), 1);
    assert_eq!(ranks.iter().filter(|&&r| r == 1).count(), 2);
    assert_eq!(ranks.iter().filter(|&&r| r == 2).count(), 2);
    assert_eq!(quaternion().unwrap().elementary_abelian_reps(2).len(), 2);
}

#[test]
fn weyl_actions_recomputed_from_normalizer_elements() {
    let cases = [
        (ClassicalFamily::Gl, 2, 7, 3),
        (ClassicalFamily::Sl, 2, 7, 3),
        (ClassicalFamily::Gl, 2, 5, 2),
        (ClassicalFamily::Sp, 2, 7, 3),
        (ClassicalFamily::Sp, 4, 3, 2),
    ];
    for (family, n, q, p) in cases {
        let data = classical_group(family, n, q, p, DEFAULT_CAP).unwrap();
        let t = &data.torsion;
        let r = t.rank();
        let fp = PrimeField::new(p as u32).unwrap();
        for w in &data.weyl_generators {
            assert!(data.group.normalizes(w.normalizer_element, &data.torus));
            let mut cols = vec![0u32; r * r];
            for (i, &b) in t.basis().iter().enumerate() {
                let image = data.group.conj(w.normalizer_element, b);
                let c = t.coordinates(image).expect("torsion is normalized");
                for (j, &x) in c.iter().enumerate() {
                    cols[j * r + i] = x;
                }
            }
            assert_eq!(FpMatrix::new(fp, r, r, cols).unwrap(), w.action, "{family:?} {n} {q}");
        }
        for e in data.group.elementary_abelian_reps(p) {
            let g = toral_witness(&data, &e).expect("every class is toral");
            let conj = data.group.conjugate_subgroup(g, e.subgroup());
            assert!(conj.is_subgroup_of(data.torsion.subgroup()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn double_cosets_partition(k in proptest::collection::vec(0usize..120, 1..3), h in proptest::collection::vec(0usize..120, 1..3)) {
        let g = symmetric(5).unwrap();
        let (k, h) = (random_subgroup(&g, &k), random_subgroup(&g, &h));
        let dc = g.double_cosets(&k, &h);
        prop_assert!(dc.satisfies_counting(g.order(), k.order(), h.order()));
        // Direct oracle: the sets K s H are disjoint and cover G.
        let mut seen = BTreeSet::new();
        for (i, &s) in dc.representatives.iter().enumerate() {
            let mut coset = BTreeSet::new();
            for &x in k.elements() {
                for &y in h.elements() {
                    coset.insert(g.mul(g.mul(x, s), y));
                }
            }
            prop_assert_eq!(coset.len(), dc.sizes[i]);
            prop_assert_eq!(coset.len() * dc.intersections[i].order(), k.order() * h.order());
            for c in coset {
                prop_assert!(seen.insert(c));
            }
        }
        prop_assert_eq!(seen.len(), g.order());
    }

    #[test]
    fn conjugates_are_witnessed(picks in proptest::collection::vec(0usize..2016, 200)) {
        let (g, reps) = &*GL27;
        let elems: Vec<usize> = g.elements().collect();
        for (i, &pick) in picks.iter().enumerate() {
            let e = &reps[i % reps.len()];
            let x = elems[pick % elems.len()];
            let conj = g.conjugate_subgroup(x, e.subgroup());
            let w = g.conjugacy_witness(&conj, e.subgroup()).expect("same class");
            let back = g.conjugate_subgroup(w, &conj);
            prop_assert_eq!(back.elements(), e.subgroup().elements());
        }
    }
}

#[test]
fn conjugation_convention() {
    let g = symmetric(3).unwrap();
    for a in g.elements() {
        for b in g.elements() {
            assert_eq!(g.conj(a, b), g.mul(g.mul(a, b), g.inv(a)));
        }
    }
}
