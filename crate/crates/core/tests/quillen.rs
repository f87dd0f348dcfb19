use chowlim_core::fp::{FpMatrix, PrimeField};
use chowlim_core::graded::{invariants, GradedRing, PolyAlgebra};
use chowlim_core::groups::{
    classical_group, cyclic, elementary_abelian_perm, quaternion, symmetric, wreath_product, ClassicalFamily, ElemAbelianSubgroup,
    FiniteGroup, WreathBase, DEFAULT_CAP,
};
use chowlim_core::quillen::{build_category, limit_ring, stable_elements, steenrod_closure_check, swan_invariants, LimitRing, SylowModel};
use chowlim_core::steenrod::is_reduced;
use proptest::prelude::*;

fn limit(g: &FiniteGroup, p: usize, cutoff: usize) -> LimitRing {
    limit_ring(&build_category(g, p).unwrap(), cutoff)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Monomials `a_1 x_1 + ... ` of weighted degree `k` for the given weights,
/// excluding those that use two variables from a forbidden pair.
fn monomial_count(weights: &[usize], k: usize, forbidden: &[(usize, usize)]) -> usize {
    fn go(w: &[usize], k: usize, i: usize, used: &mut Vec<bool>, forbidden: &[(usize, usize)]) -> usize {
        if i == w.len() {
            return usize::from(k == 0);
        }
        let mut total = 0;
        let mut e = 0;
        while e * w[i] <= k {
            used[i] = e > 0;
            if !forbidden.iter().any(|&(a, b)| used[a] && used[b]) || e == 0 {
                total += go(w, k - e * w[i], i + 1, used, forbidden);
            }
            e += 1;
        }
        used[i] = false;
        total
    }
    go(weights, k, 0, &mut vec![false; weights.len()], forbidden)
}

/// Invariants of `F_p[E]` under `N_G(E)`, with the action computed here from
/// conjugation and coordinates.
fn normalizer_invariants(g: &FiniteGroup, e: &ElemAbelianSubgroup, cutoff: usize) -> Vec<usize> {
    let p = e.prime() as u32;
    let f = PrimeField::new(p).unwrap();
    let r = e.rank();
    let n = g.normalizer(e.subgroup());
    let mut mats: Vec<FpMatrix> = Vec::new();
    let all = n
        .elements()
        .iter()
        .map(|&x| {
            let mut data = vec![0u32; r * r];
            for (i, &b) in e.basis().iter().enumerate() {
                for (j, &c) in e.coordinates(g.conj(x, b)).unwrap().iter().enumerate() {
                    data[j * r + i] = c;
                }
            }
            // Pullback along conjugation acts by the transpose on generators.
            FpMatrix::new(f, r, r, data).unwrap().transpose()
        });
    for m in all {
        if !mats.contains(&m) {
            mats.push(m);
        }
    }
    invariants(PolyAlgebra::new(f, r), &mats, cutoff).unwrap().dims()
}

#[test]
fn elementary_abelian_groups_give_polynomial_rings() {
    for (p, n) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)] {
        let dims = limit(&elementary_abelian_perm(p, n).unwrap(), p, 12).dims();
        for k in 0..=6 {
            assert_eq!(dims[2 * k], binomial(n + k - 1, k), "p={p} n={n}");
            if 2 * k < 12 {
                assert_eq!(dims[2 * k + 1], 0);
            }
        }
    }
}

#[test]
fn cyclic_groups_give_one_variable() {
    for (n, p) in [(9, 3), (4, 2), (8, 2), (25, 5), (6, 3), (10, 5)] {
        let dims = limit(&cyclic(n).unwrap(), p, 16).dims();
        let expected: Vec<usize> = (0..=16).map(|d| usize::from(d % 2 == 0)).collect();
        assert_eq!(dims, expected, "Z/{n} at {p}");
    }
}

#[test]
fn quaternion_group() {
    let cat = build_category(&quaternion().unwrap(), 2).unwrap();
    let positive: Vec<usize> = (0..cat.objects().len()).filter(|&i| cat.objects()[i].rank() > 0).collect();
    assert_eq!(positive.len(), 1);
    assert_eq!(cat.morphisms(positive[0], positive[0]).len(), 1);
    let dims = limit_ring(&cat, 12).dims();
    assert_eq!(dims, (0..=12).map(|d| usize::from(d % 2 == 0)).collect::<Vec<_>>());
}

#[test]
fn symmetric_group_on_four_points() {
    // F_2[c1, c2, c3] / (c1 c3) with degrees 2, 4, 6.
    let dims = limit(&symmetric(4).unwrap(), 2, 20).dims();
    for k in 0..=10 {
        assert_eq!(dims[2 * k], monomial_count(&[1, 2, 3], k, &[(0, 2)]), "degree {}", 2 * k);
    }
}

#[test]
fn dihedral_of_order_eight() {
    let d8 = wreath_product(WreathBase::Cyclic, &cyclic(2).unwrap(), 2, DEFAULT_CAP).unwrap();
    let dims = limit(&d8, 2, 20).dims();
    for k in 0..=10 {
        assert_eq!(dims[2 * k], k + 1);
    }
}

#[test]
fn single_maximal_class_matches_normalizer_invariants() {
    for (g, p) in [(symmetric(3).unwrap(), 3), (symmetric(4).unwrap(), 3), (symmetric(5).unwrap(), 5)] {
        let reps = g.elementary_abelian_reps(p);
        let top = reps.iter().max_by_key(|e| e.rank()).unwrap();
        let expected = normalizer_invariants(&g, top, 20);
        assert_eq!(limit(&g, p, 20).dims(), expected);
        assert_eq!(swan_invariants(&g, p, 20).unwrap().dims(), expected);
    }
}

#[test]
fn linear_groups_at_three() {
    let gl = classical_group(ClassicalFamily::Gl, 2, 7, 3, DEFAULT_CAP).unwrap();
    let dims = limit(&gl.group, 3, 24).dims();
    for k in 0..=12 {
        assert_eq!(dims[2 * k], k / 2 + 1, "degree {}", 2 * k);
    }
    let sl = classical_group(ClassicalFamily::Sl, 2, 7, 3, DEFAULT_CAP).unwrap();
    let dims = limit(&sl.group, 3, 24).dims();
    for (d, &x) in dims.iter().enumerate() {
        assert_eq!(x, usize::from(d % 4 == 0), "degree {d}");
    }
}

#[test]
fn truncation_is_compatible() {
    for (g, p) in [(symmetric(4).unwrap(), 2), (symmetric(5).unwrap(), 3), (quaternion().unwrap(), 2)] {
        let big = limit(&g, p, 20).dims();
        for cutoff in [4, 10, 15] {
            assert_eq!(limit(&g, p, cutoff).dims(), big[..=cutoff].to_vec());
        }
    }
}

#[test]
fn rings_are_reduced_and_closed() {
    let groups: Vec<(FiniteGroup, usize)> = vec![
        (symmetric(4).unwrap(), 2),
        (symmetric(5).unwrap(), 2),
        (symmetric(6).unwrap(), 3),
        (classical_group(ClassicalFamily::Gl, 2, 5, 2, DEFAULT_CAP).unwrap().group, 2),
        (wreath_product(WreathBase::Cyclic, &cyclic(3).unwrap(), 3, DEFAULT_CAP).unwrap(), 3),
    ];
    for (g, p) in groups {
        let ring = limit(&g, p, 16);
        assert!(is_reduced(&ring).reduced);
        assert!(steenrod_closure_check(&ring).closed());
        assert!(build_category(&g, p).unwrap().is_closed_under_composition());
    }
}

#[test]
fn stable_elements_with_polynomial_model() {
    // Abelian Sylow: the polynomial model is exact and stable = limit.
    for (g, p) in [(symmetric(3).unwrap(), 3), (symmetric(5).unwrap(), 5), (symmetric(6).unwrap(), 5)] {
        let model = SylowModel::polynomial(&g, p, 16).unwrap();
        let stable = stable_elements(&g, &model).unwrap();
        assert_eq!(stable.dims(), limit(&g, p, 16).dims());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn limits_are_multiplicatively_closed(which in 0usize..3, d1 in 1usize..5, d2 in 1usize..5, i in 0usize..8, j in 0usize..8) {
        let (g, p) = [(symmetric(4).unwrap(), 2), (symmetric(6).unwrap(), 3), (quaternion().unwrap(), 2)][which].clone();
        let ring = limit(&g, p, 16);
        let (d1, d2) = (2 * d1, 2 * d2);
        let (b1, b2) = (ring.part(d1).basis(), ring.part(d2).basis());
        prop_assume!(!b1.is_empty() && !b2.is_empty());
        let (x, y) = (&b1[i % b1.len()], &b2[j % b2.len()]);
        prop_assert!(ring.product_checked(d1, x, d2, y).is_ok());
    }
}
