//! The acceptance suite A1-A10, each criterion timed against its budget.

use std::time::{Duration, Instant};

use chowlim_core::fp::{FpMatrix, PrimeField};
use chowlim_core::graded::{invariants, GradedRing, PolyAlgebra, PolyElement, PolyFamily};
use chowlim_core::groups::{
    classical_group, cyclic, quaternion, symmetric, toral_witness, wreath_product, ClassicalFamily, WreathBase, DEFAULT_CAP,
};
use chowlim_core::quillen::{build_category, limit_ring, stable_elements, steenrod_closure_check, swan_invariants, LimitRing, SylowModel};
use chowlim_core::steenrod::{is_reduced, SteenrodContext};
use chowlim_core::wreath::{
    check_r1ev_lemmas, tau_subspace, torsion_free_image, wreath_model, wreath_restrictions, WreathVariant,
};
use chowlim_core::Result;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub elapsed_ms: u64,
    pub budget_ms: Option<u64>,
    pub detail: String,
}

impl Criterion {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let budget = self.budget_ms.map(|b| format!(" / {b} ms")).unwrap_or_default();
        format!("{} {verdict} {} ({} ms{budget}): {}", self.id, self.title, self.elapsed_ms, self.detail)
    }
}

/// Runs `check`, which returns whether the criterion holds and a detail
/// line; an error counts as failure.
pub fn timed<F: FnOnce() -> Result<(bool, String)>>(
    id: &'static str,
    title: &'static str,
    budget: Option<Duration>,
    check: F,
) -> Criterion {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let (ok, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    let within = budget.is_none_or(|b| elapsed <= b);
    let detail = if within { detail } else { format!("{detail}; over budget") };
    Criterion {
        id,
        title,
        passed: ok && within,
        elapsed_ms: elapsed.as_millis() as u64,
        budget_ms: budget.map(|b| b.as_millis() as u64),
        detail,
    }
}

fn random_element(rng: &mut StdRng, a: PolyAlgebra, d: usize) -> PolyElement {
    let basis = a.basis(d);
    let coeffs: Vec<u32> = (0..basis.len()).map(|_| if rng.gen_ratio(1, 6) { rng.gen_range(0..a.p()) } else { 0 }).collect();
    PolyElement::from_vector(a, &basis, &coeffs)
}

fn random_algebra(rng: &mut StdRng) -> PolyAlgebra {
    let p = [2, 3, 5][rng.gen_range(0..3)];
    PolyAlgebra::new(PrimeField::new(p).expect("prime"), rng.gen_range(1..=4))
}

fn frobenius(x: &PolyElement) -> PolyElement {
    let p = x.algebra().p();
    PolyElement::from_terms(x.algebra(), x.terms().map(|(m, c)| (m.iter().map(|e| e * p).collect(), c))).expect("same algebra")
}

/// Cartan, instability, `P_0 = x^p` and additivity on 1000 random cases each.
pub fn a1_steenrod_axioms(cases: usize) -> Result<(bool, String)> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut failures = [0usize; 4];
    for _ in 0..cases {
        let a = random_algebra(&mut rng);
        let ctx = SteenrodContext::new(a.field());
        let (d1, d2) = (2 * rng.gen_range(0..=7), 2 * rng.gen_range(0..=7));
        let (x, y) = (random_element(&mut rng, a, d1), random_element(&mut rng, a, d2));
        let i = rng.gen_range(0..=(d1 + d2) / 2);
        let rhs = (0..=i).fold(PolyElement::zero(a), |acc, j| &acc + &(&ctx.apply_p(j, &x) * &ctx.apply_p(i - j, &y)));
        failures[0] += usize::from(ctx.apply_p(i, &(&x * &y)) != rhs);

        let d = 2 * rng.gen_range(0..=15);
        let z = random_element(&mut rng, a, d);
        failures[1] += usize::from(!ctx.apply_p(d / 2 + rng.gen_range(1..4), &z).is_zero());
        failures[2] += usize::from(ctx.p0(&z)? != frobenius(&z));
        let w = random_element(&mut rng, a, d);
        let c = rng.gen_range(0..a.p());
        let k = rng.gen_range(0..=d / 2);
        let sum = &z + &w.scale(c);
        failures[3] += usize::from(ctx.apply_p(k, &sum) != &ctx.apply_p(k, &z) + &ctx.apply_p(k, &w).scale(c));
    }
    let ok = failures.iter().all(|&f| f == 0);
    Ok((ok, format!("{cases} cases each; failures cartan {} instability {} frobenius {} additivity {}", failures[0], failures[1], failures[2], failures[3])))
}

/// `(name, M, M')` for the lemma suite, known to `4p^2`.
pub fn lemma_modules(p: u32) -> Vec<(&'static str, PolyFamily, PolyFamily)> {
    let d = (4 * p * p) as usize;
    let f = PrimeField::new(p).expect("prime");
    let (v, v2) = (PolyAlgebra::new(f, 1), PolyAlgebra::new(f, 2));
    let ideal = PolyFamily::monomial_ideal(v, &[vec![2]], d).expect("one variable");
    vec![
        ("F_p", PolyFamily::scalars(v, d), PolyFamily::scalars(v, d)),
        ("F_p[v]", PolyFamily::full(v, d), ideal.clone()),
        ("F_p[v1,v2]", PolyFamily::full(v2, d), PolyFamily::monomial_ideal(v2, &[vec![1, 0]], d).expect("two variables")),
        ("(v^2)", ideal, PolyFamily::monomial_ideal(v, &[vec![4]], d).expect("one variable")),
    ]
}

pub fn a2_r1ev_lemmas() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut count = 0;
    for p in [2u32, 3] {
        for (name, m, sub) in lemma_modules(p) {
            count += 1;
            if !check_r1ev_lemmas(&m, &sub, (4 * p * p) as usize)?.all_hold() {
                bad.push(format!("{name} at {p}"));
            }
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { format!("{count} modules, all four lemmas hold") } else { format!("fails for {}", bad.join(", ")) }))
}

fn limit_of(g: &chowlim_core::groups::FiniteGroup, p: usize, cutoff: usize) -> Result<LimitRing> {
    Ok(limit_ring(&build_category(g, p)?, cutoff))
}

fn fixed_dims(model: &chowlim_core::wreath::WreathModel) -> Result<Vec<usize>> {
    (0..=model.cutoff())
        .map(|d| {
            let w = model.w_action(d)?;
            Ok(w.sub(&FpMatrix::identity(w.field(), w.rows()))?.kernel().len())
        })
        .collect()
}

/// Wreath models at one stage; the limit rings built on the way are kept
/// for A8.
pub fn a3_wreath(cutoff: usize, rings: &mut Vec<(String, LimitRing)>) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    for p in [2usize, 3] {
        let f = PrimeField::new(p as u32)?;
        let m = PolyFamily::full(PolyAlgebra::new(f, 1), cutoff);
        let cp = wreath_model(&m, WreathVariant::Cp, cutoff)?;
        let injective = wreath_restrictions(&cp)?.non_injective_degrees().is_empty();
        let g = wreath_product(WreathBase::Cyclic, &cyclic(p)?, p, DEFAULT_CAP)?;
        let lim = limit_of(&g, p, cutoff)?;
        let cp_ok = injective && lim.dims() == cp.dims();
        rings.push((format!("Z/{p} wr Z/{p}"), lim));
        let sp = wreath_model(&m, WreathVariant::Sp, cutoff)?;
        let mut sp_ok = sp.dims() == fixed_dims(&cp)? && wreath_restrictions(&sp)?.non_injective_degrees().is_empty();
        if p > 2 {
            let g = wreath_product(WreathBase::Symmetric, &cyclic(p)?, p, DEFAULT_CAP)?;
            let lim = limit_of(&g, p, cutoff)?;
            sp_ok &= lim.dims() == sp.dims();
            rings.push((format!("S_{p} wr Z/{p}"), lim));
        }
        ok &= cp_ok && sp_ok;
        notes.push(format!("p={p}: Cp {} Sp {}", if cp_ok { "ok" } else { "differs" }, if sp_ok { "ok" } else { "differs" }));
    }
    Ok((ok, notes.join("; ")))
}

pub fn a4_stable(cutoff: usize, rings: &mut Vec<(String, LimitRing)>) -> Result<(bool, String)> {
    let s4 = symmetric(4)?;
    let m = PolyFamily::full(PolyAlgebra::new(PrimeField::new(2)?, 1), cutoff);
    let model = SylowModel::from_wreath(&s4, &cyclic(2)?, &wreath_model(&m, WreathVariant::Cp, cutoff)?)?;
    let stable = stable_elements(&s4, &model)?;
    let lim = limit_of(&s4, 2, cutoff)?;
    let mut ok = stable.dims() == lim.dims();
    let mut notes = vec![format!("S_4: {}", if ok { "equal" } else { "differ" })];
    rings.push(("S_4".into(), lim));
    for n in [3, 5] {
        let g = symmetric(n)?;
        let lim = limit_of(&g, 3, cutoff)?;
        let same = swan_invariants(&g, 3, cutoff)?.dims() == lim.dims();
        ok &= same;
        notes.push(format!("S_{n}: {}", if same { "equal" } else { "differ" }));
        rings.push((format!("S_{n}"), lim));
    }
    Ok((ok, notes.join("; ")))
}

pub const A5_GROUPS: [(ClassicalFamily, usize, u64, usize, &str); 4] = [
    (ClassicalFamily::Gl, 2, 7, 3, "GL_2(F_7)"),
    (ClassicalFamily::Sl, 2, 7, 3, "SL_2(F_7)"),
    (ClassicalFamily::Gl, 2, 5, 2, "GL_2(F_5)"),
    (ClassicalFamily::Sp, 2, 7, 3, "Sp_2(F_7)"),
];

/// Exhaustive toral check for one group: every class has a witness
/// conjugating it into the p-torsion of the torus.
pub fn a5_toral(family: ClassicalFamily, n: usize, q: u64, p: usize) -> Result<(bool, String)> {
    let data = classical_group(family, n, q, p, DEFAULT_CAP)?;
    let g = &data.group;
    let reps = g.elementary_abelian_reps(p);
    let toral = reps
        .iter()
        .filter(|e| {
            toral_witness(&data, e)
                .is_some_and(|w| g.conjugate_subgroup(w, e.subgroup()).is_subgroup_of(data.torsion.subgroup()))
        })
        .count();
    Ok((toral == reps.len(), format!("{toral}/{} classes toral", reps.len())))
}

pub fn a6_chevalley(cutoff: usize, rings: &mut Vec<(String, LimitRing)>) -> Result<(bool, String)> {
    let f = PrimeField::new(3)?;
    let gl = classical_group(ClassicalFamily::Gl, 2, 7, 3, DEFAULT_CAP)?;
    let lim = limit_of(&gl.group, 3, cutoff)?;
    let swap = [FpMatrix::identity(f, 2), FpMatrix::new(f, 2, 2, vec![0, 1, 1, 0])?];
    let gl_ok = lim.dims() == invariants(PolyAlgebra::new(f, 2), &swap, cutoff)?.dims();
    rings.push(("GL_2(F_7)".into(), lim));
    let sl = classical_group(ClassicalFamily::Sl, 2, 7, 3, DEFAULT_CAP)?;
    let lim = limit_of(&sl.group, 3, cutoff)?;
    let sign = [FpMatrix::identity(f, 1), FpMatrix::new(f, 1, 1, vec![2])?];
    let sl_ok = lim.dims() == invariants(PolyAlgebra::new(f, 1), &sign, cutoff)?.dims();
    rings.push(("SL_2(F_7)".into(), lim));
    Ok((gl_ok && sl_ok, format!("GL_2 {}; SL_2 {}", if gl_ok { "equal" } else { "differ" }, if sl_ok { "equal" } else { "differ" })))
}

pub fn a7_tau(cutoff: usize) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for p in [2u32, 3] {
        for n in [1, 2] {
            if !tau_subspace(&PolyFamily::full(PolyAlgebra::new(PrimeField::new(p)?, n), cutoff), cutoff).is_exact() {
                bad.push(format!("p={p} n={n}"));
            }
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { "exact in all four cases".into() } else { format!("inexact for {}", bad.join(", ")) }))
}

pub fn a8_closure(rings: &[(String, LimitRing)]) -> Result<(bool, String)> {
    let bad: Vec<&str> = rings
        .iter()
        .filter(|(_, r)| !(is_reduced(r).reduced && steenrod_closure_check(r).closed()))
        .map(|(n, _)| n.as_str())
        .collect();
    Ok((bad.is_empty(), if bad.is_empty() { format!("{} rings reduced and closed", rings.len()) } else { format!("fails for {}", bad.join(", ")) }))
}

pub fn a9_quaternion() -> Result<(bool, String)> {
    let cat = build_category(&quaternion()?, 2)?;
    let positive: Vec<usize> = cat.objects().iter().enumerate().filter(|(_, e)| e.rank() > 0).map(|(i, _)| i).collect();
    let only_identity = positive.len() == 1 && cat.morphisms(positive[0], positive[0]).len() == 1;
    let dims = limit_ring(&cat, 12).dims();
    let polynomial = dims.iter().enumerate().all(|(d, &x)| x == usize::from(d % 2 == 0));
    Ok((only_identity && polynomial, format!("{} positive-rank objects, dims {:?}", positive.len(), dims)))
}

pub fn a10_torsion_free() -> Result<(bool, String)> {
    let mut ok = true;
    for n in 1..=6 {
        let degrees: Vec<usize> = (1..=n).map(|i| 2 * i).collect();
        for r in 1..=3 {
            let expected: Vec<usize> = (1..=n).filter(|i| i % r == 0).map(|i| 2 * i).collect();
            ok &= torsion_free_image(&degrees, r) == expected;
        }
    }
    Ok((ok, "GL_n for n <= 6, r in 1..=3".into()))
}

/// Runs A1-A10 with `cutoff` in place of the default 20 where a criterion
/// ranges over degrees.
pub fn run_suite(cutoff: usize) -> Vec<Criterion> {
    let secs = Duration::from_secs;
    let mut rings = Vec::new();
    let mut out = vec![
        timed("A1", "Steenrod axioms", Some(secs(10)), || a1_steenrod_axioms(1000)),
        timed("A2", "R1ev lemmas", Some(secs(30)), a2_r1ev_lemmas),
        timed("A3", "wreath models at one stage", Some(secs(60)), || a3_wreath(cutoff, &mut rings)),
        timed("A4", "stable elements", Some(secs(120)), || a4_stable(cutoff, &mut rings)),
    ];
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for (family, n, q, p, name) in A5_GROUPS {
        let c = timed("A5", "toral witnesses", Some(secs(120)), || a5_toral(family, n, q, p));
        ok &= c.passed;
        notes.push(format!("{name} {} ({} ms)", c.detail, c.elapsed_ms));
    }
    out.push(Criterion {
        id: "A5",
        title: "toral witnesses",
        passed: ok,
        elapsed_ms: start.elapsed().as_millis() as u64,
        budget_ms: Some(4 * 120_000),
        detail: notes.join("; "),
    });
    out.push(timed("A6", "Chevalley localization", Some(secs(120)), || a6_chevalley(cutoff, &mut rings)));
    out.push(timed("A7", "tau exactness", Some(secs(10)), || a7_tau(cutoff)));
    out.push(timed("A8", "reducedness and closure", None, || a8_closure(&rings)));
    out.push(timed("A9", "quaternion limit", Some(secs(1)), a9_quaternion));
    out.push(timed("A10", "torsion-free image", Some(Duration::from_millis(100)), a10_torsion_free));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_pieces() {
        assert!(a9_quaternion().unwrap().0);
        assert!(a10_torsion_free().unwrap().0);
        assert!(a7_tau(8).unwrap().0);
        assert!(a1_steenrod_axioms(20).unwrap().0);
    }

    #[test]
    fn budget_overrun_fails() {
        let c = timed("X", "slow", Some(Duration::ZERO), || {
            std::thread::sleep(Duration::from_millis(2));
            Ok((true, String::new()))
        });
        assert!(!c.passed);
        assert!(c.line().starts_with("X FAIL"));
    }
}
