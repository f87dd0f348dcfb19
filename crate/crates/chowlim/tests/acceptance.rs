//! Acceptance criteria A1-A10, one PASS/FAIL line each. Every criterion is
//! checked against an oracle computed here and timed against its budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use chowlim_core::fp::{FpMatrix, PrimeField};
use chowlim_core::graded::{GradedRing, PolyAlgebra, PolyElement, PolyFamily};
use chowlim_core::groups::{
    classical_group, cyclic, quaternion, symmetric, toral_witness, wreath_product, ClassicalFamily, FiniteGroup,
    WreathBase, DEFAULT_CAP,
};
use chowlim_core::quillen::{build_category, limit_ring, stable_elements, steenrod_closure_check, swan_invariants, LimitRing, SylowModel};
use chowlim_core::steenrod::{is_reduced, SteenrodContext};
use chowlim_core::wreath::{check_r1ev_lemmas, r1ev, tau_subspace, torsion_free_image, wreath_model, wreath_restrictions, WreathVariant};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const D: usize = 20;

struct Line {
    id: &'static str,
    ok: bool,
    elapsed: Duration,
    budget: Option<Duration>,
    detail: String,
}

fn run(id: &'static str, budget: Option<Duration>, f: impl FnOnce() -> (bool, String)) -> Line {
    let start = Instant::now();
    let (ok, detail) = f();
    Line { id, ok, elapsed: start.elapsed(), budget, detail }
}

impl Line {
    fn passed(&self) -> bool {
        self.ok && self.budget.is_none_or(|b| self.elapsed <= b)
    }

    fn print(&self) {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let budget = match self.budget {
            Some(b) if self.elapsed > b => format!(", over budget {b:?}"),
            Some(b) => format!(", budget {b:?}"),
            None => String::new(),
        };
        println!("{} {verdict} [{:.1?}{budget}] {}", self.id, self.elapsed, self.detail);
    }
}

fn limit(g: &FiniteGroup, p: usize, cutoff: usize) -> LimitRing {
    limit_ring(&build_category(g, p).unwrap(), cutoff)
}

fn even_ones(cutoff: usize, period: usize) -> Vec<usize> {
    (0..=cutoff).map(|d| usize::from(d % period == 0)).collect()
}

fn binomial_row(n: usize) -> Vec<usize> {
    (0..n).fold(vec![1usize], |row, _| {
        let mut next = vec![1; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        next
    })
}

// A1 ----------------------------------------------------------------------

fn element(p: u32, n: usize, d: usize) -> impl Strategy<Value = PolyElement> {
    let a = PolyAlgebra::new(PrimeField::new(p).unwrap(), n);
    let basis = a.basis(d);
    proptest::collection::vec((0..p, 0u32..6), basis.len()).prop_map(move |c| {
        let coeffs: Vec<u32> = c.iter().map(|&(x, keep)| if keep == 0 { x } else { 0 }).collect();
        PolyElement::from_vector(a, &basis, &coeffs)
    })
}

fn shape(max_half: usize) -> impl Strategy<Value = (u32, usize, usize)> {
    (prop::sample::select(vec![2u32, 3, 5]), 1usize..=4, 0..=max_half).prop_map(|(p, n, k)| (p, n, 2 * k))
}

fn single() -> impl Strategy<Value = PolyElement> {
    shape(15).prop_flat_map(|(p, n, d)| element(p, n, d))
}

fn same_degree() -> impl Strategy<Value = (PolyElement, PolyElement)> {
    shape(15).prop_flat_map(|(p, n, d)| (element(p, n, d), element(p, n, d)))
}

fn product_pair() -> impl Strategy<Value = (PolyElement, PolyElement)> {
    (prop::sample::select(vec![2u32, 3, 5]), 1usize..=4, 0usize..=7, 0usize..=8)
        .prop_flat_map(|(p, n, a, b)| (element(p, n, 2 * a), element(p, n, 2 * b.min(15 - a))))
}

fn a1() -> (bool, String) {
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    let ctx = |x: &PolyElement| SteenrodContext::new(x.algebra().field());
    let cartan = runner.run(&(product_pair(), 0usize..16), |((x, y), i)| {
        let c = ctx(&x);
        let rhs = (0..=i).fold(PolyElement::zero(x.algebra()), |acc, j| &acc + &(&c.apply_p(j, &x) * &c.apply_p(i - j, &y)));
        prop_assert_eq!(c.apply_p(i, &(&x * &y)), rhs);
        Ok(())
    });
    let instability = runner.run(&(single(), 1usize..8), |(x, extra)| {
        let d = x.degree().unwrap_or(0);
        prop_assert!(ctx(&x).apply_p(d / 2 + extra, &x).is_zero());
        Ok(())
    });
    let frobenius = runner.run(&single(), |x| {
        let p = x.algebra().p();
        let termwise = PolyElement::from_terms(x.algebra(), x.terms().map(|(m, c)| (m.iter().map(|e| e * p).collect(), c))).unwrap();
        prop_assert_eq!(ctx(&x).p0(&x).unwrap(), termwise);
        Ok(())
    });
    let additivity = runner.run(&(same_degree(), 0u32..5, 0usize..16), |((x, y), c, i)| {
        let k = ctx(&x);
        prop_assert_eq!(k.apply_p(i, &(&x + &y.scale(c))), &k.apply_p(i, &x) + &k.apply_p(i, &y).scale(c));
        Ok(())
    });
    let results = [
        ("cartan", cartan.err().map(|e| e.to_string())),
        ("instability", instability.err().map(|e| e.to_string())),
        ("frobenius", frobenius.err().map(|e| e.to_string())),
        ("additivity", additivity.err().map(|e| e.to_string())),
    ];
    let failed: Vec<String> = results.iter().filter_map(|(n, r)| r.as_ref().map(|e| format!("{n}: {e}"))).collect();
    (failed.is_empty(), if failed.is_empty() { "4 x 1000 cases, zero failures".into() } else { failed.join("; ") })
}

// A2 ----------------------------------------------------------------------

fn a2() -> (bool, String) {
    let mut bad = Vec::new();
    for p in [2u32, 3] {
        let d = (4 * p * p) as usize;
        let f = PrimeField::new(p).unwrap();
        let (v, v2) = (PolyAlgebra::new(f, 1), PolyAlgebra::new(f, 2));
        let ideal = PolyFamily::monomial_ideal(v, &[vec![2]], d).unwrap();
        let modules = [
            ("F_p", PolyFamily::scalars(v, d), PolyFamily::scalars(v, d)),
            ("F_p[v]", PolyFamily::full(v, d), ideal.clone()),
            ("F_p[v1,v2]", PolyFamily::full(v2, d), PolyFamily::monomial_ideal(v2, &[vec![1, 0]], d).unwrap()),
            ("(v^2)", ideal, PolyFamily::monomial_ideal(v, &[vec![4]], d).unwrap()),
        ];
        for (name, m, sub) in modules {
            let report = check_r1ev_lemmas(&m, &sub, d).unwrap();
            // Q ⊗ ΦM by hand: pairs (j, b) with p|x_b| + 2j(p-1) = deg.
            let m_dims = m.dims();
            let q_phi: Vec<usize> = (0..=d)
                .map(|deg| {
                    (0..=deg / p as usize)
                        .filter(|e| (deg - p as usize * e) % (2 * (p as usize - 1)) == 0)
                        .map(|e| m_dims[e])
                        .sum()
                })
                .collect();
            let lemma2 = r1ev(&m, d).map(|r| r.dims() == q_phi).unwrap_or(false);
            if !report.all_hold() || !lemma2 {
                bad.push(format!("{name} at {p}: {report:?}"));
            }
        }
    }
    (bad.is_empty(), if bad.is_empty() { "8 modules, lemmas 1-4 exact".into() } else { bad.join("; ") })
}

// A3 ----------------------------------------------------------------------

fn a3(rings: &mut Vec<(String, LimitRing)>) -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;
    for p in [2usize, 3] {
        let f = PrimeField::new(p as u32).unwrap();
        let m = PolyFamily::full(PolyAlgebra::new(f, 1), D);
        let cp = wreath_model(&m, WreathVariant::Cp, D).unwrap();
        let res = wreath_restrictions(&cp).unwrap();
        let image: Vec<usize> = (0..=D).map(|d| res.joint_rank(d)).collect();
        let g = wreath_product(WreathBase::Cyclic, &cyclic(p).unwrap(), p, DEFAULT_CAP).unwrap();
        let lim = limit(&g, p, D);
        let cp_ok = image == cp.dims() && image == lim.dims();
        let closed_form = p != 2 || (0..=D / 2).all(|k| lim.dims()[2 * k] == k + 1);
        rings.push((format!("Z/{p}≀Z/{p}"), lim));
        let sp = wreath_model(&m, WreathVariant::Sp, D).unwrap();
        let fixed: Vec<usize> = (0..=D)
            .map(|d| {
                let w = cp.w_action(d).unwrap();
                w.sub(&FpMatrix::identity(f, w.rows())).unwrap().kernel().len()
            })
            .collect();
        let mut sp_ok = sp.dims() == fixed;
        if p > 2 {
            let g = wreath_product(WreathBase::Symmetric, &cyclic(p).unwrap(), p, DEFAULT_CAP).unwrap();
            let lim = limit(&g, p, D);
            sp_ok &= lim.dims() == sp.dims();
            rings.push((format!("S_{p}≀Z/{p}"), lim));
        }
        ok &= cp_ok && closed_form && sp_ok;
        notes.push(format!("p={p} image {:?}", &image[..image.len().min(9)]));
    }
    (ok, notes.join("; "))
}

// A4 ----------------------------------------------------------------------

/// Monomials in c1, c2, c3 of degrees 2, 4, 6 avoiding c1 c3.
fn s4_oracle(k: usize) -> usize {
    let mut n = 0;
    for c in 0..=k / 3 {
        for b in 0..=(k - 3 * c) / 2 {
            let a = k - 3 * c - 2 * b;
            n += usize::from(a == 0 || c == 0);
        }
    }
    n
}

fn a4(rings: &mut Vec<(String, LimitRing)>) -> (bool, String) {
    let s4 = symmetric(4).unwrap();
    let m = PolyFamily::full(PolyAlgebra::new(PrimeField::new(2).unwrap(), 1), D);
    let model = SylowModel::from_wreath(&s4, &cyclic(2).unwrap(), &wreath_model(&m, WreathVariant::Cp, D).unwrap()).unwrap();
    let stable = stable_elements(&s4, &model).unwrap().dims();
    let lim = limit(&s4, 2, D);
    let s4_ok = stable == lim.dims() && (0..=D / 2).all(|k| stable[2 * k] == s4_oracle(k));
    rings.push(("S_4".into(), lim));
    let mut ok = s4_ok;
    for n in [3, 5] {
        let g = symmetric(n).unwrap();
        let lim = limit(&g, 3, D);
        let swan = swan_invariants(&g, 3, D).unwrap().dims();
        // S_3, S_5 at 3: Z/3 with normalizer acting by ±1.
        ok &= swan == lim.dims() && swan == even_ones(D, 4);
        rings.push((format!("S_{n}"), lim));
    }
    (ok, format!("S_4 stable {:?}", &stable[..stable.len().min(11)]))
}

// A5 ----------------------------------------------------------------------

fn a5(family: ClassicalFamily, n: usize, q: u64, p: usize) -> (bool, String) {
    let data = classical_group(family, n, q, p, DEFAULT_CAP).unwrap();
    let g = &data.group;
    let reps = g.elementary_abelian_reps(p);
    let good = reps
        .iter()
        .filter(|e| {
            toral_witness(&data, e).is_some_and(|w| {
                e.basis().iter().all(|&b| {
                    let m = g.element(g.conj(w, b));
                    (0..n).all(|i| (0..n).all(|j| i == j || m[i * n + j] == 0))
                })
            })
        })
        .count();
    (good == reps.len() && !reps.is_empty(), format!("{good}/{} classes, order {}", reps.len(), g.order()))
}

// A6 ----------------------------------------------------------------------

fn a6(rings: &mut Vec<(String, LimitRing)>) -> (bool, String) {
    let gl = classical_group(ClassicalFamily::Gl, 2, 7, 3, DEFAULT_CAP).unwrap();
    let lim = limit(&gl.group, 3, D);
    let gl_ok = (0..=D).all(|d| lim.dims()[d] == if d % 2 == 0 { d / 4 + 1 } else { 0 });
    rings.push(("GL_2(F_7)".into(), lim));
    let sl = classical_group(ClassicalFamily::Sl, 2, 7, 3, DEFAULT_CAP).unwrap();
    let lim = limit(&sl.group, 3, D);
    let sl_ok = lim.dims() == even_ones(D, 4);
    rings.push(("SL_2(F_7)".into(), lim));
    (gl_ok && sl_ok, format!("GL_2 floor(k/2)+1: {gl_ok}; SL_2 period 4: {sl_ok}"))
}

// A7 ----------------------------------------------------------------------

fn a7() -> (bool, String) {
    let mut ok = true;
    for p in [2usize, 3] {
        for n in [1usize, 2] {
            let m = PolyFamily::full(PolyAlgebra::new(PrimeField::new(p as u32).unwrap(), n), D);
            let t = tau_subspace(&m, D);
            // Monomial tensors of degree d number the coefficient of t^d in
            // (1 - t^2)^{-np}; diagonal ones are monomials of degree d/p.
            let row = |k: usize, r: usize| binomial_row(k + r - 1)[k];
            for d in 0..=D {
                let total = if d % 2 == 0 { row(d / 2, n * p) } else { 0 };
                let diag = if d % (2 * p) == 0 { row(d / (2 * p), n) } else { 0 };
                ok &= t.invariants[d] == t.tau[d] + t.phi[d] && t.tau[d] * p == total - diag && t.phi[d] == diag;
            }
        }
    }
    (ok, "F_p[v], F_p[v1,v2] at p = 2, 3".into())
}

// A8-A10 ------------------------------------------------------------------

fn a8(rings: &[(String, LimitRing)]) -> (bool, String) {
    let bad: Vec<&str> = rings
        .iter()
        .filter(|(_, r)| !is_reduced(r).reduced || !steenrod_closure_check(r).closed())
        .map(|(n, _)| n.as_str())
        .collect();
    (bad.is_empty(), format!("{} rings, failures {bad:?}", rings.len()))
}

fn a9() -> (bool, String) {
    let cat = build_category(&quaternion().unwrap(), 2).unwrap();
    let positive: Vec<usize> = (0..cat.objects().len()).filter(|&i| cat.objects()[i].rank() > 0).collect();
    let ok = positive.len() == 1
        && cat.morphisms(positive[0], positive[0]).len() == 1
        && limit_ring(&cat, 12).dims() == even_ones(12, 2);
    (ok, format!("{} positive-rank object", positive.len()))
}

fn a10() -> (bool, String) {
    let hand: [(usize, &[usize]); 3] = [(1, &[2, 4, 6, 8, 10, 12]), (2, &[4, 8, 12]), (3, &[6, 12])];
    let ok = hand.iter().all(|&(r, expected)| torsion_free_image(&[2, 4, 6, 8, 10, 12], r) == expected)
        && torsion_free_image(&[2, 4], 1) == [2, 4]
        && torsion_free_image(&[2, 4, 6], 2) == [4]
        && torsion_free_image(&[2, 4, 6], 3) == [6];
    (ok, "GL_6 degree list, r = 1, 2, 3".into())
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut rings = Vec::new();
    let mut lines = vec![
        run("A1", Some(secs(10)), a1),
        run("A2", Some(secs(30)), a2),
        run("A3", Some(secs(60)), || a3(&mut rings)),
        run("A4", Some(secs(120)), || a4(&mut rings)),
    ];
    let groups = [
        (ClassicalFamily::Gl, 2, 7, 3, "GL_2(F_7) p=3"),
        (ClassicalFamily::Sl, 2, 7, 3, "SL_2(F_7) p=3"),
        (ClassicalFamily::Gl, 2, 5, 2, "GL_2(F_5) p=2"),
        (ClassicalFamily::Sp, 2, 7, 3, "Sp_2(F_7) p=3"),
    ];
    for (family, n, q, p, name) in groups {
        let mut l = run("A5", Some(secs(120)), || a5(family, n, q, p));
        l.detail = format!("{name}: {}", l.detail);
        lines.push(l);
    }
    lines.push(run("A6", Some(secs(120)), || a6(&mut rings)));
    lines.push(run("A7", Some(secs(10)), a7));
    lines.push(run("A8", None, || a8(&rings)));
    lines.push(run("A9", Some(secs(1)), a9));
    lines.push(run("A10", Some(Duration::from_millis(100)), a10));
    for l in &lines {
        l.print();
    }
    let failed = lines.iter().filter(|l| !l.passed()).count();
    println!("{} of {} checks passed", lines.len() - failed, lines.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
