use std::time::Instant;

use chowlim_core::fp::{FpMatrix, PrimeField};
use chowlim_core::graded::{invariants as invariant_ring, GradedRing, PolyAlgebra, PolyFamily};
use chowlim_core::groups::{
    cyclic, matrix_closure, toral_witness, ElemAbelianSubgroup, FiniteGroup, GroupKind, Subgroup,
};
use chowlim_core::quillen::{build_category, limit_ring, stable_elements, steenrod_closure_check, SylowModel};
use chowlim_core::steenrod::is_reduced;
use chowlim_core::wreath::{r1ev, tau_subspace, wreath_model, wreath_restrictions, WreathVariant};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{CliError, CliResult};
use crate::report::Report;
use crate::spec::{zero_based, BuiltGroup, GroupSpec};
use crate::verify;

/// A report, plus the reason when it records a theorem-level failure.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub violation: Option<String>,
}

struct Run {
    command: &'static str,
    prime: Option<u32>,
    cutoff: Option<usize>,
    start: Instant,
    warnings: Vec<String>,
}

impl Run {
    fn new(command: &'static str, prime: Option<usize>, cutoff: Option<usize>) -> Self {
        Run { command, prime: prime.map(|p| p as u32), cutoff, start: Instant::now(), warnings: Vec::new() }
    }

    fn finish(self, payload: serde_json::Value, violation: Option<String>) -> Outcome {
        let report = Report {
            command: self.command.to_string(),
            prime: self.prime,
            cutoff: self.cutoff,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
            payload,
            warnings: self.warnings,
        };
        Outcome { report, violation }
    }
}

fn prime_field(p: usize) -> CliResult<PrimeField> {
    Ok(PrimeField::new(p as u32)?)
}

/// Elements as users write them: 1-based images or matrix entries.
fn show(group: &FiniteGroup, i: usize) -> Vec<u32> {
    let raw = group.describe(i);
    match group.kind() {
        GroupKind::Permutation { .. } => raw.iter().map(|x| x + 1).collect(),
        _ => raw,
    }
}

fn lookup(group: &FiniteGroup, gens: &[Vec<u32>]) -> CliResult<Subgroup> {
    let raw = match group.kind() {
        GroupKind::Permutation { degree } => zero_based(*degree, gens)?,
        _ => gens.to_vec(),
    };
    let idx = raw
        .iter()
        .map(|g| group.index_of(g).ok_or_else(|| CliError::Spec(format!("{g:?} is not an element of the group"))))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(group.subgroup(&idx))
}

pub fn limit(spec: &GroupSpec, p: usize, cutoff: usize, cap: usize) -> CliResult<Outcome> {
    prime_field(p)?;
    let mut run = Run::new("limit", Some(p), Some(cutoff));
    let built = spec.build(Some(p), cap)?;
    let cat = build_category(built.group(), p)?;
    let ring = limit_ring(&cat, cutoff);
    let closure = steenrod_closure_check(&ring);
    let reduced = is_reduced(&ring);
    if !reduced.unchecked_degrees.is_empty() {
        run.warnings.push(format!("degrees above {} unchecked for reducedness", cutoff / p));
    }
    let mut violation = None;
    if !closure.closed() {
        violation = Some(format!("Steenrod closure fails at {:?}", closure.failures));
    } else if !reduced.reduced {
        violation = Some(format!("nilpotent element in degree {}", reduced.witness.map(|w| w.0).unwrap_or(0)));
    }
    let payload = json!({
        "group_order": built.group().order(),
        "objects": cat.ranks(),
        "morphisms": cat.num_morphisms(),
        "dims": ring.dims(),
        "generator_degrees": ring.generator_degrees(),
        "steenrod_closed": closure.closed(),
        "steenrod_checks": closure.checked,
        "reduced": reduced.reduced,
        "reducedness_checked_degrees": reduced.checked_degrees,
    });
    Ok(run.finish(payload, violation))
}

#[derive(Serialize)]
struct ToralClass {
    rank: usize,
    generators: Vec<Vec<u32>>,
    witness: Option<Vec<u32>>,
}

pub fn toral(spec: &GroupSpec, p: usize, cap: usize) -> CliResult<Outcome> {
    prime_field(p)?;
    let run = Run::new("toral", Some(p), None);
    let BuiltGroup::Classical(data) = spec.build(Some(p), cap)? else {
        return Err(CliError::Spec("toral needs a classical group specification".into()));
    };
    let g = &data.group;
    let classes: Vec<ToralClass> = g
        .elementary_abelian_reps(p)
        .iter()
        .map(|e| ToralClass {
            rank: e.rank(),
            generators: e.basis().iter().map(|&b| show(g, b)).collect(),
            witness: toral_witness(&data, e).map(|w| show(g, w)),
        })
        .collect();
    let failures: Vec<usize> = classes.iter().enumerate().filter(|(_, c)| c.witness.is_none()).map(|(i, _)| i).collect();
    let violation = (!failures.is_empty()).then(|| format!("classes {failures:?} are not toral"));
    let payload = json!({
        "group_order": g.order(),
        "torus_rank": data.rank(),
        "weyl_order": data.weyl.len(),
        "all_toral": failures.is_empty(),
        "classes": classes,
    });
    Ok(run.finish(payload, violation))
}

pub fn stable(spec: &GroupSpec, p: usize, cutoff: usize, inner: Option<&GroupSpec>, cap: usize) -> CliResult<Outcome> {
    let f = prime_field(p)?;
    let run = Run::new("stable", Some(p), Some(cutoff));
    let built = spec.build(Some(p), cap)?;
    let g = built.group();
    let sylow = g.sylow(p);
    let (kind, model) = if ElemAbelianSubgroup::canonical(g, &sylow, p).is_ok() {
        ("polynomial", SylowModel::polynomial(g, p, cutoff)?)
    } else {
        let inner = match inner {
            Some(s) => s.build(Some(p), cap)?,
            None if matches!(g.kind(), GroupKind::Permutation { degree } if *degree == p * p) => BuiltGroup::Plain(cyclic(p)?),
            None => return Err(CliError::Spec("a non-elementary-abelian Sylow needs --inner".into())),
        };
        let ih = inner.group();
        let rank = ElemAbelianSubgroup::canonical(ih, &ih.whole(), p)?.rank();
        let m = PolyFamily::full(PolyAlgebra::new(f, rank), cutoff);
        let w = wreath_model(&m, WreathVariant::Cp, cutoff)?;
        ("wreath", SylowModel::from_wreath(g, ih, &w)?)
    };
    let stable = stable_elements(g, &model)?;
    let limit_dims = limit_ring(&build_category(g, p)?, cutoff).dims();
    let agrees = stable.dims() == limit_dims;
    let violation = (!agrees).then(|| "stable elements differ from the limit".to_string());
    let payload = json!({
        "model": kind,
        "sylow_order": model.sylow().order(),
        "dims": stable.dims(),
        "limit_dims": limit_dims,
        "agrees": agrees,
    });
    Ok(run.finish(payload, violation))
}

pub fn wreath(inner: &GroupSpec, variant: WreathVariant, p: usize, cutoff: usize, cap: usize) -> CliResult<Outcome> {
    let f = prime_field(p)?;
    let run = Run::new("wreath", Some(p), Some(cutoff));
    let built = inner.build(Some(p), cap)?;
    let g = built.group();
    let rank = ElemAbelianSubgroup::canonical(g, &g.whole(), p)
        .map_err(|_| CliError::Spec("the inner group must be elementary abelian".into()))?
        .rank();
    let m = PolyFamily::full(PolyAlgebra::new(f, rank), cutoff);
    let model = wreath_model(&m, variant, cutoff)?;
    let res = wreath_restrictions(&model)?;
    let bad = res.non_injective_degrees();
    let tau = tau_subspace(&m, cutoff);
    let violation = (!bad.is_empty()).then(|| format!("joint restriction not injective in degrees {bad:?}"));
    let payload = json!({
        "variant": format!("{variant:?}"),
        "inner_rank": rank,
        "dims": model.dims(),
        "tau": tau.tau,
        "tau_w": tau.tau_w,
        "r1ev": r1ev(&m, cutoff)?.dims(),
        "restriction_injective": bad.is_empty(),
    });
    Ok(run.finish(payload, violation))
}

/// Matrices over `F_p` acting on `F_p[v_1..v_n]`; entries rows first, column
/// `i` the image of `v_i`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

pub fn invariants(spec: &MatrixSpec, p: usize, cutoff: usize, cap: usize) -> CliResult<Outcome> {
    let f = prime_field(p)?;
    let run = Run::new("invariants", Some(p), Some(cutoff));
    let gens = spec
        .generators
        .iter()
        .map(|g| FpMatrix::new(f, spec.n, spec.n, g.iter().map(|&x| x % f.p()).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    let group = matrix_closure(f, spec.n, &gens, cap)?;
    let ring = invariant_ring(PolyAlgebra::new(f, spec.n), &group, cutoff)?;
    let payload = json!({
        "group_order": group.len(),
        "dims": ring.dims(),
        "generator_degrees": ring.generator_degrees(),
    });
    Ok(run.finish(payload, None))
}

pub fn double_cosets(spec: &GroupSpec, k: &[Vec<u32>], h: &[Vec<u32>], cap: usize) -> CliResult<Outcome> {
    let run = Run::new("double-cosets", None, None);
    let built = spec.build(None, cap)?;
    let g = built.group();
    let (k, h) = (lookup(g, k)?, lookup(g, h)?);
    let dc = g.double_cosets(&k, &h);
    let violation = (!dc.satisfies_counting(g.order(), k.order(), h.order())).then(|| "double coset counts do not add up".to_string());
    let payload = json!({
        "count": dc.representatives.len(),
        "representatives": dc.representatives.iter().map(|&r| show(g, r)).collect::<Vec<_>>(),
        "sizes": dc.sizes,
        "intersection_orders": dc.intersections.iter().map(Subgroup::order).collect::<Vec<_>>(),
    });
    Ok(run.finish(payload, violation))
}

pub fn verify(suite: &str, cutoff: usize) -> CliResult<Outcome> {
    if suite != "paper" {
        return Err(CliError::Spec(format!("unknown suite {suite:?}")));
    }
    let run = Run::new("verify", None, Some(cutoff));
    let criteria = verify::run_suite(cutoff);
    let failed: Vec<&str> = criteria.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    let violation = (!failed.is_empty()).then(|| format!("failed: {}", failed.join(", ")));
    let payload = json!({ "all_passed": failed.is_empty(), "criteria": criteria });
    Ok(run.finish(payload, violation))
}
