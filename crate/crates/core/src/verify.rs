//! Per-group verification checks and the parallel runner that produces
//! sorted [`VerificationReport`] rows.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bgroup::{beta, complement_formula, is_b_group, m_table};
use crate::burnside::{
    deflate, format_rational, induce, inflate, restrict_to, transport, BurnsideElement,
};
use crate::catalog::{cyclic, Catalog};
use crate::error::{Error, Result};
use crate::group::{direct_product, is_prime, is_squarefree, prime_factors, FiniteGroup, Group, Subgroup};
use crate::iso::are_isomorphic;
use crate::kernel::{in_kernel, kernel_basis, SubgroupFamily};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    ResDefIdempotent,
    ComplementFormula,
    CyclicModP,
    NilpotentQuotient,
    KernelClosure,
    SolvableQuotient,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::ResDefIdempotent,
        Check::ComplementFormula,
        Check::CyclicModP,
        Check::NilpotentQuotient,
        Check::KernelClosure,
        Check::SolvableQuotient,
    ];

    /// The name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Check::ResDefIdempotent => "theorem-2-3",
            Check::ComplementFormula => "complements",
            Check::CyclicModP => "baumann",
            Check::NilpotentQuotient => "conjecture-a",
            Check::KernelClosure => "conjecture-b",
            Check::SolvableQuotient => "thevenaz",
        }
    }

    pub fn parse(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s)
    }

    pub fn run(self, g: &Group, cat: &Catalog) -> Outcome {
        let r = match self {
            Check::ResDefIdempotent => check_res_def_idempotent(g),
            Check::ComplementFormula => check_complement_formula(g),
            Check::CyclicModP => check_cyclic_mod_p(g, cat),
            Check::NilpotentQuotient => check_nilpotent_quotient(g, cat),
            Check::KernelClosure => check_kernel_closure(g, SubgroupFamily::Nilpotent),
            Check::SolvableQuotient => check_solvable_quotient(g, cat),
        };
        r.unwrap_or_else(|e| Outcome::fail(Failure::Bug, json!({ "error": e.to_string() })))
    }
}

/// Name of the catalog-wide check on nilpotent B-groups.
pub const NILPOTENT_CLASSIFICATION: &str = "nilpotent-b-groups";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// Why a check failed: a violated proven statement means a bug here, a
/// violated open statement is a genuine counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Failure {
    Bug,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub witness: Option<Value>,
}

impl Outcome {
    fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            witness: None,
        }
    }

    fn pass_with(witness: Value) -> Self {
        Outcome {
            status: Status::Pass,
            witness: Some(witness),
        }
    }

    fn fail(kind: Failure, mut witness: Value) -> Self {
        if let Value::Object(map) = &mut witness {
            map.insert("kind".into(), serde_json::to_value(kind).expect("enum"));
        }
        Outcome {
            status: Status::Fail,
            witness: Some(witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub group: String,
    pub order: usize,
    pub check: String,
    pub status: Status,
    pub witness: Option<Value>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn failure(&self) -> Option<Failure> {
        if self.status != Status::Fail {
            return None;
        }
        self.witness
            .as_ref()
            .and_then(|w| w.get("kind"))
            .and_then(|k| serde_json::from_value(k.clone()).ok())
            .or(Some(Failure::Bug))
    }
}

pub fn group_json(g: &FiniteGroup) -> Value {
    json!({
        "name": g.label(),
        "order": g.order(),
        "degree": g.degree(),
        "generators": g.generator_perms().iter().map(Permutation::to_string).collect::<Vec<_>>(),
    })
}

pub fn subgroup_json(g: &FiniteGroup, h: &Subgroup) -> Value {
    let gens: Vec<String> = g
        .small_generating_set(h)
        .into_iter()
        .map(|x| g.perm(x).to_string())
        .collect();
    json!({
        "label": g.lattice().index_of(h).map(|i| g.lattice().subgroup_label(i)),
        "order": h.order(),
        "generators": gens,
    })
}

pub fn element_json(u: &BurnsideElement) -> Value {
    let mut v = serde_json::to_value(u.to_serialized()).expect("serializable");
    let marks: Vec<String> = u.marks().iter().map(format_rational).collect();
    v["marks"] = json!(marks);
    v
}

fn top_idempotent(g: &Group) -> BurnsideElement {
    let l = g.lattice();
    BurnsideElement::idempotent(g, l.class_of(l.top()))
}

/// Restrictions of `e_G^G` to proper subgroups vanish, and its deflation to
/// `G/N` is `m_{G,N} e_{G/N}^{G/N}`.
pub fn check_res_def_idempotent(g: &Group) -> Result<Outcome> {
    let l = g.lattice();
    let e = top_idempotent(g);
    let top_class = l.class_of(l.top());
    for (c, class) in l.classes().iter().enumerate() {
        if c == top_class {
            continue;
        }
        let h = l.subgroup(class.rep);
        let r = restrict_to(&e, h)?;
        if !r.is_zero() {
            return Ok(Outcome::fail(
                Failure::Bug,
                json!({
                    "clause": "restriction",
                    "group": group_json(g),
                    "subgroup": subgroup_json(g, h),
                    "element": element_json(&e),
                    "image": element_json(&r),
                }),
            ));
        }
    }
    for n in l.normal_subgroups() {
        let proj = l.projection(g, n)?;
        let d = deflate(&e, &proj)?;
        let m = crate::burnside::m_coefficient(g, n)?;
        let expected = top_idempotent(proj.target()).scale(&m);
        if d != expected {
            return Ok(Outcome::fail(
                Failure::Bug,
                json!({
                    "clause": "deflation",
                    "group": group_json(g),
                    "normal_subgroup": subgroup_json(g, l.subgroup(n)),
                    "m": format_rational(&m),
                    "element": element_json(&e),
                    "image": element_json(&d),
                    "expected": element_json(&expected),
                }),
            ));
        }
    }
    Ok(Outcome::pass())
}

/// `m_{G,N} = 1 − |K_G(N)|/|N|` for each minimal normal abelian `N`.
pub fn check_complement_formula(g: &Group) -> Result<Outcome> {
    let l = g.lattice();
    let Ok(mins) = l.minimal_normal_subgroups() else {
        return Ok(Outcome::pass());
    };
    for n in mins {
        if !g.subgroup_is_abelian(l.subgroup(n)) {
            continue;
        }
        let by_sum = crate::burnside::m_coefficient(g, n)?;
        let by_count = complement_formula(g, n)?;
        if by_sum != by_count {
            return Ok(Outcome::fail(
                Failure::Bug,
                json!({
                    "group": group_json(g),
                    "normal_subgroup": subgroup_json(g, l.subgroup(n)),
                    "mobius_sum": format_rational(&by_sum),
                    "complement_count": l.complements(n)?.len(),
                    "formula": format_rational(&by_count),
                }),
            ));
        }
    }
    Ok(Outcome::pass())
}

/// Primes checked for cyclicity modulo `p`: the divisors of `|G|` and the
/// smallest prime not dividing it.
pub fn relevant_primes(order: usize) -> Vec<u64> {
    let mut ps = prime_factors(order as u64);
    let extra = (2..).find(|&p| is_prime(p) && !(order as u64).is_multiple_of(p)).expect("infinitely many primes");
    ps.push(extra);
    ps
}

fn beta_json(g: &Group, cat: &Catalog) -> Value {
    let b = beta(g);
    let l = g.lattice();
    json!({
        "kernel": subgroup_json(g, l.subgroup(b.kernel)),
        "quotient": cat.describe(b.group()),
        "quotient_group": group_json(b.group()),
    })
}

/// `G` is cyclic modulo `p` exactly when `β(G)` is.
pub fn check_cyclic_mod_p(g: &Group, cat: &Catalog) -> Result<Outcome> {
    let b = beta(g);
    for p in relevant_primes(g.order()) {
        let lhs = g.is_cyclic_mod_p(p)?;
        let rhs = b.group().is_cyclic_mod_p(p)?;
        if lhs != rhs {
            return Ok(Outcome::fail(
                Failure::Bug,
                json!({
                    "group": group_json(g),
                    "prime": p,
                    "group_cyclic_mod_p": lhs,
                    "beta_cyclic_mod_p": rhs,
                    "beta": beta_json(g, cat),
                }),
            ));
        }
    }
    Ok(Outcome::pass())
}

/// Full data for nonsolvable groups, kept whether or not the check passes.
fn nonsolvable_witness(g: &Group, cat: &Catalog) -> Value {
    let l = g.lattice();
    let m: Vec<Value> = m_table(g)
        .into_iter()
        .map(|(n, m)| json!({ "normal_subgroup": l.subgroup_label(n), "m": format_rational(&m) }))
        .collect();
    let b = beta(g);
    json!({
        "group": group_json(g),
        "beta": beta_json(g, cat),
        "group_nilpotent": g.is_nilpotent(),
        "beta_nilpotent": b.group().is_nilpotent(),
        "group_solvable": g.is_solvable(),
        "beta_solvable": b.group().is_solvable(),
        "m_table": m,
        "idempotent": element_json(&top_idempotent(g)),
    })
}

/// `β(G)` is nilpotent exactly when `G` is. A mismatch on a solvable group
/// is a bug; on a nonsolvable group it is a counterexample.
pub fn check_nilpotent_quotient(g: &Group, cat: &Catalog) -> Result<Outcome> {
    let b = beta(g);
    let solvable = g.is_solvable();
    let agree = g.is_nilpotent() == b.group().is_nilpotent();
    Ok(match (agree, solvable) {
        (true, true) => Outcome::pass(),
        (true, false) => Outcome::pass_with(nonsolvable_witness(g, cat)),
        (false, true) => Outcome::fail(Failure::Bug, nonsolvable_witness(g, cat)),
        (false, false) => Outcome::fail(Failure::Counterexample, nonsolvable_witness(g, cat)),
    })
}

/// `β(G)` is solvable exactly when `G` is, and the solvable-family kernel
/// is closed under the biset operations.
pub fn check_solvable_quotient(g: &Group, cat: &Catalog) -> Result<Outcome> {
    let b = beta(g);
    let solvable = g.is_solvable();
    if solvable != b.group().is_solvable() {
        let kind = if solvable { Failure::Bug } else { Failure::Counterexample };
        return Ok(Outcome::fail(kind, nonsolvable_witness(g, cat)));
    }
    let closure = check_kernel_closure(g, SubgroupFamily::Solvable)?;
    if closure.status == Status::Fail || solvable {
        return Ok(closure);
    }
    Ok(Outcome::pass_with(nonsolvable_witness(g, cat)))
}

/// A copy of `g` with points reversed and generators in reverse order, so
/// that element ids and subgroup indices differ from the original.
pub fn relabeled_copy(g: &FiniteGroup) -> Result<FiniteGroup> {
    let d = g.degree();
    let rev = Permutation::new((0..d as u32).rev().collect())?;
    let gens: Vec<Permutation> = g
        .generator_perms()
        .iter()
        .rev()
        .map(|p| rev.compose(p).compose(&rev))
        .collect();
    Ok(FiniteGroup::from_generators(d, &gens, g.order().max(1))?.with_name(format!("{}'", g.label())))
}

fn closure_failure(
    kind: Failure,
    op: &str,
    g: &Group,
    subgroup: Option<(&str, &Subgroup)>,
    element: &BurnsideElement,
    image: &BurnsideElement,
) -> Outcome {
    let mut w = json!({
        "operation": op,
        "group": group_json(g),
        "element": element_json(element),
        "image": element_json(image),
    });
    if let Some((key, h)) = subgroup {
        w[key] = subgroup_json(g, h);
    }
    Outcome::fail(kind, w)
}

/// The kernel of restriction to `family` subgroups is closed under
/// restriction, induction, inflation, deflation and transport. Deflation by
/// a nonsolvable normal subgroup is the only unproven case; its failure is
/// reported as a counterexample, every other failure as a bug.
pub fn check_kernel_closure(g: &Group, family: SubgroupFamily) -> Result<Outcome> {
    let l = g.lattice();
    let kb = kernel_basis(g, family);
    let top = l.top();
    for class in l.classes() {
        if class.rep == top {
            continue;
        }
        let inc = l.inclusion(g, class.rep);
        let h = l.subgroup(class.rep);
        for v in kb.basis() {
            let r = restrict_to(v, h)?;
            if !in_kernel(&r, family) {
                return Ok(closure_failure(Failure::Bug, "restriction", g, Some(("subgroup", h)), v, &r));
            }
        }
        for w in kernel_basis(inc.source(), family).basis() {
            let i = induce(w, &inc)?;
            if !in_kernel(&i, family) {
                return Ok(closure_failure(Failure::Bug, "induction", g, Some(("subgroup", h)), w, &i));
            }
        }
    }
    for n in l.normal_subgroups() {
        if n == l.trivial() {
            continue;
        }
        let proj = l.projection(g, n)?;
        let nn = l.subgroup(n);
        for v in kb.basis() {
            let d = deflate(v, &proj)?;
            if !in_kernel(&d, family) {
                let kind = if g.subgroup_is_solvable(nn) {
                    Failure::Bug
                } else {
                    Failure::Counterexample
                };
                return Ok(closure_failure(kind, "deflation", g, Some(("normal_subgroup", nn)), v, &d));
            }
        }
        for w in kernel_basis(proj.target(), family).basis() {
            let i = inflate(w, &proj)?;
            if !in_kernel(&i, family) {
                return Ok(closure_failure(Failure::Bug, "inflation", g, Some(("normal_subgroup", nn)), w, &i));
            }
        }
    }
    if kb.rank() > 0 {
        let copy = relabeled_copy(g)?.into_shared();
        let iso = are_isomorphic(g, &copy).ok_or(Error::BadHomomorphism("relabeled copy is not isomorphic"))?;
        for v in kb.basis() {
            let t = transport(v, &iso)?;
            if !in_kernel(&t, family) {
                return Ok(closure_failure(Failure::Bug, "transport", g, None, v, &t));
            }
        }
    }
    Ok(Outcome::pass())
}

/// The nilpotent B-groups in the catalog are exactly the entries isomorphic
/// to `C_n × C_n` with `n` squarefree.
pub fn check_nilpotent_b_groups(cat: &Catalog) -> Result<Outcome> {
    let mut found = Vec::new();
    let mut expected = Vec::new();
    for (i, e) in cat.entries().iter().enumerate() {
        let g = cat.group(i)?;
        if g.is_nilpotent() && is_b_group(&g) {
            found.push(e.name.clone());
        }
        let n = (1..=e.order).find(|n| n * n >= e.order).unwrap_or(1);
        if n * n == e.order && is_squarefree(n as u64) {
            let c = cyclic(n, cat.cap())?;
            let square = direct_product(&c, &c, cat.cap())?.into_shared();
            if are_isomorphic(&g, &square).is_some() {
                expected.push(e.name.clone());
            }
        }
    }
    let w = json!({ "nilpotent_b_groups": found, "squarefree_squares": expected });
    Ok(if found == expected {
        Outcome::pass_with(w)
    } else {
        Outcome::fail(Failure::Bug, w)
    })
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Worker threads; 0 lets the thread pool decide.
    pub jobs: usize,
    /// Record wall-clock milliseconds; otherwise `millis` is 0 so output is reproducible.
    pub timings: bool,
}

fn timed(opts: &VerifyOptions, f: impl FnOnce() -> Outcome) -> (Outcome, u64) {
    let start = Instant::now();
    let o = f();
    let ms = if opts.timings { start.elapsed().as_millis() as u64 } else { 0 };
    (o, ms)
}

fn report(group: String, order: usize, check: &str, (o, millis): (Outcome, u64)) -> VerificationReport {
    VerificationReport {
        group,
        order,
        check: check.to_string(),
        status: o.status,
        witness: o.witness,
        millis,
    }
}

/// Runs `checks` on every group in parallel and returns reports sorted by
/// (group order, group name, check name).
pub fn run_checks(
    groups: &[Group],
    checks: &[Check],
    cat: &Catalog,
    opts: &VerifyOptions,
) -> Vec<VerificationReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let tasks: Vec<(&Group, Check)> = groups
        .iter()
        .flat_map(|g| checks.iter().map(move |&c| (g, c)))
        .collect();
    let mut reports: Vec<VerificationReport> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(g, c)| report(g.label(), g.order(), c.name(), timed(opts, || c.run(g, cat))))
            .collect()
    });
    sort_reports(&mut reports);
    reports
}

/// Every check on every catalog group, plus the catalog-wide classification row.
pub fn verify_catalog(cat: &Catalog, checks: &[Check], with_classification: bool, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let groups = cat.groups()?;
    let mut reports = run_checks(&groups, checks, cat, opts);
    if with_classification {
        let out = timed(opts, || {
            check_nilpotent_b_groups(cat).unwrap_or_else(|e| Outcome::fail(Failure::Bug, json!({ "error": e.to_string() })))
        });
        reports.push(report("catalog".into(), 0, NILPOTENT_CLASSIFICATION, out));
        sort_reports(&mut reports);
    }
    Ok(reports)
}

pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| (a.order, &a.group, &a.check).cmp(&(b.order, &b.group, &b.check)));
}

/// 0 when nothing failed, 2 for any failure flagged as a bug, otherwise 3
/// for a counterexample.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    let kinds: Vec<Failure> = reports.iter().filter_map(VerificationReport::failure).collect();
    if kinds.contains(&Failure::Bug) {
        2
    } else if kinds.contains(&Failure::Counterexample) {
        3
    } else {
        0
    }
}

pub fn to_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("group,order,check,status,millis\n");
    for r in reports {
        let name = if r.group.contains([',', '"']) {
            format!("\"{}\"", r.group.replace('"', "\"\""))
        } else {
            r.group.clone()
        };
        out.push_str(&format!("{},{},{},{},{}\n", name, r.order, r.check, r.status.as_str(), r.millis));
    }
    out
}
