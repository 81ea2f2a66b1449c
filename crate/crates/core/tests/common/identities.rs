//! Biset-operation identities as fallible checks, so that both the regular
//! tests and the acceptance report can run them. Each returns the number of
//! cases compared.

use burnside_core::burnside::{deflate, induce, inflate, m_coefficient, restrict, transport, Rational};
use burnside_core::verify::relabeled_copy;
use burnside_core::{are_isomorphic, BurnsideElement, Group, GroupHom};
use rand_chacha::ChaCha8Rng;

use super::{inclusion, preimages, pull_back, random_integral, top_idempotent};

type Check = Result<usize, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_integral(us: &[&BurnsideElement]) -> bool {
    us.iter().all(|u| u.is_integral())
}

/// `Res_H Ind_K u = Σ_{x ∈ H\G/K} Ind_{H ∩ xKx⁻¹}^H c_x Res_{x⁻¹Hx ∩ K}^K u`
/// for all pairs of class representatives and `samples` elements over each `K`.
pub fn mackey(g: &Group, samples: usize, rng: &mut ChaCha8Rng) -> Check {
    let l = g.lattice();
    let mut cases = 0;
    for kcl in l.classes() {
        let k = l.subgroup(kcl.rep);
        let inc_k = inclusion(g, k);
        let kg = inc_k.source().clone();
        let us: Vec<BurnsideElement> = (0..samples).map(|_| random_integral(&kg, rng)).collect();
        for hcl in l.classes() {
            let h = l.subgroup(hcl.rep);
            let inc_h = inclusion(g, h);
            let hg = inc_h.source().clone();
            let pre_h = preimages(&inc_h);
            // one (restriction, conjugation, induction) triple per double coset
            let mut terms = Vec::new();
            for x in g.double_cosets(h, k) {
                let b = g.intersection(h, &g.conjugate_subgroup(x, k));
                let a = g.conjugate_subgroup(g.inv(x), &b);
                let inc_a = inclusion(&kg, &pull_back(&inc_k, &a));
                let inc_b = inclusion(&hg, &pull_back(&inc_h, &b));
                let pre_b = preimages(&inc_b);
                let conj = GroupHom::from_fn(inc_a.source().clone(), inc_b.source().clone(), |y| {
                    let in_g = inc_k.apply(inc_a.apply(y));
                    pre_b[&pre_h[&g.conjugate(x, in_g)]]
                })
                .map_err(|e| e.to_string())?;
                terms.push((inc_a, conj, inc_b));
            }
            for u in &us {
                let lhs = restrict(&induce(u, &inc_k).map_err(|e| e.to_string())?, &inc_h).map_err(|e| e.to_string())?;
                let mut rhs = BurnsideElement::zero(&hg);
                for (inc_a, conj, inc_b) in &terms {
                    let r = restrict(u, inc_a).map_err(|e| e.to_string())?;
                    let t = transport(&r, conj).map_err(|e| e.to_string())?;
                    rhs = &rhs + &induce(&t, inc_b).map_err(|e| e.to_string())?;
                }
                ensure(lhs == rhs && all_integral(&[&lhs]), || {
                    format!("{}: Mackey fails for H={} K={}: {lhs} vs {rhs}", g.label(), hcl.rep, kcl.rep)
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// `Res_{K/N} Def_{G/N} v = Def_{K/N} Res_K v` for normal `N ≤ K`.
pub fn restriction_commutes_with_deflation(g: &Group, samples: usize, rng: &mut ChaCha8Rng) -> Check {
    let l = g.lattice();
    let vs: Vec<BurnsideElement> = (0..samples).map(|_| random_integral(g, rng)).collect();
    let mut cases = 0;
    for n in l.normal_subgroups() {
        let proj = l.projection(g, n).map_err(|e| e.to_string())?;
        let q = proj.target().clone();
        for kcl in l.classes() {
            if !l.leq(n, kcl.rep) {
                continue;
            }
            let k = l.subgroup(kcl.rep);
            let inc_q = inclusion(&q, &proj.image(k));
            let inc_k = inclusion(g, k);
            let kg = inc_k.source().clone();
            let n_k = pull_back(&inc_k, l.subgroup(n));
            let kl = kg.lattice();
            let proj_k = kl.projection(&kg, kl.index_of(&n_k).unwrap()).map_err(|e| e.to_string())?;
            let pre_q = preimages(&inc_q);
            let onto = GroupHom::from_fn(kg.clone(), inc_q.source().clone(), |x| pre_q[&proj.apply(inc_k.apply(x))])
                .map_err(|e| e.to_string())?;
            let iso = proj_k.factor_through(&onto).map_err(|e| e.to_string())?;
            for v in &vs {
                let lhs = restrict(&deflate(v, &proj).map_err(|e| e.to_string())?, &inc_q).map_err(|e| e.to_string())?;
                let rhs = deflate(&restrict(v, &inc_k).map_err(|e| e.to_string())?, &proj_k).map_err(|e| e.to_string())?;
                let rhs = transport(&rhs, &iso).map_err(|e| e.to_string())?;
                ensure(lhs == rhs && all_integral(&[&lhs]), || {
                    format!("{}: Res/Def fail to commute for N={n} K={}", g.label(), kcl.rep)
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// `Ind_X^K e_X^X = |N_K(X):X| e_X^K` for every class representative `K`
/// of `g` and every class representative `X` of `K`.
pub fn induced_top_idempotents(g: &Group) -> Check {
    let l = g.lattice();
    let mut cases = 0;
    for kcl in l.classes() {
        let kg = inclusion(g, l.subgroup(kcl.rep)).source().clone();
        let kl = kg.lattice();
        for (xc, xcl) in kl.classes().iter().enumerate() {
            let inc_x = kl.inclusion(&kg, xcl.rep);
            let lhs = induce(&top_idempotent(inc_x.source()), &inc_x).map_err(|e| e.to_string())?;
            let weyl = (kl.normalizer(xcl.rep).order() / kl.subgroup(xcl.rep).order()) as i64;
            let rhs = BurnsideElement::idempotent(&kg, xc).scale(&Rational::from_integer(weyl.into()));
            ensure(lhs == rhs, || format!("{}: induced idempotent differs for K={} X={xc}", g.label(), kcl.rep))?;
            cases += 1;
        }
    }
    Ok(cases)
}

/// Deflating to `G/N` and then to `(G/N)/(M/N)` equals deflating to `G/M`.
pub fn deflation_is_transitive(g: &Group, samples: usize, rng: &mut ChaCha8Rng) -> Check {
    let l = g.lattice();
    let vs: Vec<BurnsideElement> = (0..samples).map(|_| random_integral(g, rng)).collect();
    let normals = l.normal_subgroups();
    let mut cases = 0;
    for &n in &normals {
        let proj_n = l.projection(g, n).map_err(|e| e.to_string())?;
        let q = proj_n.target().clone();
        let ql = q.lattice();
        for &m in normals.iter().filter(|&&m| l.leq(n, m)) {
            let proj_m = l.projection(g, m).map_err(|e| e.to_string())?;
            let m_q = ql.index_of(&proj_n.image(l.subgroup(m))).unwrap();
            let proj_mq = ql.projection(&q, m_q).map_err(|e| e.to_string())?;
            let iso = proj_n
                .then(&proj_mq)
                .and_then(|c| c.factor_through(&proj_m))
                .map_err(|e| e.to_string())?;
            for v in &vs {
                let two = deflate(&deflate(v, &proj_n).map_err(|e| e.to_string())?, &proj_mq).map_err(|e| e.to_string())?;
                let two = transport(&two, &iso).map_err(|e| e.to_string())?;
                let one = deflate(v, &proj_m).map_err(|e| e.to_string())?;
                ensure(one == two && all_integral(&[&one]), || {
                    format!("{}: deflation not transitive for N={n} M={m}", g.label())
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// `Def_{K/N} Ind_X^K e_X^X = m_{X, X∩N} · Ind_{XN/N}^{K/N} e_{XN/N}^{XN/N}`
/// for `X ≤ K` class representatives and normal `N ≤ K`.
pub fn deflated_induced_idempotents(g: &Group) -> Check {
    let l = g.lattice();
    let mut cases = 0;
    for n in l.normal_subgroups() {
        for kcl in l.classes().iter().filter(|c| l.leq(n, c.rep)) {
            let inc_k = inclusion(g, l.subgroup(kcl.rep));
            let kg = inc_k.source().clone();
            let kl = kg.lattice();
            let n_k = pull_back(&inc_k, l.subgroup(n));
            let proj = kl.projection(&kg, kl.index_of(&n_k).unwrap()).map_err(|e| e.to_string())?;
            let q = proj.target().clone();
            for xcl in kl.classes() {
                let x = kl.subgroup(xcl.rep);
                let inc_x = kl.inclusion(&kg, xcl.rep);
                let xg = inc_x.source().clone();
                let lhs = deflate(&induce(&top_idempotent(&xg), &inc_x).map_err(|e| e.to_string())?, &proj)
                    .map_err(|e| e.to_string())?;
                let x_cap_n = pull_back(&inc_x, &kg.intersection(x, &n_k));
                let m = m_coefficient(&xg, xg.lattice().index_of(&x_cap_n).unwrap()).map_err(|e| e.to_string())?;
                let inc_y = inclusion(&q, &proj.image(x));
                let rhs = induce(&top_idempotent(inc_y.source()), &inc_y).map_err(|e| e.to_string())?.scale(&m);
                ensure(lhs == rhs, || {
                    format!("{}: deflated induced idempotent differs for N={n} K={} X={}", g.label(), kcl.rep, xcl.rep)
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// `|Inf(u)^H| = |u^{HN/N}|` for every normal `N`.
pub fn inflation_preserves_marks(g: &Group, samples: usize, rng: &mut ChaCha8Rng) -> Check {
    let l = g.lattice();
    let mut cases = 0;
    for n in l.normal_subgroups() {
        let proj = l.projection(g, n).map_err(|e| e.to_string())?;
        let q = proj.target().clone();
        let ql = q.lattice();
        for _ in 0..samples {
            let u = random_integral(&q, rng);
            let inf = inflate(&u, &proj).map_err(|e| e.to_string())?;
            for (hc, hcl) in l.classes().iter().enumerate() {
                let img = ql.class_of(ql.index_of(&proj.image(l.subgroup(hcl.rep))).unwrap());
                ensure(inf.mark(hc) == u.mark(img) && inf.is_integral(), || {
                    format!("{}: inflation marks differ for N={n} H={hc}", g.label())
                })?;
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// `|Iso(φ)(u)^{φ(H)}| = |u^H|` along an isomorphism onto a relabeled copy.
pub fn transport_preserves_marks(g: &Group, samples: usize, rng: &mut ChaCha8Rng) -> Check {
    let copy = relabeled_copy(g).map_err(|e| e.to_string())?.into_shared();
    let iso = are_isomorphic(g, &copy).ok_or("relabeled copy not isomorphic")?;
    let (l, cl) = (g.lattice(), copy.lattice());
    for _ in 0..samples {
        let u = random_integral(g, rng);
        let t = transport(&u, &iso).map_err(|e| e.to_string())?;
        for (hc, hcl) in l.classes().iter().enumerate() {
            let img = cl.class_of(cl.index_of(&iso.image(l.subgroup(hcl.rep))).unwrap());
            ensure(t.mark(img) == u.mark(hc), || format!("{}: transport changes marks", g.label()))?;
        }
    }
    Ok(samples)
}
