use std::sync::Arc;

use num_traits::Zero;

use super::rational::Rational;
use super::ring::BurnsideElement;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::hom::GroupHom;

fn accumulate(target: &crate::group::Group, terms: Vec<(usize, Rational)>) -> BurnsideElement {
    let mut coeffs = vec![Rational::zero(); target.lattice().classes().len()];
    for (c, a) in terms {
        coeffs[c] += a;
    }
    BurnsideElement::from_coeffs(target, coeffs).expect("coefficient count matches lattice")
}

/// Class index in `hom.source()` of the subgroup `set` of the target, pulled back along an injection.
fn pull_class(inc: &GroupHom, back: &[usize], set: &BitSet) -> usize {
    let k = inc.source();
    let pulled = BitSet::from_indices(
        k.order(),
        set.iter().map(|x| back[x]).filter(|&x| x != usize::MAX),
    );
    let l = k.lattice();
    l.class_of(l.index_of_set(&pulled).expect("pullback of a subgroup is a subgroup"))
}

/// `Res_K^G` along the inclusion `inc: K → G`. Each `[G/X]` is decomposed
/// into K-orbits on the cosets `G/X`; the orbit of `gX` contributes `[K/(K ∩ gXg⁻¹)]`.
pub fn restrict(u: &BurnsideElement, inc: &GroupHom) -> Result<BurnsideElement> {
    let g = inc.target();
    if !Arc::ptr_eq(g, u.group()) {
        return Err(Error::GroupMismatch);
    }
    if !inc.is_injective() {
        return Err(Error::BadHomomorphism("injective"));
    }
    let k = inc.source();
    let mut back = vec![usize::MAX; g.order()];
    for x in k.elements() {
        back[inc.apply(x)] = x;
    }
    let k_gens: Vec<usize> = k.generators().iter().map(|&s| inc.apply(s as usize)).collect();
    let image = inc.image(&k.whole());
    let l = g.lattice();

    let mut terms = Vec::new();
    for (c, a) in u.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let x = l.subgroup(l.classes()[c].rep);
        // label each element by the coset gX it lies in
        let mut coset = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for t in g.elements() {
            if coset[t] != usize::MAX {
                continue;
            }
            for y in x.iter() {
                coset[g.mul(t, y)] = reps.len();
            }
            reps.push(t);
        }
        let mut seen = vec![false; reps.len()];
        for start in 0..reps.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(cc) = queue.pop() {
                for &s in &k_gens {
                    let d = coset[g.mul(s, reps[cc])];
                    if !seen[d] {
                        seen[d] = true;
                        queue.push(d);
                    }
                }
            }
            let t = reps[start];
            let stab = image
                .members()
                .intersection(g.conjugate_subgroup(t, x).members());
            terms.push((pull_class(inc, &back, &stab), a.clone()));
        }
    }
    Ok(accumulate(k, terms))
}

/// `Res` to the lattice subgroup `k` of `u`'s group.
pub fn restrict_to(u: &BurnsideElement, k: &Subgroup) -> Result<BurnsideElement> {
    let g = u.group();
    let i = g.lattice().index_of(k).ok_or(Error::NotSubgroup)?;
    restrict(u, &g.lattice().inclusion(g, i))
}

/// `Ind_K^G` along `inc: K → G`: `[K/X] ↦ [G/X]`.
pub fn induce(u: &BurnsideElement, inc: &GroupHom) -> Result<BurnsideElement> {
    let k = inc.source();
    if !Arc::ptr_eq(k, u.group()) {
        return Err(Error::GroupMismatch);
    }
    if !inc.is_injective() {
        return Err(Error::BadHomomorphism("injective"));
    }
    let g = inc.target();
    let (lk, lg) = (k.lattice(), g.lattice());
    let terms = nonzero(u)
        .map(|(c, a)| {
            let img = inc.image(lk.subgroup(lk.classes()[c].rep));
            (lg.class_of(lg.index_of(&img).expect("image is a subgroup")), a.clone())
        })
        .collect();
    Ok(accumulate(g, terms))
}

/// `Ind` from the lattice subgroup `k` of `g`, where `u` lives over the cached group of `k`.
pub fn induce_from(u: &BurnsideElement, g: &crate::group::Group, k: &Subgroup) -> Result<BurnsideElement> {
    let i = g.lattice().index_of(k).ok_or(Error::NotSubgroup)?;
    induce(u, &g.lattice().inclusion(g, i))
}

/// `Inf_{G/N}^G` along the projection `proj: G → G/N`: `[(G/N)/Y] ↦ [G/π⁻¹(Y)]`.
pub fn inflate(u: &BurnsideElement, proj: &GroupHom) -> Result<BurnsideElement> {
    let q = proj.target();
    if !Arc::ptr_eq(q, u.group()) {
        return Err(Error::GroupMismatch);
    }
    if !proj.is_surjective() {
        return Err(Error::BadHomomorphism("surjective"));
    }
    let g = proj.source();
    let (lq, lg) = (q.lattice(), g.lattice());
    let terms = nonzero(u)
        .map(|(c, a)| {
            let pre = proj.preimage(lq.subgroup(lq.classes()[c].rep));
            (lg.class_of(lg.index_of(&pre).expect("preimage is a subgroup")), a.clone())
        })
        .collect();
    Ok(accumulate(g, terms))
}

/// `Inf` from `G/N` for the lattice normal subgroup `n`, using the cached quotient.
pub fn inflate_from(u: &BurnsideElement, g: &crate::group::Group, n: &Subgroup) -> Result<BurnsideElement> {
    let i = g.lattice().index_of(n).ok_or(Error::NotSubgroup)?;
    inflate(u, &g.lattice().projection(g, i)?)
}

/// `Def_{G/N}^G` along `proj: G → G/N`: `[G/X] ↦ [(G/N)/(XN/N)]`.
pub fn deflate(u: &BurnsideElement, proj: &GroupHom) -> Result<BurnsideElement> {
    let g = proj.source();
    if !Arc::ptr_eq(g, u.group()) {
        return Err(Error::GroupMismatch);
    }
    if !proj.is_surjective() {
        return Err(Error::BadHomomorphism("surjective"));
    }
    let q = proj.target();
    let (lg, lq) = (g.lattice(), q.lattice());
    let terms = nonzero(u)
        .map(|(c, a)| {
            let img = proj.image(lg.subgroup(lg.classes()[c].rep));
            (lq.class_of(lq.index_of(&img).expect("image is a subgroup")), a.clone())
        })
        .collect();
    Ok(accumulate(q, terms))
}

/// `Def` by the lattice normal subgroup `n`, landing over the cached quotient `G/N`.
pub fn deflate_by(u: &BurnsideElement, n: &Subgroup) -> Result<BurnsideElement> {
    let g = u.group();
    let i = g.lattice().index_of(n).ok_or(Error::NotSubgroup)?;
    deflate(u, &g.lattice().projection(g, i)?)
}

/// `Iso(φ)`: reindexes along the bijection of subgroup classes induced by `iso`.
pub fn transport(u: &BurnsideElement, iso: &GroupHom) -> Result<BurnsideElement> {
    let g = iso.source();
    if !Arc::ptr_eq(g, u.group()) {
        return Err(Error::GroupMismatch);
    }
    if !iso.is_isomorphism() {
        return Err(Error::BadHomomorphism("bijective"));
    }
    let h = iso.target();
    let (lg, lh) = (g.lattice(), h.lattice());
    let terms = nonzero(u)
        .map(|(c, a)| {
            let img = iso.image(lg.subgroup(lg.classes()[c].rep));
            (lh.class_of(lh.index_of(&img).expect("image is a subgroup")), a.clone())
        })
        .collect();
    Ok(accumulate(h, terms))
}

fn nonzero(u: &BurnsideElement) -> impl Iterator<Item = (usize, &Rational)> {
    u.coeffs().iter().enumerate().filter(|(_, a)| !a.is_zero())
}
