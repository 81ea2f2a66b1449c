#![allow(dead_code)]

pub mod identities;
pub mod oracles;

use std::collections::HashMap;

use burnside_core::catalog::Catalog;
use burnside_core::{BurnsideElement, Group, GroupHom, Subgroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_b175;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn catalog_groups(max_order: usize) -> Vec<Group> {
    let cat = Catalog::standard();
    (0..cat.len())
        .filter(|&i| cat.entries()[i].order <= max_order)
        .map(|i| cat.group(i).unwrap())
        .collect()
}

pub fn random_integral(g: &Group, rng: &mut ChaCha8Rng) -> BurnsideElement {
    let n = g.lattice().classes().len();
    let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
    BurnsideElement::from_integers(g, &coeffs).unwrap()
}

/// Inclusion of the lattice subgroup `h` of `g`.
pub fn inclusion(g: &Group, h: &Subgroup) -> GroupHom {
    let l = g.lattice();
    l.inclusion(g, l.index_of(h).expect("lattice member"))
}

/// Preimage table of an injective hom: target id → source id.
pub fn preimages(f: &GroupHom) -> HashMap<usize, usize> {
    (0..f.source().order()).map(|x| (f.apply(x), x)).collect()
}

/// The subgroup of `f`'s source whose image is `h`; `h` must lie in the image.
pub fn pull_back(f: &GroupHom, h: &Subgroup) -> Subgroup {
    let pre = preimages(f);
    let elems: Vec<usize> = h.iter().map(|x| pre[&x]).collect();
    f.source().subgroup_from_elements(&elems).unwrap()
}

pub fn top_idempotent(g: &Group) -> BurnsideElement {
    let l = g.lattice();
    BurnsideElement::idempotent(g, l.class_of(l.top()))
}
