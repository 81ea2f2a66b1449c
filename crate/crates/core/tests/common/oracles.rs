//! Slow reference computations used as test oracles.

use std::collections::BTreeSet;

use burnside_core::{BurnsideElement, FiniteGroup, Group};

/// Every closed subset containing the identity, found by a depth-first
/// include/exclude search over element ids. A branch dies as soon as some
/// product or inverse of chosen elements was already excluded.
pub fn brute_force_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    fn consistent(g: &FiniteGroup, chosen: &[bool], upto: usize) -> bool {
        for a in 0..upto {
            if !chosen[a] {
                continue;
            }
            let ia = g.inv(a);
            if ia < upto && !chosen[ia] {
                return false;
            }
            for b in 0..upto {
                if chosen[b] {
                    let p = g.mul(a, b);
                    if p < upto && !chosen[p] {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(g: &FiniteGroup, chosen: &mut Vec<bool>, i: usize, out: &mut BTreeSet<Vec<usize>>) {
        if !consistent(g, chosen, i) {
            return;
        }
        if i == g.order() {
            out.insert((0..i).filter(|&x| chosen[x]).collect());
            return;
        }
        chosen[i] = true;
        go(g, chosen, i + 1, out);
        chosen[i] = false;
        go(g, chosen, i + 1, out);
    }
    let mut chosen = vec![false; g.order()];
    chosen[0] = true;
    let mut out = BTreeSet::new();
    go(g, &mut chosen, 1, &mut out);
    out
}

/// `[G/H]·[G/K] = Σ_{g ∈ H\G/K} [G/(H ∩ gKg⁻¹)]`.
pub fn double_coset_product(g: &Group, hc: usize, kc: usize) -> BurnsideElement {
    let l = g.lattice();
    let h = l.subgroup(l.classes()[hc].rep);
    let k = l.subgroup(l.classes()[kc].rep);
    let mut coeffs = vec![0i64; l.classes().len()];
    for x in g.double_cosets(h, k) {
        let s = g.intersection(h, &g.conjugate_subgroup(x, k));
        coeffs[l.class_of(l.index_of(&s).unwrap())] += 1;
    }
    BurnsideElement::from_integers(g, &coeffs).unwrap()
}
