//! Isomorphism testing: cheap invariants first, then a backtracking search
//! over images of a small generating set.

use std::collections::BTreeMap;

use crate::group::Group;
use crate::hom::GroupHom;

/// Invariants preserved by isomorphism, compared before any search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInvariants {
    pub order: usize,
    /// (element order, conjugacy class size) -> number of elements.
    pub order_class_profile: BTreeMap<(usize, usize), usize>,
    pub abelianization_order: usize,
    pub center_order: usize,
}

impl GroupInvariants {
    pub fn of(g: &Group) -> Self {
        let mut profile = BTreeMap::new();
        for class in g.conjugacy_classes() {
            *profile
                .entry((g.element_order(class[0]), class.len()))
                .or_insert(0) += class.len();
        }
        GroupInvariants {
            order: g.order(),
            order_class_profile: profile,
            abelianization_order: g.order() / g.derived_subgroup().order(),
            center_order: g.center().order(),
        }
    }
}

/// Returns an isomorphism `g → h` if one exists.
pub fn are_isomorphic(g: &Group, h: &Group) -> Option<GroupHom> {
    if g.order() != h.order() {
        return None;
    }
    if GroupInvariants::of(g) != GroupInvariants::of(h) {
        return None;
    }
    find_isomorphism(g, h)
}

/// The backtracking search alone, without invariant screening.
pub fn find_isomorphism(g: &Group, h: &Group) -> Option<GroupHom> {
    if g.order() != h.order() {
        return None;
    }
    let gens = g.small_generating_set(&g.whole());
    if gens.is_empty() {
        return Some(GroupHom::new_unchecked(g.clone(), h.clone(), vec![0]));
    }
    let g_class_size = class_sizes(g);
    let h_class_size = class_sizes(h);
    let h_classes = h.conjugacy_classes();

    // Candidate images: same element order and same class size. For the first
    // generator one representative per class suffices, since composing with
    // an inner automorphism of `h` moves any image within its class.
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let fits = |y: usize| {
                h.element_order(y) == g.element_order(x) && h_class_size[y] == g_class_size[x]
            };
            if i == 0 {
                h_classes.iter().map(|c| c[0]).filter(|&y| fits(y)).collect()
            } else {
                h.elements().filter(|&y| fits(y)).collect()
            }
        })
        .collect();

    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &candidates, &mut images)
        .map(|map| GroupHom::new_unchecked(g.clone(), h.clone(), map))
}

fn class_sizes(g: &Group) -> Vec<usize> {
    let mut size = vec![0; g.order()];
    for class in g.conjugacy_classes() {
        for &x in &class {
            size[x] = class.len();
        }
    }
    size
}

fn search(
    g: &Group,
    h: &Group,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let depth = images.len();
    if depth == gens.len() {
        return extend(g, h, gens, images);
    }
    for &y in &candidates[depth] {
        images.push(y);
        if extend(g, h, &gens[..=depth], images).is_some() {
            if let Some(found) = search(g, h, gens, candidates, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

/// Extends the generator assignment along the Cayley graph of `⟨gens⟩`, failing
/// on any inconsistency or any collision (a nontrivial kernel).
fn extend(g: &Group, h: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(images) {
            let xs = g.mul(x, s);
            let yt = h.mul(map[x], t);
            if map[xs] == usize::MAX {
                if used[yt] {
                    return None;
                }
                used[yt] = true;
                map[xs] = yt;
                queue.push(xs);
            } else if map[xs] != yt {
                return None;
            }
        }
        i += 1;
    }
    Some(map)
}
