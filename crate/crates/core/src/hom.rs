//! Homomorphisms between concrete groups, quotients and subgroup embeddings.

use std::fmt;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Group, Subgroup};

#[derive(Clone)]
pub struct GroupHom {
    source: Group,
    target: Group,
    map: Vec<u32>,
    kernel: Subgroup,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupHom")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("kernel_order", &self.kernel.order())
            .finish()
    }
}

impl GroupHom {
    /// Checks `map(x s) = map(x) map(s)` for every element `x` and generator `s`,
    /// which is enough for a homomorphism.
    pub fn new(source: Group, target: Group, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() || map.iter().any(|&y| y >= target.order()) {
            return Err(Error::BadHomomorphism("a total map into the target"));
        }
        if map[0] != 0 {
            return Err(Error::BadHomomorphism("identity-preserving"));
        }
        for x in source.elements() {
            for &s in source.generators() {
                let s = s as usize;
                if map[source.mul(x, s)] != target.mul(map[x], map[s]) {
                    return Err(Error::BadHomomorphism("multiplicative"));
                }
            }
        }
        Ok(Self::new_unchecked(source, target, map))
    }

    pub(crate) fn new_unchecked(source: Group, target: Group, map: Vec<usize>) -> Self {
        let kernel = Subgroup::from_set(BitSet::from_indices(
            source.order(),
            (0..map.len()).filter(|&x| map[x] == 0),
        ));
        GroupHom {
            map: map.into_iter().map(|y| y as u32).collect(),
            source,
            target,
            kernel,
        }
    }

    pub fn from_fn(source: Group, target: Group, f: impl Fn(usize) -> usize) -> Result<Self> {
        let map = source.elements().map(f).collect();
        GroupHom::new(source, target, map)
    }

    pub fn identity(g: &Group) -> Self {
        Self::new_unchecked(g.clone(), g.clone(), g.elements().collect())
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn is_injective(&self) -> bool {
        self.kernel.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.source.order() == self.kernel.order() * self.target.order()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Image of a subgroup of the source, as a subgroup of the target.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_set(BitSet::from_indices(
            self.target.order(),
            h.iter().map(|x| self.apply(x)),
        ))
    }

    /// Preimage of a subgroup of the target.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_set(BitSet::from_indices(
            self.source.order(),
            self.source.elements().filter(|&x| h.contains(self.apply(x))),
        ))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if !Arc::ptr_eq(&self.target, &other.source) {
            return Err(Error::GroupMismatch);
        }
        let map = self.map.iter().map(|&y| other.apply(y as usize)).collect();
        Ok(Self::new_unchecked(self.source.clone(), other.target.clone(), map))
    }

    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_isomorphism() {
            return Err(Error::BadHomomorphism("bijective"));
        }
        let mut map = vec![0; self.target.order()];
        for x in self.source.elements() {
            map[self.apply(x)] = x;
        }
        Ok(Self::new_unchecked(self.target.clone(), self.source.clone(), map))
    }

    /// Given surjections `self: G → A` and `other: G → B` with `ker self ≤ ker other`,
    /// the induced homomorphism `A → B`.
    pub fn factor_through(&self, other: &GroupHom) -> Result<GroupHom> {
        if !Arc::ptr_eq(&self.source, &other.source) {
            return Err(Error::GroupMismatch);
        }
        if !self.is_surjective() || !self.kernel.is_subgroup_of(&other.kernel) {
            return Err(Error::BadHomomorphism("factorable"));
        }
        let mut map = vec![usize::MAX; self.target.order()];
        for g in self.source.elements() {
            map[self.apply(g)] = other.apply(g);
        }
        GroupHom::new(self.target.clone(), other.target.clone(), map)
    }
}

/// `G/N` with its regular action on cosets, and the projection `G → G/N`.
pub fn quotient(g: &Group, n: &Subgroup) -> Result<(Group, GroupHom)> {
    if !g.is_closed(n.members()) {
        return Err(Error::NotSubgroup);
    }
    if !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut coset = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for y in n.iter() {
            coset[g.mul(x, y)] = c;
        }
    }
    let m = reps.len();
    let action = |x: usize| {
        let images = reps.iter().map(|&r| coset[g.mul(x, r)] as u32).collect();
        crate::perm::Permutation::new(images).expect("left multiplication permutes cosets")
    };
    let gens: Vec<_> = g.generators().iter().map(|&s| action(s as usize)).collect();
    let q = Arc::new(FiniteGroup::from_generators(m, &gens, usize::MAX)?);
    let map: Vec<usize> = g
        .elements()
        .map(|x| {
            q.element_of_perm(&action(x))
                .expect("coset action lies in the quotient")
        })
        .collect();
    let hom = GroupHom::new_unchecked(g.clone(), q.clone(), map);
    debug_assert_eq!(hom.kernel(), n);
    Ok((q, hom))
}

/// `H` as a group in its own right, with the inclusion `H → G`.
pub fn subgroup_group(g: &Group, h: &Subgroup) -> Result<(Group, GroupHom)> {
    if h.members().universe() != g.order() || !g.is_closed(h.members()) {
        return Err(Error::NotSubgroup);
    }
    let gens: Vec<_> = g
        .small_generating_set(h)
        .into_iter()
        .map(|x| g.perm(x).clone())
        .collect();
    let k = Arc::new(FiniteGroup::from_generators(g.degree(), &gens, usize::MAX)?);
    let map = k
        .elements()
        .map(|x| g.element_of_perm(k.perm(x)).expect("subgroup element lies in parent"))
        .collect();
    let inc = GroupHom::new_unchecked(k.clone(), g.clone(), map);
    Ok((k, inc))
}
