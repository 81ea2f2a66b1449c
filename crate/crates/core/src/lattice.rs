//! The lattice of all subgroups of a finite group: inclusion order,
//! conjugacy classes, normalizers and the Möbius function.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Group, Subgroup};
use crate::hom::{self, GroupHom};

/// A conjugacy class of subgroups; `rep` is its smallest lattice index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    pub rep: usize,
    pub members: Vec<usize>,
}

/// A group cached next to the lattice together with the element map that ties
/// it to the parent: `sub → parent` for subgroups, `parent → quotient` for quotients.
struct Attached {
    group: Group,
    map: Vec<usize>,
}

pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    index: HashMap<BitSet, usize>,
    below: Vec<BitSet>,
    above: Vec<BitSet>,
    classes: Vec<SubgroupClass>,
    class_of: Vec<usize>,
    normalizers: Vec<usize>,
    mobius: Vec<i64>,
    subgroup_groups: Vec<OnceLock<Attached>>,
    quotient_groups: Vec<OnceLock<Attached>>,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("subgroups", &self.subgroups.len())
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl FiniteGroup {
    /// The subgroup lattice, built on first use and shared afterwards.
    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        self.lattice
            .get_or_init(|| Arc::new(enumerate_subgroups(self)))
    }
}

/// All subgroups: cyclic subgroups joined pairwise with cyclic subgroups until no new subgroup appears.
pub fn enumerate_subgroups(g: &FiniteGroup) -> SubgroupLattice {
    let n = g.order();
    let mut found: HashMap<BitSet, usize> = HashMap::new();
    let mut subs: Vec<(Subgroup, Vec<usize>)> = Vec::new();

    let mut cyclic_gens = Vec::new();
    for x in g.elements() {
        let c = g.closure(&[x]);
        if !found.contains_key(c.members()) {
            found.insert(c.members().clone(), subs.len());
            subs.push((c, if x == 0 { vec![] } else { vec![x] }));
            if x != 0 {
                cyclic_gens.push(x);
            }
        }
    }

    let mut i = 0;
    while i < subs.len() {
        let (h, gens) = subs[i].clone();
        if h.order() < n {
            for &c in &cyclic_gens {
                if h.contains(c) {
                    continue;
                }
                let mut joined = gens.clone();
                joined.push(c);
                let (j, _) = g.closure_bounded(&joined, n);
                if !found.contains_key(j.members()) {
                    found.insert(j.members().clone(), subs.len());
                    subs.push((j, joined));
                }
            }
        }
        i += 1;
    }

    let mut subgroups: Vec<Subgroup> = subs.into_iter().map(|(s, _)| s).collect();
    subgroups.sort();
    SubgroupLattice::from_subgroups(g, subgroups)
}

impl SubgroupLattice {
    fn from_subgroups(g: &FiniteGroup, subgroups: Vec<Subgroup>) -> Self {
        let m = subgroups.len();
        let index: HashMap<BitSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();

        let mut below = vec![BitSet::new(m); m];
        let mut above = vec![BitSet::new(m); m];
        for h in 0..m {
            for x in 0..=h {
                if subgroups[x].order() <= subgroups[h].order()
                    && subgroups[h].order().is_multiple_of(subgroups[x].order())
                    && subgroups[x].is_subgroup_of(&subgroups[h])
                {
                    below[h].insert(x);
                    above[x].insert(h);
                }
            }
        }

        let gens: Vec<usize> = g.generator_ids();
        let mut class_of = vec![usize::MAX; m];
        let mut classes = Vec::new();
        for i in 0..m {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[i] = c;
            let mut members = vec![i];
            let mut k = 0;
            while k < members.len() {
                let s = &subgroups[members[k]];
                for &t in &gens {
                    let conj = g.conjugate_subgroup(t, s);
                    let j = index[conj.members()];
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        members.push(j);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(SubgroupClass { rep: i, members });
        }

        let normalizers = subgroups
            .iter()
            .map(|s| index[g.normalizer(s).members()])
            .collect();

        let mut mobius = vec![0i64; m * m];
        for x in 0..m {
            mobius[x * m + x] = 1;
            for h in above[x].iter().filter(|&h| h != x) {
                let interval = above[x].intersection(&below[h]);
                let sum: i64 = interval
                    .iter()
                    .filter(|&z| z != h)
                    .map(|z| mobius[x * m + z])
                    .sum();
                mobius[x * m + h] = -sum;
            }
        }

        SubgroupLattice {
            subgroup_groups: (0..m).map(|_| OnceLock::new()).collect(),
            quotient_groups: (0..m).map(|_| OnceLock::new()).collect(),
            subgroups,
            index,
            below,
            above,
            classes,
            class_of,
            normalizers,
            mobius,
        }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn index_of(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(s.members()).copied()
    }

    pub fn index_of_set(&self, s: &BitSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn leq(&self, x: usize, h: usize) -> bool {
        self.below[h].contains(x)
    }

    /// Indices of subgroups contained in `h` (including `h`).
    pub fn below(&self, h: usize) -> &BitSet {
        &self.below[h]
    }

    pub fn above(&self, x: usize) -> &BitSet {
        &self.above[x]
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.rep).collect()
    }

    pub fn normalizer(&self, i: usize) -> &Subgroup {
        &self.subgroups[self.normalizers[i]]
    }

    pub fn normalizer_index(&self, i: usize) -> usize {
        self.normalizers[i]
    }

    /// μ(x, h) on the subgroup poset.
    pub fn mobius(&self, x: usize, h: usize) -> Result<i64> {
        if !self.leq(x, h) {
            return Err(Error::NotContained { lower: x, upper: h });
        }
        Ok(self.mobius[x * self.len() + h])
    }

    pub(crate) fn mobius_unchecked(&self, x: usize, h: usize) -> i64 {
        self.mobius[x * self.len() + h]
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.classes[self.class_of[i]].members.len() == 1
    }

    /// Indices of normal subgroups, ascending.
    pub fn normal_subgroups(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_normal(i)).collect()
    }

    pub fn minimal_normal_subgroups(&self) -> Result<Vec<usize>> {
        if self.len() == 1 {
            return Err(Error::TrivialGroup);
        }
        let normals: Vec<usize> = self.normal_subgroups().into_iter().filter(|&i| i != 0).collect();
        Ok(normals
            .iter()
            .copied()
            .filter(|&n| !normals.iter().any(|&m| m != n && self.leq(m, n)))
            .collect())
    }

    /// Complements of the normal subgroup `n`: `K ∩ N = 1` and `|K||N| = |G|`.
    pub fn complements(&self, n: usize) -> Result<Vec<usize>> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let g_order = self.subgroups[self.top()].order();
        let nn = &self.subgroups[n];
        Ok((0..self.len())
            .filter(|&k| {
                let ks = &self.subgroups[k];
                ks.order() * nn.order() == g_order
                    && ks.members().intersection_count(nn.members()) == 1
            })
            .collect())
    }

    /// Proper subgroups with nothing strictly between them and the whole group.
    pub fn maximal_subgroups(&self) -> Vec<usize> {
        let top = self.top();
        (0..top)
            .filter(|&m| self.above[m].count() == 2)
            .collect()
    }

    /// Intersection of the maximal subgroups (the whole group when there are none).
    pub fn frattini_subgroup(&self) -> usize {
        let mut acc = self.subgroups[self.top()].members().clone();
        for m in self.maximal_subgroups() {
            acc = acc.intersection(self.subgroups[m].members());
        }
        self.index[&acc]
    }

    /// Subgroup `i` as a group, with the inclusion into `g`. Cached.
    pub fn inclusion(&self, g: &Group, i: usize) -> GroupHom {
        let a = self.subgroup_groups[i].get_or_init(|| {
            let (k, inc) = hom::subgroup_group(g, &self.subgroups[i])
                .expect("lattice members are subgroups");
            Attached {
                group: k,
                map: (0..inc.source().order()).map(|x| inc.apply(x)).collect(),
            }
        });
        GroupHom::new_unchecked(a.group.clone(), g.clone(), a.map.clone())
    }

    /// `g / N_i` with its projection. Cached.
    pub fn projection(&self, g: &Group, i: usize) -> Result<GroupHom> {
        if !self.is_normal(i) {
            return Err(Error::NotNormal);
        }
        let a = self.quotient_groups[i].get_or_init(|| {
            let (q, proj) = hom::quotient(g, &self.subgroups[i]).expect("normal subgroup");
            Attached {
                group: q,
                map: (0..g.order()).map(|x| proj.apply(x)).collect(),
            }
        });
        Ok(GroupHom::new_unchecked(g.clone(), a.group.clone(), a.map.clone()))
    }

    /// Label `order:k`, where `k` counts classes of the same order in lattice order.
    pub fn class_label(&self, class: usize) -> String {
        let order = self.subgroups[self.classes[class].rep].order();
        let k = self.classes[..class]
            .iter()
            .filter(|c| self.subgroups[c.rep].order() == order)
            .count();
        format!("{order}:{k}")
    }

    pub fn subgroup_label(&self, i: usize) -> String {
        let order = self.subgroups[i].order();
        let k = self.subgroups[..i].iter().filter(|s| s.order() == order).count();
        format!("{order}:{k}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_from_generators;
    use crate::perm::Permutation;

    fn group(d: usize, gens: &[&str]) -> Group {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s, d).unwrap())
            .collect();
        Arc::new(group_from_generators(d, &gens).unwrap())
    }

    fn orders(l: &SubgroupLattice, idx: &[usize]) -> Vec<usize> {
        idx.iter().map(|&i| l.subgroup(i).order()).collect()
    }

    #[test]
    fn trivial_lattice() {
        let g = group(1, &[]);
        let l = g.lattice();
        assert_eq!(l.len(), 1);
        assert_eq!(l.mobius(0, 0).unwrap(), 1);
        assert_eq!(l.minimal_normal_subgroups(), Err(Error::TrivialGroup));
        assert_eq!(l.frattini_subgroup(), 0);
    }

    #[test]
    fn s3_lattice() {
        let g = group(3, &["(0 1)", "(0 1 2)"]);
        let l = g.lattice();
        assert_eq!(l.len(), 6);
        assert_eq!(l.classes().len(), 4);
        assert_eq!(l.mobius(0, l.top()).unwrap(), 3);
        assert_eq!(orders(l, &l.normal_subgroups()), vec![1, 3, 6]);
        assert_eq!(l.frattini_subgroup(), 0);
        let c3 = l.normal_subgroups()[1];
        let comps = l.complements(c3).unwrap();
        assert_eq!(orders(l, &comps), vec![2, 2, 2]);
        assert_eq!(l.complements(1), Err(Error::NotNormal));
    }

    #[test]
    fn s4_lattice() {
        let g = group(4, &["(0 1)", "(0 1 2 3)"]);
        let l = g.lattice();
        assert_eq!(l.len(), 30);
        assert_eq!(l.classes().len(), 11);
        assert_eq!(orders(l, &l.normal_subgroups()), vec![1, 4, 12, 24]);
        assert_eq!(orders(l, &l.minimal_normal_subgroups().unwrap()), vec![4]);
    }

    #[test]
    fn cyclic_lattices() {
        let c5 = group(5, &["(0 1 2 3 4)"]);
        let l = c5.lattice();
        assert_eq!(l.mobius(0, 1).unwrap(), -1);
        assert_eq!(l.minimal_normal_subgroups().unwrap(), vec![1]);
        assert_eq!(l.frattini_subgroup(), 0);

        let c4 = group(4, &["(0 1 2 3)"]);
        let l = c4.lattice();
        assert_eq!(l.subgroup(l.frattini_subgroup()).order(), 2);
        let c2 = l.normal_subgroups()[1];
        assert!(l.complements(c2).unwrap().is_empty());
        assert_eq!(l.complements(l.top()).unwrap(), vec![0]);
    }

    #[test]
    fn klein_minimal_normals() {
        let v4 = group(4, &["(0 1)", "(2 3)"]);
        let l = v4.lattice();
        assert_eq!(orders(l, &l.minimal_normal_subgroups().unwrap()), vec![2, 2, 2]);
        assert_eq!(l.normal_subgroups().len(), l.len());
    }

    #[test]
    fn mobius_rejects_unrelated_pairs() {
        let g = group(3, &["(0 1)", "(0 1 2)"]);
        let l = g.lattice();
        assert!(matches!(l.mobius(1, 2), Err(Error::NotContained { .. })));
    }

    #[test]
    fn class_sizes_match_normalizer_index() {
        let g = group(4, &["(0 1)", "(0 1 2 3)"]);
        let l = g.lattice();
        for c in l.classes() {
            assert_eq!(c.members.len() * l.normalizer(c.rep).order(), 24);
        }
    }
}
