//! Concrete finite groups given by a Cayley table, with a faithful
//! permutation representation kept alongside as a witness.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bitset::BitSet;
use crate::burnside::MarksTable;
use crate::error::{Error, Result};
use crate::lattice::SubgroupLattice;
use crate::perm::Permutation;

/// Default bound on the order of any group the library will construct.
pub const DEFAULT_ORDER_CAP: usize = 2000;

pub type Group = Arc<FiniteGroup>;

/// A finite group on element ids `0..order`, with `0` the identity.
///
/// `mul(a, b)` corresponds to `perm(a) ∘ perm(b)` (apply `b` first).
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<u32>,
    perms: Vec<Permutation>,
    perm_index: HashMap<Permutation, u32>,
    elem_order: Vec<u32>,
    name: Option<String>,
    pub(crate) lattice: OnceLock<Arc<SubgroupLattice>>,
    pub(crate) marks: OnceLock<Arc<MarksTable>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("degree", &self.degree())
            .finish()
    }
}

/// Closure of `gens` under composition, with the default order cap.
pub fn group_from_generators(degree: usize, gens: &[Permutation]) -> Result<FiniteGroup> {
    FiniteGroup::from_generators(degree, gens, DEFAULT_ORDER_CAP)
}

/// `G × H`, acting on the disjoint union of the two domains.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    if g.order() * h.order() > cap {
        return Err(Error::OrderCapExceeded { cap });
    }
    let (dg, dh) = (g.degree(), h.degree());
    let degree = dg + dh;
    let gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|&a| g.perm(a as usize).embed(0, degree))
        .chain(h.generators().iter().map(|&b| h.perm(b as usize).embed(dg, degree)))
        .collect();
    let mut prod = FiniteGroup::from_generators(degree, &gens, cap)?;
    if let (Some(a), Some(b)) = (g.name(), h.name()) {
        prod.name = Some(format!("{a}x{b}"));
    }
    Ok(prod)
}

impl FiniteGroup {
    pub fn from_generators(degree: usize, gens: &[Permutation], cap: usize) -> Result<FiniteGroup> {
        for p in gens {
            if p.degree() != degree {
                return Err(Error::DomainMismatch {
                    expected: degree,
                    found: p.degree(),
                });
            }
        }
        let mut perms = vec![Permutation::identity(degree)];
        let mut perm_index = HashMap::new();
        perm_index.insert(perms[0].clone(), 0u32);
        let mut i = 0;
        while i < perms.len() {
            for s in gens {
                let p = s.compose(&perms[i]);
                if !perm_index.contains_key(&p) {
                    if perms.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    perm_index.insert(p.clone(), perms.len() as u32);
                    perms.push(p);
                }
            }
            i += 1;
        }
        let n = perms.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = perm_index[&perms[a].compose(&perms[b])];
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            inv[a] = perm_index[&perms[a].inverse()];
        }
        let mut generators = Vec::new();
        for s in gens {
            let id = perm_index[s];
            if id != 0 && !generators.contains(&id) {
                generators.push(id);
            }
        }
        let mut elem_order = vec![1u32; n];
        for (a, slot) in elem_order.iter_mut().enumerate() {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + a] as usize;
                k += 1;
            }
            *slot = k;
        }
        Ok(FiniteGroup {
            order: n,
            mul,
            inv,
            generators,
            perms,
            perm_index,
            elem_order,
            name: None,
            lattice: OnceLock::new(),
            marks: OnceLock::new(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn into_shared(self) -> Group {
        Arc::new(self)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The name, or a description by order if the group is anonymous.
    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("<group of order {}>", self.order))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.perms[0].degree()
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.elem_order[a] as usize
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn generator_ids(&self) -> Vec<usize> {
        self.generators.iter().map(|&g| g as usize).collect()
    }

    pub fn perm(&self, a: usize) -> &Permutation {
        &self.perms[a]
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        self.generators.iter().map(|&g| self.perms[g as usize].clone()).collect()
    }

    pub fn element_of_perm(&self, p: &Permutation) -> Option<usize> {
        self.perm_index.get(p).map(|&i| i as usize)
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().all(|&a| {
            gens.iter()
                .all(|&b| self.mul(a as usize, b as usize) == self.mul(b as usize, a as usize))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        self.elem_order.iter().any(|&k| k as usize == self.order)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    // ---- subgroups ----

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_set(BitSet::from_indices(self.order, [0]))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_set(BitSet::full(self.order))
    }

    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        self.closure_bounded(gens, usize::MAX).0
    }

    /// Closure that stops early once `limit` elements are reached; the flag reports completion.
    pub(crate) fn closure_bounded(&self, gens: &[usize], limit: usize) -> (Subgroup, bool) {
        let mut set = BitSet::new(self.order);
        set.insert(0);
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                    if queue.len() >= limit {
                        return (Subgroup::from_set(set), false);
                    }
                }
            }
            i += 1;
        }
        (Subgroup::from_set(set), true)
    }

    /// Validates that `set` is closed under multiplication and inverses.
    pub fn subgroup_from_set(&self, set: BitSet) -> Result<Subgroup> {
        if set.universe() != self.order || !self.is_closed(&set) {
            return Err(Error::NotSubgroup);
        }
        Ok(Subgroup::from_set(set))
    }

    pub fn subgroup_from_elements(&self, elems: &[usize]) -> Result<Subgroup> {
        if elems.iter().any(|&e| e >= self.order) {
            return Err(Error::NotSubgroup);
        }
        self.subgroup_from_set(BitSet::from_indices(self.order, elems.iter().copied()))
    }

    pub fn is_closed(&self, set: &BitSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        let members: Vec<usize> = set.iter().collect();
        members.iter().all(|&a| {
            set.contains(self.inv(a)) && members.iter().all(|&b| set.contains(self.mul(a, b)))
        })
    }

    pub fn conjugate_subgroup(&self, g: usize, h: &Subgroup) -> Subgroup {
        Subgroup::from_set(BitSet::from_indices(
            self.order,
            h.iter().map(|x| self.conjugate(g, x)),
        ))
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        let gens = self.small_generating_set(n);
        self.generators.iter().all(|&g| {
            let g = g as usize;
            gens.iter().all(|&x| n.contains(self.conjugate(g, x)))
        })
    }

    pub fn is_normal_in(&self, n: &Subgroup, h: &Subgroup) -> bool {
        let hg = self.small_generating_set(h);
        let ng = self.small_generating_set(n);
        hg.iter().all(|&g| ng.iter().all(|&x| n.contains(self.conjugate(g, x))))
    }

    /// Greedy generating set: scan elements by descending order, keep those outside the current span.
    pub fn small_generating_set(&self, h: &Subgroup) -> Vec<usize> {
        let mut elems: Vec<usize> = h.iter().filter(|&x| x != 0).collect();
        elems.sort_by(|&a, &b| {
            self.element_order(b)
                .cmp(&self.element_order(a))
                .then(a.cmp(&b))
        });
        let mut gens = Vec::new();
        let mut span = self.trivial_subgroup();
        for x in elems {
            if span.order() == h.order() {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        gens
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup::from_set(a.members.intersection(&b.members))
    }

    /// Subgroup generated by `a ∪ b`.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens = self.small_generating_set(a);
        gens.extend(self.small_generating_set(b));
        self.closure(&gens)
    }

    /// `|AB| = |A||B|/|A∩B|`.
    pub fn product_size(&self, a: &Subgroup, b: &Subgroup) -> usize {
        a.order() * b.order() / a.members.intersection_count(&b.members)
    }

    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut comms = BitSet::new(self.order);
        for x in a.iter() {
            for y in b.iter() {
                comms.insert(self.commutator(x, y));
            }
        }
        let gens: Vec<usize> = comms.iter().filter(|&c| c != 0).collect();
        self.closure(&gens)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let g = self.whole();
        self.commutator_subgroup(&g, &g)
    }

    /// `H = H⁽⁰⁾ ≥ H⁽¹⁾ ≥ …` until it stabilizes.
    pub fn derived_series(&self, h: &Subgroup) -> Vec<Subgroup> {
        let mut series = vec![h.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, last);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    /// `γ₁ = H, γᵢ₊₁ = [γᵢ, H]` until it stabilizes.
    pub fn lower_central_series(&self, h: &Subgroup) -> Vec<Subgroup> {
        let mut series = vec![h.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, h);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn subgroup_is_nilpotent(&self, h: &Subgroup) -> bool {
        self.lower_central_series(h).last().unwrap().is_trivial()
    }

    pub fn subgroup_is_solvable(&self, h: &Subgroup) -> bool {
        self.derived_series(h).last().unwrap().is_trivial()
    }

    pub fn subgroup_is_abelian(&self, h: &Subgroup) -> bool {
        let gens = self.small_generating_set(h);
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Nilpotency via "every Sylow subgroup is normal": for each prime p the
    /// p-elements of `h` number exactly the p-part of `|h|`.
    pub fn subgroup_is_nilpotent_sylow(&self, h: &Subgroup) -> bool {
        prime_factors(h.order() as u64).into_iter().all(|p| {
            let p = p as usize;
            let pp = p_part(h.order(), p);
            let count = h
                .iter()
                .filter(|&x| is_power_of(self.element_order(x), p))
                .count();
            count == pp
        })
    }

    pub fn is_nilpotent(&self) -> bool {
        self.subgroup_is_nilpotent(&self.whole())
    }

    pub fn is_nilpotent_sylow(&self) -> bool {
        self.subgroup_is_nilpotent_sylow(&self.whole())
    }

    pub fn is_solvable(&self) -> bool {
        self.subgroup_is_solvable(&self.whole())
    }

    /// Abelian with every non-identity element of the same prime order.
    pub fn subgroup_is_elementary_abelian(&self, h: &Subgroup) -> bool {
        if h.is_trivial() || !self.subgroup_is_abelian(h) {
            return false;
        }
        let p = prime_factors(h.order() as u64);
        p.len() == 1
            && h.iter()
                .filter(|&x| x != 0)
                .all(|x| self.element_order(x) as u64 == p[0])
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.small_generating_set(h);
        let set = BitSet::from_indices(
            self.order,
            self.elements()
                .filter(|&g| gens.iter().all(|&x| self.mul(g, x) == self.mul(x, g))),
        );
        Subgroup::from_set(set)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.small_generating_set(h);
        let set = BitSet::from_indices(
            self.order,
            self.elements()
                .filter(|&g| gens.iter().all(|&x| h.contains(self.conjugate(g, x)))),
        );
        Subgroup::from_set(set)
    }

    /// A Sylow p-subgroup, grown one normalizing p-element at a time.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        check_prime(p)?;
        let target = p_part(self.order, p as usize);
        let mut sylow = self.trivial_subgroup();
        while sylow.order() < target {
            let norm = self.normalizer(&sylow);
            let x = norm
                .iter()
                .filter(|&x| !sylow.contains(x))
                .find_map(|x| {
                    // p-part of x; it still lies outside `sylow` for some x
                    let k = self.element_order(x);
                    let y = self.pow(x, k / p_part(k, p as usize));
                    (!sylow.contains(y)).then_some(y)
                })
                .expect("a p-subgroup below Sylow order has a p-element in its normalizer");
            let mut gens = self.small_generating_set(&sylow);
            gens.push(x);
            sylow = self.closure(&gens);
        }
        Ok(sylow)
    }

    /// `O_p(G)`, the largest normal p-subgroup: the intersection of all Sylow p-subgroups.
    pub fn p_core(&self, p: u64) -> Result<Subgroup> {
        let sylow = self.sylow_subgroup(p)?;
        let mut core = sylow.members.clone();
        for g in self.elements() {
            core = core.intersection(&self.conjugate_subgroup(g, &sylow).members);
        }
        Ok(Subgroup::from_set(core))
    }

    /// Whether `G/O_p(G)` is cyclic, decided by looking for a coset whose
    /// order in the quotient equals `|G : O_p(G)|`.
    pub fn is_cyclic_mod_p(&self, p: u64) -> Result<bool> {
        let core = self.p_core(p)?;
        let index = self.order / core.order();
        Ok(self.elements().any(|g| {
            let mut x = g;
            let mut k = 1;
            while !core.contains(x) {
                x = self.mul(x, g);
                k += 1;
            }
            k == index
        }))
    }

    /// Element conjugacy classes, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.order);
        let mut classes = Vec::new();
        for x in self.elements() {
            if seen.contains(x) {
                continue;
            }
            seen.insert(x);
            let mut class = vec![x];
            let mut i = 0;
            while i < class.len() {
                let y = class[i];
                for &g in &self.generators {
                    let z = self.conjugate(g as usize, y);
                    if seen.insert(z) {
                        class.push(z);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// One representative per `H g K`, the smallest element id of each, ascending.
    pub fn double_cosets(&self, h: &Subgroup, k: &Subgroup) -> Vec<usize> {
        let mut seen = BitSet::new(self.order);
        let mut reps = Vec::new();
        let kk: Vec<usize> = k.iter().collect();
        for g in self.elements() {
            if seen.contains(g) {
                continue;
            }
            reps.push(g);
            for x in h.iter() {
                let xg = self.mul(x, g);
                for &y in &kk {
                    seen.insert(self.mul(xg, y));
                }
            }
        }
        reps
    }

    /// Size of the double coset `H g K`.
    pub fn double_coset_size(&self, h: &Subgroup, g: usize, k: &Subgroup) -> usize {
        let conj = self.conjugate_subgroup(g, k);
        h.order() * k.order() / h.members.intersection_count(&conj.members)
    }

    /// Checks the Cayley table and the permutation witnesses on all pairs.
    pub fn verify_table(&self) -> bool {
        let n = self.order;
        for a in 0..n {
            let mut row = BitSet::new(n);
            let mut col = BitSet::new(n);
            for b in 0..n {
                row.insert(self.mul(a, b));
                col.insert(self.mul(b, a));
                if self.perms[self.mul(a, b)] != self.perms[a].compose(&self.perms[b]) {
                    return false;
                }
            }
            if row.count() != n || col.count() != n {
                return false;
            }
            if self.mul(0, a) != a || self.mul(a, 0) != a || self.mul(a, self.inv(a)) != 0 {
                return false;
            }
            if self.inv(self.inv(a)) != a {
                return false;
            }
        }
        self.closure(&self.generator_ids()).order() == n
    }
}

/// A subgroup as a set of element ids of its parent group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: BitSet,
    order: usize,
}

impl Subgroup {
    pub(crate) fn from_set(members: BitSet) -> Self {
        let order = members.count();
        Subgroup { members, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.iter().collect()
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order, self.members)
    }
}

// ---- small number theory helpers ----

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Distinct prime divisors, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_squarefree(n: u64) -> bool {
    (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d * d))
}

/// Largest power of `p` dividing `n`.
pub(crate) fn p_part(mut n: usize, p: usize) -> usize {
    let mut pp = 1;
    while n.is_multiple_of(p) {
        n /= p;
        pp *= p;
    }
    pp
}

fn is_power_of(mut k: usize, p: usize) -> bool {
    while k.is_multiple_of(p) {
        k /= p;
    }
    k == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, d: usize) -> Permutation {
        Permutation::parse_cycles(s, d).unwrap()
    }

    fn s3() -> FiniteGroup {
        group_from_generators(3, &[perm("(0 1)", 3), perm("(0 1 2)", 3)]).unwrap()
    }

    fn s4() -> FiniteGroup {
        group_from_generators(4, &[perm("(0 1)", 4), perm("(0 1 2 3)", 4)]).unwrap()
    }

    fn d8() -> FiniteGroup {
        group_from_generators(4, &[perm("(0 1 2 3)", 4), perm("(0 2)", 4)]).unwrap()
    }

    fn a5() -> FiniteGroup {
        group_from_generators(5, &[perm("(0 1 2)", 5), perm("(0 1 2 3 4)", 5)]).unwrap()
    }

    #[test]
    fn trivial_group_from_no_generators() {
        let g = group_from_generators(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.verify_table());
        assert!(g.is_nilpotent() && g.is_solvable());
    }

    #[test]
    fn closure_orders() {
        assert_eq!(s3().order(), 6);
        assert_eq!(d8().order(), 8);
        assert_eq!(s4().order(), 24);
        assert_eq!(a5().order(), 60);
        assert!(s4().verify_table());
    }

    #[test]
    fn order_cap_and_domain_errors() {
        let gens = [perm("(0 1)", 5), perm("(0 1 2 3 4)", 5)];
        assert_eq!(
            FiniteGroup::from_generators(5, &gens, 100).unwrap_err(),
            Error::OrderCapExceeded { cap: 100 }
        );
        assert!(matches!(
            group_from_generators(4, &[perm("(0 1)", 3)]),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn products() {
        let c2 = group_from_generators(2, &[perm("(0 1)", 2)]).unwrap();
        let c3 = group_from_generators(3, &[perm("(0 1 2)", 3)]).unwrap();
        let v4 = direct_product(&c2, &c2, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.elements().filter(|&x| v4.element_order(x) == 2).count(), 3);
        let c6 = direct_product(&c2, &c3, DEFAULT_ORDER_CAP).unwrap();
        assert!(c6.is_cyclic());
        let triv = group_from_generators(1, &[]).unwrap();
        assert_eq!(direct_product(&triv, &s3(), DEFAULT_ORDER_CAP).unwrap().order(), 6);
        assert!(direct_product(&s4(), &s4(), 100).is_err());
    }

    #[test]
    fn nilpotency_and_solvability() {
        assert!(!s3().is_nilpotent());
        assert!(!s3().is_nilpotent_sylow());
        assert!(d8().is_nilpotent() && d8().is_nilpotent_sylow());
        assert!(s4().is_solvable());
        assert!(!a5().is_solvable());
        let g = s4();
        let derived: Vec<usize> = g.derived_series(&g.whole()).iter().map(|h| h.order()).collect();
        assert_eq!(derived, vec![24, 12, 4, 1]);
        let s3 = s3();
        let lcs: Vec<usize> = s3.lower_central_series(&s3.whole()).iter().map(|h| h.order()).collect();
        assert_eq!(lcs, vec![6, 3]);
    }

    #[test]
    fn p_cores() {
        let c2 = group_from_generators(2, &[perm("(0 1)", 2)]).unwrap();
        assert_eq!(c2.p_core(2).unwrap().order(), 2);
        let g = s4();
        assert_eq!(g.p_core(2).unwrap().order(), 4);
        assert_eq!(g.p_core(3).unwrap().order(), 1);
        assert_eq!(g.sylow_subgroup(2).unwrap().order(), 8);
        assert_eq!(a5().sylow_subgroup(5).unwrap().order(), 5);
        assert_eq!(g.p_core(4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn cyclic_modulo_p() {
        let c6 = group_from_generators(6, &[perm("(0 1 2 3 4 5)", 6)]).unwrap();
        for p in [2, 3, 5, 7] {
            assert!(c6.is_cyclic_mod_p(p).unwrap());
        }
        assert!(!s4().is_cyclic_mod_p(2).unwrap());
        assert!(!s4().is_cyclic_mod_p(3).unwrap());
        assert!(d8().is_cyclic_mod_p(2).unwrap());
        assert!(!d8().is_cyclic_mod_p(3).unwrap());
        assert!(s3().is_cyclic_mod_p(3).unwrap());
        assert_eq!(s3().is_cyclic_mod_p(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn centers() {
        assert!(s3().center().is_trivial());
        assert_eq!(d8().center().order(), 2);
        let c2 = group_from_generators(2, &[perm("(0 1)", 2)]).unwrap();
        assert_eq!(c2.center().order(), 2);
    }

    #[test]
    fn double_coset_examples() {
        let g = s3();
        let whole = g.whole();
        assert_eq!(g.double_cosets(&whole, &whole), vec![0]);
        let t = g.element_of_perm(&perm("(0 1)", 3)).unwrap();
        let c2 = g.closure(&[t]);
        let reps = g.double_cosets(&c2, &c2);
        assert_eq!(reps.len(), 2);
        let sizes: Vec<usize> = reps.iter().map(|&r| g.double_coset_size(&c2, r, &c2)).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 6);
        let one = g.trivial_subgroup();
        assert_eq!(g.double_cosets(&one, &one).len(), 6);
    }

    #[test]
    fn subgroup_validation() {
        let g = s3();
        let t = g.element_of_perm(&perm("(0 1 2)", 3)).unwrap();
        let c3 = g.closure(&[t]);
        assert_eq!(c3.order(), 3);
        assert!(g.is_normal(&c3));
        assert!(g.subgroup_from_set(c3.members().clone()).is_ok());
        let s = g.element_of_perm(&perm("(0 1)", 3)).unwrap();
        assert!(!g.is_normal(&g.closure(&[s])));
        assert_eq!(g.subgroup_from_elements(&[0, t]), Err(Error::NotSubgroup));
    }

    #[test]
    fn number_theory() {
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert!(is_squarefree(30) && !is_squarefree(12) && is_squarefree(1));
        assert_eq!(p_part(24, 2), 8);
    }
}
