//! Structural properties of β, the kernels, and group predicates over the
//! whole catalog.

mod common;

use burnside_core::bgroup::{beta, beta_candidates, is_b_group, is_b_group_by_definition, m_table};
use burnside_core::burnside::Rational;
use burnside_core::catalog::Catalog;
use burnside_core::group::{is_prime, prime_factors};
use burnside_core::iso::{find_isomorphism, GroupInvariants};
use burnside_core::kernel::{in_kernel, kernel_basis, SubgroupFamily};
use burnside_core::{are_isomorphic, quotient, BurnsideElement, Group};
use num_traits::Zero;

use common::{catalog_groups, random_integral, rng, top_idempotent};

fn all() -> Vec<Group> {
    catalog_groups(usize::MAX)
}

#[test]
fn catalog_entries_build_with_recorded_orders() {
    let cat = Catalog::standard();
    for (i, e) in cat.entries().iter().enumerate() {
        let g = cat.group(i).unwrap();
        assert_eq!(g.order(), e.order, "{}", e.name);
        assert!(g.verify_table(), "{}", e.name);
    }
    let mut names: Vec<&str> = cat.entries().iter().map(|e| e.name.as_str()).collect();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), cat.len());
}

#[test]
fn beta_is_a_b_group_and_idempotent() {
    for g in all() {
        let b = beta(&g);
        assert!(is_b_group(b.group()), "{}", g.label());
        let bb = beta(b.group());
        assert!(are_isomorphic(b.group(), bb.group()).is_some(), "{}", g.label());
    }
}

#[test]
fn maximal_choices_give_isomorphic_quotients() {
    for g in all() {
        let l = g.lattice();
        let quotients: Vec<Group> = beta_candidates(&g)
            .into_iter()
            .map(|n| l.projection(&g, n).unwrap().target().clone())
            .collect();
        for q in &quotients[1..] {
            assert!(are_isomorphic(&quotients[0], q).is_some(), "{}", g.label());
        }
    }
}

#[test]
fn nonzero_m_iff_same_beta_as_quotient() {
    for g in all() {
        let l = g.lattice();
        let b = beta(&g);
        for (m_idx, m) in m_table(&g) {
            let q = l.projection(&g, m_idx).unwrap().target().clone();
            let same = are_isomorphic(b.group(), beta(&q).group()).is_some();
            assert_eq!(!m.is_zero(), same, "{} M={m_idx}", g.label());
        }
    }
}

#[test]
fn fast_b_group_test_matches_definition() {
    for g in all() {
        assert_eq!(is_b_group(&g), is_b_group_by_definition(&g), "{}", g.label());
    }
}

#[test]
fn scaled_top_idempotent_is_integral_and_restricts_to_zero() {
    for g in all() {
        let e = top_idempotent(&g).scale(&Rational::from_integer(g.order().into()));
        assert!(e.is_integral(), "{}", g.label());
        let marks = e.marks();
        let top_class = marks.len() - 1;
        assert!(marks[..top_class].iter().all(Zero::is_zero));
        if !g.is_nilpotent() {
            assert!(in_kernel(&e, SubgroupFamily::Nilpotent), "{}", g.label());
            assert!(kernel_basis(&g, SubgroupFamily::Nilpotent).contains_by_basis(&e));
        }
    }
}

#[test]
fn kernel_ranks_and_containment() {
    for g in all() {
        let nil = kernel_basis(&g, SubgroupFamily::Nilpotent);
        let sol = kernel_basis(&g, SubgroupFamily::Solvable);
        let flags_n = SubgroupFamily::Nilpotent.class_flags(&g);
        let flags_s = SubgroupFamily::Solvable.class_flags(&g);
        assert_eq!(nil.rank(), flags_n.iter().filter(|f| !**f).count(), "{}", g.label());
        assert_eq!(sol.rank(), flags_s.iter().filter(|f| !**f).count(), "{}", g.label());
        for v in sol.basis() {
            assert!(in_kernel(v, SubgroupFamily::Solvable));
            assert!(in_kernel(v, SubgroupFamily::Nilpotent));
            assert!(nil.contains_by_basis(v));
        }
        for v in nil.basis() {
            assert!(in_kernel(v, SubgroupFamily::Nilpotent));
        }
    }
}

#[test]
fn kernel_membership_by_marks_matches_basis_solve() {
    let mut rng = rng();
    for g in catalog_groups(24) {
        for fam in [SubgroupFamily::Nilpotent, SubgroupFamily::Solvable] {
            let kb = kernel_basis(&g, fam);
            let mut candidates: Vec<BurnsideElement> = (0..20).map(|_| random_integral(&g, &mut rng)).collect();
            for (i, v) in kb.basis().iter().enumerate() {
                let w = random_integral(&g, &mut rng);
                candidates.push(&v.scale(&Rational::from_integer((i as i64 + 2).into())) + &kb.basis()[0]);
                candidates.push(&w + v);
                candidates.push(v.scale(&Rational::new(1.into(), 2.into())));
            }
            for u in &candidates {
                assert_eq!(in_kernel(u, fam), kb.contains_by_basis(u), "{} {u}", g.label());
            }
        }
    }
}

#[test]
fn kernel_basis_is_saturated() {
    // halving a basis vector never lands in the lattice
    for g in all() {
        let kb = kernel_basis(&g, SubgroupFamily::Nilpotent);
        for v in kb.basis() {
            for p in [2i64, 3, 5] {
                let w = v.scale(&Rational::new(1.into(), p.into()));
                assert!(!kb.contains_by_basis(&w));
            }
        }
    }
}

#[test]
fn nilpotency_by_sylow_agrees_with_central_series() {
    for g in all() {
        assert_eq!(g.is_nilpotent(), g.is_nilpotent_sylow(), "{}", g.label());
    }
}

#[test]
fn cyclic_mod_p_agrees_with_quotient_construction() {
    for g in all() {
        for p in prime_factors(g.order() as u64).into_iter().chain([2, 3, 5, 7].into_iter().filter(|&p| is_prime(p))) {
            let core = g.p_core(p).unwrap();
            assert!(g.is_normal(&core));
            let (q, _) = quotient(&g, &core).unwrap();
            assert_eq!(g.is_cyclic_mod_p(p).unwrap(), q.is_cyclic(), "{} p={p}", g.label());
        }
    }
}

#[test]
fn quotients_have_expected_order_and_kernel() {
    for g in catalog_groups(60) {
        let l = g.lattice();
        for n in l.normal_subgroups() {
            let (q, proj) = quotient(&g, l.subgroup(n)).unwrap();
            assert_eq!(q.order() * l.subgroup(n).order(), g.order());
            assert_eq!(proj.kernel(), l.subgroup(n));
            assert!(q.verify_table());
        }
    }
}

#[test]
fn isomorphism_search_agrees_with_invariants() {
    let groups = all();
    for (i, g) in groups.iter().enumerate() {
        for h in groups[i..].iter().filter(|h| h.order() == g.order() && h.order() <= 60) {
            let found = find_isomorphism(g, h);
            let screened = are_isomorphic(g, h);
            if found.is_some() {
                assert_eq!(GroupInvariants::of(g), GroupInvariants::of(h), "{} {}", g.label(), h.label());
            }
            assert_eq!(found.is_some(), screened.is_some(), "{} {}", g.label(), h.label());
            assert_eq!(screened.is_some(), are_isomorphic(h, g).is_some());
            if let Some(f) = screened {
                assert!(f.is_isomorphism());
            }
        }
    }
}

#[test]
fn minimal_normal_abelian_subgroups_are_elementary() {
    for g in all().into_iter().filter(|g| g.is_solvable() && g.order() > 1) {
        let l = g.lattice();
        for n in l.minimal_normal_subgroups().unwrap() {
            assert!(g.subgroup_is_abelian(l.subgroup(n)), "{}", g.label());
            assert!(g.subgroup_is_elementary_abelian(l.subgroup(n)), "{}", g.label());
        }
    }
}

#[test]
fn class_sizes_times_normalizer_orders() {
    for g in all() {
        let l = g.lattice();
        for c in l.classes() {
            assert_eq!(c.members.len() * l.normalizer(c.rep).order(), g.order());
        }
    }
}

#[test]
fn elements_survive_json_round_trip() {
    let mut rng = rng();
    for g in all() {
        let mut u = random_integral(&g, &mut rng);
        u = &u + &top_idempotent(&g);
        let back = BurnsideElement::from_json(&g, &u.to_json()).unwrap();
        assert_eq!(back, u);
        assert_eq!(back.to_json(), u.to_json());
    }
}
