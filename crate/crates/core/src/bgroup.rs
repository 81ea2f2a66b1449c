//! B-groups and the largest B-group quotient `β(G)`.

use num_traits::Zero;

use crate::burnside::{m_coefficient, Rational};
use crate::error::Result;
use crate::group::{FiniteGroup, Group};
use crate::hom::GroupHom;

/// `m_{G,N}` for every normal subgroup, in lattice order.
pub fn m_table(g: &FiniteGroup) -> Vec<(usize, Rational)> {
    g.lattice()
        .normal_subgroups()
        .into_iter()
        .map(|n| (n, m_coefficient(g, n).expect("normal subgroup")))
        .collect()
}

/// Checks `m_{G,N} = 0` on minimal normal subgroups only, which suffices
/// because every nontrivial normal subgroup contains one.
pub fn is_b_group(g: &FiniteGroup) -> bool {
    match g.lattice().minimal_normal_subgroups() {
        Err(_) => true,
        Ok(mins) => mins
            .into_iter()
            .all(|n| m_coefficient(g, n).expect("normal subgroup").is_zero()),
    }
}

/// Checks `m_{G,N} = 0` for every nontrivial normal subgroup.
pub fn is_b_group_by_definition(g: &FiniteGroup) -> bool {
    m_table(g)
        .into_iter()
        .all(|(n, m)| n == g.lattice().trivial() || m.is_zero())
}

/// `1 − |K_G(N)|/|N|`, where `K_G(N)` is the set of complements of `N`.
pub fn complement_formula(g: &FiniteGroup, n: usize) -> Result<Rational> {
    let l = g.lattice();
    let count = l.complements(n)?.len() as i64;
    let size = l.subgroup(n).order() as i64;
    Ok(Rational::new((size - count).into(), size.into()))
}

/// Normal subgroups with `m_{G,N} ≠ 0` that are maximal under inclusion
/// among such, in lattice order.
pub fn beta_candidates(g: &FiniteGroup) -> Vec<usize> {
    let l = g.lattice();
    let nonzero: Vec<usize> = m_table(g)
        .into_iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(n, _)| n)
        .collect();
    nonzero
        .iter()
        .copied()
        .filter(|&n| !nonzero.iter().any(|&k| k != n && l.leq(n, k)))
        .collect()
}

/// `β(G) = G/N`, together with the lattice index of `N` and the projection.
#[derive(Debug, Clone)]
pub struct Beta {
    pub kernel: usize,
    pub projection: GroupHom,
}

impl Beta {
    pub fn group(&self) -> &Group {
        self.projection.target()
    }
}

/// Takes the largest-order normal subgroup with nonzero `m_{G,N}`, scanning
/// by descending order and then lattice order. Debug builds also assert
/// that every inclusion-maximal choice gives an isomorphic quotient and that
/// the result is a B-group.
pub fn beta(g: &Group) -> Beta {
    let l = g.lattice();
    let mut normals = l.normal_subgroups();
    normals.sort_by_key(|&n| std::cmp::Reverse(l.subgroup(n).order()));
    // m_{G,1} = 1, so the scan always succeeds
    let kernel = normals
        .into_iter()
        .find(|&n| !m_coefficient(g, n).expect("normal subgroup").is_zero())
        .expect("the trivial subgroup has m = 1");
    let projection = l.projection(g, kernel).expect("normal subgroup");
    #[cfg(debug_assertions)]
    {
        let q = projection.target();
        for other in beta_candidates(g) {
            let p = l.projection(g, other).expect("normal subgroup");
            debug_assert!(
                crate::iso::are_isomorphic(q, p.target()).is_some(),
                "maximal choices of N give non-isomorphic quotients"
            );
        }
        debug_assert!(is_b_group(q), "quotient is not a B-group");
    }
    Beta { kernel, projection }
}
