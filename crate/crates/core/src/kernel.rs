//! Integer kernels of restricted marks: the subgroup of `B(G)` whose marks
//! vanish on every nilpotent (or every solvable) subgroup.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::burnside::{BurnsideElement, Rational};
use crate::group::{FiniteGroup, Group};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubgroupFamily {
    Nilpotent,
    Solvable,
}

impl SubgroupFamily {
    pub fn name(self) -> &'static str {
        match self {
            SubgroupFamily::Nilpotent => "nilpotent",
            SubgroupFamily::Solvable => "solvable",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "nilpotent" => Some(SubgroupFamily::Nilpotent),
            "solvable" => Some(SubgroupFamily::Solvable),
            _ => None,
        }
    }

    /// Membership flag for each subgroup class of `g`, in lattice order.
    pub fn class_flags(self, g: &FiniteGroup) -> Vec<bool> {
        let l = g.lattice();
        l.classes()
            .iter()
            .map(|c| {
                let h = l.subgroup(c.rep);
                match self {
                    SubgroupFamily::Nilpotent => g.subgroup_is_nilpotent(h),
                    SubgroupFamily::Solvable => g.subgroup_is_solvable(h),
                }
            })
            .collect()
    }
}

/// A basis of the kernel lattice, in row Hermite normal form.
#[derive(Debug, Clone)]
pub struct KernelBasis {
    group: Group,
    family: SubgroupFamily,
    rows: Vec<Vec<BigInt>>,
    basis: Vec<BurnsideElement>,
}

impl KernelBasis {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn family(&self) -> SubgroupFamily {
        self.family
    }

    pub fn basis(&self) -> &[BurnsideElement] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Integer coordinates of the basis vectors.
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Membership by solving against the echelon basis. Non-integral
    /// elements are never members.
    pub fn contains_by_basis(&self, u: &BurnsideElement) -> bool {
        if !std::sync::Arc::ptr_eq(u.group(), &self.group) || !u.is_integral() {
            return false;
        }
        let mut v: Vec<BigInt> = u.coeffs().iter().map(|c| c.to_integer()).collect();
        for row in &self.rows {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let (q, r) = v[pivot].div_rem(&row[pivot]);
            if !r.is_zero() {
                return false;
            }
            for (a, b) in v.iter_mut().zip(row) {
                *a -= &q * b;
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Whether `u` is integral and has zero marks at every subgroup in `family`.
pub fn in_kernel(u: &BurnsideElement, family: SubgroupFamily) -> bool {
    let flags = family.class_flags(u.group());
    u.is_integral()
        && flags
            .iter()
            .enumerate()
            .all(|(h, &f)| !f || u.mark(h).is_zero())
}

pub fn kernel_basis(g: &Group, family: SubgroupFamily) -> KernelBasis {
    let flags = family.class_flags(g);
    let marks = g.marks();
    let n = marks.size();
    let constraints: Vec<Vec<BigInt>> = (0..n)
        .filter(|&h| flags[h])
        .map(|h| marks.row(h).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = row_hermite(integer_kernel(&constraints, n));
    let basis = rows
        .iter()
        .map(|r| {
            let coeffs = r.iter().map(|x| Rational::from_integer(x.clone())).collect();
            BurnsideElement::from_coeffs(g, coeffs).expect("one coefficient per class")
        })
        .collect();
    KernelBasis {
        group: g.clone(),
        family,
        rows,
        basis,
    }
}

/// A basis of `{v ∈ ℤⁿ : Mv = 0}` by unimodular column reduction of `M`.
pub fn integer_kernel(m: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    // u[j] is column j of the transform, so that a = m · u throughout
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|j| (0..n).map(|i| BigInt::from((i == j) as i32)).collect())
        .collect();
    let mut pivot = 0;
    for i in 0..a.len() {
        if pivot == n {
            break;
        }
        loop {
            let best = (pivot..n)
                .filter(|&j| !a[i][j].is_zero())
                .min_by_key(|&j| a[i][j].abs());
            let Some(best) = best else { break };
            swap_columns(&mut a, &mut u, pivot, best);
            let mut done = true;
            for j in pivot + 1..n {
                if a[i][j].is_zero() {
                    continue;
                }
                let q = &a[i][j] / &a[i][pivot];
                subtract_column(&mut a, &mut u, j, pivot, &q);
                if !a[i][j].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    u.drain(pivot..).collect()
}

fn swap_columns(a: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], x: usize, y: usize) {
    for row in a.iter_mut() {
        row.swap(x, y);
    }
    u.swap(x, y);
}

/// Column `j` -= `q` · column `p`.
fn subtract_column(a: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], j: usize, p: usize, q: &BigInt) {
    for row in a.iter_mut() {
        let d = q * &row[p];
        row[j] -= d;
    }
    let (lo, hi) = if j < p { u.split_at_mut(p) } else { u.split_at_mut(j) };
    let (src, dst) = if j < p { (&hi[0], &mut lo[j]) } else { (&lo[p], &mut hi[0]) };
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= q * s;
    }
}

/// Row Hermite normal form: positive pivots, entries above each pivot reduced
/// into `[0, pivot)`, zero rows dropped.
pub fn row_hermite(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        loop {
            let best = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by_key(|&i| rows[i][c].abs());
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = &rows[i][c] / &rows[r][c];
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r == rows.len() || rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().take(r) {
            let q = row[c].div_floor(&pivot_row[c]);
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}
