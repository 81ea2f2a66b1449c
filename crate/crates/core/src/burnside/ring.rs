use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Group};

/// Table of marks `|(G/K)^H|`, rows `H` and columns `K` indexed by subgroup classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarksTable {
    size: usize,
    entries: Vec<i64>,
}

impl MarksTable {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of points of `G/K` fixed by `H`.
    pub fn get(&self, h: usize, k: usize) -> i64 {
        self.entries[h * self.size + k]
    }

    pub fn row(&self, h: usize) -> &[i64] {
        &self.entries[h * self.size..(h + 1) * self.size]
    }
}

/// Marks from the lattice: `|(G/K)^H| = |N_G(K):K| · #{K' ~ K : H ≤ K'}`.
pub fn marks_table(g: &FiniteGroup) -> MarksTable {
    let l = g.lattice();
    let classes = l.classes();
    let size = classes.len();
    let mut entries = vec![0i64; size * size];
    for (hc, hclass) in classes.iter().enumerate() {
        let h = hclass.rep;
        for (kc, kclass) in classes.iter().enumerate().skip(hc) {
            let k = kclass.rep;
            let weyl = (l.normalizer(k).order() / l.subgroup(k).order()) as i64;
            let containing = kclass.members.iter().filter(|&&k2| l.leq(h, k2)).count() as i64;
            entries[hc * size + kc] = weyl * containing;
        }
    }
    MarksTable { size, entries }
}

impl FiniteGroup {
    pub fn marks(&self) -> &Arc<MarksTable> {
        self.marks.get_or_init(|| Arc::new(marks_table(self)))
    }
}

/// `m_{G,N} = (1/|G|) Σ_{X ≤ G, XN = G} |X| μ(X, G)` for the normal subgroup with lattice index `n`.
pub fn m_coefficient(g: &FiniteGroup, n: usize) -> Result<Rational> {
    let l = g.lattice();
    if n >= l.len() {
        return Err(Error::NotSubgroup);
    }
    if !l.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let top = l.top();
    let nn = l.subgroup(n);
    let sum: i64 = (0..l.len())
        .filter(|&x| g.product_size(l.subgroup(x), nn) == g.order())
        .map(|x| l.subgroup(x).order() as i64 * l.mobius_unchecked(x, top))
        .sum();
    Ok(Rational::new(sum.into(), (g.order() as i64).into()))
}

/// An element of `ℚB(G)` in the basis of transitive G-sets `[G/H]`, one
/// coefficient per conjugacy class of subgroups in lattice order.
#[derive(Clone)]
pub struct BurnsideElement {
    group: Group,
    coeffs: Vec<Rational>,
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for BurnsideElement {}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in B({})", self, self.group.label())
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.group.lattice();
        let mut first = true;
        for (c, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}[G/{}]", a, l.class_label(c))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl BurnsideElement {
    pub fn zero(g: &Group) -> Self {
        let n = g.lattice().classes().len();
        BurnsideElement {
            group: g.clone(),
            coeffs: vec![Rational::zero(); n],
        }
    }

    /// The transitive G-set `[G/H]` for the subgroup class `class`.
    pub fn basis(g: &Group, class: usize) -> Self {
        let mut u = Self::zero(g);
        u.coeffs[class] = Rational::one();
        u
    }

    /// `[G/G]`, the ring identity.
    pub fn one(g: &Group) -> Self {
        let top = g.lattice().classes().len() - 1;
        Self::basis(g, top)
    }

    pub fn from_coeffs(g: &Group, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != g.lattice().classes().len() {
            return Err(Error::Format(format!(
                "expected {} coefficients, got {}",
                g.lattice().classes().len(),
                coeffs.len()
            )));
        }
        Ok(BurnsideElement {
            group: g.clone(),
            coeffs,
        })
    }

    pub fn from_integers(g: &Group, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(g, coeffs.iter().map(|&a| int(a)).collect())
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, class: usize) -> &Rational {
        &self.coeffs[class]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True iff the element lies in `B(G)` rather than only in `ℚB(G)`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_integer())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        BurnsideElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    /// Marks `|u^H|` at each subgroup class `H`.
    pub fn marks(&self) -> Vec<Rational> {
        let table = self.group.marks();
        (0..table.size())
            .map(|h| {
                let mut acc = Rational::zero();
                for (k, a) in self.coeffs.iter().enumerate().skip(h) {
                    let m = table.get(h, k);
                    if m != 0 && !a.is_zero() {
                        acc += a * int(m);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mark(&self, h: usize) -> Rational {
        let table = self.group.marks();
        let mut acc = Rational::zero();
        for (k, a) in self.coeffs.iter().enumerate().skip(h) {
            let m = table.get(h, k);
            if m != 0 && !a.is_zero() {
                acc += a * int(m);
            }
        }
        acc
    }

    /// Inverse of [`marks`](Self::marks): solves the upper-triangular marks system.
    pub fn from_marks(g: &Group, marks: &[Rational]) -> Result<Self> {
        let table = g.marks();
        let n = table.size();
        if marks.len() != n {
            return Err(Error::Format(format!(
                "expected {n} marks, got {}",
                marks.len()
            )));
        }
        let mut coeffs = vec![Rational::zero(); n];
        for h in (0..n).rev() {
            let mut rest = marks[h].clone();
            for (k, c) in coeffs.iter().enumerate().skip(h + 1) {
                let m = table.get(h, k);
                if m != 0 && !c.is_zero() {
                    rest -= c * int(m);
                }
            }
            coeffs[h] = rest / int(table.get(h, h));
        }
        Ok(BurnsideElement {
            group: g.clone(),
            coeffs,
        })
    }

    /// `e_H^G = (1/|N_G(H)|) Σ_{X ≤ H} |X| μ(X, H) [G/X]`.
    pub fn idempotent(g: &Group, class: usize) -> Self {
        let l = g.lattice();
        let h = l.classes()[class].rep;
        let mut coeffs = vec![Rational::zero(); l.classes().len()];
        for x in l.below(h).iter() {
            let mu = l.mobius_unchecked(x, h);
            if mu != 0 {
                coeffs[l.class_of(x)] += int(l.subgroup(x).order() as i64 * mu);
            }
        }
        let denom = int(l.normalizer(h).order() as i64);
        for c in &mut coeffs {
            *c /= &denom;
        }
        BurnsideElement {
            group: g.clone(),
            coeffs,
        }
    }

    /// Ring product, computed pointwise on marks.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        let marks: Vec<Rational> = self
            .marks()
            .into_iter()
            .zip(other.marks())
            .map(|(a, b)| a * b)
            .collect();
        Self::from_marks(&self.group, &marks)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert!(
            Arc::ptr_eq(&self.group, &other.group),
            "Burnside elements over different groups"
        );
        BurnsideElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

/// Panics if the operands live over different groups.
impl Add for &BurnsideElement {
    type Output = BurnsideElement;
    fn add(self, rhs: &BurnsideElement) -> BurnsideElement {
        self.zip_with(rhs, |a, b| a + b)
    }
}

/// Panics if the operands live over different groups.
impl Sub for &BurnsideElement {
    type Output = BurnsideElement;
    fn sub(self, rhs: &BurnsideElement) -> BurnsideElement {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        self.scale(&int(-1))
    }
}
