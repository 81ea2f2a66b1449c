//! Named group constructions, the group-spec mini-language, and the
//! standard catalog of small groups.
//!
//! Grammar: `expr := atom ("x" atom)*`, where an atom is `C<n>`, `D<n>`
//! (dihedral of order `2n`), `Q<n>` (dicyclic of order `n`), `S<n>`, `A<n>`,
//! `SL(2,<p>)`, `PSL(2,<p>)`, or `perm:` followed by comma-separated
//! generators in cycle notation.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::{direct_product, is_prime, FiniteGroup, Group, DEFAULT_ORDER_CAP};
use crate::iso::are_isomorphic;
use crate::perm::{parse_cycle_list, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    SpecialLinear(usize),
    ProjectiveSpecialLinear(usize),
    Perm(Vec<Permutation>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub atoms: Vec<Atom>,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "C{n}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Dicyclic(n) => write!(f, "Q{n}"),
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Alternating(n) => write!(f, "A{n}"),
            Atom::SpecialLinear(p) => write!(f, "SL(2,{p})"),
            Atom::ProjectiveSpecialLinear(p) => write!(f, "PSL(2,{p})"),
            Atom::Perm(gens) => {
                write!(f, "perm:")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn parse_number(s: &str, pos: usize) -> Result<(usize, usize)> {
    let len = s.bytes().take_while(u8::is_ascii_digit).count();
    if len == 0 {
        return Err(perr(pos, "expected a number"));
    }
    let n = s[..len]
        .parse()
        .map_err(|_| perr(pos, "number out of range"))?;
    Ok((n, len))
}

fn parse_linear(s: &str, pos: usize, prefix: &str) -> Result<(usize, usize)> {
    let rest = &s[prefix.len()..];
    let (p, len) = parse_number(rest, pos + prefix.len())?;
    let close = prefix.len() + len;
    if s.as_bytes().get(close) != Some(&b')') {
        return Err(perr(pos + close, "expected ')'"));
    }
    if !is_prime(p as u64) {
        return Err(perr(pos + prefix.len(), format!("{p} is not prime")));
    }
    Ok((p, close + 1))
}

fn parse_atom(s: &str, pos: usize) -> Result<(Atom, usize)> {
    if let Some(body) = s.strip_prefix("perm:") {
        let end = body.find('x').unwrap_or(body.len());
        let mut gens_cycles = Vec::new();
        let mut offset = pos + 5;
        for part in body[..end].split(',') {
            gens_cycles.push(parse_cycle_list(part, offset)?);
            offset += part.len() + 1;
        }
        let degree = gens_cycles
            .iter()
            .flatten()
            .flatten()
            .map(|&x| x + 1)
            .max()
            .unwrap_or(1);
        let gens = gens_cycles
            .iter()
            .map(|c| Permutation::from_cycles(degree, c))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| perr(pos + 5, "generator is not a permutation"))?;
        return Ok((Atom::Perm(gens), 5 + end));
    }
    if s.starts_with("PSL(2,") {
        let (p, len) = parse_linear(s, pos, "PSL(2,")?;
        return Ok((Atom::ProjectiveSpecialLinear(p), len));
    }
    if s.starts_with("SL(2,") {
        let (p, len) = parse_linear(s, pos, "SL(2,")?;
        return Ok((Atom::SpecialLinear(p), len));
    }
    let head = s.as_bytes().first().copied();
    let (n, len) = match head {
        Some(b'C' | b'D' | b'Q' | b'S' | b'A') => parse_number(&s[1..], pos + 1)?,
        _ => return Err(perr(pos, "expected a group atom")),
    };
    let atom = match head.unwrap() {
        b'C' if n >= 1 => Atom::Cyclic(n),
        b'D' if n >= 1 => Atom::Dihedral(n),
        b'Q' if n >= 4 && n % 4 == 0 => Atom::Dicyclic(n),
        b'S' if n >= 1 => Atom::Symmetric(n),
        b'A' if n >= 1 => Atom::Alternating(n),
        b'Q' => return Err(perr(pos + 1, "Q<n> needs n a positive multiple of 4")),
        _ => return Err(perr(pos + 1, "index must be positive")),
    };
    Ok((atom, 1 + len))
}

/// Parses a group spec; error positions are byte offsets into `s`.
pub fn parse_group_spec(s: &str) -> Result<GroupSpec> {
    let mut atoms = Vec::new();
    let mut pos = 0;
    loop {
        let (atom, len) = parse_atom(&s[pos..], pos)?;
        atoms.push(atom);
        pos += len;
        match s.as_bytes().get(pos) {
            None => break,
            Some(b'x') => pos += 1,
            Some(_) => return Err(perr(pos, "expected 'x' or end of input")),
        }
    }
    Ok(GroupSpec { atoms })
}

impl GroupSpec {
    /// Builds the group, named by the canonical spec string.
    pub fn resolve(&self, cap: usize) -> Result<FiniteGroup> {
        let mut acc: Option<FiniteGroup> = None;
        for atom in &self.atoms {
            let g = build_atom(atom, cap)?.with_name(atom.to_string());
            acc = Some(match acc {
                None => g,
                Some(prev) => direct_product(&prev, &g, cap)?,
            });
        }
        Ok(acc.expect("grammar requires one atom").with_name(self.to_string()))
    }
}

fn gens_from_cycles(degree: usize, gens: &[&[&[usize]]]) -> Vec<Permutation> {
    gens.iter()
        .map(|cycles| {
            let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
            Permutation::from_cycles(degree, &cycles).expect("well-formed cycles")
        })
        .collect()
}

fn from_images(images: Vec<usize>) -> Permutation {
    Permutation::new(images.into_iter().map(|x| x as u32).collect()).expect("bijection")
}

fn build_atom(atom: &Atom, cap: usize) -> Result<FiniteGroup> {
    match *atom {
        Atom::Cyclic(n) => cyclic(n, cap),
        Atom::Dihedral(n) => dihedral(n, cap),
        Atom::Dicyclic(n) => dicyclic(n, cap),
        Atom::Symmetric(n) => symmetric(n, cap),
        Atom::Alternating(n) => alternating(n, cap),
        Atom::SpecialLinear(p) => special_linear(p, cap),
        Atom::ProjectiveSpecialLinear(p) => projective_special_linear(p, cap),
        Atom::Perm(ref gens) => {
            let degree = gens[0].degree();
            FiniteGroup::from_generators(degree, gens, cap)
        }
    }
}

pub fn cyclic(n: usize, cap: usize) -> Result<FiniteGroup> {
    let rot = from_images((0..n).map(|i| (i + 1) % n).collect());
    FiniteGroup::from_generators(n, &[rot], cap)
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize, cap: usize) -> Result<FiniteGroup> {
    match n {
        1 => cyclic(2, cap),
        2 => FiniteGroup::from_generators(4, &gens_from_cycles(4, &[&[&[0, 1]], &[&[2, 3]]]), cap),
        _ => {
            let rot = from_images((0..n).map(|i| (i + 1) % n).collect());
            let refl = from_images((0..n).map(|i| (n - i) % n).collect());
            FiniteGroup::from_generators(n, &[rot, refl], cap)
        }
    }
}

/// Dicyclic group of order `n = 4m`, `⟨a, b | a^{2m}, b² = a^m, bab⁻¹ = a⁻¹⟩`,
/// in its regular representation (generalized quaternion when `n` is a power of 2).
pub fn dicyclic(n: usize, cap: usize) -> Result<FiniteGroup> {
    let m2 = n / 2;
    let m = n / 4;
    // element a^i b^j has index i + m2 * j
    let mul = |(i, j): (usize, usize), (k, l): (usize, usize)| -> (usize, usize) {
        if j == 0 {
            ((i + k) % m2, l)
        } else if l == 0 {
            ((i + m2 - k) % m2, 1)
        } else {
            ((i + m2 - k + m) % m2, 0)
        }
    };
    let idx = |(i, j): (usize, usize)| i + m2 * j;
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..m2).map(move |i| (i, j))).collect();
    let left = |x: (usize, usize)| from_images(elems.iter().map(|&y| idx(mul(x, y))).collect());
    FiniteGroup::from_generators(n, &[left((1 % m2, 0)), left((0, 1))], cap)
}

pub fn symmetric(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n <= 1 {
        return FiniteGroup::from_generators(1, &[], cap);
    }
    let swap = gens_from_cycles(n, &[&[&[0, 1]]]);
    let cycle = from_images((0..n).map(|i| (i + 1) % n).collect());
    FiniteGroup::from_generators(n, &[swap[0].clone(), cycle], cap)
}

pub fn alternating(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n <= 2 {
        return FiniteGroup::from_generators(n.max(1), &[], cap);
    }
    let gens: Vec<Permutation> = (2..n)
        .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]).expect("3-cycle"))
        .collect();
    FiniteGroup::from_generators(n, &gens, cap)
}

/// `SL(2, p)` acting on the nonzero vectors of `F_p²`.
pub fn special_linear(p: usize, cap: usize) -> Result<FiniteGroup> {
    let points: Vec<(usize, usize)> = (0..p)
        .flat_map(|y| (0..p).map(move |x| (x, y)))
        .filter(|&v| v != (0, 0))
        .collect();
    let index = |(x, y): (usize, usize)| x + p * y - 1;
    let act = |m: [[usize; 2]; 2]| {
        from_images(
            points
                .iter()
                .map(|&(x, y)| index(((m[0][0] * x + m[0][1] * y) % p, (m[1][0] * x + m[1][1] * y) % p)))
                .collect(),
        )
    };
    let gens = [act([[1, 1], [0, 1]]), act([[0, p - 1], [1, 0]])];
    FiniteGroup::from_generators(points.len(), &gens, cap)
}

/// `PSL(2, p)` acting on the projective line `{0, …, p-1, ∞}` (`∞` is point `p`).
pub fn projective_special_linear(p: usize, cap: usize) -> Result<FiniteGroup> {
    let shift = from_images((0..=p).map(|x| if x == p { p } else { (x + 1) % p }).collect());
    let inv = |x: usize| (1..p).find(|&y| x * y % p == 1).expect("nonzero element is invertible");
    let flip = from_images(
        (0..=p)
            .map(|x| match x {
                0 => p,
                _ if x == p => 0,
                _ => (p - inv(x)) % p,
            })
            .collect(),
    );
    FiniteGroup::from_generators(p + 1, &[shift, flip], cap)
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: String,
    pub order: usize,
}

/// The standard group catalog; groups are built lazily and cached.
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    groups: Vec<OnceLock<Group>>,
    cap: usize,
}

impl Default for Catalog {
    fn default() -> Self {
        Self::standard()
    }
}

impl Catalog {
    pub fn standard() -> Self {
        Self::with_cap(DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(cap: usize) -> Self {
        let mut entries = Vec::new();
        let mut add = |name: String, spec: String, order: usize| {
            if order <= cap {
                entries.push(CatalogEntry { name, spec, order });
            }
        };
        for n in 1..=36 {
            add(format!("C{n}"), format!("C{n}"), n);
        }
        for n in [1, 2, 3, 5, 6, 10, 4] {
            let s = format!("C{n}xC{n}");
            add(s.clone(), s, n * n);
        }
        add("C2xC2xC2".into(), "C2xC2xC2".into(), 8);
        add("C2xC2xC2xC2".into(), "C2xC2xC2xC2".into(), 16);
        for (name, order) in [("S3", 6), ("S4", 24), ("S5", 120), ("A4", 12), ("A5", 60)] {
            add(name.into(), name.into(), order);
        }
        for n in 3..=12 {
            add(format!("D{n}"), format!("D{n}"), 2 * n);
        }
        add("Q8".into(), "Q8".into(), 8);
        add("Q16".into(), "Q16".into(), 16);
        add("SL(2,3)".into(), "SL(2,3)".into(), 24);
        add("SL(2,5)".into(), "SL(2,5)".into(), 120);
        add("PSL(2,7)".into(), "PSL(2,7)".into(), 168);
        add("C3:C4".into(), "perm:(0 1 2),(1 2)(3 4 5 6)".into(), 12);
        add("C7:C3".into(), "perm:(0 1 2 3 4 5 6),(1 2 4)(3 6 5)".into(), 21);
        add("C5:C4".into(), "perm:(0 1 2 3 4),(1 2 4 3)".into(), 20);
        add("D4xC2".into(), "D4xC2".into(), 16);
        add("A4xC2".into(), "A4xC2".into(), 24);
        let groups = entries.iter().map(|_| OnceLock::new()).collect();
        Catalog {
            entries,
            groups,
            cap,
        }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn group(&self, i: usize) -> Result<Group> {
        if let Some(g) = self.groups[i].get() {
            return Ok(g.clone());
        }
        let e = &self.entries[i];
        let g = parse_group_spec(&e.spec)?
            .resolve(self.cap)?
            .with_name(e.name.clone());
        Ok(self.groups[i].get_or_init(|| Arc::new(g)).clone())
    }

    pub fn groups(&self) -> Result<Vec<Group>> {
        (0..self.len()).map(|i| self.group(i)).collect()
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.name == name)
    }

    /// A catalog name or a spec expression.
    pub fn resolve(&self, s: &str) -> Result<Group> {
        match self.find(s) {
            Some(i) => self.group(i),
            None => Ok(Arc::new(parse_group_spec(s)?.resolve(self.cap)?)),
        }
    }

    /// Name of the first catalog entry isomorphic to `g`.
    pub fn identify(&self, g: &Group) -> Option<&str> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.order == g.order())
            .find(|(i, _)| {
                self.group(*i)
                    .map(|h| are_isomorphic(g, &h).is_some())
                    .unwrap_or(false)
            })
            .map(|(_, e)| e.name.as_str())
    }

    /// Catalog name when one matches, otherwise the generators as a `perm:` spec.
    pub fn describe(&self, g: &Group) -> String {
        match self.identify(g) {
            Some(name) => name.to_string(),
            None => GroupSpec {
                atoms: vec![Atom::Perm(if g.generators().is_empty() {
                    vec![Permutation::identity(1)]
                } else {
                    g.generator_perms()
                })],
            }
            .to_string(),
        }
    }
}
