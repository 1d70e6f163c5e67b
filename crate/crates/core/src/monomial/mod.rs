//! Monomial ideals: edge ideals, powers, colons and polarization.
//!
//! Monomials are dense exponent vectors over the variable list of the ideal
//! that owns them. Ideals always hold their minimal generators, ordered by
//! total degree and then by descending exponent vector, so `x1*x2` precedes
//! `x1*x3`, which precedes `x2*x3`.

mod io;

pub use io::{parse_ideal, IdealJson};

use std::cmp::Reverse;
use std::collections::HashSet;
use std::fmt;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// `x_a * x_b` in a ring with `nvars` variables.
    pub fn product_of(nvars: usize, vars: &[usize]) -> Self {
        let mut m = Monomial::one(nvars);
        for &v in vars {
            m.exps[v] += 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    fn support_mask(&self) -> u128 {
        self.support()
            .filter(|&i| i < 128)
            .fold(0, |m, i| m | 1 << i)
    }

    /// Renders as `x1^2*x3`, or `1` for the unit monomial.
    pub fn display<'a>(&'a self, vars: &'a [String]) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, vars }
    }

    fn canonical_key(&self) -> (u32, Reverse<&[u32]>) {
        (self.degree(), Reverse(&self.exps))
    }
}

struct MonomialDisplay<'a> {
    m: &'a Monomial,
    vars: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.m.support() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.m.exps[v] {
                1 => write!(f, "{}", self.vars[v])?,
                e => write!(f, "{}^{e}", self.vars[v])?,
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Keeps the divisibility-minimal elements in canonical order.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
    gens.dedup();
    let mut kept: Vec<(Monomial, u128)> = Vec::with_capacity(gens.len());
    for g in gens {
        let mask = g.support_mask();
        if !kept
            .iter()
            .any(|(h, hm)| hm & !mask == 0 && h.divides(&g))
        {
            kept.push((g, mask));
        }
    }
    kept.into_iter().map(|(g, _)| g).collect()
}

/// A monomial ideal over a named, ordered list of variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reduced to minimal generators.
    pub fn new(vars: Vec<String>, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.exps.len() != vars.len()) {
            return Err(Error::invalid(format!(
                "monomial has {} exponents in a ring with {} variables",
                g.exps.len(),
                vars.len()
            )));
        }
        let mut seen = HashSet::new();
        if let Some(v) = vars.iter().find(|v| !seen.insert(v.as_str())) {
            return Err(Error::invalid(format!("duplicate variable `{v}`")));
        }
        Ok(MonomialIdeal {
            vars,
            gens: minimalize(gens),
        })
    }

    pub fn zero(vars: Vec<String>) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// A monomial given as `(variable, exponent)` pairs.
    pub fn monomial(&self, powers: &[(&str, u32)]) -> Result<Monomial> {
        let mut m = Monomial::one(self.nvars());
        for &(v, e) in powers {
            m.exps[self.var_index(v)?] += e;
        }
        Ok(m)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Whether the ideal contains the monomial.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Sum of two ideals over the same ring.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.vars != other.vars {
            return Err(Error::invalid("ideals live in different rings"));
        }
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    /// Same generators over a larger ring whose first variables are this ring's.
    pub fn extend_ring(&self, vars: Vec<String>) -> Result<MonomialIdeal> {
        if vars.len() < self.vars.len() || vars[..self.vars.len()] != self.vars[..] {
            return Err(Error::invalid("new ring must extend the old one"));
        }
        let n = vars.len();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.exps.clone();
                e.resize(n, 0);
                Monomial { exps: e }
            })
            .collect();
        MonomialIdeal::new(vars, gens)
    }

    /// Generators rendered one per line.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| g.display(&self.vars).to_string())
            .collect()
    }
}

/// The edge ideal: one generator `x_u x_v` per edge, variables in vertex order.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.vertex_count();
    let gens = g
        .edges()
        .iter()
        .map(|&(a, b)| Monomial::product_of(n, &[a, b]))
        .collect();
    MonomialIdeal {
        vars: g.labels().to_vec(),
        gens: minimalize(gens),
    }
}

/// Minimal generators of `I^s`, computed incrementally as `I^(k-1) * I`.
pub fn power(ideal: &MonomialIdeal, s: usize) -> Result<MonomialIdeal> {
    power_with(ideal, s, &Caps::default())
}

pub fn power_with(ideal: &MonomialIdeal, s: usize, caps: &Caps) -> Result<MonomialIdeal> {
    if s == 0 {
        return Err(Error::invalid("power exponent must be at least 1"));
    }
    let mut current = ideal.gens.clone();
    for _ in 1..s {
        let raw = current.len().saturating_mul(ideal.gens.len());
        caps.check("generators before minimalization", raw, caps.generators)?;
        let mut products = HashSet::with_capacity(raw);
        for a in &current {
            for b in &ideal.gens {
                products.insert(a.mul(b));
            }
        }
        current = minimalize(products.into_iter().collect());
    }
    Ok(MonomialIdeal {
        vars: ideal.vars.clone(),
        gens: current,
    })
}

/// `(I : m)`, generated by `g / gcd(g, m)` for the generators `g` of `I`.
pub fn colon_by_monomial(ideal: &MonomialIdeal, m: &Monomial) -> MonomialIdeal {
    MonomialIdeal {
        vars: ideal.vars.clone(),
        gens: minimalize(ideal.gens.iter().map(|g| g.colon(m)).collect()),
    }
}

/// Polarized variable `index` of the new ring is copy `copy` (1-based) of original variable `original`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolarVar {
    pub original: usize,
    pub copy: u32,
}

/// Polarization: `x_i^e` becomes `x_{i,1} ⋯ x_{i,e}`. Copy 1 keeps the
/// original label; copy `c ≥ 2` is labelled `x#c` (bumped past any existing label).
/// Every original variable is kept, and new variables are ordered by
/// (original index, copy).
pub fn polarize(ideal: &MonomialIdeal) -> (MonomialIdeal, Vec<PolarVar>) {
    let n = ideal.nvars();
    let max_exp: Vec<u32> = (0..n)
        .map(|v| ideal.gens.iter().map(|g| g.exps[v]).max().unwrap_or(0).max(1))
        .collect();
    let mut taken: HashSet<String> = ideal.vars.iter().cloned().collect();
    let mut vars = Vec::new();
    let mut map = Vec::new();
    let mut first_copy = vec![0usize; n];
    for v in 0..n {
        first_copy[v] = vars.len();
        vars.push(ideal.vars[v].clone());
        map.push(PolarVar { original: v, copy: 1 });
        let mut bump = 2;
        for c in 2..=max_exp[v] {
            let label = loop {
                let l = format!("{}#{bump}", ideal.vars[v]);
                bump += 1;
                if taken.insert(l.clone()) {
                    break l;
                }
            };
            vars.push(label);
            map.push(PolarVar { original: v, copy: c });
        }
    }
    let total = vars.len();
    let gens = ideal
        .gens
        .iter()
        .map(|g| {
            let mut exps = vec![0; total];
            for v in g.support() {
                for c in 0..g.exps[v] as usize {
                    exps[first_copy[v] + c] = 1;
                }
            }
            Monomial { exps }
        })
        .collect();
    (
        MonomialIdeal {
            vars,
            gens: minimalize(gens),
        },
        map,
    )
}

/// The graph whose edges are the generators of a squarefree quadratic ideal;
/// every variable of the ring is a vertex.
pub fn graph_of_quadratic(ideal: &MonomialIdeal) -> Result<Graph> {
    let mut g = Graph::new();
    for v in &ideal.vars {
        g.add_vertex(v)?;
    }
    for m in &ideal.gens {
        let support: Vec<usize> = m.support().collect();
        if m.degree() != 2 || support.len() != 2 {
            return Err(Error::NotQuadratic(m.display(&ideal.vars).to_string()));
        }
        g.add_edge_idx(support[0], support[1]);
    }
    Ok(g)
}

/// `(((I^2 : e_1)~^2 : e_2)~^2 ⋯ : e_s)~`, polarizing after each colon. The
/// edges are given by variable labels and must be generators of `I`.
pub fn iterated_colon(ideal: &MonomialIdeal, edges: &[(&str, &str)]) -> Result<MonomialIdeal> {
    iterated_colon_with(ideal, edges, &Caps::default())
}

pub fn iterated_colon_with(
    ideal: &MonomialIdeal,
    edges: &[(&str, &str)],
    caps: &Caps,
) -> Result<MonomialIdeal> {
    if edges.is_empty() {
        return Err(Error::invalid("iterated colon needs at least one edge"));
    }
    let mut current = ideal.clone();
    for &(u, v) in edges {
        let e = ideal.monomial(&[(u, 1), (v, 1)])?;
        if !ideal.gens.contains(&e) {
            return Err(Error::NotAnEdge(format!("{{{u},{v}}}")));
        }
        let e = current.monomial(&[(u, 1), (v, 1)])?;
        let squared = power_with(&current, 2, caps)?;
        current = polarize(&colon_by_monomial(&squared, &e)).0;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, edgeless, parse_graph};

    fn gens(i: &MonomialIdeal) -> Vec<String> {
        i.generator_strings()
    }

    #[test]
    fn edge_ideal_of_triangle() {
        let i = edge_ideal(&cycle(3).unwrap());
        assert_eq!(gens(&i), ["x1*x2", "x1*x3", "x2*x3"]);
        assert!(edge_ideal(&edgeless(3).unwrap()).generators().is_empty());
    }

    #[test]
    fn powers() {
        let k2 = edge_ideal(&parse_graph("a b").unwrap());
        assert_eq!(gens(&power(&k2, 2).unwrap()), ["a^2*b^2"]);
        let c3 = edge_ideal(&cycle(3).unwrap());
        let sq = power(&c3, 2).unwrap();
        assert_eq!(sq.generators().len(), 6);
        assert!(sq.generators().iter().all(|g| g.degree() == 4));
        assert_eq!(power(&c3, 1).unwrap(), c3);
        assert!(power(&c3, 0).is_err());
        let caps = Caps { generators: 5, ..Caps::default() };
        assert!(power_with(&c3, 2, &caps).unwrap_err().is_resource());
    }

    #[test]
    fn colon_examples() {
        let g5 = parse_graph("x1 x2\nx1 x5\nx2 x5\nx2 x3\nx3 x4\nx4 x5").unwrap();
        let i = edge_ideal(&g5);
        let c = colon_by_monomial(&power(&i, 2).unwrap(), &i.monomial(&[("x2", 1), ("x5", 1)]).unwrap());
        let extra = MonomialIdeal::new(
            i.variables().to_vec(),
            vec![
                i.monomial(&[("x1", 2)]).unwrap(),
                i.monomial(&[("x1", 1), ("x3", 1)]).unwrap(),
                i.monomial(&[("x1", 1), ("x4", 1)]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(c, i.sum(&extra).unwrap());

        let c3 = edge_ideal(&cycle(3).unwrap());
        let c = colon_by_monomial(&power(&c3, 2).unwrap(), &c3.monomial(&[("x1", 1), ("x3", 1)]).unwrap());
        assert_eq!(gens(&c), ["x1*x2", "x1*x3", "x2^2", "x2*x3"]);
    }

    #[test]
    fn polarization() {
        let c3 = edge_ideal(&cycle(3).unwrap());
        let c = colon_by_monomial(&power(&c3, 2).unwrap(), &c3.monomial(&[("x1", 1), ("x3", 1)]).unwrap());
        let (p, map) = polarize(&c);
        assert_eq!(p.variables(), ["x1", "x2", "x2#2", "x3"]);
        assert_eq!(map[2], PolarVar { original: 1, copy: 2 });
        assert_eq!(gens(&p), ["x1*x2", "x1*x3", "x2*x2#2", "x2*x3"]);

        let (same, map) = polarize(&c3);
        assert_eq!(same, c3);
        assert!(map.iter().all(|p| p.copy == 1));

        let a2b = MonomialIdeal::new(vec!["a".into(), "b".into()], vec![Monomial::from_exponents(vec![2, 1])]).unwrap();
        assert_eq!(gens(&polarize(&a2b).0), ["a*a#2*b"]);

        let clash = MonomialIdeal::new(
            vec!["a".into(), "a#2".into()],
            vec![Monomial::from_exponents(vec![2, 0]), Monomial::from_exponents(vec![0, 1])],
        )
        .unwrap();
        assert_eq!(polarize(&clash).0.variables(), ["a", "a#3", "a#2"]);
    }

    #[test]
    fn quadratic_graphs() {
        let c6 = cycle(6).unwrap();
        let i = edge_ideal(&c6);
        let g = graph_of_quadratic(&i).unwrap();
        assert_eq!(g, c6);
        assert_eq!(graph_of_quadratic(&MonomialIdeal::zero(vec!["a".into(), "b".into()])).unwrap().edge_count(), 0);
        let a2 = MonomialIdeal::new(vec!["a".into()], vec![Monomial::from_exponents(vec![2])]).unwrap();
        assert_eq!(graph_of_quadratic(&a2), Err(Error::NotQuadratic("a^2".into())));
    }

    #[test]
    fn minimality_and_order() {
        let i = MonomialIdeal::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                Monomial::from_exponents(vec![1, 1, 1]),
                Monomial::from_exponents(vec![0, 1, 1]),
                Monomial::from_exponents(vec![1, 1, 0]),
                Monomial::from_exponents(vec![1, 1, 0]),
                Monomial::from_exponents(vec![2, 0, 0]),
            ],
        )
        .unwrap();
        assert_eq!(gens(&i), ["a^2", "a*b", "b*c"]);
    }
}
