//! Graded Betti numbers and regularity of monomial ideals.
//!
//! `β_{i,b}(I)` is the rank of `H̃_{i-1}` of the upper Koszul complex
//! `K^b(I) = { τ ⊆ supp(b) : x^{b-τ} ∈ I }`, and it vanishes unless `b` lies
//! in the lcm lattice of the minimal generators. All numbers are for the
//! ideal `I` itself, so `reg(I) = max { j - i : β_{i,j}(I) ≠ 0 } = reg(R/I) + 1`.

pub mod complex;
pub mod rank;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

pub use complex::{Homology, SimplicialComplex};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{edge_ideal, power_with, Monomial, MonomialIdeal};

/// Coefficient field for homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    /// `0` selects the rationals, a prime `p` selects `GF(p)`.
    pub fn from_characteristic(p: u64) -> Result<Field> {
        match p {
            0 => Ok(Field::Rational),
            p if rank::is_prime(p) => Ok(Field::Prime(p)),
            p => Err(Error::invalid(format!("characteristic {p} is not 0 or a prime"))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BettiOptions {
    pub field: Field,
    pub caps: Caps,
}

/// Work done by one Betti computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BettiStats {
    pub lattice_size: usize,
    pub complexes_built: usize,
    pub cones_skipped: usize,
    pub euler_checks: usize,
}

/// Nonzero graded Betti numbers `β_{i,j}` of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
    field: Field,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub rank: u64,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries
            .iter()
            .map(|(&(i, j), &rank)| BettiEntry { i, j, rank })
    }

    /// `max(j - i)` over the nonzero entries; `None` for the zero ideal.
    pub fn regularity(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, j)| j - i as u32).max()
    }

    /// Length of the resolution: the largest `i` with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Macaulay-style triangle: column `i`, row `j - i`.
    pub fn triangle(&self) -> String {
        let Some(pd) = self.projective_dimension() else {
            return "zero ideal\n".to_string();
        };
        let low = self.entries.keys().map(|&(i, j)| j - i as u32).min().unwrap_or(0);
        let high = self.regularity().unwrap_or(0);
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut rows: Vec<Vec<String>> = Vec::new();
        rows.push(
            std::iter::once(String::new())
                .chain((0..=pd).map(|i| i.to_string()))
                .collect(),
        );
        let totals: Vec<u64> = (0..=pd)
            .map(|i| self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, v)| v).sum())
            .collect();
        rows.push(
            std::iter::once("total:".to_string())
                .chain(totals.iter().map(|&t| cell(t)))
                .collect(),
        );
        for r in low..=high {
            rows.push(
                std::iter::once(format!("{r}:"))
                    .chain((0..=pd).map(|i| cell(self.get(i, r + i as u32))))
                    .collect(),
            );
        }
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = format!("Betti numbers of the ideal over {}\n", self.field);
        for row in rows {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// The lcm lattice: all lcms of non-empty sets of minimal generators.
pub fn lcm_lattice(ideal: &MonomialIdeal, caps: &Caps) -> Result<Vec<Monomial>> {
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut stack: Vec<Monomial> = gens.to_vec();
    caps.check("lcm lattice size", seen.len(), caps.lattice)?;
    while let Some(x) = stack.pop() {
        for g in gens {
            if g.divides(&x) {
                continue;
            }
            let l = x.lcm(g);
            if seen.insert(l.clone()) {
                caps.check("lcm lattice size", seen.len(), caps.lattice)?;
                stack.push(l);
            }
        }
    }
    let mut lattice: Vec<Monomial> = seen.into_iter().collect();
    lattice.sort_by(|a, b| (a.degree(), b.exponents()).cmp(&(b.degree(), a.exponents())));
    Ok(lattice)
}

/// The upper Koszul complex at `b`, on the vertex set `supp(b)` (bit `k` is
/// the `k`-th variable of the support).
pub fn upper_koszul_complex(ideal: &MonomialIdeal, b: &Monomial) -> SimplicialComplex {
    let support: Vec<usize> = b.support().collect();
    let facets = ideal
        .generators()
        .iter()
        .filter(|g| g.divides(b))
        .map(|g| {
            support
                .iter()
                .enumerate()
                .filter(|(_, &v)| g.exponent(v) < b.exponent(v))
                .fold(0u64, |m, (k, _)| m | 1 << k)
        })
        .collect();
    SimplicialComplex::from_facets(facets)
}

/// Nonzero `β_{i,b}` at one multidegree, with whether a complex was built.
fn betti_at(
    ideal: &MonomialIdeal,
    b: &Monomial,
    opts: &BettiOptions,
) -> Result<(Vec<(usize, u64)>, bool)> {
    if b.support().count() > 64 {
        return Err(Error::ResourceCap {
            what: "support of a multidegree",
            limit: 64,
            actual: b.support().count(),
        });
    }
    let k = upper_koszul_complex(ideal, b);
    if k.is_cone() {
        return Ok((Vec::new(), false));
    }
    let h = k.homology(opts.field, opts.caps.faces)?;
    if h.euler_from_faces() != h.euler_from_homology() {
        return Err(Error::Invariant(format!(
            "Euler characteristic mismatch at multidegree {:?}",
            b.exponents()
        )));
    }
    let nonzero = h
        .ranks
        .iter()
        .enumerate()
        .filter(|(_, &r)| r > 0)
        .map(|(i, &r)| (i, r as u64))
        .collect();
    Ok((nonzero, true))
}

pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_table_with(ideal, &BettiOptions::default()).map(|(t, _)| t)
}

/// Betti table over the chosen field, with statistics. Multidegrees are
/// processed in parallel and merged in lattice order.
pub fn betti_table_with(
    ideal: &MonomialIdeal,
    opts: &BettiOptions,
) -> Result<(BettiTable, BettiStats)> {
    let lattice = lcm_lattice(ideal, &opts.caps)?;
    let results: Vec<(u32, Vec<(usize, u64)>, bool)> = lattice
        .par_iter()
        .map(|b| betti_at(ideal, b, opts).map(|(v, built)| (b.degree(), v, built)))
        .collect::<Result<_>>()?;
    let mut entries = BTreeMap::new();
    let mut stats = BettiStats {
        lattice_size: lattice.len(),
        ..BettiStats::default()
    };
    for (degree, nonzero, built) in results {
        if built {
            stats.complexes_built += 1;
            stats.euler_checks += 1;
        } else {
            stats.cones_skipped += 1;
        }
        for (i, r) in nonzero {
            *entries.entry((i, degree)).or_insert(0) += r;
        }
    }
    Ok((BettiTable { entries, field: opts.field }, stats))
}

/// `reg(I)`, the regularity of the ideal.
pub fn regularity(ideal: &MonomialIdeal) -> Result<u32> {
    regularity_with(ideal, &BettiOptions::default())
}

pub fn regularity_with(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<u32> {
    if ideal.generators().is_empty() {
        return Err(Error::invalid("the zero ideal has no regularity"));
    }
    let (table, _) = betti_table_with(ideal, opts)?;
    Ok(table.regularity().expect("nonzero ideal"))
}

/// `reg(I(G)^s)`. Computed on the power itself; polarization preserves graded
/// Betti numbers, so this equals the regularity of the polarized power.
pub fn reg_power(g: &Graph, s: usize) -> Result<u32> {
    reg_power_with(g, s, &BettiOptions::default())
}

pub fn reg_power_with(g: &Graph, s: usize, opts: &BettiOptions) -> Result<u32> {
    if g.edge_count() == 0 {
        return Err(Error::invalid("the edge ideal of an edgeless graph is zero"));
    }
    let power = power_with(&edge_ideal(g), s, &opts.caps)?;
    regularity_with(&power, opts)
}

/// Whether an ideal generated in one degree `d` has `β_{i,j} = 0` unless `j = i + d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal) -> Result<bool> {
    has_linear_resolution_with(ideal, &BettiOptions::default())
}

pub fn has_linear_resolution_with(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<bool> {
    let mut degrees = ideal.generators().iter().map(Monomial::degree);
    let Some(d) = degrees.next() else {
        return Err(Error::invalid("the zero ideal has no resolution"));
    };
    if degrees.any(|e| e != d) {
        return Err(Error::invalid("generators have mixed degrees"));
    }
    let (table, _) = betti_table_with(ideal, opts)?;
    let linear = table.entries().all(|e| e.j == e.i as u32 + d);
    Ok(linear)
}
