//! Finite simplicial complexes on at most 64 vertices and their reduced homology.

use std::collections::HashMap;

use super::rank::{rank_mod_p, rank_rational};
use super::Field;
use crate::error::{Error, Result};
use crate::graph::bits;

/// A simplicial complex given by its facets; faces are `u64` vertex masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: Vec<u64>,
}

/// Face counts and reduced homology ranks, both indexed by dimension + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homology {
    pub face_counts: Vec<usize>,
    pub ranks: Vec<usize>,
}

impl Homology {
    /// Reduced rank in dimension `d ≥ -1`.
    pub fn rank(&self, d: isize) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.ranks.get(i).copied())
            .unwrap_or(0)
    }

    /// Reduced Euler characteristic from face counts (the empty face counts in dimension −1).
    pub fn euler_from_faces(&self) -> i64 {
        alternating(&self.face_counts)
    }

    pub fn euler_from_homology(&self) -> i64 {
        alternating(&self.ranks)
    }
}

fn alternating(v: &[usize]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 0 { -(c as i64) } else { c as i64 })
        .sum()
}

impl SimplicialComplex {
    /// The complex generated by the given faces; non-maximal ones are dropped.
    /// An empty list gives the void complex, `[0]` the complex `{∅}`.
    pub fn from_facets(mut facets: Vec<u64>) -> Self {
        facets.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
        let mut kept: Vec<u64> = Vec::new();
        for f in facets {
            if !kept.iter().any(|&k| f & !k == 0) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        SimplicialComplex { facets: kept }
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// Whether some vertex lies in every facet (then the complex is contractible).
    pub fn is_cone(&self) -> bool {
        !self.facets.is_empty() && self.facets.iter().fold(u64::MAX, |acc, &f| acc & f) != 0
    }

    pub fn dimension(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
            .unwrap_or(-2)
    }

    /// All faces, sorted by size and then by mask.
    pub fn faces(&self, cap: usize) -> Result<Vec<u64>> {
        let mut seen = std::collections::HashSet::new();
        let mut stack: Vec<u64> = self.facets.clone();
        while let Some(f) = stack.pop() {
            if !seen.insert(f) {
                continue;
            }
            if seen.len() > cap {
                return Err(Error::ResourceCap {
                    what: "faces of a simplicial complex",
                    limit: cap,
                    actual: seen.len(),
                });
            }
            for v in bits(f) {
                let g = f & !(1 << v);
                if !seen.contains(&g) {
                    stack.push(g);
                }
            }
        }
        let mut faces: Vec<u64> = seen.into_iter().collect();
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        Ok(faces)
    }

    /// Reduced homology ranks over `field`, after elementary collapses.
    pub fn homology(&self, field: Field, face_cap: usize) -> Result<Homology> {
        if self.facets.is_empty() {
            return Ok(Homology { face_counts: vec![], ranks: vec![] });
        }
        let faces = self.faces(face_cap)?;
        let top = faces.last().map_or(0, |f| f.count_ones() as usize);
        let mut face_counts = vec![0usize; top + 1];
        for f in &faces {
            face_counts[f.count_ones() as usize] += 1;
        }
        let alive = collapse(&faces);
        let mut by_dim: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
        for (f, ok) in faces.iter().zip(&alive) {
            if *ok {
                by_dim[f.count_ones() as usize].push(*f);
            }
        }
        // rank of the boundary from size k to size k-1, for k = 1..=top
        let mut boundary_rank = vec![0usize; top + 2];
        for k in 1..=top {
            if by_dim[k].is_empty() || by_dim[k - 1].is_empty() {
                continue;
            }
            let row_of: HashMap<u64, usize> =
                by_dim[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let mut matrix = vec![vec![0i64; by_dim[k].len()]; by_dim[k - 1].len()];
            for (col, &f) in by_dim[k].iter().enumerate() {
                for (pos, v) in bits(f).enumerate() {
                    if let Some(&row) = row_of.get(&(f & !(1 << v))) {
                        matrix[row][col] = if pos % 2 == 0 { 1 } else { -1 };
                    }
                }
            }
            boundary_rank[k] = match field {
                Field::Rational => rank_rational(&matrix),
                Field::Prime(p) => rank_mod_p(&matrix, p),
            };
        }
        let ranks: Vec<usize> = (0..=top)
            .map(|k| by_dim[k].len() - boundary_rank[k] - boundary_rank[k + 1])
            .collect();
        Ok(Homology { face_counts, ranks })
    }

    /// Reduced homology rank in dimension `d` over the rationals.
    pub fn reduced_homology_rank(&self, d: isize) -> usize {
        self.homology(Field::Rational, usize::MAX)
            .expect("no face cap")
            .rank(d)
    }
}

/// Repeatedly removes a free face (one with a single proper coface) together
/// with that coface. The empty face is never removed. Returns the survivors.
fn collapse(faces: &[u64]) -> Vec<bool> {
    let index: HashMap<u64, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut cofaces = vec![0usize; faces.len()];
    for &f in faces {
        for v in bits(f) {
            cofaces[index[&(f & !(1 << v))]] += 1;
        }
    }
    let mut alive = vec![true; faces.len()];
    let mut queue: Vec<usize> = (0..faces.len())
        .filter(|&i| faces[i] != 0 && cofaces[i] == 1)
        .collect();
    let universe = faces.iter().fold(0u64, |acc, &f| acc | f);
    while let Some(i) = queue.pop() {
        if !alive[i] || cofaces[i] != 1 {
            continue;
        }
        let sigma = faces[i];
        let Some(j) = bits(universe & !sigma)
            .filter_map(|v| index.get(&(sigma | 1 << v)).copied())
            .find(|&j| alive[j])
        else {
            continue;
        };
        alive[i] = false;
        alive[j] = false;
        let tau = faces[j];
        for v in bits(tau) {
            let k = index[&(tau & !(1 << v))];
            cofaces[k] -= 1;
            if alive[k] && faces[k] != 0 && cofaces[k] == 1 {
                queue.push(k);
            }
        }
        for v in bits(sigma) {
            let k = index[&(sigma & !(1 << v))];
            cofaces[k] -= 1;
            if alive[k] && faces[k] != 0 && cofaces[k] == 1 {
                queue.push(k);
            }
        }
    }
    alive
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hollow_triangle() {
        let k = SimplicialComplex::from_facets(vec![0b011, 0b110, 0b101]);
        assert_eq!(k.reduced_homology_rank(1), 1);
        assert_eq!(k.reduced_homology_rank(0), 0);
    }

    #[test]
    fn simplex_is_acyclic() {
        let k = SimplicialComplex::from_facets(vec![0b1111, 0b0011]);
        assert_eq!(k.facets(), [0b1111]);
        for d in -1..4 {
            assert_eq!(k.reduced_homology_rank(d), 0);
        }
        assert!(k.is_cone());
    }

    #[test]
    fn two_points() {
        let k = SimplicialComplex::from_facets(vec![0b01, 0b10]);
        assert_eq!(k.reduced_homology_rank(0), 1);
        let empty_face = SimplicialComplex::from_facets(vec![0]);
        assert_eq!(empty_face.reduced_homology_rank(-1), 1);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // Six-vertex triangulation of the real projective plane.
        let tri = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let facets = tri.iter().map(|t| t.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let k = SimplicialComplex::from_facets(facets);
        let q = k.homology(Field::Rational, usize::MAX).unwrap();
        assert_eq!(q.rank(1), 0);
        assert_eq!(q.rank(2), 0);
        let f2 = k.homology(Field::Prime(2), usize::MAX).unwrap();
        assert_eq!(f2.rank(1), 1);
        assert_eq!(f2.rank(2), 1);
        assert_eq!(q.euler_from_faces(), q.euler_from_homology());
        assert_eq!(f2.euler_from_faces(), f2.euler_from_homology());
    }

    #[test]
    fn face_cap() {
        let k = SimplicialComplex::from_facets(vec![0xff]);
        assert!(k.faces(10).unwrap_err().is_resource());
    }
}
