//! Resource caps for the exponential searches.

use crate::error::{Error, Result};

/// Environment variable read by [`Caps::from_env`].
pub const CAPS_ENV: &str = "EDGEIDEAL_CAPS";

/// Upper limits on the sizes the exact searches will attempt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Vertex limit for NP-hard graph invariants.
    pub vertices: usize,
    /// Edge limit for NP-hard graph invariants.
    pub edges: usize,
    /// Limit on the number of lcm-lattice elements visited by the Betti oracle.
    pub lattice: usize,
    /// Limit on raw products formed while computing a power of an ideal.
    pub generators: usize,
    /// Limit on faces of a single upper Koszul complex.
    pub faces: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            vertices: 24,
            edges: 60,
            lattice: 50_000,
            generators: 200_000,
            faces: 1 << 22,
        }
    }
}

impl Caps {
    /// Caps with no practical limit; used by tests that size their inputs themselves.
    pub fn unlimited() -> Self {
        Caps {
            vertices: usize::MAX,
            edges: usize::MAX,
            lattice: usize::MAX,
            generators: usize::MAX,
            faces: usize::MAX,
        }
    }

    /// Applies overrides of the form `vertices=30,lattice=100000`.
    pub fn with_overrides(mut self, expr: &str) -> Result<Self> {
        for item in expr.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("cap override `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("cap override `{item}` has a non-numeric value")))?;
            match key.trim() {
                "vertices" => self.vertices = value,
                "edges" => self.edges = value,
                "lattice" => self.lattice = value,
                "generators" => self.generators = value,
                "faces" => self.faces = value,
                other => return Err(Error::invalid(format!("unknown cap `{other}`"))),
            }
        }
        Ok(self)
    }

    /// Defaults overridden by [`CAPS_ENV`] when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAPS_ENV) {
            Ok(expr) => Caps::default().with_overrides(&expr),
            Err(_) => Ok(Caps::default()),
        }
    }

    pub(crate) fn check(&self, what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            Err(Error::ResourceCap {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_graph(&self, graph: &crate::Graph) -> Result<()> {
        self.check("vertex count", graph.vertex_count(), self.vertices)?;
        self.check("edge count", graph.edge_count(), self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let caps = Caps::default().with_overrides("vertices=30, lattice=7").unwrap();
        assert_eq!(caps.vertices, 30);
        assert_eq!(caps.lattice, 7);
        assert_eq!(caps.edges, 60);
        assert!(Caps::default().with_overrides("bogus=1").is_err());
        assert!(Caps::default().with_overrides("edges").is_err());
    }
}
