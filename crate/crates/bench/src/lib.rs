//! Fixtures shared by the benchmarks.

use edgeideal_core::{Family, Graph};

/// Builds a graph from a family expression such as `C8` or `W(P4)`.
pub fn family(expr: &str) -> Graph {
    Family::parse(expr)
        .and_then(|f| f.build())
        .map(|b| b.graph)
        .unwrap_or_else(|e| panic!("{expr}: {e}"))
}

/// `(family, s)` pairs small enough to resolve in milliseconds.
pub const POWERS: &[(&str, usize)] = &[("C5", 2), ("C6", 2), ("P6", 2), ("K2,3", 2), ("W(P3)", 1), ("C8", 1)];
