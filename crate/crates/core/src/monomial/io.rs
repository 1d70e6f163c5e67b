//! Text and JSON forms of monomial ideals.
//!
//! Text form: an optional `# ring: x1 x2 ...` header fixing the variable
//! order, then one generator per line such as `x1^2*x3`. Without a header the
//! variables are ordered by first appearance.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};

impl MonomialIdeal {
    pub fn to_text(&self) -> String {
        let mut out = format!("# ring: {}\n", self.vars.join(" "));
        for g in self.generator_strings() {
            out.push_str(&g);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            variables: self.vars.clone(),
            generators: self
                .gens
                .iter()
                .map(|g| g.support().map(|v| (self.vars[v].clone(), g.exps[v])).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &IdealJson) -> Result<MonomialIdeal> {
        let n = json.variables.len();
        let index: BTreeMap<&str, usize> = json
            .variables
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let gens = json
            .generators
            .iter()
            .map(|g| {
                let mut m = Monomial::one(n);
                for (v, &e) in g {
                    let i = *index
                        .get(v.as_str())
                        .ok_or_else(|| Error::UnknownVariable(v.clone()))?;
                    m.exps[i] += e;
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(json.variables.clone(), gens)
    }
}

/// Serialized ideal: the variable order and one exponent map per generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub variables: Vec<String>,
    pub generators: Vec<BTreeMap<String, u32>>,
}

/// Parses the text form of an ideal.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut vars: Vec<String> = Vec::new();
    let mut fixed = false;
    let mut terms: Vec<(usize, Vec<(String, u32)>)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(ring) = comment.trim().strip_prefix("ring:") {
                if fixed || !terms.is_empty() {
                    return Err(Error::parse(line_no, "ring header must come first and only once"));
                }
                vars = ring.split_whitespace().map(str::to_string).collect();
                fixed = true;
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let mut factors = Vec::new();
        if line != "1" {
            for factor in line.split('*').map(str::trim) {
                let (v, e) = match factor.split_once('^') {
                    Some((v, e)) => (
                        v.trim(),
                        e.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::parse(line_no, format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                if v.is_empty() || v.chars().any(char::is_whitespace) {
                    return Err(Error::parse(line_no, format!("bad factor `{factor}`")));
                }
                if !vars.iter().any(|x| x == v) {
                    if fixed {
                        return Err(Error::parse(line_no, format!("unknown variable `{v}`")));
                    }
                    vars.push(v.to_string());
                }
                factors.push((v.to_string(), e));
            }
        }
        terms.push((line_no, factors));
    }
    let n = vars.len();
    let gens = terms
        .into_iter()
        .map(|(_, factors)| {
            let mut m = Monomial::one(n);
            for (v, e) in factors {
                let i = vars.iter().position(|x| *x == v).expect("registered above");
                m.exps[i] += e;
            }
            m
        })
        .collect();
    MonomialIdeal::new(vars, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;
    use crate::monomial::{edge_ideal, power};

    #[test]
    fn text_round_trip() {
        let i = power(&edge_ideal(&cycle(4).unwrap()), 2).unwrap();
        let text = i.to_text();
        assert!(text.starts_with("# ring: x1 x2 x3 x4\n"));
        assert_eq!(parse_ideal(&text).unwrap(), i);
    }

    #[test]
    fn parse_without_header() {
        let i = parse_ideal("b^2*a\n# note\n\na*b*b*b").unwrap();
        assert_eq!(i.variables(), ["b", "a"]);
        assert_eq!(i.generator_strings(), ["b^2*a"]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_ideal("a^x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_ideal("# ring: a\nb"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_ideal("a**b"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn json_round_trip() {
        let i = power(&edge_ideal(&cycle(5).unwrap()), 2).unwrap();
        let text = serde_json::to_string(&i.to_json()).unwrap();
        let back: IdealJson = serde_json::from_str(&text).unwrap();
        assert_eq!(MonomialIdeal::from_json(&back).unwrap(), i);
    }
}
