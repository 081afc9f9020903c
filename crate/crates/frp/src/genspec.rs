//! Generator specifications such as `n=30,p=0.4,w=-3..8,seed=7`.

use std::fmt;
use std::str::FromStr;

use frp_core::graph_core::{Graph, VertexId};
use frp_core::lowerbound_gadget::UndirectedGraph;
use frp_core::oracle::gen;
use rand::Rng;

/// Why a generator spec was rejected.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GenSpecError {
    #[error("expected `key=value`, found {0:?}")]
    Field(String),
    #[error("unknown key {0:?} (expected n, p, w or seed)")]
    UnknownKey(String),
    #[error("bad value for {key}: {value:?}")]
    Value { key: &'static str, value: String },
    #[error("missing key {0}")]
    Missing(&'static str),
    #[error("no instance with a reachable target after {0} seeds")]
    Exhausted(usize),
}

/// Random digraph parameters. `n` may be a range `lo..hi` (inclusive),
/// drawn per instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub n: (usize, usize),
    pub p: f64,
    pub w: (i64, i64),
    pub seed: Option<u64>,
}

/// A generated instance and the seed that produced it.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub s: VertexId,
    pub t: VertexId,
    pub seed: u64,
}

/// Seeds tried before a spec is declared unusable.
const MAX_REDRAWS: usize = 1000;

fn range<T: FromStr + Copy + PartialOrd>(key: &'static str, v: &str) -> Result<(T, T), GenSpecError> {
    let bad = || GenSpecError::Value { key, value: v.to_string() };
    // Split at the first `..` that is not part of a leading minus sign.
    let (lo, hi) = match v.find("..") {
        Some(at) => (&v[..at], &v[at + 2..]),
        None => (v, v),
    };
    let lo: T = lo.trim().parse().map_err(|_| bad())?;
    let hi: T = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

impl FromStr for GenSpec {
    type Err = GenSpecError;

    fn from_str(s: &str) -> Result<GenSpec, GenSpecError> {
        let (mut n, mut p, mut w, mut seed) = (None, None, None, None);
        for field in s.split(',').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, value) = field.split_once('=').ok_or_else(|| GenSpecError::Field(field.to_string()))?;
            match key.trim() {
                "n" => n = Some(range::<usize>("n", value)?),
                "p" => {
                    let x: f64 = value.parse().map_err(|_| GenSpecError::Value { key: "p", value: value.into() })?;
                    if !(0.0..=1.0).contains(&x) {
                        return Err(GenSpecError::Value { key: "p", value: value.into() });
                    }
                    p = Some(x);
                }
                "w" => w = Some(range::<i64>("w", value)?),
                "seed" => {
                    seed = Some(value.parse().map_err(|_| GenSpecError::Value { key: "seed", value: value.into() })?)
                }
                other => return Err(GenSpecError::UnknownKey(other.to_string())),
            }
        }
        let n = n.ok_or(GenSpecError::Missing("n"))?;
        if n.0 == 0 {
            return Err(GenSpecError::Value { key: "n", value: "0".into() });
        }
        Ok(GenSpec { n, p: p.ok_or(GenSpecError::Missing("p"))?, w: w.unwrap_or((1, 1)), seed })
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n.0 == self.n.1 {
            write!(f, "n={}", self.n.0)?;
        } else {
            write!(f, "n={}..{}", self.n.0, self.n.1)?;
        }
        write!(f, ",p={},w={}..{}", self.p, self.w.0, self.w.1)?;
        if let Some(seed) = self.seed {
            write!(f, ",seed={seed}")?;
        }
        Ok(())
    }
}

impl GenSpec {
    /// The weight bound `M = max(|lo|, |hi|)`.
    pub fn weight_bound(&self) -> i64 {
        self.w.0.abs().max(self.w.1.abs())
    }

    /// The instance for `seed`: `s = 0` and `t` the target with the most
    /// edges on its shortest path. Seeds whose source reaches nothing are
    /// skipped (the next seed is tried).
    pub fn instance(&self, seed: u64) -> Result<Generated, GenSpecError> {
        for k in 0..MAX_REDRAWS as u64 {
            let used = seed.wrapping_add(k);
            let mut rng = gen::rng(used);
            let n = rng.random_range(self.n.0..=self.n.1);
            if let Some((graph, s, t)) = gen::random_instance(&mut rng, n, self.p, self.w.0, self.w.1) {
                return Ok(Generated { graph, s, t, seed: used });
            }
        }
        Err(GenSpecError::Exhausted(MAX_REDRAWS))
    }

    /// An undirected Erdős–Rényi graph for the triangle reduction.
    pub fn undirected(&self, seed: u64) -> UndirectedGraph {
        let mut rng = gen::rng(seed);
        let n = rng.random_range(self.n.0..=self.n.1);
        gen::random_undirected(&mut rng, n, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_form() {
        let g: GenSpec = "n=30,p=0.4,w=-3..8,seed=7".parse().unwrap();
        assert_eq!(g, GenSpec { n: (30, 30), p: 0.4, w: (-3, 8), seed: Some(7) });
        assert_eq!(g.to_string(), "n=30,p=0.4,w=-3..8,seed=7");
        assert_eq!(g.weight_bound(), 8);
        let r: GenSpec = "n=6..40, p=0.5, w=-4..-1".parse().unwrap();
        assert_eq!((r.n, r.w, r.seed), ((6, 40), (-4, -1), None));
    }

    #[test]
    fn rejects_malformed_specs() {
        assert_eq!("p=0.4".parse::<GenSpec>(), Err(GenSpecError::Missing("n")));
        assert!(matches!("n=3,p=2".parse::<GenSpec>(), Err(GenSpecError::Value { key: "p", .. })));
        assert!(matches!("n=3,p=0.1,x=1".parse::<GenSpec>(), Err(GenSpecError::UnknownKey(_))));
        assert!(matches!("n=3,p=0.1,w=5..1".parse::<GenSpec>(), Err(GenSpecError::Value { key: "w", .. })));
        assert!(matches!("n30".parse::<GenSpec>(), Err(GenSpecError::Field(_))));
    }

    #[test]
    fn instances_are_reproducible() {
        let g: GenSpec = "n=12,p=0.3,w=-2..5".parse().unwrap();
        let (a, b) = (g.instance(3).unwrap(), g.instance(3).unwrap());
        assert_eq!((a.graph, a.s, a.t, a.seed), (b.graph, b.s, b.t, b.seed));
    }
}
