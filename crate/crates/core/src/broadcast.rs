//! 2-limited broadcasts `f: V → {0,1,2}`.
//!
//! A vertex `u` hears from `v` when `f(v) > 0` and `dist(u, v) <= f(v)`. A
//! broadcast is dominating when every vertex hears from some vertex.
//! Validity is always recomputed against a graph and never cached.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{SubcubicGraph, VertexSet};

/// Largest value a 2-limited broadcast may assign.
pub const LIMIT: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BroadcastError {
    #[error("value {value} at vertex {vertex} is outside 0..={LIMIT}")]
    ValueOutOfRange { vertex: usize, value: u32 },
    #[error("broadcast has {found} values but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} does not have value 2")]
    NotValueTwo { vertex: usize },
    #[error("moving the value at vertex {vertex} to its neighbors leaves {uncovered:?} undominated")]
    NotDominatingAfterNormalize { vertex: usize, uncovered: VertexSet },
    #[error("vertex {vertex} of the ambient graph is claimed by both parts")]
    OverlappingDomains { vertex: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed broadcast literal `{0}`")]
    Literal(String),
}

/// Dense value vector, one entry per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Broadcast {
    values: Vec<u8>,
}

impl TryFrom<Vec<u8>> for Broadcast {
    type Error = BroadcastError;

    fn try_from(values: Vec<u8>) -> Result<Self, Self::Error> {
        Self::new(values)
    }
}

impl From<Broadcast> for Vec<u8> {
    fn from(f: Broadcast) -> Self {
        f.values
    }
}

impl fmt::Debug for Broadcast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Broadcast({self})")
    }
}

impl Broadcast {
    pub fn new(values: Vec<u8>) -> Result<Self, BroadcastError> {
        if let Some((vertex, &v)) = values.iter().enumerate().find(|(_, &v)| v > LIMIT) {
            return Err(BroadcastError::ValueOutOfRange { vertex, value: v.into() });
        }
        Ok(Broadcast { values })
    }

    pub fn zeros(n: usize) -> Self {
        Broadcast { values: vec![0; n] }
    }

    /// Checks that the broadcast fits `g`.
    pub fn for_graph(values: Vec<u8>, g: &SubcubicGraph) -> Result<Self, BroadcastError> {
        let f = Self::new(values)?;
        f.check_len(g)?;
        Ok(f)
    }

    fn check_len(&self, g: &SubcubicGraph) -> Result<(), BroadcastError> {
        if self.values.len() != g.vertex_count() {
            return Err(BroadcastError::LengthMismatch {
                expected: g.vertex_count(),
                found: self.values.len(),
            });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn get(&self, v: usize) -> u8 {
        self.values[v]
    }

    /// Sets `f(v)`; panics when `value > 2`.
    pub fn set(&mut self, v: usize, value: u8) {
        assert!(value <= LIMIT, "broadcast values are at most {LIMIT}");
        self.values[v] = value;
    }

    /// `cost(f) = Σ f(v)`.
    pub fn cost(&self) -> u32 {
        self.values.iter().map(|&v| u32::from(v)).sum()
    }

    /// `V_f^+`.
    pub fn support(&self) -> VertexSet {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// `V_f^i`, the vertices with value exactly `i`.
    pub fn level(&self, i: u8) -> VertexSet {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == i)
            .map(|(v, _)| v)
            .collect()
    }

    /// The vertices that hear from some vertex.
    pub fn covered_set(&self, g: &SubcubicGraph) -> Result<VertexSet, BroadcastError> {
        self.check_len(g)?;
        Ok(self.covered_unchecked(g))
    }

    fn covered_unchecked(&self, g: &SubcubicGraph) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for (v, &x) in self.values.iter().enumerate() {
            match x {
                1 => out = out.union(g.closed_neighborhood(v)),
                2 => out = out.union(g.ball2(v)),
                _ => {}
            }
        }
        out
    }

    pub fn is_dominating(&self, g: &SubcubicGraph) -> Result<bool, BroadcastError> {
        Ok(self.covered_set(g)? == g.vertices())
    }

    /// Replaces `f(w) = 2` by `f(w) = 0` and raises each neighbor of `w` to at least 1.
    ///
    /// The result is checked for domination. It never costs more than `f`
    /// when `d(w) <= 2`; for a 3-vertex whose neighbors all have value 0 the
    /// cost goes up by one.
    pub fn normalize_away_2(&self, g: &SubcubicGraph, w: usize) -> Result<Self, BroadcastError> {
        self.check_len(g)?;
        if w >= self.values.len() {
            return Err(BroadcastError::VertexOutOfRange { vertex: w, n: self.values.len() });
        }
        if self.values[w] != 2 {
            return Err(BroadcastError::NotValueTwo { vertex: w });
        }
        let mut out = self.clone();
        out.values[w] = 0;
        for &x in g.neighbors(w) {
            out.values[x] = out.values[x].max(1);
        }
        let uncovered = g.vertices().difference(out.covered_unchecked(g));
        if !uncovered.is_empty() {
            return Err(BroadcastError::NotDominatingAfterNormalize { vertex: w, uncovered });
        }
        Ok(out)
    }

    /// `f₁ ∪ f₂` on an ambient graph with `n` vertices.
    ///
    /// `map1[i]` is the ambient index of vertex `i` of the first part, and
    /// likewise for `map2`. Ambient vertices in neither part get 0.
    pub fn union(
        n: usize,
        f1: &Broadcast,
        map1: &[usize],
        f2: &Broadcast,
        map2: &[usize],
    ) -> Result<Self, BroadcastError> {
        let mut values = vec![0u8; n];
        let mut claimed = vec![false; n];
        for (f, map) in [(f1, map1), (f2, map2)] {
            if f.len() != map.len() {
                return Err(BroadcastError::LengthMismatch { expected: map.len(), found: f.len() });
            }
            for (i, &a) in map.iter().enumerate() {
                if a >= n {
                    return Err(BroadcastError::VertexOutOfRange { vertex: a, n });
                }
                if claimed[a] {
                    return Err(BroadcastError::OverlappingDomains { vertex: a });
                }
                claimed[a] = true;
                values[a] = f.values[i];
            }
        }
        Ok(Broadcast { values })
    }

    /// Parses `"v:f(v),..."` for a graph on `n` vertices; unlisted vertices get 0.
    pub fn parse_literal(s: &str, n: usize) -> Result<Self, BroadcastError> {
        let mut values = vec![0u8; n];
        let bad = || BroadcastError::Literal(s.to_string());
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (v, x) = item.split_once(':').ok_or_else(bad)?;
            let v: usize = v.trim().parse().map_err(|_| bad())?;
            let x: u32 = x.trim().parse().map_err(|_| bad())?;
            if v >= n {
                return Err(BroadcastError::VertexOutOfRange { vertex: v, n });
            }
            if x > u32::from(LIMIT) {
                return Err(BroadcastError::ValueOutOfRange { vertex: v, value: x });
            }
            values[v] = x as u8;
        }
        Ok(Broadcast { values })
    }
}

/// The literal form `"v:f(v),..."`, listing positive entries only.
impl fmt::Display for Broadcast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, &x) in self.values.iter().enumerate().filter(|(_, &x)| x > 0) {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{v}:{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Broadcast {
    type Err = BroadcastError;

    /// Parses a plain digit string such as `"0120"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .trim()
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| BroadcastError::Literal(s.into())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(values)
    }
}
