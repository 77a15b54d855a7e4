//! Exhaustive generation of small connected subcubic graphs, one per isomorphism class.
//!
//! Every connected graph has a vertex whose removal leaves it connected, so
//! all connected graphs on `k` vertices arise from those on `k - 1` vertices
//! by adding one vertex joined to a nonempty set of vertices of degree
//! below three. Each level is reduced to canonical representatives before
//! the next is built. For cubic targets, intermediate graphs whose missing
//! degree can no longer be made up by the remaining vertices are dropped.

use std::collections::BTreeMap;
use std::path::Path;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::canonical_labeling;
use crate::graph::{SubcubicGraph, VertexSet};
use crate::graph6::{parse_corpus, FormatError};
use crate::named::{named, NamedError};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("order {n} exceeds the generation cap of {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
    #[error("order must be at least 1")]
    InvalidOrder,
    #[error("reading {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Named(#[from] NamedError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Generated { n: usize, cubic_only: bool, triangle_free: bool },
    File(String),
    Named(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStream {
    pub graphs: Vec<SubcubicGraph>,
    pub provenance: Provenance,
}

impl GraphStream {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// Reads a graph6/sparse6 corpus, one graph per line.
    pub fn from_file(path: &Path) -> Result<Self, GenError> {
        let text = std::fs::read_to_string(path).map_err(|source| GenError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Ok(GraphStream {
            graphs: parse_corpus(&text)?,
            provenance: Provenance::File(path.display().to_string()),
        })
    }

    pub fn from_names(names: &[&str]) -> Result<Self, GenError> {
        let graphs = names.iter().map(|s| named(s)).collect::<Result<_, _>>()?;
        Ok(GraphStream {
            graphs,
            provenance: Provenance::Named(names.iter().map(|s| s.to_string()).collect()),
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GenOptions {
    pub cubic_only: bool,
    pub triangle_free: bool,
    pub max_cubic: usize,
    pub max_general: usize,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions { cubic_only: false, triangle_free: false, max_cubic: 14, max_general: 10 }
    }
}

pub fn enumerate_connected(n: usize, cubic_only: bool) -> Result<GraphStream, GenError> {
    enumerate_connected_with(n, &GenOptions { cubic_only, ..GenOptions::default() })
}

/// All connected graphs on `n` vertices up to isomorphism, in canonical
/// labeling, sorted by graph6 text.
pub fn enumerate_connected_with(n: usize, opts: &GenOptions) -> Result<GraphStream, GenError> {
    let cap = if opts.cubic_only { opts.max_cubic } else { opts.max_general };
    if n == 0 {
        return Err(GenError::InvalidOrder);
    }
    if n > cap {
        return Err(GenError::SizeLimitExceeded { n, cap });
    }
    let provenance = Provenance::Generated {
        n,
        cubic_only: opts.cubic_only,
        triangle_free: opts.triangle_free,
    };
    if opts.cubic_only && n % 2 == 1 {
        return Ok(GraphStream { graphs: Vec::new(), provenance });
    }
    let mut level = vec![SubcubicGraph::empty(1).expect("one vertex")];
    for k in 2..=n {
        let found: Vec<(Vec<u8>, SubcubicGraph)> = level
            .par_iter()
            .flat_map_iter(|h| extensions(h, opts.triangle_free))
            .filter(|g| !opts.cubic_only || cubic_reachable(g, n - k))
            .map(|g| {
                let c = canonical_labeling(&g);
                (c.form, g.permute(&c.perm))
            })
            .collect();
        let unique: BTreeMap<Vec<u8>, SubcubicGraph> = found.into_iter().collect();
        level = unique.into_values().collect();
    }
    if opts.cubic_only {
        level.retain(SubcubicGraph::is_cubic);
    }
    Ok(GraphStream { graphs: level, provenance })
}

/// `h` plus a new vertex joined to each admissible neighbor set.
fn extensions(h: &SubcubicGraph, triangle_free: bool) -> impl Iterator<Item = SubcubicGraph> + '_ {
    let k = h.vertex_count();
    let open: Vec<usize> = (0..k).filter(|&v| h.degree(v) < 3).collect();
    let m = open.len();
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for a in 0..m {
        sets.push(vec![open[a]]);
        for b in a + 1..m {
            sets.push(vec![open[a], open[b]]);
            for c in b + 1..m {
                sets.push(vec![open[a], open[b], open[c]]);
            }
        }
    }
    let base = h.edges();
    sets.into_iter()
        .filter(move |s| {
            !triangle_free || s.iter().all(|&x| s.iter().all(|&y| x == y || !h.has_edge(x, y)))
        })
        .map(move |s| {
            let mut edges = base.clone();
            edges.extend(s.iter().map(|&x| (x, k)));
            SubcubicGraph::build(k + 1, &edges).expect("open vertices have spare degree")
        })
}

/// Whether `r` more vertices can still complete `g` to a cubic graph.
///
/// With deficiency `D = Σ (3 - d(v))`, the new vertices send `D` edges into
/// `g` and span `e` edges among themselves, so `D = 3r - 2e` with
/// `0 <= e <= min(C(r,2), ⌊3r/2⌋)`.
fn cubic_reachable(g: &SubcubicGraph, r: usize) -> bool {
    let d = 3 * g.vertex_count() - 2 * g.edge_count();
    let e_max = (r * r.saturating_sub(1) / 2).min(3 * r / 2);
    d <= 3 * r && (3 * r - d).is_multiple_of(2) && d + 2 * e_max >= 3 * r
}

/// A random subcubic graph: candidate edges in random order, each kept with
/// probability `p` when both ends still have spare degree.
pub fn random_subcubic<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> SubcubicGraph {
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.random_range(0..=i));
    }
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u] < 3 && deg[v] < 3 && rng.random_bool(p) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    SubcubicGraph::build(n, &edges).expect("degrees are capped")
}

/// A random connected subcubic graph: a random tree of maximum degree 3 plus
/// up to `extra` further random edges.
pub fn random_connected_subcubic<R: Rng + ?Sized>(n: usize, extra: usize, rng: &mut R) -> SubcubicGraph {
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    let mut adj = vec![VertexSet::EMPTY; n];
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| deg[u] < 3).collect();
        let u = open[rng.random_range(0..open.len())];
        deg[u] += 1;
        deg[v] += 1;
        adj[u].insert(v);
        adj[v].insert(u);
        edges.push((u, v));
    }
    for _ in 0..extra {
        if n < 2 {
            break;
        }
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v && deg[u] < 3 && deg[v] < 3 && !adj[u].contains(v) {
            deg[u] += 1;
            deg[v] += 1;
            adj[u].insert(v);
            adj[v].insert(u);
            edges.push((u, v));
        }
    }
    SubcubicGraph::build(n, &edges).expect("degrees are capped")
}
