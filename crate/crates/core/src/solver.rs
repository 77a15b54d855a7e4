//! Exact `γ_{b,2}` by branch-and-bound, with a brute-force oracle and cheap bounds.
//!
//! The search treats each vertex `v` as two candidate actions, `(N[v], 1)`
//! and `(N₂[v], 2)`, and looks for a minimum-cost cover of the vertex set
//! using at most one action per vertex.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::broadcast::Broadcast;
use crate::graph::{SubcubicGraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("{n} vertices exceeds the solver cap of {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
    #[error("deadline reached after {nodes} search nodes")]
    Timeout { nodes: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BruteForce,
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub gamma: u32,
    pub certificate: Broadcast,
    pub nodes_explored: u64,
    pub method: Method,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Largest vertex count accepted by [`gamma_exact_with`].
    pub cap: usize,
    /// Largest vertex count accepted by [`gamma_brute_force_with`].
    pub brute_cap: usize,
    pub deadline: Option<Instant>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { cap: 64, brute_cap: 12, deadline: None }
    }
}

pub fn gamma_exact(g: &SubcubicGraph) -> Result<SolveResult, SolveError> {
    gamma_exact_with(g, &SolveOptions::default())
}

/// Branch-and-bound, one component at a time.
pub fn gamma_exact_with(g: &SubcubicGraph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let n = g.vertex_count();
    if n > opts.cap {
        return Err(SolveError::SizeLimitExceeded { n, cap: opts.cap });
    }
    let mut values = vec![0u8; n];
    let mut gamma = 0;
    let mut nodes = 0;
    for comp in g.components() {
        let mut s = Search::new(g, comp, opts.deadline);
        s.run()?;
        nodes += s.nodes;
        gamma += s.best_cost;
        for (v, val) in s.best {
            values[v] = val;
        }
    }
    Ok(SolveResult {
        gamma,
        certificate: Broadcast::new(values).expect("values are 1 or 2"),
        nodes_explored: nodes,
        method: Method::BranchAndBound,
    })
}

struct Search<'a> {
    g: &'a SubcubicGraph,
    comp: VertexSet,
    /// Number of actions able to cover each vertex.
    options: Vec<usize>,
    best: Vec<(usize, u8)>,
    best_cost: u32,
    chosen: Vec<(usize, u8)>,
    nodes: u64,
    deadline: Option<Instant>,
}

impl<'a> Search<'a> {
    fn new(g: &'a SubcubicGraph, comp: VertexSet, deadline: Option<Instant>) -> Self {
        let options = (0..g.vertex_count())
            .map(|u| g.closed_neighborhood(u).len() + g.ball2(u).len())
            .collect();
        let (best_cost, best) = greedy_within(g, comp);
        Search { g, comp, options, best, best_cost, chosen: Vec::new(), nodes: 0, deadline }
    }

    fn action(&self, v: usize, val: u8) -> VertexSet {
        if val == 1 {
            self.g.closed_neighborhood(v)
        } else {
            self.g.ball2(v)
        }
    }

    fn run(&mut self) -> Result<(), SolveError> {
        self.dfs(self.comp, VertexSet::EMPTY, 0)
    }

    /// Ceiling of `|U|` over the best new-coverage-per-unit-cost of any action.
    fn bound(&self, uncovered: VertexSet, used: VertexSet) -> u32 {
        let (mut m1, mut m2) = (0, 0);
        for v in self.g.closed_neighborhood_of_set(self.g.closed_neighborhood_of_set(uncovered)).iter() {
            if used.contains(v) {
                continue;
            }
            m1 = m1.max(self.g.closed_neighborhood(v).intersection(uncovered).len());
            m2 = m2.max(self.g.ball2(v).intersection(uncovered).len());
        }
        let per2 = (2 * m1).max(m2);
        if per2 == 0 {
            return u32::MAX / 2;
        }
        (2 * uncovered.len()).div_ceil(per2) as u32
    }

    fn dfs(&mut self, uncovered: VertexSet, used: VertexSet, cost: u32) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(SolveError::Timeout { nodes: self.nodes });
                }
            }
        }
        if uncovered.is_empty() {
            if cost < self.best_cost {
                self.best_cost = cost;
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        if cost + self.bound(uncovered, used) >= self.best_cost {
            return Ok(());
        }
        let u = uncovered
            .iter()
            .min_by_key(|&u| (self.options[u], u))
            .expect("nonempty");
        let mut branches: Vec<(usize, u8, usize)> = Vec::new();
        for v in self.g.ball2(u).iter().filter(|&v| !used.contains(v)) {
            let near = self.g.closed_neighborhood(v);
            let new2 = self.g.ball2(v).intersection(uncovered);
            if near.contains(u) {
                branches.push((v, 1, near.intersection(uncovered).len()));
                // (v,2) only helps when it reaches a needed vertex outside N[v].
                if !new2.is_subset(near) {
                    branches.push((v, 2, new2.len()));
                }
            } else {
                branches.push((v, 2, new2.len()));
            }
        }
        // Best new-coverage per unit cost first, ties by vertex then value.
        branches.sort_by(|a, b| {
            (b.2 * a.1 as usize)
                .cmp(&(a.2 * b.1 as usize))
                .then(a.0.cmp(&b.0))
                .then(a.1.cmp(&b.1))
        });
        for (v, val, _) in branches {
            self.chosen.push((v, val));
            let rest = uncovered.difference(self.action(v, val));
            self.dfs(rest, used.with(v), cost + u32::from(val))?;
            self.chosen.pop();
        }
        Ok(())
    }
}

fn greedy_within(g: &SubcubicGraph, comp: VertexSet) -> (u32, Vec<(usize, u8)>) {
    let mut uncovered = comp;
    let mut used = VertexSet::EMPTY;
    let mut picks = Vec::new();
    let mut cost = 0;
    while !uncovered.is_empty() {
        // (new, cost, v, val); compare new/cost by cross-multiplication.
        let mut best: Option<(usize, usize, usize, u8)> = None;
        for v in comp.difference(used).iter() {
            for val in [1u8, 2] {
                let reach = if val == 1 { g.closed_neighborhood(v) } else { g.ball2(v) };
                let new = reach.intersection(uncovered).len();
                let c = val as usize;
                let better = match best {
                    None => new > 0,
                    Some((bn, bc, _, _)) => new * bc > bn * c,
                };
                if better {
                    best = Some((new, c, v, val));
                }
            }
        }
        let (_, _, v, val) = best.expect("an uncovered vertex can cover itself");
        let reach = if val == 1 { g.closed_neighborhood(v) } else { g.ball2(v) };
        uncovered = uncovered.difference(reach);
        used.insert(v);
        picks.push((v, val));
        cost += u32::from(val);
    }
    (cost, picks)
}

/// A dominating broadcast built greedily, with its cost.
///
/// Each step takes the unused vertex and value with the most newly covered
/// vertices per unit cost; ties go to the lower vertex, then the lower value.
pub fn greedy_upper_bound(g: &SubcubicGraph) -> (u32, Broadcast) {
    let (cost, picks) = greedy_within(g, g.vertices());
    let mut f = Broadcast::zeros(g.vertex_count());
    for (v, val) in picks {
        f.set(v, val);
    }
    (cost, f)
}

/// `Σ ⌈|C| / 5⌉` over components: one unit of cost reaches at most five vertices.
pub fn counting_lower_bound(g: &SubcubicGraph) -> u32 {
    g.components().iter().map(|c| c.len().div_ceil(5) as u32).sum()
}

pub fn gamma_brute_force(g: &SubcubicGraph) -> Result<SolveResult, SolveError> {
    gamma_brute_force_with(g, &SolveOptions::default())
}

/// Iterative deepening on the exact total cost, enumerating every assignment
/// of that cost and testing it against BFS distances.
pub fn gamma_brute_force_with(
    g: &SubcubicGraph,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    let n = g.vertex_count();
    if n > opts.brute_cap {
        return Err(SolveError::SizeLimitExceeded { n, cap: opts.brute_cap });
    }
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|s| g.bfs_distances(s)).collect();
    // reach[val][v]: vertices within distance val of v.
    let reach: [Vec<u64>; 3] = std::array::from_fn(|val| {
        (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| dist[v][u].is_some_and(|d| val > 0 && d <= val))
                    .fold(0u64, |m, u| m | 1 << u)
            })
            .collect()
    });
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut values = vec![0u8; n];
    let mut nodes = 0u64;
    for c in 0..=(2 * n as u32) {
        if exact_cost(&reach, full, &mut values, 0, c, 0, &mut nodes) {
            return Ok(SolveResult {
                gamma: c,
                certificate: Broadcast::new(values).expect("values are at most 2"),
                nodes_explored: nodes,
                method: Method::BruteForce,
            });
        }
    }
    unreachable!("f ≡ 1 dominates every graph")
}

fn exact_cost(
    reach: &[Vec<u64>; 3],
    full: u64,
    values: &mut [u8],
    i: usize,
    budget: u32,
    covered: u64,
    nodes: &mut u64,
) -> bool {
    *nodes += 1;
    if i == values.len() || budget == 0 {
        return budget == 0 && covered == full;
    }
    for val in (0..=2u8).rev() {
        if u32::from(val) > budget {
            continue;
        }
        values[i] = val;
        let c = covered | reach[val as usize][i];
        if exact_cost(reach, full, values, i + 1, budget - u32::from(val), c, nodes) {
            return true;
        }
    }
    values[i] = 0;
    false
}

/// Every dominating broadcast of `g` with cost exactly `gamma(g)`, in lexicographic order.
pub fn all_minimum_broadcasts(g: &SubcubicGraph, opts: &SolveOptions) -> Result<Vec<Broadcast>, SolveError> {
    let gamma = gamma_exact_with(g, opts)?.gamma;
    let n = g.vertex_count();
    // A vertex is settled once every vertex within distance 2 has a value.
    let mut settled_after: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for u in 0..n {
        let last = g.ball2(u).iter().max().expect("u is in its own ball");
        settled_after[last + 1].push(u);
    }
    let mut out = Vec::new();
    let mut values = vec![0u8; n];
    enumerate(g, &settled_after, &mut values, 0, gamma, VertexSet::EMPTY, &mut out);
    out.sort();
    Ok(out)
}

fn enumerate(
    g: &SubcubicGraph,
    settled_after: &[Vec<usize>],
    values: &mut Vec<u8>,
    i: usize,
    budget: u32,
    covered: VertexSet,
    out: &mut Vec<Broadcast>,
) {
    if settled_after[i].iter().any(|&u| !covered.contains(u)) {
        return;
    }
    if i == values.len() {
        if budget == 0 {
            out.push(Broadcast::new(values.clone()).expect("values are at most 2"));
        }
        return;
    }
    for val in 0..=2u8 {
        if u32::from(val) > budget {
            break;
        }
        values[i] = val;
        let c = match val {
            0 => covered,
            1 => covered.union(g.closed_neighborhood(i)),
            _ => covered.union(g.ball2(i)),
        };
        enumerate(g, settled_after, values, i + 1, budget - u32::from(val), c, out);
    }
    values[i] = 0;
}
