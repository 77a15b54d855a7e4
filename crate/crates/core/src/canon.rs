//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree individualizes vertices of the first non-singleton cell
//! of an equitable ordered partition. Each leaf is a discrete partition and
//! thus a relabeling; the canonical labeling is the leaf whose relabeled
//! adjacency rows are lexicographically largest. Leaves with equal codes
//! yield automorphisms, used to skip equivalent subtrees.

use crate::graph::{SubcubicGraph, VertexSet};
use crate::graph6::to_graph6;

/// The canonical relabeling: `perm[v]` is the new label of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub perm: Vec<usize>,
    pub form: Vec<u8>,
}

/// Isomorphism-invariant byte string: the graph6 text of the canonical relabeling.
pub fn canonical_form(g: &SubcubicGraph) -> Vec<u8> {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &SubcubicGraph) -> Canonical {
    let perm = Searcher::new(g).run();
    let form = to_graph6(&g.permute(&perm)).into_bytes();
    Canonical { perm, form }
}

pub fn is_isomorphic(a: &SubcubicGraph, b: &SubcubicGraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && a.degree_tally() == b.degree_tally()
        && canonical_form(a) == canonical_form(b)
}

type Partition = Vec<Vec<usize>>;

/// Splits cells by the sorted cell indices of each vertex's neighbors until stable.
fn refine(g: &SubcubicGraph, mut cells: Partition) -> Partition {
    let n = g.vertex_count();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let before = cells.len();
        let mut next = Vec::with_capacity(n);
        for c in cells {
            if c.len() == 1 {
                next.push(c);
                continue;
            }
            let mut keyed: Vec<([usize; 3], usize)> = c
                .into_iter()
                .map(|v| {
                    let mut sig = [usize::MAX; 3];
                    for (k, &w) in g.neighbors(v).iter().enumerate() {
                        sig[k] = cell_of[w];
                    }
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                    start = k;
                }
            }
        }
        cells = next;
        if cells.len() == before {
            return cells;
        }
    }
}

fn individualize(cells: &Partition, target: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, c) in cells.iter().enumerate() {
        if i == target {
            out.push(vec![v]);
            out.push(c.iter().copied().filter(|&x| x != v).collect());
        } else {
            out.push(c.clone());
        }
    }
    out
}

struct Leaf {
    code: Vec<u64>,
    /// `perm[v]` is the label of `v` at this leaf.
    perm: Vec<usize>,
    path: Vec<usize>,
}

struct Searcher<'a> {
    g: &'a SubcubicGraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms as vertex maps.
    autos: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a SubcubicGraph) -> Self {
        Searcher { g, first: None, best: None, autos: Vec::new(), path: Vec::new() }
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.vertex_count();
        if n == 0 {
            return Vec::new();
        }
        let mut by_degree: Partition = vec![Vec::new(); 4];
        for v in 0..n {
            by_degree[self.g.degree(v)].push(v);
        }
        by_degree.retain(|c| !c.is_empty());
        let root = refine(self.g, by_degree);
        self.visit(root);
        self.best.expect("at least one leaf").perm
    }

    fn code(&self, perm: &[usize]) -> Vec<u64> {
        let mut rows = vec![0u64; perm.len()];
        for (v, &pv) in perm.iter().enumerate() {
            rows[pv] = self.g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << perm[w]);
        }
        rows
    }

    /// Returns `Some(depth)` to unwind the search to that depth.
    fn visit(&mut self, cells: Partition) -> Option<usize> {
        let depth = self.path.len();
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells);
        };
        let mut children = cells[target].clone();
        children.sort_unstable();
        let mut done: Vec<usize> = Vec::new();
        for v in children {
            if !done.is_empty() {
                let orbit = self.orbit_reps(&self.path);
                if done.iter().any(|&d| orbit[d] == orbit[v]) {
                    continue;
                }
            }
            self.path.push(v);
            let next = refine(self.g, individualize(&cells, target, v));
            let jump = self.visit(next);
            self.path.pop();
            done.push(v);
            if let Some(to) = jump {
                if to < depth {
                    return Some(to);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Partition) -> Option<usize> {
        let n = self.g.vertex_count();
        let mut perm = vec![0usize; n];
        for (i, c) in cells.iter().enumerate() {
            perm[c[0]] = i;
        }
        let code = self.code(&perm);
        let leaf = Leaf { code, perm, path: self.path.clone() };
        if self.first.is_none() {
            self.first = Some(Leaf { code: leaf.code.clone(), perm: leaf.perm.clone(), path: leaf.path.clone() });
            self.best = Some(leaf);
            return None;
        }
        for reference in [self.first.as_ref().unwrap(), self.best.as_ref().unwrap()] {
            if reference.code == leaf.code {
                // reference⁻¹ ∘ leaf maps this leaf's path onto the reference path.
                let mut inv = vec![0usize; n];
                for (v, &p) in reference.perm.iter().enumerate() {
                    inv[p] = v;
                }
                let auto: Vec<usize> = leaf.perm.iter().map(|&p| inv[p]).collect();
                let common = reference
                    .path
                    .iter()
                    .zip(&leaf.path)
                    .take_while(|(a, b)| a == b)
                    .count();
                if auto.iter().enumerate().any(|(v, &w)| v != w) {
                    self.autos.push(auto);
                }
                return Some(common);
            }
        }
        if leaf.code > self.best.as_ref().unwrap().code {
            self.best = Some(leaf);
        }
        None
    }

    /// Orbit representatives under the automorphisms found so far that fix `prefix` pointwise.
    fn orbit_reps(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let fixed: VertexSet = prefix.iter().copied().collect();
        for a in &self.autos {
            if fixed.iter().any(|v| a[v] != v) {
                continue;
            }
            for (v, &w) in a.iter().enumerate() {
                let (x, y) = (find(&mut parent, v), find(&mut parent, w));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named;

    fn shuffled(g: &SubcubicGraph, seed: u64) -> SubcubicGraph {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        g.permute(&perm)
    }

    #[test]
    fn relabelings_agree() {
        for name in ["petersen", "heawood", "cube", "k4star", "p7", "c9", "k33", "prism"] {
            let g = named(name).unwrap();
            let f = canonical_form(&g);
            for seed in 0..20 {
                assert_eq!(canonical_form(&shuffled(&g, seed)), f, "{name} seed {seed}");
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let k33 = named("k33").unwrap();
        let prism = named("prism").unwrap();
        assert_ne!(canonical_form(&k33), canonical_form(&prism));
        assert!(!is_isomorphic(&k33, &prism));
        let c6 = named("c6").unwrap();
        let two_c3 = named("c3").unwrap().disjoint_union(&named("c3").unwrap()).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&two_c3));
    }

    #[test]
    fn canonical_perm_relabels_to_form() {
        let g = shuffled(&named("petersen").unwrap(), 7);
        let c = canonical_labeling(&g);
        assert_eq!(to_graph6(&g.permute(&c.perm)).into_bytes(), c.form);
    }

    #[test]
    fn highly_symmetric_inputs_finish() {
        let empty = SubcubicGraph::empty(20).unwrap();
        assert_eq!(canonical_form(&empty), to_graph6(&empty).into_bytes());
        let matching: Vec<(usize, usize)> = (0..15).map(|i| (2 * i, 2 * i + 1)).collect();
        let m = SubcubicGraph::build(30, &matching).unwrap();
        assert_eq!(canonical_form(&m), canonical_form(&shuffled(&m, 3)));
        let tri: Vec<(usize, usize)> = (0..7)
            .flat_map(|i| [(3 * i, 3 * i + 1), (3 * i + 1, 3 * i + 2), (3 * i, 3 * i + 2)])
            .collect();
        let t = SubcubicGraph::build(21, &tri).unwrap();
        assert_eq!(canonical_form(&t), canonical_form(&shuffled(&t, 5)));
        assert_eq!(canonical_form(&SubcubicGraph::empty(0).unwrap()), b"?".to_vec());
    }
}
