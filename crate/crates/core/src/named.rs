//! Standard small graphs by name.

use thiserror::Error;

use crate::graph::{GraphError, SubcubicGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NamedError {
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Names understood by [`named`]; `pN` and `cN` take a vertex count.
pub const NAMES: &[&str] = &[
    "k1", "k2", "k3", "k4", "k4star", "k13", "k33", "prism", "cube", "petersen", "heawood", "pN",
    "cN",
];

/// Builds a named graph.
///
/// `k4star` is `K₄` with the edge `01` subdivided by vertex 4. `petersen`
/// uses the outer cycle `0..5`, spokes `i ~ i+5` and the inner pentagram.
pub fn named(name: &str) -> Result<SubcubicGraph, NamedError> {
    let lower = name.to_ascii_lowercase();
    let g = match lower.as_str() {
        "k1" => SubcubicGraph::build(1, &[])?,
        "k2" => SubcubicGraph::build(2, &[(0, 1)])?,
        "k3" | "c3" => cycle(3)?,
        "k4" => SubcubicGraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?,
        "k4star" => {
            SubcubicGraph::build(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)])?
        }
        "k13" | "star" | "claw" => SubcubicGraph::build(4, &[(0, 1), (0, 2), (0, 3)])?,
        "k33" => {
            let mut e = Vec::new();
            for a in 0..3 {
                for b in 3..6 {
                    e.push((a, b));
                }
            }
            SubcubicGraph::build(6, &e)?
        }
        "prism" => SubcubicGraph::build(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )?,
        "cube" | "q3" => {
            let mut e = Vec::new();
            for u in 0..8usize {
                for bit in 0..3 {
                    let v = u ^ (1 << bit);
                    if u < v {
                        e.push((u, v));
                    }
                }
            }
            SubcubicGraph::build(8, &e)?
        }
        "petersen" => {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, i + 5));
                e.push((i + 5, (i + 2) % 5 + 5));
            }
            SubcubicGraph::build(10, &e)?
        }
        "heawood" => {
            // LCF notation [5,-5]^7.
            let mut e: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
            for i in (0..14).step_by(2) {
                e.push((i, (i + 5) % 14));
            }
            SubcubicGraph::build(14, &e)?
        }
        other => {
            let parse = |prefix: char| {
                other
                    .strip_prefix(prefix)
                    .and_then(|rest| rest.parse::<usize>().ok())
            };
            if let Some(k) = parse('p') {
                path(k)?
            } else if let Some(k) = parse('c').filter(|&k| k >= 3) {
                cycle(k)?
            } else {
                return Err(NamedError::UnknownName(name.to_string()));
            }
        }
    };
    Ok(g)
}

/// `P_n`: vertices `0..n` in order.
pub fn path(n: usize) -> Result<SubcubicGraph, GraphError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    SubcubicGraph::build(n, &edges)
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Result<SubcubicGraph, GraphError> {
    assert!(n >= 3, "cycles need at least three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    SubcubicGraph::build(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn girth(g: &SubcubicGraph) -> Option<usize> {
        let mut best = None;
        for (u, v) in g.edges() {
            let h = g.delete_edge(u, v).unwrap();
            if let Some(d) = h.distance(u, v) {
                best = Some(best.map_or(d + 1, |b: usize| b.min(d + 1)));
            }
        }
        best
    }

    fn diameter(g: &SubcubicGraph) -> usize {
        (0..g.vertex_count())
            .flat_map(|s| g.bfs_distances(s))
            .map(|d| d.expect("connected"))
            .max()
            .unwrap()
    }

    #[test]
    fn fixtures_have_expected_shape() {
        let ks = named("k4star").unwrap();
        let mut d = ks.degree_sequence();
        d.sort_unstable();
        assert_eq!(d, vec![2, 3, 3, 3, 3]);
        let pet = named("petersen").unwrap();
        assert_eq!(pet.vertex_count(), 10);
        assert!(pet.is_cubic());
        assert_eq!(girth(&pet), Some(5));
        assert_eq!(diameter(&pet), 2);
        assert!(named("c4").unwrap().degree_sequence().iter().all(|&d| d == 2));
        assert_eq!(girth(&named("heawood").unwrap()), Some(6));
        assert!(named("heawood").unwrap().is_cubic());
        assert_eq!(girth(&named("k33").unwrap()), Some(4));
        assert_eq!(girth(&named("prism").unwrap()), Some(3));
        assert_eq!(named("p1").unwrap().vertex_count(), 1);
        assert_eq!(named("P7").unwrap().edge_count(), 6);
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(named("dodecahedron"), Err(NamedError::UnknownName(_))));
        assert!(matches!(named("c2"), Err(NamedError::UnknownName(_))));
    }
}
