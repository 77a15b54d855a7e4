//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subcubic::named::{cycle, named, path};
use subcubic::{SubcubicGraph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `h` with a new 4-cycle `c0 c1 c2 c3` hung from `u1` and `u2`. The cycle
/// end for `u2` is `c1` when `adjacent_ends`, else `c2`.
pub fn hang_c4(h: &SubcubicGraph, u1: usize, u2: usize, adjacent_ends: bool) -> SubcubicGraph {
    let k = h.vertex_count();
    let mut edges = h.edges();
    edges.extend([(k, k + 1), (k + 1, k + 2), (k + 2, k + 3), (k + 3, k)]);
    edges.push((u1, k));
    edges.push((u2, if adjacent_ends { k + 1 } else { k + 2 }));
    SubcubicGraph::build(k + 4, &edges).expect("attachment vertices have spare degree")
}

fn minus_edge(name: &str, u: usize, v: usize) -> SubcubicGraph {
    named(name).unwrap().delete_edge(u, v).unwrap()
}

/// Graphs with a separated 4-cycle whose two boundary edges end at distinct
/// outside vertices, each labelled by its construction.
pub fn separated_c4_fixtures() -> Vec<(String, SubcubicGraph)> {
    let mut hosts: Vec<(String, SubcubicGraph, usize, usize)> = Vec::new();
    for k in 2..=6 {
        hosts.push((format!("p{k}"), path(k).unwrap(), 0, k - 1));
    }
    hosts.push(("p5 inner".into(), path(5).unwrap(), 1, 3));
    for k in 3..=8 {
        hosts.push((format!("c{k} adjacent"), cycle(k).unwrap(), 0, 1));
        hosts.push((format!("c{k} far"), cycle(k).unwrap(), 0, k / 2));
    }
    hosts.push(("petersen-e".into(), minus_edge("petersen", 0, 1), 0, 1));
    hosts.push(("k33-e".into(), minus_edge("k33", 0, 3), 0, 3));
    hosts.push(("prism-e".into(), minus_edge("prism", 0, 1), 0, 1));
    hosts.push(("cube-e".into(), minus_edge("cube", 0, 1), 0, 1));
    hosts.push(("heawood-e".into(), minus_edge("heawood", 0, 1), 0, 1));
    let p3_c5 = path(3).unwrap().disjoint_union(&cycle(5).unwrap()).unwrap();
    hosts.push(("p3+c5 bridge".into(), p3_c5, 0, 3));
    let k4star = named("k4star").unwrap();
    let k4star_pair = k4star.disjoint_union(&k4star).unwrap();
    hosts.push(("k4star+k4star bridge".into(), k4star_pair, 4, 9));

    let mut out = Vec::new();
    for (name, h, u1, u2) in hosts {
        for adjacent in [true, false] {
            let tag = if adjacent { "adjacent ends" } else { "opposite ends" };
            out.push((format!("{name} / {tag}"), hang_c4(&h, u1, u2, adjacent)));
        }
    }
    out
}

/// A random subcubic graph on `1..=max_n` vertices.
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> SubcubicGraph {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(0.1..0.9);
    subcubic::generator::random_subcubic(n, p, rng)
}

/// A random subset of the vertices of `g`.
pub fn random_set(rng: &mut ChaCha8Rng, g: &SubcubicGraph) -> VertexSet {
    let q = rng.random_range(0.0..1.0);
    (0..g.vertex_count()).filter(|_| rng.random_bool(q)).collect()
}
