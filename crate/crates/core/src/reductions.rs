//! Contracting a `C₄` that hangs on exactly two edges, and lifting broadcasts back.
//!
//! For an induced 4-cycle `C` with `∂(C) = {u₁v₁, u₂v₂}` and `u₁ ≠ u₂`, the
//! contracted graph `G'` replaces `C` by a single vertex `w` adjacent to `u₁`
//! and `u₂`. A dominating broadcast `f` of `G'` with `f(w) ≠ 2` lifts to `G`
//! at cost `cost(f) + 1` by zeroing `C` and giving `f(w) + 1` to one vertex
//! `v*` of `C`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::broadcast::{Broadcast, BroadcastError};
use crate::graph::{GraphError, SubcubicGraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("both boundary edges of the 4-cycle end at vertex {u}; only distinct ends are contracted")]
    Case1NotSupported { u: usize },
    #[error("{0:?} is not an induced 4-cycle with exactly two boundary edges in this graph")]
    InvalidSeparation([usize; 4]),
    #[error("broadcast on the contracted graph is not dominating")]
    NotDominating,
    #[error("broadcast assigns 2 to the contraction vertex; normalize it first")]
    ValueTwoAtContraction,
    #[error("no vertex of the 4-cycle yields a dominating lift")]
    LiftFailed,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Broadcast(#[from] BroadcastError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparationCase {
    /// Both boundary edges end at one outside vertex.
    SharedEnd,
    DistinctEnds,
}

/// An induced 4-cycle joined to the rest of the graph by exactly two edges
/// `u₁v₁` and `u₂v₂` (`v₁ < v₂` on the cycle).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatedC4 {
    /// Cycle order, starting at the smallest vertex.
    pub cycle: [usize; 4],
    pub u1: usize,
    pub u2: usize,
    pub v1: usize,
    pub v2: usize,
    pub case: SeparationCase,
}

impl SeparatedC4 {
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.cycle)
    }

    /// The cycle vertex not adjacent to `x` on the cycle.
    pub fn opposite(&self, x: usize) -> usize {
        let k = self.cycle.iter().position(|&c| c == x).expect("vertex on the cycle");
        self.cycle[(k + 2) % 4]
    }
}

/// Induced 4-cycles of `g`, each as a cycle order starting at its smallest vertex.
pub fn induced_four_cycles(g: &SubcubicGraph) -> Vec<[usize; 4]> {
    let mut out: Vec<[usize; 4]> = Vec::new();
    for a in 0..g.vertex_count() {
        let nb = g.neighbors(a);
        for (k, &b) in nb.iter().enumerate() {
            for &d in &nb[k + 1..] {
                for &c in g.neighbors(b) {
                    if c == a || !g.has_edge(c, d) || g.has_edge(a, c) || g.has_edge(b, d) {
                        continue;
                    }
                    if a < b && a < c && a < d {
                        let cyc = if b < d { [a, b, c, d] } else { [a, d, c, b] };
                        if !out.contains(&cyc) {
                            out.push(cyc);
                        }
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Every induced 4-cycle with exactly two boundary edges, ordered by cycle vertices.
pub fn find_separated_c4(g: &SubcubicGraph) -> Vec<SeparatedC4> {
    induced_four_cycles(g)
        .into_iter()
        .filter_map(|cycle| separation(g, cycle))
        .collect()
}

fn separation(g: &SubcubicGraph, cycle: [usize; 4]) -> Option<SeparatedC4> {
    let set = VertexSet::from_vertices(cycle);
    let mut bd = g.boundary(set);
    if bd.len() != 2 {
        return None;
    }
    bd.sort_unstable();
    let [(v1, u1), (v2, u2)] = [bd[0], bd[1]];
    let case = if u1 == u2 { SeparationCase::SharedEnd } else { SeparationCase::DistinctEnds };
    Some(SeparatedC4 { cycle, u1, u2, v1, v2, case })
}

/// Whether the `2b` part of the potential changed, and the weight bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCheck {
    pub omega_before: i64,
    pub omega_after: i64,
    pub b_before: usize,
    pub b_after: usize,
    pub b2_after: usize,
    /// `ω_G(V(C))`, 14 for every separated 4-cycle.
    pub cycle_weight: i64,
    /// `ω(G') = ω(G) - 10`; `None` unless `b(G) = b(G') = 0`.
    pub drop_by_ten: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionResult {
    pub contracted_graph: SubcubicGraph,
    /// Index of the new vertex in the contracted graph (always the last one).
    pub w: usize,
    /// `back_map[i]` is the vertex of `G` for contracted vertex `i ≠ w`.
    pub back_map: Vec<usize>,
    pub weights: WeightCheck,
}

/// Replaces the cycle by a new vertex `w` joined to `u₁` and `u₂`.
pub fn contract_c4(g: &SubcubicGraph, s: &SeparatedC4) -> Result<ContractionResult, ReductionError> {
    if s.cycle.iter().any(|&c| c >= g.vertex_count()) || separation(g, s.cycle).as_ref() != Some(s) {
        return Err(ReductionError::InvalidSeparation(s.cycle));
    }
    if s.case == SeparationCase::SharedEnd {
        return Err(ReductionError::Case1NotSupported { u: s.u1 });
    }
    let rest = g.delete_vertices(s.vertex_set());
    let w = rest.graph.vertex_count();
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &p) in rest.parent.iter().enumerate() {
        index[p] = i;
    }
    let mut edges = rest.graph.edges();
    edges.push((index[s.u1], w));
    edges.push((index[s.u2], w));
    let contracted_graph = SubcubicGraph::build(w + 1, &edges)?;

    let before = g.classify_bad_components();
    let after = contracted_graph.classify_bad_components();
    let drop_by_ten =
        (before.b == 0 && after.b == 0).then_some(after.omega == before.omega - 10);
    Ok(ContractionResult {
        contracted_graph,
        w,
        back_map: rest.parent,
        weights: WeightCheck {
            omega_before: before.omega,
            omega_after: after.omega,
            b_before: before.b,
            b_after: after.b,
            b2_after: after.b2,
            cycle_weight: g.set_weight(s.vertex_set()),
            drop_by_ten,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftRule {
    /// `f(w) = 1`: a cycle vertex within distance two of both `u₁` and `u₂` gets 2.
    WithinTwoOfBoth,
    /// `f(w) = 0`, both outside ends heard: the vertex opposite the heard cycle end gets 1.
    OppositeOfHeardEnd,
    /// `f(w) = 0`, one outside end unheard: the other cycle end gets 1.
    OtherCycleEnd,
    /// None of the rules above dominated; the first cycle vertex that does was used.
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    pub broadcast: Broadcast,
    pub v_star: usize,
    pub rule: LiftRule,
}

/// Lifts a dominating `f` on `G'` with `f(w) ≠ 2` to a dominating broadcast
/// of `G` costing one more.
pub fn lift_broadcast(
    g: &SubcubicGraph,
    cr: &ContractionResult,
    s: &SeparatedC4,
    f: &Broadcast,
) -> Result<Lift, ReductionError> {
    let gp = &cr.contracted_graph;
    if !f.is_dominating(gp)? {
        return Err(ReductionError::NotDominating);
    }
    let fw = f.get(cr.w);
    if fw == 2 {
        return Err(ReductionError::ValueTwoAtContraction);
    }
    let mut base = Broadcast::zeros(g.vertex_count());
    for (i, &p) in cr.back_map.iter().enumerate() {
        base.set(p, f.get(i));
    }
    let heard = base.covered_set(g)?;
    let try_with = |v: usize| {
        let mut h = base.clone();
        h.set(v, fw + 1);
        h.is_dominating(g).expect("lengths agree").then_some(h)
    };

    let mut primary: Vec<(usize, LiftRule)> = Vec::new();
    if fw == 1 {
        let d1 = g.bfs_distances(s.u1);
        let d2 = g.bfs_distances(s.u2);
        let within = |d: &Vec<Option<usize>>, c: usize| d[c].is_some_and(|x| x <= 2);
        if let Some(&c) = s.cycle.iter().filter(|&&c| within(&d1, c) && within(&d2, c)).min() {
            primary.push((c, LiftRule::WithinTwoOfBoth));
        }
    } else {
        // Try both labelings of the two sides.
        for (ua, va, ub, vb) in [(s.u1, s.v1, s.u2, s.v2), (s.u2, s.v2, s.u1, s.v1)] {
            if heard.contains(ua) && heard.contains(va) {
                if heard.contains(ub) {
                    primary.push((s.opposite(va), LiftRule::OppositeOfHeardEnd));
                } else {
                    primary.push((vb, LiftRule::OtherCycleEnd));
                }
            }
        }
    }
    for (v, rule) in primary {
        if let Some(h) = try_with(v) {
            return Ok(Lift { broadcast: h, v_star: v, rule });
        }
    }
    let mut order = s.cycle;
    order.sort_unstable();
    for v in order {
        if let Some(h) = try_with(v) {
            return Ok(Lift { broadcast: h, v_star: v, rule: LiftRule::Fallback });
        }
    }
    Err(ReductionError::LiftFailed)
}

/// `ω(G - e) - ω(G)` and whether `e` avoids 1-vertices with `b(G) = b(G - e) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDeletionDelta {
    pub delta: i64,
    pub condition_held: bool,
}

pub fn edge_deletion_weight_delta(
    g: &SubcubicGraph,
    u: usize,
    v: usize,
) -> Result<EdgeDeletionDelta, ReductionError> {
    let h = g.delete_edge(u, v)?;
    let before = g.classify_bad_components();
    let after = h.classify_bad_components();
    let condition_held =
        g.degree(u) != 1 && g.degree(v) != 1 && before.b == 0 && after.b == 0;
    Ok(EdgeDeletionDelta { delta: after.omega - before.omega, condition_held })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named;
    use crate::solver::gamma_exact;

    /// Two 4-cycles 0-1-2-3 and 5-6-7-8 linked by the path 1-4-6, with
    /// 3 and 8 joined and a pendant triangle on 4's side to pad degrees.
    fn linked_cycles() -> SubcubicGraph {
        SubcubicGraph::build(
            9,
            &[
                (0, 1), (1, 2), (2, 3), (3, 0),
                (5, 6), (6, 7), (7, 8), (8, 5),
                (1, 4), (4, 6), (3, 8),
            ],
        )
        .unwrap()
    }

    #[test]
    fn finds_separated_cycles() {
        let g = linked_cycles();
        let found = find_separated_c4(&g);
        assert_eq!(found.len(), 2);
        assert_eq!(found[0].cycle, [0, 1, 2, 3]);
        assert_eq!((found[0].v1, found[0].u1, found[0].v2, found[0].u2), (1, 4, 3, 8));
        assert_eq!(found[1].vertex_set(), VertexSet::from_vertices([5, 6, 7, 8]));
        for s in &found {
            assert_eq!(g.boundary_size(s.vertex_set()), 2);
            assert_eq!(s.case, SeparationCase::DistinctEnds);
            assert_eq!(g.set_weight(s.vertex_set()), 14);
        }
        assert!(find_separated_c4(&named("petersen").unwrap()).is_empty());
        assert!(find_separated_c4(&named("c4").unwrap()).is_empty());
    }

    #[test]
    fn shared_end_is_detected_but_not_contracted() {
        // 4-cycle 0-1-2-3 with 0 and 2 both joined to 4.
        let g = SubcubicGraph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4), (4, 5)])
            .unwrap();
        let found = find_separated_c4(&g);
        let s = found.iter().find(|s| s.cycle == [0, 1, 2, 3]).unwrap();
        assert_eq!(s.case, SeparationCase::SharedEnd);
        assert_eq!(contract_c4(&g, s), Err(ReductionError::Case1NotSupported { u: 4 }));
    }

    #[test]
    fn contraction_replays_construction() {
        let g = linked_cycles();
        let s = find_separated_c4(&g)[0];
        let cr = contract_c4(&g, &s).unwrap();
        let gp = &cr.contracted_graph;
        assert_eq!(gp.vertex_count(), g.vertex_count() - 3);
        assert_eq!(gp.degree(cr.w), 2);
        assert_eq!(cr.back_map, vec![4, 5, 6, 7, 8]);
        let mut nb: Vec<usize> = gp.neighbors(cr.w).iter().map(|&i| cr.back_map[i]).collect();
        nb.sort_unstable();
        assert_eq!(nb, vec![4, 8]);
        assert_eq!(cr.weights.cycle_weight, 14);
        assert_eq!(cr.weights.drop_by_ten, Some(true));
    }

    #[test]
    fn contraction_onto_k4star_skips_weight_check() {
        // K₄ on {4,5,6,7} minus edge 4-5; the cycle 0-1-2-3 hangs on 4 and 5.
        let g = SubcubicGraph::build(
            8,
            &[
                (0, 1), (1, 2), (2, 3), (3, 0),
                (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
                (0, 4), (1, 5),
            ],
        )
        .unwrap();
        let s = find_separated_c4(&g).into_iter().find(|s| s.cycle == [0, 1, 2, 3]).unwrap();
        let cr = contract_c4(&g, &s).unwrap();
        assert_eq!(cr.weights.b2_after, 1);
        assert_eq!(cr.weights.drop_by_ten, None);
    }

    #[test]
    fn lift_rules() {
        let g = linked_cycles();
        let s = find_separated_c4(&g)[0];
        let cr = contract_c4(&g, &s).unwrap();
        let gp = &cr.contracted_graph;
        // Contracted: 0=4, 1=5, 2=6, 3=7, 4=8, w=5; edges 0-2, 1-2, 2-3, 3-4, 4-1, w-0, w-4.
        let one_at_w = Broadcast::new(vec![0, 0, 2, 0, 0, 1]).unwrap();
        assert!(one_at_w.is_dominating(gp).unwrap());
        let lift = lift_broadcast(&g, &cr, &s, &one_at_w).unwrap();
        assert_eq!(lift.rule, LiftRule::WithinTwoOfBoth);
        assert_eq!(lift.broadcast.get(lift.v_star), 2);
        assert_eq!(lift.broadcast.cost(), one_at_w.cost() + 1);
        assert!(lift.broadcast.is_dominating(&g).unwrap());

        let zero_at_w = Broadcast::new(vec![1, 0, 0, 0, 2, 0]).unwrap();
        assert!(zero_at_w.is_dominating(gp).unwrap());
        let lift = lift_broadcast(&g, &cr, &s, &zero_at_w).unwrap();
        assert!(lift.broadcast.is_dominating(&g).unwrap());
        assert_eq!(lift.broadcast.cost(), zero_at_w.cost() + 1);
        assert_eq!(lift.broadcast.get(lift.v_star), 1);

        let two_at_w = Broadcast::new(vec![0, 0, 0, 0, 0, 2]).unwrap();
        if two_at_w.is_dominating(gp).unwrap() {
            assert_eq!(
                lift_broadcast(&g, &cr, &s, &two_at_w),
                Err(ReductionError::ValueTwoAtContraction)
            );
        }
        let weak = Broadcast::zeros(6);
        assert_eq!(lift_broadcast(&g, &cr, &s, &weak), Err(ReductionError::NotDominating));
    }

    #[test]
    fn lift_bound_on_fixture() {
        let g = linked_cycles();
        let s = find_separated_c4(&g)[0];
        let cr = contract_c4(&g, &s).unwrap();
        let gp = gamma_exact(&cr.contracted_graph).unwrap().gamma;
        assert!(gamma_exact(&g).unwrap().gamma <= gp + 1);
    }

    #[test]
    fn edge_deletion_examples() {
        let k33 = named("k33").unwrap();
        assert_eq!(
            edge_deletion_weight_delta(&k33, 0, 3).unwrap(),
            EdgeDeletionDelta { delta: 2, condition_held: true }
        );
        // Pendant edge of the claw: the leaf becomes isolated (5 → 9) and the center loses one.
        let claw = named("k13").unwrap();
        let d = edge_deletion_weight_delta(&claw, 0, 1).unwrap();
        assert_eq!(d, EdgeDeletionDelta { delta: 4 + 1, condition_held: false });
        // Cutting the bridge to a hanging 4-cycle creates a C₄-component.
        let g = SubcubicGraph::build(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 4)],
        )
        .unwrap();
        let d = edge_deletion_weight_delta(&g, 0, 4).unwrap();
        assert_eq!(d, EdgeDeletionDelta { delta: 2 + 2 * 2, condition_held: false });
        assert!(edge_deletion_weight_delta(&k33, 0, 1).is_err());
    }
}
