//! Second-neighborhood parameters of a vertex and the components left after deleting a set.
//!
//! For a vertex `v`, `B(v) = N₂[v] ∖ N[v]`, `β_t` counts the `t`-vertices of
//! `B(v)`, `β = β₂ + β₃`, and `ℓ` is the number of edges inside `B(v)`. For a
//! set `X`, `a` counts the `C₄`-components of `G - X` and `i` its isolated
//! vertices, refined by boundary size and by degree in `G`.
//!
//! Several identities between these numbers only hold when no vertex of
//! degree 1 sits near `v`, or when every `C₄`-component and isolated vertex
//! of `G - X` is attached by three or four edges. Each check reports
//! whether its hypotheses held instead of assuming them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{SubcubicGraph, VertexSet};
use crate::solver::{gamma_exact, SolveError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("vertex {vertex} is not in V*: {reason}")]
    NotInVStar { vertex: usize, reason: &'static str },
    #[error("check does not apply at vertex {vertex}: {reason}")]
    NotApplicable { vertex: usize, reason: &'static str },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureProfile {
    pub vertex: usize,
    pub degree: usize,
    pub p1: usize,
    pub p2: usize,
    pub p3: usize,
    pub b: VertexSet,
    pub beta1: usize,
    pub beta2: usize,
    pub beta3: usize,
    /// `β₂ + β₃`; `|B| = β₁ + β`.
    pub beta: usize,
    pub ell: usize,
    pub on_triangle: bool,
    pub in_vt: bool,
    pub in_vstar: bool,
    pub in_vstarstar: bool,
}

impl StructureProfile {
    /// No vertex of degree 1 in `N(v) ∪ B(v)`.
    pub fn no_one_vertices(&self) -> bool {
        self.p1 == 0 && self.beta1 == 0
    }
}

fn check_vertex(g: &SubcubicGraph, v: usize) -> Result<(), StructureError> {
    if v >= g.vertex_count() {
        return Err(StructureError::VertexOutOfRange { vertex: v, n: g.vertex_count() });
    }
    Ok(())
}

/// Profile of `v`; panics when `v` is out of range.
pub fn profile(g: &SubcubicGraph, v: usize) -> StructureProfile {
    let mut p = [0usize; 4];
    for &x in g.neighbors(v) {
        p[g.degree(x)] += 1;
    }
    let b = g.ball2(v).difference(g.closed_neighborhood(v));
    let mut beta_t = [0usize; 4];
    for x in b.iter() {
        beta_t[g.degree(x)] += 1;
    }
    let degree = g.degree(v);
    let on_triangle = g.on_triangle(v);
    let in_vt = degree == 3 && !on_triangle;
    let beta = beta_t[2] + beta_t[3];
    let in_vstar = in_vt && beta <= 5;
    StructureProfile {
        vertex: v,
        degree,
        p1: p[1],
        p2: p[2],
        p3: p[3],
        b,
        beta1: beta_t[1],
        beta2: beta_t[2],
        beta3: beta_t[3],
        beta,
        ell: g.edges_within(b),
        on_triangle,
        in_vt,
        in_vstar,
        // A 3-vertex of V* with a 2-neighbor.
        in_vstarstar: in_vstar && p[2] > 0,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetProfile {
    pub x: VertexSet,
    pub boundary_size: usize,
    pub a: usize,
    pub a3: usize,
    pub a4: usize,
    /// `C₄`-components of `G - X` by `|∂(C)|`, for `|∂(C)| = 0..=4`.
    pub a_by_boundary: [usize; 5],
    pub i: usize,
    pub i2: usize,
    pub i3: usize,
    /// Isolated vertices of `G - X` by degree in `G`.
    pub i_by_degree: [usize; 4],
    pub c4_components: Vec<VertexSet>,
    pub isolated: VertexSet,
    pub closure: VertexSet,
    pub closure_boundary_size: usize,
    /// `a = a₃ + a₄` and `i = i₂ + i₃`.
    pub all_attached_by_three_or_four: bool,
}

pub fn set_profile(g: &SubcubicGraph, x: VertexSet) -> SetProfile {
    let rest = g.vertices().difference(x);
    let mut a_by_boundary = [0usize; 5];
    let mut i_by_degree = [0usize; 4];
    let mut c4_components = Vec::new();
    let mut isolated = VertexSet::EMPTY;
    for comp in g.components_within(rest) {
        if comp.len() == 1 {
            let w = comp.first().expect("singleton");
            i_by_degree[g.degree(w)] += 1;
            isolated = isolated.union(comp);
        } else if g.is_c4_component_within(comp) {
            a_by_boundary[g.boundary_size(comp)] += 1;
            c4_components.push(comp);
        }
    }
    let closure = g.closure(x);
    let a = c4_components.len();
    let i = isolated.len();
    let (a3, a4) = (a_by_boundary[3], a_by_boundary[4]);
    let (i2, i3) = (i_by_degree[2], i_by_degree[3]);
    SetProfile {
        x,
        boundary_size: g.boundary_size(x),
        a,
        a3,
        a4,
        a_by_boundary,
        i,
        i2,
        i3,
        i_by_degree,
        c4_components,
        isolated,
        closure,
        closure_boundary_size: g.boundary_size(closure),
        all_attached_by_three_or_four: a == a3 + a4 && i == i2 + i3,
    }
}

/// Both sides of the boundary and weight decompositions of `𝒞(X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureDecomposition {
    pub closure_boundary: i64,
    /// `|∂(X)| - Σ_C |∂(C)| - Σ_w d(w)`.
    pub boundary_formula: i64,
    pub closure_weight: i64,
    /// `ω_G(X) + Σ_C (16 - |∂(C)|) + Σ_w ω_G(w)`.
    pub weight_formula: i64,
}

impl ClosureDecomposition {
    pub fn holds(&self) -> bool {
        self.closure_boundary == self.boundary_formula && self.closure_weight == self.weight_formula
    }
}

pub fn closure_decomposition(g: &SubcubicGraph, x: VertexSet) -> ClosureDecomposition {
    let sp = set_profile(g, x);
    let mut boundary_formula = sp.boundary_size as i64;
    let mut weight_formula = g.set_weight(x);
    for &c in &sp.c4_components {
        let t = g.boundary_size(c) as i64;
        boundary_formula -= t;
        weight_formula += 16 - t;
    }
    for w in sp.isolated.iter() {
        boundary_formula -= g.degree(w) as i64;
        weight_formula += g.vertex_weight(w);
    }
    ClosureDecomposition {
        closure_boundary: sp.closure_boundary_size as i64,
        boundary_formula,
        closure_weight: g.set_weight(sp.closure),
        weight_formula,
    }
}

/// Outcome of an identity or inequality evaluated under a hypothesis gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    HypothesesNotMet,
}

impl Verdict {
    fn gated(gate: bool, ok: bool) -> Self {
        match (gate, ok) {
            (false, _) => Verdict::HypothesesNotMet,
            (true, true) => Verdict::Holds,
            (true, false) => Verdict::Fails,
        }
    }
}

/// `|∂(N₂[v])|` against `2β₂ + 3β₃ - (3 + p₃ + 2ℓ)`, and against the form
/// that also counts 1-vertices, `β₁ + 2β₂ + 3β₃ - (3 + p₃ - p₁ + 2ℓ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryIdentity {
    pub boundary: i64,
    pub formula: i64,
    pub general_formula: i64,
}

impl BoundaryIdentity {
    pub fn holds(&self) -> bool {
        self.boundary == self.formula
    }
}

/// Evaluates the boundary identity at a 3-vertex off every triangle with no
/// 1-vertex in `N(v) ∪ B(v)`.
pub fn check_boundary_identity(g: &SubcubicGraph, v: usize) -> Result<BoundaryIdentity, StructureError> {
    let bi = boundary_identity_parts(g, v)?;
    let p = profile(g, v);
    if !p.no_one_vertices() {
        return Err(StructureError::NotApplicable {
            vertex: v,
            reason: "a vertex of degree 1 lies in N(v) or B(v)",
        });
    }
    Ok(bi)
}

/// Both sides of the boundary identity for any 3-vertex off every triangle.
pub fn boundary_identity_parts(g: &SubcubicGraph, v: usize) -> Result<BoundaryIdentity, StructureError> {
    check_vertex(g, v)?;
    let p = profile(g, v);
    if p.degree != 3 {
        return Err(StructureError::NotApplicable { vertex: v, reason: "degree is not 3" });
    }
    if p.on_triangle {
        return Err(StructureError::NotApplicable { vertex: v, reason: "vertex is on a triangle" });
    }
    let boundary = g.boundary_size(g.ball2(v)) as i64;
    let (b1, b2, b3) = (p.beta1 as i64, p.beta2 as i64, p.beta3 as i64);
    let (p1, p3, ell) = (p.p1 as i64, p.p3 as i64, p.ell as i64);
    Ok(BoundaryIdentity {
        boundary,
        formula: 2 * b2 + 3 * b3 - (3 + p3 + 2 * ell),
        general_formula: b1 + 2 * b2 + 3 * b3 - (3 + p3 - p1 + 2 * ell),
    })
}

/// `ω_G(𝒞(X)) - |∂(𝒞(X))|` at `X = N₂[v]` against `16a + 6i + 2(β₂+ℓ) + 18`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreviewIdentity {
    pub lhs: i64,
    pub formula: i64,
    /// `16a + 6i + 4β₁ + 2(β₂+ℓ) + 18 + 3·#(isolated vertices of G outside X)`;
    /// equals `lhs` for every vertex of `V^t`.
    pub general_formula: i64,
    /// `v ∈ V^t`, no 1-vertex in `N(v) ∪ B(v)`, and every `C₄`-component and
    /// isolated vertex of `G - X` is attached by three or four edges (for
    /// isolated vertices, two or three).
    pub gate: bool,
    pub verdict: Verdict,
}

pub fn check_preview_identity(g: &SubcubicGraph, v: usize) -> Result<PreviewIdentity, StructureError> {
    check_vertex(g, v)?;
    let p = profile(g, v);
    if !p.in_vt {
        return Err(StructureError::NotApplicable { vertex: v, reason: "vertex is not in V^t" });
    }
    let x = g.ball2(v);
    let sp = set_profile(g, x);
    let lhs = g.set_weight(sp.closure) - sp.closure_boundary_size as i64;
    let base = 16 * sp.a as i64 + 6 * sp.i as i64 + 2 * (p.beta2 + p.ell) as i64 + 18;
    let general_formula = base + 4 * p.beta1 as i64 + 3 * sp.i_by_degree[0] as i64;
    let gate = p.no_one_vertices() && sp.all_attached_by_three_or_four;
    Ok(PreviewIdentity {
        lhs,
        formula: base,
        general_formula,
        gate,
        verdict: Verdict::gated(gate, lhs == base),
    })
}

/// `|∂(X)| + 3n₀(G-X)` against `ω(G-X) - 2b₁(G-X) + ω_G(X) - ω(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionIdentity {
    pub lhs: i64,
    pub rhs: i64,
    /// `b(G) = 0`, `b₂(G-X) = 0` and `n₀(G) = 0`.
    pub gate: bool,
    pub verdict: Verdict,
}

pub fn check_deletion_identity(g: &SubcubicGraph, x: VertexSet) -> DeletionIdentity {
    let whole = g.classify_bad_components();
    let rest = g.delete_vertices(x).graph;
    let after = rest.classify_bad_components();
    let lhs = g.boundary_size(x) as i64 + 3 * after.n0 as i64;
    let rhs = after.omega - 2 * after.b1 as i64 + g.set_weight(x) - whole.omega;
    let gate = whole.b == 0 && after.b2 == 0 && whole.n0 == 0;
    DeletionIdentity { lhs, rhs, gate, verdict: Verdict::gated(gate, lhs == rhs) }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub verdict: Verdict,
}

impl Inequality {
    fn le(name: &'static str, lhs: i64, rhs: i64, gate: bool) -> Self {
        Inequality { name: name.to_string(), lhs, rhs, verdict: Verdict::gated(gate, lhs <= rhs) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub vertex: usize,
    /// `r = γ_{b,2}(G[𝒞(N₂[v])])`.
    pub r: u32,
    /// Every `C₄`-component of `G - X` has `|∂(C)| ∈ {3,4}`, every isolated
    /// vertex of `G - X` has degree 2 or 3, and no 1-vertex lies in `N(v) ∪ B(v)`.
    pub hypotheses: bool,
    pub inequalities: Vec<Inequality>,
}

impl ChainReport {
    pub fn any_failure(&self) -> bool {
        self.inequalities.iter().any(|q| q.verdict == Verdict::Fails)
    }
}

/// The chain `3a+2i ≤ 3a₃+4a₄+2i₂+3i₃ ≤ |∂(X)| ≤ 2β-β₂-2ℓ` and the closure
/// cost bounds `r ≤ 2a+i+2` and `r ≤ a₃+p₃+3` at `X = N₂[v]`.
///
/// The middle link and `r ≤ 2a+i+2` hold for every graph and are always
/// evaluated; the others are evaluated only under the hypotheses.
pub fn check_chain_inequalities(g: &SubcubicGraph, v: usize) -> Result<ChainReport, StructureError> {
    check_vertex(g, v)?;
    let p = profile(g, v);
    if !p.in_vt {
        return Err(StructureError::NotApplicable { vertex: v, reason: "vertex is not in V^t" });
    }
    let x = g.ball2(v);
    let sp = set_profile(g, x);
    let r = gamma_exact(&g.induced_subgraph(sp.closure).graph)?.gamma;
    let hyp = sp.all_attached_by_three_or_four && p.no_one_vertices();
    let (a, i) = (sp.a as i64, sp.i as i64);
    let (a3, a4, i2, i3) = (sp.a3 as i64, sp.a4 as i64, sp.i2 as i64, sp.i3 as i64);
    let weighted = 3 * a3 + 4 * a4 + 2 * i2 + 3 * i3;
    let bd = sp.boundary_size as i64;
    let (beta, beta2, ell) = (p.beta as i64, p.beta2 as i64, p.ell as i64);
    let r = i64::from(r);
    let inequalities = vec![
        Inequality::le("3a+2i <= 3a3+4a4+2i2+3i3", 3 * a + 2 * i, weighted, hyp),
        Inequality::le("3a3+4a4+2i2+3i3 <= |bd(X)|", weighted, bd, true),
        Inequality::le("|bd(X)| <= 2beta-beta2-2ell", bd, 2 * beta - beta2 - 2 * ell, hyp),
        Inequality::le("r <= 2a+i+2", r, 2 * a + i + 2, true),
        Inequality::le("r <= a3+p3+3", r, a3 + p.p3 as i64 + 3, hyp),
    ];
    Ok(ChainReport { vertex: v, r: r as u32, hypotheses: hyp, inequalities })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QTag {
    Q301,
    Q402,
    Q410,
    Other,
}

/// Side conditions of one named case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseRule {
    pub tag: QTag,
    pub r: u32,
    pub a: usize,
    pub i: usize,
    /// Required `i₂`, when constrained.
    pub i2: Option<usize>,
    pub beta2_plus_ell_max: usize,
    pub beta2_max: Option<usize>,
    pub beta: Option<usize>,
    /// When `β₂ = ℓ = 0`, require `|∂(X)| ≥ 2i₂ + 3i₃ + k`.
    pub boundary_excess_if_zero: Option<usize>,
}

pub const CASE_RULES: [CaseRule; 3] = [
    CaseRule {
        tag: QTag::Q301,
        r: 3,
        a: 0,
        i: 1,
        i2: None,
        beta2_plus_ell_max: 1,
        beta2_max: None,
        beta: None,
        boundary_excess_if_zero: Some(2),
    },
    CaseRule {
        tag: QTag::Q402,
        r: 4,
        a: 0,
        i: 2,
        i2: Some(2),
        beta2_plus_ell_max: 2,
        beta2_max: Some(1),
        beta: Some(5),
        boundary_excess_if_zero: None,
    },
    CaseRule {
        tag: QTag::Q410,
        r: 4,
        a: 1,
        i: 0,
        i2: None,
        beta2_plus_ell_max: 0,
        beta2_max: None,
        beta: None,
        boundary_excess_if_zero: None,
    },
];

impl CaseRule {
    pub fn matches(&self, q: &QCase) -> bool {
        let zero = q.beta2 == 0 && q.ell == 0;
        q.r == self.r
            && q.a == self.a
            && q.i == self.i
            && self.i2.is_none_or(|x| q.i2 == x)
            && q.beta2 + q.ell <= self.beta2_plus_ell_max
            && self.beta2_max.is_none_or(|x| q.beta2 <= x)
            && self.beta.is_none_or(|x| q.beta == x)
            && self
                .boundary_excess_if_zero
                .is_none_or(|k| !zero || q.boundary_size >= 2 * q.i2 + 3 * q.i3 + k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCase {
    pub vertex: usize,
    pub r: u32,
    pub a: usize,
    pub i: usize,
    pub i2: usize,
    pub i3: usize,
    pub beta: usize,
    pub beta2: usize,
    pub ell: usize,
    pub boundary_size: usize,
    pub matched: QTag,
}

/// `(r, a, i)` at `X = N₂[v]` for `v ∈ V*`, tagged with the named case whose
/// side conditions hold, if any.
pub fn classify_case(g: &SubcubicGraph, v: usize) -> Result<QCase, StructureError> {
    check_vertex(g, v)?;
    let p = profile(g, v);
    if !p.in_vstar {
        let reason = if p.degree != 3 {
            "degree is not 3"
        } else if p.on_triangle {
            "vertex is on a triangle"
        } else {
            "beta exceeds 5"
        };
        return Err(StructureError::NotInVStar { vertex: v, reason });
    }
    let sp = set_profile(g, g.ball2(v));
    let r = gamma_exact(&g.induced_subgraph(sp.closure).graph)?.gamma;
    let mut q = QCase {
        vertex: v,
        r,
        a: sp.a,
        i: sp.i,
        i2: sp.i2,
        i3: sp.i3,
        beta: p.beta,
        beta2: p.beta2,
        ell: p.ell,
        boundary_size: sp.boundary_size,
        matched: QTag::Other,
    };
    if let Some(rule) = CASE_RULES.iter().find(|rule| rule.matches(&q)) {
        q.matched = rule.tag;
    }
    Ok(q)
}

/// Feasibility of a cell `(a, i, r)` of the case table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableCell {
    /// `r > 2 + 2a + i`.
    ExceedsClosureBound,
    /// `9r ≤ 16a + 6i + 18`, so no value of `β₂ + ℓ` fits.
    WeightInfeasible,
    /// Feasible when `β₂ + ℓ ≤ max_beta2_plus_ell`.
    Allowed { max_beta2_plus_ell: usize },
}

pub const TABLE_ROWS: [(usize, usize); 10] =
    [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2)];

pub const TABLE_R: std::ops::RangeInclusive<u32> = 3..=7;

/// From `r ≤ 2 + 2a + i` and `9r > 16a + 6i + 2(β₂+ℓ) + 18`.
pub fn table_cell(a: usize, i: usize, r: u32) -> TableCell {
    let (a, i, r) = (a as i64, i as i64, i64::from(r));
    if r > 2 + 2 * a + i {
        return TableCell::ExceedsClosureBound;
    }
    let room = 9 * r - 16 * a - 6 * i - 18;
    if room <= 0 {
        return TableCell::WeightInfeasible;
    }
    TableCell::Allowed { max_beta2_plus_ell: ((room - 1) / 2) as usize }
}

/// Everything the `analyze` command reports for one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexAnalysis {
    pub profile: StructureProfile,
    pub set_profile: SetProfile,
    pub case: Option<QCase>,
    pub boundary_identity: Option<BoundaryIdentity>,
    pub preview_identity: Option<PreviewIdentity>,
    pub chain: Option<ChainReport>,
}

pub fn analyze_vertex(g: &SubcubicGraph, v: usize) -> Result<VertexAnalysis, StructureError> {
    check_vertex(g, v)?;
    Ok(VertexAnalysis {
        profile: profile(g, v),
        set_profile: set_profile(g, g.ball2(v)),
        case: optional(classify_case(g, v))?,
        boundary_identity: optional(check_boundary_identity(g, v))?,
        preview_identity: optional(check_preview_identity(g, v))?,
        chain: optional(check_chain_inequalities(g, v))?,
    })
}

fn optional<T>(r: Result<T, StructureError>) -> Result<Option<T>, StructureError> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(StructureError::NotApplicable { .. } | StructureError::NotInVStar { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn petersen_profile() {
        let g = named("petersen").unwrap();
        for v in 0..10 {
            let p = profile(&g, v);
            // The six vertices at distance 2 induce a 6-cycle.
            assert_eq!((p.p2, p.p3, p.beta, p.beta3, p.ell), (0, 3, 6, 6, 6));
            assert!(p.in_vt && !p.in_vstar && !p.in_vstarstar);
            assert_eq!(p.b, g.vertices().difference(g.closed_neighborhood(v)));
        }
        assert!(matches!(classify_case(&g, 0), Err(StructureError::NotInVStar { .. })));
        let bi = check_boundary_identity(&g, 0).unwrap();
        assert_eq!((bi.boundary, bi.formula), (0, 0));
    }

    #[test]
    fn k4_profile() {
        let g = named("k4").unwrap();
        let p = profile(&g, 0);
        assert!(p.on_triangle && !p.in_vt);
        assert!(matches!(
            check_boundary_identity(&g, 0),
            Err(StructureError::NotApplicable { .. })
        ));
    }

    #[test]
    fn vstarstar_with_two_neighbor() {
        // Cube with one edge subdivided: the ends of that edge have a 2-neighbor.
        let cube = named("cube").unwrap();
        let mut e: Vec<_> = cube.edges().into_iter().filter(|&x| x != (0, 1)).collect();
        e.extend([(0, 8), (1, 8)]);
        let g = SubcubicGraph::build(9, &e).unwrap();
        let p = profile(&g, 0);
        assert!(p.in_vstarstar && p.in_vstar && p.p2 == 1);
        assert!(!profile(&g, 8).in_vt);
    }

    #[test]
    fn boundary_identity_on_c6_is_not_applicable() {
        let g = named("c6").unwrap();
        assert!(matches!(
            check_boundary_identity(&g, 2),
            Err(StructureError::NotApplicable { .. })
        ));
    }

    #[test]
    fn set_profile_examples() {
        let g = named("k33").unwrap();
        let sp = set_profile(&g, g.vertices());
        assert_eq!((sp.a, sp.i, sp.boundary_size), (0, 0, 0));

        let claw = named("k13").unwrap();
        let sp = set_profile(&claw, set(&[0]));
        assert_eq!(sp.i, 3);
        assert_eq!(sp.i_by_degree, [0, 3, 0, 0]);
        assert_eq!((sp.i2, sp.i3), (0, 0));
        assert!(!sp.all_attached_by_three_or_four);

        // C₄ on 0..4, pendant path 0-4-5; X is the path.
        let g = SubcubicGraph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let sp = set_profile(&g, set(&[4, 5]));
        assert_eq!(sp.a, 1);
        assert_eq!(sp.a_by_boundary, [0, 1, 0, 0, 0]);
        assert_eq!(g.components_within(set(&[0, 1, 2, 3])).len(), 1);
        assert_eq!(sp.closure, g.vertices());
    }

    #[test]
    fn decomposition_on_fixture() {
        let g = SubcubicGraph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        for x in [set(&[4]), set(&[4, 5]), set(&[0]), set(&[5]), VertexSet::EMPTY] {
            assert!(closure_decomposition(&g, x).holds(), "{x:?}");
        }
    }

    #[test]
    fn table_matches_frozen_copy() {
        use TableCell::*;
        let e = ExceedsClosureBound;
        let w = WeightInfeasible;
        let ok = |m| Allowed { max_beta2_plus_ell: m };
        let frozen = [
            [ok(1), e, e, e, e],
            [w, ok(2), e, e, e],
            [w, w, ok(4), e, e],
            [w, ok(0), e, e, e],
            [w, w, ok(2), e, e],
            [w, w, w, ok(3), e],
            [w, w, w, ok(0), ok(5)],
            [w, w, w, ok(1), e],
            [w, w, w, w, ok(3)],
            [w, w, w, w, ok(0)],
        ];
        for (row, &(a, i)) in TABLE_ROWS.iter().enumerate() {
            for (col, r) in TABLE_R.enumerate() {
                assert_eq!(table_cell(a, i, r), frozen[row][col], "(a,i)=({a},{i}) r={r}");
            }
        }
    }

    #[test]
    fn case_rules_are_consistent_with_table() {
        for rule in CASE_RULES {
            match table_cell(rule.a, rule.i, rule.r) {
                TableCell::Allowed { max_beta2_plus_ell } => {
                    assert!(rule.beta2_plus_ell_max <= max_beta2_plus_ell)
                }
                other => panic!("{:?} lands on {other:?}", rule.tag),
            }
        }
    }

    #[test]
    fn chain_gate_reports_unattached_c4() {
        // v = 0 with neighbors 1, 2, 3; B = {4, 5, 6}; a C₄ hangs off 4 by one edge.
        let mut e = vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 5), (5, 6)];
        e.extend([(7, 8), (8, 9), (9, 10), (10, 7), (4, 7)]);
        let g = SubcubicGraph::build(11, &e).unwrap();
        let sp = set_profile(&g, g.ball2(0));
        assert_eq!(sp.a_by_boundary[1], 1);
        let rep = check_chain_inequalities(&g, 0).unwrap();
        assert!(!rep.hypotheses);
        assert_eq!(rep.inequalities[0].verdict, Verdict::HypothesesNotMet);
        assert_eq!(rep.inequalities[1].verdict, Verdict::Holds);
        assert!(!rep.any_failure());
        let pv = check_preview_identity(&g, 0).unwrap();
        assert_eq!(pv.verdict, Verdict::HypothesesNotMet);
        assert_eq!(pv.lhs, pv.general_formula);
    }
}
