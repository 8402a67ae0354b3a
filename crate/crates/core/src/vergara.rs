//! The chi-immersion pipeline for graphs with independence number at most
//! 2 whose complement maps into some Gamma_d: criticality reduction, join
//! decomposition over complement components, Gamma targeting, blow-up
//! coloring, and the clique-coloring constructor, ending in a strong
//! totally-odd immersion on exactly chi(G) branch vertices.

use crate::andrasfai::{
    blowup_coloring, blowup_completion, default_d_max, search_gamma_target, BlowupError,
};
use crate::graph::Graph;
use crate::immersion::{
    construct_from_clique_coloring, join_immersions, verify_immersion, ConstructError, Immersion,
    JoinError,
};
use crate::oracles::{chromatic_number_alpha2, max_clique, AlphaTooLarge};
use crate::set::VertexSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VergaraError {
    #[error(transparent)]
    AlphaTooLarge(#[from] AlphaTooLarge),
    #[error("no homomorphism into Gamma_d for d <= {d_max}; search exhausted, construction not guaranteed")]
    GammaTargetNotFound { d_max: usize },
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl From<ConstructError> for VergaraError {
    fn from(e: ConstructError) -> Self {
        VergaraError::Internal(format!("clique-coloring constructor: {e}"))
    }
}

impl From<JoinError> for VergaraError {
    fn from(e: JoinError) -> Self {
        VergaraError::Internal(format!("join: {e}"))
    }
}

impl From<BlowupError> for VergaraError {
    fn from(e: BlowupError) -> Self {
        VergaraError::Internal(format!("blow-up coloring: {e}"))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("restriction target contains {0}, which is not a branch vertex")]
pub struct TargetNotSubset(pub usize);

/// Keeps only the paths between `target` pairs. Edge-disjointness and
/// parity are inherited; strongness can only improve, but callers
/// re-verify rather than argue it.
pub fn branch_restrict(im: &Immersion, target: &VertexSet) -> Result<Immersion, TargetNotSubset> {
    if let Some(v) = target.difference(im.branch()).first() {
        return Err(TargetNotSubset(v));
    }
    let mut out = Immersion::new(target.clone());
    for (&(u, v), path) in im.paths() {
        if target.contains(u) && target.contains(v) {
            out.insert_raw((u, v), path.clone());
        }
    }
    Ok(out)
}

/// Repeatedly deletes vertices whose removal preserves the chromatic
/// number (scanning ascending, restarting after each deletion) until the
/// graph is vertex-critical. Returns the reduced graph, relabeled, and
/// the set of removed vertices; the kept vertices in ascending order give
/// the relabeling map.
///
/// Removability is decided against one maintained maximum matching M of
/// the complement: chi(G - v) = chi(G) iff nu drops with v, i.e. iff v is
/// matched and M minus v's edge admits no augmenting path from v's mate
/// (any such path must end at the only newly exposed vertex). When v
/// goes, M minus that edge is already maximum again, so the matching is
/// patched in place instead of recomputed.
pub fn critical_reduction(g: &Graph) -> Result<(Graph, VertexSet), AlphaTooLarge> {
    chromatic_number_alpha2(g)?;
    let comp = g.complement();
    let mut alive = g.vertex_set();
    const NONE: usize = usize::MAX;
    let mut mate = vec![NONE; g.n()];
    for &(a, b) in crate::oracles::max_matching(&comp).edges() {
        mate[a] = b;
        mate[b] = a;
    }
    'scan: loop {
        for v in alive.iter() {
            if mate[v] == NONE {
                // some maximum matching avoids v, so chi drops with v
                continue;
            }
            let partner = mate[v];
            let mut candidate = alive.clone();
            candidate.remove(v);
            let mut trial = mate.clone();
            trial[v] = NONE;
            trial[partner] = NONE;
            if !crate::oracles::augment_within(&comp, &candidate, &mut trial, partner) {
                mate[v] = NONE;
                mate[partner] = NONE;
                alive = candidate;
                continue 'scan;
            }
        }
        break;
    }
    let (reduced, _) = g.induced_subgraph(&alive).expect("alive is in range");
    Ok((reduced, g.vertex_set().difference(&alive)))
}

/// Connected components of the complement, ascending by least vertex. A
/// singleton list means the complement is connected; otherwise the parts
/// are pairwise completely joined in `g`.
pub fn join_decomposition(g: &Graph) -> Vec<VertexSet> {
    let comp = g.complement();
    let mut seen = VertexSet::new();
    let mut parts = Vec::new();
    for v in 0..g.n() {
        if seen.contains(v) {
            continue;
        }
        let mut part = VertexSet::singleton(v);
        let mut stack = vec![v];
        seen.insert(v);
        while let Some(u) = stack.pop() {
            for w in comp.neighbors(u).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    part.insert(w);
                    stack.push(w);
                }
            }
        }
        parts.push(part);
    }
    parts
}

/// Replayable log of one pipeline level. Vertex labels in `removed` and
/// `branch` refer to the level's input graph; `i1` and part contents are
/// in the reduced graph's labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineTrace {
    pub n: usize,
    pub chromatic: usize,
    pub removed: Vec<usize>,
    pub parts: Vec<PartTrace>,
    pub gamma_d: Option<usize>,
    /// The witness mapping into Gamma_d (indexed by the reduced graph's
    /// vertices), recorded so a replay can skip the search.
    pub gamma_map: Vec<usize>,
    pub i1: Vec<usize>,
    pub i1_shortcut: Option<bool>,
    pub gallai_ok: Option<bool>,
    pub branch: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartTrace {
    pub vertices: Vec<usize>,
    pub trace: PipelineTrace,
}

/// Builds a strong, totally-odd immersion of K_{chi(G)} in `g`.
///
/// Pipeline: chromatic number via the matching identity; vertex-critical
/// reduction; recursion over complement components combined by
/// `join_immersions`; on a complement-connected part, the Gallai bound
/// |V| >= 2k-1 is asserted, the complement is mapped into the least
/// feasible Gamma_d, and either a maximum independent set of the blow-up
/// completion already yields a k-clique, or the blow-up coloring feeds
/// the clique-coloring constructor and the branch set is restricted to
/// exactly k vertices.
///
/// `d_max` caps the Gamma search (default: ceil((n+1)/3) per part);
/// exhaustion is reported as `GammaTargetNotFound`, not non-existence.
pub fn construct_chi_immersion(
    g: &Graph,
    d_max: Option<usize>,
) -> Result<(Immersion, PipelineTrace), VergaraError> {
    let k = chromatic_number_alpha2(g)?;
    let (im, trace) = build_level(g, k, d_max)?;
    if im.branch().len() != k {
        return Err(VergaraError::Internal(format!(
            "branch count {} differs from chromatic number {k}",
            im.branch().len()
        )));
    }
    let report = verify_immersion(g, &im, true, true);
    if !report.accepted() {
        return Err(VergaraError::Internal(format!(
            "self-verification failed: {:?}",
            report.violations
        )));
    }
    Ok((im, trace))
}

fn build_level(
    g: &Graph,
    k: usize,
    d_max: Option<usize>,
) -> Result<(Immersion, PipelineTrace), VergaraError> {
    let (reduced, removed) = critical_reduction(g)?;
    let kept: Vec<usize> = g.vertex_set().difference(&removed).to_vec();
    let parts = join_decomposition(&reduced);

    let mut trace = PipelineTrace {
        n: g.n(),
        chromatic: k,
        removed: removed.to_vec(),
        parts: Vec::new(),
        gamma_d: None,
        gamma_map: Vec::new(),
        i1: Vec::new(),
        i1_shortcut: None,
        gallai_ok: None,
        branch: Vec::new(),
    };

    let im_reduced = if parts.len() > 1 {
        let mut acc = Immersion::new(VertexSet::new());
        for part in &parts {
            let (sub, map) = reduced.induced_subgraph(part).expect("part is in range");
            let sub_k = chromatic_number_alpha2(&sub)?;
            let (sub_im, sub_trace) = build_level(&sub, sub_k, d_max)?;
            acc = join_immersions(&reduced, &acc, &sub_im.relabel(&map))?;
            trace.parts.push(PartTrace {
                vertices: part.to_vec(),
                trace: sub_trace,
            });
        }
        if acc.branch().len() != k {
            return Err(VergaraError::Internal(format!(
                "join parts sum to {} branch vertices, expected {k}",
                acc.branch().len()
            )));
        }
        acc
    } else {
        // complement-connected critical graph: Gallai gives |V| >= 2k-1
        if reduced.n() + 1 < 2 * k {
            return Err(VergaraError::Internal(format!(
                "Gallai bound violated: {} vertices for a {k}-critical graph with connected complement",
                reduced.n()
            )));
        }
        trace.gallai_ok = Some(true);
        let f = reduced.complement();
        let cap = d_max.unwrap_or_else(|| default_d_max(reduced.n()));
        let found = search_gamma_target(&f, cap)
            .map_err(|e| VergaraError::Internal(format!("gamma search: {e}")))?;
        let Some((d, hom)) = found else {
            return Err(VergaraError::GammaTargetNotFound { d_max: cap });
        };
        trace.gamma_d = Some(d);
        trace.gamma_map = hom.map().to_vec();
        let h_graph = blowup_completion(&f, &hom);
        let i1 = max_clique(&h_graph.complement());
        trace.i1 = i1.to_vec();
        if i1.len() >= k {
            trace.i1_shortcut = Some(true);
            let branch: VertexSet = i1.iter().take(k).collect();
            Immersion::clique(&branch)
        } else {
            trace.i1_shortcut = Some(false);
            let coloring = blowup_coloring(&h_graph, &hom, &i1)?;
            let host = h_graph.complement();
            let full = construct_from_clique_coloring(
                &host,
                &coloring.parts[0],
                &coloring.parts[1],
                &coloring.parts[2],
            )?;
            let target: VertexSet = full.branch().iter().take(k).collect();
            branch_restrict(&full, &target)
                .map_err(|e| VergaraError::Internal(format!("branch restriction: {e}")))?
        }
    };

    let im = im_reduced.relabel(&kept);
    trace.branch = im.branch().to_vec();
    Ok((im, trace))
}
