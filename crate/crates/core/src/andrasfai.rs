//! The Andrasfai graph family Gamma_d, its window colorings, backtracking
//! homomorphism search, and blow-up completion.
//!
//! Gamma_d is the circulant graph on vertices {1, ..., 3d-1} with edges at
//! cyclic label differences in [d, 2d-1]. The implementation is 0-indexed:
//! paper vertex i maps to index i-1. Gamma_2 is C5.

use crate::graph::Graph;
use crate::oracles::find_triangle;
use crate::set::VertexSet;
use thiserror::Error;

const NONE: usize = usize::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GammaError {
    #[error("d must be positive")]
    ZeroD,
    #[error("the given set is not a window of Gamma_{0}")]
    NotAWindow(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomError {
    #[error("source graph has a triangle {{{0}, {1}, {2}}}")]
    TriangleInSource(usize, usize, usize),
    #[error("mapping has {got} entries for a source on {expected} vertices")]
    WrongLength { got: usize, expected: usize },
    #[error("vertex {vertex} maps to {image}, outside Gamma_{d}")]
    TargetOutOfRange {
        vertex: usize,
        image: usize,
        d: usize,
    },
    #[error("source edge {0} {1} does not map to a Gamma edge")]
    EdgeNotPreserved(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlowupError {
    #[error("I1 is not independent: {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("I1 is not maximal: vertex {0} has no neighbor in I1")]
    NotMaximal(usize),
    #[error("graph is not the blow-up completion of the mapping at pair {0}, {1}")]
    NotBlowup(usize, usize),
    #[error("witness inconsistency: {0}")]
    WitnessInconsistency(String),
}

/// Gamma_d together with its parameter.
#[derive(Debug, Clone)]
pub struct GammaGraph {
    d: usize,
    graph: Graph,
}

impl GammaGraph {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

/// Builds Gamma_d: 3d-1 vertices, edges at cyclic index differences in
/// [d, 2d-1]. The result is d-regular and triangle-free.
pub fn build_gamma(d: usize) -> Result<GammaGraph, GammaError> {
    if d == 0 {
        return Err(GammaError::ZeroD);
    }
    let m = 3 * d - 1;
    let mut graph = Graph::empty(m);
    for u in 0..m {
        for v in u + 1..m {
            let diff = v - u;
            if (d..=2 * d - 1).contains(&diff) || (d..=2 * d - 1).contains(&(m - diff)) {
                graph.add_edge(u, v).unwrap();
            }
        }
    }
    Ok(GammaGraph { d, graph })
}

/// The window of `d` cyclically consecutive vertices starting at `start`.
fn window(start: usize, len: usize, m: usize) -> VertexSet {
    (0..len).map(|k| (start + k) % m).collect()
}

/// The maximal independent sets of Gamma_d: exactly the 3d-1 windows of
/// length d, listed by ascending start vertex.
pub fn gamma_maximal_independent_sets(d: usize) -> Vec<VertexSet> {
    assert!(d >= 1, "d must be positive");
    let m = 3 * d - 1;
    (0..m).map(|s| window(s, d, m)).collect()
}

/// A proper 3-coloring of the vertex set of an ambient graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriColoring {
    pub parts: [VertexSet; 3],
}

impl TriColoring {
    /// Parts are pairwise disjoint, independent in `g`, and cover `V(g)`.
    pub fn is_proper_partition_of(&self, g: &Graph) -> bool {
        let [a, b, c] = &self.parts;
        if !a.is_disjoint(b) || !a.is_disjoint(c) || !b.is_disjoint(c) {
            return false;
        }
        if a.union(b).union(c) != g.vertex_set() {
            return false;
        }
        self.parts
            .iter()
            .all(|p| crate::graph::check_set(g, p, crate::graph::SetMode::Independent))
    }
}

/// The window 3-coloring of Gamma_d with `d1` as the first class: rotating
/// labels so `d1 = {0..d}`, the classes are `{0..d}`, `{d..2d}` and
/// `{2d..3d-1}`. The complement of Gamma_d restricted to the union of the
/// last two classes has no induced C4.
pub fn gamma_coloring(d: usize, d1: &VertexSet) -> Result<TriColoring, GammaError> {
    assert!(d >= 1, "d must be positive");
    let m = 3 * d - 1;
    let start = (0..m)
        .find(|&s| window(s, d, m) == *d1)
        .ok_or(GammaError::NotAWindow(d))?;
    Ok(TriColoring {
        parts: [
            d1.clone(),
            window((start + d) % m, d, m),
            window((start + 2 * d) % m, d - 1, m),
        ],
    })
}

/// Lexicographically least induced 4-cycle inside `g[s]`, as `[a, b, c,
/// e]` with edges ab, bc, ce, ea and non-edges ac, be. Equivalently: an
/// induced two-edge matching of the complement restricted to `s`.
pub fn find_induced_c4(g: &Graph, s: &VertexSet) -> Option<[usize; 4]> {
    let members = s.to_vec();
    for (i, &a) in members.iter().enumerate() {
        for &c in &members[i + 1..] {
            if g.has_edge(a, c) {
                continue;
            }
            let common = g.neighbors(a).intersection(g.neighbors(c)).intersection(s);
            let cm = common.to_vec();
            for (j, &b) in cm.iter().enumerate() {
                for &e in &cm[j + 1..] {
                    if !g.has_edge(b, e) {
                        return Some([a, b, c, e]);
                    }
                }
            }
        }
    }
    None
}

/// An edge-preserving map into Gamma_d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    d: usize,
    map: Vec<usize>,
}

impl Homomorphism {
    /// Validates that every edge of `source` maps to an edge of Gamma_d.
    pub fn new(source: &Graph, d: usize, map: Vec<usize>) -> Result<Self, HomError> {
        if map.len() != source.n() {
            return Err(HomError::WrongLength {
                got: map.len(),
                expected: source.n(),
            });
        }
        let gamma = build_gamma(d).expect("d >= 1");
        for (v, &t) in map.iter().enumerate() {
            if t >= gamma.graph().n() {
                return Err(HomError::TargetOutOfRange {
                    vertex: v,
                    image: t,
                    d,
                });
            }
        }
        for (u, v) in source.edges() {
            if !gamma.graph().has_edge(map[u], map[v]) {
                return Err(HomError::EdgeNotPreserved(u, v));
            }
        }
        Ok(Homomorphism { d, map })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image_of(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.map[v]).collect()
    }

    pub fn preimage_of(&self, targets: &VertexSet) -> VertexSet {
        self.map
            .iter()
            .enumerate()
            .filter(|&(_, &t)| targets.contains(t))
            .map(|(v, _)| v)
            .collect()
    }
}

/// Exhaustive backtracking search for a homomorphism from `f` (must be
/// triangle-free) into Gamma_d. `Ok(None)` means the search space was
/// exhausted at this d.
///
/// Vertices with identical open neighborhoods (twins) are folded onto one
/// representative first; this changes neither existence nor the d found,
/// since a homomorphism may always send twins to the same target, and it
/// collapses blow-ups to their pattern graph. The folded instance is then
/// searched with variables by descending degree, targets in ascending
/// label order, and forward checking on the neighbors of each assignment.
pub fn find_homomorphism(f: &Graph, d: usize) -> Result<Option<Homomorphism>, HomError> {
    assert!(d >= 1, "d must be positive");
    if let Some((a, b, c)) = find_triangle(f) {
        return Err(HomError::TriangleInSource(a, b, c));
    }
    let gamma = build_gamma(d).expect("d >= 1");

    // twin folding: group by open neighborhood, keep least representative
    let mut class_of_neighborhood: std::collections::HashMap<VertexSet, usize> =
        std::collections::HashMap::new();
    let mut class_of: Vec<usize> = Vec::with_capacity(f.n());
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..f.n() {
        let key = f.neighbors(v).clone();
        let next = reps.len();
        let class = *class_of_neighborhood.entry(key).or_insert_with(|| {
            reps.push(v);
            next
        });
        class_of.push(class);
    }
    let rep_set: VertexSet = reps.iter().copied().collect();
    let (folded, _) = f
        .induced_subgraph(&rep_set)
        .expect("representatives are in range");

    let n = folded.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(folded.degree(v)), v));
    let mut domains = vec![gamma.graph().vertex_set(); n];
    let mut assigned = vec![NONE; n];
    if hom_backtrack(&folded, &gamma, &order, 0, &mut domains, &mut assigned) {
        let lifted: Vec<usize> = class_of.iter().map(|&c| assigned[c]).collect();
        let hom = Homomorphism::new(f, d, lifted).expect("search output is edge-preserving");
        Ok(Some(hom))
    } else {
        Ok(None)
    }
}

fn hom_backtrack(
    f: &Graph,
    gamma: &GammaGraph,
    order: &[usize],
    depth: usize,
    domains: &mut [VertexSet],
    assigned: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let choices = domains[v].clone();
    for t in choices.iter() {
        assigned[v] = t;
        let mut trail: Vec<(usize, VertexSet)> = Vec::new();
        let mut feasible = true;
        for w in f.neighbors(v).iter() {
            if assigned[w] != NONE {
                continue;
            }
            let pruned = domains[w].intersection(gamma.graph().neighbors(t));
            if pruned.is_empty() {
                feasible = false;
            }
            if pruned != domains[w] {
                trail.push((w, std::mem::replace(&mut domains[w], pruned)));
            }
            if !feasible {
                break;
            }
        }
        if feasible && hom_backtrack(f, gamma, order, depth + 1, domains, assigned) {
            return true;
        }
        for (w, old) in trail {
            domains[w] = old;
        }
        assigned[v] = NONE;
    }
    false
}

/// Default cap on the Gamma index when none is given: ceil((n+1)/3).
pub fn default_d_max(n: usize) -> usize {
    ((n + 1).div_ceil(3)).max(1)
}

/// Least d <= d_max admitting a homomorphism from `f`, with a witness.
/// `Ok(None)` reports exhaustion, not non-existence.
pub fn search_gamma_target(
    f: &Graph,
    d_max: usize,
) -> Result<Option<(usize, Homomorphism)>, HomError> {
    for d in 1..=d_max {
        if let Some(h) = find_homomorphism(f, d)? {
            return Ok(Some((d, h)));
        }
    }
    Ok(None)
}

/// The maximal supergraph of `f` still homomorphic to Gamma_d via `h`: an
/// edge wherever the images are adjacent. The result is a blow-up of
/// Gamma_d, hence triangle-free, and contains `f`.
pub fn blowup_completion(f: &Graph, h: &Homomorphism) -> Graph {
    assert_eq!(h.map().len(), f.n(), "mapping length mismatch");
    let gamma = build_gamma(h.d()).expect("d >= 1");
    let mut out = Graph::empty(f.n());
    for u in 0..f.n() {
        for v in u + 1..f.n() {
            if gamma.graph().has_edge(h.map()[u], h.map()[v]) {
                out.add_edge(u, v).unwrap();
            }
        }
    }
    for (u, v) in f.edges() {
        assert!(out.has_edge(u, v), "mapping does not preserve edge {u} {v}");
    }
    out
}

/// Lifts the window coloring through a blow-up: given the blow-up
/// completion `h_graph` for `hom` and a maximal independent set `i1`,
/// returns a 3-coloring (i1, i2, i3) of `h_graph` such that the
/// complement restricted to `i2 ∪ i3` has no induced C4.
///
/// The image of `i1` can be a proper subset of a window when some classes
/// are empty; the lexicographically least window containing it is used,
/// and the preimage of that window is checked to equal `i1` (maximality
/// forces this, so a mismatch is reported as an internal inconsistency).
pub fn blowup_coloring(
    h_graph: &Graph,
    hom: &Homomorphism,
    i1: &VertexSet,
) -> Result<TriColoring, BlowupError> {
    let d = hom.d();
    let m = 3 * d - 1;
    let gamma = build_gamma(d).expect("d >= 1");
    assert_eq!(hom.map().len(), h_graph.n(), "mapping length mismatch");

    for u in 0..h_graph.n() {
        for v in u + 1..h_graph.n() {
            let image_edge = gamma.graph().has_edge(hom.map()[u], hom.map()[v]);
            if h_graph.has_edge(u, v) != image_edge {
                return Err(BlowupError::NotBlowup(u, v));
            }
        }
    }
    let members = i1.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if h_graph.has_edge(u, v) {
                return Err(BlowupError::NotIndependent(u, v));
            }
        }
    }
    for v in 0..h_graph.n() {
        if !i1.contains(v) && h_graph.neighbors(v).is_disjoint(i1) {
            return Err(BlowupError::NotMaximal(v));
        }
    }

    let image = hom.image_of(i1);
    let start = (0..m)
        .find(|&s| image.is_subset(&window(s, d, m)))
        .ok_or_else(|| {
            BlowupError::WitnessInconsistency(format!(
                "image {:?} of I1 fits no window of Gamma_{}",
                image, d
            ))
        })?;
    let d1 = window(start, d, m);
    let preimage = hom.preimage_of(&d1);
    if preimage != *i1 {
        return Err(BlowupError::WitnessInconsistency(format!(
            "window preimage {:?} differs from I1 {:?}",
            preimage, i1
        )));
    }
    let gamma_parts = gamma_coloring(d, &d1).expect("d1 is a window by construction");
    Ok(TriColoring {
        parts: [
            i1.clone(),
            hom.preimage_of(&gamma_parts.parts[1]),
            hom.preimage_of(&gamma_parts.parts[2]),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, Graph};
    use crate::oracles::brute;

    #[test]
    fn gamma_small_cases() {
        assert_eq!(build_gamma(0).unwrap_err(), GammaError::ZeroD);
        let g1 = build_gamma(1).unwrap();
        assert_eq!(g1.graph(), &complete(2));

        let g2 = build_gamma(2).unwrap();
        assert_eq!(
            g2.graph().edges(),
            vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
        );

        let g3 = build_gamma(3).unwrap();
        assert_eq!(g3.graph().n(), 8);
        assert_eq!(g3.graph().m(), 12);
        assert!((0..8).all(|v| g3.graph().degree(v) == 3));
        assert_eq!(find_triangle(g3.graph()), None);
    }

    #[test]
    fn gamma_structure_up_to_12() {
        for d in 1..=12 {
            let g = build_gamma(d).unwrap();
            assert_eq!(g.graph().n(), 3 * d - 1);
            assert!((0..g.graph().n()).all(|v| g.graph().degree(v) == d));
            assert_eq!(find_triangle(g.graph()), None, "triangle in Gamma_{d}");
        }
    }

    #[test]
    fn windows_match_brute_force_enumeration() {
        for d in 1..=6 {
            let g = build_gamma(d).unwrap();
            let mut windows = gamma_maximal_independent_sets(d);
            windows.sort_by_key(|s| s.to_vec());
            let brute_sets = brute::maximal_independent_sets(g.graph());
            assert_eq!(windows, brute_sets, "window mismatch at d = {d}");
        }
    }

    #[test]
    fn window_examples() {
        let w1 = gamma_maximal_independent_sets(1);
        assert_eq!(w1.len(), 2);
        assert_eq!(w1[0].to_vec(), vec![0]);

        let w2 = gamma_maximal_independent_sets(2);
        assert_eq!(w2.len(), 5);
        assert_eq!(w2[0].to_vec(), vec![0, 1]);
        assert_eq!(w2[4].to_vec(), vec![0, 4]);

        assert!(gamma_maximal_independent_sets(3)
            .iter()
            .all(|w| w.len() == 3));
    }

    #[test]
    fn coloring_examples() {
        let tri = gamma_coloring(2, &[0, 1].into_iter().collect()).unwrap();
        assert_eq!(tri.parts[1].to_vec(), vec![2, 3]);
        assert_eq!(tri.parts[2].to_vec(), vec![4]);

        let tri1 = gamma_coloring(1, &VertexSet::singleton(0)).unwrap();
        assert_eq!(tri1.parts[1].to_vec(), vec![1]);
        assert!(tri1.parts[2].is_empty());

        let tri3 = gamma_coloring(3, &[1, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(tri3.parts[1].to_vec(), vec![4, 5, 6]);
        assert_eq!(tri3.parts[2].to_vec(), vec![0, 7]);

        assert_eq!(
            gamma_coloring(2, &[0, 2].into_iter().collect()),
            Err(GammaError::NotAWindow(2))
        );
    }

    #[test]
    fn window_coloring_has_no_c4_in_complement() {
        // the Lemma 10 shape, exhaustively for small d
        for d in 1..=6 {
            let gamma = build_gamma(d).unwrap();
            let comp = gamma.graph().complement();
            for d1 in gamma_maximal_independent_sets(d) {
                let tri = gamma_coloring(d, &d1).unwrap();
                assert!(tri.is_proper_partition_of(gamma.graph()));
                let rest = tri.parts[1].union(&tri.parts[2]);
                assert_eq!(find_induced_c4(&comp, &rest), None, "induced C4 at d = {d}");
            }
        }
    }

    #[test]
    fn induced_c4_detection() {
        let c4 = cycle(4);
        assert_eq!(
            find_induced_c4(&c4, &VertexSet::full(4)),
            Some([0, 1, 2, 3])
        );

        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(find_induced_c4(&p4, &VertexSet::full(4)), None);

        // C4 with a chord is not induced
        let chorded = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(find_induced_c4(&chorded, &VertexSet::full(4)), None);
    }

    #[test]
    fn homomorphism_search_examples() {
        let h = find_homomorphism(&cycle(5), 2).unwrap().unwrap();
        assert_eq!(h.d(), 2);

        let edge = complete(2);
        assert!(find_homomorphism(&edge, 1).unwrap().is_some());

        assert!(find_homomorphism(&cycle(7), 2).unwrap().is_some());

        let g3 = build_gamma(3).unwrap();
        assert!(find_homomorphism(g3.graph(), 2).unwrap().is_none());

        assert_eq!(
            find_homomorphism(&complete(3), 2),
            Err(HomError::TriangleInSource(0, 1, 2))
        );
    }

    #[test]
    fn search_picks_least_d() {
        assert_eq!(search_gamma_target(&cycle(5), 4).unwrap().unwrap().0, 2);
        assert_eq!(search_gamma_target(&complete(2), 4).unwrap().unwrap().0, 1);
        let g3 = build_gamma(3).unwrap();
        assert_eq!(search_gamma_target(g3.graph(), 5).unwrap().unwrap().0, 3);
        // bipartite graphs land at d = 1
        let c6 = cycle(6);
        assert_eq!(search_gamma_target(&c6, 4).unwrap().unwrap().0, 1);
    }

    #[test]
    fn completion_examples() {
        let h = find_homomorphism(&cycle(5), 2).unwrap().unwrap();
        assert_eq!(blowup_completion(&cycle(5), &h), cycle(5));

        // C5 minus an edge completes back to C5 under the same mapping
        let mut edges = cycle(5).edges();
        edges.pop();
        let broken = Graph::from_edges(5, &edges).unwrap();
        let h2 = Homomorphism::new(&broken, 2, h.map().to_vec()).unwrap();
        assert_eq!(blowup_completion(&broken, &h2), cycle(5));

        // two vertices in the same class stay non-adjacent
        let two = Graph::empty(2);
        let h3 = Homomorphism::new(&two, 2, vec![0, 0]).unwrap();
        assert_eq!(blowup_completion(&two, &h3), Graph::empty(2));
    }

    #[test]
    fn blowup_coloring_examples() {
        // Gamma_2 itself under the identity mapping
        let g2 = build_gamma(2).unwrap();
        let id = Homomorphism::new(g2.graph(), 2, (0..5).collect()).unwrap();
        let tri = blowup_coloring(g2.graph(), &id, &[0, 1].into_iter().collect()).unwrap();
        assert_eq!(tri.parts[0].len(), 2);
        assert_eq!(tri.parts[1].len(), 2);
        assert_eq!(tri.parts[2].len(), 1);
        assert!(tri.is_proper_partition_of(g2.graph()));

        // degenerate d = 1 case: K2, I1 = {0}
        let k2 = complete(2);
        let h1 = Homomorphism::new(&k2, 1, vec![0, 1]).unwrap();
        let tri1 = blowup_coloring(&k2, &h1, &VertexSet::singleton(0)).unwrap();
        assert_eq!(tri1.parts[0].to_vec(), vec![0]);
        assert_eq!(tri1.parts[1].to_vec(), vec![1]);
        assert!(tri1.parts[2].is_empty());

        // non-maximal I1 is rejected
        let err = blowup_coloring(g2.graph(), &id, &VertexSet::singleton(0));
        assert_eq!(err, Err(BlowupError::NotMaximal(1)));
    }

    #[test]
    fn hom_validation() {
        assert!(Homomorphism::new(&cycle(5), 2, vec![0, 0, 0, 0, 0]).is_err());
        assert!(matches!(
            Homomorphism::new(&cycle(5), 2, vec![0, 9, 0, 0, 0]),
            Err(HomError::TargetOutOfRange { .. })
        ));
        assert!(matches!(
            Homomorphism::new(&cycle(5), 2, vec![0; 4]),
            Err(HomError::WrongLength { .. })
        ));
    }
}
