//! Clique immersion certificates: construction from a 3-clique coloring
//! via Hall matchings, and the independent verifier.
//!
//! An immersion certificate is a branch vertex set B together with one
//! explicit path per unordered pair of B; the paths must be pairwise
//! edge-disjoint. The constructor here realizes the representative scheme:
//! each branch vertex u gets a non-neighbor r_u inside the ground clique
//! D1, and a missing adjacency uv is fixed by the length-3 path
//! u, r_v, r_u, v.

use crate::andrasfai::find_induced_c4;
use crate::graph::{check_set, Graph, Path, SetMode};
use crate::oracles::{find_triangle, max_clique, Matching};
use crate::set::VertexSet;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A clique immersion: branch set plus one path per branch pair, keyed by
/// `(u, v)` with `u < v`; the stored path runs from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Immersion {
    branch: VertexSet,
    paths: BTreeMap<(usize, usize), Path>,
}

impl Immersion {
    pub fn new(branch: VertexSet) -> Self {
        Immersion {
            branch,
            paths: BTreeMap::new(),
        }
    }

    /// The clique certificate on `vertices`: every pair routed as the
    /// single edge between them.
    pub fn clique(vertices: &VertexSet) -> Self {
        let mut im = Immersion::new(vertices.clone());
        let members = vertices.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                im.insert_pair(u, v, vec![u, v]);
            }
        }
        im
    }

    /// Records the path for the pair `{a, b}`, given in order from `a` to
    /// `b`; reoriented so the key is `(min, max)`.
    pub fn insert_pair(&mut self, a: usize, b: usize, vertices: Vec<usize>) {
        assert_ne!(a, b, "a pair needs two distinct branch vertices");
        debug_assert_eq!(vertices.first(), Some(&a));
        debug_assert_eq!(vertices.last(), Some(&b));
        let (key, path) = if a < b {
            ((a, b), Path::new(vertices))
        } else {
            ((b, a), Path::new(vertices).reversed())
        };
        let prev = self.paths.insert(key, path);
        assert!(prev.is_none(), "pair {key:?} already has a path");
    }

    /// Inserts a path for `key` exactly as given, without reorientation.
    /// Used when reconstructing certificates from files; the verifier
    /// checks endpoint correctness.
    pub fn insert_raw(&mut self, key: (usize, usize), path: Path) -> bool {
        if self.paths.contains_key(&key) {
            return false;
        }
        self.paths.insert(key, path);
        true
    }

    pub fn branch(&self) -> &VertexSet {
        &self.branch
    }

    pub fn paths(&self) -> impl Iterator<Item = (&(usize, usize), &Path)> {
        self.paths.iter()
    }

    pub fn path_for(&self, u: usize, v: usize) -> Option<&Path> {
        self.paths.get(&(u.min(v), u.max(v)))
    }

    pub fn pair_count(&self) -> usize {
        self.paths.len()
    }

    /// Applies an injective vertex relabeling (`new = map[old]`) to branch
    /// vertices and paths, e.g. to lift a certificate built on an induced
    /// subgraph back to the host graph.
    pub fn relabel(&self, map: &[usize]) -> Immersion {
        let branch: VertexSet = self.branch.iter().map(|v| map[v]).collect();
        debug_assert_eq!(
            branch.len(),
            self.branch.len(),
            "relabeling must be injective"
        );
        let mut out = Immersion::new(branch);
        for (&(u, v), path) in &self.paths {
            let vertices: Vec<usize> = path.vertices().iter().map(|&w| map[w]).collect();
            out.insert_pair(map[u], map[v], vertices);
        }
        out
    }
}

/// One verification finding. `DuplicateEdge` names both owning pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingPair {
        u: usize,
        v: usize,
    },
    EndpointMismatch {
        u: usize,
        v: usize,
        start: usize,
        end: usize,
    },
    NonEdgeStep {
        u: usize,
        v: usize,
        a: usize,
        b: usize,
    },
    DuplicateEdge {
        a: usize,
        b: usize,
        first: (usize, usize),
        second: (usize, usize),
    },
    BranchInternal {
        u: usize,
        v: usize,
        vertex: usize,
    },
    EvenPath {
        u: usize,
        v: usize,
        length: usize,
    },
    Malformed {
        detail: String,
    },
}

/// Category of a violation, for fixture tests and reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    MissingPair,
    EndpointMismatch,
    NonEdgeStep,
    DuplicateEdge,
    BranchInternal,
    EvenPath,
    Malformed,
}

impl Violation {
    pub fn kind(&self) -> ViolationKind {
        match self {
            Violation::MissingPair { .. } => ViolationKind::MissingPair,
            Violation::EndpointMismatch { .. } => ViolationKind::EndpointMismatch,
            Violation::NonEdgeStep { .. } => ViolationKind::NonEdgeStep,
            Violation::DuplicateEdge { .. } => ViolationKind::DuplicateEdge,
            Violation::BranchInternal { .. } => ViolationKind::BranchInternal,
            Violation::EvenPath { .. } => ViolationKind::EvenPath,
            Violation::Malformed { .. } => ViolationKind::Malformed,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingPair { u, v } => {
                write!(f, "missing path for branch pair {u} {v}")
            }
            Violation::EndpointMismatch { u, v, start, end } => {
                write!(f, "path for pair {u} {v} runs from {start} to {end}")
            }
            Violation::NonEdgeStep { u, v, a, b } => {
                write!(f, "path for pair {u} {v} uses non-edge {a} {b}")
            }
            Violation::DuplicateEdge {
                a,
                b,
                first,
                second,
            } => write!(
                f,
                "edge {a} {b} used by pair {} {} and pair {} {}",
                first.0, first.1, second.0, second.1
            ),
            Violation::BranchInternal { u, v, vertex } => write!(
                f,
                "path for pair {u} {v} passes through branch vertex {vertex}"
            ),
            Violation::EvenPath { u, v, length } => {
                write!(f, "path for pair {u} {v} has even length {length}")
            }
            Violation::Malformed { detail } => write!(f, "malformed certificate: {detail}"),
        }
    }
}

/// Verification outcome. `valid` covers the structural checks (coverage,
/// endpoints, edges, disjointness, well-formedness); `strong` and
/// `totally_odd` are always computed, but count as violations only when
/// requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub strong: bool,
    pub totally_odd: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    /// No disqualifying finding under the requested flags.
    pub fn accepted(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a certificate against `g`: every branch pair has exactly one
/// path with the right endpoints, every step is an edge of `g`, no edge
/// is used twice, plus strongness (no branch vertex interior to a path)
/// and total oddness (all path lengths odd) when requested. All
/// violations are reported, not just the first; verification never fails,
/// malformed input yields findings.
pub fn verify_immersion(
    g: &Graph,
    im: &Immersion,
    require_strong: bool,
    require_totally_odd: bool,
) -> VerificationReport {
    let mut violations = Vec::new();
    let branch = im.branch();

    for b in branch.iter() {
        if b >= g.n() {
            violations.push(Violation::Malformed {
                detail: format!("branch vertex {b} out of range (n = {})", g.n()),
            });
        }
    }
    for (&(u, v), path) in im.paths.iter() {
        if u >= v {
            violations.push(Violation::Malformed {
                detail: format!("pair ({u}, {v}) is not sorted"),
            });
        }
        if !branch.contains(u) || !branch.contains(v) {
            violations.push(Violation::Malformed {
                detail: format!("pair ({u}, {v}) is not a branch pair"),
            });
        }
        if path.vertices().len() < 2 {
            violations.push(Violation::Malformed {
                detail: format!("path for pair ({u}, {v}) has fewer than two vertices"),
            });
        }
        let mut seen = VertexSet::new();
        for &w in path.vertices() {
            if w >= g.n() {
                violations.push(Violation::Malformed {
                    detail: format!(
                        "path for pair ({u}, {v}) references vertex {w} (n = {})",
                        g.n()
                    ),
                });
            } else if seen.contains(w) {
                violations.push(Violation::Malformed {
                    detail: format!("path for pair ({u}, {v}) repeats vertex {w}"),
                });
            } else {
                seen.insert(w);
            }
        }
    }

    // pair coverage
    let members = branch.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !im.paths.contains_key(&(u, v)) {
                violations.push(Violation::MissingPair { u, v });
            }
        }
    }

    // endpoints
    for (&(u, v), path) in im.paths.iter() {
        if let Some((start, end)) = path.endpoints() {
            if start != u || end != v {
                violations.push(Violation::EndpointMismatch { u, v, start, end });
            }
        }
    }

    // every step is an edge
    for (&(u, v), path) in im.paths.iter() {
        for w in path.vertices().windows(2) {
            if !g.has_edge(w[0], w[1]) {
                violations.push(Violation::NonEdgeStep {
                    u,
                    v,
                    a: w[0],
                    b: w[1],
                });
            }
        }
    }

    // global edge-disjointness
    let mut owner: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for (&pair, path) in im.paths.iter() {
        for (a, b) in path.edges() {
            match owner.get(&(a, b)) {
                Some(&first) => violations.push(Violation::DuplicateEdge {
                    a,
                    b,
                    first,
                    second: pair,
                }),
                None => {
                    owner.insert((a, b), pair);
                }
            }
        }
    }

    let valid = violations.is_empty();

    let mut strong = true;
    for (&(u, v), path) in im.paths.iter() {
        for &w in path.internal() {
            if branch.contains(w) {
                strong = false;
                if require_strong {
                    violations.push(Violation::BranchInternal { u, v, vertex: w });
                }
            }
        }
    }

    let mut totally_odd = true;
    for (&(u, v), path) in im.paths.iter() {
        if path.len() % 2 == 0 {
            totally_odd = false;
            if require_totally_odd {
                violations.push(Violation::EvenPath {
                    u,
                    v,
                    length: path.len(),
                });
            }
        }
    }

    VerificationReport {
        valid,
        strong,
        totally_odd,
        violations,
    }
}

/// Hall-condition failure: a witness set C on the side whose co-neighbor
/// set in the ground clique is smaller than C.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("Hall violation: side subset {witness:?} has fewer co-neighbors in the ground clique")]
pub struct HallViolation {
    pub witness: VertexSet,
}

/// A matching in the complement bipartite graph between `side` and
/// `ground` covering `side`, by augmenting paths; both sides are scanned
/// ascending, so the result is deterministic. On failure returns the
/// witness subset C of `side` with |co-neighbors(C) ∩ ground| < |C|.
pub fn hall_matching(
    g: &Graph,
    side: &VertexSet,
    ground: &VertexSet,
) -> Result<Matching, HallViolation> {
    debug_assert!(side.is_disjoint(ground), "side and ground must be disjoint");
    let n = g.n();
    const NONE: usize = usize::MAX;
    let mut mate = vec![NONE; n]; // ground vertex -> matched side vertex

    fn try_augment(
        g: &Graph,
        ground: &VertexSet,
        u: usize,
        visited: &mut VertexSet,
        mate: &mut [usize],
    ) -> bool {
        for w in g.co_neighbors(u, ground).iter() {
            if visited.contains(w) {
                continue;
            }
            visited.insert(w);
            if mate[w] == NONE || try_augment(g, ground, mate[w], visited, mate) {
                mate[w] = u;
                return true;
            }
        }
        false
    }

    for u in side.iter() {
        let mut visited = VertexSet::new();
        if !try_augment(g, ground, u, &mut visited, &mut mate) {
            // the alternating forest reached `visited` on the ground side;
            // u plus the mates of those vertices violate Hall's condition
            let mut witness = VertexSet::singleton(u);
            for w in visited.iter() {
                witness.insert(mate[w]);
            }
            return Err(HallViolation { witness });
        }
    }

    let edges = mate
        .iter()
        .enumerate()
        .filter(|&(_, &u)| u != NONE)
        .map(|(w, &u)| (u, w))
        .collect();
    Ok(Matching::new(edges))
}

/// The representative map r: D2 ∪ D3 -> D1 induced by the two Hall
/// matchings; r_u is a non-neighbor of u, injective on D2 and on D3.
#[derive(Debug, Clone)]
pub struct Representatives {
    map: BTreeMap<usize, usize>,
    pub m2: Matching,
    pub m3: Matching,
}

impl Representatives {
    fn new(m2: Matching, m3: Matching, ground: &VertexSet) -> Self {
        let mut map = BTreeMap::new();
        for m in [&m2, &m3] {
            for &(a, b) in m.edges() {
                let (u, r) = if ground.contains(b) { (a, b) } else { (b, a) };
                map.insert(u, r);
            }
        }
        Representatives { map, m2, m3 }
    }

    pub fn rep(&self, u: usize) -> usize {
        self.map[&u]
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("independence number mismatch: {{{0}, {1}, {2}}} is independent")]
    AlphaMismatch(usize, usize, usize),
    #[error("not a clique partition: {0}")]
    NotCliquePartition(String),
    #[error("D1 has {got} vertices but a maximum clique has {max}")]
    D1NotMaximum { got: usize, max: usize },
    #[error("induced C4 on {0:?} inside D2 ∪ D3")]
    InducedC4Present([usize; 4]),
    #[error(transparent)]
    Hall(#[from] HallViolation),
    #[error("self-verification failed: {0:?}")]
    SelfCheck(Vec<Violation>),
}

fn clique_partition_check(g: &Graph, parts: [&VertexSet; 3]) -> Result<(), ConstructError> {
    let [d1, d2, d3] = parts;
    if !d1.is_disjoint(d2) || !d1.is_disjoint(d3) || !d2.is_disjoint(d3) {
        return Err(ConstructError::NotCliquePartition(
            "classes are not pairwise disjoint".into(),
        ));
    }
    if d1.union(d2).union(d3) != g.vertex_set() {
        return Err(ConstructError::NotCliquePartition(
            "classes do not cover the vertex set".into(),
        ));
    }
    for (name, part) in [("D1", d1), ("D2", d2), ("D3", d3)] {
        if !check_set(g, part, SetMode::Clique) {
            return Err(ConstructError::NotCliquePartition(format!(
                "{name} is not a clique"
            )));
        }
    }
    Ok(())
}

/// Builds the immersion with branch set D2 ∪ D3 from a 3-clique coloring
/// of `g` in which D1 is a maximum clique and `g[D2 ∪ D3]` has no induced
/// C4. Adjacent branch pairs are routed as single edges; each missing
/// adjacency u ∈ D2, v ∈ D3 becomes the length-3 path u, r_v, r_u, v with
/// interior in D1. Complete graphs short-circuit past the maximality and
/// C4 checks, since every pair is already an edge.
///
/// The output is re-verified (strong, totally odd) before returning.
pub fn construct_from_clique_coloring(
    g: &Graph,
    d1: &VertexSet,
    d2: &VertexSet,
    d3: &VertexSet,
) -> Result<Immersion, ConstructError> {
    clique_partition_check(g, [d1, d2, d3])?;
    let branch = d2.union(d3);

    if g.is_complete() {
        let im = Immersion::clique(&branch);
        let report = verify_immersion(g, &im, true, true);
        if !report.accepted() {
            return Err(ConstructError::SelfCheck(report.violations));
        }
        return Ok(im);
    }

    if let Some((a, b, c)) = find_triangle(&g.complement()) {
        return Err(ConstructError::AlphaMismatch(a, b, c));
    }
    let omega = max_clique(g).len();
    if d1.len() != omega {
        return Err(ConstructError::D1NotMaximum {
            got: d1.len(),
            max: omega,
        });
    }
    if let Some(c4) = find_induced_c4(g, &branch) {
        return Err(ConstructError::InducedC4Present(c4));
    }

    let m2 = hall_matching(g, d2, d1)?;
    let m3 = hall_matching(g, d3, d1)?;
    let reps = Representatives::new(m2, m3, d1);

    let mut im = Immersion::new(branch.clone());
    let members = branch.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.has_edge(u, v) {
                im.insert_pair(u, v, vec![u, v]);
            } else {
                let (ru, rv) = (reps.rep(u), reps.rep(v));
                // the proof's representative facts; violations would mean
                // a precondition slipped through
                debug_assert_ne!(ru, rv, "shared representative for non-adjacent pair");
                debug_assert!(g.has_edge(u, rv) && g.has_edge(v, ru));
                debug_assert!(g.has_edge(ru, rv));
                im.insert_pair(u, v, vec![u, rv, ru, v]);
            }
        }
    }

    let report = verify_immersion(g, &im, true, true);
    if !report.accepted() {
        return Err(ConstructError::SelfCheck(report.violations));
    }
    Ok(im)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JoinError {
    #[error("branch sets overlap at vertex {0}")]
    BranchOverlap(usize),
    #[error("missing cross edge {0} {1}")]
    MissingCrossEdge(usize, usize),
    #[error("edge {0} {1} used by both path families")]
    EdgeCollision(usize, usize),
}

/// Joins two immersions across a complete bipartite cut: cross pairs are
/// routed as single edges, within-part paths are inherited unchanged.
pub fn join_immersions(
    g: &Graph,
    im1: &Immersion,
    im2: &Immersion,
) -> Result<Immersion, JoinError> {
    if let Some(v) = im1.branch().intersection(im2.branch()).first() {
        return Err(JoinError::BranchOverlap(v));
    }
    for b1 in im1.branch().iter() {
        for b2 in im2.branch().iter() {
            if !g.has_edge(b1, b2) {
                return Err(JoinError::MissingCrossEdge(b1, b2));
            }
        }
    }

    let mut used: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    let mut claim = |a: usize, b: usize| -> Result<(), JoinError> {
        let key = (a.min(b), a.max(b));
        if used.insert(key, ()).is_some() {
            return Err(JoinError::EdgeCollision(key.0, key.1));
        }
        Ok(())
    };

    let mut out = Immersion::new(im1.branch().union(im2.branch()));
    for im in [im1, im2] {
        for (&(u, v), path) in im.paths() {
            for (a, b) in path.edges() {
                claim(a, b)?;
            }
            out.insert_raw((u, v), path.clone());
        }
    }
    for b1 in im1.branch().iter() {
        for b2 in im2.branch().iter() {
            claim(b1, b2)?;
            out.insert_pair(b1, b2, vec![b1, b2]);
        }
    }
    Ok(out)
}
