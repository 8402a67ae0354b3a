//! Exact desk-scale oracles: independence number, maximum clique, maximum
//! matching, chromatic number and the degree/cover applicability gates.
//!
//! These are exponential-time exact searches intended for graphs up to a
//! few dozen vertices. Everything is deterministic; ties break toward the
//! lexicographically least vertex set so that downstream certificates are
//! reproducible byte for byte.

use crate::graph::{check_set, Graph, SetMode};
use crate::set::VertexSet;
use std::collections::VecDeque;
use thiserror::Error;

const NONE: usize = usize::MAX;

/// Precondition failure for the matching-based chromatic number: the graph
/// has an independent set of size 3 (witness carried).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("independence number exceeds 2: {{{0}, {1}, {2}}} is independent")]
pub struct AlphaTooLarge(pub usize, pub usize, pub usize);

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        Matching { edges }
    }

    fn from_mates(mate: &[usize]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter(|&(u, &v)| v != NONE && u < v)
            .map(|(u, &v)| (u, v))
            .collect();
        Matching { edges }
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// All matched endpoints.
    pub fn matched(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn covers(&self, s: &VertexSet) -> bool {
        s.is_subset(&self.matched())
    }

    /// Endpoints are disjoint and every pair is an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.matched().len() == 2 * self.edges.len()
            && self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

/// A proper coloring: an ordered list of independent classes partitioning
/// the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub classes: Vec<VertexSet>,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new();
        for class in &self.classes {
            if !seen.is_disjoint(class) || !check_set(g, class, SetMode::Independent) {
                return false;
            }
            seen = seen.union(class);
        }
        seen == g.vertex_set()
    }
}

/// Lexicographically least triangle `(u, v, w)` with `u < v < w`, if any.
pub fn find_triangle(g: &Graph) -> Option<(usize, usize, usize)> {
    for u in 0..g.n() {
        for v in g.neighbors(u).above(u).iter() {
            let common = g.neighbors(u).intersection(g.neighbors(v));
            if let Some(w) = common.above(v).first() {
                return Some((u, v, w));
            }
        }
    }
    None
}

/// Exact maximum clique; among maximum cliques, the lexicographically
/// least vertex set. Branch and bound over ascending candidate order with
/// a greedy-coloring upper bound.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::new();
    let mut current = Vec::new();
    expand_clique(g, &mut current, g.vertex_set(), &mut best);
    best
}

fn expand_clique(g: &Graph, current: &mut Vec<usize>, cand: VertexSet, best: &mut VertexSet) {
    if current.len() + cand.len() <= best.len() {
        return;
    }
    if current.len() + greedy_color_bound(g, &cand) <= best.len() {
        return;
    }
    let members = cand.to_vec();
    for (idx, &v) in members.iter().enumerate() {
        if current.len() + (members.len() - idx) <= best.len() {
            break;
        }
        current.push(v);
        if current.len() > best.len() {
            *best = current.iter().copied().collect();
        }
        let next = cand.above(v).intersection(g.neighbors(v));
        expand_clique(g, current, next, best);
        current.pop();
    }
}

/// Classes of a greedy coloring of `g[cand]`: an upper bound on the
/// largest clique within `cand`.
fn greedy_color_bound(g: &Graph, cand: &VertexSet) -> usize {
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in cand.iter() {
        match classes.iter_mut().find(|c| c.is_disjoint(g.neighbors(v))) {
            Some(c) => c.insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    classes.len()
}

/// Exact independence number, via maximum clique of the complement.
pub fn independence_number(g: &Graph) -> usize {
    max_clique(&g.complement()).len()
}

/// Exact maximum-cardinality matching in a general graph: augmenting-path
/// search with blossom contraction, seeded by a greedy matching. Vertices
/// and neighbors are scanned in ascending order throughout.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for u in 0..n {
        if mate[u] == NONE {
            if let Some(v) = g.neighbors(u).iter().find(|&v| mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    let all = g.vertex_set();
    for root in 0..n {
        if mate[root] == NONE {
            augment_from(g, &all, &mut mate, root);
        }
    }
    Matching::from_mates(&mate)
}

/// One blossom phase: searches for an augmenting path from the exposed
/// vertex `root` inside `g[allowed]` with respect to `mate` (entries use
/// the full label space; vertices outside `allowed` are ignored). Applies
/// the augmentation and returns true when a path is found. `mate` is the
/// sentinel `usize::MAX` for exposed vertices.
pub fn augment_within(g: &Graph, allowed: &VertexSet, mate: &mut [usize], root: usize) -> bool {
    debug_assert!(allowed.contains(root) && mate[root] == NONE);
    augment_from(g, allowed, mate, root)
}

fn augment_from(g: &Graph, allowed: &VertexSet, mate: &mut [usize], root: usize) -> bool {
    let n = g.n();
    let mut used = vec![false; n];
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    used[root] = true;
    let mut queue = VecDeque::from([root]);
    let mut exposed = NONE;

    'bfs: while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u).intersection(allowed).iter() {
            if base[u] == base[v] || mate[u] == v {
                continue;
            }
            if v == root || (mate[v] != NONE && parent[mate[v]] != NONE) {
                // odd cycle: contract the blossom through the common base
                let stem = blossom_base(&base, &parent, mate, u, v);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(&mut in_blossom, &base, &mut parent, mate, u, stem, v);
                mark_blossom_path(&mut in_blossom, &base, &mut parent, mate, v, stem, u);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = stem;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[v] == NONE {
                parent[v] = u;
                if mate[v] == NONE {
                    exposed = v;
                    break 'bfs;
                }
                used[mate[v]] = true;
                queue.push_back(mate[v]);
            }
        }
    }

    if exposed == NONE {
        return false;
    }
    let mut v = exposed;
    while v != NONE {
        let pv = parent[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
    true
}

fn blossom_base(base: &[usize], parent: &[usize], mate: &[usize], u: usize, v: usize) -> usize {
    let mut seen = vec![false; base.len()];
    let mut a = u;
    loop {
        a = base[a];
        seen[a] = true;
        if mate[a] == NONE {
            break;
        }
        a = parent[mate[a]];
    }
    let mut b = v;
    loop {
        b = base[b];
        if seen[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn mark_blossom_path(
    in_blossom: &mut [bool],
    base: &[usize],
    parent: &mut [usize],
    mate: &[usize],
    mut v: usize,
    stem: usize,
    mut child: usize,
) {
    while base[v] != stem {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

/// Exact chromatic number for graphs with independence number at most 2.
///
/// Every color class in such a graph is a clique of size at most 2, so an
/// optimal coloring is a maximum matching of the complement plus
/// singletons: chi = n - nu(complement). Returns [`AlphaTooLarge`] with an
/// independent triple when the precondition fails.
pub fn chromatic_number_alpha2(g: &Graph) -> Result<usize, AlphaTooLarge> {
    let comp = g.complement();
    if let Some((a, b, c)) = find_triangle(&comp) {
        return Err(AlphaTooLarge(a, b, c));
    }
    Ok(g.n() - max_matching(&comp).len())
}

/// Backtracking k-colorability with saturation-first vertex selection.
/// Returns a proper coloring (classes in first-use order, no empty
/// classes) or `None` after exhaustive search.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring {
            classes: Vec::new(),
        });
    }
    if k == 0 {
        return None;
    }
    let mut color = vec![NONE; n];
    if !color_backtrack(g, k, &mut color, 0, 0) {
        return None;
    }
    let used = color.iter().copied().max().unwrap() + 1;
    let mut classes = vec![VertexSet::new(); used];
    for (v, &c) in color.iter().enumerate() {
        classes[c].insert(v);
    }
    Some(Coloring { classes })
}

fn color_backtrack(g: &Graph, k: usize, color: &mut [usize], colored: usize, used: usize) -> bool {
    let n = g.n();
    if colored == n {
        return true;
    }
    // most saturated next; ties by degree then index
    let mut pick = NONE;
    let mut pick_key = (0usize, 0usize);
    for v in 0..n {
        if color[v] != NONE {
            continue;
        }
        let mut sat = Vec::new();
        for w in g.neighbors(v).iter() {
            if color[w] != NONE && !sat.contains(&color[w]) {
                sat.push(color[w]);
            }
        }
        let key = (sat.len(), g.degree(v));
        if pick == NONE || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }
    let v = pick;
    let limit = k.min(used + 1);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|w| color[w] == c) {
            continue;
        }
        color[v] = c;
        if color_backtrack(g, k, color, colored + 1, used.max(c + 1)) {
            return true;
        }
        color[v] = NONE;
    }
    false
}

/// Result of the capped clique-cover computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliqueCover {
    Exact(usize),
    Exceeds(usize),
}

/// Least `k <= cap` such that the complement is k-colorable (the clique
/// covering number), or `Exceeds(cap)`.
pub fn clique_cover_number(g: &Graph, cap: usize) -> CliqueCover {
    let comp = g.complement();
    for k in 0..=cap {
        if is_k_colorable(&comp, k).is_some() {
            return CliqueCover::Exact(k);
        }
    }
    CliqueCover::Exceeds(cap)
}

/// Applicability report for the two degree-bounded immersion guarantees.
///
/// All threshold comparisons use integer cross-multiplication, never
/// floating point: `Delta < 19n/29 - 1` is tested as `29*Delta < 19n - 29`
/// and `Delta < 2n/3 - 1` as `3*Delta < 2n - 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateReport {
    pub n: usize,
    pub max_degree: usize,
    pub alpha_le_2: bool,
    /// `n >= 11` and `29*Delta < 19n - 29`.
    pub thm4: bool,
    /// `3*Delta < 2n - 3` and clique covering number at most 3.
    pub thm5: bool,
    /// Computed only when the thm5 degree test passes.
    pub clique_cover: Option<CliqueCover>,
}

pub fn gate_check(g: &Graph) -> GateReport {
    let n = g.n() as i64;
    let delta = g.max_degree() as i64;
    let alpha_le_2 = find_triangle(&g.complement()).is_none();
    let thm4 = n >= 11 && 29 * delta < 19 * n - 29;
    let degree_ok_5 = 3 * delta < 2 * n - 3;
    let clique_cover = if degree_ok_5 {
        Some(clique_cover_number(g, 3))
    } else {
        None
    };
    let thm5 = degree_ok_5 && matches!(clique_cover, Some(CliqueCover::Exact(k)) if k <= 3);
    GateReport {
        n: g.n(),
        max_degree: g.max_degree(),
        alpha_le_2,
        thm4,
        thm5,
        clique_cover,
    }
}

/// Reference implementations by exhaustive search. These are the ground
/// truth the fast oracles are validated against; they share no code with
/// the search implementations above.
pub mod brute {
    use super::*;

    /// Maximum matching size by branching on the least remaining vertex.
    pub fn max_matching_size(g: &Graph) -> usize {
        fn rec(g: &Graph, avail: &VertexSet) -> usize {
            let Some(u) = avail.first() else { return 0 };
            let mut rest = avail.clone();
            rest.remove(u);
            let mut best = rec(g, &rest);
            for v in g.neighbors(u).intersection(&rest).iter() {
                let mut rest2 = rest.clone();
                rest2.remove(v);
                best = best.max(1 + rec(g, &rest2));
            }
            best
        }
        rec(g, &g.vertex_set())
    }

    /// Independence number by include/exclude branching.
    pub fn independence_number(g: &Graph) -> usize {
        fn rec(g: &Graph, avail: &VertexSet) -> usize {
            let Some(u) = avail.first() else { return 0 };
            let mut without = avail.clone();
            without.remove(u);
            let skip = rec(g, &without);
            let take = 1 + rec(g, &without.difference(g.neighbors(u)));
            skip.max(take)
        }
        rec(g, &g.vertex_set())
    }

    /// All maximal independent sets, by scanning every subset. Only
    /// sensible for small n.
    pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        assert!(n <= 22, "subset scan is 2^n");
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !check_set(g, &s, SetMode::Independent) {
                continue;
            }
            let maximal = (0..n)
                .filter(|&v| !s.contains(v))
                .all(|v| !g.neighbors(v).is_disjoint(&s));
            if maximal {
                out.push(s);
            }
        }
        out.sort_by_key(|s| s.to_vec());
        out
    }

    /// Chromatic number as the least k accepted by the backtracking
    /// colorer.
    pub fn chromatic_number(g: &Graph) -> usize {
        (0..=g.n())
            .find(|&k| is_k_colorable(g, k).is_some())
            .expect("n colors always suffice")
    }

    /// All maximum cliques, by scanning every subset; sorted by vertex
    /// list. Only sensible for small n.
    pub fn maximum_cliques(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        assert!(n <= 22, "subset scan is 2^n");
        let mut best = 0;
        let mut out: Vec<VertexSet> = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !check_set(g, &s, SetMode::Clique) {
                continue;
            }
            match s.len().cmp(&best) {
                std::cmp::Ordering::Greater => {
                    best = s.len();
                    out = vec![s];
                }
                std::cmp::Ordering::Equal => out.push(s),
                std::cmp::Ordering::Less => {}
            }
        }
        out.sort_by_key(|s| s.to_vec());
        out
    }

    /// Chromatic number by direct enumeration of every assignment of at
    /// most k colors, independent of the backtracking colorer. Only
    /// sensible for tiny n.
    pub fn chromatic_number_by_enumeration(g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 8, "assignment scan is k^n");
        if n == 0 {
            return 0;
        }
        let edges = g.edges();
        for k in 1..=n {
            let assignments = (k as u64).pow(n as u32);
            for code in 0..assignments {
                let mut color = vec![0usize; n];
                let mut c = code;
                for slot in color.iter_mut() {
                    *slot = (c % k as u64) as usize;
                    c /= k as u64;
                }
                if edges.iter().all(|&(u, v)| color[u] != color[v]) {
                    return k;
                }
            }
        }
        n
    }
}
