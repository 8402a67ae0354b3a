//! Instance generators. Every generated graph has independence number at
//! most 2 by construction (its complement is triangle-free).

use crate::andrasfai::build_gamma;
use crate::graph::Graph;
use crate::rng::XorShift64Star;

/// A blow-up of Gamma_d with the given class sizes, together with the
/// class index of each vertex. Class i (0-indexed Gamma vertex) receives
/// `sizes[i]` consecutively numbered vertices.
pub fn blowup_of_gamma(d: usize, sizes: &[usize]) -> (Graph, Vec<usize>) {
    let gamma = build_gamma(d).expect("d must be positive");
    assert_eq!(
        sizes.len(),
        gamma.graph().n(),
        "need one size per Gamma_{d} vertex"
    );
    let mut class_of = Vec::new();
    for (class, &s) in sizes.iter().enumerate() {
        class_of.extend(std::iter::repeat_n(class, s));
    }
    let n = class_of.len();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if gamma.graph().has_edge(class_of[u], class_of[v]) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    (g, class_of)
}

/// Complement of a blow-up of Gamma_d. The blow-up is triangle-free, so
/// the result has independence number at most 2. Deterministic; the seed
/// is accepted only for interface uniformity with the other generators.
pub fn gen_blowup_complement(d: usize, sizes: &[usize], _seed: u64) -> Graph {
    blowup_of_gamma(d, sizes).0.complement()
}

/// Complement of a random triangle-free graph: candidate pairs are
/// scanned in seeded random order and each is inserted with probability
/// `p` when it closes no triangle. With `p = 1` the complement is maximal
/// triangle-free, so the result has independence number exactly 2 for
/// n >= 3.
pub fn gen_random_alpha2(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "p must be in [0, 1]");
    let mut rng = XorShift64Star::new(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    rng.shuffle(&mut pairs);
    let mut comp = Graph::empty(n);
    for (u, v) in pairs {
        let coin = rng.unit();
        if coin < p && comp.neighbors(u).is_disjoint(comp.neighbors(v)) {
            comp.add_edge(u, v).unwrap();
        }
    }
    comp.complement()
}
