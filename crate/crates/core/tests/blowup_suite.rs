//! Randomized suite over blow-ups of Gamma_d: the blow-up coloring keeps
//! its guarantees at scale, and the clique-coloring constructor built on
//! top of it emits certificates with the promised shape.

use imm_core::andrasfai::{
    blowup_coloring, blowup_completion, find_induced_c4, search_gamma_target, Homomorphism,
};
use imm_core::gen::{blowup_of_gamma, gen_random_alpha2};
use imm_core::graph::{check_set, SetMode};
use imm_core::oracles::{find_triangle, max_clique};
use imm_core::rng::XorShift64Star;
use imm_core::{construct_from_clique_coloring, verify_immersion};

fn random_sizes(d: usize, rng: &mut XorShift64Star) -> Vec<usize> {
    (0..3 * d - 1).map(|_| rng.below(5)).collect()
}

#[test]
fn doubled_c5_blowup_gives_a_k6() {
    // the Gamma_2 blow-up with every class doubled: a maximum independent
    // set is two adjacent-window classes (4 vertices), the lifted
    // coloring has parts of sizes 4, 4, 2, and the constructor yields a
    // K6 immersion on the complement
    let (blowup, class_of) = blowup_of_gamma(2, &[2; 5]);
    let hom = Homomorphism::new(&blowup, 2, class_of).unwrap();
    let i1 = max_clique(&blowup.complement());
    assert_eq!(i1.len(), 4);

    let tri = blowup_coloring(&blowup, &hom, &i1).unwrap();
    assert_eq!(tri.parts[0].len(), 4);
    assert_eq!(tri.parts[1].len(), 4);
    assert_eq!(tri.parts[2].len(), 2);

    let g = blowup.complement();
    let im =
        construct_from_clique_coloring(&g, &tri.parts[0], &tri.parts[1], &tri.parts[2]).unwrap();
    assert_eq!(im.branch().len(), 6);
    assert_eq!(im.pair_count(), 15);
    let report = verify_immersion(&g, &im, true, true);
    assert!(report.accepted() && report.strong && report.totally_odd);
}

#[test]
fn lemma11_holds_on_200_random_blowups() {
    let mut rng = XorShift64Star::new(0x11AA);
    for trial in 0..200 {
        let d = 2 + trial % 4; // 2..=5
        let sizes = random_sizes(d, &mut rng);
        let (blowup, class_of) = blowup_of_gamma(d, &sizes);
        let hom = Homomorphism::new(&blowup, d, class_of).unwrap();

        // a maximum independent set of the blow-up, via the complement
        let i1 = max_clique(&blowup.complement());
        let tri = blowup_coloring(&blowup, &hom, &i1)
            .unwrap_or_else(|e| panic!("trial {trial} (d = {d}, sizes {sizes:?}): {e}"));

        assert!(tri.is_proper_partition_of(&blowup), "trial {trial}");
        let rest = tri.parts[1].union(&tri.parts[2]);
        assert_eq!(
            find_induced_c4(&blowup.complement(), &rest),
            None,
            "trial {trial}: induced C4 in the complement restriction"
        );
    }
}

#[test]
fn constructor_is_sound_on_random_blowup_complements() {
    let mut rng = XorShift64Star::new(0x12BB);
    for trial in 0..150 {
        let d = 2 + trial % 4;
        let sizes = random_sizes(d, &mut rng);
        let (blowup, class_of) = blowup_of_gamma(d, &sizes);
        let hom = Homomorphism::new(&blowup, d, class_of).unwrap();
        let g = blowup.complement();

        let i1 = max_clique(&g);
        let tri = blowup_coloring(&blowup, &hom, &i1).unwrap();
        let [d1, d2, d3] = &tri.parts;
        let im = construct_from_clique_coloring(&g, d1, d2, d3)
            .unwrap_or_else(|e| panic!("trial {trial} (d = {d}, sizes {sizes:?}): {e}"));

        assert_eq!(im.branch().len(), d2.len() + d3.len(), "trial {trial}");
        let report = verify_immersion(&g, &im, true, true);
        assert!(report.accepted(), "trial {trial}: {:?}", report.violations);

        // every path is a single edge or a length-3 detour through D1,
        // and the representative facts hold on each detour
        for (&(u, v), path) in im.paths() {
            match path.len() {
                1 => {}
                3 => {
                    let w = path.vertices();
                    let (rv, ru) = (w[1], w[2]);
                    assert!(d1.contains(rv) && d1.contains(ru), "trial {trial}");
                    assert_ne!(ru, rv);
                    assert!(!g.has_edge(u, v), "detour for an adjacent pair");
                    assert!(g.has_edge(u, rv) && g.has_edge(ru, v) && g.has_edge(ru, rv));
                    // representatives are non-neighbors of their vertex
                    assert!(!g.has_edge(v, rv) && !g.has_edge(u, ru), "trial {trial}");
                }
                other => panic!("trial {trial}: path of length {other}"),
            }
        }
    }
}

#[test]
fn completion_is_triangle_free_and_contains_the_source() {
    // blow-up completions of searched homomorphisms, over random
    // triangle-free sources of varying density
    for seed in 0..30u64 {
        let mut rng = XorShift64Star::new(0x14DD + seed);
        let n = 5 + rng.below(20);
        let f = gen_random_alpha2(n, 0.2 + 0.7 * rng.unit(), 0x14DD + seed).complement();
        let d_max = (n + 1).div_ceil(3);
        let Some((_, hom)) = search_gamma_target(&f, d_max).unwrap() else {
            continue;
        };
        let completed = blowup_completion(&f, &hom);
        assert_eq!(
            find_triangle(&completed),
            None,
            "seed {seed}: completion has a triangle"
        );
        for (u, v) in f.edges() {
            assert!(
                completed.has_edge(u, v),
                "seed {seed}: source edge {u} {v} lost"
            );
        }
    }
}

#[test]
fn i1_is_a_maximum_clique_of_the_complement() {
    // the coloring route hands D1 to the constructor as a maximum clique;
    // spot-check the identity between alpha(blowup) and omega(complement)
    let mut rng = XorShift64Star::new(0x13CC);
    for trial in 0..40 {
        let d = 2 + trial % 4;
        let sizes = random_sizes(d, &mut rng);
        let (blowup, _) = blowup_of_gamma(d, &sizes);
        let i1 = max_clique(&blowup.complement());
        assert!(check_set(&blowup, &i1, SetMode::Independent));
        assert!(check_set(&blowup.complement(), &i1, SetMode::Clique));
        // maximality in the blow-up
        for v in 0..blowup.n() {
            if !i1.contains(v) {
                assert!(
                    !blowup.neighbors(v).is_disjoint(&i1),
                    "trial {trial}: {v} extends I1"
                );
            }
        }
    }
}
