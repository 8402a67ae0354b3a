//! Shared instance builders for the benchmark targets.

use imm_core::gen::{blowup_of_gamma, gen_random_alpha2};
use imm_core::graph::Graph;

/// A dense alpha <= 2 instance at the given size.
pub fn dense_instance(n: usize, seed: u64) -> Graph {
    gen_random_alpha2(n, 1.0, seed)
}

/// Complement of a balanced blow-up of Gamma_d with about `n` vertices.
pub fn blowup_instance(d: usize, n: usize) -> Graph {
    let classes = 3 * d - 1;
    let base = (n / classes).max(1);
    let sizes = vec![base; classes];
    blowup_of_gamma(d, &sizes).0.complement()
}
