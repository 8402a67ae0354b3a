//! Command implementations behind the `imm` binary, exposed as a library
//! so integration tests can drive them without spawning processes.

use imm_core::andrasfai::{
    blowup_coloring, blowup_completion, build_gamma, default_d_max, search_gamma_target,
};
use imm_core::certificate::{verify_certificate, Certificate};
use imm_core::gauthier::construct_2n5_immersion;
use imm_core::gen::{gen_blowup_complement, gen_random_alpha2};
use imm_core::graph::{parse_graph, serialize_graph, Graph};
use imm_core::immersion::construct_from_clique_coloring;
use imm_core::oracles::{
    chromatic_number_alpha2, find_triangle, gate_check, max_clique, CliqueCover,
};
use imm_core::vergara::{construct_chi_immersion, VergaraError};
use imm_core::VertexSet;

/// Stable exit codes, one per documented failure class.
pub mod exit {
    /// Success; for `verify`, all requested properties hold.
    pub const OK: i32 = 0;
    /// I/O or parse errors, rejected certificates, internal failures.
    pub const FAILURE: i32 = 1;
    /// The input graph has an independent set of size 3.
    pub const ALPHA_TOO_LARGE: i32 = 2;
    /// Homomorphism search exhausted every d up to the cap.
    pub const GAMMA_NOT_FOUND: i32 = 3;
    /// A construction precondition failed (bad coloring, Hall violation).
    pub const PRECONDITION: i32 = 4;
}

/// A command failure carrying its exit code.
#[derive(Debug)]
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

impl CmdError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CmdError {
            code,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

fn parse(graph_text: &str) -> Result<Graph, CmdError> {
    parse_graph(graph_text).map_err(|e| CmdError::new(exit::FAILURE, format!("parse error: {e}")))
}

/// `analyze`: structural numbers plus the two applicability gates.
pub fn run_analyze(graph_text: &str) -> Result<String, CmdError> {
    let g = parse(graph_text)?;
    let gate = gate_check(&g);
    let mut out = String::new();
    out.push_str(&format!("n: {}\n", g.n()));
    out.push_str(&format!("m: {}\n", g.m()));
    out.push_str(&format!("max_degree: {}\n", g.max_degree()));
    out.push_str(&format!("min_degree: {}\n", g.min_degree()));

    let alpha = if g.n() == 0 {
        "0".to_string()
    } else if g.complement().m() == 0 {
        "1".to_string()
    } else if gate.alpha_le_2 {
        "2".to_string()
    } else {
        ">2".to_string()
    };
    out.push_str(&format!("alpha: {alpha}\n"));
    match chromatic_number_alpha2(&g) {
        Ok(chi) => out.push_str(&format!("chromatic: {chi}\n")),
        Err(_) => out.push_str("chromatic: unknown (alpha > 2)\n"),
    }
    match imm_core::oracles::clique_cover_number(&g, 5) {
        CliqueCover::Exact(k) => out.push_str(&format!("clique_cover: {k}\n")),
        CliqueCover::Exceeds(cap) => out.push_str(&format!("clique_cover: >{cap}\n")),
    }
    out.push_str(&format!("thm4: {}\n", gate.thm4));
    out.push_str(&format!("thm5: {}\n", gate.thm5));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Vergara,
    Gauthier,
    Coloring,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Vergara => "vergara",
            Method::Gauthier => "gauthier",
            Method::Coloring => "coloring",
        }
    }
}

/// Certificate and trace produced by `construct`.
#[derive(Debug)]
pub struct ConstructOutput {
    pub certificate_json: String,
    pub trace_json: String,
    pub summary: String,
}

/// `construct`: run the requested builder and emit certificate + trace.
/// For `--method coloring` an explicit partition may be supplied;
/// otherwise one is derived by mapping the complement into Gamma_d and
/// lifting the window coloring through the blow-up completion.
pub fn run_construct(
    graph_text: &str,
    method: Method,
    d_max: Option<usize>,
    explicit_coloring: Option<[VertexSet; 3]>,
    trace_ref: Option<&str>,
) -> Result<ConstructOutput, CmdError> {
    let g = parse(graph_text)?;
    let (im, trace_json) = match method {
        Method::Vergara => {
            let (im, trace) = construct_chi_immersion(&g, d_max).map_err(vergara_err)?;
            let trace_json = serde_json::to_string_pretty(&trace).expect("trace serialization");
            (im, trace_json)
        }
        Method::Gauthier => {
            let (im, trace) = construct_2n5_immersion(&g).map_err(|e| match e {
                imm_core::gauthier::GauthierError::AlphaTooLarge(a) => {
                    CmdError::new(exit::ALPHA_TOO_LARGE, a.to_string())
                }
                other => CmdError::new(exit::FAILURE, other.to_string()),
            })?;
            let trace_json = serde_json::to_string_pretty(&trace).expect("trace serialization");
            (im, trace_json)
        }
        Method::Coloring => {
            let (im, d1, d2, d3, gamma_d) = match explicit_coloring {
                Some([d1, d2, d3]) => {
                    let im = construct_from_clique_coloring(&g, &d1, &d2, &d3)
                        .map_err(|e| CmdError::new(exit::PRECONDITION, e.to_string()))?;
                    (im, d1, d2, d3, None)
                }
                None => {
                    if let Some((a, b, c)) = find_triangle(&g.complement()) {
                        return Err(CmdError::new(
                            exit::ALPHA_TOO_LARGE,
                            format!(
                                "independence number exceeds 2: {{{a}, {b}, {c}}} is independent"
                            ),
                        ));
                    }
                    let f = g.complement();
                    let cap = d_max.unwrap_or_else(|| default_d_max(g.n()));
                    let found = search_gamma_target(&f, cap)
                        .map_err(|e| CmdError::new(exit::FAILURE, e.to_string()))?;
                    let Some((d, hom)) = found else {
                        return Err(CmdError::new(
                            exit::GAMMA_NOT_FOUND,
                            format!("no homomorphism into Gamma_d for d <= {cap}"),
                        ));
                    };
                    let h_graph = blowup_completion(&f, &hom);
                    let host = h_graph.complement();
                    let i1 = max_clique(&host);
                    let tri = blowup_coloring(&h_graph, &hom, &i1)
                        .map_err(|e| CmdError::new(exit::PRECONDITION, e.to_string()))?;
                    let [d1, d2, d3] = tri.parts;
                    let im = construct_from_clique_coloring(&host, &d1, &d2, &d3)
                        .map_err(|e| CmdError::new(exit::PRECONDITION, e.to_string()))?;
                    (im, d1, d2, d3, Some(d))
                }
            };
            let trace_json = serde_json::to_string_pretty(&serde_json::json!({
                "method": "coloring",
                "gamma_d": gamma_d,
                "d1": d1.to_vec(),
                "d2": d2.to_vec(),
                "d3": d3.to_vec(),
            }))
            .expect("trace serialization");
            (im, trace_json)
        }
    };

    let cert = Certificate::from_immersion(g.n(), &im, Some(method.tag()), trace_ref);
    let summary = format!(
        "K_{} immersion on {} branch vertices ({} paths)",
        im.branch().len(),
        im.branch().len(),
        im.pair_count()
    );
    Ok(ConstructOutput {
        certificate_json: cert.to_json(),
        trace_json,
        summary,
    })
}

fn vergara_err(e: VergaraError) -> CmdError {
    match e {
        VergaraError::AlphaTooLarge(a) => CmdError::new(exit::ALPHA_TOO_LARGE, a.to_string()),
        VergaraError::GammaTargetNotFound { .. } => {
            CmdError::new(exit::GAMMA_NOT_FOUND, e.to_string())
        }
        VergaraError::Internal(_) => CmdError::new(exit::FAILURE, e.to_string()),
    }
}

/// `verify`: print the report; the second component is the accept bit.
pub fn run_verify(
    graph_text: &str,
    cert_text: &str,
    require_strong: bool,
    require_totally_odd: bool,
) -> Result<(String, bool), CmdError> {
    let g = parse(graph_text)?;
    let cert = Certificate::from_json(cert_text)
        .map_err(|e| CmdError::new(exit::FAILURE, format!("certificate parse error: {e}")))?;
    let report = verify_certificate(&g, &cert, require_strong, require_totally_odd);
    let mut out = String::new();
    out.push_str(&format!("valid: {}\n", report.valid));
    out.push_str(&format!("strong: {}\n", report.strong));
    out.push_str(&format!("totally_odd: {}\n", report.totally_odd));
    for v in &report.violations {
        out.push_str(&format!("violation: {v}\n"));
    }
    let ok = report.accepted();
    out.push_str(if ok { "accepted\n" } else { "rejected\n" });
    Ok((out, ok))
}

/// `gamma`: the edge-list document of Gamma_d.
pub fn run_gamma(d: usize) -> Result<String, CmdError> {
    let gamma = build_gamma(d).map_err(|e| CmdError::new(exit::FAILURE, e.to_string()))?;
    Ok(serialize_graph(gamma.graph()))
}

/// `hom`: least-d homomorphism of the graph itself into Gamma_d.
pub fn run_hom(graph_text: &str, d_max: Option<usize>) -> Result<String, CmdError> {
    let g = parse(graph_text)?;
    let cap = d_max.unwrap_or_else(|| default_d_max(g.n()));
    let found =
        search_gamma_target(&g, cap).map_err(|e| CmdError::new(exit::FAILURE, e.to_string()))?;
    match found {
        Some((d, hom)) => Ok(serde_json::to_string_pretty(&serde_json::json!({
            "d": d,
            "map": hom.map(),
        }))
        .expect("serialization")),
        None => Err(CmdError::new(
            exit::GAMMA_NOT_FOUND,
            format!("no homomorphism into Gamma_d for d <= {cap}"),
        )),
    }
}

/// `generate blowup`.
pub fn run_generate_blowup(d: usize, sizes: &[usize], seed: u64) -> Result<String, CmdError> {
    if d == 0 {
        return Err(CmdError::new(exit::FAILURE, "d must be positive"));
    }
    if sizes.len() != 3 * d - 1 {
        return Err(CmdError::new(
            exit::FAILURE,
            format!(
                "need {} class sizes for Gamma_{d}, got {}",
                3 * d - 1,
                sizes.len()
            ),
        ));
    }
    Ok(serialize_graph(&gen_blowup_complement(d, sizes, seed)))
}

/// `generate random`.
pub fn run_generate_random(n: usize, p: f64, seed: u64) -> Result<String, CmdError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(CmdError::new(exit::FAILURE, "p must be in [0, 1]"));
    }
    Ok(serialize_graph(&gen_random_alpha2(n, p, seed)))
}

/// Parses a comma-separated vertex list; empty input is the empty set.
pub fn parse_vertex_csv(text: &str) -> Result<VertexSet, CmdError> {
    let mut out = VertexSet::new();
    for field in text.split(',') {
        let field = field.trim();
        if field.is_empty() {
            continue;
        }
        let v: usize = field
            .parse()
            .map_err(|_| CmdError::new(exit::FAILURE, format!("not a vertex index: {field:?}")))?;
        out.insert(v);
    }
    Ok(out)
}

/// Parses a comma-separated size list (used by `generate blowup`).
pub fn parse_size_csv(text: &str) -> Result<Vec<usize>, CmdError> {
    text.split(',')
        .map(|f| f.trim())
        .filter(|f| !f.is_empty())
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| CmdError::new(exit::FAILURE, format!("not a size: {f:?}")))
        })
        .collect()
}
