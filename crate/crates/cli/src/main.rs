use clap::{Parser, Subcommand, ValueEnum};
use imm_cli::{
    exit, parse_size_csv, parse_vertex_csv, run_analyze, run_construct, run_gamma,
    run_generate_blowup, run_generate_random, run_hom, run_verify, CmdError, Method,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Build and verify clique immersion certificates for graphs with
/// independence number 2.
#[derive(Parser)]
#[command(name = "imm", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, m, degrees, independence check, chromatic number, clique
    /// cover and the applicability gates
    Analyze { graph: PathBuf },
    /// Build an immersion certificate and its construction trace
    Construct {
        /// Construction to run
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Cap for the Gamma_d homomorphism search (default ceil((n+1)/3))
        #[arg(long)]
        d_max: Option<usize>,
        /// Certificate output path (stdout when omitted)
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Trace output path (not written when omitted)
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Explicit D1 class for --method coloring (comma-separated)
        #[arg(long, requires = "d2")]
        d1: Option<String>,
        /// Explicit D2 class for --method coloring
        #[arg(long, requires = "d1")]
        d2: Option<String>,
        /// Explicit D3 class for --method coloring (may be empty)
        #[arg(long, requires = "d1")]
        d3: Option<String>,
        graph: PathBuf,
    },
    /// Check a certificate against a graph; exit 0 iff it is accepted
    Verify {
        /// Also require that no path passes through a branch vertex
        #[arg(long)]
        strong: bool,
        /// Also require every path length to be odd
        #[arg(long = "totally-odd")]
        totally_odd: bool,
        graph: PathBuf,
        cert: PathBuf,
    },
    /// Emit a seeded instance with independence number at most 2
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Emit the Andrasfai graph Gamma_d as an edge list
    Gamma {
        #[arg(long)]
        d: usize,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a homomorphism of the (triangle-free) input into Gamma_d
    Hom {
        #[arg(long)]
        d_max: Option<usize>,
        graph: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Vergara,
    Gauthier,
    Coloring,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Vergara => Method::Vergara,
            MethodArg::Gauthier => Method::Gauthier,
            MethodArg::Coloring => Method::Coloring,
        }
    }
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Complement of a blow-up of Gamma_d with the given class sizes
    Blowup {
        #[arg(long)]
        d: usize,
        /// Comma-separated class sizes, one per Gamma_d vertex
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Complement of a seeded random triangle-free graph
    Random {
        #[arg(long)]
        n: usize,
        /// Per-pair insertion probability in the complement
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CmdError> {
    std::fs::read_to_string(path).map_err(|e| CmdError {
        code: exit::FAILURE,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

/// Writes to stdout, exiting quietly when the reader has gone away
/// (e.g. piped into `head`).
fn emit(text: &str) {
    use std::io::Write;
    if let Err(e) = std::io::stdout().write_all(text.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(exit::OK);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(exit::FAILURE);
    }
}

fn write_or_print(text: &str, out: Option<&Path>) -> Result<(), CmdError> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n")).map_err(|e| CmdError {
            code: exit::FAILURE,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            emit(&format!("{text}\n"));
            Ok(())
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CmdError> {
    match cli.command {
        Command::Analyze { graph } => {
            emit(&run_analyze(&read(&graph)?)?);
            Ok(exit::OK)
        }
        Command::Construct {
            method,
            d_max,
            cert,
            trace,
            d1,
            d2,
            d3,
            graph,
        } => {
            let coloring = match (d1, d2, d3) {
                (None, None, None) => None,
                (d1, d2, d3) => Some([
                    parse_vertex_csv(d1.as_deref().unwrap_or(""))?,
                    parse_vertex_csv(d2.as_deref().unwrap_or(""))?,
                    parse_vertex_csv(d3.as_deref().unwrap_or(""))?,
                ]),
            };
            let trace_ref = trace.as_ref().map(|p| p.display().to_string());
            let output = run_construct(
                &read(&graph)?,
                method.into(),
                d_max,
                coloring,
                trace_ref.as_deref(),
            )?;
            write_or_print(&output.certificate_json, cert.as_deref())?;
            if let Some(path) = &trace {
                write_or_print(&output.trace_json, Some(path))?;
            }
            eprintln!("{}", output.summary);
            Ok(exit::OK)
        }
        Command::Verify {
            strong,
            totally_odd,
            graph,
            cert,
        } => {
            let (report, ok) = run_verify(&read(&graph)?, &read(&cert)?, strong, totally_odd)?;
            emit(&report);
            Ok(if ok { exit::OK } else { exit::FAILURE })
        }
        Command::Generate { kind } => match kind {
            GenerateKind::Blowup {
                d,
                sizes,
                seed,
                out,
            } => {
                let sizes = parse_size_csv(&sizes)?;
                write_or_print(&run_generate_blowup(d, &sizes, seed)?, out.as_deref())?;
                Ok(exit::OK)
            }
            GenerateKind::Random { n, p, seed, out } => {
                write_or_print(&run_generate_random(n, p, seed)?, out.as_deref())?;
                Ok(exit::OK)
            }
        },
        Command::Gamma { d, out } => {
            write_or_print(&run_gamma(d)?, out.as_deref())?;
            Ok(exit::OK)
        }
        Command::Hom { d_max, graph } => {
            emit(&format!("{}\n", run_hom(&read(&graph)?, d_max)?));
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
