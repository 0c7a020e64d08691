//! The `qcox` command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` reports a failed identity,
//! 2 on input, validation or computation errors.

mod render;

use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::algebra::{graded_dims, AlgebraError, DimKind, GradedDimVector};
use crate::coxeter::{
    admissible_numbering, coxeter_matrix_bound, graph_reflection, sigma_reflect_bound, verify_identities,
    CartanForms, CheckStatus, CoxeterError, CoxeterMethod, VerifyOptions,
};
use crate::polyring::{parse_rational, PolyMatrix, Polynomial, Rational};
use crate::quiverdsl::{emit_json, emit_text, parse_json, parse_quiver, BoundQuiver, DslError};

pub use render::{Cell, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("UsageError: {0}")]
    Usage(String),
    #[error("IoError: {path}: {message}")]
    Io { path: String, message: String },
    #[error("UnknownVertex: {0}")]
    UnknownVertex(String),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Io { .. } => "IoError",
            CliError::UnknownVertex(_) => "UnknownVertex",
            CliError::Dsl(e) => e.kind(),
            CliError::Algebra(e) => e.kind(),
            CliError::Coxeter(e) => e.kind(),
        }
    }
}

fn parse_q(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("{s:?} is not a rational number"))
}

/// Exact q-Cartan and q-Coxeter matrices of homogeneous bound quivers.
#[derive(Debug, Clone, Parser)]
#[command(name = "qcox", version)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "plain")]
    pub format: Format,
    /// Highest degree explored before the algebra is declared infinite-dimensional.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(2..))]
    pub degree_cap: u64,
    /// Evaluate polynomial output at this rational value of q.
    #[arg(long, global = true, value_parser = parse_q)]
    pub at_q: Option<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Reflections,
    Cartan,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// The q-Cartan matrix C_q.
    Cartan { input: PathBuf },
    /// The q-Coxeter matrix Phi_q.
    Coxeter {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "cartan")]
        method: MethodArg,
    },
    /// Graded dimensions, or dimension vectors of simples, projectives or injectives.
    Dims {
        input: PathBuf,
        #[arg(long, conflicts_with_all = ["injective", "simple"])]
        projective: bool,
        #[arg(long, conflicts_with = "simple")]
        injective: bool,
        #[arg(long)]
        simple: bool,
        /// Restrict dimension vectors to one vertex.
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Evaluate the Euler form or its symmetrization on two vectors.
    Forms {
        input: PathBuf,
        #[arg(long, conflicts_with = "symmetric")]
        euler: bool,
        #[arg(long)]
        symmetric: bool,
        /// Comma-separated rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Reverse the arrows at a vertex, or print a reflection matrix.
    Reflect {
        input: PathBuf,
        #[arg(long)]
        vertex: String,
        /// Print the graph reflection matrix S_i.
        #[arg(long, conflicts_with = "gamma")]
        graph: bool,
        /// Print the Cartan reflection matrix gamma_i.
        #[arg(long)]
        gamma: bool,
    },
    /// The admissible numbering (smallest sink first).
    Numbering { input: PathBuf },
    /// Check every applicable reflection and Coxeter identity.
    Verify {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random vector pairs per randomized identity.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
}

impl Command {
    pub fn input_path(&self) -> &FsPath {
        match self {
            Command::Cartan { input }
            | Command::Coxeter { input, .. }
            | Command::Dims { input, .. }
            | Command::Forms { input, .. }
            | Command::Reflect { input, .. }
            | Command::Numbering { input }
            | Command::Verify { input, .. } => input,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: &CliError) -> Self {
        Self {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("qcox: {e}\n"),
        }
    }
}

/// Parse `input` as JSON when the path ends in `.json`, otherwise as `.qv` text.
pub fn load(path: &FsPath, input: &str) -> Result<BoundQuiver, DslError> {
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        parse_json(input)
    } else {
        parse_quiver(input)
    }
}

/// Run one command on the contents of its input file.
pub fn run(config: &CliConfig, input: &str) -> Outcome {
    match execute(config, input) {
        Ok((stdout, failed)) => Outcome {
            exit_code: if failed { 1 } else { 0 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome::error(&e),
    }
}

/// Read the input file named by the config and run the command.
pub fn run_file(config: &CliConfig) -> Outcome {
    let path = config.command.input_path();
    match std::fs::read_to_string(path) {
        Ok(text) => run(config, &text),
        Err(e) => Outcome::error(&CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
    }
}

fn vertex_index(bq: &BoundQuiver, name: &str) -> Result<usize, CliError> {
    bq.quiver
        .vertex_index(name)
        .ok_or_else(|| CliError::UnknownVertex(name.to_string()))
}

fn parse_vector(s: &str, n: usize) -> Result<Vec<Polynomial>, CliError> {
    let v = s
        .split(',')
        .map(|t| {
            parse_rational(t)
                .map(Polynomial::constant)
                .ok_or_else(|| CliError::Usage(format!("{t:?} is not a rational number")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if v.len() != n {
        return Err(CliError::Coxeter(CoxeterError::DimensionMismatch {
            expected: n,
            found: v.len(),
        }));
    }
    Ok(v)
}

fn render_matrix(m: &PolyMatrix, config: &CliConfig) -> String {
    match &config.at_q {
        Some(at) => render::matrix(m.specialize(at).rows(), config.format),
        None => render::matrix(&m.rows(), config.format),
    }
}

fn render_poly(p: &Polynomial, config: &CliConfig) -> String {
    match &config.at_q {
        Some(at) => render::scalar(&p.eval(at), config.format),
        None => render::scalar(p, config.format),
    }
}

fn no_at_q(config: &CliConfig, what: &str) -> Result<(), CliError> {
    match config.at_q {
        Some(_) => Err(CliError::Usage(format!("--at-q does not apply to {what}"))),
        None => Ok(()),
    }
}

fn no_latex(config: &CliConfig, what: &str) -> Result<(), CliError> {
    match config.format {
        Format::Latex => Err(CliError::Usage(format!("--format latex does not apply to {what}"))),
        _ => Ok(()),
    }
}

/// Rendered stdout and whether a verification check failed.
fn execute(config: &CliConfig, input: &str) -> Result<(String, bool), CliError> {
    let bq = load(config.command.input_path(), input)?;
    let cap = config.degree_cap as usize;
    let forms = || -> Result<CartanForms, CliError> {
        Ok(CartanForms::new(crate::algebra::cartan_matrix(&bq, cap)?)?)
    };
    let out = match &config.command {
        Command::Cartan { .. } => render_matrix(&crate::algebra::cartan_matrix(&bq, cap)?, config),
        Command::Coxeter { method, .. } => {
            let method = match method {
                MethodArg::Reflections => CoxeterMethod::Reflections,
                MethodArg::Cartan => CoxeterMethod::Cartan,
            };
            render_matrix(&coxeter_matrix_bound(&bq, method, cap)?, config)
        }
        Command::Dims {
            projective,
            injective,
            simple,
            vertex,
            ..
        } => {
            let kind = match (projective, injective, simple) {
                (true, _, _) => Some(DimKind::Projective),
                (_, true, _) => Some(DimKind::Injective),
                (_, _, true) => Some(DimKind::Simple),
                _ => None,
            };
            let table = graded_dims(&bq, cap)?;
            match kind {
                None => {
                    no_at_q(config, "the graded dimension table")?;
                    if vertex.is_some() {
                        return Err(CliError::Usage(
                            "--vertex needs one of --projective, --injective, --simple".into(),
                        ));
                    }
                    dims_table(&bq, &table, config.format)
                }
                Some(kind) => {
                    let cartan = table.cartan();
                    let vertices = match vertex {
                        Some(v) => vec![vertex_index(&bq, v)?],
                        None => (0..bq.n()).collect(),
                    };
                    let vs = vertices
                        .into_iter()
                        .map(|i| crate::algebra::dim_vector_from_cartan(&cartan, kind, i))
                        .collect::<Result<Vec<GradedDimVector>, _>>()?;
                    let (symbol, label) = match kind {
                        DimKind::Simple => ("S", "simple"),
                        DimKind::Projective => ("P", "projective"),
                        DimKind::Injective => ("I", "injective"),
                    };
                    let names = bq.quiver.vertices();
                    match &config.at_q {
                        Some(at) => {
                            let items: Vec<(String, Vec<Rational>)> = vs
                                .iter()
                                .map(|v| (names[v.vertex].clone(), v.entries.iter().map(|p| p.eval(at)).collect()))
                                .collect();
                            render::vectors(symbol, label, &items, config.format)
                        }
                        None => {
                            let items: Vec<(String, Vec<Polynomial>)> =
                                vs.into_iter().map(|v| (names[v.vertex].clone(), v.entries)).collect();
                            render::vectors(symbol, label, &items, config.format)
                        }
                    }
                }
            }
        }
        Command::Forms { symmetric, x, y, .. } => {
            let f = forms()?;
            let x = parse_vector(x, bq.n())?;
            let y = parse_vector(y, bq.n())?;
            let v = if *symmetric {
                f.symmetric_form(&x, &y)?
            } else {
                f.euler(&x, &y)?
            };
            render_poly(&v, config)
        }
        Command::Reflect {
            vertex, graph, gamma, ..
        } => {
            let i = vertex_index(&bq, vertex)?;
            if *graph {
                render_matrix(&graph_reflection(&bq.quiver, i)?.matrix, config)
            } else if *gamma {
                render_matrix(&forms()?.gamma(i)?.matrix, config)
            } else {
                no_at_q(config, "a reflected quiver")?;
                no_latex(config, "a reflected quiver")?;
                let r = sigma_reflect_bound(&bq, i)?;
                match config.format {
                    Format::Json => format!("{}\n", emit_json(&r)),
                    _ => emit_text(&r),
                }
            }
        }
        Command::Numbering { .. } => {
            no_at_q(config, "a numbering")?;
            let names = admissible_numbering(&bq.quiver)?.names(&bq.quiver);
            match config.format {
                Format::Plain => format!("{}\n", names.join(" ")),
                Format::Latex => format!("({})\n", names.join(", ")),
                Format::Json => render::json_text(&names),
            }
        }
        Command::Verify { seed, random, .. } => {
            no_at_q(config, "verify")?;
            no_latex(config, "verify")?;
            let opts = VerifyOptions {
                degree_cap: cap,
                random_vectors: *random,
                seed: *seed,
            };
            let report = verify_identities(&bq, &opts)?;
            let out = match config.format {
                Format::Json => render::json_text(&report),
                _ => {
                    let mut s = String::new();
                    let (mut pass, mut fail, mut skip) = (0, 0, 0);
                    for e in &report.entries {
                        let tag = match e.status {
                            CheckStatus::Pass => {
                                pass += 1;
                                "PASS"
                            }
                            CheckStatus::Fail => {
                                fail += 1;
                                "FAIL"
                            }
                            CheckStatus::Skipped => {
                                skip += 1;
                                "SKIP"
                            }
                        };
                        s.push_str(&format!("{tag:<5}{}  [{}]\n", e.identity, e.reason));
                    }
                    s.push_str(&format!("{pass} passed, {fail} failed, {skip} skipped\n"));
                    s
                }
            };
            return Ok((out, !report.all_passed()));
        }
    };
    Ok((out, false))
}

fn dims_table(bq: &BoundQuiver, table: &crate::algebra::GradedDimTable, format: Format) -> String {
    let names = bq.quiver.vertices();
    match format {
        Format::Json => render::json_text(&table.to_json(&bq.quiver)),
        Format::Plain => {
            let mut s = format!("max_degree {}\n", table.max_degree());
            for (i, j, d, dim) in table.nonzero() {
                s.push_str(&format!("dim (e_{} A e_{})_{d} = {dim}\n", names[i], names[j]));
            }
            s
        }
        Format::Latex => {
            let mut s = String::from("\\begin{array}{cccc}\ni & j & d & \\dim \\\\\n");
            let rows: Vec<String> = table
                .nonzero()
                .map(|(i, j, d, dim)| format!("{} & {} & {d} & {dim}", names[i], names[j]))
                .collect();
            s.push_str(&rows.join(" \\\\\n"));
            s.push_str("\n\\end{array}\n");
            s
        }
    }
}
