//! The `frobtope` command surface, separated from argument parsing so it can
//! be driven directly from tests.

use std::fmt::Write as _;
use std::ops::ControlFlow;
use std::path::PathBuf;

use frobtope::counting::CounterRegistry;
use frobtope::embedding::{gram_census, GramAnomaly};
use frobtope::facecomb::{
    count_faces_in_dim, facet_count, facet_from_transversal, transversals, visit_faces_of_dim,
};
use frobtope::oracle::{verify_theorem, OracleCaps, TheoremReport};
use frobtope::{FaceError, FamilyRegistry, FrobeniusSystem, GroupError, OracleError, Perm};
use serde::Serialize;

/// Facets and faces listed when `--all` is not given.
pub const DEFAULT_LISTING_LIMIT: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Info,
    FVector { method: String },
    Facets,
    Faces { dim: i64 },
    Gram,
    Verify,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group_spec: String,
    pub command: Command,
    pub format: Format,
    /// Overrides the oracle's vertex cap.
    pub cap: Option<usize>,
    pub all: bool,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(group_spec: impl Into<String>, command: Command) -> Self {
        RunConfig {
            group_spec: group_spec.into(),
            command,
            format: Format::Json,
            cap: None,
            all: false,
            output_path: None,
        }
    }

    fn oracle_caps(&self) -> OracleCaps {
        let mut caps = OracleCaps::default();
        if let Some(cap) = self.cap {
            caps.max_vertices = cap;
        }
        caps
    }
}

#[derive(Debug)]
pub enum CliError {
    Group(GroupError),
    Face(FaceError),
    Oracle(OracleError),
    UnknownMethod(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Group(e) => write!(f, "{e}"),
            CliError::Face(e) => write!(f, "{e}"),
            CliError::Oracle(e) => write!(f, "{e}"),
            CliError::UnknownMethod(m) => write!(
                f,
                "unknown f-vector method {m:?}; expected one of: {}",
                CounterRegistry::default()
                    .names()
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    /// 1: bad input, 2: not a Frobenius group, 3: a size cap was exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Group(GroupError::NotFrobenius(_)) => 2,
            CliError::Group(GroupError::CapExceeded { .. })
            | CliError::Oracle(OracleError::CapExceeded { .. }) => 3,
            _ => 1,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Group(e)
    }
}

impl From<FaceError> for CliError {
    fn from(e: FaceError) -> Self {
        CliError::Face(e)
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Oracle(e)
    }
}

/// Rendered output of a successful run.
#[derive(Debug)]
pub struct Report {
    pub body: String,
    /// False only for a `verify` run with a failing check.
    pub success: bool,
}

impl Report {
    /// 0 on success, 4 when verification ran but a check failed.
    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            4
        }
    }
}

fn one_lines(perms: &[Perm]) -> Vec<Vec<usize>> {
    perms.iter().map(Perm::one_line).collect()
}

fn cycles(perms: &[Perm]) -> String {
    perms
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct InfoJson<'a> {
    spec: &'a str,
    n: usize,
    h: usize,
    order: usize,
    dim: usize,
    vertices: usize,
    facets: String,
    is_regular: bool,
    kernel: Vec<Vec<usize>>,
    complement: Vec<Vec<usize>>,
}

fn info(config: &RunConfig, sys: &FrobeniusSystem) -> String {
    let facets = facet_count(sys.n(), sys.h()).to_string();
    match config.format {
        Format::Json => json(&InfoJson {
            spec: &config.group_spec,
            n: sys.n(),
            h: sys.h(),
            order: sys.order(),
            dim: sys.polytope_dim(),
            vertices: sys.order(),
            facets,
            is_regular: sys.is_regular(),
            kernel: one_lines(sys.kernel()),
            complement: one_lines(sys.complement()),
        }),
        Format::Text => {
            let mut out = String::new();
            let kind = if sys.is_regular() {
                "regular"
            } else {
                "Frobenius"
            };
            let _ = writeln!(out, "group       {}", config.group_spec);
            let _ = writeln!(out, "order       {} ({kind})", sys.order());
            let _ = writeln!(
                out,
                "kernel      |N| = {}: {}",
                sys.n(),
                cycles(sys.kernel())
            );
            let _ = writeln!(
                out,
                "complement  |H| = {}: {}",
                sys.h(),
                cycles(sys.complement())
            );
            let _ = writeln!(
                out,
                "polytope    dim {}, {} vertices, {facets} facets",
                sys.polytope_dim(),
                sys.order()
            );
            out
        }
    }
}

#[derive(Serialize)]
struct FVectorJson<'a> {
    n: usize,
    h: usize,
    method: &'a str,
    fvector: &'a frobtope::FVector,
}

fn fvector(config: &RunConfig, sys: &FrobeniusSystem, method: &str) -> Result<String, CliError> {
    let registry = CounterRegistry::default();
    let counter = registry
        .get(method)
        .ok_or_else(|| CliError::UnknownMethod(method.to_string()))?;
    let f = counter.fvector(sys, &config.oracle_caps())?;
    Ok(match config.format {
        Format::Json => json(&FVectorJson {
            n: sys.n(),
            h: sys.h(),
            method: counter.name(),
            fvector: &f,
        }),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "# {} ({})", counter.name(), counter.description());
            for (i, c) in f.counts().iter().enumerate() {
                let _ = writeln!(out, "f_{:<3} {c}", i as i64 - 1);
            }
            out
        }
    })
}

#[derive(Serialize)]
struct FacetJson {
    transversal: Vec<usize>,
    members: Vec<usize>,
    dim: i64,
}

#[derive(Serialize)]
struct FacetsJson {
    n: usize,
    h: usize,
    total: String,
    listed: usize,
    truncated: bool,
    elements: Vec<Vec<usize>>,
    facets: Vec<FacetJson>,
}

fn facets(config: &RunConfig, sys: &FrobeniusSystem) -> String {
    let limit = if config.all {
        usize::MAX
    } else {
        DEFAULT_LISTING_LIMIT
    };
    let total = facet_count(sys.n(), sys.h());
    let listed: Vec<FacetJson> = transversals(sys)
        .take(limit)
        .map(|t| {
            let f = facet_from_transversal(sys, &t);
            FacetJson {
                transversal: t,
                members: f.members,
                dim: f.dim,
            }
        })
        .collect();
    let truncated = total > listed.len().into();
    match config.format {
        Format::Json => json(&FacetsJson {
            n: sys.n(),
            h: sys.h(),
            total: total.to_string(),
            listed: listed.len(),
            truncated,
            elements: one_lines(sys.elements()),
            facets: listed,
        }),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "# {total} facets of dimension {}",
                sys.polytope_dim() - 1
            );
            for f in &listed {
                let omitted: Vec<Perm> = f
                    .transversal
                    .iter()
                    .enumerate()
                    .map(|(c, &k)| sys.element(c, k).clone())
                    .collect();
                let _ = writeln!(out, "omit {}", cycles(&omitted));
            }
            if truncated {
                let _ = writeln!(out, "# ... {} more (use --all)", total - listed.len());
            }
            out
        }
    }
}

#[derive(Serialize)]
struct FacesJson {
    n: usize,
    h: usize,
    dim: i64,
    count: String,
    listed: usize,
    truncated: bool,
    elements: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
}

fn faces(config: &RunConfig, sys: &FrobeniusSystem, k: i64) -> Result<String, CliError> {
    let count = count_faces_in_dim(sys, k)?;
    let limit = if config.all {
        usize::MAX
    } else {
        DEFAULT_LISTING_LIMIT
    };
    let mut listed = Vec::new();
    visit_faces_of_dim(sys, k, |x| {
        if listed.len() == limit {
            return ControlFlow::Break(());
        }
        listed.push(x.to_vec());
        ControlFlow::Continue(())
    })?;
    let truncated = count > listed.len().into();
    Ok(match config.format {
        Format::Json => json(&FacesJson {
            n: sys.n(),
            h: sys.h(),
            dim: k,
            count: count.to_string(),
            listed: listed.len(),
            truncated,
            elements: one_lines(sys.elements()),
            faces: listed,
        }),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "# {count} faces of dimension {k}");
            for x in &listed {
                let perms: Vec<Perm> = x.iter().map(|&i| sys.elements()[i].clone()).collect();
                let _ = writeln!(out, "{{{}}}", cycles(&perms));
            }
            if truncated {
                let _ = writeln!(out, "# ... {} more (use --all)", count - listed.len());
            }
            out
        }
    })
}

#[derive(Serialize)]
struct GramValues {
    diagonal: usize,
    same_coset: usize,
    cross_coset: usize,
}

#[derive(Serialize)]
struct GramCounts<'a> {
    diagonal: usize,
    same_coset: usize,
    cross_coset: usize,
    anomalies: &'a [GramAnomaly],
}

#[derive(Serialize)]
struct GramJson<'a> {
    n: usize,
    order: usize,
    values: GramValues,
    census: GramCounts<'a>,
    pattern_holds: bool,
    elements: Vec<Vec<usize>>,
    table: &'a [Vec<usize>],
}

fn gram(config: &RunConfig, sys: &FrobeniusSystem) -> String {
    let census = gram_census(sys);
    match config.format {
        Format::Json => json(&GramJson {
            n: census.n,
            order: census.order,
            values: GramValues {
                diagonal: sys.n(),
                same_coset: 0,
                cross_coset: 1,
            },
            census: GramCounts {
                diagonal: census.diagonal,
                same_coset: census.same_coset,
                cross_coset: census.cross_coset,
                anomalies: &census.anomalies,
            },
            pattern_holds: census.pattern_holds(),
            elements: one_lines(sys.elements()),
            table: &census.table,
        }),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "diagonal pairs      {:>8}  value {}",
                census.diagonal,
                sys.n()
            );
            let _ = writeln!(out, "same-coset pairs    {:>8}  value 0", census.same_coset);
            let _ = writeln!(
                out,
                "cross-coset pairs   {:>8}  value 1",
                census.cross_coset
            );
            let _ = writeln!(out, "anomalies           {:>8}", census.anomalies.len());
            let _ = writeln!(
                out,
                "pattern {}",
                if census.pattern_holds() {
                    "holds"
                } else {
                    "VIOLATED"
                }
            );
            out
        }
    }
}

fn verify(config: &RunConfig, sys: &FrobeniusSystem) -> Result<(String, bool), CliError> {
    let report: TheoremReport = verify_theorem(sys, &config.oracle_caps())?;
    let pass = report.all_pass();
    let body = match config.format {
        Format::Json => json(&report),
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                let _ = write!(out, "[{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
                if let Some(w) = &c.witness {
                    let _ = write!(out, ": {w}");
                }
                out.push('\n');
            }
            let _ = writeln!(out, "facets   {}", report.facet_count);
            let _ = writeln!(
                out,
                "oracle   {}",
                report.fvector_oracle.to_strings().join(" ")
            );
            let _ = writeln!(
                out,
                "formula  {}",
                report.fvector_formula.to_strings().join(" ")
            );
            out
        }
    };
    Ok((body, pass))
}

/// Parses the group spec, runs the command and renders its report. Writing to
/// `output_path` is left to the caller.
pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    let sys = FamilyRegistry::default().parse(&config.group_spec)?;
    let (body, success) = match &config.command {
        Command::Info => (info(config, &sys), true),
        Command::FVector { method } => (fvector(config, &sys, method)?, true),
        Command::Facets => (facets(config, &sys), true),
        Command::Faces { dim } => (faces(config, &sys, *dim)?, true),
        Command::Gram => (gram(config, &sys), true),
        Command::Verify => verify(config, &sys)?,
    };
    Ok(Report { body, success })
}

/// Runs and delivers the report to `output_path` or stdout; returns the exit code.
pub fn run_to_output(config: &RunConfig) -> i32 {
    match run(config) {
        Ok(report) => {
            let delivered = match &config.output_path {
                Some(path) => std::fs::write(path, &report.body).map_err(CliError::Io),
                None => {
                    print!("{}", report.body);
                    Ok(())
                }
            };
            match delivered {
                Ok(()) => report.exit_code(),
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
