//! Command-line front end. [`run`] is the whole program minus process exit,
//! so the binary and the tests share one code path.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dunkl::{rho, DunklContext};
use crate::linalg::RationalVector;
use crate::parse::{parse_polynomial, parse_scalar, parse_vector};
use crate::polynomial::Polynomial;
use crate::rootsystem::{MultiplicityFunction, RootSystem, RootSystemJson, DEFAULT_MAX_ORDER};
use crate::scalar::Scalar;
use crate::verify::{run_suite, Suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "dunkl",
    version,
    about = "Exact Dunkl operators on rational root systems"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SystemSource {
    /// Catalog name: A1dim1, An, Bn, Cn, Dn
    #[arg(long)]
    system: Option<String>,
    /// JSON file `{"dim": N, "roots": [["1","0"], ...]}`
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply an operator to a polynomial.
    Apply {
        #[command(flatten)]
        source: SystemSource,
        /// Comma-separated `label=value` pairs over orbit labels or aliases.
        #[arg(long)]
        kappa: Option<String>,
        /// D1..DN, Du, laplacian or rho
        #[arg(long)]
        op: String,
        /// Direction vector for Du, e.g. "1,i,0".
        #[arg(long)]
        dir: Option<String>,
        /// Root for rho, e.g. "1,-1".
        #[arg(long)]
        root: Option<String>,
        #[arg(long)]
        poly: String,
    },
    /// Run a seeded verification suite.
    Verify {
        suite: String,
        #[command(flatten)]
        source: SystemSource,
        #[arg(long)]
        kappa: Option<String>,
        #[arg(long, default_value_t = 4)]
        degree: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        points: u64,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        /// Longest generator word for the equivariance suite.
        #[arg(long, default_value_t = 3)]
        words: usize,
    },
    /// List roots, positive roots, orbits and the group order.
    Inspect {
        #[command(flatten)]
        source: SystemSource,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Generate the reflection group.
    Group {
        #[command(flatten)]
        source: SystemSource,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        /// Print every element.
        #[arg(long)]
        list: bool,
    },
    /// List the orbits of the root system.
    Orbits {
        #[command(flatten)]
        source: SystemSource,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: EXIT_USAGE,
        }
    }
}

/// Runs the CLI on `args`, where `args[0]` is the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(rendered),
                _ => Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: EXIT_USAGE,
                },
            };
        }
    };
    let echo = echo_command(&args);
    match dispatch(cli, &echo) {
        Ok(outcome) => outcome,
        Err(message) => Outcome::usage(message),
    }
}

fn echo_command(args: &[String]) -> String {
    let mut parts = vec!["dunkl".to_string()];
    for a in args.iter().skip(1) {
        if a.is_empty() || a.contains(char::is_whitespace) {
            parts.push(format!("{a:?}"));
        } else {
            parts.push(a.clone());
        }
    }
    parts.join(" ")
}

fn load_system(source: &SystemSource) -> Result<RootSystem, String> {
    match (&source.system, &source.file) {
        (Some(name), _) => RootSystem::from_name(name).map_err(|e| e.to_string()),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let json: RootSystemJson = serde_json::from_str(&text)
                .map_err(|e| format!("malformed root system JSON: {e}"))?;
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            RootSystem::from_json(&json)
                .map(|s| s.with_name(name))
                .map_err(|e| e.to_string())
        }
        (None, None) => Err("one of --system or --file is required".into()),
    }
}

/// Splits on commas that are not inside parentheses.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (k, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// Parses `label=value,...`, e.g. `short=1/2,long=1/3` or `(1,-1)=i`.
pub fn parse_kappa(system: &RootSystem, text: &str) -> Result<MultiplicityFunction, String> {
    let mut assignments: Vec<(String, Scalar)> = Vec::new();
    for part in split_top_level(text) {
        let (label, value) = part
            .rsplit_once('=')
            .ok_or_else(|| format!("multiplicity entry {part:?} is not of the form label=value"))?;
        let value = parse_scalar(value).map_err(|e| format!("in multiplicity {label}: {e}"))?;
        assignments.push((label.trim().replace(' ', ""), value));
    }
    MultiplicityFunction::from_orbit_values(system, &assignments).map_err(|e| e.to_string())
}

fn render_polynomial(p: &Polynomial, format: Format, op: &str) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => {
            let mut value = serde_json::to_value(p.to_json()).expect("polynomial JSON");
            let obj = value.as_object_mut().expect("object");
            obj.insert("schema".into(), json!(1));
            obj.insert("op".into(), json!(op));
            obj.insert("text".into(), json!(p.to_string()));
            format!(
                "{}\n",
                serde_json::to_string_pretty(&value).expect("serializable")
            )
        }
    }
}

fn parse_direction(text: &str, dim: usize, what: &str) -> Result<RationalVector, String> {
    let v = parse_vector(text).map_err(|e| format!("in {what}: {e}"))?;
    if v.dim() != dim {
        return Err(format!(
            "{what} has {} coordinates, expected {dim}",
            v.dim()
        ));
    }
    Ok(v)
}

fn dispatch(cli: Cli, echo: &str) -> Result<Outcome, String> {
    let format = cli.format;
    match cli.command {
        Command::Apply {
            source,
            kappa,
            op,
            dir,
            root,
            poly,
        } => {
            let system = load_system(&source)?;
            let n = system.dim();
            let p = parse_polynomial(&poly, n).map_err(|e| e.to_string())?;
            if op == "rho" {
                let root = root.ok_or("--op rho needs --root")?;
                let v = parse_direction(&root, n, "--root")?;
                let q = rho(&p, &v).map_err(|e| e.to_string())?;
                return Ok(Outcome::ok(render_polynomial(&q, format, &op)));
            }
            let kappa = kappa.ok_or("--kappa is required for this operator")?;
            let kappa = parse_kappa(&system, &kappa)?;
            let ctx = DunklContext::new(system, kappa).map_err(|e| e.to_string())?;
            let q = match op.as_str() {
                "laplacian" => ctx.dunkl_laplacian(&p),
                "Du" => {
                    let dir = dir.ok_or("--op Du needs --dir")?;
                    ctx.dunkl_dir(&p, &parse_direction(&dir, n, "--dir")?)
                }
                other => {
                    let j = other
                        .strip_prefix('D')
                        .and_then(|s| s.parse::<usize>().ok())
                        .filter(|&j| j >= 1 && j <= n)
                        .ok_or_else(|| format!("unknown operator {other:?}; expected D1..D{n}, Du, laplacian or rho"))?;
                    ctx.dunkl_j(&p, j - 1)
                }
            }
            .map_err(|e| e.to_string())?;
            Ok(Outcome::ok(render_polynomial(&q, format, &op)))
        }
        Command::Verify {
            suite,
            source,
            kappa,
            degree,
            trials,
            points,
            terms,
            words,
        } => {
            let suite: Suite = suite.parse()?;
            let system = load_system(&source)?;
            let mut config = VerifyConfig::new(suite, cli.seed);
            config.degree = degree;
            config.trials = trials as usize;
            config.points = points as usize;
            config.max_terms = terms as usize;
            config.word_length = words;
            if let Some(k) = kappa {
                config.kappa = Some(parse_kappa(&system, &k)?);
            }
            let report = run_suite(&system, &config, echo).map_err(|e| e.to_string())?;
            let stdout = match format {
                Format::Text => report.to_string(),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report).expect("serializable")
                ),
            };
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok(Outcome {
                stdout,
                stderr: String::new(),
                code,
            })
        }
        Command::Inspect { source, max_order } => {
            let system = load_system(&source)?;
            Ok(Outcome::ok(inspect(&system, max_order, format)))
        }
        Command::Group {
            source,
            max_order,
            list,
        } => {
            let system = load_system(&source)?;
            let group = system
                .generate_group(max_order)
                .map_err(|e| e.to_string())?;
            let stdout = match format {
                Format::Text => {
                    let mut s = format!("group order: {}\n", group.len());
                    if list {
                        for g in &group {
                            let _ = writeln!(s, "{g}");
                        }
                    }
                    s
                }
                Format::Json => {
                    let mut v =
                        json!({"schema": 1, "system": system_name(&system), "order": group.len()});
                    if list {
                        v["elements"] =
                            Value::from(group.iter().map(|g| g.to_string()).collect::<Vec<_>>());
                    }
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&v).expect("serializable")
                    )
                }
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Orbits { source } => {
            let system = load_system(&source)?;
            let stdout = match format {
                Format::Text => orbit_lines(&system),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({"schema": 1, "system": system_name(&system), "orbits": orbits_json(&system)}))
                        .expect("serializable")
                ),
            };
            Ok(Outcome::ok(stdout))
        }
    }
}

fn system_name(system: &RootSystem) -> &str {
    system.name().unwrap_or("custom")
}

fn join_vectors(vs: &[RationalVector]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn orbit_lines(system: &RootSystem) -> String {
    let mut s = String::new();
    for orbit in system.orbits().orbits() {
        let aliases = if orbit.aliases().is_empty() {
            String::new()
        } else {
            format!(" [{}]", orbit.aliases().join(", "))
        };
        let _ = writeln!(
            s,
            "{}{}: {} roots: {}",
            orbit.label_string(),
            aliases,
            orbit.roots().len(),
            join_vectors(orbit.roots())
        );
    }
    s
}

fn orbits_json(system: &RootSystem) -> Value {
    system
        .orbits()
        .orbits()
        .iter()
        .map(|o| {
            json!({
                "label": o.label_string(),
                "aliases": o.aliases(),
                "roots": o.roots().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect()
}

fn inspect(system: &RootSystem, max_order: usize, format: Format) -> String {
    let order = system.generate_group(max_order).map(|g| g.len());
    match format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "system: {}", system_name(system));
            let _ = writeln!(s, "dimension: {}", system.dim());
            let _ = writeln!(
                s,
                "roots ({}): {}",
                system.roots().len(),
                join_vectors(system.roots())
            );
            let _ = writeln!(
                s,
                "positive ({}): {}",
                system.positive_roots().len(),
                join_vectors(system.positive_roots())
            );
            let _ = writeln!(s, "orbits ({}):", system.orbits().len());
            for line in orbit_lines(system).lines() {
                let _ = writeln!(s, "  {line}");
            }
            match order {
                Ok(n) => {
                    let _ = writeln!(s, "group order: {n}");
                }
                Err(e) => {
                    let _ = writeln!(s, "group order: unknown ({e})");
                }
            }
            s
        }
        Format::Json => {
            let v = json!({
                "schema": 1,
                "system": system_name(system),
                "dim": system.dim(),
                "roots": system.roots().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "positive": system.positive_roots().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "orbits": orbits_json(system),
                "group_order": order.as_ref().ok(),
                "group_order_error": order.as_ref().err().map(|e| e.to_string()),
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("serializable")
            )
        }
    }
}
