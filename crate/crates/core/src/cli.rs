//! The `fdb` command line. Every subcommand is one library call plus
//! formatting; results go to stdout as compact JSON or as readable text.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::format_rational;
use crate::cm::{coproduct_delta_by, delta_in_a, DeltaRoute};
use crate::coloured::{check_coloured_axioms, nseries_compose, nseries_revert, NSeries};
use crate::dual::b_bracket;
use crate::error::Error;
use crate::hopf::{antipode, check_hopf_axioms, coproduct, primitive_space, CheckReport};
use crate::partitions::{bell_partial, enumerate_partitions, groupoid_cardinality, stirling2};
use crate::series::{compose, revert, ExpSeries};
use crate::words::{check_gamma, gamma, GammaRoute};

#[derive(Parser, Debug)]
#[command(name = "fdb", version, about = "Exact computations with the Faà di Bruno Hopf algebra")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Pretty,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Suite {
    Hopf,
    Gamma,
    Nseries,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compose two series files: f ∘ g. Use `-` for stdin.
    Compose { f: String, g: String },
    /// Compositional inverse of a unital series file.
    Revert { f: String },
    /// Coproduct Δa_n.
    Coproduct {
        #[arg(long)]
        n: u32,
    },
    /// Antipode S(a_n).
    Antipode {
        #[arg(long)]
        n: u32,
    },
    /// Basis of the primitive elements of a given degree.
    Primitives {
        #[arg(long)]
        degree: usize,
    },
    /// Coproduct Δδ_n.
    DeltaCoproduct {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "subst", value_parser = parse_delta_route)]
        route: DeltaRoute,
    },
    /// δ_n written in the a_k.
    DeltaToA {
        #[arg(long)]
        n: u32,
    },
    /// Γ_n in the shuffle algebra.
    Gamma {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "closed", value_parser = parse_gamma_route)]
        route: GammaRoute,
    },
    /// Commutator [b'_n, b'_m] in the graded dual.
    Bracket {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// Partial Bell polynomial B_{n,k}.
    Bell {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Stirling number of the second kind S(n,k).
    Stirling {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// All set partitions of {1, …, n}.
    Partitions {
        #[arg(long)]
        n: usize,
    },
    /// Partial sums of Σ Bell(n)/n!, against e^(e-1).
    Cardinality {
        #[arg(long)]
        upto: usize,
    },
    /// Compose two N-series files: f ∘ g.
    NseriesCompose { f: String, g: String },
    /// Compositional inverse of an N-series file.
    NseriesRevert { f: String },
    /// Run an identity sweep.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        upto: u32,
        /// Number of colours for the nseries suite.
        #[arg(long, default_value_t = 2)]
        colours: usize,
    },
}

fn parse_delta_route(s: &str) -> Result<DeltaRoute, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_gamma_route(s: &str) -> Result<GammaRoute, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// One result in both output forms.
struct Rendered {
    json: Value,
    text: String,
    ok: bool,
}

impl Rendered {
    fn of<T: Serialize + Display>(v: &T) -> Result<Self, Error> {
        Ok(Rendered::new(to_value(v)?, v.to_string()))
    }

    fn new(json: Value, text: String) -> Self {
        Rendered { json, text, ok: true }
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, Error> {
    serde_json::to_value(v).map_err(|e| Error::domain(format!("serialization failed: {e}")))
}

fn series_text(s: &ExpSeries) -> String {
    (1..=s.order())
        .map(|n| format!("f_{n} = {}", format_rational(s.coeff(n))))
        .collect::<Vec<_>>()
        .join("\n")
}

fn nseries_text(s: &NSeries) -> String {
    let mut lines = vec![format!("N = {}, M = {}", s.vars(), s.order())];
    for (r, n, c) in s.coeffs().filter(|(_, n, _)| n.weight() > 1) {
        lines.push(format!("f^{r}_{n} = {}", format_rational(c)));
    }
    lines.join("\n")
}

fn report(r: CheckReport) -> Result<Rendered, Error> {
    let mut out = Rendered::new(to_value(&r)?, r.to_string());
    out.ok = r.passed();
    Ok(out)
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Inputs<'_> {
    fn read(&mut self, path: &str) -> Result<String, Error> {
        if path == "-" {
            if self.stdin_used {
                return Err(Error::domain("stdin can be read only once"));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::domain(format!("reading stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::domain(format!("reading {path}: {e}")))
        }
    }

    fn json<T: serde::de::DeserializeOwned>(&mut self, path: &str) -> Result<T, Error> {
        let text = self.read(path)?;
        serde_json::from_str(&text).map_err(|e| Error::domain(format!("invalid input {path}: {e}")))
    }
}

fn execute(command: Command, inputs: &mut Inputs<'_>) -> Result<Rendered, Error> {
    match command {
        Command::Compose { f, g } => {
            let (f, g): (ExpSeries, ExpSeries) = (inputs.json(&f)?, inputs.json(&g)?);
            let h = compose(&f, &g)?;
            Ok(Rendered::new(to_value(&h)?, series_text(&h)))
        }
        Command::Revert { f } => {
            let g = revert(&inputs.json(&f)?)?;
            Ok(Rendered::new(to_value(&g)?, series_text(&g)))
        }
        Command::Coproduct { n } => Rendered::of(&*coproduct(n)?),
        Command::Antipode { n } => Rendered::of(&antipode(n)?),
        Command::Primitives { degree } => {
            let basis = primitive_space(degree)?;
            let text = if basis.is_empty() {
                format!("degree {degree}: no primitives")
            } else {
                let b: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
                format!("degree {degree}: {}", b.join(", "))
            };
            Ok(Rendered::new(
                json!({"degree": degree, "dimension": basis.len(), "basis": to_value(&basis)?}),
                text,
            ))
        }
        Command::DeltaCoproduct { n, route } => Rendered::of(&coproduct_delta_by(n, route)?),
        Command::DeltaToA { n } => Rendered::of(&delta_in_a(n)?),
        Command::Gamma { n, route } => Rendered::of(&gamma(n, route)?),
        Command::Bracket { n, m } => Rendered::of(&b_bracket(n, m)?),
        Command::Bell { n, k } => {
            let b = bell_partial(n, k)?;
            Ok(Rendered::new(to_value(&b)?, format!("{b:?}")))
        }
        Command::Stirling { n, k } => {
            let s = stirling2(n, k)?;
            Ok(Rendered::new(
                json!({"n": n, "k": k, "value": s.to_string()}),
                format!("S({n},{k}) = {s}"),
            ))
        }
        Command::Partitions { n } => {
            let ps = enumerate_partitions(n)?;
            let text = ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n");
            Ok(Rendered::new(to_value(&ps)?, text))
        }
        Command::Cardinality { upto } => {
            let c = groupoid_cardinality(upto);
            let text = format!(
                "partial sum up to {}: {}\ndecimal: {:.12}\ne^(e-1): {:.12}\nerror: {:.3e}",
                c.upto,
                format_rational(&c.partial_sum),
                c.decimal,
                c.limit,
                c.error
            );
            Ok(Rendered::new(to_value(&c)?, text))
        }
        Command::NseriesCompose { f, g } => {
            let (f, g): (NSeries, NSeries) = (inputs.json(&f)?, inputs.json(&g)?);
            let h = nseries_compose(&f, &g)?;
            Ok(Rendered::new(to_value(&h)?, nseries_text(&h)))
        }
        Command::NseriesRevert { f } => {
            let g = nseries_revert(&inputs.json(&f)?)?;
            Ok(Rendered::new(to_value(&g)?, nseries_text(&g)))
        }
        Command::Check { suite, upto, colours } => report(match suite {
            Suite::Hopf => check_hopf_axioms(upto)?,
            Suite::Gamma => check_gamma(upto)?,
            Suite::Nseries => check_coloured_axioms(colours, upto)?,
        }),
    }
}

/// Runs the CLI on `args` (program name first) with explicit streams and
/// returns the exit code: 0 on success, 1 on a domain, input or failed-check
/// error, 2 on a usage error.
pub fn run_with<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let sink: &mut dyn Write = if usage { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return if usage { 2 } else { 0 };
        }
    };
    let mut inputs = Inputs {
        stdin,
        stdin_used: false,
    };
    match execute(cli.command, &mut inputs) {
        Ok(r) => {
            let body = match cli.format {
                Format::Json => r.json.to_string(),
                Format::Pretty => r.text,
            };
            if writeln!(stdout, "{body}").is_err() {
                return 1;
            }
            if r.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        args,
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
