//! Command-line front end for the `kodzero-core` classification toolkit.
//!
//! Subcommands wrap the library's public operations: numerical invariants of
//! a surface family, the full sum classification, torus-bundle normal forms
//! and first homology, gluing of annulus-bundle complements, enumeration of
//! the resulting families over a parameter grid, and the half-period
//! involution test.
//!
//! Exit codes are a stable contract: `0` success (including torus-bundle
//! verdicts), `2` parse error, `3` domain error, `4` classification-negative
//! (the reason is still printed). Output is deterministic: identical
//! invocations produce byte-identical bytes in both formats.

pub mod output;
pub mod parse;

use clap::{Parser, Subcommand, ValueEnum};
use kodzero_core::classifier::{classify, model_invariants, Verdict};
use kodzero_core::glue::{
    enumerate_table, glue_bundle, glue_presentation, involution_composite, ComplementKind,
    GluingData, InvolutionKind,
};
use kodzero_core::sumcalc::{SumProblem, Summand};
use kodzero_core::torusbundle::TorusBundle;
use output::{record_line, Format};
use serde_json::json;
use std::fmt;
use std::fmt::Write as _;

/// Exact classification of symplectic sums along positive-genus surfaces.
#[derive(Parser, Debug)]
#[command(name = "kodzero", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Subcommand.
    #[command(subcommand)]
    pub command: Command,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Format::Text => write!(f, "text"),
            Format::Records => write!(f, "records"),
        }
    }
}

/// Which normalized gluing form the `--params` list belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GlueForm {
    /// Parameters `b,c,d,e,f` with `d - 2bc = 1`.
    Even,
    /// Parameters `a,b,d,e,f` with `ad - b = 1`.
    Odd,
}

/// The subcommands.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Numerical invariants of a surface family: chi, sigma, c1^2, the
    /// anticanonical class, and its adjunction genus.
    Invariants {
        /// Family spec, e.g. `CP2#9`, `S2xS2`, `S2xT2#3`, `S2~xT2`, `E1`.
        spec: String,
    },
    /// Classify the sum of two summands glued along their distinguished
    /// surfaces (anticanonical by default).
    Classify {
        /// First summand's family.
        spec1: String,
        /// Second summand's family.
        spec2: String,
        /// Override the first surface class, e.g. `[3,-1,-1,-1]`.
        #[arg(long = "F1")]
        f1: Option<String>,
        /// Override the second surface class.
        #[arg(long = "F2")]
        f2: Option<String>,
        /// Gluing-parameter bound for torus-bundle enumeration.
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// Normal form of a torus bundle over the torus.
    Normalform {
        /// Bundle literal `M([[a,b],[c,d]],[[e,f],[g,h]];(m,n))`.
        bundle: String,
    },
    /// First homology of a torus bundle over the torus.
    H1 {
        /// Bundle literal `M([[a,b],[c,d]],[[e,f],[g,h]];(m,n))`.
        bundle: String,
    },
    /// Glue the complements `Y_j` and `Y_k` along normalized gluing data:
    /// prints the glued fundamental-group presentation, its abelianization,
    /// the closed-form bundle, and its normal-form tag.
    Glue {
        /// Side-1 complement index (reduced modulo 2).
        #[arg(long)]
        j: i64,
        /// Side-2 complement index (reduced modulo 2).
        #[arg(long)]
        k: i64,
        /// Gluing form: `even` or `odd`.
        #[arg(long, value_enum)]
        form: GlueForm,
        /// Five comma-separated parameters: `b,c,d,e,f` (even) or
        /// `a,b,d,e,f` (odd).
        #[arg(long)]
        params: String,
    },
    /// Enumerate the normal-form families realized by all gluings of
    /// `Y_j` and `Y_k` with parameters bounded by `--bound`.
    Enumerate {
        /// Side-1 complement index (reduced modulo 2).
        #[arg(long)]
        j: i64,
        /// Side-2 complement index (reduced modulo 2).
        #[arg(long)]
        k: i64,
        /// Parameter bound (must be >= 1).
        #[arg(long, default_value_t = 3)]
        bound: i64,
        /// Additionally print, for every grid point, the glued presentation
        /// and its abelianization.
        #[arg(long)]
        emit_presentations: bool,
    },
    /// Type of the composite half-period translation through a monodromy.
    Involution {
        /// SL(2,Z) matrix literal `[[a,b],[c,d]]`.
        matrix: String,
    },
}

/// A command failure with its exit-code class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input text (exit 2).
    Parse(String),
    /// Well-formed input outside an operation's domain (exit 3).
    Domain(String),
}

impl CliError {
    /// The process exit code for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "{m}"),
            CliError::Domain(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

fn pe(e: parse::ParseError) -> CliError {
    CliError::Parse(e.to_string())
}

fn de(e: impl fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

/// Runs a parsed invocation; returns the stdout payload and the exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Invariants { spec } => cmd_invariants(spec, fmt),
        Command::Classify {
            spec1,
            spec2,
            f1,
            f2,
            bound,
        } => cmd_classify(spec1, spec2, f1.as_deref(), f2.as_deref(), *bound, fmt),
        Command::Normalform { bundle } => cmd_normalform(bundle, fmt),
        Command::H1 { bundle } => cmd_h1(bundle, fmt),
        Command::Glue { j, k, form, params } => cmd_glue(*j, *k, *form, params, fmt),
        Command::Enumerate {
            j,
            k,
            bound,
            emit_presentations,
        } => cmd_enumerate(*j, *k, *bound, *emit_presentations, fmt),
        Command::Involution { matrix } => cmd_involution(matrix, fmt),
    }
}

fn cmd_invariants(spec: &str, fmt: Format) -> Result<(String, i32), CliError> {
    let family = parse::family(spec).map_err(pe)?;
    let chi = family.euler().map_err(de)?;
    let sigma = family.signature().map_err(de)?;
    let c1sq = family.c1sq().map_err(de)?;
    let antik = family.anticanonical().map_err(de)?;
    let genus = antik.adjunction_genus().map_err(de)?;
    let out = match fmt {
        Format::Text => format!(
            "family: {family}\nchi: {chi}\nsigma: {sigma}\nc1^2: {c1sq}\n\
             anticanonical: {antik}\ngenus(-K): {genus}\n"
        ),
        Format::Records => record_line(&json!({
            "family": family.to_string(),
            "chi": chi,
            "sigma": sigma,
            "c1sq": c1sq,
            "anticanonical": antik.to_string(),
            "genus_minus_k": genus,
        })),
    };
    Ok((out, 0))
}

fn summand(spec: &str, class: Option<&str>) -> Result<Summand, CliError> {
    let family = parse::family(spec).map_err(pe)?;
    match class {
        None => Summand::anticanonical(family).map_err(de),
        Some(text) => {
            let coeffs = parse::class_vector(text).map_err(pe)?;
            Summand::from_coeffs(family, coeffs).map_err(de)
        }
    }
}

fn cmd_classify(
    spec1: &str,
    spec2: &str,
    f1: Option<&str>,
    f2: Option<&str>,
    bound: i64,
    fmt: Format,
) -> Result<(String, i32), CliError> {
    let problem = SumProblem::new(summand(spec1, f1)?, summand(spec2, f2)?);
    let result = classify(&problem, bound).map_err(de)?;
    let negative = matches!(
        result.verdict,
        Verdict::NotKodairaZero(_) | Verdict::HypothesisFailure(_)
    );
    let model = model_invariants(&result).ok();
    let code = if negative { 4 } else { 0 };
    let out = match fmt {
        Format::Text => {
            let mut s = format!("verdict: {}\ncertificate:\n", result.verdict);
            for step in &result.certificate {
                writeln!(s, "  - {step}").expect("string write");
            }
            if let Some(m) = &model {
                writeln!(s, "model: chi={} sigma={} b1={}", m.chi, m.sigma, m.b1)
                    .expect("string write");
            }
            s
        }
        Format::Records => {
            let steps: Vec<String> = result.certificate.iter().map(|s| s.to_string()).collect();
            record_line(&json!({
                "verdict": result.verdict.to_string(),
                "negative": negative,
                "certificate": steps,
                "model": model.as_ref().map(|m| json!({
                    "chi": m.chi,
                    "sigma": m.sigma,
                    "b1": m.b1,
                })),
            }))
        }
    };
    Ok((out, code))
}

fn parse_bundle(text: &str) -> Result<TorusBundle, CliError> {
    let (a, b, v) = parse::bundle_parts(text).map_err(pe)?;
    TorusBundle::new(a, b, v).map_err(de)
}

fn cmd_normalform(bundle: &str, fmt: Format) -> Result<(String, i32), CliError> {
    let b = parse_bundle(bundle)?;
    let nf = b.normal_form().map_err(de)?;
    let t = nf.trace;
    let out = match fmt {
        Format::Text => format!(
            "bundle: {b}\ntag: {}\ntrace: delta={} zeta={} z={} p={} q={} r={} s={} x={} j={}\n",
            nf.tag, t.delta, t.zeta, t.z, t.p, t.q, t.r, t.s, t.x, t.j
        ),
        Format::Records => record_line(&json!({
            "bundle": b.to_string(),
            "tag": nf.tag.to_string(),
            "trace": {
                "delta": t.delta,
                "zeta": t.zeta,
                "z": t.z,
                "p": t.p,
                "q": t.q,
                "r": t.r,
                "s": t.s,
                "x": t.x,
                "j": t.j,
            },
        })),
    };
    Ok((out, 0))
}

fn cmd_h1(bundle: &str, fmt: Format) -> Result<(String, i32), CliError> {
    let b = parse_bundle(bundle)?;
    let inv = b.h1();
    let out = match fmt {
        Format::Text => format!("bundle: {b}\nh1: {inv}\n"),
        Format::Records => {
            let torsion: Vec<String> = inv.torsion.iter().map(|t| t.to_string()).collect();
            record_line(&json!({
                "bundle": b.to_string(),
                "h1": inv.to_string(),
                "rank": inv.rank,
                "torsion": torsion,
            }))
        }
    };
    Ok((out, 0))
}

fn gluing_data(form: GlueForm, params: &str) -> Result<GluingData, CliError> {
    let p = parse::int_list(params, 5).map_err(pe)?;
    match form {
        GlueForm::Even => GluingData::even(p[0], p[1], p[2], p[3], p[4]).map_err(de),
        GlueForm::Odd => GluingData::odd(p[0], p[1], p[2], p[3], p[4]).map_err(de),
    }
}

fn cmd_glue(
    j: i64,
    k: i64,
    form: GlueForm,
    params: &str,
    fmt: Format,
) -> Result<(String, i32), CliError> {
    let (j, k) = (ComplementKind::from_index(j), ComplementKind::from_index(k));
    let g = gluing_data(form, params)?;
    let presentation = glue_presentation(j, k, &g).map_err(de)?;
    let ab = presentation.abelianize();
    let bundle = glue_bundle(j, k, &g).map_err(de)?;
    let tag = bundle.normal_form().map_err(de)?.tag;
    let out = match fmt {
        Format::Text => format!(
            "gluing: {g}\ncomplements: {j} and {k}\npresentation: {presentation}\n\
             abelianization: {ab}\nbundle: {bundle}\ntag: {tag}\n"
        ),
        Format::Records => record_line(&json!({
            "gluing": g.to_string(),
            "j": j.to_string(),
            "k": k.to_string(),
            "presentation": presentation.to_string(),
            "abelianization": ab.to_string(),
            "bundle": bundle.to_string(),
            "tag": tag.to_string(),
        })),
    };
    Ok((out, 0))
}

/// Walks the same parameter grid as the enumeration sweep, calling `visit`
/// for every valid gluing datum (both forms).
fn walk_grid(bound: i64, mut visit: impl FnMut(GluingData)) {
    let range = || -bound..=bound;
    for b in range() {
        for c in range() {
            let d = 1 + 2 * b * c;
            if d.abs() > bound {
                continue;
            }
            for e in range() {
                for f in range() {
                    visit(GluingData::Even { b, c, d, e, f });
                }
            }
        }
    }
    for a in range() {
        for d in range() {
            let b = a * d - 1;
            if b.abs() > bound {
                continue;
            }
            for e in range() {
                for f in range() {
                    visit(GluingData::Odd { a, b, d, e, f });
                }
            }
        }
    }
}

fn cmd_enumerate(
    j: i64,
    k: i64,
    bound: i64,
    emit_presentations: bool,
    fmt: Format,
) -> Result<(String, i32), CliError> {
    let (j, k) = (ComplementKind::from_index(j), ComplementKind::from_index(k));
    let tags = enumerate_table(j, k, bound).map_err(de)?;
    let mut out = String::new();
    match fmt {
        Format::Text => {
            writeln!(out, "families (j={j}, k={k}, bound={bound}): {}", tags.len())
                .expect("string write");
            for tag in &tags {
                writeln!(out, "  {tag}").expect("string write");
            }
        }
        Format::Records => {
            for tag in &tags {
                out.push_str(&record_line(&json!({
                    "kind": "family",
                    "tag": tag.to_string(),
                })));
            }
        }
    }
    if emit_presentations {
        walk_grid(bound, |g| {
            let presentation =
                glue_presentation(j, k, &g).expect("grid data satisfies its identity");
            let ab = presentation.abelianize();
            let tag = glue_bundle(j, k, &g)
                .expect("grid data is valid")
                .normal_form()
                .expect("closed forms are pre-normal")
                .tag;
            match fmt {
                Format::Text => {
                    writeln!(out, "grid {g}: tag {tag}; h1 {ab}; {presentation}")
                        .expect("string write");
                }
                Format::Records => {
                    out.push_str(&record_line(&json!({
                        "kind": "grid",
                        "gluing": g.to_string(),
                        "tag": tag.to_string(),
                        "abelianization": ab.to_string(),
                        "presentation": presentation.to_string(),
                    })));
                }
            }
        });
    }
    Ok((out, 0))
}

fn cmd_involution(matrix: &str, fmt: Format) -> Result<(String, i32), CliError> {
    let m = parse::mat2(matrix).map_err(pe)?;
    let verdict = involution_composite(&m).map_err(de)?;
    let kind = match verdict.kind {
        InvolutionKind::Identity => "Identity",
        InvolutionKind::FreeInvolution => "FreeInvolution",
    };
    let out = match fmt {
        Format::Text => format!("matrix: {m}\ncomposite: {verdict}\n"),
        Format::Records => record_line(&json!({
            "matrix": m.to_string(),
            "composite": verdict.to_string(),
            "kind": kind,
            "translation_num": [verdict.translation_num.0, verdict.translation_num.1],
        })),
    };
    Ok((out, 0))
}

/// Convenience used by tests: builds a [`Cli`] value directly.
pub fn cli(format: Format, command: Command) -> Cli {
    Cli { format, command }
}
