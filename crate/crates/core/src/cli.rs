//! Command-line front end.
//!
//! Colors are doubled integers on every surface: `1` is spin ½, `2` is
//! spin 1. Exit status is 0 on success, 1 when a check fails or the two
//! engines differ, 2 on bad input.

use crate::qarith::{admissible, canonicalize_ratio, BracketValue, HalfInt, QLaurent, QRatio};
use crate::shadow::{crossed_tet_sym, shadow_eval, sliced_to_shadow, tet_sym, theta_sym, unknot_sym, ShadowPresentation};
use crate::sliced::{self, evaluate, framing_factor, SlicedDiagram};
use crate::verify::{self, GraphCombinatorics, IdentityReport};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "qspin", version, about = "Exact Kauffman brackets of colored framed trivalent graphs")]
#[command(after_help = "All colors, states and framings are doubled integers: 1 means spin 1/2.")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output mode.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a diagram or shadow presentation file.
    Eval {
        input: PathBuf,
        /// Multiply by the edge and vertex factorials.
        #[arg(long)]
        renormalize: bool,
        #[arg(long, value_enum, default_value_t = Engine::Sliced)]
        engine: Engine,
    },
    /// Print a closed-form renormalized symbol.
    Symbol {
        #[arg(value_enum)]
        kind: SymbolKind,
        /// Doubled colors (1, 3, 6 or 6 plus a crossing sign ±1).
        #[arg(allow_negative_numbers = true, num_args = 1..)]
        args: Vec<i64>,
    },
    /// Run a verification suite.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest doubled color.
        #[arg(long, default_value_t = 3)]
        max: i64,
    },
    /// Write the shadow presentation of a closed diagram.
    Convert {
        input: PathBuf,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Sliced,
    Shadow,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolKind {
    Unknot,
    Theta,
    Tet,
    Tetx,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Integrality,
    Divisibility,
    Orthogonality,
    Racah,
    BiedenharnElliot,
    Normalizations,
    Fusion,
    Whitehead,
    #[value(name = "r-vs-6j")]
    RVs6j,
    EngineEquivalence,
    Boundary,
}

/// Outcome of a command: text for standard output and an exit status.
struct Outcome {
    out: String,
    status: i32,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = write!(out, "{}", o.out);
            o.status
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, InputError> {
    match &cli.command {
        Command::Eval { input, renormalize, engine } => cmd_eval(input, *renormalize, *engine, cli.format),
        Command::Symbol { kind, args } => cmd_symbol(*kind, args, cli.format),
        Command::Check { suite, max } => cmd_check(*suite, *max, cli.format),
        Command::Convert { input, output } => cmd_convert(input, output.as_deref()),
    }
}

enum Input {
    Sliced(SlicedDiagram),
    Shadow(ShadowPresentation),
}

fn read_input(path: &Path) -> Result<Input, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let origin = path.display().to_string();
    let is_shadow = serde_json::from_str::<Value>(&text).ok().is_some_and(|v| v.get("regions").is_some());
    if is_shadow {
        Ok(Input::Shadow(ShadowPresentation::from_json(&text, &origin)?))
    } else {
        Ok(Input::Sliced(sliced::from_json(&text, &origin)?))
    }
}

/// A value, in canonical form when it has one.
fn value_text(v: &QRatio) -> String {
    match canonicalize_ratio(v) {
        Ok(b) => b.to_string(),
        Err(e) => format!("NotIntegral: {e}\n{}", v.render()),
    }
}

fn value_json(v: &QRatio) -> Value {
    match canonicalize_ratio(v) {
        Ok(b) => bracket_json(&b),
        Err(e) => json!({ "not_integral": e.to_string(), "ratio": v.render() }),
    }
}

fn bracket_json(b: &BracketValue) -> Value {
    let body: Vec<Value> = b.body_q_coeffs().iter().map(|(k, c)| json!([k, c.to_string()])).collect();
    json!({ "phase_m": b.phase_m, "quarter_shift_n": b.quarter_shift_n, "body": body, "text": b.to_string() })
}

fn cmd_eval(input: &Path, renorm: bool, engine: Engine, format: Format) -> Result<Outcome, InputError> {
    let d = match read_input(input)? {
        Input::Shadow(p) => {
            if engine != Engine::Shadow && engine != Engine::Sliced {
                return Err(InputError("a shadow presentation can only be evaluated by the shadow engine".into()));
            }
            let v = shadow_eval(&p, &QLaurent::one())?;
            let out = match format {
                Format::Text => format!("{}\n", value_text(&v)),
                Format::Json => format!("{}\n", json!({ "engine": "shadow", "renormalized": true, "value": value_json(&v) })),
            };
            return Ok(Outcome { out, status: 0 });
        }
        Input::Sliced(d) => d,
    };
    if engine != Engine::Sliced && !d.is_closed() {
        return Err(InputError("the shadow engine needs a closed diagram".into()));
    }
    let g = GraphCombinatorics::of(&d);
    if !g.all_admissible() {
        return Err(InputError("inadmissible vertex coloring".into()));
    }
    let sliced_value = || -> Result<QRatio, InputError> {
        let raw = evaluate(&d, None)?;
        Ok(if renorm { verify::renormalize(&raw, &g) } else { raw })
    };
    let shadow_value = || -> Result<QRatio, InputError> {
        let v = shadow_eval(&sliced_to_shadow(&d)?, &framing_factor(&d))?;
        Ok(if renorm || g.is_link() { v } else { &v / &g.factor().to_ratio() })
    };
    let (out, status) = match engine {
        Engine::Sliced | Engine::Shadow => {
            let (name, v) = if engine == Engine::Sliced { ("sliced", sliced_value()?) } else { ("shadow", shadow_value()?) };
            let out = match format {
                Format::Text => format!("{}\n", value_text(&v)),
                Format::Json => format!("{}\n", json!({ "engine": name, "renormalized": renorm, "value": value_json(&v) })),
            };
            (out, 0)
        }
        Engine::Both => {
            let (a, b) = (sliced_value()?, shadow_value()?);
            let verdict = if a == b { "EQUAL" } else { "DIFFER" };
            let out = match format {
                Format::Text => format!("sliced: {}\nshadow: {}\n{verdict}\n", value_text(&a), value_text(&b)),
                Format::Json => format!(
                    "{}\n",
                    json!({ "renormalized": renorm, "sliced": value_json(&a), "shadow": value_json(&b), "verdict": verdict })
                ),
            };
            (out, i32::from(a != b))
        }
    };
    Ok(Outcome { out, status })
}

fn cmd_symbol(kind: SymbolKind, args: &[i64], format: Format) -> Result<Outcome, InputError> {
    let want = match kind {
        SymbolKind::Unknot => 1,
        SymbolKind::Theta => 3,
        SymbolKind::Tet => 6,
        SymbolKind::Tetx => 7,
    };
    if args.len() != want {
        return Err(InputError(format!("{kind:?} takes {want} arguments, got {}", args.len()).to_lowercase()));
    }
    let colors = &args[..want.min(6)];
    if colors.iter().any(|&c| c < 0) {
        return Err(InputError("colors must be nonnegative".into()));
    }
    let c: Vec<HalfInt> = colors.iter().map(|&x| HalfInt(x)).collect();
    let triples: Vec<[HalfInt; 3]> = match kind {
        SymbolKind::Unknot => vec![],
        SymbolKind::Theta => vec![[c[0], c[1], c[2]]],
        _ => crate::shadow::tet_triples([c[0], c[1], c[2], c[3], c[4], c[5]]).to_vec(),
    };
    let value = match kind {
        SymbolKind::Unknot => unknot_sym(c[0]),
        SymbolKind::Theta => theta_sym(c[0], c[1], c[2]),
        SymbolKind::Tet => tet_sym(c[0], c[1], c[2], c[3], c[4], c[5]),
        SymbolKind::Tetx => {
            let sign = args[6];
            if sign != 1 && sign != -1 {
                return Err(InputError("the crossing sign must be 1 or -1".into()));
            }
            crossed_tet_sym(c[0], c[1], c[2], c[3], c[4], c[5], sign)
        }
    };
    let bad: Vec<String> = triples
        .iter()
        .filter(|t| !admissible(t[0], t[1], t[2]))
        .map(|t| format!("({}, {}, {})", t[0], t[1], t[2]))
        .collect();
    let b = crate::qarith::canonicalize(&value).expect("closed-form symbols are integral");
    let out = match format {
        Format::Text => {
            let mut s = format!("{b}\n");
            for t in &bad {
                s += &format!("ADMISSIBILITY: triple {t} is not admissible\n");
            }
            s
        }
        Format::Json => format!("{}\n", json!({ "value": bracket_json(&b), "inadmissible": bad })),
    };
    Ok(Outcome { out, status: 0 })
}

fn cmd_check(suite: Suite, max: i64, format: Format) -> Result<Outcome, InputError> {
    if !(0..=8).contains(&max) {
        return Err(InputError("--max must lie in 0..=8".into()));
    }
    let reports: Vec<IdentityReport> = match suite {
        Suite::Integrality => vec![verify::verify_integrality(&verify::graph_corpus(max))],
        Suite::Divisibility => vec![verify::verify_divisibility(&verify::graph_corpus(max))],
        Suite::Orthogonality => vec![verify::verify_orthogonality(max)],
        Suite::Racah => vec![verify::verify_racah(max)],
        Suite::BiedenharnElliot => vec![verify::verify_biedenharn_elliot(max)],
        Suite::Normalizations => verify::verify_normalizations(max),
        Suite::Fusion => vec![verify::verify_fusion(max)],
        Suite::Whitehead => vec![verify::verify_whitehead(max)],
        Suite::RVs6j => vec![verify::verify_r_vs_6j(max)],
        Suite::EngineEquivalence => {
            let mut c = verify::graph_corpus(max);
            c.extend(verify::braid_corpus(max));
            vec![verify::verify_engine_equivalence(&c)]
        }
        Suite::Boundary => vec![verify::verify_boundary_integrality(&verify::open_corpus(max))?],
    };
    let ok = reports.iter().all(|r| r.passed());
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s += &r.to_string();
                if suite == Suite::Integrality {
                    for i in &r.instances {
                        s += &format!("  {:<40} {}\n", i.label, i.rhs);
                    }
                }
            }
            s
        }
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&reports)?),
    };
    Ok(Outcome { out, status: i32::from(!ok) })
}

fn cmd_convert(input: &Path, output: Option<&Path>) -> Result<Outcome, InputError> {
    let Input::Sliced(d) = read_input(input)? else {
        return Err(InputError("input is already a shadow presentation".into()));
    };
    let p = sliced_to_shadow(&d)?;
    match output {
        Some(path) => {
            p.save(path)?;
            Ok(Outcome { out: String::new(), status: 0 })
        }
        None => Ok(Outcome { out: p.to_json() + "\n", status: 0 }),
    }
}
