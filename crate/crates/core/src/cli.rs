//! Command-line front end.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{parse_document, Algebra, Document, DEFAULT_NILPOTENCY_BOUND};
use crate::corr::Corr;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::rep::{EnumerationOptions, Module, Strategy};
use crate::silting::Members;
use crate::stability::{self, NumericalBudget, NumericalVerdict};
use crate::twoterm::{dim_weight, Complex, KUniverse};

#[derive(Parser, Debug)]
#[command(name = "siltlab", version, about = "Two-term silting theory for bound quiver algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Ground field: Q or Fp:<p>. Overrides a `field` line in the input.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Largest total dimension of enumerated modules.
    #[arg(long, global = true, default_value_t = 12)]
    pub dim_bound: usize,
    /// Multiplicity bound for sums searched by semistability tests.
    #[arg(long, global = true, default_value_t = 2)]
    pub mult_bound: usize,
    /// Random samples per candidate in randomized searches.
    #[arg(long, global = true, default_value_t = 16)]
    pub samples: usize,
    #[arg(long, global = true, default_value_t = crate::DEFAULT_SEED)]
    pub seed: u64,
    /// Also scan matrix tuples with entries below this prime when enumerating.
    #[arg(long, global = true)]
    pub exhaustive_prime: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Notion {
    /// Determinantal semi-invariant `s(X, M)`.
    M,
    /// King θ-semistability of a module.
    King,
    /// Numerical d-semistability of a complex.
    Numerical,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Summary of the algebra and its enumerated universes.
    Info { file: PathBuf },
    /// Indecomposable modules, or complexes with --in-k. DOT output draws the AR quiver.
    Indecs {
        file: PathBuf,
        #[arg(long)]
        in_k: bool,
    },
    /// Hom dimension between two named objects; with --in-k also E.
    Hom {
        file: PathBuf,
        a: String,
        b: String,
        #[arg(long)]
        in_k: bool,
    },
    /// All basic 2-term silting objects.
    Silting { file: PathBuf },
    /// One row per silting object: cotorsion pair, thick, wide, torsion class.
    Table { file: PathBuf },
    /// Commutativity report of the correspondence diagram; DOT gives the thick Hasse diagram.
    Diagram { file: PathBuf },
    /// Evaluates a semistability notion on named objects.
    Semistable {
        file: PathBuf,
        #[arg(long)]
        complex: Option<String>,
        #[arg(long)]
        module: Option<String>,
        #[arg(long, value_enum, default_value_t = Notion::M)]
        notion: Notion,
        /// Weight vector for King or numerical tests, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
}

/// Whether the printed result rests on a complete search.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Complete,
    Incomplete,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Complete => 0,
            Outcome::Incomplete => 2,
        }
    }
}

struct Session {
    doc: Document,
    alg: Arc<Algebra>,
    cli_seed: u64,
    opts: EnumerationOptions,
}

impl Session {
    fn load(cli: &Cli, file: &PathBuf) -> Result<Session> {
        let text = std::fs::read_to_string(file).map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
        let field = cli.field.as_deref().map(str::parse::<Field>).transpose()?;
        let doc = parse_document(&text, field, DEFAULT_NILPOTENCY_BOUND)?;
        let alg = Arc::new(doc.algebra.clone());
        let strategy = match cli.exhaustive_prime {
            Some(prime) => Strategy::Combined { prime },
            None => Strategy::Knitting,
        };
        Ok(Session {
            doc,
            alg,
            cli_seed: cli.seed,
            opts: EnumerationOptions {
                strategy,
                dim_bound: cli.dim_bound,
                ..EnumerationOptions::default()
            },
        })
    }

    fn universe(&self) -> Result<KUniverse> {
        KUniverse::build(&self.alg, &self.opts)
    }

    fn corr(&self) -> Result<Corr> {
        Corr::from_universe(self.universe()?, self.cli_seed)
    }

    /// A module by declared name, universe name, or a `+`-separated sum of those.
    fn module(&self, ku: &KUniverse, name: &str) -> Result<Module> {
        let mut acc = Module::zero(&self.alg);
        for part in name.split('+').map(str::trim) {
            let m = if let Some(d) = self.doc.modules.iter().find(|d| d.name == part) {
                Module::from_decl(self.alg.clone(), d)?
            } else if let Some(i) = ku.modules().find(part) {
                ku.modules().get(i).clone()
            } else {
                return Err(Error::UnknownObject(part.to_string()));
            };
            acc = acc.direct_sum(&m);
        }
        Ok(acc)
    }

    /// A complex by declared name, universe name, `pres(<module>)`, or a sum.
    fn complex(&self, ku: &KUniverse, name: &str) -> Result<Complex> {
        let mut acc = Complex::zero(&self.alg);
        for part in name.split('+').map(str::trim) {
            let c = if let Some(d) = self.doc.complexes.iter().find(|d| d.name == part) {
                Complex::from_decl(&self.alg, d)?
            } else if let Some(i) = ku.find(part) {
                ku.get(i).clone()
            } else if let Some(inner) = part.strip_prefix("pres(").and_then(|s| s.strip_suffix(')')) {
                Complex::presentation_of(&self.module(ku, inner)?)
            } else {
                return Err(Error::UnknownObject(part.to_string()));
            };
            acc = acc.direct_sum(&c);
        }
        Ok(acc)
    }
}

fn outcome(complete: bool) -> Outcome {
    if complete {
        Outcome::Complete
    } else {
        Outcome::Incomplete
    }
}

fn parse_weight(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::NotRepresentable(t.to_string())))
        .collect()
}

fn emit(out: &mut String, format: Format, text: String, value: Value) {
    match format {
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(&value).expect("serializable"));
            out.push('\n');
        }
        _ => out.push_str(&text),
    }
}

/// Runs a parsed command, appending its output to `out`.
pub fn run(cli: &Cli, out: &mut String) -> Result<Outcome> {
    let seed = cli.seed;
    match &cli.command {
        Command::Info { file } => {
            let s = Session::load(cli, file)?;
            let ku = s.universe()?;
            let mut text = String::new();
            writeln!(text, "algebra: {}", s.alg.summary()).unwrap();
            writeln!(text, "indecomposable modules: {}", ku.modules().len()).unwrap();
            writeln!(text, "indecomposable 2-term complexes: {}", ku.len()).unwrap();
            writeln!(text, "universe complete: {}", ku.is_complete()).unwrap();
            for n in ku.modules().notes() {
                writeln!(text, "note: {n}").unwrap();
            }
            writeln!(text, "seed: {seed}").unwrap();
            let value = json!({
                "algebra": s.alg.summary(),
                "modules": ku.modules().len(),
                "complexes": ku.len(),
                "complete": ku.is_complete(),
                "notes": ku.modules().notes(),
                "seed": seed,
            });
            emit(out, cli.format, text, value);
            Ok(outcome(ku.is_complete()))
        }
        Command::Indecs { file, in_k } => {
            let s = Session::load(cli, file)?;
            let ku = s.universe()?;
            if cli.format == Format::Dot {
                out.push_str(&ar_quiver_dot(&ku));
                return Ok(outcome(ku.is_complete()));
            }
            let mut text = String::new();
            let mut rows = Vec::new();
            if *in_k {
                for i in 0..ku.len() {
                    let c = ku.get(i);
                    writeln!(text, "{:<14} g = {:?}  {}", ku.name(i), c.g_vector(), c.display()).unwrap();
                    rows.push(json!({ "name": ku.name(i), "g_vector": c.g_vector(), "complex": c.to_json() }));
                }
            } else {
                let mu = ku.modules();
                for i in 0..mu.len() {
                    let m = mu.get(i);
                    writeln!(text, "{:<14} {}", mu.name(i), m.display()).unwrap();
                    rows.push(json!({ "name": mu.name(i), "module": m.to_json() }));
                }
            }
            writeln!(text, "complete: {}  seed: {seed}", ku.is_complete()).unwrap();
            let value = json!({ "objects": rows, "complete": ku.is_complete(), "seed": seed });
            emit(out, cli.format, text, value);
            Ok(outcome(ku.is_complete()))
        }
        Command::Hom { file, a, b, in_k } => {
            let s = Session::load(cli, file)?;
            let ku = s.universe()?;
            let (text, value) = if *in_k {
                let (x, y) = (s.complex(&ku, a)?, s.complex(&ku, b)?);
                let (h, e) = (x.hom_k(&y).dim(), x.ext(&y).dim());
                (
                    format!("dim Hom_K({a}, {b}) = {h}\ndim E({a}, {b}) = {e}\nseed: {seed}\n"),
                    json!({ "hom_k": h, "e": e, "seed": seed }),
                )
            } else {
                let (m, n) = (s.module(&ku, a)?, s.module(&ku, b)?);
                let h = m.hom(&n).dim();
                (format!("dim Hom({a}, {b}) = {h}\nseed: {seed}\n"), json!({ "hom": h, "seed": seed }))
            };
            emit(out, cli.format, text, value);
            Ok(Outcome::Complete)
        }
        Command::Silting { file } => {
            let s = Session::load(cli, file)?;
            let c = s.corr()?;
            let list = c.k.enumerate_two_term_silting()?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for u in &list {
                let r = c.k.silting_report(u)?;
                writeln!(
                    text,
                    "{}  g = {:?}  lambda = {}  rho = {}",
                    c.k.display(u),
                    r.g_vectors,
                    show(&r.lambda),
                    show(&r.rho)
                )
                .unwrap();
                rows.push(serde_json::to_value(&r).expect("serializable"));
            }
            writeln!(text, "{} silting objects  complete: {}  seed: {seed}", list.len(), c.is_complete()).unwrap();
            let value = json!({ "silting": rows, "count": list.len(), "complete": c.is_complete(), "seed": seed });
            emit(out, cli.format, text, value);
            Ok(outcome(c.is_complete()))
        }
        Command::Table { file } => {
            let s = Session::load(cli, file)?;
            let c = s.corr()?;
            let rows = c.correspondence_table()?;
            let mut text = String::new();
            for (i, r) in rows.iter().enumerate() {
                writeln!(text, "{:>2}. U      = {}", i + 1, c.k.display(&r.silting)).unwrap();
                writeln!(text, "    X      = {}", c.k.display(&r.cotorsion.x)).unwrap();
                writeln!(text, "    Y      = {}", c.k.display(&r.cotorsion.y)).unwrap();
                writeln!(text, "    thick  = {}", c.k.display(&r.thick)).unwrap();
                writeln!(text, "    wide   = {}", c.display_modules(&r.wide)).unwrap();
                writeln!(text, "    tors   = {}", c.display_modules(&r.torsion.t)).unwrap();
            }
            writeln!(text, "{} rows  complete: {}  seed: {seed}", rows.len(), c.is_complete()).unwrap();
            let value = json!({
                "rows": rows.iter().map(|r| c.row_json(r)).collect::<Vec<_>>(),
                "complete": c.is_complete(),
                "seed": seed,
            });
            emit(out, cli.format, text, value);
            Ok(outcome(c.is_complete()))
        }
        Command::Diagram { file } => {
            let s = Session::load(cli, file)?;
            let c = s.corr()?;
            if cli.format == Format::Dot {
                out.push_str(&c.hasse_dot(&c.thick_subcategories()?));
                return Ok(outcome(c.is_complete()));
            }
            let report = c.verify_main_diagram()?;
            let mut text = String::new();
            for e in &report.edges {
                writeln!(
                    text,
                    "{} {}  {}\n    lhs = {}\n    rhs = {}",
                    if e.pass { "PASS" } else { "FAIL" },
                    show(&e.silting),
                    e.edge,
                    show(&e.lhs),
                    show(&e.rhs)
                )
                .unwrap();
            }
            writeln!(
                text,
                "{} of {} edge checks pass  complete: {}  seed: {seed}",
                report.edges.iter().filter(|e| e.pass).count(),
                report.edges.len(),
                report.complete
            )
            .unwrap();
            let mut value = serde_json::to_value(&report).expect("serializable");
            value["seed"] = json!(seed);
            emit(out, cli.format, text, value);
            if !report.all_pass() {
                return Err(Error::Inconsistency("diagram does not commute".into()));
            }
            Ok(outcome(report.complete))
        }
        Command::Semistable {
            file,
            complex,
            module,
            notion,
            weight,
        } => {
            let s = Session::load(cli, file)?;
            let ku = s.universe()?;
            let need = |o: &Option<String>, what: &str| {
                o.clone()
                    .ok_or_else(|| Error::Precondition(format!("--{what} is required for this notion")))
            };
            match notion {
                Notion::M => {
                    let (xn, mn) = (need(complex, "complex")?, need(module, "module")?);
                    let (x, m) = (s.complex(&ku, &xn)?, s.module(&ku, &mn)?);
                    let (text, value) = match stability::det_semi_invariant(&x.minimize(), &m) {
                        Ok(si) => {
                            let ok = !si.value.is_zero();
                            (
                                format!(
                                    "s({xn}, {mn}) = {}\n{xn} is {}{mn}-semistable\nseed: {seed}\n",
                                    si.value,
                                    if ok { "" } else { "not " }
                                ),
                                json!({ "notion": "M", "semistable": ok, "value": si.value.to_string(), "seed": seed }),
                            )
                        }
                        Err(Error::NonSquare(p)) => (
                            format!("<[{xn}], [{mn}]> = {p} is non-zero\n{xn} is not {mn}-semistable\nseed: {seed}\n"),
                            json!({ "notion": "M", "semistable": false, "pairing": p, "seed": seed }),
                        ),
                        Err(e) => return Err(e),
                    };
                    emit(out, cli.format, text, value);
                    Ok(Outcome::Complete)
                }
                Notion::King => {
                    let mn = need(module, "module")?;
                    let m = s.module(&ku, &mn)?;
                    let theta = match (weight, complex) {
                        (Some(w), _) => parse_weight(w)?,
                        (None, Some(xn)) => s.complex(&ku, xn)?.g_vector(),
                        (None, None) => return Err(Error::Precondition("King needs --weight or --complex".into())),
                    };
                    let ok = stability::king_semistable(&m, &theta)?;
                    let text = format!(
                        "{mn} is {}semistable for theta = {theta:?}\nseed: {seed}\n",
                        if ok { "" } else { "not " }
                    );
                    emit(out, cli.format, text, json!({ "notion": "king", "theta": theta, "semistable": ok, "seed": seed }));
                    Ok(Outcome::Complete)
                }
                Notion::Numerical => {
                    let xn = need(complex, "complex")?;
                    let x = s.complex(&ku, &xn)?;
                    let d = match (weight, module) {
                        (Some(w), _) => parse_weight(w)?,
                        (None, Some(mn)) => dim_weight(&s.module(&ku, mn)?),
                        (None, None) => return Err(Error::Precondition("numerical needs --weight or --module".into())),
                    };
                    let budget = NumericalBudget {
                        mult_bound: cli.mult_bound,
                        samples: cli.samples,
                        seed,
                    };
                    let v = stability::is_numerically_semistable(&x, &d, &ku, budget)?;
                    let text = match &v {
                        NumericalVerdict::Unbalanced(p) => format!("<[{xn}], d> = {p} is non-zero: not semistable\n"),
                        NumericalVerdict::Refuted { source, pairing, .. } => format!(
                            "not semistable: inflation from {} with pairing {pairing}\n",
                            ku.display_set(source)
                        ),
                        NumericalVerdict::WithinBudget { candidates, .. } => format!(
                            "semistable within budget (mult-bound {}, samples {}, {candidates} candidates)\n",
                            budget.mult_bound, budget.samples
                        ),
                    } + &format!("seed: {seed}\n");
                    let mut value = v.to_json(&ku);
                    value["notion"] = json!("numerical");
                    emit(out, cli.format, text, value);
                    Ok(match v {
                        NumericalVerdict::WithinBudget { .. } => Outcome::Incomplete,
                        _ => Outcome::Complete,
                    })
                }
            }
        }
    }
}

fn show(v: &[String]) -> String {
    if v.is_empty() {
        "{0}".into()
    } else {
        format!("{{{}}}", v.join(", "))
    }
}

/// The AR quiver of the module universe: irreducible maps from almost split
/// sequences, with dashed edges for `τ`.
pub fn ar_quiver_dot(ku: &KUniverse) -> String {
    let mu = ku.modules();
    let mut out = String::from("digraph ar {\n  rankdir=LR;\n");
    for i in 0..mu.len() {
        writeln!(out, "  m{i} [label=\"{}\"];", mu.name(i)).unwrap();
    }
    let mut edges = std::collections::BTreeSet::new();
    for i in 0..mu.len() {
        let Ok(seq) = mu.get(i).ar_sequence() else { continue };
        let (Some(l), Ok(mids)) = (mu.index_of(&seq.left), mu.identify(&seq.middle)) else {
            continue;
        };
        for m in mids {
            edges.insert(format!("  m{l} -> m{m};"));
            edges.insert(format!("  m{m} -> m{i};"));
        }
        edges.insert(format!("  m{i} -> m{l} [style=dashed, constraint=false];"));
    }
    for e in edges {
        writeln!(out, "{e}").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Parses arguments, runs, prints, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let mut out = String::new();
    match run(&cli, &mut out) {
        Ok(o) => {
            print!("{out}");
            o.exit_code()
        }
        Err(e) => {
            print!("{out}");
            eprintln!("error: {e}");
            1
        }
    }
}

/// Exposed for callers that hold a set of universe ids.
pub fn member_names(ku: &KUniverse, s: &Members) -> Vec<String> {
    s.iter().map(|&i| ku.name(i).to_string()).collect()
}
