//! The `coglobe` command line: argument parsing, dispatch and rendering.
//!
//! [`run`] never exits the process; it returns the exit code so it can be
//! driven from tests. Exit codes: 0 pass, 1 validation failure, 2 parse or
//! usage error, 3 resource bound exceeded.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chain::{BasedComplex, Cell, TensorChain};
use crate::coalgebra::{validate_cosymmetric, Coalgebra, CoalgebraMap, CoalgebraMapDoc};
use crate::error::{Error, Result};
use crate::globular::{
    reconstruct_map, representable, validate_globular, GlobularCoalgebra, GlobularDoc, GlobularSet,
};
use crate::omega::{check_omega_axioms, compare_atoms, oriental, validate_sadc, xi, xi_lifted, AxiomSampling, Bounds, OmegaCat};
use crate::report::{Report, Violation};
use crate::ring::{Ring, RingKind, F2};
use crate::selftest;
use crate::simplicial::{cohomology_f2, steenrod_square, ComplexFile, SimplicialComplex, SteenrodCoalgebra};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUNDS: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "coglobe", version, about = "Globular and Steenrod coalgebras, atoms and orientals, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the globular relations of a globular set.
    ValidateGlobular {
        #[command(flatten)]
        source: GlobularSource,
        #[command(flatten)]
        out: Output,
    },
    /// Check the cosymmetry relation and counit of a coalgebra.
    ValidateCoalgebra {
        #[command(flatten)]
        source: AnySource,
        #[arg(long, value_parser = parse_ring)]
        ring: Option<RingKind>,
        /// Highest coproduct index checked [default: top degree + 2].
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Check that an integral complex is a strong augmented directed complex.
    ValidateSadc {
        #[command(flatten)]
        source: AnySource,
        #[command(flatten)]
        out: Output,
    },
    /// Generate the oriental of the n-simplex.
    Orientals {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "100000,64")]
        bounds: Bounds,
        /// Also check the ω-category laws exhaustively.
        #[arg(long)]
        axioms: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Generate the ω-category of a coalgebra from its atoms.
    Xi {
        #[command(flatten)]
        source: AnySource,
        #[arg(long, value_parser = parse_ring)]
        ring: Option<RingKind>,
        #[arg(long, default_value = "100000,64")]
        bounds: Bounds,
        #[command(flatten)]
        out: Output,
    },
    /// Compare the cup-i atoms of the n-simplex with its Steiner atoms.
    CompareAtoms {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Reconstruct a globular map from a coalgebra map between globular coalgebras.
    Reconstruct {
        /// `{ "domain": ..., "codomain": ..., "images": { cell: chain } }`;
        /// domain and codomain default to the `--globular` set.
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        globular: Option<PathBuf>,
        #[arg(long, value_parser = parse_ring)]
        ring: Option<RingKind>,
        #[command(flatten)]
        out: Output,
    },
    /// Print the cup-i coproducts of the simplices of a complex.
    CupI {
        #[command(flatten)]
        source: SimplicialSource,
        #[arg(long)]
        i: usize,
        /// Restrict to one simplex, e.g. `[012]`.
        #[arg(long)]
        cell: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Apply Sq^k to a basis of the mod 2 cohomology of a complex.
    Sq {
        #[command(flatten)]
        source: SimplicialSource,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GlobularSource {
    /// The representable globe of dimension n.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    globular: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SimplicialSource {
    /// The standard n-simplex.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    complex: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct AnySource {
    /// The standard n-simplex.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    complex: Option<PathBuf>,
    #[arg(long)]
    globular: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include wall-clock time; output is then no longer reproducible.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_ring(s: &str) -> std::result::Result<RingKind, String> {
    s.parse()
}

/// The input to a reconstruction.
#[derive(Debug, Deserialize, Serialize)]
pub struct ReconstructFile {
    #[serde(default)]
    pub domain: Option<GlobularDoc>,
    #[serde(default)]
    pub codomain: Option<GlobularDoc>,
    #[serde(flatten)]
    pub map: CoalgebraMapDoc,
}

/// What a verb produced: a report, the verb-specific result, and text lines.
struct Outcome {
    report: Report,
    result: Value,
    text: Vec<(String, String)>,
}

impl Outcome {
    fn new(report: Report) -> Self {
        Outcome { report, result: Value::Null, text: Vec::new() }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        if self.result.is_null() {
            self.result = json!({});
        }
        self.result[key] = value;
        self
    }

    fn line(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.text.push((key.into(), value.to_string()));
        self
    }
}

/// Parses `args` (including the program name), runs the verb and writes the
/// rendered output. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(stderr, "{rendered}") } else { write!(stdout, "{rendered}") };
            return code;
        }
    };
    let (verb, input, out) = describe(&cli.command);
    let start = Instant::now();
    let outcome = dispatch(&cli.command);
    let elapsed = start.elapsed();
    match outcome {
        Ok(o) => {
            let code = if o.report.pass { EXIT_PASS } else { EXIT_FAIL };
            render(stdout, verb, &input, out, &o, out.timing.then_some(elapsed.as_secs_f64() * 1000.0));
            code
        }
        Err(e) => {
            let code = exit_code(&e);
            if code == EXIT_FAIL {
                // an input that fails a precondition is a failed check, not a crash
                let mut report = Report::new();
                report.push(Violation::new(e.to_string()));
                render(stdout, verb, &input, out, &Outcome::new(report), out.timing.then_some(elapsed.as_secs_f64() * 1000.0));
            } else {
                let _ = writeln!(stderr, "error: {e}");
            }
            code
        }
    }
}

/// The exit code an error maps to.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded(_) => EXIT_BOUNDS,
        Error::Parse(_) | Error::Json(_) | Error::Io(_) | Error::UnknownCell(_) | Error::RingCapability { .. } => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

fn describe(command: &Command) -> (&'static str, BTreeMap<&'static str, Value>, &Output) {
    let mut input = BTreeMap::new();
    let mut put = |k: &'static str, v: Value| {
        if !v.is_null() {
            input.insert(k, v);
        }
    };
    let path = |p: &Option<PathBuf>| p.as_ref().map(|p| Value::from(p.display().to_string())).unwrap_or(Value::Null);
    let ring = |r: &Option<RingKind>| r.map(|r| Value::from(r.name())).unwrap_or(Value::Null);
    match command {
        Command::ValidateGlobular { source, out } => {
            put("n", json!(source.n));
            put("globular", path(&source.globular));
            ("validate-globular", input, out)
        }
        Command::ValidateCoalgebra { source, ring: r, k, out } => {
            put("n", json!(source.n));
            put("complex", path(&source.complex));
            put("globular", path(&source.globular));
            put("ring", ring(r));
            put("k", json!(k));
            ("validate-coalgebra", input, out)
        }
        Command::ValidateSadc { source, out } => {
            put("n", json!(source.n));
            put("complex", path(&source.complex));
            put("globular", path(&source.globular));
            ("validate-sadc", input, out)
        }
        Command::Orientals { n, bounds, axioms, out } => {
            put("n", json!(n));
            put("bounds", json!(format!("{},{}", bounds.max_elements, bounds.max_coeff)));
            put("axioms", json!(axioms));
            ("orientals", input, out)
        }
        Command::Xi { source, ring: r, bounds, out } => {
            put("n", json!(source.n));
            put("complex", path(&source.complex));
            put("globular", path(&source.globular));
            put("ring", ring(r));
            put("bounds", json!(format!("{},{}", bounds.max_elements, bounds.max_coeff)));
            ("xi", input, out)
        }
        Command::CompareAtoms { n, out } => {
            put("n", json!(n));
            ("compare-atoms", input, out)
        }
        Command::Reconstruct { map, globular, ring: r, out } => {
            put("map", json!(map.display().to_string()));
            put("globular", path(globular));
            put("ring", ring(r));
            ("reconstruct", input, out)
        }
        Command::CupI { source, i, cell, out } => {
            put("n", json!(source.n));
            put("complex", path(&source.complex));
            put("i", json!(i));
            put("cell", json!(cell));
            ("cup-i", input, out)
        }
        Command::Sq { source, k, out } => {
            put("n", json!(source.n));
            put("complex", path(&source.complex));
            put("k", json!(k));
            ("sq", input, out)
        }
        Command::Selftest { seed, out } => {
            put("seed", json!(seed));
            ("selftest", input, out)
        }
    }
}

fn render(
    w: &mut impl Write,
    verb: &str,
    input: &BTreeMap<&'static str, Value>,
    out: &Output,
    o: &Outcome,
    elapsed_ms: Option<f64>,
) {
    let _ = match out.format {
        Format::Json => {
            let mut doc = json!({
                "command": verb,
                "input": input,
                "pass": o.report.pass,
                "violations": o.report.violations,
            });
            if !o.result.is_null() {
                doc["result"] = o.result.clone();
            }
            if let Some(ms) = elapsed_ms {
                doc["elapsed_ms"] = json!(ms);
            }
            writeln!(w, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
        Format::Text => {
            let mut lines: Vec<(String, String)> = vec![("command".into(), verb.into())];
            for (k, v) in input {
                let v = v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string());
                lines.push((format!("input.{k}"), v));
            }
            lines.push(("pass".into(), o.report.pass.to_string()));
            lines.extend(o.text.iter().cloned());
            for v in &o.report.violations {
                lines.push(("violation".into(), describe_violation(v)));
            }
            if let Some(ms) = elapsed_ms {
                lines.push(("elapsed_ms".into(), format!("{ms:.1}")));
            }
            let width = lines.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            lines.iter().try_for_each(|(k, v)| writeln!(w, "{k:<width$}  {v}"))
        }
    };
}

fn describe_violation(v: &Violation) -> String {
    let mut s = v.check.clone();
    if let Some(c) = &v.cell {
        s.push_str(&format!(" at {c}"));
    }
    if let Some(k) = v.k {
        s.push_str(&format!(" (k = {k})"));
    }
    match (&v.lhs, &v.rhs) {
        (Some(l), Some(r)) => s.push_str(&format!(": {l} vs {r}")),
        (Some(l), None) => s.push_str(&format!(": {l}")),
        _ => {}
    }
    s
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_globular(path: &Path) -> Result<GlobularSet> {
    GlobularSet::from_doc(&read_json(path)?)
}

fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    SimplicialComplex::from_file(&read_json::<ComplexFile>(path)?)
}

fn simplicial(n: Option<usize>, complex: &Option<PathBuf>) -> Result<SimplicialComplex> {
    match (n, complex) {
        (Some(n), _) => Ok(SimplicialComplex::standard_simplex(n)),
        (None, Some(p)) => load_complex(p),
        (None, None) => Err(Error::Parse("one of --n or --complex is required".into())),
    }
}

fn steenrod_only(ring: Option<RingKind>) -> Result<()> {
    match ring {
        Some(RingKind::Integers) => Err(Error::Parse("cup-i coalgebras are defined over f2 only".into())),
        _ => Ok(()),
    }
}

fn dispatch(command: &Command) -> Result<Outcome> {
    match command {
        Command::ValidateGlobular { source, .. } => {
            let set = match (&source.globular, source.n) {
                (Some(p), _) => load_globular(p)?,
                (None, Some(n)) => representable(n, n)?,
                _ => unreachable!("clap requires one source"),
            };
            let counts: Vec<usize> = (0..=set.truncation()).map(|d| set.count(d)).collect();
            Ok(Outcome::new(validate_globular(&set))
                .with("cells_by_dim", json!(counts))
                .line("cells_by_dim", format!("{counts:?}")))
        }
        Command::ValidateCoalgebra { source, ring, k, .. } => {
            if let Some(p) = &source.globular {
                let set = load_globular(p)?;
                return Ok(match ring.unwrap_or(RingKind::Integers) {
                    RingKind::Integers => cosymmetry(&GlobularCoalgebra::<BigInt>::new(&set)?, *k),
                    RingKind::F2 => cosymmetry(&GlobularCoalgebra::<F2>::new(&set)?, *k),
                });
            }
            steenrod_only(*ring)?;
            let c = SteenrodCoalgebra::new(simplicial(source.n, &source.complex)?);
            Ok(cosymmetry(&c, *k))
        }
        Command::ValidateSadc { source, .. } => {
            let complex: BasedComplex<BigInt> = match &source.globular {
                Some(p) => GlobularCoalgebra::<BigInt>::new(&load_globular(p)?)?.complex().clone(),
                None => simplicial(source.n, &source.complex)?.chains(),
            };
            Ok(Outcome::new(validate_sadc(&complex))
                .with("ranks", json!(complex.ranks()))
                .line("ranks", format!("{:?}", complex.ranks())))
        }
        Command::Orientals { n, bounds, axioms, .. } => {
            let cat = oriental(*n, *bounds)?;
            let complex = SimplicialComplex::standard_simplex(*n).chains::<BigInt>();
            let mut o = omega_outcome(&cat, &complex, Report::new());
            if *axioms {
                let r = check_omega_axioms(&cat, AxiomSampling::Exhaustive);
                o = o
                    .with("axioms", json!({"pairs": r.pairs, "triples": r.triples, "interchanges": r.interchanges}))
                    .line("axioms", format!("{} pairs, {} triples, {} interchanges", r.pairs, r.triples, r.interchanges));
                o.report.merge(r.report);
            }
            Ok(o)
        }
        Command::Xi { source, ring, bounds, .. } => {
            if let Some(p) = &source.globular {
                let set = load_globular(p)?;
                return match ring.unwrap_or(RingKind::Integers) {
                    RingKind::Integers => {
                        let c = GlobularCoalgebra::<BigInt>::new(&set)?;
                        Ok(omega_outcome(&xi(&c, *bounds)?, c.complex(), Report::new()))
                    }
                    RingKind::F2 => {
                        let c = GlobularCoalgebra::<F2>::new(&set)?;
                        Ok(omega_outcome(&xi(&c, *bounds)?, c.complex(), Report::new()))
                    }
                };
            }
            let c = SteenrodCoalgebra::new(simplicial(source.n, &source.complex)?);
            match ring.unwrap_or(RingKind::F2) {
                RingKind::F2 => Ok(omega_outcome(&xi(&c, *bounds)?, c.complex(), Report::new())),
                RingKind::Integers => {
                    let integral = c.simplicial().chains::<BigInt>();
                    Ok(omega_outcome(&xi_lifted(&c, *bounds)?, &integral, Report::new()))
                }
            }
        }
        Command::CompareAtoms { n, .. } => {
            let cells = (1usize << (n + 1)) - 1;
            Ok(Outcome::new(compare_atoms(*n)).with("simplices", json!(cells)).line("simplices", cells))
        }
        Command::Reconstruct { map, globular, ring, .. } => {
            let file: ReconstructFile = read_json(map)?;
            let fallback = globular.as_deref().map(load_globular).transpose()?;
            let side = |doc: &Option<GlobularDoc>, which: &str| -> Result<GlobularSet> {
                match (doc, &fallback) {
                    (Some(d), _) => GlobularSet::from_doc(d),
                    (None, Some(g)) => Ok(g.clone()),
                    (None, None) => Err(Error::Parse(format!("no {which} in the map file and no --globular"))),
                }
            };
            let (x, y) = (side(&file.domain, "domain")?, side(&file.codomain, "codomain")?);
            match ring.unwrap_or(RingKind::Integers) {
                RingKind::Integers => reconstruct_outcome::<BigInt>(&file.map, &x, &y),
                RingKind::F2 => reconstruct_outcome::<F2>(&file.map, &x, &y),
            }
        }
        Command::CupI { source, i, cell, .. } => {
            let c = SteenrodCoalgebra::new(simplicial(source.n, &source.complex)?);
            let cx = c.complex();
            let cells: Vec<Cell> = match cell {
                Some(name) => vec![cx.require(name)?],
                None => cx.all_cells().collect(),
            };
            let mut o = Outcome::new(Report::new());
            let mut rows = Vec::new();
            for x in cells {
                let delta = c.delta_cell(x, *i);
                rows.push(json!({"cell": cx.name(x), "coproduct": tensor_terms(cx, &delta)}));
                o = o.line(format!("Δ{i} {}", cx.name(x)), cx.format_tensor(&delta));
            }
            Ok(o.with("coproducts", Value::Array(rows)))
        }
        Command::Sq { source, k, .. } => {
            let c = SteenrodCoalgebra::new(simplicial(source.n, &source.complex)?);
            let cx = c.complex();
            let h = cohomology_f2(cx);
            let mut o = Outcome::new(Report::new());
            let mut rows = Vec::new();
            let mut any = false;
            for p in 0..h.ranks().len() {
                for (j, alpha) in h.generators(p).iter().enumerate() {
                    let square = steenrod_square(&c, *k, alpha)?;
                    let class = if square.degree() < h.ranks().len() { h.class_of(&square)? } else { Vec::new() };
                    let nonzero = class.iter().any(|b| *b);
                    any |= nonzero;
                    let class_bits: String = class.iter().map(|b| if *b { '1' } else { '0' }).collect();
                    rows.push(json!({
                        "degree": p,
                        "generator": alpha.to_doc(cx),
                        "square": square.to_doc(cx),
                        "class": class,
                        "nonzero": nonzero,
                    }));
                    o = o.line(
                        format!("Sq{k} a{p}.{j}"),
                        format!("degree {} class [{class_bits}]{}", square.degree(), if nonzero { " non-zero" } else { "" }),
                    );
                }
            }
            Ok(o.with("ranks", json!(h.ranks()))
                .with("squares", Value::Array(rows))
                .with("nonzero", json!(any))
                .line("ranks", format!("{:?}", h.ranks()))
                .line("nonzero", any))
        }
        Command::Selftest { seed, .. } => {
            let outcomes = selftest::run_all(*seed);
            let mut report = Report::new();
            let mut o_rows = Vec::new();
            let mut lines = Vec::new();
            for o in &outcomes {
                if !o.pass {
                    report.push(Violation::new(format!("criterion {}: {}", o.id, o.title)).sides(o.detail.clone(), "pass"));
                }
                o_rows.push(json!({"id": o.id, "title": o.title, "pass": o.pass, "detail": o.detail}));
                lines.push((format!("criterion {:>2}", o.id), format!("{} {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.title, o.detail)));
            }
            let mut out = Outcome::new(report).with("criteria", Value::Array(o_rows));
            out.text = lines;
            Ok(out)
        }
    }
}

fn cosymmetry<R: Ring>(c: &impl Coalgebra<R>, k: Option<usize>) -> Outcome {
    let kmax = k.unwrap_or_else(|| c.default_kmax());
    let ranks = c.complex().ranks();
    Outcome::new(validate_cosymmetric(c, kmax))
        .with("ranks", json!(ranks))
        .with("kmax", json!(kmax))
        .line("ranks", format!("{ranks:?}"))
        .line("kmax", kmax)
}

fn omega_outcome<R: Ring>(cat: &OmegaCat<R>, complex: &BasedComplex<R>, report: Report) -> Outcome {
    let counts = cat.counts_by_dim();
    let generators = (0..cat.len()).filter(|&i| cat.is_generator(i)).count();
    Outcome::new(report)
        .with("elements", json!(cat.len()))
        .with("generators", json!(generators))
        .with("counts_by_dim", json!(counts))
        .with("omega", serde_json::to_value(cat.to_doc(complex)).expect("serializable"))
        .line("elements", cat.len())
        .line("generators", generators)
        .line("counts_by_dim", format!("{counts:?}"))
}

fn reconstruct_outcome<R: Ring>(doc: &CoalgebraMapDoc, x: &GlobularSet, y: &GlobularSet) -> Result<Outcome> {
    let cx = GlobularCoalgebra::<R>::new(x)?;
    let cy = GlobularCoalgebra::<R>::new(y)?;
    let f = CoalgebraMap::from_doc(doc, cx.complex(), cy.complex())?;
    let g = reconstruct_map(&f, &cx, &cy)?;
    let mut o = Outcome::new(Report::new()).with("map", json!(g.to_doc(x, y)));
    for c in x.all_cells().filter(|c| !x.is_degenerate(*c)) {
        o = o.line(format!("F({})", x.name(c)), y.name(g.image(c)));
    }
    Ok(o)
}

fn tensor_terms<R: Ring>(complex: &BasedComplex<R>, t: &TensorChain<R>) -> Value {
    Value::Array(
        t.terms()
            .map(|((a, b), c)| json!({"left": complex.name(*a), "right": complex.name(*b), "coeff": c.to_string().parse::<i64>().map(Value::from).unwrap_or_else(|_| Value::from(c.to_string()))}))
            .collect(),
    )
}
