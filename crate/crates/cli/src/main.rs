use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use ehrhart_core::conebox::{box_points, ray_generators, BoxMode};
use ehrhart_core::ehrhart::{
    ab_decomposition_limited, ab_from_hstar, boundary_terms, check_inequalities,
    ehrhart_quasipolynomial_limited, hstar_betke_mcmullen, hstar_by_counting_limited,
    hstar_stapledon, palindromic_dual_check_limited, HStarResult, Method, Ray,
};
use ehrhart_core::exact::format_rational;
use ehrhart_core::io::{parse_generators, parse_polytope, polytope_to_json, ResultDocument};
use ehrhart_core::polytope::hexagon_family;
use ehrhart_core::scan::ScanLimit;
use ehrhart_core::triangulation::{
    boundary_triangulation_with_order, placing_triangulation_with_order,
};
use ehrhart_core::{Error, IntPolynomial, Polytope, Triangulation};

/// Ehrhart quasipolynomials and h*-polynomials of rational polytopes.
#[derive(Parser, Debug)]
#[command(name = "ehrhart", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// h*-polynomial by one or all methods; `all` fails when they disagree.
    Hstar {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// a/b decomposition of (1 + ... + z^(ell-1)) h*.
    Ab {
        file: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Coefficient inequalities on h*.
    Ineq {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Count)]
        method: MethodArg,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Polar dual, with the lattice-dual / b = 0 / palindromic check.
    Dual {
        file: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Index L if the polytope is L-reflexive.
    Reflexive {
        file: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Lattice points in the dilate tP (or its interior).
    Count {
        file: PathBuf,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        interior: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Ehrhart quasipolynomial constituents.
    Quasi {
        file: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Height polynomial of the lattice points in a fundamental parallelepiped.
    Boxpoly {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Open)]
        mode: ModeArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The L-reflexive hexagon of odd index L, or its dual.
    Hexagon {
        #[arg(long)]
        index: u64,
        #[arg(long)]
        dual: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Cross-method equality, box symmetries, inequalities and a/b invariants.
    Check {
        file: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct EngineArgs {
    /// Denominator override; a positive multiple of the vertex denominator.
    #[arg(long)]
    q: Option<u64>,
    /// Interior ray "a1,...,ad;ell" for the boundary method.
    #[arg(long)]
    ray: Option<String>,
    /// Shuffle the triangulation insertion order with this seed.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Count,
    Bm,
    Stapledon,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Open,
    Halfopen,
}

enum Failure {
    Core(Error),
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Check(_) => 3,
            Failure::Core(e) => match e {
                Error::Parse(_) | Error::EmptyInput | Error::DimensionMismatch { .. } => 1,
                Error::EngineMismatch(_) | Error::InexactDivision => 3,
                Error::ScanTooLarge { .. } => 4,
                _ => 2,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Input(m) | Failure::Check(m) => m.clone(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

fn read_polytope(path: &Path) -> Result<Polytope, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_polytope(&text)?)
}

fn emit(format: Format, text: String, value: Value) -> Outcome {
    Ok(match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("json values serialize") + "\n",
    })
}

fn vector_text(v: &[impl ToString]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn run(command: Command) -> Outcome {
    let limit = ScanLimit::from_env();
    match command {
        Command::Hstar { file, method, engine, out } => {
            let p = read_polytope(&file)?;
            let results = compute_hstar(&p, method, &engine, limit)?;
            let docs = results
                .iter()
                .map(ResultDocument::from_hstar)
                .collect::<Result<Vec<_>, _>>()?;
            let mut text = String::new();
            for r in &results {
                let _ = writeln!(text, "{}: {}  ({})", r.method, vector_text(&r.vector()), r.hstar);
            }
            let value = if docs.len() == 1 {
                serde_json::to_value(&docs[0])
            } else {
                serde_json::to_value(&docs)
            }
            .expect("documents serialize");
            emit(out.format, text, value)
        }
        Command::Ab { file, out } => {
            let p = read_polytope(&file)?;
            let ab = ab_decomposition_limited(&p, limit)?;
            let h = hstar_by_counting_limited(&p, None, limit)?;
            let doc = ResultDocument::from_hstar(&h)?;
            let text = format!(
                "q = {}, d = {}, s = {}, ell = {}\nhbar = {}\na = {}\nb = {}\n",
                ab.q, ab.d, ab.s, ab.ell, ab.hbar, ab.a, ab.b
            );
            emit(out.format, text, serde_json::to_value(&doc).expect("document serializes"))
        }
        Command::Ineq { file, method, engine, out } => {
            let p = read_polytope(&file)?;
            let results = compute_hstar(&p, method, &engine, limit)?;
            let h = &results[0];
            let report = check_inequalities(h);
            let doc = ResultDocument::from_hstar(h)?;
            if !report.passed {
                let lines: Vec<String> = report
                    .violations
                    .iter()
                    .map(|v| format!("family {} at i = {}: {} < {}", v.family, v.index, v.lhs, v.rhs))
                    .collect();
                return Err(Failure::Check(format!(
                    "inequalities violated for h* = {}: {}",
                    h.hstar,
                    lines.join("; ")
                )));
            }
            let text = format!("h* = {}\ninequalities: pass\n", vector_text(&h.vector()));
            emit(out.format, text, serde_json::to_value(&doc.inequalities).expect("serializes"))
        }
        Command::Dual { file, out } => {
            let p = read_polytope(&file)?;
            let dual = p.dual()?;
            let check = palindromic_dual_check_limited(&p, limit)?;
            let mut text = String::from("dual vertices:\n");
            for v in dual.vertices() {
                let coords: Vec<String> = v.iter().map(format_rational).collect();
                let _ = writeln!(text, "  ({})", coords.join(", "));
            }
            let _ = writeln!(
                text,
                "dual is lattice: {}\nb = 0: {}\nh* palindromic: {}",
                check.is_dual_lattice, check.b_is_zero, check.hstar_palindromic
            );
            let dual_doc: Value =
                serde_json::from_str(&polytope_to_json(&dual)).expect("polytope json parses");
            emit(
                out.format,
                text,
                json!({
                    "dual": dual_doc,
                    "is_dual_lattice": check.is_dual_lattice,
                    "b_is_zero": check.b_is_zero,
                    "hstar_palindromic": check.hstar_palindromic,
                }),
            )
        }
        Command::Reflexive { file, out } => {
            let p = read_polytope(&file)?;
            let index = p.reflexive_index();
            let text = match index {
                Some(l) => format!("{l}-reflexive\n"),
                None => "not reflexive of any index\n".to_owned(),
            };
            emit(out.format, text, json!({ "reflexive": index.is_some(), "index": index }))
        }
        Command::Count { file, t, interior, out } => {
            let p = read_polytope(&file)?;
            let n = p.lattice_point_count_limited(t, interior, limit)?;
            emit(out.format, format!("{n}\n"), json!({ "t": t, "interior": interior, "count": n }))
        }
        Command::Quasi { file, out } => {
            let p = read_polytope(&file)?;
            let quasi = ehrhart_quasipolynomial_limited(&p, limit)?;
            let constituents: Vec<Vec<String>> = quasi
                .constituents
                .iter()
                .map(|c| c.coeffs().iter().map(format_rational).collect())
                .collect();
            emit(
                out.format,
                format!("{quasi}\n"),
                json!({ "period": quasi.period, "constituents": constituents }),
            )
        }
        Command::Boxpoly { file, mode, out } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", file.display())))?;
            let w = parse_generators(&text)?;
            let mode = match mode {
                ModeArg::Open => BoxMode::Open,
                ModeArg::Halfopen => BoxMode::HalfOpen,
            };
            let pts = box_points(&w, mode);
            let poly = pts.height_polynomial();
            let points: Vec<Vec<String>> = pts
                .points
                .iter()
                .map(|x| x.iter().map(ToString::to_string).collect())
                .collect();
            let coeffs: Vec<String> = poly.coeffs().iter().map(ToString::to_string).collect();
            emit(
                out.format,
                format!("{poly}\n"),
                json!({ "polynomial": coeffs, "points": points }),
            )
        }
        Command::Hexagon { index, dual, out } => {
            let p = hexagon_family(index, dual)?;
            let mut text = format!("{}:\n", p.name().unwrap_or("hexagon"));
            for v in p.vertices() {
                let coords: Vec<String> = v.iter().map(format_rational).collect();
                let _ = writeln!(text, "  ({})", coords.join(", "));
            }
            let value: Value = serde_json::from_str(&polytope_to_json(&p)).expect("polytope json parses");
            emit(out.format, text, value)
        }
        Command::Check { file, engine, out } => {
            let p = read_polytope(&file)?;
            check(&p, &engine, limit, out.format)
        }
    }
}

fn insertion_order(p: &Polytope, seed: Option<u64>) -> Vec<usize> {
    let mut order: Vec<usize> = (0..p.vertices().len()).collect();
    if let Some(seed) = seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    order
}

fn resolve_ray(p: &Polytope, engine: &EngineArgs, limit: ScanLimit) -> Result<Ray, Failure> {
    match &engine.ray {
        Some(text) => Ok(text.parse::<Ray>()?),
        None => {
            let (ell, a) = p.smallest_interior_dilate_limited(limit)?;
            Ok(Ray::new(a, ell))
        }
    }
}

fn run_method(
    p: &Polytope,
    method: Method,
    engine: &EngineArgs,
    limit: ScanLimit,
) -> Result<HStarResult, Failure> {
    let order = insertion_order(p, engine.seed);
    Ok(match method {
        Method::Count => hstar_by_counting_limited(p, engine.q, limit)?,
        Method::BetkeMcMullen => {
            let t = placing_triangulation_with_order(p, &order);
            hstar_betke_mcmullen(p, engine.q, Some(&t))?
        }
        Method::Stapledon => {
            let ray = resolve_ray(p, engine, limit)?;
            let t = boundary_triangulation_with_order(p, &order)?;
            hstar_stapledon(p, engine.q, Some(&ray), Some(&t))?
        }
    })
}

fn compute_hstar(
    p: &Polytope,
    method: MethodArg,
    engine: &EngineArgs,
    limit: ScanLimit,
) -> Result<Vec<HStarResult>, Failure> {
    let methods: &[Method] = match method {
        MethodArg::Count => &[Method::Count],
        MethodArg::Bm => &[Method::BetkeMcMullen],
        MethodArg::Stapledon => &[Method::Stapledon],
        MethodArg::All => &Method::ALL,
    };
    let results = methods
        .iter()
        .map(|&m| run_method(p, m, engine, limit))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(bad) = results.iter().find(|r| r.hstar != results[0].hstar) {
        return Err(Error::EngineMismatch(format!(
            "{} gives {} but {} gives {}",
            results[0].method, results[0].hstar, bad.method, bad.hstar
        ))
        .into());
    }
    Ok(results)
}

fn symmetric_or_zero(b: &IntPolynomial, window: usize) -> bool {
    b.is_zero() || b.is_palindromic(window)
}

fn box_symmetries(p: &Polytope, q: u64, ray: &Ray, full: &Triangulation, boundary: &Triangulation) -> Result<Vec<String>, Failure> {
    let mut bad = Vec::new();
    for face in full.faces() {
        let w = ray_generators(face, p, q)?;
        let b = ehrhart_core::conebox::box_polynomial(&w);
        if !symmetric_or_zero(&b, q as usize * face.len()) {
            bad.push(format!("B({face}) = {b}"));
        }
    }
    for term in boundary_terms(p, q, ray, boundary)? {
        let height = q as usize * term.face.len();
        if !symmetric_or_zero(&term.box_poly, height) {
            bad.push(format!("B({}) = {}", term.face, term.box_poly));
        }
        if !symmetric_or_zero(&term.primed_box_poly, height + ray.ell as usize) {
            bad.push(format!("B({}') = {}", term.face, term.primed_box_poly));
        }
    }
    Ok(bad)
}

fn check(p: &Polytope, engine: &EngineArgs, limit: ScanLimit, format: Format) -> Outcome {
    let mut rows: Vec<(&str, Result<String, String>)> = Vec::new();

    let hstar = compute_hstar(p, MethodArg::All, engine, limit);
    let h = match &hstar {
        Ok(results) => {
            rows.push(("methods agree", Ok(vector_text(&results[0].vector()))));
            Some(results[0].clone())
        }
        Err(Failure::Core(e @ Error::EngineMismatch(_))) => {
            rows.push(("methods agree", Err(e.to_string())));
            None
        }
        Err(_) => return hstar.map(|_| String::new()),
    };

    let order = insertion_order(p, engine.seed);
    let ray = resolve_ray(p, engine, limit)?;
    let q = h.as_ref().map_or(engine.q.unwrap_or(p.denominator()), |h| h.q);
    let full = placing_triangulation_with_order(p, &order);
    let boundary = boundary_triangulation_with_order(p, &order)?;
    let bad = box_symmetries(p, q, &ray, &full, &boundary)?;
    rows.push((
        "box symmetries",
        if bad.is_empty() {
            Ok(format!("{} full and {} boundary faces", full.faces().len(), boundary.faces().len()))
        } else {
            Err(bad.join("; "))
        },
    ));

    if let Some(h) = &h {
        let report = check_inequalities(h);
        rows.push((
            "inequalities",
            if report.passed {
                Ok(String::new())
            } else {
                Err(format!("{} violations", report.violations.len()))
            },
        ));
        rows.push((
            "a/b invariants",
            match ab_from_hstar(h) {
                Ok(ab) => Ok(format!("a = {}, b = {}", ab.a, ab.b)),
                Err(e) => Err(e.to_string()),
            },
        ));
    }
    if engine.q.is_none() {
        rows.push((
            "a/b from boundary sums",
            match ab_decomposition_limited(p, limit) {
                Ok(_) => Ok(String::new()),
                Err(e @ Error::ScanTooLarge { .. }) => return Err(e.into()),
                Err(e) => Err(e.to_string()),
            },
        ));
    }

    let passed = rows.iter().all(|(_, r)| r.is_ok());
    let mut text = String::new();
    for (name, r) in &rows {
        let (status, detail) = match r {
            Ok(d) => ("pass", d),
            Err(d) => ("FAIL", d),
        };
        let _ = write!(text, "{status} {name}");
        if !detail.is_empty() {
            let _ = write!(text, ": {detail}");
        }
        text.push('\n');
    }
    let value = json!({
        "passed": passed,
        "checks": rows
            .iter()
            .map(|(name, r)| json!({
                "name": name,
                "passed": r.is_ok(),
                "detail": match r { Ok(d) | Err(d) => d },
            }))
            .collect::<Vec<_>>(),
    });
    let rendered = emit(format, text, value)?;
    if passed {
        Ok(rendered)
    } else {
        print!("{rendered}");
        Err(Failure::Check("check failed".into()))
    }
}
