//! Command-line front end. Exit codes: 0 success, 1 input error, 2 violated
//! mathematical contract, 3 verification failure.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analysis::{
    analyze, is_faithful_matrices, is_faithful_matrices_at, is_faithful_oracle, is_faithful_theorem,
    reconstruct_matrix, FaithfulnessVerdict, Method,
};
use crate::dihedral::{catalog, irrep_curve, irrep_kernel, geometric_representation, IrrepLabel, MatrixRep};
use crate::error::{Error, Result};
use crate::formats::{coxeter_from_json, matrixrep_to_json, rep_from_json, RepInput};
use crate::selftest::{faithfulness_sweep, product_identity_sweep, reconstruction_sweep, roundtrip_sweep, SweepReport};
use crate::spectrum::{
    curve_poly, curvesets_from_json, curvesets_to_json, spectrum_of_matrices, spectrum_of_spec, svg_string, Curve,
    CurveSet, PairCurves,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "coxspec", version, about = "Proper joint spectra of dihedral and Coxeter group representations")]
pub struct Cli {
    /// Largest order searched for s_i s_j
    #[arg(long, global = true, default_value_t = 64)]
    pub max_order: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the irreducible representations of the dihedral group of order 2n
    Catalog { n: u32 },
    /// Pair spectrum of a representation spec or matrix representation
    Spectrum {
        input: PathBuf,
        /// Generator pair of a matrix representation (zero-based)
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        pair: Option<Vec<usize>>,
        /// Write the curve-set file here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a representation is faithful
    Faithful {
        input: PathBuf,
        /// Also enumerate the kernel and require agreement
        #[arg(long)]
        oracle: bool,
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        pair: Option<Vec<usize>>,
        /// Dihedral parameter for matrix input (default: order of the product)
        #[arg(long)]
        n: Option<u32>,
    },
    /// Recover a Coxeter matrix from a curve-set file
    Reconstruct {
        curves: PathBuf,
        /// Require every pair spectrum to come from a faithful representation
        #[arg(long)]
        strict: bool,
        /// Rank (default: one more than the largest generator index)
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Geometric representation of a Coxeter matrix
    Geom {
        coxeter: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Geometric representation, spectra, reconstruction, comparison
    Roundtrip { coxeter: PathBuf },
    /// Exhaustive and randomized verification sweeps
    Selftest {
        #[arg(long, default_value_t = 12)]
        max_n: u32,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        #[arg(long, default_value_t = 4)]
        max_support: usize,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_bond: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Render a curve-set file as SVG
    Plot {
        curves: PathBuf,
        #[arg(long, default_value_t = 3.0)]
        range: f64,
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        pair: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a command produced: text for stdout and an exit code.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::SinkFailure(format!("cannot write {}: {e}", path.display())))
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn pretty(v: &serde_json::Value) -> String {
    with_newline(serde_json::to_string_pretty(v).expect("values serialize"))
}

fn pair_arg(pair: &Option<Vec<usize>>) -> Option<(usize, usize)> {
    pair.as_ref().map(|p| (p[0], p[1]))
}

/// Pairs `i < j` of a matrix representation, or the requested one.
fn select_pairs(rep: &MatrixRep, pair: Option<(usize, usize)>) -> Result<Vec<(usize, usize)>> {
    let rank = rep.rank();
    match pair {
        Some((i, j)) => {
            if i == j || i >= rank || j >= rank {
                return Err(Error::InvalidSpec(format!(
                    "pair ({i}, {j}) is not a pair of distinct generators among {rank}"
                )));
            }
            Ok(vec![(i.min(j), i.max(j))])
        }
        None if rank < 2 => Err(Error::InvalidSpec("need at least two generators".into())),
        None => Ok((0..rank).flat_map(|i| (i + 1..rank).map(move |j| (i, j))).collect()),
    }
}

fn label_json(label: IrrepLabel) -> serde_json::Value {
    match label {
        IrrepLabel::OneDim(j) => json!({"dim": 1, "j": j}),
        IrrepLabel::TwoDim(k) => json!({"dim": 2, "k": k}),
    }
}

fn curve_json(c: Curve) -> serde_json::Value {
    match c {
        Curve::Line(code) => json!({"line": code.as_str()}),
        Curve::Ellipse { num, den } => json!({"ellipse": {"num": num, "den": den}}),
    }
}

fn cmd_catalog(n: u32, max_order: u32, format: Format) -> Result<Outcome> {
    if n < 2 || n > max_order {
        return Err(Error::InvalidSpec(format!("n = {n} must lie in 2..={max_order}")));
    }
    let mut rows = Vec::new();
    let mut text = format!("dihedral group of order {}\n", 2 * n);
    for label in catalog(n) {
        let kernel = irrep_kernel(n, label)?;
        let curve = irrep_curve(n, label)?;
        let poly = curve_poly(&curve);
        let kernel_names: Vec<String> = kernel.iter().map(ToString::to_string).collect();
        let image = 2 * n as usize / kernel.len();
        writeln!(
            text,
            "{label}  dim {}  kernel order {}  image order {image}  curve {curve}: {poly} = 0\n    kernel: {{{}}}",
            label.dim(),
            kernel.len(),
            kernel_names.join(", ")
        )
        .expect("string write");
        rows.push(json!({
            "label": label_json(label),
            "dim": label.dim(),
            "kernel": kernel_names,
            "kernel_order": kernel.len(),
            "image_order": image,
            "curve": curve_json(curve),
            "polynomial": poly.to_string(),
        }));
    }
    Ok(Outcome::ok(match format {
        Format::Text => text,
        Format::Json => pretty(&json!({"n": n, "irreps": rows})),
    }))
}

fn cmd_spectrum(input: &Path, pair: Option<(usize, usize)>, out: Option<&Path>, max_order: u32, format: Format) -> Result<Outcome> {
    let mut pairs = Vec::new();
    let mut text = String::new();
    match rep_from_json(&read(input)?)? {
        RepInput::Spec(spec) => {
            if pair.is_some_and(|p| p != (0, 1)) {
                return Err(Error::InvalidSpec("a representation spec has only the pair (0, 1)".into()));
            }
            let curves = spectrum_of_spec(&spec)?;
            writeln!(text, "pair (0, 1): n = {}\nF = {}\ncurves: {curves}", spec.n(), curves.product()).expect("string write");
            pairs.push(PairCurves { i: 0, j: 1, curves });
        }
        RepInput::Matrices(rep) => {
            for (i, j) in select_pairs(&rep, pair)? {
                let (a, b) = rep.pair(i, j);
                let ps = spectrum_of_matrices(a, b, max_order)?;
                writeln!(text, "pair ({i}, {j}): n = {}\nF = {}\ncurves: {}", ps.n, ps.poly, ps.curves).expect("string write");
                pairs.push(PairCurves { i, j, curves: ps.curves });
            }
        }
    }
    let file = with_newline(curvesets_to_json(&pairs));
    if let Some(path) = out {
        write_file(path, &file)?;
    }
    Ok(Outcome::ok(match format {
        Format::Text => text,
        Format::Json => file,
    }))
}

fn verdict_json(i: usize, j: usize, n: u32, v: &FaithfulnessVerdict) -> serde_json::Value {
    json!({
        "i": i,
        "j": j,
        "n": n,
        "method": v.method,
        "faithful": v.faithful,
        "kernel_size": v.kernel_size,
        "witness": v.witness.map(|w| w.to_string()),
    })
}

fn cmd_faithful(
    input: &Path,
    oracle: bool,
    pair: Option<(usize, usize)>,
    n_override: Option<u32>,
    max_order: u32,
    format: Format,
) -> Result<Outcome> {
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut code = 0;
    match rep_from_json(&read(input)?)? {
        RepInput::Spec(spec) => {
            if n_override.is_some_and(|n| n != spec.n()) {
                return Err(Error::InvalidSpec("--n disagrees with the spec's group".into()));
            }
            let t = is_faithful_theorem(&spec)?;
            writeln!(text, "{t}").expect("string write");
            rows.push(verdict_json(0, 1, spec.n(), &t));
            if oracle {
                let o = is_faithful_oracle(&spec)?;
                writeln!(text, "{o}").expect("string write");
                rows.push(verdict_json(0, 1, spec.n(), &o));
                if o.faithful != t.faithful {
                    writeln!(text, "methods disagree").expect("string write");
                    code = 2;
                }
            }
        }
        RepInput::Matrices(rep) => {
            let selected = select_pairs(&rep, pair)?;
            if n_override.is_some() && selected.len() != 1 {
                return Err(Error::InvalidSpec("--n needs a single generator pair".into()));
            }
            for (i, j) in selected {
                let (a, b) = rep.pair(i, j);
                let (n, v) = match n_override {
                    Some(n) => (n, is_faithful_matrices_at(a, b, n)?),
                    None => is_faithful_matrices(a, b, max_order)?,
                };
                debug_assert_eq!(v.method, Method::Oracle);
                writeln!(text, "pair ({i}, {j}), n = {n}: {v}").expect("string write");
                rows.push(verdict_json(i, j, n, &v));
            }
        }
    }
    Ok(Outcome {
        stdout: match format {
            Format::Text => text,
            Format::Json => pretty(&json!({"verdicts": rows, "agree": code == 0})),
        },
        code,
    })
}

fn matrix_text(rows: &[Vec<u32>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn cmd_reconstruct(curves: &Path, strict: bool, rank: Option<usize>, out: Option<&Path>, format: Format) -> Result<Outcome> {
    let pairs = curvesets_from_json(&read(curves)?)?;
    let rank = rank.unwrap_or_else(|| pairs.iter().map(|p| p.j + 1).max().unwrap_or(1));
    let report = reconstruct_matrix(&pairs, rank, strict)?;
    let file = with_newline(report.to_json());
    if let Some(path) = out {
        write_file(path, &file)?;
    }
    Ok(Outcome::ok(match format {
        Format::Json => file,
        Format::Text => {
            let mut text = with_newline(matrix_text(report.matrix.rows()));
            for p in &report.pairs {
                writeln!(text, "pair ({}, {}): case {}, theta {}, m {}", p.i, p.j, p.case, p.theta, p.m).expect("string write");
            }
            text
        }
    }))
}

fn cmd_geom(coxeter: &Path, out: Option<&Path>, format: Format) -> Result<Outcome> {
    let m = coxeter_from_json(&read(coxeter)?)?;
    let rep = geometric_representation(&m);
    let file = with_newline(matrixrep_to_json(&rep));
    if let Some(path) = out {
        write_file(path, &file)?;
    }
    Ok(Outcome::ok(match format {
        Format::Json => file,
        Format::Text => {
            let mut text = String::new();
            for (i, g) in rep.generators().iter().enumerate() {
                writeln!(text, "s{i} = {g:?}").expect("string write");
            }
            text
        }
    }))
}

fn cmd_roundtrip(coxeter: &Path, max_order: u32, format: Format) -> Result<Outcome> {
    let m = coxeter_from_json(&read(coxeter)?)?;
    if let Some(b) = m.rows().iter().flatten().find(|&&b| b > max_order) {
        return Err(Error::InvalidCoxeterMatrix(format!("bond {b} exceeds --max-order {max_order}")));
    }
    let out = analyze(&geometric_representation(&m), max_order)?;
    let pass = out.report.matrix == m;
    let stdout = match format {
        Format::Json => pretty(&json!({
            "input": m.rows(),
            "reconstructed": out.report.matrix.rows(),
            "pairs": out.report.pairs,
            "pass": pass,
        })),
        Format::Text => format!(
            "input:\n{}\nreconstructed:\n{}\n{}\n",
            matrix_text(m.rows()),
            matrix_text(out.report.matrix.rows()),
            if pass { "PASS" } else { "FAIL" }
        ),
    };
    Ok(Outcome {
        stdout,
        code: if pass { 0 } else { 3 },
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_selftest(
    max_n: u32,
    max_rank: usize,
    max_support: usize,
    trials: usize,
    max_bond: u32,
    seed: u64,
    max_order: u32,
    format: Format,
) -> Result<Outcome> {
    if max_n < 2 || max_rank < 2 || max_bond < 2 {
        return Err(Error::InvalidSpec("--max-n, --max-rank and --max-bond must be at least 2".into()));
    }
    if max_bond > max_order {
        return Err(Error::InvalidSpec(format!("--max-bond {max_bond} exceeds --max-order {max_order}")));
    }
    let reports: Vec<SweepReport> = vec![
        faithfulness_sweep(max_n, max_support)?,
        product_identity_sweep(max_n, max_support.min(3), 2)?,
        reconstruction_sweep(max_n, max_support)?,
        roundtrip_sweep(seed, trials, max_rank, max_bond, max_order)?,
    ];
    let pass = reports.iter().all(SweepReport::passed);
    let stdout = match format {
        Format::Json => pretty(&json!({"sweeps": reports, "pass": pass})),
        Format::Text => {
            let mut text = String::new();
            for r in &reports {
                writeln!(
                    text,
                    "{}: {} cases, {} failures",
                    r.name,
                    r.cases,
                    r.failures.len()
                )
                .expect("string write");
                for f in &r.failures {
                    writeln!(text, "  {f}").expect("string write");
                }
            }
            writeln!(text, "{}", if pass { "PASS" } else { "FAIL" }).expect("string write");
            text
        }
    };
    Ok(Outcome {
        stdout,
        code: if pass { 0 } else { 3 },
    })
}

fn cmd_plot(curves: &Path, range: f64, pair: Option<(usize, usize)>, out: Option<&Path>) -> Result<Outcome> {
    let pairs = curvesets_from_json(&read(curves)?)?;
    let set = match pair {
        Some((i, j)) => pairs
            .into_iter()
            .find(|p| (p.i, p.j) == (i.min(j), i.max(j)))
            .map(|p| p.curves)
            .ok_or(Error::MissingPair { i, j })?,
        None => pairs.into_iter().next().map(|p| p.curves).unwrap_or_else(CurveSet::new),
    };
    let svg = svg_string(&set, range)?;
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| Error::SinkFailure(format!("cannot write {}: {e}", path.display())))?;
            crate::spectrum::emit_svg(&set, range, &mut f)?;
            Ok(Outcome::ok(format!("wrote {}\n", path.display())))
        }
        None => Ok(Outcome::ok(svg)),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let (mo, fmt) = (cli.max_order, cli.format);
    match &cli.command {
        Command::Catalog { n } => cmd_catalog(*n, mo, fmt),
        Command::Spectrum { input, pair, out } => cmd_spectrum(input, pair_arg(pair), out.as_deref(), mo, fmt),
        Command::Faithful { input, oracle, pair, n } => cmd_faithful(input, *oracle, pair_arg(pair), *n, mo, fmt),
        Command::Reconstruct { curves, strict, rank, out } => cmd_reconstruct(curves, *strict, *rank, out.as_deref(), fmt),
        Command::Geom { coxeter, out } => cmd_geom(coxeter, out.as_deref(), fmt),
        Command::Roundtrip { coxeter } => cmd_roundtrip(coxeter, mo, fmt),
        Command::Selftest {
            max_n,
            max_rank,
            max_support,
            trials,
            max_bond,
            seed,
        } => cmd_selftest(*max_n, *max_rank, *max_support, *trials, *max_bond, *seed, mo, fmt),
        Command::Plot { curves, range, pair, out } => cmd_plot(curves, *range, pair_arg(pair), out.as_deref()),
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            if stdout.write_all(outcome.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return 1;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
