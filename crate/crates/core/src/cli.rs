//! The `tschur` command line. [`run`] takes the argument vector and two
//! output streams so it can be driven from tests.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyring::MultiPoly;
use crate::recurrence::{char_coeffs, recurrence_residual, verify_recurrence};
use crate::schur::{jacobi_trudi_matrix, symbolic_det};
use crate::shapes::{parse_index_list, MinorSpec, Partition, SkewShape};
use crate::spectra::{
    finite_section_spectrum, limit_set_scan_refined, spectrum_vs_limitset, GridSpec,
};
use crate::tableaux::{
    enumerate_ssyt, insert_sequence, schur_by_tableaux, InsertionSequence, Tableau,
};
use crate::toeplitz::{
    build_minor_numeric, build_minor_symbolic, det_numeric, format_complex, format_real as fr,
    parse_complex, verify_minor_schur, BandedSymbol,
};
use crate::widom::{hall_schur_eval, widom_modified, widom_original, RootData, RootKind};

const GRAMMAR: &str = "\
Lists are comma separated; an empty string is the empty list.
Complex numbers: a, bi, a+bi, a-bi (also i, -i); whitespace is ignored.
A symbol lists s_0,...,s_n with s_0 = 1.
Exit status: 0 on success, 2 on invalid input, 1 when a numerical method fails.";

#[derive(Parser, Debug)]
#[command(name = "tschur", version, about = "Skew Schur polynomials and banded Toeplitz minors", after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Skew Schur polynomial of outer/inner in n variables
    Schur(SchurArgs),
    /// Determinant of the minor D^k with rows alpha and columns beta deleted
    MinorDet(MinorDetArgs),
    /// Check det D^k against the skew Schur polynomial of its shape
    CheckIdentity(CheckArgs),
    /// Check the linear recurrence of det D^k in k
    Recurrence(RecurrenceArgs),
    /// Evaluate det D_c^k from the roots of the band polynomial
    Widom(WidomArgs),
    /// Scan a grid of the v-plane for the limit set of finite-section spectra
    Limitset(LimitsetArgs),
    /// Eigenvalues of a finite section
    Eigs(EigsArgs),
    /// Distances from finite-section eigenvalues to the scanned limit set
    Compare(CompareArgs),
    /// Insert a strictly increasing sequence into a tableau, one value per row
    Insert(InsertArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Tableaux,
    JacobiTrudi,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Chi,
    Psi,
}

#[derive(Args, Debug)]
struct SchurArgs {
    #[arg(long)]
    outer: String,
    #[arg(long, default_value = "")]
    inner: String,
    #[arg(long)]
    nvars: usize,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
    /// Also evaluate at this point (comma list of complex numbers)
    #[arg(long, allow_hyphen_values = true)]
    at: Option<String>,
    /// List every semistandard tableau
    #[arg(long)]
    list_tableaux: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct SpecArgs {
    /// Deleted rows
    #[arg(long, default_value = "")]
    alpha: String,
    /// Deleted columns
    #[arg(long, default_value = "")]
    beta: String,
    /// Band width n (number of variables)
    #[arg(long)]
    nvars: Option<usize>,
}

#[derive(Args, Debug)]
struct MinorDetArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    k: usize,
    /// Also evaluate numerically with this band
    #[arg(long, allow_hyphen_values = true)]
    symbol: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Single size; defaults to the threshold
    #[arg(long)]
    k: Option<usize>,
    /// Check every size from the threshold up to this one
    #[arg(long, conflicts_with = "k")]
    kmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct RecurrenceArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    jmax: Option<usize>,
    /// Print just the residual at this j
    #[arg(long, conflicts_with = "jmax")]
    j: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct WidomArgs {
    /// Distinct nonzero roots (comma list of complex numbers)
    #[arg(long, allow_hyphen_values = true)]
    roots: String,
    #[arg(long, value_enum, default_value_t = Kind::Chi)]
    kind: Kind,
    #[arg(long)]
    c: usize,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, allow_hyphen_values = true)]
    symbol: String,
    #[arg(long)]
    c: usize,
    /// re_min,re_max,im_min,im_max,nx,ny
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
    #[arg(long, default_value_t = 1e-2)]
    tol: f64,
    /// Worker threads for the grid scan (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
struct LimitsetArgs {
    #[command(flatten)]
    scan: ScanArgs,
    /// Rescan an m×m sub-grid around each hit
    #[arg(long, default_value_t = 0)]
    refine: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct EigsArgs {
    #[arg(long, allow_hyphen_values = true)]
    symbol: String,
    #[arg(long)]
    k: usize,
    /// Offset c of the family alpha = (g..), beta = (1..c, g+c..)
    #[arg(long, conflicts_with_all = ["alpha", "beta"])]
    c: Option<usize>,
    /// The g values of that family
    #[arg(long, default_value = "", requires = "c")]
    gammas: String,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[command(flatten)]
    scan: ScanArgs,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct InsertArgs {
    #[arg(long)]
    outer: String,
    #[arg(long, default_value = "")]
    inner: String,
    /// Entries of each skew row, rows separated by ';'
    #[arg(long, default_value = "")]
    rows: String,
    /// Strictly increasing nonzero integers
    #[arg(long, allow_hyphen_values = true)]
    seq: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Runs the command line; returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_validation() {
                2
            } else {
                1
            }
        }
    }
}

fn dispatch(command: Command) -> Result<String> {
    match command {
        Command::Schur(a) => cmd_schur(a),
        Command::MinorDet(a) => cmd_minor_det(a),
        Command::CheckIdentity(a) => cmd_check(a),
        Command::Recurrence(a) => cmd_recurrence(a),
        Command::Widom(a) => cmd_widom(a),
        Command::Limitset(a) => cmd_limitset(a),
        Command::Eigs(a) => cmd_eigs(a),
        Command::Compare(a) => cmd_compare(a),
        Command::Insert(a) => cmd_insert(a),
    }
}

fn no_csv(format: Format, command: &str) -> Result<()> {
    if format == Format::Csv {
        return Err(Error::InvalidArgument(format!(
            "--format csv is not available for {command}"
        )));
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn cjson(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn parse_shape(outer: &str, inner: &str) -> Result<SkewShape> {
    SkewShape::new(Partition::parse(outer)?, Partition::parse(inner)?)
}

fn parse_complex_list(s: &str) -> Result<Vec<Complex64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_complex).collect()
}

fn parse_spec(a: &SpecArgs, fallback_n: Option<usize>) -> Result<MinorSpec> {
    let n = a
        .nvars
        .or(fallback_n)
        .ok_or_else(|| Error::InvalidArgument("--nvars is required".into()))?;
    MinorSpec::new(parse_index_list(&a.alpha)?, parse_index_list(&a.beta)?, n)
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(Error::InvalidArgument("--threads must be positive".into())),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn tableau_text(t: &Tableau) -> String {
    let inner = t.shape().inner();
    let rows: Vec<String> = t
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let cells: Vec<String> = std::iter::repeat_n(".".to_string(), inner.part(i) as usize)
                .chain(row.iter().map(u32::to_string))
                .collect();
            cells.join(" ")
        })
        .collect();
    rows.join(" / ")
}

fn cmd_schur(a: SchurArgs) -> Result<String> {
    no_csv(a.format, "schur")?;
    let shape = parse_shape(&a.outer, &a.inner)?;
    let n = a.nvars;
    let point = a.at.as_deref().map(parse_complex_list).transpose()?;
    let tab =
        matches!(a.method, Method::Tableaux | Method::Both).then(|| schur_by_tableaux(&shape, n));
    let jt = matches!(a.method, Method::JacobiTrudi | Method::Both)
        .then(|| symbolic_det(&jacobi_trudi_matrix(&shape, n)));
    let equal = match (&tab, &jt) {
        (Some(x), Some(y)) => Some(x == y),
        _ => None,
    };
    let first: &MultiPoly = tab.as_ref().or(jt.as_ref()).expect("some method selected");
    let value = point.map(|p| first.evaluate(&p)).transpose()?;
    let ssyt = a.list_tableaux.then(|| enumerate_ssyt(&shape, n));

    if a.format == Format::Json {
        let mut v = json!({
            "shape": { "outer": shape.outer().trimmed(), "inner": shape.inner().trimmed() },
            "nvars": n,
        });
        if let Some(p) = &tab {
            v["tableaux"] = json!(p.json_terms());
        }
        if let Some(p) = &jt {
            v["jacobi_trudi"] = json!(p.json_terms());
        }
        if let Some(eq) = equal {
            v["equal"] = json!(eq);
        }
        if let Some(z) = value {
            v["value"] = cjson(z);
        }
        if let Some(ts) = &ssyt {
            v["ssyt"] = Value::Array(ts.iter().map(Tableau::to_json).collect());
        }
        return Ok(pretty(&v));
    }
    let mut s = String::new();
    writeln!(s, "shape: {shape}").unwrap();
    writeln!(s, "conjugate: {}", shape.conjugate()).unwrap();
    writeln!(s, "nvars: {n}").unwrap();
    if let Some(p) = &tab {
        writeln!(s, "tableaux: {p}").unwrap();
    }
    if let Some(p) = &jt {
        writeln!(s, "jacobi-trudi: {p}").unwrap();
    }
    if let Some(eq) = equal {
        writeln!(s, "equal: {eq}").unwrap();
    }
    if let Some(z) = value {
        writeln!(s, "value: {}", format_complex(z)).unwrap();
    }
    if let Some(ts) = &ssyt {
        writeln!(s, "ssyt: {}", ts.len()).unwrap();
        for t in ts {
            writeln!(s, "  {}", tableau_text(t)).unwrap();
        }
    }
    Ok(s)
}

fn cmd_minor_det(a: MinorDetArgs) -> Result<String> {
    no_csv(a.format, "minor-det")?;
    let sym = a.symbol.as_deref().map(BandedSymbol::parse).transpose()?;
    let spec = parse_spec(&a.spec, sym.as_ref().map(BandedSymbol::n))?;
    let shape = spec.shape(a.k)?;
    let m = build_minor_symbolic(&spec, a.k);
    let det = symbolic_det(&m);
    let numeric = sym
        .as_ref()
        .map(|s| build_minor_numeric(s, &spec, a.k).map(|m| det_numeric(&m)))
        .transpose()?;
    if a.format == Format::Json {
        let mut v = json!({
            "spec": spec,
            "k": a.k,
            "shape": { "outer": shape.outer().trimmed(), "inner": shape.inner().trimmed() },
            "matrix": (0..m.size())
                .map(|i| (0..m.size()).map(|j| m.get(i, j).to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "det": det.json_terms(),
        });
        if let Some(z) = numeric {
            v["numeric"] = cjson(z);
        }
        return Ok(pretty(&v));
    }
    let mut s = String::new();
    writeln!(s, "spec: {spec}").unwrap();
    writeln!(s, "k: {}", a.k).unwrap();
    writeln!(s, "shape: {shape}").unwrap();
    writeln!(s, "matrix:").unwrap();
    for line in m.to_string().lines() {
        writeln!(s, "  {line}").unwrap();
    }
    writeln!(s, "det: {det}").unwrap();
    if let Some(z) = numeric {
        writeln!(s, "numeric: {}", format_complex(z)).unwrap();
    }
    Ok(s)
}

fn cmd_check(a: CheckArgs) -> Result<String> {
    no_csv(a.format, "check-identity")?;
    let spec = parse_spec(&a.spec, None)?;
    let ks: Vec<usize> = match (a.k, a.kmax) {
        (Some(k), _) => vec![k],
        (None, Some(kmax)) => (spec.min_k()..=kmax).collect(),
        (None, None) => vec![spec.min_k()],
    };
    let mut rows = Vec::new();
    for &k in &ks {
        let shape = spec.shape(k)?;
        rows.push((k, shape, verify_minor_schur(&spec, k)?));
    }
    let all = rows.iter().all(|(_, _, c)| c.holds);
    if a.format == Format::Json {
        let checks: Vec<Value> = rows
            .iter()
            .map(|(k, shape, c)| {
                json!({
                    "k": k,
                    "shape": { "outer": shape.outer().trimmed(), "inner": shape.inner().trimmed() },
                    "holds": c.holds,
                    "det": c.det.json_terms(),
                    "schur": c.schur.json_terms(),
                })
            })
            .collect();
        return Ok(pretty(
            &json!({ "spec": spec, "all_hold": all, "checks": checks }),
        ));
    }
    let mut s = String::new();
    writeln!(s, "spec: {spec}").unwrap();
    writeln!(s, "threshold: {}", spec.min_k()).unwrap();
    for (k, shape, c) in &rows {
        writeln!(s, "k={k} shape={shape} holds={}", c.holds).unwrap();
        writeln!(s, "  det: {}", c.det).unwrap();
        if !c.holds {
            writeln!(s, "  schur: {}", c.schur).unwrap();
            writeln!(s, "  residual: {}", c.residual).unwrap();
        }
    }
    writeln!(s, "all_hold: {all}").unwrap();
    Ok(s)
}

fn cmd_recurrence(a: RecurrenceArgs) -> Result<String> {
    no_csv(a.format, "recurrence")?;
    let spec = parse_spec(&a.spec, None)?;
    let cc = char_coeffs(spec.n(), spec.c() - spec.r())?;
    if let Some(j) = a.j {
        let res = recurrence_residual(&spec, j);
        if a.format == Format::Json {
            return Ok(pretty(&json!({
                "spec": spec,
                "j": j,
                "checked": j >= spec.min_k(),
                "residual": res.json_terms(),
            })));
        }
        return Ok(format!("spec: {spec}\nj: {j}\nresidual: {res}\n"));
    }
    let jmax = a.jmax.unwrap_or(spec.min_k() + 3);
    let report = verify_recurrence(&spec, jmax);
    if a.format == Format::Json {
        let mut v = serde_json::to_value(&report).expect("report serializes");
        v["kernel"] = json!(cc.q().iter().map(MultiPoly::json_terms).collect::<Vec<_>>());
        return Ok(pretty(&v));
    }
    let mut s = String::new();
    writeln!(s, "spec: {spec}").unwrap();
    writeln!(s, "b: {}", report.b).unwrap();
    for (i, q) in cc.q().iter().enumerate() {
        writeln!(s, "Q_{i}: {q}").unwrap();
    }
    writeln!(s, "threshold: {}", spec.min_k()).unwrap();
    for e in &report.residuals {
        let res = match &e.residual {
            None => "0".to_string(),
            Some(terms) => MultiPoly::from_json_terms(spec.n(), terms)?.to_string(),
        };
        let tag = if e.checked {
            ""
        } else {
            " (below threshold, not checked)"
        };
        writeln!(s, "j={} residual={res}{tag}", e.j).unwrap();
    }
    writeln!(s, "all_zero: {}", report.all_zero).unwrap();
    match report.first_failure {
        Some(j) => writeln!(s, "first_failure: {j}").unwrap(),
        None => writeln!(s, "first_failure: none").unwrap(),
    }
    Ok(s)
}

fn cmd_widom(a: WidomArgs) -> Result<String> {
    no_csv(a.format, "widom")?;
    let kind = match a.kind {
        Kind::Chi => RootKind::Chi,
        Kind::Psi => RootKind::Psi,
    };
    let given = RootData::new(parse_complex_list(&a.roots)?, kind)?;
    let (chi, psi) = match kind {
        RootKind::Chi => (given.clone(), given.converted()),
        RootKind::Psi => (given.converted(), given.clone()),
    };
    let n = chi.n();
    let spec = MinorSpec::leading(a.c, n)?;
    let sym = chi.symbol();
    let modified = widom_modified(&chi, a.c, a.k)?;
    let original = widom_original(&psi, chi.s_n(), a.c, a.k)?;
    let hall = hall_schur_eval(&Partition::rectangle(a.c, a.k), chi.roots())?;
    let det = det_numeric(&build_minor_numeric(&sym, &spec, a.k as usize)?);
    if a.format == Format::Json {
        return Ok(pretty(&json!({
            "chi_roots": chi.roots().iter().map(|&z| cjson(z)).collect::<Vec<_>>(),
            "symbol": sym.to_string(),
            "c": a.c,
            "k": a.k,
            "modified": cjson(modified),
            "original": cjson(original),
            "hall": cjson(hall),
            "determinant": cjson(det),
        })));
    }
    let roots: Vec<String> = chi.roots().iter().map(|&z| format_complex(z)).collect();
    let mut s = String::new();
    writeln!(s, "chi_roots: {}", roots.join(",")).unwrap();
    writeln!(s, "symbol: {sym}").unwrap();
    writeln!(s, "c: {}", a.c).unwrap();
    writeln!(s, "k: {}", a.k).unwrap();
    writeln!(s, "modified: {}", format_complex(modified)).unwrap();
    writeln!(s, "original: {}", format_complex(original)).unwrap();
    writeln!(s, "hall: {}", format_complex(hall)).unwrap();
    writeln!(s, "determinant: {}", format_complex(det)).unwrap();
    Ok(s)
}

fn parse_scan(a: &ScanArgs) -> Result<(BandedSymbol, GridSpec)> {
    Ok((BandedSymbol::parse(&a.symbol)?, GridSpec::parse(&a.grid)?))
}

fn cmd_limitset(a: LimitsetArgs) -> Result<String> {
    let (sym, grid) = parse_scan(&a.scan)?;
    let (c, tol, refine) = (a.scan.c, a.scan.tol, a.refine);
    let report = with_threads(a.scan.threads, || {
        limit_set_scan_refined(&sym, c, &grid, tol, refine)
    })??;
    match a.format {
        Format::Csv => Ok(report.to_csv()),
        Format::Json => Ok(report.to_json() + "\n"),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "symbol: {sym}").unwrap();
            writeln!(s, "c: {c}").unwrap();
            let g = &report.grid;
            writeln!(
                s,
                "grid: {},{},{},{},{},{}",
                fr(g.re_min),
                fr(g.re_max),
                fr(g.im_min),
                fr(g.im_max),
                g.nx,
                g.ny
            )
            .unwrap();
            writeln!(s, "tol: {}", fr(tol)).unwrap();
            for note in &report.notes {
                writeln!(s, "note: {note}").unwrap();
            }
            writeln!(s, "hits: {}", report.all_hits().count()).unwrap();
            writeln!(s, "failures: {}", report.failures.len()).unwrap();
            for h in report.all_hits() {
                writeln!(s, "{} {} {}", fr(h.re), fr(h.im), fr(h.gap)).unwrap();
            }
            for f in &report.failures {
                writeln!(
                    s,
                    "failed at {}: {}",
                    format_complex(Complex64::new(f.re, f.im)),
                    f.error
                )
                .unwrap();
            }
            Ok(s)
        }
    }
}

fn cmd_eigs(a: EigsArgs) -> Result<String> {
    let sym = BandedSymbol::parse(&a.symbol)?;
    let spec = match a.c {
        Some(c) => MinorSpec::shifted_family(c, parse_index_list(&a.gammas)?, sym.n())?,
        None => MinorSpec::new(
            parse_index_list(a.alpha.as_deref().unwrap_or(""))?,
            parse_index_list(a.beta.as_deref().unwrap_or(""))?,
            sym.n(),
        )?,
    };
    let res = finite_section_spectrum(&sym, &spec, a.k)?;
    match a.format {
        Format::Csv => Ok(res.to_csv()),
        Format::Json => Ok(res.to_json() + "\n"),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "symbol: {sym}").unwrap();
            writeln!(s, "spec: {spec}").unwrap();
            writeln!(s, "k: {}", res.k).unwrap();
            for z in &res.eigenvalues {
                writeln!(s, "{}", format_complex(*z)).unwrap();
            }
            Ok(s)
        }
    }
}

fn cmd_compare(a: CompareArgs) -> Result<String> {
    no_csv(a.format, "compare")?;
    let (sym, grid) = parse_scan(&a.scan)?;
    let (c, tol, k) = (a.scan.c, a.scan.tol, a.k);
    let cmp = with_threads(a.scan.threads, || {
        spectrum_vs_limitset(&sym, c, k, &grid, tol)
    })??;
    if a.format == Format::Json {
        let mut v = serde_json::to_value(&cmp).expect("comparison serializes");
        v["symbol"] = json!(sym.to_string());
        v["c"] = json!(c);
        v["tol"] = json!(tol);
        return Ok(pretty(&v));
    }
    let mut s = String::new();
    writeln!(s, "symbol: {sym}").unwrap();
    writeln!(s, "c: {c}").unwrap();
    writeln!(s, "k: {k}").unwrap();
    writeln!(s, "hits: {}", cmp.hits).unwrap();
    writeln!(s, "pitch: {}", fr(cmp.pitch)).unwrap();
    writeln!(s, "median: {}", fr(cmp.median)).unwrap();
    writeln!(s, "max: {}", fr(cmp.max)).unwrap();
    Ok(s)
}

fn cmd_insert(a: InsertArgs) -> Result<String> {
    no_csv(a.format, "insert")?;
    let shape = parse_shape(&a.outer, &a.inner)?;
    let rows: Vec<Vec<u32>> = if shape.rows() == 0 {
        Vec::new()
    } else {
        a.rows
            .split(';')
            .map(|r| {
                parse_index_list(r)?
                    .into_iter()
                    .map(|x| {
                        u32::try_from(x).map_err(|_| Error::Parse(format!("entry {x} too large")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?
    };
    let t = Tableau::new(shape, rows)?;
    let values = a
        .seq
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad sequence value {:?}", tok.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    let out = insert_sequence(&t, &InsertionSequence::new(values)?)?;
    if a.format == Format::Json {
        return Ok(pretty(&out.to_json()));
    }
    Ok(format!(
        "shape: {}\ntableau: {}\n",
        out.shape(),
        tableau_text(&out)
    ))
}
