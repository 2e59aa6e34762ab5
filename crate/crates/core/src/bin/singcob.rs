use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use singcob::algebra::{check_twin, truncated_twin, twin_axioms, universal_twin, TwinAlgebraFile, TwinAlgebraPresentation};
use singcob::diagram::{Diagram, LinComb};
use singcob::dsl::{parse, print, print_diagram, DslError};
use singcob::eval::{eval_lincomb, foam_identities, relation_suite};
use singcob::fuzz::{run_fuzz, CaseStatus, DEFAULT_COUNT, DEFAULT_STEPS};
use singcob::matrix::Matrix;
use singcob::normal_form::{equivalent_lincomb, nf_lincomb, Equivalence, NfError};
use singcob::report::Report;
use singcob::ring::RingPoly;
use singcob::topology::invariants;

const OK: u8 = 0;
const VERDICT_FAILED: u8 = 1;
const USAGE: u8 = 2;
const INDETERMINATE: u8 = 3;

#[derive(Parser)]
#[command(name = "singcob", version, about = "Singular 2-cobordisms: invariants, normal forms, TQFT evaluation")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// universal, trunc:N, or a path to an algebra file
    #[arg(long, global = true, default_value = "universal")]
    algebra: String,
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_STEPS)]
    steps: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_COUNT)]
    count: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and type-check a term
    Check { file: PathBuf },
    /// Components, genus, singular boundary permutation
    Invariants { file: PathBuf },
    /// Scalar and normal-form term
    Normalize { file: PathBuf },
    /// Compare two terms
    Equal { file1: PathBuf, file2: PathBuf },
    /// Evaluate to a matrix
    Eval { file: PathBuf },
    /// Twin Frobenius axioms of the selected algebra
    Axioms,
    /// Rewrite rules (and closed-surface identities for the universal algebra)
    Relations,
    /// Random rewrite walks against normal forms
    Fuzz,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: USAGE, message: message.into() }
    }
}

impl From<NfError> for Failure {
    fn from(e: NfError) -> Self {
        let code = if matches!(e, NfError::ScalarIndeterminate(_)) { INDETERMINATE } else { VERDICT_FAILED };
        Self { code, message: e.to_string() }
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rfind('\n').map_or(before.len(), |p| before.len() - p - 1) + 1;
    (line, col)
}

fn parse_error(path: &std::path::Path, text: &str, e: &DslError) -> Failure {
    let (line, col) = line_col(text, e.position());
    let src_line = text.lines().nth(line - 1).unwrap_or("");
    Failure::usage(format!("{}:{line}:{col}: {e}\n  {src_line}\n  {}^", path.display(), " ".repeat(col - 1)))
}

fn load(path: &std::path::Path) -> Result<LinComb, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| parse_error(path, &text, &e))
}

fn load_diagram(path: &std::path::Path) -> Result<Diagram, Failure> {
    let lc = load(path)?;
    match lc.as_diagram() {
        Some(d) => Ok(d.clone()),
        None => Err(Failure::usage(format!("{}: expected a single diagram without coefficient", path.display()))),
    }
}

fn algebra(sel: &str) -> Result<TwinAlgebraPresentation, Failure> {
    if sel == "universal" {
        return Ok(universal_twin());
    }
    if let Some(n) = sel.strip_prefix("trunc:") {
        let n: usize = n.parse().map_err(|_| Failure::usage(format!("bad truncation degree in {sel:?}")))?;
        return truncated_twin(n).map_err(|e| Failure::usage(e.to_string()));
    }
    let text = fs::read_to_string(sel).map_err(|e| Failure::usage(format!("{sel}: {e}")))?;
    let t = TwinAlgebraFile::parse(&text).map_err(|e| Failure::usage(format!("{sel}: {e}")))?;
    let report = check_twin(&t).map_err(|e| Failure::usage(format!("{sel}: {e}")))?;
    if !report.all_passed() {
        let bad: Vec<&str> = report.failed().map(|v| v.name.as_str()).collect();
        return Err(Failure::usage(format!("{sel}: not a twin Frobenius algebra, failing {}", bad.join(", "))));
    }
    Ok(t)
}

fn emit<T: Serialize>(opts: &Opts, value: &T, text: impl FnOnce() -> String) {
    if opts.json {
        println!("{}", serde_json::to_string_pretty(value).expect("plain data serializes"));
    } else {
        print!("{}", text());
    }
}

fn matrix_json(m: &Matrix) -> serde_json::Value {
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": m.to_text_rows() })
}

fn matrix_text(m: &Matrix) -> String {
    let mut s = format!("{} x {}\n", m.rows(), m.cols());
    for row in m.to_text_rows() {
        s.push_str(&format!("[{}]\n", row.join(", ")));
    }
    s
}

fn report_exit(opts: &Opts, r: &Report) -> u8 {
    emit(opts, r, || r.to_string());
    if r.all_passed() {
        OK
    } else {
        VERDICT_FAILED
    }
}

fn nf_text(map: &std::collections::BTreeMap<Diagram, RingPoly>, lc: &LinComb) -> String {
    let mut out = LinComb::zero(lc.dom.clone(), lc.cod.clone());
    for (d, c) in map {
        out.add_term(c.clone(), d.clone()).expect("same type");
    }
    print(&out)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let opts = &cli.opts;
    match &cli.cmd {
        Cmd::Check { file } => {
            let lc = load(file)?;
            let v = json!({ "ok": true, "dom": lc.dom.to_string(), "cod": lc.cod.to_string(), "terms": lc.terms().len() });
            emit(opts, &v, || format!("ok: {} -> {}, {} term(s)\n", lc.dom, lc.cod, lc.terms().len()));
            Ok(OK)
        }
        Cmd::Invariants { file } => {
            let d = load_diagram(file)?;
            let inv = invariants(&d).map_err(|e| Failure { code: VERDICT_FAILED, message: e.to_string() })?;
            emit(opts, &inv, || {
                let mut s = String::new();
                for (k, c) in inv.components.iter().enumerate() {
                    let kind = if c.is_closed() { "closed" } else { "open" };
                    s.push_str(&format!("component {k}: genus {}, {kind}, boundary {:?}\n", c.genus, c.boundary));
                }
                s.push_str(&format!("sigma: {}\nsingular circles: {}\n", inv.sigma, inv.singular_circles));
                s
            });
            Ok(OK)
        }
        Cmd::Normalize { file } => {
            let lc = load(file)?;
            let t = algebra(&opts.algebra)?;
            let map = nf_lincomb(&lc)?;
            let mut nf = LinComb::zero(lc.dom.clone(), lc.cod.clone());
            for (d, c) in &map {
                nf.add_term(c.clone(), d.clone()).expect("same type");
            }
            let consistent = eval_lincomb(&lc, &t).map_err(|e| Failure::usage(e.to_string()))?
                == eval_lincomb(&nf, &t).map_err(|e| Failure::usage(e.to_string()))?;
            let single = (map.len() == 1).then(|| map.iter().next().expect("one entry"));
            let v = json!({
                "scalar": single.map(|(_, c)| c.to_text()),
                "term": single.map(|(d, _)| print_diagram(d)),
                "normal_form": nf_text(&map, &lc),
                "algebra": opts.algebra,
                "consistent": consistent,
            });
            emit(opts, &v, || match single {
                Some((d, c)) => format!("scalar: {c}\nterm: {}\n", print_diagram(d)),
                None => format!("normal form: {}\n", nf_text(&map, &lc)),
            });
            if !consistent {
                eprintln!("evaluation under {} disagrees with the normal form", opts.algebra);
                return Ok(VERDICT_FAILED);
            }
            Ok(OK)
        }
        Cmd::Equal { file1, file2 } => {
            let (a, b) = (load(file1)?, load(file2)?);
            let t = algebra(&opts.algebra)?;
            let verdict = equivalent_lincomb(&a, &b)?;
            let (word, scalar) = match &verdict {
                Equivalence::Equal => ("equal", None),
                Equivalence::EqualUpToScalar(s) => ("equal-up-to-scalar", Some(s.to_text())),
                Equivalence::NotEqual => ("not-equal", None),
            };
            if a.dom == b.dom && a.cod == b.cod && verdict != Equivalence::NotEqual {
                let s = match &verdict {
                    Equivalence::EqualUpToScalar(s) => s.clone(),
                    _ => RingPoly::one(),
                };
                let ea = eval_lincomb(&a, &t).map_err(|e| Failure::usage(e.to_string()))?;
                let eb = eval_lincomb(&b, &t).map_err(|e| Failure::usage(e.to_string()))?;
                if ea != eb.scale(&s) {
                    return Err(Failure { code: VERDICT_FAILED, message: format!("verdict {word} contradicted by evaluation under {}", opts.algebra) });
                }
            }
            let v = json!({ "verdict": word, "scalar": scalar });
            emit(opts, &v, || match &scalar {
                Some(s) => format!("{word} {s}\n"),
                None => format!("{word}\n"),
            });
            Ok(if verdict == Equivalence::NotEqual { VERDICT_FAILED } else { OK })
        }
        Cmd::Eval { file } => {
            let lc = load(file)?;
            let t = algebra(&opts.algebra)?;
            let m = eval_lincomb(&lc, &t).map_err(|e| Failure::usage(e.to_string()))?;
            emit(opts, &matrix_json(&m), || matrix_text(&m));
            Ok(OK)
        }
        Cmd::Axioms => {
            let t = algebra(&opts.algebra)?;
            let r = twin_axioms(&t).map_err(|e| Failure::usage(e.to_string()))?;
            Ok(report_exit(opts, &r))
        }
        Cmd::Relations => {
            let t = algebra(&opts.algebra)?;
            let mut r = relation_suite(&t).map_err(|e| Failure::usage(e.to_string()))?;
            if opts.algebra == "universal" {
                let foams = foam_identities(&t).map_err(|e| Failure::usage(e.to_string()))?;
                r.extend_prefixed("foam", foams);
            }
            Ok(report_exit(opts, &r))
        }
        Cmd::Fuzz => {
            let r = run_fuzz(opts.seed, opts.steps, opts.count);
            emit(opts, &r, || {
                let mut s = String::new();
                for c in r.cases.iter().filter(|c| c.status == CaseStatus::Fail) {
                    s.push_str(&format!("FAIL case {}: {} ({})\n", c.index, c.diagram, c.detail.as_deref().unwrap_or("")));
                }
                s.push_str(&format!(
                    "{} cases, {} passed, {} scalar-unresolved, {} failed\n",
                    r.count, r.passed, r.scalar_unresolved, r.failed
                ));
                s
            });
            Ok(if r.failed == 0 { OK } else { VERDICT_FAILED })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
