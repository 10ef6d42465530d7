//! Batch command-line front end. `run` is pure: it returns the exit status and
//! the bytes destined for stdout and stderr.
//!
//! Exit status: 0 success, 1 invalid input, 2 computation failure (including
//! failed verification or self-test checks).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cartan::CartanA;
use crate::crystal::{component, crystal_equivalent, to_highest_weight_by, RaiseOrder, TensorElt};
use crate::error::Error;
use crate::golden::run_golden;
use crate::homogeneous::{
    build_sp, convolution_shift, hom_degree_d, lambda_invariants, strongly_commute,
    verify_cyclotomic, verify_qha_relations, Factor, QParams, RelationReport,
};
use crate::kl::{
    graded_decomposition, simple_label, simple_qchars, ColumnStrictConcat, TransitionMatrix,
};
use crate::qchar::{qch_sp, shuffle_all, solve_unitriangular, LaurentInt, QChar};
use crate::rmatrix::SigmaRequest;
use crate::tableaux::{crystal_columns, parse_columns, ColumnTableau};

/// Version of the JSON output schemas.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "klr",
    version,
    about = "Exact type A crystal, q-character and transition-matrix computations"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Rank parameter: the Cartan datum is of type A_{n-1}.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Read the subcommand payload from a JSON file instead of flags.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Combinatorial R-matrix of two columns.
    Sigma(SigmaArgs),
    /// Crystal operations on tensor products of columns.
    #[command(subcommand)]
    Crystal(CrystalCmd),
    /// q-characters and shuffle products.
    #[command(subcommand)]
    Qchar(QcharCmd),
    /// Degree and commutation invariants.
    #[command(subcommand)]
    Degrees(DegreesCmd),
    /// Relation checks on the homogeneous column modules.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Graded decomposition of a convolution product of column modules.
    Decompose(DecomposeArgs),
    /// Run the golden suite of worked examples.
    Selftest,
}

#[derive(Debug, Args)]
struct SigmaArgs {
    /// Entries of the left factor, e.g. `4`.
    #[arg(long)]
    first: Option<String>,
    /// Entries of the right factor, e.g. `2,3`.
    #[arg(long)]
    second: Option<String>,
}

#[derive(Debug, Subcommand)]
enum CrystalCmd {
    /// Raise to the highest-weight element.
    Raise {
        /// Tensor element, factors left to right: `a,b|c`.
        #[arg(long)]
        elt: Option<String>,
        #[arg(long, value_enum, default_value_t = Order::Smallest)]
        order: Order,
    },
    /// List the connected component.
    Component {
        #[arg(long)]
        elt: Option<String>,
    },
    /// Decide crystal equivalence of two elements.
    Equiv {
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    Smallest,
    Largest,
}

#[derive(Debug, Subcommand)]
enum QcharCmd {
    /// q-character of the module attached to one column.
    Sp {
        #[arg(long)]
        column: Option<String>,
    },
    /// Shuffle product of column q-characters, leftmost factor first.
    Shuffle {
        /// Column list `a,b|c|...`; the rightmost factor is T_1.
        #[arg(long)]
        columns: Option<String>,
        /// Multiply the result by q^shift.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
    },
    /// Solve a unitriangular system for simple q-characters.
    Solve {
        /// Column list; solves every simple of that shape and content.
        #[arg(long)]
        columns: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum DegreesCmd {
    /// Shift sum_{a<b} (beta_a, Lambda_{mu_b}) for a column list.
    T {
        #[arg(long)]
        columns: Option<String>,
    },
    /// Degree d for `b1 ⊗ b2 ≃ b1' ⊗ b2'`.
    D(PairArgs),
    /// Lambda~, Lambda and optionally the normalized degree.
    Lambda(PairArgs),
    /// Whether the two column modules strongly commute.
    Commute(PairArgs),
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long)]
    b1: Option<String>,
    #[arg(long)]
    b2: Option<String>,
    #[arg(long)]
    b1p: Option<String>,
    #[arg(long)]
    b2p: Option<String>,
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Quiver Hecke relations; every column for the given n unless one is named.
    Relations {
        #[arg(long)]
        column: Option<String>,
    },
    /// Cyclotomic relation.
    Cyclotomic {
        #[arg(long)]
        column: Option<String>,
    },
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    /// Column list `T_r|...|T_1`; the rightmost factor is T_1.
    #[arg(long)]
    columns: Option<String>,
    /// Print the transition matrix of the shape and content instead.
    #[arg(long)]
    matrix: bool,
}

// JSON payloads accepted through --input.

#[derive(Debug, Deserialize)]
struct ColumnPayload {
    n: usize,
    column: Vec<usize>,
}

#[derive(Debug, Deserialize)]
struct OptColumnPayload {
    n: usize,
    #[serde(default)]
    column: Option<Vec<usize>>,
}

/// Columns in convolution order: leftmost `T_r`, last `T_1`.
#[derive(Debug, Deserialize)]
struct ColumnsPayload {
    n: usize,
    columns: Vec<Vec<usize>>,
    #[serde(default)]
    shift: i64,
}

#[derive(Debug, Deserialize)]
struct EquivPayload {
    left: TensorElt,
    right: TensorElt,
}

#[derive(Debug, Deserialize)]
struct PairPayload {
    n: usize,
    b1: Vec<usize>,
    b2: Vec<usize>,
    #[serde(default)]
    b1p: Option<Vec<usize>>,
    #[serde(default)]
    b2p: Option<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
struct SolvePayload {
    n: usize,
    monomials: Vec<LabelledQChar>,
    matrix: Vec<Vec<LaurentInt>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct LabelledQChar {
    label: String,
    qchar: QChar,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Validation(String),
    Computation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_validation() {
            Failure::Validation(e.to_string())
        } else {
            Failure::Computation(e.to_string())
        }
    }
}

type CmdResult = std::result::Result<Rendered, Failure>;

/// Rendered output plus whether every check passed.
struct Rendered {
    text: String,
    json: String,
    ok: bool,
}

impl Rendered {
    fn ok<S: Serialize>(text: String, json: S) -> Self {
        Rendered::checked(text, json, true)
    }

    fn checked<S: Serialize>(text: String, json: S, ok: bool) -> Self {
        Rendered {
            text,
            json: serde_json::to_string(&json).expect("serializable"),
            ok,
        }
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Validation(msg.into())
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let format = cli.format;
    match dispatch(&cli) {
        Ok(r) => {
            let stdout = match format {
                Format::Text => r.text,
                Format::Json => format!("{}\n", r.json),
            };
            Outcome {
                code: if r.ok { 0 } else { 2 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Validation(m)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
        Err(Failure::Computation(m)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Sigma(a) => cmd_sigma(cli, a),
        Command::Crystal(c) => cmd_crystal(cli, c),
        Command::Qchar(c) => cmd_qchar(cli, c),
        Command::Degrees(c) => cmd_degrees(cli, c),
        Command::Verify(c) => cmd_verify(cli, c),
        Command::Decompose(a) => cmd_decompose(cli, a),
        Command::Selftest => cmd_selftest(),
    }
}

fn read_payload<P: DeserializeOwned>(cli: &Cli) -> std::result::Result<Option<P>, Failure> {
    let Some(path) = &cli.input else {
        return Ok(None);
    };
    let raw = std::fs::read_to_string(path)
        .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map(Some)
        .map_err(|e| invalid(format!("bad JSON payload: {e}")))
}

fn need_n(cli: &Cli) -> std::result::Result<usize, Failure> {
    cli.n.ok_or_else(|| invalid("--n is required"))
}

fn need<'a>(flag: &str, v: &'a Option<String>) -> std::result::Result<&'a str, Failure> {
    v.as_deref()
        .ok_or_else(|| invalid(format!("--{flag} is required")))
}

fn cartan(n: usize) -> std::result::Result<CartanA, Failure> {
    Ok(CartanA::new(n)?)
}

fn parse_entries(s: &str) -> std::result::Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| invalid(format!("bad entry {t:?}")))
        })
        .collect()
}

fn one_column(n: usize, s: &str) -> std::result::Result<ColumnTableau, Failure> {
    Ok(ColumnTableau::new(n, parse_entries(s)?)?)
}

fn columns_from_lists(
    n: usize,
    cols: &[Vec<usize>],
) -> std::result::Result<Vec<ColumnTableau>, Failure> {
    Ok(cols
        .iter()
        .map(|c| ColumnTableau::new(n, c.clone()))
        .collect::<crate::Result<Vec<_>>>()?)
}

fn cmd_sigma(cli: &Cli, a: &SigmaArgs) -> CmdResult {
    let req = match read_payload::<SigmaRequest>(cli)? {
        Some(r) => r,
        None => SigmaRequest {
            n: need_n(cli)?,
            first: parse_entries(need("first", &a.first)?)?,
            second: parse_entries(need("second", &a.second)?)?,
        },
    };
    let out = req.run()?;
    let fmt = |v: &[usize]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let text = format!(
        "bits_in  {}\nbits_out {}\nresult   {}|{}\n",
        out.bits_in,
        out.bits_out,
        fmt(&out.first),
        fmt(&out.second)
    );
    Ok(Rendered::ok(text, &out))
}

fn element(cli: &Cli, flag: &str, v: &Option<String>) -> std::result::Result<TensorElt, Failure> {
    if let Some(t) = read_payload::<TensorElt>(cli)? {
        return Ok(t);
    }
    Ok(TensorElt::parse(need_n(cli)?, need(flag, v)?)?)
}

fn cmd_crystal(cli: &Cli, c: &CrystalCmd) -> CmdResult {
    match c {
        CrystalCmd::Raise { elt, order } => {
            let b = element(cli, "elt", elt)?;
            let order = match order {
                Order::Smallest => RaiseOrder::SmallestFirst,
                Order::Largest => RaiseOrder::LargestFirst,
            };
            let (hw, path) = to_highest_weight_by(&b, order);
            let path_text = if path.is_empty() {
                "-".to_string()
            } else {
                path.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            let text = format!("highest {hw}\npath    {path_text}\n");
            Ok(Rendered::ok(text, json!({"highest": hw, "path": path})))
        }
        CrystalCmd::Component { elt } => {
            let b = element(cli, "elt", elt)?;
            let mut comp = component(&b);
            comp.sort();
            let text: String = comp.iter().map(|e| format!("{e}\n")).collect();
            Ok(Rendered::ok(
                text,
                json!({"size": comp.len(), "elements": comp}),
            ))
        }
        CrystalCmd::Equiv { left, right } => {
            let (l, r) = match read_payload::<EquivPayload>(cli)? {
                Some(p) => (p.left, p.right),
                None => {
                    let n = need_n(cli)?;
                    (
                        TensorElt::parse(n, need("left", left)?)?,
                        TensorElt::parse(n, need("right", right)?)?,
                    )
                }
            };
            if l.n() != r.n() {
                return Err(invalid(format!(
                    "elements over n = {} and n = {}",
                    l.n(),
                    r.n()
                )));
            }
            let eq = crystal_equivalent(&l, &r);
            Ok(Rendered::ok(format!("{eq}\n"), json!({"equivalent": eq})))
        }
    }
}

/// Column list in convolution order, from `--input` or `--columns`.
fn convolution_columns(
    cli: &Cli,
    v: &Option<String>,
) -> std::result::Result<(usize, Vec<ColumnTableau>, i64), Failure> {
    if let Some(p) = read_payload::<ColumnsPayload>(cli)? {
        return Ok((p.n, columns_from_lists(p.n, &p.columns)?, p.shift));
    }
    let n = need_n(cli)?;
    Ok((n, parse_columns(n, need("columns", v)?)?, 0))
}

fn concat_from(
    n: usize,
    written: Vec<ColumnTableau>,
) -> std::result::Result<ColumnStrictConcat, Failure> {
    let mut cols = written;
    cols.reverse();
    Ok(ColumnStrictConcat::new(n, cols)?)
}

fn qchar_rendered(q: &QChar) -> Rendered {
    Rendered::ok(format!("{q}\n"), q)
}

fn cmd_qchar(cli: &Cli, c: &QcharCmd) -> CmdResult {
    match c {
        QcharCmd::Sp { column } => {
            let (n, col) = match read_payload::<ColumnPayload>(cli)? {
                Some(p) => (p.n, ColumnTableau::new(p.n, p.column)?),
                None => {
                    let n = need_n(cli)?;
                    (n, one_column(n, need("column", column)?)?)
                }
            };
            Ok(qchar_rendered(&qch_sp(&col, &cartan(n)?)?))
        }
        QcharCmd::Shuffle { columns, shift } => {
            let (n, cols, payload_shift) = convolution_columns(cli, columns)?;
            let cd = cartan(n)?;
            let factors = cols
                .iter()
                .map(|c| qch_sp(c, &cd))
                .collect::<crate::Result<Vec<_>>>()?;
            let total = shuffle_all(&factors, &cd)?.shift(shift + payload_shift);
            Ok(qchar_rendered(&total))
        }
        QcharCmd::Solve { columns } => {
            if cli.input.is_some() && columns.is_none() {
                return solve_payload(cli);
            }
            let (n, cols, _) = convolution_columns(cli, columns)?;
            let t = concat_from(n, cols)?;
            let simples = simple_qchars(&t.shape(), &cartan(n)?, &t.content())?;
            let labelled: Vec<LabelledQChar> = simples
                .into_iter()
                .map(|(t, q)| LabelledQChar {
                    label: simple_label(&t),
                    qchar: q,
                })
                .collect();
            Ok(solved_rendered(labelled))
        }
    }
}

fn solve_payload(cli: &Cli) -> CmdResult {
    let p: SolvePayload = read_payload(cli)?.expect("input present");
    if let Some(m) = p.monomials.iter().find(|m| m.qchar.n() != p.n) {
        return Err(invalid(format!(
            "monomial {} is over n = {}, not {}",
            m.label,
            m.qchar.n(),
            p.n
        )));
    }
    let monomials: Vec<(String, QChar)> = p
        .monomials
        .into_iter()
        .map(|m| (m.label, m.qchar))
        .collect();
    let solved = solve_unitriangular(&monomials, &p.matrix)?;
    Ok(solved_rendered(
        solved
            .into_iter()
            .map(|(label, qchar)| LabelledQChar { label, qchar })
            .collect(),
    ))
}

fn solved_rendered(simples: Vec<LabelledQChar>) -> Rendered {
    let text: String = simples
        .iter()
        .map(|s| format!("{} = {}\n", s.label, s.qchar))
        .collect();
    Rendered::ok(text, json!({"simples": simples}))
}

fn pair_factors(cli: &Cli, a: &PairArgs) -> std::result::Result<[Option<Factor>; 4], Failure> {
    let (n, lists) = match read_payload::<PairPayload>(cli)? {
        Some(p) => (p.n, [Some(p.b1), Some(p.b2), p.b1p, p.b2p]),
        None => {
            let n = need_n(cli)?;
            let mut lists: [Option<Vec<usize>>; 4] = Default::default();
            for (slot, v) in lists.iter_mut().zip([&a.b1, &a.b2, &a.b1p, &a.b2p]) {
                if let Some(s) = v {
                    *slot = Some(parse_entries(s)?);
                }
            }
            (n, lists)
        }
    };
    let mut out: [Option<Factor>; 4] = Default::default();
    for (slot, l) in out.iter_mut().zip(lists) {
        if let Some(e) = l {
            *slot = Some(Factor::new(ColumnTableau::new(n, e)?)?);
        }
    }
    for (name, f) in ["b1", "b2"].iter().zip(&out) {
        if f.is_none() {
            return Err(invalid(format!("--{name} is required")));
        }
    }
    Ok(out)
}

fn cmd_degrees(cli: &Cli, c: &DegreesCmd) -> CmdResult {
    match c {
        DegreesCmd::T { columns } => {
            let (n, cols, _) = convolution_columns(cli, columns)?;
            let t = convolution_shift(&cols, &cartan(n)?)?;
            Ok(Rendered::ok(format!("{t}\n"), json!({"t": t})))
        }
        DegreesCmd::D(a) => {
            let [b1, b2, b1p, b2p] = pair_factors(cli, a)?;
            let (b1p, b2p) = match (b1p, b2p) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(invalid("--b1p and --b2p are required")),
            };
            let d = hom_degree_d(
                b1.as_ref().expect("checked"),
                b2.as_ref().expect("checked"),
                &b1p,
                &b2p,
            )?;
            Ok(Rendered::ok(format!("{d}\n"), json!({"d": d})))
        }
        DegreesCmd::Lambda(a) => {
            let [b1, b2, _, b2p] = pair_factors(cli, a)?;
            let li = lambda_invariants(
                b1.as_ref().expect("checked"),
                b2.as_ref().expect("checked"),
                b2p.as_ref(),
            )?;
            let dd = li.dd.map(|r| r.to_string());
            let mut text = format!(
                "lambda_tilde {}\nlambda       {}\n",
                li.lambda_tilde, li.lambda
            );
            if let Some(d) = &dd {
                text.push_str(&format!("dd           {d}\n"));
            }
            Ok(Rendered::ok(
                text,
                json!({"lambda_tilde": li.lambda_tilde, "lambda": li.lambda, "dd": dd}),
            ))
        }
        DegreesCmd::Commute(a) => {
            let [b1, b2, _, _] = pair_factors(cli, a)?;
            let c = strongly_commute(b1.as_ref().expect("checked"), b2.as_ref().expect("checked"))?;
            Ok(Rendered::ok(
                format!("{c}\n"),
                json!({"strongly_commute": c}),
            ))
        }
    }
}

fn cmd_verify(cli: &Cli, c: &VerifyCmd) -> CmdResult {
    let (column, cyclotomic) = match c {
        VerifyCmd::Relations { column } => (column, false),
        VerifyCmd::Cyclotomic { column } => (column, true),
    };
    let (n, cols) = match read_payload::<OptColumnPayload>(cli)? {
        Some(p) => {
            let cols = match p.column {
                Some(e) => vec![ColumnTableau::new(p.n, e)?],
                None => crystal_columns(p.n),
            };
            (p.n, cols)
        }
        None => {
            let n = need_n(cli)?;
            let cols = match column {
                Some(s) => vec![one_column(n, s)?],
                None => crystal_columns(n),
            };
            (n, cols)
        }
    };
    let cd = cartan(n)?;
    let qp = QParams::type_a(&cd);
    let mut report = RelationReport::default();
    for col in &cols {
        let m = build_sp(col, &cd)?;
        let r = if cyclotomic {
            verify_cyclotomic(&m)
        } else {
            verify_qha_relations(&m, &qp)
        };
        report.0.extend(r.0);
    }
    let failures: Vec<String> = report
        .failures()
        .map(|f| format!("FAIL {} {}\n", f.relation, f.instance))
        .collect();
    let mut text: String = failures.concat();
    text.push_str(&format!(
        "{} modules, {} checks, {} failures\n",
        cols.len(),
        report.len(),
        failures.len()
    ));
    Ok(Rendered::checked(text, &report, report.passed()))
}

fn cmd_decompose(cli: &Cli, a: &DecomposeArgs) -> CmdResult {
    let (n, cols, _) = convolution_columns(cli, &a.columns)?;
    let t = concat_from(n, cols)?;
    let cd = cartan(n)?;
    if a.matrix {
        let m = TransitionMatrix::build(&t.shape(), n, &t.content())?;
        let rows: Vec<String> = m
            .tableaux
            .iter()
            .map(|s| ColumnStrictConcat::from_ssyt(s).map(|c| c.to_flat()))
            .collect::<crate::Result<_>>()?;
        let columns: Vec<String> = m.tableaux.iter().map(|s| s.to_string()).collect();
        let entries: Vec<Vec<String>> = m
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        let mut text = format!("T \\ T'\t{}\n", columns.join("\t"));
        for (r, e) in rows.iter().zip(&entries) {
            text.push_str(&format!("{r}\t{}\n", e.join("\t")));
        }
        return Ok(Rendered::ok(
            text,
            json!({"rows": rows, "columns": columns, "entries": entries}),
        ));
    }
    let d = graded_decomposition(&t, &cd)?;
    let map: BTreeMap<String, String> = d
        .iter()
        .map(|(k, v)| (simple_label(k), v.to_string()))
        .collect();
    let text: String = d
        .iter()
        .map(|(k, v)| format!("{} {v}\n", simple_label(k)))
        .collect();
    Ok(Rendered::ok(text, json!(map)))
}

fn cmd_selftest() -> CmdResult {
    let cases = run_golden();
    let ok = cases.iter().all(|c| c.passed);
    let text: String = cases
        .iter()
        .map(|c| match &c.detail {
            None => format!("ok   {}\n", c.name),
            Some(d) => format!("FAIL {}: {d}\n", c.name),
        })
        .collect();
    Ok(Rendered::checked(
        text,
        json!({"schema": SCHEMA_VERSION, "cases": cases}),
        ok,
    ))
}
