//! The `homotopy-calc` command line.
//!
//! Exit codes: 0 success, 2 a hypothesis gate failed, 3 invalid input,
//! 4 two independent computations disagreed.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::catalog::{self, CatalogEmbedding, CatalogGroup};
use crate::error::Error;
use crate::extcplx::{self, TwoTermComplex};
use crate::fgab::{FgAbGroup, FgAbMap, InvariantFactors, JsonInt};
use crate::homotopy::{self, HomotopyResult, MethodChoice, SpaceDescriptor};
use crate::intlat::IntMatrix;
use crate::rootdata::{
    self, char_group, EmbeddingDescriptor, GroupDescriptor, RootDatum, RootDatumJson,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_GATE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Pi1,
    Pi2,
    Pic,
    Pi1alg,
    Ext0,
    All,
    CatalogList,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Pi1 => "pi1",
            Command::Pi2 => "pi2",
            Command::Pic => "pic",
            Command::Pi1alg => "pi1alg",
            Command::Ext0 => "ext0",
            Command::All => "all",
            Command::CatalogList => "catalog-list",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[default]
    Auto,
    ThmMain,
    ThmPi2,
    Both,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::ThmMain => MethodChoice::ThmMain,
            MethodArg::ThmPi2 => MethodChoice::ThmPi2,
            MethodArg::Both => MethodChoice::Both,
        }
    }
}

/// Homotopy groups of homogeneous spaces from root data.
#[derive(Clone, Debug, Parser)]
#[command(name = "homotopy-calc", version)]
pub struct Args {
    pub command: Command,
    /// Input document (JSON).
    #[arg(long, conflicts_with = "input_dir")]
    pub input: Option<PathBuf>,
    /// Process every `*.json` file in a directory, in name order.
    #[arg(long)]
    pub input_dir: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
    /// Which route computes π₁.
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Also run the independent route and require agreement.
    #[arg(long)]
    pub oracle: bool,
    /// Omit timing from JSON output.
    #[arg(long)]
    pub stable: bool,
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    if e.is_gate_failure() {
        EXIT_GATE
    } else if matches!(e, Error::InternalDisagreement(_)) {
        EXIT_DISAGREEMENT
    } else {
        EXIT_INVALID
    }
}

/// Runs a parsed command line.
pub fn run(args: &Args) -> Outcome {
    if args.command == Command::CatalogList {
        return catalog_list(args);
    }
    match (&args.input, &args.input_dir) {
        (Some(path), None) => {
            let r = run_file(args, path);
            finish(args, vec![r], None)
        }
        (None, Some(dir)) => match json_files(dir) {
            Ok(files) => {
                let results: Vec<FileResult> =
                    files.par_iter().map(|f| run_file(args, f)).collect();
                finish(args, results, Some(files))
            }
            Err(msg) => Outcome {
                code: EXIT_INVALID,
                stdout: String::new(),
                stderr: msg,
            },
        },
        _ => Outcome {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!(
                "{} needs --input FILE or --input-dir DIR\n",
                args.command.name()
            ),
        },
    }
}

/// Runs a command on an input document given as text.
pub fn run_text(args: &Args, text: &str) -> Outcome {
    let r = evaluate(args, text);
    finish(args, vec![r], None)
}

fn json_files(dir: &Path) -> Result<Vec<PathBuf>, String> {
    let entries = fs::read_dir(dir).map_err(|e| format!("cannot read {}: {e}\n", dir.display()))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

/// The result of one input document.
struct FileResult {
    code: i32,
    /// The JSON result object (without timing).
    doc: Value,
    pretty: String,
    elapsed_ms: f64,
}

fn run_file(args: &Args, path: &Path) -> FileResult {
    match fs::read_to_string(path) {
        Ok(text) => evaluate(args, &text),
        Err(e) => failure_result(
            args.command,
            &InputError::new("", format!("cannot read {}: {e}", path.display())),
        ),
    }
}

fn finish(args: &Args, results: Vec<FileResult>, files: Option<Vec<PathBuf>>) -> Outcome {
    let code = results.iter().map(|r| r.code).max().unwrap_or(EXIT_OK);
    let mut stdout = String::new();
    match files {
        None => {
            let r = &results[0];
            if args.json {
                stdout = render(with_timing(args, r.doc.clone(), r.elapsed_ms));
            } else {
                stdout = r.pretty.clone();
            }
        }
        Some(files) => {
            if args.json {
                let docs: Vec<Value> = files
                    .iter()
                    .zip(&results)
                    .map(|(f, r)| {
                        let mut d = with_timing(args, r.doc.clone(), r.elapsed_ms);
                        d["file"] = json!(file_name(f));
                        d
                    })
                    .collect();
                stdout = render(json!({ "exit_code": code, "files": docs }));
            } else {
                for (f, r) in files.iter().zip(&results) {
                    for line in r.pretty.lines() {
                        stdout.push_str(&format!("{}: {line}\n", file_name(f)));
                    }
                }
            }
        }
    }
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn file_name(p: &Path) -> String {
    p.file_name().map_or_else(
        || p.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    )
}

fn with_timing(args: &Args, mut doc: Value, elapsed_ms: f64) -> Value {
    if !args.stable {
        doc["timing"] = json!({ "elapsed_ms": elapsed_ms });
    }
    doc
}

fn render(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn evaluate(args: &Args, text: &str) -> FileResult {
    let start = Instant::now();
    let mut r = match args.command {
        Command::Ext0 => eval_ext0(args, text),
        _ => match parse_space_input(text) {
            Ok(input) => eval_space(args, &input),
            Err(e) => failure_result(args.command, &e),
        },
    };
    r.elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    r
}

/// A parse or validation failure, located by field path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub path: String,
    pub message: String,
}

impl InputError {
    fn new(path: &str, message: impl Into<String>) -> Self {
        InputError {
            path: path.to_string(),
            message: message.into(),
        }
    }

    fn at(path: &str, e: Error) -> Self {
        InputError::new(path, e.to_string())
    }
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.path.is_empty() {
            write!(f, "InvalidInput: {}", self.message)
        } else {
            write!(f, "InvalidInput at {}: {}", self.path, self.message)
        }
    }
}

fn failure_result(command: Command, e: &InputError) -> FileResult {
    FileResult {
        code: EXIT_INVALID,
        doc: json!({
            "command": command.name(),
            "exit_code": EXIT_INVALID,
            "error": { "kind": "InvalidInput", "path": e.path, "message": e.message },
        }),
        pretty: format!("{e}\n"),
        elapsed_ms: 0.0,
    }
}

/// The parsed input document.
#[derive(Clone, Debug)]
pub struct SpaceInput {
    pub g: GroupDescriptor,
    pub h: Option<GroupDescriptor>,
    pub embedding: Option<EmbeddingDescriptor>,
}

impl SpaceInput {
    pub fn space(&self) -> Result<SpaceDescriptor, InputError> {
        let h = self
            .h
            .clone()
            .ok_or_else(|| InputError::new("h", "missing field"))?;
        let e = self
            .embedding
            .clone()
            .ok_or_else(|| InputError::new("embedding", "missing field"))?;
        SpaceDescriptor::new(self.g.clone(), h, e).map_err(|e| InputError::at("embedding", e))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Flags {
    h_connected: Option<bool>,
    h_ker_char_connected: Option<bool>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationJson {
    generators: usize,
    /// Relation vectors, each with one entry per generator.
    #[serde(default)]
    relations: Vec<Vec<JsonInt>>,
}

fn from_value<T: DeserializeOwned>(v: &Value, path: &str) -> Result<T, InputError> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let inner = e.path().to_string();
        let full = match (path.is_empty(), inner == ".") {
            (_, true) => path.to_string(),
            (true, false) => inner,
            (false, false) => format!("{path}.{inner}"),
        };
        InputError::new(&full, e.into_inner().to_string())
    })
}

fn parse_document(text: &str) -> Result<Map<String, Value>, InputError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| InputError::new("", format!("JSON syntax: {e}")))?;
    match v {
        Value::Object(m) => Ok(m),
        _ => Err(InputError::new("", "the document must be a JSON object")),
    }
}

fn check_keys(m: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<(), InputError> {
    for k in m.keys() {
        if !allowed.contains(&k.as_str()) {
            let p = if path.is_empty() {
                k.clone()
            } else {
                format!("{path}.{k}")
            };
            return Err(InputError::new(
                &p,
                format!("unknown field, expected one of {allowed:?}"),
            ));
        }
    }
    Ok(())
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, InputError> {
    v.as_object()
        .ok_or_else(|| InputError::new(path, "expected an object"))
}

fn presentation(v: &Value, path: &str) -> Result<FgAbGroup, InputError> {
    let p: PresentationJson = from_value(v, path)?;
    let cols: Vec<Vec<BigInt>> = p
        .relations
        .iter()
        .map(|r| r.iter().map(|x| x.0.clone()).collect())
        .collect();
    for (i, r) in cols.iter().enumerate() {
        if r.len() != p.generators {
            return Err(InputError::new(
                &format!("{path}.relations[{i}]"),
                format!(
                    "relation has {} entries for {} generators",
                    r.len(),
                    p.generators
                ),
            ));
        }
    }
    let rel = IntMatrix::from_cols(p.generators, &cols).map_err(|e| InputError::at(path, e))?;
    FgAbGroup::new(p.generators, rel).map_err(|e| InputError::at(path, e))
}

fn group_spec(v: &Value, path: &str) -> Result<GroupDescriptor, InputError> {
    let m = as_object(v, path)?;
    let g = if m.contains_key("catalog") {
        let c: CatalogGroup = from_value(v, path)?;
        c.descriptor().map_err(|e| InputError::at(path, e))?
    } else if let Some(rd) = m.get("root_datum") {
        check_keys(m, path, &["root_datum"])?;
        let p = format!("{path}.root_datum");
        let j: RootDatumJson = from_value(rd, &p)?;
        GroupDescriptor::Reductive(RootDatum::try_from(&j).map_err(|e| InputError::at(&p, e))?)
    } else if let Some(mv) = m.get("multiplicative") {
        check_keys(m, path, &["multiplicative"])?;
        GroupDescriptor::Multiplicative(presentation(mv, &format!("{path}.multiplicative"))?)
    } else {
        return Err(InputError::new(
            path,
            "expected one of \"catalog\", \"root_datum\", \"multiplicative\"",
        ));
    };
    g.validate().map_err(|e| InputError::at(path, e))?;
    Ok(g)
}

/// A matrix given as a list of rows with a known shape.
fn matrix(v: &Value, path: &str, rows: usize, cols: usize) -> Result<IntMatrix, InputError> {
    let data: Vec<Vec<JsonInt>> = from_value(v, path)?;
    // `[]` stands for any matrix with no entries
    if data.is_empty() && (rows == 0 || cols == 0) {
        return Ok(IntMatrix::zeros(rows, cols));
    }
    if data.len() != rows {
        return Err(InputError::new(
            path,
            format!("expected {rows} rows, got {}", data.len()),
        ));
    }
    for (i, r) in data.iter().enumerate() {
        if r.len() != cols {
            return Err(InputError::new(
                &format!("{path}[{i}]"),
                format!("expected {cols} entries, got {}", r.len()),
            ));
        }
    }
    let rows_big: Vec<Vec<BigInt>> = data
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.0).collect())
        .collect();
    IntMatrix::from_rows(cols, &rows_big).map_err(|e| InputError::at(path, e))
}

/// Parses a space document. `h` and `embedding` are optional so that
/// `pic` and `pi1alg` can run on a document naming only `g`.
pub fn parse_space_input(text: &str) -> Result<SpaceInput, InputError> {
    let doc = parse_document(text)?;
    check_keys(&doc, "", &["g", "h", "embedding", "flags", "description"])?;

    let flags: Option<Flags> = doc
        .get("flags")
        .map(|f| from_value(f, "flags"))
        .transpose()?;
    let catalog_embedding = doc
        .get("embedding")
        .and_then(Value::as_object)
        .and_then(|m| m.get("catalog_embedding"));

    let (g, h, mut embedding) = if let Some(ce) = catalog_embedding {
        check_keys(
            as_object(&doc["embedding"], "embedding")?,
            "embedding",
            &["catalog_embedding"],
        )?;
        if doc.contains_key("g") || doc.contains_key("h") {
            return Err(InputError::new(
                "embedding.catalog_embedding",
                "g and h come from the catalog embedding; omit them",
            ));
        }
        let p = "embedding.catalog_embedding";
        let kind: CatalogEmbedding = from_value(ce, p)?;
        let (g, h, e) = catalog::make_embedding(&kind).map_err(|e| InputError::at(p, e))?;
        (g, Some(h), Some(e))
    } else {
        let g = group_spec(
            doc.get("g")
                .ok_or_else(|| InputError::new("g", "missing field"))?,
            "g",
        )?;
        let h = doc.get("h").map(|v| group_spec(v, "h")).transpose()?;
        let embedding = match (doc.get("embedding"), &h) {
            (None, _) => None,
            (Some(_), None) => {
                return Err(InputError::new("h", "missing field (needed by embedding)"))
            }
            (Some(ev), Some(h)) => Some(embedding_spec(ev, &g, h)?),
        };
        (g, h, embedding)
    };

    if let (Some(f), Some(e)) = (flags, embedding.as_mut()) {
        if f.h_connected.is_some() {
            e.h_connected = f.h_connected;
        }
        if f.h_ker_char_connected.is_some() {
            e.h_ker_char_connected = f.h_ker_char_connected;
        }
    }
    Ok(SpaceInput { g, h, embedding })
}

fn embedding_spec(
    v: &Value,
    g: &GroupDescriptor,
    h: &GroupDescriptor,
) -> Result<EmbeddingDescriptor, InputError> {
    let m = as_object(v, "embedding")?;
    check_keys(m, "embedding", &["cochar_matrix", "char_map"])?;
    match (m.get("cochar_matrix"), m.get("char_map")) {
        (Some(cm), None) => {
            let p = "embedding.cochar_matrix";
            let (gd, hd) = match (g.root_datum(), h.root_datum()) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(InputError::new(
                        p,
                        "a cocharacter matrix needs root data for g and h",
                    ))
                }
            };
            let mat = matrix(cm, p, gd.rank(), hd.rank())?;
            rootdata::validate_cocharacter_embedding(gd, hd, &mat)
                .map_err(|e| InputError::at(p, e))?;
            Ok(EmbeddingDescriptor::cocharacter(mat))
        }
        (None, Some(cm)) => {
            let p = "embedding.char_map";
            let rows = char_group(h).generators();
            let cols = char_group(g).generators();
            Ok(EmbeddingDescriptor::character(matrix(cm, p, rows, cols)?))
        }
        _ => Err(InputError::new(
            "embedding",
            "give exactly one of \"cochar_matrix\", \"char_map\", \"catalog_embedding\"",
        )),
    }
}

fn group_json(inv: &InvariantFactors) -> Value {
    json!({ "group": inv, "pretty": inv.to_string() })
}

fn error_json(e: &Error) -> Value {
    let mut v = json!({ "kind": e.kind(), "message": e.to_string() });
    if let Error::PicNonTrivial(p) = e {
        v["pic"] = group_json(p);
    }
    v
}

fn result_json(r: &HomotopyResult) -> Value {
    let mut v = group_json(&r.group);
    v["method"] = json!(r.method.as_str());
    v["gates"] = serde_json::to_value(&r.gates).expect("gates serialize");
    v
}

fn single(
    command: Command,
    r: Result<Value, Error>,
    pretty_ok: impl FnOnce(&Value) -> String,
) -> FileResult {
    match r {
        Ok(v) => FileResult {
            code: EXIT_OK,
            pretty: pretty_ok(&v),
            doc: json!({ "command": command.name(), "exit_code": EXIT_OK, "result": v }),
            elapsed_ms: 0.0,
        },
        Err(e) => {
            let code = exit_code(&e);
            FileResult {
                code,
                pretty: format!("{e}\n"),
                doc: json!({ "command": command.name(), "exit_code": code, "error": error_json(&e) }),
                elapsed_ms: 0.0,
            }
        }
    }
}

fn pretty_group(v: &Value) -> String {
    format!("{}\n", v["pretty"].as_str().unwrap_or_default())
}

fn eval_space(args: &Args, input: &SpaceInput) -> FileResult {
    let cmd = args.command;
    match cmd {
        Command::Pic => single(
            cmd,
            rootdata::pic_group(&input.g).map(|p| group_json(&p.invariants())),
            pretty_group,
        ),
        Command::Pi1alg => single(
            cmd,
            rootdata::pi1_alg(&input.g).map(|p| group_json(&p.invariants())),
            pretty_group,
        ),
        Command::Pi1 | Command::Pi2 | Command::All => {
            let s = match input.space() {
                Ok(s) => s,
                Err(e) => return failure_result(cmd, &e),
            };
            match cmd {
                Command::Pi1 => single(
                    cmd,
                    pi1_with_oracle(args, &s).map(|r| result_json(&r)),
                    pretty_group,
                ),
                Command::Pi2 => single(
                    cmd,
                    homotopy::pi2(&s).map(|r| result_json(&r)),
                    pretty_group,
                ),
                _ => eval_all(&s),
            }
        }
        Command::Ext0 | Command::CatalogList => unreachable!("dispatched elsewhere"),
    }
}

/// `π₁` by the requested route; with `--oracle`, the other route also runs
/// whenever its hypotheses hold, and the two must agree.
fn pi1_with_oracle(args: &Args, s: &SpaceDescriptor) -> Result<HomotopyResult, Error> {
    let mut r = homotopy::pi1(s, args.method.into())?;
    if args.oracle && r.method != homotopy::Method::Both {
        let other = match r.method {
            homotopy::Method::ThmMain => homotopy::pi1_thm_pi2(s),
            _ => homotopy::pi1_thm_main(s),
        };
        match other {
            Ok(o) if o.group != r.group => {
                return Err(Error::InternalDisagreement(format!(
                    "{} gives {}, {} gives {}",
                    r.method.as_str(),
                    r.group,
                    o.method.as_str(),
                    o.group
                )))
            }
            Ok(o) => r.gates.push(homotopy::Gate {
                name: "oracle".into(),
                passed: true,
                detail: format!("{} agrees", o.method.as_str()),
            }),
            Err(e @ Error::InternalDisagreement(_)) => return Err(e),
            Err(e) => r.gates.push(homotopy::Gate {
                name: "oracle".into(),
                passed: false,
                detail: format!("other route not applicable: {}", e.kind()),
            }),
        }
    }
    Ok(r)
}

fn eval_all(s: &SpaceDescriptor) -> FileResult {
    let all = homotopy::compute_all(s);
    let entries = [
        ("pi1", &all.pi1),
        ("pi1_thm_main", &all.pi1_thm_main),
        ("pi1_thm_pi2", &all.pi1_thm_pi2),
        ("pi2", &all.pi2),
    ];
    let mut results = Map::new();
    let mut pretty = String::new();
    for (name, r) in entries {
        match r {
            Ok(r) => {
                results.insert(name.into(), result_json(r));
                pretty.push_str(&format!("{name}: {} [{}]\n", r.group, r.method.as_str()));
            }
            Err(e) => {
                results.insert(name.into(), json!({ "error": error_json(e) }));
                pretty.push_str(&format!("{name}: {e}\n"));
            }
        }
    }
    let errors: Vec<&Error> = entries
        .iter()
        .filter_map(|(_, r)| r.as_ref().err())
        .collect();
    let any_ok = entries.iter().any(|(_, r)| r.is_ok());
    let code = if errors
        .iter()
        .any(|e| matches!(e, Error::InternalDisagreement(_)))
    {
        EXIT_DISAGREEMENT
    } else if any_ok {
        EXIT_OK
    } else {
        errors.iter().map(|e| exit_code(e)).min().unwrap_or(EXIT_OK)
    };
    FileResult {
        code,
        doc: json!({ "command": "all", "exit_code": code, "results": results }),
        pretty,
        elapsed_ms: 0.0,
    }
}

fn parse_complex(text: &str) -> Result<TwoTermComplex, InputError> {
    let doc = parse_document(text)?;
    check_keys(&doc, "", &["a0", "a1", "alpha", "description"])?;
    let get = |k: &str| {
        doc.get(k)
            .ok_or_else(|| InputError::new(k, "missing field"))
    };
    let a0 = presentation(get("a0")?, "a0")?;
    let a1 = presentation(get("a1")?, "a1")?;
    let alpha = matrix(get("alpha")?, "alpha", a1.generators(), a0.generators())?;
    let map = FgAbMap::new_checked(a0, a1, alpha).map_err(|e| InputError::at("alpha", e))?;
    TwoTermComplex::new(map).map_err(|e| InputError::at("alpha", e))
}

fn eval_ext0(args: &Args, text: &str) -> FileResult {
    let k = match parse_complex(text) {
        Ok(k) => k,
        Err(e) => return failure_result(Command::Ext0, &e),
    };
    let torsion_free = k.a0().is_torsion_free();
    let r = (|| -> Result<Value, Error> {
        let (group, method) = if torsion_free {
            (
                extcplx::ext0_fiber_product(&k)?.invariants(),
                "fiber_product",
            )
        } else {
            (extcplx::ext0_resolution(&k)?.invariants(), "resolution")
        };
        let mut v = group_json(&group);
        v["method"] = json!(method);
        if args.oracle && torsion_free {
            let other = extcplx::ext0_resolution(&k)?.invariants();
            if other != group {
                return Err(Error::InternalDisagreement(format!(
                    "Ext⁰ via fiber product is {group}, via resolution {other}"
                )));
            }
            v["oracle"] = json!({ "method": "resolution", "agrees": true });
        }
        Ok(v)
    })();
    single(Command::Ext0, r, pretty_group)
}

fn catalog_list(args: &Args) -> Outcome {
    let families = [
        ("SL", "n >= 1", "rank n-1, simply connected"),
        ("GL", "n >= 1", "rank n"),
        ("PGL", "n >= 1", "rank n-1, adjoint"),
        ("Sp", "n even >= 2", "rank n/2, n x n matrices"),
        ("SO", "n >= 3", "rank floor(n/2)"),
        ("Spin", "n >= 3", "rank floor(n/2), simply connected"),
        ("Torus", "n >= 0", "rank n, no roots"),
        ("Mu", "n >= 1", "multiplicative, characters Z/n"),
        ("Product", "factors", "all reductive or all multiplicative"),
    ];
    let embeddings = [
        "maximal_torus",
        "block",
        "center_mu",
        "subtorus",
        "det_kernel",
        "diagonal_torus_in",
        "trivial",
    ];
    debug_assert_eq!(families.len(), catalog::CATALOG_NAMES.len());
    let stdout = if args.json {
        let groups: Vec<Value> = families
            .iter()
            .map(|(n, p, d)| json!({ "name": n, "params": p, "description": d }))
            .collect();
        render(
            json!({ "command": "catalog-list", "exit_code": EXIT_OK, "groups": groups, "embeddings": embeddings }),
        )
    } else {
        let mut s = String::new();
        for (n, p, d) in families {
            s.push_str(&format!("{n:<8} {p:<12} {d}\n"));
        }
        s.push_str(&format!("embeddings: {}\n", embeddings.join(", ")));
        s
    };
    Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(command: Command) -> Args {
        Args {
            command,
            input: None,
            input_dir: None,
            json: false,
            method: MethodArg::Auto,
            oracle: false,
            stable: true,
        }
    }

    fn run_on(command: Command, text: &str) -> Outcome {
        run_text(&args(command), text)
    }

    const SL2_MU2: &str = r#"{"embedding": {"catalog_embedding": {"kind": "center_mu", "n": 2}}}"#;
    const PGL2_POINT: &str = r#"{
        "g": {"catalog": "PGL", "n": 2},
        "h": {"catalog": "Torus", "n": 0},
        "embedding": {"cochar_matrix": []}
    }"#;
    const SL2_TORUS: &str = r#"{
        "g": {"root_datum": {"rank": 1, "roots": [[2], [-2]], "coroots": [[1], [-1]]}},
        "h": {"catalog": "Torus", "n": 1},
        "embedding": {"cochar_matrix": [[1]]}
    }"#;

    #[test]
    fn documented_examples() {
        assert_eq!(
            run_on(Command::Pi1, SL2_MU2),
            Outcome {
                code: 0,
                stdout: "Z/2\n".into(),
                stderr: String::new()
            }
        );
        let mut a = args(Command::Pi1);
        a.method = MethodArg::ThmMain;
        let o = run_text(&a, PGL2_POINT);
        assert_eq!(o.code, EXIT_GATE);
        assert_eq!(o.stdout, "PicNonTrivial: Pic(G) = Z/2\n");
        assert_eq!(run_on(Command::Pi2, SL2_TORUS).stdout, "Z\n");
        let o = run_on(
            Command::Ext0,
            r#"{"a0": {"generators": 0}, "a1": {"generators": 1}, "alpha": []}"#,
        );
        assert_eq!((o.code, o.stdout.as_str()), (0, "0\n"));
    }

    #[test]
    fn pic_and_pi1alg_need_only_g() {
        assert_eq!(
            run_on(Command::Pic, r#"{"g": {"catalog": "PGL", "n": 3}}"#).stdout,
            "Z/3\n"
        );
        assert_eq!(
            run_on(Command::Pi1alg, r#"{"g": {"catalog": "GL", "n": 3}}"#).stdout,
            "Z\n"
        );
    }

    #[test]
    fn parse_errors_name_the_field() {
        let o = run_on(Command::Pi1, r#"{"g": {"catalog": "SL", "n": "two"}}"#);
        assert_eq!(o.code, EXIT_INVALID);
        assert!(o.stdout.contains("at g"), "{}", o.stdout);
        let o = run_on(
            Command::Pi1,
            r#"{"g": {"root_datum": {"rank": 1, "roots": [[1]], "coroots": [[1]]}}, "h": {"catalog": "Torus", "n": 0}, "embedding": {"cochar_matrix": []}}"#,
        );
        assert_eq!(o.code, EXIT_INVALID);
        assert!(o.stdout.contains("InvalidRootDatum"), "{}", o.stdout);
        let o = run_on(
            Command::Pi1,
            r#"{"g": {"catalog": "SL", "n": 2}, "h": {"catalog": "Torus", "n": 1}, "embedding": {"cochar_matrix": [[1, 2]]}}"#,
        );
        assert!(
            o.stdout.contains("embedding.cochar_matrix[0]"),
            "{}",
            o.stdout
        );
        let o = run_on(Command::Pi1, "{not json");
        assert_eq!(o.code, EXIT_INVALID);
        assert!(o.stdout.contains("line 1"), "{}", o.stdout);
        let o = run_on(Command::Pi1, r#"{"g": {"catalog": "E", "n": 8}}"#);
        assert_eq!(o.code, EXIT_INVALID);
    }

    #[test]
    fn json_output_round_trips() {
        let mut a = args(Command::Pi1);
        a.json = true;
        let o = run_text(&a, SL2_MU2);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        let inv: InvariantFactors = serde_json::from_value(v["result"]["group"].clone()).unwrap();
        assert_eq!(inv.to_string(), v["result"]["pretty"].as_str().unwrap());
        assert_eq!(v["result"]["method"], "thm_main");
        assert!(v.get("timing").is_none());
        a.stable = false;
        let v: Value = serde_json::from_str(&run_text(&a, SL2_MU2).stdout).unwrap();
        assert!(v["timing"]["elapsed_ms"].is_number());
    }

    #[test]
    fn all_reports_each_route() {
        let o = run_on(Command::All, PGL2_POINT);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("pi1: Z/2 [thm_pi2]"), "{}", o.stdout);
        assert!(
            o.stdout.contains("pi1_thm_main: PicNonTrivial"),
            "{}",
            o.stdout
        );
        assert!(o.stdout.contains("pi2: 0"), "{}", o.stdout);
    }

    #[test]
    fn oracle_for_ext0_and_pi1() {
        let mut a = args(Command::Ext0);
        a.oracle = true;
        a.json = true;
        let text = r#"{"a0": {"generators": 1}, "a1": {"generators": 1, "relations": [[4]]}, "alpha": [[1]]}"#;
        let v: Value = serde_json::from_str(&run_text(&a, text).stdout).unwrap();
        assert_eq!(v["result"]["pretty"], "Z");
        assert_eq!(v["result"]["oracle"]["agrees"], true);
        let mut a = args(Command::Pi1);
        a.oracle = true;
        a.json = true;
        let v: Value = serde_json::from_str(&run_text(&a, SL2_TORUS).stdout).unwrap();
        let gates = v["result"]["gates"].as_array().unwrap();
        assert!(gates
            .iter()
            .any(|g| g["name"] == "oracle" && g["passed"] == true));
    }

    #[test]
    fn catalog_list_needs_no_input() {
        let o = run(&args(Command::CatalogList));
        assert_eq!(o.code, 0);
        assert!(o.stdout.starts_with("SL"));
    }

    #[test]
    fn missing_input_is_invalid() {
        assert_eq!(run(&args(Command::Pi1)).code, EXIT_INVALID);
    }
}
