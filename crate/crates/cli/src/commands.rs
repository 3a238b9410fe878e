use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map};
use wed_core::catalog::{lookup, NAMES};
use wed_core::eds::BRUTE_FORCE_LIMIT;
use wed_core::format::{parse_graph, parse_weight_file, parse_x3c, write_graph};
use wed_core::generate::{random_chordal, random_h_free_chordal, random_interval_graph, x3c_to_graph};
use wed_core::{
    brute_force_wed, chordality, contains_induced, find_induced, mwis_chordal, named, s123_wed,
    square_chordality_report, wed_via_square, EdsSolution, Error, ExactWeight, Graph, WeightMap,
};

use crate::args::{CheckArgs, EdsArgs, EngineChoice, GenCommand};
use crate::report::{digest, error_kind, json_number, Exit, RunReport, Status};

/// What a command prints and how the process exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub exit: Exit,
}

impl Output {
    pub fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            exit: Exit::Yes,
        }
    }

    pub fn failure(message: impl Into<String>) -> Self {
        Output {
            stdout: String::new(),
            stderr: message.into() + "\n",
            exit: Exit::Error,
        }
    }

    fn json(value: &impl Serialize, exit: Exit) -> Self {
        let mut stdout = serde_json::to_string(value).expect("reports serialize");
        stdout.push('\n');
        Output {
            stdout,
            stderr: String::new(),
            exit,
        }
    }
}

/// A failed command: JSON error object on stdout, exit code 3.
fn error_output(command: &str, digest: Option<&str>, kind: &str, message: String) -> Output {
    let mut obj = Map::new();
    obj.insert("command".into(), command.into());
    if let Some(d) = digest {
        obj.insert("input_digest".into(), d.into());
    }
    obj.insert("status".into(), "error".into());
    obj.insert("error_kind".into(), kind.into());
    obj.insert("error".into(), message.into());
    let mut out = Output::json(&obj, Exit::Error);
    out.stderr = format!("{}\n", obj["error"].as_str().unwrap());
    out
}

fn read(path: &Path) -> std::result::Result<Vec<u8>, String> {
    fs::read(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn text(bytes: &[u8], path: &Path) -> std::result::Result<String, String> {
    String::from_utf8(bytes.to_vec()).map_err(|_| format!("{}: not valid UTF-8", path.display()))
}

/// Loaded graph input with its digest.
struct Input {
    graph: Graph,
    weights: WeightMap,
    digest: String,
}

fn load(file: &Path, sidecar: Option<&Path>, command: &str) -> std::result::Result<Input, Output> {
    let io = |msg: String| error_output(command, None, "io", msg);
    let bytes = read(file).map_err(io)?;
    let side = sidecar.map(read).transpose().map_err(io)?;
    let digest = match &side {
        Some(s) => digest(&[&bytes, s]),
        None => digest(&[&bytes]),
    };
    let fail = |e: Error| error_output(command, Some(&digest), error_kind(&e), e.to_string());
    let parsed = parse_graph(&text(&bytes, file).map_err(io)?).map_err(fail)?;
    let mut weights = parsed.weights;
    if let (Some(side), Some(path)) = (side, sidecar) {
        let entries = parse_weight_file(&text(&side, path).map_err(io)?, parsed.graph.n()).map_err(fail)?;
        for (v, w) in entries {
            weights.set(v, w);
        }
    }
    Ok(Input {
        graph: parsed.graph,
        weights,
        digest,
    })
}

pub fn catalog(name: Option<&str>) -> Output {
    match name {
        None => Output::ok(NAMES.iter().map(|n| format!("{n}\n")).collect()),
        Some(name) => match lookup(name) {
            Ok(entry) => {
                let comments = vec![format!("{} ({:?})", entry.name, entry.source)];
                Output::ok(write_graph(&entry.graph, None, &comments))
            }
            Err(e) => Output::failure(e.to_string()),
        },
    }
}

pub fn check(args: &CheckArgs, command: &str) -> Output {
    let input = match load(&args.file, None, command) {
        Ok(i) => i,
        Err(out) => return out,
    };
    let g = &input.graph;
    let mut obj = Map::new();
    obj.insert("command".into(), command.into());
    obj.insert("input_digest".into(), input.digest.clone().into());
    let mut holds = true;
    let chordal_flag = args.chordal || (args.free.is_empty() && !args.square_chordal);
    if chordal_flag {
        let r = chordality(g);
        holds &= r.chordal;
        obj.insert("chordal".into(), r.chordal.into());
        if let Some(h) = r.hole {
            obj.insert("hole".into(), json!(h));
        }
    }
    if !args.free.is_empty() {
        let mut witness = None;
        for name in &args.free {
            let pattern = match named(name) {
                Ok(p) => p,
                Err(e) => return error_output(command, Some(&input.digest), error_kind(&e), e.to_string()),
            };
            match find_induced(g, &pattern) {
                Ok(Some(emb)) => {
                    witness = Some(json!({"h": name, "map": emb.map}));
                    break;
                }
                Ok(None) => {}
                Err(e) => return error_output(command, Some(&input.digest), error_kind(&e), e.to_string()),
            }
        }
        holds &= witness.is_none();
        obj.insert("free".into(), witness.is_none().into());
        if let Some(w) = witness {
            obj.insert("witness".into(), w);
        }
    }
    if args.square_chordal {
        let r = square_chordality_report(g);
        holds &= r.square_chordal;
        obj.insert("square_chordal".into(), r.square_chordal.into());
        if let Some(h) = r.hole {
            obj.insert("square_hole".into(), json!(h));
        }
    }
    Output::json(&obj, if holds { Exit::Yes } else { Exit::No })
}

pub fn mwis(file: &Path, command: &str) -> Output {
    let input = match load(file, None, command) {
        Ok(i) => i,
        Err(out) => return out,
    };
    let mut weights = Vec::with_capacity(input.graph.n());
    for (v, w) in input.weights.iter().enumerate() {
        match w.as_finite() {
            Some(x) => weights.push(x.clone()),
            None => {
                let e = Error::InvalidWeight(format!("vertex {v} has infinite weight"));
                return error_output(command, Some(&input.digest), error_kind(&e), e.to_string());
            }
        }
    }
    match mwis_chordal(&input.graph, &weights) {
        Ok((set, total)) => Output::json(
            &json!({
                "command": command,
                "input_digest": input.digest,
                "weight": json_number(&total),
                "set": set,
            }),
            Exit::Yes,
        ),
        Err(e) => error_output(command, Some(&input.digest), error_kind(&e), e.to_string()),
    }
}

/// Outcome of one engine on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Solved(EdsSolution),
    NoEds,
    Inapplicable(Error),
    Failed(Error),
}

impl Verdict {
    pub fn status(&self) -> Status {
        match self {
            Verdict::Solved(_) => Status::Solved,
            Verdict::NoEds => Status::NoEds,
            Verdict::Inapplicable(_) => Status::Inapplicable,
            Verdict::Failed(_) => Status::Error,
        }
    }

    /// `Some(Some(w))` solved with weight `w`, `Some(None)` no e.d.s.,
    /// `None` undecided.
    pub fn decision(&self) -> Option<Option<&ExactWeight>> {
        match self {
            Verdict::Solved(s) => Some(Some(&s.weight)),
            Verdict::NoEds => Some(None),
            _ => None,
        }
    }
}

fn from_result(r: wed_core::Result<Option<EdsSolution>>) -> Verdict {
    match r {
        Ok(Some(s)) => Verdict::Solved(s),
        Ok(None) => Verdict::NoEds,
        Err(e @ Error::SquareNotChordal { .. }) => Verdict::Inapplicable(e),
        Err(e) => Verdict::Failed(e),
    }
}

pub fn run_brute(g: &Graph, w: &WeightMap) -> Verdict {
    from_result(brute_force_wed(g, w))
}

pub fn run_square(g: &Graph, w: &WeightMap) -> Verdict {
    from_result(wed_via_square(g, w))
}

/// The direct engine. An empty answer only counts as "no e.d.s." when the
/// graph is S₁,₂,₃-free; otherwise the engine is reported inapplicable.
pub fn run_s123(g: &Graph, w: &WeightMap) -> Verdict {
    match from_result(s123_wed(g, w)) {
        Verdict::NoEds => {
            let spider = named("S1_2_3").expect("catalog entry");
            match contains_induced(g, &spider) {
                Ok(false) => Verdict::NoEds,
                Ok(true) => Verdict::Inapplicable(Error::InvalidInstance(
                    "graph contains S1_2_3; an empty answer is not conclusive".into(),
                )),
                Err(e) => Verdict::Failed(e),
            }
        }
        v => v,
    }
}

/// Square engine, then the direct engine, then brute force on small graphs.
pub fn run_auto(g: &Graph, w: &WeightMap) -> (Verdict, &'static str) {
    let square = run_square(g, w);
    let fallback = match square {
        Verdict::Solved(_) | Verdict::NoEds => return (square, "square"),
        // the direct engine rejects the same inputs
        Verdict::Failed(Error::InputNotChordal { .. }) => square,
        Verdict::Failed(_) => return (square, "square"),
        Verdict::Inapplicable(_) => {
            let direct = run_s123(g, w);
            if !matches!(direct, Verdict::Inapplicable(_)) {
                return (direct, "s123");
            }
            direct
        }
    };
    if g.n() <= BRUTE_FORCE_LIMIT {
        return (run_brute(g, w), "brute");
    }
    let engine = if matches!(fallback, Verdict::Failed(_)) {
        "square"
    } else {
        "s123"
    };
    (fallback, engine)
}

pub fn eds(args: &EdsArgs, command: &str) -> Output {
    let input = match load(&args.file, args.weights.as_deref(), command) {
        Ok(i) => i,
        Err(out) => return out,
    };
    let (g, w) = (&input.graph, &input.weights);
    let start = Instant::now();
    let (verdict, engine) = match args.engine {
        EngineChoice::Brute => (run_brute(g, w), "brute"),
        EngineChoice::Square => (run_square(g, w), "square"),
        EngineChoice::S123 => (run_s123(g, w), "s123"),
        EngineChoice::Auto => run_auto(g, w),
    };
    let elapsed = start.elapsed();
    let mut report = RunReport::new(command.to_string(), input.digest);
    report.engine = Some(engine.to_string());
    if engine == "square" {
        report.square_chordal = match &verdict {
            Verdict::Solved(_) | Verdict::NoEds => Some(true),
            Verdict::Inapplicable(_) => Some(false),
            Verdict::Failed(_) => None,
        };
    }
    match &verdict {
        Verdict::Solved(sol) => {
            report.status = Status::Solved;
            report.exists = Some(true);
            report.weight = Some(json_number(&sol.weight));
            report.set = Some(sol.set.clone());
        }
        Verdict::NoEds => {
            report.status = Status::NoEds;
            report.exists = Some(false);
        }
        Verdict::Inapplicable(e) => {
            report.status = Status::Inapplicable;
            report.error_kind = Some(error_kind(e));
            report.error = Some(e.to_string());
        }
        Verdict::Failed(e) => report.fail(e),
    }
    if args.timing {
        report.timing_ms = Some(elapsed.as_millis());
    }
    let mut out = Output::json(&report, report.status.exit());
    if let Some(e) = &report.error {
        out.stderr = format!("{e}\n");
    }
    out
}

fn emit(text: String, output: Option<&Path>) -> Output {
    match output {
        None => Output::ok(text),
        Some(path) => match fs::write(path, text) {
            Ok(()) => Output {
                stdout: String::new(),
                stderr: format!("wrote {}\n", path.display()),
                exit: Exit::Yes,
            },
            Err(e) => Output::failure(format!("{}: {e}", path.display())),
        },
    }
}

pub fn generate(cmd: &GenCommand) -> Output {
    match cmd {
        GenCommand::X3c { file, output } => {
            let parsed = read(file)
                .and_then(|b| text(&b, file))
                .and_then(|t| parse_x3c(&t).map_err(|e| e.to_string()));
            let inst = match parsed {
                Ok(i) => i,
                Err(e) => return Output::failure(e),
            };
            let red = x3c_to_graph(&inst);
            let mut comments = vec![format!(
                "x3c reduction: universe {} triples {}",
                inst.universe(),
                inst.triples().len()
            )];
            comments.extend(red.role_comments());
            emit(write_graph(&red.graph, None, &comments), output.as_deref())
        }
        GenCommand::Interval {
            n,
            density,
            seed,
            output,
        } => {
            let g = random_interval_graph(*n, *density, *seed);
            let c = vec![format!("interval n {n} density {density} seed {seed}")];
            emit(write_graph(&g, None, &c), output.as_deref())
        }
        GenCommand::Chordal { n, bias, seed, output } => {
            let g = random_chordal(*n, *bias, *seed);
            let c = vec![format!("chordal n {n} bias {bias} seed {seed}")];
            emit(write_graph(&g, None, &c), output.as_deref())
        }
        GenCommand::Hfree {
            n,
            free,
            seed,
            tries,
            output,
        } => {
            let patterns: Result<Vec<Graph>, Error> = free.iter().map(|h| named(h)).collect();
            let patterns = match patterns {
                Ok(p) => p,
                Err(e) => return Output::failure(e.to_string()),
            };
            match random_h_free_chordal(*n, &patterns, *seed, *tries) {
                Some(g) => {
                    let mut c = String::new();
                    let _ = write!(c, "chordal n {n} free {} seed {seed}", free.join(","));
                    emit(write_graph(&g, None, &[c]), output.as_deref())
                }
                None => Output::failure(format!("no graph found in {tries} tries")),
            }
        }
    }
}
