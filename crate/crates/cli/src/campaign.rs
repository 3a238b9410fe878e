//! Engine comparison campaigns.
//!
//! A spec file holds `key = value` lines:
//!
//! ```text
//! generator = interval      # interval | chordal | hfree
//! count = 500
//! n = 4..18                 # a number or an inclusive range
//! density = 0.1             # interval
//! bias = 0.5                # chordal; hfree draws its own
//! free = S1_2_3             # hfree, comma-separated catalog names
//! tries = 500               # hfree
//! weights = 1..9
//! seed = 7
//! engines = square, brute   # brute | square | s123 | auto | corrupt
//! compare = true
//! ```

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wed_core::generate::{random_chordal, random_h_free_chordal, random_interval_graph};
use wed_core::{named, Error, Graph, Result, WeightMap};

use crate::commands::{run_auto, run_brute, run_s123, run_square, Verdict};
use crate::report::Exit;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Interval,
    Chordal,
    HFree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CampaignEngine {
    Brute,
    Square,
    S123,
    Auto,
    /// Brute force with a deliberately wrong weight; exercises the
    /// mismatch path of the harness.
    Corrupt,
}

impl CampaignEngine {
    fn name(self) -> &'static str {
        match self {
            CampaignEngine::Brute => "brute",
            CampaignEngine::Square => "square",
            CampaignEngine::S123 => "s123",
            CampaignEngine::Auto => "auto",
            CampaignEngine::Corrupt => "corrupt",
        }
    }

    fn run(self, g: &Graph, w: &WeightMap) -> Verdict {
        match self {
            CampaignEngine::Brute => run_brute(g, w),
            CampaignEngine::Square => run_square(g, w),
            CampaignEngine::S123 => run_s123(g, w),
            CampaignEngine::Auto => run_auto(g, w).0,
            CampaignEngine::Corrupt => match run_brute(g, w) {
                Verdict::Solved(mut s) => {
                    s.weight += 1;
                    Verdict::Solved(s)
                }
                Verdict::NoEds => Verdict::Solved(wed_core::EdsSolution {
                    set: Vec::new(),
                    weight: 0.into(),
                    engine: wed_core::Engine::Brute,
                }),
                v => v,
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct CampaignSpec {
    pub generator: Generator,
    pub count: usize,
    pub n: (usize, usize),
    pub density: f64,
    pub bias: f64,
    pub free: Vec<String>,
    pub tries: usize,
    pub weights: (u32, u32),
    pub seed: u64,
    pub engines: Vec<CampaignEngine>,
    pub compare: bool,
}

impl Default for CampaignSpec {
    fn default() -> Self {
        CampaignSpec {
            generator: Generator::Interval,
            count: 100,
            n: (4, 18),
            density: 0.1,
            bias: 0.5,
            free: Vec::new(),
            tries: 500,
            weights: (1, 9),
            seed: 0,
            engines: vec![CampaignEngine::Square, CampaignEngine::Brute],
            compare: true,
        }
    }
}

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse().map_err(|_| bad(line, format!("cannot parse `{s}`")))
}

fn range<T: std::str::FromStr + Copy + PartialOrd>(line: usize, s: &str) -> Result<(T, T)> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (number(line, a.trim())?, number(line, b.trim())?),
        None => {
            let v = number(line, s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad(line, format!("empty range `{s}`")));
    }
    Ok((lo, hi))
}

pub fn parse_spec(text: &str) -> Result<CampaignSpec> {
    let mut spec = CampaignSpec::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| bad(line, "expected `key = value`"))?;
        let value = value.trim();
        match key.trim() {
            "generator" => {
                spec.generator = match value {
                    "interval" => Generator::Interval,
                    "chordal" => Generator::Chordal,
                    "hfree" => Generator::HFree,
                    other => return Err(bad(line, format!("unknown generator `{other}`"))),
                }
            }
            "count" => spec.count = number(line, value)?,
            "n" => spec.n = range(line, value)?,
            "density" => spec.density = number(line, value)?,
            "bias" => spec.bias = number(line, value)?,
            "free" => {
                spec.free = value.split(',').map(|s| s.trim().to_string()).collect();
                for h in &spec.free {
                    named(h).map_err(|e| bad(line, e.to_string()))?;
                }
            }
            "tries" => spec.tries = number(line, value)?,
            "weights" => spec.weights = range(line, value)?,
            "seed" => spec.seed = number(line, value)?,
            "engines" => {
                spec.engines = value
                    .split(',')
                    .map(|e| match e.trim() {
                        "brute" => Ok(CampaignEngine::Brute),
                        "square" => Ok(CampaignEngine::Square),
                        "s123" => Ok(CampaignEngine::S123),
                        "auto" => Ok(CampaignEngine::Auto),
                        "corrupt" => Ok(CampaignEngine::Corrupt),
                        other => Err(bad(line, format!("unknown engine `{other}`"))),
                    })
                    .collect::<Result<_>>()?;
            }
            "compare" => spec.compare = number(line, value)?,
            other => return Err(bad(line, format!("unknown key `{other}`"))),
        }
    }
    if spec.generator == Generator::HFree && spec.free.is_empty() {
        return Err(bad(0, "generator hfree needs a `free` list"));
    }
    Ok(spec)
}

/// One generated instance and every engine's verdict on it.
#[derive(Debug, Clone)]
pub struct Row {
    pub index: usize,
    pub seed: u64,
    pub graph: Graph,
    pub verdicts: Vec<Verdict>,
    pub agree: bool,
}

/// Engines agree when every decided verdict gives the same answer and
/// none failed.
pub fn agreement(verdicts: &[Verdict]) -> bool {
    if verdicts.iter().any(|v| matches!(v, Verdict::Failed(_))) {
        return false;
    }
    let mut decided = verdicts.iter().filter_map(Verdict::decision);
    match decided.next() {
        None => true,
        Some(first) => decided.all(|d| d == first),
    }
}

fn instance(spec: &CampaignSpec, patterns: &[Graph], seed: u64) -> Option<(Graph, WeightMap)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(spec.n.0..=spec.n.1);
    let g = match spec.generator {
        Generator::Interval => random_interval_graph(n, spec.density, seed),
        Generator::Chordal => random_chordal(n, spec.bias, seed),
        Generator::HFree => random_h_free_chordal(n, patterns, seed, spec.tries)?,
    };
    let w: Vec<u32> = (0..n).map(|_| rng.gen_range(spec.weights.0..=spec.weights.1)).collect();
    Some((g, WeightMap::from_finite(&w).expect("non-negative weights")))
}

/// Generates `count` instances from consecutive seeds, skipping seeds on
/// which rejection sampling gives up (at most `10·count` seeds are tried).
pub fn run_campaign(spec: &CampaignSpec) -> Result<Vec<Row>> {
    let patterns: Vec<Graph> = spec.free.iter().map(|h| named(h)).collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(spec.count);
    let budget = spec.count.saturating_mul(10).max(1);
    for attempt in 0..budget as u64 {
        if rows.len() == spec.count {
            break;
        }
        let seed = spec.seed.wrapping_add(attempt);
        let Some((graph, weights)) = instance(spec, &patterns, seed) else {
            continue;
        };
        let verdicts: Vec<Verdict> = spec.engines.iter().map(|e| e.run(&graph, &weights)).collect();
        let agree = agreement(&verdicts);
        rows.push(Row {
            index: rows.len(),
            seed,
            graph,
            verdicts,
            agree,
        });
    }
    if rows.len() < spec.count {
        return Err(Error::InvalidInstance(format!(
            "only {} of {} instances generated",
            rows.len(),
            spec.count
        )));
    }
    Ok(rows)
}

pub fn to_csv(spec: &CampaignSpec, rows: &[Row]) -> String {
    let mut out = String::from("index,seed,n,m");
    for e in &spec.engines {
        let _ = write!(out, ",{0}_status,{0}_weight", e.name());
    }
    out.push_str(",agree\n");
    for r in rows {
        let _ = write!(out, "{},{},{},{}", r.index, r.seed, r.graph.n(), r.graph.m());
        for v in &r.verdicts {
            let weight = match v {
                Verdict::Solved(s) => s.weight.to_string(),
                _ => String::new(),
            };
            let status = serde_json::to_value(v.status()).unwrap();
            let _ = write!(out, ",{},{weight}", status.as_str().unwrap());
        }
        let _ = writeln!(out, ",{}", r.agree);
    }
    out
}

/// Exit status of a finished campaign.
pub fn campaign_exit(spec: &CampaignSpec, rows: &[Row]) -> Exit {
    if spec.compare && rows.iter().any(|r| !r.agree) {
        Exit::No
    } else {
        Exit::Yes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        let spec = parse_spec("generator = hfree\nfree = S1_2_3, net # both\nn = 5\nengines = s123,brute\n").unwrap();
        assert_eq!(spec.generator, Generator::HFree);
        assert_eq!(spec.n, (5, 5));
        assert_eq!(spec.free, vec!["S1_2_3", "net"]);
        assert_eq!(spec.engines, vec![CampaignEngine::S123, CampaignEngine::Brute]);
        assert!(matches!(parse_spec("count = x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_spec("\nspeed = 3"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_spec("generator = hfree").is_err());
    }

    #[test]
    fn corrupt_engine_is_caught() {
        let spec = parse_spec("count = 5\nn = 3..6\nengines = brute, corrupt\n").unwrap();
        let rows = run_campaign(&spec).unwrap();
        assert!(rows.iter().all(|r| !r.agree));
        assert_eq!(campaign_exit(&spec, &rows), Exit::No);
    }

    #[test]
    fn inapplicable_does_not_disagree() {
        let e = Error::SquareNotChordal { hole: vec![] };
        assert!(agreement(&[Verdict::Inapplicable(e), Verdict::NoEds]));
        assert!(!agreement(&[
            Verdict::NoEds,
            Verdict::Failed(Error::InputNotChordal { hole: vec![] })
        ]));
    }
}
