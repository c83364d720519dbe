//! Corpus descriptors, the parallel corpus runner and JSON reports.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use itg_core::verify::{
    check, check_pair, connected_graphs, regular_corpus, regular_pairs, Outcome, Params, TheoremId,
};
use itg_core::Graph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formats::{read_graphs, to_graph6};

/// Where the graphs of a verification run come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Corpus {
    /// Connected graphs on `lo..=hi` vertices (`gen:N` means `gen:1..N`).
    Generated { lo: usize, hi: usize },
    /// Connected regular graphs on 3 to 10 vertices.
    Regular,
    /// graph6 or edge-list file.
    File(PathBuf),
}

impl Corpus {
    /// Default corpus for a theorem: regular graphs for the spectral
    /// statements, `n <= 6` for iterated operators, `n <= 7` otherwise.
    pub fn default_for(t: TheoremId) -> Corpus {
        use TheoremId::*;
        match t {
            T3_1 | L3_1 | T3_2 | C3_2 | C3_3 | T3_3 | T1_1 => Corpus::Regular,
            T2_6 | T2_7 | T2_8 | T2_9 => Corpus::Generated { lo: 1, hi: 6 },
            _ => Corpus::Generated { lo: 1, hi: 7 },
        }
    }

    pub fn load(&self) -> Result<Vec<Graph>> {
        match self {
            Corpus::Generated { lo, hi } => {
                let mut out = Vec::new();
                for n in *lo..=*hi {
                    out.extend(connected_graphs(n)?);
                }
                Ok(out)
            }
            Corpus::Regular => Ok(regular_corpus()),
            Corpus::File(p) => read_graphs(p),
        }
    }
}

/// `k` used when none is given: the least admissible value for the iterated
/// implications, and one that keeps dense spectra below a few hundred
/// vertices on the regular corpus for the energy and cospectrality checks.
pub fn default_k(t: TheoremId, r: Option<usize>) -> Option<usize> {
    use TheoremId::*;
    let r = r.unwrap_or(Params::DEFAULT_R);
    match t {
        T2_6 => Some(4 * r + 3),
        T2_7 => Some(2 * r + 2),
        T2_8 => Some(2 * r + 3),
        T2_9 => Some(r + 2),
        C3_2 | T3_3 => Some(1),
        _ if t.uses_k() => Some(Params::DEFAULT_K),
        _ => None,
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corpus::Generated { lo: 1, hi } => write!(f, "gen:{hi}"),
            Corpus::Generated { lo, hi } => write!(f, "gen:{lo}..{hi}"),
            Corpus::Regular => f.write_str("regular"),
            Corpus::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for Corpus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Usage(format!(
                "bad corpus {s:?}: expected gen:N, gen:A..B, regular or file:PATH"
            ))
        };
        if s == "regular" {
            return Ok(Corpus::Regular);
        }
        if let Some(p) = s.strip_prefix("file:") {
            return Ok(Corpus::File(PathBuf::from(p)));
        }
        let spec = s.strip_prefix("gen:").ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let (lo, hi) = match spec.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => (1, num(spec)?),
        };
        if lo > hi {
            return Err(bad());
        }
        Ok(Corpus::Generated { lo, hi })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// graph6 of the graph; for pairwise statements both graphs, space separated.
    pub graph6: String,
    pub params: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub corpus: String,
    /// Graphs (or pairs) inside the hypotheses that were actually checked.
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    /// Skipped inputs with their reasons, only when requested.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skips: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One-line summary for terminals.
    pub fn summary(&self, params: &str) -> String {
        format!(
            "{} {}{}corpus={} checked={} skipped={} failures={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.theorem,
            if params.is_empty() {
                " ".to_string()
            } else {
                format!(" {params} ")
            },
            self.corpus,
            self.checked,
            self.skipped,
            self.failures.len()
        )
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub record_skips: bool,
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|e| format!("<{e}>"))
}

/// Runs `theorem` over `graphs` in parallel. Outcomes are collected in
/// corpus order, so the report does not depend on scheduling.
pub fn run_corpus(
    theorem: TheoremId,
    corpus: &str,
    graphs: &[Graph],
    params: &Params,
    opts: RunOptions,
) -> VerificationReport {
    let start = Instant::now();
    let outcomes: Vec<(String, Outcome)> = if theorem.is_pairwise() {
        regular_pairs(graphs)
            .into_par_iter()
            .map(|(i, j)| {
                let (a, b) = (&graphs[i], &graphs[j]);
                (
                    format!("{} {}", g6(a), g6(b)),
                    check_pair(theorem, a, b, params),
                )
            })
            .collect()
    } else {
        graphs
            .par_iter()
            .map(|g| (g6(g), check(theorem, g, params)))
            .collect()
    };
    let described = params.describe(theorem);
    let entry = |graph6: String, detail: String| Failure {
        graph6,
        params: described.clone(),
        detail,
    };
    let mut report = VerificationReport {
        theorem: theorem.name().to_string(),
        corpus: corpus.to_string(),
        checked: 0,
        skipped: 0,
        failures: Vec::new(),
        skips: Vec::new(),
        elapsed_ms: 0,
    };
    for (graph6, outcome) in outcomes {
        match outcome {
            Outcome::Pass => report.checked += 1,
            Outcome::Fail(detail) => {
                report.checked += 1;
                report.failures.push(entry(graph6, detail));
            }
            Outcome::Skip(reason) => {
                report.skipped += 1;
                if opts.record_skips {
                    report.skips.push(entry(graph6, reason));
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}
