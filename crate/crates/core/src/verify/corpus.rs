//! Small-graph corpora: every connected graph up to isomorphism for `n <= 7`
//! and a corpus of connected regular graphs on 3 to 10 vertices.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::families;
use crate::graph::Graph;
use crate::iso::{canonical_graph, canonical_labeling, isomorphic, CanonicalForm};
use crate::named;

/// Largest order generated exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 7;

/// Known numbers of connected graphs on `n = 0..=7` vertices.
pub const CONNECTED_COUNTS: [usize; 8] = [0, 1, 1, 2, 6, 21, 112, 853];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusError {
    TooLarge { n: usize, limit: usize },
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusError::TooLarge { n, limit } => write!(
                f,
                "exhaustive generation stops at n = {limit} (asked for {n}); \
                 pass a graph6 file corpus instead"
            ),
        }
    }
}

impl core::error::Error for CorpusError {}

/// Adds one vertex in every possible way to each graph of `prev` and keeps
/// one representative per isomorphism class, ordered by canonical code.
fn extend(prev: &[Graph]) -> Vec<Graph> {
    let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for g in prev {
        let n = g.order();
        let base: Vec<(usize, usize)> = g.edges().collect();
        for mask in 1u32..(1 << n) {
            let extra = (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n));
            let h = Graph::from_edges(n + 1, base.iter().copied().chain(extra)).expect("simple");
            let (labels, form) = canonical_labeling(&h);
            seen.entry(form).or_insert_with(|| h.relabel(&labels));
        }
    }
    seen.into_values().collect()
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// in canonical form and deterministic order.
///
/// Every connected graph has a vertex whose removal leaves it connected,
/// so augmenting connected graphs on `n - 1` vertices reaches them all.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, CorpusError> {
    Ok(connected_graphs_by_order(n)?.pop().unwrap_or_default())
}

/// Connected graphs on `1..=n` vertices, ordered by order.
pub fn connected_graphs_up_to(n: usize) -> Result<Vec<Graph>, CorpusError> {
    Ok(connected_graphs_by_order(n)?
        .into_iter()
        .flatten()
        .collect())
}

fn connected_graphs_by_order(n: usize) -> Result<Vec<Vec<Graph>>, CorpusError> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(CorpusError::TooLarge {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(n);
    if n == 0 {
        return Ok(levels);
    }
    levels.push(vec![Graph::empty(1)]);
    for _ in 2..=n {
        let next = extend(levels.last().expect("non-empty"));
        levels.push(next);
    }
    Ok(levels)
}

/// Every `r`-regular graph on `n` labelled vertices, up to isomorphism,
/// connected or not. Practical only for small `n * r`.
fn regular_graphs_exhaustive(n: usize, r: usize) -> Vec<Graph> {
    fn go(
        n: usize,
        r: usize,
        v: usize,
        deg: &mut [usize],
        edges: &mut Vec<(usize, usize)>,
        seen: &mut BTreeMap<CanonicalForm, Graph>,
    ) {
        if v == n {
            let g = Graph::from_edges(n, edges.iter().copied()).expect("simple");
            let (labels, form) = canonical_labeling(&g);
            seen.entry(form).or_insert_with(|| g.relabel(&labels));
            return;
        }
        let need = r - deg[v];
        let cands: Vec<usize> = (v + 1..n).filter(|&w| deg[w] < r).collect();
        if cands.len() < need {
            return;
        }
        choose(n, r, v, &cands, 0, need, deg, edges, seen);
    }
    #[allow(clippy::too_many_arguments)]
    fn choose(
        n: usize,
        r: usize,
        v: usize,
        cands: &[usize],
        from: usize,
        need: usize,
        deg: &mut [usize],
        edges: &mut Vec<(usize, usize)>,
        seen: &mut BTreeMap<CanonicalForm, Graph>,
    ) {
        if need == 0 {
            go(n, r, v + 1, deg, edges, seen);
            return;
        }
        for i in from..cands.len() {
            if cands.len() - i < need {
                break;
            }
            let w = cands[i];
            deg[v] += 1;
            deg[w] += 1;
            edges.push((v, w));
            choose(n, r, v, cands, i + 1, need - 1, deg, edges, seen);
            edges.pop();
            deg[v] -= 1;
            deg[w] -= 1;
        }
    }
    let mut seen = BTreeMap::new();
    if (n * r).is_multiple_of(2) && r < n {
        go(n, r, 0, &mut vec![0; n], &mut Vec::new(), &mut seen);
    }
    seen.into_values().collect()
}

/// Every regular graph on `n` vertices (any degree), connected or not,
/// using complements for the upper half of the degrees.
fn all_regular_graphs(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for r in 0..n {
        if r <= (n - 1) / 2 {
            out.extend(regular_graphs_exhaustive(n, r));
        } else {
            out.extend(
                regular_graphs_exhaustive(n, n - 1 - r)
                    .iter()
                    .map(|g| canonical_graph(&g.complement())),
            );
        }
    }
    out
}

/// Named and circulant regular graphs on 9 and 10 vertices.
fn named_regular_seeds() -> Vec<Graph> {
    let mut v = Vec::new();
    for n in [9usize, 10] {
        v.push(families::cycle(n).expect("n >= 3"));
        v.push(families::complete(n).expect("n >= 1"));
        let half = n / 2;
        // Circulants on every jump set drawn from 1..=n/2.
        for mask in 1u32..(1 << half) {
            let jumps: Vec<usize> = (1..=half).filter(|j| mask >> (j - 1) & 1 == 1).collect();
            v.push(named::circulant(n, &jumps));
        }
    }
    v.push(named::rook(3, 3));
    v.push(named::petersen());
    v.push(named::petersen().complement());
    v.push(named::prism(5));
    v.push(named::complete_bipartite(5, 5));
    v.push(named::cocktail_party(5));
    v
}

/// Connected regular graphs with `3 <= n <= 10`, one per isomorphism class.
///
/// Exhaustive for `n <= 8`; for `n = 9, 10` the corpus is the named graphs
/// and all circulants.
pub fn regular_corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    for n in 3..=8 {
        let mut level: Vec<Graph> = all_regular_graphs(n)
            .into_iter()
            .filter(|g| g.is_connected())
            .collect();
        level.sort_by_key(|g| (g.is_regular(), canonical_labeling(g).1));
        out.extend(level);
    }
    let mut extra: Vec<Graph> = Vec::new();
    for g in named_regular_seeds() {
        if g.is_connected() && g.is_regular().is_some() && !extra.iter().any(|h| isomorphic(h, &g))
        {
            extra.push(canonical_graph(&g));
        }
    }
    extra.sort_by_key(|g| (g.order(), g.is_regular(), canonical_labeling(g).1));
    out.extend(extra);
    out
}
