//! Theorem checkers and the corpora they run on.

pub mod checks;
pub mod corpus;

use alloc::vec::Vec;

pub use checks::{check, check_pair, Outcome, Params, TheoremId};
pub use corpus::{connected_graphs, connected_graphs_up_to, regular_corpus, CorpusError};

use crate::graph::Graph;

/// Index pairs `(i, j)`, `i < j`, of regular graphs with equal order and
/// equal degree at least 3: the inputs of the pairwise cospectrality check.
pub fn regular_pairs(graphs: &[Graph]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, a) in graphs.iter().enumerate() {
        let Some(ra) = a.is_regular().filter(|&r| r >= 3) else {
            continue;
        };
        for (j, b) in graphs.iter().enumerate().skip(i + 1) {
            if b.order() == a.order() && b.is_regular() == Some(ra) {
                out.push((i, j));
            }
        }
    }
    out
}
