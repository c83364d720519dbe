//! Constructors for the named pattern families.
//!
//! Vertex numbering is fixed: the spine path comes first (`v_1` is vertex
//! 0), decorations last. Lollipops put the cycle on `0..g` and hang the tail
//! off vertex 0. The star's centre is vertex 0.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    OutOfRange {
        family: &'static str,
        requirement: &'static str,
    },
    Parse(String),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::OutOfRange {
                family,
                requirement,
            } => write!(f, "{family}: parameter must satisfy {requirement}"),
            FamilyError::Parse(s) => write!(f, "cannot parse family spec: {s}"),
        }
    }
}

impl core::error::Error for FamilyError {}

fn require(ok: bool, family: &'static str, requirement: &'static str) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::OutOfRange {
            family,
            requirement,
        })
    }
}

fn spine(len: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..len).map(|i| (i - 1, i))
}

/// `F1^k`: the path with `k + 2` vertices.
///
/// The diameter theorems use `k >= 2`; smaller values are accepted because
/// the iterated-graph checkers need `F1^j` for small `j`.
pub fn f1(k: usize) -> Graph {
    Graph::from_edges(k + 2, spine(k + 2)).expect("path is simple")
}

/// `F2^k`: `F1^{k+1}` plus the chord `v_1 v_3`.
pub fn f2(k: usize) -> Result<Graph, FamilyError> {
    require(k >= 2, "F2", "k >= 2")?;
    let edges = spine(k + 3).chain([(0, 2)]);
    Ok(Graph::from_edges(k + 3, edges).expect("simple"))
}

/// `F3^k`: `F2^k` plus the chord `v_{k+1} v_{k+3}`.
pub fn f3(k: usize) -> Result<Graph, FamilyError> {
    require(k >= 2, "F3", "k >= 2")?;
    let edges = spine(k + 3).chain([(0, 2), (k, k + 2)]);
    Ok(Graph::from_edges(k + 3, edges).expect("simple"))
}

/// `F4^k`: a path on `k - 1` vertices with two pendant vertices at each end.
///
/// Pendants of `v_1` are `k - 1, k`; pendants of `v_{k-1}` are `k + 1, k + 2`.
pub fn f4(k: usize) -> Result<Graph, FamilyError> {
    require(k >= 3, "F4", "k >= 3")?;
    let last = k - 2;
    let edges = spine(k - 1).chain([(0, k - 1), (0, k), (last, k + 1), (last, k + 2)]);
    Ok(Graph::from_edges(k + 3, edges).expect("simple"))
}

/// `F5^k`: a path on `k + 1` vertices with two pendant vertices at `v_{k+1}`.
pub fn f5(k: usize) -> Result<Graph, FamilyError> {
    require(k >= 1, "F5", "k >= 1")?;
    let edges = spine(k + 1).chain([(k, k + 1), (k, k + 2)]);
    Ok(Graph::from_edges(k + 3, edges).expect("simple"))
}

/// `Lol_{n,g}`: cycle `C_g` with a tail of `n - g` vertices at vertex 0.
pub fn lollipop(n: usize, g: usize) -> Result<Graph, FamilyError> {
    require(g >= 3, "Lol", "g >= 3")?;
    require(n >= g, "Lol", "n >= g")?;
    let cycle = (0..g).map(|i| (i, (i + 1) % g));
    let tail = (g..n).map(|i| (if i == g { 0 } else { i - 1 }, i));
    Ok(Graph::from_edges(n, cycle.chain(tail)).expect("simple"))
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 1, "P", "n >= 1")?;
    Ok(Graph::from_edges(n, spine(n)).expect("simple"))
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 3, "C", "n >= 3")?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("simple"))
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 1, "K", "n >= 1")?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges).expect("simple"))
}

/// `S_n`: centre 0 joined to `n - 1` leaves.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 1, "S", "n >= 1")?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (0, i))).expect("simple"))
}

/// `K_4 - e`, the diamond. The missing edge is `(0, 3)`.
pub fn diamond() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("simple")
}

/// Symbolic family with parameters, parseable from the `name:params`
/// mini-language (`f3:5`, `lol:8,4`, `k:6`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    F1(usize),
    F2(usize),
    F3(usize),
    F4(usize),
    F5(usize),
    Lollipop { n: usize, g: usize },
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            Family::F1(k) => Ok(f1(k)),
            Family::F2(k) => f2(k),
            Family::F3(k) => f3(k),
            Family::F4(k) => f4(k),
            Family::F5(k) => f5(k),
            Family::Lollipop { n, g } => lollipop(n, g),
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::Star(n) => star(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::F1(k) => write!(f, "f1:{k}"),
            Family::F2(k) => write!(f, "f2:{k}"),
            Family::F3(k) => write!(f, "f3:{k}"),
            Family::F4(k) => write!(f, "f4:{k}"),
            Family::F5(k) => write!(f, "f5:{k}"),
            Family::Lollipop { n, g } => write!(f, "lol:{n},{g}"),
            Family::Path(n) => write!(f, "p:{n}"),
            Family::Cycle(n) => write!(f, "c:{n}"),
            Family::Complete(n) => write!(f, "k:{n}"),
            Family::Star(n) => write!(f, "s:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Parse(s.to_string());
        let (name, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let one = |f: fn(usize) -> Family| match nums.as_slice() {
            [x] => Ok(f(*x)),
            _ => Err(FamilyError::Parse(format!("{s}: expected one parameter"))),
        };
        match name.to_ascii_lowercase().as_str() {
            "f1" => one(Family::F1),
            "f2" => one(Family::F2),
            "f3" => one(Family::F3),
            "f4" => one(Family::F4),
            "f5" => one(Family::F5),
            "p" | "path" => one(Family::Path),
            "c" | "cycle" => one(Family::Cycle),
            "k" | "complete" => one(Family::Complete),
            "s" | "star" => one(Family::Star),
            "lol" | "lollipop" => match nums.as_slice() {
                [n, g] => Ok(Family::Lollipop { n: *n, g: *g }),
                _ => Err(FamilyError::Parse(format!("{s}: expected lol:n,g"))),
            },
            _ => Err(bad()),
        }
    }
}
