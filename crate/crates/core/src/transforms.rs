//! Line-graph and total-graph operators and their iterates.
//!
//! Both operators number the new vertices deterministically: the line graph
//! has one vertex per edge of the input in canonical edge order; the total
//! graph keeps the input's vertices as `0..n` and appends its edges as
//! `n..n+m`, again in canonical order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Default cap on the vertex count of any constructed iterate.
pub const DEFAULT_MAX_VERTICES: usize = 20_000;

/// Origin of a vertex of `L(G)` or `T(G)` in the predecessor `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Vertex(usize),
    Edge(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProvenancedGraph {
    pub graph: Graph,
    pub provenance: Vec<Provenance>,
}

impl ProvenancedGraph {
    /// `G` viewed as its own zeroth iterate.
    pub fn identity(g: &Graph) -> Self {
        ProvenancedGraph {
            graph: g.clone(),
            provenance: (0..g.order()).map(Provenance::Vertex).collect(),
        }
    }

    /// Vertices that stand for vertices of the predecessor.
    pub fn vertex_part(&self) -> Vec<usize> {
        self.select(|p| matches!(p, Provenance::Vertex(_)))
    }

    /// Vertices that stand for edges of the predecessor.
    pub fn edge_part(&self) -> Vec<usize> {
        self.select(|p| matches!(p, Provenance::Edge(..)))
    }

    fn select(&self, f: impl Fn(&Provenance) -> bool) -> Vec<usize> {
        self.provenance
            .iter()
            .enumerate()
            .filter_map(|(i, p)| f(p).then_some(i))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    Line,
    Total,
}

impl Operator {
    pub fn apply(self, g: &Graph) -> ProvenancedGraph {
        match self {
            Operator::Line => line_graph(g),
            Operator::Total => total_graph(g),
        }
    }

    /// Order of `op(G)` without building it.
    pub fn projected_order(self, g: &Graph) -> usize {
        match self {
            Operator::Line => g.size(),
            Operator::Total => g.order() + g.size(),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operator::Line => "line",
            Operator::Total => "total",
        })
    }
}

impl core::str::FromStr for Operator {
    type Err = alloc::string::String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "line" | "L" => Ok(Operator::Line),
            "total" | "T" => Ok(Operator::Total),
            _ => Err(alloc::format!(
                "unknown operator {s:?} (expected line or total)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IterateError {
    /// Building step `step` would produce `projected` vertices, above `cap`.
    TooLarge {
        op: Operator,
        step: usize,
        projected: usize,
        cap: usize,
    },
}

impl fmt::Display for IterateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IterateError::TooLarge {
                op,
                step,
                projected,
                cap,
            } => write!(
                f,
                "{op} iterate {step} would have {projected} vertices, above the cap of {cap} \
                 (raise it with ITG_MAX_VERTICES)"
            ),
        }
    }
}

impl core::error::Error for IterateError {}

/// Per-vertex lists of incident edge indices, edges in canonical order.
fn incident_edges(g: &Graph) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut inc = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        inc[u].push(i);
        inc[v].push(i);
    }
    (edges, inc)
}

fn line_edges(inc: &[Vec<usize>], offset: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    inc.iter().flat_map(move |es| {
        es.iter()
            .enumerate()
            .flat_map(move |(i, &a)| es[i + 1..].iter().map(move |&b| (offset + a, offset + b)))
    })
}

pub fn line_graph(g: &Graph) -> ProvenancedGraph {
    let (edges, inc) = incident_edges(g);
    let graph = Graph::from_edges(edges.len(), line_edges(&inc, 0)).expect("line graph is simple");
    ProvenancedGraph {
        graph,
        provenance: edges.iter().map(|&(u, v)| Provenance::Edge(u, v)).collect(),
    }
}

pub fn total_graph(g: &Graph) -> ProvenancedGraph {
    let n = g.order();
    let (edges, inc) = incident_edges(g);
    let incidences = edges
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)]);
    let all = g.edges().chain(line_edges(&inc, n)).chain(incidences);
    let graph = Graph::from_edges(n + edges.len(), all).expect("total graph is simple");
    let provenance = (0..n)
        .map(Provenance::Vertex)
        .chain(edges.iter().map(|&(u, v)| Provenance::Edge(u, v)))
        .collect();
    ProvenancedGraph { graph, provenance }
}

/// `op^k(G)` with provenance of the last application only. Fails before
/// building any step whose order would exceed `max_vertices`.
pub fn iterate(
    g: &Graph,
    op: Operator,
    k: usize,
    max_vertices: usize,
) -> Result<ProvenancedGraph, IterateError> {
    let mut cur = ProvenancedGraph::identity(g);
    for step in 1..=k {
        let projected = op.projected_order(&cur.graph);
        if projected > max_vertices {
            return Err(IterateError::TooLarge {
                op,
                step,
                projected,
                cap: max_vertices,
            });
        }
        cur = op.apply(&cur.graph);
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, f1, path, star};
    use crate::iso::isomorphic;
    use crate::named::petersen;
    use crate::verify::corpus::connected_graphs_up_to;

    #[test]
    fn line_graph_examples() {
        let k3 = complete(3).unwrap();
        assert!(isomorphic(&line_graph(&k3).graph, &k3));
        assert!(isomorphic(&line_graph(&star(4).unwrap()).graph, &k3));
        assert!(isomorphic(&line_graph(&f1(3)).graph, &f1(2)));
        let empty = line_graph(&Graph::empty(3));
        assert_eq!(empty.graph.order(), 0);
    }

    #[test]
    fn total_graph_examples() {
        let t = total_graph(&complete(2).unwrap());
        assert!(isomorphic(&t.graph, &complete(3).unwrap()));
        let oct = total_graph(&complete(3).unwrap()).graph;
        assert_eq!((oct.order(), oct.is_regular()), (6, Some(4)));
        assert!(isomorphic(&oct, &crate::named::cocktail_party(3)));
        let tp3 = total_graph(&path(3).unwrap()).graph;
        assert_eq!((tp3.order(), tp3.size(), tp3.diameter()), (5, 7, Some(2)));
    }

    #[test]
    fn provenance_layout() {
        let p = total_graph(&path(3).unwrap());
        assert_eq!(
            p.provenance,
            [
                Provenance::Vertex(0),
                Provenance::Vertex(1),
                Provenance::Vertex(2),
                Provenance::Edge(0, 1),
                Provenance::Edge(1, 2),
            ]
        );
        assert_eq!(p.vertex_part(), [0, 1, 2]);
        assert_eq!(p.edge_part(), [3, 4]);
    }

    #[test]
    fn iterate_examples() {
        let t = iterate(
            &complete(4).unwrap(),
            Operator::Total,
            1,
            DEFAULT_MAX_VERTICES,
        )
        .unwrap();
        assert_eq!((t.graph.order(), t.graph.is_regular()), (10, Some(6)));
        let l = iterate(&petersen(), Operator::Line, 2, DEFAULT_MAX_VERTICES).unwrap();
        assert_eq!((l.graph.order(), l.graph.is_regular()), (30, Some(6)));
        let c5 = cycle(5).unwrap();
        assert_eq!(iterate(&c5, Operator::Total, 0, 0).unwrap().graph, c5);
    }

    #[test]
    fn iterate_guard_reports_projection() {
        let err = iterate(&complete(4).unwrap(), Operator::Total, 3, 100).unwrap_err();
        assert_eq!(
            err,
            IterateError::TooLarge {
                op: Operator::Total,
                step: 3,
                projected: 280,
                cap: 100
            }
        );
    }

    #[test]
    fn embedding_and_counts_on_corpus() {
        for g in connected_graphs_up_to(6).unwrap() {
            let t = total_graph(&g);
            let l = line_graph(&g);
            let vp = t.graph.induced_subgraph(&t.vertex_part());
            assert_eq!(vp, g);
            let ep = t.graph.induced_subgraph(&t.edge_part());
            assert_eq!(ep, l.graph);
            let m = g.size();
            let ml: usize = g
                .degrees()
                .iter()
                .map(|d| d * d.saturating_sub(1) / 2)
                .sum();
            assert_eq!(l.graph.size(), ml);
            assert_eq!(t.graph.size(), ml + 3 * m);
            if let Some(r) = g.is_regular() {
                assert_eq!(t.graph.is_regular(), Some(2 * r));
            }
        }
    }

    #[test]
    fn total_diameter_value_set() {
        for g in connected_graphs_up_to(7).unwrap() {
            if g.order() < 2 {
                continue;
            }
            let d = g.diameter().unwrap();
            let dl = line_graph(&g).graph.diameter().unwrap();
            let dt = total_graph(&g).graph.diameter().unwrap();
            assert!(dt == d || dt == dl || dt == d + 1, "{dt} {d} {dl}");
        }
    }
}
