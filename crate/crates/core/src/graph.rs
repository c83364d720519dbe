//! The simple undirected graph value type and its metric queries.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;

/// Hop distance marker for vertices in a different component.
pub const UNREACHABLE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    SelfLoop(usize),
    VertexOutOfRange { v: usize, n: usize },
    Disconnected,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EndpointOutOfRange { u, v, n } => {
                write!(f, "edge ({u},{v}) has an endpoint outside 0..{n}")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::VertexOutOfRange { v, n } => write!(f, "vertex {v} outside 0..{n}"),
            GraphError::Disconnected => f.write_str("graph is not connected"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Canonical edge order: pairs `(u, v)` with `u < v`, sorted and deduplicated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeList(Vec<(usize, usize)>);

impl EdgeList {
    /// Normalises orientation, sorts and drops duplicates. Self-loops are kept
    /// so that [`Graph::from_edges`] can reject them.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut v: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        v.sort_unstable();
        v.dedup();
        EdgeList(v)
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Position of an edge in canonical order.
    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u <= v { (u, v) } else { (v, u) };
        self.0.binary_search(&key).ok()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, (usize, usize)> {
        self.0.iter()
    }
}

impl<'a> IntoIterator for &'a EdgeList {
    type Item = &'a (usize, usize);
    type IntoIter = core::slice::Iter<'a, (usize, usize)>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are kept sorted, so iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(
        n: usize,
        edges: I,
    ) -> Result<Self, GraphError> {
        Self::from_edge_list(n, &EdgeList::from_pairs(edges))
    }

    pub fn from_edge_list(n: usize, edges: &EdgeList) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// Builds from symmetric adjacency bit rows. Panics on asymmetry or loops.
    pub fn from_adjacency_rows(rows: &[BitSet]) -> Self {
        let n = rows.len();
        let mut adj = vec![Vec::new(); n];
        let mut twice_m = 0;
        for (u, row) in rows.iter().enumerate() {
            for v in row.iter() {
                assert!(v != u, "self-loop at {u}");
                assert!(rows[v].contains(u), "asymmetric adjacency at ({u},{v})");
                adj[u].push(v);
                twice_m += 1;
            }
        }
        Graph {
            adj,
            m: twice_m / 2,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_list(&self) -> EdgeList {
        EdgeList(self.edges().collect())
    }

    /// Edges `(u, v)`, `u < v`, in canonical (lexicographic) order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn adjacency_rows(&self) -> Vec<BitSet> {
        let n = self.order();
        self.adj
            .iter()
            .map(|ns| {
                let mut row = BitSet::new(n);
                for &v in ns {
                    row.insert(v);
                }
                row
            })
            .collect()
    }

    pub fn bfs_distances(&self, source: usize) -> Result<Vec<usize>, GraphError> {
        let n = self.order();
        if source >= n {
            return Err(GraphError::VertexOutOfRange { v: source, n });
        }
        let mut dist = vec![UNREACHABLE; n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance_table(&self) -> DistanceTable {
        let n = self.order();
        let mut dist = Vec::with_capacity(n * n);
        for s in 0..n {
            dist.extend(self.bfs_distances(s).expect("source in range"));
        }
        DistanceTable { n, dist }
    }

    /// Largest eccentricity, or `None` for a disconnected graph. The
    /// one-vertex and zero-vertex graphs have diameter 0.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.order() {
            for d in self.bfs_distances(s).expect("source in range") {
                if d == UNREACHABLE {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0
            || self
                .bfs_distances(0)
                .expect("vertex 0 exists")
                .iter()
                .all(|&d| d != UNREACHABLE)
    }

    /// The common degree when every vertex has the same degree.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|ns| ns.len() == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let pos = &pos;
            self.adj[v]
                .iter()
                .filter_map(move |&w| (pos[w] != usize::MAX && pos[w] > i).then_some((i, pos[w])))
        });
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// Image of the graph under `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        Graph::from_edges(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("permutation preserves simplicity")
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::from_edges(n, edges).expect("complement is simple")
    }

    /// Vertex sets of the connected components, each ascending.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// All-pairs hop distances, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<usize>,
}

impl DistanceTable {
    pub fn order(&self) -> usize {
        self.n
    }

    /// `None` when `u` and `v` lie in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.dist[u * self.n + v];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn raw(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;

    #[test]
    fn from_edges_examples() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.is_regular(), Some(2));
        assert!(k3.is_complete());
        let dedup = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(dedup.size(), 1);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn bfs_examples() {
        let p3 = families::path(3).unwrap();
        assert_eq!(p3.bfs_distances(0).unwrap(), vec![0, 1, 2]);
        let k3 = families::complete(3).unwrap();
        assert_eq!(k3.bfs_distances(2).unwrap(), vec![1, 1, 0]);
        assert_eq!(
            k3.bfs_distances(3),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.bfs_distances(0).unwrap()[3], UNREACHABLE);
    }

    #[test]
    fn lollipop_8_4_far_end() {
        // Fig. 1 labelling: square 1-2-3-4, tail 3-5-6-7-8 (0-based below).
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (2, 4),
                (4, 5),
                (5, 6),
                (6, 7),
            ],
        )
        .unwrap();
        let far = g.bfs_distances(7).unwrap();
        assert_eq!(far.iter().max(), Some(&6));
        assert_eq!(g.diameter(), Some(6));
    }

    #[test]
    fn diameter_and_regularity() {
        assert_eq!(families::complete(5).unwrap().diameter(), Some(1));
        assert_eq!(families::cycle(5).unwrap().diameter(), Some(2));
        assert_eq!(Graph::empty(1).diameter(), Some(0));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.diameter(), None);
        assert!(!two.is_connected());
        assert_eq!(two.is_regular(), Some(1));
        let s5 = families::star(5).unwrap();
        assert!(s5.is_connected());
        assert_eq!(s5.is_regular(), None);
        let p = crate::named::petersen();
        assert!(p.is_connected());
        assert_eq!(p.is_regular(), Some(3));
    }

    #[test]
    fn induced_and_complement() {
        let c5 = families::cycle(5).unwrap();
        let p4 = c5.induced_subgraph(&[0, 1, 2, 3]);
        assert_eq!(p4.size(), 3);
        assert_eq!(c5.complement().size(), 5);
        assert_eq!(c5.components().len(), 1);
    }

    #[test]
    fn diameter_one_iff_complete_small() {
        for g in crate::verify::corpus::connected_graphs_up_to(7).unwrap() {
            let n = g.order();
            if n < 2 {
                continue;
            }
            assert_eq!(g.diameter() == Some(1), g.is_complete());
        }
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..10).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..20).prop_map(move |pairs| {
                Graph::from_edges(n, pairs.into_iter().filter(|(a, b)| a != b)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn distance_table_is_a_metric(g in arb_graph()) {
            let t = g.distance_table();
            let n = g.order();
            for u in 0..n {
                prop_assert_eq!(t.get(u, u), Some(0));
                for v in 0..n {
                    prop_assert_eq!(t.raw(u, v), t.raw(v, u));
                    for w in 0..n {
                        if let (Some(a), Some(b)) = (t.get(u, w), t.get(w, v)) {
                            prop_assert!(t.get(u, v).unwrap() <= a + b);
                        }
                    }
                }
            }
        }

        #[test]
        fn adjacency_symmetric(g in arb_graph()) {
            let twice: usize = g.degrees().iter().sum();
            prop_assert_eq!(twice, 2 * g.size());
            for (u, v) in g.edges() {
                prop_assert!(g.has_edge(v, u));
                prop_assert!(u != v);
            }
        }
    }
}
