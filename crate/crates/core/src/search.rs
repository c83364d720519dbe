//! Induced and non-induced subgraph containment, diameter paths and
//! diameter subgraphs.
//!
//! Containment is plain backtracking over the pattern's vertices in BFS
//! order, with candidate sets narrowed by adjacency bit rows. It is
//! exponential in the worst case; the intended envelope is hosts of up to
//! ~60 vertices with the small `F`-patterns. All searches scan host
//! vertices in ascending order, so results are reproducible.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::families;
use crate::graph::{DistanceTable, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Pattern edges and non-edges are both preserved.
    Induced,
    /// Pattern edges map to host edges; extra host edges are allowed.
    Subgraph,
}

/// Injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Replays the mode's edge condition against the host.
    pub fn verify(&self, host: &Graph, pattern: &Graph, mode: Mode) -> bool {
        let k = pattern.order();
        if self.map.len() != k || self.map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                if self.map[i] == self.map[j] {
                    return false;
                }
                let pe = pattern.has_edge(i, j);
                let he = host.has_edge(self.map[i], self.map[j]);
                let ok = match mode {
                    Mode::Induced => pe == he,
                    Mode::Subgraph => !pe || he,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Host vertices in the image.
    pub fn image(&self) -> &[usize] {
        &self.map
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    Disconnected,
    LollipopParameter { l: usize, diameter: usize },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::Disconnected => f.write_str("graph is not connected"),
            SearchError::LollipopParameter { l, diameter } => {
                write!(f, "lollipop parameter l={l} outside 1..={diameter}")
            }
        }
    }
}

impl core::error::Error for SearchError {}

struct Matcher<'a> {
    host_rows: Vec<BitSet>,
    host: &'a Graph,
    pattern: &'a Graph,
    mode: Mode,
    order: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, mode: Mode, pinned: &[usize]) -> Self {
        Matcher {
            host_rows: host.adjacency_rows(),
            host,
            pattern,
            mode,
            order: bfs_order(pattern, pinned),
        }
    }

    /// Extends `map` (pattern -> host, `usize::MAX` = unmapped) along
    /// `order[depth..]`.
    fn extend(&self, depth: usize, map: &mut [usize], used: &mut BitSet) -> bool {
        let Some(&p) = self.order.get(depth) else {
            return true;
        };
        if map[p] != usize::MAX {
            return self.extend(depth + 1, map, used);
        }
        let mut cand = BitSet::full(self.host.order());
        cand.difference_with(used);
        for &q in &self.order[..depth] {
            let hq = map[q];
            if self.pattern.has_edge(p, q) {
                cand.intersect_with(&self.host_rows[hq]);
            } else if self.mode == Mode::Induced {
                cand.difference_with(&self.host_rows[hq]);
                cand.remove(hq);
            }
        }
        let need = self.pattern.degree(p);
        for h in cand.iter() {
            if self.host.degree(h) < need {
                continue;
            }
            map[p] = h;
            used.insert(h);
            if self.extend(depth + 1, map, used) {
                return true;
            }
            used.remove(h);
            map[p] = usize::MAX;
        }
        false
    }

    /// Whether the pinned partial map is consistent with the mode.
    fn pinned_consistent(&self, map: &[usize], pinned: &[usize]) -> bool {
        for (i, &p) in pinned.iter().enumerate() {
            for &q in &pinned[..i] {
                let pe = self.pattern.has_edge(p, q);
                let he = self.host.has_edge(map[p], map[q]);
                let ok = match self.mode {
                    Mode::Induced => pe == he,
                    Mode::Subgraph => !pe || he,
                };
                if !ok || map[p] == map[q] {
                    return false;
                }
            }
        }
        true
    }
}

/// Pinned vertices first, then BFS from them (or from each component's
/// lowest vertex), so that each new vertex tends to have a mapped neighbour.
fn bfs_order(g: &Graph, pinned: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &p in pinned {
        if !seen[p] {
            seen[p] = true;
            order.push(p);
            queue.push_back(p);
        }
    }
    let mut next_root = 0;
    loop {
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                    queue.push_back(v);
                }
            }
        }
        while next_root < n && seen[next_root] {
            next_root += 1;
        }
        if next_root == n {
            break;
        }
        seen[next_root] = true;
        order.push(next_root);
        queue.push_back(next_root);
    }
    order
}

fn find_embedding(
    host: &Graph,
    pattern: &Graph,
    mode: Mode,
    pins: &[(usize, usize)],
) -> Option<Embedding> {
    if pattern.order() > host.order() {
        return None;
    }
    let pinned: Vec<usize> = pins.iter().map(|&(p, _)| p).collect();
    let m = Matcher::new(host, pattern, mode, &pinned);
    let mut map = vec![usize::MAX; pattern.order()];
    let mut used = BitSet::new(host.order());
    for &(p, h) in pins {
        map[p] = h;
        used.insert(h);
    }
    if !m.pinned_consistent(&map, &pinned) {
        return None;
    }
    m.extend(0, &mut map, &mut used)
        .then_some(Embedding { map })
}

/// First induced embedding of `pattern` into `host`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    find_embedding(host, pattern, Mode::Induced, &[])
}

/// First (not necessarily induced) subgraph embedding of `pattern`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    find_embedding(host, pattern, Mode::Subgraph, &[])
}

pub fn contains(host: &Graph, pattern: &Graph, mode: Mode) -> Option<Embedding> {
    find_embedding(host, pattern, mode, &[])
}

/// A shortest path whose length equals the diameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiameterPath(pub Vec<usize>);

impl DiameterPath {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() <= 1
    }
}

/// Lazy stream of diameter paths, one per path with start < end.
pub struct DiameterPaths<'a> {
    g: &'a Graph,
    table: DistanceTable,
    diameter: usize,
    pairs: Vec<(usize, usize)>,
    pair_idx: usize,
    // DFS over the shortest-path DAG towards `pairs[pair_idx].1`.
    stack: Vec<(usize, usize)>,
    started: bool,
}

impl<'a> DiameterPaths<'a> {
    fn target(&self) -> usize {
        self.pairs[self.pair_idx].1
    }
}

impl Iterator for DiameterPaths<'_> {
    type Item = DiameterPath;

    fn next(&mut self) -> Option<DiameterPath> {
        loop {
            if self.pair_idx >= self.pairs.len() {
                return None;
            }
            if !self.started {
                self.started = true;
                self.stack.clear();
                self.stack.push((self.pairs[self.pair_idx].0, 0));
                if self.diameter == 0 {
                    let p = DiameterPath(vec![self.pairs[self.pair_idx].0]);
                    self.pair_idx += 1;
                    self.started = false;
                    return Some(p);
                }
            }
            let t = self.target();
            // Advance the DFS to the next complete path.
            while let Some(&(u, mut next)) = self.stack.last() {
                if u == t {
                    let path = DiameterPath(self.stack.iter().map(|&(v, _)| v).collect());
                    self.stack.pop();
                    return Some(path);
                }
                let nbrs = self.g.neighbors(u);
                let du = self.table.raw(u, t);
                let mut pushed = None;
                while next < nbrs.len() {
                    let w = nbrs[next];
                    next += 1;
                    if self.table.raw(w, t) + 1 == du {
                        pushed = Some(w);
                        break;
                    }
                }
                if let Some(top) = self.stack.last_mut() {
                    top.1 = next;
                }
                match pushed {
                    Some(w) => self.stack.push((w, 0)),
                    None => {
                        self.stack.pop();
                    }
                }
            }
            self.pair_idx += 1;
            self.started = false;
        }
    }
}

pub fn diameter_paths(g: &Graph) -> Result<DiameterPaths<'_>, SearchError> {
    let diameter = g.diameter().ok_or(SearchError::Disconnected)?;
    let table = g.distance_table();
    let n = g.order();
    let pairs = (0..n)
        .flat_map(|u| (u..n).map(move |v| (u, v)))
        .filter(|&(u, v)| table.raw(u, v) == diameter && (u < v || diameter == 0))
        .collect();
    Ok(DiameterPaths {
        g,
        table,
        diameter,
        pairs,
        pair_idx: 0,
        stack: Vec::new(),
        started: false,
    })
}

/// "`F1^k` is a diameter path of G": the diameter equals `k + 1`.
pub fn is_diameter_path_family(g: &Graph, k: usize) -> Result<bool, SearchError> {
    let d = g.diameter().ok_or(SearchError::Disconnected)?;
    Ok(d == k + 1)
}

/// Every simple path with exactly `len` edges in `g`, as vertex sequences.
fn simple_paths(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, len: usize, cur: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == len + 1 {
            out.push(cur.clone());
            return;
        }
        let u = *cur.last().expect("non-empty");
        for &v in g.neighbors(u) {
            if !on[v] {
                on[v] = true;
                cur.push(v);
                go(g, len, cur, on, out);
                cur.pop();
                on[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.order()];
    for s in 0..g.order() {
        on[s] = true;
        let mut cur = vec![s];
        go(g, len, &mut cur, &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// Non-induced embedding of `pattern` whose image contains the vertices
/// and edges of some diameter path of `g` (a diameter subgraph).
///
/// Anchors every diameter path in turn on every pattern path of the same
/// length and extends the remaining pattern vertices by backtracking.
pub fn diameter_subgraph_embedding(
    g: &Graph,
    pattern: &Graph,
) -> Result<Option<Embedding>, SearchError> {
    let d = g.diameter().ok_or(SearchError::Disconnected)?;
    let anchors = simple_paths(pattern, d);
    if anchors.is_empty() {
        return Ok(None);
    }
    for path in diameter_paths(g)? {
        let p = path.vertices();
        for q in &anchors {
            let pins: Vec<(usize, usize)> = q.iter().copied().zip(p.iter().copied()).collect();
            if let Some(e) = find_embedding(g, pattern, Mode::Subgraph, &pins) {
                return Ok(Some(e));
            }
        }
    }
    Ok(None)
}

/// "`Lol_{l+d+1, 2l+1}` is a diameter subgraph of G", `d = diam(G)`.
///
/// In that lollipop the only vertex pairs at distance `d` are the tail end
/// and the two cycle vertices farthest from the junction, so a diameter
/// path `p_0 .. p_d` inside it runs along the whole tail (`p_0 .. p_{d-l}`,
/// junction `p_{d-l}`) and half of the cycle. The embedding exists iff some
/// oriented diameter path admits a second route of exactly `l + 1` edges
/// from `p_d` back to `p_{d-l}` through `l` vertices off the path.
pub fn has_lollipop_diameter_subgraph(g: &Graph, l: usize) -> Result<bool, SearchError> {
    let d = g.diameter().ok_or(SearchError::Disconnected)?;
    if l == 0 || l > d {
        return Err(SearchError::LollipopParameter { l, diameter: d });
    }
    let mut blocked = vec![false; g.order()];
    for path in diameter_paths(g)? {
        let fwd = path.vertices().to_vec();
        let mut rev = fwd.clone();
        rev.reverse();
        for p in [fwd, rev] {
            for &v in &p {
                blocked[v] = true;
            }
            let junction = p[d - l];
            let found = closing_route(g, p[d], junction, l + 1, &mut blocked);
            for &v in &p {
                blocked[v] = false;
            }
            if found {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Simple route from `from` to `to` with exactly `edges` edges whose
/// interior avoids `blocked` vertices.
fn closing_route(g: &Graph, from: usize, to: usize, edges: usize, blocked: &mut [bool]) -> bool {
    if edges == 1 {
        return g.has_edge(from, to);
    }
    for &w in g.neighbors(from) {
        if !blocked[w] {
            blocked[w] = true;
            let ok = closing_route(g, w, to, edges - 1, blocked);
            blocked[w] = false;
            if ok {
                return true;
            }
        }
    }
    false
}

/// Generic route for the lollipop clause, used to cross-check the
/// specialised search.
pub fn lollipop_diameter_subgraph_generic(g: &Graph, l: usize) -> Result<bool, SearchError> {
    let d = g.diameter().ok_or(SearchError::Disconnected)?;
    if l == 0 || l > d {
        return Err(SearchError::LollipopParameter { l, diameter: d });
    }
    let lol = families::lollipop(l + d + 1, 2 * l + 1).expect("valid lollipop parameters");
    Ok(diameter_subgraph_embedding(g, &lol)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, f1, f2, lollipop, path};
    use crate::verify::corpus::connected_graphs_up_to;
    use proptest::prelude::*;

    /// Exhaustive oracle: some k-subset with some ordering realises `pattern`.
    fn naive_contains(host: &Graph, pattern: &Graph, mode: Mode) -> bool {
        let k = pattern.order();
        let n = host.order();
        if k > n {
            return false;
        }
        fn perms(
            n: usize,
            k: usize,
            cur: &mut Vec<usize>,
            f: &mut dyn FnMut(&[usize]) -> bool,
        ) -> bool {
            if cur.len() == k {
                return f(cur);
            }
            for v in 0..n {
                if !cur.contains(&v) {
                    cur.push(v);
                    if perms(n, k, cur, f) {
                        return true;
                    }
                    cur.pop();
                }
            }
            false
        }
        perms(n, k, &mut Vec::new(), &mut |m| {
            Embedding { map: m.to_vec() }.verify(host, pattern, mode)
        })
    }

    #[test]
    fn containment_examples() {
        let c5 = cycle(5).unwrap();
        let p4 = path(4).unwrap();
        let e = contains_induced(&c5, &p4).unwrap();
        assert!(e.verify(&c5, &p4, Mode::Induced));
        assert!(contains_induced(&complete(4).unwrap(), &p4).is_none());
        assert!(contains_subgraph(&complete(4).unwrap(), &p4).is_some());
        // F2^3 is the path v1..v6 with chord v1v3; v1 v3 v4 v5 v6 and
        // v2..v6 are both induced copies of F1^3.
        let host = f2(3).unwrap();
        let e = contains_induced(&host, &f1(3)).unwrap();
        assert!(e.verify(&host, &f1(3), Mode::Induced));
        assert!(naive_contains(&host, &f1(3), Mode::Induced));
        assert!(contains_induced(&host, &f1(2)).is_some());
        assert!(contains_induced(&host, &f1(4)).is_none());
        assert!(!naive_contains(&host, &f1(4), Mode::Induced));
    }

    #[test]
    fn agrees_with_naive_oracle() {
        let hosts: Vec<Graph> = connected_graphs_up_to(6).unwrap();
        let patterns: Vec<Graph> = connected_graphs_up_to(4).unwrap();
        for h in hosts.iter().step_by(3) {
            for p in &patterns {
                for mode in [Mode::Induced, Mode::Subgraph] {
                    let fast = contains(h, p, mode);
                    assert_eq!(fast.is_some(), naive_contains(h, p, mode));
                    if let Some(e) = fast {
                        assert!(e.verify(h, p, mode));
                    }
                }
            }
        }
    }

    #[test]
    fn diameter_path_counts() {
        let p4 = path(4).unwrap();
        assert_eq!(diameter_paths(&p4).unwrap().count(), 1);
        let c4 = cycle(4).unwrap();
        let paths: Vec<_> = diameter_paths(&c4).unwrap().collect();
        assert_eq!(paths.len(), 4);
        assert!(paths.iter().all(|p| p.len() == 2));
        let k3 = complete(3).unwrap();
        assert_eq!(diameter_paths(&k3).unwrap().count(), 3);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(diameter_paths(&two).is_err());
    }

    #[test]
    fn diameter_paths_are_valid() {
        for g in connected_graphs_up_to(6).unwrap() {
            let d = g.diameter().unwrap();
            let t = g.distance_table();
            let mut count = 0;
            for p in diameter_paths(&g).unwrap() {
                let v = p.vertices();
                assert_eq!(p.len(), d);
                assert_eq!(t.get(v[0], v[d]), Some(d));
                assert!(v.windows(2).all(|w| g.has_edge(w[0], w[1])));
                count += 1;
            }
            assert!(count >= 1);
        }
    }

    #[test]
    fn diameter_path_family() {
        assert!(is_diameter_path_family(&f1(4), 4).unwrap());
        assert!(is_diameter_path_family(&cycle(10).unwrap(), 4).unwrap());
        assert!(!is_diameter_path_family(&complete(4).unwrap(), 2).unwrap());
    }

    #[test]
    fn lollipop_clause_examples() {
        let paw = lollipop(4, 3).unwrap();
        assert!(has_lollipop_diameter_subgraph(&paw, 1).unwrap());
        let p5 = path(5).unwrap();
        for l in 1..=4 {
            assert!(!has_lollipop_diameter_subgraph(&p5, l).unwrap());
        }
        let c5 = cycle(5).unwrap();
        assert!(has_lollipop_diameter_subgraph(&c5, 2).unwrap());
        assert_eq!(
            has_lollipop_diameter_subgraph(&c5, 3),
            Err(SearchError::LollipopParameter { l: 3, diameter: 2 })
        );
        assert!(has_lollipop_diameter_subgraph(&c5, 0).is_err());
    }

    #[test]
    fn lollipop_routes_agree() {
        for g in connected_graphs_up_to(7).unwrap().iter().step_by(5) {
            let d = g.diameter().unwrap();
            for l in 1..=d {
                assert_eq!(
                    has_lollipop_diameter_subgraph(g, l).unwrap(),
                    lollipop_diameter_subgraph_generic(g, l).unwrap(),
                    "l={l}"
                );
            }
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                let mut edges = Vec::new();
                for v in 1..n {
                    for u in 0..v {
                        if it.next().unwrap() {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn embeddings_replay(host in arb_graph(8), pat in arb_graph(5)) {
            for mode in [Mode::Induced, Mode::Subgraph] {
                let found = contains(&host, &pat, mode);
                if let Some(e) = &found {
                    prop_assert!(e.verify(&host, &pat, mode));
                }
                if host.order() <= 7 {
                    prop_assert_eq!(found.is_some(), naive_contains(&host, &pat, mode));
                }
            }
        }
    }
}
