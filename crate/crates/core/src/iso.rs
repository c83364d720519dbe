//! Colour refinement, canonical forms and exact isomorphism testing.
//!
//! Both searches individualise one vertex of the first smallest non-trivial
//! colour cell and refine to the coarsest equitable partition.
//! [`isomorphic`] runs the two graphs side by side and succeeds on the
//! first discrete leaf that is an isomorphism. [`canonical_form`] explores
//! the whole search tree and keeps the smallest adjacency code, pruning
//! children that lie in one orbit of automorphisms found so far.
//!
//! Practical up to a few hundred vertices for [`isomorphic`]; the
//! canonical form is meant for corpus-sized graphs (n <= ~16).

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

type Colors = Vec<u32>;

/// Refines the colourings of several graphs jointly, so equal colours are
/// comparable across graphs. Returns the number of colour classes.
fn refine(graphs: &[&Graph], colors: &mut [Colors]) -> usize {
    let mut classes = count_classes(colors);
    loop {
        let mut sigs: Vec<(Vec<u32>, usize, usize)> = Vec::new();
        for (gi, g) in graphs.iter().enumerate() {
            for v in 0..g.order() {
                let mut sig = Vec::with_capacity(g.degree(v) + 1);
                sig.push(colors[gi][v]);
                let start = sig.len();
                sig.extend(g.neighbors(v).iter().map(|&w| colors[gi][w]));
                sig[start..].sort_unstable();
                sigs.push((sig, gi, v));
            }
        }
        sigs.sort_unstable();
        let mut next = 0u32;
        for i in 0..sigs.len() {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                next += 1;
            }
            let (_, gi, v) = sigs[i];
            colors[gi][v] = next;
        }
        let now = if sigs.is_empty() {
            0
        } else {
            next as usize + 1
        };
        if now == classes {
            return now;
        }
        classes = now;
    }
}

fn count_classes(colors: &[Colors]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn degree_colors(g: &Graph) -> Colors {
    (0..g.order()).map(|v| g.degree(v) as u32).collect()
}

/// Colour of the first smallest cell with more than one vertex.
fn target_cell(colors: &Colors) -> Option<u32> {
    let k = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut size = vec![0usize; k];
    for &c in colors {
        size[c as usize] += 1;
    }
    (0..k)
        .filter(|&c| size[c] > 1)
        .min_by_key(|&c| (size[c], c))
        .map(|c| c as u32)
}

fn histogram(colors: &Colors, k: usize) -> Vec<usize> {
    let mut h = vec![0usize; k];
    for &c in colors {
        h[c as usize] += 1;
    }
    h
}

/// Exact isomorphism test.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    isomorphism(a, b).is_some()
}

/// An isomorphism `a -> b` as a vertex map, if one exists.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.size() != b.size() {
        return None;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let mut colors = [degree_colors(a), degree_colors(b)];
    let k = refine(&[a, b], &mut colors);
    if histogram(&colors[0], k) != histogram(&colors[1], k) {
        return None;
    }
    let [ca, cb] = colors;
    iso_search(a, b, ca, cb)
}

fn iso_search(a: &Graph, b: &Graph, ca: Colors, cb: Colors) -> Option<Vec<usize>> {
    let Some(cell) = target_cell(&ca) else {
        let n = a.order();
        let mut inv = vec![0usize; n];
        for (w, &c) in cb.iter().enumerate() {
            inv[c as usize] = w;
        }
        let map: Vec<usize> = ca.iter().map(|&c| inv[c as usize]).collect();
        return a
            .edges()
            .all(|(u, v)| b.has_edge(map[u], map[v]))
            .then_some(map);
    };
    let x = ca
        .iter()
        .position(|&c| c == cell)
        .expect("cell is non-empty");
    let fresh = ca.len() as u32 + 1;
    for y in (0..cb.len()).filter(|&y| cb[y] == cell) {
        let mut colors = [ca.clone(), cb.clone()];
        colors[0][x] = fresh;
        colors[1][y] = fresh;
        let k = refine(&[a, b], &mut colors);
        if histogram(&colors[0], k) != histogram(&colors[1], k) {
            continue;
        }
        let [na, nb] = colors;
        if let Some(map) = iso_search(a, b, na, nb) {
            return Some(map);
        }
    }
    None
}

/// Isomorphism-invariant code of a graph: the order plus the upper
/// triangle of the adjacency matrix under the canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub order: usize,
    pub code: Vec<u64>,
}

/// Canonical labelling `v -> label` together with the canonical code.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, CanonicalForm) {
    let mut colors = [degree_colors(g)];
    refine(&[g], &mut colors);
    let [start] = colors;
    let mut st = CanonState {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut prefix = Vec::new();
    st.search(start, &mut prefix);
    let (code, labels) = st.best.expect("search reaches a leaf");
    (
        labels,
        CanonicalForm {
            order: g.order(),
            code,
        },
    )
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).1
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (labels, _) = canonical_labeling(g);
    g.relabel(&labels)
}

fn adjacency_code(g: &Graph, labels: &[usize]) -> Vec<u64> {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u64; bits.div_ceil(64).max(1)];
    for (u, v) in g.edges() {
        let (i, j) = {
            let (a, b) = (labels[u], labels[v]);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        };
        let idx = j * (j - 1) / 2 + i;
        code[idx / 64] |= 1 << (idx % 64);
    }
    code
}

struct CanonState<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl CanonState<'_> {
    fn search(&mut self, colors: Colors, prefix: &mut Vec<usize>) {
        let Some(cell) = target_cell(&colors) else {
            let labels: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let code = adjacency_code(self.g, &labels);
            match &self.best {
                None => self.best = Some((code, labels)),
                Some((best, best_labels)) => {
                    if code == *best {
                        // Same code: labels^-1 . best_labels is an automorphism.
                        let mut inv = vec![0usize; labels.len()];
                        for (v, &l) in labels.iter().enumerate() {
                            inv[l] = v;
                        }
                        let gamma: Vec<usize> = best_labels.iter().map(|&l| inv[l]).collect();
                        self.automorphisms.push(gamma);
                    } else if code < *best {
                        self.best = Some((code, labels));
                    }
                }
            }
            return;
        };
        let n = colors.len();
        let fresh = n as u32 + 1;
        let children: Vec<usize> = (0..n).filter(|&v| colors[v] == cell).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &y in &children {
            if !explored.is_empty() && self.same_orbit_as_explored(prefix, y, &explored) {
                continue;
            }
            explored.push(y);
            let mut next = [colors.clone()];
            next[0][y] = fresh;
            refine(&[self.g], &mut next);
            let [next] = next;
            prefix.push(y);
            self.search(next, prefix);
            prefix.pop();
        }
    }

    /// Whether `y` shares an orbit with an explored child under the known
    /// automorphisms that fix `prefix` pointwise.
    fn same_orbit_as_explored(&self, prefix: &[usize], y: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                any = true;
                for v in 0..n {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let ry = find(&mut parent, y);
        explored.iter().any(|&e| find(&mut parent, e) == ry)
    }
}
