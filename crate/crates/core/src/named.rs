//! Standard named graphs used as witnesses and corpus seeds.

use alloc::vec::Vec;

use crate::graph::Graph;

/// Kneser graph `K(n, k)`: `k`-subsets of `0..n`, adjacent when disjoint.
/// Vertices are the subsets in increasing bitmask order.
pub fn kneser(n: usize, k: usize) -> Graph {
    assert!(n < 32);
    let sets: Vec<u32> = (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .collect();
    let mut edges = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(sets.len(), edges).expect("simple")
}

/// Petersen graph as outer 5-cycle, inner pentagram and spokes.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("simple")
}

/// Cayley graph on `Z_a x Z_b` with connection set `gens` (closed under
/// negation by construction). Vertex `(x, y)` is `x * b + y`.
fn torus_cayley(a: usize, b: usize, gens: &[(usize, usize)]) -> Graph {
    let mut edges = Vec::new();
    for x in 0..a {
        for y in 0..b {
            for &(dx, dy) in gens {
                let u = x * b + y;
                let v = ((x + dx) % a) * b + (y + dy) % b;
                if u != v {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(a * b, edges).expect("simple")
}

/// Shrikhande graph: `Z_4 x Z_4` with differences `±(0,1), ±(1,0), ±(1,1)`.
pub fn shrikhande() -> Graph {
    torus_cayley(4, 4, &[(0, 1), (1, 0), (1, 1)])
}

/// Rook's graph on an `a x b` board (`K_a □ K_b`).
pub fn rook(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a * b {
        for v in u + 1..a * b {
            if u / b == v / b || u % b == v % b {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(a * b, edges).expect("simple")
}

/// Circulant graph on `Z_n` with the given jumps.
pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for &j in jumps {
            let v = (i + j) % n;
            if v != i {
                edges.push((i, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("simple")
}

pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    let edges = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))));
    Graph::from_edges(n, edges).expect("simple")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
    Graph::from_edges(a + b, edges).expect("simple")
}

/// Prism `C_n □ K_2`.
pub fn prism(n: usize) -> Graph {
    let ring = |off: usize| (0..n).map(move |i| (off + i, off + (i + 1) % n));
    let rungs = (0..n).map(|i| (i, n + i));
    Graph::from_edges(2 * n, ring(0).chain(ring(n)).chain(rungs)).expect("simple")
}

/// Cocktail party graph: `K_{2n}` minus a perfect matching.
pub fn cocktail_party(n: usize) -> Graph {
    let edges = (0..2 * n)
        .flat_map(|u| (u + 1..2 * n).map(move |v| (u, v)))
        .filter(|&(u, v)| v != u + n);
    Graph::from_edges(2 * n, edges).expect("simple")
}
