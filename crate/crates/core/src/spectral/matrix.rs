//! Dense integer matrices attached to a graph.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use crate::graph::Graph;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn scaled_add(&self, alpha: i64, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + alpha * b)
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

/// Symmetric integer matrix (adjacency or signless Laplacian).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix(IntMatrix);

impl SymMatrix {
    /// Panics unless `m` is square and symmetric.
    pub fn new(m: IntMatrix) -> Self {
        assert!(m.is_symmetric(), "matrix is not symmetric");
        SymMatrix(m)
    }

    pub fn order(&self) -> usize {
        self.0.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0.get(i, j)
    }

    pub fn as_int(&self) -> &IntMatrix {
        &self.0
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.data.iter().map(|&x| x as f64).collect()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.0.data.iter().map(|&x| (x * x) as f64).sum())
    }
}

/// `n x m` vertex-edge incidence matrix, columns in canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix(IntMatrix);

impl IncidenceMatrix {
    pub fn as_int(&self) -> &IntMatrix {
        &self.0
    }
}

pub fn incidence(g: &Graph) -> IncidenceMatrix {
    let mut m = IntMatrix::zeros(g.order(), g.size());
    for (j, (u, v)) in g.edges().enumerate() {
        m.set(u, j, 1);
        m.set(v, j, 1);
    }
    IncidenceMatrix(m)
}

pub fn adjacency(g: &Graph) -> SymMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    SymMatrix(m)
}

/// `Q = D + A`.
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    let mut m = adjacency(g).0;
    for v in 0..g.order() {
        m.set(v, v, g.degree(v) as i64);
    }
    SymMatrix(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    SignlessLaplacian,
}

impl MatrixKind {
    pub fn of(self, g: &Graph) -> SymMatrix {
        match self {
            MatrixKind::Adjacency => adjacency(g),
            MatrixKind::SignlessLaplacian => signless_laplacian(g),
        }
    }
}

impl core::str::FromStr for MatrixKind {
    type Err = alloc::string::String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" | "A" | "adjacency" => Ok(MatrixKind::Adjacency),
            "q" | "Q" | "signless-laplacian" => Ok(MatrixKind::SignlessLaplacian),
            _ => Err(alloc::format!("unknown matrix {s:?} (expected a or q)")),
        }
    }
}
