//! Simple undirected graphs on labeled vertices and their Seidel matrices.
//!
//! Adjacency is a packed upper-triangular bitset in colexicographic pair
//! order (the graph6 bit order), so encoding, enumeration by edge mask, and
//! the switching/complement transforms are all cheap bit operations.

use thiserror::Error;

use crate::scalar::Real;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("vertex count {0} exceeds the supported maximum {max}", max = Graph::MAX_VERTICES)]
    TooManyVertices(usize),
}

/// Index of the unordered pair `{i, j}` (`i < j`) in colex order:
/// `{0,1}, {0,2}, {1,2}, {0,3}, ...`
#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Simple undirected graph on `n` labeled vertices, 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// One bit per unordered pair, colex order, zero-padded in the last word.
    bits: Vec<u64>,
}

impl Graph {
    pub const MAX_VERTICES: usize = 2048;

    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        if n > Self::MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let words = (n * (n - 1) / 2).div_ceil(64);
        Ok(Graph {
            n,
            bits: vec![0; words],
        })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for j in 1..n {
            for i in 0..j {
                g.set_edge(i, j, true);
            }
        }
        Ok(g)
    }

    /// Builds a graph from an explicit edge list. Duplicate edges are
    /// idempotent; loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            g.set_edge(u.min(v), u.max(v), true);
        }
        Ok(g)
    }

    /// Builds a graph on `n <= 11` vertices directly from an edge mask whose
    /// bit `k` is pair `k` in colex order. This is the enumeration hot path.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let pairs = n * (n - 1) / 2;
        if pairs > 64 {
            return Err(GraphError::TooManyVertices(n));
        }
        debug_assert!(pairs == 64 || mask < (1u64 << pairs));
        Ok(Graph {
            n,
            bits: if pairs == 0 { vec![] } else { vec![mask] },
        })
    }

    /// The edge mask for graphs small enough to fit one word (`n <= 11`).
    pub fn edge_mask(&self) -> Option<u64> {
        match self.bits.len() {
            0 => Some(0),
            1 => Some(self.bits[0]),
            _ => None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return false;
        }
        let k = pair_index(u.min(v), u.max(v));
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    fn set_edge(&mut self, i: usize, j: usize, present: bool) {
        let k = pair_index(i, j);
        if present {
            self.bits[k / 64] |= 1 << (k % 64);
        } else {
            self.bits[k / 64] &= !(1 << (k % 64));
        }
    }

    fn toggle_edge(&mut self, i: usize, j: usize) {
        let k = pair_index(i, j);
        self.bits[k / 64] ^= 1 << (k % 64);
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges as `(u, v)` with `u < v`, in colex order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |j| (0..j).map(move |i| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
    }

    /// Upper-triangle adjacency bits in colex order.
    pub(crate) fn pair_bits(&self) -> impl Iterator<Item = bool> + '_ {
        let pairs = self.n * (self.n - 1) / 2;
        (0..pairs).map(move |k| self.bits[k / 64] >> (k % 64) & 1 == 1)
    }

    pub(crate) fn from_pair_bits(n: usize, bits: impl Iterator<Item = bool>) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for (k, bit) in bits.enumerate() {
            if bit {
                g.bits[k / 64] |= 1 << (k % 64);
            }
        }
        Ok(g)
    }

    /// Seidel switching with respect to a vertex subset: every edge between
    /// the subset and its complement is toggled. Conjugates the Seidel
    /// matrix by a diagonal sign matrix, so the Seidel spectrum is preserved.
    pub fn switch(&self, subset: &[usize]) -> Result<Self, GraphError> {
        let mut inside = vec![false; self.n];
        for &v in subset {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            inside[v] = true;
        }
        let mut out = self.clone();
        for j in 1..self.n {
            for i in 0..j {
                if inside[i] != inside[j] {
                    out.toggle_edge(i, j);
                }
            }
        }
        Ok(out)
    }

    /// Graph with the exactly inverted edge set. Negates the Seidel matrix.
    pub fn complement(&self) -> Self {
        let pairs = self.n * (self.n - 1) / 2;
        let mut out = self.clone();
        for w in &mut out.bits {
            *w = !*w;
        }
        // clear padding bits in the last word
        if pairs % 64 != 0 {
            if let Some(last) = out.bits.last_mut() {
                *last &= (1u64 << (pairs % 64)) - 1;
            }
        }
        out
    }

    pub fn seidel_matrix(&self) -> SeidelMatrix {
        SeidelMatrix::of(self)
    }
}

/// Symmetric `n x n` matrix with zero diagonal and `-1` marking adjacency,
/// `+1` non-adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeidelMatrix {
    n: usize,
    entries: Vec<i8>, // row-major
}

impl SeidelMatrix {
    fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut entries = vec![1i8; n * n];
        for i in 0..n {
            entries[i * n + i] = 0;
        }
        for (i, j) in g.edges() {
            entries[i * n + j] = -1;
            entries[j * n + i] = -1;
        }
        SeidelMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    /// Row-major copy in the working scalar type, for the eigensolver.
    pub fn to_real<T: Real>(&self) -> Vec<T> {
        self.entries
            .iter()
            .map(|&e| match e {
                0 => T::zero(),
                1 => T::one(),
                _ => -T::one(),
            })
            .collect()
    }

    /// Row-major copy as machine integers, for the exact determinant.
    pub fn to_i64(&self) -> Vec<i64> {
        self.entries.iter().map(|&e| e as i64).collect()
    }
}
