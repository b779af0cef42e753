//! Small simple graphs (at most 64 vertices) stored as one adjacency word per
//! vertex, plus generators for the graph families used throughout the crate.

mod canon;
mod coloring;
mod io;

use std::fmt;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use coloring::{chromatic_number, proper_partitions, ProperPartitions, VertexPartition};
pub use io::{graph6_decode, graph6_encode, parse_edge_list, write_edge_list};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency array is the neighbour set of `v`. Rows are kept
/// symmetric, loop-free, and zero beyond bit `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: [0; MAX_VERTICES] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and range.
    pub fn from_adjacency(n: usize, rows: &[u64]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        if rows.len() != n {
            return Err(Error::param(format!("expected {n} adjacency rows, got {}", rows.len())));
        }
        let mask = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::param(format!("row {v} has bits beyond vertex {n}")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::LoopEdge(v));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in Bits(g.adj[u]) {
                if g.adj[v] >> u & 1 == 0 {
                    return Err(Error::param(format!("adjacency not symmetric at ({u},{v})")));
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let mask = low_bits(n);
        for v in 0..n {
            g.adj[v] = mask & !(1 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::param("a cycle needs at least 3 vertices"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Adjacency rows for vertices `0..n`.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Adds `uv`. Both endpoints must be distinct and in range.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph { n: vertices.len(), adj: [0; MAX_VERTICES] };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// The same graph with isolated vertices removed.
    pub fn strip_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.adj[v] != 0).collect();
        self.induced(&keep)
    }

    /// Disjoint union with `other`; `other`'s vertices come last.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        g.adj[..self.n].copy_from_slice(self.rows());
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        Ok(g)
    }

    /// Whether `self` is a spanning subgraph of `other` on the same vertex set.
    pub fn is_edge_subset_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows().iter().zip(other.rows()).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6_encode(self))
    }
}

/// Part sizes of the Turán graph `T_r(n)`, largest first.
pub fn turan_parts(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

/// Complete multipartite graph; part `i` occupies a contiguous block of
/// vertices following the blocks of parts `0..i`.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.contains(&0) {
        return Err(Error::param("complete multipartite parts must be nonempty"));
    }
    multipartite_with_empty_parts(parts)
}

fn multipartite_with_empty_parts(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let all = low_bits(n);
    let mut start = 0;
    for &p in parts {
        let block = low_bits(start + p) & !low_bits(start);
        for v in start..start + p {
            g.adj[v] = all & !block;
        }
        start += p;
    }
    Ok(g)
}

/// Turán graph `T_r(n)`: complete balanced `r`-partite graph, larger parts first.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::param("turan_graph needs r >= 1"));
    }
    multipartite_with_empty_parts(&turan_parts(n, r))
}

/// `G^r_{a,n}`: complete `r`-partite graph whose first part `V_1` has `n - a`
/// vertices (vertex 0 among them) and whose other parts form `T_{r-1}(a)`.
pub fn g_r_a_n_graph(r: usize, a: usize, n: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::param("G^r_{a,n} needs r >= 2"));
    }
    if n == 0 || a > n - 1 {
        return Err(Error::param(format!("G^r_{{a,n}} needs 0 <= a <= n-1, got a={a}, n={n}")));
    }
    let mut parts = vec![n - a];
    parts.extend(turan_parts(a, r - 1));
    multipartite_with_empty_parts(&parts)
}

/// `K^{(r)}_{s,t}`: complete `r`-partite graph with one part of size `t`
/// (placed first) and `r - 1` parts of size `s`.
pub fn kst_graph(r: usize, s: usize, t: usize) -> Result<Graph> {
    if r == 0 || s == 0 || t == 0 {
        return Err(Error::param("K^(r)_{s,t} needs r, s, t >= 1"));
    }
    let mut parts = vec![t];
    parts.extend(std::iter::repeat_n(s, r - 1));
    complete_multipartite(&parts)
}

/// The `s`-blowup: each vertex becomes an independent set of size `s`, and
/// adjacent vertices become complete bipartite pairs. Vertex `v` of `g` maps
/// to the block `v*s .. (v+1)*s`.
pub fn blowup(g: &Graph, s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::param("blowup factor must be >= 1"));
    }
    let n = g.n().saturating_mul(s);
    let mut b = Graph::empty(n)?;
    for (u, v) in g.edges() {
        for i in 0..s {
            for j in 0..s {
                b.add_edge(u * s + i, v * s + j);
            }
        }
    }
    Ok(b)
}
