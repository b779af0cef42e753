use super::{Bits, Graph};
use crate::error::{Error, Result};

/// Exact chromatic number is computed for graphs up to this size.
pub const CHROMATIC_CAP: usize = 20;
/// Partition enumeration is offered for graphs up to this size.
pub const PARTITION_CAP: usize = 16;

/// Disjoint vertex classes covering `0..n`, each stored as a bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    classes: Vec<u64>,
}

impl VertexPartition {
    pub fn new(classes: Vec<u64>) -> Self {
        VertexPartition { classes }
    }

    pub fn classes(&self) -> &[u64] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.count_ones() as usize).collect()
    }

    pub fn class_vertices(&self, i: usize) -> Vec<usize> {
        Bits(self.classes[i]).collect()
    }

    /// Nonempty, pairwise disjoint, covering `g`'s vertices, each class independent.
    pub fn is_proper_coloring_of(&self, g: &Graph) -> bool {
        let mut seen = 0u64;
        for &c in &self.classes {
            if c == 0 || c & seen != 0 {
                return false;
            }
            seen |= c;
            if Bits(c).any(|v| g.neighbors(v) & c != 0) {
                return false;
            }
        }
        seen == g.vertex_mask()
    }
}

/// Minimum number of colours in a proper colouring.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CHROMATIC_CAP {
        return Err(Error::TooLargeForExact { what: "chromatic number", n, cap: CHROMATIC_CAP });
    }
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let lower = crate::counting::clique_number(g).max(2);
    let order = degeneracy_free_order(g);
    let upper = greedy_colors(g, &order);
    for k in lower..upper {
        let mut colors = vec![usize::MAX; n];
        if color_dfs(g, &order, 0, k, &mut colors, 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Vertices by descending degree; ties by index.
fn degeneracy_free_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn greedy_colors(g: &Graph, order: &[usize]) -> usize {
    let mut colors = vec![usize::MAX; g.n()];
    let mut used = 0;
    for &v in order {
        let taken: Vec<usize> = Bits(g.neighbors(v)).map(|u| colors[u]).collect();
        let c = (0..).find(|c| !taken.contains(c)).expect("some colour is free");
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn color_dfs(g: &Graph, order: &[usize], i: usize, k: usize, colors: &mut [usize], used: usize) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // Symmetry: a vertex may open at most one new colour.
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if Bits(g.neighbors(v)).any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_dfs(g, order, i + 1, k, colors, used.max(c + 1)) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// Every partition of the vertex set into exactly `k` nonempty independent
/// classes, each unordered partition exactly once.
///
/// Classes are numbered by their smallest vertex (restricted growth strings),
/// so the stream is deterministic. `k` below the chromatic number yields an
/// empty stream.
pub fn proper_partitions(g: &Graph, k: usize) -> Result<ProperPartitions<'_>> {
    if g.n() > PARTITION_CAP {
        return Err(Error::TooLargeForExact { what: "partition enumeration", n: g.n(), cap: PARTITION_CAP });
    }
    Ok(ProperPartitions { g, k, classes: Vec::with_capacity(k), assign: Vec::new(), started: false })
}

/// Iterator returned by [`proper_partitions`].
pub struct ProperPartitions<'a> {
    g: &'a Graph,
    k: usize,
    classes: Vec<u64>,
    /// Class index chosen for each assigned vertex, in vertex order.
    assign: Vec<usize>,
    started: bool,
}

impl ProperPartitions<'_> {
    /// Tries to place vertex `assign.len()` into class `from` or later.
    fn place_from(&mut self, from: usize) -> bool {
        let v = self.assign.len();
        let n = self.g.n();
        let remaining = n - v - 1;
        let open = self.classes.len();
        for c in from..=open.min(self.k.saturating_sub(1)) {
            if c == open {
                // Opening a class must leave enough vertices to open the rest.
                if open + 1 + remaining < self.k {
                    continue;
                }
                self.classes.push(1 << v);
            } else {
                if self.g.neighbors(v) & self.classes[c] != 0 {
                    continue;
                }
                if open + remaining < self.k {
                    continue;
                }
                self.classes[c] |= 1 << v;
            }
            self.assign.push(c);
            return true;
        }
        false
    }

    /// Removes the last vertex and returns the class it was in.
    fn unplace(&mut self) -> usize {
        let v = self.assign.len() - 1;
        let c = self.assign.pop().expect("nonempty assignment");
        self.classes[c] &= !(1 << v);
        if self.classes[c] == 0 {
            self.classes.pop();
        }
        c
    }

    /// Extends the current prefix to a full assignment, backtracking as needed.
    fn advance(&mut self, mut next_from: usize) -> bool {
        let n = self.g.n();
        loop {
            if self.assign.len() == n {
                return true;
            }
            if self.place_from(next_from) {
                next_from = 0;
                continue;
            }
            if self.assign.is_empty() {
                return false;
            }
            next_from = self.unplace() + 1;
        }
    }
}

impl Iterator for ProperPartitions<'_> {
    type Item = VertexPartition;

    fn next(&mut self) -> Option<VertexPartition> {
        let n = self.g.n();
        if self.k == 0 || self.k > n {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.advance(0)
        } else if self.assign.is_empty() {
            false
        } else {
            let from = self.unplace() + 1;
            self.advance(from)
        };
        if found {
            Some(VertexPartition::new(self.classes.clone()))
        } else {
            self.assign.clear();
            self.classes.clear();
            None
        }
    }
}
