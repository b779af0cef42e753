//! Exact subgraph counting: labelled embeddings, unlabelled copies, per-vertex
//! pattern degrees, clique counts and subgraph containment.
//!
//! A copy of `T` in `G` is a (not necessarily induced) subgraph of `G`
//! isomorphic to `T`, so `N(G, T) = emb(T -> G) / |Aut(T)|`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};
use crate::BigCount;

/// Largest supported pattern.
pub const PATTERN_CAP: usize = 16;

/// Backtracking matcher for one pattern with a fixed vertex order.
///
/// Position `i` maps pattern vertex `order[i]`; `back[i]` holds the earlier
/// positions adjacent to it, so the candidate set at position `i` is the
/// intersection of the host neighbourhoods of their images.
#[derive(Clone, Debug)]
pub(crate) struct Matcher {
    order: Vec<usize>,
    back: Vec<u64>,
    deg: Vec<u32>,
}

impl Matcher {
    /// Order starts with `prefix`, then grows greedily: most neighbours among
    /// placed vertices first, then higher degree, then lower index.
    pub(crate) fn new(t: &Graph, prefix: &[usize]) -> Self {
        let k = t.n();
        let mut order: Vec<usize> = prefix.to_vec();
        let mut placed: u64 = prefix.iter().fold(0, |m, &v| m | 1 << v);
        while order.len() < k {
            let next = (0..k)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    ((t.neighbors(v) & placed).count_ones(), t.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex exists");
            order.push(next);
            placed |= 1 << next;
        }
        let mut pos = vec![0; k];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| Bits(t.neighbors(v)).filter(|&u| pos[u] < i).fold(0u64, |m, u| m | 1 << pos[u]))
            .collect();
        let deg = order.iter().map(|&v| t.degree(v) as u32).collect();
        Matcher { order, back, deg }
    }

    fn k(&self) -> usize {
        self.order.len()
    }

    /// Host vertices able to receive each position, by degree.
    fn degree_masks(&self, host: &Graph) -> [u64; PATTERN_CAP] {
        let mut masks = [0u64; PATTERN_CAP];
        let degs: Vec<u32> = (0..host.n()).map(|v| host.neighbors(v).count_ones()).collect();
        for (i, &d) in self.deg.iter().enumerate() {
            masks[i] = degs.iter().enumerate().filter(|(_, &hd)| hd >= d).fold(0, |m, (v, _)| m | 1 << v);
        }
        masks
    }

    /// Validates a fixed prefix of images; returns the used-vertex mask.
    fn check_fixed(&self, host: &Graph, fixed: &[usize], masks: &[u64]) -> Option<u64> {
        let mut used = 0u64;
        for (i, &v) in fixed.iter().enumerate() {
            if v >= host.n() || used >> v & 1 == 1 || masks[i] >> v & 1 == 0 {
                return None;
            }
            if Bits(self.back[i]).any(|j| !host.has_edge(fixed[j], v)) {
                return None;
            }
            used |= 1 << v;
        }
        Some(used)
    }

    /// Number of embeddings extending the images `fixed` of the first positions.
    pub(crate) fn count(&self, host: &Graph, fixed: &[usize]) -> u128 {
        let k = self.k();
        if k > host.n() {
            return 0;
        }
        let masks = self.degree_masks(host);
        let Some(used) = self.check_fixed(host, fixed, &masks) else { return 0 };
        if fixed.len() == k {
            return 1;
        }
        let mut images = [0usize; PATTERN_CAP];
        images[..fixed.len()].copy_from_slice(fixed);
        self.count_rec(host, &masks, fixed.len(), &mut images, used)
    }

    fn count_rec(&self, host: &Graph, masks: &[u64], pos: usize, images: &mut [usize], used: u64) -> u128 {
        let mut cand = host.vertex_mask() & !used & masks[pos];
        for j in Bits(self.back[pos]) {
            cand &= host.neighbors(images[j]);
        }
        if pos + 1 == self.k() {
            return u128::from(cand.count_ones());
        }
        let mut total = 0;
        for v in Bits(cand) {
            images[pos] = v;
            total += self.count_rec(host, masks, pos + 1, images, used | 1 << v);
        }
        total
    }

    pub(crate) fn exists(&self, host: &Graph, fixed: &[usize]) -> bool {
        let k = self.k();
        if k > host.n() {
            return false;
        }
        let masks = self.degree_masks(host);
        let Some(used) = self.check_fixed(host, fixed, &masks) else { return false };
        if fixed.len() == k {
            return true;
        }
        let mut images = [0usize; PATTERN_CAP];
        images[..fixed.len()].copy_from_slice(fixed);
        self.exists_rec(host, &masks, fixed.len(), &mut images, used)
    }

    fn exists_rec(&self, host: &Graph, masks: &[u64], pos: usize, images: &mut [usize], used: u64) -> bool {
        let mut cand = host.vertex_mask() & !used & masks[pos];
        for j in Bits(self.back[pos]) {
            cand &= host.neighbors(images[j]);
        }
        if pos + 1 == self.k() {
            return cand != 0;
        }
        for v in Bits(cand) {
            images[pos] = v;
            if self.exists_rec(host, masks, pos + 1, images, used | 1 << v) {
                return true;
            }
        }
        false
    }
}

/// A pattern graph with its automorphism count and orbit representatives
/// precomputed.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    matcher: Matcher,
    aut_count: u128,
    is_clique: bool,
    /// One matcher per vertex orbit, anchored at the representative, with the orbit size.
    vertex_orbits: Vec<(Matcher, u128)>,
    /// One matcher per orbit of ordered adjacent pairs, anchored at the pair, with the orbit size.
    arc_orbits: Vec<(Matcher, u128)>,
}

impl Pattern {
    pub fn new(graph: Graph) -> Result<Self> {
        let k = graph.n();
        if k > PATTERN_CAP {
            return Err(Error::TooLargeForExact { what: "pattern", n: k, cap: PATTERN_CAP });
        }
        let matcher = Matcher::new(&graph, &[]);
        let aut_count = matcher.count(&graph, &[]).max(1);
        let is_clique = graph.edge_count() == k * k.saturating_sub(1) / 2;

        let mut vertex_orbits: Vec<(Matcher, u128, usize)> = Vec::new();
        for a in 0..k {
            match vertex_orbits.iter_mut().find(|(m, _, _)| m.exists(&graph, &[a])) {
                Some(orbit) => orbit.1 += 1,
                None => vertex_orbits.push((Matcher::new(&graph, &[a]), 1, a)),
            }
        }
        let mut arc_orbits: Vec<(Matcher, u128)> = Vec::new();
        for (a, b) in graph.edges().flat_map(|(a, b)| [(a, b), (b, a)]) {
            match arc_orbits.iter_mut().find(|(m, _)| m.exists(&graph, &[a, b])) {
                Some(orbit) => orbit.1 += 1,
                None => arc_orbits.push((Matcher::new(&graph, &[a, b]), 1)),
            }
        }
        Ok(Pattern {
            graph,
            matcher,
            aut_count,
            is_clique,
            vertex_orbits: vertex_orbits.into_iter().map(|(m, c, _)| (m, c)).collect(),
            arc_orbits,
        })
    }

    pub fn complete(m: usize) -> Result<Self> {
        Pattern::new(Graph::complete(m)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.n()
    }

    pub fn aut_count(&self) -> BigCount {
        BigUint::from(self.aut_count)
    }

    pub fn is_clique(&self) -> bool {
        self.is_clique
    }

    pub(crate) fn embeddings_u128(&self, host: &Graph) -> u128 {
        if self.is_clique {
            let m = self.graph.n();
            return clique_count_u128(host, m) * factorial_u128(m);
        }
        self.matcher.count(host, &[])
    }

    pub(crate) fn copies_u128(&self, host: &Graph) -> Result<u128> {
        if self.is_clique {
            return Ok(clique_count_u128(host, self.graph.n()));
        }
        let e = self.matcher.count(host, &[]);
        if !e.is_multiple_of(self.aut_count) {
            return Err(Error::Internal(format!(
                "{e} embeddings not divisible by {} automorphisms",
                self.aut_count
            )));
        }
        Ok(e / self.aut_count)
    }

    /// Whether adding edge `uv` to a host already containing it created a copy
    /// of the pattern, i.e. whether some copy uses `uv`.
    pub fn contains_through_edge(&self, host: &Graph, u: usize, v: usize) -> bool {
        if self.graph.n() > host.n() {
            return false;
        }
        self.arc_orbits.iter().any(|(m, _)| m.exists(host, &[u, v]))
    }

    /// Number of copies that use the edge `uv`, which must be present in `host`.
    pub fn copies_through_edge(&self, host: &Graph, u: usize, v: usize) -> BigCount {
        BigUint::from(self.copies_through_edge_u128(host, u, v))
    }

    pub(crate) fn copies_through_edge_u128(&self, host: &Graph, u: usize, v: usize) -> u128 {
        if !host.has_edge(u, v) {
            return 0;
        }
        if self.is_clique {
            let common = host.neighbors(u) & host.neighbors(v);
            return clique_count_in(host, common, self.graph.n().saturating_sub(2));
        }
        let through: u128 = self.arc_orbits.iter().map(|(m, size)| size * m.count(host, &[u, v])).sum();
        through / self.aut_count
    }

    fn pattern_degree_u128(&self, host: &Graph, v: usize) -> u128 {
        let through: u128 = self.vertex_orbits.iter().map(|(m, size)| size * m.count(host, &[v])).sum();
        through / self.aut_count
    }
}

fn factorial_u128(m: usize) -> u128 {
    (1..=m as u128).product()
}

/// Number of injective edge-preserving maps `V(T) -> V(G)`.
pub fn count_embeddings(g: &Graph, t: &Pattern) -> BigCount {
    BigUint::from(t.embeddings_u128(g))
}

/// `|Aut(T)|`, by counting embeddings of `T` into itself.
pub fn automorphism_count(t: &Graph) -> Result<BigCount> {
    Ok(Pattern::new(t.clone())?.aut_count())
}

/// `N(G, T)`: number of subgraphs of `G` isomorphic to `T`.
pub fn count_copies(g: &Graph, t: &Pattern) -> Result<BigCount> {
    if t.is_clique {
        return Ok(count_cliques(g, t.graph.n()));
    }
    t.copies_u128(g).map(BigUint::from)
}

/// Number of `m`-cliques, by neighbourhood intersection.
pub fn count_cliques(g: &Graph, m: usize) -> BigCount {
    BigUint::from(clique_count_u128(g, m))
}

pub(crate) fn clique_count_u128(g: &Graph, m: usize) -> u128 {
    clique_count_in(g, g.vertex_mask(), m)
}

/// `m`-cliques inside the vertex set `within`.
fn clique_count_in(g: &Graph, within: u64, m: usize) -> u128 {
    fn rec(g: &Graph, cand: u64, depth: usize) -> u128 {
        if depth == 1 {
            return u128::from(cand.count_ones());
        }
        let mut total = 0;
        for v in Bits(cand) {
            // Only extend with later vertices so each clique is counted once.
            let later = cand & g.neighbors(v) & !((2u64 << v).wrapping_sub(1));
            if later.count_ones() as usize + 1 >= depth {
                total += rec(g, later, depth - 1);
            }
        }
        total
    }
    match m {
        0 => 1,
        _ => rec(g, within, m),
    }
}

/// `d_G(v, T)`: number of copies of `T` containing `v`.
pub fn pattern_degree(g: &Graph, v: usize, t: &Pattern) -> Result<BigCount> {
    g.check_vertex(v)?;
    Ok(BigUint::from(t.pattern_degree_u128(g, v)))
}

/// `delta(G, T)`: minimum pattern degree over all vertices.
pub fn min_pattern_degree(g: &Graph, t: &Pattern) -> Result<BigCount> {
    if g.n() == 0 {
        return Err(Error::param("minimum pattern degree of the empty graph"));
    }
    let min = (0..g.n()).map(|v| t.pattern_degree_u128(g, v)).min().expect("nonempty");
    Ok(BigUint::from(min))
}

/// `omega(G)`: order of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    fn rec(g: &Graph, size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            rec(g, size + 1, rest & g.neighbors(v), best);
        }
    }
    let mut best = 0;
    rec(g, 0, g.vertex_mask(), &mut best);
    best
}

pub fn contains_subgraph(g: &Graph, t: &Pattern) -> bool {
    if t.is_clique {
        return clique_number(g) >= t.graph.n();
    }
    t.matcher.exists(g, &[])
}

pub fn contains_any(g: &Graph, family: &[Pattern]) -> bool {
    family.iter().any(|t| contains_subgraph(g, t))
}
