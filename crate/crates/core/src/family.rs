//! Decomposition families, `sigma(H)`, exact `biex(n, H)`, edge-criticality and
//! the lower-bound construction that plants a bipartite graph in a Turán part.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::counting::{contains_subgraph, count_cliques, Pattern};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, chromatic_number, proper_partitions, turan_graph, turan_parts, Bits, Graph};
use crate::search::{exhaustive, local_search, SearchConfig, SearchMode};
use crate::BigCount;

/// Largest forbidden graph accepted by the family operations.
pub const FAMILY_CAP: usize = 14;
/// Largest `n` for exact `biex`.
pub const BIEX_CAP: usize = 10;
/// Largest `n` for the construction.
pub const CONSTRUCTION_CAP: usize = 40;
/// Above this `n` the construction uses a heuristic free graph instead of exact `biex`.
pub const CONSTRUCTION_EXACT_UP_TO: usize = 8;

fn check_size(h: &Graph) -> Result<()> {
    if h.n() > FAMILY_CAP {
        return Err(Error::TooLargeForExact { what: "forbidden graph", n: h.n(), cap: FAMILY_CAP });
    }
    Ok(())
}

/// Smallest colour class over all proper `chi(H)`-colourings.
pub fn sigma(h: &Graph) -> Result<usize> {
    check_size(h)?;
    let chi = chromatic_number(h)?;
    Ok(proper_partitions(h, chi)?
        .map(|p| p.class_sizes().into_iter().min().unwrap_or(0))
        .min()
        .unwrap_or(0))
}

#[derive(Clone, Debug)]
pub struct DecompositionFamily {
    pub source: Graph,
    /// `chi(H) - 1`.
    pub r: usize,
    /// Canonical representatives, sorted by order, size, then canonical form.
    pub members: Vec<Graph>,
    /// Members containing no other member.
    pub minimal_members: Vec<Graph>,
}

impl DecompositionFamily {
    /// Minimal members without isolated vertices, paired with the member order.
    /// A host on at least that many vertices contains the member iff it
    /// contains the core.
    pub fn cores(&self) -> Vec<(Graph, usize)> {
        self.minimal_members.iter().map(|m| (m.strip_isolated(), m.n())).collect()
    }

    /// Whether `host` contains some member.
    pub fn contained_in(&self, host: &Graph) -> Result<bool> {
        for (core, order) in self.cores() {
            if host.n() >= order && contains_subgraph(host, &Pattern::new(core)?) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// All bipartite graphs left after deleting `r - 1` colour classes of some
/// proper `(r+1)`-colouring of `H`, up to isomorphism.
pub fn decomposition_family(h: &Graph) -> Result<DecompositionFamily> {
    check_size(h)?;
    let chi = chromatic_number(h)?;
    if chi < 3 {
        return Err(Error::param(format!("decomposition family needs chi(H) >= 3, got {chi}")));
    }
    let mut forms = BTreeSet::new();
    for part in proper_partitions(h, chi)? {
        let classes = part.classes();
        for a in 0..classes.len() {
            for b in a + 1..classes.len() {
                let kept: Vec<usize> = Bits(classes[a] | classes[b]).collect();
                forms.insert(canonical_form(&h.induced(&kept)));
            }
        }
    }
    let mut members: Vec<Graph> = forms.into_iter().map(|f| f.to_graph()).collect();
    members.sort_by_cached_key(|g| (g.n(), g.edge_count(), canonical_form(g)));

    let patterns = members.iter().map(|m| Pattern::new(m.clone())).collect::<Result<Vec<_>>>()?;
    let minimal_members = members
        .iter()
        .enumerate()
        .filter(|&(i, m)| !patterns.iter().enumerate().any(|(j, p)| j != i && contains_subgraph(m, p)))
        .map(|(_, m)| m.clone())
        .collect();
    Ok(DecompositionFamily { source: h.clone(), r: chi - 1, members, minimal_members })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiexResult {
    pub n: usize,
    pub value: BigCount,
    pub witness: Graph,
    pub exhaustive: bool,
}

fn core_patterns(family: &DecompositionFamily, n: usize) -> Result<Vec<Pattern>> {
    family
        .cores()
        .into_iter()
        .filter(|&(_, order)| order <= n)
        .map(|(core, _)| Pattern::new(core))
        .collect()
}

/// Maximum number of edges in an `n`-vertex graph containing no member of the
/// decomposition family of `H`, by exhaustive search.
pub fn biex(n: usize, h: &Graph) -> Result<BiexResult> {
    if n > BIEX_CAP {
        return Err(Error::SearchCapExceeded { n, cap: BIEX_CAP });
    }
    let family = decomposition_family(h)?;
    biex_of_family(n, &family)
}

pub fn biex_of_family(n: usize, family: &DecompositionFamily) -> Result<BiexResult> {
    if n > BIEX_CAP {
        return Err(Error::SearchCapExceeded { n, cap: BIEX_CAP });
    }
    let forbidden = core_patterns(family, n)?;
    let (best, witnesses) = exhaustive(n, &Pattern::complete(2)?, &forbidden, 1)?;
    let witness = witnesses.into_iter().next().ok_or_else(|| Error::Internal("no biex witness".into()))?;
    if family.contained_in(&witness)? || witness.edge_count() as u128 != best {
        return Err(Error::Internal(format!("biex witness {witness} failed re-verification")));
    }
    Ok(BiexResult { n, value: BigUint::from(best), witness, exhaustive: true })
}

/// Whether deleting some single edge lowers the chromatic number.
pub fn is_edge_critical(h: &Graph) -> Result<bool> {
    check_size(h)?;
    if h.edge_count() == 0 {
        return Err(Error::param("edge-criticality of an edgeless graph"));
    }
    let chi = chromatic_number(h)?;
    for (u, v) in h.edges() {
        let mut g = h.clone();
        g.remove_edge(u, v);
        if chromatic_number(&g)? < chi {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `T_r(n)` with a bipartite family-free graph planted in its largest part,
/// plus the intermediate edge counts.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: Graph,
    /// `N(G, K_m)`.
    pub count: BigCount,
    pub r: usize,
    /// Edges of the free graph `F''` on `n` vertices.
    pub free_edges: usize,
    /// Whether `F''` is an exact `biex` witness.
    pub free_exact: bool,
    /// Edges of `F'`, the densest `ceil(n/r)` vertices of `F''`.
    pub dense_edges: usize,
    /// Edges of the bipartite `F` actually planted.
    pub planted_edges: usize,
}

/// Lower-bound construction for `ex(n, K_m, H)` with `chi(H) = r + 1 > m`.
pub fn lower_bound_construction(n: usize, h: &Graph, m: usize) -> Result<Construction> {
    if n > CONSTRUCTION_CAP {
        return Err(Error::TooLargeForExact { what: "construction", n, cap: CONSTRUCTION_CAP });
    }
    let family = decomposition_family(h)?;
    let r = family.r;
    if m < 2 || m > r {
        return Err(Error::param(format!("need 2 <= m < chi(H) = {}, got m = {m}", r + 1)));
    }

    let (free, free_exact) = if n <= CONSTRUCTION_EXACT_UP_TO {
        (biex_of_family(n, &family)?.witness, true)
    } else {
        let cfg = SearchConfig { mode: SearchMode::Local, seed: n as u64, iterations: 8, workers: 1 };
        let (_, witnesses) = local_search(n, &Pattern::complete(2)?, &core_patterns(&family, n)?, 2, &cfg)?;
        let w = witnesses.into_iter().next().ok_or_else(|| Error::Internal("no free graph".into()))?;
        (w, false)
    };
    if family.contained_in(&free)? {
        return Err(Error::Internal("free graph contains a family member".into()));
    }

    let big = turan_parts(n, r).first().copied().unwrap_or(0);
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(free.degree(v)), v));
    let mut top = by_degree[..big].to_vec();
    top.sort_unstable();
    let dense = free.induced(&top);
    let planted = greedy_max_cut(&dense);

    let mut graph = turan_graph(n, r)?;
    for (u, v) in planted.edges() {
        graph.add_edge(u, v);
    }
    if contains_subgraph(&graph, &Pattern::new(h.clone())?) {
        return Err(Error::Internal("construction contains the forbidden graph".into()));
    }
    Ok(Construction {
        count: count_cliques(&graph, m),
        graph,
        r,
        free_edges: free.edge_count(),
        free_exact,
        dense_edges: dense.edge_count(),
        planted_edges: planted.edge_count(),
    })
}

/// Bipartite subgraph keeping at least half the edges: vertices in index
/// order, each on the side cutting more edges to those already placed.
pub fn greedy_max_cut(g: &Graph) -> Graph {
    let mut side = 0u64;
    let mut placed = 0u64;
    for v in 0..g.n() {
        let nb = g.neighbors(v) & placed;
        let to_zero = (nb & !side).count_ones();
        let to_one = (nb & side).count_ones();
        // Side 1 cuts the edges to side-0 vertices.
        if to_zero > to_one {
            side |= 1 << v;
        }
        placed |= 1 << v;
    }
    let mut out = Graph::empty(g.n()).expect("same order");
    for (u, v) in g.edges() {
        if (side >> u & 1) != (side >> v & 1) {
            out.add_edge(u, v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::turan_clique_count;
    use crate::graph::{complete_multipartite, is_isomorphic};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k222() -> Graph {
        complete_multipartite(&[2, 2, 2]).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&Graph::complete(3).unwrap()).unwrap(), 1);
        assert_eq!(sigma(&k222()).unwrap(), 2);
        assert_eq!(sigma(&Graph::cycle(5).unwrap()).unwrap(), 1);
        assert!(sigma(&Graph::empty(15).unwrap()).is_err());
    }

    #[test]
    fn family_examples() {
        let f = decomposition_family(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(f.r, 2);
        assert_eq!(f.members.len(), 1);
        assert!(is_isomorphic(&f.members[0], &Graph::complete(2).unwrap()));

        let f = decomposition_family(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(f.members.len(), 1);
        assert!(is_isomorphic(&f.members[0], &Graph::complete(2).unwrap()));

        let f = decomposition_family(&k222()).unwrap();
        assert_eq!(f.members.len(), 1);
        assert!(is_isomorphic(&f.members[0], &Graph::cycle(4).unwrap()));

        assert!(decomposition_family(&Graph::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn family_of_c5_keeps_isolated_vertices() {
        // Colourings of C5 have classes (2,2,1); two kept classes induce P3 + K1,
        // 2K2 or P4 shapes, all containing an edge.
        let f = decomposition_family(&Graph::cycle(5).unwrap()).unwrap();
        assert!(f.members.iter().all(|m| chromatic_number(m).unwrap() <= 2));
        assert!(f.minimal_members.iter().any(|m| m.strip_isolated().n() == 2));
    }

    #[test]
    fn biex_examples() {
        for n in 1..=8 {
            let b = biex(n, &Graph::complete(3).unwrap()).unwrap();
            assert_eq!(b.value, BigUint::from(0u32));
            assert!(b.exhaustive);
        }
        let b = biex(6, &k222()).unwrap();
        assert!(b.value >= BigUint::from(5u32));
        assert_eq!(b.value, BigUint::from(7u32));
        assert_eq!(b.witness.edge_count(), 7);
        assert!(biex(11, &k222()).is_err());
    }

    #[test]
    fn edge_critical_examples() {
        assert!(is_edge_critical(&Graph::complete(4).unwrap()).unwrap());
        assert!(is_edge_critical(&Graph::cycle(5).unwrap()).unwrap());
        assert!(!is_edge_critical(&k222()).unwrap());
        assert!(is_edge_critical(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn construction_examples() {
        let c = lower_bound_construction(8, &Graph::complete(3).unwrap(), 2).unwrap();
        assert!(is_isomorphic(&c.graph, &turan_graph(8, 2).unwrap()));
        assert_eq!(c.count, BigUint::from(16u32));

        let c = lower_bound_construction(8, &k222(), 2).unwrap();
        assert!(c.graph.edge_count() > 16);
        assert!(!contains_subgraph(&c.graph, &Pattern::new(k222()).unwrap()));

        let c = lower_bound_construction(12, &k222(), 2).unwrap();
        assert!(c.graph.edge_count() >= 36 + c.planted_edges);
        assert!(2 * c.planted_edges >= c.dense_edges);
        assert!(!c.free_exact);
        assert!(lower_bound_construction(8, &k222(), 3).is_err());
    }

    #[test]
    fn greedy_cut_keeps_half_the_edges() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..300 {
            let n = rng.random_range(0..=16);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let cut = greedy_max_cut(&g);
            assert!(2 * cut.edge_count() >= g.edge_count());
            assert!(cut.is_edge_subset_of(&g));
            assert!(chromatic_number(&cut).unwrap() <= 2);
        }
    }

    #[test]
    fn stripping_preserves_containment() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let sources = [k222(), Graph::cycle(5).unwrap(), complete_multipartite(&[1, 2, 3]).unwrap()];
        for h in &sources {
            let fam = decomposition_family(h).unwrap();
            for m in &fam.members {
                let full = Pattern::new(m.clone()).unwrap();
                let core = Pattern::new(m.strip_isolated()).unwrap();
                for _ in 0..100 {
                    let n = rng.random_range(1..=10);
                    let mut g = Graph::empty(n).unwrap();
                    for u in 0..n {
                        for v in u + 1..n {
                            if rng.random_bool(0.35) {
                                g.add_edge(u, v);
                            }
                        }
                    }
                    assert_eq!(
                        contains_subgraph(&g, &full),
                        contains_subgraph(&g, &core) && n >= m.n(),
                    );
                }
            }
        }
    }

    #[test]
    fn construction_beats_turan_count() {
        for (h, m) in [(k222(), 2), (Graph::complete(4).unwrap(), 2), (Graph::complete(4).unwrap(), 3)] {
            let r = chromatic_number(&h).unwrap() - 1;
            for n in [6, 9, 12] {
                let c = lower_bound_construction(n, &h, m).unwrap();
                assert!(c.count >= turan_clique_count(n, r, m));
            }
        }
    }
}
