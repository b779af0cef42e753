//! Canonical labelling by colour refinement and individualisation.
//!
//! The search tree is the usual one: refine to an equitable ordered
//! partition, individualise each vertex of the first smallest non-singleton
//! cell, recurse. The certificate is the lexicographically largest relabelled
//! adjacency matrix over all leaves. Children are skipped when they are twins
//! of an explored sibling or lie in its orbit under automorphisms found so
//! far that fix the current prefix pointwise.

use super::{Graph, MAX_VERTICES};

/// Byte string identifying a graph up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonically labelled representative of the class.
    pub fn to_graph(&self) -> Graph {
        let n = self.0[0] as usize;
        let mut rows = [0u64; MAX_VERTICES];
        for (v, chunk) in self.0[1..].chunks_exact(8).enumerate() {
            rows[v] = u64::from_le_bytes(chunk.try_into().expect("8-byte chunk"));
        }
        Graph { n, adj: rows }
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (_, canon) = canonical_labeling(g);
    let mut bytes = Vec::with_capacity(1 + 8 * g.n());
    bytes.push(g.n() as u8);
    for &row in canon.rows() {
        bytes.extend_from_slice(&row.to_le_bytes());
    }
    CanonicalForm(bytes)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form(a) == canonical_form(b)
}

/// Returns `(perm, canon)` where `canon = g.permuted(&perm)` is the canonical
/// representative.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, Graph) {
    let n = g.n();
    if n == 0 {
        return (Vec::new(), g.clone());
    }
    let mut search = Search { g, best: None, auts: Vec::new() };
    let root = refine(g, vec![0; n]);
    let mut prefix = Vec::new();
    search.descend(root, &mut prefix);
    let (cert, perm) = search.best.expect("search visits at least one leaf");
    let mut adj = [0u64; MAX_VERTICES];
    adj[..n].copy_from_slice(&cert);
    (perm, Graph { n, adj })
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    auts: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<usize>, prefix: &mut Vec<usize>) {
        let n = self.g.n();
        let cell_count = colors.iter().max().map_or(0, |&c| c + 1);
        if cell_count == n {
            self.leaf(colors);
            return;
        }

        let mut sizes = vec![0usize; cell_count];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..cell_count)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .expect("non-discrete partition has a non-singleton cell");
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();

        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if explored.iter().any(|&u| self.are_twins(u, v)) {
                continue;
            }
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let child = refine(self.g, individualize(&colors, v));
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, colors: Vec<usize>) {
        let g = self.g;
        let n = g.n();
        let mut cert = vec![0u64; n];
        for u in 0..n {
            for v in super::Bits(g.neighbors(u)) {
                cert[colors[u]] |= 1 << colors[v];
            }
        }
        match &self.best {
            None => self.best = Some((cert, colors)),
            Some((best_cert, best_perm)) => {
                use std::cmp::Ordering;
                match cert.cmp(best_cert) {
                    Ordering::Greater => self.best = Some((cert, colors)),
                    Ordering::Equal => {
                        // best_perm^{-1} . perm is an automorphism.
                        let mut inv = vec![0; n];
                        for (v, &c) in best_perm.iter().enumerate() {
                            inv[c] = v;
                        }
                        let aut: Vec<usize> = colors.iter().map(|&c| inv[c]).collect();
                        if aut.iter().enumerate().any(|(i, &j)| i != j) {
                            self.auts.push(aut);
                        }
                    }
                    Ordering::Less => {}
                }
            }
        }
    }

    #[inline]
    fn are_twins(&self, u: usize, v: usize) -> bool {
        let a = self.g.neighbors(u) & !(1 << v);
        let b = self.g.neighbors(v) & !(1 << u);
        a == b
    }

    /// Whether `v` shares an orbit with some explored vertex under the group
    /// generated by the known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let gens: Vec<&Vec<usize>> =
            self.auts.iter().filter(|a| prefix.iter().all(|&p| a[p] == p)).collect();
        if gens.is_empty() {
            return false;
        }
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in gens {
            for (i, &j) in a.iter().enumerate() {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// Splits `v` off into its own cell placed just before the rest of its cell.
fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    rank(colors.iter().enumerate().map(|(u, &c)| 2 * c + usize::from(u != v)).collect())
}

/// Dense ranks `0..k` preserving the order of the keys.
fn rank(keys: Vec<usize>) -> Vec<usize> {
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).expect("key present")).collect()
}

/// Colour refinement to the coarsest equitable refinement of `colors`.
/// Cells keep their relative order; split cells are ordered by the
/// neighbour-count signature.
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    let mut cells = colors.iter().max().map_or(0, |&c| c + 1);
    loop {
        let mut masks = vec![0u64; cells];
        for (v, &c) in colors.iter().enumerate() {
            masks[c] |= 1 << v;
        }
        let mut sigs: Vec<(usize, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let counts = masks.iter().map(|m| (g.neighbors(v) & m).count_ones()).collect();
                (colors[v], counts, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0usize; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                c += 1;
            }
            next[sigs[i].2] = c;
        }
        let next_cells = c + 1;
        colors = next;
        if next_cells == cells {
            return colors;
        }
        cells = next_cells;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, turan_graph};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn c4_is_k22_and_p4_is_not_star() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_isomorphic(&c4, &complete_multipartite(&[2, 2]).unwrap()));
        let p4 = Graph::path(4).unwrap();
        let star = complete_multipartite(&[1, 3]).unwrap();
        assert!(!is_isomorphic(&p4, &star));
        assert_ne!(canonical_form(&p4), canonical_form(&star));
    }

    #[test]
    fn canonical_graph_is_a_relabelling() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]).unwrap();
        let (perm, canon) = canonical_labeling(&g);
        assert_eq!(g.permuted(&perm), canon);
        assert_eq!(canonical_form(&g).to_graph(), canon);
    }

    #[test]
    fn relabelling_invariance_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.random_range(0..=12);
            let p = rng.random_range(0.0..1.0);
            let g = random_graph(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm);
            assert_eq!(canonical_form(&g), canonical_form(&h), "{g:?}");
        }
    }

    #[test]
    fn distinguishes_non_isomorphic_pairs() {
        // Same degree sequence, different graphs: C6 vs two triangles.
        let c6 = Graph::cycle(6).unwrap();
        let two_k3 = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&two_k3));
        // Regular graphs on 8 vertices: cube vs K_{4,4} minus perfect matching are isomorphic.
        let cube = Graph::from_edges(
            8,
            &[(0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        let mut k44m = complete_multipartite(&[4, 4]).unwrap();
        for i in 0..4 {
            k44m.remove_edge(i, 4 + i);
        }
        assert!(is_isomorphic(&cube, &k44m));
        // The Wagner graph is 3-regular on 8 vertices but not bipartite.
        let mut circ = Graph::cycle(8).unwrap();
        for i in 0..4 {
            circ.add_edge(i, i + 4);
        }
        assert!(!is_isomorphic(&cube, &circ));
    }

    #[test]
    fn symmetric_graphs_terminate_quickly() {
        for n in [16, 32, 64] {
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_form(&e), canonical_form(&e.permuted(&(0..n).rev().collect::<Vec<_>>())));
            let k = Graph::complete(n).unwrap();
            canonical_form(&k);
            let t = turan_graph(n, 4).unwrap();
            canonical_form(&t);
        }
        let c = Graph::cycle(16).unwrap();
        canonical_form(&c);
    }

    #[test]
    fn random_dense_and_sparse_pairs_agree_with_brute_force() {
        // Brute-force isomorphism over all permutations for n <= 6.
        fn brute(a: &Graph, b: &Graph) -> bool {
            let n = a.n();
            let mut perm: Vec<usize> = (0..n).collect();
            fn rec(i: usize, perm: &mut Vec<usize>, a: &Graph, b: &Graph) -> bool {
                if i == perm.len() {
                    return a.permuted(perm) == *b;
                }
                for j in i..perm.len() {
                    perm.swap(i, j);
                    if rec(i + 1, perm, a, b) {
                        return true;
                    }
                    perm.swap(i, j);
                }
                false
            }
            rec(0, &mut perm, a, b)
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.random_range(1..=6);
            let a = random_graph(&mut rng, n, 0.5);
            let b = random_graph(&mut rng, n, 0.5);
            assert_eq!(is_isomorphic(&a, &b), brute(&a, &b), "{a:?} {b:?}");
        }
    }
}
