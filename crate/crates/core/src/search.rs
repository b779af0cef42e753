//! Extremal search: exhaustive `ex(n, T, H)` at small `n`, exact optimisation
//! over complete multipartite hosts, and restarted local search.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closed_form::{multipartite_pattern_count, Composition, Params};
use crate::counting::{contains_any, Pattern};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph, MAX_VERTICES};
use crate::BigCount;

/// Exhaustive search cap.
pub const EXACT_CAP: usize = 8;
/// Cap when the forbidden graph has at most three vertices.
pub const EXACT_CAP_SMALL_H: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub n: usize,
    pub best: BigCount,
    /// Canonical representatives, sorted by canonical form.
    pub witnesses: Vec<Graph>,
    pub exhaustive: bool,
    pub unique_up_to_iso: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Multipartite,
    Local,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub seed: u64,
    /// Number of local-search restarts.
    pub iterations: usize,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { mode: SearchMode::Exhaustive, seed: 0, iterations: 32, workers: 1 }
    }
}

pub fn exact_cap(h: &Pattern) -> usize {
    if h.vertex_count() <= 3 {
        EXACT_CAP_SMALL_H
    } else {
        EXACT_CAP
    }
}

/// `ex(n, T, H)` by exhaustive search, with every extremal graph up to isomorphism.
pub fn extremal_exact(n: usize, t: &Pattern, h: &Pattern) -> Result<ExtremalResult> {
    extremal_exact_with_workers(n, t, h, 1)
}

pub fn extremal_exact_with_workers(n: usize, t: &Pattern, h: &Pattern, workers: usize) -> Result<ExtremalResult> {
    let cap = exact_cap(h);
    if n > cap {
        return Err(Error::SearchCapExceeded { n, cap });
    }
    let forbidden = [h.clone()];
    let (best, witnesses) = exhaustive(n, t, &forbidden, workers)?;
    finish(n, t, &forbidden, best, witnesses, true)
}

fn finish(
    n: usize,
    t: &Pattern,
    forbidden: &[Pattern],
    best: u128,
    witnesses: Vec<Graph>,
    exhaustive: bool,
) -> Result<ExtremalResult> {
    for w in &witnesses {
        if contains_any(w, forbidden) || t.copies_u128(w)? != best {
            return Err(Error::Internal(format!("witness {w} failed re-verification")));
        }
    }
    Ok(ExtremalResult {
        n,
        best: BigUint::from(best),
        unique_up_to_iso: exhaustive && witnesses.len() == 1,
        witnesses,
        exhaustive,
    })
}

/// Patterns that constrain an `n`-vertex host. An edgeless pattern that fits
/// is contained in every host, so no free graph exists.
fn effective_forbidden(n: usize, forbidden: &[Pattern]) -> Result<Vec<Pattern>> {
    let mut out = Vec::new();
    for f in forbidden {
        if f.vertex_count() > n {
            continue;
        }
        if f.graph().edge_count() == 0 {
            return Err(Error::Domain(format!(
                "every {n}-vertex graph contains the edgeless forbidden graph on {} vertices",
                f.vertex_count()
            )));
        }
        out.push(f.clone());
    }
    Ok(out)
}

/// Exhaustive maximum of `N(G, objective)` over `n`-vertex graphs containing
/// none of `forbidden`, with all maximisers up to isomorphism.
///
/// Edge slots are decided in lexicographic order and only labellings with
/// nonincreasing degrees are explored. The bound is the objective count in the
/// current graph plus all undecided slots; only strictly worse subtrees are cut
/// so that every tied maximiser survives.
pub(crate) fn exhaustive(
    n: usize,
    objective: &Pattern,
    forbidden: &[Pattern],
    workers: usize,
) -> Result<(u128, Vec<Graph>)> {
    let forbidden = effective_forbidden(n, forbidden)?;
    let mut slots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            slots.push((i, j));
        }
    }
    let engine = Engine { n, slots, objective, forbidden: &forbidden, best: AtomicU64::new(0) };
    let empty = Graph::empty(n)?;
    let full = Graph::complete(n)?;

    // Split the first two slot decisions into independent subtrees.
    let split = engine.slots.len().min(2);
    let mut frontier = Vec::new();
    engine.expand(0, split, empty, full, &mut frontier);

    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, Collector)>> = Mutex::new(Vec::new());
    let run = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        let Some((g, opt)) = frontier.get(i) else { break };
        let mut c = Collector::default();
        engine.dfs(split, g.clone(), opt.clone(), &mut c);
        results.lock().expect("no poisoned workers").push((i, c));
    };
    std::thread::scope(|scope| {
        for _ in 1..workers.max(1) {
            scope.spawn(run);
        }
        run();
    });

    let best = engine.best.load(Ordering::Relaxed) as u128;
    let mut forms = BTreeMap::new();
    let mut results = results.into_inner().expect("no poisoned workers");
    results.sort_by_key(|(i, _)| *i);
    for (_, c) in results {
        if c.best == best {
            forms.extend(c.forms.into_iter().map(|f| (f, ())));
        }
    }
    Ok((best, forms.into_keys().map(|f| f.to_graph()).collect()))
}

struct Engine<'a> {
    n: usize,
    slots: Vec<(usize, usize)>,
    objective: &'a Pattern,
    forbidden: &'a [Pattern],
    best: AtomicU64,
}

#[derive(Default)]
struct Collector {
    best: u128,
    forms: Vec<CanonicalForm>,
}

impl Engine<'_> {
    fn can_add(&self, g: &Graph, i: usize, j: usize) -> bool {
        if i > 0 {
            let cap = g.degree(i - 1);
            if g.degree(i) + 1 > cap || g.degree(j) + 1 > cap {
                return false;
            }
        }
        let mut h = g.clone();
        h.add_edge(i, j);
        !self.forbidden.iter().any(|f| f.contains_through_edge(&h, i, j))
    }

    /// Degree order holds once row `i` is complete.
    fn row_ok(&self, g: &Graph, i: usize, j: usize) -> bool {
        j + 1 < self.n || (i + 1..self.n).all(|k| g.degree(k) <= g.degree(i))
    }

    fn bound_ok(&self, opt: &Graph) -> bool {
        let bound = self.objective.copies_u128(opt).expect("exact division");
        bound >= self.best.load(Ordering::Relaxed) as u128
    }

    fn expand(&self, k: usize, stop: usize, g: Graph, opt: Graph, out: &mut Vec<(Graph, Graph)>) {
        if k == stop {
            out.push((g, opt));
            return;
        }
        let (i, j) = self.slots[k];
        if self.can_add(&g, i, j) {
            let mut g2 = g.clone();
            g2.add_edge(i, j);
            if self.row_ok(&g2, i, j) {
                self.expand(k + 1, stop, g2, opt.clone(), out);
            }
        }
        let mut opt2 = opt;
        opt2.remove_edge(i, j);
        if self.row_ok(&g, i, j) {
            self.expand(k + 1, stop, g, opt2, out);
        }
    }

    fn dfs(&self, k: usize, mut g: Graph, mut opt: Graph, c: &mut Collector) {
        if k == self.slots.len() {
            let count = self.objective.copies_u128(&g).expect("exact division");
            let global = self.best.fetch_max(count as u64, Ordering::Relaxed) as u128;
            if count < global || count < c.best {
                return;
            }
            if count > c.best || c.forms.is_empty() {
                c.best = count;
                c.forms.clear();
            }
            let form = canonical_form(&g);
            if !c.forms.contains(&form) {
                c.forms.push(form);
            }
            return;
        }
        let (i, j) = self.slots[k];
        if self.can_add(&g, i, j) {
            g.add_edge(i, j);
            if self.row_ok(&g, i, j) {
                self.dfs(k + 1, g.clone(), opt.clone(), c);
            }
            g.remove_edge(i, j);
        }
        opt.remove_edge(i, j);
        if self.row_ok(&g, i, j) && self.bound_ok(&opt) {
            self.dfs(k + 1, g, opt, c);
        }
    }
}

/// Best complete `r`-partite host for `K^{(r)}_{s,t}` over nondecreasing
/// compositions of `n` into parts of size at least one. Returns the
/// lexicographically smallest maximiser and whether it is unique up to
/// permuting parts.
pub fn extremal_multipartite(n: usize, p: &Params) -> Result<(Composition, BigCount, bool)> {
    if n < p.r {
        return Err(Error::param(format!("n = {n} is smaller than r = {}", p.r)));
    }
    let mut best: Option<(Vec<usize>, BigCount)> = None;
    let mut ties = 0usize;
    let mut parts = vec![1usize; p.r];
    // Nondecreasing compositions in lexicographic order.
    fn rec(
        i: usize,
        min: usize,
        left: usize,
        parts: &mut Vec<usize>,
        p: &Params,
        best: &mut Option<(Vec<usize>, BigCount)>,
        ties: &mut usize,
    ) -> Result<()> {
        let r = parts.len();
        if i + 1 == r {
            if left < min {
                return Ok(());
            }
            parts[i] = left;
            let v = multipartite_pattern_count(parts, p)?;
            match best {
                Some((_, b)) if v < *b => {}
                Some((_, b)) if v == *b => *ties += 1,
                _ => {
                    *best = Some((parts.clone(), v));
                    *ties = 1;
                }
            }
            return Ok(());
        }
        let slots = r - i;
        let mut x = min;
        while x * slots <= left {
            parts[i] = x;
            rec(i + 1, x, left - x, parts, p, best, ties)?;
            x += 1;
        }
        Ok(())
    }
    rec(0, 1, n, &mut parts, p, &mut best, &mut ties)?;
    let (parts, value) = best.expect("n >= r admits a composition");
    Ok((Composition::new(parts)?, value, ties == 1))
}

/// Hill climbing over single-edge toggles with random restarts. Never claims
/// exhaustiveness or uniqueness.
pub fn extremal_local_search(n: usize, t: &Pattern, h: &Pattern, cfg: &SearchConfig) -> Result<ExtremalResult> {
    let parts = crate::graph::chromatic_number(h.graph())?.saturating_sub(1).max(1);
    let forbidden = [h.clone()];
    let (best, witnesses) = local_search(n, t, &forbidden, parts, cfg)?;
    finish(n, t, &forbidden, best, witnesses, false)
}

const PLATEAU_BUDGET: usize = 16;
const SWAP_SAMPLES: usize = 24;

pub(crate) fn local_search(
    n: usize,
    objective: &Pattern,
    forbidden: &[Pattern],
    parts: usize,
    cfg: &SearchConfig,
) -> Result<(u128, Vec<Graph>)> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let forbidden = effective_forbidden(n, forbidden)?;
    let restarts = cfg.iterations.max(1);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, u128, Graph)>> = Mutex::new(Vec::new());
    let run = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= restarts {
            break;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let climber = Climber { n, objective, forbidden: &forbidden };
        let start = if i.is_multiple_of(2) {
            climber.balanced_start(parts, &mut rng)
        } else {
            climber.greedy_start(&mut rng)
        };
        let g = climber.climb(start, &mut rng);
        let count = objective.copies_u128(&g).expect("exact division");
        results.lock().expect("no poisoned workers").push((i, count, g));
    };
    std::thread::scope(|scope| {
        for _ in 1..cfg.workers.max(1) {
            scope.spawn(run);
        }
        run();
    });
    let results = results.into_inner().expect("no poisoned workers");
    let best = results.iter().map(|r| r.1).max().unwrap_or(0);
    let forms: std::collections::BTreeSet<CanonicalForm> =
        results.iter().filter(|r| r.1 == best).map(|r| canonical_form(&r.2)).collect();
    Ok((best, forms.into_iter().map(|f| f.to_graph()).collect()))
}

struct Climber<'a> {
    n: usize,
    objective: &'a Pattern,
    forbidden: &'a [Pattern],
}

impl Climber<'_> {
    fn addable(&self, g: &Graph, u: usize, v: usize) -> bool {
        let mut h = g.clone();
        h.add_edge(u, v);
        !self.forbidden.iter().any(|f| f.contains_through_edge(&h, u, v))
    }

    /// Gain of adding `uv`, if allowed.
    fn gain(&self, g: &Graph, u: usize, v: usize) -> Option<u128> {
        let mut h = g.clone();
        h.add_edge(u, v);
        if self.forbidden.iter().any(|f| f.contains_through_edge(&h, u, v)) {
            return None;
        }
        Some(self.objective.copies_through_edge_u128(&h, u, v))
    }

    fn non_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !g.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complete `parts`-partite graph on a random balanced vertex split, or a
    /// greedy start if that graph is not free.
    fn balanced_start(&self, parts: usize, rng: &mut ChaCha8Rng) -> Graph {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.shuffle(rng);
        let mut class = vec![0usize; self.n];
        for (k, &v) in order.iter().enumerate() {
            class[v] = k % parts;
        }
        let mut g = Graph::empty(self.n).expect("n checked");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if class[u] != class[v] {
                    g.add_edge(u, v);
                }
            }
        }
        if contains_any(&g, self.forbidden) {
            return self.greedy_start(rng);
        }
        g
    }

    /// Random maximal free graph: slots in random order, each added if allowed.
    fn greedy_start(&self, rng: &mut ChaCha8Rng) -> Graph {
        let mut g = Graph::empty(self.n).expect("n checked");
        let mut slots = self.non_edges(&g);
        slots.shuffle(rng);
        for (u, v) in slots {
            if self.addable(&g, u, v) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Best allowed addition by gain, ties broken at random.
    fn best_addition(&self, g: &Graph, skip: Option<(usize, usize)>, rng: &mut ChaCha8Rng) -> Option<((usize, usize), u128)> {
        let mut best: Option<u128> = None;
        let mut choices = Vec::new();
        for (u, v) in self.non_edges(g) {
            if Some((u, v)) == skip {
                continue;
            }
            let Some(gain) = self.gain(g, u, v) else { continue };
            match best {
                Some(b) if gain < b => {}
                Some(b) if gain == b => choices.push((u, v)),
                _ => {
                    best = Some(gain);
                    choices = vec![(u, v)];
                }
            }
        }
        let gain = best?;
        Some((choices[rng.random_range(0..choices.len())], gain))
    }

    fn climb(&self, mut g: Graph, rng: &mut ChaCha8Rng) -> Graph {
        let mut plateau = 0;
        let step_budget = 4 * self.n * self.n + 16;
        for _ in 0..step_budget {
            if let Some(((u, v), gain)) = self.best_addition(&g, None, rng) {
                if gain > 0 {
                    g.add_edge(u, v);
                    continue;
                }
            }
            // Swap: drop one edge, add a better (or, within budget, equal) one.
            let mut edges: Vec<_> = g.edges().collect();
            edges.shuffle(rng);
            let mut moved = false;
            for &(a, b) in edges.iter().take(SWAP_SAMPLES) {
                let loss = self.objective.copies_through_edge_u128(&g, a, b);
                let mut h = g.clone();
                h.remove_edge(a, b);
                let Some(((u, v), gain)) = self.best_addition(&h, Some((a, b)), rng) else { continue };
                if gain > loss || gain == loss && plateau < PLATEAU_BUDGET {
                    plateau = if gain > loss { 0 } else { plateau + 1 };
                    h.add_edge(u, v);
                    g = h;
                    moved = true;
                    break;
                }
            }
            if !moved {
                break;
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::turan_clique_count;
    use crate::graph::{is_isomorphic, turan_graph};

    fn k(m: usize) -> Pattern {
        Pattern::complete(m).unwrap()
    }

    #[test]
    fn exact_examples() {
        let res = extremal_exact(5, &k(2), &k(3)).unwrap();
        assert_eq!(res.best, BigUint::from(6u32));
        assert!(res.unique_up_to_iso && res.exhaustive);
        assert!(is_isomorphic(&res.witnesses[0], &turan_graph(5, 2).unwrap()));

        let res = extremal_exact(6, &k(3), &k(4)).unwrap();
        assert_eq!(res.best, BigUint::from(8u32));
        assert!(res.unique_up_to_iso);
        assert!(is_isomorphic(&res.witnesses[0], &turan_graph(6, 3).unwrap()));

        let p3 = Pattern::new(Graph::path(3).unwrap()).unwrap();
        let res = extremal_exact(4, &p3, &k(3)).unwrap();
        assert_eq!(res.best, BigUint::from(4u32));
        assert!(res.witnesses.iter().any(|w| is_isomorphic(w, &Graph::cycle(4).unwrap())));
    }

    #[test]
    fn exact_cap_is_enforced() {
        assert!(matches!(extremal_exact(10, &k(2), &k(3)), Err(Error::SearchCapExceeded { n: 10, cap: 9 })));
        assert!(matches!(extremal_exact(9, &k(2), &k(4)), Err(Error::SearchCapExceeded { n: 9, cap: 8 })));
    }

    #[test]
    fn mantel_for_small_n() {
        for n in 2..=8 {
            let res = extremal_exact(n, &k(2), &k(3)).unwrap();
            assert_eq!(res.best, BigUint::from((n * n / 4) as u64), "n={n}");
            assert!(res.unique_up_to_iso);
            assert!(is_isomorphic(&res.witnesses[0], &turan_graph(n, 2).unwrap()));
        }
    }

    #[test]
    fn exact_agrees_with_brute_force_enumeration() {
        // Every labelled graph on n <= 6 vertices, maximum taken directly.
        let t = Pattern::new(Graph::path(3).unwrap()).unwrap();
        let h = Pattern::new(Graph::cycle(4).unwrap()).unwrap();
        for n in 1..=6 {
            let slots: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let mut best = 0u128;
            let mut forms = std::collections::BTreeSet::new();
            for mask in 0u32..1 << slots.len() {
                let edges: Vec<_> = (0..slots.len()).filter(|b| mask >> b & 1 == 1).map(|b| slots[b]).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                if crate::counting::contains_subgraph(&g, &h) {
                    continue;
                }
                let c = t.copies_u128(&g).unwrap();
                if c > best {
                    best = c;
                    forms.clear();
                }
                if c == best {
                    forms.insert(canonical_form(&g));
                }
            }
            let res = extremal_exact(n, &t, &h).unwrap();
            assert_eq!(res.best, BigUint::from(best), "n={n}");
            let got: Vec<_> = res.witnesses.iter().map(canonical_form).collect();
            assert_eq!(got, forms.into_iter().collect::<Vec<_>>(), "n={n}");
        }
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let t = Pattern::new(Graph::path(3).unwrap()).unwrap();
        for n in [5, 7] {
            let one = extremal_exact_with_workers(n, &t, &k(3), 1).unwrap();
            let four = extremal_exact_with_workers(n, &t, &k(3), 4).unwrap();
            assert_eq!(one, four);
        }
        let cfg1 = SearchConfig { mode: SearchMode::Local, seed: 3, iterations: 12, workers: 1 };
        let cfg4 = SearchConfig { workers: 4, ..cfg1.clone() };
        let a = extremal_local_search(9, &k(3), &k(4), &cfg1).unwrap();
        let b = extremal_local_search(9, &k(3), &k(4), &cfg4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn multipartite_examples() {
        let (c, v, unique) = extremal_multipartite(10, &Params::new(2, 1, 1).unwrap()).unwrap();
        assert_eq!((c.parts(), v, unique), (&[5, 5][..], BigUint::from(25u32), true));
        let (c, _, unique) = extremal_multipartite(60, &Params::new(2, 1, 2).unwrap()).unwrap();
        assert_eq!((c.parts(), unique), (&[30, 30][..], true));
        let p = Params::new(2, 1, 4).unwrap();
        let (c, v, _) = extremal_multipartite(500, &p).unwrap();
        assert!(c[0] < 250);
        assert!(v > multipartite_pattern_count(&[250, 250], &p).unwrap());
        assert!(extremal_multipartite(2, &Params::new(3, 1, 1).unwrap()).is_err());
    }

    #[test]
    fn multipartite_reports_ties() {
        // n odd, r = 2, s = t = 1: (a, n-a) is symmetric, so one nondecreasing maximiser.
        let (c, _, unique) = extremal_multipartite(7, &Params::new(2, 1, 1).unwrap()).unwrap();
        assert_eq!((c.parts(), unique), (&[3, 4][..], true));
        // Too few vertices for any copy: every composition ties at zero.
        let (c, v, unique) = extremal_multipartite(5, &Params::new(2, 3, 3).unwrap()).unwrap();
        assert_eq!((c.parts(), v, unique), (&[1, 4][..], BigUint::from(0u32), false));
    }

    #[test]
    fn local_search_examples() {
        let cfg = SearchConfig { mode: SearchMode::Local, seed: 7, iterations: 16, workers: 1 };
        let res = extremal_local_search(5, &k(2), &k(3), &cfg).unwrap();
        assert!(res.best >= BigUint::from(6u32));
        assert!(!res.exhaustive && !res.unique_up_to_iso);

        let res = extremal_local_search(8, &k(3), &k(4), &cfg).unwrap();
        assert_eq!(res.best, extremal_exact(8, &k(3), &k(4)).unwrap().best);

        let res = extremal_local_search(6, &k(2), &k(2), &cfg).unwrap();
        assert_eq!(res.best, BigUint::from(0u32));
        assert!(res.witnesses.iter().all(|w| w.edge_count() == 0));
    }

    #[test]
    fn local_search_never_beats_exact() {
        let cfg = SearchConfig { mode: SearchMode::Local, seed: 11, iterations: 8, workers: 2 };
        let patterns = [k(2), k(3), Pattern::new(Graph::path(3).unwrap()).unwrap()];
        let forbidden = [k(3), k(4), Pattern::new(Graph::cycle(4).unwrap()).unwrap()];
        for t in &patterns {
            for h in &forbidden {
                for n in 4..=7 {
                    let exact = extremal_exact(n, t, h).unwrap();
                    let local = extremal_local_search(n, t, h, &cfg).unwrap();
                    assert!(local.best <= exact.best);
                    for w in &local.witnesses {
                        assert!(!crate::counting::contains_subgraph(w, h));
                        assert_eq!(t.copies_u128(w).unwrap(), local.best.clone().try_into().unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn erdos_clique_maximisation_small() {
        for r in 2..=3 {
            for m in 2..=r {
                for n in r + 1..=7 {
                    let res = extremal_exact(n, &k(m), &k(r + 1)).unwrap();
                    assert_eq!(res.best, turan_clique_count(n, r, m));
                    assert!(res.unique_up_to_iso);
                    assert!(is_isomorphic(&res.witnesses[0], &turan_graph(n, r).unwrap()));
                }
            }
        }
    }

    #[test]
    fn edgeless_forbidden_graph_has_no_free_hosts() {
        let e3 = Pattern::new(Graph::empty(3).unwrap()).unwrap();
        assert!(matches!(extremal_exact(4, &k(2), &e3), Err(Error::Domain(_))));
        let res = extremal_exact(2, &k(2), &e3).unwrap();
        assert_eq!(res.best, BigUint::from(1u32));
    }
}
