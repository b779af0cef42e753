//! Desk-scale replay of the main results: exact reproduction at small `n`,
//! exact identities, and convergence audits for the asymptotic statements.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analytic::{
    balanced_gain_r2, case_c_fpp_closed, case_c_fpp_numeric, f_poly, h_xalpha, ratio_check, shift_identity_check,
};
use crate::closed_form::{
    check_turan_increment, eckhoff_bound, f_value, multipartite_pattern_count, turan_clique_count, turan_kst_count,
    turan_part_sizes, Params,
};
use crate::counting::{clique_count_u128, clique_number, contains_subgraph, pattern_degree, Pattern};
use crate::error::{Error, Result};
use crate::family::{biex, decomposition_family, lower_bound_construction, sigma};
use crate::graph::{
    blowup, chromatic_number, complete_multipartite, g_r_a_n_graph, is_isomorphic, kst_graph, turan_graph, Graph,
};
use crate::search::{extremal_exact, extremal_multipartite};

/// Smallest gain `max_a N(K_{a,500-a}, K_{1,4}) / N(T_2(500), K_{1,4})`
/// accepted for the unbalanced case. The exact scan gives 1.344 at a = 105.
pub const UNBALANCED_GAP_FLOOR: f64 = 1.01;

/// Largest accepted error ratio under doubling of `n` in the increment audit.
pub const DOUBLING_FACTOR: f64 = 0.7;

/// Accepted relative drift of `x |H(x, alpha) - f(alpha)|` between decades.
pub const DRIFT: f64 = 0.10;

pub const SHIFT_IDENTITY_SEED: u64 = 0x5eed_0064;
pub const SHIFT_IDENTITY_TUPLES: usize = 500;

/// Failures and notes collected while running one criterion.
#[derive(Debug, Default)]
pub struct Audit {
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    checks: usize,
}

impl Audit {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn checks(&self) -> usize {
        self.checks
    }
}

pub struct Criterion {
    pub name: &'static str,
    pub summary: &'static str,
    run: fn(&mut Audit) -> Result<()>,
}

#[derive(Debug)]
pub struct Outcome {
    pub name: &'static str,
    pub summary: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl Outcome {
    /// One line: `PASS name (checks, time)` or `FAIL name: first failure`.
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {:<22} {} ({} checks, {:.2}s)",
            self.name,
            self.summary,
            self.checks,
            self.elapsed.as_secs_f64()
        );
        if let Some(first) = self.failures.first() {
            line.push_str(&format!(": {first}"));
            if self.failures.len() > 1 {
                line.push_str(&format!(" (+{} more)", self.failures.len() - 1));
            }
        }
        line
    }
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { name: "turan-cliques", summary: "ex(n, K_m, K_{r+1}) is attained only by T_r(n)", run: turan_cliques },
    Criterion { name: "eckhoff", summary: "clique counts obey the Eckhoff bound on all graphs up to 7 vertices", run: eckhoff },
    Criterion { name: "turan-increment", summary: "Turán increment equals F at the Turán split", run: turan_increment },
    Criterion { name: "f-value-oracle", summary: "closed-form F agrees with direct counting in G^r_{a,n}", run: f_value_oracle },
    Criterion { name: "balanced-optimal", summary: "balanced parts are the unique multipartite optimum below threshold", run: balanced_optimal },
    Criterion { name: "boundary-shift", summary: "boundary pair (1,3): optimum sits near sqrt(3n)/2 off balance", run: boundary_shift },
    Criterion { name: "unbalanced-gap", summary: "above threshold an unbalanced split beats Turán by a constant factor", run: unbalanced_gap },
    Criterion { name: "curvature", summary: "numeric second derivative of the log-count matches the closed form", run: curvature },
    Criterion { name: "shift-identity", summary: "exact identity for the part-shift increment of g", run: shift_identity },
    Criterion { name: "convergence", summary: "increment and H(x, alpha) asymptotics converge", run: convergence },
    Criterion { name: "decomposition-biex", summary: "decomposition families and exact biex", run: decomposition_biex },
    Criterion { name: "construction", summary: "planted construction is K_{2,2,2}-free and beats T_2(n)", run: construction },
];

pub fn criterion(name: &str) -> Option<&'static Criterion> {
    CRITERIA.iter().find(|c| c.name == name)
}

pub fn run(c: &Criterion) -> Outcome {
    let start = Instant::now();
    let mut audit = Audit::default();
    if let Err(e) = (c.run)(&mut audit) {
        audit.failures.push(format!("error: {e}"));
    }
    Outcome {
        name: c.name,
        summary: c.summary,
        passed: audit.failures.is_empty(),
        checks: audit.checks,
        failures: audit.failures,
        notes: audit.notes,
        elapsed: start.elapsed(),
    }
}

/// Run a named criterion, or every criterion for `"all"`.
pub fn run_suite(name: &str) -> Result<Vec<Outcome>> {
    if name == "all" {
        return Ok(CRITERIA.iter().map(run).collect());
    }
    let c = criterion(name).ok_or_else(|| {
        let known: Vec<_> = CRITERIA.iter().map(|c| c.name).collect();
        Error::param(format!("unknown suite {name:?}; expected all or one of {}", known.join(", ")))
    })?;
    Ok(vec![run(c)])
}

fn turan_cliques(audit: &mut Audit) -> Result<()> {
    for r in 2..=4 {
        let h = Pattern::complete(r + 1)?;
        for m in 2..=r {
            let t = Pattern::complete(m)?;
            for n in r + 1..=8 {
                let res = extremal_exact(n, &t, &h)?;
                let expect = turan_clique_count(n, r, m);
                audit.check(res.best == expect, || format!("n={n} m={m} r={r}: best {} != {expect}", res.best));
                let turan = turan_graph(n, r)?;
                audit.check(
                    res.unique_up_to_iso && res.witnesses.len() == 1 && is_isomorphic(&res.witnesses[0], &turan),
                    || format!("n={n} m={m} r={r}: {} witnesses, not uniquely T_r(n)", res.witnesses.len()),
                );
            }
        }
    }
    Ok(())
}

fn eckhoff(audit: &mut Audit) -> Result<()> {
    let mut bounds: HashMap<(usize, usize, usize), u128> = HashMap::new();
    for n in 1..=7usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for mask in 0u64..1 << pairs.len() {
            let mut g = Graph::empty(n)?;
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
            let e = g.edge_count();
            let w = clique_number(&g);
            for m in 2..=3 {
                if w < m {
                    continue;
                }
                let bound = match bounds.get(&(e, w, m)) {
                    Some(&b) => b,
                    None => {
                        let b = eckhoff_bound(&BigUint::from(e), w, m)?.to_u128().expect("small bound");
                        bounds.insert((e, w, m), b);
                        b
                    }
                };
                let count = clique_count_u128(&g, m);
                audit.check(count <= bound, || format!("{g}: N(K_{m}) = {count} > bound {bound} (e={e}, w={w})"));
            }
        }
    }
    Ok(())
}

fn turan_increment(audit: &mut Audit) -> Result<()> {
    for r in 2..=5 {
        for s in 1..=5 {
            for t in s..=5 {
                let p = Params::new(r, s, t)?;
                for n in r + 1..=300 {
                    let ok = check_turan_increment(&p, n)?;
                    audit.check(ok, || format!("r={r} s={s} t={t} n={n}"));
                }
            }
        }
    }
    Ok(())
}

fn f_value_oracle(audit: &mut Audit) -> Result<()> {
    for r in 2..=3 {
        for s in 1..=3 {
            for t in s..=3 {
                let p = Params::new(r, s, t)?;
                let pattern = Pattern::new(kst_graph(r, s, t)?)?;
                for n in 1..=12 {
                    for a in 0..n {
                        let host = g_r_a_n_graph(r, a, n)?;
                        let direct = pattern_degree(&host, 0, &pattern)?;
                        let closed = f_value(&p, a, n)?;
                        audit.check(direct == closed, || format!("r={r} s={s} t={t} a={a} n={n}: {closed} != {direct}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn balanced_optimal(audit: &mut Audit) -> Result<()> {
    for (s, t) in [(1, 1), (1, 2), (2, 3)] {
        for r in 2..=3 {
            let p = Params::new(r, s, t)?;
            // Below the pattern order every composition counts zero copies.
            for n in p.order()..=60 {
                let (comp, value, unique) = extremal_multipartite(n, &p)?;
                let mut balanced = turan_part_sizes(n, r).parts().to_vec();
                balanced.sort_unstable();
                audit.check(comp.parts() == balanced.as_slice() && unique, || {
                    format!("r={r} s={s} t={t} n={n}: got {:?} (unique={unique}, value {value})", comp.parts())
                });
            }
        }
    }
    Ok(())
}

/// `argmax_a N(K_{a,n-a}, K_{s,t})` over `a <= n/2`, with its value.
fn bipartite_argmax(n: usize, p: &Params) -> Result<(usize, BigUint)> {
    let mut best = (0, BigUint::zero());
    for a in 0..=n / 2 {
        let v = multipartite_pattern_count(&[a, n - a], p)?;
        if v > best.1 {
            best = (a, v);
        }
    }
    Ok(best)
}

fn boundary_shift(audit: &mut Audit) -> Result<()> {
    let p = Params::new(2, 1, 3)?;
    for n in [200usize, 400, 800] {
        let (a_star, _) = bipartite_argmax(n, &p)?;
        let x = (n / 2 - a_star) as f64;
        let root = (3.0 * n as f64).sqrt();
        audit.note(format!("n={n}: a*={a_star}, x={x}, sqrt(3n)/2={:.3}", root / 2.0));
        audit.check((x - root / 2.0).abs() <= 0.25 * root, || format!("n={n}: x={x} too far from {:.3}", root / 2.0));
        // Exact gain for (s, t) = (1, 3) with m = n/2: (-x^4 + (3m - 2) x^2) / 3.
        let (xi, m) = (BigInt::from(n / 2 - a_star), BigInt::from(n / 2));
        let closed = (-xi.pow(4) + (3 * &m - 2) * xi.pow(2)) / 3;
        let gain = balanced_gain_r2(n, n / 2 - a_star, &p)?;
        audit.check(gain == closed, || format!("n={n}: gain {gain} != closed form {closed}"));
        if n == 800 {
            // Leading term of the gain, counting unlabelled copies: the
            // x^2 and x^4 coefficients each carry 1/(s! t!).
            let (s, t) = (p.s as f64, p.t as f64);
            let raw = 1.5 * s * t * (n as f64 / 2.0).powi((p.s + p.t) as i32 - 2);
            let labelled = (factorial(p.s) * factorial(p.t)) as f64;
            let g = gain.to_f64().unwrap_or(f64::NAN);
            let ratio = g / (raw / labelled);
            audit.note(format!("n={n}: gain={gain}, gain/scale={ratio:.4}, without 1/(s!t!) {:.4}", g / raw));
            audit.check((0.6..=1.4).contains(&ratio), || format!("n={n}: gain ratio {ratio:.4} outside [0.6, 1.4]"));
        }
    }
    Ok(())
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

fn unbalanced_gap(audit: &mut Audit) -> Result<()> {
    let p = Params::new(2, 1, 4)?;
    let n = 500;
    let (a_star, best) = bipartite_argmax(n, &p)?;
    let turan = turan_kst_count(n, &p);
    let ratio = ratio_of(&best, &turan);
    audit.note(format!("a*={a_star}, max={best}, turan={turan}, ratio={ratio:.6}"));
    // Exact comparison: 100 * best >= 101 * turan.
    audit.check(&best * 100u32 >= &turan * 101u32, || format!("ratio {ratio:.6} below {UNBALANCED_GAP_FLOOR}"));
    Ok(())
}

fn ratio_of(a: &BigUint, b: &BigUint) -> f64 {
    let q = num_rational::BigRational::new(BigInt::from(a.clone()), BigInt::from(b.clone()));
    q.to_f64().unwrap_or(f64::NAN)
}

fn curvature(audit: &mut Audit) -> Result<()> {
    for r in 2..=4 {
        for s in 1..=4 {
            for t in s..=9 {
                let p = Params::new(r, s, t)?;
                let closed = case_c_fpp_closed(&p) as f64;
                let numeric = case_c_fpp_numeric(&p)?;
                let ok = if closed == 0.0 {
                    numeric.abs() <= 1e-3
                } else {
                    ((numeric - closed) / closed).abs() <= 1e-4
                };
                audit.check(ok, || format!("r={r} s={s} t={t}: numeric {numeric} vs closed {closed}"));
            }
        }
    }
    Ok(())
}

/// The fixed-seed tuples `(a, p)` used by the shift-identity criterion.
pub fn shift_identity_tuples() -> Vec<(Vec<usize>, Params)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SHIFT_IDENTITY_SEED);
    (0..SHIFT_IDENTITY_TUPLES)
        .map(|_| {
            let r = rng.random_range(2..=5);
            let s = rng.random_range(1..=4);
            let t = s + rng.random_range(0..=3);
            let a1 = t + rng.random_range(0..=10);
            let mut a: Vec<usize> = (0..r).map(|_| a1 + rng.random_range(0..=20)).collect();
            a[0] = a1;
            a.sort_unstable();
            (a, Params { r, s, t })
        })
        .collect()
}

fn shift_identity(audit: &mut Audit) -> Result<()> {
    for (a, p) in shift_identity_tuples() {
        let ok = shift_identity_check(&a, &p)?;
        audit.check(ok, || format!("a={a:?} r={} s={} t={}", p.r, p.s, p.t));
    }
    Ok(())
}

const AUDIT_TRIPLES: [(usize, usize, usize); 3] = [(2, 1, 2), (3, 2, 3), (2, 2, 3)];

/// Largest `ratio_check` error over `0.3n <= a <= floor((r-1)n/r)`.
pub fn increment_error(p: &Params, n: usize) -> Result<f64> {
    let lo = (3 * n).div_ceil(10);
    let hi = ((p.r - 1) * n / p.r).min(n - 2);
    let mut worst = 0.0f64;
    for a in lo..=hi {
        worst = worst.max(ratio_check(p, a, n)?);
    }
    Ok(worst)
}

fn convergence(audit: &mut Audit) -> Result<()> {
    for (r, s, t) in AUDIT_TRIPLES {
        let p = Params::new(r, s, t)?;
        let errs = [2000, 4000, 8000].into_iter().map(|n| increment_error(&p, n)).collect::<Result<Vec<_>>>()?;
        audit.note(format!("increment r={r} s={s} t={t}: {:.3e} {:.3e} {:.3e}", errs[0], errs[1], errs[2]));
        for w in errs.windows(2) {
            audit.check(w[1] <= DOUBLING_FACTOR * w[0], || {
                format!("increment r={r} s={s} t={t}: {:.3e} -> {:.3e} shrinks by less than {DOUBLING_FACTOR}", w[0], w[1])
            });
        }
        for alpha in [0.1, 1.0, 3.0] {
            let f = f_poly(alpha, &p)?.value;
            let mut scaled = Vec::new();
            for x in [1e3, 1e4, 1e5] {
                scaled.push(x * (h_xalpha(x, alpha, &p)?.value - f).abs());
            }
            audit.note(format!("x|H-f| r={r} s={s} t={t} alpha={alpha}: {scaled:.6?}"));
            for w in scaled.windows(2) {
                let drift = if w[0] == 0.0 { w[1].abs() } else { (w[1] - w[0]).abs() / w[0] };
                audit.check(drift <= DRIFT, || {
                    format!("x|H-f| r={r} s={s} t={t} alpha={alpha}: {:.6} -> {:.6}", w[0], w[1])
                });
            }
        }
    }
    Ok(())
}

/// `ex(n, C_4)` by plain backtracking over edge slots: a graph is `C_4`-free
/// iff no two vertices share two neighbours.
pub fn ex_c4_bruteforce(n: usize) -> usize {
    fn rec(slot: usize, pairs: &[(usize, usize)], adj: &mut [u64], edges: usize, best: &mut usize) {
        if edges + (pairs.len() - slot) <= *best {
            return;
        }
        if slot == pairs.len() {
            *best = edges;
            return;
        }
        let (i, j) = pairs[slot];
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
        let c4 = (0..adj.len()).any(|u| {
            (u != i && (adj[u] & adj[i]).count_ones() >= 2) || (u != j && (adj[u] & adj[j]).count_ones() >= 2)
        });
        if !c4 {
            rec(slot + 1, pairs, adj, edges + 1, best);
        }
        adj[i] &= !(1 << j);
        adj[j] &= !(1 << i);
        rec(slot + 1, pairs, adj, edges, best);
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut adj = vec![0u64; n];
    let mut best = 0;
    rec(0, &pairs, &mut adj, 0, &mut best);
    best
}

/// Graphs with chromatic number at least 3 and `sigma >= 2`.
pub fn sigma_battery() -> Result<Vec<(&'static str, Graph)>> {
    Ok(vec![
        ("K_{2,2,2}", complete_multipartite(&[2, 2, 2])?),
        ("K_{2,2,3}", complete_multipartite(&[2, 2, 3])?),
        ("K_{2,3,3}", complete_multipartite(&[2, 3, 3])?),
        ("K_{2,2,2,2}", complete_multipartite(&[2, 2, 2, 2])?),
        ("C5 blown up by 2", blowup(&Graph::cycle(5)?, 2)?),
    ])
}

fn decomposition_biex(audit: &mut Audit) -> Result<()> {
    let k2 = Graph::complete(2)?;
    let fam = decomposition_family(&Graph::complete(3)?)?;
    audit.check(fam.members.len() == 1 && is_isomorphic(&fam.members[0], &k2), || {
        format!("family(K3) has {} members, expected K2", fam.members.len())
    });
    let k222 = complete_multipartite(&[2, 2, 2])?;
    let fam = decomposition_family(&k222)?;
    let c4 = Graph::cycle(4)?;
    audit.check(fam.members.len() == 1 && is_isomorphic(&fam.members[0], &c4), || {
        format!("family(K_{{2,2,2}}) has {} members, expected K_{{2,2}}", fam.members.len())
    });

    for n in 1..=8 {
        let v = biex(n, &Graph::complete(3)?)?.value;
        audit.check(v.is_zero(), || format!("biex({n}, K3) = {v}"));
    }
    for n in 4..=8 {
        let got = biex(n, &k222)?.value;
        let oracle = ex_c4_bruteforce(n);
        audit.note(format!("n={n}: biex(K_{{2,2,2}}) = {got}, ex(n, C4) = {oracle}"));
        audit.check(got == BigUint::from(oracle), || format!("n={n}: biex {got} != ex(n, C4) {oracle}"));
    }

    for (name, h) in sigma_battery()? {
        let sig = sigma(&h)?;
        let chi = chromatic_number(&h)?;
        audit.check(chi >= 3 && sig >= 2, || format!("{name}: chi={chi}, sigma={sig} not in the battery's range"));
        let family = decomposition_family(&h)?;
        for n in 4..=8 {
            let res = crate::family::biex_of_family(n, &family)?;
            audit.check(res.value >= BigUint::from(n - 1), || format!("{name}: biex({n}) = {} < n - 1", res.value));
        }
    }
    Ok(())
}

fn construction(audit: &mut Audit) -> Result<()> {
    let k222 = complete_multipartite(&[2, 2, 2])?;
    let pattern = Pattern::new(k222.clone())?;
    for n in 8..=16 {
        let c = lower_bound_construction(n, &k222, 2)?;
        let floor = turan_clique_count(n, 2, 2).to_usize().expect("small") + 1;
        let e = c.graph.edge_count();
        audit.note(format!("n={n}: e={e}, e(T_2(n))+1={floor}, planted={}, exact_free={}", c.planted_edges, c.free_exact));
        audit.check(!contains_subgraph(&c.graph, &pattern), || format!("n={n}: contains K_{{2,2,2}}"));
        audit.check(e >= floor, || format!("n={n}: {e} edges < {floor}"));
    }
    Ok(())
}
