use exturan::analytic::{classify, shift_identity_check, ThresholdCase};
use exturan::closed_form::{
    eckhoff_bound, f_value, multipartite_pattern_count, turan_clique_count, turan_kst_count, Params,
};
use exturan::counting::{count_copies, count_cliques, pattern_degree, Pattern};
use exturan::graph::{
    canonical_form, complete_multipartite, g_r_a_n_graph, graph6_decode, graph6_encode, kst_graph, turan_graph, Graph,
};
use exturan::search::{extremal_exact, extremal_multipartite};
use exturan::shorthand::parse_pattern;
use num_bigint::BigUint;
use proptest::prelude::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

#[test]
fn clique_counts_in_turan_graphs() {
    for n in 1..=16 {
        for r in 1..=6 {
            let g = turan_graph(n, r).unwrap();
            for m in 1..=r {
                assert_eq!(count_cliques(&g, m), turan_clique_count(n, r, m), "n={n} r={r} m={m}");
            }
        }
    }
}

#[test]
fn eckhoff_is_tight_on_turan_graphs() {
    for w in 2..=5 {
        for n in w..=20 {
            let e = BigUint::from(turan_graph(n, w).unwrap().edge_count());
            for m in 2..=w {
                assert_eq!(eckhoff_bound(&e, w, m).unwrap(), turan_clique_count(n, w, m), "n={n} w={w} m={m}");
            }
        }
    }
}

#[test]
fn pattern_counts_in_multipartite_hosts() {
    for (r, s, t) in [(2, 1, 1), (2, 1, 2), (2, 2, 2), (3, 1, 1), (3, 1, 2), (2, 2, 3)] {
        let p = Params::new(r, s, t).unwrap();
        let pattern = Pattern::new(kst_graph(r, s, t).unwrap()).unwrap();
        for parts in [vec![3, 4], vec![2, 5], vec![4, 4], vec![2, 3, 4], vec![3, 3, 3], vec![1, 2, 5]] {
            if parts.len() != r {
                continue;
            }
            let host = complete_multipartite(&parts).unwrap();
            assert_eq!(
                count_copies(&host, &pattern).unwrap(),
                multipartite_pattern_count(&parts, &p).unwrap(),
                "{parts:?} r={r} s={s} t={t}"
            );
        }
    }
}

#[test]
fn turan_kst_count_matches_direct_count() {
    for (r, s, t) in [(2, 1, 2), (2, 2, 2), (3, 1, 2), (2, 1, 3)] {
        let p = Params::new(r, s, t).unwrap();
        let pattern = Pattern::new(kst_graph(r, s, t).unwrap()).unwrap();
        for n in 1..=10 {
            let direct = count_copies(&turan_graph(n, r).unwrap(), &pattern).unwrap();
            assert_eq!(direct, turan_kst_count(n, &p), "n={n} r={r} s={s} t={t}");
        }
    }
}

#[test]
fn f_value_is_the_degree_of_a_large_part_vertex() {
    let p = Params::new(4, 1, 2).unwrap();
    let pattern = Pattern::new(kst_graph(4, 1, 2).unwrap()).unwrap();
    for n in 5..=11 {
        for a in 0..n {
            let host = g_r_a_n_graph(4, a, n).unwrap();
            assert_eq!(pattern_degree(&host, 0, &pattern).unwrap(), f_value(&p, a, n).unwrap(), "a={a} n={n}");
        }
    }
}

#[test]
fn mantel_and_exact_search_agree() {
    let k2 = Pattern::complete(2).unwrap();
    let k3 = Pattern::complete(3).unwrap();
    for n in 2..=8 {
        let res = extremal_exact(n, &k2, &k3).unwrap();
        assert_eq!(res.best, BigUint::from(n * n / 4), "n={n}");
        assert!(res.exhaustive && res.unique_up_to_iso);
    }
}

#[test]
fn exact_search_matches_multipartite_optimum_for_triangle_free_hosts() {
    // For H = K_3 every extremal host for K_{1,2} is complete bipartite at this size.
    let p = Params::new(2, 1, 2).unwrap();
    let t = Pattern::new(kst_graph(2, 1, 2).unwrap()).unwrap();
    let k3 = Pattern::complete(3).unwrap();
    for n in 3..=8 {
        let exact = extremal_exact(n, &t, &k3).unwrap();
        let (_, value, _) = extremal_multipartite(n, &p).unwrap();
        assert_eq!(exact.best, value, "n={n}");
    }
}

#[test]
fn shorthand_matches_constructors() {
    for (r, s, t) in [(2, 1, 3), (3, 2, 5), (4, 1, 1)] {
        let g = parse_pattern(&format!("K^{{{r}}}_{{{s},{t}}}")).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&kst_graph(r, s, t).unwrap()));
    }
}

#[test]
fn classify_agrees_with_real_thresholds() {
    for r in 2..=6 {
        for s in 1..=30 {
            for t in s..=s + 12 {
                let c = classify(&Params::new(r, s, t).unwrap()).unwrap();
                let (sf, tf) = (s as f64, t as f64);
                let b = sf + 0.5 + (2.0 * sf + 0.25).sqrt();
                let top = sf + 0.5 + ((r * s) as f64 + 0.25).sqrt();
                let expect = if (tf - b).abs() < 1e-9 {
                    ThresholdCase::Boundary
                } else if tf < b {
                    ThresholdCase::CaseA
                } else if tf > top + 1e-9 {
                    ThresholdCase::CaseC
                } else {
                    ThresholdCase::Undetermined
                };
                assert_eq!(c, expect, "r={r} s={s} t={t}");
            }
        }
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(g in small_graph(12)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in small_graph(9), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            perm.swap(i, (x % (i as u64 + 1)) as usize);
        }
        prop_assert_eq!(canonical_form(&g.permuted(&perm)), canonical_form(&g));
    }

    #[test]
    fn shift_identity_holds(r in 2usize..=4, s in 1usize..=3, dq in 0usize..=3, extra in proptest::collection::vec(0usize..=15, 4)) {
        let t = s + dq;
        let mut a: Vec<usize> = extra[..r].iter().map(|e| t + e).collect();
        a.sort_unstable();
        prop_assert!(shift_identity_check(&a, &Params::new(r, s, t).unwrap()).unwrap());
    }

    #[test]
    fn cliques_never_exceed_eckhoff(g in small_graph(10)) {
        let w = exturan::counting::clique_number(&g);
        for m in 2..=w.min(4) {
            let bound = eckhoff_bound(&BigUint::from(g.edge_count()), w, m).unwrap();
            prop_assert!(count_cliques(&g, m) <= bound);
        }
    }
}
