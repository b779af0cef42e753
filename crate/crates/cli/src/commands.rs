use std::fmt::Display;
use std::time::Instant;

use exturan::analytic::{
    case_c_fpp_closed, case_c_fpp_numeric, classify, delta_f, f_poly, f_prime0, h_poly, h_xalpha, ratio_check,
    stability_integral,
};
use exturan::closed_form::{f_value, turan_clique_count, Params};
use exturan::counting::{count_copies, Pattern};
use exturan::family::{biex, decomposition_family, lower_bound_construction, sigma};
use exturan::graph::{graph6_decode, graph6_encode, parse_edge_list, turan_graph, Graph};
use exturan::search::{extremal_exact_with_workers, extremal_local_search, extremal_multipartite, SearchConfig, SearchMode};
use exturan::shorthand::parse_pattern;
use exturan::verify;
use indexmap::IndexMap;

use crate::config::{Command, ExperimentConfig};
use crate::{CliError, Report, Row};

struct Args<'a> {
    map: &'a IndexMap<String, String>,
}

impl Args<'_> {
    fn raw(&self, key: &str) -> Result<&str, CliError> {
        self.map.get(key).map(String::as_str).ok_or_else(|| CliError::Config(format!("missing required key {key:?}")))
    }

    fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<T, CliError> {
        let v = self.raw(key)?;
        v.parse().map_err(|_| CliError::Config(format!("bad value {v:?} for {key:?}")))
    }

    fn parse_or<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T, CliError> {
        if self.map.contains_key(key) {
            self.parse(key)
        } else {
            Ok(default)
        }
    }

    fn params(&self) -> Result<Params, CliError> {
        Ok(Params::new(self.parse("r")?, self.parse("s")?, self.parse("t")?)?)
    }

    /// A pattern name, graph6, or `@path` to an edge-list or graph6 file.
    fn graph(&self, key: &str) -> Result<Graph, CliError> {
        let v = self.raw(key)?;
        match v.strip_prefix('@') {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("reading {path}: {e}")))?;
                let body = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
                match body {
                    Some(l) if l.starts_with(|c: char| c.is_ascii_digit()) => Ok(parse_edge_list(&text)?),
                    Some(l) => Ok(graph6_decode(l)?),
                    None => Err(CliError::Config(format!("{path} is empty"))),
                }
            }
            None => Ok(parse_pattern(v)?),
        }
    }
}

fn row<const N: usize>(pairs: [(&str, String); N]) -> Row {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn s(x: impl Display) -> String {
    x.to_string()
}

pub fn run(config: &ExperimentConfig) -> Result<Report, CliError> {
    let start = Instant::now();
    let a = Args { map: &config.params };
    let mut passed = true;
    let rows = match config.command {
        Command::Count => {
            let g = a.graph("G")?;
            let t = Pattern::new(a.graph("T")?)?;
            vec![row([
                ("n", s(g.n())),
                ("edges", s(g.edge_count())),
                ("T", graph6_encode(t.graph())),
                ("copies", s(count_copies(&g, &t)?)),
            ])]
        }
        Command::Turan => {
            let (n, r, m): (usize, usize, usize) = (a.parse("n")?, a.parse("r")?, a.parse("m")?);
            if r == 0 {
                return Err(CliError::Config("r must be at least 1".into()));
            }
            let g = turan_graph(n, r)?;
            vec![row([
                ("n", s(n)),
                ("r", s(r)),
                ("m", s(m)),
                ("count", s(turan_clique_count(n, r, m))),
                ("graph6", graph6_encode(&g)),
            ])]
        }
        Command::FEval => {
            let p = a.params()?;
            let n: usize = a.parse("n")?;
            let range: Vec<usize> = match a.map.get("a") {
                Some(_) => vec![a.parse("a")?],
                None => (0..n).collect(),
            };
            range
                .into_iter()
                .map(|x| {
                    Ok(row([
                        ("r", s(p.r)),
                        ("s", s(p.s)),
                        ("t", s(p.t)),
                        ("n", s(n)),
                        ("a", s(x)),
                        ("F", s(f_value(&p, x, n)?)),
                    ]))
                })
                .collect::<Result<_, CliError>>()?
        }
        Command::Decomp => {
            let h = a.graph("H")?;
            let fam = decomposition_family(&h)?;
            let sig = sigma(&h)?;
            fam.members
                .iter()
                .map(|m| {
                    row([
                        ("r", s(fam.r)),
                        ("sigma", s(sig)),
                        ("member", graph6_encode(m)),
                        ("n", s(m.n())),
                        ("edges", s(m.edge_count())),
                        ("minimal", s(fam.minimal_members.contains(m))),
                    ])
                })
                .collect()
        }
        Command::Biex => {
            let (n, h) = (a.parse("n")?, a.graph("H")?);
            let res = biex(n, &h)?;
            vec![row([
                ("n", s(n)),
                ("H", graph6_encode(&h)),
                ("value", s(&res.value)),
                ("witness", graph6_encode(&res.witness)),
                ("exhaustive", s(res.exhaustive)),
            ])]
        }
        Command::Construct => {
            let (n, h, m) = (a.parse("n")?, a.graph("H")?, a.parse("m")?);
            let c = lower_bound_construction(n, &h, m)?;
            vec![row([
                ("n", s(n)),
                ("H", graph6_encode(&h)),
                ("m", s(m)),
                ("count", s(&c.count)),
                ("edges", s(c.graph.edge_count())),
                ("free_edges", s(c.free_edges)),
                ("free_exact", s(c.free_exact)),
                ("dense_edges", s(c.dense_edges)),
                ("planted_edges", s(c.planted_edges)),
                ("graph6", graph6_encode(&c.graph)),
            ])]
        }
        Command::Exsearch => {
            let n: usize = a.parse("n")?;
            let t = Pattern::new(a.graph("T")?)?;
            let h = Pattern::new(a.graph("H")?)?;
            let workers: usize = a.parse_or("workers", 1)?;
            let mode = a.parse_or("mode", "exhaustive".to_string())?;
            let res = match mode.as_str() {
                "exhaustive" => extremal_exact_with_workers(n, &t, &h, workers.max(1))?,
                "local" => {
                    let cfg = SearchConfig {
                        mode: SearchMode::Local,
                        seed: a.parse_or("seed", 0)?,
                        iterations: a.parse_or("iterations", 32)?,
                        workers: workers.max(1),
                    };
                    extremal_local_search(n, &t, &h, &cfg)?
                }
                other => return Err(CliError::Config(format!("unknown mode {other:?}; expected exhaustive or local"))),
            };
            res.witnesses
                .iter()
                .map(|w| {
                    row([
                        ("n", s(n)),
                        ("best", s(&res.best)),
                        ("witness", graph6_encode(w)),
                        ("exhaustive", s(res.exhaustive)),
                        ("unique", s(res.unique_up_to_iso)),
                    ])
                })
                .collect()
        }
        Command::Multipartite => {
            let p = a.params()?;
            let n: usize = a.parse("n")?;
            let (comp, value, unique) = extremal_multipartite(n, &p)?;
            let parts: Vec<String> = comp.iter().map(|x| x.to_string()).collect();
            vec![row([
                ("n", s(n)),
                ("r", s(p.r)),
                ("s", s(p.s)),
                ("t", s(p.t)),
                ("parts", parts.join(" ")),
                ("value", s(value)),
                ("unique", s(unique)),
            ])]
        }
        Command::Classify => {
            let p = a.params()?;
            vec![row([
                ("r", s(p.r)),
                ("s", s(p.s)),
                ("t", s(p.t)),
                ("case", s(classify(&p)?.as_str())),
                ("f_prime0", s(f_prime0(&p))),
                ("fpp_closed", s(case_c_fpp_closed(&p))),
            ])]
        }
        Command::AnalyticSweep => sweep(&a)?,
        Command::Verify => {
            let suite = a.parse_or("suite", "all".to_string())?;
            let outcomes = verify::run_suite(&suite)?;
            passed = outcomes.iter().all(|o| o.passed);
            outcomes
                .iter()
                .map(|o| {
                    row([
                        ("suite", s(o.name)),
                        ("status", s(if o.passed { "PASS" } else { "FAIL" })),
                        ("checks", s(o.checks)),
                        ("failures", o.failures.join("; ")),
                        ("notes", o.notes.join("; ")),
                    ])
                })
                .collect()
        }
    };
    Ok(Report { config: config.clone(), rows, elapsed: start.elapsed(), passed })
}

fn grid(a: &Args, default_steps: usize) -> Result<Vec<f64>, CliError> {
    let (from, to): (f64, f64) = (a.parse("from")?, a.parse("to")?);
    let steps: usize = a.parse_or("steps", default_steps)?;
    if !(from.is_finite() && to.is_finite()) || steps == 0 || steps > 1_000_000 {
        return Err(CliError::Config("need finite from/to and 1 <= steps <= 1000000".into()));
    }
    if steps == 1 {
        return Ok(vec![from]);
    }
    Ok((0..steps).map(|i| from + (to - from) * i as f64 / (steps - 1) as f64).collect())
}

fn int_range(a: &Args) -> Result<Vec<usize>, CliError> {
    let (from, to): (usize, usize) = (a.parse("from")?, a.parse("to")?);
    if from > to || to - from > 1_000_000 {
        return Err(CliError::Config("need from <= to and at most 10^6 values".into()));
    }
    Ok((from..=to).collect())
}

/// Rows `(r, s, t, n_or_x, a_or_alpha, quantity, value)`.
fn sweep(a: &Args) -> Result<Vec<Row>, CliError> {
    let p = a.params()?;
    let quantity = a.raw("quantity")?;
    let mut rows = Vec::new();
    let mut push = |n_or_x: String, a_or_alpha: String, q: &str, value: String| {
        rows.push(row([
            ("r", s(p.r)),
            ("s", s(p.s)),
            ("t", s(p.t)),
            ("n_or_x", n_or_x),
            ("a_or_alpha", a_or_alpha),
            ("quantity", s(q)),
            ("value", value),
        ]));
    };
    match quantity {
        "H" => {
            for z in grid(a, 11)? {
                push(s(z), String::new(), "H", s(h_poly(z, &p)?.value));
            }
        }
        "f" => {
            for z in grid(a, 11)? {
                push(s(z), String::new(), "f", s(f_poly(z, &p)?.value));
            }
        }
        "Hx" => {
            let x: f64 = a.parse("x")?;
            for alpha in grid(a, 11)? {
                let e = h_xalpha(x, alpha, &p)?;
                push(s(x), s(alpha), "H", s(e.value));
                for (label, v) in &e.components {
                    push(s(x), s(alpha), label, s(v));
                }
            }
        }
        "delta" | "ratio" => {
            let n: usize = a.parse("n")?;
            for x in int_range(a)? {
                let v = if quantity == "delta" { s(delta_f(&p, x, n)?) } else { s(ratio_check(&p, x, n)?) };
                push(s(n), s(x), quantity, v);
            }
        }
        "integral" => {
            for beta in grid(a, 11)? {
                push(s(beta), String::new(), "integral", s(stability_integral(beta, &p)?));
            }
        }
        "fpp" => {
            push(String::new(), String::new(), "fpp_closed", s(case_c_fpp_closed(&p)));
            push(String::new(), String::new(), "fpp_numeric", s(case_c_fpp_numeric(&p)?));
        }
        other => {
            return Err(CliError::Config(format!(
                "unknown quantity {other:?}; expected H, f, Hx, delta, ratio, integral or fpp"
            )))
        }
    }
    Ok(rows)
}
