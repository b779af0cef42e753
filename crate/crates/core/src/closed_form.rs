//! Exact closed forms: Turán clique counts, Eckhoff's bound, the multipartite
//! count `g`, `F_{r,s,t}(a, n)` and the Turán increment identity.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::turan_parts;
use crate::{BigCount, ExactRational};

/// The pattern `K^{(r)}_{s,t}`: complete `r`-partite, one part of size `t`,
/// `r - 1` parts of size `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl Params {
    pub fn new(r: usize, s: usize, t: usize) -> Result<Self> {
        if r < 1 || s < 1 || t < s {
            return Err(Error::param(format!("need r >= 1 and 1 <= s <= t, got r={r} s={s} t={t}")));
        }
        Ok(Params { r, s, t })
    }

    pub fn q(&self) -> usize {
        self.t - self.s
    }

    /// 1/2 when `s = t`, else 1.
    pub fn lambda(&self) -> ExactRational {
        if self.s == self.t {
            BigRational::new(1.into(), 2.into())
        } else {
            BigRational::one()
        }
    }

    /// `k - 1` when `t != s`, else 1.
    pub fn lambda_tilde(&self, k: usize) -> usize {
        if self.t != self.s {
            k - 1
        } else {
            1
        }
    }

    /// Order of the pattern, `(r-1)s + t`.
    pub fn order(&self) -> usize {
        (self.r - 1) * self.s + self.t
    }

    fn with_r(&self, r: usize) -> Params {
        Params { r, ..*self }
    }
}

/// Part sizes `(x_1, ..., x_r)` of a complete multipartite host.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::param("a composition needs at least one part"));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl std::ops::Deref for Composition {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// `e = e(T_w(n1)) + n2` with `0 <= n2 < (w-1) n1 / w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EckhoffSplit {
    pub n1: usize,
    pub n2: usize,
}

/// `C(a, b)`, zero when `b > a`.
pub fn binom(a: usize, b: usize) -> BigCount {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

pub fn turan_part_sizes(n: usize, r: usize) -> Composition {
    Composition(turan_parts(n, r))
}

/// Elementary symmetric polynomial of degree `m` in the part sizes.
fn elementary_symmetric(parts: &[usize], m: usize) -> BigCount {
    let mut e = vec![BigUint::zero(); m + 1];
    e[0] = BigUint::one();
    for &x in parts {
        for k in (1..=m).rev() {
            let add = &e[k - 1] * x;
            e[k] += add;
        }
    }
    e.swap_remove(m)
}

/// `N(T_r(n), K_m)`.
pub fn turan_clique_count(n: usize, r: usize, m: usize) -> BigCount {
    elementary_symmetric(&turan_parts(n, r), m)
}

/// `N(T_r(n), K_m) - N(T_r(n-1), K_m)`, the minimum number of `m`-cliques
/// through a vertex of `T_r(n)`.
pub fn turan_min_clique_degree(n: usize, r: usize, m: usize) -> Result<BigCount> {
    if m < 1 || r < m || n < r + 1 {
        return Err(Error::param(format!("need n >= r+1 >= m+1 >= 2, got n={n} r={r} m={m}")));
    }
    Ok(turan_clique_count(n, r, m) - turan_clique_count(n - 1, r, m))
}

/// Unique Eckhoff split of `e` edges for clique number `w`; the first
/// feasible `n1` scanning upward.
pub fn eckhoff_decompose(e: &BigCount, w: usize) -> Result<EckhoffSplit> {
    if w < 2 {
        return Err(Error::param(format!("clique number must be at least 2, got {w}")));
    }
    let mut n1 = 0usize;
    let mut base = BigUint::zero();
    loop {
        if base > *e {
            return Err(Error::Internal(format!("no Eckhoff split for e={e}, w={w}")));
        }
        // n2 < (w-1) n1 / w  <=>  w n2 < (w-1) n1
        let n2 = e - &base;
        if &n2 * w < BigUint::from((w - 1) * n1) {
            let n2 = n2.to_usize().expect("n2 < n1");
            return Ok(EckhoffSplit { n1, n2 });
        }
        base += n1 - n1 / w;
        n1 += 1;
    }
}

/// `N(T_w(n1), K_m) + N(T_{w-1}(n2), K_{m-1})`.
pub fn eckhoff_bound(e: &BigCount, w: usize, m: usize) -> Result<BigCount> {
    if m < 2 || w < m {
        return Err(Error::param(format!("need w >= m >= 2, got w={w} m={m}")));
    }
    let split = eckhoff_decompose(e, w)?;
    Ok(turan_clique_count(split.n1, w, m) + turan_clique_count(split.n2, w - 1, m - 1))
}

fn check_len(x: &[usize], p: &Params) -> Result<()> {
    if x.len() != p.r {
        return Err(Error::param(format!("composition has {} parts but r = {}", x.len(), p.r)));
    }
    Ok(())
}

/// `g(x) = sum_i C(x_i, t) prod_{j != i} C(x_j, s)`.
pub fn g_value(x: &[usize], p: &Params) -> Result<BigCount> {
    check_len(x, p)?;
    let mut total = BigUint::zero();
    for i in 0..x.len() {
        let mut term = binom(x[i], p.t);
        for (j, &xj) in x.iter().enumerate() {
            if j != i && !term.is_zero() {
                term *= binom(xj, p.s);
            }
        }
        total += term;
    }
    Ok(total)
}

/// `N(K_x, K^{(r)}_{s,t})`: `g(x)` when `s < t`, `g(x) / r` when `s = t`.
pub fn multipartite_pattern_count(x: &[usize], p: &Params) -> Result<BigCount> {
    let g = g_value(x, p)?;
    if p.s != p.t {
        return Ok(g);
    }
    let (quot, rem) = g.div_rem(&BigUint::from(p.r));
    if !rem.is_zero() {
        return Err(Error::Internal(format!("g = {g} not divisible by r = {}", p.r)));
    }
    Ok(quot)
}

/// `N(T_r(n), K^{(r)}_{s,t})`.
pub fn turan_kst_count(n: usize, p: &Params) -> BigCount {
    multipartite_pattern_count(&turan_parts(n, p.r), p).expect("turan_parts has r parts")
}

/// `F_{r,s,t}(a, n)`: copies of `K^{(r)}_{s,t}` in `G^r_{a,n}` through a fixed
/// vertex of the large part.
pub fn f_value(p: &Params, a: usize, n: usize) -> Result<BigCount> {
    if p.r < 2 || n == 0 || a > n - 1 {
        return Err(Error::param(format!("need r >= 2 and 0 <= a <= n-1, got r={} a={a} n={n}", p.r)));
    }
    let rest = n - 1 - a;
    let inner = p.with_r(p.r - 1);
    let inner_ss = Params { t: p.s, ..inner };
    let bracket = binom(rest, p.s - 1) * turan_kst_count(a, &inner)
        + binom(rest, p.t - 1) * turan_kst_count(a, &inner_ss);
    if p.s != p.t {
        return Ok(bracket);
    }
    let (half, rem) = bracket.div_rem(&BigUint::from(2u32));
    if !rem.is_zero() {
        return Err(Error::Internal(format!("odd bracket {bracket} for s = t")));
    }
    Ok(half)
}

/// The Turán increment `N(T_r(n)) - N(T_r(n-1))` equals `F(floor((r-1)n/r), n)`.
pub fn check_turan_increment(p: &Params, n: usize) -> Result<bool> {
    if p.r < 2 || n < p.r {
        return Err(Error::param(format!("need n >= r >= 2, got n={n} r={}", p.r)));
    }
    let lhs = turan_kst_count(n, p) - turan_kst_count(n - 1, p);
    let rhs = f_value(p, (p.r - 1) * n / p.r, n)?;
    Ok(lhs == rhs)
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// Leading constant `c` in `N(T_r(n), K^{(r)}_{s,t}) ~ c (n/r)^{(r-1)s+t}`.
pub fn turan_kst_constant(p: &Params) -> ExactRational {
    let den = factorial(p.s).pow(p.r as u32 - 1) * factorial(p.t);
    BigRational::new(BigInt::from(p.lambda_tilde(p.r + 1)), BigInt::from(den))
}

/// Leading constant `c` in `F(floor((r-1)n/r), n) ~ c (n/r)^{(r-1)s+t-1}`.
pub fn f_constant(p: &Params) -> ExactRational {
    let den = factorial(p.s).pow(p.r as u32 - 1) * factorial(p.t);
    let num = p.s * p.lambda_tilde(p.r) + p.t;
    p.lambda() * BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `value / (c (n/r)^k)` as a float, computed exactly before rounding.
fn scaled_ratio(value: BigCount, c: ExactRational, n: usize, r: usize, k: usize) -> f64 {
    let scale = c * BigRational::new(BigInt::from(n).pow(k as u32), BigInt::from(r).pow(k as u32));
    (BigRational::from_integer(value.into()) / scale).to_f64().unwrap_or(f64::NAN)
}

/// `N(T_r(n), K^{(r)}_{s,t})` over its leading asymptotic term.
pub fn turan_kst_ratio(n: usize, p: &Params) -> f64 {
    scaled_ratio(turan_kst_count(n, p), turan_kst_constant(p), n, p.r, p.order())
}

/// `F(floor((r-1)n/r), n)` over its leading asymptotic term.
pub fn f_ratio(n: usize, p: &Params) -> Result<f64> {
    let f = f_value(p, (p.r - 1) * n / p.r, n)?;
    Ok(scaled_ratio(f, f_constant(p), n, p.r, p.order() - 1))
}
