//! Analytic layer for `K^{(r)}_{s,t}`: threshold classification, the
//! increment polynomial `H(z)`, `f(z)`, `H(x, alpha)`, the log-count `F(x)` and
//! its curvature at `1/r`, the stability integral, and exact identities.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::closed_form::{binom, f_value, g_value, multipartite_pattern_count, turan_kst_count, Params};
use crate::error::{Error, Result};
use crate::ExactRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThresholdCase {
    /// `q^2 - q < 2s`: the Turán graph is the unique extremal graph.
    CaseA,
    /// `q^2 - q = 2s`.
    Boundary,
    /// `q^2 - q > rs`: some unbalanced multipartite graph does better.
    CaseC,
    /// `2s < q^2 - q <= rs`, only possible for `r >= 3`.
    Undetermined,
}

impl ThresholdCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            ThresholdCase::CaseA => "CaseA",
            ThresholdCase::Boundary => "Boundary",
            ThresholdCase::CaseC => "CaseC",
            ThresholdCase::Undetermined => "Undetermined",
        }
    }
}

/// A floating-point value with an optional labelled breakdown summing to it.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticEval {
    pub value: f64,
    pub components: Vec<(&'static str, f64)>,
}

impl AnalyticEval {
    fn from_components(components: Vec<(&'static str, f64)>) -> Self {
        AnalyticEval { value: components.iter().map(|c| c.1).sum(), components }
    }

    fn scalar(value: f64) -> Self {
        AnalyticEval { value, components: Vec::new() }
    }
}

fn need_r2(p: &Params) -> Result<()> {
    if p.r < 2 {
        return Err(Error::param(format!("need r >= 2, got {}", p.r)));
    }
    Ok(())
}

/// Integer-only classification; the square-root thresholds reduce to
/// comparing `q^2 - q` with `2s` and `rs`.
pub fn classify(p: &Params) -> Result<ThresholdCase> {
    need_r2(p)?;
    let q = p.q() as u128;
    let lhs = q * q - q;
    let (two_s, rs) = (2 * p.s as u128, (p.r * p.s) as u128);
    Ok(if lhs < two_s {
        ThresholdCase::CaseA
    } else if lhs == two_s {
        ThresholdCase::Boundary
    } else if lhs > rs {
        ThresholdCase::CaseC
    } else {
        ThresholdCase::Undetermined
    })
}

/// Integer `(s, t)` on the boundary with `2 <= q <= max_q`: `s = q(q-1)/2`, `t = s + q`.
pub fn boundary_pairs(max_q: usize) -> Result<Vec<(usize, usize)>> {
    if max_q < 2 {
        return Err(Error::param(format!("max_q must be at least 2, got {max_q}")));
    }
    Ok((2..=max_q).map(|q| (q * (q - 1) / 2, q * (q - 1) / 2 + q)).collect())
}

fn rat(n: i64, d: i64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rat_pow(x: &ExactRational, e: i32) -> ExactRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Coefficients of `H(z) = c1 z - c0 + c3 z^{q+1} - c2 z^q`.
fn h_coefficients(p: &Params) -> [ExactRational; 4] {
    let (r, s, t, q) = (p.r as i64, p.s as i64, p.t as i64, p.q() as i32);
    let rm1 = rat(r - 1, 1);
    let linear = p.lambda() * rat(s * (s * p.lambda_tilde(p.r - 1) as i64 + t), 1);
    let constant = rat((s * s - s) * p.lambda_tilde(p.r) as i64, r - 1);
    let top = rat(s * t, 1) * rat_pow(&rm1, q);
    let next = rat(t * t - t, 1) * rat_pow(&rm1, q - 1);
    [linear, constant, top, next]
}

/// `H(z)` evaluated exactly.
pub fn h_poly_exact(z: &ExactRational, p: &Params) -> Result<ExactRational> {
    need_r2(p)?;
    let [linear, constant, top, next] = h_coefficients(p);
    let q = p.q() as i32;
    Ok(linear * z - constant + top * rat_pow(z, q + 1) - next * rat_pow(z, q))
}

/// `H(z)` in floating point with its four terms as components.
pub fn h_poly(z: f64, p: &Params) -> Result<AnalyticEval> {
    need_r2(p)?;
    let [linear, constant, top, next] = h_coefficients(p).map(|c| c.to_f64().unwrap_or(f64::NAN));
    let q = p.q() as i32;
    Ok(AnalyticEval::from_components(vec![
        ("linear", linear * z),
        ("constant", -constant),
        ("z^(q+1)", top * z.powi(q + 1)),
        ("z^q", -next * z.powi(q)),
    ]))
}

fn check_a(p: &Params, a: usize, n: usize) -> Result<()> {
    need_r2(p)?;
    if a < 1 || a + 2 > n {
        return Err(Error::param(format!("need 1 <= a <= n-2, got a={a} n={n}")));
    }
    Ok(())
}

/// `Delta(a) = (F(a+1) - F(a)) / lambda`, exact.
pub fn delta_f(p: &Params, a: usize, n: usize) -> Result<ExactRational> {
    check_a(p, a, n)?;
    let hi = BigInt::from(f_value(p, a + 1, n)?);
    let lo = BigInt::from(f_value(p, a, n)?);
    Ok(BigRational::from_integer(hi - lo) / p.lambda())
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// `1/C = (s!)^{r-1} t! (r-1)^{(r-2)s+t-1}`.
fn inverse_c(p: &Params) -> BigUint {
    let e = (p.r - 2) * p.s + p.t - 1;
    factorial(p.s).pow(p.r as u32 - 1) * factorial(p.t) * BigUint::from(p.r - 1).pow(e as u32)
}

/// `M(a) = C a^{(r-2)s+t} (n-a)^{s-2}`, evaluated in the log domain.
pub fn m_value(p: &Params, a: usize, n: usize) -> Result<f64> {
    check_a(p, a, n)?;
    let log_inv_c = log_big(&inverse_c(p));
    let e1 = ((p.r - 2) * p.s + p.t) as f64;
    let e2 = p.s as f64 - 2.0;
    Ok((e1 * (a as f64).ln() + e2 * ((n - a) as f64).ln() - log_inv_c).exp())
}

fn log_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `|Delta(a)/M(a) - H((n-a)/a)|`; the quotient is formed exactly.
pub fn ratio_check(p: &Params, a: usize, n: usize) -> Result<f64> {
    let delta = delta_f(p, a, n)?;
    let e1 = ((p.r - 2) * p.s + p.t) as u32;
    let mut num = delta * BigRational::from_integer(inverse_c(p).into());
    num /= BigRational::from_integer(BigInt::from(a).pow(e1));
    num *= rat_pow(&BigRational::from_integer(BigInt::from(n - a)), 2 - p.s as i32);
    let h = h_poly((n - a) as f64 / a as f64, p)?.value;
    Ok((num.to_f64().unwrap_or(f64::NAN) - h).abs())
}

/// `f(z) = (sz - q)(1+z)^q + (t + (r-2)s) z + q`.
pub fn f_poly(z: f64, p: &Params) -> Result<AnalyticEval> {
    need_r2(p)?;
    let (s, t, q) = (p.s as f64, p.t as f64, p.q() as f64);
    let r2s = ((p.r - 2) * p.s) as f64;
    Ok(AnalyticEval::scalar((s * z - q) * (1.0 + z).powi(p.q() as i32) + (t + r2s) * z + q))
}

/// `f'(0) = sr + q - q^2`.
pub fn f_prime0(p: &Params) -> i64 {
    let q = p.q() as i64;
    (p.s * p.r) as i64 + q - q * q
}

/// Falling factorial `(x)_k`.
pub fn falling(x: f64, k: usize) -> f64 {
    (0..k).map(|i| x - i as f64).product()
}

/// `H(x, alpha) = H1 + H2 + H3`.
pub fn h_xalpha(x: f64, alpha: f64, p: &Params) -> Result<AnalyticEval> {
    need_r2(p)?;
    let q = p.q();
    if x.is_nan() || x <= q as f64 || alpha.is_nan() || alpha < 0.0 {
        return Err(Error::Domain(format!("need x > q = {q} and alpha >= 0, got x={x} alpha={alpha}")));
    }
    let (s, t, qf) = (p.s as f64, p.t as f64, q as f64);
    let xq = x.powi(q as i32);
    let shrink = 1.0 + (1.0 - qf) / x;
    let h1 = (s * alpha - qf - (qf * s + t) / x) * shrink * falling(x + alpha * x, q) / xq;
    let h2 = (t * alpha + qf + (qf * s - s) / x) * (1.0 + 1.0 / x) * falling(x, q) / xq;
    let h3 = ((p.r - 2) as f64) * s * (alpha - 1.0 / x) * shrink * falling(x, q) / xq;
    Ok(AnalyticEval::from_components(vec![("H1", h1), ("H2", h2), ("H3", h3)]))
}

/// Log of the limiting normalised count of `K^{(r)}_{s,t}` in the complete
/// `r`-partite graph with `r - 1` parts of size `xn`.
pub fn case_c_log_f(x: f64, p: &Params) -> Result<f64> {
    need_r2(p)?;
    let r = p.r as f64;
    let q = p.q() as i32;
    let upper = 1.0 / (r - 1.0);
    if !(x > 0.0 && x < upper) {
        return Err(Error::Domain(format!("need 0 < x < 1/(r-1) = {upper}, got {x}")));
    }
    let first = x.powi(p.r as i32 - 1) - (r - 1.0) * x.powi(p.r as i32);
    let second = (r - 1.0) * x.powi(q) + (1.0 - (r - 1.0) * x).powi(q);
    if first <= 0.0 || second <= 0.0 {
        return Err(Error::Domain(format!("log argument not positive at x = {x}")));
    }
    Ok(p.s as f64 * first.ln() + second.ln())
}

/// `F''(1/r) = r^2 (r-1) [q^2 - t - s(r-1)]`.
pub fn case_c_fpp_closed(p: &Params) -> i64 {
    let (r, s, t, q) = (p.r as i64, p.s as i64, p.t as i64, p.q() as i64);
    r * r * (r - 1) * (q * q - t - s * (r - 1))
}

/// Central second difference at `1/r` with step `1e-4/r` and one Richardson level.
pub fn case_c_fpp_numeric(p: &Params) -> Result<f64> {
    need_r2(p)?;
    let x = 1.0 / p.r as f64;
    let h = 1e-4 / p.r as f64;
    let second = |h: f64| -> Result<f64> {
        Ok((case_c_log_f(x + h, p)? - 2.0 * case_c_log_f(x, p)? + case_c_log_f(x - h, p)?) / (h * h))
    };
    let coarse = second(h)?;
    let fine = second(h / 2.0)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Subdivision cap for adaptive quadrature.
pub const QUADRATURE_CAP: usize = 1_000_000;

/// `int_{1/(r-1)}^{1/beta - 1} z^{s-2} H(z) / (1+z)^{(r-1)s+t} dz`.
pub fn stability_integral(beta: f64, p: &Params) -> Result<f64> {
    need_r2(p)?;
    let top = (p.r - 1) as f64 / p.r as f64;
    if !(beta > 0.0 && beta <= top) {
        return Err(Error::param(format!("need 0 < beta <= (r-1)/r = {top}, got {beta}")));
    }
    let lo = 1.0 / (p.r - 1) as f64;
    let hi = 1.0 / beta - 1.0;
    if hi <= lo {
        return Ok(0.0);
    }
    let exp = p.order() as i32;
    let integrand = |z: f64| {
        let h = h_poly(z, p).map(|e| e.value).unwrap_or(f64::NAN);
        z.powi(p.s as i32 - 2) * h / (1.0 + z).powi(exp)
    };
    adaptive_simpson(integrand, lo, hi, 1e-10, QUADRATURE_CAP)
}

/// Adaptive Simpson quadrature to absolute tolerance `tol`.
pub fn adaptive_simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, cap: usize) -> Result<f64> {
    struct Panel {
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    }
    let simpson = |a: f64, b: f64, fa: f64, fm: f64, fb: f64| (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let (fa, fm, fb) = (f(a), f((a + b) / 2.0), f(b));
    let mut stack = vec![Panel { a, b, fa, fm, fb, whole: simpson(a, b, fa, fm, fb), tol, depth: 0 }];
    let mut total = 0.0;
    let mut panels = 0usize;
    while let Some(pn) = stack.pop() {
        panels += 1;
        if panels > cap {
            return Err(Error::Domain(format!("quadrature exceeded {cap} subdivisions")));
        }
        let m = (pn.a + pn.b) / 2.0;
        let (lm, rm) = ((pn.a + m) / 2.0, (m + pn.b) / 2.0);
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(pn.a, m, pn.fa, flm, pn.fm);
        let right = simpson(m, pn.b, pn.fm, frm, pn.fb);
        let err = left + right - pn.whole;
        if !err.is_finite() {
            return Err(Error::Domain("integrand is not finite".into()));
        }
        if err.abs() <= 15.0 * pn.tol || pn.depth >= 50 {
            total += left + right + err / 15.0;
        } else {
            let tol = pn.tol / 2.0;
            let depth = pn.depth + 1;
            stack.push(Panel { a: m, b: pn.b, fa: pn.fm, fm: frm, fb: pn.fb, whole: right, tol, depth });
            stack.push(Panel { a: pn.a, b: m, fa: pn.fa, fm: flm, fb: pn.fm, whole: left, tol, depth });
        }
    }
    Ok(total)
}

fn falling_exact(x: i64, k: usize) -> ExactRational {
    BigRational::from_integer((0..k as i64).map(|i| BigInt::from(x - i)).product())
}

/// Exact check of the closed form for `h(a) * (g(*a) - g(a))`, where
/// `*a = (a_1 + 1, a_2, ..., a_{r-1}, a_r - 1)` and
/// `h(a) = a_r t! / (s! prod C(a_i, s))`.
pub fn shift_identity_check(a: &[usize], p: &Params) -> Result<bool> {
    need_r2(p)?;
    if a.len() != p.r || a.windows(2).any(|w| w[0] > w[1]) || a[0] < p.t || a[p.r - 1] < 1 {
        return Err(Error::param(format!("need r nondecreasing parts with a_1 >= t = {}, got {a:?}", p.t)));
    }
    let (s, t, q) = (p.s as i64, p.t as i64, p.q());
    let (a1, ar) = (a[0] as i64, a[p.r - 1] as i64);

    let mut shifted = a.to_vec();
    shifted[0] += 1;
    shifted[p.r - 1] -= 1;
    let dg = BigInt::from(g_value(&shifted, p)?) - BigInt::from(g_value(a, p)?);
    let prod: BigUint = a.iter().map(|&x| binom(x, p.s)).product();
    let h = BigRational::new(
        BigInt::from(ar) * BigInt::from(factorial(p.t)),
        BigInt::from(factorial(p.s) * prod),
    );
    let lhs = h * BigRational::from_integer(dg);

    let sum_mid: ExactRational =
        a[1..p.r - 1].iter().map(|&x| falling_exact(x as i64 - s, q)).fold(BigRational::zero(), |acc, v| acc + v);
    let rhs = rat(s * ar - t * (a1 + 1), a1 + 1 - s) * falling_exact(ar - s, q)
        + rat(t * ar - s * (a1 + 1), a1 + 1 - t) * falling_exact(a1 - s, q)
        + rat(s * (ar - a1 - 1), a1 + 1 - s) * sum_mid;
    Ok(lhs == rhs)
}

/// `N(K_{n/2-x, n/2+x}, K_{s,t}) - N(T_2(n), K_{s,t})`, exact and signed.
pub fn balanced_gain_r2(n: usize, x: usize, p: &Params) -> Result<BigInt> {
    if p.r != 2 || !n.is_multiple_of(2) {
        return Err(Error::param(format!("need r = 2 and even n, got r={} n={n}", p.r)));
    }
    if x + p.s > n / 2 {
        return Err(Error::param(format!("need 0 <= x <= n/2 - s, got x={x}")));
    }
    let off = multipartite_pattern_count(&[n / 2 - x, n / 2 + x], p)?;
    Ok(BigInt::from(off) - BigInt::from(turan_kst_count(n, p)))
}

/// Sign of an exact rational as -1, 0 or 1.
pub fn sign(x: &ExactRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
