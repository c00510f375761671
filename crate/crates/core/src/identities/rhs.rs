//! Building blocks for right-hand sides.
//!
//! Series in `Y = x^2 q^{2t}` (or `X = x q^t`) are built at the reduced
//! order `⌊N/(2t)⌋` (or `⌊N/t⌋`) in a plain variable, then substituted.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::enumerate::{enumerate_up_to, PartitionClass};
use crate::error::Result;
use crate::series::{
    euler, int, pochhammer_inf, pochhammer_inf_inverse, Monomial, QSeries, QTerm, Rational,
    RingElement,
};

/// `(q^s; q^s)_∞`.
pub fn euler_step(s: usize, n: usize, cap: u32) -> QSeries {
    pochhammer_inf(&QTerm::q(s), s, n, cap).expect("positive q-power")
}

/// `(-bq; q^4)_∞ (-q^3/b; q^4)_∞`.
pub fn bg_product(n: usize, cap: u32) -> Result<QSeries> {
    let a = pochhammer_inf(&QTerm::new(int(-1), Monomial::b(1), 1), 4, n, cap)?;
    let c = pochhammer_inf(&QTerm::new(int(-1), Monomial::b(-1), 3), 4, n, cap)?;
    a.try_mul(&c)
}

/// `(q^{2t}; q^{2t})_∞^{t/2} (-bq; q^4)_∞ (-q^3/b; q^4)_∞`, the generating
/// function of self-conjugate `t`-cores by BG-rank (even `t`).
pub fn p_even(t: usize, n: usize, cap: u32) -> Result<QSeries> {
    let e = euler_step(2 * t, n, cap).powi((t / 2) as i64)?;
    e.try_mul(&bg_product(n, cap)?)
}

/// `(-q; q^2)_∞ / (-q^t; q^{2t})_∞`, the generating function of the BC class.
pub fn bc_gen(t: usize, n: usize, cap: u32) -> Result<QSeries> {
    let a = pochhammer_inf(&QTerm::new(int(-1), Monomial::ONE, 1), 2, n, cap)?;
    let b = pochhammer_inf_inverse(&QTerm::new(int(-1), Monomial::ONE, t), 2 * t, n, cap)?;
    a.try_mul(&b)
}

/// `(q^{2t}; q^{2t})_∞^{(t-1)/2} (-q; q^2)_∞ / (-q^t; q^{2t})_∞` (odd `t`).
pub fn p_odd(t: usize, n: usize, cap: u32) -> Result<QSeries> {
    let e = euler_step(2 * t, n, cap).powi(((t - 1) / 2) as i64)?;
    e.try_mul(&bc_gen(t, n, cap)?)
}

/// `(q^{m}; q^{m})_∞^{m} / (q; q)_∞`, the generating function of `m`-cores.
pub fn core_gen(m: usize, n: usize, cap: u32) -> Result<QSeries> {
    let e = euler_step(m, n, cap).powi(m as i64)?;
    e.try_mul(&euler(n, cap).inverse()?)
}

/// Builds `f(y)` at order `⌊n/(2t)⌋` and substitutes `y = x^2 q^{2t}`.
pub fn in_y(t: usize, n: usize, build: impl FnOnce(usize) -> Result<QSeries>) -> Result<QSeries> {
    let m = n / (2 * t);
    build(m)?.substitute(&Rational::one(), Monomial::x(2), 2 * t, n)
}

/// Builds `f(y)` at order `⌊n/t⌋` and substitutes `y = x q^t`.
pub fn in_xqt(t: usize, n: usize, build: impl FnOnce(usize) -> Result<QSeries>) -> Result<QSeries> {
    let m = n / t;
    build(m)?.substitute(&Rational::one(), Monomial::x(1), t, n)
}

/// `Σ_k c_k y^k` truncated at order `m`.
pub fn poly_ring(coeffs: &[RingElement], m: usize, cap: u32) -> QSeries {
    let mut s = QSeries::zero(m, cap);
    for (k, c) in coeffs.iter().enumerate().take(m + 1) {
        s.coeff_mut(k).add_assign(c);
    }
    s
}

/// `Σ_{k≥1} c(k) y^k / (1 - y^k)`: coefficient of `y^m` is `Σ_{k | m} c(k)`.
pub fn lambert(m: usize, cap: u32, c: impl Fn(usize) -> Rational) -> QSeries {
    let mut s = QSeries::zero(m, cap);
    for k in 1..=m {
        let ck = c(k);
        if ck.is_zero() {
            continue;
        }
        let mut j = k;
        while j <= m {
            s.coeff_mut(j).add_term(Monomial::ONE, ck.clone());
            j += k;
        }
    }
    s
}

/// `α` as a ring element in `z`: `c0 + c1 z + c2 z^2`.
pub fn z_poly(c: &[Rational], cap: u32) -> RingElement {
    RingElement::from_terms(
        c.iter()
            .enumerate()
            .map(|(i, v)| (Monomial::z(i as u32), v.clone())),
        cap,
    )
}

/// Defining sums `f(y) = Σ_ν y^{|ν|} ∏ φ(t h)` and
/// `g(y) = Σ_ν y^{|ν|} ∏ φ(t h) Σ ψ(t h)` over all ν with `|ν| ≤ m`.
pub fn nu_sums(
    t: usize,
    m: usize,
    cap: u32,
    phi: impl Fn(usize) -> Result<RingElement>,
    psi: impl Fn(usize) -> Result<RingElement>,
) -> Result<(QSeries, QSeries)> {
    let mut f = QSeries::zero(m, cap);
    let mut g = QSeries::zero(m, cap);
    for nu in enumerate_up_to(m, PartitionClass::All)? {
        let mut prod = RingElement::one(cap);
        let mut sum = RingElement::zero(cap);
        for (_, h) in nu.cell_hooks() {
            prod = &prod * &phi(t * h)?;
            sum.add_assign(&psi(t * h)?);
        }
        let size = nu.size();
        g.coeff_mut(size).add_assign(&(&prod * &sum));
        f.coeff_mut(size).add_assign(&prod);
    }
    Ok((f, g))
}

/// `Σ_{k=lo}^{hi} c_k (y/t^2)^{k+1}` at order `m`.
pub fn moment_poly(
    t: usize,
    m: usize,
    cap: u32,
    lo: usize,
    hi: usize,
    c: impl Fn(usize) -> Result<Rational>,
) -> Result<QSeries> {
    let mut s = QSeries::zero(m, cap);
    let t2 = Rational::from_integer(BigInt::from(t * t));
    for k in lo..=hi {
        if k + 1 > m {
            break;
        }
        let v = c(k)? / num_traits::pow(t2.clone(), k + 1);
        s.coeff_mut(k + 1).add_term(Monomial::ONE, v);
    }
    Ok(s)
}
