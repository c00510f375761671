//! The BC-class master theorem and the BC-class sum of `h^β`, checked
//! against right-hand sides built by a small standalone series oracle.
//!
//! The registry records keep the displayed formulas, which do not hold:
//! the master theorem needs the factor `(t-1)/2` instead of `t-1`, and the
//! `h^β` sum needs `(t-1) t^β Σ k^{β+1} y^k/(1-y^k)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use hookpart::enumerate::{enumerate_up_to, PartitionClass};
use hookpart::identities::verify::sides;
use hookpart::identities::{lookup, MasterTables, Params};
use hookpart::{Exec, Partition, Rational, Sign};

type S = Vec<Rational>;

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn rpow(base: i64, e: i64) -> Rational {
    let b = r(base);
    if e >= 0 {
        num_traits::pow(b, e as usize)
    } else {
        num_traits::pow(b.recip(), e.unsigned_abs() as usize)
    }
}

fn zero(n: usize) -> S {
    vec![Rational::zero(); n + 1]
}

fn mul(a: &S, b: &S) -> S {
    let n = a.len() - 1;
    let mut c = zero(n);
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            c[i + j] += ai * bj;
        }
    }
    c
}

/// Inverse of a series with constant term 1.
fn inv(a: &S) -> S {
    let n = a.len() - 1;
    let mut b = zero(n);
    b[0] = Rational::one();
    for k in 1..=n {
        let mut s = Rational::zero();
        for i in 1..=k {
            s += &a[i] * &b[k - i];
        }
        b[k] = -s;
    }
    b
}

fn powi(a: &S, m: i64) -> S {
    let n = a.len() - 1;
    let base = if m < 0 { inv(a) } else { a.clone() };
    let mut out = zero(n);
    out[0] = Rational::one();
    for _ in 0..m.unsigned_abs() {
        out = mul(&out, &base);
    }
    out
}

/// `∏_{k≥0} (1 + s q^{a + k·step})` truncated at `n`.
fn shifted_product(s: i64, a: usize, step: usize, n: usize) -> S {
    let mut out = zero(n);
    out[0] = Rational::one();
    let mut e = a;
    while e <= n {
        let mut f = zero(n);
        f[0] = Rational::one();
        f[e] = r(s);
        out = mul(&out, &f);
        e += step;
    }
    out
}

/// `(q^{2t}; q^{2t})^{(t-1)/2} (-q; q^2) / (-q^t; q^{2t})`.
fn odd_prefactor(t: usize, n: usize) -> S {
    let e = powi(&shifted_product(-1, 2 * t, 2 * t, n), ((t - 1) / 2) as i64);
    let a = shifted_product(1, 1, 2, n);
    let b = inv(&shifted_product(1, t, 2 * t, n));
    mul(&mul(&e, &a), &b)
}

/// `Σ_k F_k x^{2k} q^{2tk} · P(q)` as a map `(q power, x power) -> value`.
fn in_y_times(
    f: &S,
    p: &S,
    t: usize,
    n: usize,
    scale: &Rational,
) -> BTreeMap<(usize, u32), Rational> {
    let mut out = BTreeMap::new();
    for (k, fk) in f.iter().enumerate() {
        for (j, pj) in p.iter().enumerate() {
            let q = 2 * t * k + j;
            if q > n {
                break;
            }
            let v = fk * pj * scale;
            if !v.is_zero() {
                *out.entry((q, 2 * k as u32)).or_insert_with(Rational::zero) += v;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn bc_members(t: usize, n: usize) -> Vec<Partition> {
    enumerate_up_to(n, PartitionClass::SelfConjugate)
        .unwrap()
        .into_iter()
        .filter(|l| l.diagonal_hooks().iter().all(|h| h % t != 0))
        .collect()
}

/// `Σ_λ q^{|λ|} x^{|H_t|} w(λ)` over the BC class.
fn bc_sum(
    t: usize,
    n: usize,
    w: impl Fn(&[(usize, i64)]) -> Rational,
) -> BTreeMap<(usize, u32), Rational> {
    let mut out = BTreeMap::new();
    for lam in bc_members(t, n) {
        let boxes: Vec<(usize, i64)> = lam
            .cell_hooks()
            .into_iter()
            .filter(|(_, h)| h % t == 0)
            .map(|(u, h)| {
                (
                    h,
                    if lam.epsilon(u).unwrap() == Sign::Plus {
                        1
                    } else {
                        -1
                    },
                )
            })
            .collect();
        let v = w(&boxes);
        if !v.is_zero() {
            *out.entry((lam.size(), boxes.len() as u32))
                .or_insert_with(Rational::zero) += v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn master_check(t: usize, n: usize, seed: u64) {
    let tables = MasterTables::random(t, n, seed, true);
    let (r1, r2) = (&tables.rho1, &tables.rho2);

    let lhs = bc_sum(t, n, |boxes| {
        let prod = boxes
            .iter()
            .fold(Rational::one(), |a, &(h, e)| a * &r1[&(h, e)]);
        let sum = boxes
            .iter()
            .fold(Rational::zero(), |a, &(h, e)| a + &r2[&(h, e)]);
        prod * sum
    });

    let m = n / (2 * t);
    let (mut f, mut g) = (zero(m), zero(m));
    for nu in enumerate_up_to(m, PartitionClass::All).unwrap() {
        let hooks: Vec<usize> = nu.cell_hooks().into_iter().map(|(_, h)| t * h).collect();
        let prod = hooks
            .iter()
            .fold(Rational::one(), |a, h| a * &r1[&(*h, 1)] * &r1[&(*h, -1)]);
        let sum = hooks
            .iter()
            .fold(Rational::zero(), |a, h| a + &r2[&(*h, 1)] + &r2[&(*h, -1)]);
        g[nu.size()] += &prod * sum;
        f[nu.size()] += prod;
    }
    let fg = mul(&powi(&f, ((t - 3) / 2) as i64), &g);
    let rhs = in_y_times(&fg, &odd_prefactor(t, n), t, n, &(r(t as i64 - 1) / r(2)));
    assert_eq!(lhs, rhs, "t = {t}, seed = {seed}");
}

#[test]
fn master_theorem_with_half_factor() {
    for (t, n) in [(3, 15), (5, 20), (7, 28)] {
        for seed in 1..=3 {
            master_check(t, n, seed);
        }
    }
}

#[test]
fn registry_master_record_is_off_by_two() {
    let rec = lookup("bc-master").unwrap();
    for (t, n) in [(3, 15), (5, 20)] {
        for seed in 1..=3 {
            let p = Params {
                t,
                n,
                seed,
                ..rec.default_params()
            };
            let (lhs, rhs) = sides(&rec, &p, Exec::Sequential).unwrap();
            assert!(!lhs.is_zero());
            assert_eq!(lhs.scale_rational(&r(2)), rhs, "t = {t}, seed = {seed}");
        }
    }
}

fn power_sum_check(t: usize, n: usize, beta: i64) {
    let lhs = bc_sum(t, n, |boxes| {
        boxes
            .iter()
            .fold(Rational::zero(), |a, &(h, _)| a + rpow(h as i64, beta))
    });

    let m = n / (2 * t);
    // Σ_k k^{β+1} y^k / (1 - y^k)
    let mut lambert = zero(m);
    for k in 1..=m {
        let kp = rpow(k as i64, beta + 1);
        let mut j = k;
        while j <= m {
            lambert[j] += &kp;
            j += k;
        }
    }
    let euler = shifted_product(-1, 1, 1, m);
    let fy = mul(&lambert, &powi(&euler, -(((t - 1) / 2) as i64)));
    let rhs = in_y_times(
        &fy,
        &odd_prefactor(t, n),
        t,
        n,
        &(r(t as i64 - 1) * rpow(t as i64, beta)),
    );
    assert_eq!(lhs, rhs, "t = {t}, beta = {beta}");
}

#[test]
fn power_sum_with_plain_lambert_series() {
    for (t, n) in [(3, 15), (5, 20), (7, 28)] {
        for beta in -2..=3 {
            power_sum_check(t, n, beta);
        }
    }
}
