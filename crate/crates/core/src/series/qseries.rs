//! Power series in `q` truncated after `q^N`, with ring coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::{fmt_rational, int, Monomial, Rational, RingElement};
use crate::error::{Error, Result};
use crate::par::{self, Exec};

#[derive(Clone, Debug)]
pub struct QSeries {
    coeffs: Vec<RingElement>,
    z_cap: u32,
}

/// Equal iff the orders and all coefficients agree.
impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for QSeries {}

/// `c · m · q^k`, a single term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTerm {
    pub coeff: Rational,
    pub mono: Monomial,
    pub qpow: usize,
}

impl QTerm {
    pub fn new(coeff: Rational, mono: Monomial, qpow: usize) -> Self {
        QTerm { coeff, mono, qpow }
    }

    /// `q^k`.
    pub fn q(k: usize) -> Self {
        QTerm::new(Rational::one(), Monomial::ONE, k)
    }

    pub fn negated(mut self) -> Self {
        self.coeff = -self.coeff;
        self
    }
}

/// First index and monomial where two series differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub q_power: usize,
    pub monomial: Monomial,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl QSeries {
    pub fn zero(n: usize, z_cap: u32) -> Self {
        QSeries {
            coeffs: vec![RingElement::zero(z_cap); n + 1],
            z_cap,
        }
    }

    pub fn one(n: usize, z_cap: u32) -> Self {
        Self::constant(RingElement::one(z_cap), n)
    }

    pub fn constant(c: RingElement, n: usize) -> Self {
        let z_cap = c.z_cap();
        let mut s = Self::zero(n, z_cap);
        s.coeffs[0] = c;
        s
    }

    pub fn from_term(t: &QTerm, n: usize, z_cap: u32) -> Self {
        let mut s = Self::zero(n, z_cap);
        if t.qpow <= n {
            s.coeffs[t.qpow].add_term(t.mono, t.coeff.clone());
        }
        s
    }

    /// Builds a series from coefficients `q^0..q^N`.
    pub fn from_coeffs(coeffs: Vec<RingElement>, z_cap: u32) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Series(
                "a series needs at least the q^0 coefficient".into(),
            ));
        }
        let mut s = Self::zero(coeffs.len() - 1, z_cap);
        for (slot, c) in s.coeffs.iter_mut().zip(&coeffs) {
            slot.add_assign(c);
        }
        Ok(s)
    }

    /// Series with rational coefficients.
    pub fn from_rationals(coeffs: &[Rational], z_cap: u32) -> Result<Self> {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|c| RingElement::constant(c.clone(), z_cap))
                .collect(),
            z_cap,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn z_cap(&self) -> u32 {
        self.z_cap
    }

    pub fn coeff(&self, k: usize) -> &RingElement {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff_mut(&mut self, k: usize) -> &mut RingElement {
        &mut self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RingElement::is_zero)
    }

    fn check_order(&self, o: &QSeries) -> Result<()> {
        if self.order() != o.order() {
            return Err(Error::Series(format!(
                "truncation orders differ: {} vs {}",
                self.order(),
                o.order()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &QSeries) -> Result<QSeries> {
        self.check_order(o)?;
        Ok(QSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            z_cap: self.z_cap.min(o.z_cap),
        })
    }

    pub fn try_sub(&self, o: &QSeries) -> Result<QSeries> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &QSeries) -> Result<QSeries> {
        self.mul_with(o, Exec::default())
    }

    /// Cauchy product; `exec` chooses whether output coefficients are
    /// computed in parallel.
    pub fn mul_with(&self, o: &QSeries, exec: Exec) -> Result<QSeries> {
        self.check_order(o)?;
        let n = self.order();
        let z_cap = self.z_cap.min(o.z_cap);
        let coeffs = par::map_range(exec, n + 1, |k| {
            let mut c = RingElement::zero(z_cap);
            for i in 0..=k {
                let (a, b) = (&self.coeffs[i], &o.coeffs[k - i]);
                if !a.is_zero() && !b.is_zero() {
                    c.add_product(a, b);
                }
            }
            c
        });
        Ok(QSeries { coeffs, z_cap })
    }

    pub fn scale(&self, c: &RingElement) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            z_cap: self.z_cap.min(c.z_cap()),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
            z_cap: self.z_cap,
        }
    }

    /// Multiplies by a single term `c·m·q^k`.
    pub fn mul_term(&self, t: &QTerm) -> QSeries {
        let mut out = QSeries::zero(self.order(), self.z_cap);
        for (i, a) in self.coeffs.iter().enumerate() {
            if i + t.qpow > self.order() {
                break;
            }
            out.coeffs[i + t.qpow] = a.mul_term(&t.coeff, t.mono);
        }
        out
    }

    /// In place `self *= (1 + t)`.
    pub fn mul_binomial(&mut self, t: &QTerm) {
        if t.qpow == 0 {
            let c = RingElement::term(t.coeff.clone(), t.mono, self.z_cap);
            let one = RingElement::one(self.z_cap);
            let f = &one + &c;
            for a in self.coeffs.iter_mut() {
                *a = &*a * &f;
            }
            return;
        }
        let n = self.order();
        for m in (t.qpow..=n).rev() {
            let add = self.coeffs[m - t.qpow].mul_term(&t.coeff, t.mono);
            self.coeffs[m].add_assign(&add);
        }
    }

    /// In place `self /= (1 - t)` for `t` with positive q-power.
    pub fn div_one_minus(&mut self, t: &QTerm) -> Result<()> {
        if t.qpow == 0 {
            return Err(Error::Series(
                "1 - t with q-free t is not invertible here".into(),
            ));
        }
        for m in t.qpow..=self.order() {
            let add = self.coeffs[m - t.qpow].mul_term(&t.coeff, t.mono);
            self.coeffs[m].add_assign(&add);
        }
        Ok(())
    }

    pub fn exp(&self) -> Result<QSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp needs a zero constant term".into()));
        }
        let n = self.order();
        let mut g = vec![RingElement::one(self.z_cap)];
        // n g_n = Σ_{k=1}^{n} k f_k g_{n-k}
        for m in 1..=n {
            let mut acc = RingElement::zero(self.z_cap);
            for k in 1..=m {
                if self.coeffs[k].is_zero() || g[m - k].is_zero() {
                    continue;
                }
                acc.add_product(&self.coeffs[k].scale(&int(k as i64)), &g[m - k]);
            }
            g.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(m))));
        }
        Ok(QSeries {
            coeffs: g,
            z_cap: self.z_cap,
        })
    }

    pub fn log(&self) -> Result<QSeries> {
        if self.coeffs[0] != RingElement::one(self.z_cap) {
            return Err(Error::Series("log needs constant term 1".into()));
        }
        let n = self.order();
        let mut g = vec![RingElement::zero(self.z_cap)];
        // g_n = f_n - (1/n) Σ_{k=1}^{n-1} k g_k f_{n-k}
        for m in 1..=n {
            let mut acc = RingElement::zero(self.z_cap);
            for (k, gk) in g.iter().enumerate().take(m).skip(1) {
                if gk.is_zero() || self.coeffs[m - k].is_zero() {
                    continue;
                }
                acc.add_product(&gk.scale(&int(k as i64)), &self.coeffs[m - k]);
            }
            let mut gm = self.coeffs[m].clone();
            gm.add_assign(&acc.scale(&Rational::new(BigInt::from(-1), BigInt::from(m))));
            g.push(gm);
        }
        Ok(QSeries {
            coeffs: g,
            z_cap: self.z_cap,
        })
    }

    /// `f^α = exp(α log f)` for constant term 1 and α a polynomial in `z`.
    pub fn pow(&self, alpha: &RingElement) -> Result<QSeries> {
        if !alpha.is_z_polynomial() {
            return Err(Error::Series(format!(
                "exponent {alpha} must be a polynomial in z"
            )));
        }
        self.log()?.scale(alpha).exp()
    }

    pub fn pow_rational(&self, alpha: &Rational) -> Result<QSeries> {
        self.pow(&RingElement::constant(alpha.clone(), self.z_cap))
    }

    pub fn powi(&self, m: i64) -> Result<QSeries> {
        let base = if m < 0 { self.inverse()? } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = QSeries::one(self.order(), self.z_cap);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Inverse when the constant term is a unit `c·b^e`.
    pub fn inverse(&self) -> Result<QSeries> {
        let (m0, c0) = self.coeffs[0]
            .as_single_term()
            .filter(|(m, _)| m.x == 0 && m.z == 0)
            .ok_or_else(|| Error::Series("inverse needs a unit constant term".into()))?;
        let inv_c = c0.recip();
        let inv_m = Monomial::b(-m0.b);
        let g: Vec<RingElement> = self
            .coeffs
            .iter()
            .map(|a| a.mul_term(&inv_c, inv_m))
            .collect();
        let n = self.order();
        let mut h = vec![RingElement::one(self.z_cap)];
        for m in 1..=n {
            let mut acc = RingElement::zero(self.z_cap);
            for k in 1..=m {
                if !g[k].is_zero() && !h[m - k].is_zero() {
                    acc.add_product(&g[k], &h[m - k]);
                }
            }
            h.push(-&acc);
        }
        Ok(QSeries {
            coeffs: h.into_iter().map(|a| a.mul_term(&inv_c, inv_m)).collect(),
            z_cap: self.z_cap,
        })
    }

    /// Substitutes `q → c·m·q^step`, producing a series of order `n_out`.
    pub fn substitute(
        &self,
        c: &Rational,
        m: Monomial,
        step: usize,
        n_out: usize,
    ) -> Result<QSeries> {
        if step == 0 {
            return Err(Error::Series("substitution step must be positive".into()));
        }
        let needed = n_out / step;
        if needed > self.order() {
            return Err(Error::Series(format!(
                "substitution q -> q^{step} at order {n_out} needs order {needed}, have {}",
                self.order()
            )));
        }
        let mut out = QSeries::zero(n_out, self.z_cap);
        let mut ck = Rational::one();
        for k in 0..=needed {
            out.coeffs[k * step] = self.coeffs[k].mul_term(&ck, m.pow(k as u32));
            ck *= c;
        }
        Ok(out)
    }

    /// `q → -q`.
    pub fn negate_q(&self) -> QSeries {
        self.substitute(&int(-1), Monomial::ONE, 1, self.order())
            .expect("step 1 preserves order")
    }

    pub fn truncate(&self, n: usize) -> Result<QSeries> {
        if n > self.order() {
            return Err(Error::Series(format!(
                "cannot extend order {} to {n}",
                self.order()
            )));
        }
        Ok(QSeries {
            coeffs: self.coeffs[..=n].to_vec(),
            z_cap: self.z_cap,
        })
    }

    pub fn map_coeffs(&self, f: impl Fn(&RingElement) -> RingElement) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
            z_cap: self.z_cap,
        }
    }

    pub fn eval_b_one(&self) -> QSeries {
        self.map_coeffs(RingElement::eval_b_one)
    }

    pub fn eval_x_one(&self) -> QSeries {
        self.map_coeffs(RingElement::eval_x_one)
    }

    /// The first coefficient (by q-power, then monomial order) where
    /// `self` and `o` differ.
    pub fn first_divergence(&self, o: &QSeries) -> Option<Divergence> {
        let n = self.order().max(o.order());
        let zero = RingElement::zero(self.z_cap);
        for k in 0..=n {
            let a = self.coeffs.get(k).unwrap_or(&zero);
            let b = o.coeffs.get(k).unwrap_or(&zero);
            if a == b {
                continue;
            }
            let mut monos: Vec<Monomial> = a.terms().chain(b.terms()).map(|(m, _)| *m).collect();
            monos.sort();
            monos.dedup();
            for m in monos {
                let (ca, cb) = (a.coeff(&m), b.coeff(&m));
                if ca != cb {
                    return Some(Divergence {
                        q_power: k,
                        monomial: m,
                        lhs: ca,
                        rhs: cb,
                    });
                }
            }
        }
        None
    }

    /// Rational coefficients, when every coefficient is a constant.
    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(RingElement::as_constant).collect()
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let body = if c.num_terms() == 1 {
                c.to_string()
            } else {
                format!("({c})")
            };
            match k {
                0 => write!(f, "{body}")?,
                _ => {
                    let q = if k == 1 {
                        "q".to_string()
                    } else {
                        format!("q^{k}")
                    };
                    match c.as_constant() {
                        Some(r) if r.is_one() => write!(f, "{q}")?,
                        Some(r) if r == -Rational::one() => write!(f, "-{q}")?,
                        _ => write!(f, "{body}*{q}")?,
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, o: &QSeries) -> QSeries {
        self.try_add(o).expect("series orders must agree")
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, o: &QSeries) -> QSeries {
        self.try_sub(o).expect("series orders must agree")
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, o: &QSeries) -> QSeries {
        self.try_mul(o).expect("series orders must agree")
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        self.map_coeffs(|a| -a)
    }
}

/// `∏_{j≥0} (1 - a q^{step·j})` truncated at `q^n`.
pub fn pochhammer_inf(a: &QTerm, step: usize, n: usize, z_cap: u32) -> Result<QSeries> {
    let mut s = QSeries::one(n, z_cap);
    if a.coeff.is_zero() {
        return Ok(s);
    }
    if a.qpow == 0 {
        return Err(Error::Series(
            "(a;q)_inf needs a positive q-power in a".into(),
        ));
    }
    if step == 0 {
        return Err(Error::Series("Pochhammer step must be positive".into()));
    }
    let mut k = a.qpow;
    while k <= n {
        s.mul_binomial(&QTerm::new(-a.coeff.clone(), a.mono, k));
        k += step;
    }
    Ok(s)
}

/// `1 / ∏_{j≥0} (1 - a q^{step·j})` truncated at `q^n`.
pub fn pochhammer_inf_inverse(a: &QTerm, step: usize, n: usize, z_cap: u32) -> Result<QSeries> {
    let mut s = QSeries::one(n, z_cap);
    if a.coeff.is_zero() {
        return Ok(s);
    }
    if a.qpow == 0 || step == 0 {
        return Err(Error::Series("(a;q)_inf needs positive q-powers".into()));
    }
    let mut k = a.qpow;
    while k <= n {
        s.div_one_minus(&QTerm::new(a.coeff.clone(), a.mono, k))?;
        k += step;
    }
    Ok(s)
}

/// Euler's `(q;q)_∞`.
pub fn euler(n: usize, z_cap: u32) -> QSeries {
    pochhammer_inf(&QTerm::q(1), 1, n, z_cap).expect("q-power 1")
}

/// `Σ_j b^j q^{j(2j-1)}` over all integers `j` with `j(2j-1) ≤ n`.
pub fn jacobi_sum(n: usize, z_cap: u32) -> QSeries {
    let mut s = QSeries::zero(n, z_cap);
    let mut j: i64 = 0;
    loop {
        let mut any = false;
        for jj in if j == 0 { vec![0] } else { vec![j, -j] } {
            let e = jj * (2 * jj - 1);
            if e as usize <= n {
                s.coeffs[e as usize].add_term(Monomial::b(jj), Rational::one());
                any = true;
            }
        }
        if !any {
            break;
        }
        j += 1;
    }
    s
}

/// Renders a rational-coefficient series as a list, for diagnostics.
pub fn format_rational_list(s: &QSeries) -> String {
    match s.rational_coeffs() {
        Some(v) => v.iter().map(fmt_rational).collect::<Vec<_>>().join(", "),
        None => s.to_string(),
    }
}
