//! Coefficient ring: rational combinations of monomials `b^e x^f z^g`, Laurent
//! in `b`, polynomial in `x`, and polynomial in `z` truncated above a cap.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = BigRational;

/// Default z-degree cap for the kernel.
pub const DEFAULT_Z_CAP: u32 = 8;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exponents of `b`, `x`, `z`. Ordered lexicographically in that order.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Monomial {
    pub b: i64,
    pub x: u32,
    pub z: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { b: 0, x: 0, z: 0 };

    pub fn new(b: i64, x: u32, z: u32) -> Self {
        Monomial { b, x, z }
    }

    pub fn b(e: i64) -> Self {
        Monomial { b: e, ..Self::ONE }
    }

    pub fn x(e: u32) -> Self {
        Monomial { x: e, ..Self::ONE }
    }

    pub fn z(e: u32) -> Self {
        Monomial { z: e, ..Self::ONE }
    }

    pub fn times(self, o: Monomial) -> Monomial {
        Monomial {
            b: self.b + o.b,
            x: self.x + o.x,
            z: self.z + o.z,
        }
    }

    pub fn pow(self, k: u32) -> Monomial {
        Monomial {
            b: self.b * i64::from(k),
            x: self.x * k,
            z: self.z * k,
        }
    }

    pub fn is_one(self) -> bool {
        self == Self::ONE
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [
            ("b", self.b),
            ("x", i64::from(self.x)),
            ("z", i64::from(self.z)),
        ] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[derive(Clone, Debug)]
pub struct RingElement {
    terms: BTreeMap<Monomial, Rational>,
    z_cap: u32,
    z_truncated: bool,
}

/// Equality is on terms only; the cap and truncation flag are bookkeeping.
impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for RingElement {}

impl RingElement {
    pub fn zero(z_cap: u32) -> Self {
        RingElement {
            terms: BTreeMap::new(),
            z_cap,
            z_truncated: false,
        }
    }

    pub fn one(z_cap: u32) -> Self {
        Self::constant(Rational::one(), z_cap)
    }

    pub fn constant(c: Rational, z_cap: u32) -> Self {
        Self::term(c, Monomial::ONE, z_cap)
    }

    pub fn term(c: Rational, m: Monomial, z_cap: u32) -> Self {
        let mut r = Self::zero(z_cap);
        r.add_term(m, c);
        r
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I, z_cap: u32) -> Self {
        let mut r = Self::zero(z_cap);
        for (m, c) in terms {
            r.add_term(m, c);
        }
        r
    }

    pub fn z_cap(&self) -> u32 {
        self.z_cap
    }

    pub fn is_z_truncated(&self) -> bool {
        self.z_truncated
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The rational value when the element has no variable part.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// The single `(monomial, coefficient)` term, if there is exactly one.
    pub fn as_single_term(&self) -> Option<(Monomial, Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c.clone()))
        } else {
            None
        }
    }

    /// Adds `c·m`, dropping it if `m` exceeds the z cap.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        if m.z > self.z_cap {
            self.z_truncated = true;
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &RingElement) {
        self.meet_cap(o);
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }

    /// `self += a·b`, without materializing the product.
    pub fn add_product(&mut self, a: &RingElement, b: &RingElement) {
        self.meet_cap(a);
        self.meet_cap(b);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = ma.times(*mb);
                if m.z > self.z_cap {
                    self.z_truncated = true;
                    continue;
                }
                self.add_term(m, ca * cb);
            }
        }
    }

    fn meet_cap(&mut self, o: &RingElement) {
        self.z_truncated |= o.z_truncated;
        if o.z_cap < self.z_cap {
            self.z_cap = o.z_cap;
            let before = self.terms.len();
            self.terms.retain(|m, _| m.z <= o.z_cap);
            self.z_truncated |= self.terms.len() != before;
        }
    }

    pub fn scale(&self, c: &Rational) -> RingElement {
        if c.is_zero() {
            return RingElement::zero(self.z_cap);
        }
        RingElement {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
            z_cap: self.z_cap,
            z_truncated: self.z_truncated,
        }
    }

    pub fn mul_term(&self, c: &Rational, mono: Monomial) -> RingElement {
        let mut r = RingElement::zero(self.z_cap);
        r.z_truncated = self.z_truncated;
        for (m, v) in &self.terms {
            r.add_term(m.times(mono), v * c);
        }
        r
    }

    pub fn pow(&self, k: u32) -> RingElement {
        let mut acc = RingElement::one(self.z_cap);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `b = 1`.
    pub fn eval_b_one(&self) -> RingElement {
        self.map_monomials(|m| Monomial { b: 0, ..m })
    }

    /// Substitutes `x = 1`.
    pub fn eval_x_one(&self) -> RingElement {
        self.map_monomials(|m| Monomial { x: 0, ..m })
    }

    fn map_monomials(&self, f: impl Fn(Monomial) -> Monomial) -> RingElement {
        let mut r = RingElement::zero(self.z_cap);
        r.z_truncated = self.z_truncated;
        for (m, c) in &self.terms {
            r.add_term(f(*m), c.clone());
        }
        r
    }

    /// True when only `z` appears.
    pub fn is_z_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.b == 0 && m.x == 0)
    }

    /// `Σ_{k=0}^{cap} c^k z^{k·step}`, the truncated expansion of `1/(1 - c z^step)`.
    pub fn geometric_z(c: &Rational, step: u32, z_cap: u32) -> RingElement {
        let mut r = RingElement::one(z_cap);
        if step == 0 {
            return r;
        }
        let mut pow = Rational::one();
        let mut e = step;
        while e <= z_cap {
            pow *= c;
            r.add_term(Monomial::z(e), pow.clone());
            e += step;
        }
        r.z_truncated = true;
        r
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, o: &RingElement) -> RingElement {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, o: &RingElement) -> RingElement {
        self + &(-o)
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
            z_cap: self.z_cap,
            z_truncated: self.z_truncated,
        }
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, o: &RingElement) -> RingElement {
        let mut r = RingElement::zero(self.z_cap.min(o.z_cap));
        r.z_truncated = self.z_truncated || o.z_truncated;
        r.add_product(self, o);
        r
    }
}
