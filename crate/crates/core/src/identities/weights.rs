//! Hook weights: functions of a hook length (and optionally the sign of
//! the box) combined over the boxes of λ whose hook is divisible by `t`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::{cell_sign, Cell};
use crate::series::{int, Monomial, Rational, RingElement};

/// A function of the hook length.
#[derive(Clone, Debug, PartialEq)]
pub enum Rho {
    One,
    /// `1 - z/h^2`
    NekrasovOkounkov,
    /// `1/h`
    InvHook,
    /// `1/h^2`
    InvHookSquared,
    /// `(1/h)(1 + z^h)/(1 - z^h)`, geometric in `z`
    Clps,
    /// `scale · h^exp`
    Power {
        exp: i64,
        scale: Rational,
    },
    /// `∏_{i=1}^{r} (h^2 - i^2)`
    ShiftedSquares(usize),
    /// Lookup table on hook lengths.
    Table(Arc<BTreeMap<usize, Rational>>),
}

impl Rho {
    pub fn eval(&self, h: usize, cap: u32) -> Result<RingElement> {
        let hi = h as i64;
        Ok(match self {
            Rho::One => RingElement::one(cap),
            Rho::NekrasovOkounkov => RingElement::from_terms(
                [
                    (Monomial::ONE, Rational::one()),
                    (Monomial::z(1), -Rational::new(1.into(), (hi * hi).into())),
                ],
                cap,
            ),
            Rho::InvHook => RingElement::constant(Rational::new(1.into(), hi.into()), cap),
            Rho::InvHookSquared => {
                RingElement::constant(Rational::new(1.into(), (hi * hi).into()), cap)
            }
            Rho::Clps => {
                let num = RingElement::from_terms(
                    [
                        (Monomial::ONE, Rational::one()),
                        (Monomial::z(h as u32), Rational::one()),
                    ],
                    cap,
                );
                let den_inv = RingElement::geometric_z(&Rational::one(), h as u32, cap);
                (&num * &den_inv).scale(&Rational::new(1.into(), hi.into()))
            }
            Rho::Power { exp, scale } => {
                let base = int(hi);
                let p = if *exp >= 0 {
                    num_traits::pow(base, *exp as usize)
                } else {
                    num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
                };
                RingElement::constant(p * scale, cap)
            }
            Rho::ShiftedSquares(r) => {
                let v = (1..=*r as i64).fold(Rational::one(), |acc, i| acc * int(hi * hi - i * i));
                RingElement::constant(v, cap)
            }
            Rho::Table(tab) => RingElement::constant(
                tab.get(&h).cloned().ok_or_else(|| {
                    Error::InvalidParameter(format!("no table value at hook {h}"))
                })?,
                cap,
            ),
        })
    }
}

/// A function of the hook length and the sign `ε` of the box.
#[derive(Clone, Debug, PartialEq)]
pub enum SignedRho {
    Unsigned(Rho),
    /// `1 - c·z/(hε)`
    NoSigned(Rational),
    /// Lookup table on `(h, ε)`.
    Table(Arc<BTreeMap<(usize, i64), Rational>>),
}

impl SignedRho {
    pub fn eval(&self, h: usize, eps: i64, cap: u32) -> Result<RingElement> {
        match self {
            SignedRho::Unsigned(r) => r.eval(h, cap),
            SignedRho::NoSigned(c) => Ok(RingElement::from_terms(
                [
                    (Monomial::ONE, Rational::one()),
                    (Monomial::z(1), -c / int(h as i64 * eps)),
                ],
                cap,
            )),
            SignedRho::Table(tab) => Ok(RingElement::constant(
                tab.get(&(h, eps)).cloned().ok_or_else(|| {
                    Error::InvalidParameter(format!("no table value at ({h}, {eps})"))
                })?,
                cap,
            )),
        }
    }
}

/// The multiplicative part of a weight.
#[derive(Clone, Debug, PartialEq)]
pub enum ProductWeight {
    One,
    /// `∏ ρ(h)` over boxes with `t | h`.
    Plain(Rho),
    /// `∏ ρ(h)` over boxes strictly above the diagonal with `t | h`; stands
    /// for `∏ ρ(h)^{1/2}` over all such boxes on classes where boxes pair up.
    Paired(Rho),
    /// `∏ ρ(h, ε)` over boxes with `t | h`.
    Signed(SignedRho),
}

/// The additive part of a weight.
#[derive(Clone, Debug, PartialEq)]
pub enum SumWeight {
    Plain(Rho),
    Signed(SignedRho),
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightSpec {
    pub product: ProductWeight,
    pub sum: Option<SumWeight>,
}

impl WeightSpec {
    pub fn one() -> Self {
        WeightSpec {
            product: ProductWeight::One,
            sum: None,
        }
    }

    pub fn product(p: ProductWeight) -> Self {
        WeightSpec {
            product: p,
            sum: None,
        }
    }

    pub fn with_sum(p: ProductWeight, s: SumWeight) -> Self {
        WeightSpec {
            product: p,
            sum: Some(s),
        }
    }

    pub fn is_paired(&self) -> bool {
        matches!(self.product, ProductWeight::Paired(_))
    }

    /// Weight of a partition given its boxes with `t | h`.
    pub fn evaluate(&self, boxes: &[(Cell, usize)], cap: u32) -> Result<RingElement> {
        let mut w = RingElement::one(cap);
        match &self.product {
            ProductWeight::One => {}
            ProductWeight::Plain(r) => {
                for (_, h) in boxes {
                    w = &w * &r.eval(*h, cap)?;
                }
            }
            ProductWeight::Paired(r) => {
                for (u, h) in boxes {
                    if u.col > u.row {
                        w = &w * &r.eval(*h, cap)?;
                    }
                }
            }
            ProductWeight::Signed(r) => {
                for (u, h) in boxes {
                    w = &w * &r.eval(*h, cell_sign(*u).as_i64(), cap)?;
                }
            }
        }
        if let Some(s) = &self.sum {
            if w.is_zero() {
                return Ok(w);
            }
            let mut acc = RingElement::zero(cap);
            for (u, h) in boxes {
                let v = match s {
                    SumWeight::Plain(r) => r.eval(*h, cap)?,
                    SumWeight::Signed(r) => r.eval(*h, cell_sign(*u).as_i64(), cap)?,
                };
                acc.add_assign(&v);
            }
            w = &w * &acc;
        }
        if w.is_zero() {
            return Ok(RingElement::zero(cap));
        }
        Ok(w)
    }
}

/// Boxes of λ (with hooks) whose hook length is divisible by `t`.
pub fn divisible_boxes(hooks: &[(Cell, usize)], t: usize) -> Vec<(Cell, usize)> {
    hooks.iter().copied().filter(|(_, h)| h % t == 0).collect()
}

/// `(1 + z^a)/(1 - z^a)` truncated at the cap.
pub fn clps_ratio(a: u32, cap: u32) -> RingElement {
    let num = RingElement::from_terms(
        [
            (Monomial::ONE, Rational::one()),
            (Monomial::z(a), Rational::one()),
        ],
        cap,
    );
    &num * &RingElement::geometric_z(&Rational::one(), a, cap)
}
