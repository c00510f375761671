//! Multiplication-addition theorems with arbitrary weight functions, checked
//! on random rational lookup tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{rat, QSeries, Rational, RingElement};

use super::lhs::{LhsClass, LhsSpec};
use super::rhs::{core_gen, in_xqt, in_y, nu_sums, p_even, p_odd};
use super::weights::{ProductWeight, Rho, SignedRho, SumWeight, WeightSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MasterTheorem {
    /// Self-conjugate, even `t`, with BG-rank.
    Bg4Multi,
    /// Self-conjugate, even `t`, weights depending on the box sign.
    Signed,
    /// BC class, odd `t`, signed weights.
    OddBc,
    /// All partitions, any `t ≥ 1`.
    HanJi,
}

impl MasterTheorem {
    pub fn check_t(self, t: usize) -> Result<()> {
        let ok = match self {
            MasterTheorem::Bg4Multi | MasterTheorem::Signed => t >= 2 && t.is_multiple_of(2),
            MasterTheorem::OddBc => t >= 3 && t % 2 == 1,
            MasterTheorem::HanJi => t >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Parity(format!("{self:?} does not accept t = {t}")))
        }
    }

    fn signed(self) -> bool {
        matches!(self, MasterTheorem::Signed | MasterTheorem::OddBc)
    }
}

/// Weight tables on `(a, ε)` for `a ∈ {t, 2t, …}`; unsigned theorems read
/// the `ε = 1` entries.
#[derive(Clone, Debug, PartialEq)]
pub struct MasterTables {
    pub rho1: BTreeMap<(usize, i64), Rational>,
    pub rho2: BTreeMap<(usize, i64), Rational>,
}

impl MasterTables {
    /// Every entry equal to `v1` (resp. `v2`).
    pub fn constant(t: usize, n: usize, v1: Rational, v2: Rational) -> Self {
        let mut rho1 = BTreeMap::new();
        let mut rho2 = BTreeMap::new();
        for a in (t..=n.max(t)).step_by(t) {
            for e in [1, -1] {
                rho1.insert((a, e), v1.clone());
                rho2.insert((a, e), v2.clone());
            }
        }
        MasterTables { rho1, rho2 }
    }

    /// Random values `p/q`, `p ∈ [-6, 6]`, `q ∈ [1, 6]`, reproducible from `seed`.
    pub fn random(t: usize, n: usize, seed: u64, signed: bool) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let draw = |rng: &mut ChaCha8Rng| rat(rng.random_range(-6..=6), rng.random_range(1..=6));
        let mut rho1: BTreeMap<(usize, i64), Rational> = BTreeMap::new();
        let mut rho2: BTreeMap<(usize, i64), Rational> = BTreeMap::new();
        for a in (t..=n.max(t)).step_by(t) {
            for e in [1, -1] {
                let (v1, v2) = if e == 1 || signed {
                    (draw(&mut rng), draw(&mut rng))
                } else {
                    (rho1[&(a, 1)].clone(), rho2[&(a, 1)].clone())
                };
                rho1.insert((a, e), v1);
                rho2.insert((a, e), v2);
            }
        }
        MasterTables { rho1, rho2 }
    }

    fn unsigned(map: &BTreeMap<(usize, i64), Rational>) -> Rho {
        Rho::Table(Arc::new(
            map.iter()
                .filter(|((_, e), _)| *e == 1)
                .map(|((a, _), v)| (*a, v.clone()))
                .collect(),
        ))
    }

    fn get(map: &BTreeMap<(usize, i64), Rational>, a: usize, e: i64) -> Result<Rational> {
        map.get(&(a, e))
            .cloned()
            .ok_or_else(|| Error::InvalidParameter(format!("no table value at ({a}, {e})")))
    }
}

/// Left-hand side of a master theorem for the given tables.
pub fn master_lhs(theorem: MasterTheorem, t: usize, tables: &MasterTables) -> Result<LhsSpec> {
    theorem.check_t(t)?;
    let (product, sum) = if theorem.signed() {
        (
            ProductWeight::Signed(SignedRho::Table(Arc::new(tables.rho1.clone()))),
            SumWeight::Signed(SignedRho::Table(Arc::new(tables.rho2.clone()))),
        )
    } else {
        (
            ProductWeight::Plain(MasterTables::unsigned(&tables.rho1)),
            SumWeight::Plain(MasterTables::unsigned(&tables.rho2)),
        )
    };
    let weight = WeightSpec::with_sum(product, sum);
    Ok(match theorem {
        MasterTheorem::Bg4Multi | MasterTheorem::Signed => {
            LhsSpec::new(LhsClass::SelfConjugate, t, weight)
                .with_x()
                .with_b()
        }
        MasterTheorem::OddBc => LhsSpec::new(LhsClass::Bc, t, weight).with_x(),
        MasterTheorem::HanJi => LhsSpec::new(LhsClass::All, t, weight).with_x(),
    })
}

/// `f` and `g` of the theorem at order `m`, in a plain variable.
pub fn master_f_g(
    theorem: MasterTheorem,
    t: usize,
    m: usize,
    cap: u32,
    tables: &MasterTables,
) -> Result<(QSeries, QSeries)> {
    let c = |v: Rational| RingElement::constant(v, cap);
    let (r1, r2) = (&tables.rho1, &tables.rho2);
    match theorem {
        MasterTheorem::HanJi => nu_sums(
            t,
            m,
            cap,
            |a| Ok(c(MasterTables::get(r1, a, 1)?)),
            |a| Ok(c(MasterTables::get(r2, a, 1)?)),
        ),
        MasterTheorem::Bg4Multi => nu_sums(
            t,
            m,
            cap,
            |a| {
                let v = MasterTables::get(r1, a, 1)?;
                Ok(c(&v * &v))
            },
            |a| Ok(c(MasterTables::get(r2, a, 1)?)),
        ),
        MasterTheorem::Signed | MasterTheorem::OddBc => nu_sums(
            t,
            m,
            cap,
            |a| {
                Ok(c(
                    MasterTables::get(r1, a, 1)? * MasterTables::get(r1, a, -1)?
                ))
            },
            |a| {
                Ok(c(
                    MasterTables::get(r2, a, 1)? + MasterTables::get(r2, a, -1)?
                ))
            },
        ),
    }
}

/// Right-hand side of a master theorem as displayed.
pub fn master_rhs(
    theorem: MasterTheorem,
    t: usize,
    n: usize,
    cap: u32,
    tables: &MasterTables,
) -> Result<QSeries> {
    theorem.check_t(t)?;
    let ti = t as i64;
    match theorem {
        MasterTheorem::HanJi => {
            let fg = in_xqt(t, n, |m| {
                let (f, g) = master_f_g(theorem, t, m, cap, tables)?;
                f.powi(ti - 1)?.try_mul(&g)
            })?;
            core_gen(t, n, cap)?
                .try_mul(&fg)
                .map(|s| s.scale_rational(&rat(ti, 1)))
        }
        MasterTheorem::Bg4Multi | MasterTheorem::Signed => {
            let fg = in_y(t, n, |m| {
                let (f, g) = master_f_g(theorem, t, m, cap, tables)?;
                f.powi(ti / 2 - 1)?.try_mul(&g)
            })?;
            let factor = if theorem == MasterTheorem::Bg4Multi {
                rat(ti, 1)
            } else {
                rat(ti, 2)
            };
            p_even(t, n, cap)?
                .try_mul(&fg)
                .map(|s| s.scale_rational(&factor))
        }
        MasterTheorem::OddBc => {
            let fg = in_y(t, n, |m| {
                let (f, g) = master_f_g(theorem, t, m, cap, tables)?;
                f.powi((ti - 3) / 2)?.try_mul(&g)
            })?;
            p_odd(t, n, cap)?
                .try_mul(&fg)
                .map(|s| s.scale_rational(&rat(ti - 1, 1)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_reproducible() {
        let a = MasterTables::random(2, 16, 1, true);
        let b = MasterTables::random(2, 16, 1, true);
        let c = MasterTables::random(2, 16, 2, true);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.rho1.len(), 16);
        let u = MasterTables::random(3, 15, 5, false);
        for a in (3..=15).step_by(3) {
            assert_eq!(u.rho1[&(a, 1)], u.rho1[&(a, -1)]);
        }
    }

    #[test]
    fn parity_rules() {
        assert!(MasterTheorem::Bg4Multi.check_t(3).is_err());
        assert!(MasterTheorem::OddBc.check_t(4).is_err());
        assert!(MasterTheorem::OddBc.check_t(1).is_err());
        assert!(MasterTheorem::HanJi.check_t(1).is_ok());
    }
}
