//! The identity registry: one record per generating-function identity,
//! each pairing an enumerated left-hand side with a closed-form right-hand
//! side built from the series kernel.

use num_traits::One;

use crate::enumerate::{enumerate, PartitionClass};
use crate::error::{Error, Result};
use crate::littlewood::is_t_core;
use crate::series::{
    b_poly, catalan_c, central_factorial, euler, int, jacobi_sum, rat, Monomial, QSeries, Rational,
    RingElement,
};

use super::lhs::{LhsClass, LhsSpec, TermFilter};
use super::master::{master_lhs, master_rhs, MasterTables, MasterTheorem};
use super::rhs::{
    bc_gen, bg_product, core_gen, euler_step, in_xqt, in_y, lambert, moment_poly, p_even, p_odd,
    poly_ring, z_poly,
};
use super::weights::{clps_ratio, ProductWeight, Rho, SignedRho, SumWeight, WeightSpec};

/// Which values of `t` a record accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TRule {
    /// `t` plays no role; only `t = 1` is accepted.
    Unit,
    /// Any `t ≥ 1`.
    Any,
    /// Even `t ≥ 2`.
    Even,
    /// Odd `t ≥ 3`.
    Odd,
}

impl TRule {
    pub fn check(self, t: usize) -> Result<()> {
        let ok = match self {
            TRule::Unit => t == 1,
            TRule::Any => t >= 1,
            TRule::Even => t >= 2 && t.is_multiple_of(2),
            TRule::Odd => t >= 3 && t % 2 == 1,
        };
        if ok {
            Ok(())
        } else {
            let want = match self {
                TRule::Unit => "t = 1",
                TRule::Any => "t >= 1",
                TRule::Even => "even t",
                TRule::Odd => "odd t >= 3",
            };
            Err(Error::Parity(format!("expected {want}, got t = {t}")))
        }
    }
}

/// Extra parameters a record reads besides `t`, `N` and `Dz`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Uses {
    pub r: bool,
    pub k: bool,
    pub beta: bool,
    pub seed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub t: usize,
    pub n: usize,
    pub dz: u32,
    pub r: usize,
    pub k: usize,
    pub beta: i64,
    pub seed: u64,
}

pub const DEFAULT_DZ: u32 = 6;
pub const DEFAULT_N_EVEN: usize = 20;
pub const DEFAULT_N_ODD: usize = 15;

/// The left-hand side: an enumerated sum, or a series given directly.
#[derive(Clone, Debug)]
pub enum Lhs {
    Enumerated(LhsSpec),
    Series(QSeries),
}

pub type Builder<T> = fn(&Params) -> Result<T>;

#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub description: &'static str,
    pub rule: TRule,
    pub default_t: usize,
    pub default_n: usize,
    pub uses: Uses,
    pub lhs: Builder<Lhs>,
    pub rhs: Builder<QSeries>,
}

impl std::fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .finish()
    }
}

impl IdentityRecord {
    pub fn default_params(&self) -> Params {
        Params {
            t: self.default_t,
            n: self.default_n,
            dz: DEFAULT_DZ,
            r: 1,
            k: 1,
            beta: 1,
            seed: 1,
        }
    }

    pub fn check(&self, p: &Params) -> Result<()> {
        self.rule.check(p.t)?;
        if self.uses.k && p.k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        if self.uses.r && p.r == 0 {
            return Err(Error::InvalidParameter("r must be positive".into()));
        }
        Ok(())
    }
}

fn class_even(p: &Params, weight: WeightSpec) -> Lhs {
    Lhs::Enumerated(
        LhsSpec::new(LhsClass::SelfConjugate, p.t, weight)
            .with_x()
            .with_b(),
    )
}

fn class_odd(p: &Params, weight: WeightSpec) -> Lhs {
    Lhs::Enumerated(LhsSpec::new(LhsClass::Bc, p.t, weight).with_x())
}

fn class_all(weight: WeightSpec) -> Lhs {
    Lhs::Enumerated(LhsSpec::new(LhsClass::All, 1, weight))
}

fn product(r: Rho) -> WeightSpec {
    WeightSpec::product(ProductWeight::Plain(r))
}

fn paired(r: Rho) -> WeightSpec {
    WeightSpec::product(ProductWeight::Paired(r))
}

fn power(exp: i64) -> Rho {
    Rho::Power {
        exp,
        scale: Rational::one(),
    }
}

/// `base^e` for a possibly negative exponent.
fn ipow(base: Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base.recip(), e.unsigned_abs() as usize)
    }
}

fn ti(p: &Params) -> i64 {
    p.t as i64
}

/// `P_even(q) · F(x^2 q^{2t})`.
fn even_with(p: &Params, build: impl FnOnce(usize) -> Result<QSeries>) -> Result<QSeries> {
    let f = in_y(p.t, p.n, build)?;
    p_even(p.t, p.n, p.dz)?.try_mul(&f)
}

/// `P_odd(q) · F(x^2 q^{2t})`.
fn odd_with(p: &Params, build: impl FnOnce(usize) -> Result<QSeries>) -> Result<QSeries> {
    let f = in_y(p.t, p.n, build)?;
    p_odd(p.t, p.n, p.dz)?.try_mul(&f)
}

/// `exp(c1 y + c2 y^2)` at order `m` with ring coefficients.
fn exp_ring(c1: RingElement, c2: RingElement, m: usize, cap: u32) -> Result<QSeries> {
    poly_ring(&[RingElement::zero(cap), c1, c2], m, cap).exp()
}

fn exp_rat(c1: Rational, c2: Rational, m: usize, cap: u32) -> Result<QSeries> {
    exp_ring(
        RingElement::constant(c1, cap),
        RingElement::constant(c2, cap),
        m,
        cap,
    )
}

/// Lower summation bound `max(0, ⌈(r - t + 1)/t⌉)` of the Okada–Panova sums.
pub fn okada_panova_lower(r: usize, t: usize) -> usize {
    if r < t {
        0
    } else {
        (r + 1 - t).div_ceil(t)
    }
}

fn okada_panova_sum(p: &Params, m: usize) -> Result<QSeries> {
    let alpha = int(ti(p));
    moment_poly(p.t, m, p.dz, okada_panova_lower(p.r, p.t), p.r, |k| {
        Ok(b_poly(p.r, k, &alpha)? * catalan_c(k))
    })
}

fn stanley_panova_sum(p: &Params, m: usize) -> Result<QSeries> {
    moment_poly(p.t, m, p.dz, 0, p.k, |i| {
        Ok(Rational::from_integer(central_factorial(p.k + 1, i + 1)) * catalan_c(i))
    })
}

fn master_record(theorem: MasterTheorem, p: &Params) -> (MasterTables, MasterTheorem) {
    let signed = matches!(theorem, MasterTheorem::Signed | MasterTheorem::OddBc);
    (MasterTables::random(p.t, p.n, p.seed, signed), theorem)
}

/// Number of `m`-cores of each size `0..=n`.
pub fn core_counts(m: usize, n: usize) -> Result<Vec<usize>> {
    (0..=n)
        .map(|k| {
            Ok(enumerate(k, PartitionClass::All)?
                .iter()
                .filter(|p| is_t_core(p, m))
                .count())
        })
        .collect()
}

/// `Σ_j b^j q^{j(2j-1)} · Σ_k c_{t/2}(k) q^{4k}` with core counts taken by
/// enumeration.
pub fn sc_core_count_series(t: usize, n: usize, cap: u32) -> Result<QSeries> {
    let counts = core_counts(t / 2, n / 4)?;
    let mut c = QSeries::zero(n, cap);
    for (k, v) in counts.iter().enumerate() {
        c.coeff_mut(4 * k).add_term(Monomial::ONE, int(*v as i64));
    }
    jacobi_sum(n, cap).try_mul(&c)
}

/// `Σ_{n≥1, j} b^j x^{2n} q^{2tn + j(2j-1)} (t + 3n - 3)/(2^n t^{n-1} (n-1)!)`.
pub fn no_odd_series(t: usize, n: usize, cap: u32) -> QSeries {
    let mut s = QSeries::zero(n, cap);
    let ti = t as i64;
    let mut m = 1usize;
    while 2 * t * m <= n {
        let mut fact = Rational::one();
        for i in 1..m {
            fact *= int(i as i64);
        }
        let mi = m as i64;
        let value = int(ti + 3 * mi - 3)
            / (num_traits::pow(int(2), m) * num_traits::pow(int(ti), m - 1) * fact);
        for j in jacobi_exponents(n - 2 * t * m) {
            s.coeff_mut(2 * t * m + (j * (2 * j - 1)) as usize)
                .add_term(Monomial::new(j, 2 * m as u32, 0), value.clone());
        }
        m += 1;
    }
    s
}

/// All integers `j` with `j(2j - 1) ≤ n`.
pub fn jacobi_exponents(n: usize) -> Vec<i64> {
    let mut out = vec![0];
    let mut j = 1i64;
    loop {
        let mut any = false;
        for jj in [-j, j] {
            if (jj * (2 * jj - 1)) as usize <= n {
                out.push(jj);
                any = true;
            }
        }
        if !any {
            break;
        }
        j += 1;
    }
    out.sort_unstable();
    out
}

const NONE: Uses = Uses {
    r: false,
    k: false,
    beta: false,
    seed: false,
};
const R: Uses = Uses { r: true, ..NONE };
const K: Uses = Uses { k: true, ..NONE };
const BETA: Uses = Uses { beta: true, ..NONE };
const SEED: Uses = Uses { seed: true, ..NONE };

/// Every record, in registry order.
pub fn registry() -> Vec<IdentityRecord> {
    vec![
        IdentityRecord {
            id: "gen-all",
            description: "partition generating function 1/(q;q)",
            rule: TRule::Unit,
            default_t: 1,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |_| Ok(class_all(WeightSpec::one())),
            rhs: |p| euler(p.n, p.dz).inverse(),
        },
        IdentityRecord {
            id: "nekrasov-okounkov",
            description: "product of (1 - z/h^2) over all hooks equals (q;q)^(z-1)",
            rule: TRule::Unit,
            default_t: 1,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |_| Ok(class_all(product(Rho::NekrasovOkounkov))),
            rhs: |p| euler(p.n, p.dz).pow(&z_poly(&[int(-1), int(1)], p.dz)),
        },
        IdentityRecord {
            id: "hanji-modular-no",
            description: "modular Nekrasov-Okounkov over all partitions",
            rule: TRule::Any,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| {
                Ok(Lhs::Enumerated(
                    LhsSpec::new(LhsClass::All, p.t, product(Rho::NekrasovOkounkov)).with_x(),
                ))
            },
            rhs: |p| {
                let alpha = z_poly(&[int(-ti(p)), rat(1, ti(p))], p.dz);
                let f = in_xqt(p.t, p.n, |m| euler(m, p.dz).pow(&alpha))?;
                core_gen(p.t, p.n, p.dz)?.try_mul(&f)
            },
        },
        IdentityRecord {
            id: "hanji-master",
            description: "multiplication-addition theorem over all partitions, random weights",
            rule: TRule::Any,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: SEED,
            lhs: |p| {
                let (tab, th) = master_record(MasterTheorem::HanJi, p);
                Ok(Lhs::Enumerated(master_lhs(th, p.t, &tab)?))
            },
            rhs: |p| {
                let (tab, th) = master_record(MasterTheorem::HanJi, p);
                master_rhs(th, p.t, p.n, p.dz, &tab)
            },
        },
        IdentityRecord {
            id: "sc-master",
            description: "self-conjugate multiplication-addition theorem with BG-rank, random weights",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: SEED,
            lhs: |p| {
                let (tab, th) = master_record(MasterTheorem::Bg4Multi, p);
                Ok(Lhs::Enumerated(master_lhs(th, p.t, &tab)?))
            },
            rhs: |p| {
                let (tab, th) = master_record(MasterTheorem::Bg4Multi, p);
                master_rhs(th, p.t, p.n, p.dz, &tab)
            },
        },
        IdentityRecord {
            id: "sc-no-even",
            description: "self-conjugate modular Nekrasov-Okounkov, square-root weights",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| Ok(class_even(p, paired(Rho::NekrasovOkounkov))),
            rhs: |p| {
                let alpha = z_poly(&[rat(-ti(p), 2), rat(1, 2 * ti(p))], p.dz);
                even_with(p, |m| euler(m, p.dz).pow(&alpha))
            },
        },
        IdentityRecord {
            id: "sc-trivariate-gen",
            description: "self-conjugate generating function in q, x and b",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| Ok(class_even(p, WeightSpec::one())),
            rhs: |p| even_with(p, |m| euler(m, p.dz).powi(-(ti(p) / 2))),
        },
        IdentityRecord {
            id: "sc-bg-gen",
            description: "self-conjugate generating function by BG-rank",
            rule: TRule::Unit,
            default_t: 1,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| {
                Ok(Lhs::Enumerated(
                    LhsSpec::new(LhsClass::SelfConjugate, p.t, WeightSpec::one()).with_b(),
                ))
            },
            rhs: |p| bg_product(p.n, p.dz),
        },
        IdentityRecord {
            id: "classical-hook",
            description: "product of 1/h^2 over all hooks equals exp(q)",
            rule: TRule::Unit,
            default_t: 1,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |_| Ok(class_all(product(Rho::InvHookSquared))),
            rhs: |p| exp_rat(int(1), int(0), p.n, p.dz),
        },
        IdentityRecord {
            id: "classical-invol",
            description: "product of 1/h over all hooks equals exp(q + q^2/2)",
            rule: TRule::Unit,
            default_t: 1,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |_| Ok(class_all(product(Rho::InvHook))),
            rhs: |p| exp_rat(int(1), rat(1, 2), p.n, p.dz),
        },
        IdentityRecord {
            id: "sc-hook-inv",
            description: "self-conjugate modular product of 1/h",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| Ok(class_even(p, product(Rho::InvHook))),
            rhs: |p| even_with(p, |m| exp_rat(rat(1, 2 * ti(p)), int(0), m, p.dz)),
        },
        IdentityRecord {
            id: "sc-hook-sqrt",
            description: "self-conjugate modular product of 1/h^(1/2)",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| Ok(class_even(p, paired(Rho::InvHook))),
            rhs: |p| even_with(p, |m| exp_rat(rat(1, 2), rat(1, 4 * ti(p)), m, p.dz)),
        },
        IdentityRecord {
            id: "clps",
            description: "product of (1/h)(1+z^h)/(1-z^h) over all hooks",
            rule: TRule::Unit,
            default_t: 1,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |_| Ok(class_all(product(Rho::Clps))),
            rhs: |p| {
                exp_ring(clps_ratio(1, p.dz), RingElement::constant(rat(1, 2), p.dz), p.n, p.dz)
            },
        },
        IdentityRecord {
            id: "sc-clps",
            description: "self-conjugate modular interpolation between the two hook formulas",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| Ok(class_even(p, paired(Rho::Clps))),
            rhs: |p| {
                even_with(p, |m| {
                    exp_ring(
                        clps_ratio(p.t as u32, p.dz).scale(&rat(1, 2)),
                        RingElement::constant(rat(1, 4 * ti(p)), p.dz),
                        m,
                        p.dz,
                    )
                })
            },
        },
        IdentityRecord {
            id: "bbm",
            description: "sum of h^beta over all hooks",
            rule: TRule::Unit,
            default_t: 1,
            default_n: DEFAULT_N_EVEN,
            uses: BETA,
            lhs: |p| {
                Ok(class_all(WeightSpec::with_sum(ProductWeight::One, SumWeight::Plain(power(p.beta)))))
            },
            rhs: |p| {
                let l = lambert(p.n, p.dz, |k| ipow(int(k as i64), p.beta + 1));
                euler(p.n, p.dz).inverse()?.try_mul(&l)
            },
        },
        IdentityRecord {
            id: "sc-bbm",
            description: "self-conjugate modular sum of h^beta",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: BETA,
            lhs: |p| {
                Ok(class_even(
                    p,
                    WeightSpec::with_sum(ProductWeight::One, SumWeight::Plain(power(p.beta))),
                ))
            },
            rhs: |p| {
                even_with(p, |m| {
                    let l = lambert(m, p.dz, |k| ipow(int(ti(p) * k as i64), p.beta + 1));
                    euler(m, p.dz).powi(-(ti(p) / 2))?.try_mul(&l)
                })
            },
        },
        IdentityRecord {
            id: "okada-panova",
            description: "product of 1/h^2 times sum of prod (h^2 - i^2)",
            rule: TRule::Unit,
            default_t: 1,
            default_n: DEFAULT_N_EVEN,
            uses: R,
            lhs: |p| {
                Ok(class_all(WeightSpec::with_sum(
                    ProductWeight::Plain(Rho::InvHookSquared),
                    SumWeight::Plain(Rho::ShiftedSquares(p.r)),
                )))
            },
            rhs: |p| {
                let e = exp_rat(int(1), int(0), p.n, p.dz)?;
                Ok(e.mul_term(&crate::series::QTerm::new(catalan_c(p.r), Monomial::ONE, p.r + 1)))
            },
        },
        IdentityRecord {
            id: "sc-okada-panova",
            description: "self-conjugate modular Okada-Panova formula",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: R,
            lhs: |p| {
                Ok(class_even(
                    p,
                    WeightSpec::with_sum(
                        ProductWeight::Plain(Rho::InvHook),
                        SumWeight::Plain(Rho::ShiftedSquares(p.r)),
                    ),
                ))
            },
            rhs: |p| {
                let s = even_with(p, |m| {
                    exp_rat(rat(1, 2 * ti(p)), int(0), m, p.dz)?.try_mul(&okada_panova_sum(p, m)?)
                })?;
                Ok(s.scale_rational(&int(ti(p))))
            },
        },
        IdentityRecord {
            id: "stanley-panova",
            description: "product of 1/h^2 times sum of h^(2k), as a generating function",
            rule: TRule::Unit,
            default_t: 1,
            default_n: DEFAULT_N_EVEN,
            uses: K,
            lhs: |p| {
                Ok(class_all(WeightSpec::with_sum(
                    ProductWeight::Plain(Rho::InvHookSquared),
                    SumWeight::Plain(power(2 * p.k as i64)),
                )))
            },
            rhs: |p| exp_rat(int(1), int(0), p.n, p.dz)?.try_mul(&stanley_panova_sum(p, p.n)?),
        },
        IdentityRecord {
            id: "sc-stanley-panova",
            description: "self-conjugate modular Stanley-Panova formula",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: K,
            lhs: |p| {
                Ok(class_even(
                    p,
                    WeightSpec::with_sum(
                        ProductWeight::Plain(Rho::InvHook),
                        SumWeight::Plain(power(2 * p.k as i64)),
                    ),
                ))
            },
            rhs: |p| {
                let s = even_with(p, |m| {
                    exp_rat(rat(1, 2 * ti(p)), int(0), m, p.dz)?.try_mul(&stanley_panova_sum(p, m)?)
                })?;
                Ok(s.scale_rational(&num_traits::pow(int(ti(p)), 2 * p.k + 1)))
            },
        },
        IdentityRecord {
            id: "petreolle",
            description: "signed Nekrasov-Okounkov over self-conjugate partitions, q replaced by -q",
            rule: TRule::Unit,
            default_t: 1,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| {
                Ok(Lhs::Enumerated(LhsSpec::new(
                    LhsClass::SelfConjugate,
                    p.t,
                    WeightSpec::product(ProductWeight::Signed(SignedRho::NoSigned(int(2)))),
                )))
            },
            rhs: |p| {
                // ((q^2;q^2)^{z+1} / (q;q))^{2z-1}
                let a = z_poly(&[int(-1), int(1), int(2)], p.dz);
                let b = z_poly(&[int(1), int(-2)], p.dz);
                let e2 = euler_step(2, p.n, p.dz).pow(&a)?;
                let e1 = euler(p.n, p.dz).pow(&b)?;
                Ok(e2.try_mul(&e1)?.negate_q())
            },
        },
        IdentityRecord {
            id: "sc-signed-master",
            description: "signed self-conjugate multiplication-addition theorem, random weights",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: SEED,
            lhs: |p| {
                let (tab, th) = master_record(MasterTheorem::Signed, p);
                Ok(Lhs::Enumerated(master_lhs(th, p.t, &tab)?))
            },
            rhs: |p| {
                let (tab, th) = master_record(MasterTheorem::Signed, p);
                master_rhs(th, p.t, p.n, p.dz, &tab)
            },
        },
        IdentityRecord {
            id: "sc-signed-no",
            description: "signed self-conjugate modular Nekrasov-Okounkov",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| {
                Ok(class_even(
                    p,
                    WeightSpec::product(ProductWeight::Signed(SignedRho::NoSigned(int(1)))),
                ))
            },
            rhs: |p| {
                let alpha = z_poly(&[rat(-ti(p), 2), int(0), rat(1, 2 * ti(p))], p.dz);
                even_with(p, |m| euler(m, p.dz).pow(&alpha))
            },
        },
        IdentityRecord {
            id: "no-odd-coeff",
            description: "coefficients of the signed Nekrasov-Okounkov expansion with minimal core",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| {
                Ok(Lhs::Enumerated(
                    LhsSpec::new(
                        LhsClass::SelfConjugate,
                        p.t,
                        WeightSpec::with_sum(
                            ProductWeight::Plain(Rho::InvHook),
                            SumWeight::Plain(Rho::Power {
                                exp: 2,
                                scale: rat(1, 2),
                            }),
                        ),
                    )
                    .with_x()
                    .with_b()
                    .with_filter(TermFilter::MinimalCore),
                ))
            },
            rhs: |p| Ok(no_odd_series(p.t, p.n, p.dz)),
        },
        IdentityRecord {
            id: "sc-core-gen",
            description: "self-conjugate t-cores by BG-rank",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| {
                Ok(Lhs::Enumerated(
                    LhsSpec::new(LhsClass::ScCores, p.t, WeightSpec::one()).with_b(),
                ))
            },
            rhs: |p| {
                let half = euler_step(2 * p.t, p.n, p.dz)
                    .powi(ti(p) / 2)?
                    .try_mul(&euler_step(4, p.n, p.dz).inverse()?)?;
                jacobi_sum(p.n, p.dz).try_mul(&half)
            },
        },
        IdentityRecord {
            id: "jacobi-triple",
            description: "Jacobi triple product in the BG-rank form",
            rule: TRule::Unit,
            default_t: 1,
            default_n: 40,
            uses: NONE,
            lhs: |p| Ok(Lhs::Series(jacobi_sum(p.n, p.dz))),
            rhs: |p| euler_step(4, p.n, p.dz).try_mul(&bg_product(p.n, p.dz)?),
        },
        IdentityRecord {
            id: "halfcore-gen",
            description: "generating function of t/2-cores",
            rule: TRule::Even,
            default_t: 4,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| {
                Ok(Lhs::Enumerated(LhsSpec::new(
                    LhsClass::Cores(p.t / 2),
                    p.t,
                    WeightSpec::one(),
                )))
            },
            rhs: |p| core_gen(p.t / 2, p.n, p.dz),
        },
        IdentityRecord {
            id: "bc-gen",
            description: "generating function of self-conjugate partitions with no diagonal hook divisible by t",
            rule: TRule::Odd,
            default_t: 3,
            default_n: DEFAULT_N_ODD,
            uses: NONE,
            lhs: |p| Ok(Lhs::Enumerated(LhsSpec::new(LhsClass::Bc, p.t, WeightSpec::one()))),
            rhs: |p| bc_gen(p.t, p.n, p.dz),
        },
        IdentityRecord {
            id: "bc-core-gen",
            description: "t-cores in the BC class",
            rule: TRule::Odd,
            default_t: 3,
            default_n: DEFAULT_N_ODD,
            uses: NONE,
            lhs: |p| {
                Ok(Lhs::Enumerated(LhsSpec::new(LhsClass::BcCores, p.t, WeightSpec::one())))
            },
            rhs: |p| p_odd(p.t, p.n, p.dz),
        },
        IdentityRecord {
            id: "bc-master",
            description: "BC-class multiplication-addition theorem, random signed weights",
            rule: TRule::Odd,
            default_t: 3,
            default_n: DEFAULT_N_ODD,
            uses: SEED,
            lhs: |p| {
                let (tab, th) = master_record(MasterTheorem::OddBc, p);
                Ok(Lhs::Enumerated(master_lhs(th, p.t, &tab)?))
            },
            rhs: |p| {
                let (tab, th) = master_record(MasterTheorem::OddBc, p);
                master_rhs(th, p.t, p.n, p.dz, &tab)
            },
        },
        IdentityRecord {
            id: "bc-bivariate-gen",
            description: "BC-class generating function in q and x",
            rule: TRule::Odd,
            default_t: 3,
            default_n: DEFAULT_N_ODD,
            uses: NONE,
            lhs: |p| Ok(class_odd(p, WeightSpec::one())),
            rhs: |p| odd_with(p, |m| euler(m, p.dz).powi(-((ti(p) - 1) / 2))),
        },
        IdentityRecord {
            id: "bc-hook-inv",
            description: "BC-class modular product of 1/h",
            rule: TRule::Odd,
            default_t: 3,
            default_n: DEFAULT_N_ODD,
            uses: NONE,
            lhs: |p| Ok(class_odd(p, product(Rho::InvHook))),
            rhs: |p| {
                let t = ti(p);
                odd_with(p, |m| exp_rat(rat(t - 1, 2 * t * t), int(0), m, p.dz))
            },
        },
        IdentityRecord {
            id: "bc-hook-sqrt",
            description: "BC-class modular product of 1/h^(1/2)",
            rule: TRule::Odd,
            default_t: 3,
            default_n: DEFAULT_N_ODD,
            uses: NONE,
            lhs: |p| Ok(class_odd(p, paired(Rho::InvHook))),
            rhs: |p| {
                let t = ti(p);
                odd_with(p, |m| exp_rat(rat(t - 1, 2 * t), rat(t - 1, 4 * t * t), m, p.dz))
            },
        },
        IdentityRecord {
            id: "bc-clps",
            description: "BC-class modular interpolation between the two hook formulas",
            rule: TRule::Odd,
            default_t: 3,
            default_n: DEFAULT_N_ODD,
            uses: NONE,
            lhs: |p| Ok(class_odd(p, paired(Rho::Clps))),
            rhs: |p| {
                let t = ti(p);
                odd_with(p, |m| {
                    exp_ring(
                        clps_ratio(p.t as u32, p.dz).scale(&rat(t - 1, 2 * t)),
                        RingElement::constant(rat(t - 1, 4 * t * t), p.dz),
                        m,
                        p.dz,
                    )
                })
            },
        },
        IdentityRecord {
            id: "bc-signed-no",
            description: "BC-class signed modular Nekrasov-Okounkov",
            rule: TRule::Odd,
            default_t: 3,
            default_n: DEFAULT_N_ODD,
            uses: NONE,
            lhs: |p| {
                Ok(class_odd(
                    p,
                    WeightSpec::product(ProductWeight::Signed(SignedRho::NoSigned(int(1)))),
                ))
            },
            rhs: |p| {
                let t = ti(p);
                let alpha = z_poly(&[rat(1 - t, 2), int(0), rat(t - 1, 2 * t * t)], p.dz);
                odd_with(p, |m| euler(m, p.dz).pow(&alpha))
            },
        },
        IdentityRecord {
            id: "bc-bbm",
            description: "BC-class modular sum of h^beta",
            rule: TRule::Odd,
            default_t: 3,
            default_n: DEFAULT_N_ODD,
            uses: BETA,
            lhs: |p| {
                Ok(class_odd(
                    p,
                    WeightSpec::with_sum(ProductWeight::One, SumWeight::Plain(power(p.beta))),
                ))
            },
            rhs: |p| {
                let t = ti(p);
                let s = odd_with(p, |m| {
                    let l = lambert(m, p.dz, |k| ipow(int(t * k as i64), p.beta + 1) * int(k as i64));
                    euler(m, p.dz).powi(-((t - 1) / 2))?.try_mul(&l)
                })?;
                Ok(s.scale_rational(&int(t - 1)))
            },
        },
        IdentityRecord {
            id: "bc-okada-panova",
            description: "BC-class modular Okada-Panova formula",
            rule: TRule::Odd,
            default_t: 3,
            default_n: DEFAULT_N_ODD,
            uses: R,
            lhs: |p| {
                Ok(class_odd(
                    p,
                    WeightSpec::with_sum(
                        ProductWeight::Plain(Rho::InvHook),
                        SumWeight::Plain(Rho::ShiftedSquares(p.r)),
                    ),
                ))
            },
            rhs: |p| {
                let t = ti(p);
                let s = odd_with(p, |m| {
                    exp_rat(rat(t - 1, 2 * t * t), int(0), m, p.dz)?.try_mul(&okada_panova_sum(p, m)?)
                })?;
                Ok(s.scale_rational(&int(t - 1)))
            },
        },
        IdentityRecord {
            id: "bc-stanley-panova",
            description: "BC-class modular Stanley-Panova formula",
            rule: TRule::Odd,
            default_t: 3,
            default_n: DEFAULT_N_ODD,
            uses: K,
            lhs: |p| {
                Ok(class_odd(
                    p,
                    WeightSpec::with_sum(
                        ProductWeight::Plain(Rho::InvHook),
                        SumWeight::Plain(power(2 * p.k as i64)),
                    ),
                ))
            },
            rhs: |p| {
                let t = ti(p);
                let s = odd_with(p, |m| {
                    exp_rat(rat(t - 1, 2 * t * t), int(0), m, p.dz)?.try_mul(&stanley_panova_sum(p, m)?)
                })?;
                Ok(s.scale_rational(&(int(t - 1) * num_traits::pow(int(t), 2 * p.k))))
            },
        },
        IdentityRecord {
            id: "sc-core-count",
            description: "self-conjugate t-cores by BG-rank against direct t/2-core counts",
            rule: TRule::Even,
            default_t: 2,
            default_n: DEFAULT_N_EVEN,
            uses: NONE,
            lhs: |p| {
                Ok(Lhs::Enumerated(
                    LhsSpec::new(LhsClass::ScCores, p.t, WeightSpec::one()).with_b(),
                ))
            },
            rhs: |p| sc_core_count_series(p.t, p.n, p.dz),
        },
    ]
}

/// The record with the given id.
pub fn lookup(id: &str) -> Result<IdentityRecord> {
    registry()
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Ids in registry order.
pub fn ids() -> Vec<&'static str> {
    registry().iter().map(|r| r.id).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut v = ids();
        let n = v.len();
        v.sort_unstable();
        v.dedup();
        assert_eq!(v.len(), n);
        assert_eq!(n, 39);
    }

    #[test]
    fn okada_panova_bound() {
        assert_eq!(okada_panova_lower(1, 2), 0);
        assert_eq!(okada_panova_lower(3, 2), 1);
        assert_eq!(okada_panova_lower(5, 2), 2);
        assert_eq!(okada_panova_lower(3, 3), 1);
    }

    #[test]
    fn jacobi_exponent_range() {
        assert_eq!(jacobi_exponents(3), vec![-1, 0, 1]);
        assert_eq!(jacobi_exponents(6), vec![-1, 0, 1, 2]);
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(
            lookup("no-such-id"),
            Err(Error::UnknownIdentity(_))
        ));
    }
}
