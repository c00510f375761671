//! Finite coefficient identities: a sum over the partitions of one size on
//! one side, an explicit rational on the other.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::enumerate::{enumerate, PartitionClass};
use crate::error::{Error, Result};
use crate::littlewood::is_t_core;
use crate::partition::Partition;
use crate::series::{catalan_c, central_factorial, fmt_rational, int, Rational};

use super::weights::divisible_boxes;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CoeffFamily {
    /// `Σ ∏_{H_t} 1/h = 1/(n! 2^n t^n)`.
    HookInv,
    /// `Σ ∏_{H_t} h^{-1/2} = 2^{-n} Σ_k 1/(k! (n-2k)! t^k)`.
    HookSqrt,
    /// `Σ ∏_{H_t} 1/h · Σ_{H_t} h^2/2 = (t + 3n - 3)/(2^n t^{n-1} (n-1)!)`.
    NoOdd,
    /// `n! Σ_{λ⊢n} ∏ 1/h^2 Σ h^{2k} = Σ_i T(k+1, i+1) C(i) ∏_{j=0}^{i} (n - j)`.
    StanleyPanova,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffParams {
    pub n: usize,
    pub t: usize,
    pub j: i64,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoeffReport {
    pub family: CoeffFamily,
    pub params: CoeffParams,
    pub terms: usize,
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
    pub holds: bool,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, i| acc * int(i))
}

fn pow(base: i64, e: usize) -> Rational {
    num_traits::pow(int(base), e)
}

/// Self-conjugate λ of size `2tn + j(2j - 1)` with `BG(λ) = j` and
/// `|H_t(λ)| = 2n`.
fn sc_members(n: usize, t: usize, j: i64) -> Result<Vec<Partition>> {
    let size = 2 * t * n + (j * (2 * j - 1)) as usize;
    Ok(enumerate(size, PartitionClass::SelfConjugate)?
        .into_iter()
        .filter(|p| p.bg_rank() == j && p.count_hooks_divisible(t) == 2 * n)
        .collect())
}

fn check_even(t: usize) -> Result<()> {
    if t < 2 || t % 2 == 1 {
        return Err(Error::Parity(format!(
            "this family needs even t, got t = {t}"
        )));
    }
    Ok(())
}

/// Exact check of one coefficient identity.
pub fn coefficient_identity_check(family: CoeffFamily, p: CoeffParams) -> Result<CoeffReport> {
    let (t, n) = (p.t, p.n);
    let (terms, lhs, rhs) = match family {
        CoeffFamily::HookInv => {
            check_even(t)?;
            let members = sc_members(n, t, p.j)?;
            let lhs = members.iter().fold(Rational::zero(), |acc, lam| {
                let prod = divisible_boxes(&lam.cell_hooks(), t)
                    .iter()
                    .fold(Rational::one(), |a, (_, h)| a / int(*h as i64));
                acc + prod
            });
            let rhs = (factorial(n) * pow(2, n) * pow(t as i64, n)).recip();
            (members.len(), lhs, rhs)
        }
        CoeffFamily::HookSqrt => {
            check_even(t)?;
            let members = sc_members(n, t, p.j)?;
            // the boxes of H_t pair up across the diagonal, so the square
            // root of the full product is the product above the diagonal
            let lhs = members.iter().fold(Rational::zero(), |acc, lam| {
                let prod = divisible_boxes(&lam.cell_hooks(), t)
                    .iter()
                    .filter(|(u, _)| u.col > u.row)
                    .fold(Rational::one(), |a, (_, h)| a / int(*h as i64));
                acc + prod
            });
            let rhs = (0..=n / 2).fold(Rational::zero(), |acc, k| {
                acc + (factorial(k) * factorial(n - 2 * k) * pow(t as i64, k)).recip()
            }) / pow(2, n);
            (members.len(), lhs, rhs)
        }
        CoeffFamily::NoOdd => {
            check_even(t)?;
            if n == 0 {
                return Err(Error::InvalidParameter("n must be positive".into()));
            }
            let members = sc_members(n, t, p.j)?;
            let lhs = members.iter().fold(Rational::zero(), |acc, lam| {
                let boxes = divisible_boxes(&lam.cell_hooks(), t);
                let prod = boxes
                    .iter()
                    .fold(Rational::one(), |a, (_, h)| a / int(*h as i64));
                let sum = boxes.iter().fold(Rational::zero(), |a, (_, h)| {
                    a + int((h * h) as i64) / int(2)
                });
                acc + prod * sum
            });
            let ti = t as i64;
            let rhs = int(ti + 3 * n as i64 - 3) / (pow(2, n) * pow(ti, n - 1) * factorial(n - 1));
            (members.len(), lhs, rhs)
        }
        CoeffFamily::StanleyPanova => {
            if p.k == 0 {
                return Err(Error::InvalidParameter("k must be positive".into()));
            }
            let members = enumerate(n, PartitionClass::All)?;
            let sum = members.iter().fold(Rational::zero(), |acc, lam| {
                let hooks = lam.cell_hooks();
                let prod = hooks
                    .iter()
                    .fold(Rational::one(), |a, (_, h)| a / int((h * h) as i64));
                let s = hooks
                    .iter()
                    .fold(Rational::zero(), |a, (_, h)| a + pow(*h as i64, 2 * p.k));
                acc + prod * s
            });
            let lhs = factorial(n) * sum;
            let rhs = (0..=p.k).fold(Rational::zero(), |acc, i| {
                let falling = (0..=i).fold(Rational::one(), |a, j| a * int(n as i64 - j as i64));
                acc + Rational::from_integer(central_factorial(p.k + 1, i + 1))
                    * catalan_c(i)
                    * falling
            });
            (members.len(), lhs, rhs)
        }
    };
    Ok(CoeffReport {
        family,
        params: p,
        terms,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreCountReport {
    pub t: usize,
    pub n: usize,
    pub j: i64,
    /// Self-conjugate `t`-cores of `n` with BG-rank `j`.
    pub sc_cores: usize,
    /// `t/2`-cores of `(n - j(2j-1))/4`, or 0 when that is not an integer.
    pub half_cores: usize,
    pub holds: bool,
}

/// Counts self-conjugate `t`-cores of `n` with BG-rank `j` against
/// `t/2`-cores of `(n - j(2j - 1))/4`.
pub fn sc_core_count_check(t: usize, n: usize, j: i64) -> Result<CoreCountReport> {
    check_even(t)?;
    let sc_cores = enumerate(n, PartitionClass::SelfConjugate)?
        .iter()
        .filter(|p| p.bg_rank() == j && is_t_core(p, t))
        .count();
    let shift = j * (2 * j - 1);
    let rest = n as i64 - shift;
    let half_cores = if rest >= 0 && rest % 4 == 0 {
        enumerate((rest / 4) as usize, PartitionClass::All)?
            .iter()
            .filter(|p| is_t_core(p, t / 2))
            .count()
    } else {
        0
    };
    Ok(CoreCountReport {
        t,
        n,
        j,
        sc_cores,
        half_cores,
        holds: sc_cores == half_cores,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn params(n: usize, t: usize, j: i64, k: usize) -> CoeffParams {
        CoeffParams { n, t, j, k }
    }

    #[test]
    fn hook_inv_base_case() {
        let r = coefficient_identity_check(CoeffFamily::HookInv, params(1, 2, 0, 0)).unwrap();
        assert_eq!(r.lhs, rat(1, 4));
        assert!(r.holds);
    }

    #[test]
    fn no_odd_base_case() {
        let r = coefficient_identity_check(CoeffFamily::NoOdd, params(1, 2, 0, 0)).unwrap();
        assert_eq!(r.lhs, int(1));
        assert!(r.holds);
    }

    #[test]
    fn stanley_panova_n1() {
        for k in 1..=3 {
            let r =
                coefficient_identity_check(CoeffFamily::StanleyPanova, params(1, 1, 0, k)).unwrap();
            assert_eq!(r.rhs, int(1));
            assert!(r.holds);
        }
    }

    #[test]
    fn core_counts_small() {
        assert!(sc_core_count_check(2, 1, 1).unwrap().holds);
        let r = sc_core_count_check(2, 2, 1).unwrap();
        assert_eq!((r.sc_cores, r.half_cores), (0, 0));
        assert!(sc_core_count_check(4, 6, -1).unwrap().holds);
        assert!(sc_core_count_check(3, 6, 0).is_err());
    }
}
