//! Left-hand sides: weighted sums over a class of partitions, built by
//! exhaustive enumeration.

use crate::enumerate::{enumerate_up_to, PartitionClass};
use crate::error::{Error, Result};
use crate::littlewood::is_t_core;
use crate::par::{self, Exec};
use crate::partition::Partition;
use crate::series::{Monomial, QSeries, Rational, RingElement};
use num_traits::One;

use super::weights::{divisible_boxes, WeightSpec};

/// Which partitions the sum runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LhsClass {
    All,
    SelfConjugate,
    /// Self-conjugate, no diagonal hook divisible by the odd `t`.
    Bc,
    /// Self-conjugate `t`-cores.
    ScCores,
    /// `t`-cores in the BC class.
    BcCores,
    /// All `m`-cores, for the given `m`.
    Cores(usize),
}

impl LhsClass {
    pub fn label(self) -> String {
        match self {
            LhsClass::All => "ALL".into(),
            LhsClass::SelfConjugate => "SC".into(),
            LhsClass::Bc => "BC(t)".into(),
            LhsClass::ScCores => "SC t-cores".into(),
            LhsClass::BcCores => "BC(t) t-cores".into(),
            LhsClass::Cores(m) => format!("{m}-cores"),
        }
    }
}

/// Restricts which partitions contribute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermFilter {
    None,
    /// `|λ| = t·|H_t(λ)| + j(2j - 1)` with `j = BG(λ)`: the core is the
    /// smallest self-conjugate `t`-core of its BG-rank.
    MinimalCore,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LhsSpec {
    pub class: LhsClass,
    pub t: usize,
    pub use_x: bool,
    pub use_b: bool,
    pub weight: WeightSpec,
    pub filter: TermFilter,
}

impl LhsSpec {
    pub fn new(class: LhsClass, t: usize, weight: WeightSpec) -> Self {
        LhsSpec {
            class,
            t,
            use_x: false,
            use_b: false,
            weight,
            filter: TermFilter::None,
        }
    }

    pub fn with_x(mut self) -> Self {
        self.use_x = true;
        self
    }

    pub fn with_b(mut self) -> Self {
        self.use_b = true;
        self
    }

    pub fn with_filter(mut self, f: TermFilter) -> Self {
        self.filter = f;
        self
    }

    fn check(&self) -> Result<()> {
        if self.t == 0 {
            return Err(Error::InvalidParameter("t must be positive".into()));
        }
        if self.weight.is_paired() {
            let legal = match self.class {
                LhsClass::SelfConjugate | LhsClass::ScCores => self.t.is_multiple_of(2),
                LhsClass::Bc | LhsClass::BcCores => self.t % 2 == 1,
                _ => false,
            };
            if !legal {
                return Err(Error::Parity(format!(
                    "paired product needs SC with even t or BC with odd t; got {} with t = {}",
                    self.class.label(),
                    self.t
                )));
            }
        }
        Ok(())
    }

    /// The partitions of size at most `n` in the class.
    pub fn members(&self, n: usize) -> Result<Vec<Partition>> {
        let t = self.t;
        Ok(match self.class {
            LhsClass::All => enumerate_up_to(n, PartitionClass::All)?,
            LhsClass::SelfConjugate => enumerate_up_to(n, PartitionClass::SelfConjugate)?,
            LhsClass::Bc => enumerate_up_to(n, PartitionClass::Bc(t))?,
            LhsClass::ScCores => enumerate_up_to(n, PartitionClass::SelfConjugate)?
                .into_iter()
                .filter(|p| is_t_core(p, t))
                .collect(),
            LhsClass::BcCores => enumerate_up_to(n, PartitionClass::Bc(t))?
                .into_iter()
                .filter(|p| is_t_core(p, t))
                .collect(),
            LhsClass::Cores(m) => enumerate_up_to(n, PartitionClass::All)?
                .into_iter()
                .filter(|p| is_t_core(p, m))
                .collect(),
        })
    }

    /// The monomial-weighted term of one partition, or `None` if filtered.
    pub fn term(&self, lambda: &Partition, cap: u32) -> Result<Option<RingElement>> {
        let boxes = divisible_boxes(&lambda.cell_hooks(), self.t);
        let bg = lambda.bg_rank();
        if self.filter == TermFilter::MinimalCore
            && lambda.size() as i64 != (self.t * boxes.len()) as i64 + bg * (2 * bg - 1)
        {
            return Ok(None);
        }
        let w = self.weight.evaluate(&boxes, cap)?;
        let mono = Monomial {
            b: if self.use_b { bg } else { 0 },
            x: if self.use_x { boxes.len() as u32 } else { 0 },
            z: 0,
        };
        Ok(Some(w.mul_term(&Rational::one(), mono)))
    }
}

/// `Σ_λ q^{|λ|} x^{|H_t|} b^{BG} · weight(λ)` over the class, `|λ| ≤ n`.
pub fn lhs_series(spec: &LhsSpec, n: usize, cap: u32) -> Result<QSeries> {
    lhs_series_with(spec, n, cap, Exec::default())
}

pub fn lhs_series_with(spec: &LhsSpec, n: usize, cap: u32, exec: Exec) -> Result<QSeries> {
    spec.check()?;
    let members = spec.members(n)?;
    let terms = par::map_collect(exec, &members, |p| spec.term(p, cap));
    let mut s = QSeries::zero(n, cap);
    for (p, term) in members.iter().zip(terms) {
        if let Some(w) = term? {
            s.coeff_mut(p.size()).add_assign(&w);
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::weights::{ProductWeight, Rho};
    use crate::series::rat;

    #[test]
    fn trivariate_small() {
        let spec = LhsSpec::new(LhsClass::SelfConjugate, 2, WeightSpec::one())
            .with_x()
            .with_b();
        let s = lhs_series(&spec, 4, 6).unwrap();
        assert_eq!(s.to_string(), "1 + b*q + b^-1*q^3 + x^2*q^4 + O(q^5)");
    }

    #[test]
    fn empty_only_at_order_zero() {
        let spec = LhsSpec::new(
            LhsClass::All,
            1,
            WeightSpec::product(ProductWeight::Plain(Rho::InvHook)),
        );
        assert_eq!(lhs_series(&spec, 0, 6).unwrap(), QSeries::one(0, 6));
    }

    #[test]
    fn hook_inverse_coefficient() {
        let spec = LhsSpec::new(
            LhsClass::SelfConjugate,
            2,
            WeightSpec::product(ProductWeight::Plain(Rho::InvHook)),
        )
        .with_x()
        .with_b();
        let s = lhs_series(&spec, 4, 6).unwrap();
        assert_eq!(s.coeff(4).coeff(&Monomial::x(2)), rat(1, 4));
    }

    #[test]
    fn paired_legality() {
        let w = WeightSpec::product(ProductWeight::Paired(Rho::InvHook));
        assert!(lhs_series(&LhsSpec::new(LhsClass::All, 2, w.clone()), 4, 6).is_err());
        assert!(lhs_series(&LhsSpec::new(LhsClass::SelfConjugate, 3, w.clone()), 4, 6).is_err());
        assert!(lhs_series(&LhsSpec::new(LhsClass::Bc, 3, w), 4, 6).is_ok());
    }

    #[test]
    fn strategies_agree() {
        let spec = LhsSpec::new(
            LhsClass::All,
            2,
            WeightSpec::product(ProductWeight::Plain(Rho::NekrasovOkounkov)),
        )
        .with_x();
        assert_eq!(
            lhs_series_with(&spec, 12, 6, Exec::Sequential).unwrap(),
            lhs_series_with(&spec, 12, 6, Exec::Parallel).unwrap()
        );
    }
}
