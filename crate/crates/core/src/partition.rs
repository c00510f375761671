//! Integer partitions and the per-partition statistics: conjugation, Durfee
//! square, hook lengths, BG-rank, diagonal hooks and the box signs.
//!
//! Cells are 1-indexed `(row, col)` in matrix convention. Multisets of hook
//! lengths are kept as sorted vectors, so multiset equality is `==`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonincreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Ferrers diagram, 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// The mirror image across the main diagonal.
    pub fn transpose(self) -> Self {
        Cell {
            row: self.col,
            col: self.row,
        }
    }
}

/// Sign attached to a box: `Minus` strictly below the main diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Hook-length multiset `H(λ)` and its sub-multiset of multiples of `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookStats {
    pub t: usize,
    pub full: Vec<usize>,
    pub mod_t: Vec<usize>,
}

impl Partition {
    /// Validates `parts` (nonincreasing, positive after stripping trailing zeros).
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition {
                    index: index + 1,
                    reason: format!("part {} exceeds preceding part {}", w[1], w[0]),
                });
            }
        }
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition {
                index,
                reason: "parts must be positive".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Signed-integer entry point; rejects negative entries by index.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for (index, &p) in parts.iter().enumerate() {
            if p < 0 {
                return Err(Error::InvalidPartition {
                    index,
                    reason: format!("negative part {p}"),
                });
            }
            out.push(p as usize);
        }
        Partition::new(out)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-indexed; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, u: Cell) -> bool {
        u.row >= 1 && u.col >= 1 && u.col <= self.part(u.row)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Side of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    fn check_cell(&self, u: Cell) -> Result<()> {
        if self.contains(u) {
            Ok(())
        } else {
            Err(Error::CellOutside {
                row: u.row,
                col: u.col,
            })
        }
    }

    pub fn hook_length(&self, u: Cell) -> Result<usize> {
        self.check_cell(u)?;
        Ok(self.hook_unchecked(&self.conjugate(), u))
    }

    fn hook_unchecked(&self, conj: &Partition, u: Cell) -> usize {
        let arm = self.part(u.row) - u.col;
        let leg = conj.part(u.col) - u.row;
        arm + leg + 1
    }

    /// Every cell paired with its hook length, in row-major order.
    pub fn cell_hooks(&self) -> Vec<(Cell, usize)> {
        let conj = self.conjugate();
        self.cells()
            .map(|u| (u, self.hook_unchecked(&conj, u)))
            .collect()
    }

    pub fn hook_stats(&self, t: usize) -> HookStats {
        assert!(t >= 1, "hook_stats: t must be positive");
        let mut full: Vec<usize> = self.cell_hooks().into_iter().map(|(_, h)| h).collect();
        full.sort_unstable();
        let mod_t = full.iter().copied().filter(|h| h % t == 0).collect();
        HookStats { t, full, mod_t }
    }

    /// Number of hooks divisible by `t`, i.e. `|H_t(λ)|`.
    pub fn count_hooks_divisible(&self, t: usize) -> usize {
        self.cell_hooks().iter().filter(|(_, h)| h % t == 0).count()
    }

    /// Checkerboard sum with `+1` at `(1,1)`.
    pub fn bg_rank(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                // a row starting with +1 contributes 1 if odd length, else 0
                let row_sum = (len % 2) as i64;
                if r % 2 == 0 {
                    row_sum
                } else {
                    -row_sum
                }
            })
            .sum()
    }

    pub fn diagonal_hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        (1..=self.durfee())
            .map(|i| self.hook_unchecked(&conj, Cell::new(i, i)))
            .collect()
    }

    /// Counts of diagonal hooks congruent to 1 and to 3 modulo 4.
    pub fn d1_d3_split(&self) -> Result<(usize, usize)> {
        if !self.is_self_conjugate() {
            return Err(Error::NotSelfConjugate(self.to_string()));
        }
        let d = self.diagonal_hooks();
        let r = d.iter().filter(|&&h| h % 4 == 1).count();
        let s = d.iter().filter(|&&h| h % 4 == 3).count();
        Ok((r, s))
    }

    /// The self-conjugate partition with the given diagonal hooks.
    pub fn from_diagonal_hooks(hooks: &[usize]) -> Result<Partition> {
        for (idx, &h) in hooks.iter().enumerate() {
            if h % 2 == 0 {
                return Err(Error::InvalidDiagonalHooks(format!(
                    "entry {h} at index {idx} is not odd"
                )));
            }
            if idx > 0 && hooks[idx - 1] <= h {
                return Err(Error::InvalidDiagonalHooks(format!(
                    "entry {h} at index {idx} does not strictly decrease"
                )));
            }
        }
        let d = hooks.len();
        let mut parts: Vec<usize> = hooks
            .iter()
            .enumerate()
            .map(|(i, &h)| i + 1 + (h - 1) / 2)
            .collect();
        let first = parts.first().copied().unwrap_or(0);
        for row in d + 1..=first {
            let len = parts[..d].iter().filter(|&&p| p >= row).count();
            if len == 0 {
                break;
            }
            parts.push(len);
        }
        Ok(Partition::from_parts_unchecked(parts))
    }

    pub fn epsilon(&self, u: Cell) -> Result<Sign> {
        self.check_cell(u)?;
        Ok(cell_sign(u))
    }

    /// `(-1)^d` with `d` the Durfee size.
    pub fn delta_sign(&self) -> i64 {
        if self.durfee().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of standard Young tableaux via the hook-length formula.
    pub fn frt_syt_count(&self) -> Result<BigUint> {
        if self.is_empty() {
            return Err(Error::InvalidParameter(
                "hook-length formula needs a nonempty partition".into(),
            ));
        }
        let numerator: BigUint = (1..=self.size()).map(BigUint::from).product();
        let denominator: BigUint = self
            .cell_hooks()
            .into_iter()
            .map(|(_, h)| BigUint::from(h))
            .product();
        let (quot, rem) = numerator.div_rem(&denominator);
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!(
                "{}! / {} for {}",
                self.size(),
                denominator,
                self
            )));
        }
        debug_assert!(quot >= BigUint::one());
        Ok(quot)
    }
}

/// `ε_u` from position alone.
pub fn cell_sign(u: Cell) -> Sign {
    if u.row > u.col {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for (index, tok) in s.split(',').enumerate() {
            let tok = tok.trim();
            let value: i64 = tok.parse().map_err(|_| Error::InvalidPartition {
                index,
                reason: format!("`{tok}` is not an integer"),
            })?;
            if value <= 0 {
                return Err(Error::InvalidPartition {
                    index,
                    reason: format!("part {value} is not positive"),
                });
            }
            parts.push(value as usize);
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn make_partition_examples() {
        let lam = p(&[4, 3, 3, 2]);
        assert_eq!(lam.size(), 12);
        assert_eq!(lam.length(), 4);
        assert_eq!(p(&[]).size(), 0);
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        match Partition::new(vec![2, 3]) {
            Err(Error::InvalidPartition { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected validation error, got {other:?}"),
        }
        assert!(Partition::from_signed(&[3, -1]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn text_format() {
        assert_eq!("4,3,3,2".parse::<Partition>().unwrap(), p(&[4, 3, 3, 2]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 3, 3, 2]).to_string(), "4,3,3,2");
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 3, 2]).conjugate(), p(&[4, 4, 3, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[5, 5, 3, 2]).conjugate(), p(&[4, 4, 3, 2, 2]));
    }

    #[test]
    fn self_conjugate_examples() {
        assert!(p(&[2, 1]).is_self_conjugate());
        assert!(!p(&[4, 3, 3, 2]).is_self_conjugate());
        assert!(p(&[]).is_self_conjugate());
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(p(&[4, 3, 3, 2]).durfee(), 3);
        assert_eq!(p(&[]).durfee(), 0);
        assert_eq!(p(&[5, 5, 3, 2]).durfee(), 3);
    }

    #[test]
    fn hook_length_examples() {
        let lam = p(&[4, 3, 3, 2]);
        assert_eq!(lam.hook_length(Cell::new(1, 1)).unwrap(), 7);
        assert_eq!(lam.hook_length(Cell::new(1, 2)).unwrap(), 6);
        assert_eq!(p(&[1]).hook_length(Cell::new(1, 1)).unwrap(), 1);
        assert_eq!(
            lam.hook_length(Cell::new(4, 3)),
            Err(Error::CellOutside { row: 4, col: 3 })
        );
    }

    #[test]
    fn hook_stats_examples() {
        let hs = p(&[4, 3, 3, 2]).hook_stats(3);
        let mut full = vec![2, 1, 4, 3, 1, 5, 4, 2, 7, 6, 4, 1];
        full.sort_unstable();
        assert_eq!(hs.full, full);
        assert_eq!(hs.mod_t, vec![3, 6]);
        let empty = p(&[]).hook_stats(5);
        assert!(empty.full.is_empty() && empty.mod_t.is_empty());
        let hs = p(&[2, 2]).hook_stats(2);
        assert_eq!(hs.full, vec![1, 2, 2, 3]);
        assert_eq!(hs.mod_t, vec![2, 2]);
    }

    #[test]
    fn bg_rank_examples() {
        assert_eq!(p(&[4, 3, 3, 2]).bg_rank(), 0);
        assert_eq!(p(&[]).bg_rank(), 0);
        assert_eq!(p(&[1]).bg_rank(), 1);
        // checkerboard sum directly
        for lam in [p(&[5, 4, 4, 1]), p(&[3, 3, 3]), p(&[6, 1, 1])] {
            let direct: i64 = lam
                .cells()
                .map(|u| if (u.row + u.col) % 2 == 0 { 1 } else { -1 })
                .sum();
            assert_eq!(lam.bg_rank(), direct);
        }
    }

    #[test]
    fn diagonal_hook_examples() {
        assert_eq!(p(&[2, 1]).diagonal_hooks(), vec![3]);
        assert_eq!(p(&[2, 2]).diagonal_hooks(), vec![3, 1]);
        assert!(p(&[]).diagonal_hooks().is_empty());
    }

    #[test]
    fn d1_d3_examples() {
        assert_eq!(p(&[2, 1]).d1_d3_split().unwrap(), (0, 1));
        assert_eq!(p(&[2, 2]).d1_d3_split().unwrap(), (1, 1));
        assert_eq!(p(&[]).d1_d3_split().unwrap(), (0, 0));
        assert!(p(&[2]).d1_d3_split().is_err());
    }

    #[test]
    fn from_diagonal_hooks_examples() {
        assert_eq!(Partition::from_diagonal_hooks(&[3]).unwrap(), p(&[2, 1]));
        assert_eq!(Partition::from_diagonal_hooks(&[]).unwrap(), p(&[]));
        assert_eq!(Partition::from_diagonal_hooks(&[3, 1]).unwrap(), p(&[2, 2]));
        assert!(Partition::from_diagonal_hooks(&[4]).is_err());
        assert!(Partition::from_diagonal_hooks(&[3, 3]).is_err());
        assert!(Partition::from_diagonal_hooks(&[1, 3]).is_err());
    }

    #[test]
    fn epsilon_examples() {
        let lam = p(&[2, 1]);
        assert_eq!(lam.epsilon(Cell::new(2, 1)).unwrap(), Sign::Minus);
        assert_eq!(lam.epsilon(Cell::new(1, 1)).unwrap(), Sign::Plus);
        assert_eq!(lam.epsilon(Cell::new(1, 2)).unwrap(), Sign::Plus);
        assert!(lam.epsilon(Cell::new(2, 2)).is_err());
    }

    #[test]
    fn delta_sign_examples() {
        assert_eq!(p(&[2, 1]).delta_sign(), -1);
        assert_eq!(p(&[]).delta_sign(), 1);
        assert_eq!(p(&[2, 2]).delta_sign(), 1);
    }

    #[test]
    fn frt_examples() {
        assert_eq!(p(&[2, 1]).frt_syt_count().unwrap(), BigUint::from(2u32));
        assert_eq!(p(&[1]).frt_syt_count().unwrap(), BigUint::from(1u32));
        assert_eq!(
            p(&[4, 3, 3, 2]).frt_syt_count().unwrap(),
            BigUint::from(2970u32)
        );
        assert!(p(&[]).frt_syt_count().is_err());
    }

    #[test]
    fn serde_round_trip_rejects_invalid() {
        let lam = p(&[3, 1]);
        let json = serde_json::to_string(&lam).unwrap();
        assert_eq!(json, "[3,1]");
        assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), lam);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
