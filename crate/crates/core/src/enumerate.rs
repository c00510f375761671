//! Enumeration of partition classes.
//!
//! Every class is listed in descending lexicographic order of the parts, so
//! listings are reproducible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Which partitions of `n` to list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartitionClass {
    All,
    SelfConjugate,
    /// Self-conjugate with the given BG-rank.
    ScBg(i64),
    /// Self-conjugate with no diagonal hook divisible by the odd modulus.
    Bc(usize),
}

/// All partitions of `n`, in descending lexicographic order.
#[derive(Clone, Debug)]
pub struct AllPartitions {
    current: Option<Vec<usize>>,
}

impl AllPartitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        AllPartitions {
            current: Some(first),
        }
    }
}

impl Iterator for AllPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition::from_parts_unchecked(current.clone());

        // rightmost part greater than one
        if let Some(i) = current.iter().rposition(|&p| p > 1) {
            let mut next = current[..i].to_vec();
            let v = current[i] - 1;
            let mut rem: usize = current[i..].iter().sum::<usize>() - v;
            next.push(v);
            while rem > 0 {
                let take = rem.min(v);
                next.push(take);
                rem -= take;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Sets of distinct odd integers summing to `n`, each strictly decreasing.
pub fn distinct_odd_parts(n: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(acc.clone());
            return;
        }
        let mut part = if max % 2 == 1 {
            max
        } else {
            max.saturating_sub(1)
        };
        part = part.min(if rem % 2 == 1 {
            rem
        } else {
            rem.saturating_sub(1)
        });
        while part >= 1 {
            // remaining odd parts below `part` sum to at most ((part-1)/2)^2
            let below = (part - 1) / 2;
            if part + below * below < rem {
                break;
            }
            if part <= rem {
                acc.push(part);
                rec(rem - part, part.saturating_sub(2), acc, out);
                acc.pop();
            }
            if part < 2 {
                break;
            }
            part -= 2;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Self-conjugate partitions of `n`, built from their diagonal hooks.
pub fn self_conjugate(n: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = distinct_odd_parts(n)
        .iter()
        .map(|d| Partition::from_diagonal_hooks(d).expect("distinct odd parts"))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Lists the partitions of `n` in `class`.
pub fn enumerate(n: usize, class: PartitionClass) -> Result<Vec<Partition>> {
    Ok(match class {
        PartitionClass::All => AllPartitions::new(n).collect(),
        PartitionClass::SelfConjugate => self_conjugate(n),
        PartitionClass::ScBg(j) => self_conjugate(n)
            .into_iter()
            .filter(|p| p.bg_rank() == j)
            .collect(),
        PartitionClass::Bc(t) => {
            if t < 3 || t % 2 == 0 {
                return Err(Error::Parity(format!("BC class needs odd t >= 3, got {t}")));
            }
            self_conjugate(n)
                .into_iter()
                .filter(|p| p.diagonal_hooks().iter().all(|h| h % t != 0))
                .collect()
        }
    })
}

/// Partitions of every size `0..=n_max` in `class`, sizes ascending.
pub fn enumerate_up_to(n_max: usize, class: PartitionClass) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        out.extend(enumerate(n, class)?);
    }
    Ok(out)
}
