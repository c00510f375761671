//! Boundary words: the 0/1 encoding of the rim of a Ferrers diagram, read
//! from south-west to north-east (0 = vertical step, 1 = horizontal step).
//!
//! A word is stored as a finite window plus the index of its first letter.
//! Everything left of the window is 0 and everything right of it is 1. The
//! index origin is the median: the number of 1s at negative indices equals
//! the number of 0s at nonnegative indices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryWord {
    window: Vec<u8>,
    offset: i64,
}

/// Indices `(i, j)` of a 1 and a later 0 in a boundary word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexPair {
    pub i: i64,
    pub j: i64,
}

impl IndexPair {
    pub fn new(i: i64, j: i64) -> Self {
        IndexPair { i, j }
    }

    /// Hook length of the associated cell.
    pub fn span(&self) -> usize {
        (self.j - self.i) as usize
    }

    /// True iff the associated cell lies strictly above the main diagonal.
    pub fn is_above_diagonal(&self) -> bool {
        self.i.abs() <= self.j.abs()
    }
}

/// Position `p` in `letters` where (#1s before p) == (#0s from p on).
/// Each step right raises the difference by one, so `p` is the zero count.
fn median_position(letters: &[u8]) -> usize {
    letters.iter().filter(|&&c| c == 0).count()
}

impl BoundaryWord {
    /// Canonical word of `lambda`.
    pub fn encode(lambda: &Partition) -> Self {
        let parts = lambda.parts();
        let mut window = Vec::with_capacity(parts.first().copied().unwrap_or(0) + parts.len());
        for r in (0..parts.len()).rev() {
            let next = if r + 1 < parts.len() { parts[r + 1] } else { 0 };
            window.extend(std::iter::repeat_n(1u8, parts[r] - next));
            window.push(0);
        }
        let p = median_position(&window);
        BoundaryWord {
            window,
            offset: -(p as i64),
        }
    }

    /// Builds a word from letters starting at index `start`, trimming the
    /// window and checking that index 0 is the median.
    pub fn from_letters(letters: &[u8], start: i64) -> Result<Self> {
        let w = Self::trimmed(letters, start)?;
        if !w.is_canonical() {
            return Err(Error::NonCanonicalWord(format!(
                "median condition fails for window {} at offset {}",
                w.window_string(),
                w.offset
            )));
        }
        Ok(w)
    }

    /// Re-indexes a 0/1 sequence so that its median sits at index 0.
    /// Returns the word and the shift `s` with `new_index = old_index - s`.
    pub fn canonicalize(letters: &[u8], start: i64) -> Result<(Self, i64)> {
        let w = Self::trimmed(letters, start)?;
        let p = median_position(&w.window) as i64;
        let shift = w.offset + p;
        Ok((
            BoundaryWord {
                window: w.window,
                offset: -p,
            },
            shift,
        ))
    }

    fn trimmed(letters: &[u8], start: i64) -> Result<Self> {
        if let Some(pos) = letters.iter().position(|&c| c > 1) {
            return Err(Error::NonCanonicalWord(format!(
                "letter {} at position {pos} is not 0 or 1",
                letters[pos]
            )));
        }
        let lo = letters.iter().position(|&c| c == 1);
        let hi = letters.iter().rposition(|&c| c == 0);
        match (lo, hi) {
            (Some(lo), Some(hi)) if lo < hi => Ok(BoundaryWord {
                window: letters[lo..=hi].to_vec(),
                offset: start + lo as i64,
            }),
            _ => {
                // letters are 0...01...1: the empty window sits where the 1s begin
                let first_one = letters
                    .iter()
                    .position(|&c| c == 1)
                    .unwrap_or(letters.len());
                Ok(BoundaryWord {
                    window: Vec::new(),
                    offset: start + first_one as i64,
                })
            }
        }
    }

    pub fn window(&self) -> &[u8] {
        &self.window
    }

    /// Index of the first window letter.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn letter(&self, index: i64) -> u8 {
        if index < self.offset {
            0
        } else if index >= self.offset + self.window.len() as i64 {
            1
        } else {
            self.window[(index - self.offset) as usize]
        }
    }

    /// `#{i < 0 : c_i = 1} - #{i >= 0 : c_i = 0}`.
    pub fn charge(&self) -> i64 {
        -(self.offset + median_position(&self.window) as i64)
    }

    pub fn is_canonical(&self) -> bool {
        self.charge() == 0
    }

    pub fn decode(&self) -> Result<Partition> {
        if !self.is_canonical() {
            return Err(Error::NonCanonicalWord(format!(
                "charge {} for window {} at offset {}",
                self.charge(),
                self.window_string(),
                self.offset
            )));
        }
        Ok(self.shape())
    }

    /// The partition read off the letters, ignoring the median.
    pub fn shape(&self) -> Partition {
        let mut ones = 0usize;
        let mut parts = Vec::new();
        for &c in &self.window {
            if c == 1 {
                ones += 1;
            } else if ones > 0 {
                parts.push(ones);
            }
        }
        parts.reverse();
        Partition::from_parts_unchecked(parts)
    }

    /// Number of 1s at negative indices.
    pub fn negative_ones(&self) -> usize {
        (self.offset..0).filter(|&i| self.letter(i) == 1).count()
    }

    /// Positions of the 1s of the window, increasing (one per column).
    pub fn column_indices(&self) -> Vec<i64> {
        self.window
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(k, _)| self.offset + k as i64)
            .collect()
    }

    /// Positions of the 0s of the window, decreasing (one per row).
    pub fn row_indices(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .window
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(|(k, _)| self.offset + k as i64)
            .collect();
        v.reverse();
        v
    }

    /// Checks `c_j = 1 - c_{-1-j}` for all `j >= 0`.
    pub fn sc_word_check(&self) -> bool {
        let reach = self
            .offset
            .abs()
            .max((self.offset + self.window.len() as i64).abs())
            + 1;
        (0..=reach).all(|j| self.letter(j) == 1 - self.letter(-1 - j))
    }

    /// Word of the conjugate partition: `c'_k = 1 - c_{-1-k}`.
    pub fn reverse_complement(&self) -> BoundaryWord {
        let len = self.window.len() as i64;
        let window = self.window.iter().rev().map(|&c| 1 - c).collect();
        BoundaryWord {
            window,
            offset: -(self.offset + len),
        }
    }

    fn window_string(&self) -> String {
        self.window.iter().map(|c| char::from(b'0' + c)).collect()
    }
}

impl fmt::Display for BoundaryWord {
    /// Renders as `...00<left>|<right>11...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.offset.min(0);
        let hi = (self.offset + self.window.len() as i64).max(0);
        let render = |range: std::ops::Range<i64>| -> String {
            range.map(|i| char::from(b'0' + self.letter(i))).collect()
        };
        write!(f, "...00{}|{}11...", render(lo..0), render(0..hi))
    }
}

/// The index pair `(i_u, j_u)` of a cell: `i` from its column, `j` from its row.
pub fn cell_to_index_pair(lambda: &Partition, u: Cell) -> Result<IndexPair> {
    if !lambda.contains(u) {
        return Err(Error::CellOutside {
            row: u.row,
            col: u.col,
        });
    }
    let w = BoundaryWord::encode(lambda);
    let cols = w.column_indices();
    let rows = w.row_indices();
    Ok(IndexPair::new(cols[u.col - 1], rows[u.row - 1]))
}

pub fn index_pair_to_cell(lambda: &Partition, p: IndexPair) -> Result<Cell> {
    let w = BoundaryWord::encode(lambda);
    let invalid = Error::InvalidIndexPair { i: p.i, j: p.j };
    if p.i >= p.j || w.letter(p.i) != 1 || w.letter(p.j) != 0 {
        return Err(invalid);
    }
    let col = w
        .column_indices()
        .iter()
        .position(|&i| i == p.i)
        .ok_or(invalid.clone())?
        + 1;
    let row = w
        .row_indices()
        .iter()
        .position(|&j| j == p.j)
        .ok_or(invalid.clone())?
        + 1;
    let u = Cell::new(row, col);
    if !lambda.contains(u) {
        return Err(invalid);
    }
    Ok(u)
}

/// Lemma-style diagonal test on indices: `|i| <= |j|`.
pub fn above_diagonal_by_indices(p: IndexPair) -> bool {
    p.is_above_diagonal()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn letters(s: &str) -> Vec<u8> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn encode_examples() {
        let w = BoundaryWord::encode(&p(&[]));
        assert!(w.window().is_empty());
        assert_eq!(w.offset(), 0);
        assert!(w.is_canonical());

        // ...001101|010011...
        let w = BoundaryWord::encode(&p(&[4, 4, 3, 2]));
        assert_eq!(w.window(), letters("11010100").as_slice());
        assert_eq!(w.offset(), -4);
        let got: String = (-6..6).map(|i| char::from(b'0' + w.letter(i))).collect();
        assert_eq!(got, "001101010011");

        let w = BoundaryWord::encode(&p(&[5, 5, 3, 2]));
        assert_eq!(w.window(), letters("110101100").as_slice());
        assert_eq!(w.offset(), -4);
        assert_eq!(w.to_string(), "...001101|0110011...");
    }

    #[test]
    fn decode_examples() {
        let empty = BoundaryWord::from_letters(&[], 0).unwrap();
        assert_eq!(empty.decode().unwrap(), p(&[]));
        let w = BoundaryWord::from_letters(&letters("001101010011"), -6).unwrap();
        assert_eq!(w.decode().unwrap(), p(&[4, 4, 3, 2]));
        let w = BoundaryWord::from_letters(&letters("1100"), -2).unwrap();
        assert_eq!(w.decode().unwrap(), p(&[2, 2]));
        // wrong median
        assert!(BoundaryWord::from_letters(&letters("1100"), -1).is_err());
        assert!(BoundaryWord::from_letters(&letters("1"), 3).is_err());
        assert!(BoundaryWord::from_letters(&letters("0"), -3).is_err());
    }

    #[test]
    fn canonicalize_recovers_median() {
        let (w, shift) = BoundaryWord::canonicalize(&letters("1100"), 5).unwrap();
        assert_eq!(w, BoundaryWord::encode(&p(&[2, 2])));
        assert_eq!(shift, 7);
        let (w, shift) = BoundaryWord::canonicalize(&letters("0011"), -1).unwrap();
        assert!(w.window().is_empty());
        assert_eq!(w.offset(), 0);
        assert_eq!(shift, 1);
    }

    #[test]
    fn cell_pair_examples() {
        assert_eq!(
            cell_to_index_pair(&p(&[1]), Cell::new(1, 1)).unwrap(),
            IndexPair::new(-1, 0)
        );
        let pair = cell_to_index_pair(&p(&[4, 3, 3, 2]), Cell::new(1, 1)).unwrap();
        assert_eq!(pair.span(), 7);
        let pair = cell_to_index_pair(&p(&[2, 1]), Cell::new(2, 1)).unwrap();
        assert_eq!(pair.span(), 1);
        assert!(pair.i < 0 && pair.j < 0);
        assert!(cell_to_index_pair(&p(&[2, 1]), Cell::new(2, 2)).is_err());
    }

    #[test]
    fn pair_cell_examples() {
        assert_eq!(
            index_pair_to_cell(&p(&[1]), IndexPair::new(-1, 0)).unwrap(),
            Cell::new(1, 1)
        );
        let lam = p(&[4, 4, 3, 2]);
        let pair = cell_to_index_pair(&lam, Cell::new(1, 1)).unwrap();
        assert_eq!(lam.hook_length(Cell::new(1, 1)).unwrap(), pair.span());
        assert_eq!(index_pair_to_cell(&lam, pair).unwrap(), Cell::new(1, 1));
        // encode((2,1)) = ...0|... c_{-2..1} = 1,0,1,0
        let lam = p(&[2, 1]);
        assert_eq!(
            index_pair_to_cell(&lam, IndexPair::new(0, 1)).unwrap(),
            Cell::new(1, 2)
        );
        assert!(index_pair_to_cell(&lam, IndexPair::new(-1, 0)).is_err());
        assert!(index_pair_to_cell(&lam, IndexPair::new(1, 0)).is_err());
        assert!(index_pair_to_cell(&lam, IndexPair::new(-2, 5)).is_err());
    }

    #[test]
    fn above_diagonal_examples() {
        // (1,1) of (1) is on the diagonal: |-1| <= |0| fails
        assert!(!above_diagonal_by_indices(IndexPair::new(-1, 0)));
        let lam = p(&[2, 1]);
        let above = cell_to_index_pair(&lam, Cell::new(1, 2)).unwrap();
        assert!(above_diagonal_by_indices(above));
        let below = cell_to_index_pair(&lam, Cell::new(2, 1)).unwrap();
        assert!(below.j.abs() < below.i.abs());
        assert!(!above_diagonal_by_indices(below));
    }

    #[test]
    fn sc_word_examples() {
        assert!(BoundaryWord::encode(&p(&[2, 1])).sc_word_check());
        assert!(!BoundaryWord::encode(&p(&[4, 3, 3, 2])).sc_word_check());
        assert!(BoundaryWord::encode(&p(&[])).sc_word_check());
    }

    #[test]
    fn charge_of_shifted_words() {
        let w = BoundaryWord::encode(&p(&[3, 1]));
        for shift in -4i64..=4 {
            let shifted = BoundaryWord {
                window: w.window.clone(),
                offset: w.offset + shift,
            };
            assert_eq!(shifted.charge(), -shift, "shift {shift}");
        }
        for shift in -3i64..=3 {
            let e = BoundaryWord {
                window: vec![],
                offset: shift,
            };
            assert_eq!(e.charge(), -shift);
        }
    }
}
