//! Littlewood decomposition: a partition splits into its `t`-core and the
//! `t`-quotient read off the residue-class subwords of its boundary word.
//!
//! Subword `k` keeps the letters at indices `t*i + k`. Each quotient
//! component is that subword re-indexed about its own median. The core is
//! the word obtained by sorting every subword into `0...0 1...1`.

use serde::{Deserialize, Serialize};

use crate::boundary::{cell_to_index_pair, index_pair_to_cell, BoundaryWord, IndexPair};
use crate::error::{Error, Result};
use crate::partition::{cell_sign, Cell, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LittlewoodDecomposition {
    pub t: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

/// Self-conjugate form: the core, the first `⌊t/2⌋` quotient components,
/// and for odd `t` the self-conjugate middle component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScDecomposition {
    pub t: usize,
    pub core: Partition,
    pub reduced: Vec<Partition>,
    pub mu: Option<Partition>,
}

/// A box `source` of λ with `t | h`, and the box of `ν^(k)` it maps to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxAssociation {
    pub source: Cell,
    pub quotient_index: usize,
    pub target: Cell,
}

/// Residue-class subwords of a word, each with the index of its first letter.
struct Subwords {
    start: i64,
    letters: Vec<Vec<u8>>,
}

fn subwords(w: &BoundaryWord, t: usize) -> Subwords {
    let t_i = t as i64;
    let lo = w.offset().div_euclid(t_i) - 1;
    let hi = (w.offset() + w.window().len() as i64).div_euclid(t_i) + 1;
    let letters = (0..t_i)
        .map(|k| (lo..=hi).map(|i| w.letter(t_i * i + k)).collect())
        .collect();
    Subwords { start: lo, letters }
}

/// The quotient components and, for each, the shift `s_k` taking subword
/// indices to the component's canonical indices.
fn quotient_with_shifts(w: &BoundaryWord, t: usize) -> (Vec<Partition>, Vec<i64>) {
    let sw = subwords(w, t);
    sw.letters
        .iter()
        .map(|letters| {
            let (word, shift) =
                BoundaryWord::canonicalize(letters, sw.start).expect("subword letters are 0/1");
            (word.shape(), shift)
        })
        .unzip()
}

pub fn decompose(lambda: &Partition, t: usize) -> LittlewoodDecomposition {
    assert!(t >= 2, "Littlewood decomposition needs t >= 2");
    let w = BoundaryWord::encode(lambda);
    let (quotient, shifts) = quotient_with_shifts(&w, t);
    let core = word_from_components(t, &shifts, &vec![Partition::empty(); t]);
    LittlewoodDecomposition { t, core, quotient }
}

/// Interleaves component words, component `k` placed with its index 0 at
/// subword index `shifts[k]`.
fn word_from_components(t: usize, shifts: &[i64], parts: &[Partition]) -> Partition {
    let t_i = t as i64;
    let words: Vec<BoundaryWord> = parts.iter().map(BoundaryWord::encode).collect();
    let lo = words
        .iter()
        .zip(shifts)
        .map(|(w, s)| w.offset() + s)
        .min()
        .unwrap_or(0)
        - 1;
    let hi = words
        .iter()
        .zip(shifts)
        .map(|(w, s)| w.offset() + w.window().len() as i64 + s)
        .max()
        .unwrap_or(0)
        + 1;
    let start = t_i * lo;
    let letters: Vec<u8> = (start..t_i * (hi + 1))
        .map(|n| {
            let k = n.rem_euclid(t_i) as usize;
            let i = n.div_euclid(t_i);
            words[k].letter(i - shifts[k])
        })
        .collect();
    BoundaryWord::from_letters(&letters, start)
        .and_then(|w| w.decode())
        .expect("component charges sum to zero")
}

pub fn recompose(d: &LittlewoodDecomposition) -> Result<Partition> {
    let t = d.t;
    if t < 2 {
        return Err(Error::InvalidParameter(format!("t must be >= 2, got {t}")));
    }
    if d.quotient.len() != t {
        return Err(Error::InvalidParameter(format!(
            "quotient has {} components, expected {t}",
            d.quotient.len()
        )));
    }
    if !is_t_core(&d.core, t) {
        return Err(Error::NotCore {
            core: d.core.to_string(),
            t,
        });
    }
    let (_, shifts) = quotient_with_shifts(&BoundaryWord::encode(&d.core), t);
    Ok(word_from_components(t, &shifts, &d.quotient))
}

/// True iff no hook length is divisible by `t` (`t = 1` admits only ∅).
pub fn is_t_core(lambda: &Partition, t: usize) -> bool {
    assert!(t >= 1);
    lambda.cell_hooks().iter().all(|(_, h)| h % t != 0)
}

pub fn core(lambda: &Partition, t: usize) -> Partition {
    decompose(lambda, t).core
}

pub fn sc_decompose(lambda: &Partition, t: usize) -> Result<ScDecomposition> {
    if !lambda.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(lambda.to_string()));
    }
    if t < 2 {
        return Err(Error::InvalidParameter(format!("t must be >= 2, got {t}")));
    }
    let d = decompose(lambda, t);
    let fail = |what: &str| {
        Err(Error::Internal(format!(
            "{what} fails for {lambda}, t = {t}"
        )))
    };

    // core is a self-conjugate t-core
    if !d.core.is_self_conjugate() || !is_t_core(&d.core, t) {
        return fail("self-conjugate core");
    }
    // paired components are conjugate
    for j in 0..t / 2 {
        if d.quotient[j] != d.quotient[t - 1 - j].conjugate() {
            return fail("quotient conjugation pairing");
        }
    }
    let mu = if t % 2 == 1 {
        let mu = d.quotient[(t - 1) / 2].clone();
        if !mu.is_self_conjugate() {
            return fail("self-conjugate middle component");
        }
        Some(mu)
    } else {
        None
    };
    // size
    let half: usize = d.quotient[..t / 2].iter().map(Partition::size).sum();
    let mu_size = mu.as_ref().map_or(0, Partition::size);
    if lambda.size() != d.core.size() + 2 * t * half + t * mu_size {
        return fail("size identity");
    }
    // hooks
    if lambda.hook_stats(t).mod_t != scaled_quotient_hooks(&d.quotient, t) {
        return fail("hook multiset identity");
    }
    Ok(ScDecomposition {
        t,
        core: d.core,
        reduced: d.quotient[..t / 2].to_vec(),
        mu,
    })
}

/// `t·H(ν)` as a sorted multiset.
pub fn scaled_quotient_hooks(quotient: &[Partition], t: usize) -> Vec<usize> {
    let mut v: Vec<usize> = quotient
        .iter()
        .flat_map(|nu| nu.hook_stats(1).full)
        .map(|h| t * h)
        .collect();
    v.sort_unstable();
    v
}

pub fn associate_box(lambda: &Partition, t: usize, u: Cell) -> Result<BoxAssociation> {
    let hook = lambda.hook_length(u)?;
    if t == 0 || hook % t != 0 {
        return Err(Error::HookNotDivisible { hook, t });
    }
    let w = BoundaryWord::encode(lambda);
    let (quotient, shifts) = quotient_with_shifts(&w, t);
    associate_with(lambda, t, u, &quotient, &shifts)
}

fn associate_with(
    lambda: &Partition,
    t: usize,
    u: Cell,
    quotient: &[Partition],
    shifts: &[i64],
) -> Result<BoxAssociation> {
    let pair = cell_to_index_pair(lambda, u)?;
    let t_i = t as i64;
    let k = pair.i.rem_euclid(t_i);
    debug_assert_eq!(k, pair.j.rem_euclid(t_i));
    let k_us = k as usize;
    let sub = IndexPair::new(
        pair.i.div_euclid(t_i) - shifts[k_us],
        pair.j.div_euclid(t_i) - shifts[k_us],
    );
    let target = index_pair_to_cell(&quotient[k_us], sub)?;
    Ok(BoxAssociation {
        source: u,
        quotient_index: k_us,
        target,
    })
}

/// Every box with `t | h`, associated to its quotient box.
pub fn associations(lambda: &Partition, t: usize) -> Vec<BoxAssociation> {
    let w = BoundaryWord::encode(lambda);
    let (quotient, shifts) = quotient_with_shifts(&w, t);
    lambda
        .cell_hooks()
        .into_iter()
        .filter(|(_, h)| h % t == 0)
        .map(|(u, _)| associate_with(lambda, t, u, &quotient, &shifts).expect("t divides hook"))
        .collect()
}

/// Outcome of the reflection-pairing check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingCheck {
    pub holds: bool,
    pub counterexample: Option<String>,
}

/// Checks, for self-conjugate λ: no diagonal box has `t | h`; reflection
/// preserves hooks in `H_t` and flips the sign; reflected boxes land in
/// quotient components `k` and `t - 1 - k`.
///
/// Valid for even `t`, and for odd `t` when λ has no diagonal hook divisible
/// by `t`.
pub fn sc_pairing_check(lambda: &Partition, t: usize) -> Result<PairingCheck> {
    if !lambda.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(lambda.to_string()));
    }
    if t < 2 || (t % 2 == 1 && !is_bc_diagonal_unchecked(lambda, t)) {
        return Err(Error::Parity(format!(
            "pairing needs even t, or odd t on the BC class; got t = {t} for {lambda}"
        )));
    }
    let fail = |msg: String| {
        Ok(PairingCheck {
            holds: false,
            counterexample: Some(msg),
        })
    };
    let w = BoundaryWord::encode(lambda);
    let (quotient, shifts) = quotient_with_shifts(&w, t);
    for (u, h) in lambda.cell_hooks() {
        if h % t != 0 {
            continue;
        }
        if u.row == u.col {
            return fail(format!("diagonal box {u:?} has hook {h}"));
        }
        let v = u.transpose();
        let hv = lambda
            .hook_length(v)
            .map_err(|_| Error::Internal("reflection left λ".into()))?;
        if hv != h {
            return fail(format!("hooks differ at {u:?} ({h}) and {v:?} ({hv})"));
        }
        if cell_sign(u) != cell_sign(v).flip() {
            return fail(format!("signs agree at {u:?} and {v:?}"));
        }
        let a = associate_with(lambda, t, u, &quotient, &shifts)?;
        let b = associate_with(lambda, t, v, &quotient, &shifts)?;
        if a.quotient_index + b.quotient_index != t - 1 {
            return fail(format!(
                "quotient indices {} and {} for {u:?} and {v:?}",
                a.quotient_index, b.quotient_index
            ));
        }
    }
    Ok(PairingCheck {
        holds: true,
        counterexample: None,
    })
}

fn check_bc_args(lambda: &Partition, t: usize) -> Result<()> {
    if !lambda.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(lambda.to_string()));
    }
    if t < 3 || t.is_multiple_of(2) {
        return Err(Error::Parity(format!(
            "BC predicates need odd t >= 3, got {t}"
        )));
    }
    Ok(())
}

/// Self-conjugate with an empty middle quotient component.
pub fn is_bc_quotient(lambda: &Partition, t: usize) -> Result<bool> {
    check_bc_args(lambda, t)?;
    Ok(decompose(lambda, t).quotient[(t - 1) / 2].is_empty())
}

/// Self-conjugate with no diagonal hook divisible by `t`.
pub fn is_bc_diagonal(lambda: &Partition, t: usize) -> Result<bool> {
    check_bc_args(lambda, t)?;
    Ok(is_bc_diagonal_unchecked(lambda, t))
}

fn is_bc_diagonal_unchecked(lambda: &Partition, t: usize) -> bool {
    lambda.diagonal_hooks().iter().all(|h| h % t != 0)
}

/// Subwords of λ's boundary word rendered with their own medians.
pub fn subword_strings(lambda: &Partition, t: usize) -> Vec<String> {
    let w = BoundaryWord::encode(lambda);
    let sw = subwords(&w, t);
    sw.letters
        .iter()
        .map(|letters| {
            let (word, _) = BoundaryWord::canonicalize(letters, sw.start).expect("0/1 letters");
            word.to_string()
        })
        .collect()
}
