//! Exhaustive structural checks over small partitions.

use num_bigint::BigUint;

use hookpart::boundary::{above_diagonal_by_indices, cell_to_index_pair, BoundaryWord};
use hookpart::enumerate::{enumerate, enumerate_up_to, PartitionClass};
use hookpart::littlewood::{decompose, is_t_core, recompose, LittlewoodDecomposition};
use hookpart::{Partition, Sign};

fn all_up_to(n: usize) -> Vec<Partition> {
    enumerate_up_to(n, PartitionClass::All).unwrap()
}

fn sc_up_to(n: usize) -> Vec<Partition> {
    enumerate_up_to(n, PartitionClass::SelfConjugate).unwrap()
}

/// Independent SYT count: remove a corner in every possible way.
fn syt_brute(parts: &mut Vec<usize>) -> u64 {
    if parts.iter().all(|&p| p == 0) {
        return 1;
    }
    let mut total = 0;
    for i in 0..parts.len() {
        let corner = parts[i] > 0 && (i + 1 == parts.len() || parts[i + 1] < parts[i]);
        if corner {
            parts[i] -= 1;
            total += syt_brute(parts);
            parts[i] += 1;
        }
    }
    total
}

#[test]
fn partition_counts_match_euler_recurrence() {
    // pentagonal-number recurrence, computed independently of the series code
    let n_max = 30;
    let mut p = vec![0i64; n_max + 1];
    p[0] = 1;
    for n in 1..=n_max {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[n] += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                p[n] += sign * p[n - g2];
            }
            k += 1;
        }
    }
    for (n, &want) in p.iter().enumerate() {
        assert_eq!(
            enumerate(n, PartitionClass::All).unwrap().len() as i64,
            want,
            "p({n})"
        );
    }
}

#[test]
fn conjugation_and_hooks() {
    for lam in all_up_to(20) {
        let conj = lam.conjugate();
        assert_eq!(conj.conjugate(), lam);
        let stats = lam.hook_stats(1);
        assert_eq!(stats.full.len(), lam.size());
        assert_eq!(stats.full, conj.hook_stats(1).full, "{lam}");
    }
}

#[test]
fn self_conjugate_diagonal_data() {
    for lam in sc_up_to(30) {
        let d = lam.diagonal_hooks();
        assert!(d.iter().all(|h| h % 2 == 1), "{lam}");
        assert!(d.windows(2).all(|w| w[0] > w[1]), "{lam}");
        assert_eq!(Partition::from_diagonal_hooks(&d).unwrap(), lam);
        let (r, s) = lam.d1_d3_split().unwrap();
        assert_eq!(lam.bg_rank(), r as i64 - s as i64, "{lam}");
        let sign = if lam.size() % 2 == 0 { 1 } else { -1 };
        assert_eq!(lam.delta_sign(), sign, "{lam}");
        let plus = lam
            .cells()
            .filter(|&u| lam.epsilon(u).unwrap() == Sign::Plus)
            .count();
        let minus = lam.size() - plus;
        assert_eq!(plus - minus, lam.durfee(), "{lam}");
    }
}

#[test]
fn hook_length_formula_against_brute_force() {
    for lam in all_up_to(8).into_iter().filter(|l| !l.is_empty()) {
        let want = syt_brute(&mut lam.parts().to_vec());
        assert_eq!(lam.frt_syt_count().unwrap(), BigUint::from(want), "{lam}");
    }
}

#[test]
fn boundary_words() {
    for lam in all_up_to(20) {
        let w = BoundaryWord::encode(&lam);
        assert_eq!(w.decode().unwrap(), lam);
        let ones = w.window().iter().filter(|&&c| c == 1).count();
        assert_eq!(ones, lam.part(1), "{lam}");
        assert_eq!(w.window().len() - ones, lam.length(), "{lam}");
        assert_eq!(w.negative_ones(), lam.durfee(), "{lam}");
        assert_eq!(w.sc_word_check(), lam.is_self_conjugate(), "{lam}");
        let c = BoundaryWord::encode(&lam.conjugate());
        for k in -25..25 {
            assert_eq!(c.letter(k), 1 - w.letter(-1 - k), "{lam} at {k}");
        }
        assert_eq!(w.reverse_complement(), c);
    }
}

#[test]
fn index_diagonal_test_on_self_conjugate_partitions() {
    for lam in sc_up_to(24) {
        for u in lam.cells() {
            let pair = cell_to_index_pair(&lam, u).unwrap();
            assert_eq!(
                above_diagonal_by_indices(pair),
                u.col > u.row,
                "{lam} {u:?}"
            );
        }
    }
}

#[test]
fn index_diagonal_test_outside_durfee_square() {
    for lam in all_up_to(15) {
        let d = lam.durfee();
        for u in lam.cells().filter(|u| u.row > d || u.col > d) {
            let pair = cell_to_index_pair(&lam, u).unwrap();
            assert_eq!(
                above_diagonal_by_indices(pair),
                u.col > u.row,
                "{lam} {u:?}"
            );
        }
    }
}

#[test]
fn index_diagonal_test_is_not_a_function_of_the_pair_alone() {
    // same pair, one diagonal cell and one cell above the diagonal
    let a = Partition::new(vec![2]).unwrap();
    let b = Partition::new(vec![2, 2]).unwrap();
    let pa = cell_to_index_pair(&a, hookpart::Cell::new(1, 1)).unwrap();
    let pb = cell_to_index_pair(&b, hookpart::Cell::new(1, 2)).unwrap();
    assert_eq!(pa, pb);
}

fn tuples(t: usize, budget: usize) -> Vec<Vec<Partition>> {
    if t == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in all_up_to(budget) {
        for mut rest in tuples(t - 1, budget - first.size()) {
            rest.insert(0, first.clone());
            out.push(rest);
        }
    }
    out
}

#[test]
fn recompose_then_decompose() {
    let bound = 18;
    for t in 2..=5 {
        let cores: Vec<Partition> = all_up_to(bound)
            .into_iter()
            .filter(|c| is_t_core(c, t))
            .collect();
        for core in cores {
            for quotient in tuples(t, (bound - core.size()) / t) {
                let d = LittlewoodDecomposition {
                    t,
                    core: core.clone(),
                    quotient,
                };
                let lam = recompose(&d).unwrap();
                assert_eq!(decompose(&lam, t), d);
            }
        }
    }
}

#[test]
fn bg_rank_from_two_core() {
    for lam in all_up_to(18) {
        let omega = decompose(&lam, 2).core;
        let l = omega.length() as i64;
        let want = if l % 2 == 1 { (l + 1) / 2 } else { -l / 2 };
        assert_eq!(lam.bg_rank(), want, "{lam}");
    }
}
