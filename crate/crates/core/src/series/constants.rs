//! Rational constants used by the hook-moment right-hand sides.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::ring::{int, Rational};
use crate::error::{Error, Result};

/// `C(r) = binom(2r, r)·binom(2r+2, r+1) / (2(r+1)^2)`.
pub fn catalan_c(r: usize) -> Rational {
    let b1 = binomial(BigInt::from(2 * r), BigInt::from(r));
    let b2 = binomial(BigInt::from(2 * r + 2), BigInt::from(r + 1));
    let den = BigInt::from(2 * (r + 1) * (r + 1));
    Rational::new(b1 * b2, den)
}

/// Central factorial numbers: `T(k,i) = i^2 T(k-1,i) + T(k-1,i-1)`,
/// `T(1,1) = 1`, zero on the axes.
pub fn central_factorial(k: usize, i: usize) -> BigInt {
    if k == 0 || i == 0 || i > k {
        return BigInt::zero();
    }
    // row[i] holds T(row, i)
    let mut row = vec![BigInt::zero(); k + 1];
    row[1] = BigInt::one();
    for kk in 2..=k {
        for ii in (1..=kk).rev() {
            row[ii] = BigInt::from(ii * ii) * &row[ii] + &row[ii - 1];
        }
    }
    row[i].clone()
}

/// `B_{r,k}(α)` from its two-term recurrence with the product and power
/// boundary rows.
pub fn b_poly(r: usize, k: usize, alpha: &Rational) -> Result<Rational> {
    if k > r {
        return Err(Error::InvalidParameter(format!(
            "B_(r,k) needs k <= r, got r = {r}, k = {k}"
        )));
    }
    let a2 = alpha * alpha;
    let mut prev = vec![Rational::one()];
    for rr in 1..=r {
        let mut cur = vec![Rational::zero(); rr + 1];
        cur[0] = (1..=rr).fold(Rational::one(), |acc, j| acc * (&a2 - int((j * j) as i64)));
        for kk in 1..rr {
            let lead = &a2 * int(((kk + 1) * (kk + 1)) as i64) - int((rr * rr) as i64);
            cur[kk] = lead * &prev[kk] + &a2 * &prev[kk - 1];
        }
        cur[rr] = (0..rr).fold(Rational::one(), |acc, _| acc * &a2);
        prev = cur;
    }
    Ok(prev[k].clone())
}
