//! Exact matrix rank over the rationals and over prime fields.

use num_bigint::{BigInt, Sign};

/// Rank over `Q` by fraction-free (Bareiss) elimination, first in `i128`
/// with overflow checks and on overflow again with big integers.
pub fn rank_rational(matrix: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_i128(small) {
        Some(r) => r,
        None => bareiss_big(
            matrix
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(p, r);
        let pivot = m[r][c];
        let (top, rest) = m.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c];
            for j in c + 1..cols {
                let v = pivot
                    .checked_mul(row[j])?
                    .checked_sub(factor.checked_mul(prow[j])?)?;
                row[j] = v / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c].sign() != Sign::NoSign) else {
            continue;
        };
        m.swap(p, r);
        let pivot = m[r][c].clone();
        let (top, rest) = m.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot * &row[j] - &factor * &prow[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::default();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Rank over `GF(p)` by Gaussian elimination.
pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let p128 = p as i128;
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| (x as i128).rem_euclid(p128) as u64).collect())
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(piv, r);
        let inv = pow_mod(m[r][c], p - 2, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul(row[c], inv);
            for j in c..cols {
                row[j] = (row[j] + p - mul(f, prow[j])) % p;
            }
        }
        r += 1;
    }
    r
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Whether `p` is prime (trial division; characteristics are small).
pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}
