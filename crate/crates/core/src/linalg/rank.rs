use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{IntMatrix, LinalgError};

/// Coefficient field for rank and homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn validate(self) -> Result<Self, LinalgError> {
        match self {
            Field::Prime(p) if !is_prime(p) => Err(LinalgError::NotPrime(p)),
            f => Ok(f),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn rank_over_field(a: &IntMatrix, field: Field) -> Result<usize, LinalgError> {
    match field.validate()? {
        Field::Rationals => Ok(rank_rational(a)),
        Field::Prime(p) => Ok(rank_mod_p(a, p)),
    }
}

/// Fraction-free Gaussian elimination; exact over ℚ.
fn rank_rational(a: &IntMatrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    let mut rank = 0;
    for col in 0..a.cols() {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let g = pivot_row[col].gcd(&row[col]);
            let f_row = &pivot_row[col] / &g;
            let f_piv = &row[col] / &g;
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = &*x * &f_row - y * &f_piv;
            }
            // keep entries small
            let content = row.iter().skip(col).fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !content.is_zero() && content != BigInt::from(1) {
                for x in row.iter_mut().skip(col) {
                    *x = &*x / &content;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn rank_mod_p(a: &IntMatrix, p: u64) -> usize {
    let bp = BigInt::from(p);
    let mut rows: Vec<Vec<u64>> = (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .map(|x| x.mod_floor(&bp).to_u64().expect("reduced mod p"))
                .collect()
        })
        .collect();
    let mulmod = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut rank = 0;
    for col in 0..a.cols() {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = mod_inverse(rows[rank][col], p);
        let pivot_row: Vec<u64> = rows[rank].iter().map(|&x| mulmod(x, inv)).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = (*x + p - mulmod(f, y)) % p;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mod_inverse(x: u64, p: u64) -> u64 {
    // Fermat; p is prime and x != 0
    let mut result = 1u128;
    let mut base = x as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}
