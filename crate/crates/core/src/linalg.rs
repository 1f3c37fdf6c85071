//! Exact rank computations for small integer matrices.
//!
//! Over the rationals the elimination is fraction-free: rows are combined
//! with integer multipliers and divided by their content afterwards. The
//! computation runs in `i128` with checked arithmetic and is repeated with
//! big integers if an intermediate value overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

use crate::field::FieldSpec;

/// Dense integer matrix given as a list of rows.
pub type IntMatrix = Vec<Vec<i64>>;

pub fn rank(rows: &[Vec<i64>], field: FieldSpec) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Rationals => {
            let small: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect();
            match rank_fraction_free(small) {
                Some(r) => r,
                None => {
                    let big: Vec<Vec<BigInt>> = rows
                        .iter()
                        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                        .collect();
                    rank_fraction_free(big).expect("big integer arithmetic cannot overflow")
                }
            }
        }
        FieldSpec::PrimeField(p) => rank_mod_p(rows, p),
    }
}

fn rank_fraction_free<T>(mut m: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r].iter().filter(|x| !x.is_zero()).count())
        else {
            continue;
        };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pval = prow[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            let mut content = T::zero();
            for c in col..cols {
                let lhs = row[c].checked_mul(&pval)?;
                let rhs = prow[c].checked_mul(&factor)?;
                row[c] = lhs.checked_sub(&rhs)?;
                content = content.gcd(&row[c]);
            }
            if !content.is_zero() && !content.is_one() {
                for x in row[col..].iter_mut() {
                    *x = x.div_floor(&content);
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let p = p as i64;
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect())
        .collect();
    let nrows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col], p);
        for x in m[rank][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                row[c] = (row[c] - factor * prow[c]).rem_euclid(p);
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p, a.rem_euclid(p));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p)
}
