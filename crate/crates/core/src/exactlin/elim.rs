//! Exact elimination kernels.
//!
//! Over Q the matrix is first scaled row by row to integers; inversion then
//! runs fraction-free Gauss-Jordan (every intermediate entry is a minor, so
//! each division is exact). Over F_p plain Gauss-Jordan is used.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Inverse of the `n x n` row-major matrix `m`.
pub(crate) fn invert(field: Field, n: usize, m: &[Scalar]) -> Result<Vec<Scalar>> {
    match field {
        Field::Rational => invert_rational(n, m),
        Field::Prime { .. } => invert_generic(field, n, m),
    }
}

pub(crate) fn rank(field: Field, rows: usize, cols: usize, m: &[Scalar]) -> usize {
    match field {
        Field::Rational => rank_integer(scaled_rows(rows, cols, m).0, rows, cols),
        Field::Prime { .. } => {
            let mut a = m.to_vec();
            echelon_generic(&mut a, rows, cols)
        }
    }
}

/// Multiplies each row by the lcm of its denominators. Returns the integer
/// matrix and the scale factor of every row.
fn scaled_rows(rows: usize, cols: usize, m: &[Scalar]) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut out = Vec::with_capacity(rows * cols);
    let mut scales = Vec::with_capacity(rows);
    for r in 0..rows {
        let row = &m[r * cols..(r + 1) * cols];
        let lcm = row
            .iter()
            .map(|s| s.as_rational().expect("rational entry").denom().clone())
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        for s in row {
            let q = s.as_rational().expect("rational entry");
            out.push(q.numer() * (&lcm / q.denom()));
        }
        scales.push(lcm);
    }
    (out, scales)
}

fn invert_rational(n: usize, m: &[Scalar]) -> Result<Vec<Scalar>> {
    let (a, scales) = scaled_rows(n, n, m);
    let w = 2 * n;
    let mut aug = vec![BigInt::zero(); n * w];
    for r in 0..n {
        for c in 0..n {
            aug[r * w + c] = a[r * n + c].clone();
        }
        aug[r * w + n + r] = BigInt::one();
    }
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !aug[r * w + k].is_zero()) else {
            return Err(Error::NotInvertible {
                rank: rank_integer(a, n, n),
                size: n,
            });
        };
        if p != k {
            for c in 0..w {
                aug.swap(p * w + c, k * w + c);
            }
        }
        let pivot = aug[k * w + k].clone();
        for i in (0..n).filter(|&i| i != k) {
            let factor = aug[i * w + k].clone();
            for j in 0..w {
                let v = &pivot * &aug[i * w + j] - &factor * &aug[k * w + j];
                debug_assert!((&v % &prev).is_zero());
                aug[i * w + j] = v / &prev;
            }
        }
        prev = pivot;
    }
    // Left block is now `prev * I`, right block is `prev * N^{-1}` with N = diag(scales) * M.
    // M^{-1} = N^{-1} * diag(scales).
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        let d = &aug[r * w + r];
        for c in 0..n {
            let num = &aug[r * w + n + c] * &scales[c];
            out.push(Scalar::Rational(BigRational::new(num, d.clone())));
        }
    }
    Ok(out)
}

/// Rank by fraction-free forward elimination with column skipping.
fn rank_integer(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + c].clone();
        for i in rank + 1..rows {
            let factor = a[i * cols + c].clone();
            for j in c..cols {
                let v = &pivot * &a[i * cols + j] - &factor * &a[rank * cols + j];
                debug_assert!((&v % &prev).is_zero());
                a[i * cols + j] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Gauss-Jordan over any field; used for F_p.
fn invert_generic(field: Field, n: usize, m: &[Scalar]) -> Result<Vec<Scalar>> {
    let w = 2 * n;
    let mut aug = vec![field.zero(); n * w];
    for r in 0..n {
        for c in 0..n {
            aug[r * w + c] = m[r * n + c].clone();
        }
        aug[r * w + n + r] = field.one();
    }
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !aug[r * w + k].is_zero()) else {
            let mut copy = m.to_vec();
            return Err(Error::NotInvertible {
                rank: echelon_generic(&mut copy, n, n),
                size: n,
            });
        };
        if p != k {
            for c in 0..w {
                aug.swap(p * w + c, k * w + c);
            }
        }
        let inv = aug[k * w + k].inv().expect("nonzero pivot");
        for j in 0..w {
            aug[k * w + j] = aug[k * w + j].mul(&inv);
        }
        for i in (0..n).filter(|&i| i != k) {
            let factor = aug[i * w + k].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..w {
                let v = aug[i * w + j].sub(&factor.mul(&aug[k * w + j]));
                aug[i * w + j] = v;
            }
        }
    }
    Ok((0..n)
        .flat_map(|r| aug[r * w + n..(r + 1) * w].to_vec())
        .collect())
}

fn echelon_generic(a: &mut [Scalar], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let inv = a[rank * cols + c].inv().expect("nonzero pivot");
        for i in rank + 1..rows {
            let factor = a[i * cols + c].mul(&inv);
            if factor.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = a[i * cols + j].sub(&factor.mul(&a[rank * cols + j]));
                a[i * cols + j] = v;
            }
        }
        rank += 1;
    }
    rank
}

/// Outcome of a failed sparse solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum SolveFailure {
    Inconsistent,
    Underdetermined { nullity: usize },
}

/// Solves a sparse system `Σ_j a_ij x_j = b_i` exactly and requires a unique
/// solution. Rows are `(coefficients by unknown index, right-hand side)`.
pub(crate) fn solve_sparse(
    field: Field,
    unknowns: usize,
    equations: impl IntoIterator<Item = (BTreeMap<usize, Scalar>, Scalar)>,
) -> std::result::Result<Vec<Scalar>, SolveFailure> {
    // Pivot rows keyed by leading unknown; each stored normalized (leading coefficient 1).
    let mut pivots: BTreeMap<usize, (BTreeMap<usize, Scalar>, Scalar)> = BTreeMap::new();
    for (mut row, mut rhs) in equations {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((lead, lead_coef)) = row.iter().next().map(|(k, v)| (*k, v.clone())) else {
                if !rhs.is_zero() {
                    return Err(SolveFailure::Inconsistent);
                }
                break;
            };
            match pivots.get(&lead) {
                Some((prow, prhs)) => {
                    for (j, v) in prow {
                        let entry = row.entry(*j).or_insert_with(|| field.zero());
                        *entry = entry.sub(&lead_coef.mul(v));
                    }
                    rhs = rhs.sub(&lead_coef.mul(prhs));
                    row.retain(|_, v| !v.is_zero());
                }
                None => {
                    let inv = lead_coef.inv().expect("nonzero lead");
                    for v in row.values_mut() {
                        *v = v.mul(&inv);
                    }
                    rhs = rhs.mul(&inv);
                    pivots.insert(lead, (row, rhs));
                    break;
                }
            }
        }
    }
    if pivots.len() < unknowns {
        return Err(SolveFailure::Underdetermined {
            nullity: unknowns - pivots.len(),
        });
    }
    let mut x = vec![field.zero(); unknowns];
    for (&lead, (row, rhs)) in pivots.iter().rev() {
        let mut v = rhs.clone();
        for (j, c) in row.iter().skip(1) {
            v = v.sub(&c.mul(&x[*j]));
        }
        x[lead] = v;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Field::Rational.int(x)).collect()
    }

    #[test]
    fn inverts_with_fractions() {
        let f = Field::Rational;
        let m = vec![f.parse("1/2").unwrap(), f.int(1), f.int(3), f.parse("2/3").unwrap()];
        let inv = invert(f, 2, &m).unwrap();
        // det = 1/3 - 3 = -8/3
        assert_eq!(inv[0], f.parse("-1/4").unwrap());
        assert_eq!(inv[1], f.parse("3/8").unwrap());
        assert_eq!(inv[2], f.parse("9/8").unwrap());
        assert_eq!(inv[3], f.parse("-3/16").unwrap());
    }

    #[test]
    fn needs_row_swaps() {
        let f = Field::Rational;
        let inv = invert(f, 3, &q(&[0, 1, 0, 0, 0, 1, 1, 0, 0])).unwrap();
        assert_eq!(inv, q(&[0, 0, 1, 1, 0, 0, 0, 1, 0]));
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(5).unwrap();
        let m: Vec<Scalar> = [2, 1, 1, 1].iter().map(|&v| f.int(v)).collect();
        let inv = invert(f, 2, &m).unwrap();
        assert_eq!(inv, [1, 4, 4, 2].iter().map(|&v| f.int(v)).collect::<Vec<_>>());
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(Field::Rational, 2, 3, &q(&[1, 2, 3, 2, 4, 6])), 1);
        assert_eq!(rank(Field::Rational, 3, 2, &q(&[1, 0, 0, 1, 1, 1])), 2);
        assert_eq!(rank(Field::Rational, 2, 2, &q(&[0, 0, 0, 0])), 0);
        let f = Field::prime(3).unwrap();
        let m: Vec<Scalar> = [1, 2, 2, 1].iter().map(|&v| f.int(v)).collect();
        assert_eq!(rank(f, 2, 2, &m), 1);
    }

    fn eq(terms: &[(usize, i64)], rhs: i64) -> (BTreeMap<usize, Scalar>, Scalar) {
        let f = Field::Rational;
        (terms.iter().map(|&(j, v)| (j, f.int(v))).collect(), f.int(rhs))
    }

    #[test]
    fn sparse_solver_cases() {
        let f = Field::Rational;
        let x = solve_sparse(f, 2, vec![eq(&[(0, 1), (1, 1)], 3), eq(&[(0, 1), (1, -1)], 1)]).unwrap();
        assert_eq!(x, q(&[2, 1]));
        assert_eq!(
            solve_sparse(f, 2, vec![eq(&[(0, 1), (1, 1)], 3)]),
            Err(SolveFailure::Underdetermined { nullity: 1 })
        );
        assert_eq!(
            solve_sparse(f, 1, vec![eq(&[(0, 1)], 3), eq(&[(0, 2)], 3)]),
            Err(SolveFailure::Inconsistent)
        );
    }
}
