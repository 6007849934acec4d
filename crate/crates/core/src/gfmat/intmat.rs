//! Exact integer matrices and rational ranks.
//!
//! Rational eigenspace dimensions are obtained as exact integer-matrix
//! ranks. Small matrices go through fraction-free Bareiss elimination over
//! arbitrary-precision integers; larger ones use modular rank at three
//! fixed primes above 2^20 which must agree (Bareiss entry growth makes
//! big-integer elimination too slow at the 350-400 sizes that occur here,
//! and machine-word Bareiss would overflow silently).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Mat;

/// Fixed primes for the modular rank route. All above 2^20.
pub const RANK_PRIMES: [u64; 3] = [1_048_583, 1_048_589, 1_048_601];

#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl std::fmt::Debug for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntMat({}x{})", self.rows, self.cols)
    }
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn all_ones(n: usize) -> Self {
        IntMat {
            rows: n,
            cols: n,
            data: vec![1; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), ncols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols);
            m.data[i * ncols..(i + 1) * ncols].copy_from_slice(r);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.checked_add(*b).expect("integer overflow"))
            .collect();
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.checked_sub(*b).expect("integer overflow"))
            .collect();
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: i64) -> IntMat {
        let data = self
            .data
            .iter()
            .map(|a| a.checked_mul(c).expect("integer overflow"))
            .collect();
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `self + c*I` for square matrices.
    pub fn add_scaled_identity(&self, c: i64) -> IntMat {
        assert_eq!(self.rows, self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            out.set(i, i, out.at(i, i).checked_add(c).expect("integer overflow"));
        }
        out
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a != 0 {
                    let src = other.row(k);
                    let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                    for (d, s) in dst.iter_mut().zip(src.iter()) {
                        *d = d
                            .checked_add(a.checked_mul(*s).expect("integer overflow"))
                            .expect("integer overflow");
                    }
                }
            }
        }
        out
    }

    /// Entrywise reduction into GF(p), p < 256.
    pub fn reduce_mod(&self, p: u64) -> Mat {
        assert!(p >= 2 && p < 256);
        let mut m = Mat::zeros(p, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, (self.at(i, j).rem_euclid(p as i64)) as u8);
            }
        }
        m
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.row(i).iter().sum()
    }

    pub fn trace(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.at(i, i)).sum()
    }
}

/// Rank over the rationals via fraction-free (Bareiss) elimination in
/// arbitrary precision. Exact for any size, but entry growth makes it
/// practical only up to a couple hundred rows.
pub fn bareiss_rank(m: &IntMat) -> usize {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pr);
        let pivot = a[rank][col].clone();
        for i in rank + 1..rows {
            let head = std::mem::replace(&mut a[i][col], BigInt::zero());
            for j in col + 1..cols {
                let t = &a[i][j] * &pivot - &head * &a[rank][j];
                debug_assert!((&t % &prev).is_zero(), "Bareiss division not exact");
                a[i][j] = t / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank of the reduction mod `p` (p any prime fitting in u64).
pub fn modular_rank(m: &IntMat, p: u64) -> usize {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|&x| x.rem_euclid(p as i64) as u64)
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let inv = super::inv_mod(a[rank][col], p);
        for j in col..cols {
            a[rank][j] = mulmod(a[rank][j], inv, p);
        }
        let (done, rest) = a.split_at_mut(rank + 1);
        let prow = &done[rank];
        for r in rest.iter_mut() {
            let f = r[col];
            if f != 0 {
                for j in col..cols {
                    let sub = mulmod(f, prow[j], p);
                    r[j] = (r[j] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Exact rational rank. Bareiss up to 64 rows/cols, modular rank at the
/// three fixed `RANK_PRIMES` (which must agree) above that.
pub fn integer_rank(m: &IntMat) -> usize {
    if m.nrows().max(m.ncols()) <= 64 {
        return bareiss_rank(m);
    }
    let r0 = modular_rank(m, RANK_PRIMES[0]);
    let r1 = modular_rank(m, RANK_PRIMES[1]);
    let r2 = modular_rank(m, RANK_PRIMES[2]);
    assert!(
        r0 == r1 && r1 == r2,
        "modular ranks disagree: {r0} {r1} {r2}"
    );
    r0
}
