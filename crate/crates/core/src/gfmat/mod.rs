//! Exact dense linear algebra over small prime fields GF(p), plus exact
//! integer-matrix ranks.
//!
//! Conventions, used throughout the crate:
//!
//! * vectors are **rows**, matrices act on the right (`v * M`);
//! * `kernel` therefore means the left kernel `{v : v M = 0}`;
//! * subspaces are stored as reduced row-echelon bases, so equal subspaces
//!   compare equal bit for bit.
//!
//! Entries are one byte each with lazy reduction; GF(2) work is routed
//! through bit-packed kernels inside [`Echelon`] and [`Mat::mul`].

pub mod echelon;
pub mod intmat;
pub mod subspace;

pub use echelon::Echelon;
pub use intmat::{bareiss_rank, integer_rank, modular_rank, IntMat, RANK_PRIMES};
pub use subspace::Subspace;

use crate::error::{Error, Result};

/// The coefficient field GF(ell) of a module analysis run.
///
/// `ell` must be a prime different from 3 (the defining characteristic of
/// the groups under study) and below 256 so entries fit in a byte.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct PrimeField {
    ell: u16,
}

impl PrimeField {
    pub fn new(ell: u64) -> Result<Self> {
        if ell == 3 || ell >= 256 || !is_prime(ell) {
            return Err(Error::BadModulus(ell));
        }
        Ok(Self { ell: ell as u16 })
    }

    pub fn ell(&self) -> u64 {
        self.ell as u64
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplicative inverse mod a prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "zero has no inverse");
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// `dst += factor * src` entrywise mod p. Uses a 256-entry product table so
/// the inner loop is add/compare only.
pub(crate) fn axpy(dst: &mut [u8], src: &[u8], factor: u8, p: u16) {
    debug_assert_eq!(dst.len(), src.len());
    if factor == 0 {
        return;
    }
    let mut tbl = [0u8; 256];
    for x in 0..p as usize {
        tbl[x] = ((factor as u32 * x as u32) % p as u32) as u8;
    }
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        let t = *d as u16 + tbl[*s as usize] as u16;
        *d = if t >= p { (t - p) as u8 } else { t as u8 };
    }
}

/// Dense matrix over GF(p), row-major, one byte per entry.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    p: u16,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat({}x{} mod {})", self.rows, self.cols, self.p)?;
        for i in 0..self.rows.min(12) {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        if self.rows > 12 {
            writeln!(f, "  ...")?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        assert!(p >= 2 && p < 256, "modulus out of range");
        Self {
            p: p as u16,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: Vec<Vec<u8>>) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(p, rows.len(), ncols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols, "ragged rows");
            m.data[i * ncols..(i + 1) * ncols].copy_from_slice(r);
        }
        debug_assert!(m.data.iter().all(|&x| (x as u16) < m.p));
        m
    }

    /// Permutation matrix for the map `i -> perm[i]` in row-vector
    /// convention: `e_i * P = e_{perm[i]}`.
    pub fn permutation(p: u64, perm: &[u32]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(p, n, n);
        for (i, &img) in perm.iter().enumerate() {
            m.set(i, img as usize, 1);
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.p as u64
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!((v as u16) < self.p);
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[u8]> {
        self.data.chunks_exact(self.cols.max(1))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.modulus(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols, self.p), (other.rows, other.cols, other.p));
        let mut out = self.clone();
        for (d, s) in out.data.iter_mut().zip(other.data.iter()) {
            let t = *d as u16 + *s as u16;
            *d = if t >= self.p { (t - self.p) as u8 } else { t as u8 };
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols, self.p), (other.rows, other.cols, other.p));
        let mut out = self.clone();
        for (d, s) in out.data.iter_mut().zip(other.data.iter()) {
            let t = *d as i16 - *s as i16;
            *d = if t < 0 { (t + self.p as i16) as u8 } else { t as u8 };
        }
        out
    }

    pub fn scale(&self, c: u8) -> Mat {
        let mut out = self.clone();
        let p = self.p as u32;
        for d in out.data.iter_mut() {
            *d = ((*d as u32 * c as u32) % p) as u8;
        }
        out
    }

    /// Scalar matrix `c I` plus self (square only): `self + c*I`.
    pub fn add_scalar_diag(&self, c: u8) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            let t = out.at(i, i) as u16 + c as u16;
            out.set(i, i, if t >= self.p { (t - self.p) as u8 } else { t as u8 });
        }
        out
    }

    /// Matrix product. GF(2) goes through a bit-packed XOR kernel, the
    /// general case accumulates u64 rows with a single final reduction.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Mat::zeros(self.modulus(), self.rows, other.cols);
        if self.p == 2 {
            let words = other.cols.div_ceil(64);
            let mut packed = vec![0u64; other.rows * words];
            for k in 0..other.rows {
                pack_row(other.row(k), &mut packed[k * words..(k + 1) * words]);
            }
            let mut acc = vec![0u64; words];
            for i in 0..self.rows {
                acc.iter_mut().for_each(|w| *w = 0);
                for k in 0..self.cols {
                    if self.at(i, k) != 0 {
                        let src = &packed[k * words..(k + 1) * words];
                        for (a, s) in acc.iter_mut().zip(src.iter()) {
                            *a ^= *s;
                        }
                    }
                }
                unpack_row(&acc, out.row_mut(i));
            }
        } else {
            let p = self.p as u64;
            let mut acc = vec![0u64; other.cols];
            for i in 0..self.rows {
                acc.iter_mut().for_each(|w| *w = 0);
                for k in 0..self.cols {
                    let a = self.at(i, k) as u64;
                    if a != 0 {
                        let src = other.row(k);
                        for (ac, s) in acc.iter_mut().zip(src.iter()) {
                            *ac += a * *s as u64;
                        }
                    }
                }
                let dst = out.row_mut(i);
                for (d, a) in dst.iter_mut().zip(acc.iter()) {
                    *d = (*a % p) as u8;
                }
            }
        }
        out
    }

    /// `v * self` for a row vector `v`.
    pub fn apply_row(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.rows);
        let p = self.p as u64;
        let mut acc = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a != 0 {
                let src = self.row(k);
                for (ac, s) in acc.iter_mut().zip(src.iter()) {
                    *ac += a as u64 * *s as u64;
                }
            }
        }
        acc.into_iter().map(|x| (x % p) as u8).collect()
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let x = solve_right(self, &Mat::identity(self.modulus(), self.rows))?;
        Some(x)
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [u8] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }
}

pub(crate) fn pack_row(row: &[u8], out: &mut [u64]) {
    out.iter_mut().for_each(|w| *w = 0);
    for (j, &x) in row.iter().enumerate() {
        if x != 0 {
            out[j >> 6] |= 1u64 << (j & 63);
        }
    }
}

pub(crate) fn unpack_row(words: &[u64], out: &mut [u8]) {
    for (j, o) in out.iter_mut().enumerate() {
        *o = ((words[j >> 6] >> (j & 63)) & 1) as u8;
    }
}

/// Unique reduced row-echelon form, with rank and pivot columns.
pub fn rref(m: &Mat) -> (Mat, usize, Vec<usize>) {
    let mut ech = Echelon::new(m.modulus(), m.ncols());
    for r in m.rows_iter() {
        ech.insert(r);
    }
    let rank = ech.rank();
    let pivots = ech.pivots_sorted();
    (ech.basis_matrix(), rank, pivots)
}

/// Row space of `m` as a subspace of `F^cols`.
pub fn rowspace(m: &Mat) -> Subspace {
    let mut ech = Echelon::new(m.modulus(), m.ncols());
    for r in m.rows_iter() {
        ech.insert(r);
    }
    Subspace::from_echelon(&ech)
}

/// Right nullspace `{x : m x^T = 0}` as row vectors in `F^cols`.
fn nullspace(m: &Mat) -> Subspace {
    let (r, _rank, pivots) = rref(m);
    let p = m.modulus();
    let n = m.ncols();
    let is_pivot = {
        let mut v = vec![false; n];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut ech = Echelon::new(p, n);
    for f in 0..n {
        if is_pivot[f] {
            continue;
        }
        let mut x = vec![0u8; n];
        x[f] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            let v = r.at(i, f);
            if v != 0 {
                x[pc] = (p as u16 - v as u16) as u8;
            }
        }
        ech.insert(&x);
    }
    Subspace::from_echelon(&ech)
}

/// Left kernel `{v : v m = 0}`, a subspace of `F^rows`.
pub fn left_kernel(m: &Mat) -> Subspace {
    nullspace(&m.transpose())
}

/// Any solution `X` of `a X = b`, or `None` if the system is inconsistent.
/// Free coordinates are set to zero.
pub fn solve_right(a: &Mat, b: &Mat) -> Option<Mat> {
    assert_eq!(a.modulus(), b.modulus());
    assert_eq!(a.nrows(), b.nrows(), "row count mismatch");
    let (ca, cb) = (a.ncols(), b.ncols());
    let mut ech = Echelon::new(a.modulus(), ca + cb);
    let mut aug = vec![0u8; ca + cb];
    for i in 0..a.nrows() {
        aug[..ca].copy_from_slice(a.row(i));
        aug[ca..].copy_from_slice(b.row(i));
        ech.insert(&aug);
    }
    if ech.pivots_sorted().iter().any(|&c| c >= ca) {
        return None;
    }
    let basis = ech.basis_matrix();
    let pivots = ech.pivots_sorted();
    let mut x = Mat::zeros(a.modulus(), ca, cb);
    for (i, &pc) in pivots.iter().enumerate() {
        for j in 0..cb {
            x.set(pc, j, basis.at(i, ca + j));
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests;
