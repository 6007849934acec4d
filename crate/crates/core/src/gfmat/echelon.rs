//! Incremental reduced row echelon form.
//!
//! The struct maintains a basis in full RREF at all times: every inserted
//! vector is sieved against the existing pivots, and on success the new
//! pivot column is cleared from all older rows. This makes bases canonical,
//! so downstream subspace comparisons are plain equality.
//!
//! GF(2) rows are bit-packed into u64 words; other primes use one byte per
//! entry. Both backends implement the same three primitives (sieve, insert,
//! back-eliminate).

use super::{axpy, inv_mod, Mat, Subspace};

const NONE: u32 = u32::MAX;

enum Repr {
    Bytes(Vec<Vec<u8>>),
    Bits { words: usize, rows: Vec<Vec<u64>> },
}

pub struct Echelon {
    p: u16,
    ambient: usize,
    pivot_to_row: Vec<u32>,
    pivots: Vec<usize>,
    repr: Repr,
}

impl Echelon {
    pub fn new(p: u64, ambient: usize) -> Self {
        assert!(p >= 2 && p < 256);
        let repr = if p == 2 {
            Repr::Bits {
                words: ambient.div_ceil(64),
                rows: Vec::new(),
            }
        } else {
            Repr::Bytes(Vec::new())
        };
        Echelon {
            p: p as u16,
            ambient,
            pivot_to_row: vec![NONE; ambient],
            pivots: Vec::new(),
            repr,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        assert_eq!(v.len(), self.ambient);
        match &mut self.repr {
            Repr::Bytes(rows) => {
                let mut w = v.to_vec();
                let mut lead = None;
                for c in 0..self.ambient {
                    if w[c] != 0 {
                        let r = self.pivot_to_row[c];
                        if r == NONE {
                            // first pivotless column is the new pivot; keep
                            // sieving so the row is reduced at later pivots
                            if lead.is_none() {
                                lead = Some(c);
                            }
                        } else {
                            let f = (self.p - w[c] as u16) as u8;
                            axpy(&mut w, &rows[r as usize], f, self.p);
                        }
                    }
                }
                let Some(c) = lead else { return false };
                let inv = inv_mod(w[c] as u64, self.p as u64) as u8;
                if inv != 1 {
                    let p32 = self.p as u32;
                    for x in w.iter_mut() {
                        *x = ((*x as u32 * inv as u32) % p32) as u8;
                    }
                }
                for r in rows.iter_mut() {
                    let f = r[c];
                    if f != 0 {
                        axpy(r, &w, (self.p - f as u16) as u8, self.p);
                    }
                }
                self.pivot_to_row[c] = rows.len() as u32;
                rows.push(w);
                self.pivots.push(c);
                true
            }
            Repr::Bits { words, rows } => {
                let words = *words;
                let mut w = vec![0u64; words];
                super::pack_row(v, &mut w);
                let lead = Self::bit_sieve(&self.pivot_to_row, rows, words, &mut w);
                let Some(c) = lead else { return false };
                for r in rows.iter_mut() {
                    if r[c >> 6] >> (c & 63) & 1 == 1 {
                        for (a, b) in r.iter_mut().zip(w.iter()) {
                            *a ^= *b;
                        }
                    }
                }
                self.pivot_to_row[c] = rows.len() as u32;
                rows.push(w);
                self.pivots.push(c);
                true
            }
        }
    }

    /// Sieve a packed row against the pivots; returns the new leading column
    /// if the residue is nonzero. The fully reduced residue is left in `w`.
    fn bit_sieve(
        pivot_to_row: &[u32],
        rows: &[Vec<u64>],
        words: usize,
        w: &mut [u64],
    ) -> Option<usize> {
        let ambient = pivot_to_row.len();
        let mut lead = None;
        let mut pos = 0usize;
        while pos < ambient {
            let wi = pos >> 6;
            if wi >= words {
                break;
            }
            let word = w[wi] & (u64::MAX << (pos & 63));
            if word == 0 {
                pos = (wi + 1) << 6;
                continue;
            }
            let c = (wi << 6) + word.trailing_zeros() as usize;
            if c >= ambient {
                break;
            }
            let r = pivot_to_row[c];
            if r == NONE {
                if lead.is_none() {
                    lead = Some(c);
                }
                pos = c + 1;
            } else {
                // pivot rows have nothing before their pivot, XOR from wi on
                let src = &rows[r as usize];
                for (a, b) in w[wi..].iter_mut().zip(src[wi..].iter()) {
                    *a ^= *b;
                }
                pos = c + 1;
            }
        }
        lead
    }

    /// Fully reduce a vector against the current basis (does not insert).
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.ambient);
        match &self.repr {
            Repr::Bytes(rows) => {
                let mut w = v.to_vec();
                for c in 0..self.ambient {
                    if w[c] != 0 {
                        let r = self.pivot_to_row[c];
                        if r != NONE {
                            let f = (self.p - w[c] as u16) as u8;
                            axpy(&mut w, &rows[r as usize], f, self.p);
                        }
                    }
                }
                w
            }
            Repr::Bits { words, rows } => {
                let mut w = vec![0u64; *words];
                super::pack_row(v, &mut w);
                let lead = Self::bit_sieve(&self.pivot_to_row, rows, *words, &mut w);
                let mut out = vec![0u8; self.ambient];
                super::unpack_row(&w, &mut out);
                debug_assert!(lead.map_or(true, |c| out[c] == 1));
                out
            }
        }
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Pivot columns in increasing order.
    pub fn pivots_sorted(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    /// The RREF basis, rows ordered by pivot column.
    pub fn basis_matrix(&self) -> Mat {
        let order = {
            let mut idx: Vec<usize> = (0..self.pivots.len()).collect();
            idx.sort_unstable_by_key(|&i| self.pivots[i]);
            idx
        };
        let mut m = Mat::zeros(self.p as u64, self.pivots.len(), self.ambient);
        match &self.repr {
            Repr::Bytes(rows) => {
                for (out_i, &i) in order.iter().enumerate() {
                    m.row_mut(out_i).copy_from_slice(&rows[i]);
                }
            }
            Repr::Bits { rows, .. } => {
                for (out_i, &i) in order.iter().enumerate() {
                    super::unpack_row(&rows[i], m.row_mut(out_i));
                }
            }
        }
        m
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_echelon(self)
    }
}
