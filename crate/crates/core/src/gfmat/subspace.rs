//! Subspaces of `F^n` stored as canonical RREF bases.

use super::{left_kernel, Echelon, Mat};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    p: u16,
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of F{}^{})", self.dim(), self.p, self.ambient)
    }
}

impl Subspace {
    pub fn zero(p: u64, ambient: usize) -> Self {
        Self::from_echelon(&Echelon::new(p, ambient))
    }

    pub fn full(p: u64, ambient: usize) -> Self {
        let mut e = Echelon::new(p, ambient);
        let mut v = vec![0u8; ambient];
        for i in 0..ambient {
            v[i] = 1;
            e.insert(&v);
            v[i] = 0;
        }
        Self::from_echelon(&e)
    }

    pub fn from_echelon(e: &Echelon) -> Self {
        Subspace {
            p: e.basis_matrix().modulus() as u16,
            ambient: e.ambient(),
            basis: e.basis_matrix(),
            pivots: e.pivots_sorted(),
        }
    }

    /// Span of a set of row vectors.
    pub fn span(p: u64, ambient: usize, rows: impl IntoIterator<Item = Vec<u8>>) -> Self {
        let mut e = Echelon::new(p, ambient);
        for r in rows {
            e.insert(&r);
        }
        Self::from_echelon(&e)
    }

    pub fn modulus(&self) -> u64 {
        self.p as u64
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// RREF basis matrix, one row per basis vector, pivots increasing.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.modulus(), self.ambient);
        for r in self.basis.rows_iter() {
            e.insert(r);
        }
        e
    }

    pub fn contains_vec(&self, v: &[u8]) -> bool {
        self.to_echelon().contains(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        if self.ambient != other.ambient {
            return false;
        }
        let e = other.to_echelon();
        self.basis.rows_iter().all(|r| e.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut e = self.to_echelon();
        for r in other.basis.rows_iter() {
            e.insert(r);
        }
        Subspace::from_echelon(&e)
    }

    /// Intersection by the Zassenhaus block trick: reduce rows
    /// `[u | u]` and `[w | 0]`; echelon rows supported entirely in the right
    /// block form a basis of the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let n = self.ambient;
        let mut e = Echelon::new(self.modulus(), 2 * n);
        let mut aug = vec![0u8; 2 * n];
        for r in self.basis.rows_iter() {
            aug[..n].copy_from_slice(r);
            aug[n..].copy_from_slice(r);
            e.insert(&aug);
        }
        for r in other.basis.rows_iter() {
            aug[..n].copy_from_slice(r);
            aug[n..].iter_mut().for_each(|x| *x = 0);
            e.insert(&aug);
        }
        let basis = e.basis_matrix();
        let mut out = Echelon::new(self.modulus(), n);
        for (i, &pc) in e.pivots_sorted().iter().enumerate() {
            if pc >= n {
                out.insert(&basis.row(i)[n..]);
            }
        }
        Ok(Subspace::from_echelon(&out))
    }

    /// Orthogonal complement with respect to the standard coordinatewise
    /// form: `{v : v . b = 0 for all basis rows b}`.
    pub fn perp(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.modulus(), self.ambient);
        }
        left_kernel(&self.basis.transpose())
    }
}
