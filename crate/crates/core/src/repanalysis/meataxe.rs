//! Randomized (seeded, deterministic) irreducibility testing, composition
//! series and isomorphism testing.
//!
//! The irreducibility certificate is the standard one: an algebra element
//! with one-dimensional kernel whose kernel vector spins to the whole
//! module and whose transpose-kernel vector spins to the whole transposed
//! module. Reducibility witnesses are always returned as verified invariant
//! subspaces. A module that exhausts the retry budget reports inconclusive
//! rather than ever certifying falsely.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GModule;
use crate::error::{Error, Result};
use crate::gfmat::{left_kernel, Mat, Subspace};

/// Retry budget for random algebra elements per call.
const WORD_BUDGET: usize = 200;

/// A formal element of the group algebra: a sum of scaled monomials in
/// the generators. Words evaluate in any module over the same generator
/// list, which is what lets one element be compared across modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub terms: Vec<(u8, Vec<u16>)>,
}

impl Word {
    pub fn eval(&self, m: &GModule) -> Mat {
        let ell = m.field().ell();
        let n = m.dim();
        let mut acc = Mat::zeros(ell, n, n);
        for (coeff, mono) in &self.terms {
            let mut prod = Mat::identity(ell, n);
            for &g in mono {
                prod = prod.mul(m.gen_mat(g as usize));
            }
            acc = acc.add(&prod.scale(*coeff));
        }
        acc
    }
}

pub(crate) fn rng_below(rng: &mut ChaCha8Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// A short random algebra element: 2-4 terms, monomials of length 1-3,
/// nonzero coefficients, plus an occasional scalar term.
fn random_word(rng: &mut ChaCha8Rng, ngens: usize, ell: u64) -> Word {
    let nterms = 2 + rng_below(rng, 3);
    let mut terms = Vec::with_capacity(nterms + 1);
    for _ in 0..nterms {
        let len = 1 + rng_below(rng, 3);
        let mono: Vec<u16> = (0..len).map(|_| rng_below(rng, ngens) as u16).collect();
        let coeff = 1 + rng_below(rng, (ell - 1) as usize) as u8;
        terms.push((coeff, mono));
    }
    if rng_below(rng, 2) == 0 {
        let coeff = 1 + rng_below(rng, (ell - 1) as usize) as u8;
        terms.push((coeff, Vec::new()));
    }
    Word { terms }
}

/// Outcome of the irreducibility test.
pub enum Verdict {
    /// Certified irreducible; the word (absent for 1-dimensional modules)
    /// has nullity one with both spins full.
    Irreducible(Option<Word>),
    /// A verified proper nonzero invariant subspace.
    Reducible(Subspace),
}

pub fn meataxe_irreducible(m: &GModule, seed: u64) -> Result<Verdict> {
    assert!(m.dim() >= 1, "empty module");
    if m.dim() == 1 {
        return Ok(Verdict::Irreducible(None));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ell = m.field().ell();
    let tm = m.transpose_module();
    for _ in 0..WORD_BUDGET {
        let word = random_word(&mut rng, m.ngens(), ell);
        let mw = word.eval(m);
        let ker = left_kernel(&mw);
        let d = ker.dim();
        if d == 0 || d == m.dim() {
            continue;
        }
        // any kernel vector generating a proper subspace settles it
        for row in ker.basis().rows_iter().take(6) {
            let sp = m.spin_one(row);
            if sp.dim() < m.dim() {
                debug_assert!(m.invariant(&sp));
                return Ok(Verdict::Reducible(sp));
            }
        }
        if d == 1 {
            // Norton: check the transpose side with the same element
            let tker = left_kernel(&mw.transpose());
            debug_assert_eq!(tker.dim(), 1);
            let tspin = tm.spin_one(tker.basis().row(0));
            if tspin.dim() < m.dim() {
                let witness = tspin.perp();
                debug_assert!(m.invariant(&witness));
                return Ok(Verdict::Reducible(witness));
            }
            return Ok(Verdict::Irreducible(Some(word)));
        }
    }
    Err(Error::MeataxeInconclusive)
}

/// Find an algebra element of nullity exactly one, with its kernel vector.
pub(crate) fn nullity_one_word(m: &GModule, seed: u64) -> Result<(Word, Vec<u8>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa5a5_5a5a_dead_beef);
    let ell = m.field().ell();
    for _ in 0..WORD_BUDGET {
        let word = random_word(&mut rng, m.ngens(), ell);
        let ker = left_kernel(&word.eval(m));
        if ker.dim() == 1 {
            return Ok((word, ker.basis().row(0).to_vec()));
        }
    }
    Err(Error::MeataxeInconclusive)
}

/// Spin path from a seed vector: raw image vectors (a basis of the module
/// when the seed generates), with for each basis vector the (parent, gen)
/// step that produced it. Transportable to any module with the same
/// generator list.
pub(crate) struct SpinPath {
    pub basis: Mat,
    pub steps: Vec<(usize, usize)>,
}

pub(crate) fn spin_path(m: &GModule, seed_vec: &[u8]) -> Option<SpinPath> {
    let mut ech = crate::gfmat::Echelon::new(m.field().ell(), m.dim());
    if !ech.insert(seed_vec) {
        return None;
    }
    let mut rows: Vec<Vec<u8>> = vec![seed_vec.to_vec()];
    let mut steps: Vec<(usize, usize)> = Vec::new();
    let mut qi = 0;
    while qi < rows.len() && rows.len() < m.dim() {
        for k in 0..m.ngens() {
            let w = m.apply_gen(k, &rows[qi]);
            if ech.insert(&w) {
                rows.push(w);
                steps.push((qi, k));
                if rows.len() == m.dim() {
                    break;
                }
            }
        }
        qi += 1;
        if qi == rows.len() && rows.len() < m.dim() {
            return None; // seed does not generate
        }
    }
    if rows.len() < m.dim() {
        return None;
    }
    Some(SpinPath {
        basis: Mat::from_rows(m.field().ell(), rows),
        steps,
    })
}

/// Replay the steps of a spin path on another module from a given seed.
pub(crate) fn replay_path(m: &GModule, seed_vec: &[u8], steps: &[(usize, usize)]) -> Mat {
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(steps.len() + 1);
    rows.push(seed_vec.to_vec());
    for &(parent, gen) in steps {
        let w = m.apply_gen(gen, &rows[parent]);
        rows.push(w);
    }
    Mat::from_rows(m.field().ell(), rows)
}

/// An irreducible module registered for isomorphism testing, with its
/// nullity-one word and standard-basis data cached.
pub struct SimpleEntry {
    pub module: GModule,
    pub word: Option<Word>,
    kernel_vec: Vec<u8>,
    std_basis_inv: Mat,
    steps: Vec<(usize, usize)>,
}

impl SimpleEntry {
    fn build(module: GModule, cert: Option<Word>, seed: u64) -> Result<SimpleEntry> {
        if module.dim() == 1 {
            let one = Mat::identity(module.field().ell(), 1);
            return Ok(SimpleEntry {
                module,
                word: None,
                kernel_vec: vec![1],
                std_basis_inv: one,
                steps: Vec::new(),
            });
        }
        let (word, kernel_vec) = match cert {
            Some(w) => {
                let ker = left_kernel(&w.eval(&module));
                debug_assert_eq!(ker.dim(), 1);
                (w, ker.basis().row(0).to_vec())
            }
            None => nullity_one_word(&module, seed)?,
        };
        let path = spin_path(&module, &kernel_vec)
            .ok_or_else(|| Error::Inconsistency("kernel vector fails to generate".into()))?;
        let std_basis_inv = path
            .basis
            .inverse()
            .ok_or_else(|| Error::Inconsistency("standard basis is singular".into()))?;
        Ok(SimpleEntry {
            module,
            word: Some(word),
            kernel_vec,
            std_basis_inv,
            steps: path.steps,
        })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub(crate) fn kernel_vec(&self) -> &[u8] {
        &self.kernel_vec
    }

    pub(crate) fn std_basis_inv(&self) -> &Mat {
        &self.std_basis_inv
    }

    pub(crate) fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    /// Does this entry's module admit an isomorphism onto `other`?
    /// `other` must itself be irreducible.
    pub fn isomorphic_to(&self, other: &GModule) -> bool {
        if self.module.dim() != other.dim() {
            return false;
        }
        if self.module.dim() == 1 {
            return (0..self.module.ngens())
                .all(|k| self.module.gen_mat(k).at(0, 0) == other.gen_mat(k).at(0, 0));
        }
        let word = self.word.as_ref().expect("non-trivial entry has a word");
        let mw = word.eval(other);
        let ker = left_kernel(&mw);
        if ker.dim() != 1 {
            return false; // an isomorphism would preserve the nullity
        }
        let b2 = replay_path(other, ker.basis().row(0), &self.steps);
        let x = self.std_basis_inv.mul(&b2);
        if x.is_zero() {
            return false;
        }
        (0..self.module.ngens())
            .all(|k| self.module.gen_mat(k).mul(&x) == x.mul(other.gen_mat(k)))
    }
}

/// Identifier of an isomorphism class discovered during a run.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorId(pub usize);

/// Registry of pairwise non-isomorphic irreducibles. Shared across the
/// modules of one configuration so cross-orbit coincidences get the same
/// id.
pub struct Registry {
    entries: Vec<SimpleEntry>,
}

impl Registry {
    pub fn new() -> Self {
        Registry { entries: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, id: FactorId) -> &SimpleEntry {
        &self.entries[id.0]
    }

    pub fn dim(&self, id: FactorId) -> usize {
        self.entries[id.0].dim()
    }

    /// Identify an irreducible module up to isomorphism, registering it if
    /// new. `cert` is the word from the irreducibility verdict, if any.
    pub fn classify(&mut self, module: GModule, cert: Option<Word>, seed: u64) -> Result<FactorId> {
        for (i, e) in self.entries.iter().enumerate() {
            if e.isomorphic_to(&module) {
                return Ok(FactorId(i));
            }
        }
        let entry = SimpleEntry::build(module, cert, seed)?;
        self.entries.push(entry);
        Ok(FactorId(self.entries.len() - 1))
    }

    /// Convenience wrapper running the irreducibility test first.
    pub fn classify_irreducible(&mut self, module: GModule, seed: u64) -> Result<FactorId> {
        match meataxe_irreducible(&module, seed)? {
            Verdict::Irreducible(cert) => self.classify(module, cert, seed),
            Verdict::Reducible(_) => Err(Error::Inconsistency(
                "classify_irreducible got a reducible module".into(),
            )),
        }
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::new()
    }
}

fn derive_seed(seed: u64, salt: u64) -> u64 {
    seed.wrapping_mul(6364136223846793005)
        .wrapping_add(2 * salt + 1)
}

/// Composition factors of `m` as registry ids, in the order of one
/// particular composition series (submodule factors first). The multiset
/// is well defined by Jordan-Hoelder; callers re-run with a second seed
/// when they want that checked.
pub fn composition_series(m: &GModule, registry: &mut Registry, seed: u64) -> Result<Vec<FactorId>> {
    if m.dim() == 0 {
        return Ok(Vec::new());
    }
    match meataxe_irreducible(m, seed)? {
        Verdict::Irreducible(cert) => Ok(vec![registry.classify(m.clone(), cert, seed)?]),
        Verdict::Reducible(u) => {
            let sq = m.sub_quotient(&u)?;
            let mut out = composition_series(&sq.sub, registry, derive_seed(seed, 1))?;
            out.extend(composition_series(&sq.quot, registry, derive_seed(seed, 2))?);
            Ok(out)
        }
    }
}

/// Multiset view of a factor list: sorted (id, multiplicity) pairs.
pub fn factor_multiset(factors: &[FactorId]) -> Vec<(FactorId, usize)> {
    let mut counts: std::collections::BTreeMap<FactorId, usize> = Default::default();
    for &f in factors {
        *counts.entry(f).or_default() += 1;
    }
    counts.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{standard_space, Family};
    use crate::gfmat::PrimeField;
    use crate::permmod::build_module;

    fn orbit_module(family: Family, m: usize, kappa: u8, ell: u64) -> GModule {
        let sp = standard_space(family, m).unwrap();
        let pm = build_module(&sp, kappa, PrimeField::new(ell).unwrap()).unwrap();
        GModule::from_permutations(pm.field(), &pm.action().gens)
    }

    #[test]
    fn one_dimensional_is_irreducible() {
        let f = PrimeField::new(5).unwrap();
        let m = GModule::new(f, vec![Mat::identity(5, 1)]);
        assert!(matches!(meataxe_irreducible(&m, 1).unwrap(), Verdict::Irreducible(None)));
    }

    #[test]
    fn permutation_module_is_reducible() {
        let m = orbit_module(Family::Minus, 4, 1, 2);
        match meataxe_irreducible(&m, 7).unwrap() {
            Verdict::Reducible(u) => {
                assert!(u.dim() > 0 && u.dim() < 15);
                assert!(m.invariant(&u));
            }
            Verdict::Irreducible(_) => panic!("F P is never irreducible"),
        }
    }

    #[test]
    fn minus4_mod2_composition_factors() {
        // F P^{+1} at minus-type m=4, ell=2: factors F (x3), X (x2, dim 4), Y (dim 4)
        let m = orbit_module(Family::Minus, 4, 1, 2);
        let mut reg = Registry::new();
        let factors = composition_series(&m, &mut reg, 11).unwrap();
        let mut dims: Vec<usize> = factors.iter().map(|&f| reg.dim(f)).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 1, 4, 4, 4]);
        // seed independence of the multiset
        let factors2 = composition_series(&m, &mut reg, 5555).unwrap();
        assert_eq!(factor_multiset(&factors), factor_multiset(&factors2));
        // the two 4-dimensional classes: one appears twice, the other once
        let ms = factor_multiset(&factors);
        let mut four_mults: Vec<usize> = ms
            .iter()
            .filter(|(id, _)| reg.dim(*id) == 4)
            .map(|&(_, c)| c)
            .collect();
        four_mults.sort_unstable();
        assert_eq!(four_mults, vec![1, 2]);
    }

    #[test]
    fn cross_orbit_factor_sharing_minus4() {
        // the twice-repeated factor of F P^{+1} appears once in F P^{-1}
        let mp = orbit_module(Family::Minus, 4, 1, 2);
        let mm = orbit_module(Family::Minus, 4, 2, 2);
        let mut reg = Registry::new();
        let fp = composition_series(&mp, &mut reg, 3).unwrap();
        let fm = composition_series(&mm, &mut reg, 4).unwrap();
        let msp = factor_multiset(&fp);
        let msm = factor_multiset(&fm);
        let x_id = msp.iter().find(|(id, c)| reg.dim(*id) == 4 && *c == 2).unwrap().0;
        let y_id = msp.iter().find(|(id, c)| reg.dim(*id) == 4 && *c == 1).unwrap().0;
        assert_eq!(msm.iter().find(|(id, _)| *id == x_id).unwrap().1, 1);
        assert_eq!(msm.iter().find(|(id, _)| *id == y_id).unwrap().1, 2);
    }

    #[test]
    fn iso_test_respects_inequivalence() {
        // ell = 7 is generic for this space (7 divides neither 10 nor 15):
        // F ⊕ X(5) ⊕ Z(9), three distinct classes
        let m = orbit_module(Family::Minus, 4, 1, 7);
        let mut reg = Registry::new();
        let factors = composition_series(&m, &mut reg, 21).unwrap();
        let ms = factor_multiset(&factors);
        assert_eq!(ms.len(), 3);
        for (id, c) in &ms {
            assert_eq!(*c, 1, "factor {id:?} should appear once");
        }
        let dims: std::collections::BTreeSet<usize> =
            ms.iter().map(|(id, _)| reg.dim(*id)).collect();
        assert_eq!(dims.into_iter().collect::<Vec<_>>(), vec![1, 5, 9]);

        // and the ell = 5 class (5 | 3^2+1) has the uniserial piece:
        // factors F x2, X(5), Z(8)
        let m5 = orbit_module(Family::Minus, 4, 1, 5);
        let mut reg5 = Registry::new();
        let f5 = composition_series(&m5, &mut reg5, 21).unwrap();
        let mut dims5: Vec<usize> = f5.iter().map(|&id| reg5.dim(id)).collect();
        dims5.sort_unstable();
        assert_eq!(dims5, vec![1, 1, 5, 8]);
    }
}
