//! Direct-sum decompositions and submodule lattices.
//!
//! The permutation module splits along the idempotents of its centralizer
//! algebra, which for a rank-3 action is commutative with basis
//! `{I, A, J - I - A}`; idempotents are found by exhausting the at most
//! `ell^3` algebra elements against the structure constants. General
//! modules split along Fitting elements of their endomorphism algebra.
//! The lattice enumeration walks the submodule poset upward from zero by
//! repeatedly attaching the minimal submodules of each quotient; this is
//! exhaustive because every proper inclusion passes through a minimal one.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use super::homs::hom_from_simple;
use super::meataxe::{rng_below, FactorId, Registry};
use super::GModule;
use crate::error::{Error, Result};
use crate::gfmat::{rowspace, Mat, Subspace};
use crate::permmod::PermutationModule;

/// Multiplication table of the 3-dimensional adjacency algebra in the
/// basis (I, A, B = J - I - A), reduced mod ell, derived from the
/// strongly-regular parameters:
///   A*A = aI + rA + sB
///   A*B = (a-1-r)A + (a-s)B
///   B*B = (N-1-a)I + (N-2a+r)A + (N-2-2a+s)B
struct AdjacencyAlgebra {
    ell: i64,
    aa: [i64; 3],
    ab: [i64; 3],
    bb: [i64; 3],
}

type Triple = [i64; 3];

impl AdjacencyAlgebra {
    fn new(n: i64, a: i64, r: i64, s: i64, ell: i64) -> Self {
        AdjacencyAlgebra {
            ell,
            aa: [a % ell, r % ell, s % ell],
            ab: [0, (a - 1 - r).rem_euclid(ell), (a - s).rem_euclid(ell)],
            bb: [
                (n - 1 - a).rem_euclid(ell),
                (n - 2 * a + r).rem_euclid(ell),
                (n - 2 - 2 * a + s).rem_euclid(ell),
            ],
        }
    }

    fn mul(&self, x: Triple, y: Triple) -> Triple {
        let ell = self.ell;
        let mut out = [0i64; 3];
        // I*I = I, I*A = A, I*B = B
        out[0] += x[0] * y[0];
        out[1] += x[0] * y[1] + x[1] * y[0];
        out[2] += x[0] * y[2] + x[2] * y[0];
        let add = |out: &mut [i64; 3], c: i64, t: &Triple| {
            for i in 0..3 {
                out[i] += c * t[i];
            }
        };
        add(&mut out, x[1] * y[1], &self.aa);
        add(&mut out, x[1] * y[2] + x[2] * y[1], &self.ab);
        add(&mut out, x[2] * y[2], &self.bb);
        out.map(|v| v.rem_euclid(ell))
    }
}

/// Decompose `F P^kappa` along a complete set of orthogonal primitive
/// idempotents of the centralizer algebra. Returns the summands sorted by
/// dimension; their pairwise intersections are verified zero and their
/// dimensions must sum to the number of points.
pub fn centralizer_summands(pm: &PermutationModule, module: &GModule) -> Result<Vec<Subspace>> {
    let n = pm.npoints() as i64;
    let p = pm.params();
    let ell = pm.field().ell() as i64;
    let alg = AdjacencyAlgebra::new(n, p.a, p.r, p.s, ell);

    // sanity: the structure constants match the actual matrices
    debug_assert!({
        let a_int = pm.adjacency_int();
        let sq = a_int.mul(a_int);
        let b = crate::gfmat::IntMat::all_ones(pm.npoints())
            .sub(&crate::gfmat::IntMat::identity(pm.npoints()))
            .sub(a_int);
        sq == crate::gfmat::IntMat::identity(pm.npoints())
            .scale(p.a)
            .add(&a_int.scale(p.r))
            .add(&b.scale(p.s))
    });

    let mut idempotents: Vec<Triple> = Vec::new();
    for x in 0..ell {
        for y in 0..ell {
            for z in 0..ell {
                let e = [x, y, z];
                if alg.mul(e, e) == e && e != [0, 0, 0] {
                    idempotents.push(e);
                }
            }
        }
    }
    // minimal nonzero idempotents under e <= f iff ef = e
    let minimal: Vec<Triple> = idempotents
        .iter()
        .copied()
        .filter(|&e| {
            idempotents
                .iter()
                .all(|&f| f == e || alg.mul(e, f) != f || alg.mul(f, e) != f)
        })
        .collect();
    // they must be pairwise orthogonal and sum to the identity
    let mut sum = [0i64; 3];
    for (i, &e) in minimal.iter().enumerate() {
        for &f in minimal.iter().skip(i + 1) {
            if alg.mul(e, f) != [0, 0, 0] {
                return Err(Error::Inconsistency(
                    "primitive idempotents are not orthogonal".into(),
                ));
            }
        }
        for k in 0..3 {
            sum[k] = (sum[k] + e[k]) % ell;
        }
    }
    if sum != [1, 0, 0] {
        return Err(Error::Inconsistency(
            "primitive idempotents do not sum to the identity".into(),
        ));
    }

    // images of the idempotent matrices
    let npts = pm.npoints();
    let a_mod = pm.adjacency();
    let mut summands = Vec::new();
    let mut total = 0usize;
    for e in &minimal {
        let mut mat = Mat::zeros(ell as u64, npts, npts);
        // xI + yA + zB with B = J - I - A
        let (x, y, z) = (e[0], e[1], e[2]);
        let diag = (x - z).rem_euclid(ell) as u8;
        let acoef = (y - z).rem_euclid(ell) as u8;
        let jcoef = z.rem_euclid(ell) as u8;
        for i in 0..npts {
            for j in 0..npts {
                let mut v = jcoef as u64;
                if i == j {
                    v += diag as u64;
                }
                if a_mod.at(i, j) != 0 {
                    v += acoef as u64 * a_mod.at(i, j) as u64;
                }
                mat.set(i, j, (v % ell as u64) as u8);
            }
        }
        let image = rowspace(&mat);
        if !module.invariant(&image) {
            return Err(Error::NotInvariant);
        }
        total += image.dim();
        summands.push(image);
    }
    if total != npts {
        return Err(Error::Inconsistency(format!(
            "summand dimensions sum to {total}, expected {npts}"
        )));
    }
    for i in 0..summands.len() {
        for j in i + 1..summands.len() {
            if summands[i].intersect(&summands[j])?.dim() != 0 {
                return Err(Error::Inconsistency("summands intersect".into()));
            }
        }
    }
    summands.sort_by(|a, b| {
        a.dim()
            .cmp(&b.dim())
            .then_with(|| a.basis().rows_iter().flatten().cmp(b.basis().rows_iter().flatten()))
    });
    Ok(summands)
}

/// Try to split a module into two complementary invariant pieces using a
/// Fitting element of its endomorphism algebra. `None` means no split was
/// found within the budget (the module may well be indecomposable).
pub fn fitting_split(
    m: &GModule,
    end_basis: &[Mat],
    seed: u64,
) -> Option<(Subspace, Subspace)> {
    if end_basis.len() <= 1 {
        return None;
    }
    let ell = m.field().ell();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..60 {
        let mut e = Mat::zeros(ell, m.dim(), m.dim());
        for b in end_basis {
            let c = rng_below(&mut rng, ell as usize) as u8;
            if c != 0 {
                e = e.add(&b.scale(c));
            }
        }
        if e.is_zero() {
            continue;
        }
        // stabilize: e^(2^t) with 2^t >= dim
        let mut p = e;
        let mut t = 0usize;
        while (1usize << t) < m.dim() {
            p = p.mul(&p);
            t += 1;
        }
        let ker = crate::gfmat::left_kernel(&p);
        if ker.dim() == 0 || ker.dim() == m.dim() {
            continue;
        }
        let img = rowspace(&p);
        if img.dim() + ker.dim() != m.dim() {
            continue;
        }
        if ker.intersect(&img).ok()?.dim() != 0 {
            continue;
        }
        if m.invariant(&ker) && m.invariant(&img) {
            return Some((ker, img));
        }
    }
    None
}

/// All submodules of `m`, by upward closure from zero: for each submodule
/// found, attach the minimal submodules of the quotient by it. The pool
/// must contain every composition factor. Fails above `cap` submodules.
pub fn all_submodules(
    m: &GModule,
    registry: &Registry,
    pool: &[FactorId],
    cap: usize,
) -> Result<Vec<Subspace>> {
    let ell = m.field().ell();
    let key = |s: &Subspace| -> Vec<u8> {
        let mut k = Vec::with_capacity(2 + s.dim() * s.ambient());
        k.push(s.dim() as u8);
        k.push((s.dim() >> 8) as u8);
        for row in s.basis().rows_iter() {
            k.extend_from_slice(row);
        }
        k
    };
    let zero = Subspace::zero(ell, m.dim());
    let mut found: BTreeMap<Vec<u8>, Subspace> = BTreeMap::new();
    found.insert(key(&zero), zero.clone());
    let mut queue = vec![zero];
    while let Some(u) = queue.pop() {
        if found.len() > cap {
            return Err(Error::Inconsistency(format!(
                "lattice enumeration exceeded the cap of {cap}"
            )));
        }
        if u.dim() == m.dim() {
            continue;
        }
        let sq = m.sub_quotient(&u)?;
        for &id in pool {
            let homs = hom_from_simple(registry.entry(id), &sq.quot)?;
            if homs.is_empty() {
                continue;
            }
            // minimal submodules of the quotient with this socle type:
            // images of the nonzero hom combinations up to scalar
            let k = homs.len();
            let mut combos: Vec<Vec<u8>> = Vec::new();
            let mut counter = vec![0u8; k];
            loop {
                // next tuple
                let mut idx = 0;
                loop {
                    if idx == k {
                        break;
                    }
                    counter[idx] += 1;
                    if counter[idx] < ell as u8 {
                        break;
                    }
                    counter[idx] = 0;
                    idx += 1;
                }
                if idx == k {
                    break;
                }
                // projective normalization: first nonzero coefficient is 1
                if counter.iter().find(|&&c| c != 0) == Some(&1) {
                    combos.push(counter.clone());
                }
            }
            for c in combos {
                let mut x = Mat::zeros(ell, registry.dim(id), sq.quot.dim());
                for (j, &cj) in c.iter().enumerate() {
                    if cj != 0 {
                        x = x.add(&homs[j].scale(cj));
                    }
                }
                let image = rowspace(&x);
                if image.dim() != registry.dim(id) {
                    continue; // not injective: not a minimal submodule copy
                }
                let lifted = sq.lift_subspace(&image);
                let kk = key(&lifted);
                if !found.contains_key(&kk) {
                    found.insert(kk, lifted.clone());
                    queue.push(lifted);
                }
            }
        }
    }
    let mut out: Vec<Subspace> = found.into_values().collect();
    out.sort_by_key(|s| s.dim());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{standard_space, Family};
    use crate::gfmat::PrimeField;
    use crate::permmod::build_module;
    use crate::repanalysis::homs::hom_space;
    use crate::repanalysis::meataxe::{composition_series, factor_multiset};

    fn minus4(ell: u64) -> (PermutationModule, GModule) {
        let sp = standard_space(Family::Minus, 4).unwrap();
        let pm = build_module(&sp, 1, PrimeField::new(ell).unwrap()).unwrap();
        let gm = GModule::from_permutations(pm.field(), &pm.action().gens);
        (pm, gm)
    }

    #[test]
    fn summands_semisimple_minus4() {
        // ell = 7 is coprime to everything: F P = T ⊕ U' ⊕ U'' of dims 1, 5, 9
        let (pm, gm) = minus4(7);
        let parts = centralizer_summands(&pm, &gm).unwrap();
        let dims: Vec<usize> = parts.iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![1, 5, 9]);
    }

    #[test]
    fn summands_ell_divides_npoints() {
        // ell = 5 divides 15: T ⊆ S, two summands of dims 5 and 10
        // (the uniserial piece T ⊂ U' ⊂ U of dims 1 < 5... here roots are
        // -1, 3 mod 5: distinct, so the split is U'_{c1} ⊕ U_{c2})
        let (pm, gm) = minus4(5);
        let parts = centralizer_summands(&pm, &gm).unwrap();
        let dims: Vec<usize> = parts.iter().map(|s| s.dim()).collect();
        assert_eq!(dims.iter().sum::<usize>(), 15);
        assert_eq!(dims.len(), 2);
    }

    #[test]
    fn summands_mod2_trivial_plus_s() {
        // 15 is odd, the two graph submodules coincide: T ⊕ S
        let (pm, gm) = minus4(2);
        let parts = centralizer_summands(&pm, &gm).unwrap();
        let dims: Vec<usize> = parts.iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![1, 14]);
    }

    #[test]
    fn fitting_splits_t_plus_s() {
        let (_, gm) = minus4(2);
        let end = hom_space(&gm, &gm);
        let (a, b) = fitting_split(&gm, &end, 42).expect("T ⊕ S splits");
        let mut dims = [a.dim(), b.dim()];
        dims.sort_unstable();
        assert_eq!(dims, [1, 14]);
        assert_eq!(a.sum(&b).dim(), 15);
    }

    #[test]
    fn lattice_minus4_mod2_is_small() {
        // submodules of F P^{+1} = T ⊕ (uniserial of length 5 with two
        // trivial layers): 6-chain × {0, T} and two diagonal twists = 14
        let (_, gm) = minus4(2);
        let mut reg = Registry::new();
        let pool_list = composition_series(&gm, &mut reg, 3).unwrap();
        let pool: Vec<FactorId> = factor_multiset(&pool_list)
            .into_iter()
            .map(|(id, _)| id)
            .collect();
        let lattice = all_submodules(&gm, &reg, &pool, 1000).unwrap();
        assert_eq!(lattice.len(), 14);
        for s in &lattice {
            assert!(gm.invariant(s));
        }
        // the sum-zero submodule S is uniserial: its lattice is a 6-chain
        let s_sub = {
            let mut v = vec![0u8; 15];
            v[0] = 1;
            v[1] = 1;
            gm.spin_one(&v)
        };
        assert_eq!(s_sub.dim(), 14);
        let sq = gm.sub_quotient(&s_sub).unwrap();
        let s_lattice = all_submodules(&sq.sub, &reg, &pool, 1000).unwrap();
        assert_eq!(s_lattice.len(), 6);
        let dims: Vec<usize> = s_lattice.iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![0, 4, 5, 9, 10, 14]);
        for w in s_lattice.windows(2) {
            assert!(w[0].is_subspace_of(&w[1]), "chain must be totally ordered");
        }
    }
}
