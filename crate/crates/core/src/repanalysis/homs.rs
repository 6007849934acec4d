//! Hom spaces, socles and socle series.
//!
//! Homs out of an irreducible source use the standard-basis method: a
//! nullity-one algebra element pins the image of the source's kernel
//! vector inside the kernel of the same element on the target, and the
//! spin path extends each candidate linearly; the intertwining conditions
//! then cut out the Hom space as a small linear system. The general
//! `hom_space` solves the full intertwining system directly and refines
//! generator by generator.

use super::meataxe::{replay_path, FactorId, Registry, SimpleEntry};
use super::GModule;
use crate::error::{Error, Result};
use crate::gfmat::{left_kernel, Echelon, Mat, Subspace};

/// Basis of `Hom(S, M)` for a registered irreducible `S`, as `dim S x dim M`
/// matrices in the original coordinates of both modules.
pub fn hom_from_simple(entry: &SimpleEntry, m: &GModule) -> Result<Vec<Mat>> {
    let ell = m.field().ell();
    if entry.dim() == 1 {
        // homs out of a 1-dimensional module are its lambda-eigenvectors,
        // simultaneously for all generators
        let mut common: Option<Subspace> = None;
        for k in 0..m.ngens() {
            let lambda = entry.module.gen_mat(k).at(0, 0);
            let shifted = m
                .gen_mat(k)
                .add_scalar_diag(((ell - lambda as u64) % ell) as u8);
            let ker = left_kernel(&shifted);
            common = Some(match common {
                None => ker,
                Some(c) => c.intersect(&ker)?,
            });
        }
        let common = common.expect("at least one generator");
        return Ok(common
            .basis()
            .rows_iter()
            .map(|r| Mat::from_rows(ell, vec![r.to_vec()]))
            .collect());
    }

    let word = entry.word.as_ref().expect("non-trivial entry has a word");
    let target_kernel = left_kernel(&word.eval(m));
    if target_kernel.dim() == 0 {
        return Ok(Vec::new());
    }
    // candidate map for each kernel vector, transported along the path
    let mut candidates: Vec<Mat> = Vec::new();
    for w in target_kernel.basis().rows_iter() {
        let images = replay_path(m, w, entry.steps());
        candidates.push(entry.std_basis_inv().mul(&images));
    }
    // a combination sum c_j X_j is a hom iff it intertwines every generator
    let k = candidates.len();
    let residual_len = entry.module.ngens() * entry.dim() * m.dim();
    let mut residuals = Mat::zeros(ell, k, residual_len);
    for (j, x) in candidates.iter().enumerate() {
        let mut off = 0;
        for g in 0..entry.module.ngens() {
            let r = entry.module.gen_mat(g).mul(x).sub(&x.mul(m.gen_mat(g)));
            for i in 0..r.nrows() {
                residuals.row_mut(j)[off..off + r.ncols()].copy_from_slice(r.row(i));
                off += r.ncols();
            }
        }
    }
    let combos = left_kernel(&residuals);
    let mut homs = Vec::with_capacity(combos.dim());
    for c in combos.basis().rows_iter() {
        let mut x = Mat::zeros(ell, entry.dim(), m.dim());
        for (j, &cj) in c.iter().enumerate() {
            if cj != 0 {
                x = x.add(&candidates[j].scale(cj));
            }
        }
        homs.push(x);
    }
    Ok(homs)
}

/// Socle of `m`: the sum of the images of all homs from the registered
/// pool, with the layer's factor multiplicities. Fails if the pool misses
/// a constituent (detected by a zero socle on a nonzero module) or if an
/// endomorphism ring exceeds the ground field (dimension bookkeeping).
pub fn socle(
    m: &GModule,
    registry: &Registry,
    pool: &[FactorId],
) -> Result<(Subspace, Vec<(FactorId, usize)>)> {
    let mut ech = Echelon::new(m.field().ell(), m.dim());
    let mut layer = Vec::new();
    for &id in pool {
        let homs = hom_from_simple(registry.entry(id), m)?;
        if homs.is_empty() {
            continue;
        }
        for x in &homs {
            for row in 0..x.nrows() {
                ech.insert(x.row(row));
            }
        }
        layer.push((id, homs.len()));
    }
    let expected: usize = layer.iter().map(|(id, c)| registry.dim(*id) * c).sum();
    if ech.rank() != expected {
        return Err(Error::Inconsistency(format!(
            "socle dimension {} does not match hom bookkeeping {} (endomorphism ring larger than the ground field?)",
            ech.rank(),
            expected
        )));
    }
    if m.dim() > 0 && ech.rank() == 0 {
        return Err(Error::Inconsistency(
            "zero socle: the factor pool is incomplete".into(),
        ));
    }
    Ok((Subspace::from_echelon(&ech), layer))
}

/// Socle series data: layers from the socle upward, and the ascending
/// chain of subspaces of the original module (the last one is everything).
pub struct SocleSeries {
    pub layers: Vec<Vec<(FactorId, usize)>>,
    pub chain: Vec<Subspace>,
}

impl SocleSeries {
    pub fn layer_dims(&self, registry: &Registry) -> Vec<usize> {
        self.layers
            .iter()
            .map(|l| l.iter().map(|(id, c)| registry.dim(*id) * c).sum())
            .collect()
    }
}

/// Iterated socles. The pool must contain every composition factor of `m`
/// (run `composition_series` first).
pub fn socle_series(m: &GModule, registry: &Registry, pool: &[FactorId]) -> Result<SocleSeries> {
    let mut layers = Vec::new();
    let mut chain: Vec<Subspace> = Vec::new();
    let mut current = m.clone();
    // stack of quotient maps from the original module down to `current`
    let mut stack: Vec<super::SubQuotient> = Vec::new();
    loop {
        let (soc, layer) = socle(&current, registry, pool)?;
        layers.push(layer);
        // lift the socle through the quotient stack into original coordinates
        let mut lifted = soc.clone();
        for sq in stack.iter().rev() {
            lifted = sq.lift_subspace(&lifted);
        }
        chain.push(lifted);
        if soc.dim() == current.dim() {
            break;
        }
        let sq = current.sub_quotient(&soc)?;
        let next = sq.quot.clone();
        stack.push(sq);
        current = next;
    }
    Ok(SocleSeries { layers, chain })
}

/// Multiset of head (top semisimple quotient) factors: the socle of the
/// dual, classified in the same registry. New classes may be registered
/// when a factor is not self-dual.
pub fn head_multiset(
    m: &GModule,
    registry: &mut Registry,
    pool: &[FactorId],
    seed: u64,
) -> Result<Vec<(FactorId, usize)>> {
    let dual = m.dual();
    // map each pool factor to its dual's class
    let mut out: Vec<(FactorId, usize)> = Vec::new();
    for &id in pool {
        let dual_simple = registry.entry(id).module.dual();
        let dual_id = registry.classify(dual_simple, None, seed ^ (id.0 as u64) << 8)?;
        let homs = hom_from_simple(registry.entry(dual_id), &dual)?;
        if !homs.is_empty() {
            // Hom(S*, M*) = Hom(M, S): multiplicity of S in the head
            out.push((id, homs.len()));
        }
    }
    out.sort_by_key(|&(id, _)| id);
    Ok(out)
}

/// Basis of the space of module homomorphisms `M -> N`, solved from the
/// intertwining conditions. Cost grows with `(dim M * dim N)^3 / 64`; kept
/// for moderate dimensions (endomorphism rings of subquotients, oracle
/// checks at small sizes).
pub fn hom_space(m: &GModule, n: &GModule) -> Vec<Mat> {
    assert_eq!(m.field(), n.field());
    let ell = m.field().ell();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    assert!(unknowns <= 6_000, "hom_space system too large");
    // first generator: full system  g_M X - X g_N = 0
    let g0m = m.gen_mat(0);
    let g0n = n.gen_mat(0);
    let mut sys = Mat::zeros(ell, unknowns, unknowns);
    for a in 0..dm {
        for b in 0..dn {
            let row = sys.row_mut(a * dn + b);
            // coefficient of X[k][b] is g_M[a][k]
            for k in 0..dm {
                let c = g0m.at(a, k);
                if c != 0 {
                    row[k * dn + b] = c;
                }
            }
            // minus X[a][k] g_N[k][b]
            for k in 0..dn {
                let c = g0n.at(k, b);
                if c != 0 {
                    let idx = a * dn + k;
                    let cur = row[idx] as u16 + (ell as u16 - c as u16);
                    row[idx] = (cur % ell as u16) as u8;
                }
            }
        }
    }
    let mut basis: Vec<Mat> = left_kernel(&sys.transpose())
        .basis()
        .rows_iter()
        .map(|r| {
            let rows = r.chunks(dn).map(|ch| ch.to_vec()).collect();
            Mat::from_rows(ell, rows)
        })
        .collect();
    // refine with the remaining generators
    for k in 1..m.ngens() {
        if basis.is_empty() {
            break;
        }
        let gm = m.gen_mat(k);
        let gn = n.gen_mat(k);
        let mut residuals = Mat::zeros(ell, basis.len(), unknowns);
        for (j, x) in basis.iter().enumerate() {
            let r = gm.mul(x).sub(&x.mul(gn));
            for i in 0..dm {
                residuals.row_mut(j)[i * dn..(i + 1) * dn].copy_from_slice(r.row(i));
            }
        }
        let combos = left_kernel(&residuals);
        let mut refined = Vec::with_capacity(combos.dim());
        for c in combos.basis().rows_iter() {
            let mut x = Mat::zeros(ell, dm, dn);
            for (j, &cj) in c.iter().enumerate() {
                if cj != 0 {
                    x = x.add(&basis[j].scale(cj));
                }
            }
            refined.push(x);
        }
        basis = refined;
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{standard_space, Family};
    use crate::gfmat::PrimeField;
    use crate::permmod::build_module;
    use crate::repanalysis::meataxe::{composition_series, factor_multiset};

    fn orbit_module(family: Family, m: usize, kappa: u8, ell: u64) -> GModule {
        let sp = standard_space(family, m).unwrap();
        let pm = build_module(&sp, kappa, PrimeField::new(ell).unwrap()).unwrap();
        GModule::from_permutations(pm.field(), &pm.action().gens)
    }

    #[test]
    fn hom_from_trivial_counts_fixed_vectors() {
        // Hom(F, F Omega) is one-dimensional: spanned by the all-ones sum
        let m = orbit_module(Family::Minus, 4, 1, 5);
        let mut reg = Registry::new();
        let pool = composition_series(&m, &mut reg, 2).unwrap();
        let trivial = *pool.iter().find(|&&id| reg.dim(id) == 1).unwrap();
        let homs = hom_from_simple(reg.entry(trivial), &m).unwrap();
        assert_eq!(homs.len(), 1);
        let img = homs[0].row(0);
        // fixed vector: constant coordinates
        assert!(img.iter().all(|&x| x == img[0]) && img[0] != 0);
    }

    #[test]
    fn centralizer_of_rank3_module_has_dim_3() {
        // End(F P) for a rank-3 action away from bad primes: I, A, J-I-A
        let m = orbit_module(Family::Minus, 4, 1, 7);
        let end = hom_space(&m, &m);
        assert_eq!(end.len(), 3);
    }

    #[test]
    fn socle_of_semisimple_module_is_everything() {
        let m = orbit_module(Family::Minus, 4, 1, 7);
        let mut reg = Registry::new();
        let pool = composition_series(&m, &mut reg, 9).unwrap();
        let (soc, layer) = socle(&m, &reg, &pool).unwrap();
        assert_eq!(soc.dim(), 15);
        let total: usize = layer.iter().map(|(id, c)| reg.dim(*id) * c).sum();
        assert_eq!(total, 15);
    }

    #[test]
    fn socle_series_minus4_mod2() {
        // F P^{+1} = T ⊕ S with S uniserial X-F-Y-F-X: socle layers
        // [F,X], [F], [Y], [F], [X]
        let m = orbit_module(Family::Minus, 4, 1, 2);
        let mut reg = Registry::new();
        let pool_list = composition_series(&m, &mut reg, 13).unwrap();
        let pool: Vec<FactorId> = factor_multiset(&pool_list).into_iter().map(|(id, _)| id).collect();
        let series = socle_series(&m, &reg, &pool).unwrap();
        assert_eq!(series.layer_dims(&reg), vec![5, 1, 4, 1, 4]);
        // chain is strictly increasing and invariant at every step
        let mut prev = 0;
        for s in &series.chain {
            assert!(s.dim() > prev);
            prev = s.dim();
            assert!(m.invariant(s));
        }
        assert_eq!(series.chain.last().unwrap().dim(), 15);
        // head = socle multiset by self-duality of the permutation module
        let head = head_multiset(&m, &mut reg, &pool, 77).unwrap();
        let mut soc0 = series.layers[0].clone();
        soc0.sort_by_key(|&(id, _)| id);
        assert_eq!(head, soc0);
    }
}
