//! The permutation modules `F P^kappa` over GF(ell): adjacency operator,
//! graph submodules, canonical submodules, orthogonal complements, the
//! inter-orbit orthogonality maps, and the rational dimension bookkeeping.

use crate::error::{Error, Result};
use crate::geometry::{
    orthogonality_adjacency, rank3_certificate, PermAction, ProjPoint, QuadraticSpace, Rank3Params,
};
use crate::gfmat::{integer_rank, rowspace, Echelon, IntMat, Mat, PrimeField, Subspace};

/// A rank-3 orbit module: points, generator permutations, and the
/// orthogonality adjacency operator both over Z and reduced mod ell.
pub struct PermutationModule {
    field: PrimeField,
    kappa: u8,
    points: Vec<ProjPoint>,
    action: PermAction,
    adjacency_int: IntMat,
    adjacency: Mat,
    params: Rank3Params,
}

/// Integer roots of `x^2 + (r-s)x + (s-a) = 0` with their mod-ell
/// reductions. Ordered by (|c|, c), which matches the usual listing
/// (small positive root first for plus type, etc.).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GraphRoots {
    pub c1: i64,
    pub c2: i64,
    pub c1_mod: u8,
    pub c2_mod: u8,
    pub equal_mod: bool,
}

/// Rational dimensions of the two graph submodules, solved from the trace
/// system and cross-checked against exact integer ranks.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GraphDims {
    pub d1: u64,
    pub d2: u64,
}

pub fn build_module(
    space: &QuadraticSpace,
    kappa: u8,
    field: PrimeField,
) -> Result<PermutationModule> {
    assert!(kappa == 1 || kappa == 2, "nonsingular orbits have Q = ±1");
    let points = space.enumerate_points(kappa);
    let gens = space.default_generators();
    let action = space.action_permutations(&gens, &points)?;
    if !action.is_transitive() {
        return Err(Error::Inconsistency(format!(
            "generators are not transitive on P^{kappa}"
        )));
    }
    let adjacency_int = orthogonality_adjacency(space, &points);
    let params = rank3_certificate(&adjacency_int)?;
    // each generator must commute with the adjacency operator
    for perm in &action.gens {
        for i in 0..points.len() {
            for j in 0..points.len() {
                if adjacency_int.at(i, j) != adjacency_int.at(perm[i] as usize, perm[j] as usize) {
                    return Err(Error::BadGenerator(
                        "generator does not preserve orthogonality".into(),
                    ));
                }
            }
        }
    }
    let adjacency = adjacency_int.reduce_mod(field.ell());
    Ok(PermutationModule {
        field,
        kappa,
        points,
        action,
        adjacency_int,
        adjacency,
        params,
    })
}

impl PermutationModule {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn kappa(&self) -> u8 {
        self.kappa
    }

    pub fn npoints(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn action(&self) -> &PermAction {
        &self.action
    }

    pub fn adjacency_int(&self) -> &IntMat {
        &self.adjacency_int
    }

    pub fn adjacency(&self) -> &Mat {
        &self.adjacency
    }

    pub fn params(&self) -> Rank3Params {
        self.params
    }

    /// `S(F Omega)`: the coordinate-sum-zero submodule, and `T(F Omega)`:
    /// the span of the all-ones vector.
    pub fn canonical_submodules(&self) -> (Subspace, Subspace) {
        let n = self.npoints();
        let ell = self.field.ell();
        let minus_one = (ell - 1) as u8;
        let mut ech = Echelon::new(ell, n);
        for i in 0..n - 1 {
            let mut v = vec![0u8; n];
            v[i] = 1;
            v[n - 1] = minus_one;
            ech.insert(&v);
        }
        let s = Subspace::from_echelon(&ech);
        let t = Subspace::span(ell, n, vec![vec![1u8; n]]);
        (s, t)
    }

    /// `U_c = rowspace(cI + A)` and `U'_c` spanned by the row differences
    /// against the base point, both verified invariant under every
    /// generator.
    pub fn graph_submodules(&self, c_mod: u8) -> Result<(Subspace, Subspace)> {
        let n = self.npoints();
        let ell = self.field.ell() as u16;
        let mat = self.adjacency.add_scalar_diag(c_mod);
        let u = rowspace(&mat);
        let mut ech = Echelon::new(self.field.ell(), n);
        let base = mat.row(0);
        for i in 1..n {
            let diff: Vec<u8> = mat
                .row(i)
                .iter()
                .zip(base.iter())
                .map(|(&x, &y)| ((x as u16 + ell - y as u16) % ell) as u8)
                .collect();
            ech.insert(&diff);
        }
        let uprime = Subspace::from_echelon(&ech);
        for sub in [&u, &uprime] {
            if !self.subspace_invariant(sub) {
                return Err(Error::NotInvariant);
            }
        }
        Ok((u, uprime))
    }

    /// Check invariance of a subspace under all generator permutations.
    pub fn subspace_invariant(&self, sub: &Subspace) -> bool {
        let ech = sub.to_echelon();
        let n = self.npoints();
        let mut img = vec![0u8; n];
        for perm in &self.action.gens {
            for row in sub.basis().rows_iter() {
                for (j, &x) in row.iter().enumerate() {
                    img[perm[j] as usize] = x;
                }
                if !ech.contains(&img) {
                    return false;
                }
            }
        }
        true
    }

    /// Exact integer identity `(A + c1 I)(A + c2 I) = s J`.
    pub fn liebeck_identity_check(&self, roots: &GraphRoots) -> bool {
        let lhs = self
            .adjacency_int
            .add_scaled_identity(roots.c1)
            .mul(&self.adjacency_int.add_scaled_identity(roots.c2));
        lhs == IntMat::all_ones(self.npoints()).scale(self.params.s)
    }

    /// Solve the dimension system
    /// `d1 + d2 = N - 1`, `c2 d1 + c1 d2 = a`
    /// and cross-check each solution against the exact integer rank:
    /// `U'_{c_i}` is the eigenspace of the adjacency operator for the
    /// eigenvalue `-c_{3-i}`, so `d_i = N - rank(A + c_{3-i} I)`.
    pub fn dimension_system(&self, roots: &GraphRoots) -> Result<GraphDims> {
        let n = self.npoints() as i64;
        let (c1, c2) = (roots.c1, roots.c2);
        if c1 == c2 {
            return Err(Error::ParameterInconsistency(
                "dimension system needs distinct roots".into(),
            ));
        }
        let num = self.params.a - c1 * (n - 1);
        if num % (c2 - c1) != 0 {
            return Err(Error::Inconsistency(
                "dimension system has no integer solution".into(),
            ));
        }
        let d1 = num / (c2 - c1);
        let d2 = (n - 1) - d1;
        if d1 < 0 || d2 < 0 {
            return Err(Error::Inconsistency(
                "negative graph submodule dimension".into(),
            ));
        }
        let rank1 = integer_rank(&self.adjacency_int.add_scaled_identity(c2));
        let rank2 = integer_rank(&self.adjacency_int.add_scaled_identity(c1));
        if d1 as usize != self.npoints() - rank1 || d2 as usize != self.npoints() - rank2 {
            return Err(Error::Inconsistency(format!(
                "system solution ({d1},{d2}) disagrees with integer ranks ({},{})",
                self.npoints() - rank1,
                self.npoints() - rank2
            )));
        }
        Ok(GraphDims {
            d1: d1 as u64,
            d2: d2 as u64,
        })
    }
}

/// Roots of the quadratic `x^2 + (r-s)x + (s-a) = 0`.
///
/// Non-integer roots would contradict the eigenvalue structure of these
/// actions and are treated as a fatal inconsistency.
pub fn quadratic_roots(params: Rank3Params, field: PrimeField) -> Result<GraphRoots> {
    let p = params.r - params.s;
    let q = params.s - params.a;
    let disc = p * p - 4 * q;
    if disc < 0 {
        return Err(Error::Inconsistency("negative discriminant".into()));
    }
    let sq = (disc as f64).sqrt().round() as i64;
    let sq = [sq - 1, sq, sq + 1]
        .into_iter()
        .find(|&t| t >= 0 && t * t == disc)
        .ok_or_else(|| Error::Inconsistency("graph roots are not integers".into()))?;
    if (-p + sq) % 2 != 0 {
        return Err(Error::Inconsistency("graph roots are not integers".into()));
    }
    let mut roots = [(-p + sq) / 2, (-p - sq) / 2];
    roots.sort_by_key(|&c| (c.abs(), c));
    let ell = field.ell() as i64;
    let c1_mod = roots[0].rem_euclid(ell) as u8;
    let c2_mod = roots[1].rem_euclid(ell) as u8;
    Ok(GraphRoots {
        c1: roots[0],
        c2: roots[1],
        c1_mod,
        c2_mod,
        equal_mod: c1_mod == c2_mod,
    })
}

/// The orthogonality map between two orbits: the `|P^i| x |P^j|` 0/1
/// matrix sending a point to the formal sum of the points of the second
/// orbit orthogonal to it. For nonsingular orbits with i = j this is
/// exactly the adjacency operator (a nonsingular point is never orthogonal
/// to itself); on the singular orbit the diagonal is included.
pub fn qmap_matrix(
    space: &QuadraticSpace,
    points_i: &[ProjPoint],
    points_j: &[ProjPoint],
) -> IntMat {
    let mut q = IntMat::zeros(points_i.len(), points_j.len());
    for (x, pi) in points_i.iter().enumerate() {
        for (y, pj) in points_j.iter().enumerate() {
            if space.bilinear(&pi.rep, &pj.rep) == 0 {
                q.set(x, y, 1);
            }
        }
    }
    q
}

/// Check that the orthogonality map intertwines the two permutation
/// actions: `Q[g(x)][g(y)] = Q[x][y]` for every generator g.
pub fn qmap_intertwines(q: &IntMat, act_i: &PermAction, act_j: &PermAction) -> bool {
    for (pi, pj) in act_i.gens.iter().zip(act_j.gens.iter()) {
        for x in 0..q.nrows() {
            for y in 0..q.ncols() {
                if q.at(x, y) != q.at(pi[x] as usize, pj[y] as usize) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{standard_space, Family};

    fn minus4(ell: u64) -> PermutationModule {
        let sp = standard_space(Family::Minus, 4).unwrap();
        build_module(&sp, 1, PrimeField::new(ell).unwrap()).unwrap()
    }

    #[test]
    fn minus4_adjacency_and_params() {
        let pm = minus4(2);
        assert_eq!(pm.npoints(), 15);
        assert_eq!(pm.params(), Rank3Params { a: 6, b: 8, r: 1, s: 3 });
        for i in 0..15 {
            assert_eq!(pm.adjacency_int().row_sum(i), 6);
        }
    }

    #[test]
    fn roots_per_family() {
        let f5 = PrimeField::new(5).unwrap();
        let f2 = PrimeField::new(2).unwrap();
        // plus, n = 3: roots 3 and -9
        let plus = Rank3Params { a: 36, b: 80, r: 15, s: 9 };
        let r = quadratic_roots(plus, f5).unwrap();
        assert_eq!((r.c1, r.c2), (3, -9));
        assert!(!r.equal_mod);
        let r2 = quadratic_roots(plus, f2).unwrap();
        assert!(r2.equal_mod && r2.c1_mod == 1);
        // minus, n = 3: roots -3 and 9
        let minus = Rank3Params { a: 45, b: 80, r: 12, s: 18 };
        let r = quadratic_roots(minus, f5).unwrap();
        assert_eq!((r.c1, r.c2), (-3, 9));
        // odd, n = 3, kappa = +1: roots -9 and 9
        let odd = Rank3Params { a: 126, b: 224, r: 45, s: 45 };
        let r = quadratic_roots(odd, f5).unwrap();
        assert_eq!((r.c1, r.c2), (-9, 9));
        // minus, n = 2: roots -1 and 3
        let m4 = Rank3Params { a: 6, b: 8, r: 1, s: 3 };
        let r = quadratic_roots(m4, f2).unwrap();
        assert_eq!((r.c1, r.c2), (-1, 3));
        assert!(r.equal_mod, "both roots are odd");
    }

    #[test]
    fn canonical_submodules_dims() {
        for ell in [2u64, 7] {
            let pm = minus4(ell);
            let (s, t) = pm.canonical_submodules();
            assert_eq!(s.dim(), 14);
            assert_eq!(t.dim(), 1);
            // T ⊆ S iff ell divides 15
            assert_eq!(t.is_subspace_of(&s), 15 % ell == 0);
            assert_eq!(t.perp(), s);
        }
        let pm5 = minus4(5);
        let (s, t) = pm5.canonical_submodules();
        assert!(t.is_subspace_of(&s), "5 divides 15");
    }

    #[test]
    fn liebeck_identity_minus4() {
        let pm = minus4(2);
        let roots = quadratic_roots(pm.params(), pm.field()).unwrap();
        assert!(pm.liebeck_identity_check(&roots));
        // and a perturbed pair fails
        let bad = GraphRoots { c1: roots.c1 + 1, ..roots };
        assert!(!pm.liebeck_identity_check(&bad));
    }

    #[test]
    fn dimension_system_minus4() {
        let pm = minus4(2);
        let roots = quadratic_roots(pm.params(), pm.field()).unwrap();
        let dims = pm.dimension_system(&roots).unwrap();
        // n = 2 values: dim U'_{-1} = 5, dim U'_{3} = 9
        assert_eq!((dims.d1, dims.d2), (5, 9));
    }

    #[test]
    fn graph_submodules_minus4_mod2() {
        let pm = minus4(2);
        let roots = quadratic_roots(pm.params(), pm.field()).unwrap();
        assert!(roots.equal_mod);
        let (u, up) = pm.graph_submodules(roots.c1_mod).unwrap();
        // U' is the simple 4-dimensional socle constituent, U = T ⊕ U'
        assert_eq!(up.dim(), 4);
        assert_eq!(u.dim(), 5);
        assert!(up.is_subspace_of(&u));
        let (s, _t) = pm.canonical_submodules();
        assert!(up.is_subspace_of(&s));
    }

    #[test]
    fn orthogonality_between_graph_submodules_mod_ell() {
        // with distinct roots, U'_{c1} ⊆ perp(U_{c2}) and U'_{c1} ⊕ U'_{c2} = S
        let pm = minus4(5);
        let roots = quadratic_roots(pm.params(), pm.field()).unwrap();
        assert!(!roots.equal_mod);
        let (u1, up1) = pm.graph_submodules(roots.c1_mod).unwrap();
        let (u2, up2) = pm.graph_submodules(roots.c2_mod).unwrap();
        assert!(up1.is_subspace_of(&u2.perp()));
        assert!(up2.is_subspace_of(&u1.perp()));
        let (s, _) = pm.canonical_submodules();
        assert_eq!(up1.sum(&up2), s);
        assert_eq!(up1.intersect(&up2).unwrap().dim(), 0);
        assert_eq!(up1.dim() + up2.dim(), 14);
    }

    #[test]
    fn arbitrary_c_gives_s() {
        // a non-root c yields U'_c = S(F Omega); roots mod 5 are 4 and 3
        let pm = minus4(5);
        let (s, _) = pm.canonical_submodules();
        let (_, up) = pm.graph_submodules(1).unwrap();
        assert_eq!(up, s);
    }

    #[test]
    fn qmap_on_minus4() {
        let sp = standard_space(Family::Minus, 4).unwrap();
        let plus_pts = sp.enumerate_points(1);
        let zero_pts = sp.enumerate_points(0);
        let gens = sp.default_generators();
        let act_p = sp.action_permutations(&gens, &plus_pts).unwrap();
        let act_0 = sp.action_permutations(&gens, &zero_pts).unwrap();

        // Q_{kappa,kappa} equals the adjacency operator
        let q_pp = qmap_matrix(&sp, &plus_pts, &plus_pts);
        assert_eq!(&q_pp, minus4(2).adjacency_int());

        // the singular-orbit diagonal is included (a singular point is
        // orthogonal to itself)
        let q_00 = qmap_matrix(&sp, &zero_pts, &zero_pts);
        assert_eq!(q_00.at(0, 0), 1);

        // intertwining and constant row sums for a cross map
        let q_0p = qmap_matrix(&sp, &zero_pts, &plus_pts);
        assert!(qmap_intertwines(&q_0p, &act_0, &act_p));
        assert!(qmap_intertwines(&q_pp, &act_p, &act_p));
        assert!(qmap_intertwines(&q_00, &act_0, &act_0));
        let s0 = q_0p.row_sum(0);
        for i in 1..q_0p.nrows() {
            assert_eq!(q_0p.row_sum(i), s0);
        }
    }
}
