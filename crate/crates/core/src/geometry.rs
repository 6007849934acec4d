//! Orthogonal geometry over F_3: the standard quadratic spaces, enumeration
//! of singular/plus/minus points, reflection generators, permutation
//! actions and the rank-3 parameter certificate.

use crate::error::{Error, Result};
use crate::gfmat::{IntMat, Mat};

/// Defining characteristic of the natural module.
pub const NATURAL_P: u64 = 3;

/// The three families of orthogonal spaces handled here.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    /// `O+_{2n}(3)`: n hyperbolic pairs.
    Plus,
    /// `O-_{2n}(3)`: n-1 hyperbolic pairs plus an anisotropic 2-space.
    Minus,
    /// `O_{2n+1}(3)`: n hyperbolic pairs plus an anisotropic vector.
    Odd,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Plus => "plus",
            Family::Minus => "minus",
            Family::Odd => "odd",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plus" | "+" => Ok(Family::Plus),
            "minus" | "-" => Ok(Family::Minus),
            "odd" | "o" => Ok(Family::Odd),
            _ => Err(Error::UnsupportedConfig(format!("unknown family `{s}`"))),
        }
    }
}

/// A nondegenerate quadratic space over F_3 in its standard basis.
///
/// `gram` holds the bilinear form values on basis pairs and `qdiag` the
/// quadratic form on basis vectors; together they pin Q exactly, since
/// `(v,v) = 2 Q(v)` alone would leave the sign convention ambiguous.
#[derive(Clone, Debug)]
pub struct QuadraticSpace {
    family: Family,
    m: usize,
    n: usize,
    gram: Mat,
    qdiag: Vec<u8>,
}

/// A point of projective space, canonicalized so the first nonzero
/// coordinate is 1, tagged with its Q-value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPoint {
    pub rep: Vec<u8>,
    pub q: u8,
}

/// Permutation images of the group generators on an ordered point list.
#[derive(Clone, Debug)]
pub struct PermAction {
    pub npoints: usize,
    pub gens: Vec<Vec<u32>>,
}

/// Rank-3 / strongly-regular-graph parameters of an orbit.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Rank3Params {
    pub a: i64,
    pub b: i64,
    pub r: i64,
    pub s: i64,
}

/// Build the standard space of the given family and dimension.
///
/// Basis order: `e_1..e_n, f_1..f_n` and, for odd dimension, a final `g`.
/// Plus: `(e_i,f_j) = delta_ij`, all basis vectors singular. Minus: the
/// last pair is anisotropic with `(e_n,e_n) = (f_n,f_n) = 1`, `(e_n,f_n) = 0`.
/// Odd: an extra `g` with `(g,g) = 1`.
pub fn standard_space(family: Family, m: usize) -> Result<QuadraticSpace> {
    let ok = match family {
        Family::Plus | Family::Minus => m >= 2 && m % 2 == 0,
        Family::Odd => m >= 3 && m % 2 == 1,
    };
    if !ok {
        return Err(Error::UnsupportedConfig(format!(
            "family {} with m = {m}",
            family.name()
        )));
    }
    let n = m / 2;
    let mut gram = Mat::zeros(NATURAL_P, m, m);
    let mut qdiag = vec![0u8; m];
    let pairs = match family {
        Family::Minus => n - 1,
        _ => n,
    };
    for i in 0..pairs {
        gram.set(i, n + i, 1);
        gram.set(n + i, i, 1);
    }
    match family {
        Family::Plus => {}
        Family::Minus => {
            // (e_n,e_n) = (f_n,f_n) = 1, hence Q = 2 * 1 * 2^-1... concretely
            // Q(v) = 2(v,v) in F_3, so Q(e_n) = Q(f_n) = 2.
            gram.set(n - 1, n - 1, 1);
            gram.set(2 * n - 1, 2 * n - 1, 1);
            qdiag[n - 1] = 2;
            qdiag[2 * n - 1] = 2;
        }
        Family::Odd => {
            gram.set(2 * n, 2 * n, 1);
            qdiag[2 * n] = 2;
        }
    }
    Ok(QuadraticSpace {
        family,
        m,
        n,
        gram,
        qdiag,
    })
}

impl QuadraticSpace {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn half_rank(&self) -> usize {
        self.n
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn qdiag(&self) -> &[u8] {
        &self.qdiag
    }

    /// Bilinear form `(u, v)`.
    pub fn bilinear(&self, u: &[u8], v: &[u8]) -> u8 {
        debug_assert!(u.len() == self.m && v.len() == self.m);
        let gv = self.gram.apply_row(v);
        let mut acc = 0u64;
        for (a, b) in u.iter().zip(gv.iter()) {
            acc += *a as u64 * *b as u64;
        }
        (acc % NATURAL_P) as u8
    }

    /// Quadratic form, expanded from `qdiag` through
    /// `Q(u+v) = Q(u) + Q(v) + (u,v)`:
    /// `Q(x) = sum x_i^2 qdiag_i + sum_{i<j} x_i x_j gram_ij`.
    pub fn quad(&self, v: &[u8]) -> u8 {
        debug_assert_eq!(v.len(), self.m);
        let mut acc = 0u64;
        for i in 0..self.m {
            let vi = v[i] as u64;
            if vi == 0 {
                continue;
            }
            acc += vi * vi * self.qdiag[i] as u64;
            for j in i + 1..self.m {
                acc += vi * v[j] as u64 * self.gram.at(i, j) as u64;
            }
        }
        (acc % NATURAL_P) as u8
    }

    /// Scale a nonzero vector so its first nonzero coordinate is 1.
    pub fn canonicalize(&self, v: &[u8]) -> Option<Vec<u8>> {
        let lead = v.iter().position(|&x| x != 0)?;
        let mut out = v.to_vec();
        if out[lead] == 2 {
            // multiply by 2: 2*2 = 1 mod 3
            for x in out.iter_mut() {
                *x = (*x * 2) % 3;
            }
        }
        Some(out)
    }

    /// All canonical points with the given Q-value, in lexicographic order
    /// of their representatives.
    pub fn enumerate_points(&self, kappa: u8) -> Vec<ProjPoint> {
        let mut out = Vec::new();
        let mut v = vec![0u8; self.m];
        loop {
            // advance odometer
            let mut i = self.m;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if v[i] < 2 {
                    v[i] += 1;
                    for x in v[i + 1..].iter_mut() {
                        *x = 0;
                    }
                    break;
                }
            }
            let lead = v.iter().position(|&x| x != 0).unwrap();
            if v[lead] != 1 {
                continue;
            }
            let q = self.quad(&v);
            if q == kappa {
                out.push(ProjPoint {
                    rep: v.clone(),
                    q,
                });
            }
        }
    }

    /// `(|P^0|, |P^{+1}|, |P^{-1}|)`.
    pub fn point_counts(&self) -> (usize, usize, usize) {
        (
            self.enumerate_points(0).len(),
            self.enumerate_points(1).len(),
            self.enumerate_points(2).len(),
        )
    }

    /// The reflection in a nonsingular vector:
    /// `x -> x - Q(v) (x,v) v`, using `(v,v) = 2Q(v)` and `2^{-1} = 2`.
    pub fn reflection(&self, v: &[u8]) -> Result<Mat> {
        let qv = self.quad(v);
        if qv == 0 {
            return Err(Error::SingularVector);
        }
        let w = self.gram.apply_row(v); // w_i = (e_i, v)
        let mut r = Mat::identity(NATURAL_P, self.m);
        for i in 0..self.m {
            let c = (qv as u64 * w[i] as u64) % 3;
            if c == 0 {
                continue;
            }
            for j in 0..self.m {
                let sub = (c * v[j] as u64) % 3;
                let t = (r.at(i, j) as u64 + 3 - sub) % 3;
                r.set(i, j, t as u8);
            }
        }
        Ok(r)
    }

    /// Deterministic list of nonsingular vectors whose reflections are used
    /// as generators: every canonical vector supported on at most two basis
    /// positions, plus the pair-to-pair mixers `e_i + f_i ± e_j` and
    /// `e_i + f_i ± f_j`. Reflections in this set generate the full
    /// orthogonal group for every supported space (certified by the
    /// Schreier-Sims order check against the classical order formula).
    pub fn spanning_vectors(&self) -> Vec<Vec<u8>> {
        let m = self.m;
        let n = self.n;
        let mut cand: Vec<Vec<u8>> = Vec::new();
        for i in 0..m {
            let mut v = vec![0u8; m];
            v[i] = 1;
            cand.push(v);
        }
        for i in 0..m {
            for j in i + 1..m {
                for b in [1u8, 2u8] {
                    let mut v = vec![0u8; m];
                    v[i] = 1;
                    v[j] = b;
                    cand.push(v);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for pos in [j, n + j] {
                    for b in [1u8, 2u8] {
                        let mut v = vec![0u8; m];
                        v[i] = 1;
                        v[n + i] = 1;
                        v[pos] = b;
                        cand.push(v);
                    }
                }
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        cand.retain(|v| self.quad(v) != 0 && seen.insert(v.clone()));
        cand
    }

    /// Reflections in the spanning vectors.
    pub fn default_generators(&self) -> Vec<Mat> {
        self.spanning_vectors()
            .iter()
            .map(|v| self.reflection(v).expect("spanning vectors are nonsingular"))
            .collect()
    }

    /// Permutation images of matrix generators on a canonical point list.
    pub fn action_permutations(&self, gens: &[Mat], points: &[ProjPoint]) -> Result<PermAction> {
        let mut perms = Vec::with_capacity(gens.len());
        for g in gens {
            let mut perm = vec![0u32; points.len()];
            for (i, pt) in points.iter().enumerate() {
                let img = g.apply_row(&pt.rep);
                let canon = self
                    .canonicalize(&img)
                    .ok_or_else(|| Error::BadGenerator("generator kills a point".into()))?;
                let j = points
                    .binary_search_by(|p| p.rep.cmp(&canon))
                    .map_err(|_| Error::BadGenerator("image point not in orbit list".into()))?;
                perm[i] = j as u32;
            }
            perms.push(perm);
        }
        Ok(PermAction {
            npoints: points.len(),
            gens: perms,
        })
    }
}

impl PermAction {
    pub fn orbit_size(&self, start: usize) -> usize {
        let mut seen = vec![false; self.npoints];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for g in &self.gens {
                let y = g[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    pub fn is_transitive(&self) -> bool {
        self.npoints == 0 || self.orbit_size(0) == self.npoints
    }
}

/// 0/1 adjacency of the orthogonality graph on a point list:
/// `A[i][j] = 1` iff `i != j` and the points are orthogonal.
pub fn orthogonality_adjacency(space: &QuadraticSpace, points: &[ProjPoint]) -> IntMat {
    let n = points.len();
    let mut a = IntMat::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            if space.bilinear(&points[i].rep, &points[j].rep) == 0 {
                a.set(i, j, 1);
                a.set(j, i, 1);
            }
        }
    }
    a
}

/// Verify strongly-regular behaviour of the orthogonality graph and return
/// the rank-3 parameters `(a, b, r, s)`.
///
/// Checks every row sums to `a` and that `A^2 = aI + rA + s(J - I - A)`
/// exactly over the integers, which certifies that every orthogonal pair
/// has `r` common neighbours and every non-orthogonal pair `s`.
pub fn rank3_certificate(adj: &IntMat) -> Result<Rank3Params> {
    let n = adj.nrows();
    if n < 2 {
        return Err(Error::ParameterInconsistency("degenerate point set".into()));
    }
    let a = adj.row_sum(0);
    for i in 1..n {
        if adj.row_sum(i) != a {
            return Err(Error::ParameterInconsistency(format!(
                "row {i} has degree {} != {a}",
                adj.row_sum(i)
            )));
        }
    }
    let sq = adj.mul(adj);
    let mut r = None;
    let mut s = None;
    'outer: for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if adj.at(i, j) == 1 && r.is_none() {
                r = Some(sq.at(i, j));
            }
            if adj.at(i, j) == 0 && s.is_none() {
                s = Some(sq.at(i, j));
            }
            if r.is_some() && s.is_some() {
                break 'outer;
            }
        }
    }
    let (r, s) = (
        r.ok_or_else(|| Error::ParameterInconsistency("graph has no edges".into()))?,
        s.ok_or_else(|| Error::ParameterInconsistency("graph is complete".into()))?,
    );
    // A^2 = aI + rA + s(J - I - A)
    let expect = IntMat::identity(n)
        .scale(a - s)
        .add(&adj.scale(r - s))
        .add(&IntMat::all_ones(n).scale(s));
    if sq != expect {
        return Err(Error::ParameterInconsistency(
            "A^2 differs from aI + rA + s(J-I-A)".into(),
        ));
    }
    Ok(Rank3Params {
        a,
        b: n as i64 - 1 - a,
        r,
        s,
    })
}

/// Classical order of the full orthogonal group.
///
/// `|O^e_{2n}(3)| = 2 * 3^{n(n-1)} * (3^n - e) * prod_{i<n} (3^{2i} - 1)`,
/// `|O_{2n+1}(3)| = 2 * 3^{n^2} * prod_{i<=n} (3^{2i} - 1)`.
pub fn group_order_formula(family: Family, m: usize) -> u128 {
    let n = (m / 2) as u32;
    let p3 = |e: u32| 3u128.pow(e);
    match family {
        Family::Plus | Family::Minus => {
            let eps: i128 = if family == Family::Plus { 1 } else { -1 };
            let mut ord = 2 * p3(n * (n - 1)) * ((p3(n) as i128 - eps) as u128);
            for i in 1..n {
                ord *= p3(2 * i) - 1;
            }
            ord
        }
        Family::Odd => {
            let mut ord = 2 * p3(n * n);
            for i in 1..=n {
                ord *= p3(2 * i) - 1;
            }
            ord
        }
    }
}

fn compose(p: &[u32], q: &[u32]) -> Vec<u32> {
    p.iter().map(|&x| q[x as usize]).collect()
}

fn invert(p: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

fn is_identity(p: &[u32]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

struct StabChain {
    degree: usize,
    base: Vec<usize>,
    // strong generators, one bucket per level; S^(k) = union of buckets k..
    strong: Vec<Vec<Vec<u32>>>,
    transversal: Vec<Vec<Option<Vec<u32>>>>,
}

impl StabChain {
    fn new(degree: usize) -> Self {
        StabChain {
            degree,
            base: Vec::new(),
            strong: Vec::new(),
            transversal: Vec::new(),
        }
    }

    fn gens_at(&self, k: usize) -> Vec<Vec<u32>> {
        self.strong[k..].iter().flatten().cloned().collect()
    }

    fn rebuild_orbit(&mut self, k: usize) {
        let gens = self.gens_at(k);
        let mut t: Vec<Option<Vec<u32>>> = vec![None; self.degree];
        t[self.base[k]] = Some((0..self.degree as u32).collect());
        let mut queue = vec![self.base[k]];
        let mut qi = 0;
        while qi < queue.len() {
            let x = queue[qi];
            qi += 1;
            for g in &gens {
                let y = g[x] as usize;
                if t[y].is_none() {
                    t[y] = Some(compose(t[x].as_ref().unwrap(), g));
                    queue.push(y);
                }
            }
        }
        self.transversal[k] = t;
    }

    /// Reduce `g` through levels `from..`; `None` means membership.
    fn sift(&self, from: usize, mut g: Vec<u32>) -> Option<(usize, Vec<u32>)> {
        for k in from..self.base.len() {
            let x = g[self.base[k]] as usize;
            match &self.transversal[k][x] {
                Some(t) => g = compose(&g, &invert(t)),
                None => return Some((k, g)),
            }
        }
        if is_identity(&g) {
            None
        } else {
            Some((self.base.len(), g))
        }
    }

    fn insert_strong(&mut self, lvl: usize, g: Vec<u32>) {
        if lvl == self.base.len() {
            let pt = g
                .iter()
                .enumerate()
                .find(|(i, &x)| *i as u32 != x)
                .expect("identity cannot start a level")
                .0;
            self.base.push(pt);
            self.strong.push(Vec::new());
            self.transversal.push(Vec::new());
        }
        self.strong[lvl].push(g);
        self.rebuild_orbit(lvl);
    }

    /// Establish the chain condition at levels `k..`: orbits computed with
    /// the strong generators of those levels, all Schreier generators sift
    /// to identity. Deeper levels are settled first, and the level restarts
    /// whenever an insertion happens below it.
    fn verify_level(&mut self, k: usize) {
        if k >= self.base.len() {
            return;
        }
        self.verify_level(k + 1);
        'restart: loop {
            self.rebuild_orbit(k);
            let gens = self.gens_at(k);
            let orbit: Vec<usize> = self.transversal[k]
                .iter()
                .enumerate()
                .filter_map(|(i, t)| t.as_ref().map(|_| i))
                .collect();
            for &x in &orbit {
                for h in &gens {
                    let hx = h[x] as usize;
                    let s = {
                        let tx = self.transversal[k][x].as_ref().unwrap();
                        let thx = self.transversal[k][hx].as_ref().unwrap();
                        compose(&compose(tx, h), &invert(thx))
                    };
                    if let Some((lvl, residue)) = self.sift(k + 1, s) {
                        self.insert_strong(lvl, residue);
                        self.verify_level(k + 1);
                        continue 'restart;
                    }
                }
            }
            return;
        }
    }

    fn order(&self) -> u128 {
        self.transversal
            .iter()
            .map(|t| t.iter().filter(|x| x.is_some()).count() as u128)
            .product()
    }
}

/// Order of the permutation group generated by `gens`, via a deterministic
/// Schreier-Sims stabilizer chain.
pub fn schreier_sims_order(degree: usize, gens: &[Vec<u32>]) -> u128 {
    let mut chain = StabChain::new(degree);
    for g in gens {
        if let Some((lvl, residue)) = chain.sift(0, g.clone()) {
            chain.insert_strong(lvl, residue);
            chain.verify_level(0);
        }
    }
    chain.order()
}

/// Schreier-Sims order of the group generated by the default generators.
///
/// The action on projective points has kernel `{±I}`, so the chain is run
/// on the faithful action on all nonzero vectors instead; the result is
/// the order of the generated matrix group itself.
pub fn group_order(space: &QuadraticSpace) -> Result<u128> {
    let m = space.dim();
    let total = 3usize.pow(m as u32);
    let encode = |v: &[u8]| -> usize {
        let mut code = 0usize;
        for &x in v {
            code = code * 3 + x as usize;
        }
        code - 1 // skip the zero vector
    };
    let mut gens_perm = Vec::new();
    for g in space.default_generators() {
        let mut perm = vec![0u32; total - 1];
        let mut v = vec![0u8; m];
        for code in 1..total {
            // next vector in lex order
            let mut i = m;
            loop {
                i -= 1;
                if v[i] < 2 {
                    v[i] += 1;
                    for x in v[i + 1..].iter_mut() {
                        *x = 0;
                    }
                    break;
                }
            }
            let img = g.apply_row(&v);
            perm[code - 1] = encode(&img) as u32;
        }
        gens_perm.push(perm);
    }
    Ok(schreier_sims_order(total - 1, &gens_perm))
}
