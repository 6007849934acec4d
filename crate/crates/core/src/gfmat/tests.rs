use super::*;
use proptest::prelude::*;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gf2(rows: Vec<Vec<u8>>) -> Mat {
    Mat::from_rows(2, rows)
}

#[test]
fn rref_zero_and_identity() {
    let z = Mat::zeros(5, 3, 4);
    let (r, rank, pivots) = rref(&z);
    assert!(r.nrows() == 0 && rank == 0 && pivots.is_empty());

    let id = Mat::identity(7, 4);
    let (r, rank, pivots) = rref(&id);
    assert_eq!(r, id);
    assert_eq!(rank, 4);
    assert_eq!(pivots, vec![0, 1, 2, 3]);
}

#[test]
fn rref_gf2_dependent_rows() {
    // third row is the sum of the first two
    let m = gf2(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
    let (_, rank, _) = rref(&m);
    assert_eq!(rank, 2);
    assert_eq!(rowspace(&m).dim(), 2);
}

#[test]
fn kernel_identity_and_zero() {
    let id = Mat::identity(5, 6);
    assert_eq!(left_kernel(&id).dim(), 0);
    let z = Mat::zeros(5, 6, 6);
    assert_eq!(left_kernel(&z).dim(), 6);
}

#[test]
fn solve_right_examples() {
    let id = Mat::identity(7, 3);
    let b = Mat::from_rows(7, vec![vec![1, 2], vec![3, 4], vec![5, 6]]);
    assert_eq!(solve_right(&id, &b).unwrap(), b);

    // inconsistent: 0 * X = nonzero
    let z = Mat::zeros(7, 2, 2);
    let b = Mat::from_rows(7, vec![vec![1, 0], vec![0, 0]]);
    assert!(solve_right(&z, &b).is_none());
}

#[test]
fn intersect_hyperplanes_gf2() {
    // two distinct hyperplanes of GF(2)^3 meet in a line; oracle is full
    // enumeration of the 8 vectors.
    let h1 = left_kernel(&gf2(vec![vec![1], vec![0], vec![0]]));
    let h2 = left_kernel(&gf2(vec![vec![0], vec![1], vec![0]]));
    assert_eq!(h1.dim(), 2);
    assert_eq!(h2.dim(), 2);
    let meet = h1.intersect(&h2).unwrap();
    let mut expect = Vec::new();
    for bits in 0..8u8 {
        let v = vec![bits & 1, (bits >> 1) & 1, (bits >> 2) & 1];
        if h1.contains_vec(&v) && h2.contains_vec(&v) && v.iter().any(|&x| x != 0) {
            expect.push(v);
        }
    }
    assert_eq!(expect.len(), 1);
    assert_eq!(meet.dim(), 1);
    assert!(meet.contains_vec(&expect[0]));
}

#[test]
fn subspace_trivialities() {
    let full = Subspace::full(5, 4);
    assert!(full.contains_vec(&[1, 4, 2, 3]));
    let zero = Subspace::zero(5, 4);
    assert_eq!(full.sum(&zero), full);
    assert_eq!(full.intersect(&full).unwrap(), full);
    assert_eq!(full.intersect(&zero).unwrap(), zero);
    assert_eq!(zero.perp(), full);
}

#[test]
fn perp_dimension() {
    let u = Subspace::span(7, 5, vec![vec![1, 2, 3, 4, 5], vec![0, 1, 0, 1, 0]]);
    let p = u.perp();
    assert_eq!(u.dim() + p.dim(), 5);
    for b in u.basis().rows_iter() {
        for q in p.basis().rows_iter() {
            let dot: u64 = b.iter().zip(q.iter()).map(|(&a, &c)| a as u64 * c as u64).sum();
            assert_eq!(dot % 7, 0);
        }
    }
}

#[test]
fn integer_rank_examples() {
    assert_eq!(integer_rank(&IntMat::all_ones(6)), 1);
    assert_eq!(integer_rank(&IntMat::identity(9)), 9);
    for &p in RANK_PRIMES.iter() {
        assert!(is_prime(p) && p > 1 << 20);
    }
}

#[test]
fn bareiss_matches_modular_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let n = 3 + (rng.next_u64() % 8) as usize;
        let mut m = IntMat::zeros(n, n + 1);
        for i in 0..n {
            for j in 0..n + 1 {
                m.set(i, j, (rng.next_u64() % 7) as i64 - 3);
            }
        }
        let rb = bareiss_rank(&m);
        for &p in RANK_PRIMES.iter() {
            assert!(modular_rank(&m, p) <= rb);
        }
        assert_eq!(rb, modular_rank(&m, RANK_PRIMES[0]).max(modular_rank(&m, RANK_PRIMES[1])));
    }
}

/// Naive per-entry GF(2) elimination used as the reference for the
/// bit-packed path.
fn naive_rref_gf2(m: &Mat) -> (Vec<Vec<u8>>, usize) {
    let mut rows: Vec<Vec<u8>> = m.rows_iter().map(|r| r.to_vec()).collect();
    let cols = m.ncols();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows.len()).find(|&i| rows[i][c] == 1) else {
            continue;
        };
        rows.swap(rank, pr);
        for i in 0..rows.len() {
            if i != rank && rows[i][c] == 1 {
                let (a, b) = if i < rank {
                    let (lo, hi) = rows.split_at_mut(rank);
                    (&mut lo[i], &hi[0])
                } else {
                    let (lo, hi) = rows.split_at_mut(i);
                    (&mut hi[0], &lo[rank])
                };
                for (x, y) in a.iter_mut().zip(b.iter()) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, rank)
}

#[test]
fn packed_gf2_matches_naive_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..10 {
        let mut m = Mat::zeros(2, 64, 64);
        for i in 0..64 {
            for j in 0..64 {
                m.set(i, j, (rng.next_u64() & 1) as u8);
            }
        }
        let (packed, rank, _) = rref(&m);
        let (naive, nrank) = naive_rref_gf2(&m);
        assert_eq!(rank, nrank);
        let packed_rows: Vec<Vec<u8>> = packed.rows_iter().map(|r| r.to_vec()).collect();
        assert_eq!(packed_rows, naive);
        // kernel agreement: rank + nullity = rows, and kernel really kills m
        let k = left_kernel(&m);
        assert_eq!(k.dim(), 64 - rank);
        for r in k.basis().rows_iter() {
            assert!(m.apply_row(r).iter().all(|&x| x == 0));
        }
    }
}

fn arb_mat(p: u64, max: usize) -> impl Strategy<Value = Mat> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0..p as u8, r * c).prop_map(move |data| {
            let rows = data.chunks(c).map(|ch| ch.to_vec()).collect();
            Mat::from_rows(p, rows)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(m in arb_mat(5, 8)) {
        let (r1, rank1, piv1) = rref(&m);
        let (r2, rank2, piv2) = rref(&r1);
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(rank1, rank2);
        prop_assert_eq!(piv1, piv2);
    }

    #[test]
    fn rank_nullity(m in arb_mat(7, 8)) {
        let (_, rank, _) = rref(&m);
        prop_assert_eq!(rank + left_kernel(&m).dim(), m.nrows());
    }

    #[test]
    fn modular_law_of_dimensions(a in arb_mat(2, 7), b in arb_mat(2, 7)) {
        // pad to common ambient
        let n = a.ncols().max(b.ncols());
        let lift = |m: &Mat| {
            let rows: Vec<Vec<u8>> = m.rows_iter().map(|r| {
                let mut v = r.to_vec();
                v.resize(n, 0);
                v
            }).collect();
            Subspace::span(2, n, rows)
        };
        let u = lift(&a);
        let w = lift(&b);
        let sum = u.sum(&w);
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&w));
        prop_assert!(u.is_subspace_of(&sum) && w.is_subspace_of(&sum));
    }

    #[test]
    fn solve_right_solves(
        (a, x) in (1usize..6, 1usize..6, 1usize..6).prop_flat_map(|(r, k, c)| {
            (proptest::collection::vec(0..5u8, r * k), proptest::collection::vec(0..5u8, k * c))
                .prop_map(move |(da, dx)| {
                    let a = Mat::from_rows(5, da.chunks(k).map(|ch| ch.to_vec()).collect());
                    let x = Mat::from_rows(5, dx.chunks(c).map(|ch| ch.to_vec()).collect());
                    (a, x)
                })
        })
    ) {
        let b = a.mul(&x);
        let sol = solve_right(&a, &b).expect("consistent by construction");
        prop_assert_eq!(a.mul(&sol), b);
    }
}



