//! Seeded random generators shared by the integration tests.
#![allow(dead_code)]

use homotopy_calc::extcplx::TwoTermComplex;
use homotopy_calc::intlat::{self, IntMatrix};
use homotopy_calc::{FgAbGroup, FgAbMap};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    IntMatrix::from_rows(cols, &data).unwrap()
}

/// A random unimodular matrix and its inverse, built from elementary moves.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, moves: usize) -> (IntMatrix, IntMatrix) {
    let mut p = IntMatrix::identity(n);
    let mut p_inv = IntMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            p = p.neg();
            p_inv = p_inv.neg();
        }
        return (p, p_inv);
    }
    for _ in 0..moves {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c: i64 = rng.gen_range(-2..=2);
        // P ← E·P with E = I + c·e_ij, and P⁻¹ ← P⁻¹·E⁻¹
        for k in 0..n {
            let add = &p[(j, k)] * c;
            p[(i, k)] += add;
            let sub = &p_inv[(k, i)] * c;
            p_inv[(k, j)] -= sub;
        }
    }
    (p, p_inv)
}

/// Orders for a random group in canonical coordinates: 0 means a free
/// generator, 1 a trivial one.
pub fn random_orders(
    rng: &mut impl Rng,
    max_gens: usize,
    max_torsion: i64,
    torsion_free: bool,
) -> Vec<i64> {
    let n = rng.gen_range(0..=max_gens);
    (0..n)
        .map(|_| {
            if torsion_free || rng.gen_bool(0.4) {
                if rng.gen_bool(0.2) {
                    1
                } else {
                    0
                }
            } else {
                rng.gen_range(1..=max_torsion)
            }
        })
        .collect()
}

/// `⊕ ℤ/oᵢ` presented on scrambled generators with a redundant relation,
/// plus the change of coordinates from the diagonal presentation.
pub struct ScrambledGroup {
    pub group: FgAbGroup,
    pub orders: Vec<i64>,
    /// Diagonal coordinates → scrambled coordinates.
    pub p: IntMatrix,
    /// Scrambled coordinates → diagonal coordinates.
    pub p_inv: IntMatrix,
}

pub fn scrambled_group(rng: &mut impl Rng, orders: &[i64]) -> ScrambledGroup {
    let n = orders.len();
    let (p, p_inv) = random_unimodular(rng, n, 3 * n);
    let diag = IntMatrix::diagonal(n, n, orders);
    let mut rel = &p * &diag;
    if n > 0 && rng.gen_bool(0.5) {
        let mix = random_matrix(rng, n, 1, 3);
        rel = rel.hcat(&(&rel * &mix)).unwrap();
    }
    ScrambledGroup {
        group: FgAbGroup::new(n, rel).unwrap(),
        orders: orders.to_vec(),
        p,
        p_inv,
    }
}

/// A random homomorphism between diagonal groups `⊕ ℤ/aᵢ → ⊕ ℤ/bⱼ`.
pub fn random_diagonal_hom(rng: &mut impl Rng, src: &[i64], dst: &[i64], bound: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(dst.len(), src.len());
    for (j, &b) in dst.iter().enumerate() {
        for (i, &a) in src.iter().enumerate() {
            let x: i64 = rng.gen_range(-bound..=bound);
            // need a·x ≡ 0 mod b, with order 0 meaning ℤ
            let entry = match (a, b) {
                (_, 0) if a != 0 => 0,
                (_, 0) => x,
                (0, _) => x,
                _ => x * (b / a.gcd(&b)),
            };
            m[(j, i)] = BigInt::from(entry);
        }
    }
    m
}

pub struct RandomComplex {
    pub complex: TwoTermComplex,
    pub a0: ScrambledGroup,
    pub a1: ScrambledGroup,
}

/// A random `[A⁰ → A¹⟩` with at most `max_gens` generators per term and
/// torsion orders up to `max_torsion`.
pub fn random_complex(
    rng: &mut impl Rng,
    max_gens: usize,
    max_torsion: i64,
    a0_torsion_free: bool,
) -> RandomComplex {
    let o0 = random_orders(rng, max_gens, max_torsion, a0_torsion_free);
    let o1 = random_orders(rng, max_gens, max_torsion, false);
    let a0 = scrambled_group(rng, &o0);
    let a1 = scrambled_group(rng, &o1);
    let f = random_diagonal_hom(rng, &o0, &o1, 4);
    let alpha = &(&a1.p * &f) * &a0.p_inv;
    let map = FgAbMap::new_checked(a0.group.clone(), a1.group.clone(), alpha).unwrap();
    RandomComplex {
        complex: TwoTermComplex::new(map).unwrap(),
        a0,
        a1,
    }
}

/// A random surjection `ℤ^m ↠ A`.
pub fn random_surjection(rng: &mut impl Rng, a: &FgAbGroup) -> FgAbMap {
    let n = a.generators();
    let extra = rng.gen_range(0..=2);
    let mut cols = IntMatrix::identity(n)
        .hcat(&random_matrix(rng, n, extra, 5))
        .unwrap();
    if n > 0 && a.relations().cols() > 0 && rng.gen_bool(0.5) {
        cols = cols.hcat(&a.relations().select_cols(0..1)).unwrap();
    }
    let m = cols.cols();
    let (u, _) = random_unimodular(rng, m, 2 * m);
    FgAbMap::new_checked(FgAbGroup::free(m), a.clone(), &cols * &u).unwrap()
}

/// A random injective `rank × k` matrix with saturated image and entries
/// bounded by `bound`: either a saturated random matrix, or the first `k`
/// columns of a random unimodular matrix (needed when `k = rank`, where a
/// random matrix is almost never unimodular).
pub fn random_saturated_injection(
    rng: &mut impl Rng,
    rank: usize,
    k: usize,
    bound: i64,
) -> IntMatrix {
    if k < rank && rng.gen_bool(0.5) {
        for _ in 0..50 {
            let m = random_matrix(rng, rank, k, bound);
            if intlat::rank(&m) == k
                && (k == 0 || intlat::same_lattice(&intlat::saturation(&m), &m))
            {
                return m;
            }
        }
    }
    let bound = BigInt::from(bound);
    loop {
        let moves = rng.gen_range(0..=3 * rank);
        let (u, _) = random_unimodular(rng, rank, moves);
        let m = u.select_cols(0..k);
        if m.to_rows().iter().flatten().all(|x| x.abs() <= bound) {
            return m;
        }
    }
}
