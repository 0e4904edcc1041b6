//! Seeded generators for random test instances.

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::{Monomial, MonomialIdeal};
use crate::poset::{AlphaVector, SubsetPoset};

pub const DEFAULT_SEED: u64 = 20_240_601;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A squarefree ideal with up to `max_gens` generators, none of them `1`.
pub fn squarefree_ideal<R: Rng>(rng: &mut R, n: usize, max_gens: usize) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens.max(1));
    let full = (1u64 << n) - 1;
    let masks: Vec<u64> = (0..count).map(|_| rng.gen_range(1..=full)).collect();
    MonomialIdeal::from_masks(n, &masks).expect("n >= 1")
}

/// A monomial ideal with exponents up to `max_exp`, none of the generators
/// being `1`.
pub fn monomial_ideal<R: Rng>(rng: &mut R, n: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens.max(1));
    let gens = (0..count).map(|_| loop {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if e.iter().any(|&x| x > 0) {
            break Monomial::new(e);
        }
    });
    MonomialIdeal::new(n, gens.collect::<Vec<_>>()).expect("n >= 1")
}

/// A pair `I ⊊ J` of squarefree ideals: `J` random, `I` generated by
/// random multiples of generators of `J`.
pub fn squarefree_pair<R: Rng>(rng: &mut R, n: usize, max_gens: usize) -> (MonomialIdeal, MonomialIdeal) {
    loop {
        let upper = squarefree_ideal(rng, n, max_gens);
        let full = (1u64 << n) - 1;
        let count = rng.gen_range(0..=max_gens);
        let masks: Vec<u64> = (0..count)
            .map(|_| {
                let g = upper.generators()[rng.gen_range(0..upper.num_generators())].support_mask();
                g | rng.gen_range(0..=full)
            })
            .collect();
        let lower = MonomialIdeal::from_masks(n, &masks).expect("n >= 1");
        if lower != upper {
            return (upper, lower);
        }
    }
}

/// `m` positive parts summing to `n`.
pub fn composition<R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<usize> {
    assert!(1 <= m && m <= n);
    let mut cuts: Vec<usize> = sample(rng, n - 1, m - 1).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    cuts.push(n);
    let mut prev = 0;
    cuts.into_iter()
        .map(|c| {
            let part = c - prev;
            prev = c;
            part
        })
        .collect()
}

/// `(n, degs)` for a complete intersection whose supports cover `[n]`, with
/// `1 ≤ n ≤ n_max`.
pub fn complete_intersection<R: Rng>(rng: &mut R, n_max: usize) -> (usize, Vec<usize>) {
    let n = rng.gen_range(1..=n_max);
    let m = rng.gen_range(1..=n);
    (n, composition(rng, n, m))
}

/// `(n, degs)` with `Σ degs < n`, so at least one variable is free.
pub fn complete_intersection_with_free<R: Rng>(rng: &mut R, n_max: usize) -> (usize, Vec<usize>) {
    assert!(n_max >= 2);
    let n = rng.gen_range(2..=n_max);
    let used = rng.gen_range(1..n);
    let m = rng.gen_range(1..=used);
    (n, composition(rng, used, m))
}

/// A formal α-vector of length `n + 1` with entries in `0..=max` and
/// `α_0 ≥ 1`.
pub fn alpha<R: Rng>(rng: &mut R, n: usize, max: u64) -> AlphaVector {
    let counts = (0..=n)
        .map(|k| BigInt::from(if k == 0 { rng.gen_range(1..=max.max(1)) } else { rng.gen_range(0..=max) }))
        .collect();
    AlphaVector::formal(counts).expect("nonnegative")
}

/// Two disjoint nonempty subset families of `2^[n]`.
pub fn disjoint_posets<R: Rng>(rng: &mut R, n: usize) -> (SubsetPoset, SubsetPoset) {
    loop {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for mask in 0..1u64 << n {
            match rng.gen_range(0..3) {
                0 => a.push(mask),
                1 => b.push(mask),
                _ => {}
            }
        }
        if !a.is_empty() && !b.is_empty() {
            return (
                SubsetPoset::from_members(n, a).expect("small n"),
                SubsetPoset::from_members(n, b).expect("small n"),
            );
        }
    }
}
