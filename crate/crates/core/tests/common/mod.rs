//! Independent reference computations for the integration tests. Nothing
//! here calls into the library's poset, β, qdepth or sdepth code.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Binomial coefficient by the multiplicative formula, zero outside range.
pub fn binom(a: i64, b: i64) -> i128 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut r: i128 = 1;
    for i in 0..b {
        r = r * (a - i) as i128 / (i + 1) as i128;
    }
    r
}

pub fn to_i128(x: &BigInt) -> i128 {
    x.to_i128().expect("fits in i128")
}

pub fn to_i128s(xs: &[BigInt]) -> Vec<i128> {
    xs.iter().map(to_i128).collect()
}

/// Members of `{C ⊆ [n] : upper(C) && !lower(C)}` by brute force.
pub fn members(n: usize, upper: impl Fn(u64) -> bool, lower: impl Fn(u64) -> bool) -> Vec<u64> {
    (0..1u64 << n).filter(|&c| upper(c) && !lower(c)).collect()
}

/// Membership of `x_C` in the squarefree ideal with these generator
/// supports; an empty list is the zero ideal.
pub fn in_ideal(gens: &[u64]) -> impl Fn(u64) -> bool + '_ {
    move |c| gens.iter().any(|&g| g & !c == 0)
}

pub fn quotient_members(n: usize, gens: &[u64]) -> Vec<u64> {
    members(n, |_| true, in_ideal(gens))
}

pub fn ideal_members(n: usize, gens: &[u64]) -> Vec<u64> {
    members(n, in_ideal(gens), |_| false)
}

pub fn alpha(n: usize, members: &[u64]) -> Vec<i128> {
    let mut a = vec![0i128; n + 1];
    for &m in members {
        a[m.count_ones() as usize] += 1;
    }
    a
}

/// β-table by the alternating closed form, with α zero beyond its length.
pub fn beta(alpha: &[i128], d: usize) -> Vec<i128> {
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|j| {
                    let a = alpha.get(j).copied().unwrap_or(0);
                    let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
                    let term = binom((d - j) as i64, (k - j) as i64).checked_mul(a).expect("overflow");
                    sign * term
                })
                .fold(0i128, |acc, t| acc.checked_add(t).expect("overflow"))
        })
        .collect()
}

/// Largest `d ≤ n` with a nonnegative β-table.
pub fn qdepth(alpha: &[i128]) -> usize {
    let n = alpha.len() - 1;
    (0..=n).rev().find(|&d| beta(alpha, d).iter().all(|&b| b >= 0)).expect("d = 0 is feasible")
}

pub fn e_value(m: usize, q: usize, t: usize, n: usize) -> i128 {
    (0..=t)
        .map(|j| {
            let sign = if (t - j).is_multiple_of(2) { 1 } else { -1 };
            sign * binom((q - j) as i64, (t - j) as i64) * binom(n as i64, (m + j) as i64)
        })
        .sum()
}

/// Stanley depth by trying every interval partition. The least uncovered
/// member (by cardinality) is always a lower endpoint; every upper endpoint
/// of any size is tried. Branches that cannot beat the best found so far
/// are cut.
pub fn sdepth_naive(members: &[u64]) -> usize {
    let mut sorted = members.to_vec();
    sorted.sort_by_key(|&m| (m.count_ones(), m));
    let mut covered = vec![false; sorted.len()];
    let mut best = 0usize;
    if sorted.is_empty() {
        panic!("empty family");
    }
    go(&sorted, &mut covered, usize::MAX, &mut best);
    best
}

fn go(sorted: &[u64], covered: &mut [bool], current: usize, best: &mut usize) {
    if current <= *best {
        return;
    }
    let Some(i) = covered.iter().position(|&c| !c) else {
        *best = current;
        return;
    };
    let c = sorted[i];
    for (jd, &d) in sorted.iter().enumerate() {
        if covered[jd] || d & c != c {
            continue;
        }
        let inside: Option<Vec<usize>> = sorted
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a & c == c && a & !d == 0)
            .map(|(k, _)| (!covered[k]).then_some(k))
            .collect();
        let free = (d & !c).count_ones();
        let Some(inside) = inside else { continue };
        // every subset between c and d must be present
        if inside.len() != 1usize << free {
            continue;
        }
        for &k in &inside {
            covered[k] = true;
        }
        go(sorted, covered, current.min(d.count_ones() as usize), best);
        for &k in &inside {
            covered[k] = false;
        }
    }
}

pub fn mask(vars: &[usize]) -> u64 {
    vars.iter().map(|&v| 1u64 << (v - 1)).sum()
}
