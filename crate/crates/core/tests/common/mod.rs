//! Reference implementations that share no code with the library.
//!
//! A labeled poset on `n <= 8` points is a `u64` whose bit `i * n + j` is
//! set when `i < j`.

#![allow(dead_code)]

use finite_spectra::Poset;

pub fn bit(n: usize, i: usize, j: usize) -> u64 {
    1 << (i * n + j)
}

pub fn less(n: usize, rel: u64, i: usize, j: usize) -> bool {
    rel & bit(n, i, j) != 0
}

fn is_strict_order(n: usize, rel: u64) -> bool {
    (0..n).all(|i| !less(n, rel, i, i))
        && (0..n).all(|i| {
            (0..n).all(|j| {
                !(less(n, rel, i, j) && less(n, rel, j, i))
                    && (0..n).all(|k| !(less(n, rel, i, j) && less(n, rel, j, k)) || less(n, rel, i, k))
            })
        })
}

/// Every strict order on `n` points, by testing every relation.
pub fn brute_force_labeled(n: usize) -> Vec<u64> {
    assert!(n <= 5, "2^(n(n-1)) candidates");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut out: Vec<u64> = (0..1u64 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .fold(0, |rel, (_, &(i, j))| rel | bit(n, i, j))
        })
        .filter(|&rel| is_strict_order(n, rel))
        .collect();
    out.sort_unstable();
    out
}

/// Every strict order on `n` points, by inserting the last point into each
/// order on the first `n - 1`: its strict down-set must be down-closed, its
/// strict up-set up-closed, and everything below it below everything above.
pub fn insertion_labeled(n: usize) -> Vec<u64> {
    if n == 0 {
        return vec![0];
    }
    let m = n - 1;
    let mut out = Vec::new();
    for rel in insertion_labeled(m) {
        let widened = (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .filter(|&(i, j)| less(m, rel, i, j))
            .fold(0, |acc, (i, j)| acc | bit(n, i, j));
        for below in 0..1u32 << m {
            let in_below = |x: usize| below >> x & 1 == 1;
            if !(0..m).all(|x| !in_below(x) || (0..m).all(|y| !less(m, rel, y, x) || in_below(y))) {
                continue;
            }
            for above in 0..1u32 << m {
                let in_above = |x: usize| above >> x & 1 == 1;
                if below & above != 0
                    || !(0..m).all(|x| !in_above(x) || (0..m).all(|y| !less(m, rel, x, y) || in_above(y)))
                    || !(0..m).all(|d| !in_below(d) || (0..m).all(|u| !in_above(u) || less(m, rel, d, u)))
                {
                    continue;
                }
                let mut r = widened;
                for x in 0..m {
                    if in_below(x) {
                        r |= bit(n, x, m);
                    }
                    if in_above(x) {
                        r |= bit(n, m, x);
                    }
                }
                out.push(r);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// Relabels point `i` as `perm[i]`.
pub fn permute(n: usize, rel: u64, perm: &[usize]) -> u64 {
    let (mut out, mut rest) = (0, rel);
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= bit(n, perm[k / n], perm[k % n]);
    }
    out
}

pub fn isomorphic_by_search(n: usize, a: u64, b: u64, perms: &[Vec<usize>]) -> bool {
    a.count_ones() == b.count_ones() && perms.iter().any(|p| permute(n, a, p) == b)
}

/// Isomorphism classes by comparing each order against kept representatives.
pub fn classes_by_filtering(n: usize, rels: &[u64]) -> Vec<u64> {
    let perms = permutations(n);
    let mut reps: Vec<u64> = Vec::new();
    for &r in rels {
        if !reps.iter().any(|&q| isomorphic_by_search(n, r, q, &perms)) {
            reps.push(r);
        }
    }
    reps
}

/// Number of orbits of the symmetric group acting on `rels`.
pub fn orbit_count(n: usize, rels: &[u64]) -> usize {
    let perms = permutations(n);
    let mut keys: Vec<u64> = rels
        .iter()
        .map(|&r| perms.iter().map(|p| permute(n, r, p)).min().unwrap())
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.len()
}

pub fn to_poset(n: usize, rel: u64) -> Poset {
    let pairs = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| less(n, rel, i, j));
    Poset::new(n, pairs).unwrap()
}

pub fn relation(p: &Poset) -> u64 {
    let n = p.size();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| p.lt(i, j))
        .fold(0, |acc, (i, j)| acc | bit(n, i, j))
}

/// Down-sets as plain bitmasks, by testing every subset.
pub fn down_sets(p: &Poset) -> Vec<u64> {
    let n = p.size();
    (0..1u64 << n)
        .filter(|&s| (0..n).all(|x| s >> x & 1 == 0 || (0..n).all(|y| !p.lt(y, x) || s >> y & 1 == 1)))
        .collect()
}

pub fn up_closure(p: &Poset, s: u64) -> u64 {
    let n = p.size();
    (0..n)
        .filter(|&y| (0..n).any(|x| s >> x & 1 == 1 && p.leq(x, y)))
        .fold(0, |acc, y| acc | 1 << y)
}

pub fn minimal(p: &Poset, s: u64) -> u64 {
    let n = p.size();
    (0..n)
        .filter(|&x| s >> x & 1 == 1 && (0..n).all(|y| !(s >> y & 1 == 1 && p.lt(y, x))))
        .fold(0, |acc, x| acc | 1 << x)
}

pub fn maximal(p: &Poset, s: u64) -> u64 {
    let n = p.size();
    (0..n)
        .filter(|&x| s >> x & 1 == 1 && (0..n).all(|y| !(s >> y & 1 == 1 && p.lt(x, y))))
        .fold(0, |acc, x| acc | 1 << x)
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}
