//! The library against independent brute-force implementations.

mod common;

use common::*;
use finite_spectra::duality::{downset_lattice, spec_poset};
use finite_spectra::poset::{are_isomorphic, enumerate_posets, Labeling};
use finite_spectra::{PointSet, Poset};

fn labeled_relations(n: usize) -> Vec<u64> {
    let mut rels: Vec<u64> = enumerate_posets(n, Labeling::Labeled)
        .unwrap()
        .iter()
        .map(|p| relation(&p))
        .collect();
    rels.sort_unstable();
    rels
}

fn unlabeled(n: usize) -> Vec<Poset> {
    enumerate_posets(n, Labeling::Unlabeled).unwrap().to_vec()
}

#[test]
fn labeled_enumeration_matches_brute_force() {
    for n in 0..=5 {
        assert_eq!(labeled_relations(n), brute_force_labeled(n), "n = {n}");
    }
}

#[test]
fn labeled_enumeration_matches_insertion() {
    let expected = [1, 1, 3, 19, 219, 4231, 130023];
    for (n, &count) in expected.iter().enumerate() {
        let inserted = insertion_labeled(n);
        assert_eq!(inserted.len(), count);
        assert_eq!(labeled_relations(n), inserted, "n = {n}");
    }
}

#[test]
fn unlabeled_counts_match_orbit_counts() {
    for n in 0..=6 {
        assert_eq!(unlabeled(n).len(), orbit_count(n, &insertion_labeled(n)), "n = {n}");
    }
}

#[test]
fn unlabeled_counts_match_isomorphism_filtering() {
    for n in 0..=5 {
        let reps = classes_by_filtering(n, &brute_force_labeled(n));
        assert_eq!(unlabeled(n).len(), reps.len(), "n = {n}");
    }
}

#[test]
fn unlabeled_representatives_are_pairwise_non_isomorphic() {
    for n in 0..=5 {
        let perms = permutations(n);
        let reps: Vec<u64> = unlabeled(n).iter().map(relation).collect();
        for (i, &a) in reps.iter().enumerate() {
            for &b in &reps[i + 1..] {
                assert!(!isomorphic_by_search(n, a, b, &perms));
            }
        }
    }
}

#[test]
fn canonical_isomorphism_matches_permutation_search() {
    for n in 0..=4 {
        let perms = permutations(n);
        let rels = brute_force_labeled(n);
        let posets: Vec<Poset> = rels.iter().map(|&r| to_poset(n, r)).collect();
        for (a, p) in rels.iter().zip(&posets) {
            for (b, q) in rels.iter().zip(&posets) {
                assert_eq!(are_isomorphic(p, q), isomorphic_by_search(n, *a, *b, &perms));
            }
        }
    }
    // Size five: every labeled order against every representative.
    let perms = permutations(5);
    let reps: Vec<(u64, Poset)> = unlabeled(5).into_iter().map(|p| (relation(&p), p)).collect();
    for r in brute_force_labeled(5).into_iter().step_by(7) {
        let p = to_poset(5, r);
        for (q_rel, q) in &reps {
            assert_eq!(are_isomorphic(&p, q), isomorphic_by_search(5, r, *q_rel, &perms));
        }
    }
}

#[test]
fn down_set_enumeration_matches_subset_scan() {
    for n in 0..=6 {
        for p in unlabeled(n) {
            let found: Vec<u64> = p.down_sets(4096).unwrap().iter().map(|s| s.bits()).collect();
            let mut expected = down_sets(&p);
            expected.sort_unstable_by_key(|&s| PointSet::from_bits(s));
            assert_eq!(found, expected);
        }
    }
}

/// Down-set lattice operations against their set-level formulas.
#[test]
fn lattice_operations_match_set_formulas() {
    for n in 0..=5 {
        for p in unlabeled(n) {
            let lattice = downset_lattice(&p).unwrap();
            let opens = down_sets(&p);
            let everything = full(n);
            let star = |a: u64| everything & !up_closure(&p, a);
            let arrow = |a: u64, b: u64| opens.iter().filter(|&&w| w & a & !b == 0).fold(0, |acc, &w| acc | w);
            for x in lattice.elements() {
                let a = lattice.set(x).bits();
                assert_eq!(lattice.set(lattice.pseudocomplement(x).unwrap()).bits(), star(a));
                for y in lattice.elements() {
                    let b = lattice.set(y).bits();
                    assert_eq!(lattice.set(lattice.meet(x, y)).bits(), a & b);
                    assert_eq!(lattice.set(lattice.join(x, y)).bits(), a | b);
                    assert_eq!(lattice.leq(x, y), a & !b == 0);
                    assert_eq!(
                        lattice.set(lattice.rel_pseudocomplement(x, y).unwrap()).bits(),
                        arrow(a, b)
                    );
                }
            }
            let stone = opens.iter().all(|&a| star(a) | star(star(a)) == everything);
            assert_eq!(lattice.is_stone(), stone, "{p:?}");
        }
    }
}

/// Prime ideals of a down-set lattice are `{U : x ∉ U}`, one per point.
#[test]
fn spectrum_points_are_the_original_points() {
    for n in 1..=5 {
        for p in unlabeled(n) {
            let lattice = downset_lattice(&p).unwrap();
            let spectrum = spec_poset(&lattice).unwrap();
            let mut found: Vec<Vec<usize>> = spectrum.primes.iter().map(|i| i.members().collect()).collect();
            let mut expected: Vec<Vec<usize>> = (0..n)
                .map(|x| lattice.elements().filter(|&e| !lattice.set(e).contains(x)).collect())
                .collect();
            found.sort();
            expected.sort();
            assert_eq!(found, expected);
            assert!(are_isomorphic(&spectrum.poset, &p));
        }
    }
}

#[test]
fn structure_predicates_match_definitions() {
    for n in 0..=6 {
        for p in unlabeled(n) {
            let pts = 0..n;
            let chain = |s: Vec<usize>| s.iter().all(|&a| s.iter().all(|&b| p.leq(a, b) || p.leq(b, a)));
            let above = |x: usize| pts.clone().filter(|&y| p.leq(x, y)).collect::<Vec<_>>();
            let below = |x: usize| pts.clone().filter(|&y| p.leq(y, x)).collect::<Vec<_>>();
            let maxima = maximal(&p, full(n));
            let minima = minimal(&p, full(n));
            let root_system = pts.clone().all(|x| chain(above(x)));
            let forest = pts.clone().all(|x| chain(below(x)));
            let normal = pts.clone().all(|x| (up_closure(&p, 1 << x) & maxima).count_ones() == 1);
            let inv_normal = pts
                .clone()
                .all(|x| pts.clone().filter(|&m| minima >> m & 1 == 1 && p.leq(m, x)).count() == 1);
            let confluent = pts.clone().all(|y| {
                pts.clone().all(|z| {
                    let bounded_above = pts.clone().any(|x| p.leq(y, x) && p.leq(z, x));
                    !bounded_above || pts.clone().any(|w| p.leq(w, y) && p.leq(w, z))
                })
            });
            assert_eq!(p.is_root_system(), root_system, "{p:?}");
            assert_eq!(p.is_forest(), forest, "{p:?}");
            assert_eq!(p.is_normal(), normal, "{p:?}");
            assert_eq!(p.is_inv_normal(), inv_normal, "{p:?}");
            assert_eq!(p.is_confluent(), confluent, "{p:?}");
            assert_eq!(p.minimal_points().bits(), minima);
            assert_eq!(p.maximal_points().bits(), maxima);
        }
    }
}

#[test]
fn prime_ideal_routes_agree() {
    for n in 0..=5 {
        for p in unlabeled(n) {
            let lattice = downset_lattice(&p).unwrap();
            let mut via_joins = lattice.prime_ideals_via_join_irreducibles();
            via_joins.sort();
            assert_eq!(lattice.prime_ideals(), via_joins, "{p:?}");
        }
    }
    for l in [finite_spectra::Lattice::m3(), finite_spectra::Lattice::n5()] {
        let mut via_joins = l.prime_ideals_via_join_irreducibles();
        via_joins.sort();
        assert_eq!(l.prime_ideals(), via_joins);
    }
}
