//! Finite Stone/Birkhoff duality.
//!
//! A finite distributive lattice `L` is recovered from its poset of prime
//! ideals `X` as the lattice of down-sets of `X`, via `a ↦ D(a)`, the primes
//! not containing `a`. Conversely a finite poset is recovered as the prime
//! spectrum of its down-set lattice.
//!
//! The patch topology of a finite spectral space is discrete, so its Priestley
//! space is the same poset with the discrete topology. The two sides are
//! therefore one structure here; the isomorphism between them is the
//! identity on points.

use std::collections::HashMap;
use std::ops::Deref;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeIdeal};
use crate::poset::{are_isomorphic, PointSet, Poset, MAX_POINTS};

/// Default cap on the number of elements of a set lattice.
pub const DEFAULT_SET_LATTICE_CAP: usize = 4096;

/// Largest carrier accepted by [`boolean_envelope`].
pub const MAX_ENVELOPE_POINTS: usize = 12;

/// A lattice of subsets of a poset's points, ordered by inclusion, with meet
/// and join given by intersection and union. Element `i` is `sets()[i]`;
/// sets are numbered in increasing bitmask order.
#[derive(Clone, Debug)]
pub struct SetLattice {
    lattice: Lattice,
    sets: Vec<PointSet>,
    index: HashMap<PointSet, usize>,
}

impl SetLattice {
    /// `sets` must be sorted, closed under union and intersection, and
    /// contain a least and a greatest member.
    fn from_family(sets: Vec<PointSet>) -> Self {
        let n = sets.len();
        let index: HashMap<PointSet, usize> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut meet = vec![0u16; n * n];
        let mut join = vec![0u16; n * n];
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate() {
                if a.is_subset(b) {
                    up[i].insert(j);
                }
                meet[i * n + j] = index[&(a & b)] as u16;
                join[i * n + j] = index[&(a | b)] as u16;
            }
        }
        let bottom = index[&sets.iter().fold(sets[n - 1], |acc, &s| acc & s)];
        let top = index[&sets.iter().fold(PointSet::EMPTY, |acc, &s| acc | s)];
        SetLattice {
            lattice: Lattice::from_tables_unchecked(up, meet, join, bottom, top),
            sets,
            index,
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn into_lattice(self) -> Lattice {
        self.lattice
    }

    pub fn sets(&self) -> &[PointSet] {
        &self.sets
    }

    pub fn set(&self, element: usize) -> PointSet {
        self.sets[element]
    }

    pub fn index_of(&self, set: PointSet) -> Option<usize> {
        self.index.get(&set).copied()
    }
}

impl Deref for SetLattice {
    type Target = Lattice;

    fn deref(&self) -> &Lattice {
        &self.lattice
    }
}

/// The lattice of all down-sets of `p` (its compact opens).
pub fn downset_lattice(p: &Poset) -> Result<SetLattice> {
    downset_lattice_capped(p, DEFAULT_SET_LATTICE_CAP)
}

pub fn downset_lattice_capped(p: &Poset, cap: usize) -> Result<SetLattice> {
    Ok(SetLattice::from_family(p.down_sets(cap.min(u16::MAX as usize))?))
}

/// The lattice of all up-sets of `p` (complements of compact opens).
pub fn qccl_lattice(p: &Poset) -> Result<SetLattice> {
    Ok(SetLattice::from_family(p.up_sets(DEFAULT_SET_LATTICE_CAP)?))
}

/// The prime spectrum of a lattice: prime ideals ordered by inclusion.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub poset: Poset,
    /// `primes[x]` is the prime ideal at point `x`, sorted by member bitmask.
    pub primes: Vec<LatticeIdeal>,
}

impl Spectrum {
    /// `D(a)`: the primes not containing `a`. Always a down-set.
    pub fn d_map(&self, a: usize) -> PointSet {
        (0..self.primes.len())
            .filter(|&x| !self.primes[x].contains(a))
            .collect()
    }
}

pub fn spec_poset(lattice: &Lattice) -> Result<Spectrum> {
    let primes = lattice.prime_ideals();
    if primes.len() > MAX_POINTS {
        return Err(Error::ResourceLimit(format!(
            "lattice has {} prime ideals, at most {MAX_POINTS} fit in a spectrum",
            primes.len()
        )));
    }
    let up = primes
        .iter()
        .map(|p| (0..primes.len()).filter(|&q| p.is_subset(&primes[q])).collect())
        .collect();
    Ok(Spectrum {
        poset: Poset::from_up_sets(up)?,
        primes,
    })
}

/// `D(a)` over the spectrum of `lattice`.
pub fn d_map(lattice: &Lattice, a: usize) -> Result<PointSet> {
    Ok(spec_poset(lattice)?.d_map(a))
}

/// Mutually inverse order-preserving maps between two lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

/// Returns the isomorphism when `forward` is a bijection from `source` to
/// `target` that preserves and reflects the order.
pub fn check_isomorphism(source: &Lattice, target: &Lattice, forward: Vec<usize>) -> Option<Isomorphism> {
    if source.size() != target.size() || forward.len() != source.size() {
        return None;
    }
    let mut backward = vec![usize::MAX; target.size()];
    for (a, &b) in forward.iter().enumerate() {
        if b >= target.size() || backward[b] != usize::MAX {
            return None;
        }
        backward[b] = a;
    }
    let order_matches = source.elements().all(|a| {
        source
            .elements()
            .all(|b| source.leq(a, b) == target.leq(forward[a], forward[b]))
    });
    order_matches.then_some(Isomorphism { forward, backward })
}

/// `a ↦ D(a)` into the down-sets of the spectrum, when it is an isomorphism.
/// Present exactly for distributive lattices.
pub fn stone_roundtrip(lattice: &Lattice) -> Result<Option<Isomorphism>> {
    let spectrum = spec_poset(lattice)?;
    let target = downset_lattice(&spectrum.poset)?;
    let forward: Option<Vec<usize>> = lattice.elements().map(|a| target.index_of(spectrum.d_map(a))).collect();
    Ok(forward.and_then(|f| check_isomorphism(lattice, &target, f)))
}

/// The spectrum of the down-set lattice of `p` is isomorphic to `p`.
pub fn poset_roundtrip(p: &Poset) -> Result<bool> {
    let lattice = downset_lattice(p)?;
    let spectrum = spec_poset(&lattice)?;
    Ok(are_isomorphic(p, &spectrum.poset))
}

/// Complementation maps down-sets onto up-sets and reverses inclusion, so
/// the up-set lattice is the order dual of the down-set lattice.
pub fn complement_is_dual_isomorphism(p: &Poset) -> Result<bool> {
    let downs = downset_lattice(p)?;
    let ups = qccl_lattice(p)?;
    let dual = downs.order_dual();
    let forward: Option<Vec<usize>> = downs
        .sets()
        .iter()
        .map(|d| ups.index_of(d.complement(p.size())))
        .collect();
    Ok(forward.and_then(|f| check_isomorphism(&dual, &ups, f)).is_some())
}

/// The Boolean algebra generated by the down-sets, with the inclusion of
/// the down-set lattice into it.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub powerset: SetLattice,
    pub downsets: SetLattice,
    /// `embedding[i]` is the element of `powerset` equal to down-set `i`.
    pub embedding: Vec<usize>,
}

impl Envelope {
    /// The embedding preserves meet, join, bottom and top.
    pub fn is_homomorphism(&self) -> bool {
        let e = &self.embedding;
        let (src, dst) = (&self.downsets, &self.powerset);
        e[src.bottom()] == dst.bottom()
            && e[src.top()] == dst.top()
            && src.elements().all(|a| {
                src.elements()
                    .all(|b| e[src.meet(a, b)] == dst.meet(e[a], e[b]) && e[src.join(a, b)] == dst.join(e[a], e[b]))
            })
    }
}

/// Down-sets separate the points of a poset, so the generated Boolean algebra
/// is the full powerset. That is checked rather than assumed: the atoms of
/// the generated algebra must be singletons.
pub fn boolean_envelope(p: &Poset) -> Result<Envelope> {
    if p.size() > MAX_ENVELOPE_POINTS {
        return Err(Error::ResourceLimit(format!(
            "Boolean envelope of {} points exceeds the cap of {MAX_ENVELOPE_POINTS}",
            p.size()
        )));
    }
    let downsets = downset_lattice(p)?;
    for x in 0..p.size() {
        let atom = downsets
            .sets()
            .iter()
            .fold(p.points(), |acc, &d| if d.contains(x) { acc & d } else { acc - d });
        if atom != PointSet::singleton(x) {
            return Err(Error::Assertion(format!("down-sets do not separate point {x}")));
        }
    }
    let powerset = SetLattice::from_family((0..1u64 << p.size()).map(PointSet::from_bits).collect());
    let embedding = downsets
        .sets()
        .iter()
        .map(|&d| powerset.index_of(d).expect("every subset is present"))
        .collect();
    Ok(Envelope {
        powerset,
        downsets,
        embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s<const N: usize>(points: [usize; N]) -> PointSet {
        PointSet::from(points)
    }

    #[test]
    fn downset_lattice_examples() {
        let a2 = downset_lattice(&Poset::a2()).unwrap();
        assert_eq!(a2.size(), 4);
        assert!(a2.is_boolean());
        let v3 = downset_lattice(&Poset::v3()).unwrap();
        assert_eq!(v3.sets(), &[PointSet::EMPTY, s([0]), s([1]), s([0, 1]), s([0, 1, 2])]);
        let empty = downset_lattice(&Poset::empty()).unwrap();
        assert_eq!(empty.size(), 1);
        assert!(empty.is_degenerate());
    }

    #[test]
    fn downset_lattice_respects_cap() {
        let err = downset_lattice_capped(&Poset::antichain(6), 63).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }

    #[test]
    fn meet_and_join_in_downsets_of_v3() {
        let l = downset_lattice(&Poset::v3()).unwrap();
        let (a, b) = (l.index_of(s([0])).unwrap(), l.index_of(s([1])).unwrap());
        assert_eq!(l.set(l.meet(a, b)), PointSet::EMPTY);
        assert_eq!(l.set(l.join(a, b)), s([0, 1]));
        assert_eq!(l.join(a, l.bottom()), a);
    }

    #[test]
    fn spec_poset_examples() {
        let c3 = Lattice::chain(3).unwrap();
        assert_eq!(spec_poset(&c3).unwrap().poset, Poset::c2());
        assert_eq!(spec_poset(&Lattice::chain(2).unwrap()).unwrap().poset.size(), 1);
        let v3 = downset_lattice(&Poset::v3()).unwrap();
        assert!(are_isomorphic(&spec_poset(&v3).unwrap().poset, &Poset::v3()));
    }

    #[test]
    fn d_map_examples() {
        let c3 = Lattice::chain(3).unwrap();
        let spectrum = spec_poset(&c3).unwrap();
        // point 0 is the ideal {⊥}
        assert_eq!(spectrum.primes[0].members().collect::<Vec<_>>(), vec![0]);
        assert_eq!(spectrum.d_map(1), s([0]));
        assert_eq!(spectrum.d_map(c3.bottom()), PointSet::EMPTY);
        assert_eq!(spectrum.d_map(c3.top()), s([0, 1]));
        assert_eq!(d_map(&c3, 1).unwrap(), s([0]));
    }

    #[test]
    fn stone_roundtrip_examples() {
        let v3 = downset_lattice(&Poset::v3()).unwrap();
        let iso = stone_roundtrip(&v3).unwrap().unwrap();
        assert_eq!(iso.forward.len(), 5);
        assert!(stone_roundtrip(&Lattice::m3()).unwrap().is_none());
        assert!(stone_roundtrip(&Lattice::n5()).unwrap().is_none());
        assert!(stone_roundtrip(&Lattice::chain(2).unwrap()).unwrap().is_some());
    }

    #[test]
    fn poset_roundtrip_examples() {
        assert!(poset_roundtrip(&Poset::v3()).unwrap());
        assert!(poset_roundtrip(&Poset::empty()).unwrap());
        assert!(poset_roundtrip(&Poset::d4()).unwrap());
    }

    #[test]
    fn qccl_examples() {
        let v3 = qccl_lattice(&Poset::v3()).unwrap();
        assert_eq!(
            v3.sets(),
            &[PointSet::EMPTY, s([2]), s([0, 2]), s([1, 2]), s([0, 1, 2])]
        );
        assert!(qccl_lattice(&Poset::a2()).unwrap().is_boolean());
        for p in [Poset::v3(), Poset::l3(), Poset::d4(), Poset::empty()] {
            assert!(complement_is_dual_isomorphism(&p).unwrap());
        }
    }

    #[test]
    fn envelope_examples() {
        let env = boolean_envelope(&Poset::c2()).unwrap();
        assert_eq!(env.powerset.size(), 4);
        assert!(env.powerset.is_boolean());
        assert_eq!(env.downsets.size(), 3);
        assert!(env.is_homomorphism());
        let a2 = boolean_envelope(&Poset::a2()).unwrap();
        assert_eq!(a2.embedding, vec![0, 1, 2, 3]);
        assert!(boolean_envelope(&Poset::antichain(13)).is_err());
    }
}
