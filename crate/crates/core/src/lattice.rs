//! Finite bounded lattices given by their order.
//!
//! Meet and join tables are derived from the order at construction, which
//! also verifies that every pair has a greatest lower and a least upper
//! bound. Distributivity is a query, not an assumption: `M3` and `N5` are
//! valid lattices here.

use std::cmp::Ordering;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Largest lattice accepted by the constructors.
pub const MAX_LATTICE_SIZE: usize = 4096;

/// Lattices at or below this size are scanned with the pairwise primality
/// test; larger ones use the filter criterion.
pub const PAIRWISE_SCAN_LIMIT: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    meet: Vec<u16>,
    join: Vec<u16>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Builds the lattice whose order is generated by `pairs` (`i <= j`).
    pub fn new(size: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::with_bounds(size, pairs, None, None)
    }

    /// As [`Lattice::new`], additionally checking declared bounds.
    pub fn with_bounds(
        size: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
        bottom: Option<usize>,
        top: Option<usize>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::malformed("a bounded lattice needs at least one element"));
        }
        if size > MAX_LATTICE_SIZE {
            return Err(Error::ResourceLimit(format!(
                "lattice has {size} elements, at most {MAX_LATTICE_SIZE} are supported"
            )));
        }
        let mut up: Vec<FixedBitSet> = (0..size)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(size);
                row.insert(i);
                row
            })
            .collect();
        for (i, j) in pairs {
            if i >= size || j >= size {
                return Err(Error::malformed(format!(
                    "pair {i} < {j} mentions an element outside 0..{size}"
                )));
            }
            up[i].insert(j);
        }
        for k in 0..size {
            let row = up[k].clone();
            for set in up.iter_mut() {
                if set.contains(k) {
                    set.union_with(&row);
                }
            }
        }
        for i in 0..size {
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(Error::malformed(format!(
                        "order has a cycle through elements {i} and {j}"
                    )));
                }
            }
        }
        let lattice = Self::from_order(up)?;
        for (declared, actual, name) in [(bottom, lattice.bottom, "bottom"), (top, lattice.top, "top")] {
            if let Some(d) = declared {
                if d != actual {
                    return Err(Error::malformed(format!(
                        "declared {name} {d} differs from the {name} {actual} of the order"
                    )));
                }
            }
        }
        Ok(lattice)
    }

    /// Derives meet and join from a partial order given as up-sets.
    fn from_order(up: Vec<FixedBitSet>) -> Result<Self> {
        let n = up.len();
        let down = transpose(&up);
        let up_count: Vec<usize> = up.iter().map(|r| r.count_ones(..)).collect();
        let down_count: Vec<usize> = down.iter().map(|r| r.count_ones(..)).collect();
        let mut meet = vec![0u16; n * n];
        let mut join = vec![0u16; n * n];
        let mut scratch = FixedBitSet::with_capacity(n);
        for a in 0..n {
            for b in a..n {
                // The least element of the upper bounds, if any, has the
                // largest up-set among them.
                scratch.clone_from(&up[a]);
                scratch.intersect_with(&up[b]);
                let lub = scratch
                    .ones()
                    .max_by_key(|&u| up_count[u])
                    .filter(|&u| up[u] == scratch)
                    .ok_or_else(|| Error::malformed(format!("elements {a} and {b} have no least upper bound")))?;
                scratch.clone_from(&down[a]);
                scratch.intersect_with(&down[b]);
                let glb = scratch
                    .ones()
                    .max_by_key(|&u| down_count[u])
                    .filter(|&u| down[u] == scratch)
                    .ok_or_else(|| Error::malformed(format!("elements {a} and {b} have no greatest lower bound")))?;
                join[a * n + b] = lub as u16;
                join[b * n + a] = lub as u16;
                meet[a * n + b] = glb as u16;
                meet[b * n + a] = glb as u16;
            }
        }
        let bottom = (0..n)
            .find(|&x| up_count[x] == n)
            .ok_or_else(|| Error::malformed("no bottom element"))?;
        let top = (0..n)
            .find(|&x| down_count[x] == n)
            .ok_or_else(|| Error::malformed("no top element"))?;
        Ok(Lattice {
            up,
            down,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Builds a lattice from an order and operation tables already known to
    /// be correct, e.g. a family of sets closed under union and intersection.
    pub(crate) fn from_tables_unchecked(
        up: Vec<FixedBitSet>,
        meet: Vec<u16>,
        join: Vec<u16>,
        bottom: usize,
        top: usize,
    ) -> Self {
        let down = transpose(&up);
        Lattice {
            up,
            down,
            meet,
            join,
            bottom,
            top,
        }
    }

    /// `0 < 1 < .. < k-1`.
    pub fn chain(k: usize) -> Result<Self> {
        Self::new(k, (1..k).map(|i| (i - 1, i)))
    }

    /// The Boolean lattice of subsets of a `k`-element set; element `i` is
    /// the subset with bitmask `i`.
    pub fn boolean(k: usize) -> Result<Self> {
        if k > 12 {
            return Err(Error::ResourceLimit(format!(
                "bool{k} has more than {MAX_LATTICE_SIZE} elements"
            )));
        }
        let n = 1usize << k;
        let pairs = (0..n).flat_map(|i| (0..k).filter(move |b| i >> b & 1 == 0).map(move |b| (i, i | 1 << b)));
        Self::new(n, pairs)
    }

    /// Bottom 0, atoms 1, 2, 3, top 4.
    pub fn m3() -> Self {
        Self::new(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).expect("fixture")
    }

    /// Bottom 0, the chain 1 < 2 beside the atom 3, top 4.
    pub fn n5() -> Self {
        Self::new(5, [(0, 1), (1, 2), (0, 3), (2, 4), (3, 4)]).expect("fixture")
    }

    /// Named fixtures: `m3`, `n5`, `chain<k>`, `bool<k>`.
    pub fn fixture(name: &str) -> Option<Self> {
        let name = name.to_ascii_lowercase();
        match name.as_str() {
            "m3" => return Some(Self::m3()),
            "n5" => return Some(Self::n5()),
            _ => {}
        }
        let sized = |prefix: &str| name.strip_prefix(prefix).and_then(|k| k.parse::<usize>().ok());
        if let Some(k) = sized("chain") {
            return Self::chain(k).ok();
        }
        sized("bool").and_then(|k| Self::boolean(k).ok())
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// The one-element lattice, where bottom and top coincide.
    pub fn is_degenerate(&self) -> bool {
        self.bottom == self.top
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b] as usize
    }

    /// `{b : a <= b}`.
    pub fn up_set(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    /// `{b : b <= a}`.
    pub fn down_set(&self, a: usize) -> &FixedBitSet {
        &self.down[a]
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.up[a].ones().filter(|&b| b != a) {
                let mut between = self.up[a].clone();
                between.intersect_with(&self.down[b]);
                if between.count_ones(..) == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn order_dual(&self) -> Lattice {
        let n = self.size();
        let mut meet = vec![0u16; n * n];
        let mut join = vec![0u16; n * n];
        meet.copy_from_slice(&self.join);
        join.copy_from_slice(&self.meet);
        Lattice {
            up: self.down.clone(),
            down: self.up.clone(),
            meet,
            join,
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Largest element of `set`, which exists iff the join of the set
    /// belongs to it.
    fn maximum_of(&self, mut set: impl Iterator<Item = usize>, member: impl Fn(usize) -> bool) -> Option<usize> {
        let first = set.next()?;
        let j = set.fold(first, |acc, x| self.join(acc, x));
        member(j).then_some(j)
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// A triple with `a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        for a in self.elements() {
            for b in self.elements() {
                for c in b + 1..self.size() {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// `a*`, the largest `x` with `a ∧ x = ⊥`, if it exists.
    pub fn pseudocomplement(&self, a: usize) -> Option<usize> {
        let disjoint = |x: usize| self.meet(a, x) == self.bottom;
        self.maximum_of(self.elements().filter(|&x| disjoint(x)), disjoint)
    }

    pub fn is_pseudocomplemented(&self) -> bool {
        self.elements().all(|a| self.pseudocomplement(a).is_some())
    }

    /// Pseudocomplemented with `a* ∨ a** = ⊤` for every `a`.
    pub fn is_stone(&self) -> bool {
        self.elements().all(|a| {
            let Some(star) = self.pseudocomplement(a) else {
                return false;
            };
            let Some(star_star) = self.pseudocomplement(star) else {
                return false;
            };
            self.join(star, star_star) == self.top
        })
    }

    /// `a → b`, the largest `x` with `a ∧ x <= b`, if it exists.
    pub fn rel_pseudocomplement(&self, a: usize, b: usize) -> Option<usize> {
        let below = |x: usize| self.leq(self.meet(a, x), b);
        self.maximum_of(self.elements().filter(|&x| below(x)), below)
    }

    pub fn is_heyting(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.rel_pseudocomplement(a, b).is_some()))
    }

    /// Some `b` with `a ∧ b = ⊥` and `a ∨ b = ⊤`.
    pub fn complement(&self, a: usize) -> Option<usize> {
        self.elements()
            .find(|&b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
    }

    /// Every element has a complement. On distributive lattices this is
    /// being a Boolean algebra; M3 and N5 are complemented too.
    pub fn is_boolean(&self) -> bool {
        self.elements().all(|a| self.complement(a).is_some())
    }

    /// Elements `j != ⊥` that are not the join of two elements both
    /// different from `j`.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let mut reducible = FixedBitSet::with_capacity(self.size());
        reducible.insert(self.bottom);
        for a in self.elements() {
            for b in a + 1..self.size() {
                let j = self.join(a, b);
                if j != a && j != b {
                    reducible.insert(j);
                }
            }
        }
        self.elements().filter(|&j| !reducible.contains(j)).collect()
    }

    /// Every prime ideal, sorted by member bitmask.
    ///
    /// Ideals of a finite lattice are principal, so the scan runs over `↓a`
    /// for `a != ⊤`.
    pub fn prime_ideals(&self) -> Vec<LatticeIdeal> {
        let mut out: Vec<LatticeIdeal> = self
            .elements()
            .filter(|&a| a != self.top)
            .filter(|&a| {
                if self.size() <= PAIRWISE_SCAN_LIMIT {
                    is_prime_set(self, &self.down[a])
                } else {
                    self.complement_is_filter(a)
                }
            })
            .map(|a| LatticeIdeal::new(self, self.down[a].clone()).expect("principal ideal"))
            .collect();
        out.sort();
        out
    }

    /// `↓a` is prime iff `{x : x ≰ a}` is a filter, i.e. contains the meet
    /// of all its elements.
    fn complement_is_filter(&self, a: usize) -> bool {
        let mut outside = self.elements().filter(|&x| !self.leq(x, a));
        let Some(first) = outside.next() else {
            return false;
        };
        let m = outside.fold(first, |acc, x| self.meet(acc, x));
        !self.leq(m, a)
    }

    /// Prime ideals built as `{a : j ≰ a}` for join-irreducible `j`. Agrees
    /// with [`Lattice::prime_ideals`] on distributive lattices.
    pub fn prime_ideals_via_join_irreducibles(&self) -> Vec<LatticeIdeal> {
        let mut out: Vec<LatticeIdeal> = self
            .join_irreducibles()
            .into_iter()
            .filter_map(|j| {
                let mut members = FixedBitSet::with_capacity(self.size());
                members.extend(self.elements().filter(|&a| !self.leq(j, a)));
                LatticeIdeal::new(self, members).ok()
            })
            .filter(|ideal| ideal.is_proper(self) && ideal.is_prime(self))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Prime ideals minimal under inclusion.
    pub fn minimal_prime_ideals(&self) -> Vec<LatticeIdeal> {
        let primes = self.prime_ideals();
        primes
            .iter()
            .filter(|p| !primes.iter().any(|q| q != *p && q.members.is_subset(&p.members)))
            .cloned()
            .collect()
    }

    /// Distinct minimal primes `I, J` are coprime when some `a ∈ I`, `b ∈ J`
    /// have `a ∨ b = ⊤`.
    pub fn minimal_primes_coprime(&self) -> Coprimality {
        let minimal = self.minimal_prime_ideals();
        for (i, p) in minimal.iter().enumerate() {
            for q in &minimal[i + 1..] {
                let coprime = p
                    .members
                    .ones()
                    .any(|a| q.members.ones().any(|b| self.join(a, b) == self.top));
                if !coprime {
                    return Coprimality {
                        holds: false,
                        witness: Some((p.clone(), q.clone())),
                    };
                }
            }
        }
        Coprimality {
            holds: true,
            witness: None,
        }
    }
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Lattice({}; bottom {}, top {}; {:?})",
            self.size(),
            self.bottom,
            self.top,
            self.covers()
        )
    }
}

fn transpose(rows: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = rows.len();
    let mut out = vec![FixedBitSet::with_capacity(n); n];
    for (i, row) in rows.iter().enumerate() {
        for j in row.ones() {
            out[j].insert(i);
        }
    }
    out
}

fn is_prime_set(lattice: &Lattice, members: &FixedBitSet) -> bool {
    lattice.elements().all(|a| {
        members.contains(a)
            || lattice
                .elements()
                .all(|b| members.contains(b) || !members.contains(lattice.meet(a, b)))
    })
}

/// The verdict of the minimal-prime coprimality test, with an offending pair
/// on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coprimality {
    pub holds: bool,
    pub witness: Option<(LatticeIdeal, LatticeIdeal)>,
}

/// A nonempty down-set closed under binary joins.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticeIdeal {
    members: FixedBitSet,
}

impl LatticeIdeal {
    pub fn new(lattice: &Lattice, members: FixedBitSet) -> Result<Self> {
        let mut members = members;
        if members.len() > lattice.size() && members.ones().any(|a| a >= lattice.size()) {
            return Err(Error::malformed("ideal mentions an element outside the lattice"));
        }
        members.grow(lattice.size());
        if members.is_clear() {
            return Err(Error::malformed("ideals are nonempty"));
        }
        for a in members.ones() {
            if !lattice.down_set(a).is_subset(&members) {
                return Err(Error::malformed(format!("not downward closed below {a}")));
            }
            for b in members.ones() {
                if !members.contains(lattice.join(a, b)) {
                    return Err(Error::malformed(format!("not closed under the join of {a} and {b}")));
                }
            }
        }
        Ok(LatticeIdeal { members })
    }

    pub fn principal(lattice: &Lattice, a: usize) -> Self {
        LatticeIdeal {
            members: lattice.down_set(a).clone(),
        }
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn member_set(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn is_proper(&self, lattice: &Lattice) -> bool {
        !self.members.contains(lattice.top())
    }

    /// Proper, and `a ∧ b ∈ I` forces `a ∈ I` or `b ∈ I`.
    pub fn is_prime(&self, lattice: &Lattice) -> bool {
        self.is_proper(lattice) && is_prime_set(lattice, &self.members)
    }

    pub fn is_subset(&self, other: &LatticeIdeal) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl Ord for LatticeIdeal {
    /// Compares member sets as bitmasks, element `i` weighing `2^i`.
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.members.as_slice();
        let b = other.members.as_slice();
        let len = a.len().max(b.len());
        for k in (0..len).rev() {
            let x = a.get(k).copied().unwrap_or(0);
            let y = b.get(k).copied().unwrap_or(0);
            match x.cmp(&y) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for LatticeIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for LatticeIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.members.ones()).finish()
    }
}
