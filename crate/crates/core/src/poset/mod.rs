//! Finite posets, read as finite spectral spaces.
//!
//! Points are `0..size` and `x <= y` is the specialization order, with
//! closed points on top: `y` lies in the closure of `{x}` exactly when
//! `x <= y`. Opens are the down-sets, closeds are the up-sets, the inverse
//! space is the order dual, and the patch topology is discrete.

mod canon;
mod enumerate;
mod maps;
mod pointset;
mod topology;

pub use canon::{are_isomorphic, CanonicalForm};
pub use enumerate::{
    enumerate_posets, enumerate_posets_with, EnumerateConfig, Enumeration, Labeling, MAX_ENUMERATION_SIZE,
};
pub use maps::{MonotoneMap, Retraction, RetractionKind};
pub use pointset::PointSet;
pub use topology::{Direction, Extremal, Structure};

use crate::error::{Error, Result};

/// Largest number of points a [`Poset`] may carry.
pub const MAX_POINTS: usize = 64;

/// A finite partial order on the points `0..size`.
///
/// Immutable once built; the full order relation is stored as one up-set and
/// one down-set per point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    up: Vec<PointSet>,
    down: Vec<PointSet>,
}

impl Poset {
    /// Builds the partial order generated by `pairs`, each read as `i <= j`.
    ///
    /// The pairs may be covers or any part of the relation; the reflexive
    /// transitive closure is taken and must be antisymmetric.
    pub fn new(size: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if size > MAX_POINTS {
            return Err(Error::ResourceLimit(format!(
                "poset has {size} points, at most {MAX_POINTS} are supported"
            )));
        }
        let mut up: Vec<PointSet> = (0..size).map(PointSet::singleton).collect();
        for (i, j) in pairs {
            if i >= size || j >= size {
                return Err(Error::malformed(format!(
                    "pair {i} < {j} mentions a point outside 0..{size}"
                )));
            }
            up[i].insert(j);
        }
        // Warshall over bit rows.
        for k in 0..size {
            let row = up[k];
            for set in up.iter_mut() {
                if set.contains(k) {
                    *set = set.union(row);
                }
            }
        }
        for i in 0..size {
            for j in up[i].without(i) {
                if up[j].contains(i) {
                    return Err(Error::malformed(format!(
                        "relation has a cycle through points {i} and {j}"
                    )));
                }
            }
        }
        Ok(Self::from_up_sets_unchecked(up))
    }

    /// Builds a poset from a full relation given as up-sets (`up[i]` holds
    /// every `j` with `i <= j`), checking reflexivity, antisymmetry and
    /// transitivity without closing the relation.
    pub fn from_up_sets(up: Vec<PointSet>) -> Result<Self> {
        let size = up.len();
        if size > MAX_POINTS {
            return Err(Error::ResourceLimit(format!(
                "poset has {size} points, at most {MAX_POINTS} are supported"
            )));
        }
        let full = PointSet::full(size);
        for (i, &row) in up.iter().enumerate() {
            if !row.is_subset(full) {
                return Err(Error::malformed(format!("row {i} mentions a point outside 0..{size}")));
            }
            if !row.contains(i) {
                return Err(Error::malformed(format!("relation is not reflexive at {i}")));
            }
            for j in row.without(i) {
                if up[j].contains(i) {
                    return Err(Error::malformed(format!("relation is not antisymmetric at {i}, {j}")));
                }
                if !up[j].is_subset(row) {
                    return Err(Error::malformed(format!(
                        "relation is not transitive through {i} <= {j}"
                    )));
                }
            }
        }
        Ok(Self::from_up_sets_unchecked(up))
    }

    pub(crate) fn from_up_sets_unchecked(up: Vec<PointSet>) -> Self {
        let size = up.len();
        let mut down = vec![PointSet::EMPTY; size];
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j].insert(i);
            }
        }
        Poset { up, down }
    }

    pub fn empty() -> Self {
        Poset {
            up: Vec::new(),
            down: Vec::new(),
        }
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_up_sets_unchecked((0..n).map(PointSet::singleton).collect())
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_up_sets_unchecked((0..n).map(|i| PointSet::full(n) - PointSet::full(i)).collect())
    }

    /// Two minimal points below one maximal point: `0, 1 < 2`.
    pub fn v3() -> Self {
        Self::new(3, [(0, 2), (1, 2)]).expect("fixture")
    }

    /// One minimal point below two maximal points: `0 < 1, 2`.
    pub fn l3() -> Self {
        Self::new(3, [(0, 1), (0, 2)]).expect("fixture")
    }

    pub fn c2() -> Self {
        Self::chain(2)
    }

    pub fn a2() -> Self {
        Self::antichain(2)
    }

    /// The diamond `0 < 1, 2 < 3`.
    pub fn d4() -> Self {
        Self::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).expect("fixture")
    }

    /// Named fixtures: `v3`, `l3`, `c2`, `a2`, `d4`, `chain<k>`, `antichain<k>`.
    pub fn fixture(name: &str) -> Option<Self> {
        let name = name.to_ascii_lowercase();
        match name.as_str() {
            "v3" => return Some(Self::v3()),
            "l3" => return Some(Self::l3()),
            "c2" => return Some(Self::c2()),
            "a2" => return Some(Self::a2()),
            "d4" => return Some(Self::d4()),
            "empty" => return Some(Self::empty()),
            _ => {}
        }
        let sized = |prefix: &str| {
            name.strip_prefix(prefix)
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k <= MAX_POINTS)
        };
        if let Some(k) = sized("antichain") {
            return Some(Self::antichain(k));
        }
        sized("chain").map(Self::chain)
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    /// All points, as a set.
    pub fn points(&self) -> PointSet {
        PointSet::full(self.size())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `↑x`, the closure of the point `x`.
    pub fn up_set(&self, x: usize) -> PointSet {
        self.up[x]
    }

    /// `↓x`, the generalizations of `x`.
    pub fn down_set(&self, x: usize) -> PointSet {
        self.down[x]
    }

    pub(crate) fn up_rows(&self) -> &[PointSet] {
        &self.up
    }

    /// Every pair `(x, y)` with `x < y`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.size())
            .flat_map(|x| self.up[x].without(x).iter().map(move |y| (x, y)))
            .collect()
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .into_iter()
            .filter(|&(x, y)| {
                let between = self.up[x].intersection(self.down[y]).without(x).without(y);
                between.is_empty()
            })
            .collect()
    }

    /// Rejects sets that mention points outside the carrier.
    pub fn check_set(&self, s: PointSet) -> Result<()> {
        if s.is_subset(self.points()) {
            Ok(())
        } else {
            Err(Error::malformed(format!(
                "set {s} mentions a point outside 0..{}",
                self.size()
            )))
        }
    }

    /// The inverse space: same points, reversed order.
    pub fn dual(&self) -> Poset {
        Poset {
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// True when no two distinct points are comparable.
    pub fn is_antichain(&self) -> bool {
        self.up.iter().enumerate().all(|(x, row)| row.without(x).is_empty())
    }

    /// The subposet on `s`, with the original index of each new point.
    pub fn induced(&self, s: PointSet) -> (Poset, Vec<usize>) {
        let points: Vec<usize> = s.iter().collect();
        let up = points
            .iter()
            .map(|&x| {
                points
                    .iter()
                    .enumerate()
                    .filter(|&(_, &y)| self.leq(x, y))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        (Self::from_up_sets_unchecked(up), points)
    }

    /// Renames point `x` to `perm[x]`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.size(), "permutation length");
        let mut up = vec![PointSet::EMPTY; self.size()];
        for (x, row) in self.up.iter().enumerate() {
            up[perm[x]] = row.iter().map(|y| perm[y]).collect();
        }
        Self::from_up_sets_unchecked(up)
    }

    /// Points listed so that smaller points come first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size()).collect();
        order.sort_by_key(|&x| (self.down[x].len(), x));
        order
    }

    /// Every down-set, in increasing bitmask order. Fails when there are more
    /// than `cap` of them.
    pub fn down_sets(&self, cap: usize) -> Result<Vec<PointSet>> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, PointSet::EMPTY)];
        while let Some((k, current)) = stack.pop() {
            if k == order.len() {
                if out.len() == cap {
                    return Err(Error::ResourceLimit(format!(
                        "poset with {} points has more than {cap} down-sets",
                        self.size()
                    )));
                }
                out.push(current);
                continue;
            }
            let x = order[k];
            stack.push((k + 1, current));
            if self.down[x].without(x).is_subset(current) {
                stack.push((k + 1, current.with(x)));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Every up-set, in increasing bitmask order.
    pub fn up_sets(&self, cap: usize) -> Result<Vec<PointSet>> {
        self.dual().down_sets(cap)
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset({}; {:?})", self.size(), self.covers())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closes_covers_transitively() {
        let p = Poset::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p, Poset::chain(3));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_cycles() {
        let err = Poset::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap_err();
        assert!(matches!(err, Error::Malformed { .. }), "{err}");
    }

    #[test]
    fn rejects_out_of_range_pairs() {
        assert!(Poset::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn strict_constructor_checks_all_three_axioms() {
        fn s<const N: usize>(points: [usize; N]) -> PointSet {
            PointSet::from(points)
        }
        assert!(Poset::from_up_sets(vec![s([0, 1]), s([1])]).is_ok());
        // not reflexive
        assert!(Poset::from_up_sets(vec![s([1]), s([1])]).is_err());
        // not antisymmetric
        assert!(Poset::from_up_sets(vec![s([0, 1]), s([0, 1])]).is_err());
        // not transitive
        assert!(Poset::from_up_sets(vec![s([0, 1]), s([1, 2]), s([2])]).is_err());
    }

    #[test]
    fn empty_poset_is_permitted() {
        let p = Poset::new(0, []).unwrap();
        assert!(p.is_empty());
        assert_eq!(p.down_sets(16).unwrap(), vec![PointSet::EMPTY]);
    }

    #[test]
    fn down_sets_of_v3() {
        let got = Poset::v3().down_sets(64).unwrap();
        let want: Vec<PointSet> = vec![
            PointSet::EMPTY,
            PointSet::from([0]),
            PointSet::from([1]),
            PointSet::from([0, 1]),
            PointSet::from([0, 1, 2]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn down_set_cap_is_enforced() {
        let err = Poset::antichain(5).down_sets(31).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
        assert_eq!(Poset::antichain(5).down_sets(32).unwrap().len(), 32);
    }

    #[test]
    fn dual_is_an_involution() {
        let p = Poset::d4();
        assert_eq!(p.dual().dual(), p);
        assert_eq!(Poset::c2().dual(), Poset::new(2, [(1, 0)]).unwrap());
        assert_eq!(Poset::a2().dual(), Poset::a2());
    }

    #[test]
    fn fixtures_resolve_by_name() {
        assert_eq!(Poset::fixture("V3"), Some(Poset::v3()));
        assert_eq!(Poset::fixture("chain4"), Some(Poset::chain(4)));
        assert_eq!(Poset::fixture("antichain3"), Some(Poset::antichain(3)));
        assert_eq!(Poset::fixture("m3"), None);
    }

    #[test]
    fn induced_subposet_keeps_order() {
        let (sub, points) = Poset::d4().induced(PointSet::from([1, 2, 3]));
        assert_eq!(points, vec![1, 2, 3]);
        assert_eq!(sub, Poset::new(3, [(0, 2), (1, 2)]).unwrap());
    }
}
