use super::{PointSet, Poset};
use crate::error::{Error, Result};

/// A function between the point sets of two posets.
///
/// Nothing is assumed at construction; order preservation and continuity are
/// queried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneMap {
    pub source: Poset,
    pub target: Poset,
    pub assignment: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: Poset, target: Poset, assignment: Vec<usize>) -> Self {
        MonotoneMap {
            source,
            target,
            assignment,
        }
    }

    pub fn identity(poset: &Poset) -> Self {
        Self::new(poset.clone(), poset.clone(), (0..poset.size()).collect())
    }

    fn check(&self) -> Result<()> {
        if self.assignment.len() != self.source.size() {
            return Err(Error::malformed(format!(
                "assignment has {} entries for a source of {} points",
                self.assignment.len(),
                self.source.size()
            )));
        }
        if let Some(&bad) = self.assignment.iter().find(|&&y| y >= self.target.size()) {
            return Err(Error::malformed(format!(
                "assignment hits point {bad} outside a target of {} points",
                self.target.size()
            )));
        }
        Ok(())
    }

    /// `f^{-1}(T)`.
    pub fn preimage(&self, t: PointSet) -> PointSet {
        (0..self.assignment.len())
            .filter(|&x| t.contains(self.assignment[x]))
            .collect()
    }

    /// `x <= y` implies `f(x) <= f(y)`.
    pub fn is_monotone(&self) -> Result<bool> {
        self.check()?;
        Ok(self
            .source
            .strict_pairs()
            .into_iter()
            .all(|(x, y)| self.target.leq(self.assignment[x], self.assignment[y])))
    }

    /// The preimage of every open set of the target is open in the source.
    ///
    /// Opens of the target are unions of principal down-sets and preimages
    /// commute with unions, so the principal ones suffice. When the target
    /// is an antichain every subset of it is open.
    pub fn is_continuous(&self) -> Result<bool> {
        self.check()?;
        Ok((0..self.target.size()).all(|t| self.source.is_open(self.preimage(self.target.down_set(t)))))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RetractionKind {
    /// Onto the minimal points.
    ToMin,
    /// Onto the maximal (closed) points.
    ToMax,
}

/// A continuous retraction of a poset onto its minimal or maximal points.
///
/// `map` goes from the poset to the subspace of extremal points (an
/// antichain); `points[i]` is the original index of target point `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Retraction {
    pub map: MonotoneMap,
    pub points: Vec<usize>,
}

impl Retraction {
    /// Image of `x`, as a point of the original poset.
    pub fn image(&self, x: usize) -> usize {
        self.points[self.map.assignment[x]]
    }

    pub fn images(&self) -> Vec<usize> {
        (0..self.map.assignment.len()).map(|x| self.image(x)).collect()
    }
}

impl Poset {
    /// Searches for a continuous retraction onto the minimal (or maximal)
    /// points, returning it if one exists.
    pub fn retraction(&self, kind: RetractionKind) -> Option<Retraction> {
        let extremal = match kind {
            RetractionKind::ToMin => self.minimal_points(),
            RetractionKind::ToMax => self.maximal_points(),
        };
        let (target, points) = self.induced(extremal);
        let mut slot = vec![usize::MAX; self.size()];
        for (i, &p) in points.iter().enumerate() {
            slot[p] = i;
        }
        let free: Vec<usize> = (0..self.size()).filter(|&x| !extremal.contains(x)).collect();

        // Continuity into an antichain forces comparable points onto the same
        // image, which prunes the search; the final map is re-checked below.
        fn search(poset: &Poset, free: &[usize], k: usize, targets: usize, slot: &mut [usize]) -> bool {
            let Some(&x) = free.get(k) else {
                return true;
            };
            for candidate in 0..targets {
                let consistent = (poset.up_set(x) | poset.down_set(x))
                    .iter()
                    .all(|y| slot[y] == usize::MAX || slot[y] == candidate);
                if consistent {
                    slot[x] = candidate;
                    if search(poset, free, k + 1, targets, slot) {
                        return true;
                    }
                }
            }
            slot[x] = usize::MAX;
            false
        }

        if !search(self, &free, 0, points.len(), &mut slot) {
            return None;
        }
        let map = MonotoneMap::new(self.clone(), target, slot);
        let is_retraction = points.iter().enumerate().all(|(i, &p)| map.assignment[p] == i);
        (is_retraction && map.is_continuous().ok()?).then_some(Retraction { map, points })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn continuity_examples() {
        let c2 = Poset::c2();
        assert!(MonotoneMap::identity(&c2).is_continuous().unwrap());
        let swap = MonotoneMap::new(c2.clone(), c2.clone(), vec![1, 0]);
        assert!(!swap.is_continuous().unwrap());
        assert_eq!(swap.preimage(PointSet::from([0])), PointSet::from([1]));
        let a2 = Poset::a2();
        for assignment in [vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]] {
            let f = MonotoneMap::new(a2.clone(), c2.clone(), assignment);
            assert!(f.is_continuous().unwrap());
        }
    }

    #[test]
    fn out_of_range_assignment_is_malformed() {
        let f = MonotoneMap::new(Poset::c2(), Poset::c2(), vec![0, 2]);
        assert!(matches!(f.is_continuous(), Err(Error::Malformed { .. })));
        let g = MonotoneMap::new(Poset::c2(), Poset::c2(), vec![0]);
        assert!(g.is_monotone().is_err());
    }

    #[test]
    fn retraction_examples() {
        let r = Poset::l3().retraction(RetractionKind::ToMin).unwrap();
        assert_eq!(r.images(), vec![0, 0, 0]);
        assert!(Poset::v3().retraction(RetractionKind::ToMin).is_none());
        let r = Poset::c2().retraction(RetractionKind::ToMax).unwrap();
        assert_eq!(r.images(), vec![1, 1]);
    }

    #[test]
    fn retraction_fixes_its_image() {
        let p = Poset::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let r = p.retraction(RetractionKind::ToMin).unwrap();
        assert_eq!(r.images(), vec![0, 0, 0, 3, 3]);
        for &m in &r.points {
            assert_eq!(r.image(m), m);
        }
    }
}
