//! Exhaustive enumeration of small posets.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{CanonicalForm, PointSet, Poset};
use crate::error::{Error, Result};

/// Hard ceiling on enumeration size: a labeled relation on 8 points packs
/// into one `u64`.
pub const MAX_ENUMERATION_SIZE: usize = 8;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Labeling {
    /// Every partial order on `{0, .., n-1}`.
    Labeled,
    /// One canonical representative per isomorphism class.
    Unlabeled,
}

#[derive(Clone, Debug)]
pub struct EnumerateConfig {
    /// Largest size accepted; defaults to 7.
    pub max_size: usize,
    /// Worker threads; 0 lets the thread pool decide.
    pub jobs: usize,
}

impl Default for EnumerateConfig {
    fn default() -> Self {
        EnumerateConfig { max_size: 7, jobs: 1 }
    }
}

/// The posets of one size, stored compactly and materialized on iteration.
///
/// Unlabeled enumerations are sorted by canonical form, labeled ones by
/// their packed relation matrix; neither order depends on `jobs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    size: usize,
    labeling: Labeling,
    codes: Vec<u64>,
}

impl Enumeration {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<Poset> {
        self.codes.get(i).map(|&c| self.decode(c))
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Poset> + '_ {
        self.codes.iter().map(|&c| self.decode(c))
    }

    pub fn to_vec(&self) -> Vec<Poset> {
        self.iter().collect()
    }

    fn decode(&self, code: u64) -> Poset {
        match self.labeling {
            Labeling::Unlabeled => CanonicalForm::from_code(self.size, code).to_poset(),
            Labeling::Labeled => Poset::from_up_sets_unchecked(unpack_rows(self.size, code)),
        }
    }
}

fn pack_rows(rows: &[PointSet]) -> u64 {
    let n = rows.len();
    rows.iter().fold(0u64, |acc, r| (acc << n) | r.bits())
}

fn unpack_rows(n: usize, code: u64) -> Vec<PointSet> {
    let mask = if n == 0 { 0 } else { (1u64 << n) - 1 };
    (0..n)
        .map(|i| PointSet::from_bits((code >> (n * (n - 1 - i))) & mask))
        .collect()
}

pub fn enumerate_posets(n: usize, labeling: Labeling) -> Result<Enumeration> {
    enumerate_posets_with(n, labeling, &EnumerateConfig::default())
}

pub fn enumerate_posets_with(n: usize, labeling: Labeling, config: &EnumerateConfig) -> Result<Enumeration> {
    let ceiling = config.max_size.min(MAX_ENUMERATION_SIZE);
    if n > ceiling {
        return Err(Error::ResourceLimit(format!(
            "enumeration of {n}-point posets exceeds the configured maximum of {ceiling}"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::ResourceLimit(format!("cannot start worker pool: {e}")))?;
    let codes = pool.install(|| {
        let unlabeled = unlabeled_codes(n);
        match labeling {
            Labeling::Unlabeled => unlabeled,
            Labeling::Labeled => labeled_codes(n, &unlabeled),
        }
    });
    Ok(Enumeration {
        size: n,
        labeling,
        codes,
    })
}

/// Every poset on `k + 1` points arises from one on `k` points by adding a
/// maximal point above some down-set, so canonical representatives are grown
/// one point at a time.
fn unlabeled_codes(n: usize) -> Vec<u64> {
    let mut level: Vec<u64> = vec![0];
    for k in 0..n {
        let mut next: Vec<u64> = level
            .par_iter()
            .flat_map_iter(|&code| {
                let base = CanonicalForm::from_code(k, code).to_poset();
                let down_sets = base.down_sets(usize::MAX).expect("uncapped");
                down_sets.into_iter().map(move |d| {
                    let mut up: Vec<PointSet> = base.up_rows().to_vec();
                    for x in d {
                        up[x].insert(k);
                    }
                    up.push(PointSet::singleton(k));
                    let grown = Poset::from_up_sets_unchecked(up);
                    grown.canonical_form().code().expect("at most 8 points")
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    level
}

fn labeled_codes(n: usize, unlabeled: &[u64]) -> Vec<u64> {
    let perms = permutations(n);
    let mut codes: Vec<u64> = unlabeled
        .par_iter()
        .flat_map_iter(|&code| {
            let rep = CanonicalForm::from_code(n, code).to_poset();
            let mut orbit: Vec<u64> = perms.iter().map(|p| pack_rows(rep.relabel(p).up_rows())).collect();
            orbit.sort_unstable();
            orbit.dedup();
            orbit
        })
        .collect();
    codes.par_sort_unstable();
    codes
}

/// All permutations of `0..n`, in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // Next lexicographic permutation.
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("successor");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let unlabeled: Vec<usize> = (0..=5)
            .map(|n| enumerate_posets(n, Labeling::Unlabeled).unwrap().len())
            .collect();
        assert_eq!(unlabeled, vec![1, 1, 2, 5, 16, 63]);
        let labeled: Vec<usize> = (0..=4)
            .map(|n| enumerate_posets(n, Labeling::Labeled).unwrap().len())
            .collect();
        assert_eq!(labeled, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn respects_configured_maximum() {
        let config = EnumerateConfig { max_size: 3, jobs: 1 };
        assert!(enumerate_posets_with(3, Labeling::Unlabeled, &config).is_ok());
        let err = enumerate_posets_with(4, Labeling::Unlabeled, &config).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
        let wide = EnumerateConfig { max_size: 20, jobs: 1 };
        assert!(enumerate_posets_with(9, Labeling::Unlabeled, &wide).is_err());
    }

    #[test]
    fn labeled_rows_round_trip() {
        let p = Poset::new(3, [(2, 0), (1, 0)]).unwrap();
        let code = pack_rows(p.up_rows());
        assert_eq!(Poset::from_up_sets_unchecked(unpack_rows(3, code)), p);
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }

    #[test]
    fn size_three_representatives() {
        let reps = enumerate_posets(3, Labeling::Unlabeled).unwrap().to_vec();
        assert!(reps.contains(&Poset::v3()));
        assert!(reps.contains(&Poset::l3()));
        assert!(reps.contains(&Poset::chain(3)));
        assert!(reps.contains(&Poset::antichain(3)));
    }
}
