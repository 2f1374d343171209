//! Canonical forms for finite posets.
//!
//! Points are first split into classes by an isomorphism-invariant colouring
//! (sizes of `↓x` and `↑x`, refined by the colours of neighbours). Classes are
//! ordered so that smaller points always come first, and the canonical
//! labeling is the one, among labelings that respect the class order, whose
//! relation matrix is lexicographically least. Row `k` of the matrix is the
//! set of earlier positions below position `k`.

use std::cmp::Ordering;

use super::{PointSet, Poset};

/// Isomorphism invariant of a poset: two posets are isomorphic iff their
/// canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    size: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Row `k`: bit `j` set iff canonical point `j` lies strictly below `k`.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Packs the form into a single integer for posets of at most 8 points.
    /// Integer order agrees with the order on forms of the same size.
    pub fn code(&self) -> Option<u64> {
        (self.size <= 8).then(|| {
            self.rows
                .iter()
                .enumerate()
                .fold(0u64, |acc, (k, &row)| (acc << k) | row)
        })
    }

    pub fn from_code(size: usize, code: u64) -> Self {
        assert!(size <= 8);
        let mut rows = vec![0u64; size];
        let mut rest = code;
        for k in (0..size).rev() {
            rows[k] = rest & ((1u64 << k) - 1);
            rest >>= k;
        }
        CanonicalForm { size, rows }
    }

    /// The canonically labelled poset.
    pub fn to_poset(&self) -> Poset {
        let mut up: Vec<PointSet> = (0..self.size).map(PointSet::singleton).collect();
        for (k, &row) in self.rows.iter().enumerate() {
            for j in PointSet::from_bits(row) {
                up[j].insert(k);
            }
        }
        Poset::from_up_sets_unchecked(up)
    }
}

impl Poset {
    pub fn canonical_form(&self) -> CanonicalForm {
        let (_, rows) = self.canonical_search();
        CanonicalForm {
            size: self.size(),
            rows,
        }
    }

    /// `labeling[x]` is the canonical position of point `x`.
    pub fn canonical_labeling(&self) -> Vec<usize> {
        let (order, _) = self.canonical_search();
        let mut labeling = vec![0; self.size()];
        for (pos, &x) in order.iter().enumerate() {
            labeling[x] = pos;
        }
        labeling
    }

    pub fn canonical(&self) -> Poset {
        self.canonical_form().to_poset()
    }

    fn colours(&self) -> Vec<usize> {
        let n = self.size();
        let mut keys: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|x| {
                (
                    self.down_set(x).len() * (n + 1) + (n - self.up_set(x).len()),
                    vec![],
                    vec![],
                )
            })
            .collect();
        let mut classes = 0;
        loop {
            let mut distinct = keys.clone();
            distinct.sort();
            distinct.dedup();
            let colour: Vec<usize> = keys
                .iter()
                .map(|k| distinct.binary_search(k).expect("key present"))
                .collect();
            if distinct.len() == classes {
                return colour;
            }
            classes = distinct.len();
            keys = (0..n)
                .map(|x| {
                    let mut below: Vec<usize> = self.down_set(x).without(x).iter().map(|y| colour[y]).collect();
                    let mut above: Vec<usize> = self.up_set(x).without(x).iter().map(|y| colour[y]).collect();
                    below.sort_unstable();
                    above.sort_unstable();
                    (colour[x], below, above)
                })
                .collect();
        }
    }

    fn canonical_search(&self) -> (Vec<usize>, Vec<u64>) {
        let n = self.size();
        let colour = self.colours();
        let mut slots: Vec<usize> = colour.clone();
        slots.sort_unstable();

        struct Search<'a> {
            poset: &'a Poset,
            colour: Vec<usize>,
            slots: Vec<usize>,
            order: Vec<usize>,
            rows: Vec<u64>,
            best_order: Vec<usize>,
            best_rows: Option<Vec<u64>>,
        }

        impl Search<'_> {
            fn row_for(&self, x: usize) -> u64 {
                self.order
                    .iter()
                    .enumerate()
                    .filter(|&(_, &y)| self.poset.lt(y, x))
                    .fold(0u64, |acc, (j, _)| acc | 1u64 << j)
            }

            fn run(&mut self, used: PointSet) {
                let k = self.order.len();
                if k == self.slots.len() {
                    if self.best_rows.as_ref().is_none_or(|best| self.rows < *best) {
                        self.best_rows = Some(self.rows.clone());
                        self.best_order = self.order.clone();
                    }
                    return;
                }
                for x in 0..self.slots.len() {
                    if used.contains(x) || self.colour[x] != self.slots[k] {
                        continue;
                    }
                    let row = self.row_for(x);
                    self.rows.push(row);
                    let prune = match &self.best_rows {
                        Some(best) => self.rows.as_slice().cmp(&best[..=k]) == Ordering::Greater,
                        None => false,
                    };
                    if !prune {
                        self.order.push(x);
                        self.run(used.with(x));
                        self.order.pop();
                    }
                    self.rows.pop();
                }
            }
        }

        let mut search = Search {
            poset: self,
            colour,
            slots,
            order: Vec::with_capacity(n),
            rows: Vec::with_capacity(n),
            best_order: Vec::new(),
            best_rows: None,
        };
        search.run(PointSet::EMPTY);
        (search.best_order, search.best_rows.unwrap_or_default())
    }
}

/// True iff an order isomorphism between `p` and `q` exists.
pub fn are_isomorphic(p: &Poset, q: &Poset) -> bool {
    p.size() == q.size() && p.canonical_form() == q.canonical_form()
}
