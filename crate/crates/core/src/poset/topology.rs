//! Order-theoretic reading of the spectral topology on a finite poset.

use serde::{Deserialize, Serialize};

use super::{PointSet, Poset};
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `↑S`: the specializations of `S`, i.e. its closure.
    Up,
    /// `↓S`: the generalizations of `S`, i.e. its closure in the inverse space.
    Down,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Extremal {
    Min,
    /// Closed points.
    Max,
}

/// Structural predicates on the specialization order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Structure {
    /// Every `↑x` is a chain.
    RootSystem,
    /// Every `↓x` is a chain.
    Forest,
    /// A disjoint sum of chains.
    Stranded,
    /// Any two points below a common point have a common lower bound.
    Confluent,
    /// Every point lies above exactly one minimal point.
    InvNormal,
    /// Every point lies below exactly one maximal point.
    Normal,
}

impl Structure {
    pub const ALL: [Structure; 6] = [
        Structure::RootSystem,
        Structure::Forest,
        Structure::Stranded,
        Structure::Confluent,
        Structure::InvNormal,
        Structure::Normal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Structure::RootSystem => "root_system",
            Structure::Forest => "forest",
            Structure::Stranded => "stranded",
            Structure::Confluent => "confluent",
            Structure::InvNormal => "inv_normal",
            Structure::Normal => "normal",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl Poset {
    /// `↑S` or `↓S`, after checking that `S` lies inside the poset.
    pub fn closure(&self, s: PointSet, direction: Direction) -> Result<PointSet> {
        self.check_set(s)?;
        Ok(match direction {
            Direction::Up => self.up_closure(s),
            Direction::Down => self.down_closure(s),
        })
    }

    /// `↑S`. Panics if `S` mentions a point outside the poset.
    pub fn up_closure(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, x| acc | self.up_set(x))
    }

    /// `↓S`. Panics if `S` mentions a point outside the poset.
    pub fn down_closure(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, x| acc | self.down_set(x))
    }

    pub fn extremal_points(&self, kind: Extremal) -> PointSet {
        self.extremal_in(self.points(), kind)
    }

    pub fn minimal_points(&self) -> PointSet {
        self.extremal_points(Extremal::Min)
    }

    pub fn maximal_points(&self) -> PointSet {
        self.extremal_points(Extremal::Max)
    }

    /// `S^min` / `S^max`: extremal points of the subspace `S`.
    pub fn extremal_in(&self, s: PointSet, kind: Extremal) -> PointSet {
        s.iter()
            .filter(|&x| {
                let cone = match kind {
                    Extremal::Min => self.down_set(x),
                    Extremal::Max => self.up_set(x),
                };
                cone.intersection(s).without(x).is_empty()
            })
            .collect()
    }

    /// Open sets are down-sets.
    pub fn is_open(&self, s: PointSet) -> bool {
        self.down_closure(s) == s
    }

    /// Closed sets are up-sets.
    pub fn is_closed(&self, s: PointSet) -> bool {
        self.up_closure(s) == s
    }

    pub fn is_clopen(&self, s: PointSet) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    /// The largest down-set inside `S`: `{x : ↓x ⊆ S}`.
    pub fn interior(&self, s: PointSet) -> PointSet {
        (0..self.size()).filter(|&x| self.down_set(x).is_subset(s)).collect()
    }

    /// The open regularization `int(cl(U))` of a down-set `U`.
    pub fn regularize(&self, u: PointSet) -> Result<PointSet> {
        self.check_set(u)?;
        if !self.is_open(u) {
            return Err(Error::Precondition(format!("{u} is not a down-set")));
        }
        Ok(self.interior(self.up_closure(u)))
    }

    /// Dense: every point lies above some point of `S`.
    pub fn is_dense(&self, s: PointSet) -> bool {
        self.up_closure(s) == self.points()
    }

    /// Every two points of `S` are comparable.
    pub fn is_chain(&self, s: PointSet) -> bool {
        s.iter().all(|x| s.is_subset(self.up_set(x) | self.down_set(x)))
    }

    pub fn structure_predicate(&self, kind: Structure) -> bool {
        match kind {
            Structure::RootSystem => self.is_root_system(),
            Structure::Forest => self.is_forest(),
            Structure::Stranded => self.is_stranded(),
            Structure::Confluent => self.is_confluent(),
            Structure::InvNormal => self.is_inv_normal(),
            Structure::Normal => self.is_normal(),
        }
    }

    pub fn is_root_system(&self) -> bool {
        (0..self.size()).all(|x| self.is_chain(self.up_set(x)))
    }

    pub fn is_forest(&self) -> bool {
        (0..self.size()).all(|x| self.is_chain(self.down_set(x)))
    }

    /// Checked as "every connected component is a chain", independently of
    /// the root system and forest predicates.
    pub fn is_stranded(&self) -> bool {
        let mut seen = PointSet::EMPTY;
        for start in 0..self.size() {
            if seen.contains(start) {
                continue;
            }
            let mut component = PointSet::singleton(start);
            loop {
                let grown = self.up_closure(component) | self.down_closure(component);
                if grown == component {
                    break;
                }
                component = grown;
            }
            if !self.is_chain(component) {
                return false;
            }
            seen = seen | component;
        }
        true
    }

    /// For all `x` and all `y, z <= x` there is `u <= y, z`.
    pub fn is_confluent(&self) -> bool {
        self.confluence_witness().is_none()
    }

    /// A triple `(y, z, x)` with `y, z <= x` and no common lower bound of
    /// `y` and `z`.
    pub fn confluence_witness(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.size() {
            let below = self.down_set(x);
            for y in below {
                for z in below {
                    if self.down_set(y).is_disjoint(self.down_set(z)) {
                        return Some((y, z, x));
                    }
                }
            }
        }
        None
    }

    /// Every point lies above exactly one minimal point.
    pub fn is_inv_normal(&self) -> bool {
        let minimal = self.minimal_points();
        (0..self.size()).all(|x| self.down_set(x).intersection(minimal).len() == 1)
    }

    /// Every point lies below exactly one maximal (closed) point.
    pub fn is_normal(&self) -> bool {
        let maximal = self.maximal_points();
        (0..self.size()).all(|x| self.up_set(x).intersection(maximal).len() == 1)
    }

    // Patch topology. On a finite poset it is discrete; the predicates below
    // compute it from its basis `↓a ∩ ↑b` rather than assuming that.

    /// The union of all basic patch opens `↓a ∩ ↑b` contained in `S`.
    pub fn patch_interior(&self, s: PointSet) -> PointSet {
        let mut out = PointSet::EMPTY;
        for a in 0..self.size() {
            for b in 0..self.size() {
                let basic = self.down_set(a) & self.up_set(b);
                if !basic.is_empty() && basic.is_subset(s) {
                    out = out | basic;
                }
            }
        }
        out
    }

    pub fn is_patch_open(&self, s: PointSet) -> bool {
        self.patch_interior(s) == s
    }

    pub fn is_patch_closed(&self, s: PointSet) -> bool {
        self.is_patch_open(s.complement(self.size()))
    }

    pub fn patch_closure(&self, s: PointSet) -> PointSet {
        self.patch_interior(s.complement(self.size())).complement(self.size())
    }

    /// `S` is compact iff `↓S` is patch closed.
    pub fn is_compact(&self, s: PointSet) -> bool {
        self.is_patch_closed(self.down_closure(s))
    }

    /// Membership in the Boolean algebra generated by the down-sets: `S` must
    /// be a union of atoms of that algebra, where two points share an atom
    /// when no principal down-set separates them.
    pub fn is_constructible(&self, s: PointSet) -> bool {
        (0..self.size()).all(|x| {
            let atom: PointSet = (0..self.size()).filter(|&y| self.up_set(y) == self.up_set(x)).collect();
            atom.is_subset(s) || atom.is_disjoint(s)
        })
    }

    /// The closure of `S` in the inverse topology: the intersection of all
    /// down-sets containing `S`.
    pub fn inverse_closure(&self, s: PointSet, down_sets: &[PointSet]) -> PointSet {
        down_sets
            .iter()
            .filter(|d| s.is_subset(**d))
            .fold(self.points(), |acc, &d| acc & d)
    }
}
