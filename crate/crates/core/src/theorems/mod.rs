//! Equivalence theorems about pseudocomplementation, checked condition by
//! condition on finite spaces.
//!
//! Each report evaluates every condition of one theorem through its own
//! route (lattice side, order side, topological side) and records whether
//! they agree. Conditions that are automatic on finite spaces ("patch
//! closed", "compact", "constructible") are still computed from the patch
//! topology so that the test suite, not the code, establishes that they hold.

mod sweep;

pub use sweep::{
    qccl_matches_dual_stone, sweep, sweep_with, CheckRow, ClassRow, Counterexample, SizeRow, SweepSummary, CHECKS,
    CLASSES,
};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::duality::{downset_lattice, qccl_lattice};
use crate::error::{Error, Result};
use crate::lattice::{Coprimality, Lattice};
use crate::poset::{Extremal, MonotoneMap, PointSet, Poset, RetractionKind};

/// Up to this many points, conditions quantified over all subsets are
/// checked on every subset; beyond it a fixed-seed sample is used.
pub const FULL_SUBSET_LIMIT: usize = 6;
const SUBSET_SAMPLES: usize = 512;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Pseudocomplemented lattices and PC-spaces.
    PcSpace,
    /// Stone algebras, confluence and retractions onto minimal points.
    Stone,
    /// Stone algebras of closed sets and normal spaces.
    QcclStone,
    /// Heyting algebras and Esakia spaces.
    Heyting,
    /// Esakia conditions on root systems and forests.
    RootForest,
    /// Collapse when maximal points lie in the patch closure of minimal ones.
    CollapseMin,
    /// Collapse when minimal points lie in the patch closure of maximal ones.
    CollapseMax,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::PcSpace,
        Theorem::Stone,
        Theorem::QcclStone,
        Theorem::Heyting,
        Theorem::RootForest,
        Theorem::CollapseMin,
        Theorem::CollapseMax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::PcSpace => "pc-space",
            Theorem::Stone => "stone",
            Theorem::QcclStone => "qccl-stone",
            Theorem::Heyting => "heyting",
            Theorem::RootForest => "root-forest",
            Theorem::CollapseMin => "collapse-min",
            Theorem::CollapseMax => "collapse-max",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == name)
    }

    pub fn report(self, p: &Poset) -> Result<ConditionReport> {
        match self {
            Theorem::PcSpace => pc_space_report(p),
            Theorem::Stone => stone_report(p),
            Theorem::QcclStone => qccl_stone_report(p),
            Theorem::Heyting => heyting_report(p),
            Theorem::RootForest => root_forest_report(p),
            Theorem::CollapseMin => collapse_report(p, Side::MinSide),
            Theorem::CollapseMax => collapse_report(p, Side::MaxSide),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub label: String,
    pub holds: bool,
}

/// Conditions claimed equivalent under one hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionGroup {
    pub name: String,
    pub hypothesis: bool,
    pub verdicts: Vec<Verdict>,
    /// All verdicts in the group are equal.
    pub agreement: bool,
}

impl ConditionGroup {
    fn new(name: &str, hypothesis: bool, verdicts: Vec<(&str, bool)>) -> Self {
        let verdicts: Vec<Verdict> = verdicts
            .into_iter()
            .map(|(label, holds)| Verdict {
                label: label.to_string(),
                holds,
            })
            .collect();
        let agreement = verdicts.windows(2).all(|w| w[0].holds == w[1].holds);
        ConditionGroup {
            name: name.to_string(),
            hypothesis,
            verdicts,
            agreement,
        }
    }
}

/// A point configuration exhibiting a failed condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub note: String,
    pub points: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub theorem: Theorem,
    pub groups: Vec<ConditionGroup>,
    /// Every group's hypothesis holds.
    pub hypothesis: bool,
    /// Every group whose hypothesis holds has equal verdicts.
    pub agreement: bool,
    pub witness: Option<Witness>,
}

impl ConditionReport {
    fn new(theorem: Theorem, groups: Vec<ConditionGroup>, witness: Option<Witness>) -> Self {
        let hypothesis = groups.iter().all(|g| g.hypothesis);
        let agreement = groups.iter().filter(|g| g.hypothesis).all(|g| g.agreement);
        ConditionReport {
            theorem,
            groups,
            hypothesis,
            agreement,
            witness,
        }
    }

    fn single(theorem: Theorem, verdicts: Vec<(&str, bool)>, witness: Option<Witness>) -> Self {
        Self::new(
            theorem,
            vec![ConditionGroup::new("unconditional", true, verdicts)],
            witness,
        )
    }

    pub fn verdicts(&self) -> impl Iterator<Item = &Verdict> {
        self.groups.iter().flat_map(|g| g.verdicts.iter())
    }

    /// Looks a verdict up by label, searching groups in order.
    pub fn verdict(&self, label: &str) -> Option<bool> {
        self.verdicts().find(|v| v.label == label).map(|v| v.holds)
    }

    pub fn all_true(&self) -> bool {
        self.verdicts().all(|v| v.holds)
    }

    /// A group whose hypothesis holds but whose verdicts disagree.
    pub fn is_violation(&self) -> bool {
        !self.agreement
    }
}

fn all_down_sets(p: &Poset) -> Result<Vec<PointSet>> {
    p.down_sets(crate::duality::DEFAULT_SET_LATTICE_CAP)
}

fn all_up_sets(p: &Poset) -> Result<Vec<PointSet>> {
    p.up_sets(crate::duality::DEFAULT_SET_LATTICE_CAP)
}

/// Every subset for small posets, a deterministic sample otherwise.
fn quantified_subsets(p: &Poset) -> Vec<PointSet> {
    let n = p.size();
    if n <= FULL_SUBSET_LIMIT {
        return (0..1u64 << n).map(PointSet::from_bits).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out: Vec<PointSet> = vec![PointSet::EMPTY, p.points()];
    out.extend((0..n).map(PointSet::singleton));
    out.extend((0..SUBSET_SAMPLES).map(|_| {
        let k = rand::Rng::gen_range(&mut rng, 0..=n);
        sample(&mut rng, n, k).into_iter().collect::<PointSet>()
    }));
    out.sort();
    out.dedup();
    out
}

/// Pseudocomplemented down-set lattice versus its spatial characterizations.
pub fn pc_space_report(p: &Poset) -> Result<ConditionReport> {
    let lattice = downset_lattice(p)?;
    let opens = lattice.sets();
    let closure_constructible = opens.iter().all(|&u| p.is_constructible(p.up_closure(u)));
    let mut regularization_compact_open = true;
    for &u in opens {
        let r = p.regularize(u)?;
        regularization_compact_open &= p.is_open(r) && p.is_compact(r);
    }
    let minimal_compact = p.is_compact(p.minimal_points());
    Ok(ConditionReport::single(
        Theorem::PcSpace,
        vec![
            ("pseudocomplemented", lattice.is_pseudocomplemented()),
            ("closure-of-open-constructible", closure_constructible),
            ("regularization-compact-open", regularization_compact_open),
            ("minimal-points-compact", minimal_compact),
        ],
        None,
    ))
}

/// The minimal-point map `x ↦` the unique minimal point below `x`, when every
/// point has exactly one.
fn minimal_point_map(p: &Poset) -> Option<MonotoneMap> {
    let minimal = p.minimal_points();
    let assignment: Option<Vec<usize>> = (0..p.size())
        .map(|x| {
            let below = p.down_set(x) & minimal;
            (below.len() == 1).then(|| below.first().expect("one point"))
        })
        .collect();
    assignment.map(|a| MonotoneMap::new(p.clone(), p.clone(), a))
}

/// Stone down-set lattice versus six order/topological conditions.
pub fn stone_report(p: &Poset) -> Result<ConditionReport> {
    let lattice = downset_lattice(p)?;
    let closure_open = lattice.sets().iter().all(|&u| p.is_open(p.up_closure(u)));
    let minimal_patch_closed = p.is_patch_closed(p.minimal_points());
    let map_spectral = match minimal_point_map(p) {
        Some(m) => m.is_monotone()? && m.is_continuous()?,
        None => false,
    };
    let witness = p.confluence_witness().map(|(y, z, x)| Witness {
        note: format!("{y} and {z} lie below {x} but have no common lower bound"),
        points: vec![y, z, x],
    });
    Ok(ConditionReport::single(
        Theorem::Stone,
        vec![
            ("stone-algebra", lattice.is_stone()),
            ("closure-of-open-is-open", closure_open),
            ("confluent", minimal_patch_closed && p.is_confluent()),
            ("inverse-normal", minimal_patch_closed && p.is_inv_normal()),
            ("minimal-map-spectral", p.is_inv_normal() && map_spectral),
            ("minimal-retraction", p.retraction(RetractionKind::ToMin).is_some()),
        ],
        witness,
    ))
}

fn normality_witness(p: &Poset) -> Option<Witness> {
    let maximal = p.maximal_points();
    (0..p.size()).find_map(|x| {
        let above = p.up_set(x) & maximal;
        (above.len() != 1).then(|| Witness {
            note: format!("{x} lies below {} maximal points {above}", above.len()),
            points: std::iter::once(x).chain(above.iter()).collect(),
        })
    })
}

/// Stone lattice of up-sets versus normality.
pub fn qccl_stone_report(p: &Poset) -> Result<ConditionReport> {
    let closed = qccl_lattice(p)?;
    let inverse = p.dual();
    // Closure in the inverse topology is `↓C`; clopen there means an up-set
    // and a down-set.
    let inverse_closure_clopen = closed.sets().iter().all(|&c| inverse.is_clopen(inverse.up_closure(c)));
    let normal = p.is_normal();
    Ok(ConditionReport::single(
        Theorem::QcclStone,
        vec![
            ("qccl-stone-algebra", closed.is_stone()),
            ("inverse-closure-clopen", inverse_closure_clopen),
            (
                "normal-and-qccl-pseudocomplemented",
                normal && closed.is_pseudocomplemented(),
            ),
            (
                "normal-and-maximal-patch-closed",
                normal && p.is_patch_closed(p.maximal_points()),
            ),
        ],
        normality_witness(p),
    ))
}

/// Heyting down-set lattice versus the Esakia conditions.
pub fn heyting_report(p: &Poset) -> Result<ConditionReport> {
    let lattice = downset_lattice(p)?;
    let subsets = quantified_subsets(p);
    let closure_constructible = subsets
        .iter()
        .filter(|&&s| p.is_constructible(s))
        .all(|&s| p.is_constructible(p.up_closure(s)));
    let mut closed_subspaces_pc = true;
    for c in all_up_sets(p)? {
        if p.is_constructible(c) {
            let (sub, _) = p.induced(c);
            closed_subspaces_pc &= pc_space_report(&sub)?.all_true();
        }
    }
    let opens = lattice.sets();
    let inverse_closure_matches = subsets
        .iter()
        .all(|&s| p.inverse_closure(s, opens) == p.patch_closure(p.down_closure(s)));
    Ok(ConditionReport::single(
        Theorem::Heyting,
        vec![
            ("heyting-algebra", lattice.is_heyting()),
            ("closure-of-constructible-constructible", closure_constructible),
            ("closed-subspaces-pc", closed_subspaces_pc),
            ("inverse-closure-is-patch-closure-of-down", inverse_closure_matches),
        ],
        None,
    ))
}

fn maximal_of_opens_patch_closed(p: &Poset, opens: &[PointSet]) -> bool {
    opens
        .iter()
        .all(|&u| p.is_patch_closed(p.extremal_in(u, Extremal::Max)))
}

fn maximal_of_open_meet_open_compact(p: &Poset, opens: &[PointSet]) -> bool {
    opens.iter().all(|&u| {
        let top = p.extremal_in(u, Extremal::Max);
        opens.iter().all(|&v| p.is_compact(top & v))
    })
}

/// Esakia conditions for root systems (inverse side) and forests.
pub fn root_forest_report(p: &Poset) -> Result<ConditionReport> {
    let opens = all_down_sets(p)?;
    let closeds = all_up_sets(p)?;
    let root = ConditionGroup::new(
        "root-system",
        p.is_root_system(),
        vec![
            ("inverse-esakia", heyting_report(&p.dual())?.all_true()),
            ("maximal-of-open-patch-closed", maximal_of_opens_patch_closed(p, &opens)),
            (
                "maximal-of-open-meet-open-compact",
                maximal_of_open_meet_open_compact(p, &opens),
            ),
        ],
    );
    let forest = ConditionGroup::new(
        "forest",
        p.is_forest(),
        vec![
            ("esakia", heyting_report(p)?.all_true()),
            (
                "minimal-of-closed-compact",
                closeds.iter().all(|&c| p.is_compact(p.extremal_in(c, Extremal::Min))),
            ),
        ],
    );
    Ok(ConditionReport::new(Theorem::RootForest, vec![root, forest], None))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Maximal points lie in the patch closure of the minimal points.
    MinSide,
    /// Minimal points lie in the patch closure of the maximal points.
    MaxSide,
}

/// Conditions that all collapse to "the space is Boolean" under a density
/// hypothesis on extremal points.
pub fn collapse_report(p: &Poset, side: Side) -> Result<ConditionReport> {
    let minimal = p.minimal_points();
    let maximal = p.maximal_points();
    let groups = match side {
        Side::MinSide => {
            let lattice = downset_lattice(p)?;
            vec![ConditionGroup::new(
                "maximal-in-patch-closure-of-minimal",
                maximal.is_subset(p.patch_closure(minimal)),
                vec![
                    ("boolean", lattice.is_boolean()),
                    ("stone-algebra", lattice.is_stone()),
                    ("esakia", heyting_report(p)?.all_true()),
                    ("pc-space", pc_space_report(p)?.all_true()),
                    ("minimal-patch-closed", p.is_patch_closed(minimal)),
                ],
            )]
        }
        Side::MaxSide => {
            let downs = downset_lattice(p)?;
            let closed = qccl_lattice(p)?;
            let dual = p.dual();
            let dense = minimal.is_subset(p.patch_closure(maximal));
            let boolean = downs.is_boolean();
            let qccl_stone = closed.is_stone();
            let inverse_esakia = heyting_report(&dual)?.all_true();
            let inverse_pc = pc_space_report(&dual)?.all_true();
            let maximal_closed = p.is_patch_closed(maximal);
            let opens = downs.sets();
            let general = ConditionGroup::new(
                "minimal-in-patch-closure-of-maximal",
                dense,
                vec![
                    ("boolean", boolean),
                    ("qccl-stone-algebra", qccl_stone),
                    ("inverse-esakia", inverse_esakia),
                    ("inverse-pc-space", inverse_pc),
                    ("maximal-patch-closed", maximal_closed),
                ],
            );
            let root_system = ConditionGroup::new(
                "root-system-and-minimal-in-patch-closure-of-maximal",
                dense && p.is_root_system(),
                vec![
                    ("boolean", boolean),
                    ("qccl-stone-algebra", qccl_stone),
                    ("inverse-esakia", inverse_esakia),
                    ("inverse-pc-space", inverse_pc),
                    ("maximal-patch-closed", maximal_closed),
                    ("maximal-of-open-patch-closed", maximal_of_opens_patch_closed(p, opens)),
                    (
                        "maximal-of-open-meet-open-compact",
                        maximal_of_open_meet_open_compact(p, opens),
                    ),
                    (
                        "down-of-closed-open",
                        closed.sets().iter().all(|&c| p.is_open(p.down_closure(c))),
                    ),
                    (
                        "down-of-closed-clopen",
                        closed.sets().iter().all(|&c| p.is_clopen(p.down_closure(c))),
                    ),
                ],
            );
            vec![general, root_system]
        }
    };
    let theorem = match side {
        Side::MinSide => Theorem::CollapseMin,
        Side::MaxSide => Theorem::CollapseMax,
    };
    let witness = p.strict_pairs().first().map(|&(x, y)| Witness {
        note: format!("{x} < {y}, so the space is not Boolean"),
        points: vec![x, y],
    });
    Ok(ConditionReport::new(theorem, groups, witness))
}

/// An open `V` disjoint from the down-set `U` with `U ∪ V` dense.
///
/// The complement of `↑U` is tried first; the remaining down-sets are
/// searched only if it fails, which cannot happen on a finite space.
pub fn generic_complement(p: &Poset, u: PointSet) -> Result<Option<PointSet>> {
    p.check_set(u)?;
    if !p.is_open(u) {
        return Err(Error::Precondition(format!("{u} is not a down-set")));
    }
    let canonical = p.up_closure(u).complement(p.size());
    let found = std::iter::once(canonical)
        .chain(all_down_sets(p)?)
        .find(|&v| is_generic_complement(p, u, v));
    if let Some(v) = found {
        if !min_partition_holds(p, u, v) {
            return Err(Error::Assertion(format!(
                "{v} is a generic complement of {u} but minimal points do not split"
            )));
        }
    }
    Ok(found)
}

pub fn is_generic_complement(p: &Poset, u: PointSet, v: PointSet) -> bool {
    p.is_open(v) && u.is_disjoint(v) && p.is_dense(u | v)
}

/// `X^min = U^min ⊔ V^min`.
pub fn min_partition_holds(p: &Poset, u: PointSet, v: PointSet) -> bool {
    let u_min = p.extremal_in(u, Extremal::Min);
    let v_min = p.extremal_in(v, Extremal::Min);
    u_min.is_disjoint(v_min) && (u_min | v_min) == p.minimal_points()
}

/// Minimal-prime coprimality of the down-set lattice.
pub fn minimal_primes_report(p: &Poset) -> Result<Coprimality> {
    Ok(downset_lattice(p)?.minimal_primes_coprime())
}

/// Position of a poset's down-set lattice in the Boolean / Heyting / Stone /
/// pseudocomplemented diagram, together with its structural predicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub boolean: bool,
    pub heyting: bool,
    pub stone: bool,
    pub pseudocomplemented: bool,
    pub distributive: bool,
    pub root_system: bool,
    pub forest: bool,
    pub stranded: bool,
    pub confluent: bool,
    pub inv_normal: bool,
    pub normal: bool,
}

impl Profile {
    pub fn fields(&self) -> [(&'static str, bool); 11] {
        [
            ("boolean", self.boolean),
            ("heyting", self.heyting),
            ("stone", self.stone),
            ("pseudocomplemented", self.pseudocomplemented),
            ("distributive", self.distributive),
            ("root_system", self.root_system),
            ("forest", self.forest),
            ("stranded", self.stranded),
            ("confluent", self.confluent),
            ("inv_normal", self.inv_normal),
            ("normal", self.normal),
        ]
    }
}

/// Lattice-only profile, for inputs given directly as lattices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeProfile {
    pub boolean: bool,
    pub heyting: bool,
    pub stone: bool,
    pub pseudocomplemented: bool,
    pub distributive: bool,
    pub minimal_primes_coprime: bool,
}

impl LatticeProfile {
    pub fn fields(&self) -> [(&'static str, bool); 6] {
        [
            ("boolean", self.boolean),
            ("heyting", self.heyting),
            ("stone", self.stone),
            ("pseudocomplemented", self.pseudocomplemented),
            ("distributive", self.distributive),
            ("minimal_primes_coprime", self.minimal_primes_coprime),
        ]
    }
}

fn check_diagram(boolean: bool, heyting: bool, stone: bool, pc: bool) -> Result<()> {
    if boolean && !(heyting && stone) {
        return Err(Error::Assertion("Boolean lattice that is not Heyting and Stone".into()));
    }
    if (heyting || stone) && !pc {
        return Err(Error::Assertion(
            "Heyting or Stone lattice that is not pseudocomplemented".into(),
        ));
    }
    Ok(())
}

pub fn classify(p: &Poset) -> Result<Profile> {
    let lattice = downset_lattice(p)?;
    let profile = Profile {
        boolean: lattice.is_boolean(),
        heyting: lattice.is_heyting(),
        stone: lattice.is_stone(),
        pseudocomplemented: lattice.is_pseudocomplemented(),
        distributive: lattice.is_distributive(),
        root_system: p.is_root_system(),
        forest: p.is_forest(),
        stranded: p.is_stranded(),
        confluent: p.is_confluent(),
        inv_normal: p.is_inv_normal(),
        normal: p.is_normal(),
    };
    check_diagram(
        profile.boolean,
        profile.heyting,
        profile.stone,
        profile.pseudocomplemented,
    )?;
    Ok(profile)
}

pub fn classify_lattice(lattice: &Lattice) -> Result<LatticeProfile> {
    let profile = LatticeProfile {
        boolean: lattice.is_boolean(),
        heyting: lattice.is_heyting(),
        stone: lattice.is_stone(),
        pseudocomplemented: lattice.is_pseudocomplemented(),
        distributive: lattice.is_distributive(),
        minimal_primes_coprime: lattice.minimal_primes_coprime().holds,
    };
    // Complemented non-distributive lattices (M3, N5) need not be Heyting or
    // pseudocomplemented, so the diagram only binds on distributive ones.
    if profile.distributive {
        check_diagram(
            profile.boolean,
            profile.heyting,
            profile.stone,
            profile.pseudocomplemented,
        )?;
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdicts(report: &ConditionReport) -> Vec<bool> {
        report.verdicts().map(|v| v.holds).collect()
    }

    #[test]
    fn pc_space_examples() {
        for p in [Poset::v3(), Poset::l3(), Poset::empty()] {
            let r = pc_space_report(&p).unwrap();
            assert!(r.all_true() && r.agreement, "{p:?}");
        }
    }

    #[test]
    fn stone_examples() {
        let v3 = stone_report(&Poset::v3()).unwrap();
        assert_eq!(verdicts(&v3), vec![false; 6]);
        assert!(v3.agreement);
        assert_eq!(v3.witness.as_ref().unwrap().points, vec![0, 1, 2]);
        assert_eq!(verdicts(&stone_report(&Poset::l3()).unwrap()), vec![true; 6]);
        assert_eq!(verdicts(&stone_report(&Poset::d4()).unwrap()), vec![true; 6]);
    }

    #[test]
    fn qccl_stone_examples() {
        assert_eq!(verdicts(&qccl_stone_report(&Poset::v3()).unwrap()), vec![true; 4]);
        let l3 = qccl_stone_report(&Poset::l3()).unwrap();
        assert_eq!(verdicts(&l3), vec![false; 4]);
        assert_eq!(l3.witness.unwrap().points[0], 0);
        assert_eq!(verdicts(&qccl_stone_report(&Poset::a2()).unwrap()), vec![true; 4]);
    }

    #[test]
    fn heyting_examples() {
        for p in [Poset::v3(), Poset::chain(4), Poset::empty()] {
            let r = heyting_report(&p).unwrap();
            assert!(r.all_true() && r.agreement, "{p:?}");
        }
    }

    #[test]
    fn heyting_report_samples_large_posets() {
        let p = Poset::chain(8);
        assert!(quantified_subsets(&p).len() < 1 << 8);
        assert!(heyting_report(&p).unwrap().all_true());
    }

    #[test]
    fn root_forest_examples() {
        let v3 = root_forest_report(&Poset::v3()).unwrap();
        assert!(v3.groups[0].hypothesis);
        assert!(!v3.groups[1].hypothesis);
        assert!(v3.all_true());
        let l3 = root_forest_report(&Poset::l3()).unwrap();
        assert!(!l3.groups[0].hypothesis);
        assert!(l3.groups[1].hypothesis);
        let c2 = root_forest_report(&Poset::c2()).unwrap();
        assert!(c2.hypothesis && c2.agreement && c2.all_true());
    }

    #[test]
    fn collapse_examples() {
        for side in [Side::MinSide, Side::MaxSide] {
            let r = collapse_report(&Poset::a2(), side).unwrap();
            assert!(r.hypothesis && r.agreement && r.all_true());
        }
        let c2 = collapse_report(&Poset::c2(), Side::MaxSide).unwrap();
        assert!(!c2.groups[0].hypothesis);
        let v3 = collapse_report(&Poset::v3(), Side::MaxSide).unwrap();
        assert!(!v3.hypothesis);
        assert_eq!(v3.verdict("down-of-closed-open"), Some(true));
        assert_eq!(v3.verdict("down-of-closed-clopen"), Some(true));
    }

    #[test]
    fn generic_complement_examples() {
        let v3 = Poset::v3();
        assert_eq!(
            generic_complement(&v3, PointSet::from([0])).unwrap(),
            Some(PointSet::from([1]))
        );
        assert_eq!(generic_complement(&v3, PointSet::EMPTY).unwrap(), Some(v3.points()));
        assert_eq!(
            generic_complement(&v3, PointSet::from([0, 1])).unwrap(),
            Some(PointSet::EMPTY)
        );
        assert!(matches!(
            generic_complement(&v3, PointSet::from([2])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn classify_examples() {
        let a2 = classify(&Poset::a2()).unwrap();
        assert!(a2.boolean && a2.heyting && a2.stone && a2.pseudocomplemented);
        let v3 = classify(&Poset::v3()).unwrap();
        assert!(!v3.boolean && v3.heyting && !v3.stone && v3.pseudocomplemented);
        let l3 = classify(&Poset::l3()).unwrap();
        assert!(!l3.boolean && l3.heyting && l3.stone && l3.pseudocomplemented);
        let m3 = classify_lattice(&Lattice::m3()).unwrap();
        assert!(!m3.pseudocomplemented && !m3.distributive);
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(Theorem::from_name(t.name()), Some(t));
        }
    }
}
