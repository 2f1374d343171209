//! Exhaustive cross-validation of every report over all small posets.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    classify, collapse_report, generic_complement, heyting_report, pc_space_report, qccl_stone_report,
    root_forest_report, stone_report, ConditionReport, Side,
};
use crate::duality::{downset_lattice, poset_roundtrip, stone_roundtrip};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::poset::{enumerate_posets_with, EnumerateConfig, Labeling, Poset, MAX_ENUMERATION_SIZE};

/// Cross-checks run on every poset, in report order.
pub const CHECKS: [&str; 12] = [
    "pc-space",
    "stone",
    "qccl-stone",
    "qccl-stone-duality",
    "heyting",
    "root-forest",
    "collapse-min",
    "collapse-max",
    "minimal-primes",
    "generic-complement",
    "duality-roundtrip",
    "residuation",
];

/// Profile fields counted per class, in report order.
pub const CLASSES: [&str; 11] = [
    "boolean",
    "heyting",
    "stone",
    "pseudocomplemented",
    "distributive",
    "root_system",
    "forest",
    "stranded",
    "confluent",
    "inv_normal",
    "normal",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeRow {
    pub size: usize,
    pub posets: usize,
    /// Posets failing at least one check.
    pub disagreements: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub check: String,
    pub disagreements: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub class: String,
    pub holds: usize,
    pub fails: usize,
    /// The first poset outside the class, by size and then enumeration order.
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub size: usize,
    pub covers: Vec<(usize, usize)>,
}

impl Counterexample {
    pub fn to_poset(&self) -> Poset {
        Poset::new(self.size, self.covers.iter().copied()).expect("covers of a poset")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub n_max: usize,
    pub labeling: Labeling,
    pub sizes: Vec<SizeRow>,
    pub posets: usize,
    pub disagreements: usize,
    pub checks: Vec<CheckRow>,
    pub classes: Vec<ClassRow>,
}

impl SweepSummary {
    pub fn class(&self, name: &str) -> Option<&ClassRow> {
        self.classes.iter().find(|c| c.class == name)
    }

    pub fn check(&self, name: &str) -> Option<usize> {
        self.checks.iter().find(|c| c.check == name).map(|c| c.disagreements)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "sweep of {} posets with 1..={} points\n",
            match self.labeling {
                Labeling::Labeled => "labeled",
                Labeling::Unlabeled => "unlabeled",
            },
            self.n_max
        );
        for row in &self.sizes {
            out += &format!("size {}: {}\n", row.size, tally(row.posets, row.disagreements));
        }
        out += &format!("total: {}\n", tally(self.posets, self.disagreements));
        out += "\nchecks\n";
        for row in &self.checks {
            out += &format!("  {:<22}{} disagreements\n", row.check, row.disagreements);
        }
        out += "\nclasses\n";
        for row in &self.classes {
            out += &format!("  {:<22}{:>6} hold {:>6} fail", row.class, row.holds, row.fails);
            if let Some(c) = &row.first_counterexample {
                out += &format!("   first failure: {}", describe(c));
            }
            out += "\n";
        }
        out
    }
}

fn tally(posets: usize, disagreements: usize) -> String {
    let noun = if posets == 1 { "poset" } else { "posets" };
    format!("{posets} {noun}, {disagreements} disagreements")
}

fn describe(c: &Counterexample) -> String {
    let relations: Vec<String> = c.covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
    if relations.is_empty() {
        format!("{} points, antichain", c.size)
    } else {
        format!("{} points, {}", c.size, relations.join(" "))
    }
}

struct Outcome {
    failed: [bool; CHECKS.len()],
    classes: [bool; CLASSES.len()],
}

/// Closed sets of `P` are the opens of its dual, and normality of `P` is
/// inverse normality of the dual, so each closed-set condition has a
/// counterpart among the dual's Stone conditions.
pub fn qccl_matches_dual_stone(qccl: &ConditionReport, dual_stone: &ConditionReport) -> bool {
    const PAIRS: [(&str, &str); 4] = [
        ("qccl-stone-algebra", "stone-algebra"),
        ("inverse-closure-clopen", "closure-of-open-is-open"),
        ("normal-and-qccl-pseudocomplemented", "inverse-normal"),
        ("normal-and-maximal-patch-closed", "inverse-normal"),
    ];
    PAIRS
        .iter()
        .all(|(q, s)| qccl.verdict(q).is_some() && qccl.verdict(q) == dual_stone.verdict(s))
}

/// Every applicable verdict equals "the space is an antichain".
fn collapses(report: &ConditionReport, antichain: bool) -> bool {
    report
        .groups
        .iter()
        .filter(|g| g.hypothesis)
        .all(|g| g.verdicts.iter().all(|v| v.holds == antichain))
}

fn residuation_holds(lattice: &Lattice) -> bool {
    let n = lattice.size();
    let mut imp = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            match lattice.rel_pseudocomplement(a, b) {
                Some(c) => imp[a * n + b] = c,
                None => return false,
            }
        }
    }
    (0..n).all(|a| {
        let star = lattice.pseudocomplement(a);
        let bottom_law = star == Some(imp[a * n + lattice.bottom()]);
        bottom_law
            && (0..n).all(|b| (0..n).all(|x| lattice.leq(x, imp[a * n + b]) == lattice.leq(lattice.meet(a, x), b)))
    })
}

fn check_poset(p: &Poset) -> Result<Outcome> {
    let mut failed = [false; CHECKS.len()];
    let lattice = downset_lattice(p)?;

    let pc = pc_space_report(p)?;
    failed[0] = !(pc.all_true() && pc.agreement);
    let stone = stone_report(p)?;
    failed[1] = stone.is_violation();
    let qccl = qccl_stone_report(p)?;
    failed[2] = qccl.is_violation();
    failed[3] = !qccl_matches_dual_stone(&qccl, &stone_report(&p.dual())?);
    let heyting = heyting_report(p)?;
    failed[4] = !(heyting.all_true() && heyting.agreement);
    failed[5] = root_forest_report(p)?.is_violation();
    let antichain = p.is_antichain();
    failed[6] = !collapses(&collapse_report(p, Side::MinSide)?, antichain);
    failed[7] = !collapses(&collapse_report(p, Side::MaxSide)?, antichain);
    let coprime = lattice.minimal_primes_coprime().holds;
    failed[8] = !(lattice.is_stone() == coprime && coprime == p.is_inv_normal());
    let mut complements_ok = true;
    for &u in lattice.sets() {
        complements_ok &= generic_complement(p, u)?.is_some();
    }
    failed[9] = !complements_ok;
    failed[10] = !(poset_roundtrip(p)? && stone_roundtrip(&lattice)?.is_some());
    failed[11] = !residuation_holds(&lattice);

    let classes = match classify(p) {
        Ok(profile) => {
            let fields = profile.fields();
            std::array::from_fn(|i| fields[i].1)
        }
        Err(Error::Assertion(_)) => {
            // Counted as a disagreement rather than aborting the sweep.
            failed[0] = true;
            [false; CLASSES.len()]
        }
        Err(e) => return Err(e),
    };
    Ok(Outcome { failed, classes })
}

pub fn sweep(n_max: usize, labeling: Labeling, jobs: usize) -> Result<SweepSummary> {
    sweep_with(
        n_max,
        labeling,
        &EnumerateConfig {
            jobs,
            ..EnumerateConfig::default()
        },
    )
}

/// Runs every check over every poset with `1..=n_max` points.
///
/// Posets are checked in parallel and aggregated in enumeration order, so the
/// summary does not depend on `config.jobs`.
pub fn sweep_with(n_max: usize, labeling: Labeling, config: &EnumerateConfig) -> Result<SweepSummary> {
    let ceiling = config.max_size.min(MAX_ENUMERATION_SIZE);
    if n_max > ceiling {
        return Err(Error::ResourceLimit(format!(
            "sweep up to {n_max} points exceeds the configured maximum of {ceiling}"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::ResourceLimit(format!("cannot start worker pool: {e}")))?;
    let mut sizes = Vec::new();
    let mut check_counts = [0usize; CHECKS.len()];
    let mut holds = [0usize; CLASSES.len()];
    let mut first: [Option<Counterexample>; CLASSES.len()] = Default::default();
    for n in 1..=n_max {
        let posets = enumerate_posets_with(n, labeling, config)?.to_vec();
        let outcomes: Vec<Outcome> = pool.install(|| posets.par_iter().map(check_poset).collect::<Result<_>>())?;
        let mut disagreements = 0;
        for (p, outcome) in posets.iter().zip(&outcomes) {
            disagreements += usize::from(outcome.failed.iter().any(|&f| f));
            for (count, &f) in check_counts.iter_mut().zip(&outcome.failed) {
                *count += usize::from(f);
            }
            for (i, &member) in outcome.classes.iter().enumerate() {
                if member {
                    holds[i] += 1;
                } else if first[i].is_none() {
                    first[i] = Some(Counterexample {
                        size: p.size(),
                        covers: p.covers(),
                    });
                }
            }
        }
        sizes.push(SizeRow {
            size: n,
            posets: posets.len(),
            disagreements,
        });
    }
    let posets = sizes.iter().map(|r| r.posets).sum();
    let disagreements = sizes.iter().map(|r| r.disagreements).sum();
    Ok(SweepSummary {
        n_max,
        labeling,
        posets,
        disagreements,
        checks: CHECKS
            .iter()
            .zip(check_counts)
            .map(|(name, disagreements)| CheckRow {
                check: name.to_string(),
                disagreements,
            })
            .collect(),
        classes: CLASSES
            .iter()
            .zip(holds)
            .zip(first)
            .map(|((name, holds), first_counterexample)| ClassRow {
                class: name.to_string(),
                holds,
                fails: posets - holds,
                first_counterexample,
            })
            .collect(),
        sizes,
    })
}
