//! Opens, closeds and the structural predicates of a small finite space.
//!
//! A finite poset is read as a spectral space: opens are down-sets, closed
//! points are the maximal points.
//!
//!     cargo run --example spectral_basics

use finite_spectra::poset::{Extremal, Structure};
use finite_spectra::{PointSet, Poset};

fn main() {
    for (name, p) in [("V3", Poset::v3()), ("L3", Poset::l3()), ("D4", Poset::d4())] {
        println!("{name}: covers {:?}", p.covers());
        println!("  opens     {:?}", p.down_sets(64).unwrap());
        println!("  closeds   {:?}", p.up_sets(64).unwrap());
        println!("  minimal {}  maximal {}", p.minimal_points(), p.maximal_points());

        let u = PointSet::singleton(0);
        println!(
            "  U = {u}: open {}, closure {}, regularization {}",
            p.is_open(u),
            p.up_closure(u),
            p.regularize(u).unwrap()
        );
        println!(
            "  maximal points of the whole space {}",
            p.extremal_in(p.points(), Extremal::Max)
        );

        let held: Vec<&str> = Structure::ALL
            .iter()
            .filter(|&&s| p.structure_predicate(s))
            .map(|s| s.name())
            .collect();
        println!("  structure: {}", held.join(", "));
    }

    // Everything is patch clopen on a finite space; the patch topology is
    // still computed from its basis ↓a ∩ ↑b.
    let v3 = Poset::v3();
    let minimal = v3.minimal_points();
    println!(
        "V3 minimal points patch closed: {}, compact: {}",
        v3.is_patch_closed(minimal),
        v3.is_compact(minimal)
    );
}
