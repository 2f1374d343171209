//! Pseudocomplements and relative pseudocomplements of down-set lattices,
//! and of lattices given directly.
//!
//!     cargo run --example pseudocomplements

use finite_spectra::duality::downset_lattice;
use finite_spectra::{Lattice, Poset};

fn main() {
    let v3 = downset_lattice(&Poset::v3()).unwrap();
    println!("down-sets of V3:");
    for a in v3.elements() {
        let star = v3.pseudocomplement(a).unwrap();
        println!(
            "  {:<8} * = {:<8} ** = {}",
            v3.set(a),
            v3.set(star),
            v3.set(v3.pseudocomplement(star).unwrap())
        );
    }

    // {0}* ∨ {0}** is {0,1}, not the whole space: V3 is not Stone.
    let a = v3.index_of([0].into()).unwrap();
    let star = v3.pseudocomplement(a).unwrap();
    let double = v3.pseudocomplement(star).unwrap();
    println!("  {{0}}* ∨ {{0}}** = {}", v3.set(v3.join(star, double)));
    println!(
        "  Stone {}, Heyting {}, Boolean {}",
        v3.is_stone(),
        v3.is_heyting(),
        v3.is_boolean()
    );

    let arrow = v3.rel_pseudocomplement(a, v3.bottom()).unwrap();
    println!("  {{0}} -> {{}} = {} (equals the pseudocomplement)", v3.set(arrow));

    for (name, l) in [("M3", Lattice::m3()), ("N5", Lattice::n5())] {
        let stars: Vec<String> = l
            .elements()
            .map(|a| l.pseudocomplement(a).map_or("-".into(), |s| s.to_string()))
            .collect();
        println!(
            "{name}: distributive {}, pseudocomplements [{}], Stone {}",
            l.is_distributive(),
            stars.join(" "),
            l.is_stone()
        );
    }
}
