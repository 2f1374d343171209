//! Both directions of finite duality: a poset's down-set lattice, a
//! lattice's prime spectrum, and the round trips between them.
//!
//!     cargo run --example stone_duality

use finite_spectra::duality::{
    boolean_envelope, complement_is_dual_isomorphism, downset_lattice, poset_roundtrip, spec_poset, stone_roundtrip,
};
use finite_spectra::{Lattice, Poset};

fn main() {
    let d4 = Poset::d4();
    let lattice = downset_lattice(&d4).unwrap();
    println!("D4 has {} down-sets: {:?}", lattice.size(), lattice.sets());

    let spectrum = spec_poset(&lattice).unwrap();
    println!("spectrum of that lattice: {:?}", spectrum.poset);
    for (x, prime) in spectrum.primes.iter().enumerate() {
        println!("  point {x}: prime ideal {prime:?}");
    }
    for a in lattice.elements() {
        println!("  D({}) = {}", lattice.set(a), spectrum.d_map(a));
    }
    println!("poset round trip: {}", poset_roundtrip(&d4).unwrap());

    for (name, l) in [
        ("bool3", Lattice::boolean(3).unwrap()),
        ("M3", Lattice::m3()),
        ("N5", Lattice::n5()),
    ] {
        let iso = stone_roundtrip(&l).unwrap();
        println!(
            "{name}: lattice round trip {}",
            if iso.is_some() { "succeeds" } else { "fails" }
        );
    }

    println!(
        "complement swaps down-sets and up-sets of the dual: {}",
        complement_is_dual_isomorphism(&d4).unwrap()
    );
    let envelope = boolean_envelope(&d4).unwrap();
    println!(
        "Boolean envelope: {} elements, embedding {:?}, homomorphism {}",
        envelope.powerset.size(),
        envelope.embedding,
        envelope.is_homomorphism()
    );
}
