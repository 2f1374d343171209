//! The Stone conditions side by side, the minimal-prime witness, and the
//! retraction onto minimal points.
//!
//!     cargo run --example stone_conditions [file-or-fixture]

use finite_spectra::duality::downset_lattice;
use finite_spectra::format::load_input;
use finite_spectra::poset::RetractionKind;
use finite_spectra::theorems::stone_report;

fn main() {
    let source = std::env::args().nth(1).unwrap_or_else(|| "v3".into());
    let p = load_input(&source).and_then(|i| i.into_poset()).unwrap_or_else(|e| {
        eprintln!("{source}: {e}");
        std::process::exit(2);
    });

    let report = stone_report(&p).unwrap();
    for v in report.verdicts() {
        println!("{:<26}{}", v.label, v.holds);
    }
    println!("agreement {}", report.agreement);
    if let Some(w) = &report.witness {
        println!("witness: {}", w.note);
    }

    let lattice = downset_lattice(&p).unwrap();
    let coprime = lattice.minimal_primes_coprime();
    println!("minimal primes pairwise coprime: {}", coprime.holds);
    if let Some((a, b)) = coprime.witness {
        let sets = |i: &finite_spectra::LatticeIdeal| i.members().map(|m| lattice.set(m)).collect::<Vec<_>>();
        println!("  {:?} and {:?} generate a proper ideal", sets(&a), sets(&b));
    }

    match p.retraction(RetractionKind::ToMin) {
        Some(r) => println!("retraction onto minimal points: {:?}", r.images()),
        None => println!("no continuous retraction onto minimal points"),
    }
}
