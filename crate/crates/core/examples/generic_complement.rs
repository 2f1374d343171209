//! Generic complements of opens: a disjoint open whose union with `U` is
//! dense, and the resulting split of the minimal points.
//!
//!     cargo run --example generic_complement [file-or-fixture]

use finite_spectra::format::load_input;
use finite_spectra::theorems::{generic_complement, min_partition_holds};

fn main() {
    let source = std::env::args().nth(1).unwrap_or_else(|| "d4".into());
    let p = load_input(&source).and_then(|i| i.into_poset()).expect("a poset");
    println!("{p:?}, minimal points {}", p.minimal_points());
    for u in p.down_sets(4096).unwrap() {
        let v = generic_complement(&p, u).unwrap().expect("exists on finite spaces");
        println!(
            "  U = {u:<10} V = {v:<10} minimal points split: {}",
            min_partition_holds(&p, u, v)
        );
    }
}
