//! Every theorem report and the classification profile for one input.
//!
//!     cargo run --example theorem_reports [file-or-fixture]
//!     cargo run --example theorem_reports fixtures/l3.poset

use finite_spectra::cli::render_report;
use finite_spectra::format::load_input;
use finite_spectra::theorems::{classify, Theorem};

fn main() {
    let source = std::env::args().nth(1).unwrap_or_else(|| "l3".into());
    let p = load_input(&source).and_then(|i| i.into_poset()).unwrap_or_else(|e| {
        eprintln!("{source}: {e}");
        std::process::exit(2);
    });
    for theorem in Theorem::ALL {
        print!("{}", render_report(&theorem.report(&p).unwrap()));
        println!();
    }
    for (name, holds) in classify(&p).unwrap().fields() {
        println!("{name:<20}{holds}");
    }
}
