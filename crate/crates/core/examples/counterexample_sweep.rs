//! Every report over every small poset, with the first failure of each
//! class.
//!
//!     cargo run --release --example counterexample_sweep [max-size] [jobs]

use finite_spectra::poset::Labeling;
use finite_spectra::theorems::sweep;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("a number"));
    let max = args.next().unwrap_or(5);
    let jobs = args.next().unwrap_or(0);
    let summary = sweep(max, Labeling::Unlabeled, jobs).unwrap();
    print!("{}", summary.render_text());

    let first = |class: &str| summary.class(class).and_then(|c| c.first_counterexample.clone());
    if let Some(c) = first("stone") {
        println!("\nsmallest non-Stone space: {:?}", c.to_poset());
    }
    if let Some(c) = first("normal") {
        println!("smallest non-normal space: {:?}", c.to_poset());
    }
}
