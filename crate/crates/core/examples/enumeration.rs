//! Counting posets up to isomorphism and with labels, and canonical forms.
//!
//!     cargo run --release --example enumeration [max-size] [jobs]

use finite_spectra::poset::{are_isomorphic, enumerate_posets_with, EnumerateConfig, Labeling};
use finite_spectra::Poset;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("a number"));
    let max = args.next().unwrap_or(6);
    let jobs = args.next().unwrap_or(0);
    let config = EnumerateConfig {
        jobs,
        ..EnumerateConfig::default()
    };

    for n in 1..=max {
        let unlabeled = enumerate_posets_with(n, Labeling::Unlabeled, &config).unwrap();
        let labeled = if n <= 5 {
            enumerate_posets_with(n, Labeling::Labeled, &config)
                .unwrap()
                .len()
                .to_string()
        } else {
            "-".into()
        };
        println!("{n} points: {:>5} unlabeled {:>7} labeled", unlabeled.len(), labeled);
    }

    // Relabeling does not change the canonical form.
    let p = Poset::new(4, [(2, 0), (3, 0), (2, 1)]).unwrap();
    let q = p.relabel(&[3, 1, 0, 2]);
    println!("{p:?} vs {q:?}: isomorphic {}", are_isomorphic(&p, &q));
    println!(
        "canonical form {:?}, code {:?}",
        p.canonical(),
        p.canonical_form().code()
    );
}
