//! Prints the number of 2-tree classes per order and the central census tables.
//!
//! `cargo run --release --example census -- 12`

use std::time::Instant;

use twotrees::enumerate::{table_from_census, Census};
use twotrees::CoreSize;

fn main() {
    let n_max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    let t = Instant::now();
    let census = Census::up_to(n_max).expect("within enumeration cap");
    for n in 2..=n_max {
        println!("n={n:>2}: {} classes", census.classes(n).len());
    }
    println!("enumerated in {:.2?}", t.elapsed());
    for r in CoreSize::ALL {
        println!("\nr = {r}");
        print!("{}", table_from_census(&census, 3, n_max, r).to_text());
    }
}
