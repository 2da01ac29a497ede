//! Reads a catalog file (or the built-in one), validates it and prints each
//! record's invariants.
//!
//!     cargo run --example catalog -- my-threefolds.txt

use explicit_nl::catalog::{default_catalog, load_catalog};

fn main() {
    let catalog = match std::env::args().nth(1) {
        Some(path) => load_catalog(&path).unwrap_or_else(|e| {
            eprintln!("{path}: {e}");
            std::process::exit(2);
        }),
        None => default_catalog(),
    };
    println!("{:<10} {:>5} {:>4} {:>3} {:>3} {:>4} {:>3}  notes", "name", "alpha", "beta", "a", "b", "e", "H3");
    for record in catalog.records() {
        let inv = &record.invariants;
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        println!(
            "{:<10} {:>5} {:>4} {:>3} {:>3} {:>4} {:>3}  {}",
            inv.name,
            inv.alpha,
            inv.beta,
            inv.a_adj,
            inv.b_adj,
            opt(inv.subcanonical_e.map(|e| e.to_string())),
            opt(inv.h3.map(|h| h.to_string())),
            record.provenance
        );
    }
}
