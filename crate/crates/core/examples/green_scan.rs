//! Exhaustive check of Green's recursive restriction inequality: whenever
//! `c' <= c'_<d> + (c - c')_<d-1>`, also `c' <= c_<d>`.

use std::time::Instant;

use explicit_nl::macaulay::green_implication_scan;

fn main() {
    let (c_max, d_max) = (2000, 10);
    let start = Instant::now();
    let found = green_implication_scan(c_max, d_max);
    println!(
        "c <= {c_max}, 2 <= d <= {d_max}: {} counterexamples in {:.2?}",
        found.len(),
        start.elapsed()
    );
    for x in found.iter().take(5) {
        println!("  c = {}, c' = {}, d = {}", x.c, x.c_prime, x.d);
    }
}
