//! Macaulay representations and the growth bounds `c^<d>`, `c_<d>`.
//!
//!     cargo run --example decompose -- 29 10

use explicit_nl::macaulay::macaulay_rep;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases: Vec<(String, u32)> = match args.as_slice() {
        [c, d] => vec![(c.clone(), d.parse().expect("degree must be a positive integer"))],
        _ => vec![("5".into(), 2), ("29".into(), 10), ("0".into(), 4), ("123456789012345678901234567890".into(), 7)],
    };
    for (c, d) in cases {
        let c: num_bigint::BigUint = c.parse().expect("c must be a non-negative integer");
        let rep = macaulay_rep(c.clone(), d).expect("d >= 1");
        let terms: Vec<String> = rep.terms().map(|(i, k)| format!("C({k},{i})")).collect();
        println!("{c} in degree {d}: {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
        println!("  c^<{d}> = {}", rep.upper());
        println!("  c_<{d}> = {}", rep.lower());
    }
}
