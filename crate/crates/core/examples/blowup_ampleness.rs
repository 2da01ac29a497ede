//! Ampleness of `dH - E_1 - ... - E_k` on blow-ups of hypersurfaces in `P^4`.

use explicit_nl::bounds::{blowup_ampleness, Ampleness, H1Vanishing};
use explicit_nl::catalog::default_catalog;

fn main() {
    let catalog = default_catalog();
    for name in ["quadric", "cubic", "quintic", "sextic"] {
        let inv = catalog.get(name).unwrap();
        // Smallest d where the criterion applies without extra vanishing input.
        let d = (1..).find(|&d| {
            blowup_ampleness(inv, d, 0, H1Vanishing::Unknown).unwrap().verdict != Ampleness::HypothesesUnmet
        });
        let d = d.unwrap();
        let report = blowup_ampleness(inv, d, 0, H1Vanishing::Unknown).unwrap();
        println!("{name:<8} d = {d:>2}: ample for k < {}", report.volume);
    }
    let quadric = catalog.get("quadric").unwrap();
    for k in [127, 128] {
        println!("quadric d = 4, k = {k}: {}", blowup_ampleness(quadric, 4, k, H1Vanishing::Unknown).unwrap().verdict);
    }
}
