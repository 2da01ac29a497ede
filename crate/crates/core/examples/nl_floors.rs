//! Codimension floors for every catalog entry, with the Macaulay step that
//! rules out anything smaller.

use explicit_nl::bounds::{contradiction_trace, nl_codim_floor, BundleSpec, H1Vanishing, Variant};
use explicit_nl::catalog::default_catalog;

fn main() {
    let catalog = default_catalog();
    for variant in [Variant::MinusDRegular, Variant::Adjoint] {
        println!("{variant}, d = 20, h1 unknown");
        for inv in catalog.entries() {
            let spec = BundleSpec::new(variant, 20, H1Vanishing::Unknown).unwrap();
            let r = nl_codim_floor(inv, &spec);
            match r.floor_value {
                Some(f) => println!("  {:<10} {:<28} floor {f}", inv.name, r.branch.label()),
                None => {
                    let failed: Vec<_> = r.failed_hypotheses().map(|h| h.name.as_str()).collect();
                    println!("  {:<10} {:<28} no bound ({})", inv.name, r.branch.label(), failed.join("; "));
                }
            }
        }
    }

    let quintic = catalog.get("quintic").unwrap();
    let spec = BundleSpec::new(Variant::Adjoint, 12, H1Vanishing::KnownZero).unwrap();
    let trace = contradiction_trace(quintic, &spec, 6).unwrap();
    println!("why the quintic has no component of codimension 6 at d = 12:");
    for step in &trace.steps {
        println!("  {step}");
    }
}
