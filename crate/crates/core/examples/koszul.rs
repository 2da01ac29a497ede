//! Base-point freeness and middle exactness of the Koszul complex for a
//! system of conics on `P^2`.

use explicit_nl::graded::{is_basepoint_free, koszul_middle_exact, GradedSubspace, KoszulConfig, Matrix, RingContext, SplitSheaf};

/// Span of the quadric monomials at `keep` (lex order: x0^2 x0x1 x0x2 x1^2 x1x2 x2^2).
fn conics(keep: &[usize]) -> GradedSubspace {
    let mut m = Matrix::zeros(keep.len(), 6);
    for (r, &c) in keep.iter().enumerate() {
        m.set(r, c, 1);
    }
    GradedSubspace::from_generators(RingContext::new(2, 101).unwrap(), SplitSheaf::structure(), 2, m).unwrap()
}

fn main() {
    let with_base_point = conics(&[0, 1, 2]);
    println!("x0 * S_1: {:?}", is_basepoint_free(&with_base_point, 6).unwrap());

    let v = conics(&[0, 2, 3, 5]);
    println!("<x0^2, x0x2, x1^2, x2^2>: {:?}", is_basepoint_free(&v, 6).unwrap());
    let config = KoszulConfig::default();
    for (p, k) in [(0u8, 4), (0, 5), (1, 5), (1, 6)] {
        let r = koszul_middle_exact(&v, k, p, config).unwrap();
        println!(
            "  p = {p}, k = {k}: exact {} (hypothesis k >= p + d + c: {}; ranks in {} out {} middle {})",
            r.exact, r.hypothesis_met, r.incoming_rank, r.outgoing_rank, r.middle_dim
        );
    }
}
