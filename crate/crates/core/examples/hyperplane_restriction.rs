//! Restricts subspaces to a random hyperplane `H` and checks
//! `codim V_H <= c_<d>` together with `codim V = codim V^H + codim V_H`.

use explicit_nl::graded::{lex_segment_subspace, random_subspace, restrict_to_hyperplane, RingContext, SplitSheaf, SubspaceFamily};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let p3 = RingContext::new(3, 101).unwrap();
    let v = lex_segment_subspace(5, 2, p3).unwrap();
    let r = restrict_to_hyperplane(&v, 1).unwrap();
    println!("lex segment, c = 5, d = 2 on P^3");
    println!("  hyperplane coefficients {:?}", r.linear_form);
    println!("  codim V_H = {} (bound c_<2> = {})", r.v_h.codim(), r.bound);
    println!("  codim V^H = {}, additive: {}", r.v_preimage.codim(), r.additivity_holds);

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let p2 = RingContext::new(2, 101).unwrap();
    println!("degree one on P^2: c_<1> = c - 1");
    for generators in 0..3 {
        let v = random_subspace(p2, SplitSheaf::structure(), 1, SubspaceFamily::Dense { generators }, &mut rng);
        let r = restrict_to_hyperplane(&v, generators as u64).unwrap();
        println!("  c = {} -> codim V_H = {} (bound {})", v.codim(), r.v_h.codim(), r.bound);
    }
}
