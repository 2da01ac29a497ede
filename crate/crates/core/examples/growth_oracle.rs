//! Multiplies random subspaces of `H^0(M(d))` by the linear forms over `F_101`
//! and compares the new codimension with `c^<d>`. Lex segments hit the bound.

use explicit_nl::graded::{
    check_macaulay_gotzmann, lex_segment_subspace, random_subspace, section_dim, RingContext, SplitSheaf,
    SubspaceFamily,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let p3 = RingContext::new(3, 101).unwrap();
    let sheaf = SplitSheaf::new(vec![0, 1]).unwrap();

    println!("random subspaces of H^0((O+O(1))(2)) on P^3 ({} sections)", section_dim(&sheaf, 2, &p3));
    for _ in 0..6 {
        let family = SubspaceFamily::sample(section_dim(&sheaf, 2, &p3), &mut rng);
        let v = random_subspace(p3, sheaf.clone(), 2, family, &mut rng);
        let check = check_macaulay_gotzmann(&v).unwrap();
        println!(
            "  {:<16} codim {:>2} -> {:>3}   bound {:>3}   {}",
            family.label(),
            check.c,
            check.c_next,
            check.bound,
            if check.holds { "ok" } else { "VIOLATED" }
        );
    }

    println!("lex segments on P^3, d = 3");
    for c in [1, 4, 9, 15] {
        let check = check_macaulay_gotzmann(&lex_segment_subspace(c, 3, p3).unwrap()).unwrap();
        println!("  c = {c:>2}: codim in degree 4 = {:>3}, c^<3> = {:>3}, sharp: {}", check.c_next, check.bound, check.is_sharp());
    }
}
