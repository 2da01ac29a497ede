//! Macaulay growth bounds, finite-field verification oracles and explicit
//! Noether-Lefschetz codimension floors for smooth threefolds.
//!
//! * [`macaulay`]: binomial expansions and the bounds `c^<d>`, `c_<d>`.
//! * [`graded`]: exact linear algebra over `F_p` on graded pieces of split
//!   sheaves on `P^N`, checking growth, restriction and Koszul statements.
//! * [`bounds`]: codimension floors, threshold lemmas, proof-chain traces and
//!   the blow-up ampleness criterion.
//! * [`catalog`]: a plain-text catalog of threefold invariants.
//! * [`verify`] and [`cli`]: seeded verification sweeps and the command-line front end.

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod graded;
pub mod macaulay;
pub mod verify;
