//! Exact algebra: discriminants of iterates, Eisenstein certificates, Galois
//! order bounds, cyclotomic polynomials and permutation groups.

mod bounds;
mod cyclotomic;
mod disc;
mod eisenstein;
pub mod perm;
mod preimage;

pub use bounds::galois_order_bounds;
pub use cyclotomic::cyclotomic;
pub use disc::{disc_iterate, disc_oracle, is_rational_square, resultant, MAX_DISC_LEVEL};
pub use eisenstein::{
    eisenstein_check, is_prime_u64, stability_certificate, Certificate, StabilityFamily,
    StabilityVerdict,
};
pub use perm::{
    group_closure, sweep_pair_generated, verify_abelian_transitive_lemmas, LemmaReport, PermGroup,
    Permutation, SweepReport,
};
pub use preimage::{preimage_polynomial, ScaledPolynomial, MAX_PREIMAGE_LEVEL};
