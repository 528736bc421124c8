//! Brute-force ground truth over `F_q((t))`: truncated series, matrices,
//! the compact subgroups, double-coset classification and the definitional
//! checks that the closed forms are tested against.

pub mod brute;
pub mod claims;
pub mod decompose;
pub mod matrix;
pub mod sample;
pub mod series;
pub mod subgroup;

pub use brute::{
    entry_exponent_bruteforce, hecke_action_bruteforce_trivial, is_proper_bruteforce, s_omega_bruteforce, TrivialOp,
};
pub use claims::{verify_claims, verify_coset_claim, Claim, ClaimKind, ClaimRecord, CLAIMS_Q2};
pub use decompose::{classify_izti, classify_kzti1, decompose_kzti1, Decomposition};
pub use matrix::GMat;
pub use series::TruncSeries;
pub use subgroup::{in_kz, SubgroupSpec, SubgroupTag};
