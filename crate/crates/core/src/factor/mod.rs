//! Factorizations `X = AH` of Hopf quasigroups, cofactorizations of Hopf
//! coquasigroups, and the laws and pairs extracted from them.

mod cofactorization;
mod factorization;
mod stages;

pub use cofactorization::{
    check_cofactorization, extract_codistributive_law, extract_comatched_pair, verify_cofactorization_theorem,
    CofactorizationData, TIER_COFACTORIZATION,
};
pub use factorization::{
    check_factorization, extract_distributive_law, extract_matched_pair, verify_factorization_theorem,
    FactorizationData, TIER_FACTORIZATION, TIER_FINITE,
};
pub use stages::{halted_stage, TIER_PIPELINE};
