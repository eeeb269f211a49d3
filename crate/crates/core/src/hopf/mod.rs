//! Non-(co)associative bimonoids with antipode: validators, convolution and
//! duality.

mod convolution;
mod dual;
mod structure;
mod validate;

pub use convolution::{convolution, convolution_inverse, convolution_unit};
pub use dual::{codualize, dualize};
pub use structure::{ComonoidData, Gens, HopfCoquasigroupData, HopfMaps, HopfQuasigroupData, UnitalMagmaData};
pub use validate::{
    associativity_witness, check_antipode_properties, check_antipode_properties_with, is_associative,
    is_coassociative, is_cocommutative, is_commutative, is_hopf_morphism, validate_bimonoid,
    validate_hopf_coquasigroup, validate_hopf_coquasigroup_with, validate_hopf_quasigroup,
    validate_hopf_quasigroup_with, TIER_ANTIPODE, TIER_BIMONOID, TIER_CONSEQUENCE, TIER_MORPHISM,
    TIER_PROPERTIES,
};

pub(crate) use validate::run;
