//! Distributive laws, matched pairs and their duals, with the products they
//! build.

pub mod codistributive;
pub mod comatched;
pub mod cross;
pub mod distributive;
pub mod matched;
pub mod modules;
pub mod skew;
pub mod taft;

pub use codistributive::{
    validate_codistributive_law, validate_codistributive_law_with, wreath_coproduct, wreath_coproduct_unchecked,
    CodistributiveLawData,
};
pub use comatched::{
    double_cross_coproduct, double_cross_coproduct_unchecked, validate_comatched_pair, validate_comatched_pair_with,
    ComatchedPairData,
};
pub use cross::{cross_matched_pair, cross_product, cross_product_psi, swap_action};
pub use distributive::{
    validate_distributive_law, validate_distributive_law_with, wreath_product, wreath_product_unchecked,
    DistributiveLawData,
};
pub use matched::{
    double_cross_product, double_cross_product_unchecked, validate_matched_pair, validate_matched_pair_with,
    MatchedPairData,
};
pub use modules::{validate_quasicomodule, validate_quasimodule, Flavor, ModuleObject, Side};
pub use skew::{actions_from_skew_pairing, parity_pairing, validate_skew_pairing, SkewPairingData};
pub use taft::taft_algebra;

use crate::error::Result;
use crate::exactlin::{total, Diagram};
use crate::hopf::HopfMaps;
use crate::par::Exec;
use crate::report::ValidationReport;

/// A construction built without validating its input, with the report that
/// would have refused it.
#[derive(Clone, Debug)]
pub struct Unvalidated<T> {
    pub value: T,
    pub report: ValidationReport,
}

/// Evaluates structure diagrams on the tensor space with the given factors.
pub(crate) fn assemble(
    factors: [usize; 2],
    unit: &Diagram,
    product: &Diagram,
    counit: &Diagram,
    coproduct: &Diagram,
    antipode: &Diagram,
    labels: Option<Vec<String>>,
) -> Result<HopfMaps> {
    let n = total(&factors);
    let ex = Exec::default();
    let maps = HopfMaps::new(
        n,
        unit.to_linmap(ex),
        product.to_linmap(ex),
        counit.to_linmap(ex),
        coproduct.to_linmap(ex),
        antipode.to_linmap(ex),
    )?
    .with_factors(factors.to_vec())?;
    match labels {
        Some(l) => maps.with_labels(l),
        None => Ok(maps),
    }
}

pub(crate) fn tensor_labels(a: Option<&[String]>, b: Option<&[String]>) -> Option<Vec<String>> {
    let (a, b) = (a?, b?);
    Some(a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}"))).collect())
}
