//! Duals of finite objects. The dual basis of `P ⊗ Q` is taken to be the
//! Kronecker product of the dual bases (no factor reversal), so every dual
//! structure map is a plain transpose.

use super::structure::{HopfCoquasigroupData, HopfQuasigroupData};

/// `H ↦ H*`: a Hopf quasigroup becomes a Hopf coquasigroup.
pub fn dualize(h: &HopfQuasigroupData) -> HopfCoquasigroupData {
    HopfCoquasigroupData(h.transposed())
}

/// `D ↦ D*`: a Hopf coquasigroup becomes a Hopf quasigroup.
pub fn codualize(d: &HopfCoquasigroupData) -> HopfQuasigroupData {
    HopfQuasigroupData(d.transposed())
}
