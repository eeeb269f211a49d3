use super::matched::{double_cross_product, MatchedPairData};
use crate::error::{Error, Result};
use crate::exactlin::{comp, tens, Diagram, Field, LinMap};
use crate::hopf::{is_cocommutative, HopfQuasigroupData};
use crate::loops::{builtin_group, direct_product, loop_algebra};
use crate::par::Exec;

/// `Ψ = (φ_A ⊗ H)∘(H ⊗ c_{H,A})∘(δ_H ⊗ A)`
pub fn cross_product_psi(a: &HopfQuasigroupData, h: &HopfQuasigroupData, phi_a: &LinMap) -> Result<LinMap> {
    let phi_a = phi_a.reshape(vec![h.dim, a.dim], vec![a.dim])?;
    let gh = h.gens("_H");
    let ga = a.gens("_A");
    let d = comp(&[
        &tens(&[&Diagram::map("φ_A", &phi_a), &gh.id]),
        &tens(&[&gh.id, &Diagram::swap(h.field, h.dim, a.dim)]),
        &tens(&[&gh.delta, &ga.id]),
    ]);
    Ok(d.to_linmap(Exec::default()))
}

/// The matched pair with trivial right action `φ_H = H ⊗ ε_A`; needs a
/// cocommutative `H`.
pub fn cross_matched_pair(a: &HopfQuasigroupData, h: &HopfQuasigroupData, phi_a: &LinMap) -> Result<MatchedPairData> {
    if !is_cocommutative(h) {
        return Err(Error::Precondition("the acting object of a cross product must be cocommutative".into()));
    }
    let phi_h = LinMap::identity(h.field, &[h.dim]).kron(&a.counit)?;
    MatchedPairData::new(a.clone(), h.clone(), phi_a.clone(), phi_h)
}

/// `A ⋊ H` for a module comonoid `(A, φ_A)` over a cocommutative `H`.
pub fn cross_product(a: &HopfQuasigroupData, h: &HopfQuasigroupData, phi_a: &LinMap) -> Result<HopfQuasigroupData> {
    double_cross_product(&cross_matched_pair(a, h, phi_a)?)
}

/// `K(Z2 × Z2)` with `K Z2` acting by exchanging the coordinates.
pub fn swap_action(field: Field) -> Result<(HopfQuasigroupData, HopfQuasigroupData, LinMap)> {
    let z2 = builtin_group("z2")?;
    let a = loop_algebra(&direct_product(&z2, &z2), field)?;
    let h = loop_algebra(&z2, field)?;
    let phi = LinMap::from_basis_map(field, vec![2, 4], vec![4], |k| {
        let (g, v) = (k / 4, k % 4);
        let (i, j) = (v / 2, v % 2);
        Some((if g == 0 { v } else { j * 2 + i }, 1))
    });
    Ok((a, h, phi))
}
