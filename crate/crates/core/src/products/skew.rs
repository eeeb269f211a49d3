use super::matched::MatchedPairData;
use super::taft::{taft_algebra, ONE, X};
use crate::error::{Error, Result};
use crate::exactlin::{comp, tens, Diagram, Equation, Field, LinMap};
use crate::hopf::{convolution, convolution_inverse, convolution_unit, run, ComonoidData, HopfQuasigroupData, UnitalMagmaData};
use crate::loops::{chein_double, loop_algebra, FiniteGroup};
use crate::par::Exec;
use crate::report::ValidationReport;

pub const TIER_CONVOLUTION: &str = "convolution";
pub const TIER_SKEW_PAIRING: &str = "skew-pairing";

/// A bilinear form `τ: A ⊗ H → K` with its convolution inverse.
#[derive(Clone, Debug)]
pub struct SkewPairingData {
    pub a: HopfQuasigroupData,
    pub h: HopfQuasigroupData,
    pub tau: LinMap,
    pub tau_inv: LinMap,
}

impl SkewPairingData {
    /// Computes `τ⁻¹` when it is not supplied.
    pub fn new(a: HopfQuasigroupData, h: HopfQuasigroupData, tau: LinMap, tau_inv: Option<LinMap>) -> Result<Self> {
        let fit = |m: &LinMap, what: &str| {
            if m.field() != a.field || m.field() != h.field {
                return Err(Error::Field(format!("{what}, A and H must share a field")));
            }
            m.reshape(vec![a.dim, h.dim], vec![1]).map_err(|_| {
                Error::Shape(format!("{what} should be [{}, {}] -> [1], got {}x{}", a.dim, h.dim, m.rows(), m.cols()))
            })
        };
        let tau = fit(&tau, "τ")?;
        let (c, k) = Self::convolution_algebra(&a, &h)?;
        let tau_inv = match tau_inv {
            Some(t) => fit(&t, "τ⁻¹")?,
            None => convolution_inverse(&tau.reshape(vec![a.dim * h.dim], vec![1])?, &c, &k)?
                .reshape(vec![a.dim, h.dim], vec![1])?,
        };
        Ok(SkewPairingData { a, h, tau, tau_inv })
    }

    fn convolution_algebra(a: &HopfQuasigroupData, h: &HopfQuasigroupData) -> Result<(ComonoidData, UnitalMagmaData)> {
        Ok((ComonoidData::tensor(&a.comonoid(), &h.comonoid())?, UnitalMagmaData::ground(a.field)))
    }
}

/// Convolution invertibility of `τ`, and in a separate tier the
/// multiplicativity identities of a skew pairing.
pub fn validate_skew_pairing(sp: &SkewPairingData) -> Result<ValidationReport> {
    let (na, nh) = (sp.a.dim, sp.h.dim);
    let flat = |m: &LinMap| m.reshape(vec![na * nh], vec![1]);
    let (c, k) = SkewPairingData::convolution_algebra(&sp.a, &sp.h)?;
    let unit = convolution_unit(&c, &k);
    let (t, ti) = (flat(&sp.tau)?, flat(&sp.tau_inv)?);
    let mut r = ValidationReport::new(format!("skew pairing of A (dim {na}) and H (dim {nh})"));
    for (name, f, g) in [("τ⋆τ⁻¹", &t, &ti), ("τ⁻¹⋆τ", &ti, &t)] {
        let got = convolution(f, g, &c, &k)?;
        let diff = got.first_difference(&unit);
        r.record_flag(
            TIER_CONVOLUTION,
            name,
            diff.is_none(),
            diff.map(|(row, col)| format!("differs from ε⊗ε at input {col} (row {row})")),
        );
    }

    let a = sp.a.gens("_A");
    let h = sp.h.gens("_H");
    let tau = Diagram::map("τ", &sp.tau);
    let tt = tens(&[&tau, &tau]);
    let f = sp.a.field;
    let eqs = [
        Equation::new(
            "tau-mu-A",
            comp(&[&tau, &tens(&[&a.mu, &h.id])]),
            comp(&[&tt, &tens(&[&a.id, &Diagram::swap(f, na, nh), &h.id]), &tens(&[&a.id, &a.id, &h.delta])]),
        ),
        Equation::new(
            "tau-mu-H",
            comp(&[&tau, &tens(&[&a.id, &h.mu])]),
            comp(&[
                &tt,
                &tens(&[&a.id, &Diagram::swap(f, na, nh), &h.id]),
                &tens(&[&a.id, &a.id, &h.c]),
                &tens(&[&a.delta, &h.id, &h.id]),
            ]),
        ),
        Equation::new("tau-eta-A", comp(&[&tau, &tens(&[&a.eta, &h.id])]), h.eps.clone()),
        Equation::new("tau-eta-H", comp(&[&tau, &tens(&[&a.id, &h.eta])]), a.eps.clone()),
    ];
    run(&mut r, TIER_SKEW_PAIRING, &eqs, Exec::default());
    Ok(r)
}

/// `φ_A = (τ ⊗ A ⊗ τ⁻¹)∘(A ⊗ H ⊗ δ_A ⊗ H)∘δ_{A⊗H}∘c_{H,A}` and
/// `φ_H = (τ ⊗ H ⊗ τ⁻¹)∘(A ⊗ H ⊗ c_{A,H} ⊗ H)∘(A ⊗ H ⊗ A ⊗ δ_H)∘δ_{A⊗H}∘c_{H,A}`.
/// The pair is returned unvalidated.
pub fn actions_from_skew_pairing(sp: &SkewPairingData) -> Result<MatchedPairData> {
    let a = sp.a.gens("_A");
    let h = sp.h.gens("_H");
    let f = sp.a.field;
    let (na, nh) = (a.n, h.n);
    let tau = Diagram::map("τ", &sp.tau);
    let tau_inv = Diagram::map("τ⁻¹", &sp.tau_inv);
    let spread = comp(&[&a.tensor_coproduct(&h), &Diagram::swap(f, nh, na)]);
    let phi_a = comp(&[
        &tens(&[&tau, &a.id, &tau_inv]),
        &tens(&[&a.id, &h.id, &a.delta, &h.id]),
        &spread,
    ]);
    let phi_h = comp(&[
        &tens(&[&tau, &h.id, &tau_inv]),
        &tens(&[&a.id, &h.id, &Diagram::swap(f, na, nh), &h.id]),
        &tens(&[&a.id, &h.id, &a.id, &h.delta]),
        &spread,
    ]);
    let ex = Exec::default();
    MatchedPairData::new(sp.a.clone(), sp.h.clone(), phi_a.to_linmap(ex), phi_h.to_linmap(ex))
}

/// `τ(g u^α ⊗ z)` on `K[M(G,2)] ⊗ H₄`: `1` for `z = 1`, `(−1)^α` for
/// `z = x`, `0` for `z = y, w`. It is its own convolution inverse.
pub fn parity_pairing(g: &FiniteGroup, field: Field) -> Result<SkewPairingData> {
    let a = loop_algebra(&chein_double(g), field)?;
    let h = taft_algebra(field)?;
    let n = g.order;
    let nh = h.dim;
    let tau = LinMap::from_basis_map(field, vec![a.dim, nh], vec![1], |k| {
        let (e, z) = (k / nh, k % nh);
        let sign = if e < n { 1 } else { -1 };
        match z {
            ONE => Some((0, 1)),
            X => Some((0, sign)),
            _ => None,
        }
    });
    SkewPairingData::new(a, h, tau.clone(), Some(tau))
}
