use std::sync::OnceLock;

use super::distributive::wreath_from_psi;
use super::modules::{quasimodule_report, Flavor, ModuleObject, Side};
use super::Unvalidated;
use crate::error::{Error, Result};
use crate::exactlin::{comp, tens, Diagram, Equation, LinMap};
use crate::hopf::{run, HopfQuasigroupData};
use crate::par::Exec;
use crate::report::ValidationReport;

pub const TIER_MATCHED_PAIR: &str = "matched-pair";
pub const TIER_LEFT_ACTION: &str = "left-action";
pub const TIER_RIGHT_ACTION: &str = "right-action";

/// Actions `φ_A: H ⊗ A → A` and `φ_H: H ⊗ A → H`.
#[derive(Clone, Debug)]
pub struct MatchedPairData {
    pub a: HopfQuasigroupData,
    pub h: HopfQuasigroupData,
    pub phi_a: LinMap,
    pub phi_h: LinMap,
    report: OnceLock<ValidationReport>,
}

impl MatchedPairData {
    pub fn new(a: HopfQuasigroupData, h: HopfQuasigroupData, phi_a: LinMap, phi_h: LinMap) -> Result<Self> {
        let (na, nh) = (a.dim, h.dim);
        let fit = |m: &LinMap, cod: usize, what: &str| {
            if m.field() != a.field || m.field() != h.field {
                return Err(Error::Field(format!("{what}, A and H must share a field")));
            }
            m.reshape(vec![nh, na], vec![cod]).map_err(|_| {
                Error::Shape(format!("{what} should be [{nh}, {na}] -> [{cod}], got {}x{}", m.rows(), m.cols()))
            })
        };
        let phi_a = fit(&phi_a, na, "φ_A")?;
        let phi_h = fit(&phi_h, nh, "φ_H")?;
        Ok(MatchedPairData { a, h, phi_a, phi_h, report: OnceLock::new() })
    }

    /// `Ψ = (φ_A ⊗ φ_H)∘δ_{H⊗A}`
    pub fn psi(&self) -> LinMap {
        self.psi_diagram().to_linmap(Exec::default())
    }

    fn psi_diagram(&self) -> Diagram {
        let h = self.h.gens("_H");
        let a = self.a.gens("_A");
        comp(&[
            &tens(&[&Diagram::map("φ_A", &self.phi_a), &Diagram::map("φ_H", &self.phi_h)]),
            &h.tensor_coproduct(&a),
        ])
    }

    pub fn report(&self) -> &ValidationReport {
        self.report.get_or_init(|| validate_matched_pair(self))
    }
}

pub fn validate_matched_pair(mp: &MatchedPairData) -> ValidationReport {
    validate_matched_pair_with(mp, Exec::default())
}

/// Module-comonoid identities of both actions, then the compatibility
/// conditions between them.
pub fn validate_matched_pair_with(mp: &MatchedPairData, exec: Exec) -> ValidationReport {
    let mut r = ValidationReport::new(format!("matched pair of A (dim {}) and H (dim {})", mp.a.dim, mp.h.dim));
    let left = quasimodule_report(&mp.phi_a, &mp.h, ModuleObject::Structured(&mp.a), Flavor::Module, Side::Left, exec)
        .expect("shapes checked on construction");
    r.absorb(TIER_LEFT_ACTION, left);
    let right = quasimodule_report(&mp.phi_h, &mp.a, ModuleObject::Structured(&mp.h), Flavor::Module, Side::Right, exec)
        .expect("shapes checked on construction");
    r.absorb(TIER_RIGHT_ACTION, right);
    run(&mut r, TIER_MATCHED_PAIR, &pair_equations(mp), exec);
    r
}

fn pair_equations(mp: &MatchedPairData) -> Vec<Equation> {
    let h = mp.h.gens("_H");
    let a = mp.a.gens("_A");
    let (hh, aa) = (&h.id, &a.id);
    let pa = Diagram::map("φ_A", &mp.phi_a);
    let ph = Diagram::map("φ_H", &mp.phi_h);
    let psi = Diagram::map("Ψ", &mp.psi_diagram().to_linmap(Exec::default()));
    let psi_lam = comp(&[&psi, &tens(&[&h.lam, &a.lam])]);
    let eps_eps_h = tens(&[&h.eps, &a.eps, hh]);
    let a_eps_eps = tens(&[aa, &h.eps, &a.eps]);
    vec![
        Equation::new("d1", comp(&[&pa, &tens(&[hh, &a.eta])]), tens(&[&h.eps, &a.eta])),
        Equation::new("d2", comp(&[&ph, &tens(&[&h.eta, aa])]), tens(&[&h.eta, &a.eps])),
        Equation::new(
            "d3",
            comp(&[&tens(&[&ph, &pa]), &h.tensor_coproduct(&a)]),
            comp(&[&Diagram::swap(h.field, a.n, h.n), &psi]),
        ),
        Equation::new(
            "d4",
            comp(&[&pa, &tens(&[hh, &a.mu]), &tens(&[&h.lam, &a.lam, aa])]),
            comp(&[&a.mu, &tens(&[aa, &pa]), &tens(&[&psi_lam, aa])]),
        ),
        Equation::new(
            "d5",
            comp(&[&h.mu, &tens(&[&ph, &h.mu]), &tens(&[&h.lam, &psi, hh]), &tens(&[&h.delta, aa, hh])]),
            eps_eps_h.clone(),
        ),
        Equation::new(
            "d6",
            comp(&[
                &h.mu,
                &tens(&[&ph, &h.mu]),
                &tens(&[hh, &psi, hh]),
                &tens(&[&comp(&[&tens(&[hh, &h.lam]), &h.delta]), aa, hh]),
            ]),
            eps_eps_h,
        ),
        Equation::new(
            "d7",
            comp(&[&ph, &tens(&[&h.mu, aa]), &tens(&[hh, &h.lam, &a.lam])]),
            comp(&[&h.mu, &tens(&[&ph, hh]), &tens(&[hh, &psi_lam])]),
        ),
        Equation::new(
            "d8",
            comp(&[&a.mu, &tens(&[&a.mu, &pa]), &tens(&[aa, &psi, &a.lam]), &tens(&[aa, hh, &a.delta])]),
            a_eps_eps.clone(),
        ),
        Equation::new(
            "d9",
            comp(&[
                &a.mu,
                &tens(&[&a.mu, &pa]),
                &tens(&[aa, &psi, aa]),
                &tens(&[aa, hh, &comp(&[&tens(&[&a.lam, aa]), &a.delta])]),
            ]),
            a_eps_eps,
        ),
    ]
}

/// `A ⋈ H`, the wreath product of the induced law; refuses unless the pair
/// validates.
pub fn double_cross_product(mp: &MatchedPairData) -> Result<HopfQuasigroupData> {
    if !mp.report().all_passed() {
        return Err(Error::validation("matched pair", mp.report().clone()));
    }
    wreath_from_psi(&mp.a, &mp.h, &mp.psi())
}

pub fn double_cross_product_unchecked(mp: &MatchedPairData) -> Result<Unvalidated<HopfQuasigroupData>> {
    Ok(Unvalidated {
        value: wreath_from_psi(&mp.a, &mp.h, &mp.psi())?,
        report: mp.report().clone(),
    })
}
