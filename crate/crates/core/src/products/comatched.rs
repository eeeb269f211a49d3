use std::sync::OnceLock;

use super::codistributive::wreath_from_omega;
use super::modules::{quasicomodule_report, Flavor, ModuleObject, Side};
use super::Unvalidated;
use crate::error::{Error, Result};
use crate::exactlin::{comp, tens, Diagram, Equation, LinMap};
use crate::hopf::{run, HopfCoquasigroupData};
use crate::par::Exec;
use crate::report::ValidationReport;

pub const TIER_COMATCHED_PAIR: &str = "comatched-pair";
pub const TIER_RIGHT_COACTION: &str = "right-coaction";
pub const TIER_LEFT_COACTION: &str = "left-coaction";

/// Coactions `ρ_B: B → B ⊗ D` and `r_D: D → B ⊗ D`.
#[derive(Clone, Debug)]
pub struct ComatchedPairData {
    pub b: HopfCoquasigroupData,
    pub d: HopfCoquasigroupData,
    pub rho_b: LinMap,
    pub r_d: LinMap,
    report: OnceLock<ValidationReport>,
}

impl ComatchedPairData {
    pub fn new(b: HopfCoquasigroupData, d: HopfCoquasigroupData, rho_b: LinMap, r_d: LinMap) -> Result<Self> {
        let (nb, nd) = (b.dim, d.dim);
        let fit = |m: &LinMap, dom: usize, what: &str| {
            if m.field() != b.field || m.field() != d.field {
                return Err(Error::Field(format!("{what}, B and D must share a field")));
            }
            m.reshape(vec![dom], vec![nb, nd]).map_err(|_| {
                Error::Shape(format!("{what} should be [{dom}] -> [{nb}, {nd}], got {}x{}", m.rows(), m.cols()))
            })
        };
        let rho_b = fit(&rho_b, nb, "ρ_B")?;
        let r_d = fit(&r_d, nd, "r_D")?;
        Ok(ComatchedPairData { b, d, rho_b, r_d, report: OnceLock::new() })
    }

    /// `Ω = μ_{B⊗D}∘(r_D ⊗ ρ_B)`
    pub fn omega(&self) -> LinMap {
        let b = self.b.gens("_B");
        let d = self.d.gens("_D");
        comp(&[
            &b.tensor_product(&d),
            &tens(&[&Diagram::map("r_D", &self.r_d), &Diagram::map("ρ_B", &self.rho_b)]),
        ])
        .to_linmap(Exec::default())
    }

    pub fn report(&self) -> &ValidationReport {
        self.report.get_or_init(|| validate_comatched_pair(self))
    }
}

pub fn validate_comatched_pair(cp: &ComatchedPairData) -> ValidationReport {
    validate_comatched_pair_with(cp, Exec::default())
}

/// Comodule-monoid identities of both coactions, then the compatibility
/// conditions between them.
pub fn validate_comatched_pair_with(cp: &ComatchedPairData, exec: Exec) -> ValidationReport {
    let mut r = ValidationReport::new(format!("comatched pair of B (dim {}) and D (dim {})", cp.b.dim, cp.d.dim));
    let right = quasicomodule_report(&cp.rho_b, &cp.d, ModuleObject::Structured(&cp.b), Flavor::Module, Side::Right, exec)
        .expect("shapes checked on construction");
    r.absorb(TIER_RIGHT_COACTION, right);
    let left = quasicomodule_report(&cp.r_d, &cp.b, ModuleObject::Structured(&cp.d), Flavor::Module, Side::Left, exec)
        .expect("shapes checked on construction");
    r.absorb(TIER_LEFT_COACTION, left);
    run(&mut r, TIER_COMATCHED_PAIR, &pair_equations(cp), exec);
    r
}

fn pair_equations(cp: &ComatchedPairData) -> Vec<Equation> {
    let b = cp.b.gens("_B");
    let d = cp.d.gens("_D");
    let (bb, dd) = (&b.id, &d.id);
    let rho = Diagram::map("ρ_B", &cp.rho_b);
    let r = Diagram::map("r_D", &cp.r_d);
    let om = Diagram::map("Ω", &cp.omega());
    let lam_om = comp(&[&tens(&[&b.lam, &d.lam]), &om]);
    let d_eta_eta = tens(&[dd, &b.eta, &d.eta]);
    let eta_eta_b = tens(&[&b.eta, &d.eta, bb]);
    vec![
        Equation::new("d1c", comp(&[&tens(&[&b.eps, dd]), &rho]), tens(&[&b.eps, &d.eta])),
        Equation::new("d2c", comp(&[&tens(&[bb, &d.eps]), &r]), tens(&[&b.eta, &d.eps])),
        Equation::new(
            "d3c",
            comp(&[&b.tensor_product(&d), &tens(&[&rho, &r])]),
            comp(&[&om, &Diagram::swap(b.field, b.n, d.n)]),
        ),
        Equation::new(
            "d4c",
            comp(&[&tens(&[bb, &b.lam, &d.lam]), &tens(&[&b.delta, dd]), &rho]),
            comp(&[&tens(&[bb, &lam_om]), &tens(&[&rho, bb]), &b.delta]),
        ),
        Equation::new(
            "d5c",
            comp(&[&tens(&[dd, bb, &d.mu]), &tens(&[dd, &om, &d.lam]), &tens(&[&d.delta, &r]), &d.delta]),
            d_eta_eta.clone(),
        ),
        Equation::new(
            "d6c",
            comp(&[
                &tens(&[dd, bb, &comp(&[&d.mu, &tens(&[&d.lam, dd])])]),
                &tens(&[dd, &om, dd]),
                &tens(&[&d.delta, &r]),
                &d.delta,
            ]),
            d_eta_eta,
        ),
        Equation::new(
            "d7c",
            comp(&[&tens(&[&b.lam, &d.lam, dd]), &tens(&[bb, &d.delta]), &r]),
            comp(&[&tens(&[&lam_om, dd]), &tens(&[dd, &r]), &d.delta]),
        ),
        Equation::new(
            "d8c",
            comp(&[&tens(&[&b.mu, dd, bb]), &tens(&[&b.lam, &om, bb]), &tens(&[&rho, &b.delta]), &b.delta]),
            eta_eta_b.clone(),
        ),
        Equation::new(
            "d9c",
            comp(&[
                &tens(&[&comp(&[&b.mu, &tens(&[bb, &b.lam])]), dd, bb]),
                &tens(&[bb, &om, bb]),
                &tens(&[&rho, &b.delta]),
                &b.delta,
            ]),
            eta_eta_b,
        ),
    ]
}

/// `D ⋈ B` as the wreath coproduct of the induced law; refuses unless the
/// pair validates.
pub fn double_cross_coproduct(cp: &ComatchedPairData) -> Result<HopfCoquasigroupData> {
    if !cp.report().all_passed() {
        return Err(Error::validation("comatched pair", cp.report().clone()));
    }
    wreath_from_omega(&cp.d, &cp.b, &cp.omega())
}

pub fn double_cross_coproduct_unchecked(cp: &ComatchedPairData) -> Result<Unvalidated<HopfCoquasigroupData>> {
    Ok(Unvalidated {
        value: wreath_from_omega(&cp.d, &cp.b, &cp.omega())?,
        report: cp.report().clone(),
    })
}
