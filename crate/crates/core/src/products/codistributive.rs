use std::sync::OnceLock;

use super::distributive::verdict;
use super::{assemble, tensor_labels, Unvalidated};
use crate::error::{Error, Result};
use crate::exactlin::{comp, tens, Diagram, Equation, LinMap};
use crate::hopf::{run, HopfCoquasigroupData};
use crate::par::Exec;
use crate::report::ValidationReport;

pub const TIER_CODISTRIBUTIVE: &str = "codistributive";
pub const TIER_SIMPLIFIED: &str = "simplified";
pub const TIER_MONOIDAL: &str = "monoidal";
pub const TIER_A_MONOIDAL: &str = "a-monoidal";

/// A candidate law `Ω: D ⊗ B → B ⊗ D`.
#[derive(Clone, Debug)]
pub struct CodistributiveLawData {
    pub d: HopfCoquasigroupData,
    pub b: HopfCoquasigroupData,
    pub omega: LinMap,
    report: OnceLock<ValidationReport>,
}

impl CodistributiveLawData {
    pub fn new(d: HopfCoquasigroupData, b: HopfCoquasigroupData, omega: LinMap) -> Result<Self> {
        if omega.field() != d.field || omega.field() != b.field {
            return Err(Error::Field("Ω, D and B must share a field".into()));
        }
        let omega = omega.reshape(vec![d.dim, b.dim], vec![b.dim, d.dim]).map_err(|_| {
            Error::Shape(format!(
                "Ω should be [{}, {}] -> [{}, {}], got {}x{}",
                d.dim,
                b.dim,
                b.dim,
                d.dim,
                omega.rows(),
                omega.cols()
            ))
        })?;
        Ok(CodistributiveLawData { d, b, omega, report: OnceLock::new() })
    }

    pub fn report(&self) -> &ValidationReport {
        self.report.get_or_init(|| validate_codistributive_law(self))
    }

    /// Tiers required to build the wreath coproduct.
    pub fn is_a_monoidal(&self) -> bool {
        let r = self.report();
        [TIER_CODISTRIBUTIVE, TIER_MONOIDAL, TIER_A_MONOIDAL].iter().all(|t| r.tier_passed(t))
    }
}

fn law_equations(c: &CodistributiveLawData) -> [Vec<Equation>; 4] {
    let d = c.d.gens("_D");
    let b = c.b.gens("_B");
    let om = Diagram::map("Ω", &c.omega);
    let (dd, bb) = (&d.id, &b.id);

    let dl1_lhs = comp(&[&tens(&[&b.delta, dd]), &om]);
    let dl1_rhs = comp(&[&tens(&[bb, &om]), &tens(&[&om, bb]), &tens(&[dd, &b.delta])]);
    let b_lam_lam = tens(&[bb, &b.lam, &d.lam]);
    let dl2_lhs = comp(&[&tens(&[bb, &d.delta]), &om]);
    let dl2_rhs = comp(&[&tens(&[&om, dd]), &tens(&[dd, &om]), &tens(&[&d.delta, bb])]);
    let lam_lam_d = tens(&[&b.lam, &d.lam, dd]);

    let codistributive = vec![
        Equation::new("dl1c", comp(&[&b_lam_lam, &dl1_lhs]), comp(&[&b_lam_lam, &dl1_rhs])),
        Equation::new("dl2c", comp(&[&lam_lam_d, &dl2_lhs]), comp(&[&lam_lam_d, &dl2_rhs])),
        Equation::new("dl3c", comp(&[&tens(&[&b.eps, dd]), &om]), tens(&[dd, &b.eps])),
        Equation::new("dl4c", comp(&[&tens(&[bb, &d.eps]), &om]), tens(&[&d.eps, bb])),
    ];
    let simplified = vec![
        Equation::new("dl1-1c", dl1_lhs, dl1_rhs),
        Equation::new("dl2-1c", dl2_lhs, dl2_rhs),
    ];
    let monoidal = vec![
        Equation::new(
            "cdl1c",
            comp(&[&om, &d.tensor_product(&b)]),
            comp(&[&b.tensor_product(&d), &tens(&[&om, &om])]),
        ),
        Equation::new("cdl2c", comp(&[&om, &d.tensor_unit(&b)]), b.tensor_unit(&d)),
    ];

    let db_eta = tens(&[dd, bb, &d.eta]);
    let adl_d = |twisted: &Diagram| {
        comp(&[
            &tens(&[dd, bb, twisted]),
            &tens(&[dd, &om, dd]),
            &tens(&[&d.delta, &om]),
            &tens(&[&d.delta, bb]),
        ])
    };
    let eta_db = tens(&[&b.eta, dd, bb]);
    let adl_b = |twisted: &Diagram| {
        comp(&[
            &tens(&[twisted, dd, bb]),
            &tens(&[bb, &om, bb]),
            &tens(&[&om, &b.delta]),
            &tens(&[dd, &b.delta]),
        ])
    };
    let a_monoidal = vec![
        Equation::new("adl1c", adl_d(&comp(&[&d.mu, &tens(&[dd, &d.lam])])), db_eta.clone()),
        Equation::new("adl2c", adl_d(&comp(&[&d.mu, &tens(&[&d.lam, dd])])), db_eta),
        Equation::new("adl3c", adl_b(&comp(&[&b.mu, &tens(&[bb, &b.lam])])), eta_db.clone()),
        Equation::new("adl4c", adl_b(&comp(&[&b.mu, &tens(&[&b.lam, bb])])), eta_db),
    ];
    [codistributive, simplified, monoidal, a_monoidal]
}

pub fn validate_codistributive_law(c: &CodistributiveLawData) -> ValidationReport {
    validate_codistributive_law_with(c, Exec::default())
}

pub fn validate_codistributive_law_with(c: &CodistributiveLawData, exec: Exec) -> ValidationReport {
    let [codistributive, simplified, monoidal, a_monoidal] = law_equations(c);
    let mut r = ValidationReport::new(format!("codistributive law of D (dim {}) over B (dim {})", c.d.dim, c.b.dim));
    run(&mut r, TIER_CODISTRIBUTIVE, &codistributive, exec);
    run(&mut r, TIER_SIMPLIFIED, &simplified, exec);
    if c.d.antipode.rank() == c.d.dim && c.b.antipode.rank() == c.b.dim {
        for (full, short) in [("dl1c", "dl1-1c"), ("dl2c", "dl2-1c")] {
            let (pf, ps) = (r.passed(full), r.passed(short));
            r.record_flag(
                TIER_SIMPLIFIED,
                &format!("{full}<=>{short}"),
                pf == ps,
                Some(format!("{full} {}, {short} {}", verdict(pf), verdict(ps))),
            );
        }
    }
    run(&mut r, TIER_MONOIDAL, &monoidal, exec);
    run(&mut r, TIER_A_MONOIDAL, &a_monoidal, exec);
    r
}

/// The wreath coproduct `D ⊗^Ω B`; refuses unless the law is a-monoidal.
pub fn wreath_coproduct(c: &CodistributiveLawData) -> Result<HopfCoquasigroupData> {
    if !c.is_a_monoidal() {
        return Err(Error::validation("codistributive law", c.report().clone()));
    }
    wreath_from_omega(&c.d, &c.b, &c.omega)
}

pub fn wreath_coproduct_unchecked(c: &CodistributiveLawData) -> Result<Unvalidated<HopfCoquasigroupData>> {
    Ok(Unvalidated {
        value: wreath_from_omega(&c.d, &c.b, &c.omega)?,
        report: c.report().clone(),
    })
}

/// `δ = (D ⊗ Ω ⊗ B)∘(δ_D ⊗ δ_B)`, `λ = c_{B,D}∘(λ_B ⊗ λ_D)∘Ω`, tensor unit,
/// product and counit.
pub(crate) fn wreath_from_omega(
    d: &HopfCoquasigroupData,
    b: &HopfCoquasigroupData,
    omega: &LinMap,
) -> Result<HopfCoquasigroupData> {
    let gd = d.gens("_D");
    let gb = b.gens("_B");
    let om = Diagram::map("Ω", omega);
    let coproduct = comp(&[&tens(&[&gd.id, &om, &gb.id]), &tens(&[&gd.delta, &gb.delta])]);
    let antipode = comp(&[&Diagram::swap(d.field, b.dim, d.dim), &tens(&[&gb.lam, &gd.lam]), &om]);
    let maps = assemble(
        [d.dim, b.dim],
        &gd.tensor_unit(&gb),
        &gd.tensor_product(&gb),
        &gd.tensor_counit(&gb),
        &coproduct,
        &antipode,
        tensor_labels(d.labels.as_deref(), b.labels.as_deref()),
    )?;
    Ok(HopfCoquasigroupData(maps))
}
