use super::stages::Pipeline;
use crate::error::{Error, Result};
use crate::exactlin::{comp, tens, Diagram, Equation, LinMap};
use crate::hopf::{is_hopf_morphism, run, validate_hopf_quasigroup, HopfQuasigroupData, TIER_MORPHISM};
use crate::par::Exec;
use crate::products::distributive::TIER_A_COMONOIDAL;
use crate::products::{validate_matched_pair, wreath_product, DistributiveLawData, MatchedPairData};
use crate::report::ValidationReport;

pub const TIER_FACTORIZATION: &str = "factorization";
pub const TIER_FINITE: &str = "finite";

/// A candidate factorization `X = AH` through the inclusions `i_A`, `i_H`.
#[derive(Clone, Debug)]
pub struct FactorizationData {
    pub x: HopfQuasigroupData,
    pub a: HopfQuasigroupData,
    pub h: HopfQuasigroupData,
    pub i_a: LinMap,
    pub i_h: LinMap,
    omega: LinMap,
    theta: LinMap,
}

impl FactorizationData {
    pub fn new(
        x: HopfQuasigroupData,
        a: HopfQuasigroupData,
        h: HopfQuasigroupData,
        i_a: LinMap,
        i_h: LinMap,
    ) -> Result<Self> {
        let fit = |m: &LinMap, n: usize, what: &str| {
            if m.field() != x.field || a.field != x.field || h.field != x.field {
                return Err(Error::Field("X, A, H and the inclusions must share a field".into()));
            }
            m.reshape(vec![n], vec![x.dim]).map_err(|_| {
                Error::Shape(format!("{what} should be [{n}] -> [{}], got {}x{}", x.dim, m.rows(), m.cols()))
            })
        };
        let i_a = fit(&i_a, a.dim, "i_A")?;
        let i_h = fit(&i_h, h.dim, "i_H")?;
        let g = x.gens("_X");
        let (ia, ih) = (Diagram::map("i_A", &i_a), Diagram::map("i_H", &i_h));
        let ex = Exec::default();
        let omega = comp(&[&g.mu, &tens(&[&ia, &ih])]).to_linmap(ex);
        let theta = comp(&[&g.mu, &tens(&[&ih, &ia])]).to_linmap(ex);
        Ok(FactorizationData { x, a, h, i_a, i_h, omega, theta })
    }

    /// `X = A ⋈ H` with `i_A = A ⊗ η_H` and `i_H = η_A ⊗ H`.
    pub fn canonical(mp: &MatchedPairData, x: HopfQuasigroupData) -> Result<Self> {
        let i_a = LinMap::identity(x.field, &[mp.a.dim]).kron(&mp.h.unit)?;
        let i_h = mp.a.unit.kron(&LinMap::identity(x.field, &[mp.h.dim]))?;
        FactorizationData::new(x, mp.a.clone(), mp.h.clone(), i_a, i_h)
    }

    /// `ω = μ_X∘(i_A ⊗ i_H): A ⊗ H → X`
    pub fn omega(&self) -> &LinMap {
        &self.omega
    }

    /// `θ = μ_X∘(i_H ⊗ i_A): H ⊗ A → X`
    pub fn theta(&self) -> &LinMap {
        &self.theta
    }

    /// Both inclusions must be injective Hopf morphisms.
    pub fn check_inclusions(&self) -> Result<()> {
        for (name, i, src) in [("i_A", &self.i_a, &self.a), ("i_H", &self.i_h, &self.h)] {
            let r = is_hopf_morphism(i, src, &self.x)?;
            if !r.tier_passed(TIER_MORPHISM) {
                let failed: Vec<_> = r.failures().filter(|e| e.tier == TIER_MORPHISM).map(|e| e.axiom.clone()).collect();
                return Err(Error::Precondition(format!("{name} is not a morphism: {} fails", failed.join(", "))));
            }
            if i.rank() != src.dim {
                return Err(Error::Precondition(format!("{name} is not injective (rank {} of {})", i.rank(), src.dim)));
            }
        }
        Ok(())
    }

    fn antipodes_invertible(&self) -> bool {
        self.a.antipode.rank() == self.a.dim && self.h.antipode.rank() == self.h.dim
    }
}

fn conditions(f: &FactorizationData) -> (Vec<Equation>, Vec<Equation>) {
    let g = f.x.gens("_X");
    let (mu, xx) = (&g.mu, &g.id);
    let ia = Diagram::map("i_A", &f.i_a);
    let ih = Diagram::map("i_H", &f.i_h);
    let om = Diagram::map("ω", &f.omega);
    let th = Diagram::map("θ", &f.theta);
    let lam_h = Diagram::map("λ_H", &f.h.antipode);
    let lam_a = Diagram::map("λ_A", &f.a.antipode);
    let th_lam = comp(&[&th, &tens(&[&lam_h, &lam_a])]);
    let ia_lam = comp(&[&ia, &lam_a]);
    let ih_lam = comp(&[&ih, &lam_h]);
    let main = vec![
        Equation::new(
            "factq1",
            comp(&[mu, &tens(&[&om, xx])]),
            comp(&[mu, &tens(&[&ia, &comp(&[mu, &tens(&[&ih, xx])])])]),
        ),
        Equation::new(
            "factq2",
            comp(&[mu, &tens(&[xx, &om])]),
            comp(&[mu, &tens(&[&comp(&[mu, &tens(&[xx, &ia])]), &ih])]),
        ),
        Equation::new(
            "factq3",
            comp(&[mu, &tens(&[&th_lam, xx])]),
            comp(&[mu, &tens(&[&ih_lam, &comp(&[mu, &tens(&[&ia_lam, xx])])])]),
        ),
        Equation::new(
            "factq4",
            comp(&[mu, &tens(&[xx, &th_lam])]),
            comp(&[mu, &tens(&[&comp(&[mu, &tens(&[xx, &ih_lam])]), &ia_lam])]),
        ),
    ];
    let finite = vec![
        Equation::new(
            "factq31",
            comp(&[mu, &tens(&[&th, xx])]),
            comp(&[mu, &tens(&[&ih, &comp(&[mu, &tens(&[&ia, xx])])])]),
        ),
        Equation::new(
            "factq41",
            comp(&[mu, &tens(&[xx, &th])]),
            comp(&[mu, &tens(&[&comp(&[mu, &tens(&[xx, &ih])]), &ia])]),
        ),
    ];
    (main, finite)
}

/// Invertibility of `ω` and the factorization identities, including the
/// forms without antipodes.
pub fn check_factorization(f: &FactorizationData) -> Result<ValidationReport> {
    f.check_inclusions()?;
    let exec = Exec::default();
    let mut r = ValidationReport::new(format!("factorization of X (dim {}) as A (dim {}) H (dim {})", f.x.dim, f.a.dim, f.h.dim));
    let rank = f.omega.rank();
    let size = f.x.dim;
    r.record_flag(
        TIER_FACTORIZATION,
        "omega-invertible",
        f.omega.is_square() && rank == size,
        Some(format!("rank {rank} of {size}, ω is {}x{}", f.omega.rows(), f.omega.cols())),
    );
    let (main, finite) = conditions(f);
    run(&mut r, TIER_FACTORIZATION, &main, exec);
    run(&mut r, TIER_FINITE, &finite, exec);
    if f.antipodes_invertible() {
        for (full, short) in [("factq3", "factq31"), ("factq4", "factq41")] {
            let (pf, ps) = (r.passed(full), r.passed(short));
            r.record_flag(TIER_FINITE, &format!("{full}<=>{short}"), pf == ps, None);
        }
    }
    Ok(r)
}

/// `Ψ = ω⁻¹∘θ`.
pub fn extract_distributive_law(f: &FactorizationData) -> Result<DistributiveLawData> {
    let report = check_factorization(f)?;
    if !report.passed("omega-invertible") {
        return Err(Error::NotFactorization(
            report.entry("omega-invertible").and_then(|e| e.detail.clone()).unwrap_or_default(),
        ));
    }
    if !report.all_passed() {
        return Err(Error::validation("factorization", report));
    }
    let psi = f.omega.invert()?.compose(&f.theta)?;
    DistributiveLawData::new(f.h.clone(), f.a.clone(), psi)
}

/// `φ_A = (A ⊗ ε_H)∘Ψ` and `φ_H = (ε_A ⊗ H)∘Ψ`.
pub fn extract_matched_pair(f: &FactorizationData) -> Result<MatchedPairData> {
    let law = extract_distributive_law(f)?;
    if !law.report().all_passed() {
        return Err(Error::validation("extracted distributive law", law.report().clone()));
    }
    matched_pair_of_law(&law)
}

fn matched_pair_of_law(law: &DistributiveLawData) -> Result<MatchedPairData> {
    let field = law.a.field;
    let phi_a = LinMap::identity(field, &[law.a.dim]).kron(&law.h.counit)?.compose(&law.psi)?;
    let phi_h = law.a.counit.kron(&LinMap::identity(field, &[law.h.dim]))?.compose(&law.psi)?;
    MatchedPairData::new(law.a.clone(), law.h.clone(), phi_a, phi_h)
}

/// Runs the whole chain on one instance, halting at the first failing stage.
pub fn verify_factorization_theorem(f: &FactorizationData) -> ValidationReport {
    let mut p = Pipeline::new(format!("factorization theorem for X (dim {})", f.x.dim));

    let check = match check_factorization(f) {
        Ok(r) => r,
        Err(e) => return p.refuse("inclusions", &e.to_string()),
    };
    if !p.stage("check", check) {
        return p.finish();
    }

    let mut hyp = ValidationReport::new("antipodes");
    for (name, o) in [("λ_A invertible", &f.a), ("λ_H invertible", &f.h)] {
        let rank = o.antipode.rank();
        hyp.record_flag("antipodes", name, rank == o.dim, Some(format!("rank {rank} of {}", o.dim)));
    }
    if !p.stage("hypotheses", hyp) {
        return p.finish();
    }

    let law = match extract_distributive_law(f) {
        Ok(l) => l,
        Err(e) => return p.refuse("distributive-law", &e.to_string()),
    };
    let mut lr = law.report().clone();
    let back = f.omega.compose(&law.psi).expect("ω and Ψ compose");
    lr.record_flag("recomposition", "omega-psi-theta", back.same_matrix(&f.theta), Some("ω∘Ψ = θ".into()));
    lr.record_flag(
        "recomposition",
        "a-comonoidal",
        lr.tier_passed(TIER_A_COMONOIDAL),
        Some("expected since both antipodes are invertible".into()),
    );
    if !p.stage("distributive-law", lr) {
        return p.finish();
    }

    let w = match wreath_product(&law) {
        Ok(w) => w,
        Err(e) => return p.refuse("wreath-product", &e.to_string()),
    };
    if !p.stage("wreath-product", validate_hopf_quasigroup(&w)) {
        return p.finish();
    }

    let mut iso = match is_hopf_morphism(&f.omega, &w, &f.x) {
        Ok(r) => r,
        Err(e) => return p.refuse("isomorphism", &e.to_string()),
    };
    let rank = f.omega.rank();
    iso.record_flag("bijective", "omega-bijective", rank == f.x.dim, Some(format!("rank {rank} of {}", f.x.dim)));
    if !p.stage("isomorphism", iso) {
        return p.finish();
    }

    let mp = match matched_pair_of_law(&law) {
        Ok(m) => m,
        Err(e) => return p.refuse("matched-pair", &e.to_string()),
    };
    let mut mr = validate_matched_pair(&mp);
    mr.record_flag("reconstruction", "psi-from-actions", mp.psi().same_matrix(&law.psi), None);
    if !p.stage("matched-pair", mr) {
        return p.finish();
    }

    p.stage("comonoid-morphisms", comonoid_morphism_report(f));
    p.finish()
}

/// `ω` and `θ` commute with the coproducts and counits.
fn comonoid_morphism_report(f: &FactorizationData) -> ValidationReport {
    let x = f.x.gens("_X");
    let a = f.a.gens("_A");
    let h = f.h.gens("_H");
    let om = Diagram::map("ω", &f.omega);
    let th = Diagram::map("θ", &f.theta);
    let eqs = [
        Equation::new("omega-delta", comp(&[&x.delta, &om]), comp(&[&tens(&[&om, &om]), &a.tensor_coproduct(&h)])),
        Equation::new("omega-eps", comp(&[&x.eps, &om]), a.tensor_counit(&h)),
        Equation::new("theta-delta", comp(&[&x.delta, &th]), comp(&[&tens(&[&th, &th]), &h.tensor_coproduct(&a)])),
        Equation::new("theta-eps", comp(&[&x.eps, &th]), h.tensor_counit(&a)),
    ];
    let mut r = ValidationReport::new("ω and θ as comonoid morphisms");
    run(&mut r, "comonoid-morphism", &eqs, Exec::default());
    r
}
