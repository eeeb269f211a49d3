use super::factorization::FactorizationData;
use super::stages::Pipeline;
use crate::error::{Error, Result};
use crate::exactlin::{comp, tens, Diagram, Equation, LinMap};
use crate::hopf::{dualize, is_hopf_morphism, run, validate_hopf_coquasigroup, HopfCoquasigroupData, TIER_MORPHISM};
use crate::par::Exec;
use crate::products::codistributive::TIER_A_MONOIDAL;
use crate::products::{validate_comatched_pair, wreath_coproduct, CodistributiveLawData, ComatchedPairData};
use crate::report::ValidationReport;

pub const TIER_COFACTORIZATION: &str = "cofactorization";
pub const TIER_FINITE: &str = "finite";

/// A candidate cofactorization `Y = D • B` through the projections `p_D`, `p_B`.
#[derive(Clone, Debug)]
pub struct CofactorizationData {
    pub y: HopfCoquasigroupData,
    pub d: HopfCoquasigroupData,
    pub b: HopfCoquasigroupData,
    pub p_d: LinMap,
    pub p_b: LinMap,
    u: LinMap,
    v: LinMap,
}

impl CofactorizationData {
    pub fn new(
        y: HopfCoquasigroupData,
        d: HopfCoquasigroupData,
        b: HopfCoquasigroupData,
        p_d: LinMap,
        p_b: LinMap,
    ) -> Result<Self> {
        let fit = |m: &LinMap, n: usize, what: &str| {
            if m.field() != y.field || d.field != y.field || b.field != y.field {
                return Err(Error::Field("Y, D, B and the projections must share a field".into()));
            }
            m.reshape(vec![y.dim], vec![n]).map_err(|_| {
                Error::Shape(format!("{what} should be [{}] -> [{n}], got {}x{}", y.dim, m.rows(), m.cols()))
            })
        };
        let p_d = fit(&p_d, d.dim, "p_D")?;
        let p_b = fit(&p_b, b.dim, "p_B")?;
        let g = y.gens("_Y");
        let (pd, pb) = (Diagram::map("p_D", &p_d), Diagram::map("p_B", &p_b));
        let ex = Exec::default();
        let u = comp(&[&tens(&[&pd, &pb]), &g.delta]).to_linmap(ex);
        let v = comp(&[&tens(&[&pb, &pd]), &g.delta]).to_linmap(ex);
        Ok(CofactorizationData { y, d, b, p_d, p_b, u, v })
    }

    /// `Y = D ⋈ B` with `p_D = D ⊗ ε_B` and `p_B = ε_D ⊗ B`.
    pub fn canonical(cp: &ComatchedPairData, y: HopfCoquasigroupData) -> Result<Self> {
        let p_d = LinMap::identity(y.field, &[cp.d.dim]).kron(&cp.b.counit)?;
        let p_b = cp.d.counit.kron(&LinMap::identity(y.field, &[cp.b.dim]))?;
        CofactorizationData::new(y, cp.d.clone(), cp.b.clone(), p_d, p_b)
    }

    /// `u = (p_D ⊗ p_B)∘δ_Y: Y → D ⊗ B`
    pub fn u(&self) -> &LinMap {
        &self.u
    }

    /// `v = (p_B ⊗ p_D)∘δ_Y: Y → B ⊗ D`
    pub fn v(&self) -> &LinMap {
        &self.v
    }

    /// Both projections must be surjective Hopf morphisms.
    pub fn check_projections(&self) -> Result<()> {
        for (name, p, dst) in [("p_D", &self.p_d, &self.d), ("p_B", &self.p_b, &self.b)] {
            let r = is_hopf_morphism(p, &self.y, dst)?;
            if !r.tier_passed(TIER_MORPHISM) {
                let failed: Vec<_> = r.failures().filter(|e| e.tier == TIER_MORPHISM).map(|e| e.axiom.clone()).collect();
                return Err(Error::Precondition(format!("{name} is not a morphism: {} fails", failed.join(", "))));
            }
            if p.rank() != dst.dim {
                return Err(Error::Precondition(format!("{name} is not surjective (rank {} of {})", p.rank(), dst.dim)));
            }
        }
        Ok(())
    }

    fn antipodes_invertible(&self) -> bool {
        self.d.antipode.rank() == self.d.dim && self.b.antipode.rank() == self.b.dim
    }
}

impl FactorizationData {
    /// The transposed data: `Y = X*`, `D = A*`, `B = H*`, `p_D = i_Aᵀ`, `p_B = i_Hᵀ`.
    pub fn dual(&self) -> Result<CofactorizationData> {
        CofactorizationData::new(
            dualize(&self.x),
            dualize(&self.a),
            dualize(&self.h),
            self.i_a.transpose(),
            self.i_h.transpose(),
        )
    }
}

fn conditions(c: &CofactorizationData) -> (Vec<Equation>, Vec<Equation>) {
    let g = c.y.gens("_Y");
    let (delta, yy) = (&g.delta, &g.id);
    let pd = Diagram::map("p_D", &c.p_d);
    let pb = Diagram::map("p_B", &c.p_b);
    let u = Diagram::map("u", &c.u);
    let v = Diagram::map("v", &c.v);
    let lam_b = Diagram::map("λ_B", &c.b.antipode);
    let lam_d = Diagram::map("λ_D", &c.d.antipode);
    let lam_v = comp(&[&tens(&[&lam_b, &lam_d]), &v]);
    let pb_lam = comp(&[&lam_b, &pb]);
    let pd_lam = comp(&[&lam_d, &pd]);
    let right = |first: &Diagram, second: &Diagram| {
        comp(&[&tens(&[&comp(&[&tens(&[yy, first]), delta]), second]), delta])
    };
    let left = |first: &Diagram, second: &Diagram| {
        comp(&[&tens(&[first, &comp(&[&tens(&[second, yy]), delta])]), delta])
    };
    let main = vec![
        Equation::new("cfactq1", comp(&[&tens(&[yy, &u]), delta]), right(&pd, &pb)),
        Equation::new("cfactq2", comp(&[&tens(&[&u, yy]), delta]), left(&pd, &pb)),
        Equation::new("cfactq3", comp(&[&tens(&[yy, &lam_v]), delta]), right(&pb_lam, &pd_lam)),
        Equation::new("cfactq4", comp(&[&tens(&[&lam_v, yy]), delta]), left(&pb_lam, &pd_lam)),
    ];
    let finite = vec![
        Equation::new("cfactq31", comp(&[&tens(&[yy, &v]), delta]), right(&pb, &pd)),
        Equation::new("cfactq41", comp(&[&tens(&[&v, yy]), delta]), left(&pb, &pd)),
    ];
    (main, finite)
}

/// Invertibility of `u` and the cofactorization identities, including the
/// forms without antipodes.
pub fn check_cofactorization(c: &CofactorizationData) -> Result<ValidationReport> {
    c.check_projections()?;
    let exec = Exec::default();
    let mut r =
        ValidationReport::new(format!("cofactorization of Y (dim {}) as D (dim {}) B (dim {})", c.y.dim, c.d.dim, c.b.dim));
    let rank = c.u.rank();
    let size = c.y.dim;
    r.record_flag(
        TIER_COFACTORIZATION,
        "u-invertible",
        c.u.is_square() && rank == size,
        Some(format!("rank {rank} of {size}, u is {}x{}", c.u.rows(), c.u.cols())),
    );
    let (main, finite) = conditions(c);
    run(&mut r, TIER_COFACTORIZATION, &main, exec);
    run(&mut r, TIER_FINITE, &finite, exec);
    if c.antipodes_invertible() {
        for (full, short) in [("cfactq3", "cfactq31"), ("cfactq4", "cfactq41")] {
            let (pf, ps) = (r.passed(full), r.passed(short));
            r.record_flag(TIER_FINITE, &format!("{full}<=>{short}"), pf == ps, None);
        }
    }
    Ok(r)
}

/// `Ω = v∘u⁻¹`.
pub fn extract_codistributive_law(c: &CofactorizationData) -> Result<CodistributiveLawData> {
    let report = check_cofactorization(c)?;
    if !report.passed("u-invertible") {
        return Err(Error::NotFactorization(
            report.entry("u-invertible").and_then(|e| e.detail.clone()).unwrap_or_default(),
        ));
    }
    if !report.all_passed() {
        return Err(Error::validation("cofactorization", report));
    }
    let omega = c.v.compose(&c.u.invert()?)?;
    CodistributiveLawData::new(c.d.clone(), c.b.clone(), omega)
}

/// `r_D = Ω∘(D ⊗ η_B)` and `ρ_B = Ω∘(η_D ⊗ B)`.
pub fn extract_comatched_pair(c: &CofactorizationData) -> Result<ComatchedPairData> {
    let law = extract_codistributive_law(c)?;
    if !law.report().all_passed() {
        return Err(Error::validation("extracted codistributive law", law.report().clone()));
    }
    comatched_pair_of_law(&law)
}

fn comatched_pair_of_law(law: &CodistributiveLawData) -> Result<ComatchedPairData> {
    let field = law.d.field;
    let r_d = law.omega.compose(&LinMap::identity(field, &[law.d.dim]).kron(&law.b.unit)?)?;
    let rho_b = law.omega.compose(&law.d.unit.kron(&LinMap::identity(field, &[law.b.dim]))?)?;
    ComatchedPairData::new(law.b.clone(), law.d.clone(), rho_b, r_d)
}

/// Runs the whole dual chain on one instance, halting at the first failing
/// stage.
pub fn verify_cofactorization_theorem(c: &CofactorizationData) -> ValidationReport {
    let mut p = Pipeline::new(format!("cofactorization theorem for Y (dim {})", c.y.dim));

    let check = match check_cofactorization(c) {
        Ok(r) => r,
        Err(e) => return p.refuse("projections", &e.to_string()),
    };
    if !p.stage("check", check) {
        return p.finish();
    }

    let mut hyp = ValidationReport::new("antipodes");
    for (name, o) in [("λ_D invertible", &c.d), ("λ_B invertible", &c.b)] {
        let rank = o.antipode.rank();
        hyp.record_flag("antipodes", name, rank == o.dim, Some(format!("rank {rank} of {}", o.dim)));
    }
    if !p.stage("hypotheses", hyp) {
        return p.finish();
    }

    let law = match extract_codistributive_law(c) {
        Ok(l) => l,
        Err(e) => return p.refuse("codistributive-law", &e.to_string()),
    };
    let mut lr = law.report().clone();
    let back = law.omega.compose(&c.u).expect("Ω and u compose");
    lr.record_flag("recomposition", "omega-u-v", back.same_matrix(&c.v), Some("Ω∘u = v".into()));
    lr.record_flag(
        "recomposition",
        "a-monoidal",
        lr.tier_passed(TIER_A_MONOIDAL),
        Some("expected since both antipodes are invertible".into()),
    );
    if !p.stage("codistributive-law", lr) {
        return p.finish();
    }

    let w = match wreath_coproduct(&law) {
        Ok(w) => w,
        Err(e) => return p.refuse("wreath-coproduct", &e.to_string()),
    };
    if !p.stage("wreath-coproduct", validate_hopf_coquasigroup(&w)) {
        return p.finish();
    }

    let mut iso = match is_hopf_morphism(&c.u, &c.y, &w) {
        Ok(r) => r,
        Err(e) => return p.refuse("isomorphism", &e.to_string()),
    };
    let rank = c.u.rank();
    iso.record_flag("bijective", "u-bijective", rank == c.y.dim, Some(format!("rank {rank} of {}", c.y.dim)));
    if !p.stage("isomorphism", iso) {
        return p.finish();
    }

    let cp = match comatched_pair_of_law(&law) {
        Ok(m) => m,
        Err(e) => return p.refuse("comatched-pair", &e.to_string()),
    };
    let mut cr = validate_comatched_pair(&cp);
    cr.record_flag("reconstruction", "omega-from-coactions", cp.omega().same_matrix(&law.omega), None);
    if !p.stage("comatched-pair", cr) {
        return p.finish();
    }

    p.stage("monoid-morphisms", monoid_morphism_report(c));
    p.finish()
}

/// `u` and `v` commute with the products and units.
fn monoid_morphism_report(c: &CofactorizationData) -> ValidationReport {
    let y = c.y.gens("_Y");
    let d = c.d.gens("_D");
    let b = c.b.gens("_B");
    let u = Diagram::map("u", &c.u);
    let v = Diagram::map("v", &c.v);
    let eqs = [
        Equation::new("u-mu", comp(&[&u, &y.mu]), comp(&[&d.tensor_product(&b), &tens(&[&u, &u])])),
        Equation::new("u-eta", comp(&[&u, &y.eta]), d.tensor_unit(&b)),
        Equation::new("v-mu", comp(&[&v, &y.mu]), comp(&[&b.tensor_product(&d), &tens(&[&v, &v])])),
        Equation::new("v-eta", comp(&[&v, &y.eta]), b.tensor_unit(&d)),
    ];
    let mut r = ValidationReport::new("u and v as monoid morphisms");
    run(&mut r, "monoid-morphism", &eqs, Exec::default());
    r
}
