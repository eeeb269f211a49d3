use super::structure::{ComonoidData, Gens, HopfCoquasigroupData, HopfMaps, HopfQuasigroupData, UnitalMagmaData};
use crate::error::{Error, Result};
use crate::exactlin::{comp, tens, unflatten, Diagram, Equation, LinMap};
use crate::par::Exec;
use crate::report::ValidationReport;

pub const TIER_BIMONOID: &str = "bimonoid";
pub const TIER_ANTIPODE: &str = "antipode";
pub const TIER_PROPERTIES: &str = "antipode-properties";
pub const TIER_MORPHISM: &str = "morphism";
pub const TIER_CONSEQUENCE: &str = "consequence";

/// Checks each equation in order and records it under `tier`.
pub(crate) fn run(report: &mut ValidationReport, tier: &str, eqs: &[Equation], exec: Exec) {
    for eq in eqs {
        report.record(tier, &eq.id, eq.check(exec));
    }
}

fn bimonoid_equations(g: &Gens) -> Vec<Equation> {
    let Gens { id: h, eta, mu, eps, delta, c, .. } = g;
    vec![
        Equation::new("eta-eps", comp(&[eps, eta]), g.unit_obj.clone()),
        Equation::new("mu-eps", comp(&[eps, mu]), tens(&[eps, eps])),
        Equation::new("delta-eta", comp(&[delta, eta]), tens(&[eta, eta])),
        Equation::new(
            "delta-mu",
            comp(&[delta, mu]),
            comp(&[&tens(&[mu, mu]), &tens(&[h, c, h]), &tens(&[delta, delta])]),
        ),
        Equation::new("unit-left", comp(&[mu, &tens(&[eta, h])]), h.clone()),
        Equation::new("unit-right", comp(&[mu, &tens(&[h, eta])]), h.clone()),
        Equation::new("counit-left", comp(&[&tens(&[eps, h]), delta]), h.clone()),
        Equation::new("counit-right", comp(&[&tens(&[h, eps]), delta]), h.clone()),
    ]
}

fn coassociativity(g: &Gens) -> Equation {
    let Gens { id: h, delta, .. } = g;
    Equation::new(
        "coassociativity",
        comp(&[&tens(&[delta, h]), delta]),
        comp(&[&tens(&[h, delta]), delta]),
    )
}

fn associativity(g: &Gens) -> Equation {
    let Gens { id: h, mu, .. } = g;
    Equation::new(
        "associativity",
        comp(&[mu, &tens(&[mu, h])]),
        comp(&[mu, &tens(&[h, mu])]),
    )
}

/// The left and right quasigroup antipode identities.
fn quasigroup_equations(g: &Gens) -> Vec<Equation> {
    let Gens { id: h, mu, eps, delta, lam, .. } = g;
    vec![
        Equation::new(
            "lH.1",
            comp(&[mu, &tens(&[lam, mu]), &tens(&[delta, h])]),
            tens(&[eps, h]),
        ),
        Equation::new(
            "lH.2",
            comp(&[mu, &tens(&[h, mu]), &tens(&[h, lam, h]), &tens(&[delta, h])]),
            tens(&[eps, h]),
        ),
        Equation::new(
            "rH.1",
            comp(&[mu, &tens(&[mu, h]), &tens(&[h, lam, h]), &tens(&[h, delta])]),
            tens(&[h, eps]),
        ),
        Equation::new(
            "rH.2",
            comp(&[mu, &tens(&[mu, lam]), &tens(&[h, delta])]),
            tens(&[h, eps]),
        ),
    ]
}

/// The left and right coquasigroup antipode identities.
fn coquasigroup_equations(g: &Gens) -> Vec<Equation> {
    let Gens { id: h, eta, mu, delta, lam, .. } = g;
    vec![
        Equation::new(
            "clH.1",
            comp(&[&tens(&[h, mu]), &tens(&[delta, lam]), delta]),
            tens(&[h, eta]),
        ),
        Equation::new(
            "clH.2",
            comp(&[&tens(&[h, mu]), &tens(&[h, lam, h]), &tens(&[delta, h]), delta]),
            tens(&[h, eta]),
        ),
        Equation::new(
            "crH.1",
            comp(&[&tens(&[mu, h]), &tens(&[lam, delta]), delta]),
            tens(&[eta, h]),
        ),
        Equation::new(
            "crH.2",
            comp(&[&tens(&[mu, h]), &tens(&[h, lam, h]), &tens(&[h, delta]), delta]),
            tens(&[eta, h]),
        ),
    ]
}

pub fn validate_hopf_quasigroup(h: &HopfQuasigroupData) -> ValidationReport {
    validate_hopf_quasigroup_with(h, Exec::default())
}

pub fn validate_hopf_quasigroup_with(h: &HopfQuasigroupData, exec: Exec) -> ValidationReport {
    let g = h.gens("");
    let mut r = ValidationReport::new(format!("Hopf quasigroup axioms (dim {})", h.dim));
    let mut bimonoid = bimonoid_equations(&g);
    bimonoid.push(coassociativity(&g));
    run(&mut r, TIER_BIMONOID, &bimonoid, exec);
    run(&mut r, TIER_ANTIPODE, &quasigroup_equations(&g), exec);
    r
}

pub fn validate_hopf_coquasigroup(d: &HopfCoquasigroupData) -> ValidationReport {
    validate_hopf_coquasigroup_with(d, Exec::default())
}

pub fn validate_hopf_coquasigroup_with(d: &HopfCoquasigroupData, exec: Exec) -> ValidationReport {
    let g = d.gens("");
    let mut r = ValidationReport::new(format!("Hopf coquasigroup axioms (dim {})", d.dim));
    let mut bimonoid = bimonoid_equations(&g);
    bimonoid.push(associativity(&g));
    run(&mut r, TIER_BIMONOID, &bimonoid, exec);
    run(&mut r, TIER_ANTIPODE, &coquasigroup_equations(&g), exec);
    r
}

/// Only the non-associative bimonoid part (unital magma, comonoid, compatibility).
pub fn validate_bimonoid(h: &HopfMaps) -> ValidationReport {
    let mut r = ValidationReport::new(format!("bimonoid axioms (dim {})", h.dim));
    run(&mut r, TIER_BIMONOID, &bimonoid_equations(&h.gens("")), Exec::default());
    r
}

impl UnitalMagmaData {
    /// Unit laws, plus associativity reported separately (tier `monoid`).
    pub fn validate(&self) -> ValidationReport {
        let f = self.field();
        let h = Diagram::id(f, &[self.dim]);
        let eta = Diagram::map("η", &self.unit);
        let mu = Diagram::map("μ", &self.product);
        let mut r = ValidationReport::new(format!("unital magma (dim {})", self.dim));
        let eqs = [
            Equation::new("unit-left", comp(&[&mu, &tens(&[&eta, &h])]), h.clone()),
            Equation::new("unit-right", comp(&[&mu, &tens(&[&h, &eta])]), h.clone()),
        ];
        run(&mut r, "unital-magma", &eqs, Exec::default());
        let assoc = Equation::new(
            "associativity",
            comp(&[&mu, &tens(&[&mu, &h])]),
            comp(&[&mu, &tens(&[&h, &mu])]),
        );
        run(&mut r, "monoid", &[assoc], Exec::default());
        r
    }
}

impl ComonoidData {
    pub fn validate(&self) -> ValidationReport {
        let f = self.field();
        let h = Diagram::id(f, &[self.dim]);
        let eps = Diagram::map("ε", &self.counit);
        let delta = Diagram::map("δ", &self.coproduct);
        let mut r = ValidationReport::new(format!("comonoid (dim {})", self.dim));
        let eqs = [
            Equation::new("counit-left", comp(&[&tens(&[&eps, &h]), &delta]), h.clone()),
            Equation::new("counit-right", comp(&[&tens(&[&h, &eps]), &delta]), h.clone()),
            Equation::new(
                "coassociativity",
                comp(&[&tens(&[&delta, &h]), &delta]),
                comp(&[&tens(&[&h, &delta]), &delta]),
            ),
        ];
        run(&mut r, "comonoid", &eqs, Exec::default());
        r
    }
}

/// Antimultiplicativity, anticomultiplicativity, unit/counit invariance and
/// the convolution identities; also `λ² = id` when the object is commutative
/// or cocommutative.
pub fn check_antipode_properties(h: &HopfMaps) -> ValidationReport {
    check_antipode_properties_with(h, Exec::default())
}

pub fn check_antipode_properties_with(h: &HopfMaps, exec: Exec) -> ValidationReport {
    let g = h.gens("");
    let Gens { id, eta, mu, eps, delta, lam, c, .. } = &g;
    let eta_eps = comp(&[eta, eps]);
    let mut eqs = vec![
        Equation::new("antimu", comp(&[lam, mu]), comp(&[mu, &tens(&[lam, lam]), c])),
        Equation::new("anticm", comp(&[delta, lam]), comp(&[&tens(&[lam, lam]), c, delta])),
        Equation::new("lambda-eta", comp(&[lam, eta]), eta.clone()),
        Equation::new("eps-lambda", comp(&[eps, lam]), eps.clone()),
        Equation::new("1-conv", comp(&[mu, &tens(&[lam, id]), delta]), eta_eps.clone()),
        Equation::new("2-conv", comp(&[mu, &tens(&[id, lam]), delta]), eta_eps),
    ];
    let commutative = is_commutative_with(h, exec);
    let cocommutative = is_cocommutative_with(h, exec);
    if commutative || cocommutative {
        eqs.push(Equation::new("lambda-squared", comp(&[lam, lam]), id.clone()));
    }
    let mut r = ValidationReport::new(format!("antipode properties (dim {})", h.dim));
    run(&mut r, TIER_PROPERTIES, &eqs, exec);
    r
}

pub fn is_commutative(h: &HopfMaps) -> bool {
    is_commutative_with(h, Exec::default())
}

fn is_commutative_with(h: &HopfMaps, exec: Exec) -> bool {
    let g = h.gens("");
    Equation::new("commutative", g.mu.clone(), comp(&[&g.mu, &g.c])).check(exec).is_none()
}

pub fn is_cocommutative(h: &HopfMaps) -> bool {
    is_cocommutative_with(h, Exec::default())
}

fn is_cocommutative_with(h: &HopfMaps, exec: Exec) -> bool {
    let g = h.gens("");
    Equation::new("cocommutative", g.delta.clone(), comp(&[&g.c, &g.delta])).check(exec).is_none()
}

pub fn is_associative(h: &HopfMaps) -> bool {
    associativity_witness(h).is_none()
}

/// The first basis triple `(a, b, c)` with `(ab)c ≠ a(bc)`.
pub fn associativity_witness(h: &HopfMaps) -> Option<[usize; 3]> {
    associativity(&h.gens("")).check(Exec::default()).map(|w| {
        let t = unflatten(w.input, &[h.dim; 3]);
        [t[0], t[1], t[2]]
    })
}

pub fn is_coassociative(h: &HopfMaps) -> bool {
    coassociativity(&h.gens("")).check(Exec::default()).is_none()
}

/// Unit, product, counit and coproduct compatibility of `f: src → dst`, plus
/// the antipode compatibility that follows from them.
pub fn is_hopf_morphism(f: &LinMap, src: &HopfMaps, dst: &HopfMaps) -> Result<ValidationReport> {
    if f.cols() != src.dim || f.rows() != dst.dim {
        return Err(Error::Shape(format!(
            "morphism is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            dst.dim,
            src.dim
        )));
    }
    let f = f.reshape(vec![src.dim], vec![dst.dim])?;
    let fd = Diagram::map("f", &f);
    let s = src.gens("");
    let d = dst.gens("'");
    let ff = tens(&[&fd, &fd]);
    let eqs = [
        Equation::new("unit", comp(&[&fd, &s.eta]), d.eta.clone()),
        Equation::new("multiplicative", comp(&[&fd, &s.mu]), comp(&[&d.mu, &ff])),
        Equation::new("counit", comp(&[&d.eps, &fd]), s.eps.clone()),
        Equation::new("comultiplicative", comp(&[&d.delta, &fd]), comp(&[&ff, &s.delta])),
    ];
    let mut r = ValidationReport::new(format!("morphism {} -> {}", src.dim, dst.dim));
    run(&mut r, TIER_MORPHISM, &eqs, Exec::default());
    let anti = Equation::new("antipode-morphism", comp(&[&d.lam, &fd]), comp(&[&fd, &s.lam]));
    run(&mut r, TIER_CONSEQUENCE, &[anti], Exec::default());
    Ok(r)
}
