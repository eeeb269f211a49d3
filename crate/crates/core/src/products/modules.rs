use crate::error::{Error, Result};
use crate::exactlin::{comp, tens, Diagram, Equation, LinMap};
use crate::hopf::{run, HopfMaps};
use crate::par::Exec;
use crate::report::ValidationReport;

pub const TIER_QUASIMODULE: &str = "quasimodule";
pub const TIER_MODULE: &str = "module";
pub const TIER_MODULE_MAGMA: &str = "module-magma";
pub const TIER_MODULE_COMONOID: &str = "module-comonoid";
pub const TIER_QUASICOMODULE: &str = "quasicomodule";
pub const TIER_COMODULE: &str = "comodule";
pub const TIER_COMODULE_COMAGMA: &str = "comodule-comagma";
pub const TIER_COMODULE_MONOID: &str = "comodule-monoid";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `Module` adds the strict associativity of the action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Quasimodule,
    Module,
}

/// The space acted on: bare, or with its own structure maps, in which case
/// the (co)magma and (co)monoid compatibility identities are checked too.
#[derive(Clone, Copy, Debug)]
pub enum ModuleObject<'a> {
    Plain(usize),
    Structured(&'a HopfMaps),
}

impl ModuleObject<'_> {
    fn dim(&self) -> usize {
        match self {
            ModuleObject::Plain(n) => *n,
            ModuleObject::Structured(m) => m.dim,
        }
    }
}

fn shaped(m: &LinMap, dom: Vec<usize>, cod: Vec<usize>, what: &str) -> Result<LinMap> {
    m.reshape(dom.clone(), cod.clone())
        .map_err(|_| Error::Shape(format!("{what} should be {dom:?} -> {cod:?}, got {}x{}", m.rows(), m.cols())))
}

/// Checks `φ: H ⊗ M → M` (left) or `φ: M ⊗ H → M` (right).
pub fn validate_quasimodule(
    action: &LinMap,
    h: &HopfMaps,
    m: ModuleObject<'_>,
    flavor: Flavor,
    side: Side,
) -> Result<ValidationReport> {
    quasimodule_report(action, h, m, flavor, side, Exec::default())
}

pub(crate) fn quasimodule_report(
    action: &LinMap,
    h: &HopfMaps,
    m: ModuleObject<'_>,
    flavor: Flavor,
    side: Side,
    exec: Exec,
) -> Result<ValidationReport> {
    let (nh, nm) = (h.dim, m.dim());
    let dom = match side {
        Side::Left => vec![nh, nm],
        Side::Right => vec![nm, nh],
    };
    let action = shaped(action, dom, vec![nm], "action")?;
    let f = h.field;
    let g = h.gens("_H");
    let p = Diagram::map("φ", &action);
    let mm = Diagram::id(f, &[nm]);
    let hh = &g.id;

    let (quasi, module) = match side {
        Side::Left => (
            vec![
                Equation::new("uq", comp(&[&p, &tens(&[&g.eta, &mm])]), mm.clone()),
                Equation::new(
                    "pq.1",
                    comp(&[&p, &tens(&[hh, &p]), &tens(&[&comp(&[&tens(&[hh, &g.lam]), &g.delta]), &mm])]),
                    tens(&[&g.eps, &mm]),
                ),
                Equation::new(
                    "pq.2",
                    comp(&[&p, &tens(&[&g.lam, &p]), &tens(&[&g.delta, &mm])]),
                    tens(&[&g.eps, &mm]),
                ),
            ],
            Equation::new("pqmod", comp(&[&p, &tens(&[hh, &p])]), comp(&[&p, &tens(&[&g.mu, &mm])])),
        ),
        Side::Right => (
            vec![
                Equation::new("uq", comp(&[&p, &tens(&[&mm, &g.eta])]), mm.clone()),
                Equation::new(
                    "pq.1",
                    comp(&[&p, &tens(&[&p, hh]), &tens(&[&mm, &comp(&[&tens(&[&g.lam, hh]), &g.delta])])]),
                    tens(&[&mm, &g.eps]),
                ),
                Equation::new(
                    "pq.2",
                    comp(&[&p, &tens(&[&p, &g.lam]), &tens(&[&mm, &g.delta])]),
                    tens(&[&mm, &g.eps]),
                ),
            ],
            Equation::new("pqmod", comp(&[&p, &tens(&[&p, hh])]), comp(&[&p, &tens(&[&mm, &g.mu])])),
        ),
    };

    let side_name = match side {
        Side::Left => "left",
        Side::Right => "right",
    };
    let mut r = ValidationReport::new(format!("{side_name} action of a {nh}-dimensional object on dimension {nm}"));
    run(&mut r, TIER_QUASIMODULE, &quasi, exec);
    if flavor == Flavor::Module {
        run(&mut r, TIER_MODULE, &[module], exec);
    }

    if let ModuleObject::Structured(obj) = m {
        if obj.field != f {
            return Err(Error::Field("acting object and module must share a field".into()));
        }
        let o = obj.gens("_M");
        let (magma, comonoid) = match side {
            Side::Left => {
                // The diagonal action on M ⊗ M.
                let pmm = comp(&[
                    &tens(&[&p, &p]),
                    &tens(&[hh, &Diagram::swap(f, nh, nm), &mm]),
                    &tens(&[&g.delta, &mm, &mm]),
                ]);
                (
                    vec![
                        Equation::new("etaq", comp(&[&p, &tens(&[hh, &o.eta])]), tens(&[&g.eps, &o.eta])),
                        Equation::new("muq", comp(&[&o.mu, &pmm]), comp(&[&p, &tens(&[hh, &o.mu])])),
                    ],
                    vec![
                        Equation::new("eq", comp(&[&o.eps, &p]), tens(&[&g.eps, &o.eps])),
                        Equation::new("dq", comp(&[&o.delta, &p]), comp(&[&pmm, &tens(&[hh, &o.delta])])),
                    ],
                )
            }
            Side::Right => {
                let pmm = comp(&[
                    &tens(&[&p, &p]),
                    &tens(&[&mm, &Diagram::swap(f, nm, nh), hh]),
                    &tens(&[&mm, &mm, &g.delta]),
                ]);
                (
                    vec![
                        Equation::new("etaq", comp(&[&p, &tens(&[&o.eta, hh])]), tens(&[&o.eta, &g.eps])),
                        Equation::new("muq", comp(&[&o.mu, &pmm]), comp(&[&p, &tens(&[&o.mu, hh])])),
                    ],
                    vec![
                        Equation::new("eq", comp(&[&o.eps, &p]), tens(&[&o.eps, &g.eps])),
                        Equation::new("dq", comp(&[&o.delta, &p]), comp(&[&pmm, &tens(&[&o.delta, hh])])),
                    ],
                )
            }
        };
        run(&mut r, TIER_MODULE_MAGMA, &magma, exec);
        run(&mut r, TIER_MODULE_COMONOID, &comonoid, exec);
    }
    Ok(r)
}

/// Checks `ρ: M → C ⊗ M` (left) or `ρ: M → M ⊗ C` (right).
pub fn validate_quasicomodule(
    coaction: &LinMap,
    c: &HopfMaps,
    m: ModuleObject<'_>,
    flavor: Flavor,
    side: Side,
) -> Result<ValidationReport> {
    quasicomodule_report(coaction, c, m, flavor, side, Exec::default())
}

pub(crate) fn quasicomodule_report(
    coaction: &LinMap,
    c: &HopfMaps,
    m: ModuleObject<'_>,
    flavor: Flavor,
    side: Side,
    exec: Exec,
) -> Result<ValidationReport> {
    let (nc, nm) = (c.dim, m.dim());
    let cod = match side {
        Side::Left => vec![nc, nm],
        Side::Right => vec![nm, nc],
    };
    let coaction = shaped(coaction, vec![nm], cod, "coaction")?;
    let f = c.field;
    let g = c.gens("_C");
    let p = Diagram::map("ρ", &coaction);
    let mm = Diagram::id(f, &[nm]);
    let cc = &g.id;

    let (quasi, comodule) = match side {
        Side::Left => (
            vec![
                Equation::new("uqc", comp(&[&tens(&[&g.eps, &mm]), &p]), mm.clone()),
                Equation::new(
                    "pqc.1",
                    comp(&[&tens(&[&comp(&[&g.mu, &tens(&[cc, &g.lam])]), &mm]), &tens(&[cc, &p]), &p]),
                    tens(&[&g.eta, &mm]),
                ),
                Equation::new(
                    "pqc.2",
                    comp(&[&tens(&[&g.mu, &mm]), &tens(&[&g.lam, &p]), &p]),
                    tens(&[&g.eta, &mm]),
                ),
            ],
            Equation::new("pqmodc", comp(&[&tens(&[cc, &p]), &p]), comp(&[&tens(&[&g.delta, &mm]), &p])),
        ),
        Side::Right => (
            vec![
                Equation::new("uqc", comp(&[&tens(&[&mm, &g.eps]), &p]), mm.clone()),
                Equation::new(
                    "pqc.1",
                    comp(&[&tens(&[&mm, &comp(&[&g.mu, &tens(&[&g.lam, cc])])]), &tens(&[&p, cc]), &p]),
                    tens(&[&mm, &g.eta]),
                ),
                Equation::new(
                    "pqc.2",
                    comp(&[&tens(&[&mm, &g.mu]), &tens(&[&p, &g.lam]), &p]),
                    tens(&[&mm, &g.eta]),
                ),
            ],
            Equation::new("pqmodc", comp(&[&tens(&[&p, cc]), &p]), comp(&[&tens(&[&mm, &g.delta]), &p])),
        ),
    };

    let side_name = match side {
        Side::Left => "left",
        Side::Right => "right",
    };
    let mut r = ValidationReport::new(format!("{side_name} coaction of a {nc}-dimensional object on dimension {nm}"));
    run(&mut r, TIER_QUASICOMODULE, &quasi, exec);
    if flavor == Flavor::Module {
        run(&mut r, TIER_COMODULE, &[comodule], exec);
    }

    if let ModuleObject::Structured(obj) = m {
        if obj.field != f {
            return Err(Error::Field("coacting object and comodule must share a field".into()));
        }
        let o = obj.gens("_M");
        let (comagma, monoid) = match side {
            Side::Left => {
                // The diagonal coaction on M ⊗ M.
                let rmm = comp(&[
                    &tens(&[&g.mu, &mm, &mm]),
                    &tens(&[cc, &Diagram::swap(f, nm, nc), &mm]),
                    &tens(&[&p, &p]),
                ]);
                (
                    vec![
                        Equation::new("etaqc", comp(&[&tens(&[cc, &o.eps]), &p]), tens(&[&g.eta, &o.eps])),
                        Equation::new("muqc", comp(&[&rmm, &o.delta]), comp(&[&tens(&[cc, &o.delta]), &p])),
                    ],
                    vec![
                        Equation::new("eqc", comp(&[&p, &o.eta]), tens(&[&g.eta, &o.eta])),
                        Equation::new("dqc", comp(&[&p, &o.mu]), comp(&[&tens(&[cc, &o.mu]), &rmm])),
                    ],
                )
            }
            Side::Right => {
                let rmm = comp(&[
                    &tens(&[&mm, &mm, &g.mu]),
                    &tens(&[&mm, &Diagram::swap(f, nc, nm), cc]),
                    &tens(&[&p, &p]),
                ]);
                (
                    vec![
                        Equation::new("etaqc", comp(&[&tens(&[&o.eps, cc]), &p]), tens(&[&o.eps, &g.eta])),
                        Equation::new("muqc", comp(&[&rmm, &o.delta]), comp(&[&tens(&[&o.delta, cc]), &p])),
                    ],
                    vec![
                        Equation::new("eqc", comp(&[&p, &o.eta]), tens(&[&o.eta, &g.eta])),
                        Equation::new("dqc", comp(&[&p, &o.mu]), comp(&[&tens(&[&o.mu, cc]), &rmm])),
                    ],
                )
            }
        };
        run(&mut r, TIER_COMODULE_COMAGMA, &comagma, exec);
        run(&mut r, TIER_COMODULE_MONOID, &monoid, exec);
    }
    Ok(r)
}
