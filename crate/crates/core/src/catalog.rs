//! Named example objects, each with a manifest of properties that is
//! re-checked whenever the entry is built.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::factor::{verify_factorization_theorem, FactorizationData};
use crate::format::Document;
use crate::hopf::{
    check_antipode_properties, dualize, is_associative, is_cocommutative, is_commutative, validate_bimonoid,
    validate_hopf_coquasigroup, validate_hopf_quasigroup, HopfCoquasigroupData, HopfMaps,
    HopfQuasigroupData,
};
use crate::loops::{builtin_group, chein_double, loop_algebra, validate_ip_loop, FiniteLoop};
use crate::products::{
    actions_from_skew_pairing, cross_product, double_cross_product, parity_pairing, swap_action, taft_algebra,
    validate_distributive_law, validate_matched_pair, DistributiveLawData, MatchedPairData,
};
use crate::report::ValidationReport;

/// A validator suite selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    IpLoop,
    Bimonoid,
    Quasigroup,
    Coquasigroup,
    AntipodeProps,
    Dl,
    MatchedPair,
    Factorization,
}

impl Level {
    pub const ALL: [Level; 8] = [
        Level::IpLoop,
        Level::Bimonoid,
        Level::Quasigroup,
        Level::Coquasigroup,
        Level::AntipodeProps,
        Level::Dl,
        Level::MatchedPair,
        Level::Factorization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Level::IpLoop => "ip-loop",
            Level::Bimonoid => "bimonoid",
            Level::Quasigroup => "quasigroup",
            Level::Coquasigroup => "coquasigroup",
            Level::AntipodeProps => "antipode-props",
            Level::Dl => "dl",
            Level::MatchedPair => "matched-pair",
            Level::Factorization => "factorization",
        }
    }

    /// Runs the suite on `doc`; errors when the level does not apply to
    /// this kind of document.
    pub fn run(self, doc: &Document) -> Result<ValidationReport> {
        let mismatch = || Error::Precondition(format!("level {} does not apply to a {}", self.name(), doc.kind()));
        Ok(match (self, doc) {
            (Level::IpLoop, Document::Loop(l)) => validate_ip_loop(l),
            (Level::IpLoop, Document::Group(g)) => validate_ip_loop(g),
            (Level::Bimonoid, _) => validate_bimonoid(structure_maps(doc).ok_or_else(mismatch)?),
            // A Hopf algebra file may be checked against either axiom set.
            (Level::Quasigroup, _) => {
                validate_hopf_quasigroup(&HopfQuasigroupData(structure_maps(doc).ok_or_else(mismatch)?.clone()))
            }
            (Level::Coquasigroup, _) => {
                validate_hopf_coquasigroup(&HopfCoquasigroupData(structure_maps(doc).ok_or_else(mismatch)?.clone()))
            }
            (Level::AntipodeProps, _) => check_antipode_properties(structure_maps(doc).ok_or_else(mismatch)?),
            (Level::Dl, Document::DistributiveLaw(d)) => validate_distributive_law(d),
            (Level::Dl, Document::MatchedPair(mp)) => {
                validate_distributive_law(&DistributiveLawData::new(mp.h.clone(), mp.a.clone(), mp.psi())?)
            }
            (Level::MatchedPair, Document::MatchedPair(mp)) => validate_matched_pair(mp),
            (Level::Factorization, Document::Factorization(f)) => verify_factorization_theorem(f),
            _ => return Err(mismatch()),
        })
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Level> {
        Level::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownName(format!("level {s:?}")))
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn structure_maps(doc: &Document) -> Option<&HopfMaps> {
    match doc {
        Document::HopfQuasigroup(h) => Some(h),
        Document::HopfCoquasigroup(d) => Some(d),
        _ => None,
    }
}

/// What an entry claims about the object it builds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub kind: &'static str,
    /// Dimension of a structure, order of a loop.
    pub dim: usize,
    pub levels: Vec<Level>,
    pub commutative: Option<bool>,
    pub cocommutative: Option<bool>,
    pub associative: Option<bool>,
}

/// A catalog object together with the manifest check it passed.
#[derive(Clone, Debug)]
pub struct Built {
    pub name: String,
    pub document: Document,
    pub manifest: Manifest,
    pub report: ValidationReport,
}

const TIER_MANIFEST: &str = "manifest";

/// Names accepted by [`build`], aliases included.
pub fn names() -> Vec<&'static str> {
    vec![
        "s3",
        "z_n",
        "z2xz2",
        "m_s3_2",
        "m_<group>_2",
        "loop_algebra:<loop>",
        "taft4",
        "cross_z2_swap",
        "chein_taft_pair",
        "chein_taft_law",
        "chein_taft_dcp",
        "chein_taft_dcp_dual",
        "chein_taft_factorization",
        "paper_matched_pair",
        "paper_dcp",
        "paper_dcp_dual",
    ]
}

/// Concrete names covering every builder, for exhaustive sweeps.
pub fn sample_names() -> Vec<&'static str> {
    vec![
        "s3",
        "z_3",
        "z2xz2",
        "m_s3_2",
        "m_z3_2",
        "loop_algebra:z_4",
        "loop_algebra:m_s3_2",
        "taft4",
        "cross_z2_swap",
        "chein_taft_pair",
        "chein_taft_law",
        "chein_taft_dcp",
        "chein_taft_dcp_dual",
        "chein_taft_factorization",
    ]
}

fn canonical_name(name: &str) -> String {
    let n = name.trim().to_ascii_lowercase();
    match n.as_str() {
        "paper_matched_pair" => "chein_taft_pair".into(),
        "paper_dcp" => "chein_taft_dcp".into(),
        "paper_dcp_dual" => "chein_taft_dcp_dual".into(),
        _ => n,
    }
}

/// A group (`s3`, `z_n`, `z2xz2`) or a Chein double `m_<group>_2`, with
/// whether it is associative: `M(G, 2)` is a group exactly when `G` is
/// abelian.
fn named_loop(name: &str) -> Result<(FiniteLoop, bool)> {
    if let Some(g) = name.strip_prefix("m_").and_then(|r| r.strip_suffix("_2")) {
        let g = builtin_group(g)?;
        let n = g.order;
        let abelian = (0..n).all(|u| (0..n).all(|v| g.mul(u, v) == g.mul(v, u)));
        return Ok((chein_double(&g), abelian));
    }
    Ok((builtin_group(name)?.into_loop(), true))
}

fn chein_taft_pair(field: Field) -> Result<MatchedPairData> {
    actions_from_skew_pairing(&parity_pairing(&builtin_group("s3")?, field)?)
}

/// Builds `name` over `field` and re-checks its manifest.
pub fn build(name: &str, field: Field) -> Result<Built> {
    let key = canonical_name(name);
    let (document, manifest) = construct(&key, field)?;
    let report = check_manifest(&document, &manifest)?;
    if !report.all_passed() {
        return Err(Error::validation("catalog manifest", report));
    }
    Ok(Built { name: key, document, manifest, report })
}

fn manifest(kind: &'static str, dim: usize, levels: &[Level]) -> Manifest {
    Manifest { kind, dim, levels: levels.to_vec(), commutative: None, cocommutative: None, associative: None }
}

fn flags(mut m: Manifest, commutative: bool, cocommutative: bool, associative: bool) -> Manifest {
    m.commutative = Some(commutative);
    m.cocommutative = Some(cocommutative);
    m.associative = Some(associative);
    m
}

fn construct(key: &str, field: Field) -> Result<(Document, Manifest)> {
    use Level::*;
    let hq = [Bimonoid, Quasigroup, AntipodeProps];
    Ok(match key {
        "taft4" => (
            Document::HopfQuasigroup(taft_algebra(field)?),
            flags(manifest("hopf_quasigroup", 4, &[Bimonoid, Quasigroup, Coquasigroup, AntipodeProps]), false, false, true),
        ),
        "cross_z2_swap" => {
            let (a, h, phi) = swap_action(field)?;
            let x = cross_product(&a, &h, &phi)?;
            let n = x.dim;
            (Document::HopfQuasigroup(x), flags(manifest("hopf_quasigroup", n, &hq), false, true, true))
        }
        "chein_taft_pair" => {
            let mp = chein_taft_pair(field)?;
            (Document::MatchedPair(mp), manifest("matched_pair", 48, &[Dl, MatchedPair]))
        }
        "chein_taft_law" => {
            let mp = chein_taft_pair(field)?;
            let law = DistributiveLawData::new(mp.h.clone(), mp.a.clone(), mp.psi())?;
            (Document::DistributiveLaw(law), manifest("distributive_law", 48, &[Dl]))
        }
        "chein_taft_dcp" => {
            let x = double_cross_product(&chein_taft_pair(field)?)?;
            (Document::HopfQuasigroup(x), flags(manifest("hopf_quasigroup", 48, &hq), false, false, false))
        }
        "chein_taft_dcp_dual" => {
            let d = dualize(&double_cross_product(&chein_taft_pair(field)?)?);
            let m = manifest("hopf_coquasigroup", 48, &[Bimonoid, Coquasigroup, AntipodeProps]);
            (Document::HopfCoquasigroup(d), flags(m, false, false, true))
        }
        "chein_taft_factorization" => {
            let mp = chein_taft_pair(field)?;
            let x = double_cross_product(&mp)?;
            let f = FactorizationData::canonical(&mp, x)?;
            (Document::Factorization(f), manifest("factorization", 48, &[Factorization]))
        }
        k if k.starts_with("loop_algebra:") => {
            let (l, group) = named_loop(&k["loop_algebra:".len()..])?;
            let n = l.order;
            let commutative = (0..n).all(|u| (0..n).all(|v| l.mul(u, v) == l.mul(v, u)));
            let levels: &[Level] = if group { &[Bimonoid, Quasigroup, Coquasigroup, AntipodeProps] } else { &hq };
            let x = loop_algebra(&l, field)?;
            (Document::HopfQuasigroup(x), flags(manifest("hopf_quasigroup", n, levels), commutative, true, group))
        }
        k => {
            let (l, group) = named_loop(k)?;
            let n = l.order;
            if group && !k.starts_with("m_") {
                let g = crate::loops::FiniteGroup::new(l)?;
                (Document::Group(g), manifest("group", n, &[IpLoop]))
            } else {
                let mut m = manifest("loop", n, &[IpLoop]);
                m.associative = Some(group);
                (Document::Loop(l), m)
            }
        }
    })
}

fn doc_dim(doc: &Document) -> usize {
    match doc {
        Document::HopfQuasigroup(h) => h.dim,
        Document::HopfCoquasigroup(d) => d.dim,
        Document::Loop(l) => l.order,
        Document::Group(g) => g.order,
        Document::DistributiveLaw(d) => d.a.dim * d.h.dim,
        Document::MatchedPair(m) => m.a.dim * m.h.dim,
        Document::Factorization(f) => f.x.dim,
        Document::Morphism(m) => m.map.rows(),
    }
}

/// Every claim of `m` evaluated on `doc`, one entry per claim.
pub fn check_manifest(doc: &Document, m: &Manifest) -> Result<ValidationReport> {
    let mut r = ValidationReport::new(format!("{} manifest", m.kind));
    r.record_flag(TIER_MANIFEST, "kind", doc.kind() == m.kind, Some(doc.kind().to_string()));
    let dim = doc_dim(doc);
    r.record_flag(TIER_MANIFEST, "dim", dim == m.dim, Some(dim.to_string()));
    for level in &m.levels {
        r.absorb(level.name(), level.run(doc)?);
    }
    let mut claim = |what: &str, expected: Option<bool>, actual: &dyn Fn() -> bool| {
        if let Some(e) = expected {
            let a = actual();
            r.record_flag(TIER_MANIFEST, what, a == e, Some(format!("{a}")));
        }
    };
    match doc {
        Document::HopfQuasigroup(h) => {
            claim("commutative", m.commutative, &|| is_commutative(h));
            claim("cocommutative", m.cocommutative, &|| is_cocommutative(h));
            claim("associative", m.associative, &|| is_associative(h));
        }
        Document::HopfCoquasigroup(d) => {
            claim("commutative", m.commutative, &|| is_commutative(d));
            claim("cocommutative", m.cocommutative, &|| is_cocommutative(d));
            claim("associative", m.associative, &|| is_associative(d));
        }
        Document::Loop(l) => claim("associative", m.associative, &|| l.is_associative()),
        _ => {}
    }
    Ok(r)
}
