//! Text renderings of product tables and antipodes.
//!
//! The symbolic form applies to products on `K[L] ⊗ H` where `L` is a doubled
//! loop indexed `α·n + i` (element `σᵢu^α`): every block of basis products
//! `(σᵢu^α ⊗ z)(σⱼu^β ⊗ z′)` must equal `±(−1)^{pα+qβ} σᵢu^α•σⱼu^β ⊗ t`
//! for one target `t`, or vanish.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar};
use crate::hopf::HopfMaps;
use crate::loops::FiniteLoop;

fn label(h: &HopfMaps, i: usize, use_labels: bool) -> String {
    if use_labels {
        h.label(i)
    } else {
        format!("e{i}")
    }
}

fn combination(h: &HopfMaps, v: &[(usize, Scalar)], use_labels: bool) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let f = h.field;
    let mut s = String::new();
    for (n, (i, c)) in v.iter().enumerate() {
        let name = label(h, *i, use_labels);
        let negative = f == Field::Rational && c.to_string().starts_with('-');
        let magnitude = if negative { c.neg() } else { c.clone() };
        match (n, negative) {
            (0, true) => s.push('−'),
            (_, true) => s.push_str(" − "),
            (0, false) => {}
            (_, false) => s.push_str(" + "),
        }
        if magnitude.is_one() {
            s.push_str(&name);
        } else {
            let _ = write!(s, "{magnitude}·{name}");
        }
    }
    s
}

/// One line `a · b = …` per pair of basis vectors, then `λ(a) = …` per basis
/// vector. Without labels basis vectors print as `e0, e1, …`.
pub fn product_table(h: &HopfMaps, use_labels: bool) -> String {
    let n = h.dim;
    let mut out = String::new();
    for a in 0..n {
        for b in 0..n {
            let v = h.product.column(a * n + b);
            let _ = writeln!(
                out,
                "{} · {} = {}",
                label(h, a, use_labels),
                label(h, b, use_labels),
                combination(h, &v, use_labels)
            );
        }
    }
    for a in 0..n {
        let v = h.antipode.column(a);
        let _ = writeln!(out, "λ({}) = {}", label(h, a, use_labels), combination(h, &v, use_labels));
    }
    out
}

/// `±(−1)^{pα+qβ}` with `negate` for the leading sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Sign {
    negate: bool,
    alpha: bool,
    beta: bool,
}

impl Sign {
    fn eval(self, alpha: usize, beta: usize) -> bool {
        self.negate ^ (self.alpha && alpha == 1) ^ (self.beta && beta == 1)
    }

    /// The sign as a prefix, including a trailing space when nonempty.
    fn prefix(self) -> String {
        let mut parts = Vec::new();
        if self.alpha {
            parts.push("α");
        }
        if self.beta {
            parts.push("β");
        }
        if self.negate {
            parts.push("1");
        }
        match parts.as_slice() {
            [] => String::new(),
            ["1"] => "−".into(),
            [one] => format!("(−1)^{one} "),
            many => format!("(−1)^{{{}}} ", many.join("+")),
        }
    }
}

const SIGNS: [Sign; 8] = {
    let mut out = [Sign { negate: false, alpha: false, beta: false }; 8];
    let mut k = 0;
    while k < 8 {
        out[k] = Sign { negate: k & 4 != 0, alpha: k & 1 != 0, beta: k & 2 != 0 };
        k += 1;
    }
    out
};

/// `K[L] ⊗ H` with `L` doubled, read off a product structure.
struct DoubledProduct<'a> {
    x: &'a HopfMaps,
    l: &'a FiniteLoop,
    half: usize,
    nh: usize,
    h_labels: Vec<String>,
}

impl<'a> DoubledProduct<'a> {
    fn new(x: &'a HopfMaps, l: &'a FiniteLoop, h_labels: &[String]) -> Result<Self> {
        let nl = l.order;
        let nh = h_labels.len();
        if !nl.is_multiple_of(2) || nl * nh != x.dim {
            return Err(Error::Shape(format!(
                "expected a {}-dimensional product on a doubled loop of order {nl}, got dim {}",
                nl * nh,
                x.dim
            )));
        }
        Ok(DoubledProduct { x, l, half: nl / 2, nh, h_labels: h_labels.to_vec() })
    }

    fn index(&self, a: usize, z: usize) -> usize {
        a * self.nh + z
    }

    fn parity(&self, a: usize) -> usize {
        a / self.half
    }

    /// `±1` as a boolean "negative", `None` for any other scalar.
    fn unit_sign(c: &Scalar) -> Option<bool> {
        if c.is_one() {
            Some(false)
        } else if c.neg().is_one() {
            Some(true)
        } else {
            None
        }
    }

    /// The signed target of a single-term column, or `None` for zero.
    fn single_term(col: &[(usize, Scalar)]) -> std::result::Result<Option<(usize, bool)>, ()> {
        match col {
            [] => Ok(None),
            [(r, c)] => Self::unit_sign(c).map(|s| Some((*r, s))).ok_or(()),
            _ => Err(()),
        }
    }

    fn product_entry(&self, z: usize, z2: usize) -> Result<String> {
        let n = self.x.dim;
        let nl = self.l.order;
        let mut target: Option<usize> = None;
        let mut zero = None;
        let mut candidates: Vec<Sign> = SIGNS.to_vec();
        let misfit = || Error::Precondition(format!("block ({z}, {z2}) is not of the signed loop-product form"));
        for a in 0..nl {
            for b in 0..nl {
                let col = self.x.product.column(self.index(a, z) * n + self.index(b, z2));
                let term = Self::single_term(&col).map_err(|_| misfit())?;
                match (term, zero) {
                    (None, None) => zero = Some(true),
                    (Some(_), None) => zero = Some(false),
                    (None, Some(false)) | (Some(_), Some(true)) => return Err(misfit()),
                    _ => {}
                }
                let Some((row, negative)) = term else { continue };
                let (ab, t) = (row / self.nh, row % self.nh);
                if ab != self.l.mul(a, b) || *target.get_or_insert(t) != t {
                    return Err(misfit());
                }
                let (alpha, beta) = (self.parity(a), self.parity(b));
                candidates.retain(|s| s.eval(alpha, beta) == negative);
            }
        }
        if zero == Some(true) {
            return Ok("0".into());
        }
        let sign = *candidates.first().ok_or_else(misfit)?;
        let t = target.ok_or_else(misfit)?;
        Ok(format!("{}σᵢu^α•σⱼu^β ⊗ {}", sign.prefix(), self.h_labels[t]))
    }

    fn antipode_entry(&self, z: usize) -> Result<String> {
        let nl = self.l.order;
        let mut target: Option<usize> = None;
        let mut candidates: Vec<Sign> = SIGNS.iter().copied().filter(|s| !s.beta).collect();
        let misfit = || Error::Precondition(format!("antipode on ⊗{} is not of the signed inverse form", self.h_labels[z]));
        for a in 0..nl {
            let col = self.x.antipode.column(self.index(a, z));
            let Ok(Some((row, negative))) = Self::single_term(&col) else { return Err(misfit()) };
            let (inv, t) = (row / self.nh, row % self.nh);
            // σᵢ^{(−1)^{α+1}}u^α: the group inverse on α = 0, fixed on α = 1.
            let doubled_inverse = if self.parity(a) == 0 { self.parity(inv) == 0 } else { inv == a };
            if inv != self.l.inv(a) || !doubled_inverse || *target.get_or_insert(t) != t {
                return Err(misfit());
            }
            candidates.retain(|s| s.eval(self.parity(a), 0) == negative);
        }
        let sign = *candidates.first().ok_or_else(misfit)?;
        let t = target.ok_or_else(misfit)?;
        Ok(format!(
            "λ(σᵢu^α ⊗ {}) = {}σᵢ^{{(−1)^{{α+1}}}}u^α ⊗ {}",
            self.h_labels[z],
            sign.prefix(),
            self.h_labels[t]
        ))
    }
}

/// The symbolic entry for row `σᵢu^α ⊗ z` and column `σⱼu^β ⊗ z2`.
pub fn symbolic_product_entry(x: &HopfMaps, l: &FiniteLoop, h_labels: &[String], z: usize, z2: usize) -> Result<String> {
    DoubledProduct::new(x, l, h_labels)?.product_entry(z, z2)
}

/// The product table as a `|`-separated grid followed by the antipode, one
/// line per `H` basis vector.
pub fn symbolic_product_table(x: &HopfMaps, l: &FiniteLoop, h_labels: &[String]) -> Result<String> {
    let d = DoubledProduct::new(x, l, h_labels)?;
    let mut out = String::new();
    let header: Vec<String> = h_labels.iter().map(|t| format!("σⱼu^β ⊗ {t}")).collect();
    let _ = writeln!(out, "product | {}", header.join(" | "));
    for z in 0..d.nh {
        let row: Vec<String> = (0..d.nh).map(|z2| d.product_entry(z, z2)).collect::<Result<_>>()?;
        let _ = writeln!(out, "σᵢu^α ⊗ {} | {}", h_labels[z], row.join(" | "));
    }
    out.push('\n');
    for z in 0..d.nh {
        let _ = writeln!(out, "{}", d.antipode_entry(z)?);
    }
    Ok(out)
}

/// The loop `L` of a product on `K[L] ⊗ H` with factors `[|L|, dim H]`, read
/// off the products `(a ⊗ 1)(b ⊗ 1)`, when `H` has its unit at index 0.
pub fn recover_loop(x: &HopfMaps) -> Option<FiniteLoop> {
    let [nl, nh] = x.factors.as_deref()? else { return None };
    let (nl, nh) = (*nl, *nh);
    let n = x.dim;
    let unit = x.unit.column(0);
    let [(u, one)] = unit.as_slice() else { return None };
    if !one.is_one() || u % nh != 0 {
        return None;
    }
    let mut table = Vec::with_capacity(nl * nl);
    for a in 0..nl {
        for b in 0..nl {
            let col = x.product.column(a * nh * n + b * nh);
            let [(r, c)] = col.as_slice() else { return None };
            if !c.is_one() || r % nh != 0 {
                return None;
            }
            table.push(r / nh);
        }
    }
    let identity = u / nh;
    let inverse = (0..nl).map(|a| (0..nl).find(|&b| table[a * nl + b] == identity)).collect::<Option<Vec<_>>>()?;
    FiniteLoop::new(nl, table, identity, inverse, None).ok()
}

/// The labels of the second tensor factor, taken from labels `a⊗t`.
pub fn second_factor_labels(x: &HopfMaps) -> Option<Vec<String>> {
    let [_, nh] = x.factors.as_deref()? else { return None };
    let labels = x.labels.as_ref()?;
    labels[..*nh].iter().map(|s| s.split_once('⊗').map(|(_, t)| t.to_string())).collect()
}
