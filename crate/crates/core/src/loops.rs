//! Finite loops as Cayley tables, the Chein doubling and loop algebras.

use crate::error::{Error, Result};
use crate::exactlin::{Field, LinMap};
use crate::hopf::{HopfMaps, HopfQuasigroupData};
use crate::par::{self, Exec};
use crate::report::{ValidationReport, Witness};

/// A finite loop on `0..order`; `table[u * order + v] = u·v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLoop {
    pub order: usize,
    pub table: Vec<usize>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    pub labels: Vec<String>,
}

/// A loop whose product is associative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup(FiniteLoop);

impl FiniteLoop {
    /// Checks only the shape; the loop axioms are checked by [`validate_ip_loop`].
    pub fn new(
        order: usize,
        table: Vec<usize>,
        identity: usize,
        inverse: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::Shape("a loop has at least one element".into()));
        }
        if table.len() != order * order {
            return Err(Error::Shape(format!("table has {} entries, expected {}", table.len(), order * order)));
        }
        if inverse.len() != order {
            return Err(Error::Shape(format!("inverse table has {} entries, expected {order}", inverse.len())));
        }
        if identity >= order || table.iter().chain(&inverse).any(|&x| x >= order) {
            return Err(Error::Shape(format!("element index out of range 0..{order}")));
        }
        let labels = labels.unwrap_or_else(|| (0..order).map(|i| format!("g{i}")).collect());
        if labels.len() != order {
            return Err(Error::Shape(format!("{} labels for order {order}", labels.len())));
        }
        Ok(FiniteLoop { order, table, identity, inverse, labels })
    }

    pub fn mul(&self, u: usize, v: usize) -> usize {
        self.table[u * self.order + v]
    }

    pub fn inv(&self, u: usize) -> usize {
        self.inverse[u]
    }

    /// Order of `u` as an element (the least `k ≥ 1` with `u^k = e`, powers bracketed left).
    pub fn element_order(&self, u: usize) -> usize {
        let mut x = u;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, u);
            k += 1;
            if k > self.order {
                break;
            }
        }
        k
    }

    /// The first triple `(u, v, w)` with `(uv)w ≠ u(vw)`, lexicographically.
    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.order;
        par::find_first(Exec::default(), n, |u| {
            for v in 0..n {
                for w in 0..n {
                    if self.mul(self.mul(u, v), w) != self.mul(u, self.mul(v, w)) {
                        return Some([u, v, w]);
                    }
                }
            }
            None
        })
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }
}

impl FiniteGroup {
    /// Accepts `l` if it is an IP loop with associative product.
    pub fn new(l: FiniteLoop) -> Result<Self> {
        let mut report = validate_ip_loop(&l);
        let w = l.associativity_witness();
        report.record(
            "group",
            "associativity",
            w.map(|[u, v, x]| Witness {
                input: (u * l.order + v) * l.order + x,
                multi_index: vec![u, v, x],
                lhs: l.labels[l.mul(l.mul(u, v), x)].clone(),
                rhs: l.labels[l.mul(u, l.mul(v, x))].clone(),
            }),
        );
        if !report.all_passed() {
            return Err(Error::validation("group", report));
        }
        Ok(FiniteGroup(l))
    }

    pub fn as_loop(&self) -> &FiniteLoop {
        &self.0
    }

    pub fn into_loop(self) -> FiniteLoop {
        self.0
    }
}

impl std::ops::Deref for FiniteGroup {
    type Target = FiniteLoop;
    fn deref(&self) -> &FiniteLoop {
        &self.0
    }
}

fn tuple_witness(l: &FiniteLoop, idx: &[usize], lhs: usize, rhs: usize) -> Witness {
    let input = idx.iter().fold(0, |acc, &i| acc * l.order + i);
    Witness {
        input,
        multi_index: idx.to_vec(),
        lhs: l.labels[lhs].clone(),
        rhs: l.labels[rhs].clone(),
    }
}

/// Latin square, two-sided identity, two-sided inverses and the inverse property.
pub fn validate_ip_loop(l: &FiniteLoop) -> ValidationReport {
    let n = l.order;
    let e = l.identity;
    let mut r = ValidationReport::new(format!("IP loop axioms (order {n})"));

    let latin = |row: bool| -> Option<Witness> {
        for a in 0..n {
            let mut seen = vec![None; n];
            for b in 0..n {
                let (u, v) = if row { (a, b) } else { (b, a) };
                let x = l.mul(u, v);
                if let Some(prev) = seen[x] {
                    let (pu, pv) = if row { (a, prev) } else { (prev, a) };
                    let mut w = tuple_witness(l, &[u, v], x, x);
                    w.rhs = format!("{} (also the product at ({pu}, {pv}))", l.labels[x]);
                    return Some(w);
                }
                seen[x] = Some(b);
            }
        }
        None
    };
    r.record("loop", "latin-rows", latin(true));
    r.record("loop", "latin-columns", latin(false));

    let identity = (0..n).find_map(|u| {
        if l.mul(e, u) != u {
            Some(tuple_witness(l, &[e, u], l.mul(e, u), u))
        } else if l.mul(u, e) != u {
            Some(tuple_witness(l, &[u, e], l.mul(u, e), u))
        } else {
            None
        }
    });
    r.record("loop", "identity", identity);

    let inverse = (0..n).find_map(|u| {
        let v = l.inv(u);
        if l.mul(v, u) != e {
            Some(tuple_witness(l, &[v, u], l.mul(v, u), e))
        } else if l.mul(u, v) != e {
            Some(tuple_witness(l, &[u, v], l.mul(u, v), e))
        } else {
            None
        }
    });
    r.record("loop", "inverse", inverse);

    let ip_left = (0..n * n).find_map(|k| {
        let (u, v) = (k / n, k % n);
        let x = l.mul(l.inv(u), l.mul(u, v));
        (x != v).then(|| tuple_witness(l, &[u, v], x, v))
    });
    r.record("inverse-property", "ip-left", ip_left);

    let ip_right = (0..n * n).find_map(|k| {
        let (u, v) = (k / n, k % n);
        let x = l.mul(l.mul(v, u), l.inv(u));
        (x != v).then(|| tuple_witness(l, &[u, v], x, v))
    });
    r.record("inverse-property", "ip-right", ip_right);
    r
}

/// Symmetric group on three letters with σ0 = e, σ1 = (12), σ2 = (13),
/// σ3 = (23), σ4 = (123), σ5 = (132).
fn s3() -> FiniteLoop {
    // Images of (0, 1, 2) under each permutation.
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let index = |p: [usize; 3]| PERMS.iter().position(|q| *q == p).expect("closed");
    let mut table = Vec::with_capacity(36);
    for a in &PERMS {
        for b in &PERMS {
            // (ab)(x) = a(b(x))
            table.push(index([a[b[0]], a[b[1]], a[b[2]]]));
        }
    }
    let inverse = PERMS
        .iter()
        .map(|p| {
            let mut q = [0; 3];
            for (x, &y) in p.iter().enumerate() {
                q[y] = x;
            }
            index(q)
        })
        .collect();
    let labels = (0..6).map(|i| format!("s{i}")).collect();
    FiniteLoop::new(6, table, 0, inverse, Some(labels)).expect("S3 table")
}

fn cyclic(n: usize) -> FiniteLoop {
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    let inverse = (0..n).map(|i| (n - i) % n).collect();
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    FiniteLoop::new(n, table, 0, inverse, Some(labels)).expect("cyclic table")
}

/// `G × H` with pairs ordered by `g * |H| + h`.
pub fn direct_product(g: &FiniteLoop, h: &FiniteLoop) -> FiniteLoop {
    let (n, m) = (g.order, h.order);
    let size = n * m;
    let mut table = Vec::with_capacity(size * size);
    for a in 0..size {
        for b in 0..size {
            table.push(g.mul(a / m, b / m) * m + h.mul(a % m, b % m));
        }
    }
    let inverse = (0..size).map(|a| g.inv(a / m) * m + h.inv(a % m)).collect();
    let labels = (0..size).map(|a| format!("({},{})", g.labels[a / m], h.labels[a % m])).collect();
    FiniteLoop::new(size, table, g.identity * m + h.identity, inverse, Some(labels)).expect("product table")
}

/// Named groups: `s3`, `z<n>` (also `z_<n>`), `z2xz2`.
pub fn builtin_group(name: &str) -> Result<FiniteGroup> {
    let key = name.trim().to_ascii_lowercase().replace('_', "");
    let l = match key.as_str() {
        "s3" => s3(),
        "z2xz2" => direct_product(&cyclic(2), &cyclic(2)),
        k if k.starts_with('z') => match k[1..].parse::<usize>() {
            Ok(n) if (1..=64).contains(&n) => cyclic(n),
            _ => return Err(Error::UnknownName(format!("group {name:?}"))),
        },
        _ => return Err(Error::UnknownName(format!("group {name:?}"))),
    };
    FiniteGroup::new(l)
}

/// The Chein loop `M(G, 2)` on pairs `(g, α)`, indexed `α·|G| + g`, with
/// `(g,α)(h,β) = ((g^ν h^μ)^ν, α+β)`, `ν = (−1)^β`, `μ = (−1)^{α+β}`.
pub fn chein_double(g: &FiniteGroup) -> FiniteLoop {
    let n = g.order;
    let pow = |x: usize, sign: bool| if sign { x } else { g.inv(x) };
    let mut table = Vec::with_capacity(4 * n * n);
    for a in 0..2 * n {
        for b in 0..2 * n {
            let (x, alpha) = (a % n, a / n);
            let (y, beta) = (b % n, b / n);
            let nu = beta == 0;
            let mu = (alpha + beta) % 2 == 0;
            let z = pow(g.mul(pow(x, nu), pow(y, mu)), nu);
            table.push(((alpha + beta) % 2) * n + z);
        }
    }
    // (g,α)⁻¹ = (g^{(−1)^{α+1}}, α)
    let inverse = (0..2 * n).map(|a| if a < n { g.inv(a) } else { a }).collect();
    let labels = (0..2 * n)
        .map(|a| if a < n { g.labels[a].clone() } else { format!("{}u", g.labels[a - n]) })
        .collect();
    FiniteLoop::new(2 * n, table, g.identity, inverse, Some(labels)).expect("doubled table")
}

/// The loop algebra `F[L]`: grouplike coproduct, counit 1, antipode `u ↦ u⁻¹`.
pub fn loop_algebra(l: &FiniteLoop, field: Field) -> Result<HopfQuasigroupData> {
    let report = validate_ip_loop(l);
    if !report.all_passed() {
        return Err(Error::validation("IP loop", report));
    }
    let n = l.order;
    let unit = LinMap::from_basis_map(field, vec![1], vec![n], |_| Some((l.identity, 1)));
    let product = LinMap::from_basis_map(field, vec![n, n], vec![n], |k| Some((l.mul(k / n, k % n), 1)));
    let counit = LinMap::from_basis_map(field, vec![n], vec![1], |_| Some((0, 1)));
    let coproduct = LinMap::from_basis_map(field, vec![n], vec![n, n], |u| Some((u * n + u, 1)));
    let antipode = LinMap::from_basis_map(field, vec![n], vec![n], |u| Some((l.inv(u), 1)));
    let maps = HopfMaps::new(n, unit, product, counit, coproduct, antipode)?.with_labels(l.labels.clone())?;
    Ok(HopfQuasigroupData(maps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_order_profile() {
        let g = builtin_group("S3").unwrap();
        let orders: Vec<usize> = (0..6).map(|u| g.element_order(u)).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
        assert_eq!(g.mul(4, 4), 5);
    }

    #[test]
    fn z2_is_xor() {
        let g = builtin_group("Z2").unwrap();
        assert_eq!(g.table, vec![0, 1, 1, 0]);
        assert!(builtin_group("q8").is_err());
        assert!(builtin_group("z0").is_err());
    }

    #[test]
    fn chein_embeds_the_group() {
        let g = builtin_group("s3").unwrap();
        let l = chein_double(&g);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(l.mul(i, j), g.mul(i, j));
            }
        }
    }

    #[test]
    fn perturbed_table_fails_latin() {
        let g = builtin_group("s3").unwrap();
        let mut l = chein_double(&g);
        l.table.swap(1, 2);
        let r = validate_ip_loop(&l);
        assert!(!r.passed("latin-columns"));
        assert!(r.entry("latin-columns").unwrap().witness.is_some());
    }
}
