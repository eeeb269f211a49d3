use std::ops::Deref;

use crate::error::{Error, Result};
use crate::exactlin::{comp, tens, total, Diagram, Field, LinMap};

/// The five structure maps of a finite-dimensional non-(co)associative
/// bimonoid with antipode, in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMaps {
    pub dim: usize,
    pub field: Field,
    /// `η: K → H`
    pub unit: LinMap,
    /// `μ: H ⊗ H → H`
    pub product: LinMap,
    /// `ε: H → K`
    pub counit: LinMap,
    /// `δ: H → H ⊗ H`
    pub coproduct: LinMap,
    /// `λ: H → H`
    pub antipode: LinMap,
    /// Optional display names of the basis vectors.
    pub labels: Option<Vec<String>>,
    /// When the space is a tensor product `A ⊗ B`, the factor dimensions.
    pub factors: Option<Vec<usize>>,
}

impl HopfMaps {
    /// Checks the shapes against `dim` and normalizes the factor lists.
    pub fn new(
        dim: usize,
        unit: LinMap,
        product: LinMap,
        counit: LinMap,
        coproduct: LinMap,
        antipode: LinMap,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Shape("dimension must be positive".into()));
        }
        let field = unit.field();
        let n = dim;
        let shape = |name: &str, m: &LinMap, dom: Vec<usize>, cod: Vec<usize>| -> Result<LinMap> {
            if m.field() != field {
                return Err(Error::Field(format!("{name} is over {}, unit over {field}", m.field())));
            }
            m.reshape(dom.clone(), cod.clone()).map_err(|_| {
                Error::Shape(format!(
                    "{name} should be {dom:?} -> {cod:?}, got {}x{}",
                    m.rows(),
                    m.cols()
                ))
            })
        };
        Ok(HopfMaps {
            dim,
            field,
            unit: shape("unit", &unit, vec![1], vec![n])?,
            product: shape("product", &product, vec![n, n], vec![n])?,
            counit: shape("counit", &counit, vec![n], vec![1])?,
            coproduct: shape("coproduct", &coproduct, vec![n], vec![n, n])?,
            antipode: shape("antipode", &antipode, vec![n], vec![n])?,
            labels: None,
            factors: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::Shape(format!("{} labels for dimension {}", labels.len(), self.dim)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_factors(mut self, factors: Vec<usize>) -> Result<Self> {
        if total(&factors) != self.dim {
            return Err(Error::Shape(format!("factors {factors:?} do not multiply to {}", self.dim)));
        }
        self.factors = Some(factors);
        Ok(self)
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn magma(&self) -> UnitalMagmaData {
        UnitalMagmaData {
            dim: self.dim,
            unit: self.unit.clone(),
            product: self.product.clone(),
        }
    }

    pub fn comonoid(&self) -> ComonoidData {
        ComonoidData {
            dim: self.dim,
            counit: self.counit.clone(),
            coproduct: self.coproduct.clone(),
        }
    }

    /// The same maps with the roles exchanged by transposition:
    /// `η* = εᵀ, μ* = δᵀ, ε* = ηᵀ, δ* = μᵀ, λ* = λᵀ`.
    pub fn transposed(&self) -> HopfMaps {
        HopfMaps {
            dim: self.dim,
            field: self.field,
            unit: self.counit.transpose(),
            product: self.coproduct.transpose(),
            counit: self.unit.transpose(),
            coproduct: self.product.transpose(),
            antipode: self.antipode.transpose(),
            labels: self.labels.as_ref().map(|l| l.iter().map(|s| dual_label(s)).collect()),
            factors: self.factors.clone(),
        }
    }

    /// String-diagram generators for this object; `tag` decorates the names.
    pub fn gens(&self, tag: &str) -> Gens {
        let f = self.field;
        let n = self.dim;
        Gens {
            n,
            field: f,
            id: Diagram::id(f, &[n]),
            unit_obj: Diagram::id(f, &[1]),
            eta: Diagram::map(format!("η{tag}"), &self.unit),
            mu: Diagram::map(format!("μ{tag}"), &self.product),
            eps: Diagram::map(format!("ε{tag}"), &self.counit),
            delta: Diagram::map(format!("δ{tag}"), &self.coproduct),
            lam: Diagram::map(format!("λ{tag}"), &self.antipode),
            c: Diagram::swap(f, n, n),
        }
    }
}

/// Toggles the `*` on every tensor factor of a label.
fn dual_label(s: &str) -> String {
    s.split('⊗')
        .map(|part| match part.strip_suffix('*') {
            Some(base) => base.to_string(),
            None => format!("{part}*"),
        })
        .collect::<Vec<_>>()
        .join("⊗")
}

/// Diagram generators of one object.
#[derive(Clone, Debug)]
pub struct Gens {
    pub n: usize,
    pub field: Field,
    pub id: Diagram,
    pub unit_obj: Diagram,
    pub eta: Diagram,
    pub mu: Diagram,
    pub eps: Diagram,
    pub delta: Diagram,
    pub lam: Diagram,
    pub c: Diagram,
}

impl Gens {
    /// `δ_{H⊗A} = (H ⊗ c_{H,A} ⊗ A) ∘ (δ_H ⊗ δ_A)`
    pub fn tensor_coproduct(&self, other: &Gens) -> Diagram {
        let c = Diagram::swap(self.field, self.n, other.n);
        comp(&[
            &tens(&[&self.id, &c, &other.id]),
            &tens(&[&self.delta, &other.delta]),
        ])
    }

    /// `μ_{H⊗A} = (μ_H ⊗ μ_A) ∘ (H ⊗ c_{A,H} ⊗ A)`
    pub fn tensor_product(&self, other: &Gens) -> Diagram {
        let c = Diagram::swap(self.field, other.n, self.n);
        comp(&[
            &tens(&[&self.mu, &other.mu]),
            &tens(&[&self.id, &c, &other.id]),
        ])
    }

    /// `ε_H ⊗ ε_A`
    pub fn tensor_counit(&self, other: &Gens) -> Diagram {
        tens(&[&self.eps, &other.eps])
    }

    /// `η_H ⊗ η_A`
    pub fn tensor_unit(&self, other: &Gens) -> Diagram {
        tens(&[&self.eta, &other.eta])
    }
}

/// A Hopf quasigroup: comonoid (coassociative), unital magma, antipode
/// satisfying the left and right quasigroup identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfQuasigroupData(pub HopfMaps);

/// A Hopf coquasigroup: monoid (associative), counital comagma, antipode
/// satisfying the left and right coquasigroup identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfCoquasigroupData(pub HopfMaps);

impl Deref for HopfQuasigroupData {
    type Target = HopfMaps;
    fn deref(&self) -> &HopfMaps {
        &self.0
    }
}

impl Deref for HopfCoquasigroupData {
    type Target = HopfMaps;
    fn deref(&self) -> &HopfMaps {
        &self.0
    }
}

impl HopfQuasigroupData {
    pub fn maps(&self) -> &HopfMaps {
        &self.0
    }
}

impl HopfCoquasigroupData {
    pub fn maps(&self) -> &HopfMaps {
        &self.0
    }
}

/// `(A, η, μ)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalMagmaData {
    pub dim: usize,
    pub unit: LinMap,
    pub product: LinMap,
}

/// `(D, ε, δ)`; coassociativity is checked, not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComonoidData {
    pub dim: usize,
    pub counit: LinMap,
    pub coproduct: LinMap,
}

impl UnitalMagmaData {
    /// The ground field as a one-dimensional magma.
    pub fn ground(field: Field) -> Self {
        UnitalMagmaData {
            dim: 1,
            unit: LinMap::identity(field, &[1]),
            product: LinMap::identity(field, &[1]).reshape(vec![1, 1], vec![1]).expect("1x1"),
        }
    }

    pub fn field(&self) -> Field {
        self.unit.field()
    }
}

impl ComonoidData {
    pub fn ground(field: Field) -> Self {
        ComonoidData {
            dim: 1,
            counit: LinMap::identity(field, &[1]),
            coproduct: LinMap::identity(field, &[1]).reshape(vec![1], vec![1, 1]).expect("1x1"),
        }
    }

    /// The tensor product comonoid on `D ⊗ E`.
    pub fn tensor(d: &ComonoidData, e: &ComonoidData) -> Result<Self> {
        let f = d.counit.field();
        let cd = Diagram::map("δ", &d.coproduct);
        let ce = Diagram::map("δ'", &e.coproduct);
        let swap = Diagram::swap(f, d.dim, e.dim);
        let delta = comp(&[
            &tens(&[&Diagram::id(f, &[d.dim]), &swap, &Diagram::id(f, &[e.dim])]),
            &tens(&[&cd, &ce]),
        ])
        .to_linmap(Default::default());
        let n = d.dim * e.dim;
        Ok(ComonoidData {
            dim: n,
            counit: d.counit.kron(&e.counit)?.reshape(vec![n], vec![1])?,
            coproduct: delta.reshape(vec![n], vec![n, n])?,
        })
    }

    pub fn field(&self) -> Field {
        self.counit.field()
    }
}
