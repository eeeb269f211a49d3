use std::collections::BTreeMap;

use super::structure::{ComonoidData, UnitalMagmaData};
use crate::error::{Error, Result};
use crate::exactlin::{comp, solve_sparse, tens, Diagram, LinMap, SolveFailure};
use crate::par::Exec;

fn check_shapes(f: &LinMap, comagma: &ComonoidData, magma: &UnitalMagmaData) -> Result<()> {
    if f.cols() != comagma.dim || f.rows() != magma.dim {
        return Err(Error::Shape(format!(
            "map is {}x{}, convolution algebra is Hom({}, {})",
            f.rows(),
            f.cols(),
            comagma.dim,
            magma.dim
        )));
    }
    Ok(())
}

/// `f ⋆ g = μ ∘ (f ⊗ g) ∘ δ`.
pub fn convolution(f: &LinMap, g: &LinMap, comagma: &ComonoidData, magma: &UnitalMagmaData) -> Result<LinMap> {
    check_shapes(f, comagma, magma)?;
    check_shapes(g, comagma, magma)?;
    let d = comp(&[
        &Diagram::map("μ", &magma.product),
        &tens(&[&Diagram::map("f", f), &Diagram::map("g", g)]),
        &Diagram::map("δ", &comagma.coproduct),
    ]);
    d.to_linmap(Exec::default()).reshape(vec![comagma.dim], vec![magma.dim])
}

/// The convolution unit `η ∘ ε`.
pub fn convolution_unit(comagma: &ComonoidData, magma: &UnitalMagmaData) -> LinMap {
    magma
        .unit
        .compose(&comagma.counit)
        .expect("unit and counit compose through K")
        .reshape(vec![comagma.dim], vec![magma.dim])
        .expect("square shape")
}

/// Solves `f ⋆ g = η∘ε = g ⋆ f` for `g` as an exact sparse linear system.
///
/// Fails when the system is inconsistent, and also when it has more than one
/// solution (a two-sided inverse in a non-associative convolution algebra
/// need not be unique, and this routine only returns certified answers).
pub fn convolution_inverse(f: &LinMap, comagma: &ComonoidData, magma: &UnitalMagmaData) -> Result<LinMap> {
    check_shapes(f, comagma, magma)?;
    let field = f.field();
    let (nd, na) = (comagma.dim, magma.dim);
    let delta = comagma.coproduct.sparse_columns();
    let mu = magma.product.sparse_columns();
    let fcols = f.sparse_columns();
    let unit = convolution_unit(comagma, magma);
    let var = |l: usize, d: usize| l * nd + d;

    let mut equations = Vec::with_capacity(2 * na * nd);
    for left in [true, false] {
        for d in 0..nd {
            let mut rows: Vec<BTreeMap<usize, _>> = vec![BTreeMap::new(); na];
            for (k, c) in &delta[d] {
                let (d1, d2) = (k / nd, k % nd);
                // f⋆g puts f on d1 and the unknown on d2; g⋆f the other way round.
                let (fixed, free) = if left { (d1, d2) } else { (d2, d1) };
                for (m, fv) in &fcols[fixed] {
                    let cf = c.mul(fv);
                    for l in 0..na {
                        let col = if left { m * na + l } else { l * na + m };
                        for (a, mv) in &mu[col] {
                            let coef = cf.mul(mv);
                            let slot = rows[*a].entry(var(l, free)).or_insert_with(|| field.zero());
                            *slot = slot.add(&coef);
                        }
                    }
                }
            }
            for (a, row) in rows.into_iter().enumerate() {
                equations.push((row, unit.get(a, d).clone()));
            }
        }
    }
    match solve_sparse(field, na * nd, equations) {
        Ok(x) => Ok(LinMap::new(field, vec![nd], vec![na], x)?),
        Err(SolveFailure::Inconsistent) => Err(Error::NotConvolutionInvertible(
            "the equations f⋆g = η∘ε = g⋆f have no solution".into(),
        )),
        Err(SolveFailure::Underdetermined { nullity }) => Err(Error::ConvolutionInverseNotUnique { nullity }),
    }
}
