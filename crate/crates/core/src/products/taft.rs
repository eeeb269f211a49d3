//! The four-dimensional Taft Hopf algebra on the basis {1, x, y, w = xy}.

use crate::error::{Error, Result};
use crate::exactlin::{Field, LinMap};
use crate::hopf::{HopfMaps, HopfQuasigroupData};

pub const ONE: usize = 0;
pub const X: usize = 1;
pub const Y: usize = 2;
pub const W: usize = 3;

/// `a · b` as `(basis index, sign)`, or `None` for zero.
fn mul(a: usize, b: usize) -> Option<(usize, i64)> {
    match (a, b) {
        (ONE, b) => Some((b, 1)),
        (a, ONE) => Some((a, 1)),
        (X, X) => Some((ONE, 1)),
        (X, Y) => Some((W, 1)),
        (X, W) => Some((Y, 1)),
        (Y, X) => Some((W, -1)),
        (W, X) => Some((Y, -1)),
        _ => None,
    }
}

pub fn taft_algebra(field: Field) -> Result<HopfQuasigroupData> {
    if field.characteristic() == 2 {
        return Err(Error::Precondition("the Taft algebra needs characteristic ≠ 2".into()));
    }
    let n = 4;
    let unit = LinMap::from_basis_map(field, vec![1], vec![n], |_| Some((ONE, 1)));
    let product = LinMap::from_basis_map(field, vec![n, n], vec![n], |k| mul(k / n, k % n));
    let counit = LinMap::from_basis_map(field, vec![n], vec![1], |a| (a == ONE || a == X).then_some((0, 1)));
    let mut coproduct = LinMap::zeros(field, vec![n], vec![n, n]);
    for (a, terms) in [
        (ONE, vec![(ONE, ONE)]),
        (X, vec![(X, X)]),
        (Y, vec![(Y, X), (ONE, Y)]),
        (W, vec![(W, ONE), (X, W)]),
    ] {
        for (l, r) in terms {
            coproduct.set(l * n + r, a, field.one());
        }
    }
    let antipode = LinMap::from_basis_map(field, vec![n], vec![n], |a| match a {
        ONE => Some((ONE, 1)),
        X => Some((X, 1)),
        Y => Some((W, 1)),
        _ => Some((Y, -1)),
    });
    let maps = HopfMaps::new(n, unit, product, counit, coproduct, antipode)?
        .with_labels(["1", "x", "y", "w"].map(String::from).to_vec())?;
    Ok(HopfQuasigroupData(maps))
}
