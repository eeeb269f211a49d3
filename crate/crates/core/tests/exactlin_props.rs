use hopfq::{comp, tens, Diagram, Exec, Field, LinMap};
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = LinMap> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        LinMap::new(Q, vec![cols], vec![rows], v.into_iter().map(|x| Q.int(x)).collect()).unwrap()
    })
}

fn fp_matrix(p: u64, n: usize) -> impl Strategy<Value = LinMap> {
    prop::collection::vec(0i64..p as i64, n * n).prop_map(move |v| {
        let f = Field::prime(p).unwrap();
        LinMap::new(f, vec![n], vec![n], v.into_iter().map(|x| f.int(x)).collect()).unwrap()
    })
}

fn dims() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (1usize..4, 1usize..4, 1usize..4, 1usize..4)
}

proptest! {
    #[test]
    fn composition_is_associative(
        (f, g, h) in dims().prop_flat_map(|(a, b, c, d)| (matrix(b, a), matrix(c, b), matrix(d, c)))
    ) {
        let left = h.compose(&g.compose(&f).unwrap()).unwrap();
        let right = h.compose(&g).unwrap().compose(&f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn interchange_law(
        (f1, f2, g1, g2) in dims().prop_flat_map(|(a, b, c, d)| {
            (matrix(b, a), matrix(a, c), matrix(d, c), matrix(c, b))
        })
    ) {
        let left = f1.compose(&f2).unwrap().kron(&g1.compose(&g2).unwrap()).unwrap();
        let right = f1.kron(&g1).unwrap().compose(&f2.kron(&g2).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn swap_is_natural(
        (f, g) in dims().prop_flat_map(|(a, b, c, d)| (matrix(b, a), matrix(d, c)))
    ) {
        let left = LinMap::swap(Q, f.rows(), g.rows()).compose(&f.kron(&g).unwrap()).unwrap();
        let right = g.kron(&f).unwrap().compose(&LinMap::swap(Q, f.cols(), g.cols())).unwrap();
        prop_assert!(left.same_matrix(&right));
    }

    #[test]
    fn kron_is_associative(
        (f, g, h) in dims().prop_flat_map(|(a, b, c, d)| (matrix(a, b), matrix(c, d), matrix(b, c)))
    ) {
        let left = f.kron(&g).unwrap().kron(&h).unwrap();
        let right = f.kron(&g.kron(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_is_two_sided(f in (1usize..6).prop_flat_map(|n| matrix(n, n))) {
        let n = f.rows();
        match f.invert() {
            Ok(inv) => {
                prop_assert!(f.compose(&inv).unwrap().is_identity());
                prop_assert!(inv.compose(&f).unwrap().is_identity());
                prop_assert_eq!(f.rank(), n);
            }
            Err(hopfq::Error::NotInvertible { rank, size }) => {
                prop_assert_eq!(size, n);
                prop_assert!(rank < n);
                prop_assert_eq!(rank, f.rank());
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn inverse_over_prime_field(f in (1usize..6).prop_flat_map(|n| fp_matrix(7, n))) {
        if let Ok(inv) = f.invert() {
            prop_assert!(f.compose(&inv).unwrap().is_identity());
            prop_assert!(inv.compose(&f).unwrap().is_identity());
        } else {
            prop_assert!(f.rank() < f.rows());
        }
    }

    #[test]
    fn rational_inverse_of_scaled_matrix(f in (1usize..5).prop_flat_map(|n| matrix(n, n))) {
        // Fractions in the input exercise the row-scaling path.
        let g = f.scale(&Q.parse("-2/3").unwrap()).add(&LinMap::identity(Q, &[f.rows()]).scale(&Q.parse("1/5").unwrap())).unwrap();
        if let Ok(inv) = g.invert() {
            prop_assert!(g.compose(&inv).unwrap().is_identity());
        }
    }

    #[test]
    fn diagram_evaluation_matches_dense(
        (f, g, h) in dims().prop_flat_map(|(a, b, c, d)| (matrix(b, a), matrix(d, c), matrix(a, b * d)))
    ) {
        let d = comp(&[
            &Diagram::map("h", &h),
            &Diagram::swap(Q, f.rows(), g.rows()).clone(),
            &Diagram::swap(Q, g.rows(), f.rows()),
            &tens(&[&Diagram::map("f", &f), &Diagram::map("g", &g)]),
        ]);
        let dense = h.compose(&f.kron(&g).unwrap()).unwrap();
        prop_assert!(d.to_linmap(Exec::Parallel).same_matrix(&dense));
        prop_assert!(d.to_linmap(Exec::Sequential).same_matrix(&dense));
    }

    #[test]
    fn transpose_reverses_composition(
        (f, g) in dims().prop_flat_map(|(a, b, c, _)| (matrix(b, a), matrix(c, b)))
    ) {
        prop_assert_eq!(
            g.compose(&f).unwrap().transpose(),
            f.transpose().compose(&g.transpose()).unwrap()
        );
    }
}

#[test]
fn swap_involution_exhaustive() {
    for m in 1..=6 {
        for n in 1..=6 {
            let s = LinMap::swap(Q, n, m).compose(&LinMap::swap(Q, m, n)).unwrap();
            assert!(s.is_identity(), "m={m}, n={n}");
        }
    }
}
