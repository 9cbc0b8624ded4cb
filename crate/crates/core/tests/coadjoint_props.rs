mod common;

use common::{arb_algebra, catalog_algebras, cofactor_det, r, structure_tensor};
use num_traits::Zero;
use orbit_rank_core::coadjoint::{
    b_matrix_sym, estimate_open_orbit_components, has_open_orbits, orbit_data_at, p_polynomial,
    CoadjointPoint,
};
use orbit_rank_core::lie::catalog;
use orbit_rank_core::linalg::rat;
use orbit_rank_core::{LieAlgebra, Rat};
use proptest::prelude::*;

/// `B_ξ(j, k) = Σ_l c_{jk}^l ξ_l` straight from the structure tensor.
fn b_oracle(l: &LieAlgebra, xi: &[Rat]) -> Vec<Vec<Rat>> {
    let c = structure_tensor(l);
    let n = l.dim();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|k| (0..n).fold(Rat::zero(), |acc, t| acc + &c[j][k][t] * &xi[t]))
                .collect()
        })
        .collect()
}

fn arb_point(n: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec((-5i64..=5, 1i64..=3).prop_map(|(a, b)| rat(a, b)), n)
}

fn algebra_and_point() -> impl Strategy<Value = (LieAlgebra, Vec<Rat>)> {
    arb_algebra().prop_flat_map(|l| {
        let n = l.dim();
        (Just(l), arb_point(n))
    })
}

#[test]
fn b_matrix_is_skew_on_catalog() {
    for (label, l) in catalog_algebras() {
        let b = b_matrix_sym(&l);
        assert_eq!(b.skew_violation(), None, "{label}");
    }
}

#[test]
fn p_polynomial_is_a_determinant_on_catalog() {
    // Compare P with the cofactor determinant of B_ξ at a grid of points.
    for (label, l) in catalog_algebras() {
        let p = p_polynomial(&l);
        let n = l.dim();
        for s in 0..8i64 {
            let xi: Vec<Rat> = (0..n).map(|i| r((s * 7 + i as i64 * 3) % 5 - 2)).collect();
            assert_eq!(p.eval(&xi).unwrap(), cofactor_det(&b_oracle(&l, &xi)), "{label}");
        }
    }
}

#[test]
fn estimator_refines_with_more_samples() {
    let axb = catalog("axb", &[]).unwrap();
    let sum = orbit_rank_core::lie::direct_sum(&axb, &axb).unwrap();
    for l in [axb, sum] {
        let small = estimate_open_orbit_components(&l, 30, 7);
        let large = estimate_open_orbit_components(&l, 80, 7);
        assert_eq!(small.points[..], large.points[..30]);
        for i in 0..30 {
            for j in 0..30 {
                if small.labels[i] == small.labels[j] {
                    assert_eq!(large.labels[i], large.labels[j]);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn b_matrix_is_skew(l in arb_algebra()) {
        prop_assert_eq!(b_matrix_sym(&l).skew_violation(), None);
    }

    #[test]
    fn p_is_the_determinant_of_b((l, xi) in algebra_and_point()) {
        prop_assert_eq!(p_polynomial(&l).eval(&xi).unwrap(), cofactor_det(&b_oracle(&l, &xi)));
    }

    #[test]
    fn odd_dimension_has_no_open_orbits(l in arb_algebra()) {
        if l.dim() % 2 == 1 {
            prop_assert!(p_polynomial(&l).is_zero());
            prop_assert!(!has_open_orbits(&l));
        }
    }

    #[test]
    fn open_orbit_dichotomy((l, xi) in algebra_and_point()) {
        let p = p_polynomial(&l).eval(&xi).unwrap();
        let data = orbit_data_at(&l, &CoadjointPoint::new(&l, xi).unwrap()).unwrap();
        prop_assert_eq!(data.orbit_dim % 2, 0);
        prop_assert_eq!(data.orbit_dim + data.isotropy.dim(), l.dim());
        prop_assert_eq!(data.open, !p.is_zero());
        prop_assert_eq!(data.open, data.orbit_dim == l.dim());
        if data.open {
            prop_assert!(has_open_orbits(&l));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn estimator_is_deterministic_and_certified(l in arb_algebra(), seed in 0u64..1000) {
        prop_assume!(has_open_orbits(&l));
        let a = estimate_open_orbit_components(&l, 25, seed);
        prop_assert_eq!(&a, &estimate_open_orbit_components(&l, 25, seed));
        let p = p_polynomial(&l);
        for edge in &a.certificates {
            let (x, y) = (&a.points[edge.from], &a.points[edge.to]);
            prop_assert!(!p.eval(x).unwrap().is_zero());
            prop_assert!(!p.eval(y).unwrap().is_zero());
            let u = p.restrict_to_segment(x, y).unwrap();
            prop_assert_eq!(common::bisection_root_count(u.coeffs(), &r(0), &r(1)), 0);
        }
        let roots = (0..a.labels.len()).filter(|&i| a.labels[i] == i).count();
        prop_assert_eq!(a.component_count, roots);
        prop_assert_eq!(a.certificates.len() + a.component_count, a.points.len());
    }
}
