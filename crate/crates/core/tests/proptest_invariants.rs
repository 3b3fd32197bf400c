//! Property-based checks of the algebraic identities.

use horospinor::tol::{IDENTITY_TOL, LINEAR_TOL};
use horospinor::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn complex_strategy() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn spinor_strategy() -> impl Strategy<Value = Spinor> {
    (complex_strategy(), complex_strategy())
        .prop_map(|(xi, eta)| Spinor::new(xi, eta))
        .prop_filter("nonzero", |k| k.norm_sqr() > 1e-2)
}

proptest! {
    #[test]
    fn bracket_is_antisymmetric(k1 in spinor_strategy(), k2 in spinor_strategy()) {
        let b12 = bracket(&k1, &k2);
        let b21 = bracket(&k2, &k1);
        prop_assert!((b12 + b21).norm() <= LINEAR_TOL * b12.norm().max(1.0));
    }

    #[test]
    fn bracket_is_bilinear(k1 in spinor_strategy(), k2 in spinor_strategy(), c in complex_strategy()) {
        let lhs = bracket(&k1.scale(c), &k2);
        let rhs = c * bracket(&k1, &k2);
        prop_assert!((lhs - rhs).norm() <= LINEAR_TOL * rhs.norm().max(1.0));
    }

    #[test]
    fn phi1_lands_on_the_light_cone(k in spinor_strategy()) {
        let p = phi1(&k);
        prop_assert!(p.is_future_lightlike(IDENTITY_TOL));
        prop_assert!((p.t - k.norm_sqr()).abs() <= LINEAR_TOL * p.t);
    }

    #[test]
    fn minkowski_herm_roundtrip(
        t in -2.0..2.0f64, x in -2.0..2.0f64, y in -2.0..2.0f64, z in -2.0..2.0f64,
    ) {
        let v = MinkowskiVector::new(t, x, y, z);
        let back = herm_to_minkowski(&minkowski_to_herm(&v), IDENTITY_TOL).unwrap();
        let scale = v.euclidean_norm().max(1.0);
        prop_assert!((v - back).euclidean_norm() <= LINEAR_TOL * scale);
    }

    #[test]
    fn plucker_three_term_relations(ks in proptest::collection::vec(spinor_strategy(), 5)) {
        let t = SpinorTuple::new(ks).unwrap();
        if let Ok(p) = plucker(&t) {
            prop_assert!(p.max_three_term_residual() <= IDENTITY_TOL);
        }
    }

    #[test]
    fn dphi1_is_real_linear(k in spinor_strategy(), n1 in spinor_strategy(), n2 in spinor_strategy(),
                            a in -2.0..2.0f64, b in -2.0..2.0f64) {
        let nu = n1.scale(Complex64::new(a, 0.0)) + n2.scale(Complex64::new(b, 0.0));
        let lhs = dphi1(&k, &nu);
        let rhs = dphi1(&k, &n1).scale(a) + dphi1(&k, &n2).scale(b);
        let scale = lhs.euclidean_norm().max(rhs.euclidean_norm()).max(1.0);
        prop_assert!((lhs - rhs).euclidean_norm() <= LINEAR_TOL * scale);
    }
}
