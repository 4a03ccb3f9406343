use bicomplex_sbt::bargmann::HermiteCoeffVector;
use bicomplex_sbt::frft::{frft_coeff, frft_inverse, ThetaParam};
use bicomplex_sbt::transforms::{sbt_forward, sbt_inverse_coeff};
use bicomplex_sbt::Bicomplex;
use proptest::prelude::*;

fn bc(r: f64) -> impl Strategy<Value = Bicomplex> {
    (-r..r, -r..r, -r..r, -r..r).prop_map(|(a, b, c, d)| Bicomplex::new(a, b, c, d))
}

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<Bicomplex>> {
    prop::collection::vec(bc(1.0), 1..max_len)
}

fn close(a: Bicomplex, b: Bicomplex, tol: f64) -> bool {
    a.max_abs_diff(&b) <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #[test]
    fn multiplication_is_commutative_and_associative(a in bc(3.0), b in bc(3.0), c in bc(3.0)) {
        prop_assert!(close(a * b, b * a, 1e-14));
        prop_assert!(close((a * b) * c, a * (b * c), 1e-13));
        prop_assert!(close(a * (b + c), a * b + a * c, 1e-13));
    }

    #[test]
    fn idempotent_product_is_componentwise(a in bc(3.0), b in bc(3.0)) {
        let (pa, pb) = (a.to_idempotent(), b.to_idempotent());
        let p = (a * b).to_idempotent();
        prop_assert!((p.alpha - pa.alpha * pb.alpha).norm() <= 1e-13 * (1.0 + a.norm() * b.norm()));
        prop_assert!((p.beta - pa.beta * pb.beta).norm() <= 1e-13 * (1.0 + a.norm() * b.norm()));
    }

    #[test]
    fn conjugations_are_involutions(a in bc(5.0), b in bc(5.0)) {
        prop_assert_eq!(a.conj_dagger().conj_dagger(), a);
        prop_assert_eq!(a.conj_tilde().conj_tilde(), a);
        prop_assert_eq!(a.conj_star().conj_star(), a);
        prop_assert!(close((a * b).conj_star(), a.conj_star() * b.conj_star(), 1e-14));
    }

    #[test]
    fn exp_is_a_homomorphism(a in bc(1.5), b in bc(1.5)) {
        prop_assert!(close((a + b).exp(), a.exp() * b.exp(), 1e-13));
    }

    #[test]
    fn inverse_off_the_null_cone(a in bc(3.0)) {
        prop_assume!(!a.is_null_cone(1e-3));
        let inv = a.inverse().unwrap();
        prop_assert!(close(a * inv, Bicomplex::ONE, 1e-10));
    }

    #[test]
    fn sbt_coefficient_round_trip_and_isometry(c in coeffs(20), nu in 0.5f64..4.0, sigma in 0.5f64..3.0) {
        let f = HermiteCoeffVector::new(sigma, c).unwrap();
        let g = sbt_forward(&f, nu).unwrap();
        prop_assert!((g.norm() - f.norm()).abs() <= 1e-12 * (1.0 + f.norm()));
        let back = sbt_inverse_coeff(&g, sigma).unwrap();
        for (x, y) in back.coeffs.iter().zip(&f.coeffs) {
            prop_assert!(close(*x, *y, 1e-12));
        }
    }

    #[test]
    fn frft_coefficients_invert_on_the_torus(c in coeffs(16), p1 in -3.0f64..3.0, p2 in -3.0f64..3.0) {
        prop_assume!(p1.abs() > 1e-3 && p2.abs() > 1e-3);
        let theta = ThetaParam::from_phases(p1, p2).unwrap();
        let f = HermiteCoeffVector::new(1.0, c).unwrap();
        let g = frft_coeff(&f, &theta).unwrap();
        prop_assert!((g.norm() - f.norm()).abs() <= 1e-12 * (1.0 + f.norm()));
        let back = frft_inverse(&g, &theta).unwrap();
        for (x, y) in back.coeffs.iter().zip(&f.coeffs) {
            prop_assert!(close(*x, *y, 1e-12));
        }
    }
}
