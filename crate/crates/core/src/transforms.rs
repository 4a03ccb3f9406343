//! The bicomplex Segal–Bargmann transform `B^{σ,ν}: L^{2,σ}_𝔹ℂ(ℝ) → F^{2,ν}(𝔹ℂ)`
//! and its inverse.
//!
//! The coefficient path uses `B ψ_n^σ = φ_n`, so a Hermite coefficient `c_n`
//! becomes the monomial coefficient `A_n = c_n (νⁿ/(2ⁿ n!))^{1/2}`. The
//! integral path evaluates the defining integrals by Gauss–Hermite quadrature.

use num_complex::Complex64;

use crate::bargmann::{monomial_norm_sq, HermiteCoeffVector, MonomialCoeffVector};
use crate::bicomplex::Bicomplex;
use crate::error::{require_positive, Result};
use crate::hermite::generating_g;
use crate::quadrature::{integrate_bicomplex, integrate_complex, integrate_real, normalization_c, NormSpace, QuadratureRule};

/// Classical kernel `c_0^σ exp(−σ(x − √(γ/(2σ)) z)²)` mapping into `F^{2,γ}(ℂ)`.
pub fn sbt_kernel_c(sigma: f64, gamma: f64, x: f64, z: Complex64) -> Complex64 {
    let shift = z * (gamma / (2.0 * sigma)).sqrt();
    let d = -shift + x;
    (-(d * d) * sigma).exp() * normalization_c(NormSpace::Real, sigma)
}

/// Bicomplex kernel `c_0^σ exp(−σ(x − √(ν/(4σ)) Z)²)`.
pub fn sbt_kernel_bc(sigma: f64, nu: f64, x: f64, z: Bicomplex) -> Bicomplex {
    let d = Bicomplex::real(x) - z * (nu / (4.0 * sigma)).sqrt();
    (d * d * -sigma).exp() * normalization_c(NormSpace::Real, sigma)
}

/// Coefficient path: `c_n ↦ c_n (νⁿ/(2ⁿ n!))^{1/2}`.
pub fn sbt_forward(phi: &HermiteCoeffVector, nu: f64) -> Result<MonomialCoeffVector> {
    phi.validate()?;
    let coeffs = phi
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| *c * monomial_norm_sq(n, nu).sqrt().recip())
        .collect();
    MonomialCoeffVector::new(nu, coeffs)
}

/// Coefficient path of the inverse: `A_n ↦ A_n (2ⁿ n!/νⁿ)^{1/2}`.
pub fn sbt_inverse_coeff(f: &MonomialCoeffVector, sigma: f64) -> Result<HermiteCoeffVector> {
    f.validate()?;
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, a)| *a * monomial_norm_sq(n, f.nu).sqrt())
        .collect();
    HermiteCoeffVector::new(sigma, coeffs)
}

/// `B φ(Z) = ∫_ℝ sbt_kernel_bc(x, Z) φ(x) dx` by quadrature.
///
/// The Gaussian `e^{−σx²}` of the kernel is taken as the rule weight, so the
/// remaining integrand is `c_0^σ G(x; Z*) φ(x)`.
pub fn sbt_forward_integral<F>(phi: F, sigma: f64, nu: f64, z: Bicomplex, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(f64) -> Bicomplex,
{
    require_positive("sigma", sigma)?;
    require_positive("nu", nu)?;
    let rule = rule.rescaled(sigma)?;
    let zs = z.conj_star();
    let v = integrate_real(|x| generating_g(sigma, nu, x, zs) * phi(x), &rule)?;
    Ok(v * normalization_c(NormSpace::Real, sigma))
}

/// `B φ(Z)` for inputs that continue analytically to `ℂ`.
///
/// In channel `α` the kernel is `c_0^σ e^{−σ(x − aα)²}` with `a = √(ν/(4σ))`;
/// moving the contour to `x = aα + t` makes it the plain rule weight. Unlike
/// [`sbt_forward_integral`] this stays accurate when `aα` is far from the
/// origin, which matters when the result feeds a second quadrature.
pub fn sbt_forward_integral_analytic<F>(phi: F, sigma: f64, nu: f64, z: Bicomplex, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(Complex64) -> Bicomplex,
{
    require_positive("sigma", sigma)?;
    require_positive("nu", nu)?;
    let rule = rule.rescaled(sigma)?;
    let a = (nu / (4.0 * sigma)).sqrt();
    let p = z.to_idempotent();
    let (ca, cb) = (p.alpha * a, p.beta * a);
    let v = integrate_real(
        |t| Bicomplex::from_components(phi(ca + t).to_idempotent().alpha, phi(cb + t).to_idempotent().beta),
        &rule,
    )?;
    Ok(v * normalization_c(NormSpace::Real, sigma))
}

/// Inverse transform `c_𝔹ℂ^ν ∫_𝔹ℂ G(x; Z) f(Z) e^{−ν|Z|²} dλ(Z)` by the full
/// four-dimensional rule. Costs `order⁴` evaluations of `f`.
pub fn sbt_inverse_integral_full<F>(f: F, sigma: f64, nu: f64, x: f64, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(Bicomplex) -> Bicomplex + Sync,
{
    require_positive("sigma", sigma)?;
    require_positive("nu", nu)?;
    let rule = rule.rescaled(0.5 * nu)?;
    let v = integrate_bicomplex(|z| generating_g(sigma, nu, x, z) * f(z), nu, &rule)?;
    Ok(v * normalization_c(NormSpace::Bicomplex, nu))
}

/// Inverse transform of a 𝔹ℂ-holomorphic `f`, reduced to one complex plane.
///
/// For holomorphic `f = f⁺(α)e+ + f⁻(β)e−` the four-dimensional integral
/// factors into two copies of `c_1^{ν/2} ∫_ℂ G(x; ξ) f(ξ) e^{−(ν/2)|ξ|²} dλ(ξ)`,
/// one per idempotent channel. Evaluating on the slice `Z = ξ ∈ ℂ` computes
/// both channels at once. The result is wrong for non-holomorphic `f`.
pub fn sbt_inverse_integral<F>(f: F, sigma: f64, nu: f64, x: f64, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(Bicomplex) -> Bicomplex,
{
    require_positive("sigma", sigma)?;
    require_positive("nu", nu)?;
    let gamma = 0.5 * nu;
    let rule = rule.rescaled(gamma)?;
    let v = integrate_complex(
        |xi| {
            let z = Bicomplex::from_complex(xi);
            generating_g(sigma, nu, x, z) * f(z)
        },
        &rule,
    )?;
    Ok(v * normalization_c(NormSpace::Complex, gamma))
}

/// `S^ν F(Z) = c_1^{ν/2} ∫_ℂ F(ξ) e^{(ν/2) Z ξ̄} e^{−(ν/2)|ξ|²} dλ(ξ)`, lifting a
/// function on `ℂ` to a 𝔹ℂ-holomorphic one.
pub fn s_transform<F>(f: F, nu: f64, z: Bicomplex, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(Complex64) -> Bicomplex,
{
    require_positive("nu", nu)?;
    let gamma = 0.5 * nu;
    let rule = rule.rescaled(gamma)?;
    let zp = z.to_idempotent();
    let v = integrate_complex(
        |xi| {
            let c = xi.conj() * gamma;
            let k = Bicomplex::from_components((zp.alpha * c).exp(), (zp.beta * c).exp());
            f(xi) * k
        },
        &rule,
    )?;
    Ok(v * normalization_c(NormSpace::Complex, gamma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bargmann::phi_n;
    use crate::hermite::psi_n;
    use crate::quadrature::gauss_hermite;

    fn bc(a: f64, b: f64, c: f64, d: f64) -> Bicomplex {
        Bicomplex::new(a, b, c, d)
    }

    #[test]
    fn kernel_examples() {
        let c0 = std::f64::consts::PI.powf(-0.5);
        let k = sbt_kernel_bc(1.0, 2.0, 0.0, Bicomplex::ZERO);
        assert!(k.max_abs_diff(&Bicomplex::real(c0)) < 1e-15);
        let k = sbt_kernel_bc(1.0, 2.0, 1.0, Bicomplex::ZERO);
        assert!(k.max_abs_diff(&Bicomplex::real(c0 / std::f64::consts::E)) < 1e-15);
        let k = sbt_kernel_c(1.0, 1.0, 0.4, Complex64::new(0.0, 0.0));
        assert!((k.re - c0 * (-0.16f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn bicomplex_kernel_splits_into_classical_ones() {
        let (sigma, nu) = (0.7, 1.6);
        let z = bc(0.3, -0.2, 0.5, 0.4);
        let p = z.to_idempotent();
        for x in [-1.3, 0.0, 0.8] {
            let want = Bicomplex::from_components(
                sbt_kernel_c(sigma, nu / 2.0, x, p.alpha),
                sbt_kernel_c(sigma, nu / 2.0, x, p.beta),
            );
            assert!(sbt_kernel_bc(sigma, nu, x, z).max_abs_diff(&want) < 1e-14);
        }
    }

    #[test]
    fn kernel_is_gaussian_times_generating_function() {
        let (sigma, nu) = (1.3, 0.9);
        let z = bc(0.1, 0.6, -0.3, 0.2);
        let c0 = normalization_c(NormSpace::Real, sigma);
        for x in [-0.9, 0.2, 1.7] {
            let want = generating_g(sigma, nu, x, z.conj_star()) * (c0 * (-sigma * x * x).exp());
            assert!(sbt_kernel_bc(sigma, nu, x, z).max_abs_diff(&want) < 1e-14);
        }
    }

    #[test]
    fn basis_maps_to_basis() {
        let rule = gauss_hermite(64, 1.0).unwrap();
        let (sigma, nu) = (1.0, 2.0);
        let z = bc(0.4, 0.3, -0.2, 0.5);
        for n in 0..8 {
            let v = sbt_forward_integral(|x| Bicomplex::real(psi_n(n, sigma, x)), sigma, nu, z, &rule).unwrap();
            assert!(v.max_abs_diff(&phi_n(n, nu, z)) < 1e-12, "n={n}");
            let coeff = sbt_forward(&HermiteCoeffVector::basis(sigma, n).unwrap(), nu).unwrap();
            assert!(coeff.eval(z).max_abs_diff(&phi_n(n, nu, z)) < 1e-13);
        }
    }

    #[test]
    fn analytic_forward_matches_real_line_near_origin() {
        let (sigma, nu) = (0.9, 2.2);
        let rule = gauss_hermite(64, 1.0).unwrap();
        let f = |x: f64| Bicomplex::new(x * x, 0.3, -x, 0.0);
        let fc = |x: Complex64| Bicomplex::from_parts(x * x + Complex64::new(0.0, 0.3), -x);
        let z = bc(0.5, -0.3, 0.2, 0.4);
        let a = sbt_forward_integral(f, sigma, nu, z, &rule).unwrap();
        let b = sbt_forward_integral_analytic(fc, sigma, nu, z, &rule).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-13);
        // Far from the origin only the shifted contour still resolves the kernel.
        let far = bc(9.0, 7.0, -4.0, 8.0);
        let psi3 = |x: Complex64| Bicomplex::from_complex(crate::hermite::psi_all_complex(4, sigma, x)[3]);
        let v = sbt_forward_integral_analytic(psi3, sigma, nu, far, &rule).unwrap();
        let want = phi_n(3, nu, far);
        assert!(v.max_abs_diff(&want) <= 1e-12 * want.norm());
    }

    #[test]
    fn coefficient_round_trip() {
        let f = HermiteCoeffVector::new(0.5, (0..10).map(|n| bc(n as f64, -0.5, 0.1, 2.0 - n as f64)).collect())
            .unwrap();
        let back = sbt_inverse_coeff(&sbt_forward(&f, 3.0).unwrap(), 0.5).unwrap();
        for (a, b) in back.coeffs.iter().zip(&f.coeffs) {
            assert!(a.max_abs_diff(b) <= 1e-13 * b.norm().max(1.0));
        }
    }

    #[test]
    fn reduced_and_full_inverse_agree() {
        let (sigma, nu) = (1.0, 2.0);
        let f = |z: Bicomplex| z * z * Bicomplex::new(0.5, 0.0, 0.0, 1.0) + Bicomplex::real(0.3);
        let r24 = gauss_hermite(24, 1.0).unwrap();
        let r40 = gauss_hermite(40, 1.0).unwrap();
        for x in [-0.5, 0.4] {
            let full = sbt_inverse_integral_full(f, sigma, nu, x, &r24).unwrap();
            let reduced = sbt_inverse_integral(f, sigma, nu, x, &r40).unwrap();
            assert!(full.max_abs_diff(&reduced) < 1e-10, "{full} vs {reduced}");
        }
    }

    #[test]
    fn inverse_of_basis() {
        let (sigma, nu) = (0.8, 1.5);
        let rule = gauss_hermite(80, 1.0).unwrap();
        for n in 0..6 {
            for x in [-1.1, 0.3, 0.9] {
                let v = sbt_inverse_integral(|z| phi_n(n, nu, z), sigma, nu, x, &rule).unwrap();
                assert!(v.max_abs_diff(&Bicomplex::real(psi_n(n, sigma, x))) < 1e-10, "n={n} x={x}: {v}");
            }
        }
    }

    #[test]
    fn s_transform_lifts_monomials() {
        let nu = 2.0;
        let rule = gauss_hermite(40, 1.0).unwrap();
        let z = bc(0.3, -0.4, 0.6, 0.1);
        let one = s_transform(|_| Bicomplex::ONE, nu, z, &rule).unwrap();
        assert!(one.max_abs_diff(&Bicomplex::ONE) < 1e-12);
        let sq = s_transform(|xi| Bicomplex::from_complex(xi * xi), nu, z, &rule).unwrap();
        assert!(sq.max_abs_diff(&(z * z)) < 1e-11);
    }
}
