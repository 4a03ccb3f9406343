//! Bicomplex fractional Fourier transform, Mehler kernels and the Gaussian
//! integral they rest on.
//!
//! `F_θ` acts on `L^{2,σ}_𝔹ℂ(ℝ)` through the kernel
//! `K_θ(x, y) = c_0^σ (1 − θ²)^{−1/2} exp(−σ(x − θy)²/(1 − θ²))`,
//! which is `c_0^σ e^{−σx²}` times the Mehler kernel `Σ θⁿ ψ_n(x) ψ_n(y)`.
//! The Hermite functions are therefore eigenfunctions: `F_θ ψ_n = θⁿ ψ_n`.
//! On the unit torus (`|α| = |β| = 1` for `θ = α e+ + β e−`) the transform is
//! unitary in each idempotent channel.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bargmann::HermiteCoeffVector;
use crate::bicomplex::{Bicomplex, IdempotentPair};
use crate::error::{require_positive, BcError, Result};
use crate::hermite::{psi_all, psi_all_complex};
use crate::quadrature::{integrate_real, normalization_c, NormSpace, QuadratureRule};

/// How far a component of θ may sit from the unit circle and still count as on it.
pub const TORUS_TOL: f64 = 1e-12;
/// Components closer than this to `±1` make `1 − θ²` singular.
pub const EXCLUSION_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaMode {
    /// Both idempotent components on the unit circle.
    UnitTorus,
    /// Both idempotent components strictly inside the unit disc.
    Interior,
}

/// A validated transform parameter.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaParam {
    theta: Bicomplex,
    mode: ThetaMode,
}

fn check_excluded(theta: Bicomplex) -> Result<()> {
    let p = theta.to_idempotent();
    for (name, c) in [("alpha", p.alpha), ("beta", p.beta)] {
        if !(c.re.is_finite() && c.im.is_finite()) {
            return Err(BcError::InvalidParameter(format!("theta component {name} is not finite")));
        }
        if (c - 1.0).norm() <= EXCLUSION_TOL || (c + 1.0).norm() <= EXCLUSION_TOL {
            return Err(BcError::ExcludedParameter(format!("theta component {name} = {c} is ±1")));
        }
    }
    Ok(())
}

impl ThetaParam {
    pub fn unit_torus(theta: Bicomplex) -> Result<Self> {
        check_excluded(theta)?;
        let p = theta.to_idempotent();
        for (name, c) in [("alpha", p.alpha), ("beta", p.beta)] {
            if (c.norm() - 1.0).abs() > TORUS_TOL {
                return Err(BcError::Domain(format!("|{name}| = {} is not 1", c.norm())));
            }
        }
        Ok(Self { theta, mode: ThetaMode::UnitTorus })
    }

    pub fn interior(theta: Bicomplex) -> Result<Self> {
        check_excluded(theta)?;
        let p = theta.to_idempotent();
        for (name, c) in [("alpha", p.alpha), ("beta", p.beta)] {
            if c.norm() >= 1.0 {
                return Err(BcError::Domain(format!("|{name}| = {} is not below 1", c.norm())));
            }
        }
        Ok(Self { theta, mode: ThetaMode::Interior })
    }

    /// `θ = e^{iφ₁} e+ + e^{iφ₂} e−`.
    pub fn from_phases(phi1: f64, phi2: f64) -> Result<Self> {
        Self::unit_torus(Bicomplex::from_components(Complex64::from_polar(1.0, phi1), Complex64::from_polar(1.0, phi2)))
    }

    /// Picks the mode from the moduli of the components.
    pub fn classify(theta: Bicomplex) -> Result<Self> {
        Self::unit_torus(theta).or_else(|e| match e {
            BcError::Domain(_) => Self::interior(theta),
            other => Err(other),
        })
    }

    pub fn theta(&self) -> Bicomplex {
        self.theta
    }

    pub fn mode(&self) -> ThetaMode {
        self.mode
    }

    /// The inverse parameter `θ*`, equal to `θ⁻¹` on the torus.
    pub fn inverse(&self) -> Result<Self> {
        match self.mode {
            ThetaMode::UnitTorus => Self::unit_torus(self.theta.conj_star()),
            ThetaMode::Interior => Err(BcError::Domain("only unit-torus parameters are invertible".into())),
        }
    }

    /// `θρ`, failing if the product lands on an excluded point.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Self::classify(self.theta * other.theta)
    }
}

/// Per-channel kernel data: `c_0 (1 − c²)^{−1/2}` and `1/(1 − c²)`.
fn channel_factors(sigma: f64, c: Complex64) -> (Complex64, Complex64) {
    let d = Complex64::new(1.0, 0.0) - c * c;
    (normalization_c(NormSpace::Real, sigma) / d.sqrt(), d.inv())
}

/// `K_θ(x, y)`.
pub fn frft_kernel(sigma: f64, theta: &ThetaParam, x: f64, y: f64) -> Result<Bicomplex> {
    require_positive("sigma", sigma)?;
    let p = theta.theta.to_idempotent().map(|c| {
        let (pref, inv) = channel_factors(sigma, c);
        let d = -c * y + x;
        pref * (-(d * d) * inv * sigma).exp()
    });
    Ok(Bicomplex::from_idempotent(p))
}

/// Coefficient path: `c_n ↦ θⁿ c_n`.
pub fn frft_coeff(psi: &HermiteCoeffVector, theta: &ThetaParam) -> Result<HermiteCoeffVector> {
    psi.validate()?;
    let mut power = Bicomplex::ONE;
    let coeffs = psi
        .coeffs
        .iter()
        .map(|c| {
            let v = *c * power;
            power *= theta.theta;
            v
        })
        .collect();
    HermiteCoeffVector::new(psi.sigma, coeffs)
}

/// `F_θ ψ (y)` through the coefficient path.
pub fn frft_apply(psi: &HermiteCoeffVector, theta: &ThetaParam, y: f64) -> Result<Bicomplex> {
    Ok(frft_coeff(psi, theta)?.eval(y))
}

/// `F_θ^{-1} = F_{θ*}` on the coefficient path.
pub fn frft_inverse(psi: &HermiteCoeffVector, theta: &ThetaParam) -> Result<HermiteCoeffVector> {
    frft_coeff(psi, &theta.inverse()?)
}

/// Integral path `∫_ℝ f(x) K_θ(x, y) dx`.
///
/// On the torus `|K_θ(x, y)|` decays like `e^{−σx²/2}`, so the rule weight is
/// `γ = σ/2` and the remaining chirp is folded into the integrand. Accuracy
/// degrades for large `|y|`, where the integrand oscillates with frequency
/// `σ|y|/|sin φ|`.
pub fn frft_integral<F>(f: F, sigma: f64, theta: &ThetaParam, y: f64, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(f64) -> Bicomplex,
{
    require_positive("sigma", sigma)?;
    let half = 0.5 * sigma;
    let rule = rule.rescaled(half)?;
    let p = theta.theta.to_idempotent();
    let (pa, ia) = channel_factors(sigma, p.alpha);
    let (pb, ib) = channel_factors(sigma, p.beta);
    let chan = |pref: Complex64, inv: Complex64, c: Complex64, x: f64| {
        let d = -c * y + x;
        pref * (-(d * d) * inv * sigma + half * x * x).exp()
    };
    integrate_real(
        |x| f(x) * Bicomplex::from_components(chan(pa, ia, p.alpha, x), chan(pb, ib, p.beta, x)),
        &rule,
    )
}

/// Integral path for inputs that continue analytically to `ℂ`, with `y ∈ ℂ`.
///
/// In each idempotent channel the kernel is `p e^{−q(x − c y)²}` with
/// `Re q > 0`. Moving the contour onto `x = c y + s/√q` leaves the plain weight
/// `e^{−s²}`, so nothing oscillates and nested transforms stay accurate. `f` is
/// evaluated at complex points; channel `α` reads the `e+` part of `f`, channel
/// `β` the `e−` part.
pub fn frft_integral_analytic<F>(f: F, sigma: f64, theta: &ThetaParam, y: Complex64, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(Complex64) -> Bicomplex,
{
    require_positive("sigma", sigma)?;
    let rule = rule.rescaled(1.0)?;
    let p = theta.theta.to_idempotent();
    let setup = |c: Complex64| {
        let (pref, inv) = channel_factors(sigma, c);
        let root = (inv * sigma).sqrt();
        (c * y, root.inv(), pref / root)
    };
    let (ca, sa, pa) = setup(p.alpha);
    let (cb, sb, pb) = setup(p.beta);
    let v = integrate_real(
        |s| {
            let fa = f(ca + sa * s).to_idempotent().alpha;
            let fb = f(cb + sb * s).to_idempotent().beta;
            Bicomplex::from_components(fa * pa, fb * pb)
        },
        &rule,
    )?;
    Ok(v)
}

fn mehler_channel(sigma: f64, c: Complex64, x: Complex64, y: Complex64) -> Complex64 {
    let d = Complex64::new(1.0, 0.0) - c * c;
    ((c * x * y * 2.0 - c * c * (x * x + y * y)) * sigma / d).exp() / d.sqrt()
}

fn check_mehler_theta(theta: Bicomplex) -> Result<()> {
    check_excluded(theta)?;
    let p = theta.to_idempotent();
    for c in [p.alpha, p.beta] {
        if c.norm() > 1.0 + TORUS_TOL {
            return Err(BcError::Domain(format!("|theta component| = {} exceeds 1", c.norm())));
        }
    }
    Ok(())
}

/// Closed-form Mehler kernel
/// `(1 − θ²)^{−1/2} exp(σ(2θxy − θ²(x² + y²))/(1 − θ²)) = Σ θⁿ ψ_n(x) ψ_n(y)`.
pub fn mehler_closed(sigma: f64, theta: Bicomplex, x: f64, y: f64) -> Result<Bicomplex> {
    require_positive("sigma", sigma)?;
    check_mehler_theta(theta)?;
    let (x, y) = (Complex64::new(x, 0.0), Complex64::new(y, 0.0));
    Ok(Bicomplex::from_idempotent(theta.to_idempotent().map(|c| mehler_channel(sigma, c, x, y))))
}

/// Partial sum `Σ_{n<terms} θⁿ ψ_n(x) ψ_n(y)`.
pub fn mehler_series(sigma: f64, theta: Bicomplex, x: f64, y: f64, terms: usize) -> Bicomplex {
    let px = psi_all(terms, sigma, x);
    let py = psi_all(terms, sigma, y);
    let mut power = Bicomplex::ONE;
    let mut acc = Bicomplex::ZERO;
    for (a, b) in px.iter().zip(&py) {
        acc += power * (a * b);
        power *= theta;
    }
    acc
}

/// Mehler kernel with a bicomplex first argument, `Σ θⁿ ψ_n(Z) ψ_n(y)`, evaluated
/// per idempotent channel.
pub fn mehler_bilinear_bc(sigma: f64, theta: Bicomplex, z: Bicomplex, y: f64) -> Result<Bicomplex> {
    require_positive("sigma", sigma)?;
    check_mehler_theta(theta)?;
    let t = theta.to_idempotent();
    let zp = z.to_idempotent();
    let y = Complex64::new(y, 0.0);
    Ok(Bicomplex::from_components(
        mehler_channel(sigma, t.alpha, zp.alpha, y),
        mehler_channel(sigma, t.beta, zp.beta, y),
    ))
}

/// Partial sum of [`mehler_bilinear_bc`].
pub fn mehler_bilinear_series(sigma: f64, theta: Bicomplex, z: Bicomplex, y: f64, terms: usize) -> Bicomplex {
    let t = theta.to_idempotent();
    let zp = z.to_idempotent();
    let py = psi_all(terms, sigma, y);
    let channel = |c: Complex64, w: Complex64| {
        let pz = psi_all_complex(terms, sigma, w);
        let mut power = Complex64::new(1.0, 0.0);
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, b) in pz.iter().zip(&py) {
            acc += power * a * b;
            power *= c;
        }
        acc
    };
    Bicomplex::from_idempotent(IdempotentPair::new(channel(t.alpha, zp.alpha), channel(t.beta, zp.beta)))
}

/// Kernel `c_0^σ e^{−σx²} Σ θⁿ ψ_n(x) ψ_n(Z)` of the transform that sends
/// `ψ_n` to `θⁿ ψ_n(Z)` on the bicomplex domain.
pub fn ck_frft_kernel(sigma: f64, theta: Bicomplex, x: f64, z: Bicomplex) -> Result<Bicomplex> {
    let m = mehler_bilinear_bc(sigma, theta, z, x)?;
    Ok(m * (normalization_c(NormSpace::Real, sigma) * (-sigma * x * x).exp()))
}

/// `∫_ℂ exp(a ξ² + b ξ̄² + c ξ + d ξ̄ − γ|ξ|²) dλ(ξ)
///   = π (γ² − 4ab)^{−1/2} exp((a d² + b c² + γ c d)/(γ² − 4ab))`.
///
/// The integral converges exactly when `Re(a + b)² + Im(a − b)² < γ²`; outside
/// that region a `Domain` error is returned.
pub fn gaussian_integral_closed(gamma: f64, a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Complex64> {
    require_positive("gamma", gamma)?;
    let s = (a + b).re;
    let t = (a - b).im;
    if s * s + t * t >= gamma * gamma {
        return Err(BcError::Domain(format!(
            "Gaussian integral diverges: Re(a+b)² + Im(a−b)² = {} ≥ γ² = {}",
            s * s + t * t,
            gamma * gamma
        )));
    }
    let det = Complex64::new(gamma * gamma, 0.0) - a * b * 4.0;
    Ok(((a * d * d + b * c * c + c * d * gamma) / det).exp() * std::f64::consts::PI / det.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::psi_n;
    use crate::quadrature::{gauss_hermite, integrate_complex};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn parameter_validation() {
        assert!(ThetaParam::unit_torus(Bicomplex::I).is_ok());
        assert!(ThetaParam::unit_torus(Bicomplex::J).is_ok());
        assert!(matches!(ThetaParam::unit_torus(Bicomplex::ONE), Err(BcError::ExcludedParameter(_))));
        assert!(matches!(ThetaParam::unit_torus(-Bicomplex::ONE), Err(BcError::ExcludedParameter(_))));
        // ij = e+ − e− has components ±1.
        assert!(matches!(ThetaParam::unit_torus(Bicomplex::IJ), Err(BcError::ExcludedParameter(_))));
        assert!(matches!(ThetaParam::unit_torus(Bicomplex::real(0.5)), Err(BcError::Domain(_))));
        assert!(ThetaParam::interior(Bicomplex::real(0.5)).is_ok());
        assert!(matches!(ThetaParam::interior(Bicomplex::I), Err(BcError::Domain(_))));
        assert_eq!(ThetaParam::classify(Bicomplex::real(0.3)).unwrap().mode(), ThetaMode::Interior);
        assert_eq!(ThetaParam::classify(Bicomplex::I).unwrap().mode(), ThetaMode::UnitTorus);
        let t = ThetaParam::from_phases(FRAC_PI_2, FRAC_PI_2).unwrap();
        assert!(t.theta().max_abs_diff(&Bicomplex::I) < 1e-15);
    }

    #[test]
    fn quarter_turn_is_the_fourier_kernel() {
        let t = ThetaParam::unit_torus(Bicomplex::I).unwrap();
        for (x, y) in [(0.0, 0.0), (0.5, -1.2), (1.3, 0.7)] {
            let k = frft_kernel(1.0, &t, x, y).unwrap();
            let want = c(-0.5 * x * x + 0.5 * y * y, x * y).exp() / (2.0 * PI).sqrt();
            assert!(k.max_abs_diff(&Bicomplex::from_complex(want)) < 1e-14, "{k}");
        }
    }

    #[test]
    fn kernel_is_gaussian_times_mehler() {
        let sigma = 0.7;
        let t = ThetaParam::from_phases(FRAC_PI_3, -FRAC_PI_4).unwrap();
        for (x, y) in [(0.2, 0.4), (-1.0, 0.3)] {
            let k = frft_kernel(sigma, &t, x, y).unwrap();
            let m = mehler_closed(sigma, t.theta(), x, y).unwrap()
                * (normalization_c(NormSpace::Real, sigma) * (-sigma * x * x).exp());
            assert!(k.max_abs_diff(&m) < 1e-14);
        }
    }

    #[test]
    fn hermite_functions_are_eigenfunctions() {
        let sigma = 1.0;
        let rule = gauss_hermite(64, 1.0).unwrap();
        let t = ThetaParam::from_phases(FRAC_PI_4, 2.0 * FRAC_PI_3).unwrap();
        for n in 0..6 {
            for y in [-1.0, 0.0, 0.6] {
                let v = frft_integral(|x| Bicomplex::real(psi_n(n, sigma, x)), sigma, &t, y, &rule).unwrap();
                let want = t.theta().powu(n as u32) * psi_n(n, sigma, y);
                assert!(v.max_abs_diff(&want) < 1e-10, "n={n} y={y}: {v} vs {want}");
            }
        }
    }

    #[test]
    fn contour_path_matches_real_line_path() {
        let sigma = 1.2;
        let rule = gauss_hermite(64, 1.0).unwrap();
        let t = ThetaParam::from_phases(2.0 * FRAC_PI_3, -FRAC_PI_4).unwrap();
        let f = |x: f64| Bicomplex::new(x, 0.5, -x * x, 1.0);
        let fc = |x: Complex64| Bicomplex::from_parts(x + c(0.0, 0.5), -x * x + c(0.0, 1.0));
        for y in [-0.9, 0.0, 0.7] {
            let real = frft_integral(f, sigma, &t, y, &rule).unwrap();
            let contour = frft_integral_analytic(fc, sigma, &t, c(y, 0.0), &rule).unwrap();
            assert!(real.max_abs_diff(&contour) < 1e-11, "{real} vs {contour}");
        }
    }

    #[test]
    fn coefficient_path_inverse() {
        let t = ThetaParam::from_phases(0.3, -1.1).unwrap();
        let psi = HermiteCoeffVector::new(1.0, vec![Bicomplex::ONE, Bicomplex::J, Bicomplex::new(0.1, 0.2, 0.3, 0.4)])
            .unwrap();
        let back = frft_inverse(&frft_coeff(&psi, &t).unwrap(), &t).unwrap();
        for (a, b) in back.coeffs.iter().zip(&psi.coeffs) {
            assert!(a.max_abs_diff(b) < 1e-15);
        }
        assert!(ThetaParam::interior(Bicomplex::real(0.5)).unwrap().inverse().is_err());
    }

    #[test]
    fn mehler_series_converges_inside_the_disc() {
        let theta = Bicomplex::from_components(c(0.3, 0.4), c(-0.5, 0.1));
        for (x, y) in [(0.1, 0.2), (-0.8, 0.5)] {
            let s = mehler_series(1.0, theta, x, y, 60);
            let m = mehler_closed(1.0, theta, x, y).unwrap();
            assert!(s.max_abs_diff(&m) < 1e-12);
        }
        let z = Bicomplex::new(0.3, -0.2, 0.1, 0.4);
        let s = mehler_bilinear_series(1.0, theta, z, 0.4, 60);
        assert!(s.max_abs_diff(&mehler_bilinear_bc(1.0, theta, z, 0.4).unwrap()) < 1e-12);
        assert!(mehler_closed(1.0, Bicomplex::real(2.0), 0.0, 0.0).is_err());
    }

    #[test]
    fn gaussian_integral_against_quadrature() {
        let gamma = 1.5;
        let rule = gauss_hermite(48, gamma).unwrap();
        let cases = [
            (c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)),
            (c(0.2, 0.1), c(-0.1, 0.3), c(0.5, -0.2), c(0.1, 0.4)),
            (c(0.0, 0.4), c(0.0, -0.2), c(-0.3, 0.0), c(0.2, 0.2)),
        ];
        for (a, b, cc, d) in cases {
            let q = integrate_complex(
                |xi| Bicomplex::from_complex((a * xi * xi + b * xi.conj() * xi.conj() + cc * xi + d * xi.conj()).exp()),
                &rule,
            )
            .unwrap();
            let want = gaussian_integral_closed(gamma, a, b, cc, d).unwrap();
            assert!((q.z1() - want).norm() < 1e-10 && q.z2().norm() < 1e-14, "{q} vs {want}");
        }
        assert!((gaussian_integral_closed(1.0, c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap() - PI).norm() < 1e-15);
        // |Re(a+b)| < γ alone is not enough: here Im(a−b) breaks convergence.
        assert!(matches!(
            gaussian_integral_closed(1.0, c(0.0, 0.6), c(0.0, -0.6), c(0.0, 0.0), c(0.0, 0.0)),
            Err(BcError::Domain(_))
        ));
    }
}
