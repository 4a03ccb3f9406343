//! Rescaled Hermite polynomials `H_n^σ(x) = (−1)^n e^{σx²} dⁿ/dxⁿ e^{−σx²}`,
//! the orthonormal functions `ψ_n^σ` of `L^{2,σ}(ℝ)` and the generating
//! function `G^{σ,ν}(x; Z)`.
//!
//! `H_n^σ` obeys `H_{n+1} = 2σx H_n − 2σn H_{n−1}` with `H_0 = 1`, and
//! `‖H_n^σ‖² = 2ⁿ σⁿ n!` for the probability measure `c_0^σ e^{−σx²} dx`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bicomplex::{Bicomplex, IdempotentPair};
use crate::error::{require_positive, Result};

/// Gaussian-weight scale `σ` of `L^{2,σ}(ℝ)` and Bargmann weight `ν` of `F^{2,ν}(𝔹ℂ)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HermiteParams {
    pub sigma: f64,
    pub nu: f64,
}

impl HermiteParams {
    pub fn new(sigma: f64, nu: f64) -> Result<Self> {
        require_positive("sigma", sigma)?;
        require_positive("nu", nu)?;
        Ok(Self { sigma, nu })
    }
}

impl Default for HermiteParams {
    /// `σ = 1`, `ν = 2`, so that `√(ν/4σ) = 1/√2` (the classical Bargmann convention).
    fn default() -> Self {
        Self { sigma: 1.0, nu: 2.0 }
    }
}

pub fn hermite_sigma(n: usize, sigma: f64, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let next = 2.0 * sigma * (x * cur - k as f64 * prev);
        prev = cur;
        cur = next;
    }
    cur
}

pub fn hermite_sigma_complex(n: usize, sigma: f64, z: Complex64) -> Complex64 {
    let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    for k in 0..n {
        let next = (z * cur - prev * k as f64) * (2.0 * sigma);
        prev = cur;
        cur = next;
    }
    cur
}

/// Holomorphic extension `H_n^σ(Z)`, evaluated per idempotent component.
pub fn hermite_sigma_bc(n: usize, sigma: f64, z: Bicomplex) -> Bicomplex {
    Bicomplex::from_idempotent(z.to_idempotent().map(|c| hermite_sigma_complex(n, sigma, c)))
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// `‖H_n^σ‖²_{L^{2,σ}(ℝ)} = 2ⁿ σⁿ n!`.
pub fn hermite_norm_sq(n: usize, sigma: f64) -> f64 {
    if n > 150 {
        (n as f64 * (2.0 * sigma).ln() + ln_factorial(n)).exp()
    } else {
        (1..=n).fold(1.0, |acc, k| acc * 2.0 * sigma * k as f64)
    }
}

/// `ψ_n^σ(x) = H_n^σ(x) / ‖H_n^σ‖`.
pub fn psi_n(n: usize, sigma: f64, x: f64) -> f64 {
    hermite_sigma(n, sigma, x) / hermite_norm_sq(n, sigma).sqrt()
}

/// `ψ_0^σ(x), …, ψ_{len−1}^σ(x)` through the normalized recurrence
/// `ψ_{n+1} = x √(2σ/(n+1)) ψ_n − √(n/(n+1)) ψ_{n−1}`.
pub fn psi_all(len: usize, sigma: f64, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(len);
    let (mut prev, mut cur) = (0.0, 1.0);
    for n in 0..len {
        out.push(cur);
        let nf = n as f64;
        let next = x * (2.0 * sigma / (nf + 1.0)).sqrt() * cur - (nf / (nf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    out
}

/// `ψ_0^σ(z), …` for a complex argument.
pub fn psi_all_complex(len: usize, sigma: f64, z: Complex64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(len);
    let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    for n in 0..len {
        out.push(cur);
        let nf = n as f64;
        let next = z * cur * (2.0 * sigma / (nf + 1.0)).sqrt() - prev * (nf / (nf + 1.0)).sqrt();
        prev = cur;
        cur = next;
    }
    out
}

/// `G^{σ,ν}(x; Z) = exp(−(ν/4)(Z*)² + √(σν) x Z*)`.
pub fn generating_g(sigma: f64, nu: f64, x: f64, z: Bicomplex) -> Bicomplex {
    let w = z.conj_star().to_idempotent();
    let a = (sigma * nu).sqrt() * x;
    Bicomplex::from_idempotent(w.map(|c| (-0.25 * nu * c * c + a * c).exp()))
}

/// Partial sum `Σ_{n<terms} ψ_n^σ(x) φ_n(Z*)` of the generating-function series,
/// with `φ_n(W) = (νⁿ/(2ⁿ n!))^{1/2} Wⁿ`.
pub fn generating_g_series(sigma: f64, nu: f64, x: f64, z: Bicomplex, terms: usize) -> Bicomplex {
    let psi = psi_all(terms, sigma, x);
    let w = z.conj_star().to_idempotent();
    let mut acc = IdempotentPair::default();
    let mut phi = IdempotentPair::diagonal(Complex64::new(1.0, 0.0));
    for (n, p) in psi.iter().enumerate() {
        acc.alpha += phi.alpha * *p;
        acc.beta += phi.beta * *p;
        // φ_{n+1}(W) = φ_n(W) W √(ν / (2(n+1)))
        let step = (nu / (2.0 * (n as f64 + 1.0))).sqrt();
        phi = IdempotentPair::new(phi.alpha * w.alpha * step, phi.beta * w.beta * step);
    }
    Bicomplex::from_idempotent(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{gauss_hermite, integrate_real, normalization_c, NormSpace};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Coefficients of `P_n` with `dⁿ/dxⁿ e^{−σx²} = P_n(x) e^{−σx²}`, built by
    /// differentiating symbolically: `P_{n+1} = P_n' − 2σx P_n`.
    fn rodrigues_poly(n: usize, sigma: f64) -> Vec<f64> {
        let mut p = vec![1.0];
        for _ in 0..n {
            let mut next = vec![0.0; p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                if k > 0 {
                    next[k - 1] += k as f64 * c;
                }
                next[k + 1] -= 2.0 * sigma * c;
            }
            p = next;
        }
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        p.iter().map(|c| sign * c).collect()
    }

    fn horner(p: &[f64], x: f64) -> f64 {
        p.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    fn physicists(n: usize, x: f64) -> f64 {
        let fact = |k: usize| (1..=k).fold(1.0, |a, i| a * i as f64);
        (0..=n / 2)
            .map(|m| {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                sign * fact(n) * (2.0 * x).powi((n - 2 * m) as i32) / (fact(m) * fact(n - 2 * m))
            })
            .sum()
    }

    #[test]
    fn low_order_closed_forms() {
        for (sigma, x) in [(1.0, 0.3), (2.5, -1.1), (0.4, 2.0)] {
            assert_eq!(hermite_sigma(0, sigma, x), 1.0);
            assert_eq!(hermite_sigma(1, sigma, x), 2.0 * sigma * x);
            let h2 = 4.0 * sigma * sigma * x * x - 2.0 * sigma;
            assert!((hermite_sigma(2, sigma, x) - h2).abs() < 1e-13);
        }
    }

    #[test]
    fn recurrence_matches_symbolic_differentiation() {
        for sigma in [0.5, 1.0, 1.7] {
            for n in 0..=6 {
                let p = rodrigues_poly(n, sigma);
                for x in [-1.3, -0.2, 0.0, 0.45, 2.1] {
                    let want = horner(&p, x);
                    let got = hermite_sigma(n, sigma, x);
                    assert!((got - want).abs() <= 1e-12 * want.abs().max(1.0), "n={n} sigma={sigma} x={x}");
                }
            }
        }
    }

    #[test]
    fn unit_sigma_is_physicists_hermite() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let x: f64 = rng.random_range(-3.0..3.0);
            for n in 0..=10 {
                let want = physicists(n, x);
                assert!((hermite_sigma(n, 1.0, x) - want).abs() <= 1e-10 * want.abs().max(1.0));
            }
        }
    }

    #[test]
    fn bicomplex_extension() {
        let z = Bicomplex::new(0.2, -0.4, 1.1, 0.3);
        let s = 0.8;
        assert_eq!(hermite_sigma_bc(0, s, z), Bicomplex::ONE);
        assert!(hermite_sigma_bc(1, s, z).max_abs_diff(&(z * (2.0 * s))) < 1e-15);
        assert!(hermite_sigma_bc(2, 1.0, Bicomplex::IJ).max_abs_diff(&Bicomplex::real(2.0)) < 1e-15);
        for n in 0..8 {
            let h = hermite_sigma_bc(n, s, Bicomplex::real(0.7));
            assert!(h.max_abs_diff(&Bicomplex::real(hermite_sigma(n, s, 0.7))) < 1e-13);
        }
    }

    #[test]
    fn norm_squares() {
        assert_eq!(hermite_norm_sq(0, 3.0), 1.0);
        assert_eq!(hermite_norm_sq(1, 1.0), 2.0);
        assert_eq!(hermite_norm_sq(3, 2.0), 384.0);
        let direct = hermite_norm_sq(150, 0.5);
        let logspace = (150.0 * (1.0f64).ln() + ln_factorial(150)).exp();
        assert!((direct - logspace).abs() / direct < 1e-12);
        assert!(hermite_norm_sq(160, 0.5).is_finite());
    }

    #[test]
    fn norm_squares_by_quadrature() {
        for (n, sigma) in [(1usize, 1.0), (3, 2.0), (5, 0.7)] {
            let rule = gauss_hermite(16, sigma).unwrap();
            let c0 = normalization_c(NormSpace::Real, sigma);
            let v = integrate_real(|x| Bicomplex::real(hermite_sigma(n, sigma, x).powi(2)), &rule).unwrap();
            let want = hermite_norm_sq(n, sigma);
            assert!((v.x1 * c0 - want).abs() <= 1e-12 * want);
        }
    }

    #[test]
    fn orthonormality() {
        for sigma in [1.0, 0.6] {
            let rule = gauss_hermite(64, sigma).unwrap();
            let c0 = normalization_c(NormSpace::Real, sigma);
            for m in 0..=12 {
                for n in 0..=12 {
                    let v = integrate_real(|x| Bicomplex::real(psi_n(m, sigma, x) * psi_n(n, sigma, x)), &rule)
                        .unwrap();
                    let delta = if m == n { 1.0 } else { 0.0 };
                    assert!((v.x1 * c0 - delta).abs() <= 1e-10, "m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn normalized_recurrence_agrees() {
        for x in [-2.0, 0.1, 1.4] {
            let all = psi_all(25, 1.3, x);
            for (n, v) in all.iter().enumerate() {
                let want = psi_n(n, 1.3, x);
                assert!((v - want).abs() <= 1e-11 * want.abs().max(1.0));
            }
            let allc = psi_all_complex(25, 1.3, Complex64::new(x, 0.0));
            for (a, b) in all.iter().zip(&allc) {
                assert!((b - a).norm() < 1e-14 * a.abs().max(1.0));
            }
        }
    }

    #[test]
    fn generating_function_closed_form() {
        let (sigma, nu) = (1.3, 0.9);
        assert_eq!(generating_g(sigma, nu, 0.4, Bicomplex::ZERO), Bicomplex::ONE);
        let z = 0.35;
        let g = generating_g(sigma, nu, 0.4, Bicomplex::real(z));
        let want = (-nu * z * z / 4.0 + (sigma * nu).sqrt() * 0.4 * z).exp();
        assert!(g.max_abs_diff(&Bicomplex::real(want)) < 1e-15);
    }

    #[test]
    fn generating_series_converges() {
        let z = Bicomplex::new(0.3, 0.0, 0.2, 0.0);
        let closed = generating_g(1.0, 2.0, 0.5, z);
        let series = generating_g_series(1.0, 2.0, 0.5, z, 41);
        assert!(closed.max_abs_diff(&series) <= 1e-10);
    }

    #[test]
    fn generating_series_error_decreases() {
        let z = Bicomplex::new(0.9, -0.4, 0.6, 0.8);
        let (sigma, nu, x) = (1.0, 2.0, 0.7);
        let closed = generating_g(sigma, nu, x, z);
        let errors: Vec<f64> =
            (10..60).map(|n| generating_g_series(sigma, nu, x, z, n).max_abs_diff(&closed)).collect();
        // Odd and even truncations approach the limit separately.
        for w in errors.windows(3) {
            if w[0] > 1e-14 {
                assert!(w[2] <= w[0], "{errors:?}");
            }
        }
        assert!(*errors.last().unwrap() < 1e-13);
    }

    #[test]
    fn generating_functions_pair_into_the_kernel() {
        // ⟨G(·; Z*), G(·; W*)⟩ = exp((ν/2) Z W*)
        let (sigma, nu) = (1.0, 2.0);
        let rule = gauss_hermite(64, sigma).unwrap();
        let c0 = normalization_c(NormSpace::Real, sigma);
        let pts = [
            Bicomplex::ZERO,
            Bicomplex::new(0.3, 0.1, -0.2, 0.4),
            Bicomplex::new(-0.5, 0.2, 0.1, 0.0),
            Bicomplex::new(0.0, 0.6, 0.3, -0.3),
            Bicomplex::new(0.8, 0.0, 0.0, 0.2),
        ];
        for z in pts {
            for w in pts {
                let v = integrate_real(
                    |x| generating_g(sigma, nu, x, z.conj_star()) * generating_g(sigma, nu, x, w.conj_star()).conj_star(),
                    &rule,
                )
                .unwrap()
                    * c0;
                let k = (z * w.conj_star() * (nu / 2.0)).exp();
                assert!(v.max_abs_diff(&k) < 1e-8, "{z} {w}");
            }
        }
    }
}
