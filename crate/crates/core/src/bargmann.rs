//! Discrete realizations of `L^{2,σ}_𝔹ℂ(ℝ)` and the bicomplex Bargmann space
//! `F^{2,ν}(𝔹ℂ)`.
//!
//! Functions are carried as finite coefficient vectors: over the orthonormal
//! Hermite functions `ψ_n^σ` on the real side, over the monomials `Zⁿ` on the
//! holomorphic side. Quadrature forms of the inner products and of the
//! reproducing projection exist to cross-check the coefficient arithmetic.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bicomplex::{Bicomplex, IdempotentPair};
use crate::error::{require_positive, BcError, Result};
use crate::hermite::psi_all;
use crate::quadrature::{integrate_bicomplex, integrate_real, normalization_c, NormSpace, QuadratureRule};

/// `φ = Σ c_n ψ_n^σ` in `L^{2,σ}_𝔹ℂ(ℝ)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HermiteCoeffVector {
    pub sigma: f64,
    pub coeffs: Vec<Bicomplex>,
}

/// `f(Z) = Σ A_n Zⁿ` in `F^{2,ν}(𝔹ℂ)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonomialCoeffVector {
    pub nu: f64,
    pub coeffs: Vec<Bicomplex>,
}

/// Norm induced by a bicomplex inner product: `‖φ‖² = (‖φ⁺‖² + ‖φ⁻‖²)/2`,
/// which is the real scalar part of `⟨φ, φ⟩ = ‖φ⁺‖² e+ + ‖φ⁻‖² e−`.
pub fn induced_norm(self_inner: Bicomplex) -> f64 {
    self_inner.x1.max(0.0).sqrt()
}

/// Squared norms `(‖φ⁺‖², ‖φ⁻‖²)` of the two idempotent channels of `⟨φ, φ⟩`.
pub fn channel_norms_sq(self_inner: Bicomplex) -> (f64, f64) {
    let p = self_inner.to_idempotent();
    (p.alpha.re, p.beta.re)
}

impl HermiteCoeffVector {
    pub fn new(sigma: f64, coeffs: Vec<Bicomplex>) -> Result<Self> {
        require_positive("sigma", sigma)?;
        Ok(Self { sigma, coeffs })
    }

    /// The basis function `ψ_n^σ`.
    pub fn basis(sigma: f64, n: usize) -> Result<Self> {
        let mut coeffs = vec![Bicomplex::ZERO; n + 1];
        coeffs[n] = Bicomplex::ONE;
        Self::new(sigma, coeffs)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> Bicomplex {
        let psi = psi_all(self.coeffs.len(), self.sigma, x);
        self.coeffs.iter().zip(psi).map(|(c, p)| *c * p).sum()
    }

    /// `Σ |c_n|²` with the Euclidean bicomplex modulus.
    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(Bicomplex::norm_sqr).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("sigma", self.sigma)?;
        if let Some(n) = self.coeffs.iter().position(|c| !c.is_finite()) {
            return Err(BcError::InvalidParameter(format!("coefficient {n} is not finite")));
        }
        Ok(())
    }
}

impl MonomialCoeffVector {
    pub fn new(nu: f64, coeffs: Vec<Bicomplex>) -> Result<Self> {
        require_positive("nu", nu)?;
        Ok(Self { nu, coeffs })
    }

    /// The monomial `E_n(Z) = Zⁿ`.
    pub fn monomial(nu: f64, n: usize) -> Result<Self> {
        let mut coeffs = vec![Bicomplex::ZERO; n + 1];
        coeffs[n] = Bicomplex::ONE;
        Self::new(nu, coeffs)
    }

    /// The orthonormal basis element `φ_n(Z) = (νⁿ/(2ⁿ n!))^{1/2} Zⁿ`.
    pub fn basis(nu: f64, n: usize) -> Result<Self> {
        let mut coeffs = vec![Bicomplex::ZERO; n + 1];
        coeffs[n] = Bicomplex::real(monomial_norm_sq(n, nu).sqrt().recip());
        Self::new(nu, coeffs)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation in idempotent coordinates.
    pub fn eval(&self, z: Bicomplex) -> Bicomplex {
        let zp = z.to_idempotent();
        let acc = self.coeffs.iter().rev().fold(IdempotentPair::default(), |acc, a| {
            let a = a.to_idempotent();
            IdempotentPair::new(acc.alpha * zp.alpha + a.alpha, acc.beta * zp.beta + a.beta)
        });
        Bicomplex::from_idempotent(acc)
    }

    /// Complex coefficient lists of `φ⁺` and `φ⁻` in `f(αe+ + βe−) = φ⁺(α)e+ + φ⁻(β)e−`.
    pub fn idempotent_split(&self) -> (Vec<Complex64>, Vec<Complex64>) {
        self.coeffs.iter().map(|a| {
            let p = a.to_idempotent();
            (p.alpha, p.beta)
        })
        .unzip()
    }

    pub fn from_split(nu: f64, plus: &[Complex64], minus: &[Complex64]) -> Result<Self> {
        let n = plus.len().max(minus.len());
        let zero = Complex64::new(0.0, 0.0);
        let coeffs = (0..n)
            .map(|k| {
                Bicomplex::from_components(
                    plus.get(k).copied().unwrap_or(zero),
                    minus.get(k).copied().unwrap_or(zero),
                )
            })
            .collect();
        Self::new(nu, coeffs)
    }

    /// Growth-condition norm `Σ (2ⁿ n!/νⁿ) |A_n|²`.
    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().enumerate().map(|(n, a)| monomial_norm_sq(n, self.nu) * a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// `Γ_θ f(Z) = f(θZ)`, i.e. `A_n ↦ θⁿ A_n`.
    pub fn dilate(&self, theta: Bicomplex) -> Self {
        let mut power = Bicomplex::ONE;
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = *a * power;
                power *= theta;
                v
            })
            .collect();
        Self { nu: self.nu, coeffs }
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("nu", self.nu)?;
        if let Some(n) = self.coeffs.iter().position(|c| !c.is_finite()) {
            return Err(BcError::InvalidParameter(format!("coefficient {n} is not finite")));
        }
        Ok(())
    }
}

/// `‖Zⁿ‖²_{F^{2,ν}} = 2ⁿ n!/νⁿ`.
pub fn monomial_norm_sq(n: usize, nu: f64) -> f64 {
    if n > 150 {
        let ln_fact: f64 = (2..=n).map(|k| (k as f64).ln()).sum();
        (n as f64 * (2.0 / nu).ln() + ln_fact).exp()
    } else {
        (1..=n).fold(1.0, |acc, k| acc * 2.0 * k as f64 / nu)
    }
}

/// `φ_n(Z) = (νⁿ/(2ⁿ n!))^{1/2} Zⁿ`.
pub fn phi_n(n: usize, nu: f64, z: Bicomplex) -> Bicomplex {
    z.powu(n as u32) * monomial_norm_sq(n, nu).sqrt().recip()
}

/// Reproducing kernel `e^{γ z w̄}` of the classical Bargmann space `F^{2,γ}(ℂ)`.
pub fn kernel_k_c(gamma: f64, z: Complex64, w: Complex64) -> Complex64 {
    (z * w.conj() * gamma).exp()
}

/// Reproducing kernel `K^ν_𝔹ℂ(Z, W) = e^{(ν/2) Z W*}` of `F^{2,ν}(𝔹ℂ)`.
pub fn kernel_k_bc(nu: f64, z: Bicomplex, w: Bicomplex) -> Bicomplex {
    (z * w.conj_star() * (0.5 * nu)).exp()
}

/// Truncated expansion `Σ_{n<terms} φ_n(Z) φ_n(W)*` of the reproducing kernel.
pub fn kernel_k_bc_series(nu: f64, z: Bicomplex, w: Bicomplex, terms: usize) -> Bicomplex {
    let t = (z * w.conj_star()).to_idempotent();
    let mut term = IdempotentPair::diagonal(Complex64::new(1.0, 0.0));
    let mut acc = IdempotentPair::default();
    for n in 0..terms {
        acc.alpha += term.alpha;
        acc.beta += term.beta;
        let s = 0.5 * nu / (n as f64 + 1.0);
        term = IdempotentPair::new(term.alpha * t.alpha * s, term.beta * t.beta * s);
    }
    Bicomplex::from_idempotent(acc)
}

fn check_sigma(a: f64, b: f64) -> Result<()> {
    if a != b {
        return Err(BcError::DimensionMismatch(format!("sigma {a} vs {b}")));
    }
    Ok(())
}

/// `⟨φ, ψ⟩_{L^{2,σ}_𝔹ℂ} = Σ c_n d_n*` for coefficient vectors.
pub fn inner_l2sigma(f: &HermiteCoeffVector, g: &HermiteCoeffVector) -> Result<Bicomplex> {
    check_sigma(f.sigma, g.sigma)?;
    Ok(f.coeffs.iter().zip(&g.coeffs).map(|(c, d)| c.bc_inner(*d)).sum())
}

/// `c_0^σ ∫_ℝ φ(x) ψ(x)* e^{−σx²} dx` by quadrature.
pub fn inner_l2sigma_quadrature<F, G>(f: F, g: G, sigma: f64, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(f64) -> Bicomplex,
    G: Fn(f64) -> Bicomplex,
{
    require_positive("sigma", sigma)?;
    let rule = rule.rescaled(sigma)?;
    let v = integrate_real(|x| f(x).bc_inner(g(x)), &rule)?;
    Ok(v * normalization_c(NormSpace::Real, sigma))
}

/// `⟨f, g⟩_{F^{2,ν}} = Σ (2ⁿ n!/νⁿ) A_n B_n*` for coefficient vectors.
pub fn inner_h2nu(f: &MonomialCoeffVector, g: &MonomialCoeffVector) -> Result<Bicomplex> {
    if f.nu != g.nu {
        return Err(BcError::DimensionMismatch(format!("nu {} vs {}", f.nu, g.nu)));
    }
    Ok(f
        .coeffs
        .iter()
        .zip(&g.coeffs)
        .enumerate()
        .map(|(n, (a, b))| a.bc_inner(*b) * monomial_norm_sq(n, f.nu))
        .sum())
}

/// `c_𝔹ℂ^ν ∫_𝔹ℂ f(Z) g(Z)* e^{−ν|Z|²} dλ(Z)` by four-dimensional quadrature.
pub fn inner_h2nu_quadrature<F, G>(f: F, g: G, nu: f64, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(Bicomplex) -> Bicomplex + Sync,
    G: Fn(Bicomplex) -> Bicomplex + Sync,
{
    require_positive("nu", nu)?;
    let rule = rule.rescaled(0.5 * nu)?;
    let v = integrate_bicomplex(|z| f(z).bc_inner(g(z)), nu, &rule)?;
    Ok(v * normalization_c(NormSpace::Bicomplex, nu))
}

/// Reproducing projection `P^ν f(Z) = c_𝔹ℂ^ν ∫ e^{(ν/2) Z W*} f(W) e^{−ν|W|²} dλ(W)`.
pub fn project_p<F>(f: F, nu: f64, z: Bicomplex, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(Bicomplex) -> Bicomplex + Sync,
{
    require_positive("nu", nu)?;
    let rule = rule.rescaled(0.5 * nu)?;
    let v = integrate_bicomplex(|w| kernel_k_bc(nu, z, w) * f(w), nu, &rule)?;
    Ok(v * normalization_c(NormSpace::Bicomplex, nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::gauss_hermite;

    fn bc(a: f64, b: f64, c: f64, d: f64) -> Bicomplex {
        Bicomplex::new(a, b, c, d)
    }

    #[test]
    fn classical_kernel() {
        let w = Complex64::new(0.3, -0.8);
        assert_eq!(kernel_k_c(1.7, Complex64::new(0.0, 0.0), w), Complex64::new(1.0, 0.0));
        let e = kernel_k_c(1.0, Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
        assert!((e.re - std::f64::consts::E).abs() < 1e-15 && e.im == 0.0);
    }

    #[test]
    fn classical_kernel_reproduces_monomials() {
        let gamma = 1.0;
        let rule = gauss_hermite(40, gamma).unwrap();
        let z = Complex64::new(0.4, -0.3);
        let v = crate::quadrature::integrate_complex(
            |xi| Bicomplex::from_complex(kernel_k_c(gamma, z, xi) * xi * xi),
            &rule,
        )
        .unwrap()
            * normalization_c(NormSpace::Complex, gamma);
        assert!((v.z1() - z * z).norm() < 1e-13);
    }

    #[test]
    fn bicomplex_kernel_examples() {
        let nu = 2.0;
        let w = bc(0.3, 0.1, -0.4, 0.2);
        assert_eq!(kernel_k_bc(nu, Bicomplex::ZERO, w), Bicomplex::ONE);
        let k = kernel_k_bc(nu, Bicomplex::real(0.7), Bicomplex::real(-0.4));
        assert!(k.max_abs_diff(&Bicomplex::real((0.5 * nu * 0.7 * -0.4f64).exp())) < 1e-15);

        let z = bc(0.2, -0.5, 0.6, 0.1);
        let (zp, wp) = (z.to_idempotent(), w.to_idempotent());
        let split = Bicomplex::from_components(
            kernel_k_c(nu / 2.0, zp.alpha, wp.alpha),
            kernel_k_c(nu / 2.0, zp.beta, wp.beta),
        );
        assert!(kernel_k_bc(nu, z, w).max_abs_diff(&split) < 1e-14);
        assert!(kernel_k_bc(nu, z, w).max_abs_diff(&kernel_k_bc(nu, w, z).conj_star()) < 1e-14);
    }

    #[test]
    fn kernel_series_matches_closed_form() {
        let z = bc(0.9, -0.3, 0.5, 0.6);
        let w = bc(-0.4, 0.7, 0.2, -0.8);
        let v = kernel_k_bc_series(2.0, z, w, 40);
        assert!(v.max_abs_diff(&kernel_k_bc(2.0, z, w)) < 1e-12);
    }

    #[test]
    fn l2_inner_products() {
        let s = 1.0;
        let p1 = HermiteCoeffVector::basis(s, 1).unwrap();
        let p3 = HermiteCoeffVector::basis(s, 3).unwrap();
        assert_eq!(inner_l2sigma(&p3, &p3).unwrap(), Bicomplex::ONE);
        assert_eq!(inner_l2sigma(&p1, &p3).unwrap(), Bicomplex::ZERO);
        let a = HermiteCoeffVector::new(s, vec![Bicomplex::E_PLUS]).unwrap();
        let b = HermiteCoeffVector::new(s, vec![Bicomplex::E_MINUS]).unwrap();
        assert_eq!(inner_l2sigma(&a, &b).unwrap(), Bicomplex::ZERO);
        let other = HermiteCoeffVector::basis(2.0, 1).unwrap();
        assert!(matches!(inner_l2sigma(&p1, &other), Err(BcError::DimensionMismatch(_))));
    }

    #[test]
    fn l2_coefficient_and_quadrature_forms_agree() {
        let s = 0.8;
        let f = HermiteCoeffVector::new(
            s,
            (0..=12).map(|n| bc(0.1 * n as f64, -0.05, 0.3 / (n as f64 + 1.0), 0.02 * n as f64)).collect(),
        )
        .unwrap();
        let g = HermiteCoeffVector::new(s, (0..=12).map(|n| bc(0.2, 0.1 * n as f64, -0.1, 0.05)).collect())
            .unwrap();
        let rule = gauss_hermite(64, 1.0).unwrap();
        let q = inner_l2sigma_quadrature(|x| f.eval(x), |x| g.eval(x), s, &rule).unwrap();
        assert!(q.max_abs_diff(&inner_l2sigma(&f, &g).unwrap()) < 1e-9);
        let n2 = inner_l2sigma_quadrature(|x| f.eval(x), |x| f.eval(x), s, &rule).unwrap();
        assert!((induced_norm(n2).powi(2) - f.norm_sq()).abs() < 1e-9);
    }

    #[test]
    fn h2_inner_products() {
        let nu = 2.0;
        let one = MonomialCoeffVector::monomial(nu, 0).unwrap();
        assert_eq!(inner_h2nu(&one, &one).unwrap(), Bicomplex::ONE);
        for n in 0..6 {
            let p = MonomialCoeffVector::basis(nu, n).unwrap();
            assert!(inner_h2nu(&p, &p).unwrap().max_abs_diff(&Bicomplex::ONE) < 1e-14);
        }
        assert_eq!(monomial_norm_sq(0, 1.3), 1.0);
        assert_eq!(monomial_norm_sq(2, 2.0), 2.0);
        assert_eq!(monomial_norm_sq(3, 1.0), 48.0);
    }

    #[test]
    fn monomial_norms_by_quadrature() {
        let rule = gauss_hermite(16, 1.0).unwrap();
        for nu in [1.0, 2.0] {
            for n in 0..=3usize {
                let v = inner_h2nu_quadrature(|z| z.powu(n as u32), |z| z.powu(n as u32), nu, &rule).unwrap();
                let want = monomial_norm_sq(n, nu);
                assert!((v.x1 - want).abs() <= 1e-10 * want, "n={n} nu={nu}: {v}");
            }
        }
        let cross = inner_h2nu_quadrature(|z| z, |z| z * z, 2.0, &rule).unwrap();
        assert!(cross.norm() < 1e-12);
    }

    #[test]
    fn evaluation_and_split() {
        let nu = 2.0;
        let c = MonomialCoeffVector::new(nu, vec![Bicomplex::ONE]).unwrap();
        assert_eq!(c.eval(bc(0.3, 0.4, -1.0, 2.0)), Bicomplex::ONE);
        let id = MonomialCoeffVector::new(nu, vec![Bicomplex::ZERO, Bicomplex::ONE]).unwrap();
        assert_eq!(id.eval(Bicomplex::J), Bicomplex::J);

        let real = MonomialCoeffVector::new(nu, vec![Bicomplex::real(1.0), Bicomplex::real(-2.0)]).unwrap();
        let (p, m) = real.idempotent_split();
        assert_eq!(p, m);
        let ep = MonomialCoeffVector::new(nu, vec![Bicomplex::E_PLUS]).unwrap();
        let (p, m) = ep.idempotent_split();
        assert_eq!(p, vec![Complex64::new(1.0, 0.0)]);
        assert_eq!(m, vec![Complex64::new(0.0, 0.0)]);

        let f = MonomialCoeffVector::new(nu, vec![bc(0.1, 0.2, 0.3, 0.4), bc(-0.5, 0.0, 0.2, 0.1), bc(0.0, 0.3, 0.0, -0.7)])
            .unwrap();
        let (p, m) = f.idempotent_split();
        let back = MonomialCoeffVector::from_split(nu, &p, &m).unwrap();
        assert!(back.coeffs.iter().zip(&f.coeffs).all(|(a, b)| a.max_abs_diff(b) < 1e-15));

        let z = bc(0.4, -0.2, 0.1, 0.5);
        let zp = z.to_idempotent();
        let horner = |c: &[Complex64], x: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |a, k| a * x + k);
        let want = Bicomplex::from_components(horner(&p, zp.alpha), horner(&m, zp.beta));
        assert!(f.eval(z).max_abs_diff(&want) < 1e-15);

        // ‖f‖² = (‖φ⁺‖² + ‖φ⁻‖²)/2
        let chan = |c: &[Complex64]| c.iter().enumerate().map(|(n, a)| monomial_norm_sq(n, nu) * a.norm_sqr()).sum::<f64>();
        assert!((f.norm_sq() - 0.5 * (chan(&p) + chan(&m))).abs() < 1e-14);
    }

    #[test]
    fn projection_examples() {
        let nu = 2.0;
        let rule = gauss_hermite(24, 1.0).unwrap();
        let z = bc(0.3, 0.0, 0.1, 0.0);
        let one = project_p(|_| Bicomplex::ONE, nu, z, &rule).unwrap();
        assert!(one.max_abs_diff(&Bicomplex::ONE) < 1e-12);
        let sq = project_p(|w| w * w, nu, z, &rule).unwrap();
        assert!(sq.max_abs_diff(&(z * z)) < 1e-10);
        let anti = project_p(|w| w.conj_star(), nu, z, &rule).unwrap();
        assert!(anti.norm() < 1e-10);
    }

    #[test]
    fn json_shape() {
        let v = HermiteCoeffVector::new(1.0, vec![Bicomplex::ONE]).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"sigma":1.0,"coeffs":[[1.0,0.0,0.0,0.0]]}"#);
        let m: MonomialCoeffVector = serde_json::from_str(r#"{"nu":2,"coeffs":[[0,0,0,0],[1,0,0,0]]}"#).unwrap();
        assert_eq!(m.coeffs.len(), 2);
    }
}
