//! Gauss–Hermite rules for Gaussian-weighted integrals over ℝ, ℂ and 𝔹ℂ.
//!
//! A rule with exponent `γ` approximates `∫ f(t) e^{−γ t²} dt ≈ Σ w_k f(t_k)`.
//! The standard (`γ = 1`) nodes are the eigenvalues of the symmetric tridiagonal
//! Jacobi matrix of the Hermite recurrence, polished by Newton steps on the
//! orthonormal Hermite polynomial; the weights come from the Christoffel sum
//! `w_k = 1 / Σ_{j<M} p_j(t_k)²`, which keeps full relative accuracy even for
//! the tiny weights at the ends of high-order rules.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::bicomplex::{pairwise_sum, Bicomplex, IdempotentPair};
use crate::error::{require_positive, BcError, Result};

/// Quadrature order used when callers have no reason to pick another.
pub const DEFAULT_ORDER: usize = 64;

/// Gauss–Hermite nodes and weights for the weight `e^{−γ t²}`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    gamma: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// Rescales the rule to a different exponent: nodes and weights divide by `√(γ'/γ)`.
    pub fn rescaled(&self, gamma: f64) -> Result<Self> {
        require_positive("gamma", gamma)?;
        let s = (gamma / self.gamma).sqrt();
        Ok(Self {
            gamma,
            nodes: self.nodes.iter().map(|t| t / s).collect(),
            weights: self.weights.iter().map(|w| w / s).collect(),
        })
    }
}

/// Builds the `order`-point Gauss–Hermite rule for the weight `e^{−γ t²}`.
pub fn gauss_hermite(order: usize, gamma: f64) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(BcError::InvalidParameter("quadrature order must be at least 1".into()));
    }
    require_positive("gamma", gamma)?;
    let (nodes, weights) = standard_rule(order)?;
    let s = gamma.sqrt();
    Ok(QuadratureRule {
        gamma,
        nodes: nodes.iter().map(|t| t / s).collect(),
        weights: weights.iter().map(|w| w / s).collect(),
    })
}

fn standard_rule(order: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if order == 1 {
        return Ok((vec![0.0], vec![PI.sqrt()]));
    }
    let mut jacobi = DMatrix::<f64>::zeros(order, order);
    for k in 1..order {
        let b = (k as f64 / 2.0).sqrt();
        jacobi[(k - 1, k)] = b;
        jacobi[(k, k - 1)] = b;
    }
    let eigen = jacobi
        .try_symmetric_eigen(f64::EPSILON, 100 * order)
        .ok_or(BcError::Convergence(order))?;
    let mut nodes: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    nodes.sort_by(f64::total_cmp);

    // Symmetrize, polish, and take the Christoffel weights.
    let half = order / 2;
    let mut out_nodes = vec![0.0; order];
    let mut out_weights = vec![0.0; order];
    for k in 0..half {
        let guess = 0.5 * (nodes[order - 1 - k] - nodes[k]);
        let t = newton_polish(order, guess);
        let w = christoffel_weight(order, t);
        out_nodes[k] = -t;
        out_nodes[order - 1 - k] = t;
        out_weights[k] = w;
        out_weights[order - 1 - k] = w;
    }
    if order % 2 == 1 {
        out_nodes[half] = 0.0;
        out_weights[half] = christoffel_weight(order, 0.0);
    }
    Ok((out_nodes, out_weights))
}

/// Values `(p_{M−1}(t), p_M(t))` of the orthonormal Hermite polynomials
/// (`∫ p_j p_k e^{−t²} dt = δ_jk`), together with the accumulated `Σ_{j<M} p_j²`.
/// Everything is reported relative to a common scale `e^{log_scale}`.
struct Orthonormal {
    prev: f64,
    last: f64,
    sum_sq: f64,
    log_scale: f64,
}

fn orthonormal_hermite(order: usize, t: f64) -> Orthonormal {
    const BIG: f64 = 1e100;
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25);
    let mut sum_sq = 0.0;
    let mut log_scale = 0.0;
    for j in 0..order {
        sum_sq += cur * cur;
        let jf = j as f64;
        let next = (2.0 / (jf + 1.0)).sqrt() * t * cur - (jf / (jf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > BIG {
            prev /= BIG;
            cur /= BIG;
            sum_sq /= BIG * BIG;
            log_scale += BIG.ln();
        }
    }
    Orthonormal { prev, last: cur, sum_sq, log_scale }
}

fn newton_polish(order: usize, mut t: f64) -> f64 {
    // p_M' = √(2M) p_{M−1}
    for _ in 0..4 {
        let h = orthonormal_hermite(order, t);
        if h.prev == 0.0 {
            break;
        }
        let step = h.last / ((2.0 * order as f64).sqrt() * h.prev);
        t -= step;
        if step.abs() <= 4.0 * f64::EPSILON * t.abs().max(1.0) {
            break;
        }
    }
    t
}

fn christoffel_weight(order: usize, t: f64) -> f64 {
    let h = orthonormal_hermite(order, t);
    (-2.0 * h.log_scale).exp() / h.sum_sq
}

fn check_finite(value: Bicomplex, at: impl FnOnce() -> String) -> Result<Bicomplex> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(BcError::NonFinite(at()))
    }
}

/// `Σ_k w_k f(t_k) ≈ ∫_ℝ f(t) e^{−γ t²} dt`.
pub fn integrate_real<F>(f: F, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(f64) -> Bicomplex,
{
    let terms = rule
        .iter()
        .map(|(t, w)| check_finite(f(t), || format!("t = {t}")).map(|v| v * w))
        .collect::<Result<Vec<_>>>()?;
    Ok(pairwise_sum(&terms))
}

/// Tensor-product rule for `∫_ℂ f(ξ) e^{−γ|ξ|²} dλ(ξ)`, `ξ = u + iv`, `dλ = du dv`.
pub fn integrate_complex<F>(f: F, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(Complex64) -> Bicomplex,
{
    let rows = rule
        .iter()
        .map(|(u, wu)| {
            let row = rule
                .iter()
                .map(|(v, wv)| {
                    let xi = Complex64::new(u, v);
                    check_finite(f(xi), || format!("xi = {xi}")).map(|val| val * wv)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(pairwise_sum(&row) * wu)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(pairwise_sum(&rows))
}

/// `∫_𝔹ℂ f(Z) e^{−ν|Z|²} dλ(Z)`, evaluated in idempotent coordinates as
/// `¼ ∬ f(α e+ + β e−) e^{−(ν/2)|α|²} e^{−(ν/2)|β|²} dλ(α) dλ(β)`.
///
/// The rule must carry `γ = ν/2`. The outer (α) grid is split across threads;
/// partial sums are combined in node order so the result does not depend on
/// the thread count.
pub fn integrate_bicomplex<F>(f: F, nu: f64, rule: &QuadratureRule) -> Result<Bicomplex>
where
    F: Fn(Bicomplex) -> Bicomplex + Sync,
{
    require_positive("nu", nu)?;
    if (rule.gamma() - 0.5 * nu).abs() > 1e-12 * nu {
        return Err(BcError::InvalidParameter(format!(
            "bicomplex quadrature needs a rule with gamma = nu/2 = {}, got {}",
            0.5 * nu,
            rule.gamma()
        )));
    }
    let outer: Vec<(Complex64, f64)> = rule
        .iter()
        .flat_map(|(u, wu)| rule.iter().map(move |(v, wv)| (Complex64::new(u, v), wu * wv)))
        .collect();
    let partials = outer
        .par_iter()
        .map(|&(alpha, wa)| {
            let inner = outer
                .iter()
                .map(|&(beta, wb)| {
                    let z = Bicomplex::from_idempotent(IdempotentPair::new(alpha, beta));
                    check_finite(f(z), || format!("Z = {z}")).map(|v| v * wb)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(pairwise_sum(&inner) * wa)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(pairwise_sum(&partials) * 0.25)
}

/// Which space a Gaussian normalization constant belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormSpace {
    /// ℝ, `c_0^α = (α/π)^{1/2}`.
    Real,
    /// ℂ, `c_1^α = α/π`.
    Complex,
    /// ℂ², `c_2^α = (α/π)²`.
    Complex2,
    /// 𝔹ℂ ≅ ℝ⁴, `c_𝔹ℂ^α = (α/π)²`.
    Bicomplex,
}

/// The constant making `c ∫_X e^{−α‖u‖²} dλ(u) = 1`.
pub fn normalization_c(space: NormSpace, alpha: f64) -> f64 {
    let r = alpha / PI;
    match space {
        NormSpace::Real => r.sqrt(),
        NormSpace::Complex => r,
        NormSpace::Complex2 | NormSpace::Bicomplex => r * r,
    }
}
