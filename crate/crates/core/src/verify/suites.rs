use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI, SQRT_2};

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Case, Suite, VerifyConfig};
use crate::bargmann::*;
use crate::bicomplex::{Bicomplex, NULL_CONE_TOL};
use crate::error::Result;
use crate::frft::*;
use crate::hermite::*;
use crate::quadrature::*;
use crate::transforms::*;

/// Order of the complex-plane rule used by the inverse transform.
const INVERSE_ORDER: usize = 80;
/// Orders of the four-dimensional rules; polynomial integrands of the tested
/// degrees are integrated exactly.
const BC_ORDER_POLY: usize = 16;
const BC_ORDER_KERNEL: usize = 24;

const Y_POINTS: [f64; 7] = [-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub value: String,
    pub error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConventionCheck {
    pub selected: String,
    pub candidates: Vec<Candidate>,
}

/// Conventions the report pins down numerically.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Conventions {
    /// Sign of the exponent `±(ν/2) Z ξ̄` in the lifting transform.
    pub s_transform_sign: ConventionCheck,
    /// Whether the FrFT kernel uses `θ` or `θ*` to match `B⁻¹ Γ_θ B`.
    pub frft_kernel_parameter: ConventionCheck,
}

fn pick(candidates: Vec<Candidate>) -> ConventionCheck {
    let selected = candidates
        .iter()
        .min_by(|a, b| a.error.total_cmp(&b.error))
        .map(|c| c.value.clone())
        .unwrap_or_default();
    ConventionCheck { selected, candidates }
}

pub(super) fn conventions(cfg: &VerifyConfig) -> Result<Conventions> {
    let nu = cfg.nu;
    let sigma = cfg.sigma;
    let rule = gauss_hermite(40, 1.0)?;
    let z = Bicomplex::new(0.3, -0.2, 0.4, 0.1);
    let e3 = |xi: Complex64| Bicomplex::from_complex(xi * xi * xi);
    let plus = s_transform(e3, nu, z, &rule)?.max_abs_diff(&z.powu(3));
    // e^{−(ν/2) Z ξ̄} is the same integral evaluated at −Z.
    let minus = s_transform(e3, nu, -z, &rule)?.max_abs_diff(&z.powu(3));

    let theta = cfg.theta.map_or_else(|| ThetaParam::from_phases(FRAC_PI_4, FRAC_PI_3), Ok)?;
    let psi = HermiteCoeffVector::basis(sigma, 3)?;
    let factored = sbt_inverse_coeff(&sbt_forward(&psi, nu)?.dilate(theta.theta()), sigma)?;
    let real_rule = gauss_hermite(cfg.order, 1.0)?;
    let mut err_theta = 0.0f64;
    let mut err_star = 0.0f64;
    for y in [-0.8, 0.5] {
        let want = factored.eval(y);
        err_theta = err_theta.max(frft_integral(|x| psi.eval(x), sigma, &theta, y, &real_rule)?.max_abs_diff(&want));
        err_star = err_star.max(frft_integral(|x| psi.eval(x), sigma, &theta.inverse()?, y, &real_rule)?.max_abs_diff(&want));
    }
    Ok(Conventions {
        s_transform_sign: pick(vec![
            Candidate { value: "+".into(), error: plus },
            Candidate { value: "-".into(), error: minus },
        ]),
        frft_kernel_parameter: pick(vec![
            Candidate { value: "theta".into(), error: err_theta },
            Candidate { value: "theta_star".into(), error: err_star },
        ]),
    })
}

pub(super) fn build(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<Case>> {
    Ok(match suite {
        Suite::Algebra => algebra(),
        Suite::Hermite => hermite(cfg),
        Suite::Quadrature => quadrature(cfg),
        Suite::Bargmann => bargmann(cfg),
        Suite::Sbt => sbt(cfg),
        Suite::Frft => frft(cfg)?,
        Suite::Mehler => mehler(cfg),
        Suite::Gaussian => gaussian(cfg),
        Suite::All => unreachable!("expanded by the runner"),
    })
}

fn rand_bc(rng: &mut ChaCha8Rng, scale: f64) -> Bicomplex {
    Bicomplex::new(
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
    )
}

/// Uniform in the ball `|Z| ≤ radius` of ℝ⁴ (not uniform in volume).
fn rand_ball(rng: &mut ChaCha8Rng, radius: f64) -> Bicomplex {
    let z = rand_bc(rng, 1.0);
    let r = rng.random_range(0.0..radius);
    z * (r / z.norm().max(f64::MIN_POSITIVE))
}

fn rand_complex(rng: &mut ChaCha8Rng, scale: f64) -> Complex64 {
    Complex64::new(rng.random_range(-scale..scale), rng.random_range(-scale..scale))
}

fn rand_coeffs(rng: &mut ChaCha8Rng, len: usize) -> Vec<Bicomplex> {
    (0..len).map(|_| rand_bc(rng, 1.0)).collect()
}

fn psi_c(n: usize, sigma: f64, x: Complex64) -> Complex64 {
    psi_all_complex(n + 1, sigma, x)[n]
}

/// `ψ = Σ c_n ψ_n` continued to complex arguments.
fn eval_complex(psi: &HermiteCoeffVector, x: Complex64) -> Bicomplex {
    let p = psi_all_complex(psi.coeffs.len(), psi.sigma, x);
    psi.coeffs.iter().zip(p).map(|(c, v)| c.mul_complex(v)).sum()
}

fn algebra() -> Vec<Case> {
    vec![
        Case::new("algebra.idempotents", "e+² = e+, e−² = e−, e+ + e− = 1, e+ − e− = ij, e+e− = 0", 0.0, |_| {
            let (p, m) = (Bicomplex::E_PLUS, Bicomplex::E_MINUS);
            Ok([
                (p * p).max_abs_diff(&p),
                (m * m).max_abs_diff(&m),
                (p + m).max_abs_diff(&Bicomplex::ONE),
                (p - m).max_abs_diff(&Bicomplex::IJ),
                (p * m).max_abs_diff(&Bicomplex::ZERO),
            ]
            .into_iter()
            .fold(0.0, f64::max))
        }),
        Case::new(
            "algebra.idempotent_round_trip",
            "max |from_idempotent(to_idempotent(Z)) − Z| / (eps |Z|) over 10⁴ random Z",
            4.0,
            |rng| {
                let mut worst = 0.0f64;
                for _ in 0..10_000 {
                    let scale = 10f64.powi(rng.random_range(-3..4));
                    let z = rand_bc(rng, scale);
                    let back = Bicomplex::from_idempotent(z.to_idempotent());
                    worst = worst.max(back.max_abs_diff(&z) / (f64::EPSILON * z.norm()));
                }
                Ok(worst)
            },
        ),
        Case::new("algebra.conjugations", "involutions and (ZW)* = Z*W*, ZZ* = |α|²e+ + |β|²e−", 1e-14, |rng| {
            let mut worst = 0.0f64;
            for _ in 0..200 {
                let (z, w) = (rand_bc(rng, 1.0), rand_bc(rng, 1.0));
                let p = z.to_idempotent();
                let zz = Bicomplex::from_components(p.alpha.norm_sqr().into(), p.beta.norm_sqr().into());
                worst = worst
                    .max(z.conj_star().conj_star().max_abs_diff(&z))
                    .max(z.conj_dagger().conj_dagger().max_abs_diff(&z))
                    .max(z.conj_tilde().conj_tilde().max_abs_diff(&z))
                    .max((z * w).conj_star().max_abs_diff(&(z.conj_star() * w.conj_star())))
                    .max((z * z.conj_star()).max_abs_diff(&zz));
            }
            Ok(worst)
        }),
        Case::new("algebra.norm", "|Z|² = (|α|² + |β|²)/2 = scalar part of ⟨Z, Z⟩ (relative)", 1e-14, |rng| {
            let mut worst = 0.0f64;
            for _ in 0..1000 {
                let z = rand_bc(rng, 2.0);
                let p = z.to_idempotent();
                let n2 = z.norm_sqr();
                worst = worst
                    .max(((p.alpha.norm_sqr() + p.beta.norm_sqr()) / 2.0 - n2).abs() / n2)
                    .max((z.bc_inner(z).x1 - n2).abs() / n2);
            }
            Ok(worst)
        }),
        Case::new("algebra.exp", "exp(Z + W) = exp Z exp W for |Z|, |W| ≤ 1 (relative)", 1e-13, |rng| {
            let mut worst = 0.0f64;
            for _ in 0..500 {
                let (z, w) = (rand_ball(rng, 1.0), rand_ball(rng, 1.0));
                let lhs = (z + w).exp();
                worst = worst.max(lhs.max_abs_diff(&(z.exp() * w.exp())) / lhs.norm());
            }
            Ok(worst)
        }),
        Case::new("algebra.inverse", "Z Z⁻¹ = 1 off the null cone; e+ is rejected", 1e-12, |rng| {
            let mut worst = 0.0f64;
            for _ in 0..500 {
                let z = rand_bc(rng, 1.0);
                if let Ok(inv) = z.inverse() {
                    worst = worst.max((z * inv).max_abs_diff(&Bicomplex::ONE));
                }
            }
            if Bicomplex::E_PLUS.inverse_with_tol(NULL_CONE_TOL).is_ok() {
                worst = f64::INFINITY;
            }
            Ok(worst)
        }),
        Case::new("algebra.sqrt", "sqrt_principal(Z)² = Z (relative)", 1e-14, |rng| {
            let mut worst = 0.0f64;
            for _ in 0..500 {
                let z = rand_bc(rng, 2.0);
                let s = z.sqrt_principal()?;
                worst = worst.max((s * s).max_abs_diff(&z) / z.norm());
            }
            Ok(worst)
        }),
    ]
}

fn hermite(cfg: &VerifyConfig) -> Vec<Case> {
    let (sigma, nu, order) = (cfg.sigma, cfg.nu, cfg.order);
    vec![
        Case::new("hermite.orthonormality", "|⟨ψ_m, ψ_n⟩ − δ_mn| for m, n ≤ 12", 1e-10, move |_| {
            let rule = gauss_hermite(order, sigma)?;
            let c0 = normalization_c(NormSpace::Real, sigma);
            let table: Vec<Vec<f64>> = rule.nodes().iter().map(|&x| psi_all(13, sigma, x)).collect();
            let mut worst = 0.0f64;
            for m in 0..=12 {
                for n in 0..=12 {
                    let v: f64 = table.iter().zip(rule.weights()).map(|(p, w)| w * p[m] * p[n]).sum::<f64>() * c0;
                    worst = worst.max((v - if m == n { 1.0 } else { 0.0 }).abs());
                }
            }
            Ok(worst)
        }),
        Case::new("hermite.norms", "c₀∫(H_n^σ)² e^{−σx²} = 2ⁿσⁿn! for n ≤ 12 (relative)", 1e-10, move |_| {
            let rule = gauss_hermite(order, sigma)?;
            let mut worst = 0.0f64;
            for n in 0..=12 {
                let v = integrate_real(|x| Bicomplex::real(hermite_sigma(n, sigma, x).powi(2)), &rule)?.x1
                    * normalization_c(NormSpace::Real, sigma);
                worst = worst.max((v / hermite_norm_sq(n, sigma) - 1.0).abs());
            }
            Ok(worst)
        }),
        Case::new("hermite.normalized_recurrence", "ψ_n = H_n^σ/‖H_n^σ‖ for n ≤ 30 (relative to max |ψ|)", 1e-11, move |rng| {
            let mut worst = 0.0f64;
            for _ in 0..20 {
                let x = rng.random_range(-3.0..3.0);
                let psi = psi_all(31, sigma, x);
                let scale = psi.iter().fold(1.0f64, |a, v| a.max(v.abs()));
                for (n, p) in psi.iter().enumerate() {
                    let direct = hermite_sigma(n, sigma, x) / hermite_norm_sq(n, sigma).sqrt();
                    worst = worst.max((p - direct).abs() / scale);
                }
            }
            Ok(worst)
        }),
        Case::new("hermite.generating_function", "Σ_{n≤40} ψ_n(x)φ_n(Z*) = G(x; Z), |Z| ≤ 1", 1e-10, move |rng| {
            let mut worst = 0.0f64;
            for _ in 0..10 {
                let x = rng.random_range(-1.5..1.5);
                let z = rand_ball(rng, 1.0);
                let s = generating_g_series(sigma, nu, x, z, 41);
                worst = worst.max(s.max_abs_diff(&generating_g(sigma, nu, x, z)));
            }
            Ok(worst)
        }),
    ]
}

fn quadrature(cfg: &VerifyConfig) -> Vec<Case> {
    let (order, nu) = (cfg.order, cfg.nu);
    vec![
        Case::new("quadrature.moments", "∫t^{2k}e^{−γt²} = Γ(k+½)/γ^{k+½} for k ≤ 20 (relative)", 1e-12, move |_| {
            let mut worst = 0.0f64;
            for gamma in [0.5, 1.0, 2.5] {
                let rule = gauss_hermite(order, gamma)?;
                let mut gamma_half = PI.sqrt(); // Γ(k + 1/2)
                for k in 0..=20 {
                    let v = integrate_real(|t| Bicomplex::real(t.powi(2 * k)), &rule)?.x1;
                    let want = gamma_half / gamma.powf(k as f64 + 0.5);
                    worst = worst.max((v / want - 1.0).abs());
                    gamma_half *= k as f64 + 0.5;
                }
            }
            Ok(worst)
        }),
        Case::new("quadrature.normalizations", "c ∫ e^{−α‖u‖²} = 1 on ℝ, ℂ and 𝔹ℂ", 1e-13, move |_| {
            let alpha = 0.5 * nu;
            let r = gauss_hermite(order, alpha)?;
            let real = integrate_real(|_| Bicomplex::ONE, &r)?.x1 * normalization_c(NormSpace::Real, alpha);
            let cplx = integrate_complex(|_| Bicomplex::ONE, &r)?.x1 * normalization_c(NormSpace::Complex, alpha);
            let r4 = gauss_hermite(8, alpha)?;
            let bc = integrate_bicomplex(|_| Bicomplex::ONE, nu, &r4)?.x1 * normalization_c(NormSpace::Bicomplex, nu);
            Ok([real, cplx, bc].into_iter().map(|v| (v - 1.0).abs()).fold(0.0, f64::max))
        }),
        Case::new("quadrature.complex_kernel", "c₁∫e^{γzξ̄} ξ² e^{−γ|ξ|²} = z²", 1e-12, move |rng| {
            let gamma = 0.5 * nu;
            let r = gauss_hermite(40, gamma)?;
            let mut worst = 0.0f64;
            for _ in 0..5 {
                let z = rand_complex(rng, 1.0);
                let v = integrate_complex(|xi| Bicomplex::from_complex(kernel_k_c(gamma, z, xi) * xi * xi), &r)?
                    * normalization_c(NormSpace::Complex, gamma);
                worst = worst.max((v.z1() - z * z).norm());
            }
            Ok(worst)
        }),
    ]
}

fn bargmann(cfg: &VerifyConfig) -> Vec<Case> {
    let (sigma, nu, order) = (cfg.sigma, cfg.nu, cfg.order);
    vec![
        Case::new(
            "bargmann.monomial_orthogonality",
            "|⟨E_n, E_m⟩ − (2ⁿn!/νⁿ)δ| / (2ⁿn!/νⁿ) for n, m ≤ 6 by 𝔹ℂ quadrature",
            1e-8,
            move |_| {
                let rule = gauss_hermite(BC_ORDER_POLY, 0.5 * nu)?;
                let mut worst = 0.0f64;
                for n in 0..=6u32 {
                    for m in 0..=n {
                        let v = inner_h2nu_quadrature(|z| z.powu(n), |z| z.powu(m), nu, &rule)?;
                        let scale = monomial_norm_sq(n as usize, nu);
                        let want = if n == m { Bicomplex::real(scale) } else { Bicomplex::ZERO };
                        worst = worst.max(v.max_abs_diff(&want) / scale);
                    }
                }
                Ok(worst)
            },
        ),
        Case::new("bargmann.reproducing", "P^ν Zⁿ = Zⁿ for n ≤ 6 at 5 points with |Z| ≤ 1.5", 1e-8, move |rng| {
            let rule = gauss_hermite(BC_ORDER_KERNEL, 0.5 * nu)?;
            let points: Vec<Bicomplex> = (0..5).map(|_| rand_ball(rng, 1.5)).collect();
            let mut worst = 0.0f64;
            for n in 0..=6u32 {
                for z in &points {
                    let v = project_p(|w| w.powu(n), nu, *z, &rule)?;
                    worst = worst.max(v.max_abs_diff(&z.powu(n)));
                }
            }
            Ok(worst)
        }),
        Case::new("bargmann.kernel_expansion", "Σ_{n<40} φ_n(Z)φ_n(W)* = e^{(ν/2)ZW*} for |Z|, |W| ≤ 1.5", 1e-10, move |rng| {
            let mut worst = 0.0f64;
            for _ in 0..20 {
                let (z, w) = (rand_ball(rng, 1.5), rand_ball(rng, 1.5));
                let series: Bicomplex = (0..40).map(|n| phi_n(n, nu, z) * phi_n(n, nu, w).conj_star()).sum();
                worst = worst.max(series.max_abs_diff(&kernel_k_bc(nu, z, w)));
            }
            Ok(worst)
        }),
        Case::new("bargmann.kernel_symmetry", "K(Z, W) = K(W, Z)*", 1e-13, move |rng| {
            let mut worst = 0.0f64;
            for _ in 0..100 {
                let (z, w) = (rand_ball(rng, 1.5), rand_ball(rng, 1.5));
                worst = worst.max(kernel_k_bc(nu, z, w).max_abs_diff(&kernel_k_bc(nu, w, z).conj_star()));
            }
            Ok(worst)
        }),
        Case::new("bargmann.parseval", "coefficient and integral forms of ⟨f, g⟩ agree, degree ≤ 6 (relative)", 1e-8, move |rng| {
            let rule = gauss_hermite(BC_ORDER_POLY, 0.5 * nu)?;
            let mut worst = 0.0f64;
            for _ in 0..3 {
                let f = MonomialCoeffVector::new(nu, rand_coeffs(rng, 7))?;
                let g = MonomialCoeffVector::new(nu, rand_coeffs(rng, 7))?;
                let q = inner_h2nu_quadrature(|z| f.eval(z), |z| g.eval(z), nu, &rule)?;
                let c = inner_h2nu(&f, &g)?;
                worst = worst.max(q.max_abs_diff(&c) / (f.norm() * g.norm()));
            }
            Ok(worst)
        }),
        Case::new("bargmann.pointwise_bound", "excess of |f(Z)| over √2 |e^{(ν/4)ZZ*}| ‖f‖", 0.0, move |rng| {
            let mut worst = 0.0f64;
            for _ in 0..200 {
                let f = MonomialCoeffVector::new(nu, rand_coeffs(rng, 7))?;
                let z = rand_ball(rng, 3.0);
                let bound = SQRT_2 * (z * z.conj_star() * (0.25 * nu)).exp().norm() * f.norm();
                worst = worst.max(f.eval(z).norm() - bound);
            }
            Ok(worst.max(0.0))
        }),
        Case::new("bargmann.l2_forms", "coefficient vs quadrature ⟨φ, ψ⟩ in L^{2,σ}, degree ≤ 12", 1e-9, move |rng| {
            let rule = gauss_hermite(order, sigma)?;
            let f = HermiteCoeffVector::new(sigma, rand_coeffs(rng, 13))?;
            let g = HermiteCoeffVector::new(sigma, rand_coeffs(rng, 13))?;
            let q = inner_l2sigma_quadrature(|x| f.eval(x), |x| g.eval(x), sigma, &rule)?;
            Ok(q.max_abs_diff(&inner_l2sigma(&f, &g)?))
        }),
    ]
}

fn sbt(cfg: &VerifyConfig) -> Vec<Case> {
    let (sigma, nu, order) = (cfg.sigma, cfg.nu, cfg.order);
    vec![
        Case::new("sbt.hermite_action", "B ψ_n = (νⁿ/2ⁿn!)^{1/2} Zⁿ for n ≤ 10, |Z| ≤ 2 (integral path)", 1e-8, move |rng| {
            let rule = gauss_hermite(order, sigma)?;
            let mut worst = 0.0f64;
            for _ in 0..5 {
                let z = rand_ball(rng, 2.0);
                for n in 0..=10 {
                    let v = sbt_forward_integral(|x| Bicomplex::real(psi_n(n, sigma, x)), sigma, nu, z, &rule)?;
                    worst = worst.max(v.max_abs_diff(&(z.powu(n as u32) * monomial_norm_sq(n, nu).sqrt().recip())));
                }
            }
            Ok(worst)
        }),
        Case::new("sbt.isometry", "|‖Bφ‖ − ‖φ‖| on random degree-≤10 vectors", 1e-10, move |rng| {
            let mut worst = 0.0f64;
            for _ in 0..50 {
                let phi = HermiteCoeffVector::new(sigma, rand_coeffs(rng, 11))?;
                let f = sbt_forward(&phi, nu)?;
                let a = induced_norm(inner_h2nu(&f, &f)?);
                let b = induced_norm(inner_l2sigma(&phi, &phi)?);
                worst = worst.max((a - b).abs()).max((f.norm() - phi.norm()).abs());
            }
            Ok(worst)
        }),
        Case::new("sbt.integral_vs_coefficient", "B φ by quadrature vs coefficient path, degree ≤ 10, |Z| ≤ 2", 1e-8, move |rng| {
            let rule = gauss_hermite(order, sigma)?;
            let mut worst = 0.0f64;
            for _ in 0..10 {
                let phi = HermiteCoeffVector::new(sigma, rand_coeffs(rng, 11))?;
                let z = rand_ball(rng, 2.0);
                let v = sbt_forward_integral(|x| phi.eval(x), sigma, nu, z, &rule)?;
                worst = worst.max(v.max_abs_diff(&sbt_forward(&phi, nu)?.eval(z)));
            }
            Ok(worst)
        }),
        Case::new("sbt.round_trip_coefficient", "B⁻¹B = id on coefficients (relative)", 1e-13, move |rng| {
            let mut worst = 0.0f64;
            for _ in 0..50 {
                let phi = HermiteCoeffVector::new(sigma, rand_coeffs(rng, 11))?;
                let back = sbt_inverse_coeff(&sbt_forward(&phi, nu)?, sigma)?;
                for (a, b) in back.coeffs.iter().zip(&phi.coeffs) {
                    worst = worst.max(a.max_abs_diff(b) / b.norm().max(1.0));
                }
            }
            Ok(worst)
        }),
        Case::new(
            "sbt.round_trip_integral",
            "[B]⁻¹ B ψ_n = ψ_n for n ≤ 6 at x ∈ {0, ±0.7, ±1.5}, both transforms by quadrature (contour-shifted forward)",
            1e-7,
            move |_| {
                let fwd = gauss_hermite(order, sigma)?;
                let inv = gauss_hermite(INVERSE_ORDER, 0.5 * nu)?;
                let mut worst = 0.0f64;
                for n in 0..=6 {
                    let bpsi = |z: Bicomplex| {
                        sbt_forward_integral_analytic(|x| Bicomplex::from_complex(psi_c(n, sigma, x)), sigma, nu, z, &fwd)
                            .unwrap_or(Bicomplex::new(f64::NAN, 0.0, 0.0, 0.0))
                    };
                    for x in [-1.5, -0.7, 0.0, 0.7, 1.5] {
                        let v = sbt_inverse_integral(bpsi, sigma, nu, x, &inv)?;
                        worst = worst.max(v.max_abs_diff(&Bicomplex::real(psi_n(n, sigma, x))));
                    }
                }
                Ok(worst)
            },
        ),
        Case::new("sbt.inverse_reduction", "one-plane inverse = four-dimensional inverse on degree-≤4 inputs", 1e-9, move |rng| {
            let r4 = gauss_hermite(BC_ORDER_KERNEL, 0.5 * nu)?;
            let r2 = gauss_hermite(INVERSE_ORDER, 0.5 * nu)?;
            let f = MonomialCoeffVector::new(nu, rand_coeffs(rng, 5))?;
            let x = rng.random_range(-1.0..1.0);
            let full = sbt_inverse_integral_full(|z| f.eval(z), sigma, nu, x, &r4)?;
            let reduced = sbt_inverse_integral(|z| f.eval(z), sigma, nu, x, &r2)?;
            Ok(full.max_abs_diff(&reduced))
        }),
        Case::new("sbt.s_transform", "S^ν e_n = Zⁿ for n ≤ 5 at 5 points (+ sign in the exponent)", 1e-8, move |rng| {
            let rule = gauss_hermite(40, 0.5 * nu)?;
            let mut worst = 0.0f64;
            for _ in 0..5 {
                let z = rand_ball(rng, 1.5);
                for n in 0..=5u32 {
                    let v = s_transform(|xi| Bicomplex::from_complex(xi.powu(n)), nu, z, &rule)?;
                    worst = worst.max(v.max_abs_diff(&z.powu(n)));
                }
            }
            Ok(worst)
        }),
        Case::new("sbt.s_transform_restriction", "S^ν(f restricted to ℂ) = f for random degree-≤5 f", 1e-7, move |rng| {
            let rule = gauss_hermite(40, 0.5 * nu)?;
            let mut worst = 0.0f64;
            for _ in 0..5 {
                let f = MonomialCoeffVector::new(nu, rand_coeffs(rng, 6))?;
                let z = rand_ball(rng, 1.5);
                let v = s_transform(|xi| f.eval(Bicomplex::from_complex(xi)), nu, z, &rule)?;
                worst = worst.max(v.max_abs_diff(&f.eval(z)));
            }
            Ok(worst)
        }),
        Case::new("sbt.s_transform_norms", "‖e_n‖² in L^{2,ν/2}(ℂ) equals ‖Zⁿ‖² in F^{2,ν}, n ≤ 5 (relative)", 1e-10, move |_| {
            let gamma = 0.5 * nu;
            let rule = gauss_hermite(40, gamma)?;
            let mut worst = 0.0f64;
            for n in 0..=5 {
                let v = integrate_complex(|xi| Bicomplex::real(xi.norm_sqr().powi(n as i32)), &rule)?.x1
                    * normalization_c(NormSpace::Complex, gamma);
                worst = worst.max((v / monomial_norm_sq(n, nu) - 1.0).abs());
            }
            Ok(worst)
        }),
    ]
}

fn default_thetas() -> Result<Vec<ThetaParam>> {
    [(FRAC_PI_4, FRAC_PI_3), (FRAC_PI_2, FRAC_PI_2), (2.0 * FRAC_PI_3, -0.4 * PI), (-FRAC_PI_3, 3.0 * FRAC_PI_4)]
        .into_iter()
        .map(|(a, b)| ThetaParam::from_phases(a, b))
        .collect()
}

fn frft(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    let (sigma, nu, order) = (cfg.sigma, cfg.nu, cfg.order);
    let thetas = match cfg.theta {
        Some(t) => vec![ThetaParam::unit_torus(t.theta())?],
        None => default_thetas()?,
    };
    let mut cases = Vec::new();
    for (k, theta) in thetas.iter().copied().enumerate() {
        let tag = format!("θ = {}", theta.theta());
        cases.push(Case::new(
            format!("frft.eigen.{k}"),
            format!("F_θ ψ_n = θⁿ ψ_n for n ≤ 8 at 7 points, integral path, {tag}"),
            1e-8,
            move |_| {
                let rule = gauss_hermite(order, 1.0)?;
                let mut worst = 0.0f64;
                for n in 0..=8 {
                    let eig = theta.theta().powu(n as u32);
                    for y in Y_POINTS {
                        let v = frft_integral(|x| Bicomplex::real(psi_n(n, sigma, x)), sigma, &theta, y, &rule)?;
                        worst = worst.max(v.max_abs_diff(&(eig * psi_n(n, sigma, y))));
                    }
                }
                Ok(worst)
            },
        ));
        cases.push(Case::new(
            format!("frft.plancherel.{k}"),
            format!("‖F_θ ψ‖ = ‖ψ‖ for degree ≤ 8, coefficient and quadrature norms, {tag}"),
            1e-9,
            move |rng| {
                let rule = gauss_hermite(order, sigma)?;
                let mut worst = 0.0f64;
                for _ in 0..5 {
                    let psi = HermiteCoeffVector::new(sigma, rand_coeffs(rng, 9))?;
                    let out = frft_coeff(&psi, &theta)?;
                    let quad = induced_norm(inner_l2sigma_quadrature(|y| out.eval(y), |y| out.eval(y), sigma, &rule)?);
                    worst = worst.max((out.norm() - psi.norm()).abs()).max((quad - psi.norm()).abs());
                }
                Ok(worst)
            },
        ));
        cases.push(Case::new(
            format!("frft.inversion.{k}"),
            format!("F_θ* F_θ ψ_n = ψ_n for n ≤ 8 at 7 points, nested contour integrals, {tag}"),
            1e-8,
            move |_| {
                let rule = gauss_hermite(order.min(48), 1.0)?;
                let inv = theta.inverse()?;
                let mut worst = 0.0f64;
                for n in 0..=8 {
                    let inner = |x: Complex64| {
                        frft_integral_analytic(|s| Bicomplex::from_complex(psi_c(n, sigma, s)), sigma, &theta, x, &rule)
                            .unwrap_or(Bicomplex::new(f64::NAN, 0.0, 0.0, 0.0))
                    };
                    for y in Y_POINTS {
                        let v = frft_integral_analytic(inner, sigma, &inv, Complex64::new(y, 0.0), &rule)?;
                        worst = worst.max(v.max_abs_diff(&Bicomplex::real(psi_n(n, sigma, y))));
                    }
                }
                Ok(worst)
            },
        ));
        let rho = thetas[(k + 1) % thetas.len()];
        let rho = if theta.compose(&rho).is_ok() { rho } else { ThetaParam::from_phases(0.3, -0.4)? };
        cases.push(Case::new(
            format!("frft.semigroup.{k}"),
            format!("F_θ F_ρ ψ_n = F_θρ ψ_n for n ≤ 4, nested contour integrals, ρ = {}, {tag}", rho.theta()),
            1e-7,
            move |_| {
                let rule = gauss_hermite(order.min(48), 1.0)?;
                let prod = theta.compose(&rho)?;
                let mut worst = 0.0f64;
                for n in 0..=4 {
                    let base = |s: Complex64| Bicomplex::from_complex(psi_c(n, sigma, s));
                    let inner = |x: Complex64| {
                        frft_integral_analytic(base, sigma, &rho, x, &rule).unwrap_or(Bicomplex::new(f64::NAN, 0.0, 0.0, 0.0))
                    };
                    for y in Y_POINTS {
                        let y = Complex64::new(y, 0.0);
                        let lhs = frft_integral_analytic(inner, sigma, &theta, y, &rule)?;
                        let rhs = frft_integral_analytic(base, sigma, &prod, y, &rule)?;
                        worst = worst.max(lhs.max_abs_diff(&rhs));
                    }
                }
                // Coefficient path: θⁿρⁿ against (θρ)ⁿ.
                let psi = HermiteCoeffVector::new(sigma, vec![Bicomplex::ONE; 9])?;
                let two = frft_coeff(&frft_coeff(&psi, &rho)?, &theta)?;
                let one = frft_coeff(&psi, &prod)?;
                for (a, b) in two.coeffs.iter().zip(&one.coeffs) {
                    worst = worst.max(a.max_abs_diff(b));
                }
                Ok(worst)
            },
        ));
        cases.push(Case::new(
            format!("frft.factorization.{k}"),
            format!("F_θ ψ = [B]⁻¹ Γ_θ B ψ for degree ≤ 6, all transforms by quadrature, {tag}"),
            1e-7,
            move |rng| {
                let fwd = gauss_hermite(order.max(64), sigma)?;
                let inv = gauss_hermite(INVERSE_ORDER, 0.5 * nu)?;
                let psi = HermiteCoeffVector::new(sigma, rand_coeffs(rng, 7))?;
                let mut worst = 0.0f64;
                for y in [-0.8, 0.1, 1.2] {
                    let want = frft_apply(&psi, &theta, y)?;
                    let bpsi = |z: Bicomplex| {
                        sbt_forward_integral_analytic(|x| eval_complex(&psi, x), sigma, nu, theta.theta() * z, &fwd)
                            .unwrap_or(Bicomplex::new(f64::NAN, 0.0, 0.0, 0.0))
                    };
                    let v = sbt_inverse_integral(bpsi, sigma, nu, y, &inv)?;
                    worst = worst.max(v.max_abs_diff(&want));
                }
                Ok(worst)
            },
        ));
        cases.push(Case::new(
            format!("frft.decay_rate.{k}"),
            format!("Re σ/(1 − c²) = σ/2 in both channels, {tag}"),
            1e-12,
            move |_| {
                let p = theta.theta().to_idempotent();
                Ok([p.alpha, p.beta]
                    .into_iter()
                    .map(|c| ((Complex64::new(1.0, 0.0) - c * c).inv().re * sigma - 0.5 * sigma).abs())
                    .fold(0.0, f64::max))
            },
        ));
        cases.push(Case::new(
            format!("frft.ck_restriction.{k}"),
            format!("Cauchy–Kowalewski kernel at real Z equals the FrFT kernel, {tag}"),
            1e-13,
            move |rng| {
                let mut worst = 0.0f64;
                for _ in 0..20 {
                    let (x, y) = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
                    let ck = ck_frft_kernel(sigma, theta.theta(), x, Bicomplex::real(y))?;
                    let k = frft_kernel(sigma, &theta, x, y)?;
                    worst = worst.max(ck.max_abs_diff(&k) / k.norm().max(1.0));
                }
                Ok(worst)
            },
        ));
    }
    cases.push(Case::new("frft.uniqueness", "F_θ⁻¹ F_θ recovers random coefficient vectors", 1e-14, {
        let thetas = thetas.clone();
        move |rng| {
            let mut worst = 0.0f64;
            for theta in &thetas {
                let psi = HermiteCoeffVector::new(sigma, rand_coeffs(rng, 9))?;
                let back = frft_inverse(&frft_coeff(&psi, theta)?, theta)?;
                for (a, b) in back.coeffs.iter().zip(&psi.coeffs) {
                    worst = worst.max(a.max_abs_diff(b));
                }
            }
            Ok(worst)
        }
    }));
    cases.push(Case::new("frft.fourier_ladder", "θ = i, σ = 1: F ψ_n = iⁿ ψ_n, coefficient and integral paths", 1e-9, move |_| {
        let theta = ThetaParam::unit_torus(Bicomplex::I)?;
        let rule = gauss_hermite(order, 1.0)?;
        let mut worst = 0.0f64;
        for n in 0..=8 {
            let eig = Bicomplex::I.powu(n as u32);
            let psi = HermiteCoeffVector::basis(1.0, n)?;
            for y in Y_POINTS {
                let want = eig * psi_n(n, 1.0, y);
                let a = frft_apply(&psi, &theta, y)?;
                let b = frft_integral(|x| Bicomplex::real(psi_n(n, 1.0, x)), 1.0, &theta, y, &rule)?;
                worst = worst.max(a.max_abs_diff(&want)).max(b.max_abs_diff(&want));
            }
        }
        Ok(worst)
    }));
    Ok(cases)
}

fn interior_thetas() -> Vec<Bicomplex> {
    let c = Complex64::new;
    vec![
        Bicomplex::real(0.5),
        Bicomplex::from_components(Complex64::from_polar(0.7, PI / 5.0), c(0.6, 0.0)),
        Bicomplex::from_components(c(0.3, 0.4), c(-0.5, 0.1)),
        Bicomplex::from_components(c(0.0, 0.6), c(0.2, -0.5)),
        Bicomplex::from_components(c(-0.4, -0.4), c(0.0, 0.0)),
        Bicomplex::new(0.1, 0.2, 0.3, -0.1),
    ]
}

fn mehler(cfg: &VerifyConfig) -> Vec<Case> {
    let sigma = cfg.sigma;
    let points = [(0.3, -0.4), (0.0, 0.0), (-0.8, 0.5), (1.0, 0.7)];
    let mut cases = Vec::new();
    for (k, theta) in interior_thetas().into_iter().enumerate() {
        cases.push(Case::new(
            format!("mehler.series.{k}"),
            format!("Σ_{{n≤60}} θⁿψ_n(x)ψ_n(y) vs closed form, θ = {theta}"),
            1e-10,
            move |_| {
                let mut worst = 0.0f64;
                for (x, y) in points {
                    let s = mehler_series(sigma, theta, x, y, 61);
                    worst = worst.max(s.max_abs_diff(&mehler_closed(sigma, theta, x, y)?));
                }
                Ok(worst)
            },
        ));
    }
    cases.push(Case::new("mehler.bilinear", "bicomplex first argument: series (N = 60) vs closed form", 1e-9, move |rng| {
        let mut worst = 0.0f64;
        for theta in interior_thetas() {
            for _ in 0..3 {
                let z = rand_ball(rng, 0.5);
                let y = rng.random_range(-0.5..0.5);
                let s = mehler_bilinear_series(sigma, theta, z, y, 61);
                worst = worst.max(s.max_abs_diff(&mehler_bilinear_bc(sigma, theta, z, y)?));
            }
        }
        Ok(worst)
    }));
    cases.push(Case::new("mehler.torus_kernel", "FrFT kernel = c₀e^{−σx²} × Mehler closed form on the torus (relative)", 1e-13, move |rng| {
        let mut worst = 0.0f64;
        for theta in default_thetas()? {
            for _ in 0..10 {
                let (x, y) = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
                let k = frft_kernel(sigma, &theta, x, y)?;
                let m = mehler_closed(sigma, theta.theta(), x, y)?
                    * (normalization_c(NormSpace::Real, sigma) * (-sigma * x * x).exp());
                worst = worst.max(k.max_abs_diff(&m) / k.norm().max(1.0));
            }
        }
        Ok(worst)
    }));
    cases
}

fn gaussian(cfg: &VerifyConfig) -> Vec<Case> {
    let order = cfg.order;
    vec![
        Case::new("gaussian.closed_form", "closed form vs 2D quadrature on 10 random admissible (γ, a, b, c, d) (relative)", 1e-10, move |rng| {
            let mut worst = 0.0f64;
            for _ in 0..10 {
                let gamma = rng.random_range(0.5..2.0);
                let (a, b) = (rand_complex(rng, 0.18 * gamma), rand_complex(rng, 0.18 * gamma));
                let (c, d) = (rand_complex(rng, 0.5), rand_complex(rng, 0.5));
                let rule = gauss_hermite(order.max(48), gamma)?;
                let q = integrate_complex(
                    |xi| Bicomplex::from_complex((a * xi * xi + b * xi.conj() * xi.conj() + c * xi + d * xi.conj()).exp()),
                    &rule,
                )?;
                let want = gaussian_integral_closed(gamma, a, b, c, d)?;
                worst = worst.max((q.z1() - want).norm() / want.norm());
            }
            Ok(worst)
        }),
        Case::new("gaussian.domain", "divergent parameters are rejected", 0.0, |_| {
            let z = Complex64::new(0.0, 0.0);
            let bad = [
                (1.0, Complex64::new(1.0, 0.0), z),
                (1.0, Complex64::new(0.0, 0.6), Complex64::new(0.0, -0.6)),
            ];
            Ok(bad
                .into_iter()
                .filter(|(g, a, b)| gaussian_integral_closed(*g, *a, *b, z, z).is_ok())
                .count() as f64)
        }),
    ]
}
