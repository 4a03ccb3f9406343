//! Bicomplex numbers `Z = z1 + j z2` with `z1, z2` complex and `ij = ji`, `j² = -1`.
//!
//! Values are stored in the `(z1, z2)` form as four reals. Every multiplicative or
//! transcendental operation goes through the idempotent representation
//! `Z = α e+ + β e−` with `e± = (1 ± ij)/2`, `α = z1 − i z2`, `β = z1 + i z2`,
//! in which the algebra is two independent copies of ℂ.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BcError, Result};

/// Default absolute tolerance on `min(|α|, |β|)` for null-cone tests.
pub const NULL_CONE_TOL: f64 = 1e-12;

/// A bicomplex number `(x1 + i y1) + j (x2 + i y2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Bicomplex {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
}

/// Components `(α, β)` of `Z = α e+ + β e−`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct IdempotentPair {
    #[serde(with = "complex_pair")]
    pub alpha: Complex64,
    #[serde(with = "complex_pair")]
    pub beta: Complex64,
}

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

impl IdempotentPair {
    pub const fn new(alpha: Complex64, beta: Complex64) -> Self {
        Self { alpha, beta }
    }

    /// Both components equal to `z`, i.e. the embedding of `ℂ = ℂ + j{0}`.
    pub const fn diagonal(z: Complex64) -> Self {
        Self { alpha: z, beta: z }
    }

    pub fn map(self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self { alpha: f(self.alpha), beta: f(self.beta) }
    }

    pub fn zip(self, other: Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        Self { alpha: f(self.alpha, other.alpha), beta: f(self.beta, other.beta) }
    }

    pub fn to_bicomplex(self) -> Bicomplex {
        Bicomplex::from_idempotent(self)
    }

    pub fn is_finite(&self) -> bool {
        self.alpha.is_finite() && self.beta.is_finite()
    }
}

impl Mul for IdempotentPair {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.zip(rhs, |a, b| a * b)
    }
}

impl Bicomplex {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    /// The imaginary unit `i` of the first complex plane.
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    /// The hyperbolic unit `ij`, with `(ij)² = 1`.
    pub const IJ: Self = Self::new(0.0, 0.0, 0.0, 1.0);
    /// `e+ = (1 + ij)/2`.
    pub const E_PLUS: Self = Self::new(0.5, 0.0, 0.0, 0.5);
    /// `e− = (1 − ij)/2`.
    pub const E_MINUS: Self = Self::new(0.5, 0.0, 0.0, -0.5);

    pub const fn new(x1: f64, y1: f64, x2: f64, y2: f64) -> Self {
        Self { x1, y1, x2, y2 }
    }

    pub const fn real(x: f64) -> Self {
        Self::new(x, 0.0, 0.0, 0.0)
    }

    /// Embeds `z` as `z + j 0`.
    pub const fn from_complex(z: Complex64) -> Self {
        Self::new(z.re, z.im, 0.0, 0.0)
    }

    pub fn from_parts(z1: Complex64, z2: Complex64) -> Self {
        Self::new(z1.re, z1.im, z2.re, z2.im)
    }

    pub fn z1(&self) -> Complex64 {
        Complex64::new(self.x1, self.y1)
    }

    pub fn z2(&self) -> Complex64 {
        Complex64::new(self.x2, self.y2)
    }

    /// `α = z1 − i z2`, `β = z1 + i z2`.
    pub fn to_idempotent(self) -> IdempotentPair {
        IdempotentPair {
            alpha: Complex64::new(self.x1 + self.y2, self.y1 - self.x2),
            beta: Complex64::new(self.x1 - self.y2, self.y1 + self.x2),
        }
    }

    /// `z1 = (α + β)/2`, `z2 = i(α − β)/2`.
    pub fn from_idempotent(p: IdempotentPair) -> Self {
        let z1 = (p.alpha + p.beta) * 0.5;
        let z2 = I * (p.alpha - p.beta) * 0.5;
        Self::from_parts(z1, z2)
    }

    /// `α e+ + β e−`.
    pub fn from_components(alpha: Complex64, beta: Complex64) -> Self {
        Self::from_idempotent(IdempotentPair::new(alpha, beta))
    }

    pub fn alpha(&self) -> Complex64 {
        self.to_idempotent().alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.to_idempotent().beta
    }

    fn map_idempotent(self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self::from_idempotent(self.to_idempotent().map(f))
    }

    /// `Z† = z1 − j z2`; swaps `(α, β)`.
    pub fn conj_dagger(self) -> Self {
        Self::new(self.x1, self.y1, -self.x2, -self.y2)
    }

    /// `Z̃ = z̄1 + j z̄2`; maps `(α, β)` to `(β̄, ᾱ)`.
    pub fn conj_tilde(self) -> Self {
        Self::new(self.x1, -self.y1, self.x2, -self.y2)
    }

    /// `Z* = z̄1 − j z̄2`; maps `(α, β)` to `(ᾱ, β̄)`.
    pub fn conj_star(self) -> Self {
        Self::new(self.x1, -self.y1, -self.x2, self.y2)
    }

    /// Squared Euclidean norm in ℝ⁴, `|z1|² + |z2|² = (|α|² + |β|²)/2`.
    pub fn norm_sqr(&self) -> f64 {
        self.x1 * self.x1 + self.y1 * self.y1 + self.x2 * self.x2 + self.y2 * self.y2
    }

    pub fn norm(&self) -> f64 {
        // hypot chain avoids overflow for huge components
        self.x1.hypot(self.y1).hypot(self.x2.hypot(self.y2))
    }

    pub fn exp(self) -> Self {
        self.map_idempotent(|z| z.exp())
    }

    pub fn powu(self, n: u32) -> Self {
        self.map_idempotent(|z| z.powu(n))
    }

    /// Componentwise principal square root.
    ///
    /// Components on the closed negative real axis are rejected instead of
    /// picking a side of the cut.
    pub fn sqrt_principal(self) -> Result<Self> {
        let p = self.to_idempotent();
        for (name, c) in [("alpha", p.alpha), ("beta", p.beta)] {
            if c.im == 0.0 && c.re < 0.0 {
                return Err(BcError::BranchCut(format!("{name} = {c}")));
            }
        }
        Ok(Self::from_idempotent(p.map(|z| z.sqrt())))
    }

    pub fn is_null_cone(&self, tol: f64) -> bool {
        let p = self.to_idempotent();
        p.alpha.norm().min(p.beta.norm()) <= tol
    }

    pub fn inverse(self) -> Result<Self> {
        self.inverse_with_tol(NULL_CONE_TOL)
    }

    pub fn inverse_with_tol(self, tol: f64) -> Result<Self> {
        let p = self.to_idempotent();
        let m = p.alpha.norm().min(p.beta.norm());
        if m <= tol {
            return Err(BcError::NullCone("inverse argument", m));
        }
        Ok(Self::from_idempotent(p.map(|z| z.inv())))
    }

    /// `Z / W`, failing when `W` is a zero divisor.
    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        Ok(self * rhs.inverse()?)
    }

    /// The trivial bicomplex inner product `⟨Z, W⟩ = Z W*`.
    pub fn bc_inner(self, other: Self) -> Self {
        self * other.conj_star()
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.x1 * s, self.y1 * s, self.x2 * s, self.y2 * s)
    }

    /// Multiplication by a complex scalar `c = c + j 0`.
    pub fn mul_complex(self, c: Complex64) -> Self {
        let z1 = self.z1() * c;
        let z2 = self.z2() * c;
        Self::from_parts(z1, z2)
    }

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.y1.is_finite() && self.x2.is_finite() && self.y2.is_finite()
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x1, self.y1, self.x2, self.y2]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    /// Largest absolute difference of the four real coordinates.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).to_array().iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }
}

impl Add for Bicomplex {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.x1 + r.x1, self.y1 + r.y1, self.x2 + r.x2, self.y2 + r.y2)
    }
}

impl Sub for Bicomplex {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.x1 - r.x1, self.y1 - r.y1, self.x2 - r.x2, self.y2 - r.y2)
    }
}

impl Neg for Bicomplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x1, -self.y1, -self.x2, -self.y2)
    }
}

impl Mul for Bicomplex {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        // (z1 + j z2)(w1 + j w2) = (z1 w1 − z2 w2) + j (z1 w2 + z2 w1)
        let (z1, z2, w1, w2) = (self.z1(), self.z2(), r.z1(), r.z2());
        Self::from_parts(z1 * w1 - z2 * w2, z1 * w2 + z2 * w1)
    }
}

impl Mul<f64> for Bicomplex {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<Bicomplex> for f64 {
    type Output = Bicomplex;
    fn mul(self, z: Bicomplex) -> Bicomplex {
        z.scale(self)
    }
}

impl AddAssign for Bicomplex {
    fn add_assign(&mut self, r: Self) {
        *self = *self + r;
    }
}

impl SubAssign for Bicomplex {
    fn sub_assign(&mut self, r: Self) {
        *self = *self - r;
    }
}

impl MulAssign for Bicomplex {
    fn mul_assign(&mut self, r: Self) {
        *self = *self * r;
    }
}

impl std::iter::Sum for Bicomplex {
    fn sum<It: Iterator<Item = Self>>(iter: It) -> Self {
        iter.fold(Self::ZERO, |a, b| a + b)
    }
}

impl From<f64> for Bicomplex {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl From<Complex64> for Bicomplex {
    fn from(z: Complex64) -> Self {
        Self::from_complex(z)
    }
}

impl From<IdempotentPair> for Bicomplex {
    fn from(p: IdempotentPair) -> Self {
        Self::from_idempotent(p)
    }
}

impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {:+}i) + j({} {:+}i)", self.x1, self.y1, self.x2, self.y2)
    }
}

impl Serialize for Bicomplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Bicomplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        <[f64; 4]>::deserialize(d).map(Self::from_array)
    }
}

mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

/// Pairwise (cascade) summation; the result depends only on the input order.
pub fn pairwise_sum(values: &[Bicomplex]) -> Bicomplex {
    const BLOCK: usize = 8;
    if values.len() <= BLOCK {
        return values.iter().copied().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}
