//! Elliptic scalar product spaces.
//!
//! A space ℝⁿ_{a₁,…,aₙ} is ℝⁿ equipped with the positive definite scalar
//! product `B(u, w) = Σ aᵢ uᵢ wᵢ`, whose associated matrix is
//! `Ω = diag(a₁, …, aₙ)`. The constant `Δ = √det Ω` scales the canonical
//! B-symmetric and B-skew forms and the elliptical vector product.
//!
//! The ellipsoid `a₁x² + … + aₙxₙ² = 1` is the unit sphere of the space, so
//! angles and rotations measured with `B` move points along it.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Coordinates of a vector in the standard basis.
#[derive(Debug, Clone, PartialEq)]
pub struct EVector(DVector<f64>);

impl EVector {
    pub fn new(coords: impl Into<Vec<f64>>) -> Self {
        Self(DVector::from_vec(coords.into()))
    }

    pub fn zeros(n: usize) -> Self {
        Self(DVector::zeros(n))
    }

    /// The `k`-th standard basis vector of ℝⁿ.
    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = DVector::zeros(n);
        v[k] = 1.0;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        self.0.as_slice()
    }

    pub fn to_vec(&self) -> Vec<f64> {
        self.0.as_slice().to_vec()
    }

    pub fn coords(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn scale(&self, c: f64) -> Self {
        Self(&self.0 * c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0.0)
    }

    /// Largest absolute coordinate difference.
    pub fn max_abs_diff(&self, other: &EVector) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        (&self.0 - &other.0).amax()
    }
}

impl From<Vec<f64>> for EVector {
    fn from(v: Vec<f64>) -> Self {
        Self::new(v)
    }
}

impl<const N: usize> From<[f64; N]> for EVector {
    fn from(v: [f64; N]) -> Self {
        Self::new(v.to_vec())
    }
}

impl From<DVector<f64>> for EVector {
    fn from(v: DVector<f64>) -> Self {
        Self(v)
    }
}

impl Index<usize> for EVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for &EVector {
    type Output = EVector;

    fn add(self, rhs: &EVector) -> EVector {
        EVector(&self.0 + &rhs.0)
    }
}

impl Add for EVector {
    type Output = EVector;

    fn add(self, rhs: EVector) -> EVector {
        EVector(self.0 + rhs.0)
    }
}

impl Sub for &EVector {
    type Output = EVector;

    fn sub(self, rhs: &EVector) -> EVector {
        EVector(&self.0 - &rhs.0)
    }
}

impl Sub for EVector {
    type Output = EVector;

    fn sub(self, rhs: EVector) -> EVector {
        EVector(self.0 - rhs.0)
    }
}

impl Neg for &EVector {
    type Output = EVector;

    fn neg(self) -> EVector {
        EVector(-&self.0)
    }
}

impl Neg for EVector {
    type Output = EVector;

    fn neg(self) -> EVector {
        EVector(-self.0)
    }
}

impl Mul<f64> for &EVector {
    type Output = EVector;

    fn mul(self, c: f64) -> EVector {
        self.scale(c)
    }
}

impl Mul<f64> for EVector {
    type Output = EVector;

    fn mul(self, c: f64) -> EVector {
        EVector(self.0 * c)
    }
}

impl fmt::Display for EVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// The space ℝⁿ_{a₁,…,aₙ}.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticSpace {
    a: Vec<f64>,
    delta: f64,
}

impl EllipticSpace {
    pub fn new(a: impl Into<Vec<f64>>) -> Result<Self> {
        let a = a.into();
        if a.len() < 2 {
            return Err(Error::DimensionTooSmall(a.len()));
        }
        if let Some((index, &value)) = a
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::NonPositiveCoefficient { index, value });
        }
        let delta = a.iter().product::<f64>().sqrt();
        Ok(Self { a, delta })
    }

    /// ℝⁿ with the ordinary dot product.
    pub fn euclidean(n: usize) -> Result<Self> {
        Self::new(vec![1.0; n])
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.a
    }

    /// Δ = √(a₁⋯aₙ).
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Ω = diag(a).
    pub fn omega(&self) -> DMatrix<f64> {
        DMatrix::from_diagonal(&DVector::from_column_slice(&self.a))
    }

    /// diag(√aᵢ), the map taking B-lengths to Euclidean lengths.
    pub fn sqrt_omega(&self) -> DMatrix<f64> {
        DMatrix::from_diagonal(&DVector::from_iterator(
            self.dim(),
            self.a.iter().map(|a| a.sqrt()),
        ))
    }

    pub fn max_coefficient(&self) -> f64 {
        self.a.iter().copied().fold(f64::MIN, f64::max)
    }

    pub(crate) fn check(&self, v: &EVector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn require_dim(&self, n: usize) -> Result<()> {
        if self.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.dim(),
            });
        }
        Ok(())
    }

    /// B(u, w) = Σ aᵢ uᵢ wᵢ.
    pub fn inner(&self, u: &EVector, w: &EVector) -> Result<f64> {
        self.check(u)?;
        self.check(w)?;
        Ok(self
            .a
            .iter()
            .zip(u.as_slice())
            .zip(w.as_slice())
            .map(|((a, x), y)| a * x * y)
            .sum())
    }

    pub fn norm_squared(&self, u: &EVector) -> Result<f64> {
        self.inner(u, u)
    }

    pub fn norm(&self, u: &EVector) -> Result<f64> {
        Ok(self.norm_squared(u)?.sqrt())
    }

    /// Rescales `u` to B-norm one.
    pub fn normalize(&self, u: &EVector) -> Result<EVector> {
        let n = self.norm(u)?;
        if n == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(u.scale(1.0 / n))
    }

    /// Cosine of the elliptical angle between `u` and `w`, clamped to [-1, 1].
    pub fn cos_angle(&self, u: &EVector, w: &EVector) -> Result<f64> {
        let nu = self.norm(u)?;
        let nw = self.norm(w)?;
        if nu == 0.0 || nw == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok((self.inner(u, w)? / (nu * nw)).clamp(-1.0, 1.0))
    }

    /// Elliptical vector product in three dimensions.
    ///
    /// The result is B-orthogonal to both arguments, and equals
    /// `skew_from_axis(u) · v`.
    pub fn cross3(&self, u: &EVector, v: &EVector) -> Result<EVector> {
        self.require_dim(3)?;
        self.check(u)?;
        self.check(v)?;
        let d = self.delta;
        let a = &self.a;
        Ok(EVector::new(vec![
            d * (u[1] * v[2] - u[2] * v[1]) / a[0],
            d * (u[2] * v[0] - u[0] * v[2]) / a[1],
            d * (u[0] * v[1] - u[1] * v[0]) / a[2],
        ]))
    }

    /// Elliptical vector product of `n - 1` vectors in ℝⁿ.
    ///
    /// Expands `Δ det[e₁/a₁ … eₙ/aₙ; u₁; …; uₙ₋₁]` along its first row, so
    /// component `j` is `(-1)^j Δ/aⱼ` times the minor with column `j` removed
    /// (zero-based `j`).
    pub fn cross_n(&self, vs: &[EVector]) -> Result<EVector> {
        let n = self.dim();
        if vs.len() != n - 1 {
            return Err(Error::WrongVectorCount {
                dim: n,
                expected: n - 1,
                found: vs.len(),
            });
        }
        for v in vs {
            self.check(v)?;
        }
        let coords = (0..n)
            .map(|j| {
                let minor = DMatrix::from_fn(n - 1, n - 1, |r, c| {
                    let col = if c < j { c } else { c + 1 };
                    vs[r][col]
                });
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * self.delta / self.a[j] * minor.determinant()
            })
            .collect::<Vec<_>>();
        Ok(EVector::new(coords))
    }

    /// Point of the ellipsoid `a₁x² + a₂y² + a₃z² = 1` at latitude `theta`
    /// and longitude `beta` (radians).
    pub fn ellipsoid_point(&self, theta: f64, beta: f64) -> Result<EVector> {
        self.require_dim(3)?;
        let (st, ct) = theta.sin_cos();
        let (sb, cb) = beta.sin_cos();
        Ok(EVector::new(vec![
            ct * cb / self.a[0].sqrt(),
            ct * sb / self.a[1].sqrt(),
            st / self.a[2].sqrt(),
        ]))
    }
}
