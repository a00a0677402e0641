//! Rotations generated by exponentiating B-skew matrices.
//!
//! For a B-unit axis `u` with skew matrix `T` (so `T v = u × v`), the
//! exponential `e^{θT}` collapses to `I + sin θ T + (1 − cos θ) T²` because
//! `T³ = −T`. Expanding `T² = u uᵗ Ω − I` gives the entrywise form used by
//! [`rodrigues3d_cs`].

use nalgebra::{DMatrix, Vector3};

use crate::bmat::{BMatrix, MatrixClass};
use crate::error::{Error, Result};
use crate::espace::{EVector, EllipticSpace};
use crate::DEFAULT_TOL;

/// Number of series terms used by [`exp_series`] callers that do not care.
pub const DEFAULT_SERIES_TERMS: usize = 24;

/// Largest deviation of `‖u‖_B` from one accepted for a rotation axis.
pub const AXIS_UNIT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct AxisAngle {
    /// B-unit axis; all zeros when `degenerate`.
    pub axis: EVector,
    /// Radians in `[0, π]`.
    pub angle: f64,
    /// Set for the identity, whose axis is undetermined.
    pub degenerate: bool,
}

impl AxisAngle {
    pub fn require_axis(&self) -> Result<&EVector> {
        if self.degenerate {
            Err(Error::AmbiguousAxis)
        } else {
            Ok(&self.axis)
        }
    }
}

/// Planar rotation by `theta` along the ellipse `a₁x² + a₂y² = const`.
pub fn rotate2d(space: &EllipticSpace, theta: f64) -> Result<BMatrix> {
    space.require_dim(2)?;
    let a = space.coefficients();
    let (s, c) = theta.sin_cos();
    let k = (a[0] / a[1]).sqrt();
    BMatrix::new(space, DMatrix::from_row_slice(2, 2, &[c, -s / k, k * s, c]))
}

pub(crate) fn check_unit_axis(space: &EllipticSpace, u: &EVector) -> Result<()> {
    let norm = space.norm(u)?;
    if (norm - 1.0).abs() > AXIS_UNIT_TOL {
        return Err(Error::AxisNotUnit { norm });
    }
    Ok(())
}

/// Rotation by `theta` about the B-unit axis `u`.
pub fn rodrigues3d(space: &EllipticSpace, u: &EVector, theta: f64) -> Result<BMatrix> {
    let (s, c) = theta.sin_cos();
    rodrigues3d_cs(space, u, c, s)
}

/// [`rodrigues3d`] with the cosine and sine of the angle supplied directly.
pub fn rodrigues3d_cs(space: &EllipticSpace, u: &EVector, cos: f64, sin: f64) -> Result<BMatrix> {
    space.require_dim(3)?;
    space.check(u)?;
    check_unit_axis(space, u)?;
    let t = BMatrix::skew_from_axis(space, u)?;
    let a = space.coefficients();
    let entries = DMatrix::from_fn(3, 3, |i, j| {
        let id = if i == j { cos } else { 0.0 };
        id + sin * t.get(i, j) + (1.0 - cos) * u[i] * u[j] * a[j]
    });
    BMatrix::new(space, entries)
}

fn skew_tol(t: &BMatrix) -> f64 {
    DEFAULT_TOL * 1.0f64.max(t.max_abs() * t.space().max_coefficient())
}

/// Truncated power series `Σ_{k<terms} (θT)^k / k!`.
pub fn exp_series(space: &EllipticSpace, t: &BMatrix, theta: f64, terms: usize) -> Result<BMatrix> {
    if t.space() != space {
        return Err(Error::SpaceMismatch);
    }
    let residual = t.skew_residual();
    if residual > skew_tol(t) {
        return Err(Error::NotSkew { residual });
    }
    let n = space.dim();
    let step = t.entries() * theta;
    let mut term = DMatrix::<f64>::identity(n, n);
    let mut sum = DMatrix::<f64>::zeros(n, n);
    for k in 0..terms {
        if k > 0 {
            term = &term * &step / k as f64;
        }
        sum += &term;
    }
    BMatrix::new(space, sum)
}

/// Recovers the axis and angle of a rotation.
///
/// The axis spans the kernel of `R − I`, found as the largest cross product
/// of two of its rows. The cosine comes from the trace and the sine from the
/// B-skew part `(R − Ω⁻¹RᵗΩ)/2 = sin θ · T`; the axis is oriented so the
/// angle lands in `[0, π]`.
pub fn axis_angle_of(space: &EllipticSpace, r: &BMatrix) -> Result<AxisAngle> {
    space.require_dim(3)?;
    if r.space() != space {
        return Err(Error::SpaceMismatch);
    }
    let tol = DEFAULT_TOL * 1.0f64.max(space.max_coefficient());
    if r.classify(tol) != MatrixClass::Rotation {
        return Err(Error::NotARotation);
    }
    let m = r.entries() - DMatrix::<f64>::identity(3, 3);
    if m.amax() <= DEFAULT_TOL {
        return Ok(AxisAngle {
            axis: EVector::zeros(3),
            angle: 0.0,
            degenerate: true,
        });
    }

    let rows: Vec<Vector3<f64>> = (0..3)
        .map(|i| Vector3::new(m[(i, 0)], m[(i, 1)], m[(i, 2)]))
        .collect();
    let kernel = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| rows[i].cross(&rows[j]))
        .max_by(|p, q| p.norm_squared().total_cmp(&q.norm_squared()))
        .expect("three row pairs");
    let mut axis = space.normalize(&EVector::new(kernel.as_slice().to_vec()))?;

    let cos = ((r.trace() - 1.0) / 2.0).clamp(-1.0, 1.0);
    let a = space.coefficients();
    let re = r.entries();
    let skew_part = DMatrix::from_fn(3, 3, |i, j| (re[(i, j)] - re[(j, i)] * a[j] / a[i]) / 2.0);
    let t = BMatrix::skew_from_axis(space, &axis)?;
    let mut sin = skew_part.dot(t.entries()) / t.entries().norm_squared();
    if sin < 0.0 {
        axis = -axis;
        sin = -sin;
    }
    let angle = sin.atan2(cos);
    if std::f64::consts::PI - angle <= 1e-12 {
        let first = axis
            .as_slice()
            .iter()
            .copied()
            .find(|x| x.abs() > DEFAULT_TOL)
            .unwrap_or(1.0);
        if first < 0.0 {
            axis = -axis;
        }
    }
    Ok(AxisAngle {
        axis,
        angle,
        degenerate: false,
    })
}
