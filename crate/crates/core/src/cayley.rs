//! Cayley transform `T ↦ (I + T)(I − T)⁻¹` from B-skew matrices to rotations.

use nalgebra::DMatrix;

use crate::bmat::{BMatrix, MatrixClass};
use crate::error::{Error, Result};
use crate::espace::{EVector, EllipticSpace};
use crate::DEFAULT_TOL;

pub fn cayley_map(space: &EllipticSpace, t: &BMatrix) -> Result<BMatrix> {
    if t.space() != space {
        return Err(Error::SpaceMismatch);
    }
    let residual = t.skew_residual();
    if residual > DEFAULT_TOL * 1.0f64.max(t.max_abs() * space.max_coefficient()) {
        return Err(Error::NotSkew { residual });
    }
    let n = space.dim();
    let id = DMatrix::<f64>::identity(n, n);
    let resolvent = (&id - t.entries())
        .try_inverse()
        .ok_or(Error::SingularResolvent)?;
    BMatrix::new(space, (&id + t.entries()) * resolvent)
}

/// Closed form of `cayley_map(skew_from_axis(u))`:
/// `[(1 − ‖u‖²) I + 2T + 2 u uᵗ Ω] / (1 + ‖u‖²)`.
pub fn cayley_closed_form(space: &EllipticSpace, u: &EVector) -> Result<BMatrix> {
    let t = BMatrix::skew_from_axis(space, u)?;
    let n2 = space.norm_squared(u)?;
    let a = space.coefficients();
    let entries = DMatrix::from_fn(3, 3, |i, j| {
        let id = if i == j { 1.0 - n2 } else { 0.0 };
        (id + 2.0 * t.get(i, j) + 2.0 * u[i] * u[j] * a[j]) / (1.0 + n2)
    });
    BMatrix::new(space, entries)
}

/// Rotation angle of `cayley_closed_form(u)` about `u/‖u‖_B`, i.e. `2 atan ‖u‖_B`.
pub fn cayley_angle(space: &EllipticSpace, u: &EVector) -> Result<f64> {
    space.require_dim(3)?;
    let n = space.norm(u)?;
    Ok((2.0 * n).atan2(1.0 - n * n))
}

/// Inverse of [`cayley_map`]: `T = (R − I)(R + I)⁻¹`.
pub fn inverse_cayley(space: &EllipticSpace, r: &BMatrix) -> Result<BMatrix> {
    if r.space() != space {
        return Err(Error::SpaceMismatch);
    }
    if r.classify(DEFAULT_TOL * 1.0f64.max(space.max_coefficient())) != MatrixClass::Rotation {
        return Err(Error::NotARotation);
    }
    let n = space.dim();
    let id = DMatrix::<f64>::identity(n, n);
    let plus = r.entries() + &id;
    let det = plus.determinant();
    if det.abs() < DEFAULT_TOL {
        return Err(Error::HalfTurn { det });
    }
    let inv = plus.try_inverse().ok_or(Error::HalfTurn { det })?;
    BMatrix::new(space, (r.entries() - &id) * inv)
}
