//! End-to-end construction of the rotation carrying one point of an
//! ellipsoid to another, by every method, with cross-checks.

use std::fmt;

use crate::bmat::{characteristic_polynomial, BMatrix, MatrixClass};
use crate::cayley::cayley_closed_form;
use crate::equat::EllipticQuaternion;
use crate::error::{Error, Result};
use crate::espace::{EVector, EllipticSpace};
use crate::householder::rotation_between_tol;
use crate::rodrigues::rodrigues3d_cs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Rodrigues,
    Householder,
    Quaternion,
    Cayley,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Rodrigues,
        Method::Householder,
        Method::Quaternion,
        Method::Cayley,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Rodrigues => "rodrigues",
            Method::Householder => "householder",
            Method::Quaternion => "quaternion",
            Method::Cayley => "cayley",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Residuals {
    /// `‖R x − y‖_B` per method.
    pub mapping: Vec<(Method, f64)>,
    /// Largest entrywise difference between each pair of method matrices.
    pub pairwise: Vec<(Method, Method, f64)>,
}

impl Residuals {
    pub fn max_mapping(&self) -> f64 {
        self.mapping.iter().map(|m| m.1).fold(0.0, f64::max)
    }

    pub fn max_pairwise(&self) -> f64 {
        self.pairwise.iter().map(|p| p.2).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RotationSolution {
    pub space: EllipticSpace,
    /// B-unit, or zero when `degenerate_axis`.
    pub axis: EVector,
    pub cos_angle: f64,
    /// Always `√(1 − cos²) ≥ 0`.
    pub sin_angle: f64,
    pub degenerate_axis: bool,
    pub quaternion: EllipticQuaternion,
    pub r_rodrigues: BMatrix,
    pub r_householder: BMatrix,
    pub r_quaternion: BMatrix,
    /// Absent for a half turn.
    pub r_cayley: Option<BMatrix>,
    pub residuals: Residuals,
}

impl RotationSolution {
    /// Angle in `[0, π]`.
    pub fn angle(&self) -> f64 {
        self.sin_angle.atan2(self.cos_angle)
    }

    pub fn matrix(&self, method: Method) -> Option<&BMatrix> {
        match method {
            Method::Rodrigues => Some(&self.r_rodrigues),
            Method::Householder => Some(&self.r_householder),
            Method::Quaternion => Some(&self.r_quaternion),
            Method::Cayley => self.r_cayley.as_ref(),
        }
    }

    pub fn matrices(&self) -> Vec<(Method, &BMatrix)> {
        Method::ALL
            .iter()
            .filter_map(|&m| self.matrix(m).map(|r| (m, r)))
            .collect()
    }
}

/// Unit vector B-orthogonal to `x` with the same B-norm, built from the
/// standard basis vector least aligned with `x`.
fn orthogonal_companion(space: &EllipticSpace, x: &EVector) -> Result<EVector> {
    let a = space.coefficients();
    let k = (0..space.dim())
        .min_by(|&i, &j| (a[i].sqrt() * x[i].abs()).total_cmp(&(a[j].sqrt() * x[j].abs())))
        .expect("non-empty space");
    let e = EVector::basis(space.dim(), k);
    let along = space.inner(&e, x)? / space.norm_squared(x)?;
    let z = &e - &x.scale(along);
    Ok(space.normalize(&z)?.scale(space.norm(x)?))
}

/// Rotation of the ellipsoid through `x` carrying `x` to `y`.
///
/// The axis is the normalized elliptical cross product `x × y` and the angle
/// lies in `[0, π]`. Each method's matrix must map `x` to `y`, agree with the
/// others and be a rotation, all within `tol` at unit scale; otherwise the
/// solve fails with [`Error::NumericalFailure`].
pub fn solve(a: &[f64], x: &EVector, y: &EVector, tol: f64) -> Result<RotationSolution> {
    let space = EllipticSpace::new(a.to_vec())?;
    space.require_dim(3)?;
    space.check(x)?;
    space.check(y)?;
    let nx = space.norm(x)?;
    let ny = space.norm(y)?;
    if nx == 0.0 || ny == 0.0 {
        return Err(Error::ZeroVector);
    }
    if (nx - ny).abs() > tol * nx.max(ny) {
        return Err(Error::NormMismatch {
            left: nx,
            right: ny,
        });
    }

    let solution = if space.norm(&(x - y))? <= tol * nx {
        let id = BMatrix::identity(&space);
        RotationSolution {
            space: space.clone(),
            axis: EVector::zeros(3),
            cos_angle: 1.0,
            sin_angle: 0.0,
            degenerate_axis: true,
            quaternion: EllipticQuaternion::real(&space, 1.0)?,
            r_rodrigues: id.clone(),
            r_householder: id.clone(),
            r_quaternion: id.clone(),
            r_cayley: Some(id),
            residuals: Residuals {
                mapping: Vec::new(),
                pairwise: Vec::new(),
            },
        }
    } else if space.norm(&(x + y))? <= tol * nx {
        // Two quarter turns through a point B-orthogonal to x.
        let z = orthogonal_companion(&space, x)?;
        let axis = space.normalize(&space.cross3(x, &z)?)?;
        let r_householder = rotation_between_tol(&space, &z, y, tol)?
            .compose(&rotation_between_tol(&space, x, &z, tol)?)?;
        let quaternion = EllipticQuaternion::new(&space, 0.0, axis.clone())?;
        RotationSolution {
            r_rodrigues: rodrigues3d_cs(&space, &axis, -1.0, 0.0)?,
            r_householder,
            r_quaternion: quaternion.to_rotation_matrix()?,
            r_cayley: None,
            space,
            axis,
            cos_angle: -1.0,
            sin_angle: 0.0,
            degenerate_axis: false,
            quaternion,
            residuals: Residuals {
                mapping: Vec::new(),
                pairwise: Vec::new(),
            },
        }
    } else {
        let axis = space.normalize(&space.cross3(x, y)?)?;
        let cos = (space.inner(x, y)? / (nx * ny)).clamp(-1.0, 1.0);
        let sin = (1.0 - cos * cos).sqrt();
        let c = ((cos + 1.0) / 2.0).sqrt();
        let s = (1.0 - c * c).sqrt();
        let quaternion = EllipticQuaternion::new(&space, c, axis.scale(s))?;
        RotationSolution {
            r_rodrigues: rodrigues3d_cs(&space, &axis, cos, sin)?,
            r_householder: rotation_between_tol(&space, x, y, tol)?,
            r_quaternion: quaternion.to_rotation_matrix()?,
            r_cayley: Some(cayley_closed_form(&space, &axis.scale(sin / (1.0 + cos)))?),
            space,
            axis,
            cos_angle: cos,
            sin_angle: sin,
            degenerate_axis: false,
            quaternion,
            residuals: Residuals {
                mapping: Vec::new(),
                pairwise: Vec::new(),
            },
        }
    };
    check_solution(solution, x, y, tol)
}

fn check_solution(
    mut sol: RotationSolution,
    x: &EVector,
    y: &EVector,
    tol: f64,
) -> Result<RotationSolution> {
    let space = sol.space.clone();
    let scale = 1.0f64.max(space.norm(x)?);
    let matrices: Vec<(Method, BMatrix)> = sol
        .matrices()
        .into_iter()
        .map(|(m, r)| (m, r.clone()))
        .collect();

    let mut mapping = Vec::with_capacity(matrices.len());
    for (method, r) in &matrices {
        let residual = space.norm(&(&r.apply(x)? - y))?;
        if residual > tol * scale {
            return Err(Error::NumericalFailure {
                what: format!("{method} mapping"),
                residual,
                tol: tol * scale,
            });
        }
        let entry_scale = 1.0f64.max(r.max_abs());
        let class_tol = tol * space.max_coefficient().max(1.0) * entry_scale * entry_scale;
        if r.classify(class_tol) != MatrixClass::Rotation {
            return Err(Error::NumericalFailure {
                what: format!("{method} orthogonality"),
                residual: r.orthogonality_residual().max((r.det() - 1.0).abs()),
                tol: class_tol,
            });
        }
        mapping.push((*method, residual));
    }

    let mut pairwise = Vec::new();
    for (i, (m1, r1)) in matrices.iter().enumerate() {
        for (m2, r2) in &matrices[i + 1..] {
            let diff = r1.max_abs_diff(r2);
            let limit = tol * 1.0f64.max(r1.max_abs());
            if diff > limit {
                return Err(Error::NumericalFailure {
                    what: format!("{m1}/{m2} agreement"),
                    residual: diff,
                    tol: limit,
                });
            }
            pairwise.push((*m1, *m2, diff));
        }
    }
    sol.residuals = Residuals { mapping, pairwise };
    Ok(sol)
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub class: MatrixClass,
    /// `‖RᵗΩR − Ω‖` in the max-entry norm.
    pub orthogonality_residual: f64,
    pub det: f64,
    /// `|det R − 1|`.
    pub det_residual: f64,
    pub trace: f64,
    /// `[1, c₁, …, cₙ]` of `det(xI − R)`.
    pub char_poly: Vec<f64>,
    /// `|det(I − R)|`; zero when 1 is an eigenvalue.
    pub unit_eigen_residual: f64,
    /// Cosine of the rotation angle for planar and spatial rotations.
    pub rotation_cos: Option<f64>,
}

/// Diagnostic summary of how close `r` is to an elliptical rotation.
pub fn verify(r: &BMatrix, tol: f64) -> VerifyReport {
    let class = r.classify(tol);
    let det = r.det();
    let trace = r.trace();
    let char_poly = characteristic_polynomial(r.entries());
    let unit_eigen_residual = char_poly.iter().sum::<f64>().abs();
    let rotation_cos = match (class, r.dim()) {
        (MatrixClass::Rotation, 2) => Some(trace / 2.0),
        (MatrixClass::Rotation, 3) => Some((trace - 1.0) / 2.0),
        _ => None,
    };
    VerifyReport {
        class,
        orthogonality_residual: r.orthogonality_residual(),
        det,
        det_residual: (det - 1.0).abs(),
        trace,
        char_poly,
        unit_eigen_residual,
        rotation_cos,
    }
}
