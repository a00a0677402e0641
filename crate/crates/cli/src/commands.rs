use std::fs;
use std::path::Path;

use ellrot::{
    cayley_closed_form, cayley_map, householder_matrix, reflect, rodrigues3d, rotate2d,
    rotation_between, solve, verify, BMatrix, EVector, EllipticQuaternion, EllipticSpace, Error,
    MatrixClass, Method,
};
use serde_json::Value;

use crate::args::{Format, MethodArg};
use crate::config::{Job, JobConfig, RotationInput};
use crate::docs;
use crate::error::{invalid, CliError};

/// Runs a validated job and returns the rendered output.
pub fn run(cfg: &JobConfig) -> Result<String, CliError> {
    let render = |doc: Value| match cfg.format {
        Format::Json => docs::to_json(&doc),
        Format::Text => docs::to_text(&doc),
    };
    let space = || {
        cfg.space
            .as_ref()
            .expect("every job except verify carries a space")
    };
    match &cfg.job {
        Job::Rotate { method, input } => {
            let s = space();
            let r = rotate(s, *method, input, cfg.tol)?;
            let report = verify(&r, class_tol(s, &r, cfg.tol));
            if report.class != MatrixClass::Rotation {
                return Err(Error::NumericalFailure {
                    what: "orthogonality".into(),
                    residual: report.orthogonality_residual,
                    tol: cfg.tol,
                }
                .into());
            }
            Ok(render(docs::matrix_doc(
                s,
                Some(method_name(*method)),
                &r,
                &report,
            )))
        }
        Job::Solve { from, to } => {
            let s = space();
            let sol = solve(s.coefficients(), from, to, cfg.tol)?;
            Ok(render(docs::solution_doc(&sol, from, to)))
        }
        Job::Qmul { p, q } => {
            let s = space();
            let p = EllipticQuaternion::from_components(s, *p)?;
            let q = EllipticQuaternion::from_components(s, *q)?;
            let product = p.product(&q)?;
            Ok(render(docs::quaternion_doc(s, &p, &q, &product)))
        }
        Job::Trace {
            axis,
            angle,
            start,
            steps,
        } => trace(space(), axis.as_ref(), *angle, start, *steps, cfg.tol),
        Job::Verify { a_override, matrix } => {
            let r = read_matrix(matrix, a_override.as_deref())?;
            let report = verify(&r, class_tol(r.space(), &r, cfg.tol));
            Ok(render(docs::matrix_doc(r.space(), None, &r, &report)))
        }
        Job::Reflect { normal, point } => {
            let s = space();
            let h = householder_matrix(s, normal)?;
            let image = reflect(s, normal, point)?;
            Ok(render(docs::reflection_doc(s, normal, point, &image, &h)))
        }
    }
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Rodrigues => "rodrigues",
        MethodArg::Cayley => "cayley",
        MethodArg::Quat => "quat",
        MethodArg::Householder => "householder",
    }
}

/// Classification tolerance scaled like the pipeline's: entries of a
/// B-rotation grow with the spread of the coefficients.
fn class_tol(space: &EllipticSpace, r: &BMatrix, tol: f64) -> f64 {
    tol * space.max_coefficient().max(1.0) * r.max_abs().max(1.0).powi(2)
}

/// Rotation by `theta` about `axis`, or in the plane when there is no axis.
fn axis_rotation(
    space: &EllipticSpace,
    axis: Option<&EVector>,
    theta: f64,
) -> Result<BMatrix, CliError> {
    Ok(match axis {
        Some(u) => rodrigues3d(space, u, theta)?,
        None => rotate2d(space, theta)?,
    })
}

/// `det(R + I)` for a rotation by `theta` in two or three dimensions.
fn half_turn_det(dim: usize, cos: f64) -> f64 {
    if dim == 2 {
        2.0 + 2.0 * cos
    } else {
        4.0 + 4.0 * cos
    }
}

fn rotate(
    space: &EllipticSpace,
    method: MethodArg,
    input: &RotationInput,
    tol: f64,
) -> Result<BMatrix, CliError> {
    match input {
        RotationInput::AxisAngle { axis, angle } => {
            let axis = axis.as_ref();
            match method {
                MethodArg::Rodrigues => axis_rotation(space, axis, *angle),
                MethodArg::Cayley => {
                    let det = half_turn_det(space.dim(), angle.cos());
                    if det.abs() < 1e-9 {
                        return Err(Error::HalfTurn { det }.into());
                    }
                    let t = (angle / 2.0).tan();
                    Ok(match axis {
                        Some(u) => cayley_closed_form(space, &u.scale(t))?,
                        None => {
                            let g = BMatrix::canonical_skew_2d(space)?;
                            cayley_map(space, &BMatrix::new(space, g.entries() * t)?)?
                        }
                    })
                }
                MethodArg::Quat => {
                    let u =
                        axis.ok_or_else(|| invalid("--method quat needs three coefficients"))?;
                    Ok(EllipticQuaternion::from_axis_angle(space, u, *angle)?
                        .to_rotation_matrix()?)
                }
                MethodArg::Householder => {
                    // Two mirrors half the angle apart.
                    let n1 = mirror_normal(space, axis)?;
                    let n2 = axis_rotation(space, axis, angle / 2.0)?.apply(&n1)?;
                    Ok(
                        householder_matrix(space, &n2)?
                            .compose(&householder_matrix(space, &n1)?)?,
                    )
                }
            }
        }
        RotationInput::FromTo { from, to } => {
            if method == MethodArg::Householder {
                return Ok(rotation_between(space, from, to)?);
            }
            if space.dim() != 3 {
                return Err(invalid(
                    "--from/--to in the plane needs --method householder",
                ));
            }
            let sol = solve(space.coefficients(), from, to, tol)?;
            let m = match method {
                MethodArg::Rodrigues => Method::Rodrigues,
                MethodArg::Quat => Method::Quaternion,
                MethodArg::Cayley => Method::Cayley,
                MethodArg::Householder => unreachable!(),
            };
            sol.matrix(m).cloned().ok_or_else(|| {
                Error::HalfTurn {
                    det: half_turn_det(3, sol.cos_angle),
                }
                .into()
            })
        }
    }
}

/// A vector B-orthogonal to `axis`, or the first basis vector in the plane.
fn mirror_normal(space: &EllipticSpace, axis: Option<&EVector>) -> Result<EVector, CliError> {
    let n = space.dim();
    let Some(u) = axis else {
        return Ok(EVector::basis(n, 0));
    };
    // The basis vector least aligned with the axis keeps the projection well conditioned.
    let mut best: Option<(f64, EVector)> = None;
    for k in 0..n {
        let e = EVector::basis(n, k);
        let c = space.cos_angle(&e, u)?.abs();
        if best.as_ref().is_none_or(|(bc, _)| c < *bc) {
            best = Some((c, e));
        }
    }
    let (_, e) = best.expect("dimension is at least 2");
    let p = &e - &u.scale(space.inner(&e, u)?);
    Ok(space.normalize(&p)?)
}

fn trace(
    space: &EllipticSpace,
    axis: Option<&EVector>,
    angle: f64,
    start: &EVector,
    steps: usize,
    tol: f64,
) -> Result<String, CliError> {
    let names = ["x", "y", "z"];
    let mut out = String::from("t");
    for name in &names[..space.dim()] {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    let level = space.norm_squared(start)?;
    let bound = tol * level.max(1.0);
    for k in 0..steps {
        let t = angle * k as f64 / (steps - 1) as f64;
        let p = axis_rotation(space, axis, t)?.apply(start)?;
        let drift = (space.norm_squared(&p)? - level).abs();
        if drift > bound {
            return Err(Error::NumericalFailure {
                what: format!("ellipsoid level at t = {t}"),
                residual: drift,
                tol: bound,
            }
            .into());
        }
        out.push_str(&t.to_string());
        for c in p.as_slice() {
            out.push(',');
            out.push_str(&c.to_string());
        }
        out.push('\n');
    }
    Ok(out)
}

fn read_matrix(path: &Path, a_override: Option<&[f64]>) -> Result<BMatrix, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let doc: Value =
        serde_json::from_str(&text).map_err(|e| CliError::BadDocument(e.to_string()))?;
    let numbers = |v: &Value, what: &str| -> Result<Vec<f64>, CliError> {
        v.as_array()
            .ok_or_else(|| CliError::BadDocument(format!("`{what}` must be an array")))?
            .iter()
            .map(|x| {
                x.as_f64().ok_or_else(|| {
                    CliError::BadDocument(format!("`{what}` must contain only numbers"))
                })
            })
            .collect()
    };
    let a = match a_override {
        Some(a) => a.to_vec(),
        None => numbers(
            doc.get("a")
                .ok_or_else(|| CliError::BadDocument("missing `a`; pass --a".into()))?,
            "a",
        )?,
    };
    let space = EllipticSpace::new(a)?;
    let rows = doc
        .get("matrix")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::BadDocument("missing `matrix` array".into()))?
        .iter()
        .map(|row| numbers(row, "matrix"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BMatrix::from_rows(&space, &rows)?)
}
