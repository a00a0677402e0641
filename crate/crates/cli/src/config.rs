//! Validated job descriptions built from parsed flags.

use std::path::PathBuf;

use ellrot::{EVector, EllipticSpace};

use crate::args::{Cli, Command, Format, MethodArg};
use crate::error::{invalid, CliError};
use crate::numbers::{parse_list, parse_scalar};

#[derive(Debug, Clone)]
pub enum RotationInput {
    AxisAngle { axis: Option<EVector>, angle: f64 },
    FromTo { from: EVector, to: EVector },
}

#[derive(Debug, Clone)]
pub enum Job {
    Rotate {
        method: MethodArg,
        input: RotationInput,
    },
    Solve {
        from: EVector,
        to: EVector,
    },
    Qmul {
        p: [f64; 4],
        q: [f64; 4],
    },
    Trace {
        axis: Option<EVector>,
        angle: f64,
        start: EVector,
        steps: usize,
    },
    Verify {
        a_override: Option<Vec<f64>>,
        matrix: PathBuf,
    },
    Reflect {
        normal: EVector,
        point: EVector,
    },
}

#[derive(Debug, Clone)]
pub struct JobConfig {
    /// Absent only for `verify`, which reads the space from the document.
    pub space: Option<EllipticSpace>,
    pub job: Job,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub tol: f64,
}

fn vector(space: &EllipticSpace, flag: &str, text: &str) -> Result<EVector, CliError> {
    let v = parse_list(text)?;
    if v.len() != space.dim() {
        return Err(invalid(format!(
            "--{flag} has {} components but the space has dimension {}",
            v.len(),
            space.dim()
        )));
    }
    Ok(EVector::new(v))
}

/// Rescales a user axis to B-unit length.
fn axis(space: &EllipticSpace, text: &str) -> Result<EVector, CliError> {
    if space.dim() != 3 {
        return Err(invalid("--axis is only meaningful in three dimensions"));
    }
    let u = vector(space, "axis", text)?;
    Ok(space.normalize(&u)?)
}

fn planar_or_axis(space: &EllipticSpace, text: Option<&str>) -> Result<Option<EVector>, CliError> {
    match (space.dim(), text) {
        (2, None) => Ok(None),
        (2, Some(_)) => Err(invalid("planar rotations take no --axis")),
        (3, Some(t)) => Ok(Some(axis(space, t)?)),
        (3, None) => Err(invalid("--axis is required in three dimensions")),
        (n, _) => Err(invalid(format!(
            "rotations by axis and angle need 2 or 3 coefficients, got {n}"
        ))),
    }
}

fn quaternion(text: &str, flag: &str) -> Result<[f64; 4], CliError> {
    let v = parse_list(text)?;
    v.as_slice().try_into().map_err(|_| {
        invalid(format!(
            "--{flag} needs 4 components q0,q1,q2,q3, got {}",
            v.len()
        ))
    })
}

impl JobConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let tol = parse_scalar(&cli.tol)?;
        if tol.is_nan() || tol <= 0.0 {
            return Err(invalid(format!("--tol must be positive, got {tol}")));
        }
        let angle = |text: &str| -> Result<f64, CliError> {
            let v = parse_scalar(text)?;
            Ok(if cli.degrees { v.to_radians() } else { v })
        };
        let space_of = |text: &str| -> Result<EllipticSpace, CliError> {
            Ok(EllipticSpace::new(parse_list(text)?)?)
        };

        let (space, job) = match cli.command {
            Command::Rotate {
                space,
                method,
                axis: ax,
                angle: an,
                from,
                to,
            } => {
                let s = space_of(&space.a)?;
                let input = match (an, from, to) {
                    (Some(an), None, None) => RotationInput::AxisAngle {
                        axis: planar_or_axis(&s, ax.as_deref())?,
                        angle: angle(&an)?,
                    },
                    (None, Some(f), Some(t)) if ax.is_none() => RotationInput::FromTo {
                        from: vector(&s, "from", &f)?,
                        to: vector(&s, "to", &t)?,
                    },
                    _ => return Err(invalid(
                        "rotate takes either --angle (with --axis in 3D) or both --from and --to",
                    )),
                };
                (Some(s), Job::Rotate { method, input })
            }
            Command::Solve { space, from, to } => {
                let s = space_of(&space.a)?;
                let job = Job::Solve {
                    from: vector(&s, "from", &from)?,
                    to: vector(&s, "to", &to)?,
                };
                (Some(s), job)
            }
            Command::Qmul { space, p, q } => {
                let s = space_of(&space.a)?;
                if s.dim() != 3 {
                    return Err(invalid("quaternions need exactly 3 coefficients"));
                }
                let job = Job::Qmul {
                    p: quaternion(&p, "p")?,
                    q: quaternion(&q, "q")?,
                };
                (Some(s), job)
            }
            Command::Trace {
                space,
                axis: ax,
                angle: an,
                start,
                steps,
            } => {
                let s = space_of(&space.a)?;
                if steps < 2 {
                    return Err(CliError::TooFewSteps(steps));
                }
                let job = Job::Trace {
                    axis: planar_or_axis(&s, ax.as_deref())?,
                    angle: angle(&an)?,
                    start: vector(&s, "start", &start)?,
                    steps,
                };
                (Some(s), job)
            }
            Command::Verify { a, matrix } => {
                let a_override = match a {
                    Some(t) => {
                        let v = parse_list(&t)?;
                        EllipticSpace::new(v.clone())?;
                        Some(v)
                    }
                    None => None,
                };
                (None, Job::Verify { a_override, matrix })
            }
            Command::Reflect {
                space,
                normal,
                point,
            } => {
                let s = space_of(&space.a)?;
                let job = Job::Reflect {
                    normal: vector(&s, "normal", &normal)?,
                    point: vector(&s, "point", &point)?,
                };
                (Some(s), job)
            }
        };
        Ok(JobConfig {
            space,
            job,
            format: cli.format,
            out: cli.out,
            tol,
        })
    }
}
