//! Rotations and reflections that preserve the scalar product
//! `B(u, w) = Σ aᵢ uᵢ wᵢ`, built four independent ways (Rodrigues
//! exponential, Cayley transform, paired Householder reflections and
//! elliptic quaternions) and cross-checked against each other.

pub mod bmat;
pub mod cayley;
pub mod equat;
pub mod error;
pub mod espace;
pub mod householder;
pub mod pipeline;
pub mod rodrigues;

pub use bmat::{characteristic_polynomial, BMatrix, MatrixClass};
pub use cayley::{cayley_angle, cayley_closed_form, cayley_map, inverse_cayley};
pub use equat::{EllipticQuaternion, PolarForm};
pub use error::{Error, Result};
pub use espace::{EVector, EllipticSpace};
pub use householder::{householder_matrix, reflect, rotation_between};
pub use pipeline::{solve, verify, Method, Residuals, RotationSolution, VerifyReport};
pub use rodrigues::{axis_angle_of, exp_series, rodrigues3d, rodrigues3d_cs, rotate2d, AxisAngle};

/// Absolute tolerance at unit scale used when a caller does not supply one.
pub const DEFAULT_TOL: f64 = 1e-9;
