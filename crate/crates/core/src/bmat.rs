//! Matrices tagged with the scalar product space they act on.

use std::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::espace::{EVector, EllipticSpace};

/// Classification of a square matrix with respect to `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixClass {
    Rotation,
    Reflection,
    NotBOrthogonal,
}

impl MatrixClass {
    pub fn name(self) -> &'static str {
        match self {
            MatrixClass::Rotation => "Rotation",
            MatrixClass::Reflection => "Reflection",
            MatrixClass::NotBOrthogonal => "NotBOrthogonal",
        }
    }
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BMatrix {
    entries: DMatrix<f64>,
    space: EllipticSpace,
}

impl BMatrix {
    pub fn new(space: &EllipticSpace, entries: DMatrix<f64>) -> Result<Self> {
        let n = space.dim();
        if entries.nrows() != n || entries.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if entries.nrows() != n {
                    entries.nrows()
                } else {
                    entries.ncols()
                },
            });
        }
        Ok(Self {
            entries,
            space: space.clone(),
        })
    }

    pub fn from_rows(space: &EllipticSpace, rows: &[Vec<f64>]) -> Result<Self> {
        let n = space.dim();
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Self::new(space, DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn identity(space: &EllipticSpace) -> Self {
        let n = space.dim();
        Self {
            entries: DMatrix::identity(n, n),
            space: space.clone(),
        }
    }

    pub fn zeros(space: &EllipticSpace) -> Self {
        let n = space.dim();
        Self {
            entries: DMatrix::zeros(n, n),
            space: space.clone(),
        }
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<f64> {
        self.entries
    }

    pub fn space(&self) -> &EllipticSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .row_iter()
            .map(|r| r.iter().copied().collect())
            .collect()
    }

    pub fn apply(&self, v: &EVector) -> Result<EVector> {
        self.space.check(v)?;
        Ok(EVector::from(&self.entries * v.coords()))
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &BMatrix) -> Result<BMatrix> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(Self {
            entries: &self.entries * &other.entries,
            space: self.space.clone(),
        })
    }

    pub fn transpose(&self) -> BMatrix {
        Self {
            entries: self.entries.transpose(),
            space: self.space.clone(),
        }
    }

    #[cfg(test)]
    fn with_entries(&self, entries: DMatrix<f64>) -> BMatrix {
        Self {
            entries,
            space: self.space.clone(),
        }
    }

    /// Determinant by LU with partial pivoting (closed form up to 3×3).
    pub fn det(&self) -> f64 {
        self.entries.determinant()
    }

    pub fn trace(&self) -> f64 {
        self.entries.trace()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.amax()
    }

    pub fn max_abs_diff(&self, other: &BMatrix) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        (&self.entries - &other.entries).amax()
    }

    /// ‖MᵗΩM − Ω‖ in the max-entry norm.
    pub fn orthogonality_residual(&self) -> f64 {
        let omega = self.space.omega();
        (self.entries.transpose() * &omega * &self.entries - omega).amax()
    }

    /// ‖MᵗΩ − ΩM‖ in the max-entry norm.
    pub fn symmetry_residual(&self) -> f64 {
        let omega = self.space.omega();
        (self.entries.transpose() * &omega - &omega * &self.entries).amax()
    }

    /// ‖MᵗΩ + ΩM‖ in the max-entry norm.
    pub fn skew_residual(&self) -> f64 {
        let omega = self.space.omega();
        (self.entries.transpose() * &omega + &omega * &self.entries).amax()
    }

    pub fn classify(&self, tol: f64) -> MatrixClass {
        if self.orthogonality_residual() > tol {
            return MatrixClass::NotBOrthogonal;
        }
        let det = self.det();
        if (det - 1.0).abs() <= tol {
            MatrixClass::Rotation
        } else if (det + 1.0).abs() <= tol {
            MatrixClass::Reflection
        } else {
            MatrixClass::NotBOrthogonal
        }
    }

    /// B-symmetric matrix with entries `Δ pᵢⱼ / aᵢ`.
    ///
    /// Only the lower triangle of `params` (diagonal included) is read; the
    /// upper triangle is taken as its mirror.
    pub fn symmetric_from_params(space: &EllipticSpace, params: &DMatrix<f64>) -> Result<Self> {
        check_square(space, params)?;
        let a = space.coefficients();
        let d = space.delta();
        let entries = DMatrix::from_fn(space.dim(), space.dim(), |i, j| {
            let p = if i >= j {
                params[(i, j)]
            } else {
                params[(j, i)]
            };
            d * p / a[i]
        });
        Self::new(space, entries)
    }

    /// B-skew matrix with entries `±Δ pᵢⱼ / aᵢ`, positive below the diagonal.
    ///
    /// Only the strictly lower triangle of `params` is read.
    pub fn skew_from_params(space: &EllipticSpace, params: &DMatrix<f64>) -> Result<Self> {
        check_square(space, params)?;
        let a = space.coefficients();
        let d = space.delta();
        let entries = DMatrix::from_fn(space.dim(), space.dim(), |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Greater => d * params[(i, j)] / a[i],
            std::cmp::Ordering::Less => -d * params[(j, i)] / a[i],
            std::cmp::Ordering::Equal => 0.0,
        });
        Self::new(space, entries)
    }

    /// The planar generator `[[0, -√(a₂/a₁)], [√(a₁/a₂), 0]]`, which squares to `-I`.
    pub fn canonical_skew_2d(space: &EllipticSpace) -> Result<Self> {
        space.require_dim(2)?;
        let mut p = DMatrix::zeros(2, 2);
        p[(1, 0)] = 1.0;
        Self::skew_from_params(space, &p)
    }

    /// The B-skew matrix `T` with `T v = u × v` (elliptical vector product).
    pub fn skew_from_axis(space: &EllipticSpace, u: &EVector) -> Result<Self> {
        space.require_dim(3)?;
        space.check(u)?;
        let mut p = DMatrix::zeros(3, 3);
        p[(1, 0)] = u[2];
        p[(2, 0)] = -u[1];
        p[(2, 1)] = u[0];
        Self::skew_from_params(space, &p)
    }

    /// `D M D⁻¹` with `D = diag(√aᵢ)`, viewed in the Euclidean space.
    ///
    /// B-orthogonal matrices become orthogonal in the ordinary sense.
    pub fn euclidean_conjugate(&self) -> BMatrix {
        let n = self.dim();
        let s: Vec<f64> = self.space.coefficients().iter().map(|a| a.sqrt()).collect();
        let entries = DMatrix::from_fn(n, n, |i, j| s[i] * self.entries[(i, j)] / s[j]);
        Self {
            entries,
            space: EllipticSpace::euclidean(n).expect("dimension already validated"),
        }
    }
}

fn check_square(space: &EllipticSpace, m: &DMatrix<f64>) -> Result<()> {
    let n = space.dim();
    if m.nrows() != n || m.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.nrows().max(m.ncols()),
        });
    }
    Ok(())
}

/// Coefficients `[1, c₁, …, cₙ]` of `det(xI − M) = xⁿ + c₁xⁿ⁻¹ + … + cₙ`,
/// computed with the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(m: &DMatrix<f64>) -> Vec<f64> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "matrix must be square");
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(1.0);
    let id = DMatrix::<f64>::identity(n, n);
    let mut mk = DMatrix::<f64>::zeros(n, n);
    for k in 1..=n {
        mk = m * &mk + &id * coeffs[k - 1];
        let c = -(m * &mk).trace() / k as f64;
        coeffs.push(c);
    }
    coeffs
}

impl fmt::Display for BMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>24}")).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
