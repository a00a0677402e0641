//! Elliptic quaternions `q₀ + q₁i + q₂j + q₃k` with `i² = −a₁`, `j² = −a₂`,
//! `k² = −a₃` and `ij = (Δ/a₃)k = −ji`, `jk = (Δ/a₁)i = −kj`, `ki = (Δ/a₂)j = −ik`.
//!
//! Unit elements act on ℝ³ by `v ↦ q v q⁻¹`, turning by twice the polar angle.

use std::fmt;

use nalgebra::DMatrix;

use crate::bmat::BMatrix;
use crate::error::{Error, Result};
use crate::espace::{EVector, EllipticSpace};
use crate::rodrigues::check_unit_axis;

/// Largest deviation of the norm from one accepted for a rotation quaternion.
pub const UNIT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct EllipticQuaternion {
    scalar: f64,
    vector: EVector,
    space: EllipticSpace,
}

/// `q = N (cos θ + ε sin θ)` with `ε` a B-unit pure quaternion.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarForm {
    pub magnitude: f64,
    /// Radians in `[0, π]`.
    pub half_angle: f64,
    /// Zero when `pure_scalar`.
    pub axis: EVector,
    /// The vector part vanishes and the axis is undefined.
    pub pure_scalar: bool,
}

impl EllipticQuaternion {
    pub fn new(space: &EllipticSpace, scalar: f64, vector: EVector) -> Result<Self> {
        space.require_dim(3)?;
        space.check(&vector)?;
        Ok(Self {
            scalar,
            vector,
            space: space.clone(),
        })
    }

    pub fn from_components(space: &EllipticSpace, q: [f64; 4]) -> Result<Self> {
        Self::new(space, q[0], EVector::from([q[1], q[2], q[3]]))
    }

    pub fn real(space: &EllipticSpace, r: f64) -> Result<Self> {
        Self::new(space, r, EVector::zeros(3))
    }

    pub fn pure(space: &EllipticSpace, v: &EVector) -> Result<Self> {
        Self::new(space, 0.0, v.clone())
    }

    pub fn scalar(&self) -> f64 {
        self.scalar
    }

    pub fn vector(&self) -> &EVector {
        &self.vector
    }

    pub fn space(&self) -> &EllipticSpace {
        &self.space
    }

    /// `[q₀, q₁, q₂, q₃]`.
    pub fn components(&self) -> [f64; 4] {
        [self.scalar, self.vector[0], self.vector[1], self.vector[2]]
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            scalar: self.scalar * c,
            vector: self.vector.scale(c),
            space: self.space.clone(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(p, q)| (p - q).abs())
            .fold(0.0, f64::max)
    }

    /// `pq = p₀q₀ − B(V_p, V_q) + p₀V_q + q₀V_p + V_p × V_q`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let s = &self.space;
        let scalar = self.scalar * other.scalar - s.inner(&self.vector, &other.vector)?;
        let vector = &(&other.vector.scale(self.scalar) + &self.vector.scale(other.scalar))
            + &s.cross3(&self.vector, &other.vector)?;
        Ok(Self {
            scalar,
            vector,
            space: s.clone(),
        })
    }

    /// Matrix `L(p)` with `p q = L(p) [q₀, q₁, q₂, q₃]ᵗ`.
    pub fn left_matrix(&self) -> DMatrix<f64> {
        let a = self.space.coefficients();
        let d = self.space.delta();
        let [p0, p1, p2, p3] = self.components();
        DMatrix::from_row_slice(
            4,
            4,
            &[
                p0,
                -a[0] * p1,
                -a[1] * p2,
                -a[2] * p3,
                p1,
                p0,
                -p3 * d / a[0],
                p2 * d / a[0],
                p2,
                p3 * d / a[1],
                p0,
                -p1 * d / a[1],
                p3,
                -p2 * d / a[2],
                p1 * d / a[2],
                p0,
            ],
        )
    }

    pub fn conj(&self) -> Self {
        Self {
            scalar: self.scalar,
            vector: -&self.vector,
            space: self.space.clone(),
        }
    }

    pub fn norm_squared(&self) -> f64 {
        self.scalar * self.scalar
            + self
                .space
                .norm_squared(&self.vector)
                .expect("vector part matches the space")
    }

    /// `N_q = √(q₀² + a₁q₁² + a₂q₂² + a₃q₃²)`.
    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// `q̄ / N_q²`.
    pub fn inv(&self) -> Result<Self> {
        let n2 = self.norm_squared();
        if n2 == 0.0 {
            return Err(Error::ZeroQuaternion);
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    pub fn polar(&self) -> Result<PolarForm> {
        let magnitude = self.norm();
        if magnitude == 0.0 {
            return Err(Error::ZeroQuaternion);
        }
        let vn = self
            .space
            .norm(&self.vector)
            .expect("vector part matches the space");
        let half_angle = vn.atan2(self.scalar);
        if vn == 0.0 {
            return Ok(PolarForm {
                magnitude,
                half_angle,
                axis: EVector::zeros(3),
                pure_scalar: true,
            });
        }
        Ok(PolarForm {
            magnitude,
            half_angle,
            axis: self.vector.scale(1.0 / vn),
            pure_scalar: false,
        })
    }

    /// `cos(θ/2) + u sin(θ/2)` for a B-unit axis `u`.
    pub fn from_axis_angle(space: &EllipticSpace, u: &EVector, theta: f64) -> Result<Self> {
        space.require_dim(3)?;
        space.check(u)?;
        check_unit_axis(space, u)?;
        let (s, c) = (theta / 2.0).sin_cos();
        Self::new(space, c, u.scale(s))
    }

    fn require_unit(&self) -> Result<()> {
        let norm = self.norm();
        if (norm - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnit { norm });
        }
        Ok(())
    }

    /// Matrix of `v ↦ q v q⁻¹` for a unit quaternion.
    pub fn to_rotation_matrix(&self) -> Result<BMatrix> {
        self.require_unit()?;
        let s = &self.space;
        let a = s.coefficients();
        let d = s.delta();
        let [q0, q1, q2, q3] = self.components();
        let v = [q1, q2, q3];
        let diag = q0 * q0 - a[0] * q1 * q1 - a[1] * q2 * q2 - a[2] * q3 * q3;
        // q₀ times the skew matrix of the vector part.
        let skew = [
            [0.0, -q3 * d / a[0], q2 * d / a[0]],
            [q3 * d / a[1], 0.0, -q1 * d / a[1]],
            [-q2 * d / a[2], q1 * d / a[2], 0.0],
        ];
        let entries = DMatrix::from_fn(3, 3, |i, j| {
            let id = if i == j { diag } else { 0.0 };
            id + 2.0 * a[j] * v[i] * v[j] + 2.0 * q0 * skew[i][j]
        });
        BMatrix::new(s, entries)
    }

    /// `q r q⁻¹`; keeps the scalar part and norm of `r`.
    pub fn conjugate_by(&self, r: &Self) -> Result<Self> {
        self.product(r)?.product(&self.inv()?)
    }

    /// Vector part of `q v q⁻¹` for a unit quaternion.
    pub fn rotate_vector(&self, v: &EVector) -> Result<EVector> {
        self.require_unit()?;
        let p = Self::pure(&self.space, v)?;
        Ok(self.conjugate_by(&p)?.vector)
    }
}

impl fmt::Display for EllipticQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [q0, q1, q2, q3] = self.components();
        write!(f, "{q0} + {q1}i + {q2}j + {q3}k")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bmat::MatrixClass;
    use crate::rodrigues::rodrigues3d;
    use approx::assert_abs_diff_eq;
    use nalgebra::{Quaternion, UnitQuaternion};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn h221() -> EllipticSpace {
        EllipticSpace::new(vec![2.0, 2.0, 1.0]).unwrap()
    }

    fn q(s: &EllipticSpace, c: [f64; 4]) -> EllipticQuaternion {
        EllipticQuaternion::from_components(s, c).unwrap()
    }

    // Product matrix as printed for H_{2,2,1}.
    fn left_221(p: [f64; 4]) -> DMatrix<f64> {
        let [p0, p1, p2, p3] = p;
        DMatrix::from_row_slice(
            4,
            4,
            &[
                p0,
                -2.0 * p1,
                -2.0 * p2,
                -p3,
                p1,
                p0,
                -p3,
                p2,
                p2,
                p3,
                p0,
                -p1,
                p3,
                -2.0 * p2,
                2.0 * p1,
                p0,
            ],
        )
    }

    // Rotation matrix as printed for H_{2,2,1}.
    fn rotation_221(c: [f64; 4]) -> DMatrix<f64> {
        let [q0, q1, q2, q3] = c;
        DMatrix::from_row_slice(
            3,
            3,
            &[
                q0 * q0 + 2.0 * q1 * q1 - 2.0 * q2 * q2 - q3 * q3,
                4.0 * q1 * q2 - 2.0 * q0 * q3,
                2.0 * q0 * q2 + 2.0 * q1 * q3,
                2.0 * q0 * q3 + 4.0 * q1 * q2,
                q0 * q0 - 2.0 * q1 * q1 + 2.0 * q2 * q2 - q3 * q3,
                2.0 * q2 * q3 - 2.0 * q0 * q1,
                4.0 * q1 * q3 - 4.0 * q0 * q2,
                4.0 * q0 * q1 + 4.0 * q2 * q3,
                q0 * q0 - 2.0 * q1 * q1 - 2.0 * q2 * q2 + q3 * q3,
            ],
        )
    }

    #[test]
    fn product_example() {
        let s = h221();
        let p = q(&s, [1.0, 2.0, 3.0, 4.0]);
        let r = q(&s, [2.0, 4.0, 1.0, 3.0]);
        assert_eq!(
            p.product(&r).unwrap().components(),
            [-32.0, 13.0, 17.0, -9.0]
        );
        let via_matrix =
            left_221(p.components()) * nalgebra::DVector::from_row_slice(&r.components());
        assert_eq!(via_matrix.as_slice(), &[-32.0, 13.0, 17.0, -9.0]);
        assert_eq!(p.left_matrix(), left_221(p.components()));

        let three = EllipticQuaternion::real(&s, 3.0).unwrap();
        assert_eq!(three.product(&r).unwrap(), r.scale(3.0));

        let other = EllipticQuaternion::real(&EllipticSpace::euclidean(3).unwrap(), 1.0).unwrap();
        assert_eq!(p.product(&other), Err(Error::SpaceMismatch));
    }

    #[test]
    fn basis_products() {
        let s = h221();
        let (one, i, j, k) = (
            q(&s, [1.0, 0.0, 0.0, 0.0]),
            q(&s, [0.0, 1.0, 0.0, 0.0]),
            q(&s, [0.0, 0.0, 1.0, 0.0]),
            q(&s, [0.0, 0.0, 0.0, 1.0]),
        );
        assert_eq!(i.product(&j).unwrap(), k.scale(2.0));
        assert_eq!(j.product(&k).unwrap(), i);
        assert_eq!(k.product(&i).unwrap(), j);
        assert_eq!(j.product(&i).unwrap(), k.scale(-2.0));
        assert_eq!(i.product(&i).unwrap(), one.scale(-2.0));
        assert_eq!(j.product(&j).unwrap(), one.scale(-2.0));
        assert_eq!(k.product(&k).unwrap(), one.scale(-1.0));
    }

    #[test]
    fn general_left_matrix_matches_product() {
        let s = EllipticSpace::new(vec![0.3, 4.0, 1.7]).unwrap();
        let p = q(&s, [0.4, -1.2, 2.5, 0.9]);
        let r = q(&s, [-1.1, 0.6, 0.2, -2.3]);
        let m = p.left_matrix() * nalgebra::DVector::from_row_slice(&r.components());
        let direct = p.product(&r).unwrap().components();
        for k in 0..4 {
            assert_abs_diff_eq!(m[k], direct[k], epsilon = 1e-14);
        }
    }

    #[test]
    fn conj_norm_inverse() {
        let s = h221();
        let p = q(&s, [1.0, 2.0, 1.0, 5.0]);
        assert_eq!(p.norm(), 6.0);
        assert_eq!(p.conj().components(), [1.0, -2.0, -1.0, -5.0]);
        let one = p.product(&p.inv().unwrap()).unwrap();
        assert!(one.max_abs_diff(&q(&s, [1.0, 0.0, 0.0, 0.0])) < 1e-15);

        let r = EllipticQuaternion::real(&s, -2.5).unwrap();
        assert_eq!(r.conj(), r);
        assert_eq!(r.norm(), 2.5);
        assert_eq!(q(&s, [0.0; 4]).inv(), Err(Error::ZeroQuaternion));
    }

    #[test]
    fn polar_examples() {
        let s = h221();
        let p = q(&s, [1.0, 2.0, 1.0, 5.0]).polar().unwrap();
        assert_eq!(p.magnitude, 6.0);
        assert!(!p.pure_scalar);
        assert_abs_diff_eq!(p.half_angle.cos(), 1.0 / 6.0, epsilon = 1e-15);
        let r35 = 35f64.sqrt();
        assert!(
            p.axis
                .max_abs_diff(&EVector::from([2.0 / r35, 1.0 / r35, 5.0 / r35]))
                < 1e-15
        );

        let one = q(&s, [1.0, 0.0, 0.0, 0.0]).polar().unwrap();
        assert!(one.pure_scalar);
        assert_eq!(one.half_angle, 0.0);
        assert_eq!(one.magnitude, 1.0);
        let minus = q(&s, [-2.0, 0.0, 0.0, 0.0]).polar().unwrap();
        assert_eq!(minus.half_angle, PI);
        assert_eq!(q(&s, [0.0; 4]).polar(), Err(Error::ZeroQuaternion));
    }

    #[test]
    fn axis_angle_construction() {
        let s = h221();
        let u = EVector::from([0.5, 0.5, 0.0]);
        assert_eq!(
            EllipticQuaternion::from_axis_angle(&s, &u, 0.0)
                .unwrap()
                .components(),
            [1.0, 0.0, 0.0, 0.0]
        );
        let half = EllipticQuaternion::from_axis_angle(&s, &u, PI).unwrap();
        assert!(half.max_abs_diff(&q(&s, [0.0, 0.5, 0.5, 0.0])) < 1e-16);

        let axis = EVector::from([-0.5, 0.5, 0.0]);
        let r = EllipticQuaternion::from_axis_angle(&s, &axis, 0.8f64.atan2(0.6))
            .unwrap()
            .to_rotation_matrix()
            .unwrap();
        let expected =
            DMatrix::from_row_slice(3, 3, &[4.0, -1.0, 2.0, -1.0, 4.0, 2.0, -4.0, -4.0, 3.0]) / 5.0;
        assert!((r.entries() - expected).amax() < 1e-15);

        assert!(matches!(
            EllipticQuaternion::from_axis_angle(&s, &EVector::from([1.0, 1.0, 0.0]), 1.0),
            Err(Error::AxisNotUnit { .. })
        ));
    }

    #[test]
    fn rotation_matrix_examples() {
        let s = h221();
        let half = q(&s, [0.0, 0.5, 0.5, 0.0]);
        let r = half.to_rotation_matrix().unwrap();
        let expected =
            DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0]);
        assert_eq!(r.entries(), &expected);
        assert_eq!(
            q(&s, [1.0, 0.0, 0.0, 0.0]).to_rotation_matrix().unwrap(),
            BMatrix::identity(&s)
        );

        let c = [0.3, 0.4, -0.2, 0.0];
        let n = q(&s, c).norm();
        let c = c.map(|x| x / n);
        let general = q(&s, c).to_rotation_matrix().unwrap();
        assert!((general.entries() - rotation_221(c)).amax() < 1e-15);
        assert_eq!(general.classify(1e-12), MatrixClass::Rotation);

        assert!(matches!(
            q(&s, [1.0, 1.0, 0.0, 0.0]).to_rotation_matrix(),
            Err(Error::NotUnit { .. })
        ));
    }

    #[test]
    fn rotate_vector_examples() {
        let s = h221();
        let v = EVector::from([1.3, -0.4, 2.0]);
        assert_eq!(q(&s, [1.0, 0.0, 0.0, 0.0]).rotate_vector(&v).unwrap(), v);
        let half = q(&s, [0.0, 0.5, 0.5, 0.0]);
        assert!(
            half.rotate_vector(&EVector::from([1.0, 0.0, 0.0]))
                .unwrap()
                .max_abs_diff(&EVector::from([0.0, 1.0, 0.0]))
                < 1e-15
        );
        let on_axis = EVector::from([2.0, 2.0, 0.0]);
        assert!(half.rotate_vector(&on_axis).unwrap().max_abs_diff(&on_axis) < 1e-15);
    }

    fn coeffs() -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(0.1f64..10.0, 3)
    }

    fn comps() -> impl Strategy<Value = [f64; 4]> {
        prop::array::uniform4(-3.0f64..3.0)
    }

    fn unit(s: &EllipticSpace, c: [f64; 4]) -> Option<EllipticQuaternion> {
        let p = q(s, c);
        let n = p.norm();
        (n > 1e-3).then(|| p.scale(1.0 / n))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in coeffs(), p in comps(), r in comps()) {
            let s = EllipticSpace::new(a).unwrap();
            let (p, r) = (q(&s, p), q(&s, r));
            let lhs = p.product(&r).unwrap().norm();
            let rhs = p.norm() * r.norm();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(f64::MIN_POSITIVE));
            let pp = p.product(&p.conj()).unwrap();
            prop_assert!((pp.scalar() - p.norm_squared()).abs() < 1e-12 * p.norm_squared().max(1.0));
            prop_assert!(pp.vector().coords().amax() < 1e-12 * p.norm_squared().max(1.0));
        }

        #[test]
        fn pure_products(a in coeffs(), u in prop::array::uniform3(-3.0f64..3.0), v in prop::array::uniform3(-3.0f64..3.0)) {
            let s = EllipticSpace::new(a).unwrap();
            let (u, v) = (EVector::from(u), EVector::from(v));
            let pq = EllipticQuaternion::pure(&s, &u).unwrap().product(&EllipticQuaternion::pure(&s, &v).unwrap()).unwrap();
            let scale = s.norm(&u).unwrap() * s.norm(&v).unwrap() + 1.0;
            prop_assert!((pq.scalar() + s.inner(&u, &v).unwrap()).abs() < 1e-12 * scale);
            prop_assert!(pq.vector().max_abs_diff(&s.cross3(&u, &v).unwrap()) < 1e-12 * scale * s.max_coefficient());
            // A B-unit axis squares to −1.
            if s.norm(&u).unwrap() > 1e-3 {
                let e = EllipticQuaternion::pure(&s, &s.normalize(&u).unwrap()).unwrap();
                let sq = e.product(&e).unwrap();
                prop_assert!(sq.max_abs_diff(&q(&s, [-1.0, 0.0, 0.0, 0.0])) < 1e-12);
            }
        }

        #[test]
        fn associativity(a in coeffs(), p in comps(), r in comps(), t in comps()) {
            let s = EllipticSpace::new(a).unwrap();
            let (p, r, t) = (q(&s, p), q(&s, r), q(&s, t));
            let lhs = p.product(&r).unwrap().product(&t).unwrap();
            let rhs = p.product(&r.product(&t).unwrap()).unwrap();
            let scale = p.norm() * r.norm() * t.norm() * s.max_coefficient().max(1.0);
            prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12 * scale.max(1.0));
        }

        #[test]
        fn double_cover(a in coeffs(), c in comps()) {
            let s = EllipticSpace::new(a).unwrap();
            let Some(p) = unit(&s, c) else { return Ok(()) };
            prop_assert_eq!(p.to_rotation_matrix().unwrap(), p.scale(-1.0).to_rotation_matrix().unwrap());
        }

        #[test]
        fn polar_reconstructs(a in coeffs(), c in comps()) {
            let s = EllipticSpace::new(a).unwrap();
            let p = q(&s, c);
            prop_assume!(p.norm() > 1e-3);
            let f = p.polar().unwrap();
            let (sn, cs) = f.half_angle.sin_cos();
            let back = EllipticQuaternion::new(&s, f.magnitude * cs, f.axis.scale(f.magnitude * sn)).unwrap();
            prop_assert!(back.max_abs_diff(&p) < 1e-12 * p.norm().max(1.0) * s.max_coefficient().max(1.0).sqrt());
        }

        #[test]
        fn matrix_matches_sandwich(a in coeffs(), c in comps(), v in prop::array::uniform3(-3.0f64..3.0), r0 in -3.0f64..3.0) {
            let s = EllipticSpace::new(a).unwrap();
            let Some(p) = unit(&s, c) else { return Ok(()) };
            let v = EVector::from(v);
            let m = p.to_rotation_matrix().unwrap();
            prop_assert_eq!(m.classify(1e-9 * s.max_coefficient().max(1.0)), MatrixClass::Rotation);
            let rotated = p.rotate_vector(&v).unwrap();
            let scale = s.norm(&v).unwrap().max(1.0) * s.max_coefficient().max(1.0);
            prop_assert!(rotated.max_abs_diff(&m.apply(&v).unwrap()) < 1e-11 * scale);
            let general = EllipticQuaternion::new(&s, r0, v.clone()).unwrap();
            let image = p.conjugate_by(&general).unwrap();
            prop_assert!((image.scalar() - r0).abs() < 1e-12 * scale);
            prop_assert!((image.norm() - general.norm()).abs() < 1e-11 * scale);
        }

        #[test]
        fn angle_doubling(a in coeffs(), raw in prop::array::uniform3(-1.0f64..1.0), theta in -PI..PI) {
            let s = EllipticSpace::new(a).unwrap();
            let v = EVector::from(raw);
            prop_assume!(s.norm(&v).unwrap() > 1e-3);
            let u = s.normalize(&v).unwrap();
            let m = EllipticQuaternion::from_axis_angle(&s, &u, theta).unwrap().to_rotation_matrix().unwrap();
            prop_assert!(m.max_abs_diff(&rodrigues3d(&s, &u, theta).unwrap()) < 1e-9);
        }

        #[test]
        fn euclidean_reduction(p in comps(), r in comps()) {
            let s = EllipticSpace::euclidean(3).unwrap();
            let hp = Quaternion::new(p[0], p[1], p[2], p[3]);
            let hr = Quaternion::new(r[0], r[1], r[2], r[3]);
            let hamilton = hp * hr;
            let ours = q(&s, p).product(&q(&s, r)).unwrap().components();
            let theirs = [hamilton.w, hamilton.i, hamilton.j, hamilton.k];
            for k in 0..4 {
                prop_assert!((ours[k] - theirs[k]).abs() < 1e-12 * (1.0 + hp.norm() * hr.norm()));
            }
            prop_assume!(hp.norm() > 1e-3);
            let uq = UnitQuaternion::from_quaternion(hp);
            let classic = uq.to_rotation_matrix();
            let n = hp.norm();
            let m = q(&s, p.map(|x| x / n)).to_rotation_matrix().unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    prop_assert!((m.get(i, j) - classic[(i, j)]).abs() < 1e-12);
                }
            }
        }
    }
}
