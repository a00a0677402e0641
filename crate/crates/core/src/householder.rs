//! Reflections in hyperplanes `B(v, ·) = 0` and rotations built from two of them.

use nalgebra::DMatrix;

use crate::bmat::BMatrix;
use crate::error::{Error, Result};
use crate::espace::{EVector, EllipticSpace};
use crate::DEFAULT_TOL;

/// `H = I − 2 v vᵗ Ω / B(v, v)`.
pub fn householder_matrix(space: &EllipticSpace, v: &EVector) -> Result<BMatrix> {
    let n2 = space.norm_squared(v)?;
    if n2 == 0.0 {
        return Err(Error::ZeroVector);
    }
    let a = space.coefficients();
    let n = space.dim();
    let entries = DMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        id - 2.0 * a[j] * v[i] * v[j] / n2
    });
    BMatrix::new(space, entries)
}

/// Mirror image of `x` in the hyperplane B-orthogonal to `v`.
pub fn reflect(space: &EllipticSpace, v: &EVector, x: &EVector) -> Result<EVector> {
    householder_matrix(space, v)?.apply(x)
}

/// The rotation `H_y H_{x+y}` taking `x` to `y`.
pub fn rotation_between(space: &EllipticSpace, x: &EVector, y: &EVector) -> Result<BMatrix> {
    rotation_between_tol(space, x, y, DEFAULT_TOL)
}

pub(crate) fn rotation_between_tol(
    space: &EllipticSpace,
    x: &EVector,
    y: &EVector,
    tol: f64,
) -> Result<BMatrix> {
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
    let sum = x + y;
    if space.norm(&sum)? < tol * nx {
        return Err(Error::AntipodalInput);
    }
    householder_matrix(space, y)?.compose(&householder_matrix(space, &sum)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bmat::MatrixClass;
    use crate::rodrigues::rodrigues3d;
    use proptest::prelude::*;

    fn over(den: f64, rows: &[f64]) -> DMatrix<f64> {
        DMatrix::from_row_slice(3, 3, rows) / den
    }

    fn space221() -> EllipticSpace {
        EllipticSpace::new(vec![2.0, 2.0, 1.0]).unwrap()
    }

    #[test]
    fn reflection_example() {
        let s = space221();
        let v = EVector::from([1.0, 2.0, 3.0]);
        let h = householder_matrix(&s, &v).unwrap();
        let expected = over(
            19.0,
            &[15.0, -8.0, -6.0, -8.0, 3.0, -12.0, -12.0, -24.0, 1.0],
        );
        assert!((h.entries() - expected).amax() < 1e-15);
        assert_eq!(h.classify(1e-12), MatrixClass::Reflection);
        let twice = h.compose(&h).unwrap();
        assert!(twice.max_abs_diff(&BMatrix::identity(&s)) < 1e-15);

        let b = reflect(&s, &v, &EVector::from([0.5, 0.5, 0.0])).unwrap();
        assert!(b.max_abs_diff(&EVector::from([7.0 / 38.0, -5.0 / 38.0, -18.0 / 19.0])) < 1e-15);

        let on_mirror = EVector::from([2.0, -1.0, 0.0]);
        assert_eq!(s.inner(&v, &on_mirror).unwrap(), 0.0);
        assert!(
            reflect(&s, &v, &on_mirror)
                .unwrap()
                .max_abs_diff(&on_mirror)
                < 1e-15
        );

        assert_eq!(
            householder_matrix(&s, &EVector::zeros(3)),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn two_reflection_example() {
        let s = space221();
        let x = EVector::from([0.0, 0.0, 5.0]);
        let y = EVector::from([2.0, 2.0, 3.0]);
        let h = householder_matrix(&s, &(&x + &y)).unwrap();
        let expected = over(5.0, &[4.0, -1.0, -2.0, -1.0, 4.0, -2.0, -4.0, -4.0, -3.0]);
        assert!((h.entries() - expected).amax() < 1e-15);

        let r = rotation_between(&s, &x, &y).unwrap();
        let expected = over(5.0, &[4.0, -1.0, 2.0, -1.0, 4.0, 2.0, -4.0, -4.0, 3.0]);
        assert!((r.entries() - &expected).amax() < 1e-15);
        assert!(r.apply(&x).unwrap().max_abs_diff(&y) < 1e-14);

        let axis = EVector::from([-0.5, 0.5, 0.0]);
        let rod = rodrigues3d(&s, &axis, 0.8f64.atan2(0.6)).unwrap();
        assert!(rod.max_abs_diff(&r) < 1e-9);
    }

    #[test]
    fn identical_inputs() {
        let s = space221();
        let x = EVector::from([1.0, -2.0, 0.5]);
        let r = rotation_between(&s, &x, &x).unwrap();
        assert!(r.apply(&x).unwrap().max_abs_diff(&x) < 1e-14);
        assert_eq!(r.classify(1e-9), MatrixClass::Rotation);
    }

    #[test]
    fn rejected_inputs() {
        let s = space221();
        let x = EVector::from([0.0, 0.0, 5.0]);
        assert!(matches!(
            rotation_between(&s, &x, &EVector::from([0.0, 0.0, 4.0])),
            Err(Error::NormMismatch { .. })
        ));
        assert_eq!(rotation_between(&s, &x, &-&x), Err(Error::AntipodalInput));
        assert_eq!(
            rotation_between(&s, &EVector::zeros(3), &EVector::zeros(3)),
            Err(Error::ZeroVector)
        );
    }

    fn case(max_n: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<f64>)> {
        (2..=max_n).prop_flat_map(|n| {
            (
                prop::collection::vec(0.1f64..10.0, n),
                prop::collection::vec(-3.0f64..3.0, n),
                prop::collection::vec(-3.0f64..3.0, n),
            )
        })
    }

    proptest! {
        #[test]
        fn reflection_properties((a, v, x) in case(6), c in prop_oneof![-5.0f64..-0.1, 0.1f64..5.0]) {
            let s = EllipticSpace::new(a).unwrap();
            let v = EVector::new(v);
            prop_assume!(s.norm(&v).unwrap() > 1e-3);
            let h = householder_matrix(&s, &v).unwrap();
            let scale = 1.0f64.max(h.max_abs()) * s.max_coefficient().max(1.0);
            prop_assert!(h.symmetry_residual() < 1e-12 * scale);
            prop_assert!(h.orthogonality_residual() < 1e-9);
            prop_assert!((h.det() + 1.0).abs() < 1e-9);
            let sq = h.compose(&h).unwrap();
            prop_assert!(sq.max_abs_diff(&BMatrix::identity(&s)) < 1e-9);
            let hc = householder_matrix(&s, &v.scale(c)).unwrap();
            prop_assert!(hc.max_abs_diff(&h) < 1e-12 * h.max_abs().max(1.0));

            let x = EVector::new(x);
            let rx = reflect(&s, &v, &x).unwrap();
            prop_assert!((s.norm(&rx).unwrap() - s.norm(&x).unwrap()).abs() < 1e-9);
            let mid = (&x + &rx).scale(0.5);
            prop_assert!(s.inner(&v, &mid).unwrap().abs() < 1e-9);
            // The chord is parallel to v.
            let chord = &x - &rx;
            let along = v.scale(s.inner(&chord, &v).unwrap() / s.norm_squared(&v).unwrap());
            prop_assert!(chord.max_abs_diff(&along) < 1e-9);
            prop_assert!(reflect(&s, &v, &rx).unwrap().max_abs_diff(&x) < 1e-12 * x.coords().amax().max(1.0));
        }

        #[test]
        fn equal_norm_mappings((a, x, w) in case(6)) {
            let s = EllipticSpace::new(a).unwrap();
            let x = EVector::new(x);
            let w = EVector::new(w);
            let (nx, nw) = (s.norm(&x).unwrap(), s.norm(&w).unwrap());
            prop_assume!(nx > 1e-2 && nw > 1e-2);
            let y = w.scale(nx / nw);
            let diff = &x - &y;
            let sum = &x + &y;
            prop_assume!(s.norm(&diff).unwrap() > 1e-6 && s.norm(&sum).unwrap() > 1e-6);
            prop_assert!(reflect(&s, &diff, &x).unwrap().max_abs_diff(&y) < 1e-9);
            prop_assert!(reflect(&s, &sum, &x).unwrap().max_abs_diff(&-&y) < 1e-9);
            prop_assert!(reflect(&s, &y, &-&y).unwrap().max_abs_diff(&y) < 1e-9);

            let r = rotation_between(&s, &x, &y).unwrap();
            prop_assert!(r.apply(&x).unwrap().max_abs_diff(&y) < 1e-9);
            prop_assert!((r.det() - 1.0).abs() < 1e-9);
            prop_assert!(r.orthogonality_residual() < 1e-9 * s.max_coefficient().max(1.0));
        }
    }
}
