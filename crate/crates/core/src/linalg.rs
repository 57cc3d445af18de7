//! Small dense complex helpers shared by the realization and verification code.

use nalgebra::{DMatrix, DVector};

use crate::C64;

pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn max_abs_vec(v: &CVector) -> f64 {
    v.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn max_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    max_abs(&(a - b))
}

pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

pub fn diag<I: IntoIterator<Item = C64>>(entries: I) -> CMatrix {
    let v: Vec<C64> = entries.into_iter().collect();
    CMatrix::from_diagonal(&CVector::from_vec(v))
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Orthonormal basis of the (numerical) kernel of `m`, plus every singular value.
///
/// Rows are zero-padded so the SVD always returns a full right-singular basis.
pub fn null_space(m: &CMatrix, tol: f64) -> (Vec<CVector>, Vec<f64>) {
    let cols = m.ncols();
    if cols == 0 {
        return (Vec::new(), Vec::new());
    }
    let rows = m.nrows().max(cols);
    let mut padded = CMatrix::zeros(rows, cols);
    padded.view_mut((0, 0), (m.nrows(), cols)).copy_from(m);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let kernel = sv
        .iter()
        .enumerate()
        .filter(|(_, s)| **s <= tol)
        .map(|(k, _)| v_t.row(k).adjoint())
        .collect();
    (kernel, sv)
}

/// Unitary factor `U V^†` of the polar decomposition and the smallest singular value.
pub fn polar_unitary(m: &CMatrix) -> (CMatrix, f64) {
    let svd = m.clone().svd(true, true);
    let u = svd.u.expect("left singular vectors requested");
    let v_t = svd.v_t.expect("right singular vectors requested");
    (u * v_t, svd.singular_values.min())
}

pub fn unitarity_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    max_diff(&(m * m.adjoint()), &CMatrix::identity(n, n))
}

/// Matrix of the factor swap `|a,b> -> |b,a>` on `C^d ⊗ C^d`.
pub fn flip(d: usize) -> CMatrix {
    let mut s = CMatrix::zeros(d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            s[(b * d + a, a * d + b)] = C64::new(1.0, 0.0);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let m = CMatrix::from_row_slice(1, 2, &[C64::new(1.0, 0.0), C64::new(-1.0, 0.0)]);
        let (ker, sv) = null_space(&m, 1e-10);
        assert_eq!(ker.len(), 1);
        assert_eq!(sv.len(), 2);
        let v = &ker[0];
        assert!((v[0] - v[1]).norm() < 1e-12);
    }

    #[test]
    fn empty_rows_give_full_kernel() {
        let m = CMatrix::zeros(0, 3);
        assert_eq!(null_space(&m, 1e-10).0.len(), 3);
    }

    #[test]
    fn flip_is_involution() {
        let s = flip(3);
        assert!(max_diff(&(&s * &s), &CMatrix::identity(9, 9)) == 0.0);
    }

    #[test]
    fn polar_of_scaled_unitary() {
        let i = C64::new(0.0, 1.0);
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[C64::new(0.0, 0.0), i * 3.0, i * 3.0, C64::new(0.0, 0.0)],
        );
        let (u, smin) = polar_unitary(&m);
        assert!(unitarity_defect(&u) < 1e-14);
        assert!((smin - 3.0).abs() < 1e-12);
    }
}
