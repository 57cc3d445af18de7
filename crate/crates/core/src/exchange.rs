//! Constant exchange matrices on `1/2 ⊗ 1/2`, and intertwiners between
//! coproduct families.

use crate::error::{Error, Result};
use crate::hopf::{realize, CoproductFamily, TensorRealization};
use crate::linalg::{kron, max_diff, null_space, polar_unitary, CMatrix};
use crate::qcore::HalfInt;
use crate::C64;

/// Threshold on singular values of the commutation system, and on the
/// intertwining residual of the unitarized candidate.
pub const INTERTWINER_GATE: f64 = 1e-8;

/// A 4×4 matrix on the basis `{++, +-, -+, --}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExchangeMatrix(CMatrix);

impl ExchangeMatrix {
    fn from_real_rows(rows: [[f64; 4]; 4]) -> Self {
        let flat: Vec<C64> = rows.iter().flatten().map(|&x| C64::new(x, 0.0)).collect();
        Self(CMatrix::from_row_slice(4, 4, &flat))
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    /// `self · other · self†`.
    pub fn conjugate(&self, other: &ExchangeMatrix) -> ExchangeMatrix {
        ExchangeMatrix(&self.0 * &other.0 * self.0.adjoint())
    }
}

/// The unitary relating the odd- and even-twist coproducts on spin 1/2 ⊗ 1/2.
pub fn intertwiner_u() -> ExchangeMatrix {
    ExchangeMatrix::from_real_rows([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
    ])
}

/// The canonical exchange `|a,b> -> |b,a>`.
pub fn exchange_p() -> ExchangeMatrix {
    eta_exchange(1).expect("η = 1 is valid")
}

/// The exchange conjugated by [`intertwiner_u`].
pub fn exchange_p_twisted() -> ExchangeMatrix {
    ExchangeMatrix::from_real_rows([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, -1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])
}

/// Heisenberg-type exchange with `η = +1` (ferromagnetic) or `η = -1`
/// (antiferromagnetic) in the `{+-, -+}` block.
pub fn eta_exchange(eta: i8) -> Result<ExchangeMatrix> {
    if eta != 1 && eta != -1 {
        return Err(Error::InvalidArgument(format!("η must be ±1, got {eta}")));
    }
    let e = eta as f64;
    Ok(ExchangeMatrix::from_real_rows([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, e, 0.0],
        [0.0, e, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Intertwiner {
    pub w: CMatrix,
    pub source: CoproductFamily,
    pub target: CoproductFamily,
    pub residual: f64,
    /// Dimension of the solution space of `W·Δ_source = Δ_target·W`;
    /// more than one means `W` is only fixed up to the commutant.
    pub commutant_dim: usize,
}

fn conjugation_residual(
    w: &CMatrix,
    source: &TensorRealization,
    target: &TensorRealization,
) -> f64 {
    let w_dag = w.adjoint();
    max_diff(&(w * source.djp() * &w_dag), target.djp())
        .max(max_diff(&(w * source.djm() * &w_dag), target.djm()))
        .max(max_diff(&(w * source.dj0() * &w_dag), target.dj0()))
}

/// `max_x ‖W·Δ_source(x)·W† - Δ_target(x)‖_max`.
pub fn verify_intertwiner(
    w: &CMatrix,
    source: CoproductFamily,
    target: CoproductFamily,
    j1: HalfInt,
    j2: HalfInt,
) -> Result<f64> {
    let s = realize(source, j1, j2)?;
    let t = realize(target, j1, j2)?;
    if w.nrows() != s.dim() || w.ncols() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: if w.nrows() != s.dim() {
                w.nrows()
            } else {
                w.ncols()
            },
        });
    }
    Ok(conjugation_residual(w, &s, &t))
}

/// Solves `W·Δ_source(x) - Δ_target(x)·W = 0` (and the same for `x†`) as a nullspace problem,
/// takes a generic element of the solution space, and unitarizes it by
/// polar decomposition.
pub fn find_intertwiner(
    source: CoproductFamily,
    target: CoproductFamily,
    j1: HalfInt,
    j2: HalfInt,
) -> Result<Intertwiner> {
    let s = realize(source, j1, j2)?;
    let t = realize(target, j1, j2)?;
    let d = s.dim();
    let id = CMatrix::identity(d, d);

    // A unitary W also intertwines the adjoints. Including them makes the
    // solution space a *-algebra, so its polar factors stay inside it even
    // when the realization is not a *-representation (complex q).
    let mut blocks: Vec<(CMatrix, CMatrix)> = vec![
        (s.djp().clone(), t.djp().clone()),
        (s.djm().clone(), t.djm().clone()),
        (s.dj0().clone(), t.dj0().clone()),
    ];
    let adjoints: Vec<_> = blocks
        .iter()
        .map(|(xs, xt)| (xs.adjoint(), xt.adjoint()))
        .collect();
    blocks.extend(adjoints);

    // column-major vec: vec(W X) = (Xᵀ ⊗ 1) vec W, vec(Y W) = (1 ⊗ Y) vec W
    let mut system = CMatrix::zeros(blocks.len() * d * d, d * d);
    for (k, (xs, xt)) in blocks.iter().enumerate() {
        let block = kron(&xs.transpose(), &id) - kron(&id, xt);
        system
            .view_mut((k * d * d, 0), (d * d, d * d))
            .copy_from(&block);
    }
    let scale = system.iter().fold(1.0f64, |acc, z| acc.max(z.norm()));
    let (kernel, sv) = null_space(&system, INTERTWINER_GATE * scale);
    if kernel.is_empty() {
        let smallest = sv.iter().copied().fold(f64::INFINITY, f64::min);
        return Err(Error::NoIntertwiner { residual: smallest });
    }

    let mut combined = kernel[0].clone() * C64::new(0.0, 0.0);
    for (k, v) in kernel.iter().enumerate() {
        let angle = 0.7 * (k + 1) as f64;
        let weight = C64::from_polar(1.0 + 0.31 * k as f64, angle);
        combined += v * weight;
    }
    let candidate = CMatrix::from_column_slice(d, d, combined.as_slice());
    let (w, _) = polar_unitary(&candidate);
    let residual = conjugation_residual(&w, &s, &t);
    if residual > INTERTWINER_GATE {
        return Err(Error::NoIntertwiner { residual });
    }
    Ok(Intertwiner {
        w,
        source,
        target,
        residual,
        commutant_dim: kernel.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{commutator, max_abs, unitarity_defect};
    use crate::qcore::QPoint;

    const H: HalfInt = HalfInt::HALF;

    #[test]
    fn constants_are_unitary_involutions() {
        let id = CMatrix::identity(4, 4);
        assert!(unitarity_defect(intertwiner_u().matrix()) < 1e-14);
        for p in [
            exchange_p(),
            exchange_p_twisted(),
            eta_exchange(1).unwrap(),
            eta_exchange(-1).unwrap(),
        ] {
            assert!(unitarity_defect(p.matrix()) < 1e-14);
            assert!(max_diff(&(p.matrix() * p.matrix()), &id) < 1e-14);
        }
        assert!(eta_exchange(0).is_err());
    }

    #[test]
    fn u_conjugates_p_into_twisted_p() {
        assert_eq!(
            intertwiner_u().conjugate(&exchange_p()),
            exchange_p_twisted()
        );
        assert_eq!(eta_exchange(1).unwrap(), exchange_p());
    }

    #[test]
    fn u_relates_odd_and_even_twists() {
        let odd = CoproductFamily::modified_primed(QPoint::one(), 1);
        let even = CoproductFamily::modified_primed(QPoint::one(), 0);
        let r = verify_intertwiner(intertwiner_u().matrix(), odd, even, H, H).unwrap();
        assert!(r < 1e-12);
        let id = CMatrix::identity(4, 4);
        assert_eq!(verify_intertwiner(&id, odd, odd, H, H).unwrap(), 0.0);
    }

    #[test]
    fn exchange_does_not_commute_with_odd_twist() {
        let f = CoproductFamily::modified(QPoint::one(), 1);
        assert!(verify_intertwiner(exchange_p().matrix(), f, f, H, H).unwrap() > 0.5);
    }

    #[test]
    fn dimension_mismatch() {
        let f = CoproductFamily::modified(QPoint::one(), 1);
        let err = verify_intertwiner(&CMatrix::identity(3, 3), f, f, H, H).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 4,
                found: 3
            }
        );
    }

    #[test]
    fn solver_recovers_u_up_to_commutant() {
        let odd = CoproductFamily::modified_primed(QPoint::one(), 1);
        let even = CoproductFamily::modified_primed(QPoint::one(), 0);
        let found = find_intertwiner(odd, even, H, H).unwrap();
        assert!(found.residual < 1e-10);
        assert_eq!(found.commutant_dim, 2);
        assert!(unitarity_defect(&found.w) < 1e-12);
        // U† W commutes with the source coproduct
        let rel = intertwiner_u().matrix().adjoint() * &found.w;
        let s = realize(odd, H, H).unwrap();
        for x in [s.djp(), s.djm(), s.dj0()] {
            assert!(max_abs(&commutator(&rel, x)) < 1e-10);
        }
    }

    #[test]
    fn self_intertwiner_is_commutant_element() {
        let f = CoproductFamily::modified(QPoint::new(2.0, 0.0).unwrap(), 3);
        let found = find_intertwiner(f, f, H, HalfInt::ONE).unwrap();
        assert!(found.residual < 1e-12);
        let s = realize(f, H, HalfInt::ONE).unwrap();
        assert!(max_abs(&commutator(&found.w, s.djp())) < 1e-10);
    }

    #[test]
    fn different_deformations_are_inequivalent() {
        let a = CoproductFamily::standard(QPoint::new(2.0, 0.0).unwrap());
        let b = CoproductFamily::standard(QPoint::new(3.0, 0.0).unwrap());
        assert!(matches!(
            find_intertwiner(a, b, H, H),
            Err(Error::NoIntertwiner { .. })
        ));
    }
}
