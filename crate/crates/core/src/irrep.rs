//! Spin-j irreducible representations of su(2) and su_q(2).
//!
//! Basis order is `|j,j>, |j,j-1>, ..., |j,-j>` throughout.

use crate::error::{Error, Result};
use crate::linalg::{diag, CMatrix};
use crate::qcore::{q_number, HalfInt, QPoint};
use crate::C64;

/// Largest irrep dimension the builders accept.
pub const MAX_DIM: usize = 64;

/// The three generator matrices of a representation, `J0` diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Generators {
    pub jp: CMatrix,
    pub jm: CMatrix,
    pub j0: CMatrix,
}

impl Generators {
    pub fn dim(&self) -> usize {
        self.j0.nrows()
    }

    /// Diagonal of `J0`.
    pub fn weights(&self) -> Vec<f64> {
        (0..self.dim()).map(|k| self.j0[(k, k)].re).collect()
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            jp: CMatrix::zeros(dim, dim),
            jm: CMatrix::zeros(dim, dim),
            j0: CMatrix::zeros(dim, dim),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Irrep {
    pub j: HalfInt,
    pub q: QPoint,
    pub deformed: bool,
    pub gens: Generators,
}

impl Irrep {
    pub fn dim(&self) -> usize {
        self.gens.dim()
    }

    pub fn jp(&self) -> &CMatrix {
        &self.gens.jp
    }

    pub fn jm(&self) -> &CMatrix {
        &self.gens.jm
    }

    pub fn j0(&self) -> &CMatrix {
        &self.gens.j0
    }
}

fn check_spin(j: HalfInt) -> Result<usize> {
    if j.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "spin must be non-negative, got {j}"
        )));
    }
    let dim = j.multiplicity();
    if dim > MAX_DIM {
        return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
    }
    Ok(dim)
}

/// Builds an irrep whose raising coefficient from `m` to `m+1` is
/// `coefficient(j - m, j + m + 1)`; lowering is its transpose.
fn build_with<F>(j: HalfInt, coefficient: F) -> Result<Generators>
where
    F: Fn(HalfInt, HalfInt) -> Result<C64>,
{
    let dim = check_spin(j)?;
    let weights: Vec<HalfInt> = j.weights().collect();
    let mut jp = CMatrix::zeros(dim, dim);
    for k in 1..dim {
        let m = weights[k];
        let c = coefficient(j - m, j + m + HalfInt::ONE)?;
        jp[(k - 1, k)] = c;
    }
    let jm = jp.transpose();
    let j0 = diag(weights.iter().map(|m| C64::new(m.value(), 0.0)));
    Ok(Generators { jp, jm, j0 })
}

/// The classical spin-j irrep, `J± |j,m> = √((j∓m)(j±m+1)) |j,m±1>`.
pub fn build_classical_irrep(j: HalfInt) -> Result<Irrep> {
    let gens = build_with(j, |a, b| Ok(C64::new((a.value() * b.value()).sqrt(), 0.0)))?;
    Ok(Irrep {
        j,
        q: QPoint::one(),
        deformed: false,
        gens,
    })
}

/// The q-deformed spin-j irrep with coefficients `√([j∓m][j±m+1])`,
/// principal branch of the complex square root.
pub fn build_q_irrep(j: HalfInt, q: QPoint) -> Result<Irrep> {
    let gens = build_with(j, |a, b| Ok((q_number(q, a)? * q_number(q, b)?).sqrt()))?;
    Ok(Irrep {
        j,
        q,
        deformed: true,
        gens,
    })
}

/// Classical at `q = 1`, deformed elsewhere.
pub fn build_irrep(j: HalfInt, q: QPoint) -> Result<Irrep> {
    if q.is_one() {
        build_classical_irrep(j)
    } else {
        build_q_irrep(j, q)
    }
}

/// Quadratic Casimir. Classical: `J+J- + J0² - J0`. Deformed:
/// `J+J- + diag([m][m-1])`, which equals `[j][j+1]·1` on the spin-j irrep.
///
/// Fails with `Divergent` for deformed half-odd spins at `q = -1`.
pub fn casimir_matrix(rep: &Irrep) -> Result<CMatrix> {
    let g = &rep.gens;
    let jpjm = &g.jp * &g.jm;
    if !rep.deformed {
        return Ok(jpjm + &g.j0 * &g.j0 - &g.j0);
    }
    let shift = g
        .weights()
        .into_iter()
        .map(|m| Ok(q_number(rep.q, m)? * q_number(rep.q, m - 1.0)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(jpjm + diag(shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{commutator, max_abs, max_diff};

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn spin_half_matrices() {
        let r = build_classical_irrep(HalfInt::HALF).unwrap();
        assert_eq!(
            r.jp(),
            &CMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(0.0), c(0.0)])
        );
        assert_eq!(
            r.jm(),
            &CMatrix::from_row_slice(2, 2, &[c(0.0), c(0.0), c(1.0), c(0.0)])
        );
        assert_eq!(r.j0(), &diag([c(0.5), c(-0.5)]));
    }

    #[test]
    fn spin_zero_is_trivial() {
        let r = build_classical_irrep(HalfInt::ZERO).unwrap();
        assert_eq!(r.gens, Generators::zero(1));
    }

    #[test]
    fn spin_one_raising_coefficient() {
        let r = build_classical_irrep(HalfInt::ONE).unwrap();
        // J+|1,0> = √2 |1,1>
        assert!((r.jp()[(0, 1)] - c(2f64.sqrt())).norm() < 1e-15);
    }

    #[test]
    fn deformed_spin_half_is_classical() {
        for q in [
            QPoint::new(2.0, 0.0).unwrap(),
            QPoint::new(0.7, 1.1).unwrap(),
            QPoint::minus_one(),
        ] {
            let d = build_q_irrep(HalfInt::HALF, q).unwrap();
            let cl = build_classical_irrep(HalfInt::HALF).unwrap();
            assert!(max_diff(d.jp(), cl.jp()) < 1e-15);
            assert!(max_diff(d.jm(), cl.jm()) < 1e-15);
        }
    }

    #[test]
    fn deformed_spin_one_at_two() {
        let r = build_q_irrep(HalfInt::ONE, QPoint::new(2.0, 0.0).unwrap()).unwrap();
        assert!((r.jp()[(0, 1)] - c(2.5f64.sqrt())).norm() < 1e-14);
        let cas = casimir_matrix(&r).unwrap();
        assert!(max_diff(&cas, &(CMatrix::identity(3, 3) * c(2.5))) < 1e-12);
    }

    #[test]
    fn deformed_at_one_matches_classical() {
        let d = build_q_irrep(HalfInt::ONE, QPoint::one()).unwrap();
        let cl = build_classical_irrep(HalfInt::ONE).unwrap();
        assert_eq!(d.gens, cl.gens);
    }

    #[test]
    fn classical_casimirs() {
        for (twice, value) in [(1, 0.75), (4, 6.0)] {
            let r = build_classical_irrep(HalfInt::from_twice(twice)).unwrap();
            let n = r.dim();
            let cas = casimir_matrix(&r).unwrap();
            assert!(max_diff(&cas, &(CMatrix::identity(n, n) * c(value))) < 1e-12);
        }
    }

    #[test]
    fn extremal_weights_are_annihilated() {
        let r = build_q_irrep(HalfInt::from_twice(5), QPoint::new(1.7, 0.0).unwrap()).unwrap();
        let n = r.dim();
        assert!(r.jp().column(0).iter().all(|z| z.norm() == 0.0));
        assert!(r.jm().column(n - 1).iter().all(|z| z.norm() == 0.0));
        let raised = commutator(r.j0(), r.jp());
        assert!(max_diff(&raised, r.jp()) < 1e-14);
        assert!(max_abs(r.jp()) > 0.0);
    }

    #[test]
    fn dimension_guard() {
        assert_eq!(
            build_classical_irrep(HalfInt::from_twice(64)).unwrap_err(),
            Error::DimensionTooLarge {
                dim: 65,
                max: MAX_DIM
            }
        );
        assert!(build_classical_irrep(HalfInt::from_twice(-1)).is_err());
    }

    #[test]
    fn half_odd_casimir_diverges_at_minus_one() {
        let r = build_q_irrep(HalfInt::HALF, QPoint::minus_one()).unwrap();
        assert!(matches!(casimir_matrix(&r), Err(Error::Divergent { .. })));
        let r = build_q_irrep(HalfInt::ONE, QPoint::minus_one()).unwrap();
        let cas = casimir_matrix(&r).unwrap();
        assert!(max_diff(&cas, &(CMatrix::identity(3, 3) * c(-2.0))) < 1e-12);
    }
}
