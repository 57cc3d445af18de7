//! Multiplet decomposition of `j1 ⊗ j2` under a chosen coproduct, and the
//! exchange symmetry of the resulting states.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{realize, CoproductFamily, TensorRealization};
use crate::linalg::{flip, max_abs_vec, null_space, CMatrix, CVector};
use crate::qcore::HalfInt;
use crate::C64;

/// Relative singular-value threshold for the highest-weight kernel.
pub const KERNEL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct CGState {
    pub j_total: HalfInt,
    pub m: HalfInt,
    /// Coefficients on `|m1,m2>`, `m1` outer, both descending.
    pub coeffs: CVector,
    pub family: CoproductFamily,
    pub left: HalfInt,
    pub right: HalfInt,
}

impl CGState {
    fn index(&self, m1: HalfInt, m2: HalfInt) -> Option<usize> {
        if m1.abs() > self.left || m2.abs() > self.right {
            return None;
        }
        let a = ((self.left - m1).twice() / 2) as usize;
        let b = ((self.right - m2).twice() / 2) as usize;
        Some(a * self.right.multiplicity() + b)
    }

    /// Coefficient of `|m1> ⊗ |m2>`; zero outside the weight range.
    pub fn coeff(&self, m1: HalfInt, m2: HalfInt) -> C64 {
        self.index(m1, m2)
            .map_or(C64::new(0.0, 0.0), |k| self.coeffs[k])
    }

    pub fn label(&self) -> String {
        format!("|{},{}>", self.j_total, self.m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryClass {
    Symmetric,
    Antisymmetric,
    Mixed,
}

fn weight_indices(weights: &[f64], m: HalfInt) -> Vec<usize> {
    weights
        .iter()
        .enumerate()
        .filter(|(_, w)| (2.0 * **w).round() as i32 == m.twice())
        .map(|(k, _)| k)
        .collect()
}

/// Rotates `v` so its first significant coefficient is real positive, then normalizes.
fn fix_phase(v: &mut CVector) {
    let scale = max_abs_vec(v);
    if let Some(c) = v.iter().find(|z| z.norm() > 1e-10 * scale).copied() {
        let rot = c.conj() / c.norm();
        *v *= rot;
    }
    let n = v.norm();
    v.unscale_mut(n);
}

/// Decomposes `j1 ⊗ j2` into towers. For each total spin `J` from `j1+j2`
/// down to `|j1-j2|` the highest-weight vector spans the kernel of `ΔJ+`
/// on the weight-`J` space, orthogonal to earlier towers; the rest of the
/// tower comes from repeated `ΔJ-` with renormalization and no re-phasing.
pub fn cg_decompose(family: CoproductFamily, j1: HalfInt, j2: HalfInt) -> Result<Vec<CGState>> {
    let t = realize(family, j1, j2)?;
    cg_decompose_realization(&t)
}

pub fn cg_decompose_realization(t: &TensorRealization) -> Result<Vec<CGState>> {
    let (j1, j2) = (t.left.j, t.right.j);
    let weights = t.gens.weights();
    let dim = t.dim();
    let mut states: Vec<CGState> = Vec::with_capacity(dim);

    let top = j1 + j2;
    let bottom = (j1 - j2).abs();
    let mut j_total = top;
    while j_total >= bottom {
        let cols = weight_indices(&weights, j_total);
        let rows = weight_indices(&weights, j_total + HalfInt::ONE);
        let earlier: Vec<&CGState> = states.iter().filter(|s| s.m == j_total).collect();

        let mut stacked = CMatrix::zeros(rows.len() + earlier.len(), cols.len());
        for (r, &row) in rows.iter().enumerate() {
            for (c, &col) in cols.iter().enumerate() {
                stacked[(r, c)] = t.djp()[(row, col)];
            }
        }
        for (r, s) in earlier.iter().enumerate() {
            for (c, &col) in cols.iter().enumerate() {
                stacked[(rows.len() + r, c)] = s.coeffs[col].conj();
            }
        }
        let scale = stacked.iter().fold(1.0f64, |acc, z| acc.max(z.norm()));
        let (kernel, _) = null_space(&stacked, KERNEL_TOL * scale);
        if kernel.len() != 1 {
            return Err(Error::KernelDimensionMismatch {
                j_total,
                found: kernel.len(),
            });
        }

        let mut v = CVector::zeros(dim);
        for (c, &col) in cols.iter().enumerate() {
            v[col] = kernel[0][c];
        }
        fix_phase(&mut v);

        let mut m = j_total;
        loop {
            states.push(CGState {
                j_total,
                m,
                coeffs: v.clone(),
                family: t.family,
                left: j1,
                right: j2,
            });
            if m == -j_total {
                break;
            }
            let lowered = t.djm() * &v;
            let norm = lowered.norm();
            m = m - HalfInt::ONE;
            if norm < 1e-12 {
                return Err(Error::TowerCollapsed { j_total, m });
            }
            v = lowered.unscale(norm);
        }
        j_total = j_total - HalfInt::ONE;
    }
    Ok(states)
}

/// Classifies `v` by the flip `|a,b> -> |b,a>`.
pub fn classify_symmetry(state: &CGState, tol: f64) -> Result<SymmetryClass> {
    if state.left != state.right {
        return Err(Error::NotIdenticalFactors {
            left: state.left,
            right: state.right,
        });
    }
    let flipped = flip(state.left.multiplicity()) * &state.coeffs;
    if max_abs_vec(&(&flipped - &state.coeffs)) <= tol {
        Ok(SymmetryClass::Symmetric)
    } else if max_abs_vec(&(&flipped + &state.coeffs)) <= tol {
        Ok(SymmetryClass::Antisymmetric)
    } else {
        Ok(SymmetryClass::Mixed)
    }
}

/// Consistency of a decomposition: weight eigenvalues, highest weights
/// annihilated by `ΔJ+`, bottoms annihilated by `ΔJ-`, each lowered state
/// proportional to the next one, and orthonormality of the whole set.
pub fn verify_multiplet(states: &[CGState], t: &TensorRealization) -> f64 {
    let mut residual = 0.0f64;
    for (k, s) in states.iter().enumerate() {
        let v = &s.coeffs;
        let eig = t.dj0() * v - v * C64::new(s.m.value(), 0.0);
        residual = residual.max(max_abs_vec(&eig));
        if s.m == s.j_total {
            residual = residual.max(max_abs_vec(&(t.djp() * v)));
        }
        let lowered = t.djm() * v;
        if s.m == -s.j_total {
            residual = residual.max(max_abs_vec(&lowered));
        } else if let Some(next) = states.get(k + 1) {
            let overlap = next.coeffs.dotc(&lowered);
            residual = residual.max(max_abs_vec(&(&lowered - &next.coeffs * overlap)));
        }
    }
    let n = states.len();
    for a in 0..n {
        for b in 0..n {
            let g = states[a].coeffs.dotc(&states[b].coeffs);
            let expected = if a == b { 1.0 } else { 0.0 };
            residual = residual.max((g - expected).norm());
        }
    }
    residual
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::QPoint;
    use std::f64::consts::PI;

    const H: HalfInt = HalfInt::HALF;
    const MH: HalfInt = HalfInt::from_twice(-1);

    fn find(states: &[CGState], j: i32, m: i32) -> &CGState {
        states
            .iter()
            .find(|s| s.j_total.twice() == j && s.m.twice() == m)
            .expect("state present")
    }

    fn close(a: C64, b: f64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn classical_spin_half_table() {
        let states = cg_decompose(CoproductFamily::standard(QPoint::one()), H, H).unwrap();
        assert_eq!(states.len(), 4);
        let r = 0.5f64.sqrt();
        let singlet = find(&states, 0, 0);
        assert!(close(singlet.coeff(H, MH), r) && close(singlet.coeff(MH, H), -r));
        let t0 = find(&states, 2, 0);
        assert!(close(t0.coeff(H, MH), r) && close(t0.coeff(MH, H), r));
        assert!(close(find(&states, 2, 2).coeff(H, H), 1.0));
        assert!(close(find(&states, 2, -2).coeff(MH, MH), 1.0));
    }

    #[test]
    fn odd_twist_flips_symmetry() {
        let states =
            cg_decompose(CoproductFamily::modified_primed(QPoint::one(), 1), H, H).unwrap();
        let r = 0.5f64.sqrt();
        let singlet = find(&states, 0, 0);
        assert!(close(singlet.coeff(H, MH), r) && close(singlet.coeff(MH, H), r));
        let t0 = find(&states, 2, 0);
        assert!(close(t0.coeff(H, MH), r) && close(t0.coeff(MH, H), -r));
        assert!(close(find(&states, 2, -2).coeff(MH, MH), -1.0));
        assert_eq!(
            classify_symmetry(singlet, 1e-10).unwrap(),
            SymmetryClass::Symmetric
        );
        assert_eq!(
            classify_symmetry(t0, 1e-10).unwrap(),
            SymmetryClass::Antisymmetric
        );
    }

    #[test]
    fn deformed_singlet_is_mixed() {
        let states = cg_decompose(
            CoproductFamily::modified_primed(QPoint::new(4.0, 0.0).unwrap(), 0),
            H,
            H,
        )
        .unwrap();
        let singlet = find(&states, 0, 0);
        let norm = 4.25f64.sqrt();
        assert!(close(singlet.coeff(H, MH), 2.0 / norm));
        assert!(close(singlet.coeff(MH, H), -0.5 / norm));
        assert_eq!(
            classify_symmetry(singlet, 1e-10).unwrap(),
            SymmetryClass::Mixed
        );
        assert_eq!(
            classify_symmetry(find(&states, 2, 2), 1e-10).unwrap(),
            SymmetryClass::Symmetric
        );
    }

    #[test]
    fn unequal_factors_have_no_flip() {
        let states =
            cg_decompose(CoproductFamily::modified(QPoint::one(), 1), H, HalfInt::ONE).unwrap();
        assert_eq!(states.len(), 6);
        assert!(matches!(
            classify_symmetry(&states[0], 1e-10),
            Err(Error::NotIdenticalFactors { .. })
        ));
    }

    #[test]
    fn harness_on_small_cases() {
        let cases = [
            (CoproductFamily::standard(QPoint::one()), H, H),
            (
                CoproductFamily::modified_primed(QPoint::new(2.0, 0.0).unwrap(), 1),
                H,
                H,
            ),
            (CoproductFamily::modified(QPoint::one(), 1), H, HalfInt::ONE),
        ];
        for (f, a, b) in cases {
            let t = realize(f, a, b).unwrap();
            let states = cg_decompose_realization(&t).unwrap();
            assert!(verify_multiplet(&states, &t) < 1e-12);
        }
        let t = realize(CoproductFamily::modified(QPoint::one(), 1), H, HalfInt::ONE).unwrap();
        let states = cg_decompose_realization(&t).unwrap();
        let spins: Vec<i32> = states
            .iter()
            .filter(|s| s.m == s.j_total)
            .map(|s| s.j_total.twice())
            .collect();
        assert_eq!(spins, vec![3, 1]);
    }

    #[test]
    fn harness_detects_corruption() {
        let t = realize(CoproductFamily::standard(QPoint::one()), H, H).unwrap();
        let mut states = cg_decompose_realization(&t).unwrap();
        states[1].coeffs *= C64::new(1.1, 0.0);
        assert!(verify_multiplet(&states, &t) > 0.05);
    }

    #[test]
    fn unit_circle_q_breaks_orthogonal_kernel() {
        let f = CoproductFamily::standard(QPoint::new(1.0, PI / 3.0).unwrap());
        assert!(matches!(
            cg_decompose(f, H, H),
            Err(Error::KernelDimensionMismatch { found: 0, .. })
        ));
    }

    #[test]
    fn fourth_root_of_unity_collapses_tower() {
        // [2] = 0 at q = i, so lowering |1,0> gives zero
        let f = CoproductFamily::standard(QPoint::new(1.0, PI / 2.0).unwrap());
        assert!(matches!(
            cg_decompose(f, H, H),
            Err(Error::TowerCollapsed { .. })
        ));
    }
}
