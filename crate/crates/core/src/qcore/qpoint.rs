use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::C64;

/// `e^{iπt}`, exact when `2t` is an integer.
pub fn cis_pi(t: f64) -> C64 {
    let twice = 2.0 * t;
    if twice.fract() == 0.0 && twice.abs() < 1e15 {
        match (twice as i64).rem_euclid(4) {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        }
    } else {
        let angle = PI * t;
        C64::new(angle.cos(), angle.sin())
    }
}

/// A value of the deformation parameter with explicit branch data.
///
/// `q = modulus · e^{i·phase}` with `phase ∈ (-π, π]`. Powers are taken on
/// this branch: `q^x = modulus^x · e^{i·x·phase}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QPoint {
    modulus: f64,
    phase: f64,
}

impl QPoint {
    pub fn new(modulus: f64, phase: f64) -> Result<Self> {
        if !(modulus.is_finite() && modulus > 0.0) || !phase.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "q needs a positive finite modulus and finite phase, got ({modulus}, {phase})"
            )));
        }
        let phase = if phase > -PI && phase <= PI {
            phase
        } else {
            let p = phase.rem_euclid(2.0 * PI);
            if p > PI {
                p - 2.0 * PI
            } else {
                p
            }
        };
        Ok(Self { modulus, phase })
    }

    /// A real q; negative values land on phase π.
    pub fn real(x: f64) -> Result<Self> {
        if x < 0.0 {
            Self::new(-x, PI)
        } else {
            Self::new(x, 0.0)
        }
    }

    pub const fn one() -> Self {
        Self {
            modulus: 1.0,
            phase: 0.0,
        }
    }

    pub const fn minus_one() -> Self {
        Self {
            modulus: 1.0,
            phase: PI,
        }
    }

    /// The point `(1 + δ, π)` on the negative real axis just outside the unit circle.
    pub fn near_minus_one(delta: f64) -> Result<Self> {
        Self::new(1.0 + delta, PI)
    }

    pub fn modulus(self) -> f64 {
        self.modulus
    }

    pub fn phase(self) -> f64 {
        self.phase
    }

    pub fn is_one(self) -> bool {
        self.modulus == 1.0 && self.phase == 0.0
    }

    pub fn is_minus_one(self) -> bool {
        self.modulus == 1.0 && self.phase == PI
    }

    /// q = ±1, where q - q⁻¹ vanishes.
    pub fn is_degenerate(self) -> bool {
        self.is_one() || self.is_minus_one()
    }

    pub fn is_real_positive(self) -> bool {
        self.phase == 0.0
    }

    pub fn inverse(self) -> Self {
        let phase = if self.phase == PI { PI } else { -self.phase };
        Self {
            modulus: 1.0 / self.modulus,
            phase,
        }
    }

    pub fn to_complex(self) -> C64 {
        self.power(1.0)
    }

    /// `e^{i·x·phase}` with exact values on quarter turns.
    pub(crate) fn phase_factor(self, x: f64) -> C64 {
        let turns = self.phase / PI;
        if (2.0 * turns).fract() == 0.0 {
            cis_pi(x * turns)
        } else {
            let angle = x * self.phase;
            C64::new(angle.cos(), angle.sin())
        }
    }

    /// `q^x` on the stored branch.
    pub fn power(self, x: f64) -> C64 {
        self.modulus.powf(x) * self.phase_factor(x)
    }

    /// `(q^x - q^{-x}) / 2`, evaluated as `sinh(xλ)cos(xφ) + i·cosh(xλ)sin(xφ)`
    /// with `λ = ln|q|` so that nothing cancels near the unit circle.
    pub(crate) fn half_difference(self, x: f64) -> C64 {
        let lambda = self.modulus.ln();
        let c = self.phase_factor(x);
        C64::new((x * lambda).sinh() * c.re, (x * lambda).cosh() * c.im)
    }

    /// `ε = q - q⁻¹`.
    pub fn epsilon(self) -> C64 {
        2.0 * self.half_difference(1.0)
    }
}

/// `q^x` with the principal branch fixed by the stored phase.
pub fn q_power(q: QPoint, x: impl Into<f64>) -> C64 {
    q.power(x.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn power_examples() {
        assert_eq!(q_power(QPoint::minus_one(), 0.5), C64::new(0.0, 1.0));
        assert_eq!(
            q_power(QPoint::new(2.0, 0.0).unwrap(), 3.0),
            C64::new(8.0, 0.0)
        );
        assert_eq!(
            q_power(QPoint::new(1.0, PI / 2.0).unwrap(), 2.0),
            C64::new(-1.0, 0.0)
        );
    }

    #[test]
    fn phase_is_normalized() {
        let q = QPoint::new(1.0, -PI).unwrap();
        assert!(q.is_minus_one());
        let q = QPoint::new(2.0, 3.0 * PI / 2.0).unwrap();
        assert!((q.phase() + PI / 2.0).abs() < 1e-15);
        assert!(QPoint::new(0.0, 0.0).is_err());
        assert!(QPoint::new(-1.0, 0.0).is_err());
        assert!(QPoint::real(-1.0).unwrap().is_minus_one());
    }

    #[test]
    fn degenerate_set() {
        assert!(QPoint::one().is_degenerate());
        assert!(QPoint::minus_one().is_degenerate());
        assert!(!QPoint::near_minus_one(1e-6).unwrap().is_degenerate());
        assert_eq!(QPoint::one().epsilon(), C64::new(0.0, 0.0));
        assert!(QPoint::minus_one().epsilon().norm() < 1e-15);
    }

    #[test]
    fn epsilon_matches_direct_difference() {
        for &(r, p) in &[(2.0, 0.0), (0.5, 1.0), (1.3, -2.0), (1.0 + 1e-3, PI)] {
            let q = QPoint::new(r, p).unwrap();
            let z = q.to_complex();
            assert!(close(q.epsilon(), z - z.inv(), 1e-13));
        }
    }

    #[test]
    fn cis_pi_exact_on_quarter_turns() {
        assert_eq!(cis_pi(1.0), C64::new(-1.0, 0.0));
        assert_eq!(cis_pi(-0.5), C64::new(0.0, -1.0));
        assert_eq!(cis_pi(7.5), C64::new(0.0, -1.0));
        assert!(close(
            cis_pi(1.0 / 3.0),
            C64::new(0.5, 3f64.sqrt() / 2.0),
            1e-15
        ));
    }
}
