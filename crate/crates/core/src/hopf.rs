//! Coproduct families in dressed form, their tensor-product realizations,
//! and numerical checks of the Hopf axioms.
//!
//! Every family is written as
//! `Δ(J±) = J± ⊗ A±(J0) + B±(J0) ⊗ J±`, `Δ(J0) = J0 ⊗ 1 + 1 ⊗ J0`
//! with `A±`, `B±` group-like diagonal factors, and
//! `S(J±) = s± · G±(J0) · J±`, `S(J0) = -J0`, `ε = 0` on generators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::irrep::{build_irrep, Generators, Irrep};
use crate::linalg::{commutator, diag, kron, max_diff, CMatrix};
use crate::qcore::{cis_pi, q_number, HalfInt, QPoint};
use crate::C64;

/// Largest tensor dimension accepted by the coassociativity check.
pub const MAX_TRIPLE_DIM: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoproductKind {
    /// `J± ⊗ q^{J0} + q^{-J0} ⊗ J±`.
    #[serde(rename = "standard")]
    StandardDJ,
    /// `J± ⊗ q^{J0} e^{±inπJ0} + e^{∓inπJ0} q^{-J0} ⊗ J±`.
    Modified,
    /// The modified family in the generators `J+' = e^{iπnJ0} J+`, `J-' = J- e^{-iπnJ0}`.
    ModifiedPrimed,
}

impl CoproductKind {
    pub fn label(self) -> &'static str {
        match self {
            CoproductKind::StandardDJ => "standard",
            CoproductKind::Modified => "modified",
            CoproductKind::ModifiedPrimed => "modified-primed",
        }
    }
}

impl fmt::Display for CoproductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CoproductKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(CoproductKind::StandardDJ),
            "modified" => Ok(CoproductKind::Modified),
            "modified-primed" => Ok(CoproductKind::ModifiedPrimed),
            other => Err(Error::InvalidArgument(format!(
                "unknown coproduct family {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoproductFamily {
    pub kind: CoproductKind,
    pub q: QPoint,
    /// Twist integer; ignored by `StandardDJ`.
    pub n: i64,
}

impl CoproductFamily {
    pub fn new(kind: CoproductKind, q: QPoint, n: i64) -> Self {
        let n = if kind == CoproductKind::StandardDJ {
            0
        } else {
            n
        };
        Self { kind, q, n }
    }

    pub fn standard(q: QPoint) -> Self {
        Self::new(CoproductKind::StandardDJ, q, 0)
    }

    pub fn modified(q: QPoint, n: i64) -> Self {
        Self::new(CoproductKind::Modified, q, n)
    }

    pub fn modified_primed(q: QPoint, n: i64) -> Self {
        Self::new(CoproductKind::ModifiedPrimed, q, n)
    }

    pub fn with_n(self, n: i64) -> Self {
        Self::new(self.kind, self.q, n)
    }
}

/// The group-like diagonal element `q^{q_rate·J0} · e^{iπ·pi_rate·J0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupLike {
    pub q_rate: i32,
    pub pi_rate: i64,
}

impl GroupLike {
    pub const IDENTITY: GroupLike = GroupLike {
        q_rate: 0,
        pi_rate: 0,
    };

    pub const fn new(q_rate: i32, pi_rate: i64) -> Self {
        Self { q_rate, pi_rate }
    }

    pub fn eval(self, q: QPoint, m: f64) -> C64 {
        q.power(self.q_rate as f64 * m) * cis_pi(self.pi_rate as f64 * m)
    }

    pub fn inverse(self) -> Self {
        Self::new(-self.q_rate, -self.pi_rate)
    }

    fn matrix(self, q: QPoint, weights: &[f64]) -> CMatrix {
        diag(weights.iter().map(|&m| self.eval(q, m)))
    }
}

/// Dressing of one shifting generator `x`:
/// `Δ(x) = x ⊗ right(J0) + left(J0) ⊗ x`, `S(x) = antipode_scale · antipode_twist(J0) · x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegDressing {
    pub right: GroupLike,
    pub left: GroupLike,
    pub antipode_scale: C64,
    pub antipode_twist: GroupLike,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedCoproduct {
    pub q: QPoint,
    pub raise: LegDressing,
    pub lower: LegDressing,
}

impl DressedCoproduct {
    /// `A+(m)`.
    pub fn a_plus(&self, m: f64) -> C64 {
        self.raise.right.eval(self.q, m)
    }

    /// `B+(m)`.
    pub fn b_plus(&self, m: f64) -> C64 {
        self.raise.left.eval(self.q, m)
    }

    pub fn a_minus(&self, m: f64) -> C64 {
        self.lower.right.eval(self.q, m)
    }

    pub fn b_minus(&self, m: f64) -> C64 {
        self.lower.left.eval(self.q, m)
    }
}

pub fn dressing(family: CoproductFamily) -> DressedCoproduct {
    let q = family.q;
    let n = family.n;
    let s_plus = -q.power(1.0);
    let s_minus = -q.power(-1.0);
    let (raise, lower) = match family.kind {
        CoproductKind::StandardDJ => (
            LegDressing {
                right: GroupLike::new(1, 0),
                left: GroupLike::new(-1, 0),
                antipode_scale: s_plus,
                antipode_twist: GroupLike::IDENTITY,
            },
            LegDressing {
                right: GroupLike::new(1, 0),
                left: GroupLike::new(-1, 0),
                antipode_scale: s_minus,
                antipode_twist: GroupLike::IDENTITY,
            },
        ),
        CoproductKind::Modified => {
            let sign = cis_pi(n as f64);
            (
                LegDressing {
                    right: GroupLike::new(1, n),
                    left: GroupLike::new(-1, -n),
                    antipode_scale: sign * s_plus,
                    antipode_twist: GroupLike::IDENTITY,
                },
                LegDressing {
                    right: GroupLike::new(1, -n),
                    left: GroupLike::new(-1, n),
                    antipode_scale: sign * s_minus,
                    antipode_twist: GroupLike::IDENTITY,
                },
            )
        }
        // S(J+') = S(J+) S(e^{iπnJ0}) rewritten in primed generators:
        // S(J±') = -q^{±1} e^{∓2inπJ0} J±'.
        CoproductKind::ModifiedPrimed => (
            LegDressing {
                right: GroupLike::new(1, 2 * n),
                left: GroupLike::new(-1, 0),
                antipode_scale: s_plus,
                antipode_twist: GroupLike::new(0, -2 * n),
            },
            LegDressing {
                right: GroupLike::new(1, -2 * n),
                left: GroupLike::new(-1, 0),
                antipode_scale: s_minus,
                antipode_twist: GroupLike::new(0, 2 * n),
            },
        ),
    };
    DressedCoproduct { q, raise, lower }
}

/// Applies the dressed coproduct to two representations. With `opposite`
/// the Sweedler legs are swapped, giving `σ∘Δ`.
pub fn tensor_generators(
    dressed: &DressedCoproduct,
    left: &Generators,
    right: &Generators,
    opposite: bool,
) -> Generators {
    let q = dressed.q;
    let wl = left.weights();
    let wr = right.weights();
    let leg = |x_left: &CMatrix, x_right: &CMatrix, d: &LegDressing| {
        let (on_right, on_left) = if opposite {
            (d.left, d.right)
        } else {
            (d.right, d.left)
        };
        kron(x_left, &on_right.matrix(q, &wr)) + kron(&on_left.matrix(q, &wl), x_right)
    };
    let id_l = CMatrix::identity(left.dim(), left.dim());
    let id_r = CMatrix::identity(right.dim(), right.dim());
    Generators {
        jp: leg(&left.jp, &right.jp, &dressed.raise),
        jm: leg(&left.jm, &right.jm, &dressed.lower),
        j0: kron(&left.j0, &id_r) + kron(&id_l, &right.j0),
    }
}

/// A coproduct family realized on `j1 ⊗ j2`, basis `|m1,m2>` with `m1` outer,
/// both descending.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorRealization {
    pub family: CoproductFamily,
    pub left: Irrep,
    pub right: Irrep,
    pub opposite: bool,
    pub gens: Generators,
}

impl TensorRealization {
    pub fn dim(&self) -> usize {
        self.gens.dim()
    }

    pub fn djp(&self) -> &CMatrix {
        &self.gens.jp
    }

    pub fn djm(&self) -> &CMatrix {
        &self.gens.jm
    }

    pub fn dj0(&self) -> &CMatrix {
        &self.gens.j0
    }
}

fn realize_with(
    family: CoproductFamily,
    j1: HalfInt,
    j2: HalfInt,
    opposite: bool,
) -> Result<TensorRealization> {
    let left = build_irrep(j1, family.q)?;
    let right = build_irrep(j2, family.q)?;
    let gens = tensor_generators(&dressing(family), &left.gens, &right.gens, opposite);
    Ok(TensorRealization {
        family,
        left,
        right,
        opposite,
        gens,
    })
}

/// Matrices of `Δ(J±)`, `Δ(J0)` on `j1 ⊗ j2`. Single-site irreps are
/// q-deformed unless `q = 1`.
pub fn realize(family: CoproductFamily, j1: HalfInt, j2: HalfInt) -> Result<TensorRealization> {
    realize_with(family, j1, j2, false)
}

/// Matrices of the opposite coproduct `Δ' = σ∘Δ` on `j1 ⊗ j2`.
pub fn realize_opposite(
    family: CoproductFamily,
    j1: HalfInt,
    j2: HalfInt,
) -> Result<TensorRealization> {
    realize_with(family, j1, j2, true)
}

fn generator_residual(a: &Generators, b: &Generators) -> f64 {
    max_diff(&a.jp, &b.jp)
        .max(max_diff(&a.jm, &b.jm))
        .max(max_diff(&a.j0, &b.j0))
}

/// `max_x ‖Δ(x) - Δ'(x)‖_max` over the three generators.
pub fn cocommutativity_residual(family: CoproductFamily, j1: HalfInt, j2: HalfInt) -> Result<f64> {
    let direct = realize(family, j1, j2)?;
    let opposite = realize_opposite(family, j1, j2)?;
    Ok(generator_residual(&direct.gens, &opposite.gens))
}

/// Which commutation relation `[ΔJ+, ΔJ-]` is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationTarget {
    /// `[2ΔJ0]_q`, computed diagonally in the weight basis.
    Deformed,
    /// The Lie-algebra relation `2ΔJ0`.
    Classical,
}

pub fn raising_commutator(t: &TensorRealization) -> CMatrix {
    commutator(t.djp(), t.djm())
}

/// Residual of `[ΔJ+, ΔJ-] = target` and `[ΔJ0, ΔJ±] = ±ΔJ±`.
pub fn verify_homomorphism_against(t: &TensorRealization, target: RelationTarget) -> Result<f64> {
    let weights = t.gens.weights();
    let rhs = match target {
        RelationTarget::Deformed => diag(
            weights
                .iter()
                .map(|&m| q_number(t.family.q, 2.0 * m))
                .collect::<Result<Vec<_>>>()?,
        ),
        RelationTarget::Classical => t.dj0() * C64::new(2.0, 0.0),
    };
    let pm = max_diff(&raising_commutator(t), &rhs);
    let zp = max_diff(&commutator(t.dj0(), t.djp()), t.djp());
    let zm = max_diff(&commutator(t.dj0(), t.djm()), &(-t.djm()));
    Ok(pm.max(zp).max(zm))
}

/// Homomorphism residual against the deformed relation `[J+, J-] = [2J0]_q`.
pub fn verify_homomorphism(t: &TensorRealization) -> Result<f64> {
    verify_homomorphism_against(t, RelationTarget::Deformed)
}

/// Compares `(Δ⊗id)∘Δ` with `(id⊗Δ)∘Δ` on `j1 ⊗ j2 ⊗ j3`. Both sides are
/// built by applying the dressed coproduct to a composite factor, so the
/// group-like dressings are evaluated on total weights.
pub fn verify_coassociativity(
    family: CoproductFamily,
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
) -> Result<f64> {
    let dim = j1.multiplicity() * j2.multiplicity() * j3.multiplicity();
    if dim > MAX_TRIPLE_DIM {
        return Err(Error::DimensionTooLarge {
            dim,
            max: MAX_TRIPLE_DIM,
        });
    }
    let d = dressing(family);
    let r1 = build_irrep(j1, family.q)?;
    let r2 = build_irrep(j2, family.q)?;
    let r3 = build_irrep(j3, family.q)?;
    let g12 = tensor_generators(&d, &r1.gens, &r2.gens, false);
    let g23 = tensor_generators(&d, &r2.gens, &r3.gens, false);
    let lhs = tensor_generators(&d, &g12, &r3.gens, false);
    let rhs = tensor_generators(&d, &r1.gens, &g23, false);
    Ok(generator_residual(&lhs, &rhs))
}

/// `(ε⊗id)∘Δ = id = (id⊗ε)∘Δ`, evaluated by tensoring with the trivial
/// (spin-0) representation, on which `ε` is realized.
pub fn verify_counit(family: CoproductFamily, j: HalfInt) -> Result<f64> {
    let d = dressing(family);
    let rep = build_irrep(j, family.q)?;
    let trivial = Generators::zero(1);
    let left = tensor_generators(&d, &trivial, &rep.gens, false);
    let right = tensor_generators(&d, &rep.gens, &trivial, false);
    Ok(generator_residual(&left, &rep.gens).max(generator_residual(&right, &rep.gens)))
}

/// `m∘(S⊗id)∘Δ(x)` and `m∘(id⊗S)∘Δ(x)` in the spin-j irrep; both must vanish
/// since `ε(x) = 0` on generators.
pub fn verify_antipode(family: CoproductFamily, j: HalfInt) -> Result<f64> {
    let d = dressing(family);
    let q = family.q;
    let rep = build_irrep(j, q)?;
    let w = rep.gens.weights();
    let leg = |x: &CMatrix, leg: &LegDressing| {
        let a = leg.right.matrix(q, &w);
        let a_inv = leg.right.inverse().matrix(q, &w);
        let b = leg.left.matrix(q, &w);
        let b_inv = leg.left.inverse().matrix(q, &w);
        let s_x = leg.antipode_twist.matrix(q, &w) * x * leg.antipode_scale;
        let left = &s_x * &a + &b_inv * x;
        let right = x * &a_inv + &b * &s_x;
        crate::linalg::max_abs(&left).max(crate::linalg::max_abs(&right))
    };
    let j0 = rep.j0();
    let s_j0 = -j0;
    let zero_part = crate::linalg::max_abs(&(&s_j0 + j0));
    Ok(leg(rep.jp(), &d.raise)
        .max(leg(rep.jm(), &d.lower))
        .max(zero_part))
}

/// Compatibility with `J0† = J0`, `J±† = J∓` on the tensor product.
pub fn verify_star(t: &TensorRealization) -> f64 {
    max_diff(&t.djp().adjoint(), t.djm()).max(max_diff(&t.dj0().adjoint(), t.dj0()))
}
