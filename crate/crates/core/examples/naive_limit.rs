//! Taking q → -1 in the standard coproduct naively: the commutator
//! [ΔJ+, ΔJ-] lands on -2ΔJ0, not the su(2) value 2ΔJ0.

use qhopf::{linalg::max_diff, CoproductFamily, HalfInt, QPoint, RelationTarget, C64};
use qhopf::{raising_commutator, realize, verify_homomorphism, verify_homomorphism_against};

fn main() -> qhopf::Result<()> {
    let h = HalfInt::HALF;
    for delta in [1e-2, 1e-4, 1e-6] {
        let t = realize(
            CoproductFamily::standard(QPoint::near_minus_one(delta)?),
            h,
            h,
        )?;
        let anti = max_diff(&raising_commutator(&t), &(t.dj0() * C64::new(-2.0, 0.0)));
        println!(
            "δ = {delta:.0e}: against 2ΔJ0 {:.6}, against -2ΔJ0 {anti:.2e}, against [2ΔJ0]_q {:.2e}",
            verify_homomorphism_against(&t, RelationTarget::Classical)?,
            verify_homomorphism(&t)?,
        );
    }
    Ok(())
}
