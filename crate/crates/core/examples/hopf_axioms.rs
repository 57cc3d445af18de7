//! Hopf axiom residuals for each coproduct family over a small grid.

use qhopf::{
    realize, verify_antipode, verify_coassociativity, verify_counit, verify_homomorphism,
    CoproductFamily, CoproductKind, HalfInt, QPoint,
};

fn main() -> qhopf::Result<()> {
    let h = HalfInt::HALF;
    let one = HalfInt::ONE;
    println!(
        "{:<16} {:>4} {:>2} {:>10} {:>10} {:>10} {:>10}",
        "family", "q", "n", "homom", "coassoc", "counit", "antipode"
    );
    for kind in [
        CoproductKind::StandardDJ,
        CoproductKind::Modified,
        CoproductKind::ModifiedPrimed,
    ] {
        for q in [0.5, 2.0] {
            let twists: &[i64] = if kind == CoproductKind::StandardDJ {
                &[0]
            } else {
                &[0, 1]
            };
            for &n in twists {
                let f = CoproductFamily::new(kind, QPoint::real(q)?, n);
                let hom = verify_homomorphism(&realize(f, h, one)?)?;
                let coassoc = verify_coassociativity(f, h, one, h)?;
                let counit = verify_counit(f, one)?;
                let antipode = verify_antipode(f, one)?;
                println!("{:<16} {q:>4} {:>2} {hom:>10.2e} {coassoc:>10.2e} {counit:>10.2e} {antipode:>10.2e}", kind.label(), f.n);
            }
        }
    }
    Ok(())
}
