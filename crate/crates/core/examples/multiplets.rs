//! Clebsch-Gordan towers for spin 1/2 ⊗ 1/2 and their exchange symmetry.
//! With an odd twist the singlet comes out symmetric.

use qhopf::{cg_decompose, classify_symmetry, CoproductFamily, HalfInt, QPoint};

fn main() -> qhopf::Result<()> {
    let h = HalfInt::HALF;
    let families = [
        (
            "standard, q = 4",
            CoproductFamily::standard(QPoint::real(4.0)?),
        ),
        (
            "primed n = 0, q = 1",
            CoproductFamily::modified_primed(QPoint::one(), 0),
        ),
        (
            "primed n = 1, q = 1",
            CoproductFamily::modified_primed(QPoint::one(), 1),
        ),
    ];
    for (label, f) in families {
        println!("{label}");
        for s in cg_decompose(f, h, h)? {
            let c: Vec<String> = s.coeffs.iter().map(|z| format!("{:+.4}", z.re)).collect();
            println!(
                "  {:<7} [{}]  {:?}",
                s.label(),
                c.join(" "),
                classify_symmetry(&s, 1e-12)?
            );
        }
    }
    Ok(())
}
