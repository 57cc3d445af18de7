//! Solving for the unitary that carries the odd-twist coproduct onto the
//! untwisted one, and the exchange operator it induces.

use qhopf::{
    exchange_p, exchange_p_twisted, find_intertwiner, intertwiner_u, verify_intertwiner,
    CoproductFamily, HalfInt, QPoint,
};

fn main() -> qhopf::Result<()> {
    let h = HalfInt::HALF;
    let odd = CoproductFamily::modified_primed(QPoint::one(), 1);
    let even = odd.with_n(0);
    let found = find_intertwiner(odd, even, h, h)?;
    println!(
        "solved W: residual {:.2e}, commutant dimension {}",
        found.residual, found.commutant_dim
    );
    println!(
        "fixed U residual: {:.2e}",
        verify_intertwiner(intertwiner_u().matrix(), odd, even, h, h)?
    );
    let induced = intertwiner_u().conjugate(&exchange_p());
    println!(
        "U P U† = twisted exchange: {}",
        induced == exchange_p_twisted()
    );
    println!("{}", induced.matrix().map(|z| z.re));

    let q2 = CoproductFamily::standard(QPoint::real(2.0)?);
    let q3 = CoproductFamily::standard(QPoint::real(3.0)?);
    println!(
        "q = 2 against q = 3: {}",
        find_intertwiner(q2, q3, h, h).unwrap_err()
    );
    Ok(())
}
