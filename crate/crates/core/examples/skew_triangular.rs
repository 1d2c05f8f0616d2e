//! S₂(R) is weakly reversible exactly when R is reversible; S₃(R) never is.

use ringlab::constructors::{make_matrix, make_skew_triangular, make_zn, matrix_unit};
use ringlab::properties::{is_reversible_element, is_weakly_reversible};
use ringlab::FiniteRing;

fn reversible(r: &FiniteRing) -> bool {
    r.elements().all(|a| is_reversible_element(r, a))
}

fn main() -> ringlab::Result<()> {
    let z2 = make_zn(2)?;
    for base in [make_zn(4)?, make_zn(6)?, make_matrix(&z2, 2)?] {
        let s2 = make_skew_triangular(&base, 2)?;
        println!(
            "{:>6} reversible: {:5}   {:>10} weakly reversible: {}",
            base.name(),
            reversible(&base),
            s2.name(),
            is_weakly_reversible(&s2).is_ok()
        );
    }

    let s3 = make_skew_triangular(&z2, 3)?;
    let a = matrix_unit(&s3, 1, 2).expect("e12");
    let b = matrix_unit(&s3, 2, 3).expect("e23");
    println!("\nin {}: A = {}, B = {}", s3.name(), s3.label(a), s3.label(b));
    println!("A² = {}, B² = {}, BA = {}, AB = {}", s3.label(s3.mul(a, a)), s3.label(s3.mul(b, b)), s3.label(s3.mul(b, a)), s3.label(s3.mul(a, b)));
    if let Err(w) = is_weakly_reversible(&s3) {
        println!("no nonzero power of {} is reversible", s3.label(w));
    }
    Ok(())
}
