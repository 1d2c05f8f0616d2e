//! M₂(F₂) fails the hypotheses: a non-central idempotent and a McCoy violation.

use ringlab::constructors::{make_matrix, make_zn};
use ringlab::poly::{constant_annihilator, poly_mul, Polynomial};
use ringlab::properties::{check_property, mccoy_falsify, PropertyId, SearchLimits};
use ringlab::Side;

fn main() -> ringlab::Result<()> {
    let m2 = make_matrix(&make_zn(2)?, 2)?;
    for p in [PropertyId::Abelian, PropertyId::WeaklyReversible] {
        let rep = check_property(&m2, p, SearchLimits::default())?;
        println!("{p}: {} witness {}", rep.verdict, serde_json::to_string(&rep.witness).unwrap());
    }

    let v = mccoy_falsify(&m2, Side::Right, 1, 1 << 20)?.expect("M2(Z2) is not right McCoy");
    let f = Polynomial::new(&m2, v.f.clone());
    let g = Polynomial::new(&m2, v.g.clone());
    println!("\nf = {}\ng = {}", f.format(&m2), g.format(&m2));
    println!("f·g = {}", poly_mul(&m2, &f, &g).format(&m2));
    let c = constant_annihilator(&m2, &[f], Side::Right);
    println!("constants c ≠ 0 with f·c = 0: {}", c.len() - 1);
    Ok(())
}
