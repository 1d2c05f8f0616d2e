//! Zero products in R[t] over the monomial algebra.

use ringlab::constructors::make_ex22;
use ringlab::poly::{poly_mul, PolyRing, Polynomial};

fn main() -> ringlab::Result<()> {
    let r = make_ex22(2)?;
    let alg = r.algebra().expect("structure constants");
    let (x, y) = (alg.basis_element(1), alg.basis_element(3));
    let pr = PolyRing::new(&r, 4);
    for coeffs in [vec![x, y], vec![y, x], vec![r.add(r.one(), x), y], vec![r.mul(y, x), x]] {
        let f = pr.poly(coeffs)?;
        let basis = pr.right_annihilator_basis(&f, 2)?.unwrap_or_default();
        println!("f = {:<14} dim of {{g : deg g ≤ 2, f·g = 0}} over F2: {}", f.format(&r), basis.len());
        if let Some(g) = basis.first() {
            println!("   e.g. g = {}, f·g = {}", g.format(&r), poly_mul(&r, &f, g).format(&r));
        }
    }
    let f = Polynomial::new(&r, vec![x, y]);
    println!("\nenumerated annihilator found: {}", pr.right_annihilator_enumerated(&f, 2, 1 << 20)?.is_nonzero());
    Ok(())
}
