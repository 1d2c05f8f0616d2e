//! The six-dimensional monomial algebra over F₂: weakly reversible but not reversible.

use ringlab::constructors::make_ex22;
use ringlab::properties::{holds, is_weakly_reversible, PropertyId, SearchLimits};

fn main() -> ringlab::Result<()> {
    let r = make_ex22(2)?;
    let alg = r.algebra().expect("structure constants");
    let (x, y) = (alg.basis_element(1), alg.basis_element(3));
    println!("{} has {} elements", r.name(), r.size());
    println!("x·y = {}, y·x = {}", r.label(r.mul(x, y)), r.label(r.mul(y, x)));
    println!("nilpotents: {}, units: {}", r.nil_set().len(), r.units().len());

    let exponents = is_weakly_reversible(&r).expect("weakly reversible");
    let max = exponents.iter().map(|&(_, m)| m).max().unwrap_or(0);
    println!("every nonzero a has a reversible power a^m with m ≤ {max}");
    for p in [PropertyId::Reversible, PropertyId::WeaklyReversible, PropertyId::PiDuo, PropertyId::MccoyRight] {
        println!("{p:>18}: {}", holds(&r, p, SearchLimits::default())?);
    }
    Ok(())
}
