//! Right annihilators of T₂(F₂) and whether each contains a nonzero ideal.

use ringlab::constructors::{make_upper_triangular, make_zn};
use ringlab::properties::annihilator_lattice;
use ringlab::Side;

fn main() -> ringlab::Result<()> {
    let t2 = make_upper_triangular(&make_zn(2)?, 2)?;
    for side in [Side::Right, Side::Left] {
        println!("{side} annihilators of {}:", t2.name());
        for entry in annihilator_lattice(&t2, side) {
            let members: Vec<String> = entry.set.iter().map(|h| t2.label(h)).collect();
            let bound = t2.bound_of_ideal(side, &entry.set)?;
            println!(
                "  {:<40} essential={:5} bounded={}",
                members.join(", "),
                t2.is_essential(side, &entry.set),
                !bound.is_zero_only()
            );
        }
    }
    Ok(())
}
