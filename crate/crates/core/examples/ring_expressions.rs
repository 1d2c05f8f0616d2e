//! Parses ring expressions, prints their canonical form and builds them.

use ringlab::expr::parse_ring_expr;

fn main() {
    let inputs = ["Z8", "s2( m2(z2) )", "ex22(3) x Z4", "corner(M2(Z2), 1)", "quotient(Z8, 4)", "(Z2 x Z3) x Z2", "M2(Z2", "Q5"];
    for text in inputs {
        match parse_ring_expr(text) {
            Ok(plan) => match plan.build(4096) {
                Ok(r) => println!("{text:<22} -> {plan:<20} {} elements", r.size()),
                Err(e) => println!("{text:<22} -> {plan:<20} {e}"),
            },
            Err(e) => println!("{text:<22} parse error: {e}"),
        }
    }
}
