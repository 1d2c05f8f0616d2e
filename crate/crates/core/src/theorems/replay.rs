//! Re-checks failure traces with nothing but the ring's tables.

use super::{ClaimId, ClaimResult, Trace};
use crate::kernel::{Elem, FiniteRing, Side};
use crate::properties::replay_violation;

fn nilpotent(r: &FiniteRing, a: Elem) -> bool {
    let mut p = a;
    for _ in 0..r.size() {
        if p == 0 {
            return true;
        }
        p = r.mul(p, a);
    }
    p == 0
}

fn conv(r: &FiniteRing, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    let mut out = vec![0; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = r.add(out[i + j], r.mul(a, b));
        }
    }
    out
}

fn reversible_in(r: &FiniteRing, members: &[Elem], a: Elem) -> bool {
    members.iter().all(|&b| (r.mul(a, b) == 0) == (r.mul(b, a) == 0))
}

/// `(zR)^k` as a membership vector, by repeated multiplication.
fn product_set(r: &FiniteRing, z: Elem, k: usize) -> Vec<bool> {
    let mut level: Vec<Elem> = r.elements().map(|x| r.mul(z, x)).collect();
    level.sort_unstable();
    level.dedup();
    for _ in 1..k {
        let mut next: Vec<Elem> =
            level.iter().flat_map(|&s| r.elements().map(move |x| (s, x))).map(|(s, x)| r.mul(r.mul(s, z), x)).collect();
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    let mut out = vec![false; r.size()];
    for s in level {
        out[s] = true;
    }
    out
}

fn singular(r: &FiniteRing, side: Side, a: Elem) -> bool {
    let ann: Vec<bool> = r.elements().map(|c| r.side_mul(side, a, c) == 0).collect();
    r.nonzero_elements().all(|b| r.elements().any(|x| {
        let y = r.side_mul(side, b, x);
        y != 0 && ann[y]
    }))
}

/// True when the trace of a failed cell really falsifies the claim on `ring`.
pub fn replay_trace(ring: &FiniteRing, result: &ClaimResult) -> bool {
    let Some(trace) = &result.trace else { return false };
    let r = ring;
    let m = |a, b| r.mul(a, b);
    match trace {
        Trace::SquareZeroNotReversible { a, b } => *a != 0 && m(*a, *a) == 0 && ((m(*a, *b) == 0) != (m(*b, *a) == 0)),
        Trace::NonCentralIdempotent { e, r: x } => m(*e, *e) == *e && m(*e, *x) != m(*x, *e),
        Trace::CornerNotWeaklyReversible { e, a } => {
            let corner: Vec<Elem> = {
                let mut v: Vec<Elem> = r.elements().map(|x| m(m(*e, x), *e)).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let mut p = *a;
            let mut seen = vec![];
            while !seen.contains(&p) {
                if p != 0 && reversible_in(r, &corner, p) {
                    return false;
                }
                seen.push(p);
                p = m(p, *a);
            }
            corner.contains(a) && *a != 0
        }
        Trace::NonsingularNotReduced { side, a } => {
            *a != 0 && m(*a, *a) == 0 && r.nonzero_elements().all(|x| !singular(r, *side, x))
        }
        Trace::ReducedButSingular { side, a } => {
            *a != 0 && singular(r, *side, *a) && r.nonzero_elements().all(|x| m(x, x) != 0)
        }
        Trace::NoExponent { a, b } => {
            if *a == 0 || *b == 0 || m(*a, *b) != 0 {
                return false;
            }
            let kills = |x: Elem, y: Elem| r.elements().all(|t| m(m(x, t), y) == 0);
            let admissible = |k: usize| -> bool {
                match result.claim {
                    ClaimId::C8 => {
                        let p = r.pow(*a, k);
                        p != 0 && kills(p, *b) && kills(*b, p)
                    }
                    ClaimId::C9 => {
                        let p = r.pow(*b, k);
                        p != 0 && kills(*a, p) && kills(p, *a)
                    }
                    ClaimId::C11 => {
                        // (aR)^k b = 0 and b (Ra)^k = 0; the second set is the mirror chain.
                        let right = product_set(r, *a, k);
                        let left = left_product_set(r, *a, k);
                        r.pow(*a, k) != 0
                            && r.elements().all(|s| !right[s] || m(s, *b) == 0)
                            && r.elements().all(|s| !left[s] || m(*b, s) == 0)
                    }
                    ClaimId::C12 => {
                        let right = product_set(r, *b, k);
                        let left = left_product_set(r, *b, k);
                        r.pow(*b, k) != 0
                            && r.elements().all(|s| !left[s] || m(*a, s) == 0)
                            && r.elements().all(|s| !right[s] || m(s, *a) == 0)
                    }
                    _ => true,
                }
            };
            // Chains stabilise and powers cycle within |R| steps.
            !(1..=r.size() + 1).any(admissible)
        }
        Trace::NilPowerProduct { a, m: k, rs } => {
            let mut prod = r.one();
            for &x in rs {
                prod = m(m(prod, *a), x);
            }
            rs.len() == *k && r.pow(*a, *k) == 0 && prod != 0
        }
        Trace::NilSumNotNil { a, b } => nilpotent(r, *a) && nilpotent(r, *b) && !nilpotent(r, r.add(*a, *b)),
        Trace::NilProductNotNil { a, r: x, left } => {
            nilpotent(r, *a) && !nilpotent(r, if *left { m(*x, *a) } else { m(*a, *x) })
        }
        Trace::PolynomialPair { f, g } => {
            if conv(r, f, g).iter().any(|&c| c != 0) || g.iter().all(|&b| b == 0) {
                return false;
            }
            match result.claim {
                ClaimId::C14 => (1..=r.size() + 1).all(|k| {
                    let s = product_set(r, f[0], k);
                    r.elements().any(|x| s[x] && g.iter().any(|&b| m(x, b) != 0))
                }),
                ClaimId::C15 => f.iter().any(|&a| g.iter().any(|&b| !nilpotent(r, m(a, b)))),
                _ => false,
            }
        }
        Trace::UnboundedAnnihilator { x, g } => {
            let killed = x.iter().all(|f| conv(r, f, g).iter().all(|&c| c == 0));
            let coeffs: Vec<Elem> = x.iter().flatten().copied().collect();
            let bounded = r
                .nonzero_elements()
                .any(|c| coeffs.iter().all(|&a| r.elements().all(|t| m(m(a, t), c) == 0)));
            killed && g.iter().any(|&b| b != 0) && !bounded
        }
        Trace::McCoy(v) => replay_violation(r, v),
        Trace::Verdicts { .. } => false,
    }
}

/// `(Rz)^k` as a membership vector.
fn left_product_set(r: &FiniteRing, z: Elem, k: usize) -> Vec<bool> {
    let mut level: Vec<Elem> = r.elements().map(|x| r.mul(x, z)).collect();
    level.sort_unstable();
    level.dedup();
    for _ in 1..k {
        let mut next: Vec<Elem> =
            level.iter().flat_map(|&t| r.elements().map(move |x| (t, x))).map(|(t, x)| r.mul(x, r.mul(z, t))).collect();
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    let mut out = vec![false; r.size()];
    for s in level {
        out[s] = true;
    }
    out
}
