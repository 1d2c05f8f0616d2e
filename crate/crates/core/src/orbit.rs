//! Orbit representatives of coefficient tuples under the two-sided unit action.
//!
//! The group `U(R) × U(R)` acts on `R` by `(u, v)·a = u·a·v` and diagonally on
//! tuples. Searches whose target property is invariant under this action only
//! need one tuple per orbit. Representatives are produced level by level: the
//! first entry runs over orbits of the whole group, each later entry over
//! orbits of the stabiliser of the prefix. Orbits are traced with a few
//! sampled generators of the stabiliser, which can only split orbits further,
//! so every orbit keeps at least one representative.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::kernel::{Elem, ElementSet, FiniteRing};

const GENERATORS: usize = 8;
const MAX_GROUP: usize = 1 << 22;

/// Pairs `(u, v)` of the acting group. When `|U|²` is too large only the
/// left factor `U × {1}` is used.
pub fn unit_pairs(ring: &FiniteRing) -> Vec<(Elem, Elem)> {
    let units: Vec<Elem> = ring.units().iter().collect();
    if units.len() * units.len() <= MAX_GROUP {
        units.iter().flat_map(|&u| units.iter().map(move |&v| (u, v))).collect()
    } else {
        units.iter().map(|&u| (u, ring.one())).collect()
    }
}

/// Visits one representative tuple per orbit. `slots[j]` is the candidate set
/// for entry `j` and must be invariant under the action. The visitor returns
/// `Ok(false)` to stop; the function then returns `Ok(false)` as well.
pub fn for_each_orbit_rep(
    ring: &FiniteRing,
    slots: &[&ElementSet],
    visit: &mut dyn FnMut(&[Elem]) -> Result<bool>,
) -> Result<bool> {
    let group = unit_pairs(ring);
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b17);
    let mut prefix = Vec::with_capacity(slots.len());
    level(ring, slots, &group, &mut prefix, &mut rng, visit)
}

fn level(
    ring: &FiniteRing,
    slots: &[&ElementSet],
    stab: &[(Elem, Elem)],
    prefix: &mut Vec<Elem>,
    rng: &mut ChaCha8Rng,
    visit: &mut dyn FnMut(&[Elem]) -> Result<bool>,
) -> Result<bool> {
    let j = prefix.len();
    if j == slots.len() {
        return visit(prefix);
    }
    let gens: Vec<(Elem, Elem)> = if stab.len() <= GENERATORS {
        stab.to_vec()
    } else {
        stab.choose_multiple(rng, GENERATORS).copied().collect()
    };
    let mut seen = ring.empty_set();
    let mut stack = Vec::new();
    for a in slots[j].iter() {
        if seen.contains(a) {
            continue;
        }
        seen.insert(a);
        stack.push(a);
        while let Some(z) = stack.pop() {
            for &(u, v) in &gens {
                let w = ring.mul(ring.mul(u, z), v);
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        let sub: Vec<(Elem, Elem)> =
            stab.iter().copied().filter(|&(u, v)| ring.mul(ring.mul(u, a), v) == a).collect();
        prefix.push(a);
        let go_on = level(ring, slots, &sub, prefix, rng, visit)?;
        prefix.pop();
        if !go_on {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make_ex22, make_matrix, make_zn};

    /// Every tuple is equivalent to some visited representative.
    fn covers_all_orbits(ring: &FiniteRing, len: usize) {
        let all = ring.full_set();
        let slots: Vec<&ElementSet> = vec![&all; len];
        let mut reps = Vec::new();
        for_each_orbit_rep(ring, &slots, &mut |t| {
            reps.push(t.to_vec());
            Ok(true)
        })
        .unwrap();
        let group = unit_pairs(ring);
        let mut covered = std::collections::HashSet::new();
        for r in &reps {
            for &(u, v) in &group {
                covered.insert(r.iter().map(|&a| ring.mul(ring.mul(u, a), v)).collect::<Vec<_>>());
            }
        }
        assert_eq!(covered.len(), ring.size().pow(len as u32));
        assert!(reps.len() < ring.size().pow(len as u32) || group.len() == 1);
    }

    #[test]
    fn orbit_reps_cover_matrix_pairs() {
        covers_all_orbits(&make_matrix(&make_zn(2).unwrap(), 2).unwrap(), 2);
    }

    #[test]
    fn orbit_reps_cover_ex22_pairs_and_zn_triples() {
        covers_all_orbits(&make_ex22(2).unwrap(), 2);
        covers_all_orbits(&make_zn(9).unwrap(), 3);
    }
}
