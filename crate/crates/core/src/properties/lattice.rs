use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::{IdealKind, Witness};
use crate::error::Result;
use crate::kernel::{Elem, ElementSet, FiniteRing, Side};

/// One annihilator `r(X)` (or `l(X)`) together with a generating set `X`.
#[derive(Clone, Debug)]
pub struct LatticeEntry {
    pub set: ElementSet,
    pub generators: Vec<Elem>,
}

/// Every distinct one-sided annihilator of the ring, in discovery order.
/// Annihilators of sets are intersections of annihilators of elements, so the
/// lattice is the ∩-closure of `{r(a)}` together with `R = r(∅)`.
pub fn annihilator_lattice(ring: &FiniteRing, side: Side) -> Vec<LatticeEntry> {
    let mut entries = vec![LatticeEntry { set: ring.full_set(), generators: vec![] }];
    let mut seen: HashSet<FixedBitSet> = HashSet::from([ring.full_set().bits().clone()]);
    for a in ring.nonzero_elements() {
        let ann = ring.annihilator_of(side, a);
        if seen.contains(ann.bits()) {
            continue;
        }
        for i in 0..entries.len() {
            let meet = entries[i].set.intersection(ann);
            if seen.insert(meet.bits().clone()) {
                let mut generators = entries[i].generators.clone();
                generators.push(a);
                entries.push(LatticeEntry { set: meet, generators });
            }
        }
    }
    entries
}

pub(super) fn unbounded_annihilator(ring: &FiniteRing, side: Side, essential_only: bool) -> Result<Witness> {
    for entry in annihilator_lattice(ring, side) {
        if !entry.set.has_nonzero() || (essential_only && !ring.is_essential(side, &entry.set)) {
            continue;
        }
        if !ring.bound_of_ideal(side, &entry.set)?.has_nonzero() {
            return Ok(Witness::Unbounded { side, ideal: IdealKind::Annihilator, generators: entry.generators });
        }
    }
    Ok(Witness::None)
}
