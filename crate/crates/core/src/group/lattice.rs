use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::{subgroup_closure, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// Largest order for which the full subgroup lattice is enumerated.
pub const LATTICE_ORDER_LIMIT: usize = 625;

/// Every subgroup, found by repeatedly adjoining one element to known
/// subgroups starting from the trivial one. Sorted by order, then by
/// element set.
pub fn all_subgroups<G: FiniteGroup + ?Sized>(group: &G) -> Result<Vec<Subgroup>> {
    if group.order() > LATTICE_ORDER_LIMIT {
        return Err(Error::ScopeExceeded {
            what: "subgroup lattice enumeration",
            actual: group.order() as u64,
            limit: LATTICE_ORDER_LIMIT as u64,
        });
    }
    let trivial = Subgroup::trivial(group.order());
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(trivial.members().clone());
    let mut found = vec![trivial];
    let mut k = 0;
    while k < found.len() {
        let base = found[k].clone();
        let mut covered = base.members().clone();
        for x in 0..group.order() {
            if covered.contains(x) {
                continue;
            }
            let ext = subgroup_closure(
                group,
                base.generators().iter().copied().chain(std::iter::once(x)),
            );
            covered.union_with(ext.members());
            if seen.insert(ext.members().clone()) {
                found.push(ext);
            }
        }
        k += 1;
    }
    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    Ok(found)
}

/// Subgroups of index `p` (the maximal subgroups of a p-group).
pub fn maximal_subgroups<G: FiniteGroup + ?Sized>(group: &G, p: u32) -> Result<Vec<Subgroup>> {
    let target = group.order() / p as usize;
    Ok(all_subgroups(group)?
        .into_iter()
        .filter(|h| h.order() == target)
        .collect())
}
