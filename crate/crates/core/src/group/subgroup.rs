use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::FiniteGroup;

/// A subgroup stored as an explicit element set of its parent. Equality
/// compares element sets only.
#[derive(Debug, Clone)]
pub struct Subgroup {
    members: FixedBitSet,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn trivial(parent_order: usize) -> Self {
        let mut members = FixedBitSet::with_capacity(parent_order);
        members.insert(0);
        Self {
            members,
            elements: vec![0],
            generators: Vec::new(),
        }
    }

    pub fn whole<G: FiniteGroup + ?Sized>(group: &G) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert_range(..);
        Self {
            members,
            elements: (0..group.order()).collect(),
            generators: group.generators(),
        }
    }

    /// Builds the subgroup with the given element set, which must already be
    /// a subgroup. A generating set is extracted greedily.
    pub fn from_elements<G: FiniteGroup + ?Sized>(
        group: &G,
        elements: impl IntoIterator<Item = usize>,
    ) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        for x in elements {
            members.insert(x);
        }
        let mut closure = Closure::new(group);
        for x in members.ones() {
            closure.add(group, x);
        }
        let sub = closure.finish();
        assert_eq!(sub.members, members, "element set is not a subgroup");
        sub
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// Elements in increasing index order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection<G: FiniteGroup + ?Sized>(&self, group: &G, other: &Subgroup) -> Subgroup {
        let common = self.members.intersection(&other.members);
        Subgroup::from_elements(group, common)
    }

    /// Subgroup generated by `self` and `other`; equals the product set when
    /// one of them is normal.
    pub fn join<G: FiniteGroup + ?Sized>(&self, group: &G, other: &Subgroup) -> Subgroup {
        subgroup_closure(
            group,
            self.generators
                .iter()
                .chain(other.generators.iter())
                .copied(),
        )
    }

    pub fn is_normal<G: FiniteGroup + ?Sized>(&self, group: &G) -> bool {
        let outer = group.generators();
        self.generators
            .iter()
            .all(|&h| outer.iter().all(|&t| self.contains(group.conjugate(h, t))))
    }

    pub fn is_abelian<G: FiniteGroup + ?Sized>(&self, group: &G) -> bool {
        let g = &self.generators;
        g.iter().enumerate().all(|(k, &a)| {
            g[k + 1..]
                .iter()
                .all(|&b| group.mul(a, b) == group.mul(b, a))
        })
    }

    /// The subgroup as a group in its own right.
    pub fn as_group<'a, G: FiniteGroup + ?Sized>(&'a self, group: &'a G) -> SubgroupGroup<'a, G> {
        SubgroupGroup::new(group, self)
    }
}

/// Incremental closure: the element list stays closed under right
/// multiplication by every generator added so far.
struct Closure {
    members: FixedBitSet,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl Closure {
    fn new<G: FiniteGroup + ?Sized>(group: &G) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(group.identity());
        Self {
            members,
            elements: vec![group.identity()],
            generators: Vec::new(),
        }
    }

    fn add<G: FiniteGroup + ?Sized>(&mut self, group: &G, x: usize) -> bool {
        if self.members.contains(x) {
            return false;
        }
        self.generators.push(x);
        let old = self.elements.len();
        for i in 0..old {
            let y = group.mul(self.elements[i], x);
            if !self.members.put(y) {
                self.elements.push(y);
            }
        }
        let mut i = old;
        while i < self.elements.len() {
            let e = self.elements[i];
            for k in 0..self.generators.len() {
                let y = group.mul(e, self.generators[k]);
                if !self.members.put(y) {
                    self.elements.push(y);
                }
            }
            i += 1;
        }
        true
    }

    fn finish(mut self) -> Subgroup {
        self.elements.sort_unstable();
        Subgroup {
            members: self.members,
            elements: self.elements,
            generators: self.generators,
        }
    }
}

/// Smallest subgroup containing `gens`.
pub fn subgroup_closure<G: FiniteGroup + ?Sized>(
    group: &G,
    gens: impl IntoIterator<Item = usize>,
) -> Subgroup {
    let mut closure = Closure::new(group);
    for x in gens {
        closure.add(group, x);
    }
    closure.finish()
}

/// Smallest normal subgroup containing `gens`.
pub fn normal_closure<G: FiniteGroup + ?Sized>(
    group: &G,
    gens: impl IntoIterator<Item = usize>,
) -> Subgroup {
    let outer = group.generators();
    let mut closure = Closure::new(group);
    for x in gens {
        closure.add(group, x);
    }
    let mut k = 0;
    while k < closure.generators.len() {
        let h = closure.generators[k];
        for &t in &outer {
            closure.add(group, group.conjugate(h, t));
        }
        k += 1;
    }
    closure.finish()
}

/// `[H, K] = <[h, k] : h in H, k in K>`.
///
/// When both arguments are normal this is the normal closure of the
/// commutators of their generators; otherwise every pair is visited.
pub fn commutator_subgroup<G: FiniteGroup + ?Sized>(
    group: &G,
    h: &Subgroup,
    k: &Subgroup,
) -> Subgroup {
    if h.is_normal(group) && k.is_normal(group) {
        let comms: Vec<usize> = h
            .generators()
            .iter()
            .flat_map(|&a| k.generators().iter().map(move |&b| (a, b)))
            .map(|(a, b)| group.commutator(a, b))
            .collect();
        normal_closure(group, comms)
    } else {
        commutator_subgroup_exhaustive(group, h, k)
    }
}

/// `[H, K]` from all `|H| * |K|` commutators.
pub fn commutator_subgroup_exhaustive<G: FiniteGroup + ?Sized>(
    group: &G,
    h: &Subgroup,
    k: &Subgroup,
) -> Subgroup {
    let mut seen = FixedBitSet::with_capacity(group.order());
    let mut closure = Closure::new(group);
    for &a in h.elements() {
        for &b in k.elements() {
            let c = group.commutator(a, b);
            if !seen.put(c) {
                closure.add(group, c);
            }
        }
    }
    closure.finish()
}

/// `C_G(S) = { g : gs = sg for all s in S }`.
pub fn centralizer<G: FiniteGroup + ?Sized>(group: &G, set: &[usize]) -> Subgroup {
    let elems =
        (0..group.order()).filter(|&g| set.iter().all(|&s| group.mul(g, s) == group.mul(s, g)));
    Subgroup::from_elements(group, elems)
}

/// `Z(G)`.
pub fn center<G: FiniteGroup + ?Sized>(group: &G) -> Subgroup {
    centralizer(group, &group.generators())
}

/// A subgroup re-indexed as a standalone group on `0..|H|`; local index `i`
/// is the `i`-th smallest parent element, so the identity stays at 0.
pub struct SubgroupGroup<'a, G: ?Sized> {
    parent: &'a G,
    elements: &'a [usize],
    local: HashMap<usize, usize>,
    generators: Vec<usize>,
}

impl<'a, G: FiniteGroup + ?Sized> SubgroupGroup<'a, G> {
    fn new(parent: &'a G, sub: &'a Subgroup) -> Self {
        let local: HashMap<usize, usize> = sub
            .elements()
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, i))
            .collect();
        let generators = sub.generators().iter().map(|x| local[x]).collect();
        Self {
            parent,
            elements: sub.elements(),
            local,
            generators,
        }
    }

    pub fn parent_element(&self, local: usize) -> usize {
        self.elements[local]
    }

    pub fn local_element(&self, parent: usize) -> Option<usize> {
        self.local.get(&parent).copied()
    }
}

impl<G: FiniteGroup + ?Sized> FiniteGroup for SubgroupGroup<'_, G> {
    fn order(&self) -> usize {
        self.elements.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.local[&self.parent.mul(self.elements[a], self.elements[b])]
    }

    fn inv(&self, a: usize) -> usize {
        self.local[&self.parent.inv(self.elements[a])]
    }

    fn generators(&self) -> Vec<usize> {
        self.generators.clone()
    }
}
