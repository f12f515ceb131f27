use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// `G/N` for a normal subgroup `N`.
///
/// Cosets are numbered in increasing order of their minimal element, which
/// is also their representative; the identity coset is `0`.
#[derive(Debug)]
pub struct QuotientGroup<'a, G: ?Sized> {
    parent: &'a G,
    normal: Subgroup,
    coset_of: Vec<u32>,
    reps: Vec<usize>,
}

impl<'a, G: FiniteGroup + ?Sized> QuotientGroup<'a, G> {
    pub fn new(parent: &'a G, normal: &Subgroup) -> Result<Self> {
        if !normal.is_normal(parent) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![u32::MAX; parent.order()];
        let mut reps = Vec::with_capacity(parent.order() / normal.order());
        for x in 0..parent.order() {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &n in normal.elements() {
                coset_of[parent.mul(x, n)] = id;
            }
        }
        debug_assert_eq!(reps.len() * normal.order(), parent.order());
        Ok(Self {
            parent,
            normal: normal.clone(),
            coset_of,
            reps,
        })
    }

    pub fn parent(&self) -> &'a G {
        self.parent
    }

    pub fn normal_subgroup(&self) -> &Subgroup {
        &self.normal
    }

    /// The canonical projection `G -> G/N`.
    pub fn project(&self, x: usize) -> usize {
        self.coset_of[x] as usize
    }

    /// Minimal element of a coset.
    pub fn representative(&self, coset: usize) -> usize {
        self.reps[coset]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    /// Full preimage of a set of cosets, sorted.
    pub fn preimage(&self, cosets: &Subgroup) -> Subgroup {
        let elems = (0..self.parent.order()).filter(|&x| cosets.contains(self.project(x)));
        Subgroup::from_elements(self.parent, elems)
    }
}

impl<G: FiniteGroup + ?Sized> FiniteGroup for QuotientGroup<'_, G> {
    fn order(&self) -> usize {
        self.reps.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.project(self.parent.mul(self.reps[a], self.reps[b]))
    }

    fn inv(&self, a: usize) -> usize {
        self.project(self.parent.inv(self.reps[a]))
    }

    fn generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = self
            .parent
            .generators()
            .into_iter()
            .map(|g| self.project(g))
            .filter(|&c| c != 0)
            .collect();
        gens.dedup();
        gens
    }
}
