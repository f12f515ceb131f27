//! Explicit finite groups over an integer element space `0..order`, with the
//! identity at index 0.

mod lattice;
mod quotient;
mod realize;
mod subgroup;

pub use lattice::{all_subgroups, maximal_subgroups, LATTICE_ORDER_LIMIT};
pub use quotient::QuotientGroup;
pub use realize::{realize, RealizedGroup, CAYLEY_TABLE_LIMIT};
pub use subgroup::{
    center, centralizer, commutator_subgroup, commutator_subgroup_exhaustive, normal_closure,
    subgroup_closure, Subgroup, SubgroupGroup,
};

/// A finite group whose elements are the integers `0..order()`.
pub trait FiniteGroup {
    fn order(&self) -> usize;

    fn mul(&self, a: usize, b: usize) -> usize;

    fn inv(&self, a: usize) -> usize;

    /// A generating set.
    fn generators(&self) -> Vec<usize>;

    fn identity(&self) -> usize {
        0
    }

    fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity();
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `b^-1 a b`.
    fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(k, &a)| {
            gens[k + 1..]
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }
}

/// Least `k >= 1` with `x^k = 1`.
pub fn element_order<G: FiniteGroup + ?Sized>(group: &G, x: usize) -> u64 {
    let mut k = 1;
    let mut y = x;
    while y != group.identity() {
        y = group.mul(y, x);
        k += 1;
    }
    k
}
