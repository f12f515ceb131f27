use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{subgroup_closure, FiniteGroup};
use crate::error::{Error, Result};
use crate::pcp::{Collector, GroupElement, PcPresentation};

/// Orders up to this bound get a full Cayley table.
pub const CAYLEY_TABLE_LIMIT: usize = 3125;

const EXHAUSTIVE_TRIPLES_LIMIT: usize = 243;
const GENERATOR_TRIPLES_BUDGET: usize = 50_000_000;
const SAMPLED_TRIPLES: usize = 100_000;
const SAMPLE_SEED: u64 = 0x0005_eed0_fc01_1ec7;

/// A presentation enumerated into an explicit group on `0..p^n`.
///
/// Element `k` is the normal form whose exponent vector is the base-`p`
/// expansion of `k` (most significant digit = first generator), so index
/// order is lexicographic order of normal forms and the identity is `0`.
#[derive(Debug, Clone)]
pub struct RealizedGroup {
    pres: Arc<PcPresentation>,
    collector: Collector,
    p: usize,
    n: usize,
    order: usize,
    place: Vec<usize>,
    // rmul[x * n + k] = x * g_(k+1)
    rmul: Vec<u32>,
    inverse: Vec<u32>,
    table: Option<Vec<u16>>,
}

impl RealizedGroup {
    fn build(pres: &PcPresentation) -> Self {
        let p = pres.prime() as usize;
        let n = pres.generator_count();
        let order = pres.order();
        let collector = Collector::new(pres);
        let place: Vec<usize> = (0..n).map(|k| p.pow((n - 1 - k) as u32)).collect();

        let mut rmul = vec![0u32; order * n];
        let mut stack = Vec::new();
        for x in 0..order {
            let base = GroupElement::from_index(x, p as u32, n);
            for k in 0..n {
                let mut exps = base.exponents().to_vec();
                stack.push(k);
                collector.collect_stack(&mut exps, &mut stack);
                rmul[x * n + k] = GroupElement::from_raw(exps).index(p as u32) as u32;
            }
        }

        let mut group = Self {
            pres: Arc::new(pres.clone()),
            collector,
            p,
            n,
            order,
            place,
            rmul,
            inverse: Vec::new(),
            table: None,
        };
        group.inverse = (0..order).map(|x| group.solve_inverse(x) as u32).collect();
        if order <= CAYLEY_TABLE_LIMIT {
            let mut table = vec![0u16; order * order];
            for x in 0..order {
                for y in 0..order {
                    table[x * order + y] = group.mul_by_letters(x, y) as u16;
                }
            }
            group.table = Some(table);
        }
        group
    }

    #[inline]
    fn digit(&self, x: usize, k: usize) -> usize {
        (x / self.place[k]) % self.p
    }

    fn mul_by_letters(&self, mut x: usize, y: usize) -> usize {
        for k in 0..self.n {
            for _ in 0..self.digit(y, k) {
                x = self.rmul[x * self.n + k] as usize;
            }
        }
        x
    }

    fn solve_inverse(&self, x: usize) -> usize {
        let mut z = x;
        let mut y = 0;
        for k in 0..self.n {
            let t = (self.p - self.digit(z, k)) % self.p;
            y += t * self.place[k];
            for _ in 0..t {
                z = self.rmul[z * self.n + k] as usize;
            }
        }
        y
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn name(&self) -> &str {
        self.pres.name()
    }

    pub fn prime(&self) -> u32 {
        self.p as u32
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn collector(&self) -> &Collector {
        &self.collector
    }

    /// Index of the pc generator `gi` (1-based).
    pub fn generator(&self, i: usize) -> usize {
        self.place[i - 1]
    }

    pub fn element(&self, x: usize) -> GroupElement {
        GroupElement::from_index(x, self.p as u32, self.n)
    }

    pub fn index_of(&self, e: &GroupElement) -> usize {
        e.index(self.p as u32)
    }

    pub fn has_cayley_table(&self) -> bool {
        self.table.is_some()
    }

    /// Product computed by collecting the two normal forms from scratch,
    /// independent of the cached tables.
    pub fn multiply_by_collection(&self, x: usize, y: usize) -> usize {
        let prod = self.collector.multiply(&self.element(x), &self.element(y));
        self.index_of(&prod)
    }

    fn inconsistent(&self, message: String) -> Error {
        Error::InconsistentPresentation {
            name: self.pres.name().to_string(),
            message,
        }
    }

    fn verify(&self) -> Result<()> {
        let gens: Vec<usize> = (1..=self.n).map(|i| self.generator(i)).collect();
        let closure = subgroup_closure(self, gens.iter().copied());
        if closure.order() != self.order {
            return Err(self.inconsistent(format!(
                "generators close to {} elements, expected {}",
                closure.order(),
                self.order
            )));
        }

        for x in 0..self.order {
            if self.mul(x, 0) != x || self.mul(0, x) != x {
                return Err(self.inconsistent(format!("identity law fails at {}", self.element(x))));
            }
            let y = self.inv(x);
            if self.mul(x, y) != 0 || self.mul(y, x) != 0 {
                return Err(self.inconsistent(format!("inverse law fails at {}", self.element(x))));
            }
        }

        for i in 1..=self.n {
            let g = self.generator(i);
            let lhs = self.pow(g, self.p as u64);
            let rhs = self.word_value(self.pres.power(i));
            if lhs != rhs {
                return Err(self.inconsistent(format!(
                    "g{i}^{} evaluates to {}, relation says {}",
                    self.p,
                    self.element(lhs),
                    self.element(rhs)
                )));
            }
            for j in i + 1..=self.n {
                let lhs = self.commutator(self.generator(j), g);
                let rhs = self.word_value(self.pres.commutator(j, i));
                if lhs != rhs {
                    return Err(self.inconsistent(format!(
                        "[g{j}, g{i}] evaluates to {}, relation says {}",
                        self.element(lhs),
                        self.element(rhs)
                    )));
                }
            }
        }

        self.verify_associativity()
    }

    fn word_value(&self, word: &crate::pcp::Word) -> usize {
        word.pairs().iter().fold(0, |acc, &(i, e)| {
            self.mul(acc, self.pow(self.generator(i), e as u64))
        })
    }

    fn associativity_failure(&self, x: usize, y: usize, z: usize) -> Error {
        self.inconsistent(format!(
            "associativity fails on ({}, {}, {})",
            self.element(x),
            self.element(y),
            self.element(z)
        ))
    }

    fn verify_associativity(&self) -> Result<()> {
        let ord = self.order;
        if ord <= EXHAUSTIVE_TRIPLES_LIMIT {
            for x in 0..ord {
                for y in 0..ord {
                    let xy = self.mul(x, y);
                    for z in 0..ord {
                        if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                            return Err(self.associativity_failure(x, y, z));
                        }
                    }
                }
            }
            return Ok(());
        }

        // (xy)g = x(yg) for all x, y and every generator g already forces
        // associativity (induct on the normal form of the third factor).
        if ord * ord * self.n <= GENERATOR_TRIPLES_BUDGET {
            for y in 0..ord {
                for k in 1..=self.n {
                    let g = self.generator(k);
                    let yg = self.mul(y, g);
                    for x in 0..ord {
                        if self.mul(self.mul(x, y), g) != self.mul(x, yg) {
                            return Err(self.associativity_failure(x, y, g));
                        }
                    }
                }
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SAMPLED_TRIPLES {
            let (x, y, z) = (
                rng.gen_range(0..ord),
                rng.gen_range(0..ord),
                rng.gen_range(0..ord),
            );
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                return Err(self.associativity_failure(x, y, z));
            }
        }
        Ok(())
    }
}

impl FiniteGroup for RealizedGroup {
    fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.mul_by_letters(a, b),
        }
    }

    #[inline]
    fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    fn generators(&self) -> Vec<usize> {
        (1..=self.n).map(|i| self.generator(i)).collect()
    }
}

/// Enumerates every normal form and checks the result is a group of order
/// `p^n` satisfying its own relations.
///
/// Associativity is checked on all triples up to order 243; above that on
/// every `(x, y, generator)` triple when affordable, plus a fixed-seed sample
/// of 100 000 arbitrary triples.
pub fn realize(pres: &PcPresentation) -> Result<RealizedGroup> {
    let group = RealizedGroup::build(pres);
    group.verify()?;
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcp::parse_presentation;

    fn heisenberg() -> RealizedGroup {
        realize(&parse_presentation("name heis\nprime 3\ngens 3\ncomm 2 1 = 3:1\n").unwrap())
            .unwrap()
    }

    #[test]
    fn cyclic_three() {
        let g = realize(&parse_presentation("name C3\nprime 3\ngens 1\n").unwrap()).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
    }

    #[test]
    fn heisenberg_order_and_commutator() {
        let g = heisenberg();
        assert_eq!(g.order(), 27);
        assert!(!g.is_abelian());
        let (a, b, c) = (g.generator(1), g.generator(2), g.generator(3));
        let ab = g.mul(a, b);
        let ba = g.mul(b, a);
        assert_ne!(ab, ba);
        // (ab)^-1 (ba) = [b, a] = c
        assert_eq!(g.mul(g.inv(ab), ba), c);
    }

    #[test]
    fn identity_and_inverse() {
        let g = heisenberg();
        assert_eq!(g.inv(0), 0);
        for x in 0..g.order() {
            assert_eq!(g.mul(x, 0), x);
        }
    }

    #[test]
    fn table_agrees_with_collection() {
        let g = heisenberg();
        for x in 0..27 {
            for y in 0..27 {
                assert_eq!(g.mul(x, y), g.multiply_by_collection(x, y));
            }
        }
    }

    #[test]
    fn inconsistent_presentation_rejected() {
        // <a, b | a^81, b^9, [a, b] = a^3>: b acts as a -> a^4, but 4^9 != 1 mod 81.
        let text = "name bad\nprime 3\ngens 6\npow 1 = 2:1\npow 3 = 4:1\npow 4 = 5:1\npow 5 = 6:1\n\
                    comm 3 1 = 4:1\ncomm 4 1 = 5:1\ncomm 5 1 = 6:1\ncomm 3 2 = 5:1 6:2\ncomm 4 2 = 6:1\n";
        let err = realize(&parse_presentation(text).unwrap()).unwrap_err();
        assert!(
            matches!(err, Error::InconsistentPresentation { .. }),
            "{err}"
        );
    }
}
