use super::{GroupElement, PcPresentation};
use crate::error::{Error, Result};

/// Collection from the left over a fixed presentation.
///
/// Relation right-hand sides are pre-expanded into letter sequences
/// (0-based generator indices) so that collecting is a pure stack machine.
#[derive(Debug, Clone)]
pub struct Collector {
    p: u8,
    n: usize,
    power: Vec<Vec<usize>>,
    // comm[j][i], i < j: letters of [gj, gi]
    comm: Vec<Vec<Vec<usize>>>,
}

fn letters(word: &super::Word) -> Vec<usize> {
    word.pairs()
        .iter()
        .flat_map(|&(i, e)| std::iter::repeat_n(i - 1, e as usize))
        .collect()
}

impl Collector {
    pub fn new(pres: &PcPresentation) -> Self {
        let n = pres.generator_count();
        Self {
            p: pres.prime() as u8,
            n,
            power: (1..=n).map(|i| letters(pres.power(i))).collect(),
            comm: (1..=n)
                .map(|j| (1..j).map(|i| letters(pres.commutator(j, i))).collect())
                .collect(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    /// Multiplies the normal form `exps` on the right by every letter on
    /// `stack`, popping from the top.
    pub fn collect_stack(&self, exps: &mut [u8], stack: &mut Vec<usize>) {
        let mut pending: Vec<usize> = Vec::new();
        while let Some(k) = stack.pop() {
            // x = head * gk^ek * tail, and tail * gk = gk * tail^gk with
            // gj^gk = gj [gj, gk].
            pending.clear();
            for (j, e) in exps.iter_mut().enumerate().skip(k + 1) {
                for _ in 0..*e {
                    pending.push(j);
                    pending.extend_from_slice(&self.comm[j][k]);
                }
                *e = 0;
            }
            stack.extend(pending.iter().rev());
            exps[k] += 1;
            if exps[k] == self.p {
                exps[k] = 0;
                stack.extend(self.power[k].iter().rev());
            }
        }
    }

    /// Normal form of `g_{i1}^{e1} g_{i2}^{e2} ...`; indices are 1-based and
    /// exponents may be negative.
    pub fn collect(&self, raw: &[(usize, i64)]) -> Result<GroupElement> {
        let mut exps = vec![0u8; self.n];
        for &(index, exp) in raw {
            if index == 0 || index > self.n {
                return Err(Error::Index {
                    line: None,
                    message: format!("generator {index} outside 1..={}", self.n),
                });
            }
            let k = index - 1;
            let mut stack = Vec::new();
            if exp >= 0 {
                for _ in 0..exp {
                    stack.push(k);
                    self.collect_stack(&mut exps, &mut stack);
                }
            } else {
                let mut unit = vec![0u8; self.n];
                unit[k] = 1;
                let inv = self.inverse(&GroupElement::from_raw(unit));
                let mut cur = GroupElement::from_raw(exps);
                for _ in 0..exp.unsigned_abs() {
                    cur = self.multiply(&cur, &inv);
                }
                exps = cur.exps;
            }
        }
        Ok(GroupElement::from_raw(exps))
    }

    /// `x * y` by collecting the concatenated normal forms.
    pub fn multiply(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let mut exps = x.exponents().to_vec();
        let mut stack = Vec::new();
        for (k, &e) in y.exponents().iter().enumerate() {
            for _ in 0..e {
                stack.push(k);
                self.collect_stack(&mut exps, &mut stack);
            }
        }
        GroupElement::from_raw(exps)
    }

    /// Solves `x * y = 1` one generator at a time; the partial products keep a
    /// zero prefix so the exponents chosen form `y`'s normal form directly.
    pub fn inverse(&self, x: &GroupElement) -> GroupElement {
        let mut z = x.exponents().to_vec();
        let mut y = vec![0u8; self.n];
        let mut stack = Vec::new();
        for k in 0..self.n {
            let t = (self.p - z[k]) % self.p;
            y[k] = t;
            for _ in 0..t {
                stack.push(k);
                self.collect_stack(&mut z, &mut stack);
            }
        }
        debug_assert!(z.iter().all(|&e| e == 0));
        GroupElement::from_raw(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcp::parse_presentation;

    fn heisenberg() -> PcPresentation {
        parse_presentation("name heis\nprime 3\ngens 3\ncomm 2 1 = 3:1\n").unwrap()
    }

    #[test]
    fn b_times_a_is_abc() {
        let c = Collector::new(&heisenberg());
        let e = c.collect(&[(2, 1), (1, 1)]).unwrap();
        assert_eq!(e.exponents(), &[1, 1, 1]);
    }

    #[test]
    fn empty_product_is_identity() {
        let c = Collector::new(&heisenberg());
        assert!(c.collect(&[]).unwrap().is_identity());
    }

    #[test]
    fn out_of_range_generator() {
        let c = Collector::new(&heisenberg());
        assert!(matches!(c.collect(&[(4, 1)]), Err(Error::Index { .. })));
        assert!(matches!(c.collect(&[(0, 1)]), Err(Error::Index { .. })));
    }

    #[test]
    fn negative_exponents() {
        let c = Collector::new(&heisenberg());
        let a_inv = c.collect(&[(1, -1)]).unwrap();
        assert_eq!(a_inv.exponents(), &[2, 0, 0]);
        let comm = c.collect(&[(2, -1), (1, -1), (2, 1), (1, 1)]).unwrap();
        assert_eq!(comm.exponents(), &[0, 0, 1]);
    }

    #[test]
    fn inverse_of_general_element() {
        let c = Collector::new(&heisenberg());
        for idx in 0..27 {
            let x = GroupElement::from_index(idx, 3, 3);
            let y = c.inverse(&x);
            assert!(c.multiply(&x, &y).is_identity());
            assert!(c.multiply(&y, &x).is_identity());
        }
    }
}
