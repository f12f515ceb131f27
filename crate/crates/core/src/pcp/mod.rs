//! Power-commutator presentations of finite p-groups.
//!
//! A presentation on generators `g1..gn` (every generator of relative order
//! `p`) consists of power relations `gi^p = w(i)` and commutator relations
//! `[gj, gi] = w(j, i)` for `j > i`, where `[x, y] = x^-1 y^-1 x y`. The right
//! hand sides only mention generators of larger index, so collection from the
//! left always terminates. Generator indices are 1-based throughout the public
//! API, matching the file format.

mod collect;
mod parse;

pub use collect::Collector;
pub use parse::parse_presentation;

use std::fmt;

use crate::error::{Error, Result};

/// A product `g_{i1}^{e1} g_{i2}^{e2} ...` with strictly increasing indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<(usize, u32)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from `(generator, exponent)` pairs. Zero exponents are
    /// dropped; indices must be strictly increasing.
    pub fn new(pairs: impl IntoIterator<Item = (usize, u32)>) -> Result<Self> {
        let mut out: Vec<(usize, u32)> = Vec::new();
        for (index, exp) in pairs {
            if let Some(&(last, _)) = out.last() {
                if index <= last {
                    return Err(Error::Index {
                        line: None,
                        message: format!(
                            "word indices must be strictly increasing ({index} after {last})"
                        ),
                    });
                }
            }
            if exp != 0 {
                out.push((index, exp));
            }
        }
        Ok(Word(out))
    }

    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest generator index mentioned, if any.
    pub fn min_index(&self) -> Option<usize> {
        self.0.first().map(|&(i, _)| i)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}:{e}")?;
        }
        Ok(())
    }
}

pub const MAX_GENERATORS: usize = 7;

pub fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// A validated power-commutator presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    name: String,
    p: u32,
    n: usize,
    // power[i - 1] is the right side of gi^p
    power: Vec<Word>,
    // comm[j - 1][i - 1] (i < j) is the right side of [gj, gi]
    comm: Vec<Vec<Word>>,
}

impl PcPresentation {
    /// Presentation with all relations trivial (elementary abelian of rank `n`).
    pub fn new(name: impl Into<String>, p: u32, n: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if !matches!(p, 2 | 3 | 5) {
            return Err(Error::UnsupportedPrime(p));
        }
        if n == 0 || n > MAX_GENERATORS {
            return Err(Error::Index {
                line: None,
                message: format!("generator count {n} outside 1..={MAX_GENERATORS}"),
            });
        }
        Ok(Self {
            name: name.into(),
            p,
            n,
            power: vec![Word::identity(); n],
            comm: (0..n).map(|j| vec![Word::identity(); j]).collect(),
        })
    }

    fn check_word(&self, word: &Word, above: usize) -> Result<()> {
        for &(i, e) in word.pairs() {
            if i <= above || i > self.n {
                return Err(Error::Index {
                    line: None,
                    message: format!(
                        "generator {i} not allowed in a relation for generator {above} (need {above} < index <= {})",
                        self.n
                    ),
                });
            }
            if e >= self.p {
                return Err(Error::Index {
                    line: None,
                    message: format!("exponent {e} of generator {i} not in [0, {})", self.p),
                });
            }
        }
        Ok(())
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::Index {
                line: None,
                message: format!("generator {i} outside 1..={}", self.n),
            });
        }
        Ok(())
    }

    /// Sets `gi^p = word`.
    pub fn set_power(&mut self, i: usize, word: Word) -> Result<()> {
        self.check_generator(i)?;
        self.check_word(&word, i)?;
        self.power[i - 1] = word;
        Ok(())
    }

    /// Sets `[gj, gi] = word` for `j > i`.
    pub fn set_commutator(&mut self, j: usize, i: usize, word: Word) -> Result<()> {
        self.check_generator(i)?;
        self.check_generator(j)?;
        if j <= i {
            return Err(Error::Index {
                line: None,
                message: format!("commutator relation needs j > i, got ({j}, {i})"),
            });
        }
        self.check_word(&word, j)?;
        self.comm[j - 1][i - 1] = word;
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    /// `p^n`.
    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.n as u32)
    }

    pub fn power(&self, i: usize) -> &Word {
        &self.power[i - 1]
    }

    pub fn commutator(&self, j: usize, i: usize) -> &Word {
        &self.comm[j - 1][i - 1]
    }

    /// Homocyclic decomposition `C_{c1} x C_{c2} x ...` as a presentation;
    /// each factor `C_{p^a}` becomes a chain of `a` generators.
    pub fn abelian(name: impl Into<String>, p: u32, factors: &[u64]) -> Result<Self> {
        let mut exps = Vec::with_capacity(factors.len());
        for &c in factors {
            let a = log_p(c, p as u64).ok_or_else(|| Error::Index {
                line: None,
                message: format!("cyclic factor {c} is not a positive power of {p}"),
            })?;
            if a == 0 {
                continue;
            }
            exps.push(a);
        }
        let n: usize = exps.iter().sum();
        if n == 0 {
            return Err(Error::Index {
                line: None,
                message: "trivial group has no pc presentation".into(),
            });
        }
        let mut pres = Self::new(name, p, n)?;
        let mut start = 1;
        for a in exps {
            for k in start..start + a - 1 {
                pres.set_power(k, Word::new([(k + 1, 1)])?)?;
            }
            start += a;
        }
        Ok(pres)
    }

    /// Direct product; generators of `self` come first.
    pub fn direct_product(&self, other: &Self, name: impl Into<String>) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::Index {
                line: None,
                message: "direct product of presentations over different primes".into(),
            });
        }
        let shift = self.n;
        let mut pres = Self::new(name, self.p, self.n + other.n)?;
        let shifted = |w: &Word| Word::new(w.pairs().iter().map(|&(i, e)| (i + shift, e)));
        for i in 1..=self.n {
            pres.set_power(i, self.power(i).clone())?;
            for j in i + 1..=self.n {
                pres.set_commutator(j, i, self.commutator(j, i).clone())?;
            }
        }
        for i in 1..=other.n {
            pres.set_power(i + shift, shifted(other.power(i))?)?;
            for j in i + 1..=other.n {
                pres.set_commutator(j + shift, i + shift, shifted(other.commutator(j, i))?)?;
            }
        }
        Ok(pres)
    }
}

/// Writes the presentation in the file format read by [`parse_presentation`].
impl fmt::Display for PcPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name {}", self.name)?;
        writeln!(f, "prime {}", self.p)?;
        writeln!(f, "gens {}", self.n)?;
        for i in 1..=self.n {
            let w = self.power(i);
            if !w.is_identity() {
                writeln!(f, "pow {i} = {w}")?;
            }
        }
        for j in 1..=self.n {
            for i in 1..j {
                let w = self.commutator(j, i);
                if !w.is_identity() {
                    writeln!(f, "comm {j} {i} = {w}")?;
                }
            }
        }
        Ok(())
    }
}

/// `log_b(x)` when `x` is an exact power of `b`.
pub fn log_p(x: u64, b: u64) -> Option<usize> {
    if x == 0 {
        return None;
    }
    let mut x = x;
    let mut k = 0;
    while x.is_multiple_of(b) {
        x /= b;
        k += 1;
    }
    (x == 1).then_some(k)
}

/// Normal form `g1^e1 ... gn^en` with every `ei` in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    exps: Vec<u8>,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    pub fn from_exponents(pres: &PcPresentation, exps: &[u32]) -> Result<Self> {
        if exps.len() != pres.generator_count() {
            return Err(Error::Index {
                line: None,
                message: format!(
                    "exponent vector has length {}, expected {}",
                    exps.len(),
                    pres.generator_count()
                ),
            });
        }
        if let Some(&e) = exps.iter().find(|&&e| e >= pres.prime()) {
            return Err(Error::Index {
                line: None,
                message: format!("exponent {e} not in [0, {})", pres.prime()),
            });
        }
        Ok(Self {
            exps: exps.iter().map(|&e| e as u8).collect(),
        })
    }

    pub(crate) fn from_raw(exps: Vec<u8>) -> Self {
        Self { exps }
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Position in the lexicographic enumeration of all normal forms.
    pub fn index(&self, p: u32) -> usize {
        self.exps
            .iter()
            .fold(0usize, |acc, &e| acc * p as usize + e as usize)
    }

    pub fn from_index(mut index: usize, p: u32, n: usize) -> Self {
        let mut exps = vec![0u8; n];
        for slot in exps.iter_mut().rev() {
            *slot = (index % p as usize) as u8;
            index /= p as usize;
        }
        Self { exps }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, e) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}
