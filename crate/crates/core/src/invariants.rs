//! Structural invariants of finite p-groups.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{
    all_subgroups, center, commutator_subgroup, maximal_subgroups, normal_closure,
    subgroup_closure, FiniteGroup, RealizedGroup, Subgroup,
};
use crate::pcp::log_p;

/// Cyclic decomposition `C_{c1} x C_{c2} x ...` of an abelian p-group, with
/// `c1 >= c2 >= ...` all powers of `p`. The trivial group has no factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianType {
    p: u32,
    factors: Vec<u64>,
}

impl AbelianType {
    pub fn new(p: u32, mut factors: Vec<u64>) -> Result<Self> {
        for &c in &factors {
            match log_p(c, p as u64) {
                Some(a) if a > 0 => {}
                _ => {
                    return Err(Error::Index {
                        line: None,
                        message: format!("cyclic factor {c} is not a nontrivial power of {p}"),
                    })
                }
            }
        }
        factors.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { p, factors })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// Number of cyclic factors (the rank of the abelian group).
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }
}

impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Abelian type from the profile `N_k = |{x : x^(p^k) = 1}|`: for
/// `A = prod C_(p^a_i)`, `log_p N_k - log_p N_(k-1)` counts the factors with
/// `a_i >= k`.
pub fn abelian_type<G: FiniteGroup + ?Sized>(group: &G, p: u32) -> Result<AbelianType> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let mut counts = vec![1usize];
    // powers[x] = x^(p^k) for the current k
    let mut powers: Vec<usize> = (0..group.order()).collect();
    while *counts.last().unwrap() < group.order() {
        for x in powers.iter_mut() {
            *x = group.pow(*x, p as u64);
        }
        counts.push(powers.iter().filter(|&&x| x == group.identity()).count());
    }
    let logs: Vec<usize> = counts
        .iter()
        .map(|&c| log_p(c as u64, p as u64).expect("counts in a p-group are powers of p"))
        .collect();
    let at_least: Vec<usize> = logs.windows(2).map(|w| w[1] - w[0]).collect();
    let mut factors = Vec::new();
    for (k, &m) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        for _ in 0..m - next {
            factors.push((p as u64).pow(k as u32 + 1));
        }
    }
    AbelianType::new(p, factors)
}

/// A central series as an explicit chain of subgroups.
#[derive(Debug, Clone)]
pub struct CentralSeries {
    terms: Vec<Subgroup>,
    // index of terms[0]: 1 for the lower series (γ1), 0 for the upper (Z0)
    first_index: usize,
}

impl CentralSeries {
    /// For the lower series `G = γ1 > γ2 > ... > γ(c+1) = 1`; for the upper
    /// series `1 = Z0 < Z1 < ... < Zc = G`.
    pub fn terms(&self) -> &[Subgroup] {
        &self.terms
    }

    /// Nilpotency class: the number of proper steps in the chain.
    pub fn class(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }

    /// `γi` for the lower series (from `i = 1`), `Zi` for the upper series
    /// (from `i = 0`).
    pub fn term(&self, i: usize) -> Option<&Subgroup> {
        i.checked_sub(self.first_index)
            .and_then(|k| self.terms.get(k))
    }
}

/// `γ1 = G`, `γ(i+1) = [γi, G]`, down to the trivial group.
pub fn lower_central_series(group: &RealizedGroup) -> CentralSeries {
    let whole = Subgroup::whole(group);
    let mut terms = vec![whole.clone()];
    while !terms.last().unwrap().is_trivial() {
        let next = commutator_subgroup(group, terms.last().unwrap(), &whole);
        assert!(
            next.order() < terms.last().unwrap().order(),
            "lower central series stalled; group is not nilpotent"
        );
        terms.push(next);
    }
    CentralSeries {
        terms,
        first_index: 1,
    }
}

/// `Z0 = 1`, `Z(i+1) = { g : [g, x] in Zi for every generator x }`.
pub fn upper_central_series(group: &RealizedGroup) -> CentralSeries {
    let gens = group.generators();
    let mut terms = vec![Subgroup::trivial(group.order())];
    while terms.last().unwrap().order() < group.order() {
        let prev = terms.last().unwrap();
        let elems = (0..group.order())
            .filter(|&g| gens.iter().all(|&x| prev.contains(group.commutator(g, x))));
        let next = Subgroup::from_elements(group, elems);
        assert!(
            next.order() > prev.order(),
            "upper central series stalled; group is not nilpotent"
        );
        terms.push(next);
    }
    CentralSeries {
        terms,
        first_index: 0,
    }
}

/// `γ2(G) = [G, G]`.
pub fn derived_subgroup(group: &RealizedGroup) -> Subgroup {
    let whole = Subgroup::whole(group);
    commutator_subgroup(group, &whole, &whole)
}

/// `Ω1(G) = <x : x^p = 1>`.
pub fn omega1(group: &RealizedGroup) -> Subgroup {
    let p = group.prime() as u64;
    subgroup_closure(
        group,
        (0..group.order()).filter(|&x| group.pow(x, p) == group.identity()),
    )
}

/// `℧1(G) = <x^p : x in G>`.
pub fn agemo1(group: &RealizedGroup) -> Subgroup {
    let p = group.prime() as u64;
    let mut seen = FixedBitSet::with_capacity(group.order());
    let powers: Vec<usize> = (0..group.order())
        .map(|x| group.pow(x, p))
        .filter(|&y| !seen.put(y))
        .collect();
    subgroup_closure(group, powers)
}

/// `Φ(G) = ℧1(G) γ2(G)`.
pub fn frattini(group: &RealizedGroup) -> Subgroup {
    agemo1(group).join(group, &derived_subgroup(group))
}

/// Largest order at which [`frattini_by_maximal_subgroups`] runs.
pub fn maximal_subgroup_oracle_limit(p: u32) -> usize {
    (p as usize).pow(4)
}

/// `Φ(G)` as the intersection of all maximal subgroups, found by lattice
/// enumeration. Only for `|G| <= p^4`.
pub fn frattini_by_maximal_subgroups(group: &RealizedGroup) -> Result<Subgroup> {
    let limit = maximal_subgroup_oracle_limit(group.prime());
    if group.order() > limit {
        return Err(Error::ScopeExceeded {
            what: "maximal-subgroup Frattini oracle",
            actual: group.order() as u64,
            limit: limit as u64,
        });
    }
    let maximal = maximal_subgroups(group, group.prime())?;
    let mut common = Subgroup::whole(group);
    for m in &maximal {
        common = common.intersection(group, m);
    }
    Ok(common)
}

/// `d(G) = log_p |G / Φ(G)|`.
pub fn rank(group: &RealizedGroup) -> usize {
    let phi = frattini(group);
    log_p((group.order() / phi.order()) as u64, group.prime() as u64)
        .expect("index of Frattini subgroup is a power of p")
}

/// Whether a subgroup is cyclic, as a group in its own right.
pub fn is_cyclic_subgroup(group: &RealizedGroup, h: &Subgroup) -> bool {
    h.elements()
        .iter()
        .any(|&x| crate::group::element_order(group, x) as usize == h.order())
}

/// Largest order at which [`is_regular`] runs.
pub const REGULARITY_ORDER_LIMIT: usize = 3125;

/// Regularity: for every pair `(x, y)` some `z` in `γ2(<x, y>)` satisfies
/// `x^p y^p = (xy)^p z^p`.
pub fn is_regular(group: &RealizedGroup) -> Result<bool> {
    if group.order() > REGULARITY_ORDER_LIMIT {
        return Err(Error::ScopeExceeded {
            what: "regularity check",
            actual: group.order() as u64,
            limit: REGULARITY_ORDER_LIMIT as u64,
        });
    }
    let p = group.prime() as u64;
    let ord = group.order();
    let pth: Vec<usize> = (0..ord).map(|x| group.pow(x, p)).collect();

    // Necessary condition: the defect must be a p-th power of an element of γ2(G).
    let derived = derived_subgroup(group);
    let mut global_powers = FixedBitSet::with_capacity(ord);
    for &z in derived.elements() {
        global_powers.insert(pth[z]);
    }

    // p-th powers of γ2(H), keyed by the element set of H = <x, y>
    let mut cache: HashMap<FixedBitSet, FixedBitSet> = HashMap::new();
    for x in 0..ord {
        for y in 0..ord {
            let lhs = group.mul(pth[x], pth[y]);
            let defect = group.mul(group.inv(pth[group.mul(x, y)]), lhs);
            if defect == group.identity() {
                continue;
            }
            if !global_powers.contains(defect) {
                return Ok(false);
            }
            // <[x, y]> lies in γ2(<x, y>), so its p-th powers are witnesses too
            if in_cyclic(group, pth[group.commutator(x, y)], defect) {
                continue;
            }
            let h = subgroup_closure(group, [x, y]);
            let powers = cache.entry(h.members().clone()).or_insert_with(|| {
                let comm = group.commutator(x, y);
                // γ2(H) is the normal closure in H of [x, y]
                let hg = h.as_group(group);
                let local = hg.local_element(comm).expect("commutator lies in H");
                let derived_h = normal_closure(&hg, [local]);
                let mut set = FixedBitSet::with_capacity(ord);
                for &z in derived_h.elements() {
                    set.insert(pth[hg.parent_element(z)]);
                }
                set
            });
            if !powers.contains(defect) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn in_cyclic(group: &RealizedGroup, generator: usize, target: usize) -> bool {
    let mut y = generator;
    loop {
        if y == target {
            return true;
        }
        if y == group.identity() {
            return false;
        }
        y = group.mul(y, generator);
    }
}

/// Whether `[x^(p^i), y^(p^j)] = 1` agrees with `[x, y]^(p^(i+j)) = 1` for all
/// `x, y` and `i, j` in `{0, 1, 2}`. Requires a regular group.
pub fn regular_power_lemma_check(group: &RealizedGroup) -> Result<bool> {
    if !is_regular(group)? {
        return Err(Error::NotRegular);
    }
    Ok(power_lemma_holds(group))
}

/// [`regular_power_lemma_check`] without the regularity precondition.
pub(crate) fn power_lemma_holds(group: &RealizedGroup) -> bool {
    let p = group.prime() as u64;
    let ord = group.order();
    // pows[k][x] = x^(p^k), k = 0..=4
    let mut pows: Vec<Vec<usize>> = vec![(0..ord).collect()];
    for k in 1..=4 {
        let prev = &pows[k - 1];
        pows.push(prev.iter().map(|&x| group.pow(x, p)).collect());
    }
    for x in 0..ord {
        for y in 0..ord {
            let c = group.commutator(x, y);
            for i in 0..=2 {
                for j in 0..=2 {
                    let left = group.commutator(pows[i][x], pows[j][y]) == group.identity();
                    let right = pows[i + j][c] == group.identity();
                    if left != right {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Outcome of the purely-non-abelian test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PureStatus {
    /// No abelian direct factor, found by exhaustive search.
    True,
    /// Has a nontrivial abelian direct factor.
    False,
    /// `Z(G) <= Φ(G)`, which rules out an abelian direct factor.
    TrueBySufficientCondition,
}

impl PureStatus {
    pub fn is_pure(self) -> bool {
        !matches!(self, PureStatus::False)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PureStatus::True => "true",
            PureStatus::False => "false",
            PureStatus::TrueBySufficientCondition => "true_by_sufficient_condition",
        }
    }
}

impl fmt::Display for PureStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Decides whether a non-abelian group has no nontrivial abelian direct
/// factor. Uses `Z(G) <= Φ(G)` first; otherwise searches for `G = <a> x B`
/// with `a` central (any abelian factor contains a cyclic one), which is
/// only attempted for `|G| <= p^4`.
pub fn is_purely_nonabelian(group: &RealizedGroup) -> Result<PureStatus> {
    if group.is_abelian() {
        return Err(Error::NotApplicable(
            "purely non-abelian is defined for non-abelian groups".into(),
        ));
    }
    let z = center(group);
    if z.is_subgroup_of(&frattini(group)) {
        return Ok(PureStatus::TrueBySufficientCondition);
    }
    Ok(if has_abelian_direct_factor(group)? {
        PureStatus::False
    } else {
        PureStatus::True
    })
}

/// Exhaustive search for `G = <a> x B` with `a` central and nontrivial.
/// Only for `|G| <= p^4`.
pub fn has_abelian_direct_factor(group: &RealizedGroup) -> Result<bool> {
    let limit = (group.prime() as usize).pow(4);
    if group.order() > limit {
        return Err(Error::ScopeExceeded {
            what: "exhaustive direct-factor search",
            actual: group.order() as u64,
            limit: limit as u64,
        });
    }
    let z = center(group);
    let subgroups = all_subgroups(group)?;
    for &a in z.elements().iter().filter(|&&a| a != 0) {
        let cyc = subgroup_closure(group, [a]);
        let target = group.order() / cyc.order();
        let found = subgroups.iter().any(|b| {
            b.order() == target && cyc.intersection(group, b).is_trivial() && b.is_normal(group)
        });
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}
