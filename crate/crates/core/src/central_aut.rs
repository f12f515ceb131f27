//! Central automorphisms: exhaustive enumeration, the homomorphism-count
//! formula, and comparison with the center of the inner automorphism group.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{center, subgroup_closure, FiniteGroup, QuotientGroup, RealizedGroup, Subgroup};
use crate::invariants::{
    abelian_type, derived_subgroup, frattini, is_purely_nonabelian, upper_central_series,
    AbelianType,
};

/// Candidate-space bound for [`autz_enumerate`].
pub const AUTZ_CANDIDATE_LIMIT: u64 = 10_000_000;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `|Hom(A, B)| = prod_i prod_j gcd(a_i, b_j)`.
pub fn hom_order(a: &AbelianType, b: &AbelianType) -> u64 {
    a.factors()
        .iter()
        .flat_map(|&x| b.factors().iter().map(move |&y| gcd(x, y)))
        .product()
}

/// Counts homomorphisms `A -> B` by trying every assignment of images to a
/// generating set of `A` and checking that it extends.
pub fn count_homomorphisms<A, B>(a: &A, b: &B) -> u64
where
    A: FiniteGroup + ?Sized,
    B: FiniteGroup + ?Sized,
{
    let gens = minimal_generators(a);
    let mut count = 0;
    let mut images = vec![0usize; gens.len()];
    loop {
        if extend_to_homomorphism(a, b, &gens, &images).is_some() {
            count += 1;
        }
        // odometer over B^d
        let mut k = 0;
        loop {
            if k == images.len() {
                return count;
            }
            images[k] += 1;
            if images[k] < b.order() {
                break;
            }
            images[k] = 0;
            k += 1;
        }
    }
}

/// Greedy generating set: each step adds the element that enlarges the
/// closure most (least index on ties). Minimal for abelian p-groups, where a
/// cyclic subgroup of maximal order is a direct factor.
fn minimal_generators<G: FiniteGroup + ?Sized>(group: &G) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut current = subgroup_closure(group, []);
    while current.order() < group.order() {
        let (x, next) = (0..group.order())
            .filter(|&x| !current.contains(x))
            .map(|x| (x, subgroup_closure(group, gens.iter().copied().chain([x]))))
            .fold(None::<(usize, Subgroup)>, |best, (x, h)| match best {
                Some((_, ref b)) if b.order() >= h.order() => best,
                _ => Some((x, h)),
            })
            .expect("a proper subgroup misses some element");
        gens.push(x);
        current = next;
    }
    gens
}

/// Images of every element under the map `gens[i] -> images[i]`, when it
/// extends to a homomorphism. Checks `f(g x) = f(g) f(x)` along every edge of
/// the Cayley graph, which suffices since `gens` generates.
fn extend_to_homomorphism<A, B>(a: &A, b: &B, gens: &[usize], images: &[usize]) -> Option<Vec<u32>>
where
    A: FiniteGroup + ?Sized,
    B: FiniteGroup + ?Sized,
{
    const UNSET: u32 = u32::MAX;
    let mut map = vec![UNSET; a.order()];
    map[a.identity()] = b.identity() as u32;
    let mut queue = vec![a.identity()];
    let mut head = 0;
    while head < queue.len() {
        let g = queue[head];
        head += 1;
        let fg = map[g] as usize;
        for (&x, &fx) in gens.iter().zip(images) {
            let h = a.mul(g, x);
            let v = b.mul(fg, fx) as u32;
            if map[h] == UNSET {
                map[h] = v;
                queue.push(h);
            } else if map[h] != v {
                return None;
            }
        }
    }
    Some(map)
}

/// The fixed minimal generating sequence used to anchor central offsets:
/// the lexicographically least pc generators whose images span `G/Φ(G)`.
pub fn anchor_generators(group: &RealizedGroup) -> Vec<usize> {
    let phi = frattini(group);
    let mut chosen: Vec<usize> = Vec::new();
    let mut span = phi.clone();
    for i in 1..=group.generator_count() {
        let g = group.generator(i);
        if !span.contains(g) {
            chosen.push(g);
            span = subgroup_closure(group, phi.generators().iter().chain(chosen.iter()).copied());
        }
    }
    chosen
}

/// A central automorphism `xi -> xi zi` on the anchor generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralAutomorphism {
    offsets: Vec<usize>,
    images: Vec<u32>,
}

impl CentralAutomorphism {
    /// Central offsets `zi`, one per anchor generator.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// The automorphism as a permutation of the element indices.
    pub fn images(&self) -> &[u32] {
        &self.images
    }
}

/// All central automorphisms, sorted by offset tuple.
#[derive(Debug, Clone)]
pub struct CentralAutomorphismSet {
    generators: Vec<usize>,
    automorphisms: Vec<CentralAutomorphism>,
}

impl CentralAutomorphismSet {
    pub fn order(&self) -> usize {
        self.automorphisms.len()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn automorphisms(&self) -> &[CentralAutomorphism] {
        &self.automorphisms
    }

    pub fn position(&self, offsets: &[usize]) -> Option<usize> {
        self.automorphisms
            .binary_search_by(|a| a.offsets.as_slice().cmp(offsets))
            .ok()
    }

    pub fn contains_offsets(&self, offsets: &[usize]) -> bool {
        self.position(offsets).is_some()
    }

    fn offsets_of(&self, group: &RealizedGroup, images: &[u32]) -> Vec<usize> {
        self.generators
            .iter()
            .map(|&x| group.mul(group.inv(x), images[x] as usize))
            .collect()
    }

    /// Index of `a ∘ b` (apply `b` first), if present.
    pub fn compose(&self, group: &RealizedGroup, a: usize, b: usize) -> Option<usize> {
        let (fa, fb) = (&self.automorphisms[a], &self.automorphisms[b]);
        let images: Vec<u32> = fb.images.iter().map(|&y| fa.images[y as usize]).collect();
        self.position(&self.offsets_of(group, &images))
    }

    /// Composition table `table[a][b] = a ∘ b`.
    pub fn composition_table(&self, group: &RealizedGroup) -> Vec<Vec<Option<usize>>> {
        (0..self.order())
            .map(|a| {
                (0..self.order())
                    .map(|b| self.compose(group, a, b))
                    .collect()
            })
            .collect()
    }

    /// Offset tuple of conjugation by `x` (`g -> x^-1 g x`), i.e. `[xi, x]`.
    pub fn conjugation_offsets(&self, group: &RealizedGroup, x: usize) -> Vec<usize> {
        self.generators
            .iter()
            .map(|&g| group.commutator(g, x))
            .collect()
    }
}

/// Enumerates `Aut_z(G)` by trying every tuple of central offsets on the
/// anchor generators and keeping the maps that extend to bijective
/// endomorphisms.
pub fn autz_enumerate(group: &RealizedGroup) -> Result<CentralAutomorphismSet> {
    if group.is_abelian() {
        return Err(Error::NotApplicable(
            "every automorphism of an abelian group is central".into(),
        ));
    }
    let z = center(group);
    let gens = anchor_generators(group);
    let d = gens.len();
    let candidates = (z.order() as u64)
        .checked_pow(d as u32)
        .filter(|&c| c <= AUTZ_CANDIDATE_LIMIT)
        .ok_or(Error::ScopeExceeded {
            what: "central automorphism candidates",
            actual: (z.order() as u64).saturating_pow(d as u32),
            limit: AUTZ_CANDIDATE_LIMIT,
        })?;

    let zelems = z.elements();
    let automorphisms: Vec<CentralAutomorphism> = (0..candidates)
        .into_par_iter()
        .filter_map(|code| {
            let mut rest = code as usize;
            let mut offsets = vec![0usize; d];
            for slot in offsets.iter_mut().rev() {
                *slot = zelems[rest % zelems.len()];
                rest /= zelems.len();
            }
            let targets: Vec<usize> = gens
                .iter()
                .zip(&offsets)
                .map(|(&x, &zx)| group.mul(x, zx))
                .collect();
            let images = extend_to_homomorphism(group, group, &gens, &targets)?;
            let mut hit = FixedBitSet::with_capacity(group.order());
            for &y in &images {
                hit.insert(y as usize);
            }
            (hit.count_ones(..) == group.order()).then_some(CentralAutomorphism { offsets, images })
        })
        .collect();

    // zelems is sorted, so code order is lexicographic offset order
    debug_assert!(automorphisms
        .windows(2)
        .all(|w| w[0].offsets < w[1].offsets));
    Ok(CentralAutomorphismSet {
        generators: gens,
        automorphisms,
    })
}

/// `|Z(Inn(G))| = |Z2(G) / Z(G)|`.
pub fn z_inn_order(group: &RealizedGroup) -> Result<usize> {
    if group.is_abelian() {
        return Err(Error::NotApplicable(
            "Inn(G) is trivial for abelian G".into(),
        ));
    }
    let upper = upper_central_series(group);
    let z1 = upper.term(1).expect("Z1");
    let z2 = upper.term(2).expect("non-abelian group has Z2");
    Ok(z2.order() / z1.order())
}

/// `|Hom(G/γ2(G), Z(G))|`, which equals `|Aut_z(G)|` for purely non-abelian `G`.
pub fn adney_yen_order(group: &RealizedGroup) -> Result<u64> {
    if !is_purely_nonabelian(group)?.is_pure() {
        return Err(Error::NotPurelyNonabelian);
    }
    let (abelianization, center_type) = hom_types(group)?;
    Ok(hom_order(&abelianization, &center_type))
}

/// Abelian types of `G/γ2(G)` and `Z(G)`.
pub fn hom_types(group: &RealizedGroup) -> Result<(AbelianType, AbelianType)> {
    let p = group.prime();
    let derived = derived_subgroup(group);
    let quotient = QuotientGroup::new(group, &derived)?;
    let z = center(group);
    Ok((
        abelian_type(&quotient, p)?,
        abelian_type(&z.as_group(group), p)?,
    ))
}

/// Whether `Aut_z(G) = Z(Inn(G))`, decided by comparing orders, together with
/// an explicit check that conjugation by every element of `Z2(G)` is among
/// the enumerated central automorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityVerdict {
    pub autz_enumerated: usize,
    pub autz_formula: Option<u64>,
    pub zinn_order: usize,
    pub equal: bool,
    pub containment_witness: bool,
}

pub fn autz_equals_zinn(group: &RealizedGroup) -> Result<EqualityVerdict> {
    let set = autz_enumerate(group)?;
    let formula = match adney_yen_order(group) {
        Ok(v) => Some(v),
        Err(Error::NotPurelyNonabelian) | Err(Error::ScopeExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(equality_from_parts(group, &set, formula))
}

pub(crate) fn equality_from_parts(
    group: &RealizedGroup,
    set: &CentralAutomorphismSet,
    formula: Option<u64>,
) -> EqualityVerdict {
    let upper = upper_central_series(group);
    let z1 = upper.term(1).expect("Z1");
    let z2 = upper.term(2).expect("Z2");
    let zinn = z2.order() / z1.order();
    let witness = containment_witness(group, set, z2);
    EqualityVerdict {
        autz_enumerated: set.order(),
        autz_formula: formula,
        zinn_order: zinn,
        equal: set.order() == zinn,
        containment_witness: witness,
    }
}

fn containment_witness(group: &RealizedGroup, set: &CentralAutomorphismSet, z2: &Subgroup) -> bool {
    z2.elements()
        .iter()
        .all(|&x| set.contains_offsets(&set.conjugation_offsets(group, x)))
}

/// Whether the enumerated central automorphisms coincide with `Inn(G)` as
/// sets of permutations.
pub fn autz_equals_inn(group: &RealizedGroup, set: &CentralAutomorphismSet) -> bool {
    let mut inner: Vec<Vec<usize>> = Vec::new();
    for x in 0..group.order() {
        let offsets = set.conjugation_offsets(group, x);
        match set.position(&offsets) {
            Some(pos) => {
                // offsets fix the map on generators; confirm the full action
                let aut = &set.automorphisms()[pos];
                if (0..group.order()).any(|g| aut.apply(g) != group.conjugate(g, x)) {
                    return false;
                }
            }
            None => return false,
        }
        inner.push(offsets);
    }
    inner.sort();
    inner.dedup();
    inner.len() == set.order()
}

/// Whether every central automorphism fixes each element of `h`.
pub fn fixes_pointwise(set: &CentralAutomorphismSet, h: &Subgroup) -> bool {
    set.automorphisms()
        .iter()
        .all(|a| h.elements().iter().all(|&x| a.apply(x) == x))
}

/// Subgroup generated by the offsets of all central automorphisms, for
/// diagnostics.
pub fn offset_subgroup(group: &RealizedGroup, set: &CentralAutomorphismSet) -> Subgroup {
    subgroup_closure(
        group,
        set.automorphisms()
            .iter()
            .flat_map(|a| a.offsets().iter().copied()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::realize;
    use crate::pcp::{parse_presentation, PcPresentation};

    fn heisenberg() -> RealizedGroup {
        realize(&parse_presentation("name heis\nprime 3\ngens 3\ncomm 2 1 = 3:1\n").unwrap())
            .unwrap()
    }

    fn t(f: &[u64]) -> AbelianType {
        AbelianType::new(3, f.to_vec()).unwrap()
    }

    #[test]
    fn hom_order_examples() {
        assert_eq!(hom_order(&t(&[3]), &t(&[3])), 3);
        assert_eq!(hom_order(&t(&[9, 3]), &t(&[3])), 9);
        assert_eq!(hom_order(&t(&[9, 3]), &t(&[9])), 27);
        assert_eq!(hom_order(&t(&[]), &t(&[9])), 1);
    }

    #[test]
    fn brute_force_hom_count() {
        let a = realize(&PcPresentation::abelian("a", 3, &[9, 3]).unwrap()).unwrap();
        let b = realize(&PcPresentation::abelian("b", 3, &[9]).unwrap()).unwrap();
        assert_eq!(count_homomorphisms(&a, &b), 27);
    }

    #[test]
    fn heisenberg_central_automorphisms() {
        let g = heisenberg();
        let set = autz_enumerate(&g).unwrap();
        assert_eq!(set.order(), 9);
        assert!(autz_equals_inn(&g, &set));
        assert_eq!(adney_yen_order(&g).unwrap(), 9);
        assert_eq!(z_inn_order(&g).unwrap(), 9);
        let v = autz_equals_zinn(&g).unwrap();
        assert!(v.equal && v.containment_witness);
        assert!(fixes_pointwise(&set, &derived_subgroup(&g)));
    }

    #[test]
    fn abelian_rejected() {
        let g = realize(&PcPresentation::abelian("a", 3, &[9]).unwrap()).unwrap();
        assert!(matches!(autz_enumerate(&g), Err(Error::NotApplicable(_))));
        assert!(matches!(z_inn_order(&g), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn composition_closed() {
        let g = heisenberg();
        let set = autz_enumerate(&g).unwrap();
        let table = set.composition_table(&g);
        assert!(table.iter().flatten().all(Option::is_some));
        let identity = set.position(&[0, 0]).unwrap();
        for (a, &product) in table[identity].iter().enumerate() {
            assert_eq!(product, Some(a));
        }
    }
}
