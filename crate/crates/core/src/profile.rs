//! Per-group cache of every quantity the theorem checks and reports need.

use std::sync::OnceLock;

use crate::central_aut::{
    autz_enumerate, equality_from_parts, hom_order, CentralAutomorphismSet, EqualityVerdict,
};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientGroup, RealizedGroup, Subgroup};
use crate::invariants::{
    abelian_type, frattini, is_purely_nonabelian, is_regular, lower_central_series,
    upper_central_series, AbelianType, CentralSeries, PureStatus,
};
use crate::pcp::log_p;

/// A realized group with its series and lazily computed expensive data.
/// The group and the cheap invariants are computed once at construction.
#[derive(Debug)]
pub struct GroupProfile {
    group: RealizedGroup,
    lower: CentralSeries,
    upper: CentralSeries,
    frattini: Subgroup,
    abelianization: AbelianType,
    center_type: AbelianType,
    autz: OnceLock<Result<CentralAutomorphismSet>>,
    purity: OnceLock<Result<PureStatus>>,
    regular: OnceLock<Result<bool>>,
}

impl GroupProfile {
    pub fn new(group: RealizedGroup) -> Result<Self> {
        let p = group.prime();
        let lower = lower_central_series(&group);
        let upper = upper_central_series(&group);
        let frattini = frattini(&group);
        let derived = lower
            .term(2)
            .cloned()
            .unwrap_or_else(|| Subgroup::trivial(group.order()));
        let abelianization = abelian_type(&QuotientGroup::new(&group, &derived)?, p)?;
        let center = upper.term(1).expect("Z1").clone();
        let center_type = abelian_type(&center.as_group(&group), p)?;
        Ok(Self {
            group,
            lower,
            upper,
            frattini,
            abelianization,
            center_type,
            autz: OnceLock::new(),
            purity: OnceLock::new(),
            regular: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &RealizedGroup {
        &self.group
    }

    pub fn name(&self) -> &str {
        self.group.name()
    }

    pub fn prime(&self) -> u32 {
        self.group.prime()
    }

    /// `n` with `|G| = p^n`.
    pub fn exponent_n(&self) -> usize {
        self.group.generator_count()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.class() <= 1
    }

    pub fn class(&self) -> usize {
        self.lower.class()
    }

    pub fn rank(&self) -> usize {
        log_p(
            (self.order() / self.frattini.order()) as u64,
            self.prime() as u64,
        )
        .expect("Frattini index is a power of p")
    }

    pub fn lower_series(&self) -> &CentralSeries {
        &self.lower
    }

    pub fn upper_series(&self) -> &CentralSeries {
        &self.upper
    }

    pub fn center(&self) -> &Subgroup {
        self.upper.term(1).expect("Z1")
    }

    /// `Z2(G)`, which is `G` itself in class at most 2.
    pub fn second_center(&self) -> &Subgroup {
        self.upper
            .term(2)
            .unwrap_or_else(|| self.upper.terms().last().expect("nonempty series"))
    }

    pub fn derived(&self) -> Subgroup {
        self.lower
            .term(2)
            .cloned()
            .unwrap_or_else(|| Subgroup::trivial(self.order()))
    }

    pub fn frattini(&self) -> &Subgroup {
        &self.frattini
    }

    /// Abelian type of `G/γ2(G)`.
    pub fn abelianization_type(&self) -> &AbelianType {
        &self.abelianization
    }

    pub fn center_type(&self) -> &AbelianType {
        &self.center_type
    }

    fn require_nonabelian(&self, what: &str) -> Result<()> {
        if self.is_abelian() {
            Err(Error::NotApplicable(format!(
                "{what} needs a non-abelian group"
            )))
        } else {
            Ok(())
        }
    }

    pub fn purity(&self) -> Result<PureStatus> {
        self.purity
            .get_or_init(|| is_purely_nonabelian(&self.group))
            .clone()
    }

    pub fn is_regular(&self) -> Result<bool> {
        self.regular.get_or_init(|| is_regular(&self.group)).clone()
    }

    pub fn autz(&self) -> Result<&CentralAutomorphismSet> {
        self.autz
            .get_or_init(|| autz_enumerate(&self.group))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `|Z(Inn(G))| = |Z2(G)/Z(G)|`.
    pub fn zinn_order(&self) -> Result<usize> {
        self.require_nonabelian("Z(Inn(G))")?;
        Ok(self.second_center().order() / self.center().order())
    }

    /// Abelian type of `Z2(G)/Z(G)`.
    pub fn zinn_type(&self) -> Result<AbelianType> {
        self.require_nonabelian("Z(Inn(G))")?;
        let z2 = self.second_center();
        let local = z2.as_group(&self.group);
        let z_local = Subgroup::from_elements(
            &local,
            self.center()
                .elements()
                .iter()
                .map(|&x| local.local_element(x).expect("Z <= Z2")),
        );
        abelian_type(&QuotientGroup::new(&local, &z_local)?, self.prime())
    }

    /// `|Hom(G/γ2(G), Z(G))|`; only meaningful as `|Aut_z(G)|` when the
    /// group is purely non-abelian.
    pub fn hom_count(&self) -> u64 {
        hom_order(&self.abelianization, &self.center_type)
    }

    /// The homomorphism count when the group is known to be purely
    /// non-abelian.
    pub fn formula(&self) -> Result<u64> {
        if self.purity()?.is_pure() {
            Ok(self.hom_count())
        } else {
            Err(Error::NotPurelyNonabelian)
        }
    }

    pub fn equality(&self) -> Result<EqualityVerdict> {
        let set = self.autz()?;
        let formula = match self.formula() {
            Ok(v) => Some(v),
            Err(Error::NotPurelyNonabelian | Error::ScopeExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(equality_from_parts(&self.group, set, formula))
    }
}
