//! Executable checks of the characterizations of `Aut_z(G) = Z(Inn(G))`.
//! Every check returns a [`TheoremVerdict`]; a failed hypothesis is a
//! verdict, not an error.

use std::fmt;
use std::str::FromStr;

use crate::central_aut::autz_equals_inn;
use crate::error::{Error, Result};
use crate::group::subgroup_closure;
use crate::profile::GroupProfile;

/// The checks exposed on the command line. `as_str` gives the CLI id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// Equality forces `Z <= γ2` and a non-cyclic `Z(Inn)`.
    NecessaryConditions,
    /// Order `p^4`, rank 2, `|γ2| = p` gives `Z = Φ` of order `p^2`.
    OrderP4RankTwo,
    /// Order `p^5`, class 3: equality iff `d = 2` and `|Z| = p`.
    OrderP5ClassThree,
    /// Odd `p`, order `p^6`, class 3 or 4: equality iff `d = 2` and `|Z| = p`.
    OrderP6ClassThreeOrFour,
    /// `Aut_z = Inn` iff `γ2 = Z` and `Z` is cyclic.
    CentralEqualsInner,
    /// Class 2 gives `Z2 = G`; maximal class gives `|Z(Inn)| = p < |Aut_z|`.
    ClassObservations,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::NecessaryConditions,
        TheoremId::OrderP4RankTwo,
        TheoremId::OrderP5ClassThree,
        TheoremId::OrderP6ClassThreeOrFour,
        TheoremId::CentralEqualsInner,
        TheoremId::ClassObservations,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::NecessaryConditions => "lemma2.1",
            TheoremId::OrderP4RankTwo => "lemma3.1",
            TheoremId::OrderP5ClassThree => "thm3.2",
            TheoremId::OrderP6ClassThreeOrFour => "thm3.3",
            TheoremId::CentralEqualsInner => "curran-mccaughan",
            TheoremId::ClassObservations => "observations",
        }
    }

    /// One-line statement of the claim being checked.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::NecessaryConditions => {
                "Aut_z = Z(Inn) implies Z <= gamma2 and Z(Inn) non-cyclic"
            }
            TheoremId::OrderP4RankTwo => {
                "|G| = p^4, d = 2, |gamma2| = p implies Z = Phi and |Z| = p^2"
            }
            TheoremId::OrderP5ClassThree => {
                "|G| = p^5, class 3: Aut_z = Z(Inn) iff d = 2 and |Z| = p"
            }
            TheoremId::OrderP6ClassThreeOrFour => {
                "p odd, |G| = p^6, class 3 or 4: Aut_z = Z(Inn) iff d = 2 and |Z| = p"
            }
            TheoremId::CentralEqualsInner => "Aut_z = Inn iff gamma2 = Z and Z cyclic",
            TheoremId::ClassObservations => {
                "class 2 implies Z2 = G; maximal class implies |Z(Inn)| = p < |Aut_z|"
            }
        }
    }

    pub fn check(self, profile: &GroupProfile) -> Result<TheoremVerdict> {
        match self {
            TheoremId::NecessaryConditions => check_necessary_conditions(profile),
            TheoremId::OrderP4RankTwo => Ok(check_order_p4_rank_two(profile)),
            TheoremId::OrderP5ClassThree => check_order_p5_class_three(profile),
            TheoremId::OrderP6ClassThreeOrFour => check_order_p6_class_three_or_four(profile),
            TheoremId::CentralEqualsInner => check_central_equals_inner(profile),
            TheoremId::ClassObservations => check_class_observations(profile),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A theorem id or `all`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremSelection {
    One(TheoremId),
    All,
}

impl TheoremSelection {
    pub fn ids(self) -> Vec<TheoremId> {
        match self {
            TheoremSelection::One(id) => vec![id],
            TheoremSelection::All => TheoremId::ALL.to_vec(),
        }
    }
}

impl FromStr for TheoremSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(TheoremSelection::All);
        }
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .map(TheoremSelection::One)
            .ok_or_else(|| Error::UnknownTheoremId(s.to_string()))
    }
}

/// How `pass` is derived from the two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    /// `pass = (left <=> right)`.
    Biconditional,
    /// `pass = (left => right)`.
    Implication,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applicability {
    Applicable,
    /// The first hypothesis that failed.
    Inapplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub id: TheoremId,
    pub group: String,
    pub kind: VerdictKind,
    pub applicability: Applicability,
    pub left: bool,
    pub right: bool,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl TheoremVerdict {
    fn applicable(
        id: TheoremId,
        profile: &GroupProfile,
        kind: VerdictKind,
        left: bool,
        right: bool,
        notes: Vec<String>,
    ) -> Self {
        let pass = match kind {
            VerdictKind::Biconditional => left == right,
            VerdictKind::Implication => !left || right,
        };
        Self {
            id,
            group: profile.name().to_string(),
            kind,
            applicability: Applicability::Applicable,
            left,
            right,
            pass,
            notes,
        }
    }

    fn inapplicable(id: TheoremId, profile: &GroupProfile, reason: String) -> Self {
        Self {
            id,
            group: profile.name().to_string(),
            kind: VerdictKind::Implication,
            applicability: Applicability::Inapplicable(reason),
            left: false,
            right: false,
            pass: true,
            notes: Vec::new(),
        }
    }

    pub fn is_applicable(&self) -> bool {
        self.applicability == Applicability::Applicable
    }

    pub fn failed_hypothesis(&self) -> Option<&str> {
        match &self.applicability {
            Applicability::Applicable => None,
            Applicability::Inapplicable(reason) => Some(reason),
        }
    }
}

fn p_power(profile: &GroupProfile, k: u32) -> usize {
    (profile.prime() as usize).pow(k)
}

fn require_order(profile: &GroupProfile, k: u32) -> Option<String> {
    (profile.exponent_n() != k as usize).then(|| format!("|G| = {} is not p^{k}", profile.order()))
}

/// Rank 2 and `|Z| = p`, the right-hand side of the order-`p^5` and
/// order-`p^6` characterizations.
fn rank_two_small_center(profile: &GroupProfile) -> (bool, String) {
    let holds = profile.rank() == 2 && profile.center().order() == p_power(profile, 1);
    (
        holds,
        format!("d = {}, |Z| = {}", profile.rank(), profile.center().order()),
    )
}

fn equality_note(profile: &GroupProfile) -> Result<(bool, String)> {
    let v = profile.equality()?;
    if !v.containment_witness {
        return Err(Error::InconsistentPresentation {
            name: profile.name().to_string(),
            message: "an inner automorphism from Z2 is missing from Aut_z".into(),
        });
    }
    Ok((
        v.equal,
        format!(
            "|Aut_z| = {}, |Z(Inn)| = {}",
            v.autz_enumerated, v.zinn_order
        ),
    ))
}

pub fn check_order_p5_class_three(profile: &GroupProfile) -> Result<TheoremVerdict> {
    let id = TheoremId::OrderP5ClassThree;
    if let Some(reason) = require_order(profile, 5) {
        return Ok(TheoremVerdict::inapplicable(id, profile, reason));
    }
    if profile.class() != 3 {
        let reason = format!("class {} is not 3", profile.class());
        return Ok(TheoremVerdict::inapplicable(id, profile, reason));
    }
    let (left, left_note) = equality_note(profile)?;
    let (right, right_note) = rank_two_small_center(profile);
    Ok(TheoremVerdict::applicable(
        id,
        profile,
        VerdictKind::Biconditional,
        left,
        right,
        vec![left_note, right_note],
    ))
}

pub fn check_order_p6_class_three_or_four(profile: &GroupProfile) -> Result<TheoremVerdict> {
    let id = TheoremId::OrderP6ClassThreeOrFour;
    if profile.prime() == 2 {
        return Ok(TheoremVerdict::inapplicable(
            id,
            profile,
            "p = 2 is not odd".into(),
        ));
    }
    if let Some(reason) = require_order(profile, 6) {
        return Ok(TheoremVerdict::inapplicable(id, profile, reason));
    }
    if !(3..=4).contains(&profile.class()) {
        let reason = format!("class {} is not 3 or 4", profile.class());
        return Ok(TheoremVerdict::inapplicable(id, profile, reason));
    }
    let (left, left_note) = equality_note(profile)?;
    let (right, right_note) = rank_two_small_center(profile);
    Ok(TheoremVerdict::applicable(
        id,
        profile,
        VerdictKind::Biconditional,
        left,
        right,
        vec![left_note, right_note],
    ))
}

pub fn check_order_p4_rank_two(profile: &GroupProfile) -> TheoremVerdict {
    let id = TheoremId::OrderP4RankTwo;
    if let Some(reason) = require_order(profile, 4) {
        return TheoremVerdict::inapplicable(id, profile, reason);
    }
    if profile.rank() != 2 {
        return TheoremVerdict::inapplicable(
            id,
            profile,
            format!("d = {} is not 2", profile.rank()),
        );
    }
    let derived = profile.derived();
    if derived.order() != p_power(profile, 1) {
        let reason = format!("|gamma2| = {} is not p", derived.order());
        return TheoremVerdict::inapplicable(id, profile, reason);
    }
    let z = profile.center();
    let right = z == profile.frattini() && z.order() == p_power(profile, 2);
    TheoremVerdict::applicable(
        id,
        profile,
        VerdictKind::Implication,
        true,
        right,
        vec![format!(
            "|Z| = {}, |Phi| = {}, Z = Phi: {}",
            z.order(),
            profile.frattini().order(),
            z == profile.frattini()
        )],
    )
}

/// Whether `Z2/Z` is cyclic, by looking for `x` with `<x, Z> = Z2`.
fn zinn_is_cyclic(profile: &GroupProfile) -> bool {
    let group = profile.group();
    let z = profile.center();
    let z2 = profile.second_center();
    z2.elements().iter().any(|&x| {
        subgroup_closure(group, z.generators().iter().copied().chain([x])).order() == z2.order()
    })
}

pub fn check_necessary_conditions(profile: &GroupProfile) -> Result<TheoremVerdict> {
    let id = TheoremId::NecessaryConditions;
    if profile.is_abelian() {
        return Ok(TheoremVerdict::inapplicable(
            id,
            profile,
            "G is abelian".into(),
        ));
    }
    let (equal, note) = equality_note(profile)?;
    if !equal {
        return Ok(TheoremVerdict::inapplicable(
            id,
            profile,
            format!("Aut_z != Z(Inn) ({note})"),
        ));
    }
    let in_derived = profile.center().is_subgroup_of(&profile.derived());
    let noncyclic = !zinn_is_cyclic(profile);
    Ok(TheoremVerdict::applicable(
        id,
        profile,
        VerdictKind::Implication,
        true,
        in_derived && noncyclic,
        vec![
            note,
            format!(
                "Z <= gamma2: {in_derived}, Z(Inn) type {}",
                profile.zinn_type()?
            ),
        ],
    ))
}

pub fn check_central_equals_inner(profile: &GroupProfile) -> Result<TheoremVerdict> {
    let id = TheoremId::CentralEqualsInner;
    if profile.is_abelian() {
        return Ok(TheoremVerdict::inapplicable(
            id,
            profile,
            "G is abelian".into(),
        ));
    }
    let set = profile.autz()?;
    let left = autz_equals_inn(profile.group(), set);
    let z = profile.center();
    let derived = profile.derived();
    let z_cyclic = profile.center_type().is_cyclic();
    let right = &derived == z && z_cyclic;
    Ok(TheoremVerdict::applicable(
        id,
        profile,
        VerdictKind::Biconditional,
        left,
        right,
        vec![
            format!(
                "|Aut_z| = {}, |Inn| = {}",
                set.order(),
                profile.order() / z.order()
            ),
            format!("gamma2 = Z: {}, Z cyclic: {z_cyclic}", &derived == z),
        ],
    ))
}

/// Class 2 requires `Z2 = G`. Maximal class (`cl = n - 1`) requires
/// `|Z(Inn)| = p` and `|Aut_z| > p`; that branch needs `n >= 4`, since the
/// non-abelian groups of order `p^3` have `Z(Inn) = Inn` of order `p^2`.
pub fn check_class_observations(profile: &GroupProfile) -> Result<TheoremVerdict> {
    let id = TheoremId::ClassObservations;
    if profile.is_abelian() {
        return Ok(TheoremVerdict::inapplicable(
            id,
            profile,
            "G is abelian".into(),
        ));
    }
    let n = profile.exponent_n();
    let class = profile.class();
    let p = p_power(profile, 1);
    if class == 2 {
        let z2 = profile.second_center();
        let right = z2.order() == profile.order();
        return Ok(TheoremVerdict::applicable(
            id,
            profile,
            VerdictKind::Implication,
            true,
            right,
            vec![format!("class 2: |Z2| = {}", z2.order())],
        ));
    }
    if n >= 4 && class == n - 1 {
        let zinn = profile.zinn_order()?;
        let autz = profile.autz()?.order();
        return Ok(TheoremVerdict::applicable(
            id,
            profile,
            VerdictKind::Implication,
            true,
            zinn == p && autz > p,
            vec![format!(
                "maximal class: |Z(Inn)| = {zinn}, |Aut_z| = {autz}"
            )],
        ));
    }
    Ok(TheoremVerdict::inapplicable(
        id,
        profile,
        format!("class {class} is neither 2 nor maximal for |G| = p^{n}"),
    ))
}

/// Groups where both necessary conditions (`Z <= γ2`, `Z(Inn)` non-cyclic)
/// hold yet `Aut_z != Z(Inn)`. Non-abelian groups whose enumeration is out
/// of scope are skipped.
pub fn non_sufficiency_witnesses(profiles: &[&GroupProfile]) -> Vec<String> {
    profiles
        .iter()
        .filter(|prof| !prof.is_abelian())
        .filter(|prof| {
            prof.center().is_subgroup_of(&prof.derived())
                && !zinn_is_cyclic(prof)
                && matches!(prof.equality(), Ok(v) if !v.equal)
        })
        .map(|prof| prof.name().to_string())
        .collect()
}

/// Runs every selected check, in id order.
pub fn check_all(
    profile: &GroupProfile,
    selection: TheoremSelection,
) -> Vec<Result<TheoremVerdict>> {
    selection
        .ids()
        .into_iter()
        .map(|id| id.check(profile))
        .collect()
}
