//! The standard verification battery: every valid group with `n ≤ 24` over
//! the small odd fields, each checked against the brute-force oracle.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cycfactor::{remark_criterion, tower_degrees, two_adic_tower, two_adic_tower_predicted};
use crate::ffield::int::{gcd, ord_mod};
use crate::group::{GroupKind, GroupPresentation};
use crate::idempotents::{central_idempotents, cyclic_idempotent_forms, noncentral_all};
use crate::matrix::Matrix;
use crate::oracle::{AlgebraElement, Oracle};
use crate::wedderburn::{
    abelian_part_predicted, component_matrices_check, decompose, perlis_walker_count, Decomposition,
};
use crate::{Error, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryConfig {
    pub kinds: Vec<GroupKind>,
    pub n_max: u64,
    pub qs: Vec<u64>,
    /// Keep only `q ≡ residue (mod modulus)`.
    pub q_congruence: Option<(u64, u64)>,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig {
            kinds: Vec::from([GroupKind::Split, GroupKind::NonSplit]),
            n_max: 24,
            qs: Vec::from([3, 5, 7, 9, 11, 13]),
            q_congruence: None,
        }
    }
}

/// All valid instances, ordered by kind, `n`, `s`, `q`.
pub fn instances(config: &BatteryConfig) -> Vec<GroupPresentation> {
    let mut out = Vec::new();
    for &kind in &config.kinds {
        for n in 1..=config.n_max {
            let big_n = match kind {
                GroupKind::Split => n,
                GroupKind::NonSplit => 2 * n,
            };
            for s in 1..=big_n {
                if (s * s) % big_n != 1 % big_n {
                    continue;
                }
                for &q in &config.qs {
                    if let Some((r, m)) = config.q_congruence {
                        if q % m != r % m {
                            continue;
                        }
                    }
                    if gcd(2 * big_n, q) != 1 {
                        continue;
                    }
                    if let Ok(g) = GroupPresentation::new(kind, n, s, q) {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

/// A checked property. The `Literal*` classes test statements exactly as
/// printed that are known to fail on some inputs; they are reported but do
/// not count as failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    Associativity,
    Dimension,
    ComponentImages,
    CenterDimension,
    ComponentCount,
    CentralIdempotents,
    CyclicIdempotentForms,
    NonCentralPairs,
    TowerIndex,
    TwoAdicCharacterization,
    PerlisWalker,
    SelfInvolutiveCriterion,
    LiteralCenterCount,
    LiteralTwoAdicLemma,
    LiteralAbelianLemma,
    LiteralCriterionAllFactors,
}

impl Invariant {
    pub const ALL: [Invariant; 16] = [
        Invariant::Associativity,
        Invariant::Dimension,
        Invariant::ComponentImages,
        Invariant::CenterDimension,
        Invariant::ComponentCount,
        Invariant::CentralIdempotents,
        Invariant::CyclicIdempotentForms,
        Invariant::NonCentralPairs,
        Invariant::TowerIndex,
        Invariant::TwoAdicCharacterization,
        Invariant::PerlisWalker,
        Invariant::SelfInvolutiveCriterion,
        Invariant::LiteralCenterCount,
        Invariant::LiteralTwoAdicLemma,
        Invariant::LiteralAbelianLemma,
        Invariant::LiteralCriterionAllFactors,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Associativity => "associativity",
            Invariant::Dimension => "dimension-audit",
            Invariant::ComponentImages => "component-images",
            Invariant::CenterDimension => "center-dimension",
            Invariant::ComponentCount => "component-count",
            Invariant::CentralIdempotents => "central-idempotents",
            Invariant::CyclicIdempotentForms => "cyclic-idempotent-forms",
            Invariant::NonCentralPairs => "noncentral-pairs",
            Invariant::TowerIndex => "tower-index",
            Invariant::TwoAdicCharacterization => "two-adic-characterization",
            Invariant::PerlisWalker => "perlis-walker",
            Invariant::SelfInvolutiveCriterion => "self-involutive-criterion",
            Invariant::LiteralCenterCount => "literal:count=center-dim",
            Invariant::LiteralTwoAdicLemma => "literal:two-adic-lemma",
            Invariant::LiteralAbelianLemma => "literal:abelian-lemma",
            Invariant::LiteralCriterionAllFactors => "literal:criterion-all-factors",
        }
    }

    pub fn is_literal(self) -> bool {
        matches!(
            self,
            Invariant::LiteralCenterCount
                | Invariant::LiteralTwoAdicLemma
                | Invariant::LiteralAbelianLemma
                | Invariant::LiteralCriterionAllFactors
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// Nothing to check on this instance.
    Skip,
}

impl Outcome {
    fn from_failures(fails: Vec<String>, checked: usize) -> Outcome {
        if !fails.is_empty() {
            Outcome::Fail(fails.join("; "))
        } else if checked == 0 {
            Outcome::Skip
        } else {
            Outcome::Pass
        }
    }

    fn check(ok: bool, why: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(why())
        }
    }
}

#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub group: GroupPresentation,
    pub outcomes: BTreeMap<Invariant, Outcome>,
}

impl InstanceReport {
    pub fn failures(&self) -> impl Iterator<Item = (Invariant, &String)> {
        self.outcomes.iter().filter_map(|(k, v)| match v {
            Outcome::Fail(why) if !k.is_literal() => Some((*k, why)),
            _ => None,
        })
    }
}

/// Runs every invariant on one group. `triples` are arbitrary integers used
/// as associativity spot checks (reduced mod `|G|`) when `|G| > 32`;
/// smaller groups are checked exhaustively.
pub fn check_instance(g: &GroupPresentation, triples: &[(u64, u64, u64)]) -> InstanceReport {
    let mut outcomes = BTreeMap::new();
    let dec = match decompose(g) {
        Ok(d) => d,
        Err(e) => {
            for inv in Invariant::ALL {
                outcomes.insert(inv, Outcome::Fail(format!("decompose: {e}")));
            }
            return InstanceReport { group: g.clone(), outcomes };
        }
    };
    let oracle = Oracle::new(g, &dec.base);
    let order = g.order();

    let assoc = if order <= 32 {
        oracle.table().associative_exhaustive()
    } else {
        oracle.table().associative_on(
            triples.iter().map(|&(a, b, c)| ((a % order) as usize, (b % order) as usize, (c % order) as usize)),
        )
    };
    outcomes.insert(Invariant::Associativity, Outcome::check(assoc, || String::from("table not associative")));

    let dim = dec.dimension_sum() as u64;
    outcomes.insert(Invariant::Dimension, Outcome::check(dim == order, || format!("Σ ℓ²m = {dim} ≠ {order}")));

    let bad: Vec<String> = dec
        .components
        .iter()
        .enumerate()
        .filter(|(_, c)| !component_matrices_check(c, g))
        .map(|(k, _)| format!("component {k} violates the relations"))
        .collect();
    outcomes.insert(Invariant::ComponentImages, Outcome::from_failures(bad, dec.components.len()));

    let center = oracle.center_basis().len();
    let sigma_m = dec.center_dimension();
    outcomes.insert(
        Invariant::CenterDimension,
        Outcome::check(center == sigma_m, || format!("center dimension {center} ≠ Σm = {sigma_m}")),
    );
    let count = dec.component_count();
    let fixed = oracle.frobenius_fixed_dimension();
    outcomes.insert(
        Invariant::ComponentCount,
        Outcome::check(count == fixed, || format!("{count} components, Frobenius-fixed center dimension {fixed}")),
    );
    outcomes.insert(
        Invariant::LiteralCenterCount,
        Outcome::check(count == center, || format!("{count} components, center dimension {center}")),
    );

    outcomes.insert(Invariant::CentralIdempotents, central_check(&oracle, &dec));
    outcomes.insert(Invariant::CyclicIdempotentForms, cyclic_forms_check(&dec));
    outcomes.insert(Invariant::NonCentralPairs, noncentral_check(&oracle, &dec));
    outcomes.insert(Invariant::TowerIndex, tower_index_check(&dec));

    let (characterized, literal) = two_adic_checks(g);
    outcomes.insert(Invariant::TwoAdicCharacterization, characterized);
    outcomes.insert(Invariant::LiteralTwoAdicLemma, literal);

    let pw = perlis_walker_count(g);
    let ab = dec.abelian_count();
    outcomes.insert(
        Invariant::PerlisWalker,
        Outcome::check(pw == ab, || format!("census {pw}, abelian components {ab}")),
    );
    outcomes.insert(Invariant::LiteralAbelianLemma, abelian_lemma_check(&dec));

    let (restricted, all) = criterion_checks(&dec);
    outcomes.insert(Invariant::SelfInvolutiveCriterion, restricted);
    outcomes.insert(Invariant::LiteralCriterionAllFactors, all);

    InstanceReport { group: g.clone(), outcomes }
}

fn central_check(oracle: &Oracle, dec: &Decomposition) -> Outcome {
    let set = match central_idempotents(oracle, dec) {
        Ok(s) => s,
        Err(e) => return Outcome::Fail(format!("{e}")),
    };
    let items = set.central_elements();
    let mut fails = Vec::new();
    if items.len() != dec.component_count() {
        fails.push(format!("{} idempotents for {} components", items.len(), dec.component_count()));
    }
    for (k, e) in items.iter().enumerate() {
        if !oracle.is_idempotent(e) {
            fails.push(format!("E{k} not idempotent"));
        }
        if !oracle.is_central(e) {
            fails.push(format!("E{k} not central"));
        }
        // with orthogonality and Σ = 1 this forces zero on the other components
        let c = &dec.components[k];
        if !oracle.image_of(c, e).is_identity(c.field()) {
            fails.push(format!("E{k} is not the identity of component {k}"));
        }
    }
    if !oracle.are_orthogonal(&items) {
        fails.push(String::from("not orthogonal"));
    }
    if !oracle.sums_to_one(&items) {
        fails.push(String::from("sum ≠ 1"));
    }
    Outcome::from_failures(fails, items.len())
}

fn cyclic_forms_check(dec: &Decomposition) -> Outcome {
    let n = dec.group.cyclic_order();
    let mut fails = Vec::new();
    for f in &dec.report.factors {
        match cyclic_idempotent_forms(&f.poly, n) {
            Ok((a, b)) if a == b => {}
            Ok(_) => fails.push(format!("forms differ for {}", f.poly.to_text())),
            Err(e) => fails.push(format!("{}: {e}", f.poly.to_text())),
        }
    }
    Outcome::from_failures(fails, dec.report.factors.len())
}

fn noncentral_check(oracle: &Oracle, dec: &Decomposition) -> Outcome {
    let field = oracle.field();
    let n = dec.group.cyclic_order();
    let mut fails = Vec::new();
    let mut checked = 0;
    for (i, pair) in noncentral_all(oracle, dec, false) {
        let f = &dec.report.factors[i].poly;
        let pair = match pair {
            Ok(p) => p,
            Err(Error::CaseUnavailable(_)) => continue,
            Err(e) => {
                fails.push(format!("{}: {e}", f.to_text()));
                continue;
            }
        };
        checked += 1;
        let (e1, e2) = (&pair.first, &pair.second);
        let ef = oracle.from_pq(&cyclic_idempotent_forms(f, n).unwrap().0, &Poly::zero(field));
        let mul = |a: &AlgebraElement, b: &AlgebraElement| oracle.multiply(a, b).unwrap();
        let ok = oracle.is_idempotent(e1)
            && oracle.is_idempotent(e2)
            && mul(e1, e2) == oracle.zero()
            && mul(e2, e1) == oracle.zero()
            && oracle.add(e1, e2).unwrap() == ef
            && !oracle.is_central(e1)
            && !oracle.is_central(e2);
        if !ok {
            fails.push(format!("{} ({}): pair fails the idempotent relations", f.to_text(), pair.case.as_str()));
            continue;
        }
        // interpolation reproduces e₁ from its own image, which is a rank-one
        // idempotent on its component and zero elsewhere
        let targets: Vec<Matrix> = dec.components.iter().map(|c| oracle.image_of(c, e1)).collect();
        let comp = &dec.components[pair.component];
        let img = &targets[pair.component];
        let amb = comp.field();
        let rank_one = img.mul(img, amb) == *img && img.det(amb) == amb.zero() && !img.is_zero(amb);
        let elsewhere = targets.iter().enumerate().all(|(j, m)| j == pair.component || m.is_zero(dec.components[j].field()));
        let reproduced = oracle.interpolate_idempotent(dec, &targets).map(|u| &u == e1).unwrap_or(false);
        if !(rank_one && elsewhere && reproduced) {
            fails.push(format!("{}: interpolation does not reproduce e₁", f.to_text()));
        }
    }
    Outcome::from_failures(fails, checked)
}

fn tower_index_check(dec: &Decomposition) -> Outcome {
    let mut fails = Vec::new();
    let mut checked = 0;
    for (i, f) in dec.report.factors.iter().enumerate() {
        if !f.self_involutive || f.divides_xd {
            continue;
        }
        checked += 1;
        match tower_degrees(&dec.report, i) {
            Ok((full, sub)) if full == 2 * sub => {}
            Ok((full, sub)) => fails.push(format!("{}: degrees {full} over {sub}", f.poly.to_text())),
            Err(e) => fails.push(format!("{}: {e}", f.poly.to_text())),
        }
    }
    Outcome::from_failures(fails, checked)
}

/// For non-split groups over `q ≡ 3 (mod 4)` with `n` even: the lemma's
/// step degrees agree with the coset sizes exactly when the odd part of `n`
/// has odd order mod `q` (green), and the printed clauses as stated (literal).
fn two_adic_checks(g: &GroupPresentation) -> (Outcome, Outcome) {
    let (n, q) = (g.n(), g.q());
    if g.kind() != GroupKind::NonSplit || q % 4 != 3 || n % 2 != 0 {
        return (Outcome::Skip, Outcome::Skip);
    }
    let actual = match two_adic_tower(n, q) {
        Ok(a) => a,
        Err(e) => return (Outcome::Fail(format!("{e}")), Outcome::Fail(format!("{e}"))),
    };
    let predicted = two_adic_tower_predicted(n, q);
    let agrees = actual == predicted;
    let odd = n >> n.trailing_zeros();
    let holds = ord_mod(odd, q).map(|o| o % 2 == 1).unwrap_or(false);
    let why = || format!("steps {actual:?}, lemma {predicted:?}");
    (Outcome::check(agrees == holds, why), Outcome::check(agrees, why))
}

fn abelian_lemma_check(dec: &Decomposition) -> Outcome {
    let Some(predicted) = abelian_part_predicted(&dec.group) else { return Outcome::Skip };
    let mut actual = BTreeMap::new();
    for c in dec.components.iter().filter(|c| c.l == 1) {
        *actual.entry(c.m).or_insert(0usize) += 1;
    }
    let actual: Vec<(usize, usize)> = actual.into_iter().collect();
    Outcome::check(predicted == actual, || format!("lemma {predicted:?}, actual {actual:?}"))
}

/// The coset test against `s ≡ q^{deg/2} (mod ord)` on even-degree factors:
/// those coprime to `x^d - 1` (green) and all of them (literal).
fn criterion_checks(dec: &Decomposition) -> (Outcome, Outcome) {
    let s = dec.report.s.unwrap_or(dec.group.s());
    let q = dec.group.q();
    let (mut fails, mut all_fails) = (Vec::new(), Vec::new());
    let (mut checked, mut all_checked) = (0, 0);
    for f in dec.report.factors.iter().filter(|f| f.degree() % 2 == 0) {
        let agree = remark_criterion(s, q, f.degree(), f.root_order) == f.self_involutive;
        all_checked += 1;
        if !agree {
            all_fails.push(f.poly.to_text());
        }
        if !f.divides_xd {
            checked += 1;
            if !agree {
                fails.push(f.poly.to_text());
            }
        }
    }
    (Outcome::from_failures(fails, checked), Outcome::from_failures(all_fails, all_checked))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

/// Per-invariant totals, in [`Invariant::ALL`] order.
pub fn summarize(reports: &[InstanceReport]) -> Vec<(Invariant, Tally)> {
    Invariant::ALL
        .iter()
        .map(|&inv| {
            let mut t = Tally::default();
            for r in reports {
                match r.outcomes.get(&inv) {
                    Some(Outcome::Pass) => t.pass += 1,
                    Some(Outcome::Fail(_)) => t.fail += 1,
                    _ => t.skip += 1,
                }
            }
            (inv, t)
        })
        .collect()
}

/// Whether any non-literal invariant failed.
pub fn has_failures(reports: &[InstanceReport]) -> bool {
    reports.iter().any(|r| r.failures().next().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_battery_size() {
        let all = instances(&BatteryConfig::default());
        assert!(all.len() >= 150);
        let q3 = instances(&BatteryConfig { q_congruence: Some((3, 4)), ..Default::default() });
        assert!(q3.iter().all(|g| g.q() % 4 == 3));
        let empty = instances(&BatteryConfig { qs: Vec::new(), ..Default::default() });
        assert!(empty.is_empty());
    }

    #[test]
    fn quaternion_instance_passes() {
        let g = GroupPresentation::new(GroupKind::NonSplit, 2, 3, 3).unwrap();
        let r = check_instance(&g, &[]);
        assert_eq!(r.failures().count(), 0, "{:?}", r.outcomes);
        assert!(matches!(r.outcomes[&Invariant::LiteralAbelianLemma], Outcome::Fail(_)));
        assert_eq!(r.outcomes[&Invariant::NonCentralPairs], Outcome::Pass);
    }
}
