//! Serializable reports. Field elements of `F_q` appear as their integer
//! index `Σ c_i p^i`; elements of a component's extension field appear as
//! polynomials in that field's generator `t`.

use metacyclic_core::battery::{InstanceReport, Invariant, Outcome, Tally};
use metacyclic_core::cycfactor::FactorizationReport;
use metacyclic_core::idempotents::{IdempotentSet, NonCentralPair};
use metacyclic_core::matrix::Matrix;
use metacyclic_core::oracle::AlgebraElement;
use metacyclic_core::wedderburn::{ComponentSource, Decomposition, WedderburnComponent};
use metacyclic_core::{Field, FieldElem, GroupPresentation, Poly};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GroupInfo {
    pub spec: String,
    pub kind: String,
    pub n: u64,
    pub s: u64,
    pub s_adjusted: u64,
    pub cyclic_order: u64,
    pub order: u64,
    pub q: u64,
    pub d: u64,
    pub abelian: bool,
    /// Abelian-part case tag of a non-split group.
    pub case: Option<String>,
}

impl GroupInfo {
    pub fn new(g: &GroupPresentation) -> Self {
        GroupInfo {
            spec: g.spec_string(),
            kind: g.kind().as_str().to_string(),
            n: g.n(),
            s: g.s(),
            s_adjusted: g.s_adjusted(),
            cyclic_order: g.cyclic_order(),
            order: g.order(),
            q: g.q(),
            d: g.d(),
            abelian: g.is_abelian(),
            case: g.abelian_case().map(|c| c.label().to_string()),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FactorInfo {
    pub index: usize,
    pub poly: String,
    /// Ascending coefficients as `F_q` indices.
    pub coefficients: Vec<u64>,
    pub degree: usize,
    pub root_order: u64,
    pub coset: Vec<u64>,
    pub self_involutive: Option<bool>,
    pub divides_xd: Option<bool>,
    pub partner: Option<usize>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FactorizationInfo {
    pub n: u64,
    pub q: u64,
    pub s: Option<u64>,
    pub d: Option<u64>,
    /// Number of `s`-self-involutive factors.
    pub r: Option<usize>,
    /// Number of pairs `{g, g^{*s}}`.
    pub t: Option<usize>,
    pub splitting_degree: usize,
    pub factors: Vec<FactorInfo>,
}

pub fn index_of(field: &Field, a: &FieldElem) -> u64 {
    field.to_index(a).expect("base field elements have u64 indices")
}

pub fn poly_coefficients(p: &Poly) -> Vec<u64> {
    p.coeffs().iter().map(|c| index_of(p.field(), c)).collect()
}

impl FactorizationInfo {
    pub fn new(report: &FactorizationReport) -> Self {
        let classified = report.is_classified();
        let factors = report
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| FactorInfo {
                index: i,
                poly: f.poly.to_text(),
                coefficients: poly_coefficients(&f.poly),
                degree: f.degree(),
                root_order: f.root_order,
                coset: f.coset.clone(),
                self_involutive: classified.then_some(f.self_involutive),
                divides_xd: classified.then_some(f.divides_xd),
                partner: f.partner,
            })
            .collect();
        FactorizationInfo {
            n: report.n,
            q: report.q,
            s: report.s,
            d: report.d,
            r: classified.then_some(report.r),
            t: classified.then_some(report.t),
            splitting_degree: report.splitting.tower.rel_degree(),
            factors,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FieldInfo {
    pub p: u64,
    pub degree: usize,
    /// Ascending coefficients of the defining polynomial of `t`.
    pub modulus: Vec<u32>,
}

impl FieldInfo {
    pub fn new(f: &Field) -> Self {
        FieldInfo { p: f.p(), degree: f.degree(), modulus: f.modulus().to_vec() }
    }
}

/// `c0 + c1*t + ...` over the nonzero terms; `0` for zero.
pub fn element_text(a: &FieldElem) -> String {
    let terms: Vec<String> = a
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, c)| match i {
            0 => format!("{c}"),
            1 => format!("{c}*t"),
            _ => format!("{c}*t^{i}"),
        })
        .collect();
    if terms.is_empty() {
        String::from("0")
    } else {
        terms.join(" + ")
    }
}

/// Entries as coefficient vectors over `F_p` in the basis `1, t, ..., t^{k-1}`.
pub fn matrix_vectors(field: &Field, m: &Matrix) -> Vec<Vec<Vec<u32>>> {
    let k = field.degree();
    m.rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|a| {
                    let mut v = a.coeffs().to_vec();
                    v.resize(k, 0);
                    v
                })
                .collect()
        })
        .collect()
}

pub fn matrix_text(m: &Matrix) -> Vec<Vec<String>> {
    m.rows().iter().map(|r| r.iter().map(element_text).collect()).collect()
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SourceInfo {
    /// `abelian`, `self-involutive` or `pair`.
    pub kind: String,
    pub factor: usize,
    pub partner: Option<usize>,
    /// `1`/`-1` for `y ↦ ±η`, `0` when both values merge into one component.
    pub sign: Option<i8>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ComponentInfo {
    pub index: usize,
    pub l: usize,
    pub m: usize,
    pub dimension: usize,
    pub source: SourceInfo,
    pub construction: String,
    pub case: Option<String>,
    pub field: FieldInfo,
    pub root: String,
    pub image_x: Vec<Vec<String>>,
    pub image_y: Vec<Vec<String>>,
    pub image_x_vectors: Vec<Vec<Vec<u32>>>,
    pub image_y_vectors: Vec<Vec<Vec<u32>>>,
}

impl ComponentInfo {
    pub fn new(index: usize, c: &WedderburnComponent) -> Self {
        let source = match c.source {
            ComponentSource::Abelian { factor, sign } => {
                SourceInfo { kind: "abelian".into(), factor, partner: None, sign: Some(sign) }
            }
            ComponentSource::SelfInvolutive { factor } => {
                SourceInfo { kind: "self-involutive".into(), factor, partner: None, sign: None }
            }
            ComponentSource::Pair { factor, partner } => {
                SourceInfo { kind: "pair".into(), factor, partner: Some(partner), sign: None }
            }
        };
        ComponentInfo {
            index,
            l: c.l,
            m: c.m,
            dimension: c.dimension(),
            source,
            construction: c.construction.as_str().to_string(),
            case: c.case_label.map(str::to_string),
            field: FieldInfo::new(c.field()),
            root: element_text(&c.root),
            image_x: matrix_text(&c.image_x),
            image_y: matrix_text(&c.image_y),
            image_x_vectors: matrix_vectors(c.field(), &c.image_x),
            image_y_vectors: matrix_vectors(c.field(), &c.image_y),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Totals {
    pub components: usize,
    pub abelian_components: usize,
    pub dimension_sum: usize,
    pub group_order: u64,
    /// `Σ m`, the `F_q`-dimension of the center.
    pub center_dimension: usize,
    /// Components grouped by `(l, m)`, ascending.
    pub shape: Vec<ShapeEntry>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ShapeEntry {
    pub l: usize,
    pub m: usize,
    pub multiplicity: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub group: GroupInfo,
    pub factorization: FactorizationInfo,
    pub components: Vec<ComponentInfo>,
    pub totals: Totals,
}

fn shape(dec: &Decomposition) -> Vec<ShapeEntry> {
    let mut counts = std::collections::BTreeMap::new();
    for c in &dec.components {
        *counts.entry((c.l, c.m)).or_insert(0) += 1;
    }
    counts.into_iter().map(|((l, m), multiplicity)| ShapeEntry { l, m, multiplicity }).collect()
}

impl DecompositionReport {
    pub fn new(dec: &Decomposition) -> Self {
        DecompositionReport {
            group: GroupInfo::new(&dec.group),
            factorization: FactorizationInfo::new(&dec.report),
            components: dec.components.iter().enumerate().map(|(i, c)| ComponentInfo::new(i, c)).collect(),
            totals: Totals {
                components: dec.component_count(),
                abelian_components: dec.abelian_count(),
                dimension_sum: dec.dimension_sum(),
                group_order: dec.group.order(),
                center_dimension: dec.center_dimension(),
                shape: shape(dec),
            },
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CoeffInfo {
    pub power_of_x: u64,
    pub has_y: bool,
    pub value: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct IdempotentInfo {
    pub label: String,
    pub kind: String,
    pub parent: Option<String>,
    pub component: usize,
    pub description: String,
    /// Nonzero coefficients of `Σ c_{ij} x^i y^j`.
    pub coeffs: Vec<CoeffInfo>,
    /// All `|G|` coefficients in normal-form order `x^i y^j`, `j` outer.
    pub vector: Vec<u64>,
}

pub fn element_coefficients(field: &Field, u: &AlgebraElement) -> (Vec<CoeffInfo>, Vec<u64>) {
    let g = u.group();
    let vector: Vec<u64> = u.coeffs().iter().map(|c| index_of(field, c)).collect();
    let coeffs = g
        .elements()
        .into_iter()
        .zip(&vector)
        .filter(|(_, &v)| v != 0)
        .map(|((i, j), &v)| CoeffInfo { power_of_x: i, has_y: j == 1, value: v })
        .collect();
    (coeffs, vector)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PairInfo {
    pub factor: usize,
    pub component: usize,
    pub case: String,
    pub printed_first_matches: Option<bool>,
    pub printed_first_idempotent: Option<bool>,
    pub printed_second_matches: Option<bool>,
}

impl PairInfo {
    pub fn new(p: &NonCentralPair) -> Self {
        PairInfo {
            factor: p.factor,
            component: p.component,
            case: p.case.as_str().to_string(),
            printed_first_matches: p.printed_first_matches,
            printed_first_idempotent: p.printed_first_idempotent,
            printed_second_matches: p.printed_second_matches,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct UnavailableInfo {
    pub factor: usize,
    pub code: String,
    pub message: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct IdempotentReport {
    pub group: GroupInfo,
    pub idempotents: Vec<IdempotentInfo>,
    pub noncentral: Vec<PairInfo>,
    pub unavailable: Vec<UnavailableInfo>,
}

pub fn idempotent_infos(field: &Field, set: &IdempotentSet) -> Vec<IdempotentInfo> {
    set.items
        .iter()
        .map(|e| {
            let (coeffs, vector) = element_coefficients(field, &e.element);
            IdempotentInfo {
                label: e.label.clone(),
                kind: e.kind.as_str().to_string(),
                parent: e.parent.clone(),
                component: e.component,
                description: e.description.clone(),
                coeffs,
                vector,
            }
        })
        .collect()
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckInfo {
    pub invariant: String,
    /// Checks a statement exactly as printed; does not affect the verdict.
    pub literal: bool,
    pub status: String,
    pub detail: Option<String>,
}

pub fn check_infos(r: &InstanceReport) -> Vec<CheckInfo> {
    r.outcomes
        .iter()
        .map(|(inv, o)| {
            let (status, detail) = match o {
                Outcome::Pass => ("pass", None),
                Outcome::Fail(why) => ("fail", Some(why.clone())),
                Outcome::Skip => ("skip", None),
            };
            CheckInfo { invariant: inv.name().to_string(), literal: inv.is_literal(), status: status.into(), detail }
        })
        .collect()
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub group: GroupInfo,
    pub seed: u64,
    pub checks: Vec<CheckInfo>,
    pub passed: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BatteryRow {
    pub invariant: String,
    pub literal: bool,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl BatteryRow {
    pub fn new(inv: Invariant, t: &Tally) -> Self {
        BatteryRow { invariant: inv.name().to_string(), literal: inv.is_literal(), pass: t.pass, fail: t.fail, skip: t.skip }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BatteryFailure {
    pub group: String,
    pub invariant: String,
    pub detail: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BatteryReport {
    pub instances: usize,
    pub seed: u64,
    pub rows: Vec<BatteryRow>,
    pub failures: Vec<BatteryFailure>,
    pub passed: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ErrorReport {
    pub code: String,
    pub message: String,
}
