//! Central primitive idempotents and the non-central splittings of the
//! two-dimensional self-involutive components.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::ffield::int::padic_valuation;
use crate::group::GroupKind;
use crate::matrix::Matrix;
use crate::oracle::{crt_idempotent, lagrange, AlgebraElement, Oracle};
use crate::wedderburn::{ComponentSource, Decomposition};
use crate::{Error, Field, Poly, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdempotentKind {
    CentralPrimitive,
    NonCentralPrimitive,
}

impl IdempotentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            IdempotentKind::CentralPrimitive => "central-primitive",
            IdempotentKind::NonCentralPrimitive => "noncentral-primitive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Idempotent {
    pub label: String,
    pub kind: IdempotentKind,
    /// Label of the central idempotent a non-central one splits.
    pub parent: Option<String>,
    /// Index of the component the idempotent lives on.
    pub component: usize,
    /// Human-readable construction.
    pub description: String,
    pub element: AlgebraElement,
}

#[derive(Clone, Debug, Default)]
pub struct IdempotentSet {
    pub items: Vec<Idempotent>,
}

impl IdempotentSet {
    pub fn central(&self) -> impl Iterator<Item = &Idempotent> {
        self.items.iter().filter(|e| e.kind == IdempotentKind::CentralPrimitive)
    }

    pub fn central_elements(&self) -> Vec<AlgebraElement> {
        self.central().map(|e| e.element.clone()).collect()
    }
}

/// `x^{q^k} mod f`, repeated `k` times from `x`.
fn frobenius_power_of_x(f: &Poly, q: u64, k: usize) -> Poly {
    let field = f.field();
    let mut cur = Poly::x(field).rem(f);
    for _ in 0..k {
        let mut acc = Poly::one(field);
        let mut base = cur.clone();
        let mut e = q;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(f);
            }
            base = base.mul(&base).rem(f);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

fn is_irreducible(f: &Poly) -> bool {
    let Some(k) = f.degree() else { return false };
    if k == 0 {
        return false;
    }
    let q = f.field().order_u64().expect("base field is enumerable");
    let x = Poly::x(f.field());
    (1..=k / 2).all(|i| {
        let diff = frobenius_power_of_x(f, q, i).sub(&x);
        Poly::gcd(f, &diff).map(|g| g.degree() == Some(0)).unwrap_or(false)
    })
}

/// Primitive idempotent `e_f` of `F_q[x]/(x^N - 1)` for an irreducible
/// factor `f`, by the closed form `-((f*)')* / N · (x^N - 1)/f`.
pub fn cyclic_idempotent(f: &Poly, n: u64) -> Result<Poly> {
    let (closed, euclid) = cyclic_idempotent_forms(f, n)?;
    assert_eq!(closed, euclid, "closed form and extended-Euclid form of e_f disagree");
    Ok(closed)
}

/// The closed form of `e_f` and the extended-Euclid form `h · (x^N - 1)/f`,
/// computed independently.
pub fn cyclic_idempotent_forms(f: &Poly, n: u64) -> Result<(Poly, Poly)> {
    let field = f.field();
    let big = Poly::x_pow_minus_one(field, n as usize);
    let f = f.monic();
    if f.is_zero() || !f.divides(&big) || !is_irreducible(&f) {
        return Err(Error::NotIrreducibleFactor);
    }
    let k = f.degree().unwrap();
    let star = f.reverse_at(k);
    let outer = star.formal_derivative().reverse_at(k - 1);
    let n_inv = field.inv(&field.from_int(n as i64)).ok_or(Error::NotCoprimeNQ { n, q: field.order_u64().unwrap() })?;
    let closed = outer.mul(&big.exact_div(&f)).scale(&field.neg(&n_inv)).rem(&big);
    Ok((closed, crt_idempotent(&f, &big)))
}

fn half(field: &Field) -> crate::FieldElem {
    field.inv(&field.from_int(2)).unwrap()
}

/// The central primitive idempotents, one per component.
pub fn central_idempotents(oracle: &Oracle, dec: &Decomposition) -> Result<IdempotentSet> {
    let g = &dec.group;
    let field = oracle.field();
    let n = g.cyclic_order();
    let big = Poly::x_pow_minus_one(field, n as usize);
    let e_of = |i: usize| cyclic_idempotent(&dec.report.factors[i].poly, n);
    let mut items = Vec::new();
    for (k, c) in dec.components.iter().enumerate() {
        let f = &dec.report.factors[c.source.factor()];
        let (element, description) = match c.source {
            ComponentSource::Abelian { factor, sign: 0 } => {
                (oracle.from_pq(&e_of(factor)?, &Poly::zero(field)), format!("e_f, f = {}", f.poly.to_text()))
            }
            ComponentSource::Abelian { factor, sign } => {
                let (coeff, shown) = abelian_multiplier(dec, k)?;
                let e = e_of(factor)?;
                let h = half(field);
                let sign_elem = field.from_int(sign as i64);
                let p = e.scale(&h);
                let q = e.mul(&coeff).scale(&field.mul(&h, &sign_elem)).rem(&big);
                let op = if sign > 0 { '+' } else { '-' };
                (oracle.from_pq(&p, &q), format!("e_f·(1 {op} {shown}y)/2, f = {}", f.poly.to_text()))
            }
            ComponentSource::SelfInvolutive { factor } => {
                (oracle.from_pq(&e_of(factor)?, &Poly::zero(field)), format!("e_f, f = {}", f.poly.to_text()))
            }
            ComponentSource::Pair { factor, partner } => {
                let e = e_of(factor)?.add(&e_of(partner)?);
                let g = &dec.report.factors[partner].poly;
                (
                    oracle.from_pq(&e, &Poly::zero(field)),
                    format!("e_f + e_f*, f = {}, f* = {}", f.poly.to_text(), g.to_text()),
                )
            }
        };
        items.push(Idempotent {
            label: format!("E{k}"),
            kind: IdempotentKind::CentralPrimitive,
            parent: None,
            component: k,
            description,
            element,
        });
    }
    Ok(IdempotentSet { items })
}

/// `c ∈ F_q[x]` with `(1 ± c(x) y)/2 · e_f` cutting out the `±` component
/// of an abelian factor: `c(θ) = 1/η`. The forms `1`, `x^{d/4}` and a
/// square root of `-1` in `F_q` are preferred when they work; otherwise `c`
/// is interpolated. Returns the polynomial and its display form.
fn abelian_multiplier(dec: &Decomposition, k: usize) -> Result<(Poly, String)> {
    let c = &dec.components[k];
    let ComponentSource::Abelian { factor, sign } = c.source else { unreachable!() };
    let f = &dec.report.factors[factor].poly;
    let amb = c.field();
    let field = f.field();
    let eta = c.eta.clone().unwrap();
    // η of the + component
    let eta_plus = if sign > 0 { eta } else { amb.neg(&eta) };
    let target = amb.inv(&eta_plus).unwrap();
    let g = &dec.group;
    let mut candidates: Vec<(Poly, String)> = Vec::from([(Poly::one(field), String::new())]);
    if g.kind() == GroupKind::NonSplit && g.d() % 4 == 0 {
        let e = (g.d() / 4) as usize;
        candidates.push((Poly::monomial(field, field.one(), e), format!("x^{e}·")));
    }
    if let Some(beta) = field.sqrt(&field.neg(&field.one())) {
        candidates.push((Poly::constant(field, beta.clone()), format!("{}·", Poly::constant(field, beta).to_text())));
    }
    for (poly, shown) in candidates {
        if c.tower.embed_poly(&poly).eval(&c.root) == target {
            return Ok((poly, shown));
        }
    }
    let poly = lagrange(&c.tower, f, &c.root, &target)
        .ok_or_else(|| Error::InconsistentPrescription(String::from("1/η outside F_q(θ)")))?;
    let shown = format!("({})·", poly.to_text());
    Ok((poly, shown))
}

/// Which construction produced a non-central pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonCentralCase {
    /// `e_f [ℓ(1-y) + 1]`; split groups and non-split factors of `x^n - 1`.
    Split,
    /// `e_f (ℓ+1)(1 + βy)` with `β ∈ F_q`, `q ≡ 1 (mod 4)`.
    Beta,
    /// `e_f (ℓ+1)(1 + x^{n/2} y)`, `q ≡ 3 (mod 4)`, `ν₂(n) > ν₂(q+1)`, `s ≡ 1 (mod 4)`.
    QuarterRoot,
    /// Interpolated from the matrix unit `E₁₁` in the θ-frame,
    /// `q ≡ 3 (mod 4)`, `ν₂(n) ≤ ν₂(q+1)`.
    ThetaInterpolated,
    /// Interpolated from `E₁₁` where no formula is given.
    Fallback,
}

impl NonCentralCase {
    pub fn as_str(self) -> &'static str {
        match self {
            NonCentralCase::Split => "split",
            NonCentralCase::Beta => "beta",
            NonCentralCase::QuarterRoot => "quarter-root",
            NonCentralCase::ThetaInterpolated => "theta-interpolated",
            NonCentralCase::Fallback => "interpolation-fallback",
        }
    }
}

#[derive(Clone, Debug)]
pub struct NonCentralPair {
    pub factor: usize,
    pub component: usize,
    pub case: NonCentralCase,
    pub first: AlgebraElement,
    /// Always `e_f - first`.
    pub second: AlgebraElement,
    /// Whether the printed formula for the first idempotent, where there is
    /// one and it was not used directly, equals `first`.
    pub printed_first_matches: Option<bool>,
    /// Whether that printed element is an idempotent at all.
    pub printed_first_idempotent: Option<bool>,
    /// Whether the printed formula for the second idempotent equals `second`.
    pub printed_second_matches: Option<bool>,
}

fn component_of(dec: &Decomposition, factor: usize) -> Result<usize> {
    let f = &dec.report.factors[factor];
    if f.divides_xd || !f.self_involutive {
        return Err(Error::PreconditionFactor(format!(
            "{} must be self-involutive and coprime to x^d - 1",
            f.poly.to_text()
        )));
    }
    Ok(dec
        .components
        .iter()
        .position(|c| c.source == ComponentSource::SelfInvolutive { factor })
        .expect("self-involutive factor has a component"))
}

/// Index of the factor `f` (monic) in the classified list.
pub fn factor_index(dec: &Decomposition, f: &Poly) -> Result<usize> {
    let f = f.monic();
    dec.report.factors.iter().position(|g| g.poly == f).ok_or(Error::NotIrreducibleFactor)
}

/// `ℓ = (x^{s-1} - 1)^{-1} mod f`.
fn ell(dec: &Decomposition, f: &Poly) -> Poly {
    let field = f.field();
    let s = dec.group.s();
    let a = Poly::x_pow_minus_one(field, (s - 1) as usize);
    Poly::inverse_mod(&a.rem(f), f).expect("gcd(x^{s-1} - 1, f) = 1 for f coprime to x^d - 1")
}

fn pair_from_first(
    oracle: &Oracle,
    dec: &Decomposition,
    factor: usize,
    case: NonCentralCase,
    first: AlgebraElement,
) -> Result<NonCentralPair> {
    let n = dec.group.cyclic_order();
    let ef = oracle.from_pq(&cyclic_idempotent(&dec.report.factors[factor].poly, n)?, &Poly::zero(oracle.field()));
    let second = oracle.sub(&ef, &first)?;
    Ok(NonCentralPair {
        factor,
        component: component_of(dec, factor)?,
        case,
        first,
        second,
        printed_first_matches: None,
        printed_first_idempotent: None,
        printed_second_matches: None,
    })
}

/// `e_{f,1} = e_f [ℓ(1-y) + 1]`, `e_{f,2} = e_f - e_{f,1}`, for a
/// self-involutive factor coprime to `x^d - 1` of a split group, or of
/// `x^n - 1` in a non-split group.
pub fn noncentral_split(oracle: &Oracle, dec: &Decomposition, factor: usize) -> Result<NonCentralPair> {
    component_of(dec, factor)?;
    let field = oracle.field();
    let n = dec.group.cyclic_order();
    let big = Poly::x_pow_minus_one(field, n as usize);
    let f = &dec.report.factors[factor].poly;
    let e = cyclic_idempotent(f, n)?;
    let l = ell(dec, f);
    let p = e.mul(&l.add(&Poly::one(field))).rem(&big);
    let q = e.mul(&l).neg().rem(&big);
    let first = oracle.from_pq(&p, &q);
    let mut pair = pair_from_first(oracle, dec, factor, NonCentralCase::Split, first)?;
    // printed: e_{f,2} = e_f · ℓ(1 - y)
    let printed_second = oracle.from_pq(&e.mul(&l).rem(&big), &e.mul(&l).neg().rem(&big));
    pair.printed_second_matches = Some(printed_second == pair.second);
    Ok(pair)
}

/// Non-central pair for a self-involutive factor of `x^n + 1` coprime to
/// `x^d - 1` in a non-split group. Factors of `x^n - 1` use
/// [`noncentral_split`].
pub fn noncentral_nonsplit(
    oracle: &Oracle,
    dec: &Decomposition,
    factor: usize,
    crt_fallback: bool,
) -> Result<NonCentralPair> {
    let k = component_of(dec, factor)?;
    let g = &dec.group;
    if g.kind() != GroupKind::NonSplit {
        return Err(Error::KindMismatch);
    }
    let field = oracle.field();
    let n = g.n();
    let big_n = g.cyclic_order();
    let big = Poly::x_pow_minus_one(field, big_n as usize);
    let f = &dec.report.factors[factor].poly;
    let comp = &dec.components[k];
    if comp.tower.embed_poly(&Poly::x_pow_minus_one(field, n as usize)).eval(&comp.root) == comp.field().zero() {
        return noncentral_split(oracle, dec, factor);
    }
    let q = g.q();
    let e = cyclic_idempotent(f, big_n)?;
    let l = ell(dec, f);
    let l1 = l.add(&Poly::one(field));
    let v_n = padic_valuation(2, n as i128).unwrap();
    let v_q = padic_valuation(2, (q + 1) as i128).unwrap();
    let formula = |mult: &Poly| {
        let p = e.mul(&l1).rem(&big);
        oracle.from_pq(&p, &p.mul(mult).rem(&big))
    };
    if q % 4 == 1 {
        let beta = field.sqrt(&field.neg(&field.one())).expect("-1 is a square in F_q");
        let first = formula(&Poly::constant(field, beta.clone()));
        let mut pair = pair_from_first(oracle, dec, factor, NonCentralCase::Beta, first)?;
        // printed: e_{f,2} = -e_f · [h + β(ℓ+1)y] with h = x^{s-1}ℓ ≡ ℓ + 1
        let p2 = e.mul(&l1).neg().rem(&big);
        let printed = oracle.from_pq(&p2, &p2.scale(&beta).rem(&big));
        pair.printed_second_matches = Some(printed == pair.second);
        return Ok(pair);
    }
    if v_n > v_q && g.s() % 4 == 1 {
        let first = formula(&Poly::monomial(field, field.one(), (n / 2) as usize));
        let mut pair = pair_from_first(oracle, dec, factor, NonCentralCase::QuarterRoot, first)?;
        // printed: e_{f,2} = -e_f · [ℓ + x^{n/2}(ℓ+1)y]
        let p2 = e.mul(&l).neg().rem(&big);
        let q2 = e.mul(&l1).mul(&Poly::monomial(field, field.one(), (n / 2) as usize)).neg().rem(&big);
        pair.printed_second_matches = Some(oracle.from_pq(&p2, &q2) == pair.second);
        return Ok(pair);
    }
    let case = if v_n <= v_q {
        NonCentralCase::ThetaInterpolated
    } else if crt_fallback {
        NonCentralCase::Fallback
    } else {
        return Err(Error::CaseUnavailable(format!(
            "no formula for q ≡ 3 mod 4, ν₂(n) > ν₂(q+1), s ≡ 3 mod 4 (q = {q}, n = {n}, s = {})",
            g.s()
        )));
    };
    let first = matrix_unit_idempotent(oracle, dec, k)?;
    let mut pair = pair_from_first(oracle, dec, factor, case, first)?;
    if case == NonCentralCase::ThetaInterpolated {
        // printed: e_{f,1} = e_f · ℓ f' (-x^s + y)
        let lf = e.mul(&l).mul(&f.formal_derivative()).rem(&big);
        let xs = Poly::monomial(field, field.one(), g.s() as usize);
        let printed = oracle.from_pq(&lf.mul(&xs).neg().rem(&big), &lf);
        pair.printed_first_matches = Some(printed == pair.first);
        pair.printed_first_idempotent = Some(oracle.is_idempotent(&printed));
    }
    Ok(pair)
}

/// The element mapping to `E₁₁` on component `k` and to zero elsewhere.
pub fn matrix_unit_idempotent(oracle: &Oracle, dec: &Decomposition, k: usize) -> Result<AlgebraElement> {
    let targets: Vec<Matrix> = dec
        .components
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut m = Matrix::zero(c.field(), c.l);
            if j == k {
                m.set(0, 0, c.field().one());
            }
            m
        })
        .collect();
    oracle.interpolate_idempotent(dec, &targets)
}

/// Non-central pairs for every eligible factor, in factor order. Factors
/// whose case has no formula give `Err(CaseUnavailable)` unless
/// `crt_fallback` is set.
pub fn noncentral_all(
    oracle: &Oracle,
    dec: &Decomposition,
    crt_fallback: bool,
) -> Vec<(usize, Result<NonCentralPair>)> {
    (0..dec.report.factors.len())
        .filter(|&i| {
            let f = &dec.report.factors[i];
            f.self_involutive && !f.divides_xd
        })
        .map(|i| {
            let r = match dec.group.kind() {
                GroupKind::Split => noncentral_split(oracle, dec, i),
                GroupKind::NonSplit => noncentral_nonsplit(oracle, dec, i, crt_fallback),
            };
            (i, r)
        })
        .collect()
}

/// Central idempotents followed by the non-central pairs that are
/// available, labelled `E{k}.1`/`E{k}.2` under their parent `E{k}`.
pub fn full_set(oracle: &Oracle, dec: &Decomposition, include_noncentral: bool, crt_fallback: bool) -> Result<IdempotentSet> {
    let mut set = central_idempotents(oracle, dec)?;
    if include_noncentral {
        for (_, pair) in noncentral_all(oracle, dec, crt_fallback) {
            let Ok(pair) = pair else { continue };
            let parent = format!("E{}", pair.component);
            for (j, el) in [(1, pair.first), (2, pair.second)] {
                set.items.push(Idempotent {
                    label: format!("{parent}.{j}"),
                    kind: IdempotentKind::NonCentralPrimitive,
                    parent: Some(parent.clone()),
                    component: pair.component,
                    description: format!("{} construction", pair.case.as_str()),
                    element: el,
                });
            }
        }
    }
    Ok(set)
}

pub fn central_idempotents_split(oracle: &Oracle, dec: &Decomposition) -> Result<IdempotentSet> {
    if dec.group.kind() != GroupKind::Split {
        return Err(Error::KindMismatch);
    }
    central_idempotents(oracle, dec)
}

pub fn central_idempotents_nonsplit(oracle: &Oracle, dec: &Decomposition) -> Result<IdempotentSet> {
    if dec.group.kind() != GroupKind::NonSplit {
        return Err(Error::KindMismatch);
    }
    central_idempotents(oracle, dec)
}
