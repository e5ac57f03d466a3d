//! Wedderburn decomposition of `F_q G` with explicit generator images.
//!
//! Every component is realized over its own small extension of `F_q` (a
//! [`Tower`]) holding a root `ξ` of the factor of `x^N - 1` it comes from. A
//! two-dimensional component also carries a `frame` `C` with
//! `image = C · natural · C^{-1}`, where the natural representation is
//! `x ↦ diag(ξ, ξ^s)`, `y ↦ [[0, ξ^e], [1, 0]]` and `y^2 = x^e`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::cycfactor::{classify, factor_xn_minus_1, FactorizationReport};
use crate::ffield::int::{gcd, padic_valuation, prime_power};
use crate::ffield::Tower;
use crate::group::{GroupKind, GroupPresentation};
use crate::matrix::Matrix;
use crate::{Error, Field, FieldElem, Poly, Result};

/// Where a component comes from, by index into the classified factor list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentSource {
    /// One-dimensional component on a factor of `x^d - 1`. `sign` is `±1`
    /// when `y ↦ ±η` with `η` in `F_q(θ)`, and `0` when `η` generates a
    /// quadratic extension and the factor gives a single component.
    Abelian { factor: usize, sign: i8 },
    SelfInvolutive { factor: usize },
    Pair { factor: usize, partner: usize },
}

impl ComponentSource {
    pub fn factor(&self) -> usize {
        match *self {
            ComponentSource::Abelian { factor, .. }
            | ComponentSource::SelfInvolutive { factor }
            | ComponentSource::Pair { factor, .. } => factor,
        }
    }
}

/// How the generator images were produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// `x ↦ θ`, `y ↦ ±η` with `η^2 = θ^e`.
    Character,
    /// `x ↦ [[0, ξ^{s+1}], [-1, ξ+ξ^s]]`, `y ↦ [[1, -(ξ+ξ^s)], [0, -1]]`.
    Symmetric,
    /// The natural representation itself (pairs, where `ξ^s` is not a conjugate of `ξ`).
    Natural,
    /// Conjugation by `Z = [[-ξ^s, β], [βξ, 1]]` with `β^2 = -1`.
    BetaFrame,
    /// Conjugation by `Z = [[a, b], [-ξa, -ξ^s b]]` with `a^2 = -θ`, `b^2 = θ^s`.
    ThetaFrame,
}

impl Construction {
    pub fn as_str(self) -> &'static str {
        match self {
            Construction::Character => "character",
            Construction::Symmetric => "symmetric",
            Construction::Natural => "natural",
            Construction::BetaFrame => "beta-frame",
            Construction::ThetaFrame => "theta-frame",
        }
    }
}

#[derive(Clone, Debug)]
pub struct WedderburnComponent {
    /// Matrix size.
    pub l: usize,
    /// Degree over `F_q` of the center of the component.
    pub m: usize,
    /// Always 1: components are listed individually.
    pub multiplicity: usize,
    pub source: ComponentSource,
    pub construction: Construction,
    /// Field holding the root and the image entries.
    pub tower: Tower,
    /// Root of the source factor (`θ` or `ξ`).
    pub root: FieldElem,
    /// Image of `y` on a one-dimensional component.
    pub eta: Option<FieldElem>,
    pub image_x: Matrix,
    pub image_y: Matrix,
    /// `C` with `image = C · natural · C^{-1}`; the identity for 1×1 components.
    pub frame: Matrix,
    /// Case label for display.
    pub case_label: Option<&'static str>,
}

impl WedderburnComponent {
    pub fn field(&self) -> &Field {
        self.tower.ambient()
    }

    /// `ℓ² m`.
    pub fn dimension(&self) -> usize {
        self.l * self.l * self.m
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub group: GroupPresentation,
    pub base: Field,
    pub report: FactorizationReport,
    pub components: Vec<WedderburnComponent>,
}

impl Decomposition {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// `Σ ℓ² m`; equals `|G|`.
    pub fn dimension_sum(&self) -> usize {
        self.components.iter().map(|c| c.dimension()).sum()
    }

    /// `Σ m`, the `F_q`-dimension of the center.
    pub fn center_dimension(&self) -> usize {
        self.components.iter().map(|c| c.m).sum()
    }

    pub fn abelian_count(&self) -> usize {
        self.components.iter().filter(|c| c.l == 1).count()
    }

    /// Component counts keyed by `(ℓ, m)`.
    pub fn shape(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for c in &self.components {
            *out.entry((c.l, c.m)).or_insert(0) += 1;
        }
        out
    }

    /// Indices of the components coming from factor `i`.
    pub fn components_of_factor(&self, i: usize) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&k| match self.components[k].source {
                ComponentSource::Pair { factor, partner } => factor == i || partner == i,
                src => src.factor() == i,
            })
            .collect()
    }
}

/// Base field `F_q` for `q = p^m`.
pub fn base_field(q: u64) -> Result<Field> {
    let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    Field::new(p, m as usize)
}

/// Dispatches on the group kind.
pub fn decompose(g: &GroupPresentation) -> Result<Decomposition> {
    let base = base_field(g.q())?;
    let n = g.cyclic_order();
    let report = classify(&factor_xn_minus_1(n, &base)?, g.s())?;
    let mut components = Vec::new();
    for (i, f) in report.factors.iter().enumerate() {
        if f.divides_xd {
            components.extend(abelian_components(g, &base, &report, i));
        } else if f.self_involutive {
            components.push(self_involutive_component(g, &base, &report, i));
        } else if let Some(j) = f.partner {
            if i < j {
                components.push(pair_component(g, &base, &report, i, j));
            }
        }
    }
    Ok(Decomposition { group: g.clone(), base, report, components })
}

pub fn decompose_split(g: &GroupPresentation) -> Result<Decomposition> {
    if g.kind() != GroupKind::Split {
        return Err(Error::KindMismatch);
    }
    decompose(g)
}

pub fn decompose_nonsplit(g: &GroupPresentation) -> Result<Decomposition> {
    if g.kind() != GroupKind::NonSplit {
        return Err(Error::KindMismatch);
    }
    decompose(g)
}

/// First root `ζ^j` (`j` coprime to the root order) of `f` in the tower.
pub(crate) fn find_root(tower: &Tower, f: &Poly, root_order: u64) -> FieldElem {
    let amb = tower.ambient();
    let fe = tower.embed_poly(f);
    let zeta = amb.element_of_order(root_order).expect("tower contains the roots of f");
    let mut z = amb.one();
    for j in 1..=root_order {
        z = amb.mul(&z, &zeta);
        if gcd(j, root_order) == 1 && amb.is_zero(&fe.eval(&z)) {
            return z;
        }
    }
    unreachable!("factor has no root of the expected order")
}

fn abelian_components(
    g: &GroupPresentation,
    base: &Field,
    report: &FactorizationReport,
    i: usize,
) -> Vec<WedderburnComponent> {
    let f = &report.factors[i];
    let k = f.degree();
    let tower = Tower::new(base, 2 * k);
    let amb = tower.ambient().clone();
    let theta = find_root(&tower, &f.poly, f.root_order);
    let eps = amb.pow(&theta, g.y_square_exponent());
    let eta = amb.sqrt(&eps).expect("every element of F_q(θ) is a square one degree up");
    let label = g.abelian_case().map(|c| c.label());
    let make = |sign: i8, eta: FieldElem, m: usize| WedderburnComponent {
        l: 1,
        m,
        multiplicity: 1,
        source: ComponentSource::Abelian { factor: i, sign },
        construction: Construction::Character,
        tower: tower.clone(),
        root: theta.clone(),
        eta: Some(eta.clone()),
        image_x: Matrix::scalar(theta.clone()),
        image_y: Matrix::scalar(eta),
        frame: Matrix::identity(&amb, 1),
        case_label: label,
    };
    if tower.in_subfield(&eta, k) {
        vec![make(1, eta.clone(), k), make(-1, amb.neg(&eta), k)]
    } else {
        vec![make(0, eta, 2 * k)]
    }
}

fn natural_images(amb: &Field, xi: &FieldElem, sigma: &FieldElem, xi_e: &FieldElem) -> (Matrix, Matrix) {
    let x = Matrix::from_rows(vec![vec![xi.clone(), amb.zero()], vec![amb.zero(), sigma.clone()]]);
    let y = Matrix::from_rows(vec![vec![amb.zero(), xi_e.clone()], vec![amb.one(), amb.zero()]]);
    (x, y)
}

/// `C = [v | Y v]` for an eigenvector `v` of `X` at `ξ`; then
/// `X = C diag(ξ, ξ^s) C^{-1}` and `Y = C [[0, ξ^e], [1, 0]] C^{-1}`.
fn frame_for(amb: &Field, image_x: &Matrix, image_y: &Matrix, xi: &FieldElem) -> Matrix {
    let shifted = image_x.sub(&Matrix::identity(amb, 2).scale(xi, amb), amb);
    let row = if shifted.get(0, 0) != &amb.zero() || shifted.get(0, 1) != &amb.zero() { 0 } else { 1 };
    let v = [amb.neg(shifted.get(row, 1)), shifted.get(row, 0).clone()];
    let w = [
        amb.add(&amb.mul(image_y.get(0, 0), &v[0]), &amb.mul(image_y.get(0, 1), &v[1])),
        amb.add(&amb.mul(image_y.get(1, 0), &v[0]), &amb.mul(image_y.get(1, 1), &v[1])),
    ];
    Matrix::from_rows(vec![vec![v[0].clone(), w[0].clone()], vec![v[1].clone(), w[1].clone()]])
}

fn self_involutive_component(
    g: &GroupPresentation,
    base: &Field,
    report: &FactorizationReport,
    i: usize,
) -> WedderburnComponent {
    let f = &report.factors[i];
    let k = f.degree();
    let q = g.q();
    let e = g.y_square_exponent();
    let n = g.n();
    let theta_branch = g.kind() == GroupKind::NonSplit
        && q % 4 == 3
        && padic_valuation(2, n as i128).unwrap() <= padic_valuation(2, (q + 1) as i128).unwrap();
    let needs_room = g.kind() == GroupKind::NonSplit && q % 4 == 3;
    let tower = Tower::new(base, if needs_room { 2 * k } else { k });
    let amb = tower.ambient().clone();
    let xi = find_root(&tower, &f.poly, f.root_order);
    let sigma = amb.pow(&xi, g.s());
    let xi_e = amb.pow(&xi, e);
    let (nat_x, nat_y) = natural_images(&amb, &xi, &sigma, &xi_e);
    let trace = amb.add(&xi, &sigma);
    let norm = amb.mul(&xi, &sigma);

    let (construction, image_x, image_y, frame) = if amb.is_one(&xi_e) {
        // ξ^e = 1: the split construction, also used for non-split factors of x^n - 1
        let image_x = Matrix::from_rows(vec![
            vec![amb.zero(), norm.clone()],
            vec![amb.neg(&amb.one()), trace.clone()],
        ]);
        let image_y = Matrix::from_rows(vec![
            vec![amb.one(), amb.neg(&trace)],
            vec![amb.zero(), amb.neg(&amb.one())],
        ]);
        let frame = frame_for(&amb, &image_x, &image_y, &xi);
        (Construction::Symmetric, image_x, image_y, frame)
    } else {
        // The standard construction picks the frame by branch; the other one is the fallback
        // when the branch's field-degree assumptions fail.
        let in_half = |m: &Matrix| m.entries().iter().all(|z| tower.in_subfield(z, k / 2));
        let beta_frame = || {
            let beta = amb.sqrt(&amb.neg(&amb.one()))?;
            let z = Matrix::from_rows(vec![
                vec![amb.neg(&sigma), beta.clone()],
                vec![amb.mul(&beta, &xi), amb.one()],
            ]);
            let frame = z.inverse(&amb)?;
            let (x_img, y_img) = (nat_x.conjugate_by(&frame, &amb), nat_y.conjugate_by(&frame, &amb));
            (in_half(&x_img) && in_half(&y_img)).then_some((Construction::BetaFrame, x_img, y_img, frame))
        };
        // The adjusted s first, then further lifts s + jN: the
        // entries land in F_q(ξ+ξ^s, ξ^{s+1}) once θ^s is the conjugate θ^{q^{k/2}}.
        let theta_frame = || {
            (0..8u64).find_map(|j| {
                let frame = theta_frame(&tower, &xi, &sigma, n, g.s_adjusted() + j * g.cyclic_order())?;
                let (x_img, y_img) = (nat_x.conjugate_by(&frame, &amb), nat_y.conjugate_by(&frame, &amb));
                (in_half(&x_img) && in_half(&y_img)).then_some((Construction::ThetaFrame, x_img, y_img, frame))
            })
        };
        let found = if theta_branch { theta_frame().or_else(beta_frame) } else { beta_frame().or_else(theta_frame) };
        found.expect("a β- or θ-frame puts the images over the half field")
    };
    assert_eq!(nat_x.conjugate_by(&frame, &amb), image_x, "frame reproduces the image of x");
    assert_eq!(nat_y.conjugate_by(&frame, &amb), image_y, "frame reproduces the image of y");
    WedderburnComponent {
        l: 2,
        m: k / 2,
        multiplicity: 1,
        source: ComponentSource::SelfInvolutive { factor: i },
        construction,
        tower,
        root: xi,
        eta: None,
        image_x,
        image_y,
        frame,
        case_label: None,
    }
}

/// `Z = [[a, b], [-ξa, -ξ^s b]]` with `θ^{2^k} = ξ`, `k = ν₂(s+1) - ν₂(n)`,
/// `a^2 = -θ` and `b^2 = θ^s`, for the lift `s` given.
fn theta_frame(tower: &Tower, xi: &FieldElem, sigma: &FieldElem, n: u64, s: u64) -> Option<Matrix> {
    let amb = tower.ambient();
    let steps = padic_valuation(2, (s + 1) as i128).unwrap().checked_sub(padic_valuation(2, n as i128).unwrap())?;
    let mut theta = xi.clone();
    for _ in 0..steps {
        theta = amb.sqrt(&theta)?;
    }
    let a = amb.sqrt(&amb.neg(&theta))?;
    let b = amb.sqrt(&amb.pow(&theta, s))?;
    Some(Matrix::from_rows(vec![
        vec![a.clone(), b.clone()],
        vec![amb.neg(&amb.mul(xi, &a)), amb.neg(&amb.mul(sigma, &b))],
    ]))
}

fn pair_component(
    g: &GroupPresentation,
    base: &Field,
    report: &FactorizationReport,
    i: usize,
    j: usize,
) -> WedderburnComponent {
    let f = &report.factors[i];
    let k = f.degree();
    let tower = Tower::new(base, k);
    let amb = tower.ambient().clone();
    let xi = find_root(&tower, &f.poly, f.root_order);
    let sigma = amb.pow(&xi, g.s());
    let xi_e = amb.pow(&xi, g.y_square_exponent());
    let (image_x, image_y) = natural_images(&amb, &xi, &sigma, &xi_e);
    WedderburnComponent {
        l: 2,
        m: k,
        multiplicity: 1,
        source: ComponentSource::Pair { factor: i, partner: j },
        construction: Construction::Natural,
        frame: Matrix::identity(&amb, 2),
        tower,
        root: xi,
        eta: None,
        image_x,
        image_y,
        case_label: None,
    }
}

/// The defining relations hold for the images and every entry lies in
/// `F_{q^m}`.
pub fn component_matrices_check(c: &WedderburnComponent, g: &GroupPresentation) -> bool {
    let amb = c.field();
    let (x, y) = (&c.image_x, &c.image_y);
    if x.size() != c.l || y.size() != c.l {
        return false;
    }
    let relations = x.pow(g.cyclic_order(), amb).is_identity(amb)
        && y.mul(y, amb) == x.pow(g.y_square_exponent(), amb)
        && x.mul(y, amb) == y.mul(&x.pow(g.s(), amb), amb);
    relations && x.entries().iter().chain(y.entries()).all(|z| c.tower.in_subfield(z, c.m))
}

/// The abelian part as the non-split abelianization lemma states it, as
/// `(m, count)` pairs; `None` for split groups.
pub fn abelian_part_predicted(g: &GroupPresentation) -> Option<Vec<(usize, usize)>> {
    use crate::ffield::int::{divisors, euler_phi, ord_mod};
    use crate::group::AbelianCase;
    let case = g.abelian_case()?;
    let q = g.q();
    let d = g.d();
    let mut out: BTreeMap<usize, usize> = BTreeMap::new();
    let mut add = |m: u64, count: u64| *out.entry(m as usize).or_insert(0) += count as usize;
    match case {
        AbelianCase::SOneMod4 => {
            for l in divisors(d) {
                let o = ord_mod(l, q).unwrap();
                add(o, 2 * euler_phi(l) / o);
            }
        }
        AbelianCase::SThreeQOne => {
            for l in divisors(d / 2) {
                let o = ord_mod(l, q).unwrap();
                add(o, 4 * euler_phi(l) / o);
            }
        }
        AbelianCase::SThreeQThree => {
            for l in divisors(d / 2) {
                let o = ord_mod(l, q).unwrap();
                add(o, 2 * euler_phi(l) / o);
                let o2 = ord_mod(l, q * q).unwrap();
                add(2 * o2, euler_phi(l) / o2);
            }
        }
    }
    Some(out.into_iter().collect())
}

/// Census of the abelianization `G/⟨x^{s-1}⟩`: number of simple components
/// of `F_q G_ab` by the Perlis-Walker count `Σ_k n_k / ord_k(q)`, where
/// `n_k` is the number of elements of order `k`.
pub fn perlis_walker_count(g: &GroupPresentation) -> usize {
    use crate::ffield::int::ord_mod;
    let d = g.d();
    let e = g.y_square_exponent() % d;
    // elements x^i y^j of G_ab, i mod d, j in {0, 1}, with y^2 = x^e
    let mul = |(i1, j1): (u64, u64), (i2, j2): (u64, u64)| {
        let carry = if j1 + j2 == 2 { e } else { 0 };
        ((i1 + i2 + carry) % d, (j1 + j2) % 2)
    };
    let mut total = 0usize;
    let mut census: BTreeMap<u64, u64> = BTreeMap::new();
    for j in 0..2 {
        for i in 0..d {
            let el = (i, j);
            let mut acc = el;
            let mut k = 1;
            while acc != (0, 0) {
                acc = mul(acc, el);
                k += 1;
            }
            *census.entry(k).or_insert(0) += 1;
        }
    }
    for (k, count) in census {
        total += (count / ord_mod(k, g.q()).unwrap()) as usize;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(kind: GroupKind, n: u64, s: u64, q: u64) -> GroupPresentation {
        GroupPresentation::new(kind, n, s, q).unwrap()
    }

    #[test]
    fn dihedral_eight_over_f3() {
        let dec = decompose_split(&group(GroupKind::Split, 4, 3, 3)).unwrap();
        let shape: Vec<_> = dec.shape().into_iter().collect();
        assert_eq!(shape, vec![((1, 1), 4), ((2, 1), 1)]);
        assert_eq!(dec.dimension_sum(), 8);
        assert!(dec.components.iter().all(|c| component_matrices_check(c, &dec.group)));
    }

    #[test]
    fn quaternion_eight_over_f3() {
        let dec = decompose_nonsplit(&group(GroupKind::NonSplit, 2, 3, 3)).unwrap();
        let shape: Vec<_> = dec.shape().into_iter().collect();
        assert_eq!(shape, vec![((1, 1), 4), ((2, 1), 1)]);
        assert!(dec.components.iter().all(|c| component_matrices_check(c, &dec.group)));
        assert_eq!(perlis_walker_count(&dec.group), 4);
        assert_eq!(abelian_part_predicted(&dec.group), Some(vec![(1, 2), (2, 1)]));
    }

    #[test]
    fn corrupted_image_fails_the_check() {
        let dec = decompose(&group(GroupKind::Split, 4, 3, 3)).unwrap();
        let mut c = dec.components.iter().find(|c| c.l == 2).unwrap().clone();
        let amb = c.field().clone();
        c.image_y.set(0, 1, amb.add(c.image_y.get(0, 1), &amb.one()));
        assert!(!component_matrices_check(&c, &dec.group));
    }

    #[test]
    fn printed_images_match_the_frames() {
        for (kind, n, s, q) in [
            (GroupKind::NonSplit, 2, 3, 5),
            (GroupKind::NonSplit, 8, 7, 3),
            (GroupKind::NonSplit, 4, 7, 13),
            (GroupKind::NonSplit, 2, 3, 3),
            (GroupKind::NonSplit, 6, 11, 7),
        ] {
            let g = group(kind, n, s, q);
            let dec = decompose(&g).unwrap();
            for c in dec.components.iter().filter(|c| c.l == 2) {
                assert!(component_matrices_check(c, &g), "{g} {:?}", c.construction);
                let amb = c.field();
                let xi = &c.root;
                let sigma = amb.pow(xi, g.s());
                let trace = amb.add(xi, &sigma);
                let norm = amb.mul(xi, &sigma);
                match c.construction {
                    Construction::BetaFrame => {
                        let beta = amb.neg(c.image_y.get(0, 0));
                        assert_eq!(c.image_y.get(1, 0), &amb.neg(&trace));
                        assert_eq!(c.image_y.get(1, 1), &beta);
                        assert_eq!(c.image_x.get(0, 1), &beta);
                        // the lower-left entry carries an extra factor β
                        assert_eq!(c.image_x.get(1, 0), &amb.mul(&beta, &norm));
                    }
                    Construction::ThetaFrame => {
                        assert_eq!(c.image_x.get(0, 1), &amb.neg(&amb.one()));
                        assert_eq!(c.image_x.get(1, 0), &norm);
                        assert_eq!(c.image_x.get(1, 1), &trace);
                    }
                    _ => {}
                }
            }
        }
    }
}
