//! Brute-force ground truth for `F_q G`: multiplication through the group
//! table, the center by linear algebra, idempotent predicates, and
//! interpolation of an element from its images in the simple components.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::ffield::Tower;
use crate::matrix::Matrix;
use crate::wedderburn::{ComponentSource, Decomposition, WedderburnComponent};
use crate::{Error, Field, FieldElem, GroupPresentation, Poly, Result};

/// `|G| × |G|` table of product indices in normal-form order.
#[derive(Clone, Debug)]
pub struct MultiplicationTable {
    size: usize,
    products: Vec<u32>,
}

impl MultiplicationTable {
    /// Rewrites `x^i y^j · x^k y^l = x^{i + s^j k} y^{j+l}`, folding `y^2`
    /// into `x^e`.
    pub fn new(g: &GroupPresentation) -> Self {
        let n = g.cyclic_order();
        let e = g.y_square_exponent();
        let elements = g.elements();
        let size = elements.len();
        let mut products = Vec::with_capacity(size * size);
        for &(i, j) in &elements {
            for &(k, l) in &elements {
                let twisted = if j == 1 { (k * g.s()) % n } else { k };
                let mut exp = i + twisted;
                if j + l == 2 {
                    exp += e;
                }
                products.push(g.index_of(exp % n, (j + l) % 2) as u32);
            }
        }
        MultiplicationTable { size, products }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.products[a * self.size + b] as usize
    }

    /// Checks `(ab)c = a(bc)` on the triples given.
    pub fn associative_on(&self, triples: impl IntoIterator<Item = (usize, usize, usize)>) -> bool {
        triples
            .into_iter()
            .all(|(a, b, c)| self.product(self.product(a, b), c) == self.product(a, self.product(b, c)))
    }

    pub fn associative_exhaustive(&self) -> bool {
        let n = self.size;
        self.associative_on((0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))))
    }
}

/// Field arithmetic on element indices, tabulated for small fields.
#[derive(Clone, Debug)]
struct Arith {
    field: Field,
    q: usize,
    tables: Option<(Vec<u32>, Vec<u32>)>,
}

const TABLE_LIMIT: u64 = 1024;

impl Arith {
    fn new(field: &Field) -> Self {
        let q = field.order_u64().expect("base field is enumerable");
        let tables = (q <= TABLE_LIMIT).then(|| {
            let elems: Vec<FieldElem> = field.elements().collect();
            let idx = |a: &FieldElem| field.to_index(a).unwrap() as u32;
            let mut add = Vec::with_capacity((q * q) as usize);
            let mut mul = Vec::with_capacity((q * q) as usize);
            for a in &elems {
                for b in &elems {
                    add.push(idx(&field.add(a, b)));
                    mul.push(idx(&field.mul(a, b)));
                }
            }
            (add, mul)
        });
        Arith { field: field.clone(), q: q as usize, tables }
    }

    fn idx(&self, a: &FieldElem) -> u32 {
        self.field.to_index(a).unwrap() as u32
    }

    fn elem(&self, k: u32) -> FieldElem {
        self.field.from_index(k as u64)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some((add, _)) => add[a as usize * self.q + b as usize],
            None => self.idx(&self.field.add(&self.elem(a), &self.elem(b))),
        }
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some((_, mul)) => mul[a as usize * self.q + b as usize],
            None => self.idx(&self.field.mul(&self.elem(a), &self.elem(b))),
        }
    }

    fn neg(&self, a: u32) -> u32 {
        self.idx(&self.field.neg(&self.elem(a)))
    }

    fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    fn inv(&self, a: u32) -> u32 {
        self.idx(&self.field.inv(&self.elem(a)).expect("nonzero pivot"))
    }
}

/// An element of `F_q G` as its coefficient vector in normal-form order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    group: GroupPresentation,
    coeffs: Vec<FieldElem>,
}

impl AlgebraElement {
    pub fn group(&self) -> &GroupPresentation {
        &self.group
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Splits `u = P(x) + Q(x) y`.
    pub fn to_pq(&self, field: &Field) -> (Poly, Poly) {
        let n = self.group.cyclic_order() as usize;
        (Poly::new(field, self.coeffs[..n].to_vec()), Poly::new(field, self.coeffs[n..].to_vec()))
    }
}

/// The group algebra over `F_q` with its multiplication table.
#[derive(Clone, Debug)]
pub struct Oracle {
    group: GroupPresentation,
    field: Field,
    table: MultiplicationTable,
    arith: Arith,
}

impl Oracle {
    pub fn new(group: &GroupPresentation, field: &Field) -> Self {
        Oracle {
            group: group.clone(),
            field: field.clone(),
            table: MultiplicationTable::new(group),
            arith: Arith::new(field),
        }
    }

    pub fn group(&self) -> &GroupPresentation {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn table(&self) -> &MultiplicationTable {
        &self.table
    }

    pub fn zero(&self) -> AlgebraElement {
        self.element(vec![self.field.zero(); self.table.size()]).unwrap()
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis(0, 0)
    }

    /// `x^i y^j`.
    pub fn basis(&self, i: u64, j: u8) -> AlgebraElement {
        let mut coeffs = vec![self.field.zero(); self.table.size()];
        coeffs[self.group.index_of(i, j)] = self.field.one();
        AlgebraElement { group: self.group.clone(), coeffs }
    }

    pub fn element(&self, coeffs: Vec<FieldElem>) -> Result<AlgebraElement> {
        if coeffs.len() != self.table.size() {
            return Err(Error::GroupMismatch);
        }
        Ok(AlgebraElement { group: self.group.clone(), coeffs })
    }

    /// `P(x) + Q(x) y` with `P, Q` reduced mod `x^N - 1`.
    pub fn from_pq(&self, p: &Poly, q: &Poly) -> AlgebraElement {
        let n = self.group.cyclic_order() as usize;
        let mut coeffs = vec![self.field.zero(); 2 * n];
        for (shift, poly) in [(0, p), (n, q)] {
            for (k, c) in poly.coeffs().iter().enumerate() {
                let slot = shift + k % n;
                coeffs[slot] = self.field.add(&coeffs[slot], c);
            }
        }
        AlgebraElement { group: self.group.clone(), coeffs }
    }

    fn check(&self, u: &AlgebraElement) -> Result<()> {
        if u.group != self.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    fn indices(&self, u: &AlgebraElement) -> Vec<u32> {
        u.coeffs.iter().map(|c| self.arith.idx(c)).collect()
    }

    fn from_indices(&self, v: &[u32]) -> AlgebraElement {
        AlgebraElement { group: self.group.clone(), coeffs: v.iter().map(|&k| self.arith.elem(k)).collect() }
    }

    pub fn add(&self, u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(u)?;
        self.check(v)?;
        let coeffs = u.coeffs.iter().zip(&v.coeffs).map(|(a, b)| self.field.add(a, b)).collect();
        Ok(AlgebraElement { group: self.group.clone(), coeffs })
    }

    pub fn sub(&self, u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(u)?;
        self.check(v)?;
        let coeffs = u.coeffs.iter().zip(&v.coeffs).map(|(a, b)| self.field.sub(a, b)).collect();
        Ok(AlgebraElement { group: self.group.clone(), coeffs })
    }

    pub fn scale(&self, c: &FieldElem, u: &AlgebraElement) -> AlgebraElement {
        AlgebraElement { group: u.group.clone(), coeffs: u.coeffs.iter().map(|a| self.field.mul(a, c)).collect() }
    }

    /// Convolution through the multiplication table.
    pub fn multiply(&self, u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.from_indices(&self.multiply_indices(&self.indices(u), &self.indices(v))))
    }

    fn multiply_indices(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let n = self.table.size();
        let mut out = vec![0u32; n];
        let right: Vec<(usize, u32)> = (0..n).filter(|&b| v[b] != 0).map(|b| (b, v[b])).collect();
        for (a, &ua) in u.iter().enumerate().filter(|(_, &c)| c != 0) {
            for &(b, vb) in &right {
                let slot = self.table.product(a, b);
                out[slot] = self.arith.add(out[slot], self.arith.mul(ua, vb));
            }
        }
        out
    }

    fn power_indices(&self, u: &[u32], mut e: u64) -> Vec<u32> {
        let mut acc = self.indices(&self.one());
        let mut base = u.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply_indices(&acc, &base);
            }
            base = self.multiply_indices(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Basis of the center: the common kernel of `z ↦ zx - xz` and `z ↦ zy - yz`.
    pub fn center_basis(&self) -> Vec<AlgebraElement> {
        self.center_kernel().0.iter().map(|v| self.from_indices(v)).collect()
    }

    /// Kernel vectors and their free columns; kernel vector `j` is 1 at
    /// free column `j` and 0 at the others.
    fn center_kernel(&self) -> (Vec<Vec<u32>>, Vec<usize>) {
        let n = self.table.size();
        let gens = [self.group.index_of(1, 0), self.group.index_of(0, 1)];
        let one = self.arith.idx(&self.field.one());
        let minus_one = self.arith.neg(one);
        let mut rows = vec![vec![0u32; n]; 2 * n];
        for (gi, &g) in gens.iter().enumerate() {
            for k in 0..n {
                let left = self.table.product(k, g);
                let right = self.table.product(g, k);
                let r = &mut rows[gi * n..];
                r[left][k] = self.arith.add(r[left][k], one);
                r[right][k] = self.arith.add(r[right][k], minus_one);
            }
        }
        nullspace(&self.arith, rows, n)
    }

    /// `F_q`-dimension of `{z ∈ Z(F_q G) : z^q = z}`, the number of simple
    /// components.
    pub fn frobenius_fixed_dimension(&self) -> usize {
        let (basis, free) = self.center_kernel();
        let b = basis.len();
        let q = self.field.order_u64().unwrap();
        let one = self.arith.idx(&self.field.one());
        // row i holds the coordinates of basis[i]^q - basis[i]
        let rows: Vec<Vec<u32>> = basis
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let pw = self.power_indices(v, q);
                (0..b)
                    .map(|j| {
                        let c = pw[free[j]];
                        if i == j { self.arith.sub(c, one) } else { c }
                    })
                    .collect()
            })
            .collect();
        b - rank(&self.arith, rows, b)
    }

    pub fn is_idempotent(&self, u: &AlgebraElement) -> bool {
        self.multiply(u, u).map(|sq| &sq == u).unwrap_or(false)
    }

    /// Commutes with `x` and `y`.
    pub fn is_central(&self, u: &AlgebraElement) -> bool {
        [self.basis(1, 0), self.basis(0, 1)].iter().all(|g| {
            matches!((self.multiply(u, g), self.multiply(g, u)), (Ok(a), Ok(b)) if a == b)
        })
    }

    /// Pairwise products vanish in both orders. The reverse product is
    /// skipped when both factors are central, since they then commute.
    pub fn are_orthogonal(&self, items: &[AlgebraElement]) -> bool {
        if items.iter().any(|u| self.check(u).is_err()) {
            return false;
        }
        let idx: Vec<Vec<u32>> = items.iter().map(|u| self.indices(u)).collect();
        let central: Vec<bool> = items.iter().map(|u| self.is_central(u)).collect();
        let vanishes = |i: usize, j: usize| self.multiply_indices(&idx[i], &idx[j]).iter().all(|&c| c == 0);
        (0..idx.len()).all(|i| {
            (i + 1..idx.len()).all(|j| vanishes(i, j) && ((central[i] && central[j]) || vanishes(j, i)))
        })
    }

    pub fn sums_to_one(&self, items: &[AlgebraElement]) -> bool {
        let total = items.iter().try_fold(self.zero(), |acc, u| self.add(&acc, u));
        total.ok() == Some(self.one())
    }

    /// Image `P(X) + Q(X) Y` of `u` in a component.
    pub fn image_of(&self, c: &WedderburnComponent, u: &AlgebraElement) -> Matrix {
        let amb = c.field();
        let (p, q) = u.to_pq(&self.field);
        let horner = |poly: &Poly| {
            poly.coeffs().iter().rev().fold(Matrix::zero(amb, c.l), |acc, coeff| {
                let term = Matrix::identity(amb, c.l).scale(&c.tower.embed(coeff), amb);
                acc.mul(&c.image_x, amb).add(&term, amb)
            })
        };
        horner(&p).add(&horner(&q).mul(&c.image_y, amb), amb)
    }

    /// The unique `u = P(x) + Q(x) y` whose image in component `k` is
    /// `targets[k]`, by interpolation on each factor of `x^N - 1` and CRT.
    pub fn interpolate_idempotent(&self, dec: &Decomposition, targets: &[Matrix]) -> Result<AlgebraElement> {
        if targets.len() != dec.components.len() || dec.group != self.group {
            return Err(Error::InconsistentPrescription(format!(
                "{} targets for {} components",
                targets.len(),
                dec.components.len()
            )));
        }
        let field = &self.field;
        let nf = dec.report.factors.len();
        let mut p_parts: Vec<Option<Poly>> = vec![None; nf];
        let mut q_parts: Vec<Option<Poly>> = vec![None; nf];
        let bad = |what: &str| Error::InconsistentPrescription(alloc::string::String::from(what));

        for (k, c) in dec.components.iter().enumerate() {
            let amb = c.field();
            let target = &targets[k];
            if target.size() != c.l {
                return Err(bad("target size differs from the component size"));
            }
            let two_inv = amb.inv(&amb.from_int(2)).unwrap();
            match c.source {
                ComponentSource::Abelian { factor, sign } => {
                    let f = &dec.report.factors[factor];
                    let eta = c.eta.clone().unwrap();
                    let v = target.get(0, 0).clone();
                    let (pv, qv) = match sign {
                        0 => {
                            let conj = c.tower.frobenius(&v, f.degree());
                            let pv = amb.mul(&amb.add(&v, &conj), &two_inv);
                            let qv = amb.div(&amb.mul(&amb.sub(&v, &conj), &two_inv), &eta).unwrap();
                            (pv, qv)
                        }
                        -1 => continue,
                        _ => {
                            let partner = dec
                                .components
                                .iter()
                                .position(|o| o.source == ComponentSource::Abelian { factor, sign: -1 })
                                .expect("both signs are listed");
                            let w = targets[partner].get(0, 0).clone();
                            let pv = amb.mul(&amb.add(&v, &w), &two_inv);
                            let qv = amb.div(&amb.mul(&amb.sub(&v, &w), &two_inv), &eta).unwrap();
                            (pv, qv)
                        }
                    };
                    p_parts[factor] = Some(lagrange(&c.tower, &f.poly, &c.root, &pv).ok_or_else(|| bad("value outside F_q(θ)"))?);
                    q_parts[factor] = Some(lagrange(&c.tower, &f.poly, &c.root, &qv).ok_or_else(|| bad("value outside F_q(θ)"))?);
                }
                ComponentSource::SelfInvolutive { factor } | ComponentSource::Pair { factor, .. } => {
                    let xi = &c.root;
                    let sigma = amb.pow(xi, self.group.s());
                    let xi_e = amb.pow(xi, self.group.y_square_exponent());
                    let frame_inv = c.frame.inverse(amb).unwrap();
                    let m = frame_inv.mul(target, amb).mul(&c.frame, amb);
                    let p_xi = m.get(0, 0).clone();
                    let q_xi = amb.div(m.get(0, 1), &xi_e).unwrap();
                    let p_sigma = m.get(1, 1).clone();
                    let q_sigma = m.get(1, 0).clone();
                    let f = &dec.report.factors[factor];
                    p_parts[factor] = Some(lagrange(&c.tower, &f.poly, xi, &p_xi).ok_or_else(|| bad("value outside F_q(ξ)"))?);
                    q_parts[factor] = Some(lagrange(&c.tower, &f.poly, xi, &q_xi).ok_or_else(|| bad("value outside F_q(ξ)"))?);
                    match c.source {
                        ComponentSource::Pair { partner, .. } => {
                            let g = &dec.report.factors[partner].poly;
                            p_parts[partner] =
                                Some(lagrange(&c.tower, g, &sigma, &p_sigma).ok_or_else(|| bad("value outside F_q(ξ^s)"))?);
                            q_parts[partner] =
                                Some(lagrange(&c.tower, g, &sigma, &q_sigma).ok_or_else(|| bad("value outside F_q(ξ^s)"))?);
                        }
                        _ => {
                            // ξ^s is a Galois conjugate of ξ; the values there are forced
                            let p_poly = p_parts[factor].as_ref().unwrap();
                            let q_poly = q_parts[factor].as_ref().unwrap();
                            let at_sigma = |poly: &Poly| c.tower.embed_poly(poly).eval(&sigma);
                            if at_sigma(p_poly) != p_sigma || at_sigma(q_poly) != q_sigma {
                                return Err(bad("values at ξ and ξ^s are not Galois conjugate"));
                            }
                        }
                    }
                }
            }
        }

        let n = self.group.cyclic_order() as usize;
        let big = Poly::x_pow_minus_one(field, n);
        let mut p = Poly::zero(field);
        let mut q = Poly::zero(field);
        for (i, f) in dec.report.factors.iter().enumerate() {
            let e = crt_idempotent(&f.poly, &big);
            let (Some(pi), Some(qi)) = (&p_parts[i], &q_parts[i]) else {
                return Err(bad("a factor has no prescription"));
            };
            p = p.add(&pi.mul(&e));
            q = q.add(&qi.mul(&e));
        }
        Ok(self.from_pq(&p.rem(&big), &q.rem(&big)))
    }
}

/// `e ≡ 1 (mod f)`, `e ≡ 0 (mod (x^N-1)/f)`, by the extended Euclidean algorithm.
pub fn crt_idempotent(f: &Poly, x_n_minus_1: &Poly) -> Poly {
    let cofactor = x_n_minus_1.exact_div(f);
    let h = Poly::inverse_mod(&cofactor.rem(f), f).expect("x^N - 1 is squarefree");
    cofactor.mul(&h)
}

/// `P ∈ F_q[x]`, `deg P < deg f`, with `P(ξ) = value`; `None` unless the
/// value lies in `F_q(ξ)`.
pub fn lagrange(tower: &Tower, f: &Poly, xi: &FieldElem, value: &FieldElem) -> Option<Poly> {
    let amb = tower.ambient();
    let k = f.degree().unwrap();
    if !tower.in_subfield(value, k) {
        return None;
    }
    let q = tower.q();
    let conjugates = |a: &FieldElem| {
        let mut out = Vec::with_capacity(k);
        let mut cur = a.clone();
        for _ in 0..k {
            let next = amb.pow(&cur, q);
            out.push(core::mem::replace(&mut cur, next));
        }
        out
    };
    let roots = conjugates(xi);
    let values = conjugates(value);
    // P = Σ_j v_j · f(x) / ((x - ξ_j) f'(ξ_j))
    let big_f = tower.embed_poly(f);
    let fc = big_f.coeffs();
    let deriv = big_f.formal_derivative();
    let mut acc = vec![amb.zero(); k];
    for (r, v) in roots.iter().zip(&values) {
        let scale = amb.div(v, &deriv.eval(r)).unwrap();
        // synthetic division of f by x - r
        let mut b = fc[k].clone();
        for i in (0..k).rev() {
            acc[i] = amb.add(&acc[i], &amb.mul(&b, &scale));
            b = amb.add(&fc[i], &amb.mul(r, &b));
        }
    }
    let acc = Poly::new(amb, acc);
    tower.restrict_poly(&acc)
}

/// Kernel of the `rows × ncols` system by Gauss-Jordan elimination with
/// first-nonzero pivots.
fn nullspace(ar: &Arith, mut rows: Vec<Vec<u32>>, ncols: usize) -> (Vec<Vec<u32>>, Vec<usize>) {
    let pivots = reduce(ar, &mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&fc| {
            let mut v = vec![0u32; ncols];
            v[fc] = ar.idx(&ar.field.one());
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = ar.neg(rows[r][fc]);
            }
            v
        })
        .collect();
    (basis, free)
}

fn rank(ar: &Arith, mut rows: Vec<Vec<u32>>, ncols: usize) -> usize {
    reduce(ar, &mut rows, ncols).len()
}

/// Reduced row echelon form in place; returns the pivot columns.
fn reduce(ar: &Arith, rows: &mut [Vec<u32>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = ar.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = ar.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c];
                for j in 0..ncols {
                    let t = ar.mul(factor, rows[r][j]);
                    rows[i][j] = ar.sub(rows[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupKind;
    use crate::wedderburn::{base_field, decompose};

    fn setup(kind: GroupKind, n: u64, s: u64, q: u64) -> (Oracle, Decomposition) {
        let g = GroupPresentation::new(kind, n, s, q).unwrap();
        let dec = decompose(&g).unwrap();
        (Oracle::new(&g, &base_field(q).unwrap()), dec)
    }

    #[test]
    fn table_realizes_the_relations() {
        for (kind, n, s) in [(GroupKind::Split, 4, 3), (GroupKind::NonSplit, 2, 3), (GroupKind::NonSplit, 4, 5)] {
            let (o, _) = setup(kind, n, s, 3);
            assert!(o.table().associative_exhaustive());
            let (x, y) = (o.basis(1, 0), o.basis(0, 1));
            let xy = o.multiply(&x, &y).unwrap();
            let yxs = o.multiply(&y, &o.basis(s, 0)).unwrap();
            assert_eq!(xy, yxs);
            let yy = o.multiply(&y, &y).unwrap();
            assert_eq!(yy, o.basis(o.group().y_square_exponent(), 0));
            assert_eq!(o.multiply(&x, &o.one()).unwrap(), x);
        }
    }

    #[test]
    fn centers_of_the_order_eight_groups() {
        let (d8, _) = setup(GroupKind::Split, 4, 3, 3);
        assert_eq!(d8.center_basis().len(), 5);
        assert_eq!(d8.frobenius_fixed_dimension(), 5);
        let (q8, _) = setup(GroupKind::NonSplit, 2, 3, 3);
        assert_eq!(q8.center_basis().len(), 5);
        let (ab, _) = setup(GroupKind::Split, 3, 1, 7);
        assert_eq!(ab.center_basis().len(), 6);
        // D10 over F_3: center dimension 4, but only 3 components
        let (d10, dec) = setup(GroupKind::Split, 5, 4, 3);
        assert_eq!(d10.center_basis().len(), 4);
        assert_eq!(d10.frobenius_fixed_dimension(), 3);
        assert_eq!(dec.component_count(), 3);
    }

    #[test]
    fn predicates_on_small_examples() {
        let (o, _) = setup(GroupKind::Split, 4, 3, 3);
        let f = o.field().clone();
        assert!(o.is_idempotent(&o.one()) && o.is_central(&o.one()));
        let two_inv = f.inv(&f.from_int(2)).unwrap();
        let half_one_plus_y = o.scale(&two_inv, &o.add(&o.one(), &o.basis(0, 1)).unwrap());
        assert!(o.is_idempotent(&half_one_plus_y));
        assert!(!o.is_central(&half_one_plus_y));
        let e = o.from_pq(&Poly::from_ints(&f, &[-1, 0, 1]), &Poly::zero(&f));
        assert!(o.is_idempotent(&e) && o.is_central(&e));
        let other = o.sub(&o.one(), &e).unwrap();
        assert!(o.are_orthogonal(&[e.clone(), other.clone()]));
        assert!(o.sums_to_one(&[e, other]));
    }

    #[test]
    fn interpolation_inverts_the_component_images() {
        for (kind, n, s, q) in [
            (GroupKind::Split, 4, 3, 3),
            (GroupKind::NonSplit, 2, 3, 3),
            (GroupKind::NonSplit, 6, 11, 7),
            (GroupKind::Split, 8, 5, 3),
            (GroupKind::NonSplit, 3, 5, 5),
        ] {
            let (o, dec) = setup(kind, n, s, q);
            let f = o.field().clone();
            let u = o.from_pq(&Poly::from_ints(&f, &[1, 2, 0, 1]), &Poly::from_ints(&f, &[0, 1, 1]));
            let images: Vec<Matrix> = dec.components.iter().map(|c| o.image_of(c, &u)).collect();
            assert_eq!(o.interpolate_idempotent(&dec, &images).unwrap(), u, "{}", o.group());
            let ones: Vec<Matrix> = dec.components.iter().map(|c| Matrix::identity(c.field(), c.l)).collect();
            assert_eq!(o.interpolate_idempotent(&dec, &ones).unwrap(), o.one());
        }
    }

    #[test]
    fn dihedral_m2_identity_interpolates_to_x2_minus_1() {
        let (o, dec) = setup(GroupKind::Split, 4, 3, 3);
        let f = o.field().clone();
        let targets: Vec<Matrix> = dec
            .components
            .iter()
            .map(|c| if c.l == 2 { Matrix::identity(c.field(), 2) } else { Matrix::zero(c.field(), 1) })
            .collect();
        let e = o.interpolate_idempotent(&dec, &targets).unwrap();
        assert_eq!(e, o.from_pq(&Poly::from_ints(&f, &[-1, 0, 1]), &Poly::zero(&f)));
        let bad: Vec<Matrix> = targets[..1].to_vec();
        assert!(matches!(o.interpolate_idempotent(&dec, &bad), Err(Error::InconsistentPrescription(_))));
    }
}
