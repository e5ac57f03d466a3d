use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::Field;
use super::FieldElem;
use crate::Poly;

/// A base field `F_q` embedded in an extension `F_{q^k}`, both realized over
/// the same prime field.
///
/// Every subfield `F_{q^u}` (`u | k`) is handled inside the ambient field by
/// the Frobenius fixed-point test, so the only explicit map needed is the
/// base-field embedding and its partial inverse.
#[derive(Clone, Debug)]
pub struct Tower {
    base: Field,
    ambient: Field,
    q: u64,
    rel_degree: usize,
    /// Ambient image of the base element with index `i`.
    images: Vec<FieldElem>,
    preimages: BTreeMap<FieldElem, FieldElem>,
}

impl Tower {
    /// Builds `F_{q^k}` over `base = F_q`. The base field must be small
    /// enough to tabulate.
    pub fn new(base: &Field, rel_degree: usize) -> Tower {
        let q = base.order_u64().expect("base field too large to tabulate");
        let p = base.p();
        let ambient = Field::new(p, base.degree() * rel_degree).expect("valid ambient field");
        let root = if base.degree() == 1 {
            ambient.zero()
        } else {
            // a root of the base modulus among the q elements fixed by z -> z^q
            let w = ambient.element_of_order(q - 1).expect("F_q^* sits inside F_{q^k}^*");
            let modulus: Vec<FieldElem> =
                base.modulus().iter().map(|&c| ambient.from_int(c as i64)).collect();
            let modulus = Poly::new(&ambient, modulus);
            let mut z = ambient.one();
            loop {
                if ambient.is_zero(&modulus.eval(&z)) {
                    break z;
                }
                z = ambient.mul(&z, &w);
                assert!(!ambient.is_one(&z), "base modulus has no root in the ambient field");
            }
        };
        let mut images = Vec::with_capacity(q as usize);
        let mut preimages = BTreeMap::new();
        for elem in base.elements() {
            let img = elem
                .coeffs()
                .iter()
                .rev()
                .fold(ambient.zero(), |acc, &c| {
                    let acc = if base.degree() == 1 { acc } else { ambient.mul(&acc, &root) };
                    ambient.add(&acc, &ambient.from_int(c as i64))
                });
            preimages.insert(img.clone(), elem);
            images.push(img);
        }
        Tower { base: base.clone(), ambient, q, rel_degree, images, preimages }
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn ambient(&self) -> &Field {
        &self.ambient
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `k = [F_{q^k} : F_q]`.
    pub fn rel_degree(&self) -> usize {
        self.rel_degree
    }

    pub fn embed(&self, a: &FieldElem) -> FieldElem {
        let i = self.base.to_index(a).expect("tabulated base field");
        self.images[i as usize].clone()
    }

    /// The base-field preimage, when `a` lies in `F_q`.
    pub fn restrict(&self, a: &FieldElem) -> Option<FieldElem> {
        self.preimages.get(a).cloned()
    }

    pub fn embed_poly(&self, f: &Poly) -> Poly {
        Poly::new(&self.ambient, f.coeffs().iter().map(|c| self.embed(c)).collect())
    }

    /// Restricts every coefficient; `None` if one lies outside `F_q`.
    pub fn restrict_poly(&self, f: &Poly) -> Option<Poly> {
        let coeffs: Option<Vec<_>> = f.coeffs().iter().map(|c| self.restrict(c)).collect();
        Some(Poly::new(&self.base, coeffs?))
    }

    /// `a^(q^j)`.
    pub fn frobenius(&self, a: &FieldElem, j: usize) -> FieldElem {
        self.ambient.frobenius(a, self.q, j)
    }

    /// Does `a` lie in `F_{q^u}`?
    pub fn in_subfield(&self, a: &FieldElem, u: usize) -> bool {
        self.ambient.in_subfield(a, self.q, u)
    }

    /// Degree of `F_q(a)` over `F_q`: the size of the Frobenius orbit of `a`.
    pub fn degree_of(&self, a: &FieldElem) -> usize {
        let mut z = self.frobenius(a, 1);
        let mut k = 1;
        while &z != a {
            z = self.frobenius(&z, 1);
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let base = Field::new(3, 2).unwrap();
        let tower = Tower::new(&base, 3);
        let amb = tower.ambient();
        for a in base.elements() {
            for b in base.elements() {
                let s = tower.embed(&base.add(&a, &b));
                assert_eq!(s, amb.add(&tower.embed(&a), &tower.embed(&b)));
                let m = tower.embed(&base.mul(&a, &b));
                assert_eq!(m, amb.mul(&tower.embed(&a), &tower.embed(&b)));
            }
            assert!(tower.in_subfield(&tower.embed(&a), 1));
            assert_eq!(tower.restrict(&tower.embed(&a)), Some(a));
        }
        assert_eq!(tower.degree_of(&amb.generator()), 3);
    }
}
