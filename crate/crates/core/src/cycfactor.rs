//! Factorization of `x^N - 1` over `F_q` through `q`-cyclotomic cosets, the
//! `s`-involution classification of the factors, and the field-tower degree
//! data attached to them.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::ffield::int::{gcd, lcm, ord_mod, padic_valuation};
use crate::ffield::Tower;
use crate::{Error, Field, FieldElem, Poly, Result};

/// One monic irreducible factor of `x^N - 1`, indexed by its cyclotomic coset.
#[derive(Clone, Debug)]
pub struct CosetFactor {
    /// The coset `C ⊆ Z_N`, sorted; the roots are `ζ^i` for `i ∈ C`.
    pub coset: Vec<u64>,
    pub poly: Poly,
    /// Multiplicative order of the roots.
    pub root_order: u64,
    pub self_involutive: bool,
    pub divides_xd: bool,
    /// Index of `f^{*s}` when it differs from `f`.
    pub partner: Option<usize>,
}

impl CosetFactor {
    pub fn degree(&self) -> usize {
        self.coset.len()
    }

    /// Smallest element of the coset; the representative root is `ζ^rep`.
    pub fn rep(&self) -> u64 {
        self.coset[0]
    }
}

/// The roots-of-unity data every factor refers to: a primitive `N`-th root
/// `ζ` inside an ambient extension of `F_q`.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub tower: Tower,
    pub zeta: FieldElem,
    pub n: u64,
}

impl Splitting {
    /// `ζ^i`, exponent taken mod `N`.
    pub fn root(&self, i: i64) -> FieldElem {
        let e = i.rem_euclid(self.n as i64) as u64;
        self.tower.ambient().pow(&self.zeta, e)
    }
}

#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub n: u64,
    pub q: u64,
    /// Set by [`classify`].
    pub s: Option<u64>,
    /// `gcd(N, s - 1)`, set by [`classify`].
    pub d: Option<u64>,
    pub factors: Vec<CosetFactor>,
    /// Number of `s`-self-involutive factors.
    pub r: usize,
    /// Number of pairs `{f, f^{*s}}` with `f != f^{*s}`.
    pub t: usize,
    pub splitting: Splitting,
}

impl FactorizationReport {
    pub fn base_field(&self) -> &Field {
        self.splitting.tower.base()
    }

    pub fn is_classified(&self) -> bool {
        self.s.is_some()
    }

    /// Index of the factor whose coset contains `i mod N`.
    pub fn factor_of_exponent(&self, i: u64) -> usize {
        let i = i % self.n;
        self.factors
            .iter()
            .position(|f| f.coset.binary_search(&i).is_ok())
            .expect("cosets partition Z_N")
    }

    /// Index of `f` in the list, matched by polynomial.
    pub fn index_of(&self, f: &Poly) -> Option<usize> {
        self.factors.iter().position(|g| &g.poly == f)
    }
}

/// `s·C mod N`, sorted.
pub fn coset_times(coset: &[u64], s: u64, n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = coset.iter().map(|&c| (c as u128 * s as u128 % n as u128) as u64).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// All `q`-cyclotomic cosets mod `N`, each sorted, in order of their least element.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Vec<Vec<u64>> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut c = i;
        while !seen[c as usize] {
            seen[c as usize] = true;
            coset.push(c);
            c = (c as u128 * q as u128 % n as u128) as u64;
        }
        coset.sort_unstable();
        out.push(coset);
    }
    out
}

/// Degree `ord_N(q)` of the splitting field of `x^N - 1` over `F_q`.
pub fn ambient_degree(n: u64, q: u64) -> usize {
    ord_mod(n, q).expect("gcd(N, q) = 1") as usize
}

/// Distinct monic irreducible factors of `x^N - 1` over `field`, one per
/// cyclotomic coset, sorted by degree and then by coefficient string.
pub fn factor_xn_minus_1(n: u64, field: &Field) -> Result<FactorizationReport> {
    let q = field.order_u64().ok_or(Error::FieldTooLarge)?;
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::NotCoprimeNQ { n, q });
    }
    let tower = Tower::new(field, ambient_degree(n, q));
    let ambient = tower.ambient().clone();
    let zeta = ambient.element_of_order(n).expect("ambient field contains N-th roots of unity");
    let splitting = Splitting { tower, zeta, n };

    let mut factors: Vec<CosetFactor> = cyclotomic_cosets(n, q)
        .into_iter()
        .map(|coset| {
            let poly = coset_min_poly(&splitting, &coset);
            let root_order = n / gcd(n, coset[0]);
            CosetFactor { coset, poly, root_order, self_involutive: false, divides_xd: false, partner: None }
        })
        .collect();
    factors.sort_by(|a, b| (a.degree(), a.poly.sort_key()).cmp(&(b.degree(), b.poly.sort_key())));
    Ok(FactorizationReport { n, q, s: None, d: None, factors, r: 0, t: 0, splitting })
}

/// `Π (x - ζ^i)` over the coset, pulled back to `F_q`.
fn coset_min_poly(splitting: &Splitting, coset: &[u64]) -> Poly {
    let ambient = splitting.tower.ambient();
    let mut prod = Poly::one(ambient);
    for &i in coset {
        let linear = Poly::new(ambient, vec![ambient.neg(&splitting.root(i as i64)), ambient.one()]);
        prod = prod.mul(&linear);
    }
    splitting
        .tower
        .restrict_poly(&prod)
        .expect("coset minimal polynomial has Frobenius-fixed coefficients")
}

/// Flags every factor as `s`-self-involutive or not, marks the factors of
/// `x^d - 1`, pairs each remaining factor with its `s`-involution, and puts
/// pairs next to each other.
///
/// The coset test `sC = C` is cross-checked against the degree criterion
/// `s ≡ q^{deg/2} (mod ord ξ)` on every even-degree factor outside `x^d - 1`.
pub fn classify(report: &FactorizationReport, s: u64) -> Result<FactorizationReport> {
    let n = report.n;
    let s_res = s % n;
    if (s_res as u128 * s_res as u128 % n as u128) as u64 != 1 % n {
        return Err(Error::SInvalid { s, n });
    }
    let d = gcd(n, (s_res + n - 1) % n);
    let q = report.q;

    let mut flagged: Vec<CosetFactor> = report.factors.clone();
    for f in flagged.iter_mut() {
        f.self_involutive = coset_times(&f.coset, s_res, n) == f.coset;
        f.divides_xd = (d as u128 * f.coset[0] as u128 % n as u128) == 0;
        f.partner = None;
        if f.degree() % 2 == 0 && !f.divides_xd {
            let by_degree = remark_criterion(s_res, q, f.degree(), f.root_order);
            assert_eq!(
                f.self_involutive, by_degree,
                "coset and degree criteria disagree on {:?}",
                f.coset
            );
        }
    }

    // canonical order: keep the sorted order, pulling each partner right
    // behind the smaller member of its pair
    let mut order: Vec<usize> = Vec::with_capacity(flagged.len());
    let mut placed = vec![false; flagged.len()];
    for i in 0..flagged.len() {
        if placed[i] {
            continue;
        }
        placed[i] = true;
        order.push(i);
        if !flagged[i].self_involutive {
            let image = coset_times(&flagged[i].coset, s_res, n);
            let j = flagged.iter().position(|g| g.coset == image).expect("s permutes the cosets");
            placed[j] = true;
            order.push(j);
        }
    }
    let mut factors: Vec<CosetFactor> = order.iter().map(|&i| flagged[i].clone()).collect();
    let mut r = 0;
    let mut t = 0;
    let mut i = 0;
    while i < factors.len() {
        if factors[i].self_involutive {
            r += 1;
            i += 1;
        } else {
            factors[i].partner = Some(i + 1);
            factors[i + 1].partner = Some(i);
            t += 1;
            i += 2;
        }
    }
    Ok(FactorizationReport {
        n,
        q,
        s: Some(s_res),
        d: Some(d),
        factors,
        r,
        t,
        splitting: report.splitting.clone(),
    })
}

/// `s ≡ q^{deg/2} (mod m)` for a factor of even degree whose roots have order `m`.
pub fn remark_criterion(s: u64, q: u64, degree: usize, root_order: u64) -> bool {
    debug_assert!(degree % 2 == 0);
    let m = root_order;
    crate::ffield::int::pow_mod(q, degree as u64 / 2, m) == s % m
}

/// `([F_q(ξ) : F_q], [F_q(ξ + ξ^s, ξ^{s+1}) : F_q])` for the factor at `index`,
/// the second degree measured on the actual field elements.
pub fn tower_degrees(report: &FactorizationReport, index: usize) -> Result<(usize, usize)> {
    let s = report.s.ok_or(Error::SInvalid { s: 0, n: report.n })?;
    let f = &report.factors[index];
    if !f.self_involutive || f.divides_xd {
        return Err(Error::NotSelfInvolutive);
    }
    let amb = report.splitting.tower.ambient();
    let xi = report.splitting.root(f.rep() as i64);
    let xi_s = amb.pow(&xi, s);
    let trace = amb.add(&xi, &xi_s);
    let norm = amb.mul(&xi, &xi_s);
    let tower = &report.splitting.tower;
    let sub = lcm(tower.degree_of(&trace) as u64, tower.degree_of(&norm) as u64) as usize;
    Ok((f.degree(), sub))
}

/// `[F_q(α^{2^j}) : F_q(α^{2^{j+1}})]` for `j = 0..=ν₂(n)` and `α` a primitive
/// `2n`-th root of unity, read off from coset sizes.
pub fn two_adic_tower(n: u64, q: u64) -> Result<Vec<u64>> {
    if n == 0 || n % 2 != 0 || q % 4 != 3 {
        return Err(Error::BadCongruence(format!("need n even and q = 3 mod 4, got n = {n}, q = {q}")));
    }
    if gcd(2 * n, q) != 1 {
        return Err(Error::NotCoprimeNQ { n: 2 * n, q });
    }
    let v = padic_valuation(2, n as i128)?;
    let degree_at = |j: u32| {
        let order = 2 * n / gcd(2 * n, 1u64 << j);
        ord_mod(order, q).expect("coprime")
    };
    Ok((0..=v).map(|j| degree_at(j) / degree_at(j + 1)).collect())
}

/// The step degrees of [`two_adic_tower`] as the three clauses of the 2-adic
/// tower lemma predict them.
pub fn two_adic_tower_predicted(n: u64, q: u64) -> Vec<u64> {
    let v = padic_valuation(2, n as i128).expect("n > 0") as i64;
    let w = padic_valuation(2, (q + 1) as i128).expect("q > 0") as i64;
    (0..=v)
        .map(|j| {
            if j == v - 1 {
                2
            } else if j == v {
                1
            } else if v <= w {
                1
            } else if j < v - w {
                2
            } else {
                1
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> Field {
        let (p, m) = crate::ffield::int::prime_power(q).unwrap();
        Field::new(p, m as usize).unwrap()
    }

    fn product(report: &FactorizationReport) -> Poly {
        report.factors.iter().fold(Poly::one(report.base_field()), |acc, f| acc.mul(&f.poly))
    }

    #[test]
    fn factor_examples() {
        let f3 = field(3);
        let r = factor_xn_minus_1(4, &f3).unwrap();
        let polys: Vec<Poly> = r.factors.iter().map(|f| f.poly.clone()).collect();
        assert_eq!(
            polys,
            vec![
                Poly::from_ints(&f3, &[1, 1]),
                Poly::from_ints(&f3, &[-1, 1]),
                Poly::from_ints(&f3, &[1, 0, 1]),
            ]
        );
        let r1 = factor_xn_minus_1(1, &f3).unwrap();
        assert_eq!(r1.factors.len(), 1);
        assert_eq!(r1.factors[0].poly, Poly::from_ints(&f3, &[-1, 1]));
        let r8 = factor_xn_minus_1(8, &f3).unwrap();
        let degrees: Vec<usize> = r8.factors.iter().map(|f| f.degree()).collect();
        assert_eq!(degrees, vec![1, 1, 2, 2, 2]);
        assert_eq!(factor_xn_minus_1(6, &f3).unwrap_err(), Error::NotCoprimeNQ { n: 6, q: 3 });
    }

    #[test]
    fn recomposition_is_exact() {
        for q in [3u64, 5, 7, 9, 11, 13, 25] {
            let f = field(q);
            for n in 1..=48u64 {
                if gcd(n, q) != 1 {
                    continue;
                }
                let r = factor_xn_minus_1(n, &f).unwrap();
                assert_eq!(product(&r), Poly::x_pow_minus_one(&f, n as usize), "q={q} n={n}");
                assert_eq!(r.factors.len(), cyclotomic_cosets(n, q).len());
                for fac in &r.factors {
                    assert_eq!(fac.poly.degree(), Some(fac.degree()));
                    assert_eq!(fac.poly.order().unwrap(), fac.root_order);
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let f3 = field(3);
        let r = classify(&factor_xn_minus_1(4, &f3).unwrap(), 3).unwrap();
        assert!(r.factors.iter().all(|f| f.self_involutive));
        assert_eq!((r.r, r.t, r.d), (3, 0, Some(2)));
        assert!(matches!(classify(&r, 2), Err(Error::SInvalid { .. })));

        let f7 = field(7);
        let r = classify(&factor_xn_minus_1(16, &f7).unwrap(), 7).unwrap();
        let idx = r.factor_of_exponent(1);
        assert_eq!(r.factors[idx].coset, vec![1, 7]);
        assert!(r.factors[idx].self_involutive);
        assert!(remark_criterion(7, 7, 2, 16));
    }

    #[test]
    fn pairs_form_a_perfect_matching() {
        let f5 = field(5);
        for (n, s) in [(8u64, 3u64), (12, 5), (24, 7), (21, 8)] {
            let r = classify(&factor_xn_minus_1(n, &f5).unwrap(), s).unwrap();
            assert_eq!(r.r + 2 * r.t, r.factors.len());
            for (i, f) in r.factors.iter().enumerate() {
                match f.partner {
                    Some(j) => {
                        assert_eq!(r.factors[j].partner, Some(i));
                        assert_eq!(coset_times(&f.coset, s, n), r.factors[j].coset);
                        assert_eq!(f.poly.s_involution(s, n).unwrap(), r.factors[j].poly);
                    }
                    None => assert!(f.self_involutive),
                }
            }
        }
    }

    #[test]
    fn coset_involution_matches_roots() {
        // root-side definition: {root^s} equals the partner's root set
        for q in [3u64, 5, 7] {
            let f = field(q);
            for n in [5u64, 8, 10, 12, 16, 20] {
                if gcd(n, q) != 1 {
                    continue;
                }
                for s in (1..n).filter(|s| s * s % n == 1) {
                    let r = classify(&factor_xn_minus_1(n, &f).unwrap(), s).unwrap();
                    let amb = r.splitting.tower.ambient().clone();
                    for (i, fac) in r.factors.iter().enumerate() {
                        let target = &r.factors[fac.partner.unwrap_or(i)];
                        let poly = r.splitting.tower.embed_poly(&target.poly);
                        for &c in &fac.coset {
                            let root_s = amb.pow(&r.splitting.root(c as i64), s);
                            assert!(amb.is_zero(&poly.eval(&root_s)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tower_degree_examples() {
        let f3 = field(3);
        let r = classify(&factor_xn_minus_1(4, &f3).unwrap(), 3).unwrap();
        let idx = r.index_of(&Poly::from_ints(&f3, &[1, 0, 1])).unwrap();
        assert_eq!(tower_degrees(&r, idx), Ok((2, 1)));
        let lin = r.index_of(&Poly::from_ints(&f3, &[-1, 1])).unwrap();
        assert_eq!(tower_degrees(&r, lin), Err(Error::NotSelfInvolutive));
        // a degree-4 self-involutive factor: Φ_5 over F_3 with s = -1
        let r5 = classify(&factor_xn_minus_1(5, &f3).unwrap(), 4).unwrap();
        let phi5 = r5.factor_of_exponent(1);
        assert_eq!(tower_degrees(&r5, phi5), Ok((4, 2)));
    }

    #[test]
    fn two_adic_examples() {
        assert_eq!(&two_adic_tower(4, 3).unwrap()[..2], &[1, 2]);
        assert_eq!(two_adic_tower(8, 3).unwrap()[0], 2);
        assert_eq!(two_adic_tower(2, 3).unwrap()[0], 2);
        assert!(matches!(two_adic_tower(3, 3), Err(Error::BadCongruence(_))));
        assert!(matches!(two_adic_tower(4, 5), Err(Error::BadCongruence(_))));
        for q in [3u64, 7, 11, 19, 23, 27, 31] {
            for n in (2..=64u64).step_by(2) {
                if gcd(2 * n, q) != 1 {
                    continue;
                }
                // the clauses only hold when the odd part of n contributes an odd degree
                let odd = n >> n.trailing_zeros();
                let holds = ord_mod(odd, q).unwrap() % 2 == 1;
                let agrees = two_adic_tower(n, q).unwrap() == two_adic_tower_predicted(n, q);
                assert_eq!(agrees, holds, "n={n} q={q}");
            }
        }
    }
}
