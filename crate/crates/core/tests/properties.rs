use metacyclic_core::battery::{instances, BatteryConfig};
use metacyclic_core::cycfactor::factor_xn_minus_1;
use metacyclic_core::ffield::int::gcd;
use metacyclic_core::idempotents::{central_idempotents, cyclic_idempotent, noncentral_all};
use metacyclic_core::oracle::Oracle;
use metacyclic_core::wedderburn::{base_field, decompose};
use metacyclic_core::{Field, Poly};
use proptest::prelude::*;

fn field_params() -> impl Strategy<Value = (u64, usize)> {
    prop_oneof![Just((3, 1)), Just((3, 4)), Just((5, 3)), Just((7, 2)), Just((2_147_483_647, 2)), Just((65_521, 5))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((p, m) in field_params(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = Field::new(p, m).unwrap();
        let digits = |mut k: u64| (0..m).map(|_| { let d = (k % p) as u32; k /= p; d }).collect::<Vec<_>>();
        let (a, b, c) = (f.from_coeffs(&digits(a)), f.from_coeffs(&digits(b)), f.from_coeffs(&digits(c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        if let Some(ai) = f.inv(&a) {
            prop_assert_eq!(f.mul(&a, &ai), f.one());
        }
        // the p-power map is additive and multiplicative
        let fr = |z: &_| f.frobenius(z, p, 1);
        prop_assert_eq!(fr(&f.add(&a, &b)), f.add(&fr(&a), &fr(&b)));
        prop_assert_eq!(fr(&f.mul(&a, &b)), f.mul(&fr(&a), &fr(&b)));
    }

    #[test]
    fn cyclic_idempotents_partition_unity(n in 1u64..40, qi in 0usize..5) {
        let q = [3u64, 5, 7, 9, 11][qi];
        prop_assume!(gcd(n, q) == 1);
        let f = base_field(q).unwrap();
        let big = Poly::x_pow_minus_one(&f, n as usize);
        let report = factor_xn_minus_1(n, &f).unwrap();
        let es: Vec<Poly> = report.factors.iter().map(|c| cyclic_idempotent(&c.poly, n).unwrap()).collect();
        let total = es.iter().fold(Poly::zero(&f), |acc, e| acc.add(e));
        prop_assert_eq!(total.rem(&big), Poly::one(&f));
        for (i, e) in es.iter().enumerate() {
            prop_assert_eq!(&e.mul(e).rem(&big), e);
            prop_assert!(report.factors[i].poly.divides(&Poly::one(&f).sub(e)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_instance_idempotents(pick in any::<prop::sample::Index>()) {
        let all = instances(&BatteryConfig { n_max: 16, ..Default::default() });
        let g = pick.get(&all);
        let dec = decompose(g).unwrap();
        let o = Oracle::new(g, &dec.base);
        let central = central_idempotents(&o, &dec).unwrap().central_elements();
        prop_assert!(o.sums_to_one(&central));
        prop_assert!(o.are_orthogonal(&central));
        for (_, pair) in noncentral_all(&o, &dec, true) {
            let pair = pair.unwrap();
            prop_assert_eq!(o.multiply(&pair.first, &pair.second).unwrap(), o.zero());
            prop_assert_eq!(o.multiply(&pair.second, &pair.first).unwrap(), o.zero());
            prop_assert!(o.is_idempotent(&pair.first) && !o.is_central(&pair.first));
        }
    }

    #[test]
    fn multiplication_is_associative(pick in any::<prop::sample::Index>(), a in any::<usize>(), b in any::<usize>(), c in any::<usize>()) {
        let all = instances(&BatteryConfig::default());
        let g = pick.get(&all);
        let t = metacyclic_core::oracle::MultiplicationTable::new(g);
        let n = t.size();
        prop_assert!(t.associative_on([(a % n, b % n, c % n)]));
    }
}
