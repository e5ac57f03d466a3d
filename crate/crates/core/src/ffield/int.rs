//! Integer number theory used throughout the crate.

use alloc::vec::Vec;

use crate::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    let mut stack = Vec::new();
    let mut n = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while n % p == 0 {
            primes.push(p);
            n /= p;
        }
    }
    if n > 1 {
        stack.push(n);
    }
    while let Some(m) = stack.pop() {
        if is_prime(m) {
            primes.push(m);
        } else {
            let d = pollard_rho(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((last, e)) if *last == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Sorted list of the positive divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = alloc::vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Splits `q` into `(p, m)` with `q = p^m`, `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

/// `ν_p(c)`: the exponent of the prime `p` in the nonzero integer `c`.
pub fn padic_valuation(p: u64, c: i128) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NonPrimeCharacteristic(p));
    }
    if c == 0 {
        return Err(Error::ZeroInput);
    }
    let mut c = c.unsigned_abs();
    let p = p as u128;
    let mut v = 0;
    while c % p == 0 {
        c /= p;
        v += 1;
    }
    Ok(v)
}

/// `ν_p(a^k - 1)` by lifting the exponent, for `k >= 1`.
///
/// Defined for odd `p` dividing `a - 1`, and for `p = 2` with `a` odd;
/// `None` otherwise, or when `a = 1` (the valuation is infinite).
pub fn lifted_valuation(p: u64, a: i128, k: u64) -> Option<u32> {
    if k == 0 || a == 1 || !is_prime(p) {
        return None;
    }
    let v = |c: i128| padic_valuation(p, c).ok();
    if p == 2 {
        if a % 2 == 0 {
            return None;
        }
        if k % 2 == 1 {
            v(a - 1)
        } else {
            Some(v(a * a - 1)? + v(k as i128)? - 1)
        }
    } else {
        if (a - 1) % p as i128 != 0 {
            return None;
        }
        Some(v(a - 1)? + v(k as i128)?)
    }
}

/// Multiplicative order of `base` modulo `modulus`.
pub fn ord_mod(modulus: u64, base: u64) -> Result<u64> {
    if modulus == 1 {
        return Ok(1);
    }
    if modulus == 0 || gcd(modulus, base) != 1 {
        return Err(Error::NotCoprime { modulus, base });
    }
    let lambda = carmichael(modulus);
    let mut t = lambda;
    for p in prime_divisors(lambda) {
        while t % p == 0 && pow_mod(base, t / p, modulus) == 1 {
            t /= p;
        }
    }
    Ok(t)
}

/// Carmichael's function; the exponent of `(Z/nZ)^*`.
pub fn carmichael(n: u64) -> u64 {
    factorize(n).into_iter().fold(1, |acc, (p, e)| {
        let pe1 = p.pow(e - 1);
        let l = if p == 2 && e >= 3 {
            pe1 / 2
        } else {
            pe1 * (p - 1)
        };
        lcm(acc, l)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifted_valuation_examples() {
        // 3^4 - 1 = 80 = 2^4 * 5
        assert_eq!(lifted_valuation(2, 3, 4), Some(4));
        // 7^3 - 1 = 342 = 2 * 3^2 * 19
        assert_eq!(lifted_valuation(3, 7, 3), Some(2));
        assert_eq!(lifted_valuation(3, 5, 2), None);
        assert_eq!(lifted_valuation(2, -1, 2), None);
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(padic_valuation(2, 8), Ok(3));
        assert_eq!(padic_valuation(2, 3 * 3 - 1), Ok(3));
        assert_eq!(padic_valuation(3, 4 * 4 * 4 - 1), Ok(2));
        assert_eq!(padic_valuation(3, 0), Err(Error::ZeroInput));
        assert_eq!(padic_valuation(2, -12), Ok(2));
    }

    #[test]
    fn ord_mod_examples() {
        assert_eq!(ord_mod(4, 3), Ok(2));
        assert_eq!(ord_mod(1, 17), Ok(1));
        assert_eq!(ord_mod(5, 2), Ok(4));
        assert_eq!(ord_mod(6, 4), Err(Error::NotCoprime { modulus: 6, base: 4 }));
    }

    #[test]
    fn ord_mod_matches_brute_force() {
        for m in 1..200u64 {
            for b in 1..60u64 {
                if gcd(m, b) != 1 {
                    continue;
                }
                let mut t = 1;
                let mut x = b % m;
                while x != 1 % m {
                    x = x * b % m;
                    t += 1;
                }
                assert_eq!(ord_mod(m, b).unwrap(), t, "ord_{m}({b})");
            }
        }
    }

    #[test]
    fn factorization_recomposes() {
        for n in [1u64, 2, 12, 97, 1 << 40, 600851475143, 18446744073709551557] {
            let f = factorize(n);
            assert_eq!(f.iter().map(|(p, e)| p.pow(*e)).product::<u64>(), n);
            assert!(f.iter().all(|(p, _)| is_prime(*p)));
        }
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(euler_phi(48), 16);
        assert_eq!(divisors(12), alloc::vec![1, 2, 3, 4, 6, 12]);
    }
}
