//! Bare polynomial arithmetic over a prime field `F_p`, on coefficient
//! vectors in ascending degree. Used to pick and test field moduli and to
//! invert field elements; [`crate::poly::Poly`] is the public polynomial type.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            ((x as u64 + p as u64 - y as u64) % p as u64) as u32
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let mut r: Vec<u32> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let p64 = p as u64;
    let lead_inv = inv_mod_p(b[db], p) as u64;
    let mut q = vec![0u32; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i] as u64 * lead_inv % p64;
        if c == 0 {
            continue;
        }
        q[i - db] = c as u32;
        for j in 0..=db {
            let k = i - db + j;
            r[k] = ((r[k] as u64 + p64 - c * b[j] as u64 % p64) % p64) as u32;
        }
    }
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub(crate) fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    divrem(a, b, p).1
}

pub(crate) fn monic(mut a: Vec<u32>, p: u32) -> Vec<u32> {
    trim(&mut a);
    if let Some(&lead) = a.last() {
        let inv = inv_mod_p(lead, p) as u64;
        for c in a.iter_mut() {
            *c = (*c as u64 * inv % p as u64) as u32;
        }
    }
    a
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(a, p)
}

/// `base^exp mod m` with `exp` given as a power `p^k` applied by repeated
/// `p`-th powering.
pub(crate) fn pow_mod(base: &[u32], mut exp: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        exp >>= 1;
    }
    acc
}

/// Irreducibility of a monic polynomial of degree `m >= 1`: no factor of
/// degree `k <= m/2`, i.e. `gcd(f, x^(p^k) - x) = 1` for each such `k`.
/// Reducible candidates usually have a small factor, so the scan exits early.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    let x = rem(&[0u32, 1], f, p);
    let mut cur = x.clone();
    for _ in 0..m / 2 {
        cur = pow_mod(&cur, p as u64, f, p);
        if gcd(f, &sub(&cur, &x, p), p).len() != 1 {
            return false;
        }
    }
    true
}

/// Inverse of `a` modulo the irreducible `m`, by the extended Euclidean
/// algorithm. `a` must be nonzero modulo `m`.
pub(crate) fn inv_mod(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r0 = m.to_vec();
    let mut r1 = rem(a, m, p);
    let mut t0: Vec<u32> = Vec::new();
    let mut t1: Vec<u32> = vec![1];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    assert_eq!(r0.len(), 1, "element not invertible modulo an irreducible modulus");
    let c = inv_mod_p(r0[0], p) as u64;
    let mut out: Vec<u32> = t0.iter().map(|&x| (x as u64 * c % p as u64) as u32).collect();
    out = rem(&out, m, p);
    out
}
