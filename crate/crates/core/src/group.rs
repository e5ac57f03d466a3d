//! The two metacyclic presentations and the constants derived from them.
//!
//! * split: `x^n = 1 = y^2`, `xy = yx^s`
//! * non-split: `x^{2n} = 1`, `y^2 = x^n`, `xy = yx^s`

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::ffield::int::{gcd, padic_valuation, prime_power};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    Split,
    NonSplit,
}

impl GroupKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Split => "split",
            GroupKind::NonSplit => "nonsplit",
        }
    }
}

/// Case label of the abelian part of a non-split group, from the classes of
/// `s` and `q` modulo 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbelianCase {
    /// `s ≡ 1 (mod 4)`.
    SOneMod4,
    /// `s ≡ 3 (mod 4)`, `q ≡ 1 (mod 4)`.
    SThreeQOne,
    /// `s ≡ 3 (mod 4)`, `q ≡ 3 (mod 4)`.
    SThreeQThree,
}

impl AbelianCase {
    pub fn label(self) -> &'static str {
        match self {
            AbelianCase::SOneMod4 => "s≡1 mod 4",
            AbelianCase::SThreeQOne => "s≡3 mod 4, q≡1 mod 4",
            AbelianCase::SThreeQThree => "s≡3 mod 4, q≡3 mod 4",
        }
    }
}

/// A validated presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupPresentation {
    kind: GroupKind,
    n: u64,
    /// `s mod N`, in `1..=N`.
    s: u64,
    /// `s` possibly shifted by `N`; read only by the non-split conjugation
    /// construction.
    s_adjusted: u64,
    q: u64,
}

impl GroupPresentation {
    /// Validates `(kind, n, s, q)` and normalizes `s`.
    ///
    /// For a non-split group with `q ≡ 3 (mod 4)` and `ν₂(n) ≤ ν₂(q+1)`, the
    /// adjusted `s` is replaced by `s + 2n` when needed so that
    /// `ν₂(s+1) ≤ ν₂(q+1) + 1`.
    pub fn new(kind: GroupKind, n: u64, s: u64, q: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroupSpec(String::from("n must be positive")));
        }
        if q % 2 == 0 {
            return Err(Error::EvenCharacteristic(q));
        }
        if prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        let big_n = match kind {
            GroupKind::Split => n,
            GroupKind::NonSplit => 2 * n,
        };
        let s_res = (s + big_n - 1) % big_n + 1;
        if (s_res as u128 * s_res as u128) % big_n as u128 != 1 % big_n as u128 {
            return Err(Error::SNotInvolutive { s, n: big_n });
        }
        if gcd(2 * big_n, q) != 1 {
            return Err(Error::OrderNotCoprime { order: 2 * big_n, q });
        }
        let mut s_adjusted = s_res;
        if kind == GroupKind::NonSplit && q % 4 == 3 {
            let v_n = padic_valuation(2, n as i128).unwrap();
            let v_q = padic_valuation(2, (q + 1) as i128).unwrap();
            if v_n <= v_q && padic_valuation(2, (s_res + 1) as i128).unwrap() > v_q + 1 {
                s_adjusted = s_res + big_n;
            }
        }
        Ok(GroupPresentation { kind, n, s: s_res, s_adjusted, q })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// The presentation parameter `n` (not the cyclic order for non-split groups).
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Order `N` of the cyclic subgroup `<x>`: `n` (split) or `2n` (non-split).
    pub fn cyclic_order(&self) -> u64 {
        match self.kind {
            GroupKind::Split => self.n,
            GroupKind::NonSplit => 2 * self.n,
        }
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn s_adjusted(&self) -> u64 {
        self.s_adjusted
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `d = gcd(N, s - 1)`.
    pub fn d(&self) -> u64 {
        gcd(self.cyclic_order(), self.s - 1)
    }

    /// `|G| = 2N`.
    pub fn order(&self) -> u64 {
        2 * self.cyclic_order()
    }

    pub fn is_abelian(&self) -> bool {
        self.s == 1 || self.cyclic_order() == 1
    }

    /// Exponent `e` with `y^2 = x^e`: `0` (split) or `n` (non-split).
    pub fn y_square_exponent(&self) -> u64 {
        match self.kind {
            GroupKind::Split => 0,
            GroupKind::NonSplit => self.n,
        }
    }

    pub fn abelian_case(&self) -> Option<AbelianCase> {
        if self.kind == GroupKind::Split {
            return None;
        }
        Some(match (self.s % 4, self.q % 4) {
            (1, _) => AbelianCase::SOneMod4,
            (_, 1) => AbelianCase::SThreeQOne,
            _ => AbelianCase::SThreeQThree,
        })
    }

    /// Normal forms `x^i y^j` as `(i, j)`, `j` outer: `e, x, ..., x^{N-1}, y, xy, ...`.
    pub fn elements(&self) -> Vec<(u64, u8)> {
        let n = self.cyclic_order();
        (0..2u8).flat_map(|j| (0..n).map(move |i| (i, j))).collect()
    }

    /// Index of `x^i y^j` in [`GroupPresentation::elements`].
    pub fn index_of(&self, i: u64, j: u8) -> usize {
        let n = self.cyclic_order();
        (j as u64 * n + i % n) as usize
    }

    /// Textual form `split:n=4,s=3`.
    pub fn spec_string(&self) -> String {
        format!("{}:n={},s={}", self.kind.as_str(), self.n, self.s)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over F_{}", self.spec_string(), self.q)
    }
}

/// A group spec as written on the command line, before a field is attached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: u64,
    pub s: u64,
}

impl GroupSpec {
    pub fn with_q(self, q: u64) -> Result<GroupPresentation> {
        GroupPresentation::new(self.kind, self.n, self.s, q)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidGroupSpec(String::from(text));
        let (kind, rest) = text.split_once(':').ok_or_else(bad)?;
        let kind = match kind.trim() {
            "split" => GroupKind::Split,
            "nonsplit" => GroupKind::NonSplit,
            _ => return Err(bad()),
        };
        let mut n = None;
        let mut s = None;
        for part in rest.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: u64 = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "n" => n = Some(value),
                "s" => s = Some(value),
                _ => return Err(bad()),
            }
        }
        Ok(GroupSpec { kind, n: n.ok_or_else(bad)?, s: s.ok_or_else(bad)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let d8 = GroupPresentation::new(GroupKind::Split, 4, 3, 3).unwrap();
        assert_eq!((d8.d(), d8.order()), (2, 8));
        let q8 = GroupPresentation::new(GroupKind::NonSplit, 2, 3, 3).unwrap();
        assert_eq!((q8.d(), q8.order()), (2, 8));
        assert_eq!(
            GroupPresentation::new(GroupKind::Split, 5, 2, 3),
            Err(Error::SNotInvolutive { s: 2, n: 5 })
        );
        assert_eq!(GroupPresentation::new(GroupKind::Split, 3, 2, 4), Err(Error::EvenCharacteristic(4)));
        assert_eq!(
            GroupPresentation::new(GroupKind::Split, 3, 2, 3),
            Err(Error::OrderNotCoprime { order: 6, q: 3 })
        );
        assert!(GroupPresentation::new(GroupKind::Split, 3, 1, 7).unwrap().is_abelian());
    }

    #[test]
    fn elements_in_normal_form_order() {
        let g = GroupPresentation::new(GroupKind::Split, 2, 1, 3).unwrap();
        assert_eq!(g.elements(), alloc::vec![(0, 0), (1, 0), (0, 1), (1, 1)]);
        let q8 = GroupPresentation::new(GroupKind::NonSplit, 2, 3, 3).unwrap();
        assert_eq!(q8.elements().len(), 8);
    }

    #[test]
    fn normalization_is_idempotent_and_adjustment_is_harmless() {
        for kind in [GroupKind::Split, GroupKind::NonSplit] {
            for q in [3u64, 7, 11, 19] {
                for n in 1..=40u64 {
                    for s in 0..3 * n {
                        let Ok(g) = GroupPresentation::new(kind, n, s, q) else { continue };
                        let again = GroupPresentation::new(kind, n, g.s(), q).unwrap();
                        assert_eq!(again, g);
                        let big_n = g.cyclic_order();
                        assert_eq!(g.s_adjusted() % big_n, g.s() % big_n);
                        if big_n % 4 == 0 {
                            assert_eq!(g.s_adjusted() % 4, g.s() % 4);
                        }
                        if g.s_adjusted() != g.s() {
                            let vq = padic_valuation(2, (q + 1) as i128).unwrap();
                            assert!(padic_valuation(2, (g.s_adjusted() + 1) as i128).unwrap() <= vq + 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn spec_strings_parse() {
        let spec: GroupSpec = "split:n=4,s=3".parse().unwrap();
        assert_eq!(spec, GroupSpec { kind: GroupKind::Split, n: 4, s: 3 });
        let spec: GroupSpec = "nonsplit:n=2,s=3".parse().unwrap();
        assert_eq!(spec.with_q(3).unwrap().spec_string(), "nonsplit:n=2,s=3");
        assert!("dihedral:n=4".parse::<GroupSpec>().is_err());
        assert!("split:n=4".parse::<GroupSpec>().is_err());
    }
}
