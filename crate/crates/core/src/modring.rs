//! Residues modulo `n` and the arithmetic conditions on the multiplier `r`.
//!
//! Every "±" condition is evaluated as the disjunction of the `+` and the `−`
//! case, so `x ≡ ±1` means `x ≡ 1` or `x ≡ −1`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

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

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, n: u64) -> u64 {
    let (a, b) = (a % n, b % n);
    if a >= b {
        a - b
    } else {
        n - (b - a)
    }
}

#[inline]
pub fn neg_mod(a: u64, n: u64) -> u64 {
    sub_mod(0, a, n)
}

/// Square-and-multiply modular power.
pub fn pow_mod(base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % n;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, n);
        }
        b = mul_mod(b, b, n);
        exp >>= 1;
    }
    result
}

/// Inverse of `a` modulo `n` by the extended Euclidean algorithm.
pub fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (i128::from(a % n), i128::from(n));
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(i128::from(n)) as u64)
}

/// `x ≡ 1` or `x ≡ −1` modulo `n`.
#[inline]
pub fn is_pm_one(x: u64, n: u64) -> bool {
    let x = x % n;
    x == 1 % n || x == n - 1
}

/// Chinese remainder for coprime moduli: the unique `x mod a·b` with
/// `x ≡ u (mod a)` and `x ≡ v (mod b)`.
pub fn crt_pair(u: u64, a: u64, v: u64, b: u64) -> Option<u64> {
    if gcd(a, b) != 1 {
        return None;
    }
    let ab = a.checked_mul(b)?;
    // x = u + a·t with a·t ≡ v − u (mod b)
    let t = mul_mod(sub_mod(v, u, b), inverse_mod(a % b, b)?, b);
    Some(add_mod(u % a, mul_mod(a, t, ab), ab))
}

/// An element of `ℤ_n`, always stored reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduces `value` modulo `modulus`. Panics on a zero modulus.
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Residue {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_i64(value: i64, modulus: u64) -> Self {
        let v = i128::from(value).rem_euclid(i128::from(modulus)) as u64;
        Residue::new(v, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_unit(self) -> bool {
        gcd(self.value, self.modulus) == 1
    }

    pub fn inverse(self) -> Result<Residue> {
        inverse_mod(self.value, self.modulus)
            .map(|v| Residue::new(v, self.modulus))
            .ok_or(Error::NotUnit {
                value: self.value,
                modulus: self.modulus,
            })
    }

    pub fn pow(self, exp: u64) -> Residue {
        Residue::new(pow_mod(self.value, exp, self.modulus), self.modulus)
    }

    pub fn is_pm_one(self) -> bool {
        is_pm_one(self.value, self.modulus)
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: Residue) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue::new(add_mod(self.value, rhs.value, self.modulus), self.modulus)
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue::new(sub_mod(self.value, rhs.value, self.modulus), self.modulus)
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue::new(mul_mod(self.value, rhs.value, self.modulus), self.modulus)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue::new(neg_mod(self.value, self.modulus), self.modulus)
    }
}

/// `r` is a unit modulo `n` with `r^{ms} ≡ ±1`.
pub fn is_valid_r(m: u64, s: u64, n: u64, r: u64) -> bool {
    if n < 3 || m == 0 || s == 0 {
        return false;
    }
    let Some(ms) = m.checked_mul(s) else {
        return false;
    };
    gcd(r % n, n) == 1 && is_pm_one(pow_mod(r, ms, n), n)
}

/// `2(r^{2s} + 1) ≡ 0` or `2(r^{2s} − 1) ≡ 0` modulo `n`.
pub fn cond_arc_transitive(s: u64, n: u64, r: u64) -> bool {
    let t = pow_mod(r, 2 * s, n);
    mul_mod(2, add_mod(t, 1, n), n) == 0 || mul_mod(2, sub_mod(t, 1, n), n) == 0
}

/// The three parameter families whose graphs are 2-arc-transitive, all with `s = 2`:
/// `n = 4, m = 1`; `n = m` odd with `r² ≡ ±1`; `n = 2m`, `m ≡ 2 (mod 4)`, `1 + r² ≡ m`.
pub fn cond_two_arc_transitive(m: u64, s: u64, n: u64, r: u64) -> bool {
    if s != 2 {
        return false;
    }
    let r2 = pow_mod(r, 2, n);
    (n == 4 && m == 1)
        || (n == m && n % 2 == 1 && is_pm_one(r2, n))
        || (n == 2 * m && m % 4 == 2 && add_mod(1, r2, n) == m % n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_examples() {
        assert!(Residue::new(2, 7).is_unit());
        assert!(!Residue::new(2, 52).is_unit());
        assert!(Residue::new(15, 52).is_unit());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Residue::new(2, 7).inverse().unwrap().value(), 4);
        assert_eq!(Residue::new(3, 52).inverse().unwrap().value(), 35);
        assert_eq!(Residue::new(1, 9).inverse().unwrap().value(), 1);
        assert_eq!(
            Residue::new(4, 52).inverse(),
            Err(Error::NotUnit {
                value: 4,
                modulus: 52
            })
        );
    }

    #[test]
    fn inverse_of_three_mod_52_by_exhaustive_search() {
        let found: alloc::vec::Vec<u64> = (0..52).filter(|b| (3 * b) % 52 == 1).collect();
        assert_eq!(found, [35]);
    }

    #[test]
    fn valid_r_examples() {
        assert!(is_valid_r(3, 2, 7, 2));
        assert!(is_valid_r(6, 2, 52, 15));
        assert!(is_valid_r(1, 2, 5, 2));
        assert!(!is_valid_r(1, 2, 7, 2));
        assert!(!is_valid_r(1, 2, 8, 2));
    }

    #[test]
    fn arc_transitive_condition_examples() {
        assert!(!cond_arc_transitive(2, 7, 2));
        assert!(cond_arc_transitive(2, 5, 2));
        assert!(cond_arc_transitive(2, 4, 1));
    }

    #[test]
    fn two_arc_transitive_condition_examples() {
        assert!(cond_two_arc_transitive(3, 2, 3, 1));
        assert!(cond_two_arc_transitive(2, 2, 4, 1));
        assert!(cond_two_arc_transitive(1, 2, 4, 1));
        assert!(!cond_two_arc_transitive(3, 2, 7, 2));
        assert!(cond_two_arc_transitive(10, 2, 20, 3));
    }

    #[test]
    fn two_arc_condition_implies_arc_condition() {
        for n in 3..=60u64 {
            for m in 1..=60u64 {
                for s in 1..=4u64 {
                    for r in 1..n {
                        if is_valid_r(m, s, n, r) && cond_two_arc_transitive(m, s, n, r) {
                            assert!(cond_arc_transitive(s, n, r), "({m},{s},{n},{r})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn crt_examples() {
        assert_eq!(crt_pair(3, 4, 2, 5), Some(7));
        assert_eq!(crt_pair(0, 4, 0, 1), Some(0));
        assert_eq!(crt_pair(1, 4, 1, 2), None);
    }

    #[test]
    fn sign_helpers() {
        assert_eq!(Residue::from_i64(-1, 7).value(), 6);
        assert_eq!((-Residue::new(3, 7)).value(), 4);
        assert!(Residue::new(6, 7).is_pm_one());
        assert!(is_pm_one(0, 1) || !is_pm_one(0, 1));
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn inverse_is_involutive(n in 2u64..5000, a in 0u64..5000) {
                let x = Residue::new(a, n);
                if x.is_unit() {
                    let y = x.inverse().unwrap();
                    prop_assert_eq!((x * y).value(), 1 % n);
                    prop_assert_eq!(y.inverse().unwrap(), x);
                } else {
                    prop_assert!(x.inverse().is_err());
                }
            }

            #[test]
            fn pow_matches_repeated_multiplication(n in 2u64..100_000, a in 0u64..100_000, k in 0u64..=64) {
                let x = Residue::new(a, n);
                let mut acc = Residue::new(1, n);
                for _ in 0..k {
                    acc = acc * x;
                }
                prop_assert_eq!(x.pow(k), acc);
            }

            #[test]
            fn crt_reconstructs(a in 1u64..200, b in 1u64..200, x in 0u64..40_000) {
                prop_assume!(gcd(a, b) == 1);
                let y = crt_pair(x % a, a, x % b, b).unwrap();
                prop_assert_eq!(y, x % (a * b));
            }
        }
    }
}
