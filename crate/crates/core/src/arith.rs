//! Elementary modular arithmetic on machine integers.

use crate::error::{Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b) * b).abs()
    }
}

/// Least non-negative residue of `a` modulo `m` (`m > 0`).
pub fn modp(a: i64, m: i64) -> i64 {
    a.rem_euclid(m)
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `m`, in `[0, m)`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    let (g, s, _) = ext_gcd(modp(a, m), m);
    if g != 1 {
        return Err(Error::NotCoprime { value: a, modulus: m });
    }
    Ok(modp(s, m))
}

/// Least positive `s` with `r*s ≡ 1 (mod m)`; equals 1 when `m == 1`.
pub fn least_positive_inverse(r: i64, m: i64) -> Result<i64> {
    let s = mod_inverse(r, m)?;
    Ok(if s == 0 { m } else { s })
}

pub fn pow_mod(base: i64, mut exp: u64, m: i64) -> i64 {
    let m128 = m as i128;
    let mut b = modp(base, m) as i128;
    let mut acc: i128 = 1 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as i64
}

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn require_odd_prime(p: i64) -> Result<()> {
    if p > 2 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// Multiplicative order of `a` modulo `m`.
pub fn multiplicative_order(a: i64, m: i64) -> Result<u64> {
    if gcd(a, m) != 1 {
        return Err(Error::NotCoprime { value: a, modulus: m });
    }
    let a = modp(a, m);
    let mut x = a % m;
    let mut k = 1u64;
    while x != 1 % m {
        x = ((x as i128 * a as i128) % m as i128) as i64;
        k += 1;
    }
    Ok(k)
}

/// Legendre symbol `(a/p)` for an odd prime `p`, via Euler's criterion.
pub fn legendre(a: i64, p: i64) -> i64 {
    let a = modp(a, p);
    if a == 0 {
        return 0;
    }
    if pow_mod(a, ((p - 1) / 2) as u64, p) == 1 {
        1
    } else {
        -1
    }
}

/// The residues in `[0, m)` coprime to `m`, in increasing order.
pub fn units_mod(m: i64) -> Vec<i64> {
    (0..m).filter(|&r| gcd(r, m) == 1).collect()
}

/// Chinese remaindering for coprime moduli.
pub fn crt(r1: i64, m1: i64, r2: i64, m2: i64) -> Result<i64> {
    let (g, s, _) = ext_gcd(m1, m2);
    if g != 1 {
        return Err(Error::NotCoprime { value: m1, modulus: m2 });
    }
    let m = m1 * m2;
    let diff = modp(r2 - r1, m2) as i128;
    let k = diff * (s as i128) % m2 as i128;
    Ok(modp((r1 as i128 + m1 as i128 * k) as i64, m))
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_and_orders() {
        assert_eq!(least_positive_inverse(15, 56).unwrap(), 15);
        assert_eq!(least_positive_inverse(9, 56).unwrap(), 25);
        assert_eq!(least_positive_inverse(1, 56).unwrap(), 1);
        assert!(mod_inverse(14, 56).is_err());
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(3, 7).unwrap(), 6);
    }

    #[test]
    fn legendre_and_crt() {
        assert_eq!(legendre(7, 5), -1);
        assert_eq!(legendre(7, 3), 1);
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(crt(9, 16, 1, 5).unwrap(), 41);
        assert_eq!(crt(1, 16, 4, 5).unwrap(), 49);
    }

    #[test]
    fn primes() {
        assert!(is_prime(7) && is_prime(19) && !is_prime(21));
        assert!(require_odd_prime(2).is_err());
        assert_eq!(prime_factors(12), vec![2, 3]);
    }
}
