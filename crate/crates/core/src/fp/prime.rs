use crate::error::{Error, Result};

/// Deterministic trial-division primality test; inputs here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Returns `(l, a)` with `q = l^a` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut l = 2u64;
    while l * l <= q && q % l != 0 {
        l += 1;
    }
    if q % l != 0 {
        l = q;
    }
    let mut rest = q;
    let mut a = 0u32;
    while rest % l == 0 {
        rest /= l;
        a += 1;
    }
    (rest == 1).then_some((l, a))
}

/// Whether the field with `q` elements contains the `p`-th roots of unity.
///
/// Errors when `p` is not prime, `q` is not a prime power, or `p` divides `q`.
pub fn has_pth_roots(q: u64, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if q % p == 0 {
        return Err(Error::CharacteristicEqualsPrime { q, p });
    }
    Ok(q % p == 1)
}

/// The prime field F_p. Elements are plain `u32` values in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 16 || !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }

    /// Binomial coefficient C(n, k) mod p by Lucas' theorem.
    pub fn binomial(self, mut n: u64, mut k: u64) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u32;
        while k > 0 {
            let (nd, kd) = (n % p, k % p);
            if kd > nd {
                return 0;
            }
            acc = self.mul(acc, small_binomial(nd, kd, self));
            n /= p;
            k /= p;
        }
        acc
    }
}

fn small_binomial(n: u64, k: u64, f: PrimeField) -> u32 {
    let mut num = 1u32;
    let mut den = 1u32;
    for i in 0..k {
        num = f.mul(num, ((n - i) % f.p as u64) as u32);
        den = f.mul(den, ((i + 1) % f.p as u64) as u32);
    }
    f.mul(num, f.inv(den).expect("digits below p have invertible factorials"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: alloc::vec::Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(PrimeField::new(65521).is_ok());
        assert!(PrimeField::new(65537).is_err());
        assert!(PrimeField::new(9).is_err());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn pth_roots() {
        assert_eq!(has_pth_roots(7, 3), Ok(true));
        assert_eq!(has_pth_roots(5, 3), Ok(false));
        assert_eq!(has_pth_roots(4, 3), Ok(true));
        assert!(matches!(has_pth_roots(9, 3), Err(Error::CharacteristicEqualsPrime { .. })));
        assert!(has_pth_roots(6, 3).is_err());
    }

    #[test]
    fn lucas_matches_pascal() {
        let f = PrimeField::new(3).unwrap();
        let mut row = alloc::vec![1u64];
        for n in 0..40u64 {
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(f.binomial(n, k as u64), (c % 3) as u32, "C({n},{k})");
            }
            let mut next = alloc::vec![1u64; row.len() + 1];
            for k in 1..row.len() {
                next[k] = (row[k - 1] + row[k]) % 3;
            }
            row = next;
        }
        assert_eq!(f.binomial(2, 5), 0);
    }
}
