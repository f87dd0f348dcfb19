use alloc::vec;
use alloc::vec::Vec;

use super::prime::{is_prime, PrimeField};
use crate::error::{Error, Result};

/// The finite field F_q with q = l^a.
///
/// An element is a `u32` in `[0, q)` whose base-`l` digits are the
/// coefficients of a polynomial in the root of the modulus, constant term in
/// the least significant digit. The prime subfield is therefore `0..l`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    degree: u32,
    q: u32,
    /// Coefficients c_0..c_{a-1}; the modulus is x^a + sum c_i x^i.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl core::fmt::Debug for ExtField {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "F_{} (modulus {:?})", self.q, self.modulus_coefficients())
    }
}

impl ExtField {
    /// Builds F_{l^a} with the least irreducible modulus, where monic
    /// polynomials are ordered by their coefficient tuple read from the
    /// constant term up.
    pub fn new(l: u64, a: u32) -> Result<Self> {
        if !is_prime(l) {
            return Err(Error::NotPrime(l));
        }
        if a == 0 {
            return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
        }
        let q = (l as u128).checked_pow(a).filter(|&q| q < 1 << 16).ok_or(Error::FieldTooLarge(l.saturating_pow(a)))?;
        let base = PrimeField::new(l as u32)?;
        let q = q as u32;
        let modulus = least_irreducible(base, a as usize);
        let mut field = ExtField { base, degree: a, q, modulus, exp: Vec::new(), log: Vec::new() };
        field.build_tables();
        Ok(field)
    }

    /// Field of size `q`, which must be a prime power below 2^16.
    pub fn with_size(q: u64) -> Result<Self> {
        let (l, a) = super::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(l, a)
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.base.p()
    }
    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }
    #[inline]
    pub fn size(&self) -> u32 {
        self.q
    }
    pub fn prime_field(&self) -> PrimeField {
        self.base
    }

    /// Full coefficient list c_0, .., c_{a-1}, 1 of the modulus.
    pub fn modulus_coefficients(&self) -> Vec<u32> {
        let mut m = self.modulus.clone();
        m.push(1);
        m
    }

    pub fn zero(&self) -> u32 {
        0
    }
    pub fn one(&self) -> u32 {
        1
    }

    /// A fixed generator of the multiplicative group.
    pub fn primitive(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    /// A primitive `n`-th root of unity, when `n` divides q - 1.
    pub fn root_of_unity(&self, n: u32) -> Option<u32> {
        let m = self.q - 1;
        (n != 0 && m % n == 0).then(|| self.exp[(m / n) as usize % self.exp.len()])
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.degree == 1 {
            return self.base.add(a, b);
        }
        let l = self.base.p();
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0u32, 1u32);
        while a > 0 || b > 0 {
            out += ((a % l + b % l) % l) * place;
            a /= l;
            b /= l;
            place = place.wrapping_mul(l);
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.degree == 1 {
            return self.base.neg(a);
        }
        let l = self.base.p();
        let (mut a, mut out, mut place) = (a, 0u32, 1u32);
        while a > 0 {
            out += ((l - a % l) % l) * place;
            a /= l;
            place = place.wrapping_mul(l);
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q as usize - 1;
        let s = self.log[a as usize] as usize + self.log[b as usize] as usize;
        self.exp[s % n]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q as usize - 1;
        Some(self.exp[(n - self.log[a as usize] as usize) % n])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.q as u64 - 1;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        let g = gcd(self.log[a as usize], n);
        Some(n / g)
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let l = self.base.p();
        let mut d = vec![0; self.degree as usize];
        for slot in d.iter_mut() {
            *slot = a % l;
            a /= l;
        }
        d
    }

    fn from_digits(&self, d: &[u32]) -> u32 {
        let l = self.base.p();
        d.iter().rev().fold(0u32, |acc, &c| acc * l + c)
    }

    fn poly_mul(&self, a: u32, b: u32) -> u32 {
        let f = self.base;
        let (da, db) = (self.digits(a), self.digits(b));
        let n = self.degree as usize;
        let mut prod = vec![0u32; 2 * n];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        for k in (n..2 * n).rev() {
            let c = prod[k];
            if c != 0 {
                prod[k] = 0;
                for (i, &m) in self.modulus.iter().enumerate() {
                    prod[k - n + i] = f.sub(prod[k - n + i], f.mul(c, m));
                }
            }
        }
        self.from_digits(&prod[..n])
    }

    fn build_tables(&mut self) {
        let n = self.q as usize - 1;
        let g = (1..self.q)
            .find(|&g| {
                let mut x = g;
                let mut k = 1usize;
                while x != 1 {
                    x = self.poly_mul(x, g);
                    k += 1;
                }
                k == n
            })
            .expect("multiplicative group of a finite field is cyclic");
        self.exp = Vec::with_capacity(n);
        self.log = vec![0; self.q as usize];
        let mut x = 1u32;
        for k in 0..n {
            self.exp.push(x);
            self.log[x as usize] = k as u32;
            x = self.poly_mul(x, g);
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Least monic irreducible of degree `a`, ordered by (c_0, c_1, .., c_{a-1}).
fn least_irreducible(f: PrimeField, a: usize) -> Vec<u32> {
    let l = f.p() as u64;
    let total = l.pow(a as u32);
    (0..total)
        .map(|code| {
            // c_0 is the most significant digit of the enumeration code.
            let mut c = vec![0u32; a];
            let mut rest = code;
            for slot in c.iter_mut().rev() {
                *slot = (rest % l) as u32;
                rest /= l;
            }
            c
        })
        .find(|c| is_irreducible(f, c))
        .expect("irreducible polynomials exist in every degree")
}

/// Irreducibility of x^a + sum c_i x^i by trial division by monic polynomials
/// of degree at most a/2.
fn is_irreducible(f: PrimeField, c: &[u32]) -> bool {
    let a = c.len();
    if a == 1 {
        return true;
    }
    let mut poly = c.to_vec();
    poly.push(1);
    let l = f.p() as u64;
    for d in 1..=a / 2 {
        for code in 0..l.pow(d as u32) {
            let mut div = vec![0u32; d + 1];
            let mut rest = code;
            for slot in div.iter_mut().take(d) {
                *slot = (rest % l) as u32;
                rest /= l;
            }
            div[d] = 1;
            if poly_rem_is_zero(f, &poly, &div) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(f: PrimeField, num: &[u32], monic: &[u32]) -> bool {
    let mut r = num.to_vec();
    let d = monic.len() - 1;
    for k in (d..r.len()).rev() {
        let c = r[k];
        if c != 0 {
            for (i, &m) in monic.iter().enumerate() {
                r[k - d + i] = f.sub(r[k - d + i], f.mul(c, m));
            }
        }
    }
    r.iter().all(|&x| x == 0)
}
