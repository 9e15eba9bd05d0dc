//! Finite fields `GF(p^m)` with log/antilog tables.
//!
//! Elements are encoded as integers whose base-`p` digits are the coefficients
//! of a polynomial in the generator `w`, reduced modulo a fixed primitive
//! polynomial. The modulus is the first monic primitive polynomial of degree
//! `m` in the digit enumeration order, so the presentation is reproducible.

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(pub(crate) u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Integer encoding (base-`p` digits are the `w`-coefficients).
    pub fn encoding(self) -> u32 {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    /// Low coefficients `c_0..c_{m-1}` of the monic modulus.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q` into `(p, m)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    if !is_prime(p) {
        return None;
    }
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

impl FiniteField {
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::UnsupportedField(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::UnsupportedField("extension degree must be >= 1".into()));
        }
        let q64 = (p as u64).checked_pow(m).ok_or(Error::FieldTooLarge(u64::MAX))?;
        if q64 > MAX_ORDER {
            return Err(Error::FieldTooLarge(q64));
        }
        let q = q64 as u32;
        for code in 0..q {
            let modulus = digits(code, p, m);
            if modulus[0] == 0 {
                continue;
            }
            if let Some((exp, log)) = primitive_tables(p, m, q, &modulus) {
                return Ok(FiniteField { p, m, q, modulus, exp, log });
            }
        }
        unreachable!("every finite field has a primitive polynomial")
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus as a coefficient list `c_0, ..., c_{m-1}, 1`.
    pub fn modulus(&self) -> Vec<u32> {
        let mut c = self.modulus.clone();
        c.push(1);
        c
    }

    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_encoding(&self, code: u32) -> Option<Fq> {
        (code < self.q).then_some(Fq(code))
    }

    /// The primitive element `w` fixed by the modulus.
    pub fn generator(&self) -> Fq {
        Fq(self.exp[1 % self.exp.len()])
    }

    pub fn digits(&self, a: Fq) -> Vec<u32> {
        digits(a.0, self.p, self.m)
    }

    fn encode_digits(&self, d: &[u32]) -> Fq {
        Fq(d.iter().rev().fold(0, |acc, &x| acc * self.p + x))
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.p == 2 {
            return Fq(a.0 ^ b.0);
        }
        if self.m == 1 {
            return Fq((a.0 + b.0) % self.p);
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let d: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode_digits(&d)
    }

    pub fn neg(&self, a: Fq) -> Fq {
        if self.p == 2 {
            return a;
        }
        let d: Vec<u32> = self.digits(a).iter().map(|x| (self.p - x) % self.p).collect();
        self.encode_digits(&d)
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.is_zero() || b.is_zero() {
            return Fq::ZERO;
        }
        let n = self.q - 1;
        let l = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % n as u64;
        Fq(self.exp[l as usize])
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        Ok(Fq(self.exp[((n - self.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Discrete logarithm to the base `w`.
    pub fn log(&self, a: Fq) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    /// `w^k` for any integer `k`.
    pub fn exp(&self, k: i64) -> Fq {
        let n = (self.q - 1) as i64;
        Fq(self.exp[k.rem_euclid(n) as usize])
    }

    pub fn pow(&self, a: Fq, k: i64) -> Result<Fq> {
        if a.is_zero() {
            return match k {
                0 => Ok(Fq::ONE),
                k if k > 0 => Ok(Fq::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let n = (self.q - 1) as i128;
        let l = (self.log[a.0 as usize] as i128 * k as i128).rem_euclid(n);
        Ok(Fq(self.exp[l as usize]))
    }

    /// `a^(p^n)`.
    pub fn frobenius(&self, a: Fq, n: u32) -> Fq {
        let k = n % self.m;
        let mut x = a;
        for _ in 0..k {
            x = self.pow(x, self.p as i64).expect("positive exponent");
        }
        x
    }

    /// The unique `b` with `b^(p^n) = a`; Frobenius is bijective on a finite field.
    pub fn frobenius_root(&self, a: Fq, n: u32) -> Fq {
        let back = (self.m - n % self.m) % self.m;
        self.frobenius(a, back)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        (0..self.q).map(Fq)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fq> + '_ {
        (1..self.q).map(Fq)
    }

    /// Human-readable form: an integer for prime fields, a polynomial in `w` otherwise.
    pub fn format(&self, a: Fq) -> String {
        if self.m == 1 {
            return a.0.to_string();
        }
        let d = self.digits(a);
        let mut parts = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            };
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn is_sum(&self, a: Fq) -> bool {
        self.digits(a).iter().filter(|&&c| c != 0).count() > 1
    }
}

fn digits(mut code: u32, p: u32, m: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(m as usize);
    for _ in 0..m {
        d.push(code % p);
        code /= p;
    }
    d
}

fn primitive_tables(p: u32, m: u32, q: u32, modulus: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = (q - 1) as usize;
    let mut exp = vec![0u32; n];
    let mut log = vec![u32::MAX; q as usize];
    let mut cur = digits(1, p, m);
    let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &x| acc * p + x);
    for (i, slot) in exp.iter_mut().enumerate() {
        let code = encode(&cur);
        if log[code as usize] != u32::MAX {
            return None;
        }
        *slot = code;
        log[code as usize] = i as u32;
        // multiply by x modulo the candidate
        let top = cur[m as usize - 1];
        let mut next = vec![0u32; m as usize];
        for j in (1..m as usize).rev() {
            next[j] = cur[j - 1];
        }
        for j in 0..m as usize {
            next[j] = (next[j] + (p - top * modulus[j] % p) % p) % p;
        }
        cur = next;
    }
    (encode(&cur) == 1).then_some((exp, log))
}
