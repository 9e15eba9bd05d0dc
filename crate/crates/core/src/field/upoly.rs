//! Dense univariate polynomials over a finite field, the numerators and
//! denominators of rational functions in `u`.

use super::fq::{FiniteField, Fq};
use crate::error::{Error, Result};

/// Coefficients in increasing degree, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UPoly(pub(crate) Vec<Fq>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: Fq) -> Self {
        UPoly(vec![c]).trimmed()
    }

    pub fn one() -> Self {
        UPoly(vec![Fq::ONE])
    }

    pub fn monomial(c: Fq, deg: usize) -> Self {
        let mut v = vec![Fq::ZERO; deg + 1];
        v[deg] = c;
        UPoly(v).trimmed()
    }

    pub fn from_coeffs(c: Vec<Fq>) -> Self {
        UPoly(c).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0] == Fq::ONE
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Fq {
        self.0.last().copied().unwrap_or(Fq::ZERO)
    }

    pub fn add(&self, other: &Self, f: &FiniteField) -> Self {
        let n = self.0.len().max(other.0.len());
        let c = (0..n)
            .map(|i| {
                let a = self.0.get(i).copied().unwrap_or(Fq::ZERO);
                let b = other.0.get(i).copied().unwrap_or(Fq::ZERO);
                f.add(a, b)
            })
            .collect();
        UPoly(c).trimmed()
    }

    pub fn neg(&self, f: &FiniteField) -> Self {
        UPoly(self.0.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Self, f: &FiniteField) -> Self {
        self.add(&other.neg(f), f)
    }

    pub fn scale(&self, c: Fq, f: &FiniteField) -> Self {
        UPoly(self.0.iter().map(|&a| f.mul(a, c)).collect()).trimmed()
    }

    pub fn mul(&self, other: &Self, f: &FiniteField) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Fq::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        UPoly(c).trimmed()
    }

    pub fn div_rem(&self, d: &Self, f: &FiniteField) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = f.inv(d.leading())?;
        let mut r = self.0.clone();
        if r.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut q = vec![Fq::ZERO; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], lc_inv);
            q[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in d.0.iter().enumerate() {
                r[k + j] = f.sub(r[k + j], f.mul(c, b));
            }
        }
        r.truncate(dd);
        Ok((UPoly(q).trimmed(), UPoly(r).trimmed()))
    }

    pub fn monic(&self, f: &FiniteField) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(f.inv(self.leading()).expect("nonzero leading"), f)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self, f: &FiniteField) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b, f).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `self^(p^n)`: coefficients raised by Frobenius and exponents scaled.
    pub fn frobenius(&self, n: u32, f: &FiniteField) -> Self {
        let pn = (f.characteristic() as usize).pow(n);
        let mut c = vec![Fq::ZERO; self.0.len().saturating_sub(1) * pn + 1];
        for (i, &a) in self.0.iter().enumerate() {
            c[i * pn] = f.frobenius(a, n);
        }
        UPoly(c).trimmed()
    }

    /// The polynomial `g` with `g^(p^n) = self`, if one exists.
    pub fn frobenius_root(&self, n: u32, f: &FiniteField) -> Option<Self> {
        let pn = (f.characteristic() as usize).pow(n);
        let mut c = Vec::new();
        for (i, &a) in self.0.iter().enumerate() {
            if i % pn == 0 {
                c.push(f.frobenius_root(a, n));
            } else if !a.is_zero() {
                return None;
            }
        }
        Some(UPoly(c).trimmed())
    }

    /// `self(u^k)`.
    pub fn inflate(&self, k: usize) -> Self {
        let mut c = vec![Fq::ZERO; self.0.len().saturating_sub(1) * k + 1];
        for (i, &a) in self.0.iter().enumerate() {
            c[i * k] = a;
        }
        UPoly(c).trimmed()
    }
}
