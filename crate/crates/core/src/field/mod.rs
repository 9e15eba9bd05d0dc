//! Coefficient fields `k_1`: finite fields `GF(p^m)` (perfect) and rational
//! function fields `GF(p^m)(u)` (imperfect).
//!
//! Every element is stored as a reduced fraction `num/den` with monic
//! denominator; finite-field elements are the constant fractions. Equality
//! is therefore structural.

pub mod fq;
pub mod upoly;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{self, Domain};
pub use fq::{FiniteField, Fq};
pub use upoly::UPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Finite,
    RationalFunction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDesc {
    pub characteristic: u32,
    pub base_power: u32,
    pub kind: FieldKind,
}

impl FieldDesc {
    pub fn is_perfect(&self) -> bool {
        self.kind == FieldKind::Finite
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    num: UPoly,
    den: UPoly,
}

impl FieldElem {
    pub fn numerator(&self) -> &UPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Largest of the numerator and denominator degrees.
    pub fn height(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    fn constant(c: Fq) -> Self {
        FieldElem { num: UPoly::constant(c), den: UPoly::one() }
    }

    fn as_constant(&self) -> Option<Fq> {
        (self.den.is_one() && self.num.is_constant())
            .then(|| self.num.coeffs().first().copied().unwrap_or(Fq::ZERO))
    }
}

struct Inner {
    fq: FiniteField,
    kind: FieldKind,
    var: String,
}

/// A coefficient field; cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.fq == other.0.fq && self.0.kind == other.0.kind && self.0.var == other.0.var)
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

impl Field {
    pub fn finite(p: u32, m: u32) -> Result<Self> {
        Ok(Field(Arc::new(Inner { fq: FiniteField::new(p, m)?, kind: FieldKind::Finite, var: String::new() })))
    }

    /// `GF(q)` for a prime power `q`.
    pub fn gf(q: u64) -> Result<Self> {
        let (p, m) = fq::prime_power(q).ok_or_else(|| Error::UnsupportedField(format!("{q} is not a prime power")))?;
        Self::finite(p, m)
    }

    pub fn rational_function(p: u32, m: u32) -> Result<Self> {
        Self::rational_function_named(p, m, "u")
    }

    pub fn rational_function_named(p: u32, m: u32, var: &str) -> Result<Self> {
        if var == "w" || var.is_empty() {
            return Err(Error::UnsupportedField(format!("invalid variable name '{var}'")));
        }
        Ok(Field(Arc::new(Inner {
            fq: FiniteField::new(p, m)?,
            kind: FieldKind::RationalFunction,
            var: var.to_string(),
        })))
    }

    /// Parses `GF(q)` or `GF(q)(u)`.
    pub fn parse(spec: &str) -> Result<Self> {
        let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = s
            .strip_prefix("GF(")
            .ok_or_else(|| Error::Parse(format!("field spec must start with GF(: {spec}")))?;
        let close = rest.find(')').ok_or_else(|| Error::Parse(format!("unbalanced field spec: {spec}")))?;
        let q: u64 = rest[..close].parse().map_err(|_| Error::Parse(format!("bad field order in {spec}")))?;
        let tail = &rest[close + 1..];
        if tail.is_empty() {
            return Self::gf(q);
        }
        let var = tail
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .filter(|v| !v.is_empty() && v.chars().all(|c| c.is_alphabetic()))
            .ok_or_else(|| Error::Parse(format!("bad rational function variable in {spec}")))?;
        let (p, m) = fq::prime_power(q).ok_or_else(|| Error::UnsupportedField(format!("{q} is not a prime power")))?;
        Self::rational_function_named(p, m, var)
    }

    pub fn spec(&self) -> String {
        let q = self.0.fq.order();
        match self.0.kind {
            FieldKind::Finite => format!("GF({q})"),
            FieldKind::RationalFunction => format!("GF({q})({})", self.0.var),
        }
    }

    pub fn desc(&self) -> FieldDesc {
        FieldDesc { characteristic: self.characteristic(), base_power: self.0.fq.degree(), kind: self.0.kind }
    }

    pub fn fq(&self) -> &FiniteField {
        &self.0.fq
    }

    pub fn kind(&self) -> FieldKind {
        self.0.kind
    }

    pub fn characteristic(&self) -> u32 {
        self.0.fq.characteristic()
    }

    pub fn is_perfect(&self) -> bool {
        self.0.kind == FieldKind::Finite
    }

    pub fn var_name(&self) -> &str {
        &self.0.var
    }

    /// Description of the fixed presentation of `GF(p^m)`, for reports.
    pub fn presentation(&self) -> String {
        let fq = &self.0.fq;
        let modulus: Vec<String> = fq
            .modulus()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".into(),
                (1, c) => format!("{c}*x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}*x^{i}"),
            })
            .collect();
        format!("GF({}) = GF({})[x]/({}), w = x", fq.order(), fq.characteristic(), modulus.join(" + "))
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { num: UPoly::zero(), den: UPoly::one() }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::constant(Fq::ONE)
    }

    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem::constant(self.0.fq.from_int(n))
    }

    pub fn from_fq(&self, c: Fq) -> FieldElem {
        FieldElem::constant(c)
    }

    /// The primitive element `w` of `GF(p^m)`.
    pub fn w(&self) -> FieldElem {
        FieldElem::constant(self.0.fq.generator())
    }

    /// The transcendental `u` of a rational function field.
    pub fn u(&self) -> Result<FieldElem> {
        match self.0.kind {
            FieldKind::RationalFunction => Ok(FieldElem { num: UPoly::monomial(Fq::ONE, 1), den: UPoly::one() }),
            FieldKind::Finite => Err(Error::UnsupportedField(format!("{} has no transcendental", self.spec()))),
        }
    }

    /// Builds `num/den` in lowest terms with monic denominator.
    pub fn fraction(&self, num: UPoly, den: UPoly) -> Result<FieldElem> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.0.kind == FieldKind::Finite && !(num.is_constant() && den.is_constant()) {
            return Err(Error::UnsupportedField("finite field elements are constants".into()));
        }
        Ok(self.normalize(num, den))
    }

    fn normalize(&self, num: UPoly, den: UPoly) -> FieldElem {
        let f = &self.0.fq;
        if num.is_zero() {
            return self.zero();
        }
        if den.is_one() {
            return FieldElem { num, den };
        }
        let g = num.gcd(&den, f);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g, f).expect("gcd").0, den.div_rem(&g, f).expect("gcd").0)
        };
        let lc = den.leading();
        if lc != Fq::ONE {
            let inv = f.inv(lc).expect("nonzero");
            num = num.scale(inv, f);
            den = den.scale(inv, f);
        }
        FieldElem { num, den }
    }

    pub fn is_one(&self, x: &FieldElem) -> bool {
        x.num.is_one() && x.den.is_one()
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let f = &self.0.fq;
        if let (Some(x), Some(y)) = (a.as_constant(), b.as_constant()) {
            return FieldElem::constant(f.add(x, y));
        }
        if a.den == b.den {
            return self.normalize(a.num.add(&b.num, f), a.den.clone());
        }
        let num = a.num.mul(&b.den, f).add(&b.num.mul(&a.den, f), f);
        self.normalize(num, a.den.mul(&b.den, f))
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem { num: a.num.neg(&self.0.fq), den: a.den.clone() }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let f = &self.0.fq;
        if let (Some(x), Some(y)) = (a.as_constant(), b.as_constant()) {
            return FieldElem::constant(f.mul(x, y));
        }
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        self.normalize(a.num.mul(&b.num, f), a.den.mul(&b.den, f))
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(x) = a.as_constant() {
            return Ok(FieldElem::constant(self.0.fq.inv(x)?));
        }
        Ok(self.normalize(a.den.clone(), a.num.clone()))
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElem, k: i64) -> Result<FieldElem> {
        if let Some(x) = a.as_constant() {
            return Ok(FieldElem::constant(self.0.fq.pow(x, k)?));
        }
        let base = if k < 0 { self.inv(a)? } else { a.clone() };
        let mut e = k.unsigned_abs();
        let (mut acc, mut sq) = (self.one(), base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// `x^(p^n)`.
    pub fn frobenius(&self, x: &FieldElem, n: u32) -> FieldElem {
        let f = &self.0.fq;
        // numerator and denominator stay coprime and the denominator monic
        FieldElem { num: x.num.frobenius(n, f), den: x.den.frobenius(n, f) }
    }

    /// The `p^n`-th root of `x` in this field, if it exists.
    pub fn pn_th_root(&self, x: &FieldElem, n: u32) -> Option<FieldElem> {
        let f = &self.0.fq;
        let num = x.num.frobenius_root(n, f)?;
        let den = x.den.frobenius_root(n, f)?;
        Some(FieldElem { num, den })
    }

    /// For `GF(q)(v)` regarded as `GF(q)(u)(u^(1/p^k))` with `u = v^(p^k)`:
    /// maps an element written in `u` to the same element written in `v`.
    pub fn inflate(&self, x: &FieldElem, k: u32) -> FieldElem {
        let e = (self.characteristic() as usize).pow(k);
        FieldElem { num: x.num.inflate(e), den: x.den.inflate(e) }
    }

    /// All nonzero elements whose numerator and denominator have degree at
    /// most `height` (every nonzero element for a finite field).
    pub fn enumerate_bounded(&self, height: usize) -> Vec<FieldElem> {
        let f = &self.0.fq;
        if self.0.kind == FieldKind::Finite {
            return f.nonzero_elements().map(FieldElem::constant).collect();
        }
        let polys = all_polys(f, height);
        let monics: Vec<&UPoly> = polys.iter().filter(|p| p.leading() == Fq::ONE).collect();
        let mut out = Vec::new();
        for den in &monics {
            for num in polys.iter().filter(|p| !p.is_zero()) {
                if num.gcd(den, f).is_one() {
                    out.push(FieldElem { num: num.clone(), den: (*den).clone() });
                }
            }
        }
        out
    }

    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        expr::eval(&expr::parse(s)?, self)
    }

    pub fn format(&self, x: &FieldElem) -> String {
        let num = self.format_upoly(&x.num);
        if x.den.is_one() {
            return num;
        }
        let den = self.format_upoly(&x.den);
        let wrap = |s: String, p: &UPoly| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || self.0.fq.is_sum(p.leading()) {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(num, &x.num), wrap(den, &x.den))
    }

    /// Formatting for use as a factor in a product.
    pub fn format_factor(&self, x: &FieldElem) -> String {
        let s = self.format(x);
        if s.contains(" + ") || s.contains('/') {
            format!("({s})")
        } else {
            s
        }
    }

    fn format_upoly(&self, p: &UPoly) -> String {
        let f = &self.0.fq;
        if p.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in p.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => self.0.var.clone(),
                _ => format!("{}^{i}", self.0.var),
            };
            let coeff = f.format(c);
            parts.push(match (mono.is_empty(), c == Fq::ONE) {
                (true, _) => coeff,
                (false, true) => mono,
                (false, false) if f.is_sum(c) => format!("({coeff})*{mono}"),
                (false, false) => format!("{coeff}*{mono}"),
            });
        }
        parts.join(" + ")
    }
}

fn all_polys(f: &FiniteField, height: usize) -> Vec<UPoly> {
    let q = f.order() as usize;
    let count = q.pow(height as u32 + 1);
    (0..count)
        .map(|mut code| {
            let c = (0..=height)
                .map(|_| {
                    let d = code % q;
                    code /= q;
                    f.from_encoding(d as u32).expect("in range")
                })
                .collect();
            UPoly::from_coeffs(c)
        })
        .collect()
}

impl Domain for Field {
    type Value = FieldElem;

    fn int(&self, v: i64) -> Result<FieldElem> {
        Ok(self.from_int(v))
    }

    fn symbol(&self, name: &str) -> Result<FieldElem> {
        if name == "w" {
            return Ok(self.w());
        }
        if self.0.kind == FieldKind::RationalFunction && name == self.0.var {
            return self.u();
        }
        Err(Error::Parse(format!("unknown symbol '{name}' in {}", self.spec())))
    }

    fn add(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(Field::add(self, a, b))
    }

    fn sub(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(Field::sub(self, a, b))
    }

    fn mul(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(Field::mul(self, a, b))
    }

    fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Field::div(self, a, b)
    }

    fn neg(&self, a: &FieldElem) -> Result<FieldElem> {
        Ok(Field::neg(self, a))
    }

    fn pow(&self, a: &FieldElem, k: i64) -> Result<FieldElem> {
        Field::pow(self, a, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2u() -> Field {
        Field::parse("GF(2)(u)").unwrap()
    }

    #[test]
    fn u_times_inverse_is_one() {
        let k = f2u();
        let u = k.u().unwrap();
        assert!(k.is_one(&k.mul(&u, &k.inv(&u).unwrap())));
    }

    #[test]
    fn characteristic_five_addition() {
        let k = Field::parse("GF(5)").unwrap();
        assert!(k.add(&k.from_int(2), &k.from_int(3)).is_zero());
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let k = f2u();
        let x = k.parse_elem("(u^2+u)/(u)").unwrap();
        assert_eq!(x, k.parse_elem("u+1").unwrap());
        // cross-multiplication check
        let u = k.u().unwrap();
        assert_eq!(k.mul(&x, &u), k.parse_elem("u^2+u").unwrap());
        assert_eq!(k.format(&k.parse_elem("(u^2+u)/(u^3+1)").unwrap()), "u/(u^2 + u + 1)");
    }

    #[test]
    fn frobenius_examples() {
        let k = f2u();
        let u = k.u().unwrap();
        assert_eq!(k.frobenius(&u, 1), k.parse_elem("u^2").unwrap());
        let x = k.parse_elem("u+1").unwrap();
        let direct = k.pow(&x, 4).unwrap();
        assert_eq!(k.frobenius(&x, 2), direct);
        assert_eq!(direct, k.parse_elem("u^4+1").unwrap());
        let f5 = Field::gf(5).unwrap();
        assert_eq!(f5.frobenius(&f5.from_int(2), 1), f5.from_int(2));
    }

    #[test]
    fn pn_th_root_examples() {
        let k = f2u();
        assert_eq!(k.pn_th_root(&k.parse_elem("u^2").unwrap(), 1), Some(k.u().unwrap()));
        assert_eq!(k.pn_th_root(&k.u().unwrap(), 1), None);
        let f5 = Field::gf(5).unwrap();
        let y = f5.pn_th_root(&f5.from_int(3), 2).unwrap();
        assert_eq!(y, f5.from_int(3));
        assert_eq!(f5.pow(&y, 25).unwrap(), f5.from_int(3));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let k = f2u();
        assert_eq!(k.inv(&k.zero()), Err(Error::DivisionByZero));
        assert!(k.parse_elem("1/(u+u)").is_err());
    }

    #[test]
    fn extension_field_elements_parse_in_w() {
        let k = Field::parse("GF(4)").unwrap();
        let x = k.parse_elem("w^2").unwrap();
        assert_eq!(x, k.parse_elem("w + 1").unwrap());
        assert_eq!(k.format(&x), "w + 1");
        assert!(k.parse_elem("u").is_err());
    }

    #[test]
    fn bounded_enumeration_counts() {
        let k = f2u();
        // height 0: only the constant 1
        assert_eq!(k.enumerate_bounded(0).len(), 1);
        // height 1: numerators {1,u,u+1} over denominators {1,u,u+1} coprime
        assert_eq!(k.enumerate_bounded(1).len(), 7);
        assert_eq!(Field::gf(7).unwrap().enumerate_bounded(3).len(), 6);
    }
}
