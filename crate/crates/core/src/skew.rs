//! The skew polynomial ring `k_1[F]` with `F a = a^p F`, acting on the
//! additive group by `p`-polynomials.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{self, Domain};
use crate::field::{Field, FieldElem};
use crate::graded::{GradedElem, GradedPolyRing};
use crate::poly::{Monomial, Poly};

/// `sum a_i F^i`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    coeffs: Vec<FieldElem>,
}

impl SkewPoly {
    pub fn new(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::new(vec![c])
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field.one())
    }

    /// `c F^i`.
    pub fn monomial(field: &Field, c: FieldElem, i: usize) -> Self {
        let mut coeffs = vec![field.zero(); i + 1];
        coeffs[i] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, field: &Field) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_separable(&self) -> bool {
        self.coeffs.first().is_some_and(|c| !c.is_zero())
    }

    fn require_separable(&self) -> Result<()> {
        if self.is_separable() {
            Ok(())
        } else {
            Err(Error::NotSeparable)
        }
    }

    pub fn add(&self, other: &Self, field: &Field) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| field.add(&self.coeff(i, field), &other.coeff(i, field))).collect())
    }

    pub fn neg(&self, field: &Field) -> Self {
        SkewPoly { coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect() }
    }

    pub fn sub(&self, other: &Self, field: &Field) -> Self {
        self.add(&other.neg(field), field)
    }

    /// `(a F^i)(b F^j) = a b^{p^i} F^{i+j}`.
    pub fn mul(&self, other: &Self, field: &Field) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let term = field.mul(a, &field.frobenius(b, i as u32));
                out[i + j] = field.add(&out[i + j], &term);
            }
        }
        Self::new(out)
    }

    /// Drops all terms of degree `>= n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    /// `tau^{(n)}`: every coefficient raised to the `p^n`.
    pub fn twist_coeffs(&self, n: u32, field: &Field) -> Self {
        SkewPoly { coeffs: self.coeffs.iter().map(|c| field.frobenius(c, n)).collect() }
    }

    /// Coefficientwise `p^n`-th root, if every coefficient has one.
    pub fn untwist_coeffs(&self, n: u32, field: &Field) -> Option<Self> {
        let coeffs = self.coeffs.iter().map(|c| field.pn_th_root(c, n)).collect::<Option<Vec<_>>>()?;
        Some(SkewPoly { coeffs })
    }

    /// The `p`-polynomial `sum a_i T^{p^i}` in a one-variable ring.
    pub fn to_p_polynomial(&self, ring: &Arc<GradedPolyRing>) -> Result<GradedElem> {
        if ring.nvars() != 1 {
            return Err(Error::InvalidArgument("p-polynomials live in a one-variable ring".into()));
        }
        let field = ring.field();
        let p = field.characteristic() as i64;
        let mut poly = Poly::zero(1);
        for (i, c) in self.coeffs.iter().enumerate() {
            let m = Monomial { t: 0, vars: vec![p.pow(i as u32)] };
            poly = poly.add(&Poly::term(c.clone(), m), field);
        }
        ring.elem(poly)
    }

    /// `a = q b + r` with `deg r < deg b`.
    pub fn right_divide(&self, b: &Self, field: &Field) -> Result<(Self, Self)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lb = &b.coeffs[db];
        let mut q = vec![field.zero(); self.coeffs.len().saturating_sub(db).max(1)];
        let mut r = self.clone();
        while let Some(dr) = r.degree().filter(|&d| d >= db) {
            let k = dr - db;
            let c = field.div(&r.coeffs[dr], &field.frobenius(lb, k as u32))?;
            let step = Self::monomial(field, c.clone(), k);
            r = r.sub(&step.mul(b, field), field);
            q[k] = field.add(&q[k], &c);
        }
        Ok((Self::new(q), r))
    }

    /// `beta` of degree `< n` with `tau beta = beta tau = 1` modulo `F^n`.
    pub fn invert_mod_fn(&self, n: usize, field: &Field) -> Result<Self> {
        self.require_separable()?;
        let a0_inv = field.inv(&self.coeffs[0])?;
        let mut beta: Vec<FieldElem> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                beta.push(a0_inv.clone());
                continue;
            }
            let mut acc = field.zero();
            for i in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                let term = field.mul(&self.coeffs[i], &field.frobenius(&beta[k - i], i as u32));
                acc = field.add(&acc, &term);
            }
            beta.push(field.neg(&field.mul(&a0_inv, &acc)));
        }
        Ok(Self::new(beta))
    }

    pub fn parse(s: &str, field: &Field) -> Result<Self> {
        expr::eval(&expr::parse(s)?, &FDomain { field })
    }

    /// Parses a coefficient list `[a_0, a_1, ...]` of element strings.
    pub fn from_strings<S: AsRef<str>>(items: &[S], field: &Field) -> Result<Self> {
        Ok(Self::new(items.iter().map(|s| field.parse_elem(s.as_ref())).collect::<Result<_>>()?))
    }

    pub fn format(&self, field: &Field) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let f = match i {
                    0 => return field.format(c),
                    1 => "F".to_string(),
                    _ => format!("F^{i}"),
                };
                if field.is_one(c) {
                    f
                } else {
                    format!("{}*{f}", field.format_factor(c))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// Parsing domain: products are evaluated in the skew ring, so `F*u`
/// means `u^p F`.
struct FDomain<'a> {
    field: &'a Field,
}

impl Domain for FDomain<'_> {
    type Value = SkewPoly;

    fn int(&self, v: i64) -> Result<SkewPoly> {
        Ok(SkewPoly::constant(self.field.from_int(v)))
    }

    fn symbol(&self, name: &str) -> Result<SkewPoly> {
        if name == "F" {
            return Ok(SkewPoly::monomial(self.field, self.field.one(), 1));
        }
        Ok(SkewPoly::constant(self.field.symbol(name)?))
    }

    fn add(&self, a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly> {
        Ok(SkewPoly::add(a, b, self.field))
    }

    fn sub(&self, a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly> {
        Ok(SkewPoly::sub(a, b, self.field))
    }

    fn mul(&self, a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly> {
        Ok(SkewPoly::mul(a, b, self.field))
    }

    fn div(&self, a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly> {
        match b.coeffs() {
            [c] => Ok(SkewPoly::mul(a, &SkewPoly::constant(self.field.inv(c)?), self.field)),
            _ => Err(Error::Parse("can only divide by field elements".into())),
        }
    }

    fn neg(&self, a: &SkewPoly) -> Result<SkewPoly> {
        Ok(SkewPoly::neg(a, self.field))
    }

    fn pow(&self, a: &SkewPoly, k: i64) -> Result<SkewPoly> {
        match a.coeffs() {
            [c] => Ok(SkewPoly::constant(self.field.pow(c, k)?)),
            _ if k < 0 => Err(Error::Parse("negative power of a skew polynomial".into())),
            _ => {
                let mut acc = SkewPoly::one(self.field);
                for _ in 0..k {
                    acc = SkewPoly::mul(&acc, a, self.field);
                }
                Ok(acc)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triviality {
    pub trivial: bool,
    /// `c` with every coefficient of `tau c` a `p^n`-th power.
    pub witness: Option<FieldElem>,
}

/// Decides whether `A(tau)` is trivial, i.e. whether `tau c` has all
/// coefficients in `k_1^{p^n}` for some `c`, via the reduction
/// `a_i a_0^{-p^i} in k_1^{p^n}`.
pub fn triviality_test(tau: &SkewPoly, n: u32, field: &Field) -> Result<Triviality> {
    tau.require_separable()?;
    let a0_inv = field.inv(&tau.coeffs[0])?;
    for (i, a) in tau.coeffs.iter().enumerate().skip(1) {
        let b = field.mul(a, &field.frobenius(&a0_inv, i as u32));
        if field.pn_th_root(&b, n).is_none() {
            return Ok(Triviality { trivial: false, witness: None });
        }
    }
    Ok(Triviality { trivial: true, witness: Some(a0_inv) })
}

/// Whether every coefficient of `tau c` is a `p^n`-th power.
pub fn is_twisted_by(tau: &SkewPoly, c: &FieldElem, n: u32, field: &Field) -> bool {
    tau.mul(&SkewPoly::constant(c.clone()), field).untwist_coeffs(n, field).is_some()
}

/// Brute-force triviality: searches `c` among the nonzero elements of
/// height at most `bound`.
pub fn triviality_by_search(tau: &SkewPoly, n: u32, bound: usize, field: &Field) -> Result<Option<FieldElem>> {
    tau.require_separable()?;
    Ok(field.enumerate_bounded(bound).into_iter().find(|c| is_twisted_by(tau, c, n, field)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoDirection {
    /// `tau' c = sigma^{(n)} tau`.
    Forward,
    /// `tau c = sigma^{(n)} tau'`.
    Backward,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic { sigma: SkewPoly, c: FieldElem, direction: IsoDirection },
    NotFound { candidates: usize },
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic { .. })
    }
}

/// Candidate scalars: bounded-height elements, followed by the cosets
/// `ratio * d^{p^n}` forced by the constant terms.
fn candidates(field: &Field, bound: usize, ratios: &[FieldElem], n: u32) -> Vec<FieldElem> {
    let base = field.enumerate_bounded(bound);
    let mut out = base.clone();
    let mut seen: std::collections::HashSet<FieldElem> = base.iter().cloned().collect();
    for ratio in ratios {
        for d in &base {
            let c = field.mul(ratio, &field.frobenius(d, n));
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
    }
    out
}

/// Searches for `(sigma, c)` with `tau' c = sigma^{(n)} tau` exactly (or the
/// same relation with the roles of `tau` and `tau'` exchanged), `sigma`
/// separable. `NotFound` is a bounded-search verdict.
pub fn iso_test_exact(tau: &SkewPoly, tau2: &SkewPoly, n: u32, bound: usize, field: &Field) -> Result<IsoVerdict> {
    tau.require_separable()?;
    tau2.require_separable()?;
    let fwd = field.div(&tau.coeffs[0], &tau2.coeffs[0])?;
    let bwd = field.inv(&fwd)?;
    let cands = candidates(field, bound, &[fwd, bwd], n);
    for c in &cands {
        for (direction, lhs, rhs) in [(IsoDirection::Forward, tau2, tau), (IsoDirection::Backward, tau, tau2)] {
            let (q, r) = lhs.mul(&SkewPoly::constant(c.clone()), field).right_divide(rhs, field)?;
            if !r.is_zero() || !q.is_separable() {
                continue;
            }
            if let Some(sigma) = q.untwist_coeffs(n, field) {
                return Ok(IsoVerdict::Isomorphic { sigma, c: c.clone(), direction });
            }
        }
    }
    Ok(IsoVerdict::NotFound { candidates: cands.len() })
}

/// The quotient-level test: `sigma^{(n)} = tau' c tau^{-1}` modulo `F^n`.
pub fn iso_test_mod(tau: &SkewPoly, tau2: &SkewPoly, n: u32, bound: usize, field: &Field) -> Result<IsoVerdict> {
    tau.require_separable()?;
    tau2.require_separable()?;
    let nn = n as usize;
    let tau_inv = tau.invert_mod_fn(nn, field)?;
    let ratio = field.div(&tau.coeffs[0], &tau2.coeffs[0])?;
    let cands = candidates(field, bound, &[ratio], n);
    for c in &cands {
        let rho = tau2.mul(&SkewPoly::constant(c.clone()), field).mul(&tau_inv, field).truncate(nn);
        if !rho.is_separable() {
            continue;
        }
        if let Some(sigma) = rho.untwist_coeffs(n, field) {
            return Ok(IsoVerdict::Isomorphic { sigma, c: c.clone(), direction: IsoDirection::Forward });
        }
    }
    Ok(IsoVerdict::NotFound { candidates: cands.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::Degree;

    fn f2u() -> Field {
        Field::parse("GF(2)(u)").unwrap()
    }

    fn sp(s: &str, k: &Field) -> SkewPoly {
        SkewPoly::parse(s, k).unwrap()
    }

    #[test]
    fn frobenius_commutation() {
        let k = f2u();
        let f = sp("F", &k);
        let u = sp("u", &k);
        assert_eq!(f.mul(&u, &k), sp("u^2*F", &k));
        let tau = sp("u + F + u^3*F^3", &k);
        assert_eq!(SkewPoly::one(&k).mul(&tau, &k), tau);
    }

    #[test]
    fn product_example() {
        let k = f2u();
        let prod = sp("u + F", &k).mul(&sp("1 + u*F", &k), &k);
        assert_eq!(prod, sp("u + (u^2+1)*F + u^2*F^2", &k));
    }

    #[test]
    fn right_division_examples() {
        let k = f2u();
        let (q, r) = sp("F^2", &k).right_divide(&sp("F", &k), &k).unwrap();
        assert_eq!((q, r), (sp("F", &k), SkewPoly::zero()));
        let (q, r) = sp("u + F", &k).right_divide(&sp("u", &k), &k).unwrap();
        assert_eq!(q, sp("1 + u^-2*F", &k));
        assert!(r.is_zero());
        let (q, r) = sp("1", &k).right_divide(&sp("F", &k), &k).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, sp("1", &k));
        assert_eq!(sp("1", &k).right_divide(&SkewPoly::zero(), &k), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_mod_f_examples() {
        let k = f2u();
        assert_eq!(sp("u", &k).invert_mod_fn(3, &k).unwrap(), sp("u^-1", &k));
        assert_eq!(sp("1 + u*F", &k).invert_mod_fn(2, &k).unwrap(), sp("1 + u*F", &k));
        assert_eq!(sp("u + F", &k).invert_mod_fn(1, &k).unwrap(), sp("u^-1", &k));
        assert_eq!(sp("F", &k).invert_mod_fn(1, &k), Err(Error::NotSeparable));
    }

    #[test]
    fn twist_examples() {
        let k = f2u();
        assert_eq!(sp("1 + u*F", &k).twist_coeffs(1, &k), sp("1 + u^2*F", &k));
        let f5 = Field::gf(5).unwrap();
        let tau = sp("2 + 3*F", &f5);
        assert_eq!(tau.twist_coeffs(1, &f5), tau);
        assert_eq!(tau.twist_coeffs(0, &f5), tau);
    }

    #[test]
    fn p_polynomial_map() {
        let k = f2u();
        let ring = GradedPolyRing::parse("GF(2)(u)[t^+-1]{T:1}", &Degree::generator("q")).unwrap();
        assert_eq!(sp("u + F", &k).to_p_polynomial(&ring).unwrap(), ring.parse_elem("u*T + T^2").unwrap());
        assert_eq!(sp("1", &k).to_p_polynomial(&ring).unwrap(), ring.var(0));
    }

    #[test]
    fn triviality_examples() {
        let k = f2u();
        let t = triviality_test(&sp("u + F", &k), 1, &k).unwrap();
        assert!(t.trivial);
        assert_eq!(t.witness, Some(k.parse_elem("1/u").unwrap()));
        assert!(!triviality_test(&sp("1 + u*F", &k), 1, &k).unwrap().trivial);
        assert!(triviality_by_search(&sp("1 + u*F", &k), 1, 3, &k).unwrap().is_none());
        let f5 = Field::gf(5).unwrap();
        assert!(triviality_test(&sp("2 + 3*F + F^2", &f5), 2, &f5).unwrap().trivial);
        assert_eq!(triviality_test(&sp("F", &k), 1, &k), Err(Error::NotSeparable));
    }

    #[test]
    fn iso_examples() {
        let k = f2u();
        let tau = sp("u + F", &k);
        match iso_test_exact(&tau, &tau, 1, 1, &k).unwrap() {
            IsoVerdict::Isomorphic { sigma, c, .. } => {
                assert_eq!(sigma, SkewPoly::one(&k));
                assert!(k.is_one(&c));
            }
            v => panic!("{v:?}"),
        }
        assert!(iso_test_exact(&tau, &sp("1", &k), 1, 2, &k).unwrap().is_isomorphic());
        assert!(!iso_test_exact(&sp("1 + u*F", &k), &sp("1", &k), 1, 4, &k).unwrap().is_isomorphic());
        // modulo F the relation only sees the constant terms
        assert!(iso_test_mod(&sp("1 + u*F", &k), &sp("1", &k), 1, 1, &k).unwrap().is_isomorphic());
        assert!(iso_test_mod(&tau, &tau, 2, 1, &k).unwrap().is_isomorphic());
    }

    #[test]
    fn parser_uses_skew_products() {
        let k = f2u();
        assert_eq!(sp("F*F*u", &k), sp("u^4*F^2", &k));
        assert_eq!(sp("(1+F)^2", &k), sp("1 + F^2", &k));
        assert_eq!(sp("u + 1*F + 0*F^2 + u^3*F^3", &k).degree(), Some(3));
        assert!(SkewPoly::parse("u/F", &k).is_err());
    }
}
