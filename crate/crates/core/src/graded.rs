//! Graded fields `k_1[t^{±e}]`, graded polynomial rings over them, and
//! homogeneity bookkeeping.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;

use crate::degree::{Degree, Order};
use crate::error::{Error, Result};
use crate::expr::{self, Domain};
use crate::field::{Field, FieldElem};
use crate::poly::{Monomial, Poly};

/// The graded field `k_1[t^{±stride}]` with `deg t = t_degree` and `k_1` in
/// degree 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedField {
    pub coeff: Field,
    pub t_name: String,
    pub t_degree: Degree,
    pub stride: i64,
}

impl GradedField {
    pub fn new(coeff: Field, t_degree: Degree, stride: i64) -> Result<Self> {
        Self::with_name(coeff, "t", t_degree, stride)
    }

    pub fn with_name(coeff: Field, t_name: &str, t_degree: Degree, stride: i64) -> Result<Self> {
        if stride < 1 {
            return Err(Error::InvalidArgument(format!("stride must be positive, got {stride}")));
        }
        Ok(GradedField { coeff, t_name: t_name.to_string(), t_degree, stride })
    }

    /// The same field with a different stride (`k_1[t^{±e'}]`).
    pub fn with_stride(&self, stride: i64) -> Result<Self> {
        Self::with_name(self.coeff.clone(), &self.t_name, self.t_degree.clone(), stride)
    }

    /// Generator of the value group of the nonzero homogeneous elements.
    pub fn unit_degree(&self) -> Degree {
        self.t_degree.powi(self.stride)
    }

    pub fn degree_of_t_power(&self, a: i64) -> Degree {
        self.t_degree.powi(a)
    }

    pub fn contains_t_power(&self, a: i64) -> bool {
        a % self.stride == 0
    }

    /// The ring with no further variables, whose elements are those of the
    /// graded field itself.
    pub fn as_ring(&self) -> Arc<GradedPolyRing> {
        Arc::new(GradedPolyRing { base: self.clone(), vars: Vec::new(), laurent: false })
    }

    pub fn spec(&self) -> String {
        format!("{}[{}^+-{}]", self.coeff.spec(), self.t_name, self.stride)
    }
}

/// `k[r_1^{-1} T_1, ..., r_d^{-1} T_d]`, optionally Laurent in the `T_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPolyRing {
    pub base: GradedField,
    pub vars: Vec<(String, Degree)>,
    pub laurent: bool,
}

impl GradedPolyRing {
    pub fn new(base: GradedField, vars: Vec<(String, Degree)>) -> Result<Arc<Self>> {
        let mut names: Vec<&str> = vars.iter().map(|(n, _)| n.as_str()).collect();
        names.push(&base.t_name);
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::InvalidArgument("variable names must be distinct".into()));
        }
        for n in &names {
            if *n == "w" || *n == base.coeff.var_name() {
                return Err(Error::InvalidArgument(format!("variable name '{n}' clashes with the coefficient field")));
            }
        }
        Ok(Arc::new(GradedPolyRing { base, vars, laurent: false }))
    }

    /// Parses `GF(2)[t^+-2]{T1:q^2, T2:q}`. An entry for the Laurent
    /// variable inside the braces (`{t:q_t, ...}`) sets its degree;
    /// otherwise it is `default_t_degree`.
    pub fn parse(spec: &str, default_t_degree: &Degree) -> Result<Arc<Self>> {
        let spec = spec.trim();
        let bad = || Error::Parse(format!("bad ring spec '{spec}'"));
        let open = spec.rfind('[').ok_or_else(bad)?;
        let close = spec[open..].find(']').map(|i| i + open).ok_or_else(bad)?;
        let field = Field::parse(&spec[..open])?;
        let inner: String = spec[open + 1..close].chars().filter(|c| !c.is_whitespace()).collect();
        let (t_name, stride) = inner
            .split_once("^+-")
            .or_else(|| inner.split_once("^±"))
            .ok_or_else(bad)?;
        let stride: i64 = stride.parse().map_err(|_| bad())?;
        let mut t_degree = default_t_degree.clone();
        let mut vars = Vec::new();
        let rest = spec[close + 1..].trim();
        if !rest.is_empty() {
            let body = rest.strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
            for entry in body.split(',').map(str::trim).filter(|e| !e.is_empty()) {
                let (name, deg) = entry.split_once(':').ok_or_else(bad)?;
                let name = name.trim();
                if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                    return Err(bad());
                }
                let deg: Degree = deg.parse()?;
                if name == t_name {
                    t_degree = deg;
                } else {
                    vars.push((name.to_string(), deg));
                }
            }
        }
        Self::new(GradedField::with_name(field, t_name, t_degree, stride)?, vars)
    }

    pub fn field(&self) -> &Field {
        &self.base.coeff
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.vars.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|(n, _)| n == name)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Degree {
        let mut d = self.base.degree_of_t_power(m.t);
        for ((_, r), &e) in self.vars.iter().zip(&m.vars) {
            if e != 0 {
                d = d.mul(&r.powi(e));
            }
        }
        d
    }

    /// Checks that `poly` lies in this ring.
    pub fn check(&self, poly: &Poly) -> Result<()> {
        if poly.nvars() != self.nvars() && !poly.is_zero() {
            return Err(Error::OwnerMismatch(format!("expected {} variables, got {}", self.nvars(), poly.nvars())));
        }
        for (m, _) in poly.terms() {
            if !self.base.contains_t_power(m.t) {
                return Err(Error::StrideViolation(format!(
                    "{}^{} is not in {}",
                    self.base.t_name,
                    m.t,
                    self.base.spec()
                )));
            }
            if !self.laurent && m.vars.iter().any(|&e| e < 0) {
                return Err(Error::StrideViolation("negative variable exponent in a polynomial ring".into()));
            }
        }
        Ok(())
    }

    pub fn elem(self: &Arc<Self>, poly: Poly) -> Result<GradedElem> {
        self.check(&poly)?;
        let poly = if poly.is_zero() { Poly::zero(self.nvars()) } else { poly };
        Ok(GradedElem { ring: self.clone(), poly })
    }

    pub fn zero(self: &Arc<Self>) -> GradedElem {
        GradedElem { ring: self.clone(), poly: Poly::zero(self.nvars()) }
    }

    pub fn one(self: &Arc<Self>) -> GradedElem {
        GradedElem { ring: self.clone(), poly: Poly::one(self.field(), self.nvars()) }
    }

    pub fn var(self: &Arc<Self>, i: usize) -> GradedElem {
        GradedElem { ring: self.clone(), poly: Poly::var(self.field(), i, self.nvars()) }
    }

    /// `c * t^k`.
    pub fn t_monomial(self: &Arc<Self>, c: FieldElem, k: i64) -> Result<GradedElem> {
        self.elem(Poly::t_monomial(c, k, self.nvars()))
    }

    pub fn parse_elem(self: &Arc<Self>, s: &str) -> Result<GradedElem> {
        let poly = expr::eval(&expr::parse(s)?, &PolyDomain { ring: self })?;
        self.elem(poly)
    }

    pub fn format_poly(&self, p: &Poly) -> String {
        p.format(self.field(), &self.base.t_name, &self.var_names())
    }

    /// The same ring regraded by `deg -> deg^(1/p^n)`.
    pub fn frobenius_twist(&self, n: i32) -> GradedPolyRing {
        let p = self.field().characteristic() as i64;
        let e = if n >= 0 { Rational64::new(1, p.pow(n as u32)) } else { Rational64::from_integer(p.pow(n.unsigned_abs())) };
        let mut base = self.base.clone();
        base.t_degree = base.t_degree.pow(e);
        GradedPolyRing {
            base,
            vars: self.vars.iter().map(|(n, d)| (n.clone(), d.pow(e))).collect(),
            laurent: self.laurent,
        }
    }

    pub fn spec(&self) -> String {
        let mut entries = vec![format!("{}:{}", self.base.t_name, self.base.t_degree)];
        entries.extend(self.vars.iter().map(|(n, d)| format!("{n}:{d}")));
        format!("{}{{{}}}{}", self.base.spec(), entries.join(", "), if self.laurent { " (Laurent)" } else { "" })
    }
}

struct PolyDomain<'a> {
    ring: &'a GradedPolyRing,
}

impl Domain for PolyDomain<'_> {
    type Value = Poly;

    fn int(&self, v: i64) -> Result<Poly> {
        Ok(Poly::constant(self.ring.field().from_int(v), self.ring.nvars()))
    }

    fn symbol(&self, name: &str) -> Result<Poly> {
        let field = self.ring.field();
        let nv = self.ring.nvars();
        if name == self.ring.base.t_name {
            return Ok(Poly::t_monomial(field.one(), 1, nv));
        }
        if let Some(i) = self.ring.var_index(name) {
            return Ok(Poly::var(field, i, nv));
        }
        Ok(Poly::constant(field.symbol(name)?, nv))
    }

    fn add(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(a.add(b, self.ring.field()))
    }

    fn sub(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(a.sub(b, self.ring.field()))
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(a.mul(b, self.ring.field()))
    }

    fn div(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let field = self.ring.field();
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = b.as_constant(field) {
            return Ok(a.scale(&field.inv(&c)?, field));
        }
        if b.len() == 1 {
            return Ok(a.mul(&b.monomial_inverse(field)?, field));
        }
        a.exact_div(b, field)?
            .ok_or_else(|| Error::Parse("division is not exact in this ring".into()))
    }

    fn neg(&self, a: &Poly) -> Result<Poly> {
        Ok(a.neg(self.ring.field()))
    }

    fn pow(&self, a: &Poly, k: i64) -> Result<Poly> {
        let field = self.ring.field();
        if k >= 0 {
            return Ok(a.pow(k as u64, field));
        }
        if let Some(c) = a.as_constant(field) {
            return Ok(Poly::constant(field.pow(&c, k)?, self.ring.nvars()));
        }
        Ok(a.monomial_inverse(field)?.pow(k.unsigned_abs(), field))
    }
}

/// An element of a graded ring.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedElem {
    ring: Arc<GradedPolyRing>,
    poly: Poly,
}

impl fmt::Debug for GradedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedElem({})", self)
    }
}

impl fmt::Display for GradedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format_poly(&self.poly))
    }
}

impl GradedElem {
    pub fn ring(&self) -> &Arc<GradedPolyRing> {
        &self.ring
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn same_ring(&self, other: &GradedElem) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::OwnerMismatch(format!("{} vs {}", self.ring.spec(), other.ring.spec())))
        }
    }

    fn with(&self, poly: Poly) -> GradedElem {
        GradedElem { ring: self.ring.clone(), poly }
    }

    pub fn add(&self, other: &GradedElem) -> Result<GradedElem> {
        self.same_ring(other)?;
        Ok(self.with(self.poly.add(&other.poly, self.ring.field())))
    }

    pub fn sub(&self, other: &GradedElem) -> Result<GradedElem> {
        self.same_ring(other)?;
        Ok(self.with(self.poly.sub(&other.poly, self.ring.field())))
    }

    pub fn neg(&self) -> GradedElem {
        self.with(self.poly.neg(self.ring.field()))
    }

    pub fn mul(&self, other: &GradedElem) -> Result<GradedElem> {
        self.same_ring(other)?;
        Ok(self.with(self.poly.mul(&other.poly, self.ring.field())))
    }

    pub fn pow(&self, k: u64) -> GradedElem {
        self.with(self.poly.pow(k, self.ring.field()))
    }

    /// The degree if the element is homogeneous and nonzero.
    pub fn degree(&self) -> Option<Degree> {
        let mut it = self.poly.terms().map(|(m, _)| self.ring.monomial_degree(m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Zero is homogeneous of every degree.
    pub fn is_homogeneous(&self, d: &Degree) -> bool {
        self.poly.terms().all(|(m, _)| self.ring.monomial_degree(m) == *d)
    }

    pub fn homogeneous_components(&self) -> BTreeMap<Degree, GradedElem> {
        let field = self.ring.field();
        let mut out: BTreeMap<Degree, Poly> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            let d = self.ring.monomial_degree(m);
            let slot = out.entry(d).or_insert_with(|| Poly::zero(self.ring.nvars()));
            *slot = slot.add(&Poly::term(c.clone(), m.clone()), field);
        }
        out.into_iter().map(|(d, p)| (d, self.with(p))).collect()
    }

    /// Inverse of a nonzero homogeneous element of a graded field.
    pub fn inverse_homogeneous(&self) -> Result<GradedElem> {
        if self.poly.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.poly.len() != 1 || self.ring.nvars() != 0 {
            return Err(Error::NotHomogeneous(self.to_string()));
        }
        Ok(self.with(self.poly.monomial_inverse(self.ring.field())?))
    }

    /// The same element viewed in the regraded ring `A^{<n>}`.
    pub fn frobenius_twist(&self, n: i32) -> GradedElem {
        GradedElem { ring: Arc::new(self.ring.frobenius_twist(n)), poly: self.poly.clone() }
    }

    /// Decides whether this one-variable element is a `p`-polynomial
    /// `sum a_i T^{p^i}` homogeneous of degree `target`, returning the
    /// coefficients `a_0, ..., a_m` as elements of the base graded field.
    pub fn homogeneous_p_polynomial(&self, target: &Degree) -> Option<Vec<GradedElem>> {
        if self.ring.nvars() != 1 {
            return None;
        }
        let field = self.ring.field();
        let p = field.characteristic() as i64;
        let r = &self.ring.vars[0].1;
        let mut coeffs: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            let e = m.vars[0];
            let i = p_log(e, p)?;
            let slot = coeffs.entry(i).or_insert_with(|| Poly::zero(0));
            *slot = slot.add(&Poly::t_monomial(c.clone(), m.t, 0), field);
        }
        let top = coeffs.keys().max().copied().unwrap_or(0);
        let base = self.ring.base.as_ring();
        let mut out = Vec::new();
        for i in 0..=top {
            let a = base.elem(coeffs.remove(&i).unwrap_or_else(|| Poly::zero(0))).ok()?;
            let want = target.mul(&r.powi(p.pow(i)).inv());
            if a.poly.len() > 1 || !a.is_homogeneous(&want) {
                return None;
            }
            out.push(a);
        }
        Some(out)
    }
}

/// `Some(i)` if `e = p^i`.
pub fn p_log(e: i64, p: i64) -> Option<u32> {
    if e < 1 {
        return None;
    }
    let (mut e, mut i) = (e, 0);
    while e % p == 0 {
        e /= p;
        i += 1;
    }
    (e == 1).then_some(i)
}

/// The graded fraction ring `k[r^{-1}T, r T^{-1}]` of a one-variable ring.
pub fn graded_fraction_ring(ring: &GradedPolyRing) -> Result<Arc<GradedPolyRing>> {
    if ring.nvars() != 1 {
        return Err(Error::InvalidArgument("graded fraction ring needs exactly one variable".into()));
    }
    let r = &ring.vars[0].1;
    match r.order_mod_subgroup(&[ring.base.unit_degree()]) {
        Order::Infinite => Ok(Arc::new(GradedPolyRing { laurent: true, ..ring.clone() })),
        Order::Finite(_) => Err(Error::FiniteOrderRadius),
    }
}

/// The two summands `(trdeg_{k_1} K_1, rank of the value group quotient)`
/// for `K = Frac(k[r^{-1}T])`.
pub fn trdeg_frac_components(k: &GradedField, r: &Degree) -> (u32, u32) {
    match r.order_mod_subgroup(&[k.unit_degree()]) {
        Order::Infinite => (0, 1),
        Order::Finite(_) => (1, 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Degree {
        Degree::generator("q")
    }

    fn ring(spec: &str) -> Arc<GradedPolyRing> {
        GradedPolyRing::parse(spec, &q()).unwrap()
    }

    #[test]
    fn parses_ring_spec() {
        let r = ring("GF(2)[t^+-2]{T1:q^2, T2:q}");
        assert_eq!(r.base.stride, 2);
        assert_eq!(r.vars[0], ("T1".to_string(), "q^2".parse().unwrap()));
        let r = ring("GF(2)(u)[t^+-1]{t:q_t, T:r}");
        assert_eq!(r.base.t_degree, Degree::generator("q_t"));
        assert_eq!(r.nvars(), 1);
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring("GF(2)[t^+-1]{T:r}");
        let tt = r.parse_elem("T*T").unwrap();
        assert_eq!(tt.degree(), Some("r^2".parse().unwrap()));
        let sq = r.parse_elem("(T + t)^2").unwrap();
        assert_eq!(sq, r.parse_elem("T^2 + t^2").unwrap());
        let x = r.parse_elem("t^-2*T^2").unwrap().mul(&r.parse_elem("t^2").unwrap()).unwrap();
        assert_eq!(x, r.parse_elem("T^2").unwrap());
    }

    #[test]
    fn owner_mismatch() {
        let a = ring("GF(2)[t^+-1]{T:r}").one();
        let b = ring("GF(3)[t^+-1]{T:r}").one();
        assert!(matches!(a.add(&b), Err(Error::OwnerMismatch(_))));
    }

    #[test]
    fn stride_is_enforced() {
        let r = ring("GF(2)[t^+-2]{T1:q^2}");
        assert!(matches!(r.parse_elem("t*T1"), Err(Error::StrideViolation(_))));
        assert!(r.parse_elem("t^-2*T1").is_ok());
    }

    #[test]
    fn homogeneous_components_examples() {
        let r = ring("GF(2)[t^+-1]{T:r}");
        let comps = r.parse_elem("T + t").unwrap().homogeneous_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&"r".parse().unwrap()].to_string(), "T");
        assert!(r.zero().homogeneous_components().is_empty());
        let r = ring("GF(2)(u)[t^+-1]{T:q^2}");
        let comps = r.parse_elem("u*T + t^2").unwrap().homogeneous_components();
        assert_eq!(comps.len(), 1);
        assert!(comps.contains_key(&"q^2".parse().unwrap()));
    }

    #[test]
    fn p_polynomial_examples() {
        let r = ring("GF(2)[t^+-2]{T1:q^2}");
        let f = r.parse_elem("T1 + t^-2*T1^2").unwrap();
        let a = f.homogeneous_p_polynomial(&"q^2".parse().unwrap()).unwrap();
        assert_eq!(a.iter().map(|x| x.to_string()).collect::<Vec<_>>(), ["1", "t^-2"]);
        let r = ring("GF(2)[t^+-1]{T:r}");
        assert!(r.parse_elem("T + T^3").unwrap().homogeneous_p_polynomial(&"r".parse().unwrap()).is_none());
        let r = ring("GF(2)(u)[t^+-1]{T:r}");
        let a = r.parse_elem("u*T").unwrap().homogeneous_p_polynomial(&"r".parse().unwrap()).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].to_string(), "u");
    }

    #[test]
    fn twist_examples() {
        let r = ring("GF(2)[t^+-1]{T:r}");
        let x = r.parse_elem("t^2").unwrap();
        assert_eq!(x.degree(), Some("q^2".parse().unwrap()));
        let tw = x.frobenius_twist(1);
        assert_eq!(tw.degree(), Some(q()));
        assert_eq!(tw.poly(), x.poly());
        assert_eq!(tw.frobenius_twist(-1), x);
        assert_eq!(r.one().frobenius_twist(3).degree(), Some(Degree::identity()));
    }

    #[test]
    fn fraction_ring_examples() {
        let r = ring("GF(2)[t^+-1]{T:r}");
        let frac = graded_fraction_ring(&r).unwrap();
        assert!(frac.parse_elem("T^-1*t").unwrap().degree().is_some());
        assert!(frac.parse_elem("T + T^-1").unwrap().degree().is_none());
        let r = ring("GF(2)[t^+-1]{t:q_t, T:q_t}");
        assert_eq!(graded_fraction_ring(&r), Err(Error::FiniteOrderRadius));
    }

    #[test]
    fn trdeg_examples() {
        let k = GradedField::new(Field::gf(2).unwrap(), q(), 1).unwrap();
        assert_eq!(trdeg_frac_components(&k, &Degree::generator("r")), (0, 1));
        assert_eq!(trdeg_frac_components(&k, &Degree::identity()), (1, 0));
    }
}
