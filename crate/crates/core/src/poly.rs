//! Sparse polynomials over a coefficient field, Laurent in a distinguished
//! variable `t` and in finitely many further variables.
//!
//! Every higher-level ring (graded fields, graded polynomial rings, Russell
//! forms, truncated series coefficients) stores its elements as `Poly`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub t: i64,
    pub vars: Vec<i64>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { t: 0, vars: vec![0; nvars] }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { t: self.t + other.t, vars: self.vars.iter().zip(&other.vars).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, k: i64) -> Monomial {
        Monomial { t: self.t * k, vars: self.vars.iter().map(|a| a * k).collect() }
    }

    pub fn inv(&self) -> Monomial {
        self.scale(-1)
    }

    fn key(&self) -> (&[i64], i64) {
        (&self.vars, self.t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: FieldElem, nvars: usize) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn one(field: &Field, nvars: usize) -> Self {
        Self::constant(field.one(), nvars)
    }

    pub fn term(c: FieldElem, m: Monomial) -> Self {
        let nvars = m.vars.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    /// `c * t^k`.
    pub fn t_monomial(c: FieldElem, k: i64, nvars: usize) -> Self {
        Self::term(c, Monomial { t: k, vars: vec![0; nvars] })
    }

    /// The `i`-th variable.
    pub fn var(field: &Field, i: usize, nvars: usize) -> Self {
        let mut vars = vec![0; nvars];
        vars[i] = 1;
        Self::term(field.one(), Monomial { t: 0, vars })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The same element in a ring with `nvars >= self.nvars()` variables.
    pub fn widen(&self, nvars: usize) -> Poly {
        assert!(nvars >= self.nvars, "cannot drop variables");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut vars = m.vars.clone();
                vars.resize(nvars, 0);
                (Monomial { t: m.t, vars }, c.clone())
            })
            .collect();
        Poly { nvars, terms }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElem)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&FieldElem> {
        self.terms.get(m)
    }

    /// The single term of a monomial element.
    pub fn as_term(&self) -> Option<(&Monomial, &FieldElem)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().expect("one term"))
    }

    /// The coefficient if this is a constant (possibly zero).
    pub fn as_constant(&self, field: &Field) -> Option<FieldElem> {
        match self.as_term() {
            None if self.is_zero() => Some(field.zero()),
            Some((m, c)) if m.t == 0 && m.vars.iter().all(|&e| e == 0) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self, field: &Field) -> bool {
        self.as_constant(field).is_some_and(|c| field.is_one(&c))
    }

    fn add_term(&mut self, field: &Field, m: Monomial, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                let sum = field.add(slot, c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Poly, field: &Field) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(field, m.clone(), c);
        }
        out
    }

    pub fn neg(&self, field: &Field) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect() }
    }

    pub fn sub(&self, other: &Poly, field: &Field) -> Poly {
        self.add(&other.neg(field), field)
    }

    pub fn scale(&self, c: &FieldElem, field: &Field) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn mul(&self, other: &Poly, field: &Field) -> Poly {
        let mut out = Poly::zero(self.nvars.max(other.nvars));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(field, m1.mul(m2), &field.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u64, field: &Field) -> Poly {
        let mut acc = Poly::one(field, self.nvars);
        let mut sq = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq, field);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq, field);
            }
        }
        acc
    }

    /// `self^(p^n)`, computed termwise.
    pub fn frobenius(&self, n: u32, field: &Field) -> Poly {
        let q = (field.characteristic() as i64).pow(n);
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.scale(q), field.frobenius(c, n))).collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, mut f: impl FnMut(&FieldElem) -> FieldElem) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let v = f(c);
                    (!v.is_zero()).then(|| (m.clone(), v))
                })
                .collect(),
        }
    }

    /// Inverse of a single-term element.
    pub fn monomial_inverse(&self, field: &Field) -> Result<Poly> {
        let (m, c) = self.as_term().ok_or(Error::DivisionByZero)?;
        Ok(Poly::term(field.inv(c)?, m.inv()))
    }

    /// Degree in variable `i` (the maximal exponent), `None` for zero.
    pub fn var_degree(&self, i: usize) -> Option<i64> {
        self.terms.keys().map(|m| m.vars[i]).max()
    }

    pub fn min_var_degree(&self, i: usize) -> Option<i64> {
        self.terms.keys().map(|m| m.vars[i]).min()
    }

    /// Evaluates the ring homomorphism fixing coefficients and sending `t`,
    /// `t^-1` and the variables to the given images.
    pub fn eval_hom(
        &self,
        field: &Field,
        t: &Poly,
        t_inv: &Poly,
        vars: &[Poly],
    ) -> Poly {
        let nv = t.nvars;
        let mut out = Poly::zero(nv);
        let mut tcache: BTreeMap<i64, Poly> = BTreeMap::new();
        let mut vcache: BTreeMap<(usize, i64), Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let tp = tcache
                .entry(m.t)
                .or_insert_with(|| if m.t >= 0 { t.pow(m.t as u64, field) } else { t_inv.pow(m.t.unsigned_abs(), field) })
                .clone();
            let mut acc = tp.scale(c, field);
            for (i, &e) in m.vars.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                assert!(e > 0, "eval_hom needs polynomial variables");
                let vp = vcache.entry((i, e)).or_insert_with(|| vars[i].pow(e as u64, field));
                acc = acc.mul(vp, field);
            }
            out = out.add(&acc, field);
        }
        out
    }

    /// The monomial of minimal exponents (componentwise) and its cofactor.
    fn strip_content(&self) -> (Monomial, Poly) {
        let mut lo = Monomial { t: i64::MAX, vars: vec![i64::MAX; self.nvars] };
        for m in self.terms.keys() {
            lo.t = lo.t.min(m.t);
            for (a, &b) in lo.vars.iter_mut().zip(&m.vars) {
                *a = (*a).min(b);
            }
        }
        let inv = lo.inv();
        (lo, self.mul_monomial(&inv))
    }

    fn leading(&self) -> Option<(&Monomial, &FieldElem)> {
        self.terms.iter().max_by(|a, b| a.0.key().cmp(&b.0.key()))
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does
    /// not divide `self`.
    pub fn exact_div(&self, d: &Poly, field: &Field) -> Result<Option<Poly>> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(Poly::zero(self.nvars)));
        }
        let (a_shift, a) = self.strip_content();
        let (d_shift, d) = d.strip_content();
        let (lm, lc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
        let lc_inv = field.inv(&lc)?;
        let mut rem = a;
        let mut quot = Poly::zero(self.nvars);
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if m.t < lm.t || m.vars.iter().zip(&lm.vars).any(|(x, y)| x < y) {
                return Ok(None);
            }
            let qm = m.mul(&lm.inv());
            let qc = field.mul(&c, &lc_inv);
            let step = Poly::term(qc.clone(), qm.clone());
            rem = rem.sub(&d.mul(&step, field), field);
            quot.add_term(field, qm, &qc);
        }
        Ok(Some(quot.mul_monomial(&a_shift.mul(&d_shift.inv()))))
    }

    /// Formats with the given name for `t` and variable names.
    pub fn format(&self, field: &Field, t_name: &str, var_names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            let push = |factors: &mut Vec<String>, name: &str, e: i64| match e {
                0 => {}
                1 => factors.push(name.to_string()),
                _ => factors.push(format!("{name}^{e}")),
            };
            push(&mut factors, t_name, m.t);
            for (i, &e) in m.vars.iter().enumerate() {
                push(&mut factors, var_names.get(i).copied().unwrap_or("?"), e);
            }
            let coeff = field.format_factor(c);
            if factors.is_empty() {
                parts.push(field.format(c));
            } else if field.is_one(c) {
                parts.push(factors.join("*"));
            } else {
                parts.push(format!("{coeff}*{}", factors.join("*")));
            }
        }
        parts.join(" + ")
    }
}
