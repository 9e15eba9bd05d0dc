//! Truncated polynomial rings `A[S]_m`, higher derivations stored as ring
//! homomorphisms `A -> A[S]_m`, and logarithmic derivatives.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Poly};
use crate::russell::{RussellForm, Trivialization};

/// `sum c_j S^j` with `S^{m+1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruncSeries {
    coeffs: Vec<Poly>,
}

impl TruncSeries {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        TruncSeries { coeffs }
    }

    pub fn zero(m: usize, nvars: usize) -> Self {
        TruncSeries { coeffs: vec![Poly::zero(nvars); m + 1] }
    }

    pub fn constant(c: Poly, m: usize) -> Self {
        let nvars = c.nvars();
        let mut coeffs = vec![Poly::zero(nvars); m + 1];
        coeffs[0] = c;
        TruncSeries { coeffs }
    }

    pub fn one(field: &Field, m: usize, nvars: usize) -> Self {
        Self::constant(Poly::one(field, nvars), m)
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn nvars(&self) -> usize {
        self.coeffs[0].nvars()
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Poly {
        &self.coeffs[j]
    }

    /// The augmentation `S -> 0`.
    pub fn augmentation(&self) -> &Poly {
        &self.coeffs[0]
    }

    pub fn is_one(&self, field: &Field) -> bool {
        self.coeffs[0].is_one(field) && self.coeffs[1..].iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &Self, field: &Field) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b, field)).collect() }
    }

    pub fn sub(&self, other: &Self, field: &Field) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b, field)).collect() }
    }

    pub fn scale(&self, c: &Poly, field: &Field) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a.mul(c, field)).collect() }
    }

    pub fn mul(&self, other: &Self, field: &Field) -> Self {
        let m = self.rank().min(other.rank());
        let mut coeffs = vec![Poly::zero(self.nvars().max(other.nvars())); m + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(m + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(m + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b, field), field);
                }
            }
        }
        TruncSeries { coeffs }
    }

    pub fn pow(&self, k: u64, field: &Field) -> Self {
        let mut acc = TruncSeries::one(field, self.rank(), self.nvars());
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

    /// Inverse when the constant coefficient is a single term.
    pub fn inverse(&self, field: &Field) -> Result<Self> {
        let c0_inv = self.coeffs[0].monomial_inverse(field)?;
        let m = self.rank();
        let mut inv: Vec<Poly> = vec![c0_inv.clone()];
        for k in 1..=m {
            let mut acc = Poly::zero(self.nvars());
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&inv[k - j], field), field);
            }
            inv.push(acc.mul(&c0_inv, field).neg(field));
        }
        Ok(TruncSeries { coeffs: inv })
    }

    pub fn format(&self, field: &Field, t_name: &str, var_names: &[&str]) -> String {
        let mut parts = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.format(field, t_name, var_names);
            let s = if c.len() > 1 && j > 0 { format!("({s})") } else { s };
            parts.push(match j {
                0 => s,
                1 if c.is_one(field) => "S".into(),
                1 => format!("{s}*S"),
                _ if c.is_one(field) => format!("S^{j}"),
                _ => format!("{s}*S^{j}"),
            });
        }
        let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
        format!("{body} (mod S^{})", self.rank() + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DerivationKind {
    Standard { m_prime: u32 },
    BaseChange { m_prime: u32 },
    TCoordinate { m_prime: u32 },
    Custom,
}

/// A higher derivation of rank `m` on `k_1[t^{±1}][X_1, ..., X_d]`,
/// determined by the images of `t`, `t^{-1}` and the `X_i`. Coefficients in
/// `k_1` are constants.
#[derive(Clone, Debug)]
pub struct HigherDerivation {
    field: Field,
    kind: DerivationKind,
    t: TruncSeries,
    t_inv: TruncSeries,
    vars: Vec<TruncSeries>,
}

impl HigherDerivation {
    /// The standard derivation `t -> t + S` of exponent `m'` (rank
    /// `p^{m'} - 1`) on `k_1[t^{±1}]`, extended to `nvars` variables that
    /// are fixed.
    pub fn standard(field: &Field, m_prime: u32, nvars: usize) -> Self {
        let p = field.characteristic() as usize;
        let m = p.pow(m_prime) - 1;
        let mut t = TruncSeries::zero(m, nvars);
        t.coeffs[0] = Poly::t_monomial(field.one(), 1, nvars);
        if m >= 1 {
            t.coeffs[1] = Poly::one(field, nvars);
        }
        let t_inv = TruncSeries::new(
            (0..=m)
                .map(|j| {
                    let sign = if j % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                    Poly::t_monomial(sign, -1 - j as i64, nvars)
                })
                .collect(),
        );
        let vars = (0..nvars).map(|i| TruncSeries::constant(Poly::var(field, i, nvars), m)).collect();
        HigherDerivation { field: field.clone(), kind: DerivationKind::Standard { m_prime }, t, t_inv, vars }
    }

    /// A derivation given by the image of `t` (whose constant term must be
    /// `t`) and of each variable.
    pub fn from_images(field: &Field, t: TruncSeries, vars: Vec<TruncSeries>) -> Result<Self> {
        let nvars = t.nvars();
        if t.coeffs[0] != Poly::t_monomial(field.one(), 1, nvars) {
            return Err(Error::InvalidArgument("the image of t must have augmentation t".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.rank() != t.rank() || v.coeffs[0] != Poly::var(field, i, nvars) {
                return Err(Error::InvalidArgument(format!("bad image for variable {i}")));
            }
        }
        let t_inv = t.inverse(field)?;
        Ok(HigherDerivation { field: field.clone(), kind: DerivationKind::Custom, t, t_inv, vars })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn kind(&self) -> &DerivationKind {
        &self.kind
    }

    pub fn rank(&self) -> usize {
        self.t.rank()
    }

    pub fn nvars(&self) -> usize {
        self.t.nvars()
    }

    pub fn t_image(&self) -> &TruncSeries {
        &self.t
    }

    pub fn var_image(&self, i: usize) -> &TruncSeries {
        &self.vars[i]
    }

    /// `d(x) = sum_j d_j(x) S^j`.
    pub fn apply(&self, x: &Poly) -> TruncSeries {
        let f = &self.field;
        let m = self.rank();
        let nv = self.nvars();
        let mut out = TruncSeries::zero(m, nv);
        let mut tcache: BTreeMap<i64, TruncSeries> = BTreeMap::new();
        let mut vcache: BTreeMap<(usize, i64), TruncSeries> = BTreeMap::new();
        for (mono, c) in x.terms() {
            let tp = tcache
                .entry(mono.t)
                .or_insert_with(|| {
                    if mono.t >= 0 {
                        self.t.pow(mono.t as u64, f)
                    } else {
                        self.t_inv.pow(mono.t.unsigned_abs(), f)
                    }
                })
                .clone();
            let mut acc = tp.scale(&Poly::constant(c.clone(), nv), f);
            for (i, &e) in mono.vars.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                assert!(e > 0, "higher derivations act on polynomial variables");
                let vp = vcache.entry((i, e)).or_insert_with(|| self.vars[i].pow(e as u64, f));
                acc = acc.mul(vp, f);
            }
            out = out.add(&acc, f);
        }
        out
    }

    pub fn is_constant(&self, x: &Poly) -> bool {
        self.apply(x) == TruncSeries::constant(x.clone(), self.rank())
    }

    /// `(mu, n)`: the least `j >= 1` with `d_j != 0` on some probe, and the
    /// least `n` with `m < mu p^n`.
    pub fn mu_and_n(&self, probes: &[Poly]) -> Result<(usize, u32)> {
        let m = self.rank();
        let images: Vec<TruncSeries> = probes.iter().map(|x| self.apply(x)).collect();
        let mu = (1..=m)
            .find(|&j| images.iter().any(|s| !s.coeffs[j].is_zero()))
            .ok_or(Error::TrivialOnProbes)?;
        let p = self.field.characteristic() as usize;
        let mut n = 0u32;
        while m >= mu * p.pow(n) {
            n += 1;
        }
        Ok((mu, n))
    }

    /// The standard probe set `{t, X_1, ..., X_d}`.
    pub fn default_probes(&self) -> Vec<Poly> {
        let nv = self.nvars();
        let mut probes = vec![Poly::t_monomial(self.field.one(), 1, nv)];
        probes.extend((0..nv).map(|i| Poly::var(&self.field, i, nv)));
        probes
    }

    /// Checks `[K:K'] = p^{n}` (with `K'` generated by the declared
    /// constants `k_1[t^{±declared_stride}]`) and exhibits `a` with
    /// `d_mu(a)` a unit.
    pub fn heartsuit_check(&self, declared_stride: i64, probes: &[Poly]) -> Result<HeartReport> {
        let (mu, n) = self.mu_and_n(probes)?;
        let p = self.field.characteristic() as i64;
        let pn = p.pow(n);
        let nv = self.nvars();
        let t_pow = |e: i64| Poly::t_monomial(self.field.one(), e, nv);
        let stride = (1..=pn).find(|&e| self.is_constant(&t_pow(e))).unwrap_or(0);
        if stride != pn {
            return Err(Error::HeartFails(format!("t^e is constant for e = {stride}, but p^n = {pn}")));
        }
        if declared_stride != stride {
            return Err(Error::HeartFails(format!(
                "declared constants have stride {declared_stride}, computed stride is {stride}"
            )));
        }
        let witness = probes.iter().find(|a| is_unit(&self.apply(a).coeffs[mu]));
        match witness {
            Some(a) => Ok(HeartReport { mu, n, degree: pn, witness: a.clone() }),
            None => Err(Error::HeartFails(format!("no probe a has d_{mu}(a) a unit"))),
        }
    }

    /// `d(z)/z` if every component is divisible by `z` in the carrier ring.
    pub fn log_derivative(&self, z: &Poly) -> Result<LogDerivative> {
        if z.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let dz = self.apply(z);
        let mut coeffs = Vec::with_capacity(dz.coeffs.len());
        for c in &dz.coeffs {
            match c.exact_div(z, &self.field)? {
                Some(q) if (0..q.nvars()).all(|i| q.min_var_degree(i).unwrap_or(0) >= 0) => coeffs.push(q),
                _ => return Ok(LogDerivative::NotAUnit),
            }
        }
        Ok(LogDerivative::Unit(TruncSeries::new(coeffs)))
    }

    /// `d_L = id (x) d` on `l~ (x) A`, in the coordinates `(x, y)`, which it
    /// fixes. Fails with `RootUnavailable` if the form does not split over
    /// `l~`.
    pub fn base_change(&self, form: &RussellForm) -> Result<HigherDerivation> {
        if self.nvars() != 0 {
            return Err(Error::InvalidArgument("base change starts from a derivation of l~".into()));
        }
        if self.field != *form.ell() {
            return Err(Error::OwnerMismatch("derivation and form have different coefficient fields".into()));
        }
        form.trivialize()?;
        let m_prime = self.m_prime();
        let m = self.rank();
        Ok(HigherDerivation {
            field: self.field.clone(),
            kind: DerivationKind::BaseChange { m_prime },
            t: widen(&self.t, 2),
            t_inv: widen(&self.t_inv, 2),
            vars: (0..2).map(|i| TruncSeries::constant(Poly::var(&self.field, i, 2), m)).collect(),
        })
    }

    fn m_prime(&self) -> u32 {
        match self.kind {
            DerivationKind::Standard { m_prime }
            | DerivationKind::BaseChange { m_prime }
            | DerivationKind::TCoordinate { m_prime } => m_prime,
            DerivationKind::Custom => 0,
        }
    }

    /// `d_L` transported to `l~[T]` through the trivialization `T <-> triv`.
    pub fn t_coordinate(&self, form: &RussellForm, tr: &Trivialization) -> Result<HigherDerivation> {
        let d_l = self.base_change(form)?;
        let image = d_l.apply(&tr.triv);
        let t_image = TruncSeries::new(image.coeffs.iter().map(|c| tr.dictionary.rewrite(form, c)).collect());
        Ok(HigherDerivation {
            field: self.field.clone(),
            kind: DerivationKind::TCoordinate { m_prime: self.m_prime() },
            t: widen(&self.t, 1),
            t_inv: widen(&self.t_inv, 1),
            vars: vec![t_image],
        })
    }

    /// Rows `(i, j, C)` with `d_j(t^i) = C t^{i-j}` for `0 <= i <= imax`.
    pub fn binomial_table(&self, imax: i64) -> Vec<(i64, usize, FieldCoeff)> {
        let mut rows = Vec::new();
        for i in 0..=imax {
            let img = self.apply(&Poly::t_monomial(self.field.one(), i, self.nvars()));
            for j in 0..=self.rank() {
                let mono = Monomial { t: i - j as i64, vars: vec![0; self.nvars()] };
                let c = img.coeffs[j].coeff(&mono).map(|c| self.field.format(c)).unwrap_or_else(|| "0".into());
                let other_terms = img.coeffs[j].terms().any(|(m, _)| *m != mono);
                rows.push((i, j, FieldCoeff { value: c, single_term: !other_terms }));
            }
        }
        rows
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldCoeff {
    pub value: String,
    pub single_term: bool,
}

fn widen(s: &TruncSeries, nvars: usize) -> TruncSeries {
    TruncSeries::new(s.coeffs.iter().map(|c| c.widen(nvars)).collect())
}

/// Units of `k_1[t^{±1}][X]` are the terms `c t^j`.
pub fn is_unit(p: &Poly) -> bool {
    p.as_term().is_some_and(|(m, _)| m.vars.iter().all(|&e| e == 0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogDerivative {
    Unit(TruncSeries),
    NotAUnit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeartReport {
    pub mu: usize,
    pub n: u32,
    /// `[K:K'] = p^n`.
    pub degree: i64,
    pub witness: Poly,
}

/// `C(i, j) mod p` by Lucas' theorem.
pub fn binomial_mod_p(i: u64, j: u64, p: u64) -> u64 {
    let (mut i, mut j, mut acc) = (i, j, 1u64);
    while j > 0 || i > 0 {
        let (a, b) = (i % p, j % p);
        if b > a {
            return 0;
        }
        let mut c = 1u64;
        for k in 0..b {
            c = c * (a - k) / (k + 1);
        }
        acc = acc * (c % p) % p;
        i /= p;
        j /= p;
    }
    acc
}
