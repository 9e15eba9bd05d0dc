//! Graded Russell-type forms `A = k[r^{-p^n}T_1, s^{-1}T_2]/(T_2^{p^n} - f(T_1))`
//! and their explicit trivialization over `l~ = k~^{p^{-n}}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElem, FieldKind};
use crate::graded::{p_log, GradedField, GradedPolyRing};
use crate::poly::{Monomial, Poly};
use crate::skew::SkewPoly;

/// A homogeneous element `c t^k` of a graded field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mono {
    pub c: FieldElem,
    pub k: i64,
}

impl Mono {
    pub fn new(c: FieldElem, k: i64) -> Self {
        Mono { c, k }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn to_poly(&self, nvars: usize) -> Poly {
        Poly::t_monomial(self.c.clone(), self.k, nvars)
    }
}

/// Input data of a form: `k~ = k_1[t^{±stride}]`, radii `r, s`, and the
/// coefficients `a_0, ..., a_m` of `f(T) = sum a_i T^{p^i}`.
#[derive(Clone, Debug)]
pub struct RussellSpec {
    pub field: Field,
    pub t_degree: Degree,
    pub stride: i64,
    pub n: u32,
    pub r: Degree,
    pub s: Degree,
    pub f_coeffs: Vec<Mono>,
    /// For `k_1 = GF(q)(u)`: use `l_1 = GF(q)(v)` with `u = v^{p^e}`.
    pub coeff_extension: u32,
}

/// JSON descriptor of a form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDescriptor {
    pub p: u32,
    pub n: u32,
    pub field: String,
    pub stride: i64,
    pub r: String,
    pub s: String,
    pub f_coeffs: Vec<String>,
    #[serde(default = "default_t_degree")]
    pub t_degree: String,
    #[serde(default)]
    pub coeff_extension: u32,
}

fn default_t_degree() -> String {
    "q".into()
}

impl RussellSpec {
    fn field_ring(field: &Field, t_degree: &Degree, stride: i64) -> Result<Arc<GradedPolyRing>> {
        Ok(GradedField::new(field.clone(), t_degree.clone(), stride)?.as_ring())
    }

    /// Parses `f` as a polynomial in `T1` (also accepted: `T`, `x`).
    #[allow(clippy::too_many_arguments)]
    pub fn parse(
        field: &Field,
        t_degree: &Degree,
        stride: i64,
        n: u32,
        r: &Degree,
        s: &Degree,
        f: &str,
    ) -> Result<Self> {
        let base = GradedField::new(field.clone(), t_degree.clone(), stride)?;
        let var = ["T1", "T", "x"].into_iter().find(|v| f.contains(v)).unwrap_or("T1");
        let ring = GradedPolyRing::new(base, vec![(var.to_string(), Degree::identity())])?;
        let poly = ring.parse_elem(f)?;
        let p = field.characteristic() as i64;
        let mut coeffs: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in poly.poly().terms() {
            let i = p_log(m.vars[0], p)
                .ok_or_else(|| Error::NotHomogeneous(format!("{f} is not a {p}-polynomial")))?;
            let slot = coeffs.entry(i).or_insert_with(|| Poly::zero(0));
            *slot = slot.add(&Poly::t_monomial(c.clone(), m.t, 0), field);
        }
        let top = coeffs.keys().max().copied().unwrap_or(0);
        let mut f_coeffs = Vec::new();
        for i in 0..=top {
            let a = coeffs.remove(&i).unwrap_or_else(|| Poly::zero(0));
            f_coeffs.push(poly_to_mono(&a, field)?);
        }
        Ok(RussellSpec {
            field: field.clone(),
            t_degree: t_degree.clone(),
            stride,
            n,
            r: r.clone(),
            s: s.clone(),
            f_coeffs,
            coeff_extension: 0,
        })
    }

    pub fn from_descriptor(d: &FormDescriptor) -> Result<Self> {
        let field = Field::parse(&d.field)?;
        if field.characteristic() != d.p {
            return Err(Error::InvalidArgument(format!("p = {} does not match {}", d.p, d.field)));
        }
        let t_degree: Degree = d.t_degree.parse()?;
        let ring = Self::field_ring(&field, &t_degree, d.stride)?;
        let f_coeffs = d
            .f_coeffs
            .iter()
            .map(|s| poly_to_mono(ring.parse_elem(s)?.poly(), &field))
            .collect::<Result<Vec<_>>>()?;
        Ok(RussellSpec {
            field,
            t_degree,
            stride: d.stride,
            n: d.n,
            r: d.r.parse()?,
            s: d.s.parse()?,
            f_coeffs,
            coeff_extension: d.coeff_extension,
        })
    }

    /// The degree-1 form `A(tau)`: `r = s = 1`, `f = tau(T)`.
    pub fn from_skew(tau: &SkewPoly, n: u32, field: &Field) -> Self {
        RussellSpec {
            field: field.clone(),
            t_degree: Degree::generator("q"),
            stride: 1,
            n,
            r: Degree::identity(),
            s: Degree::identity(),
            f_coeffs: tau.coeffs().iter().map(|c| Mono::new(c.clone(), 0)).collect(),
            coeff_extension: 0,
        }
    }

    pub fn with_coeff_extension(mut self, e: u32) -> Self {
        self.coeff_extension = e;
        self
    }

    pub fn pn(&self) -> i64 {
        (self.field.characteristic() as i64).pow(self.n)
    }

    /// Required degree of `a_i`: `s^{p^n} (r^{p^n})^{-p^i}`.
    pub fn coeff_degree(&self, i: usize) -> Degree {
        let pn = self.pn();
        let p = self.field.characteristic() as i64;
        self.s.powi(pn).mul(&self.r.powi(pn * p.pow(i as u32)).inv())
    }

    pub fn descriptor(&self) -> FormDescriptor {
        let ring = Self::field_ring(&self.field, &self.t_degree, self.stride).expect("valid stride");
        FormDescriptor {
            p: self.field.characteristic(),
            n: self.n,
            field: self.field.spec(),
            stride: self.stride,
            r: self.r.to_string(),
            s: self.s.to_string(),
            f_coeffs: self.f_coeffs.iter().map(|a| ring.format_poly(&a.to_poly(0))).collect(),
            t_degree: self.t_degree.to_string(),
            coeff_extension: self.coeff_extension,
        }
    }
}

fn poly_to_mono(a: &Poly, field: &Field) -> Result<Mono> {
    if a.is_zero() {
        return Ok(Mono::new(field.zero(), 0));
    }
    match a.as_term() {
        Some((m, c)) if m.vars.iter().all(|&e| e == 0) => Ok(Mono::new(c.clone(), m.t)),
        _ => Err(Error::NotHomogeneous(format!("coefficient {} is not homogeneous", a.format(field, "t", &[])))),
    }
}

/// A constructed form. Elements of `l~ (x) A` are `Poly`s in `(x, y)` with
/// `y`-degree below `p^n`.
#[derive(Clone, Debug)]
pub struct RussellForm {
    spec: RussellSpec,
    ell: Field,
    a: Vec<Mono>,
    ring: Arc<GradedPolyRing>,
}

impl RussellForm {
    pub fn new(spec: RussellSpec) -> Result<Self> {
        if spec.n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        let field = &spec.field;
        let a0 = spec.f_coeffs.first().ok_or(Error::ZeroLinearCoefficient)?;
        if a0.is_zero() {
            return Err(Error::ZeroLinearCoefficient);
        }
        let base = GradedField::new(field.clone(), spec.t_degree.clone(), spec.stride)?;
        for (i, a) in spec.f_coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !base.contains_t_power(a.k) {
                return Err(Error::StrideViolation(format!("t^{} in coefficient a_{i}", a.k)));
            }
            let want = spec.coeff_degree(i);
            let got = base.degree_of_t_power(a.k);
            if got != want {
                return Err(Error::NotHomogeneous(format!("a_{i} has degree {got}, expected {want}")));
            }
        }
        // s r^{-1} must be the degree of a unit of l~ = k_1[t^{±1}]
        let ratio = spec.s.div(&spec.r);
        match ratio.order_mod_subgroup(std::slice::from_ref(&spec.t_degree)) {
            crate::degree::Order::Finite(1) => {}
            _ => return Err(Error::RadiusNotInOrbit),
        }
        let ell = if spec.coeff_extension == 0 {
            field.clone()
        } else {
            if field.kind() != FieldKind::RationalFunction {
                return Err(Error::UnsupportedField("coefficient extensions need a rational function field".into()));
            }
            let var = if field.var_name() == "v" { "z" } else { "v" };
            Field::rational_function_named(field.characteristic(), field.fq().degree(), var)?
        };
        let a = spec
            .f_coeffs
            .iter()
            .map(|m| Mono::new(field.inflate(&m.c, spec.coeff_extension), m.k))
            .collect();
        let pn = spec.pn();
        let ell_base = GradedField::new(ell.clone(), spec.t_degree.clone(), 1)?;
        let ring = GradedPolyRing::new(
            ell_base,
            vec![("x".into(), spec.r.powi(pn)), ("y".into(), spec.s.clone())],
        )?;
        Ok(RussellForm { spec, ell, a, ring })
    }

    pub fn spec(&self) -> &RussellSpec {
        &self.spec
    }

    /// The coefficient field `l_1` of `l~`.
    pub fn ell(&self) -> &Field {
        &self.ell
    }

    /// `l~[x, y]` with its grading, used for degrees and printing.
    pub fn ring(&self) -> &Arc<GradedPolyRing> {
        &self.ring
    }

    pub fn p(&self) -> i64 {
        self.ell.characteristic() as i64
    }

    pub fn n(&self) -> u32 {
        self.spec.n
    }

    pub fn pn(&self) -> i64 {
        self.spec.pn()
    }

    /// Coefficients `a_i` embedded in `l~`.
    pub fn coeffs(&self) -> &[Mono] {
        &self.a
    }

    pub fn x(&self) -> Poly {
        Poly::var(&self.ell, 0, 2)
    }

    pub fn y(&self) -> Poly {
        Poly::var(&self.ell, 1, 2)
    }

    pub fn scalar(&self, m: &Mono) -> Poly {
        m.to_poly(2)
    }

    /// `f(v) = sum a_i v^{p^i}`, with powers by repeated multiplication.
    pub fn f_of(&self, v: &Poly) -> Poly {
        let mut out = Poly::zero(v.nvars());
        let mut power = v.clone();
        for (i, a) in self.a.iter().enumerate() {
            if i > 0 {
                power = power.pow(self.p() as u64, &self.ell);
            }
            if !a.is_zero() {
                out = out.add(&power.mul(&a.to_poly(v.nvars()), &self.ell), &self.ell);
            }
        }
        out
    }

    /// Applies `y^{p^n} -> f(x)`.
    pub fn reduce(&self, v: &Poly) -> Poly {
        reduce_relation(v, &self.ell, self.pn(), &[(0, 1)], &|x: &Poly| self.f_of(x))
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&a.mul(b, &self.ell))
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b, &self.ell)
    }

    pub fn pow(&self, a: &Poly, k: u64) -> Poly {
        let mut acc = Poly::one(&self.ell, 2);
        let mut sq = a.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// `a^{p^j}` via the termwise Frobenius, then reduced.
    pub fn frobenius(&self, a: &Poly, j: u32) -> Poly {
        self.reduce(&a.frobenius(j, &self.ell))
    }

    pub fn format(&self, v: &Poly) -> String {
        self.ring.format_poly(v)
    }

    pub fn degree(&self, v: &Poly) -> Option<Degree> {
        self.ring.elem(v.clone()).ok()?.degree()
    }

    /// The `p^j`-th root of `c t^k` in `l~`.
    pub fn root_in_ell(&self, m: &Mono, j: u32) -> Result<Mono> {
        let pj = self.p().pow(j);
        let unavailable = || Error::RootUnavailable {
            element: self.ring.format_poly(&m.to_poly(2)),
            order: pj as u64,
        };
        if m.is_zero() {
            return Ok(m.clone());
        }
        if m.k % pj != 0 {
            return Err(unavailable());
        }
        let c = self.ell.pn_th_root(&m.c, j).ok_or_else(unavailable)?;
        Ok(Mono::new(c, m.k / pj))
    }

    /// `b_i = a_i a_0^{-p^i}`.
    pub fn normalized_coeffs(&self) -> Vec<Mono> {
        let a0 = &self.a[0];
        let a0_inv = self.ell.inv(&a0.c).expect("a_0 is nonzero");
        self.a
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let pi = self.p().pow(i as u32);
                Mono::new(self.ell.mul(&a.c, &self.ell.pow(&a0_inv, pi).expect("unit")), a.k - pi * a0.k)
            })
            .collect()
    }

    /// Runs the recursion `t_0 = a_0 x`,
    /// `t_j = y^{p^{n-j}} - sum_{i>=1} b_i^{1/p^j} t_{j-1}^{p^{i-1}}`,
    /// and verifies the resulting identities.
    pub fn trivialize(&self) -> Result<Trivialization> {
        let ell = &self.ell;
        let n = self.n();
        let b = self.normalized_coeffs();
        let a0 = self.a[0].clone();
        let mut steps = vec![self.scalar(&a0).mul(&self.x(), ell)];
        for j in 1..=n {
            let prev = steps.last().expect("nonempty").clone();
            let mut t = self.frobenius(&self.y(), n - j);
            for (i, bi) in b.iter().enumerate().skip(1) {
                if bi.is_zero() {
                    continue;
                }
                let root = self.root_in_ell(bi, j)?;
                let term = self.scalar(&root).mul(&self.frobenius(&prev, i as u32 - 1), ell);
                t = t.sub(&term, ell);
            }
            steps.push(self.reduce(&t));
        }
        let triv = steps.last().expect("nonempty").clone();
        let mut beta = vec![Mono::new(ell.one(), 0)];
        for bi in b.iter().skip(1) {
            beta.push(self.root_in_ell(bi, n)?);
        }
        let mut checks = BTreeMap::new();
        let lhs = self.pow(&triv, self.pn() as u64);
        checks.insert("triv_pow_pn_eq_a0_x".to_string(), lhs == self.scalar(&a0).mul(&self.x(), ell));
        let mut h = Poly::zero(2);
        for (i, bt) in beta.iter().enumerate() {
            if !bt.is_zero() {
                let pw = self.pow(&triv, self.p().pow(i as u32) as u64);
                h = h.add(&self.scalar(bt).mul(&pw, ell), ell);
            }
        }
        checks.insert("y_eq_h_triv".to_string(), h == self.y());
        checks.insert("triv_degree_eq_s".to_string(), self.degree(&triv) == Some(self.spec.s.clone()));
        let dict = Dictionary::new(self, &a0, &beta);
        checks.insert("relation_vanishes_on_dictionary".to_string(), dict.relation_residue(self).is_zero());
        Ok(Trivialization { triv, steps, a0, beta, dictionary: dict, checks })
    }

    /// The coproduct, counit and antipode compatibilities of the relation.
    pub fn hopf_check(&self) -> HopfReport {
        let mut f = Poly::zero(1);
        for (i, a) in self.a.iter().enumerate() {
            let m = Monomial { t: a.k, vars: vec![self.p().pow(i as u32)] };
            f = f.add(&Poly::term(a.c.clone(), m), &self.ell);
        }
        hopf_check_relation(&self.ell, &f, self.pn())
    }

    /// Substitutes `T_1 -> c T_1` (turning `f` into `f(cT)`).
    pub fn rescaled_spec(&self, c: &FieldElem) -> RussellSpec {
        let mut spec = self.spec.clone();
        let p = self.p();
        let field = &spec.field;
        spec.f_coeffs = spec
            .f_coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| Mono::new(field.mul(&a.c, &field.pow(c, p.pow(i as u32)).expect("exponent")), a.k))
            .collect();
        spec
    }
}

/// Reduces every listed `(x-index, y-index)` pair by `y^{pn} -> f(x)`.
fn reduce_relation(v: &Poly, field: &Field, pn: i64, pairs: &[(usize, usize)], f: &dyn Fn(&Poly) -> Poly) -> Poly {
    let mut cur = v.clone();
    for &(xi, yi) in pairs {
        let nv = cur.nvars();
        if cur.var_degree(yi).unwrap_or(0) < pn {
            continue;
        }
        let xv = Poly::var(field, xi, nv);
        let fx = f(&xv);
        let mut powers: BTreeMap<i64, Poly> = BTreeMap::new();
        let mut out = Poly::zero(nv);
        for (m, c) in cur.terms() {
            let e = m.vars[yi];
            let (q, r) = (e / pn, e % pn);
            let mut mm = m.clone();
            mm.vars[yi] = r;
            let mut term = Poly::term(c.clone(), mm);
            if q > 0 {
                let fp = powers.entry(q).or_insert_with(|| fx.pow(q as u64, field));
                term = term.mul(fp, field);
            }
            out = out.add(&term, field);
        }
        cur = out;
    }
    cur
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub coproduct: bool,
    pub counit: bool,
    pub antipode: bool,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.coproduct && self.counit && self.antipode
    }
}

/// Checks that `y -> 1(x)y + y(x)1`, `y -> 0`, `y -> -y` (and likewise for
/// `x`) respect `y^{pn} = f(x)` for an arbitrary one-variable `f`.
pub fn hopf_check_relation(field: &Field, f: &Poly, pn: i64) -> HopfReport {
    let eval = |v: &Poly| {
        let nv = v.nvars();
        let t = Poly::t_monomial(field.one(), 1, nv);
        let tinv = Poly::t_monomial(field.one(), -1, nv);
        f.eval_hom(field, &t, &tinv, std::slice::from_ref(v))
    };
    // A (x) A in variables x1, y1, x2, y2
    let v = |i| Poly::var(field, i, 4);
    let lhs = v(1).add(&v(3), field).pow(pn as u64, field);
    let rhs = eval(&v(0).add(&v(2), field));
    let diff = lhs.sub(&rhs, field);
    let reduced = reduce_relation(&diff, field, pn, &[(0, 1), (2, 3)], &eval);
    let coproduct = reduced.is_zero();
    let counit = eval(&Poly::zero(1)).is_zero();
    let x = Poly::var(field, 0, 2);
    let y = Poly::var(field, 1, 2);
    let anti = y.neg(field).pow(pn as u64, field).sub(&eval(&x.neg(field)), field);
    let antipode = reduce_relation(&anti, field, pn, &[(0, 1)], &eval).is_zero();
    HopfReport { coproduct, counit, antipode }
}

/// `x = a_0^{-1} T^{p^n}`, `y = sum beta_i T^{p^i}` in `l~[T]`.
#[derive(Clone, Debug)]
pub struct Dictionary {
    pub x: Poly,
    pub y: Poly,
}

impl Dictionary {
    fn new(form: &RussellForm, a0: &Mono, beta: &[Mono]) -> Self {
        let ell = form.ell();
        let inv = Mono::new(ell.inv(&a0.c).expect("unit"), -a0.k);
        let x = Poly::term(inv.c, Monomial { t: inv.k, vars: vec![form.pn()] });
        let mut y = Poly::zero(1);
        for (i, b) in beta.iter().enumerate() {
            if !b.is_zero() {
                y = y.add(&Poly::term(b.c.clone(), Monomial { t: b.k, vars: vec![form.p().pow(i as u32)] }), ell);
            }
        }
        Dictionary { x, y }
    }

    /// `y^{p^n} - f(x)` evaluated on the dictionary.
    pub fn relation_residue(&self, form: &RussellForm) -> Poly {
        let ell = form.ell();
        self.y.pow(form.pn() as u64, ell).sub(&form.f_of(&self.x), ell)
    }

    /// Rewrites an element of `l~ (x) A` in the coordinate `T`.
    pub fn rewrite(&self, form: &RussellForm, v: &Poly) -> Poly {
        let ell = form.ell();
        let t = Poly::t_monomial(ell.one(), 1, 1);
        let tinv = Poly::t_monomial(ell.one(), -1, 1);
        v.eval_hom(ell, &t, &tinv, &[self.x.clone(), self.y.clone()])
    }
}

#[derive(Clone, Debug)]
pub struct Trivialization {
    /// The element `t_n`, homogeneous of degree `s`.
    pub triv: Poly,
    /// `t_0, ..., t_n`.
    pub steps: Vec<Poly>,
    pub a0: Mono,
    /// `beta_i = b_i^{1/p^n}` with `y = sum beta_i triv^{p^i}`.
    pub beta: Vec<Mono>,
    pub dictionary: Dictionary,
    pub checks: BTreeMap<String, bool>,
}

impl Trivialization {
    pub fn verified(&self) -> bool {
        self.checks.values().all(|&b| b)
    }

    pub fn report(&self, form: &RussellForm) -> TrivializationReport {
        let ring1 = GradedPolyRing::new(
            GradedField::new(form.ell().clone(), form.spec().t_degree.clone(), 1).expect("stride 1"),
            vec![("T".into(), form.spec().s.clone())],
        )
        .expect("distinct names");
        TrivializationReport {
            triv: form.format(&self.triv),
            steps: self.steps.iter().map(|s| form.format(s)).collect(),
            identities_verified: self.checks.clone(),
            dictionary: BTreeMap::from([
                ("x".to_string(), ring1.format_poly(&self.dictionary.x)),
                ("y".to_string(), ring1.format_poly(&self.dictionary.y)),
                ("T".to_string(), form.format(&self.triv)),
            ]),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrivializationReport {
    pub triv: String,
    pub steps: Vec<String>,
    pub identities_verified: BTreeMap<String, bool>,
    pub dictionary: BTreeMap<String, String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Degree {
        Degree::generator("q")
    }

    fn f2_form(f: &str) -> Result<RussellForm> {
        let spec = RussellSpec::parse(&Field::gf(2).unwrap(), &q(), 2, 1, &q(), &q(), f)?;
        RussellForm::new(spec)
    }

    #[test]
    fn worked_family_trivializes() {
        let form = f2_form("T1 + t^-2*T1^2").unwrap();
        let tr = form.trivialize().unwrap();
        assert_eq!(form.format(&tr.triv), form.format(&form.ring().parse_elem("y + t^-1*x").unwrap().poly().clone()));
        assert!(tr.verified(), "{:?}", tr.checks);
        // triv^2 = y^2 + t^-2 x^2 = x by hand
        let sq = form.mul(&tr.triv, &tr.triv);
        assert_eq!(sq, form.x());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(f2_form("t^-2*T1^2").unwrap_err(), Error::ZeroLinearCoefficient);
        assert!(matches!(f2_form("T1 + t^-4*T1^2"), Err(Error::NotHomogeneous(_))));
        assert!(matches!(f2_form("T1 + T1^3"), Err(Error::NotHomogeneous(_))));
        let half: Degree = "q^1/2".parse().unwrap();
        let spec = RussellSpec::parse(&Field::gf(2).unwrap(), &q(), 1, 1, &Degree::identity(), &half, "t*T1").unwrap();
        assert_eq!(RussellForm::new(spec).unwrap_err(), Error::RadiusNotInOrbit);
    }

    #[test]
    fn degree_one_form_over_imperfect_field() {
        let k = Field::parse("GF(2)(u)").unwrap();
        let one = Degree::identity();
        let spec = RussellSpec::parse(&k, &q(), 1, 1, &one, &one, "u*T1 + T1^2").unwrap();
        let form = RussellForm::new(spec).unwrap();
        assert!(form.hopf_check().passed());
        // b_1 = u^-2 is a square
        assert!(form.trivialize().unwrap().verified());
        let spec = RussellSpec::parse(&k, &q(), 1, 1, &one, &one, "T1 + u*T1^2").unwrap();
        let form = RussellForm::new(spec.clone()).unwrap();
        assert!(matches!(form.trivialize(), Err(Error::RootUnavailable { .. })));
        let form = RussellForm::new(spec.with_coeff_extension(1)).unwrap();
        let tr = form.trivialize().unwrap();
        assert!(tr.verified());
        assert_eq!(form.format(&tr.triv), "v*x + y");
    }

    #[test]
    fn linear_form() {
        let form = f2_form("T1").unwrap();
        let tr = form.trivialize().unwrap();
        assert_eq!(tr.triv, form.y());
        assert!(tr.verified());
        assert!(form.hopf_check().passed());
    }

    #[test]
    fn hopf_check_detects_non_additive_relation() {
        let k = Field::gf(2).unwrap();
        let x = Poly::var(&k, 0, 1);
        let f = x.add(&x.pow(3, &k), &k);
        let rep = hopf_check_relation(&k, &f, 2);
        assert!(!rep.coproduct);
        let good = x.add(&x.pow(2, &k), &k);
        assert!(hopf_check_relation(&k, &good, 2).passed());
        let f3 = Field::gf(3).unwrap();
        let x3 = Poly::var(&f3, 0, 1);
        assert!(hopf_check_relation(&f3, &x3.pow(3, &f3).add(&x3.scale(&f3.from_int(2), &f3), &f3), 3).passed());
        assert!(!hopf_check_relation(&f3, &x3.pow(2, &f3), 3).passed());
    }

    #[test]
    fn higher_n_over_finite_field() {
        // p = 2, n = 2, k~ = F_2[t^{±4}], r = s = q, f = T1 + t^-4 T1^2
        let spec = RussellSpec::parse(&Field::gf(2).unwrap(), &q(), 4, 2, &q(), &q(), "T1 + t^-4*T1^2").unwrap();
        let form = RussellForm::new(spec).unwrap();
        let tr = form.trivialize().unwrap();
        assert!(tr.verified(), "{:?}", tr.checks);
        assert_eq!(tr.steps.len(), 3);
    }
}
