//! Tame cyclic descent on graded reductions: `l~ = GF(q)[s^{±1}]` over
//! `k~ = GF(q)[s^{±e}]` with `G = <g>` acting by `g(s) = zeta s`, together
//! with the finite cyclic-group cohomology behind the classification.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::field::{fq, FiniteField, Fq, Field};
use crate::graded::{GradedElem, GradedField, GradedPolyRing};
use crate::poly::{Monomial, Poly};

/// A homogeneous unit `c s^k` of `l~`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Unit {
    pub c: Fq,
    pub k: i64,
}

#[derive(Clone, Debug)]
pub struct TameSetup {
    field: Field,
    e: u64,
    zeta: Fq,
    r: Degree,
    disc: Arc<GradedPolyRing>,
}

impl TameSetup {
    /// `deg s` is the generator `q_s`.
    pub fn new(q: u64, e: u64, r: Degree) -> Result<Self> {
        Self::with_s_degree(q, e, r, Degree::generator("q_s"))
    }

    pub fn with_s_degree(q: u64, e: u64, r: Degree, s_degree: Degree) -> Result<Self> {
        let (p, _) = fq::prime_power(q).ok_or_else(|| Error::InvalidSetup(format!("{q} is not a prime power")))?;
        if e == 0 || e.gcd(&(p as u64)) != 1 {
            return Err(Error::InvalidSetup(format!("e = {e} must be positive and prime to p = {p}")));
        }
        if !(q - 1).is_multiple_of(e) {
            return Err(Error::InvalidSetup(format!("e = {e} does not divide q - 1 = {}", q - 1)));
        }
        if s_degree.is_identity() {
            return Err(Error::InvalidSetup("deg s must be nontrivial".into()));
        }
        let field = Field::gf(q)?;
        let zeta = field.fq().exp(((q - 1) / e) as i64);
        let base = GradedField::with_name(field.clone(), "s", s_degree, 1)?;
        let disc = GradedPolyRing::new(base, vec![("T".into(), r.clone())])?;
        Ok(TameSetup { field, e, zeta, r, disc })
    }

    pub fn fq(&self) -> &FiniteField {
        self.field.fq()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn zeta(&self) -> Fq {
        self.zeta
    }

    pub fn r(&self) -> &Degree {
        &self.r
    }

    pub fn s_degree(&self) -> &Degree {
        &self.disc.base.t_degree
    }

    /// `l~[r^{-1} T]`.
    pub fn disc(&self) -> &Arc<GradedPolyRing> {
        &self.disc
    }

    fn key(&self) -> (u32, u32, u64, Fq) {
        (self.fq().characteristic(), self.fq().degree(), self.e, self.zeta)
    }

    /// `g^a(c s^k) = zeta^{ak} c s^k`.
    pub fn act(&self, a: u64, u: Unit) -> Unit {
        let f = self.fq();
        let z = f.pow(self.zeta, (a as i64) * u.k).expect("zeta is a unit");
        Unit { c: f.mul(z, u.c), k: u.k }
    }

    pub fn unit_mul(&self, a: Unit, b: Unit) -> Unit {
        Unit { c: self.fq().mul(a.c, b.c), k: a.k + b.k }
    }

    pub fn unit_inv(&self, a: Unit) -> Unit {
        Unit { c: self.fq().inv(a.c).expect("unit"), k: -a.k }
    }

    fn unit_pow(&self, u: Unit, n: i64) -> Unit {
        Unit { c: self.fq().pow(u.c, n).expect("unit"), k: u.k * n }
    }

    /// The twisted action `g^a(sum c s^k T^n) = sum g^a(c s^k) u_{g^a}^n T^n`.
    pub fn act_on_disc(&self, a: u64, cocycle: &Cocycle, x: &Poly) -> Poly {
        let u = cocycle.values[(a % self.e) as usize];
        let mut out = Poly::zero(1);
        for (m, c) in x.terms() {
            let coeff = self.act(a, Unit { c: self.fq_of(c), k: m.t });
            let tw = self.unit_mul(coeff, self.unit_pow(u, m.vars[0]));
            let mono = Monomial { t: tw.k, vars: m.vars.clone() };
            out = out.add(&Poly::term(self.field.from_fq(tw.c), mono), &self.field);
        }
        out
    }

    fn fq_of(&self, c: &crate::field::FieldElem) -> Fq {
        c.numerator().coeffs().first().copied().unwrap_or(Fq::ZERO)
    }

    pub fn format_unit(&self, u: Unit) -> String {
        Poly::t_monomial(self.field.from_fq(u.c), u.k, 0).format(&self.field, "s", &[])
    }

    /// `theta_{g^a} = g^a(s^j)/s^j = zeta^{aj}`.
    pub fn cocycle_from_radius(&self, j: i64) -> Cocycle {
        let s_j = Unit { c: Fq::ONE, k: j };
        let values = (0..self.e).map(|a| self.unit_mul(self.act(a, s_j), self.unit_inv(s_j))).collect();
        Cocycle { key: self.key(), values }
    }

    /// Builds a cocycle from arbitrary values at `g^0, ..., g^{e-1}`.
    pub fn cocycle(&self, values: Vec<Unit>) -> Result<Cocycle> {
        if values.len() as u64 != self.e {
            return Err(Error::InvalidArgument(format!("expected {} values", self.e)));
        }
        Ok(Cocycle { key: self.key(), values })
    }

    /// `u_{gh} = u_g g(u_h)` at every pair.
    pub fn cocycle_law_holds(&self, c: &Cocycle) -> bool {
        let e = self.e;
        (0..e).all(|a| {
            (0..e).all(|b| {
                let lhs = c.values[((a + b) % e) as usize];
                lhs == self.unit_mul(c.values[a as usize], self.act(a, c.values[b as usize]))
            })
        })
    }

    /// Looks for `b` with `b u_g = u'_g g(b)` at the generator. `b` ranges
    /// over the degree-1 units `GF(q)^x`, the scalings of `T` that are graded
    /// automorphisms of the disc.
    pub fn cohomologous_test(&self, c1: &Cocycle, c2: &Cocycle) -> Result<Option<Unit>> {
        if c1.key != self.key() || c2.key != self.key() {
            return Err(Error::SetupMismatch);
        }
        if self.e == 1 {
            return Ok(Some(Unit { c: Fq::ONE, k: 0 }));
        }
        for c in self.fq().nonzero_elements() {
            let b = Unit { c, k: 0 };
            let lhs = self.unit_mul(b, c1.values[1]);
            let rhs = self.unit_mul(c2.values[1], self.act(1, b));
            if lhs == rhs {
                return Ok(Some(b));
            }
        }
        Ok(None)
    }

    /// Recovers `j mod e` from a cocycle of scalar radius type.
    pub fn radius_index(&self, c: &Cocycle) -> Result<i64> {
        if c.key != self.key() {
            return Err(Error::SetupMismatch);
        }
        for j in 0..self.e as i64 {
            if self.cocycle_from_radius(j).values == c.values {
                return Ok(j);
            }
        }
        Err(Error::NotScalarCocycle)
    }

    /// The invariant subring of `l~[r^{-1}T]` under the twisted action.
    pub fn descend(&self, c: &Cocycle) -> Result<Descent> {
        let j = self.radius_index(c)?;
        let e = self.e as i64;
        let field = &self.field;
        let one = field.one();
        let generator = Poly::term(one.clone(), Monomial { t: -j, vars: vec![1] });
        let mut invariant = Vec::new();
        let mut generated = true;
        let bound = 2 * e + 8;
        for n in 0..=8i64 {
            for k in -bound..=bound {
                let mono = Poly::term(one.clone(), Monomial { t: k, vars: vec![n] });
                let fixed = self.act_on_disc(1, c, &mono) == mono;
                if fixed {
                    invariant.push((k, n));
                    // s^k T^n = s^{k + jn} (s^{-j} T)^n with s^{k+jn} in k~
                    let coeff = k + j * n;
                    let rebuilt = Poly::t_monomial(one.clone(), coeff, 1).mul(&generator.pow(n as u64, field), field);
                    generated &= coeff % e == 0 && rebuilt == mono;
                }
                let predicted = (k + j * n).rem_euclid(e) == 0;
                generated &= fixed == predicted;
            }
        }
        let gen_elem = self.disc.elem(generator.clone())?;
        let radius = gen_elem.degree().expect("monomial");
        let t_back = Poly::t_monomial(one.clone(), j, 1).mul(&generator, field);
        Ok(Descent {
            j,
            generator: gen_elem,
            radius,
            invariant_monomials: invariant.len(),
            generated_by_generator: generated,
            base_change_recovers_disc: t_back == Poly::var(field, 0, 1),
        })
    }

    /// The `e` radius classes `deg(s)^{-j} r` with their descended rings.
    pub fn classify(&self) -> Result<Classification> {
        let mut classes = Vec::new();
        for j in 0..self.e as i64 {
            let d = self.descend(&self.cocycle_from_radius(j))?;
            classes.push(RadiusClass {
                j,
                radius: d.radius.to_string(),
                generator: d.generator.to_string(),
                verified: d.generated_by_generator && d.base_change_recovers_disc,
            });
        }
        let h1 = h1_cyclic(self.e, &AbelianModule::multiplicative(self.fq(), 0))?;
        let mut distinct = 0;
        let cocycles: Vec<Cocycle> = (0..self.e as i64).map(|j| self.cocycle_from_radius(j)).collect();
        for (i, c) in cocycles.iter().enumerate() {
            let mut new = true;
            for prev in &cocycles[..i] {
                if self.cohomologous_test(prev, c)?.is_some() {
                    new = false;
                    break;
                }
            }
            distinct += new as u64;
        }
        let h1_check = h1.order == classes.len() as u64 && distinct == classes.len() as u64;
        Ok(Classification { classes, h1_order: h1.order, h1_invariant_factors: h1.invariant_factors, cohomology_classes: distinct, h1_check })
    }

    /// `psi_{g^a}(deg s^b) = g^a(s^b)/s^b`, as exponents of `zeta`.
    pub fn inertia_pairing(&self) -> InertiaPairing {
        let e = self.e;
        let f = self.fq();
        let mut table = Vec::new();
        for a in 0..e {
            let row: Vec<Fq> = (0..e)
                .map(|b| {
                    let sb = Unit { c: Fq::ONE, k: b as i64 };
                    self.unit_mul(self.act(a, sb), self.unit_inv(sb)).c
                })
                .collect();
            table.push(row);
        }
        let homomorphism_in_b = table.iter().all(|row| {
            (0..e as usize).all(|b| (0..e as usize).all(|c| row[(b + c) % e as usize] == f.mul(row[b], row[c])))
        });
        let homomorphism_in_a = (0..e as usize).all(|a| {
            (0..e as usize).all(|a2| (0..e as usize).all(|b| table[(a + a2) % e as usize][b] == f.mul(table[a][b], table[a2][b])))
        });
        let rows: HashSet<&Vec<Fq>> = table.iter().collect();
        let injective = rows.len() as u64 == e;
        // |Hom(Z/e, GF(q)^x)| = #{x : x^e = 1}
        let hom_order = f.nonzero_elements().filter(|&x| f.pow(x, e as i64).expect("unit") == Fq::ONE).count() as u64;
        let cols: HashSet<Vec<Fq>> = (0..e as usize).map(|b| table.iter().map(|r| r[b]).collect()).collect();
        let perfect = injective && cols.len() as u64 == e && hom_order == e;
        InertiaPairing {
            zeta: f.format(self.zeta),
            table: table.iter().map(|r| r.iter().map(|&x| f.format(x)).collect()).collect(),
            exponent_table: (0..e).map(|a| (0..e).map(|b| (a * b) % e).collect()).collect(),
            matches_zeta_ab: (0..e).all(|a| {
                (0..e).all(|b| table[a as usize][b as usize] == f.pow(self.zeta, (a * b) as i64).expect("unit"))
            }),
            homomorphism: homomorphism_in_a && homomorphism_in_b,
            injective,
            hom_group_order: hom_order,
            perfect,
        }
    }
}

/// Values of a 1-cocycle at `g^0, ..., g^{e-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    key: (u32, u32, u64, Fq),
    pub values: Vec<Unit>,
}

#[derive(Clone, Debug)]
pub struct Descent {
    pub j: i64,
    /// `s^{-j} T`.
    pub generator: GradedElem,
    /// `deg(s)^{-j} r`.
    pub radius: Degree,
    pub invariant_monomials: usize,
    pub generated_by_generator: bool,
    pub base_change_recovers_disc: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadiusClass {
    pub j: i64,
    pub radius: String,
    pub generator: String,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub classes: Vec<RadiusClass>,
    pub h1_order: u64,
    pub h1_invariant_factors: Vec<u64>,
    pub cohomology_classes: u64,
    pub h1_check: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InertiaPairing {
    pub zeta: String,
    pub table: Vec<Vec<String>>,
    pub exponent_table: Vec<Vec<u64>>,
    pub matches_zeta_ab: bool,
    pub homomorphism: bool,
    pub injective: bool,
    pub hom_group_order: u64,
    pub perfect: bool,
}

/// A finite abelian group `Z/m_1 + ... + Z/m_d` with an endomorphism given
/// by the images of the standard generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianModule {
    pub moduli: Vec<u64>,
    pub action: Vec<Vec<u64>>,
}

const MAX_MODULE_SIZE: u64 = 1 << 20;

impl AbelianModule {
    pub fn new(moduli: Vec<u64>, action: Vec<Vec<u64>>) -> Result<Self> {
        if moduli.iter().any(|&m| m < 1) || action.len() != moduli.len() || action.iter().any(|r| r.len() != moduli.len()) {
            return Err(Error::InvalidArgument("malformed module data".into()));
        }
        let size = moduli.iter().try_fold(1u64, |acc, &m| acc.checked_mul(m)).unwrap_or(u64::MAX);
        if size > MAX_MODULE_SIZE {
            return Err(Error::InvalidArgument(format!("module of order {size} is too large to enumerate")));
        }
        let m = AbelianModule { moduli, action };
        // the images of generators must respect their orders
        for (i, &mi) in m.moduli.iter().enumerate() {
            let img = m.scale(&m.action[i], mi);
            if img.iter().any(|&x| x != 0) {
                return Err(Error::InvalidArgument(format!("action is not well defined on generator {i}")));
            }
        }
        Ok(m)
    }

    /// `Z/e` with trivial action.
    pub fn trivial_cyclic(e: u64) -> Self {
        AbelianModule { moduli: vec![e], action: vec![vec![1]] }
    }

    /// `GF(q)^x ≅ Z/(q-1)` (via the discrete logarithm) with `x -> x^{p^k}`.
    pub fn multiplicative(f: &FiniteField, k: u32) -> Self {
        let q = f.order() as u64;
        let pk = (f.characteristic() as u64).pow(k) % (q - 1).max(1);
        AbelianModule { moduli: vec![q - 1], action: vec![vec![pk]] }
    }

    /// `(GF(q), +) ≅ (Z/p)^m` in the basis `1, w, ..., w^{m-1}` with
    /// `x -> x^{p^k}`.
    pub fn additive(f: &FiniteField, k: u32) -> Self {
        let m = f.degree() as usize;
        let p = f.characteristic() as u64;
        let action = (0..m)
            .map(|i| {
                let basis = f.pow(f.generator(), i as i64).expect("unit");
                let img = f.frobenius(basis, k);
                let mut digits: Vec<u64> = f.digits(img).into_iter().map(u64::from).collect();
                digits.resize(m, 0);
                digits
            })
            .collect();
        AbelianModule { moduli: vec![p; m], action }
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    fn reduce(&self, x: Vec<u64>) -> Vec<u64> {
        x.into_iter().zip(&self.moduli).map(|(a, &m)| a % m).collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.reduce(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        self.reduce(a.iter().zip(&self.moduli).map(|(x, m)| m - x % m).collect())
    }

    pub fn scale(&self, a: &[u64], k: u64) -> Vec<u64> {
        self.reduce(a.iter().zip(&self.moduli).map(|(x, &m)| ((*x as u128 * k as u128) % m as u128) as u64).collect())
    }

    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.moduli.len()];
        for (xi, row) in x.iter().zip(&self.action) {
            out = self.add(&out, &self.scale(row, *xi));
        }
        out
    }

    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &m in &self.moduli {
            out = out.into_iter().flat_map(|v| (0..m).map(move |a| [v.clone(), vec![a]].concat())).collect();
        }
        out
    }

    fn zero(&self) -> Vec<u64> {
        vec![0; self.moduli.len()]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1 {
    pub order: u64,
    /// `d_1 | d_2 | ...`, all `> 1`; empty for the trivial group.
    pub invariant_factors: Vec<u64>,
}

/// `H^1(Z/e, M) = ker(N) / im(sigma - 1)`.
pub fn h1_cyclic(e: u64, module: &AbelianModule) -> Result<H1> {
    let elems = module.elements();
    let mut sigma_e_is_id = true;
    for x in &elems {
        let mut y = x.clone();
        for _ in 0..e {
            y = module.apply(&y);
        }
        sigma_e_is_id &= y == *x;
    }
    if !sigma_e_is_id {
        return Err(Error::ActionOrderMismatch(e));
    }
    let norm = |x: &Vec<u64>| {
        let mut acc = module.zero();
        let mut y = x.clone();
        for _ in 0..e {
            acc = module.add(&acc, &y);
            y = module.apply(&y);
        }
        acc
    };
    let zero = module.zero();
    let kernel: Vec<&Vec<u64>> = elems.iter().filter(|x| norm(x) == zero).collect();
    let image: HashSet<Vec<u64>> = elems.iter().map(|x| module.add(&module.apply(x), &module.neg(x))).collect();
    let order = kernel.len() as u64 / image.len() as u64;
    // |Q[l^k]| for the quotient Q, prime by prime
    let mut exponents: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for l in prime_factors(order) {
        let l_part = l.pow(multiplicity(order, l));
        let mut prev = 1u64;
        let mut ranks = Vec::new();
        let mut k = 1u32;
        loop {
            let lk = l.pow(k);
            let count = kernel.iter().filter(|x| image.contains(&module.scale(x, lk))).count() as u64 / image.len() as u64;
            ranks.push(multiplicity(count / prev, l));
            prev = count;
            if count == l_part {
                break;
            }
            k += 1;
        }
        // ranks[k-1] = number of cyclic factors of order >= l^k
        let mut exps = Vec::new();
        for (idx, &rk) in ranks.iter().enumerate() {
            let next = ranks.get(idx + 1).copied().unwrap_or(0);
            for _ in 0..(rk - next) {
                exps.push(idx as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        exponents.insert(l, exps);
    }
    let len = exponents.values().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..len)
        .map(|i| exponents.iter().map(|(&l, ex)| ex.get(i).map_or(1, |&k| l.pow(k))).product())
        .collect();
    factors.sort_unstable();
    Ok(H1 { order, invariant_factors: factors })
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn multiplicity(mut n: u64, l: u64) -> u32 {
    let mut k = 0;
    while n > 1 && n.is_multiple_of(l) {
        n /= l;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(q: u64, e: u64) -> TameSetup {
        TameSetup::new(q, e, Degree::identity()).unwrap()
    }

    #[test]
    fn h1_examples() {
        let f5 = FiniteField::new(5, 1).unwrap();
        let h = h1_cyclic(2, &AbelianModule::multiplicative(&f5, 0)).unwrap();
        assert_eq!(h.invariant_factors, vec![2]);
        assert_eq!(h1_cyclic(2, &AbelianModule::additive(&f5, 0)).unwrap().order, 1);
        assert_eq!(h1_cyclic(6, &AbelianModule::trivial_cyclic(6)).unwrap().invariant_factors, vec![6]);
        let m = AbelianModule::new(vec![4, 2], vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(h1_cyclic(2, &m).unwrap().invariant_factors, vec![2, 2]);
        let m = AbelianModule::new(vec![8], vec![vec![3]]).unwrap();
        assert_eq!(h1_cyclic(3, &m), Err(Error::ActionOrderMismatch(3)));
    }

    #[test]
    fn hilbert_90_with_frobenius() {
        let f9 = FiniteField::new(3, 2).unwrap();
        assert_eq!(h1_cyclic(2, &AbelianModule::multiplicative(&f9, 1)).unwrap().order, 1);
        assert_eq!(h1_cyclic(2, &AbelianModule::additive(&f9, 1)).unwrap().order, 1);
    }

    #[test]
    fn cocycles() {
        let s = setup(5, 2);
        let c1 = s.cocycle_from_radius(1);
        assert_eq!(s.format_unit(c1.values[1]), "4");
        assert!(s.cocycle_from_radius(0).values.iter().all(|u| u.c == Fq::ONE && u.k == 0));
        for j in -3..6 {
            assert!(s.cocycle_law_holds(&s.cocycle_from_radius(j)));
        }
        let c0 = s.cocycle_from_radius(0);
        assert!(s.cohomologous_test(&c0, &c1).unwrap().is_none());
        assert!(s.cohomologous_test(&c1, &s.cocycle_from_radius(3)).unwrap().is_some());
        let other = setup(7, 3).cocycle_from_radius(1);
        assert_eq!(s.cohomologous_test(&c0, &other), Err(Error::SetupMismatch));
    }

    #[test]
    fn descent_examples() {
        let s = setup(5, 2);
        let d = s.descend(&s.cocycle_from_radius(0)).unwrap();
        assert_eq!(d.generator.to_string(), "T");
        assert!(d.radius.is_identity());
        let d = s.descend(&s.cocycle_from_radius(1)).unwrap();
        assert_eq!(d.generator.to_string(), "s^-1*T");
        assert_eq!(d.radius, "q_s^-1".parse().unwrap());
        assert!(d.generated_by_generator && d.base_change_recovers_disc);
        let s7 = setup(7, 3);
        assert_eq!(s7.descend(&s7.cocycle_from_radius(2)).unwrap().generator.to_string(), "s^-2*T");
        let bad = s.cocycle(vec![Unit { c: Fq::ONE, k: 0 }, Unit { c: Fq::ONE, k: 1 }]).unwrap();
        assert!(matches!(s.descend(&bad), Err(Error::NotScalarCocycle)));
    }

    #[test]
    fn classification_counts() {
        for (q, e) in [(5, 2), (5, 4), (7, 3), (4, 3), (9, 8), (5, 1)] {
            let c = setup(q, e).classify().unwrap();
            assert_eq!(c.classes.len() as u64, e);
            assert!(c.h1_check, "q={q} e={e}");
            assert!(c.classes.iter().all(|k| k.verified));
        }
        assert!(TameSetup::new(5, 3, Degree::identity()).is_err());
        assert!(TameSetup::new(4, 2, Degree::identity()).is_err());
    }

    #[test]
    fn pairing() {
        for (q, e) in [(5, 4), (7, 3), (7, 6), (4, 3)] {
            let p = setup(q, e).inertia_pairing();
            assert!(p.perfect && p.homomorphism && p.matches_zeta_ab, "q={q} e={e}");
        }
        let p = setup(5, 2).inertia_pairing();
        assert_eq!(p.table[1][1], "4");
        assert!(p.table[0].iter().all(|x| x == "1"));
    }
}
