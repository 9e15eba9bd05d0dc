//! Logarithmic-derivative class groups `L_B / L'_B` of Russell forms, where
//! `B = l~ (x) A ≅ l~[T]` carries the base-changed standard derivation.
//!
//! Gradings are ignored here: all rings are treated as ordinary rings.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hasse::{HigherDerivation, LogDerivative, TruncSeries};
use crate::poly::{Monomial, Poly};
use crate::russell::{RussellForm, Trivialization};

/// A class in `L_B / L'_B`, stored by its normal form: the least element
/// of the coset `{rep * w^j}` for `w = d(t)/t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LogDerivClass {
    rep: TruncSeries,
}

impl LogDerivClass {
    pub fn representative(&self) -> &TruncSeries {
        &self.rep
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassOf {
    Class(LogDerivClass),
    /// `d(z)/z` is not a unit of `B[S]_m`.
    NotInLB,
}

/// The data needed for class computations on one form.
pub struct PicardContext {
    form: RussellForm,
    tr: Trivialization,
    d: HigherDerivation,
    d_t: HigherDerivation,
    lprime: Vec<TruncSeries>,
}

impl fmt::Debug for PicardContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PicardContext").field("lprime", &self.lprime.len()).finish()
    }
}

impl PicardContext {
    /// Requires `k~ = k_1[t^{±p^n}]`, the constants of the standard
    /// derivation of exponent `n` on `l~ = k_1[t^{±1}]`.
    pub fn new(form: RussellForm) -> Result<Self> {
        let pn = form.pn();
        if form.spec().stride != pn {
            return Err(Error::InvalidArgument(format!(
                "class computations need stride p^n = {pn}, got {}",
                form.spec().stride
            )));
        }
        let tr = form.trivialize()?;
        let d = HigherDerivation::standard(form.ell(), form.n(), 0);
        let d_t = d.t_coordinate(&form, &tr)?;
        let field = form.ell().clone();
        let t = Poly::t_monomial(field.one(), 1, 1);
        let w = match d_t.log_derivative(&t)? {
            LogDerivative::Unit(w) => w,
            LogDerivative::NotAUnit => unreachable!("t is a unit"),
        };
        let mut lprime = vec![TruncSeries::one(&field, d_t.rank(), 1)];
        let mut cur = w.clone();
        while !cur.is_one(&field) {
            lprime.push(cur.clone());
            cur = cur.mul(&w, &field);
        }
        Ok(PicardContext { form, tr, d, d_t, lprime })
    }

    pub fn form(&self) -> &RussellForm {
        &self.form
    }

    pub fn field(&self) -> &Field {
        self.form.ell()
    }

    pub fn trivialization(&self) -> &Trivialization {
        &self.tr
    }

    /// The derivation on `l~`.
    pub fn derivation(&self) -> &HigherDerivation {
        &self.d
    }

    /// `d_L` in the coordinate `T` of `B = l~[T]`.
    pub fn t_derivation(&self) -> &HigherDerivation {
        &self.d_t
    }

    /// The powers of `d(t)/t`, i.e. `L'_B`.
    pub fn lprime_elements(&self) -> &[TruncSeries] {
        &self.lprime
    }

    fn normalize(&self, rep: &TruncSeries) -> LogDerivClass {
        let field = self.field();
        let rep = self.lprime.iter().map(|l| rep.mul(l, field)).min().expect("L' contains 1");
        LogDerivClass { rep }
    }

    pub fn identity(&self) -> LogDerivClass {
        self.normalize(&self.lprime[0])
    }

    /// The class of `d_L(z)/z` for `z` in `B = l~[T]` (one variable `T`).
    pub fn class_of(&self, z: &Poly) -> Result<ClassOf> {
        match self.d_t.log_derivative(z)? {
            LogDerivative::Unit(s) => Ok(ClassOf::Class(self.normalize(&s))),
            LogDerivative::NotAUnit => Ok(ClassOf::NotInLB),
        }
    }

    pub fn mul(&self, a: &LogDerivClass, b: &LogDerivClass) -> LogDerivClass {
        self.normalize(&a.rep.mul(&b.rep, self.field()))
    }

    pub fn pow(&self, a: &LogDerivClass, k: u64) -> LogDerivClass {
        self.normalize(&a.rep.pow(k, self.field()))
    }

    /// Least `k >= 1` with `c^k` trivial.
    pub fn class_order(&self, c: &LogDerivClass) -> u64 {
        let id = self.identity();
        let mut cur = c.clone();
        let mut k = 1;
        while cur != id {
            cur = self.mul(&cur, c);
            k += 1;
        }
        k
    }

    pub fn format_class(&self, c: &LogDerivClass) -> String {
        c.rep.format(self.field(), &self.form.ring().base.t_name, &["T"])
    }

    /// The criterion on `deg_T d_L(T)`.
    pub fn dt_criterion(&self) -> Result<DtReport> {
        let field = self.field();
        let t_var = Poly::var(field, 0, 1);
        let image = self.d_t.apply(&t_var);
        let deg_t = image.coeffs().iter().filter_map(|c| c.var_degree(0)).max().unwrap_or(0);
        let generator = match self.class_of(&t_var)? {
            ClassOf::Class(c) => c,
            ClassOf::NotInLB => unreachable!("d_L(T)/T has T-polynomial components"),
        };
        let order = self.class_order(&generator);
        let image_str = image.format(field, &self.form.ring().base.t_name, &["T"]);
        Ok(DtReport {
            deg_t,
            cyclic_certified: deg_t == 1,
            d_l_of_t: image_str,
            generator_is_identity: generator == self.identity(),
            generator: self.format_class(&generator),
            generator_order: order,
        })
    }

    /// For `n = 1`, `s = r`: `Pic(A)` is trivial iff every `a_i`, `i >= 1`,
    /// has a `p`-th root in `k~`.
    pub fn pth_root_criterion(&self) -> Result<PthRootVerdict> {
        let spec = self.form.spec();
        if spec.n != 1 || spec.s != spec.r {
            return Err(Error::WrongFamily);
        }
        let field = &spec.field;
        let p = field.characteristic() as i64;
        let mut roots = Vec::new();
        let mut all = true;
        for a in spec.f_coeffs.iter().skip(1) {
            if a.is_zero() {
                roots.push(Some("0".into()));
                continue;
            }
            let ok = a.k % p == 0 && (a.k / p) % spec.stride == 0;
            let root = if ok { field.pn_th_root(&a.c, 1) } else { None };
            match root {
                Some(c) => roots.push(Some(Poly::t_monomial(c, a.k / p, 0).format(field, &self.form.ring().base.t_name, &[]))),
                None => {
                    all = false;
                    roots.push(None);
                }
            }
        }
        let dt = self.dt_criterion()?;
        let consistent = !all || (dt.deg_t == 1 && dt.generator_is_identity);
        Ok(PthRootVerdict { pic_trivial: all, roots, dt_consistent: consistent })
    }

    /// Classes of random elements `z = sum c t^a T^b` of `T`-degree at most
    /// `degree_bound`; only those with `d_L(z)/z` a unit are kept.
    pub fn sampled_classes<R: Rng>(&self, degree_bound: u32, samples: usize, rng: &mut R) -> Result<Vec<SampledClass>> {
        let field = self.field();
        let elems = field.enumerate_bounded(1);
        let mut out = Vec::new();
        for _ in 0..samples {
            let terms = rng.gen_range(1..=2);
            let mut z = Poly::zero(1);
            for _ in 0..terms {
                let c = elems[rng.gen_range(0..elems.len())].clone();
                let m = Monomial { t: rng.gen_range(-3..=3), vars: vec![rng.gen_range(0..=degree_bound as i64)] };
                z = z.add(&Poly::term(c, m), field);
            }
            if z.is_zero() {
                continue;
            }
            if let ClassOf::Class(c) = self.class_of(&z)? {
                out.push(SampledClass {
                    z: z.format(field, &self.form.ring().base.t_name, &["T"]),
                    class: self.format_class(&c),
                    order: self.class_order(&c),
                });
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DtReport {
    pub deg_t: i64,
    pub cyclic_certified: bool,
    pub d_l_of_t: String,
    pub generator: String,
    pub generator_is_identity: bool,
    pub generator_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PthRootVerdict {
    pub pic_trivial: bool,
    /// `a_i^{1/p}` in `k~` for `i >= 1`, when it exists.
    pub roots: Vec<Option<String>>,
    /// Whether the `deg_T` computation agrees (`deg_T = 1` and trivial
    /// generator) whenever the roots exist.
    pub dt_consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampledClass {
    pub z: String,
    pub class: String,
    pub order: u64,
}
