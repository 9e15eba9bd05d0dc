//! Seeded generators for random test data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FieldElem, FieldKind, UPoly};
use crate::poly::{Monomial, Poly};
use crate::skew::SkewPoly;

pub const DEFAULT_SEED: u64 = 0x6772_6164_6564;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn upoly<R: Rng>(field: &Field, rng: &mut R, max_degree: usize) -> UPoly {
    let f = field.fq();
    let deg = rng.gen_range(0..=max_degree);
    let coeffs = (0..=deg).map(|_| f.from_encoding(rng.gen_range(0..f.order())).expect("in range")).collect();
    UPoly::from_coeffs(coeffs)
}

/// A random element; over `GF(q)(u)` numerator and denominator have degree
/// at most `height`.
pub fn field_elem<R: Rng>(field: &Field, rng: &mut R, height: usize) -> FieldElem {
    match field.kind() {
        FieldKind::Finite => {
            let f = field.fq();
            field.from_fq(f.from_encoding(rng.gen_range(0..f.order())).expect("in range"))
        }
        FieldKind::RationalFunction => loop {
            let num = upoly(field, rng, height);
            let den = upoly(field, rng, height);
            if !den.is_zero() {
                return field.fraction(num, den).expect("nonzero denominator");
            }
        },
    }
}

pub fn nonzero_field_elem<R: Rng>(field: &Field, rng: &mut R, height: usize) -> FieldElem {
    loop {
        let x = field_elem(field, rng, height);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random Laurent polynomial with at most `terms` terms, `t`-exponents in
/// `-t_range..=t_range` and variable exponents in `0..=var_max`.
pub fn poly<R: Rng>(field: &Field, rng: &mut R, nvars: usize, terms: usize, t_range: i64, var_max: i64) -> Poly {
    let mut out = Poly::zero(nvars);
    for _ in 0..rng.gen_range(1..=terms.max(1)) {
        let m = Monomial {
            t: rng.gen_range(-t_range..=t_range),
            vars: (0..nvars).map(|_| rng.gen_range(0..=var_max)).collect(),
        };
        out = out.add(&Poly::term(field_elem(field, rng, 1), m), field);
    }
    out
}

pub fn nonzero_poly<R: Rng>(field: &Field, rng: &mut R, nvars: usize, terms: usize, t_range: i64, var_max: i64) -> Poly {
    loop {
        let p = poly(field, rng, nvars, terms, t_range, var_max);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random skew polynomial of degree at most `degree`; separable (nonzero
/// constant term) when asked.
pub fn skew_poly<R: Rng>(field: &Field, rng: &mut R, degree: usize, height: usize, separable: bool) -> SkewPoly {
    let deg = rng.gen_range(0..=degree);
    let mut coeffs: Vec<FieldElem> = (0..=deg).map(|_| field_elem(field, rng, height)).collect();
    if separable && coeffs[0].is_zero() {
        coeffs[0] = nonzero_field_elem(field, rng, height);
    }
    SkewPoly::new(coeffs)
}
