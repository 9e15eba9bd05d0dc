//! The multiplicative grading group, represented as the free `Q`-vector
//! space on named generators.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::{Ratio, Rational64};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A degree `prod g_i^{e_i}` with rational exponents. The identity is the
/// empty product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(BTreeMap<String, Rational64>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Degree {
    pub fn identity() -> Self {
        Degree(BTreeMap::new())
    }

    pub fn generator(name: &str) -> Self {
        Self::from_pairs([(name, Rational64::one())])
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, Rational64)>) -> Self {
        let mut d = Degree::identity();
        for (name, e) in pairs {
            d.add_exponent(name, e);
        }
        d
    }

    fn add_exponent(&mut self, name: &str, e: Rational64) {
        let slot = self.0.entry(name.to_string()).or_insert_with(Rational64::zero);
        *slot += e;
        if slot.is_zero() {
            self.0.remove(name);
        }
    }

    pub fn exponents(&self) -> &BTreeMap<String, Rational64> {
        &self.0
    }

    pub fn exponent(&self, name: &str) -> Rational64 {
        self.0.get(name).copied().unwrap_or_else(Rational64::zero)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Degree) -> Degree {
        let mut d = self.clone();
        for (name, &e) in &other.0 {
            d.add_exponent(name, e);
        }
        d
    }

    pub fn inv(&self) -> Degree {
        Degree(self.0.iter().map(|(k, &v)| (k.clone(), -v)).collect())
    }

    pub fn div(&self, other: &Degree) -> Degree {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: Rational64) -> Degree {
        if e.is_zero() {
            return Degree::identity();
        }
        Degree(self.0.iter().map(|(k, &v)| (k.clone(), v * e)).collect())
    }

    pub fn powi(&self, e: i64) -> Degree {
        self.pow(Rational64::from_integer(e))
    }

    /// Smallest `k >= 1` with `self^k` in the subgroup generated by `gens`.
    pub fn order_mod_subgroup(&self, gens: &[Degree]) -> Order {
        order_mod_subgroup(self, gens)
    }
}

type Q = Ratio<i128>;

pub fn order_mod_subgroup(g: &Degree, gens: &[Degree]) -> Order {
    let mut names: Vec<&String> = g.0.keys().chain(gens.iter().flat_map(|d| d.0.keys())).collect();
    names.sort();
    names.dedup();
    if names.is_empty() {
        return Order::Finite(1);
    }
    let vec_of = |d: &Degree| -> Vec<Q> {
        names.iter().map(|n| {
            let e = d.exponent(n);
            Q::new(*e.numer() as i128, *e.denom() as i128)
        }).collect()
    };
    let target = vec_of(g);
    let rows: Vec<Vec<Q>> = gens.iter().map(vec_of).collect();
    // Scale everything to an integer lattice.
    let denom = rows
        .iter()
        .chain(std::iter::once(&target))
        .flatten()
        .fold(1i128, |acc, x| acc.lcm(x.denom()));
    let mut lattice: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|x| (x * denom).to_integer()).collect())
        .collect();
    let target: Vec<Q> = target.iter().map(|x| x * Q::from_integer(denom)).collect();
    let basis = integer_echelon(&mut lattice, names.len());

    let mut residual = target;
    let mut k = 1i128;
    for (row, pivot) in &basis {
        let c = residual[*pivot] / Q::from_integer(row[*pivot]);
        if c.is_zero() {
            continue;
        }
        k = k.lcm(c.denom());
        for (res, &b) in residual.iter_mut().zip(row) {
            *res -= c * Q::from_integer(b);
        }
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return Order::Infinite;
    }
    Order::Finite(k as u64)
}

/// Integer row echelon form; returns the nonzero rows with their pivot
/// columns, pivots strictly increasing.
fn integer_echelon(rows: &mut Vec<Vec<i128>>, ncols: usize) -> Vec<(Vec<i128>, usize)> {
    let mut out = Vec::new();
    let mut active: Vec<Vec<i128>> = std::mem::take(rows);
    for col in 0..ncols {
        loop {
            active.retain(|r| r.iter().any(|x| *x != 0));
            let mut nz: Vec<usize> = (0..active.len()).filter(|&i| active[i][col] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    let mut row = active.swap_remove(i);
                    if row[col] < 0 {
                        row.iter_mut().for_each(|x| *x = -*x);
                    }
                    out.push((row, col));
                }
                break;
            }
            nz.sort_by_key(|&i| active[i][col].abs());
            let p = nz[0];
            let pivot_row = active[p].clone();
            for &i in &nz[1..] {
                let f = active[i][col].div_euclid(pivot_row[col]);
                for (x, &y) in active[i].iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    out
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(name, e)| if e.is_one() { name.clone() } else { format!("{name}^{e}") })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

fn parse_rational(s: &str) -> Result<Rational64> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let bad = || Error::Parse(format!("bad exponent '{s}'"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse::<i64>().map_err(|_| bad())?, b.trim().parse::<i64>().map_err(|_| bad())?),
        None => (s.parse::<i64>().map_err(|_| bad())?, 1),
    };
    if den == 0 {
        return Err(bad());
    }
    Ok(Rational64::new(num, den))
}

impl FromStr for Degree {
    type Err = Error;

    /// Parses `q_t^2 * r^-1/3`; `1` (or the empty string) is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut d = Degree::identity();
        if s.is_empty() || s == "1" {
            return Ok(d);
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n.trim(), parse_rational(e)?),
                None => (factor, Rational64::one()),
            };
            if factor == "1" {
                continue;
            }
            let valid = name.chars().next().is_some_and(|c| c.is_alphabetic())
                && name.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Parse(format!("bad degree generator '{name}' in '{s}'")));
            }
            d.add_exponent(name, exp);
        }
        Ok(d)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(s: &str) -> Degree {
        s.parse().unwrap()
    }

    #[test]
    fn group_law_examples() {
        assert!(deg("r").mul(&deg("r^-1")).is_identity());
        assert_eq!(deg("q_t^2").pow(Rational64::new(1, 2)), deg("q_t"));
        assert_eq!(deg("q_t").mul(&deg("r^3")), deg("q_t * r^3"));
    }

    #[test]
    fn parse_and_print_round_trip() {
        let d = deg("q_t^2 * r^-1/3");
        assert_eq!(d.exponent("r"), Rational64::new(-1, 3));
        assert_eq!(d.to_string(), "q_t^2 * r^-1/3");
        assert_eq!(deg(&d.to_string()), d);
        assert_eq!(deg("1").to_string(), "1");
        assert!("r^x".parse::<Degree>().is_err());
        assert!("2r".parse::<Degree>().is_err());
    }

    #[test]
    fn order_examples() {
        assert_eq!(deg("r").order_mod_subgroup(&[deg("r^2")]), Order::Finite(2));
        assert_eq!(deg("r").order_mod_subgroup(&[deg("q_t")]), Order::Infinite);
        assert_eq!(deg("q_t^3").order_mod_subgroup(&[deg("q_t^2"), deg("q_t^5")]), Order::Finite(1));
        assert_eq!(Degree::identity().order_mod_subgroup(&[]), Order::Finite(1));
        assert_eq!(deg("r^1/2").order_mod_subgroup(&[deg("r^3 * q"), deg("q^2")]), Order::Finite(12));
    }
}
