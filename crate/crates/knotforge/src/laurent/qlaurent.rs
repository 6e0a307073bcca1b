use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentPoly;

/// A Laurent polynomial over Q, the coefficient ring for Smith normal
/// forms over the PID Q[t^±1]. Units are `c·t^k` with `c ∈ Q^×`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QLaurent {
    coeffs: BTreeMap<i64, BigRational>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    pub fn monomial(exp: i64, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Degree span; the Euclidean "size" of a nonzero element minus one.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo + 1,
            _ => 0,
        }
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&exp);
                }
            }
            None => {
                self.coeffs.insert(exp, c);
            }
        }
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.max_exp().map(|e| self.coeffs[&e].clone()).unwrap_or_else(BigRational::zero)
    }

    pub fn shifted(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(&e, k)| (e, k * c)).collect() }
    }

    /// Division with remainder: `self = q*d + r` with span(r) < span(d).
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let d_deg = d.max_exp().unwrap();
        let d_span = d.span();
        let d_lead = d.leading_coeff();
        while !rem.is_zero() && rem.span() >= d_span {
            let r_deg = rem.max_exp().unwrap();
            let q = Self::monomial(r_deg - d_deg, rem.leading_coeff() / &d_lead);
            rem = &rem - &(&q * d);
            quot = &quot + &q;
        }
        (quot, rem)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Associate with min exponent 0 and leading coefficient 1.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lo = self.min_exp().unwrap();
        let inv = self.leading_coeff().recip();
        self.shifted(-lo).scaled(&inv)
    }

    /// Clear denominators and content: the primitive integer associate
    /// with positive leading coefficient.
    pub fn to_primitive_int(&self) -> Option<LaurentPoly> {
        if self.is_zero() {
            return None;
        }
        let mut denom_lcm = BigInt::one();
        for c in self.coeffs.values() {
            let d = c.denom();
            denom_lcm = num_integer::lcm(denom_lcm, d.clone());
        }
        let ip = LaurentPoly::from_terms(
            self.coeffs.iter().map(|(&e, c)| (e, c.numer() * (&denom_lcm / c.denom()))),
        );
        Some(ip.primitive_part())
    }

    pub fn from_int(p: &LaurentPoly) -> Self {
        Self {
            coeffs: p.terms().map(|(e, c)| (e, BigRational::from(c.clone()))).collect(),
        }
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&e, c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn div_rem_laurent() {
        let a = QLaurent::from_int(&ip("2 - 5*t + 2*t^2"));
        let d = QLaurent::from_int(&ip("2*t - 1"));
        let (q, r) = a.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(&q * &d, a);
    }

    #[test]
    fn gcd_monic() {
        let a = QLaurent::from_int(&ip("2 - 5*t + 2*t^2"));
        let b = QLaurent::from_int(&ip("4*t - 2").shifted(-3));
        let g = a.gcd(&b);
        assert_eq!(g.to_primitive_int().unwrap(), ip("2*t - 1").normalize().unwrap());
    }

    #[test]
    fn primitive_int() {
        let q = QLaurent::monomial(2, BigRational::new(BigInt::from(4), BigInt::from(6)))
            .shifted(-1);
        let p = q.to_primitive_int().unwrap();
        assert_eq!(p, LaurentPoly::one());
    }
}
