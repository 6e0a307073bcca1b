use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::AlgebraError;

/// An integer Laurent polynomial in one variable `t`.
///
/// Coefficients are stored sparsely by exponent; no zero coefficient is
/// ever kept. The canonical form produced by [`LaurentPoly::normalize`]
/// is the unique associate (up to units `±t^k`) with minimum exponent 0
/// and positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c: BigInt = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Coefficients of `c_0 + c_1 t + ...` starting at exponent 0.
    pub fn from_coeff_slice(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (i as i64, c)))
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&exp) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.coeffs.remove(&exp);
                }
            }
            None => {
                self.coeffs.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    /// True iff the polynomial is `±t^k`.
    pub fn is_monomial_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.values().next().unwrap().abs().is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Width of the exponent window: max_exp - min_exp + 1, or 0 for zero.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo + 1,
            _ => 0,
        }
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(&e, k)| (e, k * c)).collect() }
    }

    /// The involution `t ↦ t^{-1}`.
    pub fn involute(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Substitute `t ↦ t^k`. For `k = 0` this evaluates at 1.
    pub fn compose_power(&self, k: i64) -> Self {
        if k == 0 {
            return Self::constant(self.eval_int(&BigInt::one()));
        }
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect() }
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        // Integer evaluation requires min_exp >= 0 unless |x| = 1.
        let lo = self.min_exp().unwrap_or(0);
        assert!(lo >= 0 || x.abs().is_one(), "integer evaluation at negative exponents");
        let mut acc = BigInt::zero();
        for (&e, c) in self.coeffs.iter().rev() {
            let p = if e >= 0 {
                x.pow(e as u32)
            } else {
                // |x| = 1 here: x^e = x^{-e}
                x.pow((-e) as u32)
            };
            acc += c * p;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&e, c) in &self.coeffs {
            let p = if e >= 0 {
                x.pow(e as i32)
            } else {
                x.pow(e as i32)
            };
            acc += BigRational::from(c.clone()) * p;
        }
        acc
    }

    /// Value at t = 1 (the augmentation).
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Value at t = -1.
    pub fn eval_at_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (&e, c) in &self.coeffs {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Gcd of the coefficients (nonnegative); 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Leading (highest-exponent) coefficient; 0 for the zero polynomial.
    pub fn leading_coeff(&self) -> BigInt {
        self.max_exp().map(|e| self.coeff(e)).unwrap_or_else(BigInt::zero)
    }

    /// The unique associate with min exponent 0 and positive leading
    /// coefficient. Errors on the zero polynomial.
    pub fn normalize(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let lo = self.min_exp().unwrap();
        let mut p = self.shifted(-lo);
        if p.leading_coeff().is_negative() {
            p = -&p;
        }
        Ok(p)
    }

    /// Normalize, treating zero as zero.
    pub fn normalized_or_zero(&self) -> Self {
        self.normalize().unwrap_or_else(|_| Self::zero())
    }

    /// Equality up to units `±t^k` and the involution `t ↦ t^{-1}`.
    pub fn symmetric_equal(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let a = self.normalize().unwrap();
        let b = other.normalize().unwrap();
        a == b || a == other.involute().normalize().unwrap()
    }

    /// Equality up to units `±t^k` only.
    pub fn unit_equal(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.normalize().unwrap() == other.normalize().unwrap()
    }

    /// Exact division in Z[t^±1]; `None` if not divisible.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Shift both to honest polynomials and do long division over Z.
        let a_lo = self.min_exp().unwrap();
        let d_lo = d.min_exp().unwrap();
        let mut rem = self.shifted(-a_lo);
        let div = d.shifted(-d_lo);
        let d_deg = div.max_exp().unwrap();
        let d_lead = div.leading_coeff();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let r_deg = rem.max_exp().unwrap();
            if r_deg < d_deg {
                return None;
            }
            let (q, r) = rem.leading_coeff().div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            let term = Self::monomial(r_deg - d_deg, q);
            rem = &rem - &(&term * &div);
            quot = &quot + &term;
            if !rem.is_zero() && rem.max_exp().unwrap() >= r_deg {
                return None; // no progress; defensive, cannot happen
            }
        }
        Some(quot.shifted(a_lo - d_lo))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Gcd in Z[t^±1], returned normalized (or zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_or_zero();
        }
        if other.is_zero() {
            return self.normalized_or_zero();
        }
        let c = self.content().gcd(&other.content());
        let a = self.primitive_part();
        let b = other.primitive_part();
        let g = primitive_gcd(&a, &b);
        g.scaled(&c).normalize().unwrap()
    }

    /// Primitive part (content divided out), normalized.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        let p = Self {
            coeffs: self.coeffs.iter().map(|(&e, k)| (e, k / &c)).collect(),
        };
        p.normalize().unwrap()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Derivative d/dt (may have negative exponents shifted down).
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .filter(|(&e, _)| e != 0)
                .map(|(&e, c)| (e - 1, c * BigInt::from(e))),
        )
    }
}

/// Gcd of two primitive polynomials via a primitive pseudo-remainder
/// sequence, shifted to honest polynomials first.
fn primitive_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut f = a.shifted(-a.min_exp().unwrap());
    let mut g = b.shifted(-b.min_exp().unwrap());
    if f.max_exp().unwrap() < g.max_exp().unwrap() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.is_zero() {
            return f.primitive_part();
        }
        let r = pseudo_rem(&f, &g);
        f = g;
        g = if r.is_zero() { LaurentPoly::zero() } else { r.primitive_part() };
    }
}

/// Pseudo-remainder of honest polynomials: rem of lc(g)^(deg f - deg g + 1) * f by g.
fn pseudo_rem(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    let df = f.max_exp().unwrap();
    let dg = g.max_exp().unwrap();
    if df < dg {
        return f.clone();
    }
    let lc_g = g.leading_coeff();
    let mut rem = f.scaled(&lc_g.pow((df - dg + 1) as u32));
    while !rem.is_zero() && rem.max_exp().unwrap() >= dg {
        let r_deg = rem.max_exp().unwrap();
        let (q, r) = rem.leading_coeff().div_rem(&lc_g);
        debug_assert!(r.is_zero());
        let term = LaurentPoly::monomial(r_deg - dg, q);
        rem = &rem - &(&term * g);
    }
    rem
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid polynomial at byte {pos}: {reason}")]
pub struct ParsePolyError {
    pub pos: usize,
    pub reason: String,
}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    /// Parses the textual form produced by `Display`, e.g.
    /// `2 - 5*t + 2*t^2`, `t^-1 - 2`, `-3`. Whitespace is optional.
    fn from_str(s: &str) -> Result<Self, ParsePolyError> {
        let bytes = s.as_bytes();
        let mut i = 0usize;
        let err = |pos: usize, reason: &str| ParsePolyError { pos, reason: reason.to_string() };
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let mut poly = LaurentPoly::zero();
        skip_ws(&mut i);
        if i == bytes.len() {
            return Err(err(i, "empty polynomial"));
        }
        let mut first = true;
        while i < bytes.len() {
            skip_ws(&mut i);
            if i == bytes.len() {
                break;
            }
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
                skip_ws(&mut i);
            } else if !first {
                return Err(err(i, "expected '+' or '-' between terms"));
            }
            first = false;
            // coefficient digits (optional if a variable follows)
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: Option<BigInt> = if i > start {
                Some(
                    std::str::from_utf8(&bytes[start..i])
                        .unwrap()
                        .parse()
                        .map_err(|_| err(start, "bad integer"))?,
                )
            } else {
                None
            };
            skip_ws(&mut i);
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
                skip_ws(&mut i);
            }
            let mut exp = 0i64;
            let mut has_var = false;
            if i < bytes.len() && bytes[i] == b't' {
                has_var = true;
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let estart = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = std::str::from_utf8(&bytes[estart..i])
                        .unwrap()
                        .parse()
                        .map_err(|_| err(estart, "bad exponent"))?;
                }
            }
            let c = match coeff {
                Some(c) => c,
                None if has_var => BigInt::one(),
                None => return Err(err(i, "expected coefficient or 't'")),
            };
            poly.add_term(exp, c * BigInt::from(sign));
            skip_ws(&mut i);
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        // (t-2)(t^-1-2) scaled by -t
        let q = p("-2*t^-1 + 5 - 2*t");
        assert_eq!(q.normalize().unwrap(), p("2 - 5*t + 2*t^2"));
        assert_eq!(p("t^5").normalize().unwrap(), LaurentPoly::one());
        assert_eq!(p("-3 + 3*t").normalize().unwrap(), p("-3 + 3*t"));
        assert!(LaurentPoly::zero().normalize().is_err());
    }

    #[test]
    fn normalize_idempotent() {
        let q = p("-2*t^-3 + 5*t - 2*t^4");
        let n = q.normalize().unwrap();
        assert_eq!(n.normalize().unwrap(), n);
    }

    #[test]
    fn symmetric_equal_examples() {
        let a = p("t - 2");
        let b = p("t^-1 - 2");
        assert!(a.symmetric_equal(&b));
        assert!(!a.symmetric_equal(&p("t - 3")));
        assert!(a.symmetric_equal(&a));
    }

    #[test]
    fn mul_and_eval() {
        let a = p("t - 2");
        let b = p("t^-1 - 2");
        let prod = &a * &b;
        assert_eq!(prod, p("5 - 2*t - 2*t^-1"));
        assert_eq!(prod.eval_at_one(), BigInt::from(1));
        assert_eq!(prod.eval_at_minus_one(), BigInt::from(9));
    }

    #[test]
    fn div_exact_and_gcd() {
        let a = p("2 - 5*t + 2*t^2");
        assert_eq!(a.div_exact(&p("t - 2")).unwrap(), p("-1 + 2*t"));
        assert_eq!(a.div_exact(&p("t - 3")), None);
        let g = p("6 - 15*t + 6*t^2").gcd(&p("2*t - 4"));
        assert_eq!(g, p("t - 2"));
        // gcd with shifts
        let g2 = a.shifted(-4).gcd(&p("t - 2").shifted(7));
        assert_eq!(g2, p("t - 2"));
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in ["2 - 5*t + 2*t^2", "t^-1 - 2", "-3", "t", "1 + t^3", "-t^-2 + t^2"] {
            let q = p(s);
            let printed = q.to_string();
            assert_eq!(p(&printed), q, "roundtrip of {s} via {printed}");
        }
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("t +".parse::<LaurentPoly>().is_err());
        assert!("2 2".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn involute_compose() {
        let a = p("2 - 5*t + 2*t^2");
        assert_eq!(a.involute(), p("2 - 5*t^-1 + 2*t^-2"));
        assert_eq!(a.compose_power(2), p("2 - 5*t^2 + 2*t^4"));
        assert_eq!(a.compose_power(0), p("-1"));
    }
}
