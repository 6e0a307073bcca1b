use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{AlgebraError, LaurentPoly};

/// A value of the quotient `Q(t) / Λ`, `Λ = Z[t^±1]`, represented by a
/// fraction `num/den` in lowest terms with normalized denominator.
///
/// Membership in `Λ` (and hence equality of classes) is decided by exact
/// divisibility in `Z[t^±1]`; `reduce` additionally shrinks the stored
/// numerator against `den·Λ` for display.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunctionModLambda {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunctionModLambda {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let mut out = Self { num, den };
        out.canonicalize();
        Ok(out)
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g).expect("gcd divides");
            self.den = self.den.div_exact(&g).expect("gcd divides");
        }
        // Normalize the denominator; apply the same unit to the numerator.
        let lo = self.den.min_exp().unwrap();
        let negate = self.den.shifted(-lo).leading_coeff() < 0.into();
        self.den = self.den.shifted(-lo);
        self.num = self.num.shifted(-lo);
        if negate {
            self.den = -&self.den;
            self.num = -&self.num;
        }
        self.reduce_numerator();
    }

    /// Shrink the numerator by integer Laurent multiples of the
    /// denominator (top-down). Purely cosmetic: class unchanged.
    fn reduce_numerator(&mut self) {
        if self.den.span() <= 1 {
            // den = c t^k; classes mod Λ are represented by num/c reduced.
            return;
        }
        let m = self.den.max_exp().unwrap();
        let lead = self.den.leading_coeff();
        loop {
            let Some(hi) = self.num.max_exp() else { break };
            if self.num.span() <= self.den.span() {
                break;
            }
            let a = self.num.coeff(hi);
            let q = nearest_div(&a, &lead);
            if q == 0.into() {
                break;
            }
            let delta = &LaurentPoly::monomial(hi - m, q) * &self.den;
            self.num = &self.num - &delta;
        }
    }

    /// True iff the class is 0 in Q(t)/Λ, i.e. `den | num` in Z[t^±1].
    pub fn is_zero_mod_lambda(&self) -> bool {
        self.den.divides(&self.num)
    }

    /// Equality of classes in Q(t)/Λ.
    pub fn eq_mod_lambda(&self, other: &Self) -> bool {
        (self - other).is_zero_mod_lambda()
    }

    /// The involution `t ↦ t^{-1}` applied to the class.
    pub fn conjugate(&self) -> Self {
        Self::new(self.num.involute(), self.den.involute()).expect("nonzero denominator")
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominator")
    }
}

fn nearest_div(a: &num_bigint::BigInt, b: &num_bigint::BigInt) -> num_bigint::BigInt {
    use num_integer::Integer;
    use num_traits::Signed;
    let (mut q, r) = a.div_rem(b);
    if r.abs() * 2u8 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

impl Add for &RationalFunctionModLambda {
    type Output = RationalFunctionModLambda;
    fn add(self, rhs: &RationalFunctionModLambda) -> RationalFunctionModLambda {
        RationalFunctionModLambda::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Sub for &RationalFunctionModLambda {
    type Output = RationalFunctionModLambda;
    fn sub(self, rhs: &RationalFunctionModLambda) -> RationalFunctionModLambda {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunctionModLambda {
    type Output = RationalFunctionModLambda;
    fn neg(self) -> RationalFunctionModLambda {
        RationalFunctionModLambda { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunctionModLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_zero() {
            write!(f, "0")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunctionModLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunctionModLambda {
        RationalFunctionModLambda::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn integral_detection() {
        assert!(rf("2*t - 4", "t - 2").is_zero_mod_lambda());
        assert!(!rf("t - 1", "t - 2").is_zero_mod_lambda());
        // (t-1)/(2t-1): not integral (2t-1 does not divide t-1 over Z)
        assert!(!rf("t - 1", "2*t - 1").is_zero_mod_lambda());
    }

    #[test]
    fn class_arithmetic() {
        let a = rf("t - 1", "t - 2");
        let b = rf("1", "t - 2");
        let sum = &a + &b;
        // (t-1)/(t-2) + 1/(t-2) = t/(t-2)
        assert!(sum.eq_mod_lambda(&rf("t", "t - 2")));
        assert!((&a - &a).is_zero_mod_lambda());
    }

    #[test]
    fn conjugate_class() {
        let a = rf("t - 1", "t - 2");
        let c = a.conjugate();
        // (t^-1 - 1)/(t^-1 - 2) = (1 - t)/(1 - 2t) = (t-1)/(2t-1)
        assert!(c.eq_mod_lambda(&rf("t - 1", "2*t - 1")));
    }

    #[test]
    fn lowest_terms() {
        let a = rf("2*t^2 - 4*t", "2*t - 4");
        assert!(a.is_zero_mod_lambda());
        let b = rf("3*t - 3", "3*t - 6");
        assert_eq!(b.denominator(), &p("t - 2"));
    }
}
