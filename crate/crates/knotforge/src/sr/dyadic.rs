use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of Z[1/2] in normal form `mantissa · 2^exponent` with the
/// mantissa odd (or zero, with exponent 0). Arithmetic is exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Dyadic", 2)?;
        s.serialize_field("mantissa", &self.mantissa.to_string())?;
        s.serialize_field("exponent", &self.exponent)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Dyadic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            mantissa: String,
            exponent: i64,
        }
        let raw = Raw::deserialize(deserializer)?;
        let m: BigInt = raw
            .mantissa
            .parse()
            .map_err(|e| serde::de::Error::custom(format!("bad mantissa: {e}")))?;
        Ok(Dyadic::new(m, raw.exponent))
    }
}

impl Dyadic {
    pub fn zero() -> Self {
        Self { mantissa: BigInt::zero(), exponent: 0 }
    }

    pub fn one() -> Self {
        Self { mantissa: BigInt::one(), exponent: 0 }
    }

    pub fn new(mantissa: impl Into<BigInt>, exponent: i64) -> Self {
        Self::reduce(mantissa.into(), exponent)
    }

    fn reduce(mut m: BigInt, mut e: i64) -> Self {
        if m.is_zero() {
            return Self::zero();
        }
        while m.is_even() {
            m /= 2;
            e += 1;
        }
        Self { mantissa: m, exponent: e }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Self::reduce(v.into(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// Odd part |mantissa|; zero for zero.
    pub fn odd_part(&self) -> BigInt {
        self.mantissa.abs()
    }

    /// Multiply by 2^k.
    pub fn scale_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { mantissa: self.mantissa.clone(), exponent: self.exponent + k }
    }

    /// True iff the value is ±2^k, i.e. a unit of Z[1/2].
    pub fn is_unit(&self) -> bool {
        self.mantissa.abs().is_one()
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(rhs.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &rhs.mantissa << (rhs.exponent - e) as usize;
        Dyadic::reduce(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mantissa: &self.mantissa * &rhs.mantissa, exponent: self.exponent + rhs.exponent }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mantissa: -&self.mantissa, exponent: self.exponent }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        match self.exponent {
            0 => write!(f, "{}", self.mantissa),
            e if e > 0 => write!(f, "{}", &self.mantissa << e as usize),
            e => write!(f, "{}/{}", self.mantissa, BigInt::one() << (-e) as usize),
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        let d = Dyadic::new(12, -1);
        assert_eq!(d.mantissa(), &BigInt::from(3));
        assert_eq!(d.exponent(), 1);
        assert_eq!(Dyadic::new(0, 5), Dyadic::zero());
    }

    #[test]
    fn arithmetic() {
        let half = Dyadic::new(1, -1);
        let one = Dyadic::one();
        assert_eq!(&half + &half, one);
        assert_eq!(&one - &half, half);
        assert_eq!(&half * &half, Dyadic::new(1, -2));
        assert!((&one - &one).is_zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Dyadic::new(3, 1).to_string(), "6");
        assert_eq!(Dyadic::new(3, -2).to_string(), "3/4");
        assert_eq!(Dyadic::zero().to_string(), "0");
    }
}
