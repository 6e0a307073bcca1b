use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::word::Word;

/// An element of the integral group ring of a free group: a finite formal
/// Z-linear combination of freely reduced words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreeGroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl FreeGroupRingElement {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::from(1));
        Self { terms }
    }

    pub fn from_terms<I, C>(items: I) -> Self
    where
        I: IntoIterator<Item = (Word, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (w, c) in items {
            out.add_term(w, c.into());
        }
        out
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    /// Left-multiply by a single word.
    pub fn left_mul_word(&self, w: &Word) -> Self {
        Self {
            terms: self.terms.iter().map(|(u, c)| (w.concat(u), c.clone())).collect(),
        }
    }

    /// Map each word through `f` and resum (a ring map when `f` is a
    /// monoid homomorphism on words).
    pub fn map_words<T, F>(&self, mut f: F) -> Vec<(T, BigInt)>
    where
        F: FnMut(&Word) -> T,
    {
        self.terms.iter().map(|(w, c)| (f(w), c.clone())).collect()
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push_str("- ");
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            use num_traits::One;
            if !mag.is_one() || w.is_identity() {
                out.push_str(&mag.to_string());
                if !w.is_identity() {
                    out.push('·');
                }
            }
            if !w.is_identity() {
                out.push_str(&w.display_with(names));
            }
        }
        out
    }
}

impl Add for &FreeGroupRingElement {
    type Output = FreeGroupRingElement;
    fn add(self, rhs: &FreeGroupRingElement) -> FreeGroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FreeGroupRingElement {
    type Output = FreeGroupRingElement;
    fn sub(self, rhs: &FreeGroupRingElement) -> FreeGroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &FreeGroupRingElement {
    type Output = FreeGroupRingElement;
    fn mul(self, rhs: &FreeGroupRingElement) -> FreeGroupRingElement {
        let mut out = FreeGroupRingElement::zero();
        for (u, c1) in &self.terms {
            for (v, c2) in &rhs.terms {
                out.add_term(u.concat(v), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &FreeGroupRingElement {
    type Output = FreeGroupRingElement;
    fn neg(self) -> FreeGroupRingElement {
        FreeGroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for FreeGroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max_gen = self
            .terms
            .keys()
            .filter_map(|w| w.max_generator())
            .max()
            .unwrap_or(0);
        let names: Vec<String> = (0..=max_gen).map(super::word::gen_name).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

impl fmt::Debug for FreeGroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_arithmetic() {
        let a = FreeGroupRingElement::from_word(Word::from_signed(&[1]));
        let one = FreeGroupRingElement::one();
        let s = &one - &a;
        let sq = &s * &s;
        // (1 - a)^2 = 1 - 2a + a^2
        let expect = FreeGroupRingElement::from_terms([
            (Word::identity(), 1),
            (Word::from_signed(&[1]), -2),
            (Word::from_signed(&[1, 1]), 1),
        ]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn cancellation_in_products() {
        let a = FreeGroupRingElement::from_word(Word::from_signed(&[1]));
        let ainv = FreeGroupRingElement::from_word(Word::from_signed(&[-1]));
        assert_eq!(&a * &ainv, FreeGroupRingElement::one());
    }
}
