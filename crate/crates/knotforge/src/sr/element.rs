use std::fmt;

use crate::group::Word;

use super::Dyadic;

/// An element of `SR = Z ⋉ Z[1/2] = ⟨a, c | a c a⁻¹ = c²⟩` in normal
/// form `(shift, translation)`, where `a = (1, 0)`, `c = (0, 1)` and
///
/// ```text
/// (k₁, x₁) · (k₂, x₂) = (k₁ + k₂, x₁ + 2^{k₁} x₂).
/// ```
///
/// The generator `a` acts on the normal subgroup Z[1/2] by
/// multiplication by 2, so the defining relation holds on the nose:
/// `a c a⁻¹ = (0, 2) = c²`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SRElement {
    shift: i64,
    translation: Dyadic,
}

impl SRElement {
    pub fn identity() -> Self {
        Self { shift: 0, translation: Dyadic::zero() }
    }

    pub fn new(shift: i64, translation: Dyadic) -> Self {
        Self { shift, translation }
    }

    /// The generator `a = (1, 0)`.
    pub fn a() -> Self {
        Self::new(1, Dyadic::zero())
    }

    /// The generator `c = (0, 1)`.
    pub fn c() -> Self {
        Self::new(0, Dyadic::one())
    }

    /// A meridian-type element `(1, x)`.
    pub fn meridian(x: Dyadic) -> Self {
        Self::new(1, x)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn translation(&self) -> &Dyadic {
        &self.translation
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.translation.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            shift: self.shift + other.shift,
            translation: &self.translation + &other.translation.scale_pow2(self.shift),
        }
    }

    pub fn inv(&self) -> Self {
        Self {
            shift: -self.shift,
            translation: (-&self.translation).scale_pow2(-self.shift),
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

impl fmt::Display for SRElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.shift, self.translation)
    }
}

impl fmt::Debug for SRElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Image of a free-group word under `generator i ↦ assign[i]`.
pub fn evaluate_word(w: &Word, assign: &[SRElement]) -> SRElement {
    let mut acc = SRElement::identity();
    for l in w.letters() {
        let img = &assign[l.gen];
        acc = acc.mul(&if l.inverse { img.inv() } else { img.clone() });
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation() {
        let a = SRElement::a();
        let c = SRElement::c();
        let lhs = a.mul(&c).mul(&a.inv());
        assert_eq!(lhs, c.mul(&c));
        assert_eq!(lhs, SRElement::new(0, Dyadic::from_int(2)));
    }

    #[test]
    fn inverse_law() {
        let g = SRElement::new(-3, Dyadic::new(5, 2));
        assert!(g.mul(&g.inv()).is_identity());
        assert!(g.inv().mul(&g).is_identity());
    }

    #[test]
    fn b_equals_c_inverse_a() {
        // b := c⁻¹ a = (1, -1); the 2-generator relator a⁻¹ b a⁻¹ b a b⁻¹
        // evaluates to the identity under a = (1,0), b = (1,-1).
        let b = SRElement::c().inv().mul(&SRElement::a());
        assert_eq!(b, SRElement::new(1, Dyadic::from_int(-1)));
        let relator = Word::from_signed(&[-1, 2, -1, 2, 1, -2]);
        let img = evaluate_word(&relator, &[SRElement::a(), b]);
        assert!(img.is_identity());
    }

    #[test]
    fn sr_relator_evaluates_to_identity() {
        // a c a⁻¹ c⁻² with a = (1,0), c = (0,1)
        let relator = Word::from_signed(&[1, 2, -1, -2, -2]);
        let img = evaluate_word(&relator, &[SRElement::a(), SRElement::c()]);
        assert!(img.is_identity());
        assert!(evaluate_word(&Word::identity(), &[]).is_identity());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let g = SRElement::new(1, Dyadic::new(3, -1));
        assert_eq!(g.pow(3), g.mul(&g).mul(&g));
        assert_eq!(g.pow(-2), g.inv().mul(&g.inv()));
        assert!(g.pow(0).is_identity());
    }
}
