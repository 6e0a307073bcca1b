use num_bigint::BigInt;

use super::ring::FreeGroupRingElement;
use super::word::Word;

/// Left Fox derivative `∂w/∂g` in the free group ring, with the rules
///
/// ```text
/// ∂(uv) = ∂u + u·∂v,   ∂g/∂g = 1,   ∂(g⁻¹)/∂g = -g⁻¹,   ∂h/∂g = 0 (h ≠ g).
/// ```
pub fn fox_derivative(w: &Word, gen: usize) -> FreeGroupRingElement {
    let mut out = FreeGroupRingElement::zero();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        if l.gen == gen {
            if !l.inverse {
                out.add_term(prefix.clone(), BigInt::from(1));
            } else {
                let letter_word = Word::from_letters([l]);
                out.add_term(prefix.concat(&letter_word), BigInt::from(-1));
            }
        }
        prefix = prefix.concat(&Word::from_letters([l]));
    }
    out
}

/// The fundamental Fox identity `Σ_g ∂_g(w)·(g - 1) = w - 1`, exposed for
/// property testing.
pub fn fox_fundamental_identity_holds(w: &Word) -> bool {
    let n = w.max_generator().map_or(0, |g| g + 1);
    let mut lhs = FreeGroupRingElement::zero();
    for g in 0..n {
        let d = fox_derivative(w, g);
        let gm1 = &FreeGroupRingElement::from_word(Word::generator(g)) - &FreeGroupRingElement::one();
        lhs = &lhs + &(&d * &gm1);
    }
    let rhs = &FreeGroupRingElement::from_word(w.clone()) - &FreeGroupRingElement::one();
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    // Generators: a = 0, c = 1.
    fn w(signed: &[i64]) -> Word {
        Word::from_signed(signed)
    }

    #[test]
    fn derivative_of_relator_wrt_a() {
        // ∂_a(a c a^-1 c^-2) = 1 - aca^-1
        let r = w(&[1, 2, -1, -2, -2]);
        let d = fox_derivative(&r, 0);
        let expect = FreeGroupRingElement::from_terms([
            (Word::identity(), 1),
            (w(&[1, 2, -1]), -1),
        ]);
        assert_eq!(d, expect);
    }

    #[test]
    fn derivative_of_relator_wrt_c() {
        // ∂_c(a c a^-1 c^-2) = a - aca^-1c^-1 - aca^-1c^-2
        let r = w(&[1, 2, -1, -2, -2]);
        let d = fox_derivative(&r, 1);
        let expect = FreeGroupRingElement::from_terms([
            (w(&[1]), 1),
            (w(&[1, 2, -1, -2]), -1),
            (w(&[1, 2, -1, -2, -2]), -1),
        ]);
        assert_eq!(d, expect);
    }

    #[test]
    fn derivative_of_identity() {
        assert!(fox_derivative(&Word::identity(), 0).is_zero());
    }

    #[test]
    fn product_rule() {
        let u = w(&[1, -2, 1]);
        let v = w(&[2, 2, -1]);
        for g in 0..2 {
            let lhs = fox_derivative(&u.concat(&v), g);
            let rhs = &fox_derivative(&u, g)
                + &fox_derivative(&v, g).left_mul_word(&u);
            assert_eq!(lhs, rhs, "product rule for generator {g}");
        }
    }

    #[test]
    fn fundamental_identity_samples() {
        for signed in [
            vec![1, 2, -1, -2, -2],
            vec![-1, 2, -1, 2, 1, -2],
            vec![3, -2, 1, 1, -3],
            vec![],
        ] {
            assert!(fox_fundamental_identity_holds(&w(&signed)));
        }
    }
}
