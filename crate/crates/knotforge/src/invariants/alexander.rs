use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::diagram::KnotDiagram;
use crate::group::{alexander_matrix, wirtinger};
use crate::laurent::{det_laurent, LaurentPoly};

use super::{InvariantError, SeifertMatrix};

/// The presentation matrix `A·t - Aᵗ` of the Alexander module, over
/// Z[t^±1].
pub fn seifert_presentation_matrix(a: &SeifertMatrix) -> Vec<Vec<LaurentPoly>> {
    let n = a.size();
    let e = a.entries();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    &LaurentPoly::monomial(1, e[i][j].clone())
                        - &LaurentPoly::monomial(0, e[j][i].clone())
                })
                .collect()
        })
        .collect()
}

/// Alexander polynomial from a Seifert matrix:
/// `Δ(t) = det(A·t - Aᵗ)`, normalized.
pub fn alexander_from_seifert(a: &SeifertMatrix) -> LaurentPoly {
    let det = det_laurent(&seifert_presentation_matrix(a));
    det.normalize().unwrap_or_else(|_| LaurentPoly::zero())
}

/// Alexander polynomial from a diagram, through the Wirtinger
/// presentation and Fox calculus at meridian weights 1.
///
/// The Alexander matrix is `(c-1) × c`; deleting any one column gives a
/// maximal minor equal to `±t^k Δ`. The gcd over a few column deletions
/// is taken as a cross-check before normalizing.
pub fn alexander_from_diagram(d: &KnotDiagram) -> Result<LaurentPoly, InvariantError> {
    if !d.is_knot() {
        return Err(InvariantError::NotAKnot(d.n_components()));
    }
    if d.crossing_count() == 0 {
        return Ok(LaurentPoly::one());
    }
    let p = wirtinger(d);
    let weights = vec![1i64; p.n_generators()];
    let m = alexander_matrix(&p, &weights)?;
    if m.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let cols = p.n_generators();
    let mut gcd = LaurentPoly::zero();
    for delete in [0, cols - 1] {
        let minor: Vec<Vec<LaurentPoly>> = m
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != delete)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        gcd = gcd.gcd(&det_laurent(&minor));
        if gcd.is_one() {
            break;
        }
    }
    if gcd.is_zero() {
        return Err(InvariantError::Singular);
    }
    Ok(gcd.normalize().expect("nonzero gcd"))
}

/// Arf invariant from the Alexander polynomial: 0 iff
/// `Δ(-1) ≡ ±1 (mod 8)`.
pub fn arf_invariant(delta: &LaurentPoly) -> Result<u8, InvariantError> {
    use num_integer::Integer;
    let at_one = delta.eval_at_one();
    if !at_one.abs().is_one() {
        return Err(InvariantError::Algebra(
            crate::laurent::AlgebraError::NotAKnotPolynomial(at_one.to_string()),
        ));
    }
    let r = delta.eval_at_minus_one().mod_floor(&BigInt::from(8));
    Ok(if r == BigInt::from(1) || r == BigInt::from(7) { 0 } else { 1 })
}

/// Alexander polynomial of a satellite with the given orbit, companion
/// and winding number: `Δ_S(t) = Δ_orbit(t) · Δ_companion(t^w)`.
/// For `w = 0` this is `Δ_orbit` since `Δ_companion(1) = ±1`.
pub fn satellite_alexander(
    delta_orbit: &LaurentPoly,
    delta_companion: &LaurentPoly,
    winding: i64,
) -> LaurentPoly {
    let composed = delta_companion.compose_power(winding);
    (delta_orbit * &composed).normalized_or_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_braid, parse_pd};

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn stevedore_from_seifert() {
        let a = SeifertMatrix::new(vec![vec![0, 2], vec![1, 0]]).unwrap();
        assert_eq!(alexander_from_seifert(&a), p("2 - 5*t + 2*t^2"));
    }

    #[test]
    fn unknot_from_empty_seifert() {
        assert_eq!(alexander_from_seifert(&SeifertMatrix::empty()), LaurentPoly::one());
    }

    #[test]
    fn trefoil_from_seifert() {
        let a = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        assert_eq!(alexander_from_seifert(&a), p("1 - t + t^2"));
    }

    #[test]
    fn trefoil_routes_agree() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let from_diagram = alexander_from_diagram(&d).unwrap();
        let a = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        assert!(from_diagram.symmetric_equal(&alexander_from_seifert(&a)));
    }

    #[test]
    fn figure8_routes_agree() {
        let d = parse_braid("1 -2 1 -2").unwrap();
        let from_diagram = alexander_from_diagram(&d).unwrap();
        let a = SeifertMatrix::new(vec![vec![1, 1], vec![0, -1]]).unwrap();
        let from_seifert = alexander_from_seifert(&a);
        assert!(from_diagram.symmetric_equal(&from_seifert));
        assert!(from_seifert.symmetric_equal(&p("1 - 3*t + t^2")));
    }

    #[test]
    fn unknot_and_kink_from_diagram() {
        assert_eq!(alexander_from_diagram(&KnotDiagram::unknot()).unwrap(), LaurentPoly::one());
        let kink = parse_braid("1").unwrap();
        assert_eq!(alexander_from_diagram(&kink).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn arf_values() {
        // Δ(-1) = 9 ≡ 1 (mod 8)
        assert_eq!(arf_invariant(&p("2 - 5*t + 2*t^2")).unwrap(), 0);
        assert_eq!(arf_invariant(&LaurentPoly::one()).unwrap(), 0);
        // trefoil: Δ(-1) = 3
        assert_eq!(arf_invariant(&p("1 - t + t^2")).unwrap(), 1);
        // figure-8: Δ(-1) = 5
        assert_eq!(arf_invariant(&p("1 - 3*t + t^2")).unwrap(), 1);
        assert!(arf_invariant(&p("t - 3")).is_err());
    }

    #[test]
    fn satellite_formula() {
        let stevedore = p("2 - 5*t + 2*t^2");
        let trefoil = p("1 - t + t^2");
        assert_eq!(satellite_alexander(&stevedore, &trefoil, 0), stevedore);
        assert_eq!(satellite_alexander(&stevedore, &LaurentPoly::one(), 5), stevedore);
        assert_eq!(satellite_alexander(&LaurentPoly::one(), &trefoil, 1), trefoil);
        let w2 = satellite_alexander(&LaurentPoly::one(), &trefoil, 2);
        assert_eq!(w2, p("1 - t^2 + t^4"));
    }
}
