use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::diagram::KnotDiagram;
use crate::laurent::kernel_basis_int;

use super::{Dyadic, SRElement};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("arc {0} has no label")]
    MissingArc(usize),
    #[error("unknown arc reference {0}")]
    UnknownArc(usize),
    #[error("crossing {0} violates the coloring rule")]
    RuleViolation(usize),
}

/// An SR-coloring of a diagram: a dyadic label per arc, each meridian
/// being sent to `(1, x_arc)`.
///
/// The crossing rule is the specialization of the Wirtinger conjugation
/// `g_h = g_l^ε g_k g_l^{-ε}` to meridian-type elements: at a positive
/// crossing `x_h = 2x_k - x_l`, at a negative one `x_h = (x_k + x_l)/2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SRColoring {
    labels: BTreeMap<usize, Dyadic>,
}

impl SRColoring {
    pub fn new(labels: BTreeMap<usize, Dyadic>) -> Self {
        Self { labels }
    }

    pub fn constant(d: &KnotDiagram, value: Dyadic) -> Self {
        Self { labels: d.arcs().into_iter().map(|a| (a, value.clone())).collect() }
    }

    pub fn label(&self, arc: usize) -> Option<&Dyadic> {
        self.labels.get(&arc)
    }

    pub fn labels(&self) -> &BTreeMap<usize, Dyadic> {
        &self.labels
    }

    /// Check every crossing constraint of `d`.
    pub fn validate(&self, d: &KnotDiagram) -> Result<(), ColoringError> {
        for arc in d.arcs() {
            if !self.labels.contains_key(&arc) {
                return Err(ColoringError::MissingArc(arc));
            }
        }
        for i in 0..d.crossing_count() {
            let (k, h, l) = d.crossing_arcs(i);
            let (xk, xh, xl) = (&self.labels[&k], &self.labels[&h], &self.labels[&l]);
            let ok = if d.crossings()[i].sign > 0 {
                // x_h = 2 x_k - x_l
                *xh == &xk.scale_pow2(1) - xl
            } else {
                // x_h = (x_k + x_l) / 2
                xh.scale_pow2(1) == xk + xl
            };
            if !ok {
                return Err(ColoringError::RuleViolation(i));
            }
        }
        Ok(())
    }

    /// The meridian image of an arc: `(1, x_arc)`.
    pub fn meridian(&self, arc: usize) -> Result<SRElement, ColoringError> {
        self.labels
            .get(&arc)
            .map(|x| SRElement::meridian(x.clone()))
            .ok_or(ColoringError::UnknownArc(arc))
    }
}

/// The solution space of the coloring system over Z[1/2], after
/// quotienting out constant translations: a free-module basis of
/// integer label vectors (first arc pinned to 0, first nonzero entry
/// positive, entries coprime over Z).
#[derive(Clone, Debug)]
pub struct SRColoringSpace {
    arcs: Vec<usize>,
    basis: Vec<Vec<BigInt>>,
}

impl SRColoringSpace {
    /// Rank over Z[1/2] of nonconstant solutions modulo translation.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn arcs(&self) -> &[usize] {
        &self.arcs
    }

    pub fn basis_coloring(&self, i: usize) -> SRColoring {
        self.coloring_from(&self.basis[i])
    }

    fn coloring_from(&self, v: &[BigInt]) -> SRColoring {
        SRColoring::new(
            self.arcs
                .iter()
                .zip(v)
                .map(|(&a, x)| (a, Dyadic::from_int(x.clone())))
                .collect(),
        )
    }

    /// A surjective coloring, if one exists. Basis vectors are tried
    /// first, then small integer combinations (coefficients 0..3 with
    /// signs); ranks above one do not occur for knots with a single
    /// `(t-2)`-primary summand, which covers the shipped corpus.
    pub fn surjective_witness(&self, d: &KnotDiagram) -> Option<SRColoring> {
        let mut candidates: Vec<Vec<BigInt>> = self.basis.clone();
        if self.basis.len() > 1 {
            for i in 0..self.basis.len() {
                for j in i + 1..self.basis.len() {
                    for (ci, cj) in [(1i64, 1i64), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1)] {
                        let v: Vec<BigInt> = self.basis[i]
                            .iter()
                            .zip(&self.basis[j])
                            .map(|(a, b)| a * BigInt::from(ci) + b * BigInt::from(cj))
                            .collect();
                        candidates.push(v);
                    }
                }
            }
        }
        for v in candidates {
            let col = self.coloring_from(&v);
            debug_assert!(col.validate(d).is_ok());
            if is_surjective_coloring(d, &col).unwrap_or(false) {
                return Some(col);
            }
        }
        None
    }
}

/// Solve the coloring system of a diagram over Z[1/2].
///
/// The linear system is solved by an integer Smith normal form; the
/// kernel basis it produces is a saturated sublattice, hence also a
/// basis over Z[1/2] where every power of 2 is a unit. Constant
/// colorings always solve the system and are quotiented out by pinning
/// the first arc's label to 0.
pub fn sr_coloring_solve(d: &KnotDiagram) -> SRColoringSpace {
    let arcs = d.arcs();
    if arcs.len() <= 1 {
        return SRColoringSpace { arcs, basis: vec![] };
    }
    let idx: BTreeMap<usize, usize> = arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let n = arcs.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(d.crossing_count() + 1);
    for i in 0..d.crossing_count() {
        let (k, h, l) = d.crossing_arcs(i);
        let mut row = vec![BigInt::zero(); n];
        if d.crossings()[i].sign > 0 {
            // x_h - 2 x_k + x_l = 0
            row[idx[&h]] += 1;
            row[idx[&k]] -= 2;
            row[idx[&l]] += 1;
        } else {
            // 2 x_h - x_k - x_l = 0
            row[idx[&h]] += 2;
            row[idx[&k]] -= 1;
            row[idx[&l]] -= 1;
        }
        rows.push(row);
    }
    // Kill translations: pin the first arc.
    let mut pin = vec![BigInt::zero(); n];
    pin[0] = BigInt::one();
    rows.push(pin);

    let mut basis = kernel_basis_int(&rows);
    for v in &mut basis {
        if let Some(first) = v.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in v.iter_mut() {
                    *x = -&*x;
                }
            }
        }
    }
    basis.sort();
    SRColoringSpace { arcs, basis }
}

/// Surjectivity of the induced representation `π₁ ↠ SR`.
///
/// The meridian images `(1, x_i)` generate all of SR iff some label
/// difference is nonzero and the Z[1/2]-submodule generated by the
/// differences is everything. That submodule is `g·Z[1/2]` for `g` the
/// gcd of the odd parts of the nonzero differences, so the test is
/// `g = 1`.
pub fn is_surjective_coloring(
    d: &KnotDiagram,
    col: &SRColoring,
) -> Result<bool, ColoringError> {
    col.validate(d)?;
    let arcs = d.arcs();
    if arcs.is_empty() {
        return Ok(false);
    }
    let base = &col.labels()[&arcs[0]];
    let mut gcd = BigInt::zero();
    for a in &arcs[1..] {
        let diff = &col.labels()[a] - base;
        if !diff.is_zero() {
            gcd = gcd.gcd(&diff.odd_part());
        }
    }
    Ok(gcd.is_one())
}

/// Image of a loop word (signed arc meridians) under the representation
/// `meridian of arc ↦ (1, x_arc)`.
pub fn evaluate_loop(
    d: &KnotDiagram,
    col: &SRColoring,
    loop_word: &[(usize, i8)],
) -> Result<SRElement, ColoringError> {
    col.validate(d)?;
    let mut acc = SRElement::identity();
    for &(arc, sign) in loop_word {
        let m = col.meridian(arc)?;
        acc = acc.mul(&if sign >= 0 { m } else { m.inv() });
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_braid, parse_pd};

    fn trefoil() -> KnotDiagram {
        parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()
    }

    #[test]
    fn trefoil_has_only_constant_colorings() {
        let space = sr_coloring_solve(&trefoil());
        assert_eq!(space.rank(), 0);
        assert!(space.surjective_witness(&trefoil()).is_none());
    }

    #[test]
    fn unknot_has_only_constant_colorings() {
        let space = sr_coloring_solve(&KnotDiagram::unknot());
        assert_eq!(space.rank(), 0);
    }

    #[test]
    fn figure8_has_only_constant_colorings() {
        let d = parse_braid("1 -2 1 -2").unwrap();
        assert_eq!(sr_coloring_solve(&d).rank(), 0);
    }

    #[test]
    fn constant_coloring_not_surjective() {
        let d = trefoil();
        let col = SRColoring::constant(&d, Dyadic::from_int(3));
        assert!(col.validate(&d).is_ok());
        assert_eq!(is_surjective_coloring(&d, &col), Ok(false));
    }

    #[test]
    fn loop_evaluation() {
        let d = trefoil();
        let col = SRColoring::constant(&d, Dyadic::from_int(1));
        let arcs = d.arcs();
        let m = evaluate_loop(&d, &col, &[(arcs[0], 1)]).unwrap();
        assert_eq!(m, SRElement::meridian(Dyadic::from_int(1)));
        let e = evaluate_loop(&d, &col, &[(arcs[0], 1), (arcs[0], -1)]).unwrap();
        assert!(e.is_identity());
        assert!(evaluate_loop(&d, &col, &[(999, 1)]).is_err());
    }

    #[test]
    fn scaled_differences_with_common_odd_factor_fail() {
        // Labels 0 and 3 on a 2-arc... use the trefoil's arcs with a
        // synthetic coloring that satisfies no constraints: validation
        // must reject it before the gcd test runs.
        let d = trefoil();
        let arcs = d.arcs();
        let mut labels = BTreeMap::new();
        for (i, &a) in arcs.iter().enumerate() {
            labels.insert(a, Dyadic::from_int(3 * i as i64));
        }
        let col = SRColoring::new(labels);
        assert!(is_surjective_coloring(&d, &col).is_err());
    }
}
