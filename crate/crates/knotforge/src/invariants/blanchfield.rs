use itertools::Itertools;

use crate::laurent::{
    det_laurent, smith_normal_form_qlaurent, LaurentPoly, QLaurent, RationalFunctionModLambda,
};

use super::alexander::seifert_presentation_matrix;
use super::{InvariantError, SeifertMatrix};

/// The classical Blanchfield form of a knot with Seifert matrix `A`:
/// the Alexander module `M = Λⁿ / (At - Aᵗ)Λⁿ` (columns of the
/// presentation matrix are the relations) with the sesquilinear pairing
///
/// ```text
/// Bℓ(u, v) = ū · (t-1)(At - Aᵗ)^{-1} · v  ∈  Q(t)/Λ,
/// ```
///
/// conjugate-linear in the first slot under `t ↦ t^{-1}`. The pairing is
/// hermitian: `Bℓ(u, v) = conj(Bℓ(v, u))`; this is verified exactly on
/// construction.
#[derive(Clone, Debug)]
pub struct BlanchfieldForm {
    presentation: Vec<Vec<LaurentPoly>>,
    pairing: Vec<Vec<RationalFunctionModLambda>>,
    order: LaurentPoly,
}

impl BlanchfieldForm {
    pub fn rank(&self) -> usize {
        self.presentation.len()
    }

    pub fn presentation(&self) -> &[Vec<LaurentPoly>] {
        &self.presentation
    }

    pub fn pairing_matrix(&self) -> &[Vec<RationalFunctionModLambda>] {
        &self.pairing
    }

    /// Order of the full module: `det(At - Aᵗ)`, normalized (the
    /// Alexander polynomial).
    pub fn module_order(&self) -> &LaurentPoly {
        &self.order
    }

    /// `Bℓ(u, v)` for coordinate vectors over Λ.
    pub fn pairing(
        &self,
        u: &[LaurentPoly],
        v: &[LaurentPoly],
    ) -> Result<RationalFunctionModLambda, InvariantError> {
        let n = self.rank();
        if u.len() != n || v.len() != n {
            return Err(InvariantError::WrongRank {
                expected: n,
                found: if u.len() != n { u.len() } else { v.len() },
            });
        }
        let mut acc = RationalFunctionModLambda::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            let ui_conj = ui.involute();
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                acc = &acc + &self.pairing[i][j].scale(&(&ui_conj * vj));
            }
        }
        Ok(acc)
    }
}

/// Build the Blanchfield form from a Seifert matrix. Fails when
/// `det(At - Aᵗ) = 0`.
pub fn blanchfield_form(a: &SeifertMatrix) -> Result<BlanchfieldForm, InvariantError> {
    let p = seifert_presentation_matrix(a);
    let n = p.len();
    let det = det_laurent(&p);
    if det.is_zero() {
        return Err(InvariantError::Singular);
    }
    let tm1: LaurentPoly = "t - 1".parse().unwrap();
    // (t-1)·P^{-1} = (t-1)·adj(P)/det; adj(P)[i][j] is the (j,i) cofactor.
    let mut pairing = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let minor: Vec<Vec<LaurentPoly>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| p[r][c].clone())
                        .collect()
                })
                .collect();
            let mut cof = det_laurent(&minor);
            if (i + j) % 2 == 1 {
                cof = -&cof;
            }
            row.push(RationalFunctionModLambda::new(&tm1 * &cof, det.clone())?);
        }
        pairing.push(row);
    }
    let form = BlanchfieldForm {
        presentation: p,
        pairing,
        order: det.normalize().expect("nonzero determinant"),
    };
    // Hermitian property, exactly.
    for i in 0..n {
        for j in 0..n {
            let conj = form.pairing[j][i].conjugate();
            if !form.pairing[i][j].eq_mod_lambda(&conj) {
                return Err(InvariantError::BadSeifertMatrix(format!(
                    "pairing is not hermitian at ({i}, {j})"
                )));
            }
        }
    }
    Ok(form)
}

/// Test whether the submodule generated by `gens` is a metabolizer:
/// all pairings among the generators vanish in Q(t)/Λ (P ⊆ P^⊥) and the
/// order condition `|P| · |P̄| ≐ |M|` holds, orders being divisor
/// products of Smith normal forms over Q[t^±1].
pub fn is_metabolizer(
    form: &BlanchfieldForm,
    gens: &[Vec<LaurentPoly>],
) -> Result<bool, InvariantError> {
    let n = form.rank();
    for g in gens {
        if g.len() != n {
            return Err(InvariantError::WrongRank { expected: n, found: g.len() });
        }
    }
    if n == 0 {
        return Ok(true); // the zero module is its own metabolizer
    }
    // Isotropy of the generating set.
    for (g1, g2) in gens.iter().cartesian_product(gens.iter()) {
        if !form.pairing(g1, g2)?.is_zero_mod_lambda() {
            return Ok(false);
        }
    }
    // Order condition through |M/N|: present M/N by [P | gens].
    let quotient_order = order_of_quotient(form, gens);
    let Some(sub_order) = form.module_order().div_exact(&quotient_order) else {
        // |M/N| must divide |M|; a non-division can only come from the
        // rational-shadow normalization and means the condition fails.
        return Ok(false);
    };
    let conj = sub_order.involute();
    let product = (&sub_order * &conj).normalized_or_zero();
    Ok(product == *form.module_order())
}

/// Order of `M / ⟨gens⟩` over Q[t^±1]: the product of the nonzero SNF
/// divisors of the augmented presentation `[P | gens]`, as a primitive
/// integer polynomial.
fn order_of_quotient(form: &BlanchfieldForm, gens: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = form.rank();
    let mut m: Vec<Vec<LaurentPoly>> = form.presentation.to_vec();
    for row in m.iter_mut() {
        row.reserve(gens.len());
    }
    for g in gens {
        for (i, row) in m.iter_mut().enumerate() {
            row.push(g[i].clone());
        }
    }
    let snf = smith_normal_form_qlaurent(&m);
    let mut order = LaurentPoly::one();
    for d in &snf.divisors {
        debug_assert!(!d.is_zero(), "P is nonsingular, so M/N is torsion");
        order = &order * d;
    }
    order.primitive_part()
}

/// Membership of `v` in the submodule of `M` generated by `w` (plus the
/// relations), decided over Q[t^±1].
fn in_cyclic_submodule(
    form: &BlanchfieldForm,
    v: &[LaurentPoly],
    w: &[LaurentPoly],
) -> bool {
    let n = form.rank();
    // Solve [w | P] x = v over Q[t^±1] via the Smith normal form.
    let mut m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            let mut row = Vec::with_capacity(1 + n);
            row.push(w[i].clone());
            row.extend(form.presentation[i].iter().cloned());
            row
        })
        .collect();
    let snf = smith_normal_form_qlaurent(&mut m.drain(..).collect::<Vec<_>>());
    // U v must be divisible rowwise by the diagonal.
    let qv: Vec<QLaurent> = v.iter().map(QLaurent::from_int).collect();
    let uv: Vec<QLaurent> = (0..n)
        .map(|i| {
            let mut acc = QLaurent::zero();
            for (k, x) in qv.iter().enumerate() {
                acc = &acc + &(&snf.u[i][k] * x);
            }
            acc
        })
        .collect();
    for (i, val) in uv.iter().enumerate() {
        match snf.diagonal.get(i) {
            Some(d) if !d.is_zero() => {
                if val.div_exact(d).is_none() {
                    return false;
                }
            }
            _ => {
                if !val.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

fn same_submodule(form: &BlanchfieldForm, v: &[LaurentPoly], w: &[LaurentPoly]) -> bool {
    in_cyclic_submodule(form, v, w) && in_cyclic_submodule(form, w, v)
}

/// Exhaustive scan over cyclic submodules generated by coordinate
/// vectors with entries of degree ≤ `bound` and coefficient height ≤
/// `bound`, returning one generator per distinct metabolizer found.
///
/// For the rank-0 form the zero submodule is the unique metabolizer and
/// is reported as a single empty generator vector.
pub fn metabolizer_scan(
    form: &BlanchfieldForm,
    bound: u32,
) -> Result<Vec<Vec<LaurentPoly>>, InvariantError> {
    assert!(bound >= 1, "scan bound must be at least 1");
    let n = form.rank();
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    // All polynomials with exponents 0..=bound, |coefficients| ≤ bound.
    let height = bound as i64;
    let mut polys: Vec<LaurentPoly> = vec![LaurentPoly::zero()];
    for _ in 0..=bound {
        let mut next = Vec::with_capacity(polys.len() * (2 * bound as usize + 1));
        for p in &polys {
            for c in -height..=height {
                let shifted = p.shifted(1);
                next.push(&shifted + &LaurentPoly::constant(c));
            }
        }
        polys = next;
    }
    polys.sort();
    polys.dedup();

    let mut found: Vec<Vec<LaurentPoly>> = Vec::new();
    let mut vector = vec![LaurentPoly::zero(); n];
    scan_rec(form, &polys, &mut vector, 0, &mut found)?;
    Ok(found)
}

fn scan_rec(
    form: &BlanchfieldForm,
    polys: &[LaurentPoly],
    vector: &mut Vec<LaurentPoly>,
    coord: usize,
    found: &mut Vec<Vec<LaurentPoly>>,
) -> Result<(), InvariantError> {
    if coord == vector.len() {
        let gens = std::slice::from_ref(&*vector);
        if is_metabolizer(form, gens)? && !found.iter().any(|w| same_submodule(form, vector, w)) {
            found.push(vector.clone());
        }
        return Ok(());
    }
    for p in polys {
        vector[coord] = p.clone();
        scan_rec(form, polys, vector, coord + 1, found)?;
    }
    vector[coord] = LaurentPoly::zero();
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn stevedore_form() -> BlanchfieldForm {
        let a = SeifertMatrix::new(vec![vec![0, 2], vec![1, 0]]).unwrap();
        blanchfield_form(&a).unwrap()
    }

    #[test]
    fn stevedore_pairing_matrix() {
        let form = stevedore_form();
        // Diagonal pairings vanish; Bℓ(α̃, β̃) = (t-1)/(t-2) mod Λ.
        assert!(form.pairing_matrix()[0][0].is_zero_mod_lambda());
        assert!(form.pairing_matrix()[1][1].is_zero_mod_lambda());
        let expect =
            RationalFunctionModLambda::new(p("t - 1"), p("t - 2")).unwrap();
        assert!(form.pairing_matrix()[0][1].eq_mod_lambda(&expect));
    }

    #[test]
    fn generators_are_metabolizers() {
        let form = stevedore_form();
        let alpha = vec![LaurentPoly::one(), LaurentPoly::zero()];
        let beta = vec![LaurentPoly::zero(), LaurentPoly::one()];
        assert!(is_metabolizer(&form, &[alpha.clone()]).unwrap());
        assert!(is_metabolizer(&form, &[beta]).unwrap());
        // α̃ + β̃ pairs with itself to 3(t-1)²/((t-2)(2t-1)) ≠ 0 mod Λ.
        let sum = vec![LaurentPoly::one(), LaurentPoly::one()];
        assert!(!is_metabolizer(&form, &[sum]).unwrap());
    }

    #[test]
    fn unknot_form_is_empty() {
        let form = blanchfield_form(&SeifertMatrix::empty()).unwrap();
        assert_eq!(form.rank(), 0);
        let found = metabolizer_scan(&form, 2).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].is_empty());
    }

    #[test]
    fn trefoil_has_no_metabolizer() {
        let a = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        let form = blanchfield_form(&a).unwrap();
        let found = metabolizer_scan(&form, 1).unwrap();
        assert!(found.is_empty());
    }
}
