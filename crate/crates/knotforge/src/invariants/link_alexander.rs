use crate::diagram::LinkDiagram;
use crate::group::{alexander_matrix_two_variable, wirtinger};
use crate::laurent::{det_multi, MultiLaurentPoly};

use super::InvariantError;

/// Verdict of the two-variable Alexander computation for a 2-component
/// link.
///
/// The nontriviality convention is the slice obstruction one: the link
/// polynomial of a slice 2-component link vanishes identically, so
/// `nontrivial` means the certificate polynomial is not zero. A nonzero
/// monomial certificate (the Hopf link gives `1`) therefore counts as
/// nontrivial; `is_monomial` reports that boundary case separately.
#[derive(Clone, Debug)]
pub struct LinkAlexanderVerdict {
    pub nontrivial: bool,
    pub is_monomial: bool,
    pub certificate: MultiLaurentPoly,
}

/// Compute the two-variable Alexander polynomial of a 2-component link
/// through Fox calculus (meridians of the components mapping to `x` and
/// `y`), deleting one generator column and dividing the maximal minor by
/// the standard correction `φ(g) - 1` for the deleted generator `g`.
///
/// Both a component-0 and a component-1 column are used and the two
/// corrected quotients must agree up to a monomial unit.
pub fn link_alexander_nontrivial(
    link: &LinkDiagram,
) -> Result<LinkAlexanderVerdict, InvariantError> {
    let d = link.diagram();
    if d.n_components() != 2 {
        return Err(InvariantError::Diagram(
            crate::diagram::DiagramError::WrongComponentCount {
                expected: 2,
                found: d.n_components(),
            },
        ));
    }
    let p = wirtinger(d);
    let arcs = d.arcs();
    debug_assert_eq!(arcs.len(), p.n_generators());
    let comp_of_gen: Vec<usize> = arcs
        .iter()
        .map(|&a| link.component_of_edge(a).expect("arc representative is an edge"))
        .collect();
    if arcs.len() != d.crossing_count() {
        return Err(InvariantError::Diagram(crate::diagram::DiagramError::Invalid(
            "a component passes over every crossing; its meridian column cannot be \
             normalized (redraw with a kink)"
                .into(),
        )));
    }
    let wx: Vec<i64> = comp_of_gen.iter().map(|&c| if c == 0 { 1 } else { 0 }).collect();
    let wy: Vec<i64> = comp_of_gen.iter().map(|&c| if c == 0 { 0 } else { 1 }).collect();
    let m = alexander_matrix_two_variable(&p, &wx, &wy)?;

    let correction = |gen: usize| -> MultiLaurentPoly {
        let var = if comp_of_gen[gen] == 0 {
            MultiLaurentPoly::x()
        } else {
            MultiLaurentPoly::y()
        };
        &var - &MultiLaurentPoly::one()
    };
    let minor_without = |gen: usize| -> MultiLaurentPoly {
        let sub: Vec<Vec<MultiLaurentPoly>> = m
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != gen)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        det_multi(&sub)
    };

    let j0 = comp_of_gen.iter().position(|&c| c == 0).expect("component 0 has an arc");
    let j1 = comp_of_gen.iter().position(|&c| c == 1).expect("component 1 has an arc");
    let mut quotients = Vec::new();
    for j in [j0, j1] {
        let d_j = minor_without(j);
        if d_j.is_zero() {
            quotients.push(MultiLaurentPoly::zero());
            continue;
        }
        let q = d_j.div_exact(&correction(j)).ok_or_else(|| {
            InvariantError::Algebra(crate::laurent::AlgebraError::InexactDivision)
        })?;
        quotients.push(q.normalized_or_zero());
    }
    if quotients[0] != quotients[1] {
        return Err(InvariantError::Diagram(crate::diagram::DiagramError::Invalid(
            format!(
                "column-deletion cross-check failed: {} vs {}",
                quotients[0], quotients[1]
            ),
        )));
    }
    let certificate = quotients.swap_remove(0);
    Ok(LinkAlexanderVerdict {
        nontrivial: !certificate.is_zero(),
        is_monomial: certificate.is_monomial_unit(),
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_braid, LinkDiagram};

    #[test]
    fn hopf_link_is_nontrivial_with_unit_certificate() {
        let l = LinkDiagram::new(parse_braid("1 1").unwrap()).unwrap();
        let v = link_alexander_nontrivial(&l).unwrap();
        assert!(v.nontrivial);
        assert!(v.is_monomial);
        assert_eq!(v.certificate, MultiLaurentPoly::one());
    }

    #[test]
    fn two_component_unlink_is_trivial() {
        // Split unlink, one curl per circle so every component has an arc
        // with an under-passage.
        let d = crate::diagram::parse_pd("X(1,2,2,1) X(3,4,4,3)").unwrap();
        let l = LinkDiagram::new(d).unwrap();
        let v = link_alexander_nontrivial(&l).unwrap();
        assert!(!v.nontrivial);
        assert!(v.certificate.is_zero());
    }

    #[test]
    fn all_over_component_is_rejected_with_guidance() {
        // σ₁σ₁⁻¹: one circle passes over both crossings.
        let l = LinkDiagram::new(parse_braid("1 -1").unwrap()).unwrap();
        assert!(link_alexander_nontrivial(&l).is_err());
    }

    #[test]
    fn rejects_knots() {
        assert!(LinkDiagram::new(parse_braid("1 1 1").unwrap()).is_err());
    }
}
