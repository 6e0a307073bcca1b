use crate::diagram::KnotDiagram;

use super::word::{Letter, Word};
use super::GroupPresentation;

/// Wirtinger presentation of a diagram: one generator per arc, one
/// conjugation relator per crossing, with the redundant relator at the
/// highest-indexed crossing dropped to reach deficiency one.
///
/// At a crossing with incoming under-arc `k`, outgoing under-arc `h` and
/// over-arc `l`, the relator is `g_h g_l^ε g_k^{-1} g_l^{-ε}` with
/// `ε` the crossing sign, i.e. `g_h = g_l^ε g_k g_l^{-ε}`.
pub fn wirtinger(d: &KnotDiagram) -> GroupPresentation {
    if d.crossing_count() == 0 {
        return GroupPresentation::new(1, None, vec![]).expect("free group is valid");
    }
    let arcs = d.arcs();
    let gen_of_arc = |arc: usize| arcs.binary_search(&arc).expect("arc exists");
    let n = arcs.len();
    let mut relators = Vec::with_capacity(d.crossing_count() - 1);
    for i in 0..d.crossing_count() - 1 {
        let (k, h, l) = d.crossing_arcs(i);
        let eps = d.crossings()[i].sign > 0;
        let relator = Word::from_letters([
            Letter::new(gen_of_arc(h)),
            Letter { gen: gen_of_arc(l), inverse: !eps },
            Letter::inv(gen_of_arc(k)),
            Letter { gen: gen_of_arc(l), inverse: eps },
        ]);
        relators.push(relator);
    }
    GroupPresentation::new(n, None, relators).expect("wirtinger relators are in range")
}

#[cfg(test)]
mod tests {
    use super::super::{abelianization_divisors, is_wirtinger_deficiency_one};
    use super::*;
    use crate::diagram::parse_pd;

    fn trefoil() -> KnotDiagram {
        parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()
    }

    #[test]
    fn trefoil_presentation_shape() {
        let p = wirtinger(&trefoil());
        assert_eq!(p.n_generators(), 3);
        assert_eq!(p.relators().len(), 2);
        assert!(is_wirtinger_deficiency_one(&p));
    }

    #[test]
    fn unknot_presentation() {
        let p = wirtinger(&KnotDiagram::unknot());
        assert_eq!(p.n_generators(), 1);
        assert!(p.relators().is_empty());
        assert!(is_wirtinger_deficiency_one(&p));
    }

    #[test]
    fn knot_group_abelianizes_to_z() {
        for d in [trefoil(), trefoil().mirror()] {
            let ab = abelianization_divisors(&wirtinger(&d));
            assert!(ab.torsion.is_empty());
            assert_eq!(ab.free_rank, 1);
        }
    }

    #[test]
    fn kink_gives_trivial_relators() {
        let d = crate::diagram::parse_braid("1").unwrap();
        let p = wirtinger(&d);
        assert_eq!(p.n_generators(), 1);
        assert!(p.relators().is_empty());
    }
}
