use std::collections::BTreeMap;

use super::{DiagramError, KnotDiagram};

/// A multi-component diagram together with the component index of every
/// edge, as needed for multivariable Alexander computations.
#[derive(Clone, Debug)]
pub struct LinkDiagram {
    diagram: KnotDiagram,
    component_of_edge: BTreeMap<usize, usize>,
}

impl LinkDiagram {
    pub fn new(diagram: KnotDiagram) -> Result<Self, DiagramError> {
        if diagram.n_components() < 2 {
            return Err(DiagramError::WrongComponentCount {
                expected: 2,
                found: diagram.n_components(),
            });
        }
        let component_of_edge = diagram
            .edges()
            .into_iter()
            .map(|e| (e, diagram.component_of_edge(e).unwrap()))
            .collect();
        Ok(Self { diagram, component_of_edge })
    }

    pub fn diagram(&self) -> &KnotDiagram {
        &self.diagram
    }

    pub fn n_components(&self) -> usize {
        self.diagram.n_components()
    }

    pub fn component_of_edge(&self, edge: usize) -> Option<usize> {
        self.component_of_edge.get(&edge).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_braid;

    #[test]
    fn hopf_is_a_two_component_link() {
        let d = parse_braid("1 1").unwrap();
        let l = LinkDiagram::new(d).unwrap();
        assert_eq!(l.n_components(), 2);
    }

    #[test]
    fn knots_are_rejected() {
        let d = parse_braid("1 1 1").unwrap();
        assert!(LinkDiagram::new(d).is_err());
    }
}
