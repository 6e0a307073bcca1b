use std::collections::BTreeMap;

use super::{DiagramError, KnotDiagram};

/// A port of a builder vertex: `(vertex index, port 0..3)`.
pub type Port = (usize, u8);

/// Constructs diagrams from 4-valent vertices with explicit planar port
/// wiring, then traces the strands to produce a validated [`KnotDiagram`]
/// with sequential edge labels.
///
/// Each vertex lists its ports in counterclockwise order; the strand
/// through ports 0 and 2 passes *under* the strand through ports 1 and 3.
/// Strands run straight through a vertex (port `p` to port `p + 2`).
/// Connections carry a direction hint (`from → to`) used to orient each
/// component when tracing starts there.
#[derive(Default)]
pub struct DiagramBuilder {
    n_vertices: usize,
    connections: Vec<(Port, Port)>,
    port_taken: BTreeMap<Port, usize>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a crossing vertex; ports 0..3 counterclockwise, under-strand
    /// through ports (0, 2).
    pub fn add_vertex(&mut self) -> usize {
        self.n_vertices += 1;
        self.n_vertices - 1
    }

    pub fn connect(&mut self, from: Port, to: Port) {
        assert!(from.0 < self.n_vertices && to.0 < self.n_vertices, "unknown vertex");
        assert!(from.1 < 4 && to.1 < 4, "ports are 0..3");
        assert!(from != to, "cannot connect a port to itself");
        let id = self.connections.len();
        for p in [from, to] {
            assert!(
                self.port_taken.insert(p, id).is_none(),
                "port {p:?} wired twice"
            );
        }
        self.connections.push((from, to));
    }

    /// Trace all strands and emit the diagram. Every port must be wired.
    pub fn build(&self, name: Option<String>) -> Result<KnotDiagram, DiagramError> {
        for v in 0..self.n_vertices {
            for p in 0..4u8 {
                if !self.port_taken.contains_key(&(v, p)) {
                    return Err(DiagramError::Invalid(format!(
                        "port ({v}, {p}) left unwired"
                    )));
                }
            }
        }
        if self.n_vertices == 0 {
            return Ok(KnotDiagram::unknot());
        }
        // connection id at a given port
        let conn_at = |p: Port| -> usize { self.port_taken[&p] };
        // Walk components; label connections 1.. in traversal order.
        let mut label: Vec<Option<usize>> = vec![None; self.connections.len()];
        let mut next_label = 1usize;
        // in_port per connection: the port the strand flows INTO.
        let mut in_port: Vec<Option<Port>> = vec![None; self.connections.len()];
        for start in 0..self.connections.len() {
            if label[start].is_some() {
                continue;
            }
            // Orient the starting connection along its construction hint.
            let mut conn = start;
            let mut head = self.connections[start].1;
            loop {
                label[conn] = Some(next_label);
                next_label += 1;
                in_port[conn] = Some(head);
                // Pass through the vertex.
                let (v, p) = head;
                let exit = (v, (p + 2) % 4);
                let next_conn = conn_at(exit);
                let (a, b) = self.connections[next_conn];
                // Strand flows out of `exit` into the other endpoint.
                let next_head = if a == exit { b } else { a };
                if next_conn == start {
                    if next_head != self.connections[start].1 {
                        return Err(DiagramError::Invalid(
                            "strand closed against its starting direction".into(),
                        ));
                    }
                    break;
                }
                if label[next_conn].is_some() {
                    return Err(DiagramError::Invalid(
                        "strand trace collided with an already-traced strand".into(),
                    ));
                }
                conn = next_conn;
                head = next_head;
            }
        }
        // Emit PD records: under-in slot is port 0 or 2, whichever is an
        // in-port; then counterclockwise.
        let mut records = Vec::with_capacity(self.n_vertices);
        for v in 0..self.n_vertices {
            let p0_in = in_port[conn_at((v, 0))] == Some((v, 0));
            let under_in: u8 = if p0_in { 0 } else { 2 };
            let mut rec = [0usize; 4];
            for (k, slot) in rec.iter_mut().enumerate() {
                let port = (v, (under_in + k as u8) % 4);
                *slot = label[conn_at(port)].unwrap();
            }
            records.push(rec);
        }
        KnotDiagram::from_edge_records(&records, name)
    }
}
