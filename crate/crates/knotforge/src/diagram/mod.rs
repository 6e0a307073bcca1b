//! Knot and link diagrams in PD (planar diagram) form, Gauss codes,
//! braid words, and the diagram-level satellite construction.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * A crossing record `X(a, b, c, d)` lists the four incident edge
//!   labels starting with the incoming under-strand edge `a` and
//!   proceeding counterclockwise. The under-strand runs `a → c`.
//! * The crossing sign is `+1` when the over-strand enters at slot `b`
//!   (the slot counterclockwise-next from `a`) and `-1` when it enters
//!   at slot `d`. Signs are recomputable from the records by tracing;
//!   a stored sign that disagrees is a validation error.
//! * Edge labels are positive integers, each appearing exactly twice.

mod braid;
mod builder;
mod gauss;
mod link;
mod pattern;
mod pd;
mod satellite;

pub use braid::parse_braid;
pub use builder::DiagramBuilder;
pub use gauss::{emit_gauss, parse_gauss};
pub use link::LinkDiagram;
pub use pattern::{parse_pattern, PatternDiagram};
pub use pd::{emit_pd, parse_pd, parse_pd_blocks};
pub use satellite::satellite_2cable;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("syntax error at byte {pos}: {reason}")]
    Syntax { pos: usize, reason: String },
    #[error("empty input")]
    Empty,
    #[error("edge {0} appears {1} times, expected exactly 2")]
    EdgeCount(usize, usize),
    #[error("inconsistent strand orientation at edge {0}")]
    InconsistentOrientation(usize),
    #[error("stored sign at crossing {0} does not match the rotation convention")]
    SignMismatch(usize),
    #[error("expected a knot (1 component), found {0} components")]
    NotAKnot(usize),
    #[error("expected a {expected}-component link, found {found}")]
    WrongComponentCount { expected: usize, found: usize },
    #[error("pattern must have exactly 2 strands, found {0}")]
    BadStrandCount(usize),
    #[error("unknown edge or arc reference {0}")]
    UnknownEdge(usize),
    #[error("{0}")]
    Invalid(String),
}

/// One crossing of a diagram: edge labels in PD rotation order and the
/// crossing sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Crossing {
    /// `[a, b, c, d]`: incoming under-strand first, counterclockwise.
    pub edges: [usize; 4],
    /// `+1` or `-1`, consistent with the rotation convention.
    pub sign: i8,
}

/// A validated planar diagram of a knot or link.
///
/// Construction always traces the underlying curve(s); the trace fixes
/// edge orientations, the component decomposition, arcs (over-strand
/// classes) and recomputes every crossing sign.
#[derive(Clone, PartialEq, Eq)]
pub struct KnotDiagram {
    crossings: Vec<Crossing>,
    n_components: usize,
    name: Option<String>,
    trace: Trace,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct Trace {
    /// Per crossing, the slot (1 or 3) where the over-strand enters.
    pub over_in_slot: Vec<u8>,
    /// Edges of each component in traversal order.
    pub component_edges: Vec<Vec<usize>>,
    /// Component index of each edge.
    pub component_of_edge: BTreeMap<usize, usize>,
    /// Arc representative (smallest edge label of the over-strand class)
    /// of each edge.
    pub arc_of_edge: BTreeMap<usize, usize>,
}

impl KnotDiagram {
    /// The 0-crossing unknot diagram.
    pub fn unknot() -> Self {
        Self {
            crossings: vec![],
            n_components: 1,
            name: Some("unknot".to_string()),
            trace: Trace::default(),
        }
    }

    /// Build and validate a diagram from bare records; signs are
    /// recomputed from the rotation convention by tracing.
    pub fn from_edge_records(records: &[[usize; 4]], name: Option<String>) -> Result<Self, DiagramError> {
        let trace = trace_records(records)?;
        let crossings = records
            .iter()
            .zip(&trace.over_in_slot)
            .map(|(&edges, &oi)| Crossing { edges, sign: if oi == 1 { 1 } else { -1 } })
            .collect();
        let n_components = trace.component_edges.len();
        Ok(Self { crossings, n_components, name, trace })
    }

    /// Build from records with stored signs; the stored sign of every
    /// crossing must match the recomputed one.
    pub fn from_crossings(crossings: Vec<Crossing>, name: Option<String>) -> Result<Self, DiagramError> {
        let records: Vec<[usize; 4]> = crossings.iter().map(|c| c.edges).collect();
        let d = Self::from_edge_records(&records, name)?;
        for (i, (given, computed)) in crossings.iter().zip(d.crossings.iter()).enumerate() {
            if given.sign != computed.sign {
                return Err(DiagramError::SignMismatch(i));
            }
        }
        Ok(d)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn n_components(&self) -> usize {
        self.n_components
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn is_knot(&self) -> bool {
        self.n_components == 1
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Switch every crossing (the mirror image). An involution.
    pub fn mirror(&self) -> Self {
        let records: Vec<Crossing> = self
            .crossings
            .iter()
            .zip(&self.trace.over_in_slot)
            .map(|(c, &oi)| {
                let r = oi as usize;
                let edges = [
                    c.edges[r],
                    c.edges[(r + 1) % 4],
                    c.edges[(r + 2) % 4],
                    c.edges[(r + 3) % 4],
                ];
                Crossing { edges, sign: -c.sign }
            })
            .collect();
        let name = self.name.as_ref().map(|n| format!("mirror({n})"));
        Self::from_crossings(records, name).expect("mirror of a valid diagram is valid")
    }

    /// All edge labels, sorted.
    pub fn edges(&self) -> Vec<usize> {
        self.trace.component_of_edge.keys().copied().collect()
    }

    /// Arc representatives (over-strand classes), sorted. Empty for the
    /// 0-crossing unknot, which has a single arc handled by callers.
    pub fn arcs(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.trace.arc_of_edge.values().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn arc_of_edge(&self, edge: usize) -> Option<usize> {
        self.trace.arc_of_edge.get(&edge).copied()
    }

    pub fn component_of_edge(&self, edge: usize) -> Option<usize> {
        self.trace.component_of_edge.get(&edge).copied()
    }

    /// Edges of component `i` in traversal order.
    pub fn component_edges(&self, i: usize) -> &[usize] {
        &self.trace.component_edges[i]
    }

    pub(crate) fn over_in_slot(&self, crossing: usize) -> u8 {
        self.trace.over_in_slot[crossing]
    }

    /// The occurrence `(crossing, slot)` into which `edge` flows.
    pub fn edge_head(&self, edge: usize) -> Option<(usize, u8)> {
        self.edge_occurrence(edge, true)
    }

    /// The occurrence `(crossing, slot)` out of which `edge` flows.
    pub fn edge_tail(&self, edge: usize) -> Option<(usize, u8)> {
        self.edge_occurrence(edge, false)
    }

    fn edge_occurrence(&self, edge: usize, head: bool) -> Option<(usize, u8)> {
        for (x, c) in self.crossings.iter().enumerate() {
            let oi = self.trace.over_in_slot[x];
            let ins = [0u8, oi];
            for s in 0..4u8 {
                if c.edges[s as usize] == edge && ins.contains(&s) == head {
                    return Some((x, s));
                }
            }
        }
        None
    }

    /// Counterclockwise face boundaries of the underlying 4-valent plane
    /// graph, as cycles of `(edge, along_orientation)` sides. A diagram
    /// drawn in the plane has exactly `crossings + 2` faces.
    pub fn faces(&self) -> Vec<Vec<(usize, bool)>> {
        // Darts: (edge, forward). A forward dart enters the edge's head.
        let mut visited: std::collections::BTreeSet<(usize, bool)> = Default::default();
        let mut faces = Vec::new();
        let darts: Vec<(usize, bool)> = self
            .edges()
            .into_iter()
            .flat_map(|e| [(e, true), (e, false)])
            .collect();
        for &start in &darts {
            if visited.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut dart = start;
            loop {
                visited.insert(dart);
                face.push(dart);
                let (e, fwd) = dart;
                let (x, s) = if fwd {
                    self.edge_head(e).expect("edge exists")
                } else {
                    self.edge_tail(e).expect("edge exists")
                };
                // Left-face successor: leave through the CCW-next slot.
                let s2 = (s + 1) % 4;
                let e2 = self.crossings[x].edges[s2 as usize];
                // The new dart leaves x: forward iff (x, s2) is e2's tail.
                let fwd2 = self.edge_tail(e2) == Some((x, s2));
                dart = (e2, fwd2);
                if dart == start {
                    break;
                }
            }
            faces.push(face);
        }
        faces
    }

    /// Whether the rotation system is planar (Euler characteristic 2).
    pub fn is_planar(&self) -> bool {
        self.crossing_count() == 0 || self.faces().len() == self.crossing_count() + 2
    }

    /// At crossing `i`: (incoming under arc, outgoing under arc, over arc).
    pub fn crossing_arcs(&self, i: usize) -> (usize, usize, usize) {
        let c = &self.crossings[i];
        let arc = |e: usize| self.trace.arc_of_edge[&e];
        (arc(c.edges[0]), arc(c.edges[2]), arc(c.edges[1]))
    }
}

impl fmt::Debug for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "KnotDiagram({}, {} crossings, {} component(s))",
            self.name.as_deref().unwrap_or("unnamed"),
            self.crossings.len(),
            self.n_components
        )
    }
}

/// Trace the curve(s) through the records: orient every edge, decompose
/// into components, determine over-strand entry slots and arcs.
fn trace_records(records: &[[usize; 4]]) -> Result<Trace, DiagramError> {
    if records.is_empty() {
        return Ok(Trace::default());
    }
    // Occurrences of each edge label.
    let mut occ: BTreeMap<usize, Vec<(usize, u8)>> = BTreeMap::new();
    for (x, rec) in records.iter().enumerate() {
        for (s, &e) in rec.iter().enumerate() {
            if e == 0 {
                return Err(DiagramError::Invalid("edge labels must be positive".into()));
            }
            occ.entry(e).or_default().push((x, s as u8));
        }
    }
    for (&e, v) in &occ {
        if v.len() != 2 {
            return Err(DiagramError::EdgeCount(e, v.len()));
        }
    }

    // Direction states per occurrence: None / Some(IN=true, OUT=false).
    let mut state: BTreeMap<(usize, u8), bool> = BTreeMap::new();
    let mut queue: Vec<((usize, u8), bool)> = Vec::new();
    for (x, _) in records.iter().enumerate() {
        queue.push(((x, 0), true)); // slot a: in
        queue.push(((x, 2), false)); // slot c: out
    }
    let other_occurrence = |e: usize, this: (usize, u8)| -> (usize, u8) {
        let v = &occ[&e];
        if v[0] == this {
            v[1]
        } else {
            v[0]
        }
    };
    loop {
        while let Some((pos, dir)) = queue.pop() {
            if let Some(&prev) = state.get(&pos) {
                if prev != dir {
                    let e = records[pos.0][pos.1 as usize];
                    return Err(DiagramError::InconsistentOrientation(e));
                }
                continue;
            }
            state.insert(pos, dir);
            let (x, s) = pos;
            let e = records[x][s as usize];
            // The edge's other occurrence has the opposite role.
            let v = &occ[&e];
            if v[0] == v[1] {
                // Degenerate: both occurrences identical cannot happen
                // (same crossing+slot twice would mean duplicate slots).
                return Err(DiagramError::InconsistentOrientation(e));
            }
            queue.push((other_occurrence(e, pos), !dir));
            // Over slots 1 and 3 of a crossing take opposite roles.
            if s == 1 || s == 3 {
                let mate = if s == 1 { 3 } else { 1 };
                queue.push(((x, mate), !dir));
            }
        }
        // Components passing only over everything have free orientation:
        // fix the smallest undecided occurrence as IN.
        let undecided = records
            .iter()
            .enumerate()
            .flat_map(|(x, _)| [1u8, 3u8].into_iter().map(move |s| (x, s)))
            .find(|pos| !state.contains_key(pos));
        match undecided {
            Some(pos) => queue.push((pos, true)),
            None => break,
        }
    }

    // Per-crossing over-entry slot.
    let mut over_in_slot = Vec::with_capacity(records.len());
    for (x, _) in records.iter().enumerate() {
        let s1 = state[&(x, 1)];
        let s3 = state[&(x, 3)];
        if s1 == s3 {
            return Err(DiagramError::InconsistentOrientation(records[x][1]));
        }
        over_in_slot.push(if s1 { 1 } else { 3 });
    }

    // Walk components in edge-label order.
    let mut component_of_edge: BTreeMap<usize, usize> = BTreeMap::new();
    let mut component_edges: Vec<Vec<usize>> = Vec::new();
    let all_edges: Vec<usize> = occ.keys().copied().collect();
    for &start in &all_edges {
        if component_of_edge.contains_key(&start) {
            continue;
        }
        let comp = component_edges.len();
        let mut edges_in_order = Vec::new();
        let mut e = start;
        loop {
            component_of_edge.insert(e, comp);
            edges_in_order.push(e);
            // Head occurrence of e: the occurrence marked IN.
            let v = &occ[&e];
            let head = if state[&v[0]] { v[0] } else { v[1] };
            let (x, s) = head;
            let exit = (s + 2) % 4;
            let next = records[x][exit as usize];
            debug_assert!(!state[&(x, exit)], "exit slot must be OUT");
            if next == start {
                // Check we are closing the loop at start's tail.
                break;
            }
            if component_of_edge.contains_key(&next) {
                // Closed earlier than expected: inconsistent cycle.
                return Err(DiagramError::InconsistentOrientation(next));
            }
            e = next;
        }
        component_edges.push(edges_in_order);
    }

    // Arcs: merge the two over-slot edges at each crossing.
    let mut arc_parent: BTreeMap<usize, usize> = all_edges.iter().map(|&e| (e, e)).collect();
    fn find(parent: &mut BTreeMap<usize, usize>, e: usize) -> usize {
        let p = parent[&e];
        if p == e {
            e
        } else {
            let r = find(parent, p);
            parent.insert(e, r);
            r
        }
    }
    for rec in records {
        let a = find(&mut arc_parent, rec[1]);
        let b = find(&mut arc_parent, rec[3]);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            arc_parent.insert(hi, lo);
        }
    }
    let arc_of_edge = all_edges
        .iter()
        .map(|&e| (e, find(&mut arc_parent, e)))
        .collect();

    Ok(Trace { over_in_slot, component_edges, component_of_edge, arc_of_edge })
}
