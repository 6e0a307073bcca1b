use std::collections::BTreeMap;

use super::builder::{DiagramBuilder, Port};
use super::{DiagramError, KnotDiagram, PatternDiagram};

/// Endpoint occurrences of an edge: where it flows in (head) and out (tail).
#[derive(Clone, Copy, Debug)]
struct EdgeEnds {
    head: (usize, u8),
    tail: (usize, u8),
}

fn edge_endpoints(d: &KnotDiagram) -> BTreeMap<usize, EdgeEnds> {
    let mut heads: BTreeMap<usize, (usize, u8)> = BTreeMap::new();
    let mut tails: BTreeMap<usize, (usize, u8)> = BTreeMap::new();
    for (x, c) in d.crossings().iter().enumerate() {
        let oi = d.over_in_slot(x);
        let oo = if oi == 1 { 3 } else { 1 };
        heads.insert(c.edges[0], (x, 0));
        heads.insert(c.edges[oi as usize], (x, oi));
        tails.insert(c.edges[2], (x, 2));
        tails.insert(c.edges[oo as usize], (x, oo));
    }
    heads
        .into_iter()
        .map(|(e, head)| (e, EdgeEnds { head, tail: tails[&e] }))
        .collect()
}

/// The 2-cable satellite at the diagram level.
///
/// The companion is doubled along its blackboard framing (each crossing
/// becomes a 2×2 block of four crossings), `|w|` compensating full
/// twists (2·|w| crossings, of handedness opposite to the writhe `w`)
/// restore the 0-framing, and the pattern tangle is spliced in once at a
/// fixed site on the first edge of the companion. The output has
/// exactly `4c + 2|w| + p` crossings.
///
/// The first cut edge of the pattern rides the left cable lane along the
/// companion orientation; the second rides the right lane against it.
pub fn satellite_2cable(
    pattern: &PatternDiagram,
    companion: &KnotDiagram,
) -> Result<KnotDiagram, DiagramError> {
    if pattern.strand_count() != 2 {
        return Err(DiagramError::BadStrandCount(pattern.strand_count()));
    }
    if !companion.is_knot() {
        return Err(DiagramError::NotAKnot(companion.n_components()));
    }
    let name = format!(
        "satellite({} around {})",
        pattern.name().unwrap_or("pattern"),
        companion.name().unwrap_or("companion"),
    );
    if companion.crossing_count() == 0 {
        // Trivial companion: the satellite is the orbit knot itself.
        return Ok(pattern.base().clone().with_name(name));
    }

    let w = companion.writhe();
    let mut b = DiagramBuilder::new();

    // --- companion crossing blocks -------------------------------------
    // Sub-vertex (x, i, j): lane x = -1/+1 is i = 0/1, lane y = -1/+1 is
    // j = 0/1 in the local frame of crossing x (under strand runs south
    // to north, record slots a,b,c,d = S,E,N,W). Builder ports are
    // S=0, E=1, N=2, W=3 counterclockwise; under axis (0,2) = vertical,
    // so the under-copies pass under the over-copies throughout.
    let c = companion.crossing_count();
    let sv = |x: usize, i: usize, j: usize| -> usize { 4 * x + 2 * i + j };
    for _ in 0..4 * c {
        b.add_vertex();
    }
    for x in 0..c {
        for i in 0..2 {
            b.connect((sv(x, i, 0), 2), (sv(x, i, 1), 0)); // vertical segments
        }
        let west_to_east = companion.over_in_slot(x) == 3;
        for j in 0..2 {
            let (from, to) = if west_to_east {
                ((sv(x, 0, j), 1), (sv(x, 1, j), 3))
            } else {
                ((sv(x, 1, j), 3), (sv(x, 0, j), 1))
            };
            b.connect(from, to); // horizontal segments
        }
    }

    // Lane endpoints of a companion edge at its blocks: (left, right)
    // relative to the direction of travel.
    let lane_starts = |ends: EdgeEnds| -> (Port, Port) {
        let (x, s) = ends.tail;
        match s {
            2 => ((sv(x, 0, 1), 2), (sv(x, 1, 1), 2)),
            1 => ((sv(x, 1, 1), 1), (sv(x, 1, 0), 1)), // over-out, W→E flow
            3 => ((sv(x, 0, 0), 3), (sv(x, 0, 1), 3)), // over-out, E→W flow
            _ => unreachable!("tails sit at slot 2 or an over slot"),
        }
    };
    let lane_ends = |ends: EdgeEnds| -> (Port, Port) {
        let (x, s) = ends.head;
        match s {
            0 => ((sv(x, 0, 0), 0), (sv(x, 1, 0), 0)),
            3 => ((sv(x, 0, 1), 3), (sv(x, 0, 0), 3)), // over-in at W, W→E flow
            1 => ((sv(x, 1, 0), 1), (sv(x, 1, 1), 1)), // over-in at E, E→W flow
            _ => unreachable!("heads sit at slot 0 or an over slot"),
        }
    };

    let comp_ends = edge_endpoints(companion);
    let order = companion.component_edges(0);
    let splice_edge = order[0];

    // --- plain doubled edges -------------------------------------------
    for &e in order {
        if e == splice_edge {
            continue;
        }
        let ends = comp_ends[&e];
        let (l_start, r_start) = lane_starts(ends);
        let (l_end, r_end) = lane_ends(ends);
        b.connect(l_start, l_end);
        b.connect(r_start, r_end);
    }

    // --- splice site: twists then the pattern tangle --------------------
    let ends = comp_ends[&splice_edge];
    let (mut cur_left, mut cur_right) = lane_starts(ends);
    let (l_end, r_end) = lane_ends(ends);

    // Framing correction: |w| full twists of handedness -sign(w).
    // Positive half twist: ports CCW [SW, SE, NE, NW], under axis SW→NE.
    // Negative half twist: ports CCW [SE, NE, NW, SW], under axis SE→NW.
    let positive = w < 0;
    for _ in 0..2 * w.unsigned_abs() {
        let v = b.add_vertex();
        let (bl, br, tr, tl) = if positive { (0u8, 1, 2, 3) } else { (3u8, 0, 1, 2)
        };
        b.connect(cur_left, (v, bl));
        b.connect(cur_right, (v, br));
        cur_left = (v, tl);
        cur_right = (v, tr);
    }

    // Pattern crossings: record slots map directly to builder ports.
    let base = pattern.base();
    let pat_ends = edge_endpoints(base);
    let pv_base = b.add_vertex();
    for _ in 1..base.crossing_count() {
        b.add_vertex();
    }
    let pport = |(x, s): (usize, u8)| -> Port { (pv_base + x, s) };
    let cut = pattern.cut_edges();
    for (&e, &ends) in &pat_ends {
        if cut.iter().any(|&(ce, _)| ce == e) {
            continue;
        }
        b.connect(pport(ends.tail), pport(ends.head));
    }
    // Cut edges ride the cable: lane order (left, right) follows the cut
    // declaration order. A +1 edge travels with the companion
    // orientation (upstream side meets its head), a -1 edge against it.
    let lanes = [(cur_left, l_end), (cur_right, r_end)];
    for (&(e, sign), &(upstream, downstream)) in cut.iter().zip(lanes.iter()) {
        let ends = pat_ends[&e];
        if sign > 0 {
            b.connect(upstream, pport(ends.head));
            b.connect(pport(ends.tail), downstream);
        } else {
            b.connect(pport(ends.tail), upstream);
            b.connect(downstream, pport(ends.head));
        }
    }

    let out = b.build(Some(name))?;
    debug_assert_eq!(
        out.crossing_count(),
        4 * c + 2 * w.unsigned_abs() as usize + pattern.pattern_crossings()
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_braid, parse_pattern};

    /// A 0-crossing pattern cannot exist in PD form (the base needs
    /// crossings), so the simplest usable test pattern is the trefoil
    /// drawn with two antiparallel cut edges.
    fn trefoil_pattern() -> PatternDiagram {
        parse_pattern("strands 2\ncut 1 -4\nX(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()
    }

    #[test]
    fn unknot_companion_returns_base() {
        let p = trefoil_pattern();
        let s = satellite_2cable(&p, &KnotDiagram::unknot()).unwrap();
        assert_eq!(s.crossing_count(), 3);
        assert_eq!(s.crossings(), p.base().crossings());
    }

    #[test]
    fn crossing_count_formula() {
        let p = trefoil_pattern();
        let trefoil = parse_braid("1 1 1").unwrap();
        let s = satellite_2cable(&p, &trefoil).unwrap();
        // 4·3 + 2·3 + 3
        assert_eq!(s.crossing_count(), 21);
        assert_eq!(s.n_components(), 1);

        let fig8 = parse_braid("1 -2 1 -2").unwrap();
        let s8 = satellite_2cable(&p, &fig8).unwrap();
        assert_eq!(s8.crossing_count(), 4 * 4 + 0 + 3);
        assert_eq!(s8.n_components(), 1);
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = trefoil_pattern();
        let hopf = parse_braid("1 1").unwrap();
        assert!(matches!(satellite_2cable(&p, &hopf), Err(DiagramError::NotAKnot(2))));
    }
}
