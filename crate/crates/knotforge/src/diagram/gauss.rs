use std::collections::BTreeMap;

use super::{Crossing, DiagramError, KnotDiagram};

/// Parse a Gauss code: whitespace-separated visits `O<k><s>` / `U<k><s>`
/// with `s ∈ {+, -}` (ASCII or Unicode minus), read along the knot.
/// Every crossing must be visited exactly once over and once under, with
/// the same sign at both visits.
pub fn parse_gauss(text: &str) -> Result<KnotDiagram, DiagramError> {
    let mut visits: Vec<(bool, usize, i8)> = Vec::new(); // (is_over, id, sign)
    for (i, tok) in text.split_whitespace().enumerate() {
        let bad = |reason: &str| DiagramError::Syntax {
            pos: i,
            reason: format!("token '{tok}': {reason}"),
        };
        let tok_norm = tok.replace('−', "-");
        let mut chars = tok_norm.chars();
        let is_over = match chars.next() {
            Some('O') | Some('o') => true,
            Some('U') | Some('u') => false,
            _ => return Err(bad("expected O or U prefix")),
        };
        let rest: String = chars.collect();
        let (num, sign) = match rest.strip_suffix('+') {
            Some(n) => (n, 1i8),
            None => match rest.strip_suffix('-') {
                Some(n) => (n, -1i8),
                None => return Err(bad("expected trailing + or -")),
            },
        };
        let id: usize = num.parse().map_err(|_| bad("bad crossing number"))?;
        visits.push((is_over, id, sign));
    }
    if visits.is_empty() {
        return Err(DiagramError::Empty);
    }
    let m = visits.len();
    // Pair up over/under visits.
    let mut over_pos: BTreeMap<usize, (usize, i8)> = BTreeMap::new();
    let mut under_pos: BTreeMap<usize, (usize, i8)> = BTreeMap::new();
    for (pos, &(is_over, id, sign)) in visits.iter().enumerate() {
        let map = if is_over { &mut over_pos } else { &mut under_pos };
        if map.insert(id, (pos, sign)).is_some() {
            return Err(DiagramError::Invalid(format!(
                "crossing {id} visited {} twice",
                if is_over { "over" } else { "under" }
            )));
        }
    }
    if over_pos.len() != under_pos.len()
        || over_pos.keys().ne(under_pos.keys())
        || 2 * over_pos.len() != m
    {
        return Err(DiagramError::Invalid(
            "unbalanced over/under visits".to_string(),
        ));
    }
    // Edge k+1 runs from visit k to visit k+1 (cyclically).
    let edge_before = |pos: usize| ((pos + m - 1) % m) + 1;
    let edge_after = |pos: usize| pos + 1;
    let mut crossings = Vec::with_capacity(m / 2);
    for (&id, &(u, us)) in &under_pos {
        let (o, os) = over_pos[&id];
        if us != os {
            return Err(DiagramError::Invalid(format!(
                "crossing {id} has conflicting signs at its two visits"
            )));
        }
        let (a, c) = (edge_before(u), edge_after(u));
        let (oin, oout) = (edge_before(o), edge_after(o));
        let edges = if us > 0 { [a, oin, c, oout] } else { [a, oout, c, oin] };
        crossings.push(Crossing { edges, sign: us });
    }
    // Stored signs must survive revalidation.
    KnotDiagram::from_crossings(crossings, None)
}

/// Gauss code of a knot diagram (single component), with crossings
/// renumbered 1.. in order of first visit.
pub fn emit_gauss(d: &KnotDiagram) -> Result<String, DiagramError> {
    if d.crossing_count() == 0 {
        return Err(DiagramError::Invalid(
            "the 0-crossing unknot has no Gauss code".into(),
        ));
    }
    if !d.is_knot() {
        return Err(DiagramError::NotAKnot(d.n_components()));
    }
    // Find, for each edge, the crossing and slot where it flows in.
    let mut head_of_edge: BTreeMap<usize, (usize, u8)> = BTreeMap::new();
    for (x, c) in d.crossings().iter().enumerate() {
        head_of_edge.insert(c.edges[0], (x, 0));
        let oi = d.over_in_slot(x);
        head_of_edge.insert(c.edges[oi as usize], (x, oi));
    }
    let mut renumber: BTreeMap<usize, usize> = BTreeMap::new();
    let mut out = Vec::new();
    for &e in d.component_edges(0) {
        let (x, slot) = head_of_edge[&e];
        let next = renumber.len() + 1;
        let id = *renumber.entry(x).or_insert(next);
        let sign = if d.crossings()[x].sign > 0 { '+' } else { '-' };
        let kind = if slot == 0 { 'U' } else { 'O' };
        out.push(format!("{kind}{id}{sign}"));
    }
    Ok(out.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn trefoil() -> KnotDiagram {
        parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()
    }

    /// Minimal code over all cyclic rotations, crossings renumbered by
    /// first visit: a canonical form for relabel-equivalence.
    fn canonical(code: &str) -> String {
        let toks: Vec<&str> = code.split_whitespace().collect();
        let mut best: Option<String> = None;
        for k in 0..toks.len() {
            let mut renumber: std::collections::BTreeMap<String, usize> =
                std::collections::BTreeMap::new();
            let mut parts = Vec::new();
            for i in 0..toks.len() {
                let t = toks[(k + i) % toks.len()];
                let (kind, rest) = t.split_at(1);
                let (num, sign) = rest.split_at(rest.len() - 1);
                let next = renumber.len() + 1;
                let id = *renumber.entry(num.to_string()).or_insert(next);
                parts.push(format!("{kind}{id}{sign}"));
            }
            let cand = parts.join(" ");
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.unwrap()
    }

    #[test]
    fn roundtrip_trefoil() {
        let d = trefoil();
        let code = emit_gauss(&d).unwrap();
        let d2 = parse_gauss(&code).unwrap();
        assert_eq!(d2.crossing_count(), 3);
        assert_eq!(d2.writhe(), 3);
        // Relabel-equivalence of the round trip.
        assert_eq!(canonical(&emit_gauss(&d2).unwrap()), canonical(&code));
    }

    #[test]
    fn one_crossing_curl_parses() {
        // A single positive curl visited over then under.
        let d = parse_gauss("O1+ U1+").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.n_components(), 1);
    }

    #[test]
    fn malformed_tokens() {
        assert!(matches!(parse_gauss("Q1+"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(parse_gauss("O1"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(parse_gauss(""), Err(DiagramError::Empty)));
    }

    #[test]
    fn unbalanced_visits() {
        assert!(parse_gauss("O1+ O2+ U1+ U1+").is_err());
        assert!(parse_gauss("O1+ U2+").is_err());
        assert!(parse_gauss("O1+ U1-").is_err());
    }
}
