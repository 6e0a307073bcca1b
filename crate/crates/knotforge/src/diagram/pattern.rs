use super::pd::{strip_comments, Tok, Tokenizer};
use super::{DiagramError, KnotDiagram};

/// A pattern knot in a solid torus, stored as the closed-up annular
/// diagram plus the designated edges crossing the annulus cut line.
///
/// With the trivial (unknot) companion the satellite is exactly `base`,
/// so `base` is the orbit knot as drawn in the annulus. A cut sign `+1`
/// means the edge crosses the cut along the annulus core direction,
/// `-1` against it; the winding number is the sum of signs.
#[derive(Clone, Debug)]
pub struct PatternDiagram {
    base: KnotDiagram,
    cut: Vec<(usize, i8)>,
    name: Option<String>,
}

impl PatternDiagram {
    pub fn new(
        base: KnotDiagram,
        cut: Vec<(usize, i8)>,
        name: Option<String>,
    ) -> Result<Self, DiagramError> {
        if !base.is_knot() {
            return Err(DiagramError::NotAKnot(base.n_components()));
        }
        let edges = base.edges();
        for &(e, s) in &cut {
            if !edges.contains(&e) {
                return Err(DiagramError::UnknownEdge(e));
            }
            if s != 1 && s != -1 {
                return Err(DiagramError::Invalid("cut signs must be ±1".into()));
            }
        }
        let mut labels: Vec<usize> = cut.iter().map(|&(e, _)| e).collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() != cut.len() {
            return Err(DiagramError::Invalid("cut edges must be distinct".into()));
        }
        Ok(Self { base, cut, name })
    }

    pub fn base(&self) -> &KnotDiagram {
        &self.base
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn strand_count(&self) -> usize {
        self.cut.len()
    }

    /// Algebraic count of cut passages.
    pub fn winding_number(&self) -> i64 {
        self.cut.iter().map(|&(_, s)| s as i64).sum()
    }

    pub fn pattern_crossings(&self) -> usize {
        self.base.crossing_count()
    }

    pub fn cut_edges(&self) -> &[(usize, i8)] {
        &self.cut
    }

    /// Boundary pairing: edges entering the tangle from the cut (the
    /// in-halves of the cut edges).
    pub fn entry_edges(&self) -> Vec<usize> {
        self.cut.iter().map(|&(e, _)| e).collect()
    }

    /// Edges leaving the tangle toward the cut (out-halves). In the
    /// closed representation these carry the same labels as the entries,
    /// paired one-to-one.
    pub fn exit_edges(&self) -> Vec<usize> {
        self.entry_edges()
    }
}

/// Parse the `.pat` text format:
///
/// ```text
/// % comment
/// pattern <name> {
///   strands 2
///   cut 3 -17
///   X(1,2,3,4) ...
/// }
/// ```
///
/// The braces and name are optional for a bare pattern body.
pub fn parse_pattern(text: &str) -> Result<PatternDiagram, DiagramError> {
    let stripped = strip_comments(text);
    let mut tk = Tokenizer::new(&stripped);
    let mut name: Option<String> = None;
    let mut strands: Option<i64> = None;
    let mut cut: Vec<(usize, i8)> = Vec::new();
    let mut records: Vec<[usize; 4]> = Vec::new();
    let mut in_block = false;
    let mut closed = false;
    loop {
        let tok = tk.next()?;
        match tok {
            None => break,
            Some(Tok::Ident(kw)) if kw == "pattern" => {
                match tk.next()? {
                    Some(Tok::Ident(n)) => name = Some(n),
                    _ => return Err(tk.error("expected a pattern name")),
                }
                match tk.next()? {
                    Some(Tok::LBrace) => in_block = true,
                    _ => return Err(tk.error("expected '{'")),
                }
            }
            Some(Tok::Ident(kw)) if kw == "strands" => match tk.next()? {
                Some(Tok::Int(n)) if n > 0 => strands = Some(n),
                _ => return Err(tk.error("expected a positive strand count")),
            },
            Some(Tok::Ident(kw)) if kw == "cut" => {
                let Some(n) = strands else {
                    return Err(tk.error("'strands' must precede 'cut'"));
                };
                for _ in 0..n {
                    match tk.next()? {
                        Some(Tok::Int(v)) if v != 0 => {
                            let sign = if v > 0 { 1 } else { -1 };
                            cut.push((v.unsigned_abs() as usize, sign));
                        }
                        _ => return Err(tk.error("expected a signed cut edge label")),
                    }
                }
            }
            Some(Tok::Record(r)) => records.push(r),
            Some(Tok::RBrace) if in_block => {
                closed = true;
                in_block = false;
            }
            Some(t) => return Err(tk.error(format!("unexpected token {t:?}"))),
        }
    }
    if in_block && !closed {
        return Err(tk.error("unterminated pattern block"));
    }
    if records.is_empty() {
        return Err(DiagramError::Empty);
    }
    let Some(n) = strands else {
        return Err(DiagramError::Invalid("missing 'strands' declaration".into()));
    };
    if cut.len() != n as usize {
        return Err(DiagramError::Invalid(format!(
            "cut declares {} edges, strands declares {n}",
            cut.len()
        )));
    }
    let base = KnotDiagram::from_edge_records(&records, name.clone())?;
    PatternDiagram::new(base, cut, name)
}

/// Text form of a pattern, inverse to [`parse_pattern`].
pub fn emit_pattern(p: &PatternDiagram) -> String {
    let cut: Vec<String> = p
        .cut_edges()
        .iter()
        .map(|&(e, s)| if s > 0 { format!("{e}") } else { format!("-{e}") })
        .collect();
    let body = format!(
        "strands {}\ncut {}\n{}",
        p.strand_count(),
        cut.join(" "),
        super::pd::emit_pd(p.base()),
    );
    match p.name() {
        Some(n) => format!("pattern {n} {{\n{body}\n}}\n"),
        None => format!("{body}\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_pattern() {
        // Trefoil drawn as a pattern with two antiparallel cut edges.
        let text = "pattern p {\n strands 2\n cut 1 -4\n X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n}";
        let p = parse_pattern(text).unwrap();
        assert_eq!(p.strand_count(), 2);
        assert_eq!(p.winding_number(), 0);
        assert_eq!(p.pattern_crossings(), 3);
        assert_eq!(p.name(), Some("p"));
        let back = parse_pattern(&emit_pattern(&p)).unwrap();
        assert_eq!(back.cut_edges(), p.cut_edges());
    }

    #[test]
    fn rejects_unknown_cut_edge() {
        let text = "strands 2\ncut 1 -99\nX(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
        assert!(matches!(parse_pattern(text), Err(DiagramError::UnknownEdge(99))));
    }

    #[test]
    fn rejects_multi_component_base() {
        let text = "strands 2\ncut 1 -2\nX(1,2,2,1) X(3,4,4,3)";
        assert!(matches!(parse_pattern(text), Err(DiagramError::NotAKnot(2))));
    }
}
