use super::{DiagramError, KnotDiagram};

/// Strip `%` comments (to end of line).
pub(crate) fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| l.split('%').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

pub(crate) struct Tokenizer<'a> {
    src: &'a str,
    pos: usize,
}

#[derive(Debug, PartialEq)]
pub(crate) enum Tok {
    Record([usize; 4]),
    Ident(String),
    Int(i64),
    LBrace,
    RBrace,
}

impl<'a> Tokenizer<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    pub(crate) fn error(&self, reason: impl Into<String>) -> DiagramError {
        DiagramError::Syntax { pos: self.pos, reason: reason.into() }
    }

    fn skip_ws(&mut self) {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && (bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn next(&mut self) -> Result<Option<Tok>, DiagramError> {
        self.skip_ws();
        let bytes = self.src.as_bytes();
        if self.pos >= bytes.len() {
            return Ok(None);
        }
        match bytes[self.pos] {
            b'{' => {
                self.pos += 1;
                Ok(Some(Tok::LBrace))
            }
            b'}' => {
                self.pos += 1;
                Ok(Some(Tok::RBrace))
            }
            b'X' | b'x' if bytes.get(self.pos + 1) == Some(&b'(') => {
                self.pos += 2;
                let mut nums = [0usize; 4];
                for (i, slot) in nums.iter_mut().enumerate() {
                    self.skip_ws();
                    let start = self.pos;
                    while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    if self.pos == start {
                        return Err(self.error("expected edge label"));
                    }
                    *slot = self.src[start..self.pos]
                        .parse()
                        .map_err(|_| self.error("edge label out of range"))?;
                    self.skip_ws();
                    let want = if i == 3 { b')' } else { b',' };
                    if self.pos >= bytes.len() || bytes[self.pos] != want {
                        return Err(self.error(format!("expected '{}'", want as char)));
                    }
                    self.pos += 1;
                }
                Ok(Some(Tok::Record(nums)))
            }
            c if c.is_ascii_digit() || c == b'-' => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let v: i64 = self.src[start..self.pos]
                    .parse()
                    .map_err(|_| self.error("bad integer"))?;
                Ok(Some(Tok::Int(v)))
            }
            c if (c as char).is_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < bytes.len()
                    && ((bytes[self.pos] as char).is_alphanumeric() || bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Some(Tok::Ident(self.src[start..self.pos].to_string())))
            }
            c => Err(self.error(format!("unexpected character '{}'", c as char))),
        }
    }
}

/// Parse a PD text containing either a bare record list or named blocks
/// `knot <name> { ... }`; returns all diagrams with their names.
pub fn parse_pd_blocks(text: &str) -> Result<Vec<(Option<String>, KnotDiagram)>, DiagramError> {
    let stripped = strip_comments(text);
    let mut tk = Tokenizer::new(&stripped);
    let mut out = Vec::new();
    let mut bare: Vec<[usize; 4]> = Vec::new();
    loop {
        match tk.next()? {
            None => break,
            Some(Tok::Record(r)) => bare.push(r),
            Some(Tok::Ident(kw)) if kw == "knot" || kw == "link" => {
                if !bare.is_empty() {
                    return Err(tk.error("cannot mix bare records and named blocks"));
                }
                let name = match tk.next()? {
                    Some(Tok::Ident(n)) => n,
                    _ => return Err(tk.error("expected a name after 'knot'")),
                };
                match tk.next()? {
                    Some(Tok::LBrace) => {}
                    _ => return Err(tk.error("expected '{'")),
                }
                let mut records = Vec::new();
                loop {
                    match tk.next()? {
                        Some(Tok::Record(r)) => records.push(r),
                        Some(Tok::RBrace) => break,
                        _ => return Err(tk.error("expected X(...) or '}'")),
                    }
                }
                if records.is_empty() {
                    out.push((Some(name.clone()), KnotDiagram::unknot().with_name(name)));
                } else {
                    out.push((
                        Some(name.clone()),
                        KnotDiagram::from_edge_records(&records, Some(name))?,
                    ));
                }
            }
            Some(t) => return Err(tk.error(format!("unexpected token {t:?}"))),
        }
    }
    if !bare.is_empty() {
        out.push((None, KnotDiagram::from_edge_records(&bare, None)?));
    }
    Ok(out)
}

/// Parse a single diagram from PD text. Rejects empty input and files
/// containing more than one named block.
pub fn parse_pd(text: &str) -> Result<KnotDiagram, DiagramError> {
    let mut all = parse_pd_blocks(text)?;
    match all.len() {
        0 => Err(DiagramError::Empty),
        1 => Ok(all.pop().unwrap().1),
        n => Err(DiagramError::Invalid(format!("expected one diagram, found {n}"))),
    }
}

/// Canonical PD text for a diagram: whitespace-separated records.
pub fn emit_pd(d: &KnotDiagram) -> String {
    d.crossings()
        .iter()
        .map(|c| format!("X({},{},{},{})", c.edges[0], c.edges[1], c.edges[2], c.edges[3]))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_trefoil() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(d.crossing_count(), 3);
    }

    #[test]
    fn empty_is_error() {
        assert_eq!(parse_pd(""), Err(DiagramError::Empty));
        assert_eq!(parse_pd("  % just a comment\n"), Err(DiagramError::Empty));
    }

    #[test]
    fn single_record_fails_validation() {
        assert!(matches!(parse_pd("X(1,4,2,5)"), Err(DiagramError::EdgeCount(_, 1))));
    }

    #[test]
    fn comments_and_blocks() {
        let text = "% the right-handed trefoil\nknot trefoil {\n  X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n}\n";
        let d = parse_pd(text).unwrap();
        assert_eq!(d.name(), Some("trefoil"));
        let all = parse_pd_blocks(
            "knot a { X(1,2,2,1) }\nknot b { X(1,1,2,2) }",
        )
        .unwrap();
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn emit_roundtrip() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let text = emit_pd(&d);
        let d2 = parse_pd(&text).unwrap();
        assert_eq!(d.crossings(), d2.crossings());
    }

    #[test]
    fn syntax_error_position() {
        match parse_pd("X(1,4,2") {
            Err(DiagramError::Syntax { pos, .. }) => assert!(pos >= 6),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }
}
