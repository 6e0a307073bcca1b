use super::builder::DiagramBuilder;
use super::{DiagramError, KnotDiagram};

/// Parse a braid word (whitespace-separated nonzero integers, sign for
/// the inverse generator) and return its closure. The braid index is
/// `max |letter| + 1`; the empty word gives the 0-crossing unknot.
///
/// A positive letter `i` contributes a positive crossing between strands
/// `i` and `i+1` of the coherently oriented closure.
pub fn parse_braid(text: &str) -> Result<KnotDiagram, DiagramError> {
    let mut letters: Vec<i64> = Vec::new();
    for (i, tok) in text.split_whitespace().enumerate() {
        let v: i64 = tok.parse().map_err(|_| DiagramError::Syntax {
            pos: i,
            reason: format!("malformed braid letter '{tok}'"),
        })?;
        if v == 0 {
            return Err(DiagramError::Syntax { pos: i, reason: "braid letter 0".into() });
        }
        letters.push(v);
    }
    if letters.is_empty() {
        return Ok(KnotDiagram::unknot());
    }
    let n_strands = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap() + 1;

    let mut b = DiagramBuilder::new();
    // Dangling upper port per strand position, and the initial bottom port.
    let mut current: Vec<Option<(usize, u8)>> = vec![None; n_strands];
    let mut bottoms: Vec<Option<(usize, u8)>> = vec![None; n_strands];
    for &l in &letters {
        let i = (l.unsigned_abs() - 1) as usize; // positions i, i+1
        let v = b.add_vertex();
        // Port layout (counterclockwise; under axis = (0, 2)):
        //   positive: 0 = SW, 1 = SE, 2 = NE, 3 = NW (under strand SW→NE)
        //   negative: 0 = SE, 1 = NE, 2 = NW, 3 = SW (under strand SE→NW)
        let (sw, se, ne, nw) = if l > 0 { (0u8, 1, 2, 3) } else { (3u8, 0, 1, 2) };
        for (pos, s_port) in [(i, sw), (i + 1, se)] {
            match current[pos] {
                Some(p) => b.connect(p, (v, s_port)),
                None => bottoms[pos] = Some((v, s_port)),
            }
        }
        current[i] = Some((v, nw));
        current[i + 1] = Some((v, ne));
    }
    // Close up: top of each strand to its own bottom.
    for pos in 0..n_strands {
        match (current[pos], bottoms[pos]) {
            (Some(top), Some(bottom)) => b.connect(top, bottom),
            (None, None) => {
                return Err(DiagramError::Invalid(format!(
                    "braid strand {} carries no crossings; its closure is a split circle \
                     that PD notation cannot represent",
                    pos + 1
                )))
            }
            _ => unreachable!("current and bottoms are set together"),
        }
    }
    b.build(None)
}
