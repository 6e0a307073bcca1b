use serde::Serialize;

use crate::diagram::KnotDiagram;
use crate::laurent::{fox_milnor_factor, LaurentPoly};
use crate::sr::{sr_coloring_solve, SRColoring};

use super::alexander::{alexander_from_diagram, alexander_from_seifert, arf_invariant};
use super::{InvariantError, SeifertMatrix};

/// The fixed caveat attached to every report.
pub const CAVEAT: &str = "SR verdicts are necessary-condition checks only: the \
Blanchfield/Ext condition over Z[SR] that characterizes h-ribbonness is not \
decided by this tool, and knots sharing the matching Alexander polynomial need \
not be slice. 'Candidate' never certifies an h-ribbon.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TestStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct TestVerdict {
    pub test: &'static str,
    pub status: TestStatus,
}

/// Top-level classification derived from the computed invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    SliceTrivialAlexander,
    NotSlice,
    SrCandidate,
    Inconclusive,
}

impl Verdict {
    pub fn describe(&self) -> &'static str {
        match self {
            Verdict::SliceTrivialAlexander => {
                "slice (trivial Alexander polynomial; topologically slice with group Z)"
            }
            Verdict::NotSlice => "not slice (Fox-Milnor/Arf obstruction)",
            Verdict::SrCandidate => "SR h-ribbon candidate (all computable necessary conditions pass)",
            Verdict::Inconclusive => "inconclusive (no obstruction found, no positive route applies)",
        }
    }
}

/// Composite report of the slice-obstruction battery for one knot.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub name: String,
    pub alexander_canonical: String,
    pub alexander_balanced: String,
    pub alexander_at_one: i8,
    pub arf: u8,
    pub fox_milnor_factor: Option<String>,
    pub sr_delta_match: bool,
    pub sr_witness: Option<SRColoring>,
    pub verdicts: Vec<TestVerdict>,
    pub verdict: Verdict,
    pub verdict_text: String,
    pub caveat: &'static str,
}

/// The distinguished polynomial `(t-2)(t^{-1}-2)`, canonically
/// `2 - 5t + 2t²`.
pub fn sr_alexander_polynomial() -> LaurentPoly {
    "2 - 5*t + 2*t^2".parse().unwrap()
}

/// Balanced rendering: the symmetric associate with value +1 at t = 1,
/// when one exists (knot polynomials always admit one).
fn balanced_form(canonical: &LaurentPoly) -> String {
    use num_traits::Signed;
    let span = canonical.span();
    if span == 0 || (span - 1) % 2 != 0 {
        return canonical.to_string();
    }
    let mid = (span - 1) / 2;
    let mut b = canonical.shifted(-mid);
    let at_one = b.eval_at_one();
    if at_one.is_negative() {
        b = -&b;
    }
    b.to_string()
}

/// Run the full battery on a knot diagram: Alexander polynomial through
/// the Fox-calculus route (checked against the Seifert route when a
/// Seifert matrix is supplied — disagreement is a hard error), Arf,
/// Fox–Milnor factorization, the trivial-polynomial slice test, and the
/// SR battery (polynomial match plus coloring epimorphism search).
pub fn obstruction_report(
    d: &KnotDiagram,
    seifert: Option<&SeifertMatrix>,
) -> Result<ObstructionReport, InvariantError> {
    if !d.is_knot() {
        return Err(InvariantError::NotAKnot(d.n_components()));
    }
    let delta = alexander_from_diagram(d)?;
    let mut verdicts = Vec::new();
    match seifert {
        Some(a) => {
            let from_seifert = alexander_from_seifert(a);
            if !delta.symmetric_equal(&from_seifert) {
                return Err(InvariantError::RouteDisagreement {
                    diagram: delta.to_string(),
                    seifert: from_seifert.to_string(),
                });
            }
            verdicts.push(TestVerdict { test: "two_route_agreement", status: TestStatus::Pass });
        }
        None => verdicts.push(TestVerdict {
            test: "two_route_agreement",
            status: TestStatus::NotApplicable,
        }),
    }

    let trivial = delta.is_one();
    verdicts.push(TestVerdict {
        test: "alexander_trivial",
        status: if trivial { TestStatus::Pass } else { TestStatus::Fail },
    });

    let fm = fox_milnor_factor(&delta)?;
    verdicts.push(TestVerdict {
        test: "fox_milnor",
        status: if fm.is_some() { TestStatus::Pass } else { TestStatus::Fail },
    });

    let arf = arf_invariant(&delta)?;
    verdicts.push(TestVerdict {
        test: "arf_zero",
        status: if arf == 0 { TestStatus::Pass } else { TestStatus::Fail },
    });

    let sr_delta_match = delta.symmetric_equal(&sr_alexander_polynomial());
    verdicts.push(TestVerdict {
        test: "sr_delta_match",
        status: if sr_delta_match { TestStatus::Pass } else { TestStatus::Fail },
    });

    let space = sr_coloring_solve(d);
    let sr_witness = space.surjective_witness(d);
    verdicts.push(TestVerdict {
        test: "sr_epimorphism",
        status: if sr_witness.is_some() { TestStatus::Pass } else { TestStatus::Fail },
    });

    let verdict = if trivial {
        Verdict::SliceTrivialAlexander
    } else if fm.is_none() || arf == 1 {
        Verdict::NotSlice
    } else if sr_delta_match && sr_witness.is_some() {
        Verdict::SrCandidate
    } else {
        Verdict::Inconclusive
    };

    let at_one = delta.eval_at_one();
    Ok(ObstructionReport {
        name: d.name().unwrap_or("unnamed").to_string(),
        alexander_canonical: delta.to_string(),
        alexander_balanced: balanced_form(&delta),
        alexander_at_one: i8::try_from(at_one).expect("knot polynomial has Δ(1) = ±1"),
        arf,
        fox_milnor_factor: fm.map(|f| f.to_string()),
        sr_delta_match,
        sr_witness,
        verdicts,
        verdict_text: verdict.describe().to_string(),
        verdict,
        caveat: CAVEAT,
    })
}

impl ObstructionReport {
    /// Deterministic JSON rendering (struct-order fields, sorted maps).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering with the same values as the JSON form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("knot: {}\n", self.name));
        out.push_str(&format!("alexander (canonical): {}\n", self.alexander_canonical));
        out.push_str(&format!("alexander (balanced):  {}\n", self.alexander_balanced));
        out.push_str(&format!("alexander at 1: {}\n", self.alexander_at_one));
        out.push_str(&format!("arf invariant: {}\n", self.arf));
        match &self.fox_milnor_factor {
            Some(f) => out.push_str(&format!("fox-milnor factor: {f}\n")),
            None => out.push_str("fox-milnor factor: none\n"),
        }
        out.push_str(&format!("sr polynomial match: {}\n", self.sr_delta_match));
        match &self.sr_witness {
            Some(w) => {
                out.push_str("sr epimorphism witness (arc labels):\n");
                for (arc, x) in w.labels() {
                    out.push_str(&format!("  arc {arc}: {x}\n"));
                }
            }
            None => out.push_str("sr epimorphism witness: none\n"),
        }
        out.push_str("checks:\n");
        for v in &self.verdicts {
            let s = match v.status {
                TestStatus::Pass => "pass",
                TestStatus::Fail => "fail",
                TestStatus::NotApplicable => "not-applicable",
            };
            out.push_str(&format!("  {}: {}\n", v.test, s));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict_text));
        out.push_str(&format!("caveat: {}\n", self.caveat));
        out
    }
}
