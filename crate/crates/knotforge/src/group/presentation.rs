use num_bigint::BigInt;
use num_traits::One;

use crate::laurent::{smith_normal_form_int, LaurentPoly, MultiLaurentPoly};

use super::fox::fox_derivative;
use super::word::{gen_name, Letter, Word};
use super::PresentationError;

/// A finite group presentation: generators with print names and a list
/// of freely reduced relator words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    n_generators: usize,
    names: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(
        n_generators: usize,
        names: Option<Vec<String>>,
        relators: Vec<Word>,
    ) -> Result<Self, PresentationError> {
        let names = names.unwrap_or_else(|| (0..n_generators).map(gen_name).collect());
        assert_eq!(names.len(), n_generators, "one name per generator");
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= n_generators {
                    return Err(PresentationError::GeneratorOutOfRange(g, n_generators));
                }
            }
        }
        Ok(Self { n_generators, names, relators })
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn deficiency(&self) -> i64 {
        self.n_generators as i64 - self.relators.len() as i64
    }

    /// Parse the text form `gens: a b c ; rel: a b A B ; rel: ...`
    /// where a capitalized token denotes the inverse of the generator.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut names: Vec<String> = Vec::new();
        let mut relators: Vec<Word> = Vec::new();
        let mut seen_gens = false;
        for (si, section) in text.split(';').enumerate() {
            let section = section.trim();
            if section.is_empty() {
                continue;
            }
            let (key, rest) = section.split_once(':').ok_or(PresentationError::Parse {
                pos: si,
                reason: "expected 'gens:' or 'rel:' section".into(),
            })?;
            match key.trim() {
                "gens" => {
                    if seen_gens {
                        return Err(PresentationError::Parse {
                            pos: si,
                            reason: "duplicate gens section".into(),
                        });
                    }
                    seen_gens = true;
                    for tok in rest.split_whitespace() {
                        if !tok.chars().next().is_some_and(|c| c.is_ascii_lowercase()) {
                            return Err(PresentationError::Parse {
                                pos: si,
                                reason: format!("generator name '{tok}' must start lowercase"),
                            });
                        }
                        if names.iter().any(|n| n == tok) {
                            return Err(PresentationError::Parse {
                                pos: si,
                                reason: format!("duplicate generator '{tok}'"),
                            });
                        }
                        names.push(tok.to_string());
                    }
                }
                "rel" => {
                    let mut letters = Vec::new();
                    for tok in rest.split_whitespace() {
                        let lower = tok.to_lowercase();
                        let inverse = lower != tok;
                        match names.iter().position(|n| *n == lower) {
                            Some(g) => letters.push(Letter { gen: g, inverse }),
                            None => {
                                return Err(PresentationError::Parse {
                                    pos: si,
                                    reason: format!("unknown generator '{tok}'"),
                                })
                            }
                        }
                    }
                    relators.push(Word::from_letters(letters));
                }
                other => {
                    return Err(PresentationError::Parse {
                        pos: si,
                        reason: format!("unknown section '{other}'"),
                    })
                }
            }
        }
        if !seen_gens {
            return Err(PresentationError::Parse { pos: 0, reason: "missing gens section".into() });
        }
        let n = names.len();
        Self::new(n, Some(names), relators)
    }

    pub fn display(&self) -> String {
        let gens = self.names.join(", ");
        let rels: Vec<String> =
            self.relators.iter().map(|r| r.display_with(&self.names)).collect();
        format!("⟨ {} | {} ⟩", gens, rels.join(", "))
    }
}

/// True iff the presentation has deficiency one and every relator is of
/// Wirtinger conjugation shape `g_h g_l^ε g_k^{-1} g_l^{-ε}`, up to free
/// and cyclic reduction and inversion of the relator.
pub fn is_wirtinger_deficiency_one(p: &GroupPresentation) -> bool {
    if p.relators().len() + 1 != p.n_generators() {
        return false;
    }
    p.relators().iter().all(|r| is_wirtinger_shape(r))
}

fn is_wirtinger_shape(r: &Word) -> bool {
    let core = r.cyclically_reduced();
    if core.len() != 4 {
        return false;
    }
    core.rotations()
        .into_iter()
        .chain(core.inverse().rotations())
        .any(|rot| {
            let l = rot.letters();
            // g_h g_l^ε g_k^{-1} g_l^{-ε}
            l[0].inverse == false
                && l[2].inverse == true
                && l[1].gen == l[3].gen
                && l[1].inverse != l[3].inverse
        })
}

/// Elementary divisors of the abelianized presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    /// Torsion divisors > 1, in divisibility order.
    pub torsion: Vec<BigInt>,
    /// Rank of the free part.
    pub free_rank: usize,
}

/// Abelianization via the Smith normal form of the relator
/// exponent-sum matrix.
pub fn abelianization_divisors(p: &GroupPresentation) -> Abelianization {
    let rows = p.relators().len();
    let cols = p.n_generators();
    if rows == 0 {
        return Abelianization { torsion: vec![], free_rank: cols };
    }
    let m: Vec<Vec<BigInt>> = p
        .relators()
        .iter()
        .map(|r| (0..cols).map(|g| BigInt::from(r.exponent_sum(g))).collect())
        .collect();
    let snf = smith_normal_form_int(&m);
    let rank = snf.divisors.iter().filter(|d| !num_traits::Zero::is_zero(*d)).count();
    let torsion = snf
        .divisors
        .iter()
        .filter(|d| !num_traits::Zero::is_zero(*d) && !d.is_one())
        .cloned()
        .collect();
    Abelianization { torsion, free_rank: cols - rank }
}

/// Tietze substitution: rewrite `p` in terms of new generators.
///
/// `old_in_new[i]` expresses old generator `i` as a word in the new
/// generators; `new_in_old[j]` expresses new generator `j` in the old.
/// The two maps must be mutually inverse up to free reduction.
pub fn apply_substitution(
    p: &GroupPresentation,
    new_names: Vec<String>,
    old_in_new: &[Word],
    new_in_old: &[Word],
) -> Result<GroupPresentation, PresentationError> {
    assert_eq!(old_in_new.len(), p.n_generators());
    assert_eq!(new_in_old.len(), new_names.len());
    // Round-trip checks.
    for (i, img) in old_in_new.iter().enumerate() {
        let back = img.substitute(new_in_old);
        if back != Word::generator(i) {
            return Err(PresentationError::NotInverse(p.names()[i].clone()));
        }
    }
    for (j, img) in new_in_old.iter().enumerate() {
        let back = img.substitute(old_in_new);
        if back != Word::generator(j) {
            return Err(PresentationError::NotInverse(new_names[j].clone()));
        }
    }
    let relators = p.relators().iter().map(|r| r.substitute(old_in_new)).collect();
    GroupPresentation::new(new_names.len(), Some(new_names), relators)
}

/// The Alexander matrix of a presentation at integer meridian weights:
/// entry `(i, j)` is the image of `∂_{g_j}(r_i)` under `g ↦ t^{w(g)}`.
///
/// The weights must define a homomorphism to Z, i.e. kill every relator.
pub fn alexander_matrix(
    p: &GroupPresentation,
    weights: &[i64],
) -> Result<Vec<Vec<LaurentPoly>>, PresentationError> {
    assert_eq!(weights.len(), p.n_generators());
    for (i, r) in p.relators().iter().enumerate() {
        let s = r.weighted_sum(weights);
        if s != 0 {
            return Err(PresentationError::NotAHomomorphism(i, s));
        }
    }
    let m = p
        .relators()
        .iter()
        .map(|r| {
            (0..p.n_generators())
                .map(|g| {
                    let d = fox_derivative(r, g);
                    let mut poly = LaurentPoly::zero();
                    for (w, c) in d.terms() {
                        poly = &poly + &LaurentPoly::monomial(w.weighted_sum(weights), c.clone());
                    }
                    poly
                })
                .collect()
        })
        .collect();
    Ok(m)
}

/// Two-variable Alexander matrix: generator `g ↦ x^{wx(g)} y^{wy(g)}`.
pub fn alexander_matrix_two_variable(
    p: &GroupPresentation,
    weights_x: &[i64],
    weights_y: &[i64],
) -> Result<Vec<Vec<MultiLaurentPoly>>, PresentationError> {
    assert_eq!(weights_x.len(), p.n_generators());
    assert_eq!(weights_y.len(), p.n_generators());
    for (i, r) in p.relators().iter().enumerate() {
        let sx = r.weighted_sum(weights_x);
        let sy = r.weighted_sum(weights_y);
        if sx != 0 || sy != 0 {
            return Err(PresentationError::NotAHomomorphism(i, sx.abs() + sy.abs()));
        }
    }
    let m = p
        .relators()
        .iter()
        .map(|r| {
            (0..p.n_generators())
                .map(|g| {
                    let d = fox_derivative(r, g);
                    let mut poly = MultiLaurentPoly::zero();
                    for (w, c) in d.terms() {
                        poly = &poly
                            + &MultiLaurentPoly::monomial(
                                w.weighted_sum(weights_x),
                                w.weighted_sum(weights_y),
                                c.clone(),
                            );
                    }
                    poly
                })
                .collect()
        })
        .collect();
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sr_presentation() -> GroupPresentation {
        // ⟨a, c | a c a^-1 c^-2⟩
        GroupPresentation::new(2, None, vec![Word::from_signed(&[1, 2, -1, -2, -2])]).unwrap()
    }

    #[test]
    fn parse_text_format() {
        let p = GroupPresentation::parse("gens: a b ; rel: A b A b a B").unwrap();
        assert_eq!(p.n_generators(), 2);
        assert_eq!(p.relators()[0], Word::from_signed(&[-1, 2, -1, 2, 1, -2]));
        assert!(GroupPresentation::parse("rel: a").is_err());
        assert!(GroupPresentation::parse("gens: a ; rel: b").is_err());
    }

    #[test]
    fn wirtinger_shape_detection() {
        // a b a^-1 b^-1 is of the shape (h=k admissible)
        let comm = GroupPresentation::new(2, None, vec![Word::from_signed(&[1, 2, -1, -2])])
            .unwrap();
        assert!(is_wirtinger_deficiency_one(&comm));
        // a c a^-1 c^-2: not of the shape (length 5 core)
        assert!(!is_wirtinger_deficiency_one(&sr_presentation()));
        // wrong deficiency
        let two_rel = GroupPresentation::new(
            2,
            None,
            vec![Word::from_signed(&[1, 2, -1, -2]), Word::from_signed(&[2, 1, -2, -1])],
        )
        .unwrap();
        assert!(!is_wirtinger_deficiency_one(&two_rel));
    }

    #[test]
    fn abelianization_examples() {
        let cyclic3 =
            GroupPresentation::new(1, None, vec![Word::from_signed(&[1, 1, 1])]).unwrap();
        let ab = abelianization_divisors(&cyclic3);
        assert_eq!(ab.torsion, vec![BigInt::from(3)]);
        assert_eq!(ab.free_rank, 0);

        let free2 = GroupPresentation::new(2, None, vec![]).unwrap();
        let ab = abelianization_divisors(&free2);
        assert!(ab.torsion.is_empty());
        assert_eq!(ab.free_rank, 2);

        let ab = abelianization_divisors(&sr_presentation());
        assert!(ab.torsion.is_empty());
        assert_eq!(ab.free_rank, 1);
    }

    #[test]
    fn substitution_reaches_sr_form() {
        // ⟨a, b | a^-1 b a^-1 b a b^-1⟩ with b ↦ c^-1 a (inverse c ↦ a b^-1)
        let p = GroupPresentation::new(
            2,
            Some(vec!["a".into(), "b".into()]),
            vec![Word::from_signed(&[-1, 2, -1, 2, 1, -2])],
        )
        .unwrap();
        // new generators: a (index 0), c (index 1)
        let old_in_new = vec![Word::from_signed(&[1]), Word::from_signed(&[-2, 1])];
        let new_in_old = vec![Word::from_signed(&[1]), Word::from_signed(&[1, -2])];
        let q = apply_substitution(&p, vec!["a".into(), "c".into()], &old_in_new, &new_in_old)
            .unwrap();
        let target = Word::from_signed(&[1, 2, -1, -2, -2]); // a c a^-1 c^-2
        assert!(q.relators()[0].cyclically_equivalent(&target));
    }

    #[test]
    fn substitution_identity_and_inversion() {
        let p = sr_presentation();
        let id = vec![Word::from_signed(&[1]), Word::from_signed(&[2])];
        let q = apply_substitution(&p, p.names().to_vec(), &id, &id).unwrap();
        assert_eq!(q.relators(), p.relators());

        // single generator a ↦ a^-1 on a free group
        let free = GroupPresentation::new(1, None, vec![]).unwrap();
        let inv = vec![Word::from_signed(&[-1])];
        let q = apply_substitution(&free, vec!["a".into()], &inv, &inv).unwrap();
        assert!(q.relators().is_empty());
    }

    #[test]
    fn substitution_rejects_non_inverse_maps() {
        let p = sr_presentation();
        let bad = vec![Word::from_signed(&[1]), Word::from_signed(&[1])];
        assert!(apply_substitution(&p, p.names().to_vec(), &bad, &bad).is_err());
    }

    #[test]
    fn alexander_matrix_of_sr() {
        // weights a ↦ 1, c ↦ 0: the Fox derivatives abelianize to [0, t - 2]
        let p = sr_presentation();
        let m = alexander_matrix(&p, &[1, 0]).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m[0][0].is_zero());
        assert_eq!(m[0][1], "t - 2".parse().unwrap());
    }

    #[test]
    fn alexander_matrix_rejects_bad_weights() {
        let p = sr_presentation();
        // a ↦ 1, c ↦ 1 does not kill the relator (sum = -1)
        assert!(matches!(
            alexander_matrix(&p, &[1, 1]),
            Err(PresentationError::NotAHomomorphism(0, -1))
        ));
    }

    #[test]
    fn alexander_matrix_no_relators() {
        let free = GroupPresentation::new(1, None, vec![]).unwrap();
        let m = alexander_matrix(&free, &[1]).unwrap();
        assert!(m.is_empty());
    }
}
