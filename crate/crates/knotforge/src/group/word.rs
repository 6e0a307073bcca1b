use std::fmt;

/// A single letter `g^{±1}` of a free-group word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Self { gen, inverse: false }
    }

    pub fn inv(gen: usize) -> Self {
        Self { gen, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Self { gen: self.gen, inverse: !self.inverse }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word in a free group. Reduction happens eagerly on
/// construction, so two `Word`s are equal in the free group iff they are
/// equal as values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Self { letters: Vec::new() }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Self::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Word from signed generator indices: `+k` means generator `k-1`,
    /// `-k` its inverse.
    pub fn from_signed(signed: &[i64]) -> Self {
        Self::from_letters(signed.iter().map(|&s| {
            assert!(s != 0, "generator index 0 is not valid in signed notation");
            if s > 0 {
                Letter::new((s - 1) as usize)
            } else {
                Letter::inv((-s - 1) as usize)
            }
        }))
    }

    pub fn generator(gen: usize) -> Self {
        Self { letters: vec![Letter::new(gen)] }
    }

    fn push(&mut self, l: Letter) {
        match self.letters.last() {
            Some(&last) if last == l.inverted() => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Self::identity();
        for _ in 0..n.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Exponent sum of a single generator.
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.exponent()).sum()
    }

    /// Weighted exponent sum under `weights[gen]`.
    pub fn weighted_sum(&self, weights: &[i64]) -> i64 {
        self.letters.iter().map(|l| weights[l.gen] * l.exponent()).sum()
    }

    /// Cyclic reduction: conjugate until the first and last letters are
    /// no longer inverse to each other.
    pub fn cyclically_reduced(&self) -> Self {
        let mut letters = self.letters.clone();
        while letters.len() >= 2 && letters[0] == letters[letters.len() - 1].inverted() {
            letters.remove(0);
            letters.pop();
        }
        Self { letters }
    }

    pub fn rotations(&self) -> Vec<Self> {
        let n = self.letters.len();
        (0..n.max(1))
            .map(|k| {
                let mut rot = Vec::with_capacity(n);
                rot.extend_from_slice(&self.letters[k.min(n)..]);
                rot.extend_from_slice(&self.letters[..k.min(n)]);
                Self::from_letters(rot)
            })
            .collect()
    }

    /// True iff the two words agree up to cyclic rotation (after cyclic
    /// reduction) or do so after inverting one of them.
    pub fn cyclically_equivalent(&self, other: &Self) -> bool {
        let a = self.cyclically_reduced();
        let b = other.cyclically_reduced();
        if a.len() != b.len() {
            return false;
        }
        a.rotations().contains(&b) || a.inverse().rotations().contains(&b)
    }

    /// Replace each generator by the supplied word.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::identity();
        for l in &self.letters {
            let img = &images[l.gen];
            let piece = if l.inverse { img.inverse() } else { img.clone() };
            out = out.concat(&piece);
        }
        out
    }

    /// Render with the given generator names; inverses as capitals when
    /// names are single lowercase letters, else with `^-1`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                let name = &names[l.gen];
                if !l.inverse {
                    name.clone()
                } else if name.len() == 1 && name.chars().next().unwrap().is_ascii_lowercase() {
                    name.to_uppercase()
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                let base = gen_name(l.gen);
                if l.inverse {
                    base.to_uppercase()
                } else {
                    base
                }
            })
            .collect();
        write!(f, "{}", parts.concat())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Default print names: a, b, c, ..., z, g26, g27, ...
pub(crate) fn gen_name(gen: usize) -> String {
    if gen < 26 {
        char::from(b'a' + gen as u8).to_string()
    } else {
        format!("g{gen}")
    }
}
