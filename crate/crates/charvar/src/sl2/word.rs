//! Freely reduced words in the generators of a finitely presented group.

use std::fmt;

use super::Sl2Error;

/// A group word as a list of (generator index, exponent ±1) letters,
/// kept freely reduced: no letter is followed by its inverse.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord {
    letters: Vec<(usize, i8)>,
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord { letters: vec![] }
    }

    /// Build a word from letters, freely reducing.
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(letters.len());
        for (g, e) in letters {
            assert!(e == 1 || e == -1, "letter exponents must be ±1");
            if let Some(&(lg, le)) = out.last() {
                if lg == g && le == -e {
                    out.pop();
                    continue;
                }
            }
            out.push((g, e));
        }
        GroupWord { letters: out }
    }

    /// The single-letter word for a generator.
    pub fn generator(i: usize) -> Self {
        GroupWord {
            letters: vec![(i, 1)],
        }
    }

    pub fn generator_inv(i: usize) -> Self {
        GroupWord {
            letters: vec![(i, -1)],
        }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, rhs: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        GroupWord::new(letters)
    }

    /// Largest generator index mentioned, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    /// Exponent sum per generator (the abelianized word).
    pub fn abelianized(&self, gen_count: usize) -> Vec<i64> {
        let mut v = vec![0i64; gen_count];
        for &(g, e) in &self.letters {
            v[g] += e as i64;
        }
        v
    }

    /// Parse a word like `"m1 m2^-1 m3"` against a list of generator
    /// names. The empty string is the empty word; exponents expand into
    /// repeated ±1 letters.
    pub fn parse(input: &str, names: &[String]) -> Result<Self, Sl2Error> {
        let mut letters = vec![];
        for token in input.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| Sl2Error::BadWord(format!("bad exponent in `{token}`")))?;
                    (n, e)
                }
                None => (token, 1),
            };
            let idx = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Sl2Error::BadWord(format!("unknown generator `{name}`")))?;
            let sign = if exp >= 0 { 1i8 } else { -1i8 };
            for _ in 0..exp.unsigned_abs() {
                letters.push((idx, sign));
            }
        }
        Ok(GroupWord::new(letters))
    }

    /// Render against generator names, inverse of [`GroupWord::parse`].
    pub fn display(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return String::new();
        }
        let mut parts = vec![];
        let mut i = 0;
        while i < self.letters.len() {
            let (g, e) = self.letters[i];
            let mut run = 1i64;
            while i + 1 < self.letters.len() && self.letters[i + 1] == (g, e) {
                run += 1;
                i += 1;
            }
            let exp = run * e as i64;
            if exp == 1 {
                parts.push(names[g].clone());
            } else {
                parts.push(format!("{}^{}", names[g], exp));
            }
            i += 1;
        }
        parts.join(" ")
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "ε");
        }
        for (k, (g, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "g{}{}", g, if *e > 0 { "" } else { "⁻¹" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["m1", "m2", "m3"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn free_reduction() {
        let w = GroupWord::new(vec![(0, 1), (1, 1), (1, -1), (0, -1), (2, 1)]);
        assert_eq!(w, GroupWord::generator(2));
        let cancel = GroupWord::generator(0).concat(&GroupWord::generator_inv(0));
        assert!(cancel.is_empty());
    }

    #[test]
    fn parse_and_display() {
        let w = GroupWord::parse("m1 m2^-1 m3", &names()).unwrap();
        assert_eq!(w.letters(), &[(0, 1), (1, -1), (2, 1)]);
        assert_eq!(w.display(&names()), "m1 m2^-1 m3");
        let sq = GroupWord::parse("m1^2 m2^-2", &names()).unwrap();
        assert_eq!(sq.letters(), &[(0, 1), (0, 1), (1, -1), (1, -1)]);
        assert_eq!(sq.display(&names()), "m1^2 m2^-2");
        assert!(GroupWord::parse("bogus", &names()).is_err());
        assert!(GroupWord::parse("", &names()).unwrap().is_empty());
    }

    #[test]
    fn inverse_concat_is_trivial() {
        let w = GroupWord::parse("m1 m2^-1 m3 m3", &names()).unwrap();
        assert!(w.concat(&w.inverse()).is_empty());
    }
}
