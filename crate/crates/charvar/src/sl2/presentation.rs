//! Finitely presented groups with marked peripheral word lists.

use serde::{Deserialize, Serialize};

use super::{GroupWord, Sl2Error};

/// A finite presentation: named generators, relator words, and named
/// lists of peripheral words (meridians, interface generators).
#[derive(Clone, PartialEq, Debug)]
pub struct Presentation {
    gen_names: Vec<String>,
    relators: Vec<GroupWord>,
    peripheral: Vec<(String, Vec<GroupWord>)>,
}

impl Presentation {
    pub fn new(gen_names: Vec<String>) -> Self {
        Presentation {
            gen_names,
            relators: vec![],
            peripheral: vec![],
        }
    }

    /// The four-punctured-sphere group ⟨mu1, mu2, mu3, mu4 | mu1 mu2 mu3 mu4⟩
    /// with its meridians marked.
    pub fn four_punctured_sphere() -> Self {
        let names: Vec<String> = (1..=4).map(|i| format!("mu{i}")).collect();
        let mut p = Presentation::new(names);
        p.push_relator(GroupWord::new(vec![(0, 1), (1, 1), (2, 1), (3, 1)]));
        p.push_peripheral(
            "meridians",
            (0..4).map(GroupWord::generator).collect(),
        );
        p
    }

    pub fn push_relator(&mut self, w: GroupWord) {
        self.assert_valid_word(&w);
        self.relators.push(w);
    }

    pub fn push_peripheral(&mut self, name: &str, words: Vec<GroupWord>) {
        for w in &words {
            self.assert_valid_word(w);
        }
        self.peripheral.push((name.to_string(), words));
    }

    fn assert_valid_word(&self, w: &GroupWord) {
        if let Some(g) = w.max_generator() {
            assert!(
                g < self.gen_names.len(),
                "word references generator {} but the presentation has {}",
                g,
                self.gen_names.len()
            );
        }
    }

    pub fn gen_count(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gen_names.iter().position(|n| n == name)
    }

    pub fn relators(&self) -> &[GroupWord] {
        &self.relators
    }

    pub fn peripheral(&self) -> &[(String, Vec<GroupWord>)] {
        &self.peripheral
    }

    pub fn peripheral_named(&self, name: &str) -> Option<&[GroupWord]> {
        self.peripheral
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, ws)| ws.as_slice())
    }

    /// Parse a word in this presentation's generators.
    pub fn word(&self, input: &str) -> Result<GroupWord, Sl2Error> {
        GroupWord::parse(input, &self.gen_names)
    }

    /// Words for all generators.
    pub fn generator_words(&self) -> Vec<GroupWord> {
        (0..self.gen_count()).map(GroupWord::generator).collect()
    }

    /// Rename generators as `{prefix}.{name}`; used when assembling
    /// amalgam presentations from pieces.
    pub fn prefixed(&self, prefix: &str) -> Presentation {
        Presentation {
            gen_names: self
                .gen_names
                .iter()
                .map(|n| format!("{prefix}.{n}"))
                .collect(),
            relators: self.relators.clone(),
            peripheral: self.peripheral.clone(),
        }
    }

    /// Translate a word of this presentation into a presentation whose
    /// generators contain ours at the given index offset.
    pub fn offset_word(w: &GroupWord, offset: usize) -> GroupWord {
        GroupWord::new(
            w.letters()
                .iter()
                .map(|&(g, e)| (g + offset, e))
                .collect(),
        )
    }

    /// Exponent-sum matrix of the relators (rows) against generators
    /// (columns); the abelianized relation matrix.
    pub fn abelianized_relations(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| r.abelianized(self.gen_count()))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct PeripheralRepr {
    name: String,
    words: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct PresentationRepr {
    generators: Vec<String>,
    relators: Vec<String>,
    #[serde(default)]
    peripheral: Vec<PeripheralRepr>,
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PresentationRepr {
            generators: self.gen_names.clone(),
            relators: self
                .relators
                .iter()
                .map(|r| r.display(&self.gen_names))
                .collect(),
            peripheral: self
                .peripheral
                .iter()
                .map(|(name, words)| PeripheralRepr {
                    name: name.clone(),
                    words: words.iter().map(|w| w.display(&self.gen_names)).collect(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PresentationRepr::deserialize(deserializer)?;
        let mut p = Presentation::new(repr.generators);
        for r in &repr.relators {
            let w = p.word(r).map_err(serde::de::Error::custom)?;
            p.push_relator(w);
        }
        for per in &repr.peripheral {
            let words: Result<Vec<_>, _> = per.words.iter().map(|w| p.word(w)).collect();
            p.push_peripheral(&per.name, words.map_err(serde::de::Error::custom)?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_punctured_sphere_shape() {
        let p = Presentation::four_punctured_sphere();
        assert_eq!(p.gen_count(), 4);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].len(), 4);
        assert_eq!(p.peripheral_named("meridians").unwrap().len(), 4);
    }

    #[test]
    fn words_and_json() {
        let p = Presentation::four_punctured_sphere();
        let w = p.word("mu1 mu2^-1").unwrap();
        assert_eq!(w.letters(), &[(0, 1), (1, -1)]);
        let j = serde_json::to_string(&p).unwrap();
        let back: Presentation = serde_json::from_str(&j).unwrap();
        assert_eq!(p, back);
    }
}
