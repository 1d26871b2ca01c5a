//! Representations of finitely presented groups into SL(2) over a
//! coefficient ring, their characters, and lift verification.

use std::collections::BTreeMap;

use crate::algebra::Coeff;

use super::{GroupWord, Mat2, Presentation, Sl2Error};

/// A representation: one determinant-one matrix per generator.
#[derive(Clone, PartialEq, Debug)]
pub struct Representation<K> {
    presentation: Presentation,
    images: Vec<Mat2<K>>,
}

/// A finite table of traces, keyed by freely reduced words.
#[derive(Clone, PartialEq, Debug)]
pub struct CharacterTable<K> {
    entries: BTreeMap<GroupWord, K>,
}

impl<K: Coeff> Representation<K> {
    pub fn new(presentation: Presentation, images: Vec<Mat2<K>>) -> Result<Self, Sl2Error> {
        if images.len() != presentation.gen_count() {
            return Err(Sl2Error::ImageCountMismatch {
                generators: presentation.gen_count(),
                images: images.len(),
            });
        }
        Ok(Representation {
            presentation,
            images,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn images(&self) -> &[Mat2<K>] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Mat2<K> {
        &self.images[i]
    }

    /// Evaluate a word as the ordered product of generator images and
    /// their adjugate inverses.
    pub fn word_eval(&self, w: &GroupWord) -> Mat2<K> {
        let mut acc = Mat2::identity();
        for &(g, e) in w.letters() {
            assert!(
                g < self.images.len(),
                "word references generator {g} outside the presentation"
            );
            let m = if e == 1 {
                self.images[g].clone()
            } else {
                self.images[g].inverse_det1()
            };
            acc = acc.mul(&m);
        }
        acc
    }

    pub fn trace_of(&self, w: &GroupWord) -> K {
        self.word_eval(w).trace()
    }

    /// The character table over the requested words, always including the
    /// empty word, the generators, and their pairwise products.
    pub fn character_of(&self, words: &[GroupWord]) -> CharacterTable<K> {
        let mut entries = BTreeMap::new();
        entries.insert(GroupWord::empty(), K::from_int(2));
        let n = self.presentation.gen_count();
        for i in 0..n {
            let wi = GroupWord::generator(i);
            entries.insert(wi.clone(), self.trace_of(&wi));
            for j in (i + 1)..n {
                let wij = wi.concat(&GroupWord::generator(j));
                let tr = self.trace_of(&wij);
                entries.insert(wij, tr);
            }
        }
        for w in words {
            if !entries.contains_key(w) {
                let tr = self.trace_of(w);
                entries.insert(w.clone(), tr);
            }
        }
        CharacterTable { entries }
    }

    /// Trace of the multiplicative commutator [ρ(g), ρ(h)].
    pub fn commutator_trace(&self, g: &GroupWord, h: &GroupWord) -> K {
        let a = self.word_eval(g);
        let b = self.word_eval(h);
        a.mul(&b)
            .mul(&a.inverse_det1())
            .mul(&b.inverse_det1())
            .trace()
    }

    /// Per-relator sign report: +1 when the relator maps to the identity,
    /// -1 when it maps to minus the identity. All +1 means the
    /// representation is a genuine SL(2) lift.
    pub fn lift_check(&self) -> Result<Vec<i8>, Sl2Error> {
        let mut signs = vec![];
        for (idx, r) in self.presentation.relators().iter().enumerate() {
            let m = self.word_eval(r);
            if m.is_identity() {
                signs.push(1);
            } else if m.is_neg_identity() {
                signs.push(-1);
            } else {
                return Err(Sl2Error::NotCentral { relator: idx });
            }
        }
        Ok(signs)
    }

    /// All relators map to plus or minus the identity.
    pub fn is_projective_rep(&self) -> bool {
        self.presentation
            .relators()
            .iter()
            .all(|r| self.word_eval(r).is_central())
    }

    /// The conjugated representation g ρ g^{-1}.
    pub fn conjugated_by(&self, g: &Mat2<K>) -> Self {
        Representation {
            presentation: self.presentation.clone(),
            images: self.images.iter().map(|m| m.conjugated_by(g)).collect(),
        }
    }

    pub fn map_coefficients<L: Coeff>(&self, f: impl Fn(&K) -> L) -> Representation<L> {
        Representation {
            presentation: self.presentation.clone(),
            images: self.images.iter().map(|m| m.map(&f)).collect(),
        }
    }
}

impl<K: Coeff> CharacterTable<K> {
    pub fn get(&self, w: &GroupWord) -> Option<&K> {
        self.entries.get(w)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&GroupWord, &K)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn insert(&mut self, w: GroupWord, v: K) {
        self.entries.insert(w, v);
    }

    /// Entry-wise tolerant agreement on the intersection of both key
    /// sets; `false` if either table lacks a word present in the other.
    pub fn agrees_with(&self, rhs: &Self) -> bool {
        if self.entries.len() != rhs.entries.len() {
            return false;
        }
        self.entries.iter().all(|(w, v)| match rhs.entries.get(w) {
            Some(u) => v.sub(u).is_zero(),
            None => false,
        })
    }

    pub fn to_named(&self, names: &[String]) -> BTreeMap<String, K> {
        self.entries
            .iter()
            .map(|(w, v)| (w.display(names), v.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;

    fn four_sphere_diag(signs: [i64; 4]) -> Representation<Scalar> {
        let p = Presentation::four_punctured_sphere();
        let i = Scalar::i();
        let images = signs
            .iter()
            .map(|&e| {
                Mat2::diagonal(Scalar::from_int(e).mul(&i), Scalar::from_int(-e).mul(&i))
            })
            .collect();
        Representation::new(p, images).unwrap()
    }

    #[test]
    fn empty_word_is_identity() {
        let rep = four_sphere_diag([1, 1, 1, 1]);
        assert!(rep.word_eval(&GroupWord::empty()).is_identity());
        let gg = GroupWord::generator(0).concat(&GroupWord::generator_inv(0));
        assert!(rep.word_eval(&gg).is_identity());
    }

    #[test]
    fn alternating_signs_vertex_relator_is_plus_identity() {
        // ρ(mu_i) = ±diag(i, -i) with signs (+,-,+,-): product is +I
        let rep = four_sphere_diag([1, -1, 1, -1]);
        let relator = &rep.presentation().relators()[0].clone();
        assert!(rep.word_eval(relator).is_identity());
        assert_eq!(rep.lift_check().unwrap(), vec![1]);
    }

    #[test]
    fn all_plus_signs_also_lift() {
        // i^4 = 1
        let rep = four_sphere_diag([1, 1, 1, 1]);
        assert_eq!(rep.lift_check().unwrap(), vec![1]);
    }

    #[test]
    fn single_sign_flip_gives_minus_identity() {
        let rep = four_sphere_diag([1, 1, 1, -1]);
        assert_eq!(rep.lift_check().unwrap(), vec![-1]);
    }

    #[test]
    fn non_central_relator_image_is_reported() {
        let p = Presentation::four_punctured_sphere();
        let images = vec![
            Mat2::from_ints(1, 1, 0, 1),
            Mat2::from_ints(1, 0, 1, 1),
            Mat2::from_ints(1, 1, 0, 1),
            Mat2::from_ints(1, 0, 1, 1),
        ];
        let rep: Representation<Scalar> = Representation::new(p, images).unwrap();
        assert!(matches!(
            rep.lift_check(),
            Err(Sl2Error::NotCentral { relator: 0 })
        ));
    }

    #[test]
    fn trivial_character_is_all_twos() {
        let p = Presentation::four_punctured_sphere();
        let images = vec![Mat2::identity(); 4];
        let rep: Representation<Scalar> = Representation::new(p, images).unwrap();
        let table = rep.character_of(&[]);
        assert!(table
            .entries()
            .all(|(_, v)| v.approx_eq(&Scalar::from_int(2))));
        assert_eq!(rep.lift_check().unwrap(), vec![1]);
    }

    #[test]
    fn commutator_trace_examples() {
        let p = Presentation::new(vec!["a".into(), "b".into()]);
        let rep: Representation<Scalar> = Representation::new(
            p,
            vec![Mat2::from_ints(1, 1, 0, 1), Mat2::from_ints(1, 0, 1, 1)],
        )
        .unwrap();
        let a = GroupWord::generator(0);
        let b = GroupWord::generator(1);
        assert!(rep
            .commutator_trace(&a, &a)
            .approx_eq(&Scalar::from_int(2)));
        assert!(rep
            .commutator_trace(&a, &b)
            .approx_eq(&Scalar::from_int(3)));
    }

    #[test]
    fn character_is_conjugation_invariant() {
        let rep = four_sphere_diag([1, -1, 1, -1]);
        let g: Mat2<Scalar> = Mat2::from_ints(2, 1, 3, 2);
        assert!(g.det().is_one());
        let conj = rep.conjugated_by(&g);
        let words = vec![rep.presentation().word("mu1 mu2 mu3").unwrap()];
        assert!(rep.character_of(&words).agrees_with(&conj.character_of(&words)));
    }
}
