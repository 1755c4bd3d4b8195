use std::fmt;
use std::sync::Arc;

use super::FiniteGroup;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    /// Either `1` or `-1`.
    pub exponent: i8,
}

impl Letter {
    pub fn new(generator: usize, exponent: i8) -> Self {
        debug_assert!(exponent == 1 || exponent == -1);
        Letter {
            generator,
            exponent,
        }
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.generator, -self.exponent)
    }
}

/// A word in the free group, stored exactly as written (not freely reduced).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `x_g^n` as `|n|` letters.
    pub fn power(generator: usize, n: i64) -> Self {
        let e = if n < 0 { -1 } else { 1 };
        Word(vec![Letter::new(generator, e); n.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Cancels adjacent `x x⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match out.last() {
                Some(&top) if top == l.inverse() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word(out)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }
}

/// A finite presentation `⟨x_0, …, x_{g-1} | relators⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generator_names: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for (i, r) in relators.iter().enumerate() {
            if let Some(m) = r.max_generator() {
                if m >= generator_names.len() {
                    return Err(Error::input(format!(
                        "relator {i} uses generator {m} but only {} generators exist",
                        generator_names.len()
                    )));
                }
            }
        }
        Ok(Presentation {
            generator_names,
            relators,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    /// Generators minus relators.
    pub fn deficiency(&self) -> i64 {
        self.generator_count() as i64 - self.relator_count() as i64
    }

    /// Writes a word using the generator names, e.g. `a b a^-1`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|l| {
                let name = &self.generator_names[l.generator];
                if l.exponent < 0 {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(
            f,
            "<{} | {}>",
            self.generator_names.join(", "),
            rels.join(", ")
        )
    }
}

/// A presentation together with a surjection onto a concrete finite group.
#[derive(Clone, Debug)]
pub struct MarkedGroup {
    group: Arc<FiniteGroup>,
    presentation: Presentation,
    genmap: Vec<usize>,
}

impl MarkedGroup {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn genmap(&self) -> &[usize] {
        &self.genmap
    }

    pub fn generator_image(&self, i: usize) -> usize {
        self.genmap[i]
    }
}

/// Binds `presentation` to `group` through `genmap`, checking that every relator
/// maps to the identity and that the generator images generate the group.
pub fn bind_presentation(
    group: Arc<FiniteGroup>,
    presentation: Presentation,
    genmap: Vec<usize>,
) -> Result<MarkedGroup> {
    if genmap.len() != presentation.generator_count() {
        return Err(Error::input(format!(
            "generator map has {} images for {} generators",
            genmap.len(),
            presentation.generator_count()
        )));
    }
    if let Some(&bad) = genmap.iter().find(|&&g| g >= group.order()) {
        return Err(Error::input(format!("generator image {bad} out of range")));
    }
    let marked = MarkedGroup {
        group,
        presentation,
        genmap,
    };
    for (index, r) in marked.presentation.relators.iter().enumerate() {
        if evaluate_word(&marked, r)? != marked.group.identity() {
            return Err(Error::RelatorViolation { index });
        }
    }
    let reached = marked.group.generated_subgroup(&marked.genmap).len();
    if reached != marked.group.order() {
        return Err(Error::NotGenerating {
            reached,
            order: marked.group.order(),
        });
    }
    Ok(marked)
}

/// Image of `w` under the homomorphism from the free group determined by the marking.
pub fn evaluate_word(marked: &MarkedGroup, w: &Word) -> Result<usize> {
    let g = &marked.group;
    let mut acc = g.identity();
    for l in w.letters() {
        let img = *marked.genmap.get(l.generator).ok_or_else(|| {
            Error::input(format!("generator index {} out of range", l.generator))
        })?;
        let x = if l.exponent < 0 { g.inv(img) } else { img };
        acc = g.mul(acc, x);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_group, GroupFamily};

    fn c(n: usize) -> Arc<FiniteGroup> {
        Arc::new(make_group(GroupFamily::Cyclic(n)).unwrap())
    }

    #[test]
    fn binds_c2() {
        let p = Presentation::new(vec!["x".into()], vec![Word::power(0, 2)]).unwrap();
        assert!(bind_presentation(c(2), p, vec![1]).is_ok());
    }

    #[test]
    fn relator_violation_reports_index() {
        let p = Presentation::new(vec!["x".into()], vec![Word::power(0, 3)]).unwrap();
        let err = bind_presentation(c(2), p, vec![1]).unwrap_err();
        assert_eq!(err, Error::RelatorViolation { index: 0 });
    }

    #[test]
    fn not_generating() {
        let p = Presentation::new(vec!["x".into()], vec![Word::power(0, 2)]).unwrap();
        let err = bind_presentation(c(4), p, vec![2]).unwrap_err();
        assert_eq!(
            err,
            Error::NotGenerating {
                reached: 2,
                order: 4
            }
        );
    }

    #[test]
    fn evaluate_words_in_c4() {
        let p = Presentation::new(vec!["x".into()], vec![Word::power(0, 4)]).unwrap();
        let m = bind_presentation(c(4), p, vec![1]).unwrap();
        assert_eq!(evaluate_word(&m, &Word::empty()).unwrap(), 0);
        let w = Word::power(0, 3).concat(&Word::power(0, 2));
        assert_eq!(evaluate_word(&m, &w).unwrap(), 1);
        assert!(evaluate_word(&m, &Word::power(3, 1)).is_err());
    }

    #[test]
    fn conjugating_rotation_by_reflection_inverts_it() {
        let m = GroupFamily::Dihedral(3).marked_group().unwrap();
        // generators: a = rotation, b = reflection
        let srs = Word(vec![Letter::new(1, 1), Letter::new(0, 1), Letter::new(1, -1)]);
        let r = m.generator_image(0);
        // oracle: multiply table entries directly
        let g = m.group();
        let s = m.generator_image(1);
        let expected = g.mul(g.mul(s, r), g.inv(s));
        assert_eq!(evaluate_word(&m, &srs).unwrap(), expected);
        assert_eq!(expected, g.inv(r));
    }

    #[test]
    fn free_reduction() {
        let w = Word(vec![
            Letter::new(0, 1),
            Letter::new(1, 1),
            Letter::new(1, -1),
            Letter::new(0, -1),
            Letter::new(0, 1),
        ]);
        assert_eq!(w.free_reduce(), Word(vec![Letter::new(0, 1)]));
    }
}
