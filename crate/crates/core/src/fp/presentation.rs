use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use super::parse::parse_presentation;
use super::{FpError, Word};

/// A finite presentation `⟨ generators | relators ⟩`.
///
/// Relators are kept freely reduced but not cyclically reduced, so that a
/// parse/serialize round trip reproduces the same presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

pub fn is_valid_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, FpError> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !is_valid_generator_name(g) {
                return Err(FpError::InvalidGeneratorName(g.clone()));
            }
            if !seen.insert(g.as_str()) {
                return Err(FpError::DuplicateGenerator(g.clone()));
            }
        }
        for r in &relators {
            if let Some(m) = r.max_generator() {
                if m >= generators.len() {
                    return Err(FpError::IndexOutOfRange {
                        what: "generator",
                        index: m,
                        len: generators.len(),
                    });
                }
            }
        }
        let relators = relators.iter().map(Word::reduced).collect();
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// Presentation with generated names `x0, x1, …` (or `a, b, …` for at most 26).
    pub fn with_default_names(n: usize, relators: Vec<Word>) -> Result<Self, FpError> {
        Presentation::new(default_names(n), relators)
    }

    pub fn trivial() -> Self {
        Presentation {
            generators: Vec::new(),
            relators: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// `d − k` for this particular presentation.
    pub fn deficiency(&self) -> i64 {
        self.generators.len() as i64 - self.relators.len() as i64
    }

    /// Euler characteristic `1 − d + k` of the presentation 2-complex.
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.deficiency()
    }

    pub fn with_extra_relators(&self, extra: &[Word]) -> Result<Self, FpError> {
        let mut rels = self.relators.clone();
        rels.extend(extra.iter().cloned());
        Presentation::new(self.generators.clone(), rels)
    }

    pub fn display_word(&self, w: &Word) -> String {
        w.display_with(&self.generators).to_string()
    }

    /// Serialized `.fp` text; byte-identical for equal presentations.
    pub fn to_fp_string(&self) -> String {
        self.to_string()
    }

    /// Single-line `⟨a, b | a^2, b^3⟩` form for reports.
    pub fn inline(&self) -> String {
        let rels: Vec<String> = self.relators.iter().map(|r| self.display_word(r)).collect();
        format!("<{} | {}>", self.generators.join(", "), rels.join(", "))
    }
}

fn default_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            writeln!(f, "gens:")?;
        } else {
            writeln!(f, "gens: {}", self.generators.join(" "))?;
        }
        let rels: Vec<String> = self.relators.iter().map(|r| self.display_word(r)).collect();
        if rels.is_empty() {
            writeln!(f, "rels:")
        } else {
            writeln!(f, "rels: {}", rels.join(", "))
        }
    }
}

impl FromStr for Presentation {
    type Err = FpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_presentation(s)
    }
}
