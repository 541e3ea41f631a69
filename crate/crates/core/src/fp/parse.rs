//! Parser for the `.fp` presentation format.
//!
//! ```text
//! # comment
//! gens: a b
//! rels: a^2, b^3, (a b)^5
//! ```
//!
//! Relators are separated by commas; inside a relator, whitespace separates
//! terms. `term := atom | atom '^' int`, `atom := name | '(' word ')' | '1'`.

use super::presentation::is_valid_generator_name;
use super::{FpError, Letter, Presentation, Word};

pub fn parse_presentation(text: &str) -> Result<Presentation, FpError> {
    let mut generators: Option<Vec<String>> = None;
    let mut relators = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let trimmed_start = line.len() - line.trim_start().len();
        let body = line.trim_start();
        if let Some(rest) = body.strip_prefix("gens:") {
            if generators.is_some() {
                return Err(syntax(line_no, trimmed_start + 1, "duplicate `gens:` line"));
            }
            let mut gens = Vec::new();
            for name in rest.split_whitespace() {
                if !is_valid_generator_name(name) {
                    let col = raw.find(name).map_or(1, |c| char_col(raw, c));
                    return Err(syntax(line_no, col, &format!("invalid generator name `{name}`")));
                }
                if gens.iter().any(|g| g == name) {
                    return Err(FpError::DuplicateGenerator(name.to_string()));
                }
                gens.push(name.to_string());
            }
            generators = Some(gens);
        } else if let Some(rest) = body.strip_prefix("rels:") {
            let Some(gens) = generators.as_ref() else {
                return Err(syntax(line_no, trimmed_start + 1, "`rels:` before `gens:`"));
            };
            let offset = trimmed_start + "rels:".len();
            let mut p = WordParser::new(rest, line_no, offset, gens);
            relators.extend(p.relator_list()?);
        } else {
            return Err(syntax(
                line_no,
                trimmed_start + 1,
                "expected `gens:` or `rels:`",
            ));
        }
    }
    let generators = generators.ok_or_else(|| syntax(1, 1, "missing `gens:` line"))?;
    Presentation::new(generators, relators)
}

/// Parses a single word over the given generator names.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Word, FpError> {
    let mut p = WordParser::new(text, 1, 0, generators);
    p.skip_ws();
    if p.peek().is_none() {
        return Ok(Word::identity());
    }
    let w = p.word()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(&format!("unexpected `{c}`")));
    }
    Ok(w)
}

fn syntax(line: usize, column: usize, message: &str) -> FpError {
    FpError::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}

fn char_col(s: &str, byte: usize) -> usize {
    s[..byte].chars().count() + 1
}

struct WordParser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col_offset: usize,
    generators: &'a [String],
}

impl<'a> WordParser<'a> {
    fn new(text: &str, line: usize, col_offset: usize, generators: &'a [String]) -> Self {
        WordParser {
            chars: text.chars().collect(),
            pos: 0,
            line,
            col_offset,
            generators,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.col_offset + self.pos + 1
    }

    fn error(&self, msg: &str) -> FpError {
        syntax(self.line, self.column(), msg)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn relator_list(&mut self) -> Result<Vec<Word>, FpError> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Ok(out);
        }
        loop {
            self.skip_ws();
            out.push(self.word()?);
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some(',') => {
                    self.pos += 1;
                    self.skip_ws();
                    if self.peek().is_none() {
                        return Err(self.error("trailing `,`"));
                    }
                }
                Some(c) => return Err(self.error(&format!("unexpected `{c}`"))),
            }
        }
    }

    /// word := term+
    fn word(&mut self) -> Result<Word, FpError> {
        let mut letters = Vec::new();
        let mut terms = 0;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == '(' || c == '1' => {
                    let t = self.term()?;
                    letters.extend_from_slice(t.letters());
                    terms += 1;
                }
                _ => break,
            }
        }
        if terms == 0 {
            return Err(self.error("expected a word"));
        }
        Ok(Word::reduce_from(letters))
    }

    fn term(&mut self) -> Result<Word, FpError> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.int()?;
            Ok(atom.pow(e))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Word, FpError> {
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = if self.peek() == Some(')') {
                    Word::identity()
                } else {
                    self.word()?
                };
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('1') => {
                self.pos += 1;
                if self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(self.error("unexpected character after `1`"));
                }
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.generators.iter().position(|g| *g == name) {
                    Some(i) => Ok(Word::from_letters(vec![Letter::pos(i)])),
                    None => Err(FpError::UnknownGenerator {
                        name,
                        line: self.line,
                        column: self.col_offset + start + 1,
                    }),
                }
            }
            Some(c) => Err(self.error(&format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of line")),
        }
    }

    fn int(&mut self) -> Result<i64, FpError> {
        let mut negative = false;
        if matches!(self.peek(), Some('-') | Some('\u{2212}')) {
            negative = true;
            self.pos += 1;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer exponent"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let v: i64 = digits
            .parse()
            .map_err(|_| syntax(self.line, self.col_offset + start + 1, "exponent out of range"))?;
        Ok(if negative { -v } else { v })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_preset() {
        let p = parse_presentation("gens: a b\nrels: a^2, b^3, (a b)^5").unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relator_count(), 3);
        let abab = Word::from_letters(
            (0..10).map(|i| Letter::pos(i % 2)).collect(),
        );
        assert_eq!(p.relators()[2], abab);
    }

    #[test]
    fn cancelling_relator() {
        let p = parse_presentation("gens: x\nrels: x x^-1").unwrap();
        assert_eq!(p.relator_count(), 1);
        assert!(p.relators()[0].is_empty());
    }

    #[test]
    fn trefoil_letters() {
        let p = parse_presentation("gens: x y\nrels: x^2 y^-3").unwrap();
        assert_eq!(p.relator_count(), 1);
        assert_eq!(
            p.relators()[0].letters(),
            &[
                Letter::pos(0),
                Letter::pos(0),
                Letter::neg(1),
                Letter::neg(1),
                Letter::neg(1)
            ]
        );
    }

    #[test]
    fn trivial_and_free() {
        let p = parse_presentation("gens:\nrels:\n").unwrap();
        assert_eq!(p, Presentation::trivial());
        let p = parse_presentation("# Z\ngens: x\n").unwrap();
        assert_eq!(p.generator_count(), 1);
        assert_eq!(p.relator_count(), 0);
    }

    #[test]
    fn unicode_minus_and_nested_groups() {
        let p = parse_presentation("gens: a b\nrels: ((a b)^2 a)^−1").unwrap();
        let expected = Word::from_powers(&[(0, 1), (1, 1), (0, 1), (1, 1), (0, 1)]).inverse();
        assert_eq!(p.relators()[0], expected);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_presentation("gens: a\nrels: a^2, c") {
            Err(FpError::UnknownGenerator { name, line, column }) => {
                assert_eq!(name, "c");
                assert_eq!(line, 2);
                assert_eq!(column, 12);
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_presentation("gens: a\nrels: a^") {
            Err(FpError::Syntax { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_presentation("gens: a\nrels: (a"),
            Err(FpError::Syntax { .. })
        ));
        assert!(matches!(
            parse_presentation("rels: a"),
            Err(FpError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_presentation("gens: a a"),
            Err(FpError::DuplicateGenerator(_))
        ));
        assert!(matches!(
            parse_presentation("gens: a\nrels: a,"),
            Err(FpError::Syntax { .. })
        ));
        assert!(matches!(
            parse_presentation("gens: 1a"),
            Err(FpError::Syntax { .. })
        ));
    }

    #[test]
    fn identity_relators_serialize() {
        let p = parse_presentation("gens: x\nrels: 1, x x^-1, ()").unwrap();
        assert_eq!(p.relator_count(), 3);
        let again = parse_presentation(&p.to_string()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn single_word() {
        let gens = vec!["a".to_string(), "b".to_string()];
        assert_eq!(parse_word("a b^-1", &gens).unwrap(), Word::from_powers(&[(0, 1), (1, -1)]));
        assert_eq!(parse_word("", &gens).unwrap(), Word::identity());
    }
}
