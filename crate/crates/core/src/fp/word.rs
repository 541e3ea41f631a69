use std::fmt;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub const fn pos(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub const fn neg(generator: usize) -> Self {
        Letter::new(generator, true)
    }

    pub fn inv(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Column index in a coset table with `2·generator` for the generator and
    /// `2·generator + 1` for its inverse.
    pub fn column(self) -> usize {
        2 * self.generator + usize::from(self.inverse)
    }

    /// Length-lex rank: `a < a⁻¹ < b < b⁻¹ < …`.
    fn order_key(self) -> usize {
        self.column()
    }
}

/// An element of the free group, as a sequence of letters.
///
/// Words are not reduced automatically; use [`Word::reduced`] or build them
/// through [`Word::reduce_from`].
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// Builds a freely reduced word from `(generator, exponent)` pairs.
    pub fn from_powers(powers: &[(usize, i64)]) -> Self {
        let mut letters = Vec::new();
        for &(g, e) in powers {
            let l = Letter::new(g, e < 0);
            letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        Word::reduce_from(letters)
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::pos(g)])
    }

    pub fn reduce_from<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last() == Some(&l.inv()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
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

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inv())
    }

    pub fn reduced(&self) -> Word {
        Word::reduce_from(self.0.iter().copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Reduced product `self · other`.
    pub fn mul(&self, other: &Word) -> Word {
        Word::reduce_from(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Unreduced concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let n = e.unsigned_abs() as usize;
        Word::reduce_from(std::iter::repeat_n(base.0.iter().copied(), n).flatten())
    }

    /// `c · self · c⁻¹`, reduced.
    pub fn conjugate_by(&self, c: &Word) -> Word {
        Word::reduce_from(
            c.0.iter()
                .chain(self.0.iter())
                .copied()
                .chain(c.0.iter().rev().map(|l| l.inv())),
        )
    }

    /// Exponent sum of generator `g`.
    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.generator == g)
            .map(|l| l.sign())
            .sum()
    }

    pub fn occurrences(&self, g: usize) -> usize {
        self.0.iter().filter(|l| l.generator == g).count()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }

    /// Splits a reduced word as `u · s · u⁻¹` with `s` cyclically reduced;
    /// returns `(u, s)`.
    pub fn cyclic_decomposition(&self) -> (Word, Word) {
        let w = self.reduced();
        let n = w.0.len();
        let mut k = 0;
        while 2 * k + 1 < n && w.0[k] == w.0[n - 1 - k].inv() {
            k += 1;
        }
        (Word(w.0[..k].to_vec()), Word(w.0[k..n - k].to_vec()))
    }

    pub fn cyclically_reduced(&self) -> Word {
        self.cyclic_decomposition().1
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced() && (self.0.len() < 2 || self.0[0] != self.0[self.0.len() - 1].inv())
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// Replaces every letter `x^±1` by `image[x]^±1`, reducing the result.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for l in &self.0 {
            let img = &images[l.generator];
            if l.inverse {
                out.extend(img.0.iter().rev().map(|x| x.inv()));
            } else {
                out.extend(img.0.iter().copied());
            }
        }
        Word::reduce_from(out)
    }

    /// Rewrites generator indices through `map`.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| Letter::new(map(l.generator), l.inverse))
                .collect(),
        )
    }

    /// Canonical representative of the set of cyclic permutations of the word
    /// and of its inverse. Two cyclically reduced words with equal keys have
    /// the same normal closure.
    pub fn cyclic_class_key(&self) -> Word {
        let s = self.cyclically_reduced();
        let inv = s.inverse();
        let n = s.len();
        let mut best = s.clone();
        for k in 0..n.max(1) {
            for cand in [s.rotate(k), inv.rotate(k)] {
                if cand.length_lex_cmp(&best).is_lt() {
                    best = cand;
                }
            }
        }
        best
    }

    /// Shortlex order using `a < a⁻¹ < b < b⁻¹ < …`.
    pub fn length_lex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| {
            self.0
                .iter()
                .map(|l| l.order_key())
                .cmp(other.0.iter().map(|l| l.order_key()))
        })
    }

    /// Formats with run-length exponents using the given generator names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("g{}^-1", l.generator)
                } else {
                    format!("g{}", l.generator)
                }
            })
            .collect();
        write!(f, "{}", s.join(" "))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.length_lex_cmp(other)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = &self.names[l.generator];
            match (l.inverse, run) {
                (false, 1) => write!(f, "{name}")?,
                (false, r) => write!(f, "{name}^{r}")?,
                (true, r) => write!(f, "{name}^-{r}")?,
            }
            i += run;
        }
        Ok(())
    }
}

/// Iterates freely reduced words over `generators` generators in shortlex
/// order, from length `0` up to `max_len`.
pub struct ReducedWords {
    generators: usize,
    max_len: usize,
    current: Option<Vec<Letter>>,
}

impl ReducedWords {
    pub fn new(generators: usize, max_len: usize) -> Self {
        ReducedWords {
            generators,
            max_len,
            current: Some(Vec::new()),
        }
    }

    fn letter(k: usize) -> Letter {
        Letter::new(k / 2, k % 2 == 1)
    }

    /// Smallest reduced word of length `len`, or `None` when no letters exist.
    fn first_of_length(&self, len: usize) -> Option<Vec<Letter>> {
        if len > 0 && self.generators == 0 {
            return None;
        }
        let mut v = Vec::with_capacity(len);
        for _ in 0..len {
            let mut k = 0;
            while v.last() == Some(&Self::letter(k).inv()) {
                k += 1;
            }
            v.push(Self::letter(k));
        }
        Some(v)
    }

    /// Shortlex successor among reduced words of the same length.
    fn successor(&self, w: &[Letter]) -> Option<Vec<Letter>> {
        let alphabet = 2 * self.generators;
        let mut v = w.to_vec();
        let mut pos = v.len();
        while pos > 0 {
            pos -= 1;
            let mut k = v[pos].column() + 1;
            while k < alphabet && pos > 0 && Self::letter(k) == v[pos - 1].inv() {
                k += 1;
            }
            if k < alphabet {
                v[pos] = Self::letter(k);
                v.truncate(pos + 1);
                // fill the suffix with the smallest admissible letters
                while v.len() < w.len() {
                    let mut k = 0;
                    while Some(&Self::letter(k).inv()) == v.last() {
                        k += 1;
                    }
                    v.push(Self::letter(k));
                }
                return Some(v);
            }
        }
        None
    }
}

impl Iterator for ReducedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.take()?;
        let next = self.successor(&cur).or_else(|| {
            let len = cur.len() + 1;
            if len > self.max_len {
                None
            } else {
                self.first_of_length(len)
            }
        });
        self.current = next;
        Some(Word(cur))
    }
}
