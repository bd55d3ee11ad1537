use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter in an [`Alphabet`].
pub type Symbol = usize;
/// Dense state index.
pub type State = usize;

/// A finite, ordered set of named letters. The order fixes every canonical
/// (shortlex) enumeration in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::Invalid("alphabet must be nonempty".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(Error::Invalid(format!("bad symbol name {s:?}")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::Invalid(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The alphabet `{a, b, ...}` on the first `n` lowercase letters.
    pub fn letters(n: usize) -> Self {
        assert!((1..=26).contains(&n));
        Alphabet {
            symbols: (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, a: Symbol) -> &str {
        &self.symbols[a]
    }

    pub fn index_of(&self, name: &str) -> Option<Symbol> {
        self.symbols.iter().position(|s| s == name)
    }

    fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a word. With single-character symbols the word is read letter by
    /// letter; otherwise symbols are separated by `.`. `ε` and the empty string
    /// denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "ε" || text == "eps" {
            return Ok(Word::empty());
        }
        let lookup = |tok: &str| {
            self.index_of(tok)
                .ok_or_else(|| Error::Invalid(format!("unknown symbol {tok:?}")))
        };
        let letters = if self.single_char() {
            text.chars()
                .map(|c| lookup(c.encode_utf8(&mut [0; 4])))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.split('.').map(lookup).collect::<Result<Vec<_>>>()?
        };
        Ok(Word(letters))
    }

    /// Renders a word with the inverse convention of [`Alphabet::parse_word`].
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        let sep = if self.single_char() { "" } else { "." };
        w.0.iter()
            .map(|&a| self.symbols[a].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub(crate) fn check_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.symbols.join(" "),
                right: other.symbols.join(" "),
            })
        }
    }
}

/// A finite word over symbol indices. Ordered shortlex: by length first, then
/// lexicographically in alphabet order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(a: Symbol) -> Self {
        Word(vec![a])
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Symbol> {
        self.0.first().copied()
    }

    pub fn push(&mut self, a: Symbol) {
        self.0.push(a);
    }

    pub fn append(&self, a: Symbol) -> Word {
        let mut v = self.0.clone();
        v.push(a);
        Word(v)
    }

    pub fn prepend(&self, a: Symbol) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(a);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// Everything after the first letter.
    pub fn tail(&self) -> Word {
        Word(self.0.get(1..).unwrap_or(&[]).to_vec())
    }

    pub fn into_inner(self) -> Vec<Symbol> {
        self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for &a in &self.0 {
            if a < 26 {
                write!(f, "{}", (b'a' + a as u8) as char)?;
            } else {
                write!(f, "<{a}>")?;
            }
        }
        Ok(())
    }
}

/// All words of length `min_len..=max_len` over `k` letters, in shortlex order.
pub fn words_between(k: usize, min_len: usize, max_len: usize) -> impl Iterator<Item = Word> {
    (min_len..=max_len).flat_map(move |len| {
        let total = k.checked_pow(len as u32).expect("word enumeration overflow");
        (0..total).map(move |mut n| {
            let mut letters = vec![0; len];
            for slot in letters.iter_mut().rev() {
                *slot = n % k;
                n /= k;
            }
            Word(letters)
        })
    })
}

/// All words of length at most `max_len`, shortlex.
pub fn words_upto(k: usize, max_len: usize) -> impl Iterator<Item = Word> {
    words_between(k, 0, max_len)
}
