use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

/// Index of a symbol in an automaton's alphabet.
pub type Symbol = usize;

/// A finite word over an indexed alphabet.
///
/// Words order by length first and lexicographically (by symbol index)
/// second. Every enumeration and witness search in the crate uses this
/// order, so the first word found is always the shortlex-smallest one.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Symbol> {
        self.0
    }

    pub fn push(&mut self, a: Symbol) {
        self.0.push(a);
    }

    /// `self` followed by `a`.
    pub fn appended(&self, a: Symbol) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(a);
        Word(v)
    }

    pub fn concat(&self, other: &[Symbol]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }

    /// Renders the word with the given alphabet tokens.
    pub fn tokens<'a>(&self, alphabet: &'a [String]) -> Vec<&'a str> {
        self.0.iter().map(|&a| alphabet[a].as_str()).collect()
    }

    /// Space-separated token rendering, `ε` for the empty word.
    pub fn display_with(&self, alphabet: &[String]) -> String {
        if self.0.is_empty() {
            "ε".to_string()
        } else {
            self.tokens(alphabet).join(" ")
        }
    }

    /// All words of length exactly `len` over `alphabet_size` symbols, in
    /// lexicographic order.
    pub fn all_of_length(alphabet_size: usize, len: usize) -> impl Iterator<Item = Word> {
        let total = (alphabet_size as u128).pow(len as u32);
        (0..total).map(move |mut code| {
            let mut v = vec![0; len];
            for slot in v.iter_mut().rev() {
                *slot = (code % alphabet_size as u128) as usize;
                code /= alphabet_size as u128;
            }
            Word(v)
        })
    }

    /// All words of length at most `max_len`, in shortlex order.
    pub fn all_up_to(alphabet_size: usize, max_len: usize) -> impl Iterator<Item = Word> {
        (0..=max_len).flat_map(move |len| Word::all_of_length(alphabet_size, len))
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
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
        write!(f, "Word{:?}", self.0)
    }
}
