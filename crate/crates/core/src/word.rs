//! Freely reduced words over a named generator alphabet.
//!
//! Every [`Word`] is stored reduced; reduction happens at construction and
//! all operations preserve it. Values are immutable and cheap to clone.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(String, String),
    #[error("alphabet must contain at least one generator")]
    EmptyAlphabet,
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("cannot parse word token `{0}`")]
    BadToken(String),
    #[error("no image provided for generator `{0}`")]
    MissingImage(String),
}

#[derive(Debug)]
struct AlphabetInner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// Ordered set of distinct generator labels. The index <-> label bijection is
/// stable, so Schreier alphabets like `x0..xC` print exactly as named.
#[derive(Clone)]
pub struct Alphabet {
    inner: Arc<AlphabetInner>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty()
                || n == "1"
                || n.contains(|c: char| c.is_whitespace() || c == '^' || c == '-')
            {
                return Err(WordError::InvalidName(n.clone()));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(WordError::DuplicateName(n.clone()));
            }
        }
        Ok(Alphabet {
            inner: Arc::new(AlphabetInner { names, index }),
        })
    }

    /// Alphabet `prefix0, prefix1, ..` of the given rank.
    pub fn numbered(prefix: &str, rank: usize) -> Self {
        Alphabet::new((0..rank).map(|i| format!("{prefix}{i}")))
            .expect("numbered names are valid and distinct")
    }

    pub fn rank(&self) -> usize {
        self.inner.names.len()
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.inner.names[gen]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.inner.names.iter().map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.names.hash(state);
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet{:?}", self.inner.names)
    }
}

/// One signed letter: generator index plus inversion flag.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }
}

/// Freely reduced word. The empty sequence is the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last() == Some(&l.inverse()) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

impl Word {
    pub fn identity(alphabet: &Alphabet) -> Self {
        Word {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    pub fn generator(alphabet: &Alphabet, gen: usize) -> Self {
        assert!(gen < alphabet.rank(), "generator index out of range");
        Word {
            alphabet: alphabet.clone(),
            letters: vec![Letter::new(gen, false)],
        }
    }

    /// Builds a word from raw letters, reducing as it goes.
    pub fn from_letters<I>(alphabet: &Alphabet, letters: I) -> Self
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut buf = Vec::new();
        for l in letters {
            assert!(l.gen < alphabet.rank(), "letter out of range");
            push_reduced(&mut buf, l);
        }
        Word {
            alphabet: alphabet.clone(),
            letters: buf,
        }
    }

    /// Parses the plain-text syntax `a b^-1 a^3`. `1` is the identity.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self, WordError> {
        let mut buf = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                None => (tok, 1i64),
                Some((n, e)) => {
                    let exp: i64 = e.parse().map_err(|_| WordError::BadToken(tok.into()))?;
                    (n, exp)
                }
            };
            let gen = alphabet
                .index_of(name)
                .ok_or_else(|| WordError::UnknownGenerator(name.to_string()))?;
            let inv = exp < 0;
            for _ in 0..exp.unsigned_abs() {
                push_reduced(&mut buf, Letter::new(gen, inv));
            }
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            letters: buf,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_alphabet(&self, other: &Word) -> Result<(), WordError> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(WordError::AlphabetMismatch(
                format!("{:?}", self.alphabet),
                format!("{:?}", other.alphabet),
            ))
        }
    }

    /// Freely reduced concatenation. Associative with the empty word as identity.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        self.check_alphabet(other)?;
        let mut buf = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut buf, l);
        }
        Ok(Word {
            alphabet: self.alphabet.clone(),
            letters: buf,
        })
    }

    pub fn inverse(&self) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut buf = Vec::new();
        for _ in 0..exp.unsigned_abs() {
            for &l in &base.letters {
                push_reduced(&mut buf, l);
            }
        }
        Word {
            alphabet: self.alphabet.clone(),
            letters: buf,
        }
    }

    /// Applies a homomorphism given by generator images; the result is reduced.
    pub fn substitute(&self, images: &Substitution) -> Result<Word, WordError> {
        if self.alphabet != images.source {
            return Err(WordError::AlphabetMismatch(
                format!("{:?}", self.alphabet),
                format!("{:?}", images.source),
            ));
        }
        let mut buf = Vec::new();
        for &l in &self.letters {
            let img = images.images[l.gen]
                .as_ref()
                .ok_or_else(|| WordError::MissingImage(self.alphabet.name(l.gen).to_string()))?;
            if l.inv {
                for &m in img.letters.iter().rev() {
                    push_reduced(&mut buf, m.inverse());
                }
            } else {
                for &m in &img.letters {
                    push_reduced(&mut buf, m);
                }
            }
        }
        Ok(Word {
            alphabet: images.target.clone(),
            letters: buf,
        })
    }

    /// Signed exponent-sum vector, one entry per generator.
    pub fn abelianize(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.alphabet.rank()];
        for l in &self.letters {
            v[l.gen] += if l.inv { -1 } else { 1 };
        }
        v
    }

    /// Sorted list of generators that occur in the word.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.alphabet.rank()];
        for l in &self.letters {
            seen[l.gen] = true;
        }
        seen.iter()
            .enumerate()
            .filter_map(|(i, &s)| s.then_some(i))
            .collect()
    }

    /// Number of occurrences of each generator, ignoring signs.
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut v = vec![0usize; self.alphabet.rank()];
        for l in &self.letters {
            v[l.gen] += 1;
        }
        v
    }

    /// The cyclically reduced core; idempotent.
    pub fn cyclic_reduce(&self) -> Word {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == self.letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word {
            alphabet: self.alphabet.clone(),
            letters: self.letters[lo..hi].to_vec(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = self.alphabet.name(l.gen);
            match (l.inv, run) {
                (false, 1) => write!(f, "{name}")?,
                (false, n) => write!(f, "{name}^{n}")?,
                (true, n) => write!(f, "{name}^-{n}")?,
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Generator-image map backing [`Word::substitute`]. Images may be partial;
/// using a generator without an image is an error.
#[derive(Clone, Debug)]
pub struct Substitution {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Option<Word>>,
}

impl Substitution {
    pub fn new(source: &Alphabet, target: &Alphabet) -> Self {
        Substitution {
            source: source.clone(),
            target: target.clone(),
            images: vec![None; source.rank()],
        }
    }

    /// Total map from a full image list, one word per source generator.
    pub fn total(source: &Alphabet, target: &Alphabet, images: Vec<Word>) -> Self {
        assert_eq!(images.len(), source.rank(), "one image per generator");
        for w in &images {
            assert_eq!(w.alphabet(), target, "image over wrong alphabet");
        }
        Substitution {
            source: source.clone(),
            target: target.clone(),
            images: images.into_iter().map(Some).collect(),
        }
    }

    /// The identity substitution on an alphabet.
    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = (0..alphabet.rank())
            .map(|g| Word::generator(alphabet, g))
            .collect();
        Substitution::total(alphabet, alphabet, images)
    }

    pub fn set(&mut self, gen: usize, image: Word) {
        assert_eq!(image.alphabet(), &self.target, "image over wrong alphabet");
        self.images[gen] = Some(image);
    }
}
