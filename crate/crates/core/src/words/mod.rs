//! Free-group words over the symbolic generator alphabets of surface braid
//! presentations.
//!
//! A [`Word`] is always freely reduced. Words do not carry an alphabet: they
//! live in the free group on every [`GenSym`], and membership in a particular
//! presentation's [`Alphabet`] is checked where it matters (exponent vectors,
//! encoding for the integer kernels, parsing against an alphabet).

mod parse;

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use parse::{parse_word, parse_word_in};

/// A generator symbol.
///
/// `Sigma(i)` is the classical braid generator, `A`/`B` the handle loops,
/// `Z` the boundary loops, `PureA(i, j)` the pure braid generators with
/// `i < j`, and `X(k)` an abstract generator (target groups, Schreier
/// generators).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenSym {
    Sigma(u32),
    A(u32),
    B(u32),
    Z(u32),
    PureA(u32, u32),
    X(u32),
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GenSym::Sigma(i) => write!(f, "s{i}"),
            GenSym::A(i) => write!(f, "a{i}"),
            GenSym::B(i) => write!(f, "b{i}"),
            GenSym::Z(i) => write!(f, "z{i}"),
            GenSym::PureA(i, j) => write!(f, "A[{i},{j}]"),
            GenSym::X(i) => write!(f, "x{i}"),
        }
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: GenSym,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: GenSym, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

/// Which side the conjugator goes on.
///
/// `Right` is `a^b = b⁻¹ a b`, `Left` is `ᵇa = b a b⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

/// Freely reduce an arbitrary letter sequence.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        push_reduced(&mut out, l);
    }
    Word(out)
}

fn push_reduced(stack: &mut Vec<Letter>, l: Letter) {
    if stack.last() == Some(&l.inverse()) {
        stack.pop();
    } else {
        stack.push(l);
    }
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: GenSym) -> Self {
        Word(vec![Letter::new(g, false)])
    }

    pub fn gen_inv(g: GenSym) -> Self {
        Word(vec![Letter::new(g, true)])
    }

    /// `g^e` for a single generator.
    pub fn gen_pow(g: GenSym, e: i64) -> Self {
        let l = Letter::new(g, e < 0);
        Word(vec![l; e.unsigned_abs() as usize])
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        free_reduce(letters)
    }

    /// Product of the given words, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Self {
        let mut out = Vec::new();
        for w in words {
            for &l in &w.0 {
                push_reduced(&mut out, l);
            }
        }
        Word(out)
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

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn compose(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &other.0 {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    pub fn conjugate(&self, by: &Word, side: Side) -> Word {
        match side {
            Side::Right => Word::product([&by.inverse(), self, by]),
            Side::Left => Word::product([by, self, &by.inverse()]),
        }
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        Word::product([a, b, &a.inverse(), &b.inverse()])
    }

    /// Cyclically reduce: strip matching inverse pairs from both ends.
    pub fn cyclically_reduced(&self) -> Word {
        let s = &self.0;
        let (mut lo, mut hi) = (0, s.len());
        while hi - lo >= 2 && s[lo] == s[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word(s[lo..hi].to_vec())
    }

    /// Signed letter counts, one slot per alphabet symbol.
    pub fn exponent_vector(&self, alphabet: &Alphabet) -> Result<Vec<i64>> {
        let mut v = vec![0i64; alphabet.len()];
        for l in &self.0 {
            let idx = alphabet.index_of(l.gen).ok_or(Error::UnknownSymbol(l.gen))?;
            v[idx] += l.sign();
        }
        Ok(v)
    }

    /// Substitute each generator by a word.
    pub fn substitute<F: FnMut(GenSym) -> Word>(&self, mut image: F) -> Word {
        let mut out = Vec::new();
        for l in &self.0 {
            let w = image(l.gen);
            let w = if l.inv { w.inverse() } else { w };
            for &m in &w.0 {
                push_reduced(&mut out, m);
            }
        }
        Word(out)
    }

    pub fn generators(&self) -> impl Iterator<Item = GenSym> + '_ {
        self.0.iter().map(|l| l.gen)
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.compose(rhs)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        self.compose(&rhs)
    }
}

impl From<GenSym> for Word {
    fn from(g: GenSym) -> Self {
        Word::gen(g)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_word(self))
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_word(s)
    }
}

/// An ordered list of generator symbols.
///
/// Two alphabets with the same symbols in the same order are equal; there
/// is no other notion of identity.
#[derive(Clone, Debug, Default)]
pub struct Alphabet {
    symbols: Vec<GenSym>,
    index: HashMap<GenSym, usize>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new(symbols: Vec<GenSym>) -> Self {
        let index = symbols.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        Alphabet { symbols, index }
    }

    pub fn symbols(&self) -> &[GenSym] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, g: GenSym) -> Option<usize> {
        self.index.get(&g).copied()
    }

    pub fn contains(&self, g: GenSym) -> bool {
        self.index.contains_key(&g)
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        w.generators().all(|g| self.contains(g))
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.generators().find(|&g| !self.contains(g)) {
            Some(g) => Err(Error::UnknownSymbol(g)),
            None => Ok(()),
        }
    }

    /// Integer letter codes: `2 * index` for a generator, `2 * index + 1`
    /// for its inverse. The inverse of code `c` is `c ^ 1`.
    pub fn encode(&self, w: &Word) -> Result<Vec<u32>> {
        w.letters()
            .iter()
            .map(|l| {
                let i = self.index_of(l.gen).ok_or(Error::UnknownSymbol(l.gen))?;
                Ok(2 * i as u32 + l.inv as u32)
            })
            .collect()
    }

    pub fn decode(&self, codes: &[u32]) -> Word {
        free_reduce(codes.iter().map(|&c| self.letter(c)))
    }

    pub fn letter(&self, code: u32) -> Letter {
        Letter::new(self.symbols[(code / 2) as usize], code & 1 == 1)
    }
}

/// Freely reduce a sequence of integer letter codes in place.
pub fn reduce_codes(codes: &mut Vec<u32>) {
    let mut n = 0;
    for i in 0..codes.len() {
        let c = codes[i];
        if n > 0 && codes[n - 1] == c ^ 1 {
            n -= 1;
        } else {
            codes[n] = c;
            n += 1;
        }
    }
    codes.truncate(n);
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Word, D::Error> {
        let text = String::deserialize(d)?;
        parse_word(&text).map_err(serde::de::Error::custom)
    }
}
