//! Text syntax for words.
//!
//! Generators are `s<k>`, `a<k>`, `b<k>`, `z<k>`, `x<k>` and `A[<i>,<j>]`.
//! Any generator or bracketed commutator `[X,Y]` may carry an integer
//! exponent `^<int>`. Tokens are separated by whitespace.

use super::{free_reduce, Alphabet, GenSym, Letter, Word};
use crate::error::{Error, Result};

pub fn parse_word(text: &str) -> Result<Word> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let w = p.sequence()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(w)
}

/// Parse and check every symbol against `alphabet`.
pub fn parse_word_in(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let w = parse_word(text)?;
    alphabet.check_word(&w)?;
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn sequence(&mut self) -> Result<Word> {
        let mut letters: Vec<Letter> = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b',') | Some(b']') => break,
                _ => {
                    let item = self.item()?;
                    letters.extend_from_slice(item.letters());
                }
            }
        }
        Ok(free_reduce(letters))
    }

    fn item(&mut self) -> Result<Word> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.signed_int()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Word> {
        let start = self.pos;
        let c = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        let g = match c {
            b's' => GenSym::Sigma(self.index()?),
            b'a' => GenSym::A(self.index()?),
            b'b' => GenSym::B(self.index()?),
            b'z' => GenSym::Z(self.index()?),
            b'x' => GenSym::X(self.index()?),
            b'A' => {
                if self.peek() != Some(b'[') {
                    return Err(self.err("expected '[' after 'A'"));
                }
                self.pos += 1;
                self.skip_ws();
                let i = self.index()?;
                self.expect(b',')?;
                self.skip_ws();
                let j = self.index()?;
                self.expect(b']')?;
                if i >= j {
                    self.pos = start;
                    return Err(self.err("pure generator A[i,j] needs i < j"));
                }
                GenSym::PureA(i, j)
            }
            b'[' => {
                let x = self.sequence()?;
                self.expect(b',')?;
                let y = self.sequence()?;
                self.expect(b']')?;
                return Ok(Word::commutator(&x, &y));
            }
            _ => {
                self.pos = start;
                return Err(self.err("unknown symbol"));
            }
        };
        Ok(Word::gen(g))
    }

    fn index(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a positive index"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match text.parse::<u32>() {
            Ok(0) | Err(_) => {
                self.pos = start;
                Err(self.err("index must be a positive integer"))
            }
            Ok(v) => Ok(v),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer exponent"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let v: i64 = text.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }
}

/// Canonical text form: runs of one letter collapse to `g^k`.
pub(super) fn format_word(w: &Word) -> String {
    let mut parts: Vec<String> = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        let e = if l.inv { -(run as i64) } else { run as i64 };
        if e == 1 {
            parts.push(l.gen.to_string());
        } else {
            parts.push(format!("{}^{}", l.gen, e));
        }
        i += run;
    }
    parts.join(" ")
}
