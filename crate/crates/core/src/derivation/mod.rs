//! Equational proofs modulo a presentation: replayable certificates of
//! relator insertions, a bounded search that produces them, and a corpus of
//! named identities to prove.

mod corpus;
mod search;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentations::Presentation;
use crate::words::{reduce_codes, Word};

pub use corpus::{identity_suite, CorpusEntry, Expectation};
pub use search::{prove_equal, Budget, ProofOutcome};

/// Insert the cyclic rotation `rot` of relator `label` (inverted when
/// `sign < 0`) before letter `pos`, then freely reduce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub pos: usize,
    pub label: String,
    pub rot: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationCertificate {
    pub presentation: String,
    pub start: Word,
    pub moves: Vec<Move>,
    pub end: Word,
}

impl DerivationCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }
}

/// The inserted piece: rotation `rot` of `r`, inverted for negative sign.
pub(crate) fn piece(r: &[u32], rot: usize, sign: i8) -> Vec<u32> {
    let mut out: Vec<u32> = r[rot..].iter().chain(&r[..rot]).copied().collect();
    if sign < 0 {
        out.reverse();
        out.iter_mut().for_each(|c| *c ^= 1);
    }
    reduce_codes(&mut out);
    out
}

/// Apply one move to a reduced code word.
pub(crate) fn apply_move(w: &[u32], pos: usize, piece: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::with_capacity(w.len() + piece.len());
    out.extend_from_slice(&w[..pos]);
    for &c in piece.iter().chain(&w[pos..]) {
        if out.last() == Some(&(c ^ 1)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

/// True iff the moves carry `start` to `end` in `pres`.
pub fn replay(pres: &Presentation, cert: &DerivationCertificate) -> Result<bool> {
    let alphabet = &pres.alphabet;
    let mut w = alphabet.encode(&cert.start)?;
    for m in &cert.moves {
        let i = pres
            .find_relator_key(&m.label)
            .ok_or_else(|| Error::UnknownRelator(m.label.clone()))?;
        let r = alphabet.encode(&pres.relators[i].word)?;
        if m.pos > w.len() {
            return Err(Error::PositionOutOfRange { pos: m.pos, len: w.len() });
        }
        if m.rot >= r.len().max(1) || !matches!(m.sign, 1 | -1) {
            return Err(Error::IndexOutOfRange(format!(
                "rotation {} sign {} of {} (length {})",
                m.rot,
                m.sign,
                m.label,
                r.len()
            )));
        }
        let p = if r.is_empty() { Vec::new() } else { piece(&r, m.rot, m.sign) };
        w = apply_move(&w, m.pos, &p);
    }
    Ok(w == alphabet.encode(&cert.end)?)
}
