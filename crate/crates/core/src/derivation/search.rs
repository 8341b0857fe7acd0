//! Best-first search for a relator-insertion derivation of `w = ε`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use serde::Serialize;

use super::{apply_move, piece, DerivationCertificate, Move};
use crate::error::Result;
use crate::morphisms::QuotientCheck;
use crate::presentations::Presentation;
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Distinct reduced words the search may visit.
    pub max_nodes: usize,
    /// Word-length cap; `None` means `|start| + 2·longest relator`.
    pub max_len: Option<usize>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 200_000, max_len: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum ProofOutcome {
    Proved { certificate: DerivationCertificate },
    /// The budget ran out. `best` is the shortest word reached.
    Unknown { best: Word, explored: usize },
    /// `lhs·rhs⁻¹` is nontrivial in the named quotient, so the identity is false.
    Refuted { quotient: String },
}

impl ProofOutcome {
    pub fn certificate(&self) -> Option<&DerivationCertificate> {
        match self {
            ProofOutcome::Proved { certificate } => Some(certificate),
            _ => None,
        }
    }
}

struct Piece {
    codes: Vec<u32>,
    relator: usize,
    rot: usize,
    sign: i8,
}

struct Node {
    codes: Vec<u32>,
    parent: usize,
    pos: usize,
    piece: usize,
}

/// Search for a certificate of `lhs = rhs` in `pres`.
///
/// Moves are restricted to insertions that cancel against a neighbouring
/// letter; nodes are expanded shortest word first, ties in discovery order,
/// so the result is deterministic.
pub fn prove_equal(pres: &Presentation, lhs: &Word, rhs: &Word, budget: Budget) -> Result<ProofOutcome> {
    let alphabet = &pres.alphabet;
    alphabet.check_word(lhs)?;
    alphabet.check_word(rhs)?;
    let start = lhs.compose(&rhs.inverse());
    let cert = |moves: Vec<Move>| DerivationCertificate {
        presentation: pres.id(),
        start: start.clone(),
        moves,
        end: Word::identity(),
    };
    if start.is_empty() {
        return Ok(ProofOutcome::Proved { certificate: cert(Vec::new()) });
    }
    if let Some(quotient) = QuotientCheck::new(pres).failing_quotient(&start) {
        return Ok(ProofOutcome::Refuted { quotient });
    }

    let pieces = pieces(pres)?;
    let letters = 2 * alphabet.len();
    let mut by_first: Vec<Vec<usize>> = vec![Vec::new(); letters];
    let mut by_last: Vec<Vec<usize>> = vec![Vec::new(); letters];
    for (k, p) in pieces.iter().enumerate() {
        by_first[p.codes[0] as usize].push(k);
        by_last[*p.codes.last().expect("pieces are nonempty") as usize].push(k);
    }
    let longest = pres.relators.iter().map(|r| r.word.len()).max().unwrap_or(0);
    let cap = budget.max_len.unwrap_or(start.len() + 2 * longest);

    let root = alphabet.encode(&start)?;
    let mut nodes = vec![Node { codes: root.clone(), parent: usize::MAX, pos: 0, piece: 0 }];
    let mut seen: HashSet<Vec<u32>> = HashSet::from([root]);
    let mut heap = BinaryHeap::from([Reverse((start.len(), 0usize))]);
    let mut best = 0usize;

    while let Some(Reverse((_, id))) = heap.pop() {
        let w = nodes[id].codes.clone();
        for pos in 0..=w.len() {
            let left = pos.checked_sub(1).map(|i| w[i] ^ 1);
            let right = w.get(pos).map(|&c| c ^ 1);
            let firsts = left.map_or(&[][..], |c| &by_first[c as usize][..]);
            let lasts = right.map_or(&[][..], |c| &by_last[c as usize][..]);
            let candidates = firsts
                .iter()
                .chain(lasts.iter().filter(|&&k| Some(pieces[k].codes[0]) != left));
            for &k in candidates {
                let child = apply_move(&w, pos, &pieces[k].codes);
                if child.len() > cap || seen.contains(&child) {
                    continue;
                }
                let child_id = nodes.len();
                let len = child.len();
                nodes.push(Node { codes: child.clone(), parent: id, pos, piece: k });
                if len == 0 {
                    return Ok(ProofOutcome::Proved { certificate: cert(trace(pres, &nodes, &pieces, child_id)) });
                }
                if len < nodes[best].codes.len() {
                    best = child_id;
                }
                seen.insert(child);
                if seen.len() >= budget.max_nodes {
                    return Ok(ProofOutcome::Unknown {
                        best: alphabet.decode(&nodes[best].codes),
                        explored: seen.len(),
                    });
                }
                heap.push(Reverse((len, child_id)));
            }
        }
    }
    Ok(ProofOutcome::Unknown { best: alphabet.decode(&nodes[best].codes), explored: seen.len() })
}

/// Every distinct nonempty rotation of every relator and its inverse.
fn pieces(pres: &Presentation) -> Result<Vec<Piece>> {
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for (i, r) in pres.relators.iter().enumerate() {
        let codes = pres.alphabet.encode(&r.word)?;
        for sign in [1i8, -1] {
            for rot in 0..codes.len() {
                let p = piece(&codes, rot, sign);
                if !p.is_empty() && seen.insert(p.clone()) {
                    out.push(Piece { codes: p, relator: i, rot, sign });
                }
            }
        }
    }
    Ok(out)
}

fn trace(pres: &Presentation, nodes: &[Node], pieces: &[Piece], mut id: usize) -> Vec<Move> {
    let mut moves = Vec::new();
    while nodes[id].parent != usize::MAX {
        let n = &nodes[id];
        let p = &pieces[n.piece];
        moves.push(Move { pos: n.pos, label: pres.relator_key(p.relator), rot: p.rot, sign: p.sign });
        id = n.parent;
    }
    moves.reverse();
    moves
}
