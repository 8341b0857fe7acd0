//! Reidemeister–Schreier presentations of finite-index subgroups.

use crate::error::Result;
use crate::presentations::{Presentation, Relator};
use crate::words::{Alphabet, GenSym, Letter, Word};

use super::CosetTable;

/// Schreier generators `t(c)·x·t(c·x)⁻¹` of a coset table, numbered
/// `x1, x2, …` in (coset, generator) order, skipping those that are free
/// reductions of ε (tree edges of the transversal).
#[derive(Clone, Debug)]
pub struct SchreierGenerators {
    /// `slot[c * gens + g]` is the Schreier generator number, if nontrivial.
    slot: Vec<Option<u32>>,
    gens: usize,
    words: Vec<Word>,
}

impl SchreierGenerators {
    pub fn new(table: &CosetTable) -> Self {
        let gens = table.alphabet().len();
        let t = table.transversal();
        let mut slot = Vec::with_capacity(table.index() * gens);
        let mut words = Vec::new();
        for c in 0..table.index() as u32 {
            for g in 0..gens as u32 {
                let d = table.action(c, 2 * g);
                let x = Word::gen(table.alphabet().symbols()[g as usize]);
                let w = Word::product([&t[c as usize], &x, &t[d as usize].inverse()]);
                if w.is_empty() {
                    slot.push(None);
                } else {
                    words.push(w);
                    slot.push(Some(words.len() as u32));
                }
            }
        }
        SchreierGenerators { slot, gens, words }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The word in the ambient group that `x<k>` stands for.
    pub fn word(&self, k: u32) -> &Word {
        &self.words[k as usize - 1]
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new((1..=self.words.len() as u32).map(GenSym::X).collect())
    }

    /// Rewrite a code word traced from `coset`; returns the rewritten word
    /// and the end coset.
    pub fn rewrite_codes(&self, table: &CosetTable, coset: u32, codes: &[u32]) -> (Word, u32) {
        let mut letters = Vec::new();
        let mut c = coset;
        for &x in codes {
            let g = (x / 2) as usize;
            if x % 2 == 0 {
                if let Some(k) = self.slot[c as usize * self.gens + g] {
                    letters.push(Letter::new(GenSym::X(k), false));
                }
                c = table.action(c, x);
            } else {
                c = table.action(c, x);
                if let Some(k) = self.slot[c as usize * self.gens + g] {
                    letters.push(Letter::new(GenSym::X(k), true));
                }
            }
        }
        (Word::from_letters(letters), c)
    }
}

/// Rewrite a subgroup element as a word in the Schreier generators; `None`
/// when `w` does not lie in the subgroup.
pub fn rewrite_subgroup_word(table: &CosetTable, gens: &SchreierGenerators, w: &Word) -> Result<Option<Word>> {
    let codes = table.alphabet().encode(w)?;
    let (out, end) = gens.rewrite_codes(table, 0, &codes);
    Ok((end == 0).then_some(out))
}

/// The subgroup presentation on the nontrivial Schreier generators, one
/// rewritten relator per (coset, relator) pair; relators that rewrite to ε
/// are dropped.
pub fn reidemeister_schreier(pres: &Presentation, table: &CosetTable) -> Result<Presentation> {
    let gens = SchreierGenerators::new(table);
    let mut relators = Vec::new();
    for r in &pres.relators {
        let codes = table.alphabet().encode(&r.word)?;
        for c in 0..table.index() as u32 {
            let (w, end) = gens.rewrite_codes(table, c, &codes);
            debug_assert_eq!(end, c, "complete table closes every relator");
            if !w.is_empty() {
                relators.push(Relator { label: format!("{}@{}", r.label, c + 1), word: w });
            }
        }
    }
    Ok(Presentation::custom(gens.alphabet(), relators))
}
