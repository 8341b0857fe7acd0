//! Tietze simplification: substitution of generators that occur once in a
//! relator, and removal of empty and duplicate relators.

use std::collections::HashSet;

use crate::presentations::{Presentation, Relator};
use crate::words::{Alphabet, GenSym, Letter, Word};

fn canonical_cyclic(w: &Word) -> Vec<Letter> {
    // Least rotation of w or w⁻¹, as a key for duplicate detection.
    let mut best: Option<Vec<Letter>> = None;
    for v in [w.clone(), w.inverse()] {
        let l = v.letters();
        for k in 0..l.len().max(1) {
            let rot: Vec<Letter> = l[k..].iter().chain(&l[..k]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

fn tidy(relators: Vec<Relator>) -> Vec<Relator> {
    let mut seen = HashSet::new();
    relators
        .into_iter()
        .filter_map(|r| {
            let word = r.word.cyclically_reduced();
            (!word.is_empty() && seen.insert(canonical_cyclic(&word))).then_some(Relator { word, ..r })
        })
        .collect()
}

fn total_len(rs: &[Relator]) -> usize {
    rs.iter().map(|r| r.word.len()).sum()
}

/// Solve relator `r` for the single occurrence of `g`.
fn solve_for(r: &Word, g: GenSym) -> Option<Word> {
    let letters = r.letters();
    let pos = letters.iter().position(|l| l.gen == g)?;
    if letters.iter().filter(|l| l.gen == g).count() != 1 {
        return None;
    }
    // r = u g^e v = 1  ⇒  g^e = u⁻¹ v⁻¹
    let u = Word::from_letters(letters[..pos].iter().copied());
    let v = Word::from_letters(letters[pos + 1..].iter().copied());
    let rhs = Word::product([&u.inverse(), &v.inverse()]);
    Some(if letters[pos].inv { rhs.inverse() } else { rhs })
}

/// Apply at most `budget` generator eliminations. The result never has more
/// generators or a longer total relator length than `pres`.
pub fn tietze_simplify(pres: &Presentation, budget: usize) -> Presentation {
    let limit = pres.total_relator_length();
    let mut symbols: Vec<GenSym> = pres.alphabet.symbols().to_vec();
    let mut relators = tidy(pres.relators.clone());
    for _ in 0..budget {
        let mut best: Option<(usize, GenSym, usize, Vec<Relator>)> = None;
        for (ri, r) in relators.iter().enumerate() {
            let mut tried = HashSet::new();
            for l in r.word.letters() {
                if !tried.insert(l.gen) {
                    continue;
                }
                let Some(value) = solve_for(&r.word, l.gen) else { continue };
                let next: Vec<Relator> = relators
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != ri)
                    .map(|(_, s)| Relator {
                        label: s.label.clone(),
                        word: s.word.substitute(|h| if h == l.gen { value.clone() } else { Word::gen(h) }),
                    })
                    .collect();
                let next = tidy(next);
                let len = total_len(&next);
                if len <= limit && best.as_ref().is_none_or(|b| len < b.0) {
                    best = Some((len, l.gen, ri, next));
                }
            }
        }
        let Some((_, g, _, next)) = best else { break };
        symbols.retain(|&s| s != g);
        relators = next;
    }
    let mut out = Presentation::custom(Alphabet::new(symbols), relators);
    out.params = pres.params;
    out.notes = pres.notes.clone();
    out
}
