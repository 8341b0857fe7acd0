//! Dehn's algorithm for small-cancellation presentations, in particular
//! closed orientable surface groups of genus at least 2.

use crate::words::{reduce_codes, Alphabet, GenSym, Word};

/// The surface relator `[x_{2g}⁻¹, x_{2g−1}]⋯[x₂⁻¹, x₁]` on `x1 … x{2g}`.
pub fn surface_relator(g: u32) -> Word {
    let parts: Vec<Word> = (1..=g)
        .rev()
        .map(|m| {
            Word::commutator(&Word::gen_inv(GenSym::X(2 * m)), &Word::gen(GenSym::X(2 * m - 1)))
        })
        .collect();
    Word::product(parts.iter())
}

pub fn surface_alphabet(g: u32) -> Alphabet {
    Alphabet::new((1..=2 * g).map(GenSym::X).collect())
}

/// A symmetrized relator set with rotations bucketed by first letter.
#[derive(Clone, Debug)]
pub struct Dehn {
    alphabet: Alphabet,
    rotations: Vec<Vec<u32>>,
    by_first: Vec<Vec<usize>>,
}

impl Dehn {
    /// Only meaningful when the relators satisfy C′(1/6); the caller vouches.
    pub fn new(alphabet: Alphabet, relators: &[Word]) -> Self {
        let mut rotations = Vec::new();
        for r in relators {
            let r = r.cyclically_reduced();
            for w in [r.clone(), r.inverse()] {
                let codes = alphabet.encode(&w).expect("relator lies in the alphabet");
                for k in 0..codes.len() {
                    let mut rot = codes[k..].to_vec();
                    rot.extend_from_slice(&codes[..k]);
                    if !rotations.contains(&rot) {
                        rotations.push(rot);
                    }
                }
            }
        }
        let mut by_first = vec![Vec::new(); 2 * alphabet.len()];
        for (i, r) in rotations.iter().enumerate() {
            by_first[r[0] as usize].push(i);
        }
        Dehn { alphabet, rotations, by_first }
    }

    pub fn surface(g: u32) -> Self {
        assert!(g >= 2, "Dehn's algorithm needs genus at least 2");
        Dehn::new(surface_alphabet(g), &[surface_relator(g)])
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Run the algorithm on a code word, returning the irreducible cyclic
    /// representative (up to rotation) it stops at.
    pub fn reduce_codes(&self, mut w: Vec<u32>) -> Vec<u32> {
        'outer: loop {
            reduce_codes(&mut w);
            cyclic_reduce(&mut w);
            let len = w.len();
            for i in 0..len {
                for &ri in &self.by_first[w[i] as usize] {
                    let r = &self.rotations[ri];
                    let m = (0..len.min(r.len())).take_while(|&k| w[(i + k) % len] == r[k]).count();
                    if 2 * m > r.len() {
                        // w ~ u·rest with u = r[..m] and r = u·v, so u = v⁻¹.
                        let mut next: Vec<u32> = r[m..].iter().rev().map(|c| c ^ 1).collect();
                        next.extend((m..len).map(|k| w[(i + k) % len]));
                        w = next;
                        continue 'outer;
                    }
                }
            }
            return w;
        }
    }

    pub fn is_trivial(&self, w: &Word) -> crate::error::Result<bool> {
        Ok(self.reduce_codes(self.alphabet.encode(w)?).is_empty())
    }
}

fn cyclic_reduce(w: &mut Vec<u32>) {
    let mut k = 0;
    while w.len() >= 2 * (k + 1) && w[k] == w[w.len() - 1 - k] ^ 1 {
        k += 1;
    }
    if k > 0 {
        w.drain(w.len() - k..);
        w.drain(..k);
    }
}
