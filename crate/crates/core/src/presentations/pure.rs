//! Pure braid presentations on the generators `A_{i,j}`.
//!
//! Indices `1..=walls` are wall generators (handle loops, then boundary
//! loops); the remaining `n` indices are strands.

use std::collections::HashSet;

use super::{a, b, s, z, Builder};
use crate::error::{Error, Result};
use crate::words::{GenSym, Word};

/// Index bookkeeping for the `A_{i,j}` generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PureIndexing {
    pub n: u32,
    pub g: u32,
    pub p: u32,
}

impl PureIndexing {
    pub fn new(n: u32, g: u32, p: u32) -> Self {
        PureIndexing { n, g, p }
    }

    /// Number of wall indices: `2g + p − 1`, or `2g` on a closed surface.
    pub fn walls(&self) -> u32 {
        2 * self.g + self.p.max(1) - 1
    }

    pub fn first_strand(&self) -> u32 {
        self.walls() + 1
    }

    pub fn last_strand(&self) -> u32 {
        self.walls() + self.n
    }

    pub fn is_wall(&self, i: u32) -> bool {
        (1..=self.walls()).contains(&i)
    }

    /// Strand coordinate (1-based) of a strand index.
    pub fn strand(&self, j: u32) -> u32 {
        j - self.walls()
    }

    pub fn is_generator(&self, i: u32, j: u32) -> bool {
        i >= 1 && i < j && j >= self.first_strand() && j <= self.last_strand()
    }
}

/// Generator pairs `(i, j)`, ordered by `j` then `i`.
pub fn pure_generator_pairs(idx: &PureIndexing) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for j in idx.first_strand()..=idx.last_strand() {
        for i in 1..j {
            out.push((i, j));
        }
    }
    out
}

/// The braid word of `A_{i,j}` in the corresponding full braid presentation.
///
/// Strand pairs give the classical band generator
/// `σ_{s(j)−1}⋯σ_{s(i)+1} σ_{s(i)}² σ_{s(i)+1}⁻¹⋯σ_{s(j)−1}⁻¹`; wall pairs give
/// `σ_{s(j)−1}⋯σ₁ c_i⁻¹ σ₁⁻¹⋯σ_{s(j)−1}⁻¹` where `c_i` is `b_{g−⌈i/2⌉+1}` for odd
/// `i ≤ 2g`, `a_{g−i/2+1}` for even `i ≤ 2g`, and `z_{i−2g}` beyond.
pub fn expand_pure_generator(i: u32, j: u32, idx: &PureIndexing) -> Result<Word> {
    if !idx.is_generator(i, j) {
        return Err(Error::IndexOutOfRange(format!("A[{i},{j}] is not a pure generator")));
    }
    let sj = idx.strand(j);
    let (core, bottom) = if idx.is_wall(i) {
        let c = if i <= 2 * idx.g {
            if i % 2 == 1 {
                b(idx.g - i.div_ceil(2) + 1)
            } else {
                a(idx.g - i / 2 + 1)
            }
        } else {
            z(i - 2 * idx.g)
        };
        (c.inverse(), 1)
    } else {
        let si = idx.strand(i);
        (s(si).pow(2), si + 1)
    };
    let up: Vec<Word> = (bottom..sj).rev().map(s).collect();
    let conj = Word::product(up.iter());
    Ok(Word::product([&conj, &core, &conj.inverse()]))
}

fn pa(i: u32, j: u32) -> Word {
    Word::gen(GenSym::PureA(i, j))
}

fn pai(i: u32, j: u32) -> Word {
    Word::gen_inv(GenSym::PureA(i, j))
}

fn conj_by(x: &Word, by: &Word) -> Word {
    Word::product([&by.inverse(), x, by])
}

pub(super) fn build(bld: &mut Builder) {
    let (n, g, p) = (bld.params.n, bld.params.g, bld.params.p);
    let closed = bld.params.closed;
    let idx = PureIndexing::new(n, g, p);
    let pairs = pure_generator_pairs(&idx);
    bld.gens(pairs.iter().map(|&(i, j)| GenSym::PureA(i, j)));
    let is_gen: HashSet<(u32, u32)> = pairs.iter().copied().collect();
    let tg = 2 * g;
    let strands = idx.first_strand()..=idx.last_strand();

    // (PR1) commuting pairs. The adjacency clause admits r even below 2g, or
    // r beyond 2g; the punctured presentation includes r = 2g, the closed one does not.
    for &(i, j) in &pairs {
        for &(r, s_) in &pairs {
            let disjoint = i < j && j < r && r < s_;
            let nested = r + 1 < i && i < j && j < s_;
            let tail = if closed { r > tg } else { r >= tg };
            let adjacent = i == r + 1 && j < s_ && ((r % 2 == 0 && r < tg) || tail);
            if disjoint || nested || adjacent {
                bld.relation("(PR1)", conj_by(&pa(r, s_), &pa(i, j)), pa(r, s_));
            }
        }
    }
    for &(i, j) in &pairs {
        for s_ in (j + 1)..=idx.last_strand() {
            let rhs = Word::product([&pa(i, s_), &pa(j, s_), &pai(i, s_)]);
            bld.relation("(PR2)", conj_by(&pa(j, s_), &pa(i, j)), rhs);
        }
    }
    for &(i, j) in &pairs {
        for s_ in (j + 1)..=idx.last_strand() {
            let rhs =
                Word::product([&pa(i, s_), &pa(j, s_), &pa(i, s_), &pai(j, s_), &pai(i, s_)]);
            bld.relation("(PR3)", conj_by(&pa(i, s_), &pa(i, j)), rhs);
        }
    }
    for &(i, j) in &pairs {
        for &(r, s_) in &pairs {
            let linked = i + 1 < r && r < j && j < s_;
            let adjacent = i + 1 == r && r < j && j < s_ && ((r % 2 == 1 && r < tg) || r > tg);
            if linked || adjacent {
                let c = Word::commutator(&pa(i, s_), &pa(j, s_));
                let rhs = Word::product([&c, &pa(r, s_), &c.inverse()]);
                bld.relation("(PR4)", conj_by(&pa(r, s_), &pa(i, j)), rhs);
            }
        }
    }
    // (ER1)/(ER2) tie the two walls (2k−1, 2k) of one handle. In (ER1) the
    // strand generator enters inverted.
    for r in (1..tg).step_by(2) {
        for j in strands.clone() {
            for s_ in (j + 1)..=idx.last_strand() {
                debug_assert!(is_gen.contains(&(r + 1, j)) && is_gen.contains(&(j, s_)));
                let rhs = Word::product([&pa(r, s_), &pa(r + 1, s_), &pai(j, s_), &pai(r + 1, s_)]);
                bld.relation("(ER1)", conj_by(&pa(r, s_), &pa(r + 1, j)), rhs);
            }
        }
    }
    for r in (2..=tg).step_by(2) {
        for j in strands.clone() {
            for s_ in (j + 1)..=idx.last_strand() {
                let rhs = Word::product([
                    &pa(r - 1, s_),
                    &pa(j, s_),
                    &pai(r - 1, s_),
                    &pa(r, s_),
                    &pa(j, s_),
                    &pa(r - 1, s_),
                    &pai(j, s_),
                    &pai(r - 1, s_),
                ]);
                bld.relation("(ER2)", conj_by(&pa(r, s_), &pa(r - 1, j)), rhs);
            }
        }
    }
    if closed {
        for k in 1..=n {
            let col = tg + k;
            let comms: Vec<Word> = (1..=g)
                .rev()
                .map(|m| Word::commutator(&pai(2 * m, col), &pa(2 * m - 1, col)))
                .collect();
            let mut rhs: Vec<Word> = ((tg + 1)..col).map(|l| pa(l, col)).collect();
            rhs.extend(((col + 1)..=(tg + n)).map(|j| pa(col, j)));
            bld.relation("(TR)", Word::product(comms.iter()), Word::product(rhs.iter()));
        }
    }
}
