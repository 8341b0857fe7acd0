//! HLT coset enumeration with lookahead and compaction.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentations::Presentation;
use crate::words::{reduce_codes, Alphabet, Word};

const NONE: u32 = u32::MAX;

/// Environment variable overriding [`DEFAULT_MAX_COSETS`].
pub const MAX_COSETS_ENV: &str = "SBK_MAX_COSETS";
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

/// `DEFAULT_MAX_COSETS`, or the value of `SBK_MAX_COSETS` when it parses.
pub fn default_max_cosets() -> usize {
    std::env::var(MAX_COSETS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_COSETS)
}

/// A complete coset table, cosets numbered `0..index` in breadth-first
/// order from the subgroup coset 0. Column `c` is the action of alphabet
/// letter code `c` (generator `c / 2`, inverted when `c` is odd).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    alphabet: Alphabet,
    rows: Vec<Vec<u32>>,
    transversal: Vec<Word>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableHeader {
    pub index: usize,
    pub complete: bool,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn coset_count(&self) -> usize {
        self.rows.len()
    }

    /// Tables are only ever returned complete.
    pub fn complete(&self) -> bool {
        true
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn action(&self, coset: u32, code: u32) -> u32 {
        self.rows[coset as usize][code as usize]
    }

    /// Schreier transversal: `transversal()[c]` carries coset 0 to `c`.
    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }

    /// Follow a code word from `coset`.
    pub fn trace_codes(&self, coset: u32, codes: &[u32]) -> u32 {
        codes.iter().fold(coset, |c, &x| self.action(c, x))
    }

    pub fn trace(&self, coset: u32, w: &Word) -> Result<u32> {
        Ok(self.trace_codes(coset, &self.alphabet.encode(w)?))
    }

    pub fn header(&self) -> TableHeader {
        TableHeader { index: self.index(), complete: self.complete() }
    }

    /// `coset,generator,image` rows, cosets 1-based, columns in alphabet
    /// order with each generator followed by its inverse.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("coset,generator,image\n");
        for (c, row) in self.rows.iter().enumerate() {
            for (code, &img) in row.iter().enumerate() {
                let l = self.alphabet.letter(code as u32);
                let name = if l.inv { format!("{}^-1", l.gen) } else { l.gen.to_string() };
                out.push_str(&format!("{},{},{}\n", c + 1, name, img + 1));
            }
        }
        out
    }
}

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    max: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(cols: usize, max: usize) -> Self {
        Enumerator { cols, table: vec![NONE; cols], parent: vec![0], live: 1, max, queue: Vec::new() }
    }

    fn total(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: u32) -> u32 {
        self.table[c as usize * self.cols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u32, v: u32) {
        self.table[c as usize * self.cols + x as usize] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: u32) -> u32 {
        let d = self.total() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        d
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut k = c;
        while self.parent[k as usize] != r {
            let next = self.parent[k as usize];
            self.parent[k as usize] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, k: u32, l: u32) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (lo, hi) = if k < l { (k, l) } else { (l, k) };
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.cols as u32 {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                if self.get(f, x ^ 1) == e {
                    self.set(f, x ^ 1, NONE);
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let t = self.get(e1, x);
                if t != NONE {
                    self.merge(f1, t);
                } else {
                    let u = self.get(f1, x ^ 1);
                    if u != NONE {
                        self.merge(e1, u);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                    }
                }
            }
        }
    }

    /// Trace `w` around `c` from both ends; define cosets when `fill`.
    fn scan(&mut self, c: u32, w: &[u32], fill: bool) {
        if w.is_empty() {
            return;
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j {
                let t = self.get(f, w[i]);
                if t == NONE {
                    break;
                }
                f = t;
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return;
            }
            while j >= i as isize {
                let t = self.get(b, w[j as usize] ^ 1);
                if t == NONE {
                    break;
                }
                b = t;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return;
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return;
            }
            if !fill {
                return;
            }
            self.define(f, w[i]);
        }
    }

    /// Scan every relator at every live coset without defining.
    fn lookahead(&mut self, relators: &[Vec<u32>]) {
        for c in 0..self.total() as u32 {
            for r in relators {
                if !self.is_live(c) {
                    break;
                }
                self.scan(c, r, false);
            }
        }
    }

    /// Drop dead cosets, renumbering live ones in order. Returns the new
    /// number of the first live coset at or after `cursor`.
    fn compact(&mut self, cursor: u32) -> u32 {
        let mut map = vec![NONE; self.total()];
        let mut next = 0u32;
        for c in 0..self.total() as u32 {
            if self.is_live(c) {
                map[c as usize] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.cols);
        for c in 0..self.total() {
            if map[c] == NONE {
                continue;
            }
            for x in 0..self.cols {
                let v = self.table[c * self.cols + x];
                table.push(if v == NONE { NONE } else { map[v as usize] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        (cursor as usize..map.len()).map(|c| map[c]).find(|&m| m != NONE).unwrap_or(next)
    }

    fn closed(&self, relators: &[Vec<u32>], subgroup: &[Vec<u32>]) -> bool {
        let trace = |c: u32, w: &[u32]| {
            w.iter().try_fold(c, |c, &x| match self.get(c, x) {
                NONE => None,
                d => Some(d),
            })
        };
        subgroup.iter().all(|w| trace(0, w) == Some(0))
            && (0..self.total() as u32).filter(|&c| self.is_live(c)).all(|c| {
                (0..self.cols as u32).all(|x| self.get(c, x) != NONE)
                    && relators.iter().all(|r| trace(c, r) == Some(c))
            })
    }

    fn run(&mut self, relators: &[Vec<u32>], subgroup: &[Vec<u32>]) -> Result<()> {
        loop {
            for w in subgroup {
                let c = self.rep(0);
                self.scan(c, w, true);
            }
            let mut c = 0u32;
            while (c as usize) < self.total() {
                if self.live > self.max {
                    self.lookahead(relators);
                    c = self.compact(c);
                    if self.live > self.max {
                        return Err(Error::Overflow(self.max));
                    }
                    continue;
                }
                if 2 * self.live < self.total() && self.total() > 4096 {
                    c = self.compact(c);
                    continue;
                }
                if !self.is_live(c) {
                    c += 1;
                    continue;
                }
                for r in relators {
                    if !self.is_live(c) {
                        break;
                    }
                    self.scan(c, r, true);
                }
                for x in 0..self.cols as u32 {
                    if !self.is_live(c) {
                        break;
                    }
                    if self.get(c, x) == NONE {
                        self.define(c, x);
                    }
                }
                c += 1;
            }
            self.compact(0);
            if self.closed(relators, subgroup) {
                return Ok(());
            }
        }
    }
}

/// Enumerate the cosets of `⟨subgroup⟩` in the group of `pres`.
///
/// Fails with [`Error::Overflow`] when more than `max_cosets` cosets are
/// live at once even after a lookahead pass.
pub fn todd_coxeter(pres: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetTable> {
    let alphabet = pres.alphabet.clone();
    let cols = 2 * alphabet.len();
    let mut relators: Vec<Vec<u32>> = Vec::new();
    for r in &pres.relators {
        let mut codes = alphabet.encode(&r.word.cyclically_reduced())?;
        reduce_codes(&mut codes);
        if !codes.is_empty() && !relators.contains(&codes) {
            relators.push(codes);
        }
    }
    relators.sort_by_key(|r| r.len());
    let subgroup = subgroup
        .iter()
        .map(|w| alphabet.encode(w))
        .collect::<Result<Vec<_>>>()?;
    if cols == 0 {
        return Ok(CosetTable { alphabet, rows: vec![vec![]], transversal: vec![Word::identity()] });
    }
    let mut e = Enumerator::new(cols, max_cosets.max(1));
    e.run(&relators, &subgroup)?;
    Ok(standardize(&e, alphabet))
}

/// Renumber breadth-first from coset 0 and record the Schreier transversal.
fn standardize(e: &Enumerator, alphabet: Alphabet) -> CosetTable {
    let n = e.total();
    let mut order = vec![NONE; n];
    let mut seq = vec![0u32];
    let mut words = vec![Vec::<u32>::new()];
    order[0] = 0;
    let mut k = 0;
    while k < seq.len() {
        let c = seq[k];
        for x in 0..e.cols as u32 {
            let d = e.get(c, x);
            if order[d as usize] == NONE {
                order[d as usize] = seq.len() as u32;
                seq.push(d);
                let mut w = words[k].clone();
                w.push(x);
                words.push(w);
            }
        }
        k += 1;
    }
    let rows = seq
        .iter()
        .map(|&c| (0..e.cols as u32).map(|x| order[e.get(c, x) as usize]).collect())
        .collect();
    let transversal = words.iter().map(|w| alphabet.decode(w)).collect();
    CosetTable { alphabet, rows, transversal }
}
