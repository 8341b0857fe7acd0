//! Surface braid and pure braid presentations as data.

mod braid;
mod derived;
mod document;
mod pure;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Alphabet, GenSym, Word};

pub use derived::{
    b0_generators, derived_element, pure_subgroup_generators, theta_tilde, B0Gen, Derived,
};
pub use document::{PresentationDoc, RelatorDoc};
pub use pure::{expand_pure_generator, pure_generator_pairs, PureIndexing};
pub(crate) use braid::{gm_a2, gm_prefix};

/// Which family of presentations a presentation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    BraidPuncturedOrientable,
    BraidClosedOrientableAB,
    BraidPuncturedSphere,
    BraidPuncturedNonorientable,
    BraidClosedNonorientable,
    BraidClosedOrientableB,
    BraidClosedGM,
    PurePunctured,
    PureClosed,
    /// Anything not produced by a builder: subgroup presentations,
    /// simplified presentations, documents read from disk.
    Custom,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::BraidPuncturedOrientable,
        Family::BraidClosedOrientableAB,
        Family::BraidPuncturedSphere,
        Family::BraidPuncturedNonorientable,
        Family::BraidClosedNonorientable,
        Family::BraidClosedOrientableB,
        Family::BraidClosedGM,
        Family::PurePunctured,
        Family::PureClosed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::BraidPuncturedOrientable => "braid-punctured",
            Family::BraidClosedOrientableAB => "braid-closed",
            Family::BraidPuncturedSphere => "braid-punctured-sphere",
            Family::BraidPuncturedNonorientable => "braid-punctured-nonorientable",
            Family::BraidClosedNonorientable => "braid-closed-nonorientable",
            Family::BraidClosedOrientableB => "braid-closed-b",
            Family::BraidClosedGM => "braid-closed-gm",
            Family::PurePunctured => "pure-punctured",
            Family::PureClosed => "pure-closed",
            Family::Custom => "custom",
        }
    }

    pub fn is_pure(self) -> bool {
        matches!(self, Family::PurePunctured | Family::PureClosed)
    }

    pub fn is_braid(self) -> bool {
        !self.is_pure() && self != Family::Custom
    }

    pub fn is_closed(self) -> bool {
        matches!(
            self,
            Family::BraidClosedOrientableAB
                | Family::BraidClosedNonorientable
                | Family::BraidClosedOrientableB
                | Family::BraidClosedGM
                | Family::PureClosed
        )
    }

    pub fn is_orientable(self) -> bool {
        !matches!(self, Family::BraidPuncturedNonorientable | Family::BraidClosedNonorientable)
    }

    /// Fill in the orientability and closedness flags for this family.
    pub fn params(self, n: u32, g: u32, p: u32) -> SurfaceParams {
        SurfaceParams { n, g, p, orientable: self.is_orientable(), closed: self.is_closed() }
    }

    /// Check family-specific parameter constraints.
    pub fn validate(self, params: &SurfaceParams) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::InvalidParams { family: self.name().to_string(), reason: reason.to_string() })
        };
        if params.n < 1 {
            return bad("needs n >= 1");
        }
        if params.orientable != self.is_orientable() {
            return bad("orientability flag does not match the family");
        }
        if params.closed != (params.p == 0) {
            return bad("closed flag must hold exactly when p = 0");
        }
        if self == Family::Custom {
            return Ok(());
        }
        if self.is_closed() && params.p != 0 {
            return bad("closed surface needs p = 0");
        }
        if !self.is_closed() && params.p < 1 {
            return bad("punctured surface needs p >= 1");
        }
        match self {
            Family::BraidPuncturedSphere if params.g != 0 => bad("punctured sphere needs g = 0"),
            Family::BraidClosedNonorientable if params.g < 2 => bad("needs g >= 2"),
            Family::BraidPuncturedSphere => Ok(()),
            _ if params.g < 1 => bad("needs g >= 1"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .iter()
            .chain(std::iter::once(&Family::Custom))
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Document(format!("unknown family {s:?}")))
    }
}

/// Strand count, genus and puncture count of the surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceParams {
    pub n: u32,
    pub g: u32,
    pub p: u32,
    pub orientable: bool,
    pub closed: bool,
}

/// Where the boundary generators `z_j` commute with the σ's.
///
/// `FirstStrand` (the default) makes `z_j` commute with every σ_i, i ≠ 1.
/// `LastStrand` uses i ≠ n−1 instead.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ZConvention {
    #[default]
    FirstStrand,
    LastStrand,
}

impl FromStr for ZConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first-strand" => Ok(ZConvention::FirstStrand),
            "last-strand" => Ok(ZConvention::LastStrand),
            _ => Err(Error::Document(format!("unknown z-convention {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    pub z_convention: ZConvention,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub label: String,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub family: Family,
    pub params: SurfaceParams,
    pub alphabet: Alphabet,
    pub relators: Vec<Relator>,
    /// Builder remarks, e.g. relations dropped because they reduce to ε.
    pub notes: Vec<String>,
}

impl Presentation {
    /// A presentation that did not come from a builder.
    pub fn custom(alphabet: Alphabet, relators: Vec<Relator>) -> Self {
        Presentation {
            family: Family::Custom,
            params: SurfaceParams { n: 1, g: 0, p: 1, orientable: true, closed: false },
            alphabet,
            relators,
            notes: Vec::new(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn relator(&self, label: &str) -> Option<&Relator> {
        self.relators.iter().find(|r| r.label == label)
    }

    /// `family(n=…,g=…,p=…)`.
    pub fn id(&self) -> String {
        let SurfaceParams { n, g, p, .. } = self.params;
        format!("{}(n={n},g={g},p={p})", self.family.name())
    }

    /// A key naming relator `i` uniquely: its label, suffixed `#k` (k-th
    /// occurrence, 1-based) when the label is shared.
    pub fn relator_key(&self, i: usize) -> String {
        let label = &self.relators[i].label;
        let same = |r: &&Relator| &r.label == label;
        if self.relators.iter().filter(same).count() == 1 {
            label.clone()
        } else {
            let k = self.relators[..i].iter().filter(same).count() + 1;
            format!("{label}#{k}")
        }
    }

    /// Index of the relator named by `key` (see [`Presentation::relator_key`]).
    pub fn find_relator_key(&self, key: &str) -> Option<usize> {
        if let Some((label, k)) = key.rsplit_once('#') {
            if let Ok(k) = k.parse::<usize>() {
                let hit = self
                    .relators
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r.label == label)
                    .nth(k.checked_sub(1)?);
                if let Some((i, _)) = hit {
                    return Some(i);
                }
            }
        }
        let mut hits = self.relators.iter().enumerate().filter(|(_, r)| r.label == key);
        match (hits.next(), hits.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    pub fn total_relator_length(&self) -> usize {
        self.relators.iter().map(|r| r.word.len()).sum()
    }

    /// Relator exponent vectors, one row per relator.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| r.word.exponent_vector(&self.alphabet).expect("relators lie in the alphabet"))
            .collect()
    }

    /// Check every relator against the alphabet.
    pub fn check(&self) -> Result<()> {
        for r in &self.relators {
            self.alphabet.check_word(&r.word)?;
        }
        Ok(())
    }

    /// A copy with `σ_i = 1` added for every σ in the alphabet.
    pub fn with_sigmas_killed(&self) -> Presentation {
        let mut out = self.clone();
        for &g in self.alphabet.symbols() {
            if let GenSym::Sigma(i) = g {
                out.relators.push(Relator { label: format!("kill-s{i}"), word: Word::gen(g) });
            }
        }
        out
    }
}

/// Build the presentation of `family` at `params` with default options.
pub fn build_presentation(family: Family, params: SurfaceParams) -> Result<Presentation> {
    build_presentation_with(family, params, BuildOptions::default())
}

pub fn build_presentation_with(
    family: Family,
    params: SurfaceParams,
    opts: BuildOptions,
) -> Result<Presentation> {
    family.validate(&params)?;
    let mut b = Builder::new(family, params);
    match family {
        Family::BraidPuncturedOrientable => braid::punctured_orientable(&mut b, opts),
        Family::BraidClosedOrientableAB => braid::closed_orientable_ab(&mut b),
        Family::BraidPuncturedSphere => braid::punctured_sphere(&mut b),
        Family::BraidPuncturedNonorientable => braid::punctured_nonorientable(&mut b, opts),
        Family::BraidClosedNonorientable => braid::closed_nonorientable(&mut b),
        Family::BraidClosedOrientableB => braid::closed_orientable_b(&mut b),
        Family::BraidClosedGM => braid::closed_gm(&mut b),
        Family::PurePunctured | Family::PureClosed => pure::build(&mut b),
        Family::Custom => {
            return Err(Error::Unsupported("custom presentations have no builder".into()))
        }
    }
    Ok(b.finish())
}

/// Convenience: validate and build in one call from raw parameters.
pub fn build(family: Family, n: u32, g: u32, p: u32) -> Result<Presentation> {
    build_presentation(family, family.params(n, g, p))
}

/// Accumulates generators and relators while a family is instantiated.
pub(crate) struct Builder {
    family: Family,
    params: SurfaceParams,
    symbols: Vec<GenSym>,
    relators: Vec<Relator>,
    notes: Vec<String>,
}

impl Builder {
    fn new(family: Family, params: SurfaceParams) -> Self {
        Builder { family, params, symbols: Vec::new(), relators: Vec::new(), notes: Vec::new() }
    }

    fn gens<I: IntoIterator<Item = GenSym>>(&mut self, it: I) {
        self.symbols.extend(it);
    }

    /// Record the relation `lhs = rhs` as the relator `lhs·rhs⁻¹`.
    fn relation(&mut self, label: &str, lhs: Word, rhs: Word) {
        let word = lhs.compose(&rhs.inverse());
        if word.is_empty() {
            self.notes.push(format!("{label}: {lhs} = {rhs} holds in the free group; dropped"));
        } else {
            self.relators.push(Relator { label: label.to_string(), word });
        }
    }

    fn finish(self) -> Presentation {
        Presentation {
            family: self.family,
            params: self.params,
            alphabet: Alphabet::new(self.symbols),
            relators: self.relators,
            notes: self.notes,
        }
    }
}

pub(crate) fn s(i: u32) -> Word {
    Word::gen(GenSym::Sigma(i))
}

pub(crate) fn si(i: u32) -> Word {
    Word::gen_inv(GenSym::Sigma(i))
}

pub(crate) fn a(r: u32) -> Word {
    Word::gen(GenSym::A(r))
}

pub(crate) fn b(r: u32) -> Word {
    Word::gen(GenSym::B(r))
}

pub(crate) fn z(j: u32) -> Word {
    Word::gen(GenSym::Z(j))
}

pub(crate) fn prod(words: &[&Word]) -> Word {
    Word::product(words.iter().copied())
}

/// `σ₁σ₂⋯σ_{n−1}²⋯σ₂σ₁`; empty for n = 1.
pub fn tre(n: u32) -> Word {
    let up: Vec<Word> = (1..n).map(s).collect();
    let down: Vec<Word> = (1..n).rev().map(s).collect();
    Word::product(up.iter().chain(down.iter()))
}

#[cfg(test)]
mod tests;
