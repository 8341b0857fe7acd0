//! Homomorphisms out of presentations and their relator-by-relator checks.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentations::{
    build_presentation, expand_pure_generator, Family, Presentation, PureIndexing, Relator,
    SurfaceParams,
};
use crate::solvers::{AbelianInvariants, Element, Perm, RelationLattice, TargetGroup};
use crate::words::{Alphabet, GenSym, Word};

#[derive(Clone, Debug)]
pub enum Codomain {
    Group(TargetGroup),
    Presentation(Box<Presentation>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Image {
    Element(Element),
    Word(Word),
}

impl Image {
    fn to_json(&self) -> serde_json::Value {
        match self {
            Image::Element(e) => serde_json::to_value(e).expect("elements serialize"),
            Image::Word(w) => serde_json::Value::String(w.to_string()),
        }
    }
}

impl std::fmt::Display for Image {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Image::Element(e) => write!(f, "{e}"),
            Image::Word(w) if w.is_empty() => f.write_str("1"),
            Image::Word(w) => write!(f, "{w}"),
        }
    }
}

/// A map defined on the generators of `domain`.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    pub name: String,
    pub domain: Presentation,
    pub codomain: Codomain,
    images: HashMap<GenSym, Image>,
    verified: bool,
}

impl Homomorphism {
    /// Every domain generator needs an image of the codomain's kind.
    pub fn new<I>(name: &str, domain: Presentation, codomain: Codomain, images: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GenSym, Image)>,
    {
        let images: HashMap<GenSym, Image> = images.into_iter().collect();
        for g in domain.alphabet.symbols() {
            let img = images
                .get(g)
                .ok_or_else(|| Error::MalformedElement(format!("{name}: no image for {g}")))?;
            match (&codomain, img) {
                (Codomain::Group(t), Image::Element(e)) => t.check(e)?,
                (Codomain::Presentation(q), Image::Word(w)) => q.alphabet.check_word(w)?,
                _ => return Err(Error::MalformedElement(format!("{name}: image of {g} has the wrong kind"))),
            }
        }
        Ok(Homomorphism { name: name.to_string(), domain, codomain, images, verified: false })
    }

    pub fn image(&self, g: GenSym) -> Option<&Image> {
        self.images.get(&g)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Image of a domain word.
    pub fn apply(&self, w: &Word) -> Result<Image> {
        self.domain.alphabet.check_word(w)?;
        match &self.codomain {
            Codomain::Group(t) => t
                .evaluate(w, |g| match &self.images[&g] {
                    Image::Element(e) => Ok(e.clone()),
                    Image::Word(_) => unreachable!("checked in new"),
                })
                .map(Image::Element),
            Codomain::Presentation(_) => Ok(Image::Word(w.substitute(|g| match &self.images[&g] {
                Image::Word(x) => x.clone(),
                Image::Element(_) => unreachable!("checked in new"),
            }))),
        }
    }

    /// Run [`verify_hom`] and remember a passing result.
    pub fn verify(&mut self) -> VerificationReport {
        let report = verify_hom(self);
        self.verified = report.overall;
        report
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub label: String,
    pub image: serde_json::Value,
    pub trivial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub overall: bool,
    /// False when triviality in a presentation codomain was only tested
    /// through its canonical quotients.
    pub exact: bool,
    pub rows: Vec<ReportRow>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.trivial)
    }
}

/// Map every relator and record whether its image is trivial.
pub fn verify_hom(h: &Homomorphism) -> VerificationReport {
    let checker = match &h.codomain {
        Codomain::Presentation(q) => Some(QuotientCheck::new(q)),
        Codomain::Group(_) => None,
    };
    let rows: Vec<ReportRow> = h
        .domain
        .relators
        .iter()
        .map(|Relator { label, word }| match h.apply(word) {
            Ok(img) => {
                let trivial = match (&h.codomain, &img) {
                    (Codomain::Group(t), Image::Element(e)) => t.is_trivial(e).unwrap_or(false),
                    (Codomain::Presentation(_), Image::Word(w)) => {
                        checker.as_ref().expect("built above").passes(w)
                    }
                    _ => false,
                };
                ReportRow { label: label.clone(), image: img.to_json(), trivial }
            }
            Err(e) => ReportRow {
                label: label.clone(),
                image: serde_json::Value::String(e.to_string()),
                trivial: false,
            },
        })
        .collect();
    VerificationReport {
        overall: rows.iter().all(|r| r.trivial),
        exact: checker.is_none(),
        rows,
    }
}

/// Necessary conditions for a word to be trivial in a presentation: a
/// literal relator up to rotation and inversion, or zero in every canonical
/// quotient (abelianization, and the permutation or χ quotient by family).
pub struct QuotientCheck {
    alphabet: Alphabet,
    relators: Vec<Word>,
    lattice: RelationLattice,
    quotients: Vec<Homomorphism>,
}

impl QuotientCheck {
    pub fn new(q: &Presentation) -> Self {
        let mut quotients = Vec::new();
        if q.family.is_braid() {
            quotients.extend(canonical_permutation_hom(q));
        }
        if q.family.is_pure() {
            quotients.extend(chi_hom(q));
            quotients.extend(expansion_permutation_hom(q));
        }
        QuotientCheck {
            alphabet: q.alphabet.clone(),
            relators: q.relators.iter().map(|r| r.word.clone()).collect(),
            lattice: RelationLattice::new(&q.relation_matrix(), q.generator_count()),
            quotients,
        }
    }

    pub fn is_relator_rotation(&self, w: &Word) -> bool {
        let w = w.cyclically_reduced();
        self.relators.iter().any(|r| {
            let r = r.cyclically_reduced();
            [r.clone(), r.inverse()].iter().any(|r| is_rotation(r.letters(), w.letters()))
        })
    }

    pub fn in_abelian_kernel(&self, w: &Word) -> bool {
        w.exponent_vector(&self.alphabet).is_ok_and(|v| self.lattice.contains(&v))
    }

    pub fn in_quotient_kernels(&self, w: &Word) -> bool {
        self.quotients.iter().all(|h| trivial_under(h, w))
    }

    /// Name of the first canonical quotient in which `w` is nontrivial.
    pub fn failing_quotient(&self, w: &Word) -> Option<String> {
        if !self.in_abelian_kernel(w) {
            return Some("abelianization".into());
        }
        self.quotients
            .iter()
            .find(|h| !trivial_under(h, w))
            .map(|h| h.name.clone())
    }

    pub fn passes(&self, w: &Word) -> bool {
        w.is_empty()
            || self.is_relator_rotation(w)
            || (self.in_abelian_kernel(w) && self.in_quotient_kernels(w))
    }
}

fn trivial_under(h: &Homomorphism, w: &Word) -> bool {
    match (h.apply(w), &h.codomain) {
        (Ok(Image::Element(e)), Codomain::Group(t)) => t.is_trivial(&e).unwrap_or(false),
        _ => false,
    }
}

fn is_rotation<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|k| a[k..] == b[..a.len() - k] && a[..k] == b[a.len() - k..]))
}

fn transposition_image(n: u32, g: GenSym) -> Element {
    match g {
        GenSym::Sigma(i) => Element::Perm(Perm::transposition(n as usize, i as usize - 1, i as usize)),
        _ => Element::Perm(Perm::identity(n as usize)),
    }
}

/// π: σ_i ↦ (i i+1), every surface generator ↦ id, into Σ_n.
pub fn canonical_permutation_hom(pres: &Presentation) -> Result<Homomorphism> {
    if !pres.family.is_braid() {
        return Err(Error::Unsupported(format!(
            "canonical permutation map needs a braid family, got {}",
            pres.family
        )));
    }
    let n = pres.params.n;
    let images: Vec<(GenSym, Image)> =
        pres.alphabet.symbols().iter().map(|&g| (g, Image::Element(transposition_image(n, g)))).collect();
    Homomorphism::new("pi", pres.clone(), Codomain::Group(TargetGroup::Symmetric(n)), images)
}

/// π ∘ ι on a pure presentation: each `A_{i,j}` is sent to the permutation
/// of its braid word. Purity of the expansions makes this trivial.
pub fn expansion_permutation_hom(pres: &Presentation) -> Result<Homomorphism> {
    let idx = pure_indexing(pres)?;
    let n = pres.params.n;
    let target = TargetGroup::Symmetric(n);
    let images = pres
        .alphabet
        .symbols()
        .iter()
        .map(|&g| {
            let GenSym::PureA(i, j) = g else { unreachable!("pure alphabet") };
            let w = expand_pure_generator(i, j, &idx)?;
            let e = target.evaluate(&w, |h| Ok(transposition_image(n, h)))?;
            Ok((g, Image::Element(e)))
        })
        .collect::<Result<Vec<_>>>()?;
    Homomorphism::new("pi-iota", pres.clone(), Codomain::Group(target), images)
}

fn pure_indexing(pres: &Presentation) -> Result<PureIndexing> {
    if !pres.family.is_pure() {
        return Err(Error::Unsupported(format!("needs a pure family, got {}", pres.family)));
    }
    let SurfaceParams { n, g, p, .. } = pres.params;
    Ok(PureIndexing::new(n, g, p))
}

/// The fundamental group of the surface as a target: free of rank
/// `2g + p − 1` when punctured, the genus-g surface group when closed.
pub fn surface_target(params: &SurfaceParams) -> TargetGroup {
    if params.closed {
        TargetGroup::SurfaceGroup(params.g)
    } else {
        TargetGroup::Free(2 * params.g + params.p - 1)
    }
}

/// χ: `A_{i,j}` with `i` a wall ↦ `x_i` in coordinate `s(j)`; strand pairs ↦ 1.
pub fn chi_hom(pres: &Presentation) -> Result<Homomorphism> {
    let idx = pure_indexing(pres)?;
    let n = pres.params.n as usize;
    let factor = surface_target(&pres.params);
    let target = TargetGroup::DirectProduct(vec![factor.clone(); n]);
    let images = pres
        .alphabet
        .symbols()
        .iter()
        .map(|&g| {
            let GenSym::PureA(i, j) = g else { unreachable!("pure alphabet") };
            let mut coords = vec![factor.identity(); n];
            if idx.is_wall(i) {
                coords[idx.strand(j) as usize - 1] = factor.generator(i)?;
            }
            Ok((g, Image::Element(Element::Tuple(coords))))
        })
        .collect::<Result<Vec<_>>>()?;
    Homomorphism::new("chi", pres.clone(), Codomain::Group(target), images)
}

/// θ on pure presentations: forget the last strand.
pub fn forget_strand_hom(pres: &Presentation) -> Result<Homomorphism> {
    let idx = pure_indexing(pres)?;
    let SurfaceParams { n, g, p, .. } = pres.params;
    if n < 2 {
        return Err(Error::Unsupported("forgetting a strand needs n >= 2".into()));
    }
    let codomain = build_presentation(pres.family, pres.family.params(n - 1, g, p))?;
    let top = idx.last_strand();
    let images: Vec<(GenSym, Image)> = pres
        .alphabet
        .symbols()
        .iter()
        .map(|&s| {
            let GenSym::PureA(_, j) = s else { unreachable!("pure alphabet") };
            (s, Image::Word(if j == top { Word::identity() } else { Word::gen(s) }))
        })
        .collect();
    Homomorphism::new("theta", pres.clone(), Codomain::Presentation(Box::new(codomain)), images)
}

/// The section s from `n − 1` strands to `n`: same-named generators.
pub fn section_hom(pres: &Presentation) -> Result<Homomorphism> {
    match pres.family {
        Family::BraidPuncturedOrientable
        | Family::BraidPuncturedSphere
        | Family::BraidPuncturedNonorientable => {}
        f => return Err(Error::Unsupported(format!("no section for {f}"))),
    }
    let SurfaceParams { n, g, p, .. } = pres.params;
    let codomain = build_presentation(pres.family, pres.family.params(n + 1, g, p))?;
    let images: Vec<(GenSym, Image)> =
        pres.alphabet.symbols().iter().map(|&s| (s, Image::Word(Word::gen(s)))).collect();
    Homomorphism::new("section", pres.clone(), Codomain::Presentation(Box::new(codomain)), images)
}

/// π₁(F)ⁿ presented on the wall generators `A_{i, 2g+k}`: coordinates
/// commute, and each closed coordinate carries the surface relator.
pub fn surface_power_presentation(n: u32, g: u32, p: u32) -> Presentation {
    let idx = PureIndexing::new(n, g, p);
    let walls = idx.walls();
    let col = |k: u32| idx.walls() + k;
    let symbols: Vec<GenSym> =
        (1..=n).flat_map(|k| (1..=walls).map(move |i| GenSym::PureA(i, col(k)))).collect();
    let mut relators = Vec::new();
    for k in 1..=n {
        for l in (k + 1)..=n {
            for i in 1..=walls {
                for j in 1..=walls {
                    let c = Word::commutator(
                        &Word::gen(GenSym::PureA(i, col(k))),
                        &Word::gen(GenSym::PureA(j, col(l))),
                    );
                    relators.push(Relator { label: format!("coord{k},{l}"), word: c });
                }
            }
        }
    }
    if p == 0 {
        for k in 1..=n {
            let c = col(k);
            let parts: Vec<Word> = (1..=g)
                .rev()
                .map(|m| {
                    Word::commutator(
                        &Word::gen_inv(GenSym::PureA(2 * m, c)),
                        &Word::gen(GenSym::PureA(2 * m - 1, c)),
                    )
                })
                .collect();
            relators.push(Relator { label: format!("surface{k}"), word: Word::product(parts.iter()) });
        }
    }
    let mut pres = Presentation::custom(Alphabet::new(symbols), relators);
    pres.params = SurfaceParams { n, g, p, orientable: true, closed: p == 0 };
    pres
}

/// μ: `A_{2i−1, 2g+k}` ↦ `x_i` in coordinate `k`, `A_{2i, 2g+k}` ↦ 1, into
/// `n` copies of the free group of rank `g`.
pub fn mu_hom(n: u32, g: u32, p: u32) -> Result<Homomorphism> {
    if p > 1 || g < 1 || n < 1 {
        return Err(Error::Unsupported(format!("mu needs g >= 1, n >= 1, p <= 1 (got g={g}, n={n}, p={p})")));
    }
    let domain = surface_power_presentation(n, g, p);
    let factor = TargetGroup::Free(g);
    let target = TargetGroup::DirectProduct(vec![factor.clone(); n as usize]);
    let walls = 2 * g;
    let images = domain
        .alphabet
        .symbols()
        .iter()
        .map(|&s| {
            let GenSym::PureA(i, c) = s else { unreachable!("wall alphabet") };
            let mut coords = vec![factor.identity(); n as usize];
            if i % 2 == 1 {
                coords[(c - walls - 1) as usize] = factor.generator(i.div_ceil(2))?;
            }
            Ok((s, Image::Element(Element::Tuple(coords))))
        })
        .collect::<Result<Vec<_>>>()?;
    Homomorphism::new("mu", domain, Codomain::Group(target), images)
}

/// First homology predicted for the orientable families, where known.
pub fn expected_abelianization(family: Family, params: &SurfaceParams) -> Option<AbelianInvariants> {
    let SurfaceParams { n, g, p, .. } = *params;
    let (g, p, n) = (g as usize, p as usize, n as usize);
    let two = if n >= 2 { vec![2] } else { vec![] };
    Some(match family {
        Family::BraidClosedOrientableAB | Family::BraidClosedOrientableB | Family::BraidClosedGM => {
            AbelianInvariants { rank: 2 * g, torsion: two }
        }
        Family::BraidPuncturedOrientable => AbelianInvariants { rank: 2 * g + p - 1, torsion: two },
        Family::BraidPuncturedSphere => {
            AbelianInvariants { rank: if n >= 2 { p } else { p - 1 }, torsion: vec![] }
        }
        Family::PurePunctured => AbelianInvariants { rank: (2 * g + p - 1) * n, torsion: vec![] },
        Family::PureClosed => AbelianInvariants { rank: 2 * g * n, torsion: vec![] },
        _ => return None,
    })
}

#[cfg(test)]
mod tests;
