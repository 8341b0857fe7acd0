//! Triviality deciders for the target groups used in verification.

mod dehn;
mod perm;
mod snf;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::words::{GenSym, Word};

pub use dehn::{surface_alphabet, surface_relator, Dehn};
pub use perm::Perm;
pub use snf::{
    abelian_invariants_from_relators, determinant, identity, mat_mul, smith_normal_form, to_big,
    AbelianInvariants, IntMatrix, RelationLattice, Snf,
};

/// A group with decidable word problem.
///
/// `Free(r)` and `SurfaceGroup(g)` act on words in `x1 … xr` (resp.
/// `x1 … x{2g}`); `FreeAbelian(r)` on exponent vectors; `Symmetric(n)` on
/// permutations of `n` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TargetGroup {
    Symmetric(u32),
    Free(u32),
    FreeAbelian(u32),
    SurfaceGroup(u32),
    DirectProduct(Vec<TargetGroup>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Perm(Perm),
    Word(Word),
    Vector(Vec<i64>),
    Tuple(Vec<Element>),
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Element::Perm(p) => s.serialize_str(&p.to_string()),
            Element::Word(w) => s.serialize_str(&w.to_string()),
            Element::Vector(v) => v.serialize(s),
            Element::Tuple(t) => {
                let mut seq = s.serialize_seq(Some(t.len()))?;
                for e in t {
                    seq.serialize_element(e)?;
                }
                seq.end()
            }
        }
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Element::Perm(p) => write!(f, "{p}"),
            Element::Word(w) if w.is_empty() => f.write_str("1"),
            Element::Word(w) => write!(f, "{w}"),
            Element::Vector(v) => write!(f, "{v:?}"),
            Element::Tuple(t) => {
                let parts: Vec<String> = t.iter().map(|e| e.to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

fn malformed(target: &TargetGroup, e: &Element) -> Error {
    Error::MalformedElement(format!("{e} is not an element of {target:?}"))
}

fn word_in_range(w: &Word, rank: u32) -> bool {
    w.generators().all(|g| matches!(g, GenSym::X(k) if (1..=rank).contains(&k)))
}

impl TargetGroup {
    pub fn identity(&self) -> Element {
        match self {
            TargetGroup::Symmetric(n) => Element::Perm(Perm::identity(*n as usize)),
            TargetGroup::Free(_) | TargetGroup::SurfaceGroup(_) => Element::Word(Word::identity()),
            TargetGroup::FreeAbelian(r) => Element::Vector(vec![0; *r as usize]),
            TargetGroup::DirectProduct(fs) => Element::Tuple(fs.iter().map(|f| f.identity()).collect()),
        }
    }

    /// The `k`-th generator of a free or surface group as an element.
    pub fn generator(&self, k: u32) -> Result<Element> {
        match self {
            TargetGroup::Free(r) if (1..=*r).contains(&k) => Ok(Element::Word(Word::gen(GenSym::X(k)))),
            TargetGroup::SurfaceGroup(g) if (1..=2 * g).contains(&k) => {
                Ok(Element::Word(Word::gen(GenSym::X(k))))
            }
            TargetGroup::FreeAbelian(r) if (1..=*r).contains(&k) => {
                let mut v = vec![0; *r as usize];
                v[k as usize - 1] = 1;
                Ok(Element::Vector(v))
            }
            _ => Err(Error::IndexOutOfRange(format!("generator {k} of {self:?}"))),
        }
    }

    /// Check that an element is encoded for this group.
    pub fn check(&self, e: &Element) -> Result<()> {
        let ok = match (self, e) {
            (TargetGroup::Symmetric(n), Element::Perm(p)) => p.degree() == *n as usize,
            (TargetGroup::Free(r), Element::Word(w)) => word_in_range(w, *r),
            (TargetGroup::SurfaceGroup(g), Element::Word(w)) => word_in_range(w, 2 * g),
            (TargetGroup::FreeAbelian(r), Element::Vector(v)) => v.len() == *r as usize,
            (TargetGroup::DirectProduct(fs), Element::Tuple(es)) => {
                if fs.len() != es.len() {
                    return Err(malformed(self, e));
                }
                return fs.iter().zip(es).try_for_each(|(f, x)| f.check(x));
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(malformed(self, e))
        }
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        match (self, x, y) {
            (TargetGroup::Symmetric(_), Element::Perm(p), Element::Perm(q))
                if p.degree() == q.degree() =>
            {
                Ok(Element::Perm(p.then(q)))
            }
            (TargetGroup::Free(_) | TargetGroup::SurfaceGroup(_), Element::Word(u), Element::Word(v)) => {
                Ok(Element::Word(u * v))
            }
            (TargetGroup::FreeAbelian(_), Element::Vector(u), Element::Vector(v))
                if u.len() == v.len() =>
            {
                Ok(Element::Vector(u.iter().zip(v).map(|(a, b)| a + b).collect()))
            }
            (TargetGroup::DirectProduct(fs), Element::Tuple(us), Element::Tuple(vs))
                if fs.len() == us.len() && fs.len() == vs.len() =>
            {
                let parts = fs
                    .iter()
                    .zip(us.iter().zip(vs))
                    .map(|(f, (u, v))| f.multiply(u, v))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Element::Tuple(parts))
            }
            _ => Err(malformed(self, if self.check(x).is_err() { x } else { y })),
        }
    }

    pub fn inverse(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(invert(x))
    }

    /// Evaluate a word given the image of each generator.
    pub fn evaluate<F>(&self, w: &Word, mut image: F) -> Result<Element>
    where
        F: FnMut(GenSym) -> Result<Element>,
    {
        let mut acc = self.identity();
        for l in w.letters() {
            let x = image(l.gen)?;
            let x = if l.inv { self.inverse(&x)? } else { x };
            acc = self.multiply(&acc, &x)?;
        }
        Ok(acc)
    }

    pub fn is_trivial(&self, e: &Element) -> Result<bool> {
        self.check(e)?;
        Ok(match (self, e) {
            (TargetGroup::Symmetric(_), Element::Perm(p)) => p.is_identity(),
            (TargetGroup::Free(_), Element::Word(w)) => w.is_empty(),
            (TargetGroup::FreeAbelian(_), Element::Vector(v)) => v.iter().all(|&x| x == 0),
            (TargetGroup::SurfaceGroup(1), Element::Word(w)) => {
                w.exponent_vector(&surface_alphabet(1))?.iter().all(|&x| x == 0)
            }
            (TargetGroup::SurfaceGroup(g), Element::Word(w)) => {
                w.is_empty() || Dehn::surface(*g).is_trivial(w)?
            }
            (TargetGroup::DirectProduct(fs), Element::Tuple(es)) => {
                for (f, x) in fs.iter().zip(es) {
                    if !f.is_trivial(x)? {
                        return Ok(false);
                    }
                }
                true
            }
            _ => unreachable!("checked above"),
        })
    }
}

fn invert(x: &Element) -> Element {
    match x {
        Element::Perm(p) => Element::Perm(p.inverse()),
        Element::Word(w) => Element::Word(w.inverse()),
        Element::Vector(v) => Element::Vector(v.iter().map(|a| -a).collect()),
        Element::Tuple(t) => Element::Tuple(t.iter().map(invert).collect()),
    }
}

/// Decide whether `e` is the identity of `target`.
pub fn is_trivial(target: &TargetGroup, e: &Element) -> Result<bool> {
    target.is_trivial(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn w(s: &str) -> Element {
        Element::Word(parse_word(s).unwrap())
    }

    #[test]
    fn symmetric_square() {
        let t = TargetGroup::Symmetric(3);
        let s1 = Element::Perm(Perm::transposition(3, 0, 1));
        let sq = t.multiply(&s1, &s1).unwrap();
        assert!(t.is_trivial(&sq).unwrap());
        assert!(!t.is_trivial(&s1).unwrap());
    }

    #[test]
    fn surface_examples() {
        let t = TargetGroup::SurfaceGroup(2);
        let rel = Element::Word(surface_relator(2));
        assert!(t.is_trivial(&rel).unwrap());
        assert!(!t.is_trivial(&w("x1")).unwrap());
        assert!(t.is_trivial(&w("x1 x4^-1 x3 x4 x3^-1 x2^-1 x1 x2 x1^-1 x1^-1")).unwrap());
        let torus = TargetGroup::SurfaceGroup(1);
        assert!(t.is_trivial(&w("")).unwrap());
        assert!(torus.is_trivial(&w("x1 x2 x1^-1 x2^-1")).unwrap());
        assert!(!torus.is_trivial(&w("x1 x2 x1")).unwrap());
    }

    #[test]
    fn malformed_elements() {
        assert!(TargetGroup::Free(2).is_trivial(&w("x3")).is_err());
        assert!(TargetGroup::Free(2).is_trivial(&w("a1")).is_err());
        assert!(TargetGroup::Symmetric(3).is_trivial(&Element::Vector(vec![0])).is_err());
        assert!(TargetGroup::FreeAbelian(2).is_trivial(&Element::Vector(vec![0])).is_err());
        let prod = TargetGroup::DirectProduct(vec![TargetGroup::Free(1), TargetGroup::Free(1)]);
        assert!(prod.is_trivial(&Element::Tuple(vec![w("")])).is_err());
    }

    #[test]
    fn direct_product_is_coordinatewise() {
        let prod = TargetGroup::DirectProduct(vec![TargetGroup::Free(2), TargetGroup::FreeAbelian(1)]);
        let e = Element::Tuple(vec![w(""), Element::Vector(vec![0])]);
        assert!(prod.is_trivial(&e).unwrap());
        let e = Element::Tuple(vec![w(""), Element::Vector(vec![1])]);
        assert!(!prod.is_trivial(&e).unwrap());
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"["",[1]]"#);
    }
}
