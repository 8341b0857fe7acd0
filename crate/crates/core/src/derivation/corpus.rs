//! Named identities, each at its smallest valid parameters and one larger
//! instance.

use serde::Serialize;

use crate::presentations::{
    a, b, derived_element, gm_a2, gm_prefix, s, si, Derived, Family, SurfaceParams,
};
use crate::words::{Side, Word};

/// What a search over the entry should produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    /// A certificate must be found.
    Certificate,
    /// Attempted; the verdict is recorded, not asserted.
    Report,
    /// Not expected to be provable as stated.
    ExpectedUnknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub family: Family,
    pub params: SurfaceParams,
    pub lhs: Word,
    pub rhs: Word,
    pub expect: Expectation,
}

/// `^{by}x = by·x·by⁻¹`.
fn lconj(x: &Word, by: &Word) -> Word {
    x.conjugate(by, Side::Left)
}

/// `x^{by} = by⁻¹·x·by`.
fn rconj(x: &Word, by: &Word) -> Word {
    x.conjugate(by, Side::Right)
}

fn sigma_sq() -> Word {
    s(1).pow(2)
}

fn derived(name: Derived, params: &SurfaceParams) -> Word {
    derived_element(name, params).expect("corpus parameters are in range")
}

struct Sink(Vec<CorpusEntry>);

impl Sink {
    fn push(&mut self, name: String, family: Family, (n, g, p): (u32, u32, u32), lhs: Word, rhs: Word, expect: Expectation) {
        let params = family.params(n, g, p);
        self.0.push(CorpusEntry { name, family, params, lhs, rhs, expect });
    }
}

/// Handle generator `x_r` by kind, and its σ₁-conjugate `x_{2,r}`.
fn handle(kind: char, r: u32) -> Word {
    if kind == 'a' { a(r) } else { b(r) }
}

fn handle2(kind: char, r: u32) -> Word {
    Word::product([&si(1), &handle(kind, r), &s(1)])
}

pub fn identity_suite() -> Vec<CorpusEntry> {
    use Expectation::*;
    let punct = Family::BraidPuncturedOrientable;
    let mut out = Sink(Vec::new());

    for (inst, params) in [(0, (2, 1, 1)), (1, (3, 1, 1))] {
        let r = 1;
        let want = if inst == 0 { Certificate } else { Report };
        for k in ['a', 'b'] {
            let (x, x2) = (handle(k, r), handle2(k, r));
            let tag = format!("r={r}, n={}, g={}, p={}", params.0, params.1, params.2);
            out.push(format!("RC1-{k}, {tag}"), punct, params, rconj(&sigma_sq(), &x), lconj(&sigma_sq(), &x2), want);
            let by = x2.compose(&s(1).pow(-2));
            out.push(format!("RC2-{k}, {tag}"), punct, params, lconj(&sigma_sq(), &x), rconj(&sigma_sq(), &by), want);
        }
    }

    for params in [(2, 2, 1), (3, 2, 1)] {
        let (r, t) = (1, 2);
        for (kr, kt) in [('a', 'a'), ('b', 'a'), ('a', 'b'), ('b', 'b')] {
            let (x, y) = (handle(kr, r), handle(kt, t));
            let mid = Word::product([&s(1), &y, &si(1)]);
            let name = format!("R3'-{kr}{kt}, r={r}, s={t}, n={}, g={}", params.0, params.1);
            out.push(name, punct, params, x.compose(&mid), mid.compose(&x), Report);
        }
    }

    for params in [(2, 2, 1), (3, 2, 1)] {
        let r = 2;
        let lhs = Word::product([&b(r), &si(1), &a(r - 1), &s(1)]);
        let rhs = Word::product([&si(1), &a(r - 1), &si(1), &a(r)]);
        let name = format!("R4', r={r}, n={}, g={}", params.0, params.1);
        out.push(name, punct, params, lhs, rhs, ExpectedUnknown);
    }

    a2_identities(&mut out);

    for params in [(2, 1, 1), (3, 1, 1)] {
        let sp = punct.params(params.0, params.1, params.2);
        let tau1 = derived(Derived::Tau(1), &sp);
        let beta = derived(Derived::Beta, &sp);
        let gamma = derived(Derived::Gamma, &sp);
        let r = 1;
        for (k, omega) in [('a', 2 * r - 1), ('b', 2 * r)] {
            let x = handle(k, r);
            let w = derived(Derived::Omega(omega), &sp);
            let tag = format!("r={r}, n={}, g={}, p={}", params.0, params.1, params.2);
            let by = beta.compose(&w.inverse());
            out.push(format!("tau1-left-{k}, {tag}"), punct, params, lconj(&tau1, &x), lconj(&gamma, &by), Certificate);
            let by = Word::product([&tau1.inverse(), &beta, &w]);
            out.push(format!("tau1-right-{k}, {tag}"), punct, params, rconj(&tau1, &x), lconj(&gamma, &by), Report);
        }
    }

    let closed = Family::BraidClosedOrientableAB;
    for params in [(2, 1, 0), (3, 1, 0)] {
        let sp = closed.params(params.0, params.1, params.2);
        let omega = |k| derived(Derived::Omega(k), &sp);
        let mut parts: Vec<Word> =
            (1..=sp.g).map(|r| Word::commutator(&omega(2 * r - 1), &omega(2 * r).inverse())).collect();
        parts.extend((2..sp.n).rev().map(|j| derived(Derived::Tau(j), &sp).inverse()));
        let name = format!("tau1-omega, n={}, g={}", params.0, params.1);
        out.push(name, closed, params, derived(Derived::Tau(1), &sp), Word::product(parts.iter()), Certificate);
    }

    gm_targets(&mut out);
    out.0
}

/// The σ₁-conjugate identities for `a_{2,s}`, `b_{2,s}`, at g = 2 where
/// both orders of r and s occur.
fn a2_identities(out: &mut Sink) {
    use Expectation::Report;
    let punct = Family::BraidPuncturedOrientable;
    let params = (2, 2, 1);
    let kinds = [('a', 'a'), ('b', 'a'), ('a', 'b'), ('b', 'b')];
    let m2 = s(1).pow(-2);
    let p2 = sigma_sq();
    for (kx, ky) in kinds {
        let (r, t) = (2, 1);
        let (x, y2) = (handle(kx, r), handle2(ky, t));
        out.push(format!("{kx}-fixes-{ky}2, r={r}, s={t}"), punct, params, lconj(&y2, &x), y2.clone(), Report);
        let c = Word::commutator(&p2, &handle2(kx, r).inverse());
        out.push(format!("{kx}-moves-{ky}2-left, r={r}, s={t}"), punct, params, lconj(&y2, &x), lconj(&y2, &c), Report);
        let (r, t) = (1, 2);
        let (x, y2) = (handle(kx, r), handle2(ky, t));
        let c = Word::commutator(&handle2(kx, r), &m2);
        out.push(format!("{kx}-moves-{ky}2-right, r={r}, s={t}"), punct, params, rconj(&y2, &x), lconj(&y2, &c), Report);
    }
    for k in ['a', 'b'] {
        let r = 1;
        let (x, x2) = (handle(k, r), handle2(k, r));
        let by = x2.compose(&m2);
        out.push(format!("{k}2-right-self, r={r}"), punct, params, rconj(&x2, &x), lconj(&x2, &by), Report);
        out.push(format!("{k}2-left-self, r={r}"), punct, params, lconj(&x2, &x), lconj(&x2, &p2), Report);
    }
    let r = 1;
    let (a1, b1, a2, b2) = (a(r), b(r), handle2('a', r), handle2('b', r));
    let rhs = Word::product([&a2, &m2, &a2.inverse(), &b2, &Word::commutator(&m2, &a2)]);
    out.push(format!("b2-right-a, r={r}"), punct, params, rconj(&b2, &a1), rhs, Report);
    let rhs = Word::product([&p2, &b2, &Word::commutator(&a2.inverse(), &p2)]);
    out.push(format!("b2-left-a, r={r}"), punct, params, lconj(&b2, &a1), rhs, Report);
    out.push(format!("a2-left-b, r={r}"), punct, params, lconj(&a2, &b1), a2.compose(&m2), Report);
    let rhs = Word::product([&a2, &b2, &p2, &b2.inverse()]);
    out.push(format!("a2-right-b, r={r}"), punct, params, rconj(&a2, &b1), rhs, Report);
}

/// Relations (3)-(5) of the a-generator closed presentation, rewritten in the
/// b-generator alphabet by `a_j = b_j` (j odd), `a_j = b_j⁻¹` (j even).
fn gm_targets(out: &mut Sink) {
    use Expectation::*;
    let fam = Family::BraidClosedOrientableB;
    let gen = |k: u32| if k % 2 == 1 { b(k) } else { b(k).inverse() };
    for (inst, params) in [(0, (2, 1, 0)), (1, (3, 1, 0))] {
        let (n, g) = (params.0, params.1);
        let h = 2 * g;
        let want = if inst == 0 { Certificate } else { Report };
        let tag = format!("n={n}, g={g}");
        for r in 1..=h {
            for t in (1..=h).filter(|&t| t != r) {
                let c = Word::commutator(&gen(r), &gm_a2(g, t, &gen));
                out.push(format!("GM-3, r={r}, s={t}, {tag}"), fam, params, c, Word::identity(), want);
            }
        }
        for r in 1..=h {
            for i in 2..n {
                let c = Word::commutator(&gen(r), &s(i));
                out.push(format!("GM-4, r={r}, i={i}, {tag}"), fam, params, c, Word::identity(), Certificate);
            }
        }
        for r in 1..=h {
            let c = Word::commutator(&gm_prefix(r, &gen), &gm_a2(g, r, &gen));
            out.push(format!("GM-5, r={r}, {tag}"), fam, params, c, sigma_sq(), want);
        }
    }
}
