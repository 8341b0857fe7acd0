//! Named elements of the braid presentations used throughout the proofs:
//! τ, ω, ζ, β, γ, ρ, tre, the puncture loop and the σ₁-conjugates a_{2,s},
//! b_{2,s}; the generating set of the index-n subgroup B⁰ and the forgetful
//! map on it.

use super::braid::handle_commutators;
use super::pure::{expand_pure_generator, pure_generator_pairs, PureIndexing};
use super::{a, b, s, si, tre, z, Family, Presentation, SurfaceParams};
use crate::error::{Error, Result};
use crate::words::{Side, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Derived {
    Tau(u32),
    Omega(u32),
    Zeta(u32),
    Beta,
    Gamma,
    Rho(u32),
    Tre,
    PunctureLoop,
    A2(u32),
    B2(u32),
}

fn out_of_range(what: String) -> Error {
    Error::IndexOutOfRange(what)
}

/// `σ_{n−1}⁻¹⋯σ₁⁻¹ x σ₁⋯σ_{n−1}`: moves the first strand's loop to the last.
fn to_last_strand(x: &Word, n: u32) -> Word {
    let rho: Vec<Word> = (1..n).map(s).collect();
    x.conjugate(&Word::product(rho.iter()), Side::Right)
}

pub fn derived_element(name: Derived, params: &SurfaceParams) -> Result<Word> {
    let SurfaceParams { n, g, p, .. } = *params;
    Ok(match name {
        Derived::Tau(j) => {
            if !(1..n).contains(&j) {
                return Err(out_of_range(format!("tau_{j} needs 1 <= j <= {}", n - 1)));
            }
            let up: Vec<Word> = ((j + 1)..n).rev().map(s).collect();
            let conj = Word::product(up.iter());
            Word::product([&conj, &s(j).pow(2), &conj.inverse()])
        }
        Derived::Omega(k) => {
            if !(1..=2 * g).contains(&k) {
                return Err(out_of_range(format!("omega_{k} needs 1 <= k <= {}", 2 * g)));
            }
            let r = k.div_ceil(2);
            let x = if k % 2 == 1 { a(r) } else { b(r) };
            to_last_strand(&x, n)
        }
        Derived::Zeta(j) => {
            if j < 1 || j >= p {
                return Err(out_of_range(format!("zeta_{j} needs 1 <= j < p = {p}")));
            }
            to_last_strand(&z(j), n)
        }
        Derived::Beta => {
            let taus = (1..n)
                .map(|j| derived_element(Derived::Tau(j), params))
                .collect::<Result<Vec<_>>>()?;
            Word::product(taus.iter())
        }
        Derived::Gamma => {
            if n < 2 {
                return Err(out_of_range("gamma needs n >= 2".into()));
            }
            let beta = derived_element(Derived::Beta, params)?;
            let tau1 = derived_element(Derived::Tau(1), params)?;
            tau1.conjugate(&beta, Side::Right)
        }
        Derived::Rho(j) => {
            if !(1..=n).contains(&j) {
                return Err(out_of_range(format!("rho_{j} needs 1 <= j <= {n}")));
            }
            let parts: Vec<Word> = (j..n).map(s).collect();
            Word::product(parts.iter())
        }
        Derived::Tre => tre(n),
        Derived::PunctureLoop => {
            if p < 1 {
                return Err(out_of_range("the puncture loop needs p >= 1".into()));
            }
            let zs: Vec<Word> = (1..p).map(z).collect();
            Word::product([&handle_commutators(g), &tre(n).inverse(), &Word::product(zs.iter())])
        }
        Derived::A2(r) | Derived::B2(r) => {
            if !(1..=g).contains(&r) || n < 2 {
                return Err(out_of_range(format!("a_2,{r} needs 1 <= r <= {g} and n >= 2")));
            }
            let x = if matches!(name, Derived::A2(_)) { a(r) } else { b(r) };
            Word::product([&si(1), &x, &s(1)])
        }
    })
}

/// Named generators of the index-n subgroup B⁰.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum B0Gen {
    A(u32),
    B(u32),
    Z(u32),
    Sigma(u32),
    Tau(u32),
    Omega(u32),
    Zeta(u32),
}

/// The generating set of B⁰: handle generators, σ₁…σ_{n−2}, τ₁…τ_{n−1},
/// ω₁…ω_{2g}, and for punctured surfaces ζ₁…ζ_{p−1} together with the
/// boundary generators z₁…z_{p−1} themselves.
pub fn b0_generators(pres: &Presentation) -> Result<Vec<(B0Gen, Word)>> {
    let params = &pres.params;
    let SurfaceParams { n, g, p, .. } = *params;
    match pres.family {
        Family::BraidPuncturedOrientable
        | Family::BraidClosedOrientableAB
        | Family::BraidPuncturedSphere => {}
        f => return Err(Error::Unsupported(format!("no B0 generating set for {f}"))),
    }
    let mut out = Vec::new();
    out.extend((1..=g).map(|r| (B0Gen::A(r), a(r))));
    out.extend((1..=g).map(|r| (B0Gen::B(r), b(r))));
    out.extend((1..p).map(|j| (B0Gen::Z(j), z(j))));
    out.extend((1..n.saturating_sub(1)).map(|j| (B0Gen::Sigma(j), s(j))));
    for j in 1..n {
        out.push((B0Gen::Tau(j), derived_element(Derived::Tau(j), params)?));
    }
    for k in 1..=2 * g {
        out.push((B0Gen::Omega(k), derived_element(Derived::Omega(k), params)?));
    }
    for j in 1..p {
        out.push((B0Gen::Zeta(j), derived_element(Derived::Zeta(j), params)?));
    }
    Ok(out)
}

/// The forgetful map on B⁰'s generators, landing in the presentation on
/// n−1 strands: surface generators and σ_j (j ≤ n−2) survive, τ, ω, ζ die.
pub fn theta_tilde(gen: B0Gen, params_n: &SurfaceParams) -> Result<Word> {
    let n = params_n.n;
    if n < 2 {
        return Err(Error::Unsupported("the forgetful map needs n >= 2".into()));
    }
    Ok(match gen {
        B0Gen::A(r) => a(r),
        B0Gen::B(r) => b(r),
        B0Gen::Z(j) => z(j),
        B0Gen::Sigma(j) if j + 2 <= n => s(j),
        B0Gen::Sigma(j) => return Err(out_of_range(format!("s{j} is not in B0 at n = {n}"))),
        B0Gen::Tau(_) | B0Gen::Omega(_) | B0Gen::Zeta(_) => Word::identity(),
    })
}

/// Braid words of every pure generator `A_{i,j}` for a full braid
/// presentation (punctured orientable, closed orientable, punctured sphere).
pub fn pure_subgroup_generators(pres: &Presentation) -> Result<Vec<Word>> {
    match pres.family {
        Family::BraidPuncturedOrientable
        | Family::BraidClosedOrientableAB
        | Family::BraidPuncturedSphere => {}
        f => return Err(Error::Unsupported(format!("no pure generator expansion for {f}"))),
    }
    let SurfaceParams { n, g, p, .. } = pres.params;
    let idx = PureIndexing::new(n, g, p);
    pure_generator_pairs(&idx)
        .into_iter()
        .map(|(i, j)| expand_pure_generator(i, j, &idx))
        .collect()
}
