//! Builders for the full braid group presentations.
//!
//! Relations that mention σ₁ only exist when n ≥ 2; at n = 1 every family
//! reduces to a presentation of the surface fundamental group.

use super::{a, b, prod, s, si, tre, z, BuildOptions, Builder, ZConvention};
use crate::words::{GenSym, Word};

fn sigma_gens(bld: &mut Builder) {
    let n = bld.params.n;
    bld.gens((1..n).map(GenSym::Sigma));
}

fn braid_relations(bld: &mut Builder) {
    let n = bld.params.n;
    for i in 1..n.saturating_sub(1) {
        bld.relation("braid", prod(&[&s(i), &s(i + 1), &s(i)]), prod(&[&s(i + 1), &s(i), &s(i + 1)]));
    }
    for i in 1..n {
        for j in (i + 2)..n {
            bld.relation("braid", prod(&[&s(i), &s(j)]), prod(&[&s(j), &s(i)]));
        }
    }
}

/// Indices i of σ_i that commute with the wall generators.
fn off_first(n: u32) -> impl Iterator<Item = u32> {
    2..n
}

fn z_commuting(n: u32, conv: ZConvention) -> Vec<u32> {
    match conv {
        ZConvention::FirstStrand => (2..n).collect(),
        ZConvention::LastStrand => (1..n).filter(|&i| i != n - 1).collect(),
    }
}

/// `σ₁⁻¹ x σ₁⁻¹ y = y σ₁⁻¹ x σ₁⁻¹` style helpers.
fn m_inv(x: &Word) -> Word {
    prod(&[&si(1), x, &si(1)])
}

fn conj1(x: &Word) -> Word {
    prod(&[&si(1), x, &s(1)])
}

/// (R1)–(R4) over the handle generators a_r, b_r shared by the orientable
/// punctured and closed presentations.
fn orientable_handle_relations(bld: &mut Builder) {
    let (n, g) = (bld.params.n, bld.params.g);
    for gen in [a as fn(u32) -> Word, b] {
        for r in 1..=g {
            for i in off_first(n) {
                bld.relation("(R1)", prod(&[&gen(r), &s(i)]), prod(&[&s(i), &gen(r)]));
            }
        }
    }
    if n < 2 {
        return;
    }
    for gen in [a as fn(u32) -> Word, b] {
        for r in 1..=g {
            let x = gen(r);
            bld.relation("(R2)", prod(&[&m_inv(&x), &x]), prod(&[&x, &m_inv(&x)]));
        }
    }
    let pairs: [(fn(u32) -> Word, fn(u32) -> Word); 4] = [(a, a), (b, b), (a, b), (b, a)];
    for (first, second) in pairs {
        for sidx in 1..=g {
            for r in (sidx + 1)..=g {
                let lhs = prod(&[&conj1(&first(sidx)), &second(r)]);
                let rhs = prod(&[&second(r), &conj1(&first(sidx))]);
                bld.relation("(R3)", lhs, rhs);
            }
        }
    }
    for r in 1..=g {
        let lhs = prod(&[&si(1), &a(r), &si(1), &b(r)]);
        let rhs = prod(&[&b(r), &si(1), &a(r), &s(1)]);
        bld.relation("(R4)", lhs, rhs);
    }
}

/// Boundary relations: z/σ commutation, z with handles, z with z.
fn boundary_relations(
    bld: &mut Builder,
    labels: [&str; 4],
    handles: &[fn(u32) -> Word],
    conv: ZConvention,
) {
    let (n, g, p) = (bld.params.n, bld.params.g, bld.params.p);
    let [lab_comm, lab_handle, lab_zz, lab_square] = labels;
    for j in 1..p {
        for &i in &z_commuting(n, conv) {
            bld.relation(lab_comm, prod(&[&z(j), &s(i)]), prod(&[&s(i), &z(j)]));
        }
    }
    if n < 2 {
        return;
    }
    for &gen in handles {
        for r in 1..=g {
            for i in 1..p {
                let lhs = prod(&[&conj1(&z(i)), &gen(r)]);
                let rhs = prod(&[&gen(r), &conj1(&z(i))]);
                bld.relation(lab_handle, lhs, rhs);
            }
        }
    }
    for j in 1..p {
        for l in (j + 1)..p {
            bld.relation(lab_zz, prod(&[&conj1(&z(j)), &z(l)]), prod(&[&z(l), &conj1(&z(j))]));
        }
    }
    for j in 1..p {
        bld.relation(lab_square, prod(&[&m_inv(&z(j)), &z(j)]), prod(&[&z(j), &m_inv(&z(j))]));
    }
}

pub(super) fn punctured_orientable(bld: &mut Builder, opts: BuildOptions) {
    let (g, p) = (bld.params.g, bld.params.p);
    sigma_gens(bld);
    bld.gens((1..=g).map(GenSym::A));
    bld.gens((1..=g).map(GenSym::B));
    bld.gens((1..p).map(GenSym::Z));
    braid_relations(bld);
    orientable_handle_relations(bld);
    boundary_relations(bld, ["(R5)", "(R6)", "(R7)", "(R8)"], &[a, b], opts.z_convention);
}

/// `[a₁,b₁⁻¹]⋯[a_g,b_g⁻¹]`.
pub(crate) fn handle_commutators(g: u32) -> Word {
    let parts: Vec<Word> = (1..=g).map(|r| Word::commutator(&a(r), &b(r).inverse())).collect();
    Word::product(parts.iter())
}

pub(super) fn closed_orientable_ab(bld: &mut Builder) {
    let (n, g) = (bld.params.n, bld.params.g);
    sigma_gens(bld);
    bld.gens((1..=g).map(GenSym::A));
    bld.gens((1..=g).map(GenSym::B));
    braid_relations(bld);
    orientable_handle_relations(bld);
    bld.relation("(TR)", handle_commutators(g), tre(n));
}

pub(super) fn punctured_sphere(bld: &mut Builder) {
    let p = bld.params.p;
    sigma_gens(bld);
    bld.gens((1..p).map(GenSym::Z));
    braid_relations(bld);
    // The sphere presentation always uses i ≠ 1 and has no handle relations.
    let n = bld.params.n;
    for j in 1..p {
        for i in off_first(n) {
            bld.relation("(R1)", prod(&[&z(j), &s(i)]), prod(&[&s(i), &z(j)]));
        }
    }
    if n < 2 {
        return;
    }
    for j in 1..p {
        for l in (j + 1)..p {
            bld.relation("(R2)", prod(&[&conj1(&z(j)), &z(l)]), prod(&[&z(l), &conj1(&z(j))]));
        }
    }
    for j in 1..p {
        bld.relation("(R3)", prod(&[&m_inv(&z(j)), &z(j)]), prod(&[&z(j), &m_inv(&z(j))]));
    }
}

/// (R1)–(R3) of the non-orientable presentations.
fn nonorientable_handle_relations(bld: &mut Builder) {
    let (n, g) = (bld.params.n, bld.params.g);
    for r in 1..=g {
        for i in off_first(n) {
            bld.relation("(R1)", prod(&[&a(r), &s(i)]), prod(&[&s(i), &a(r)]));
        }
    }
    if n < 2 {
        return;
    }
    for r in 1..=g {
        let lhs = prod(&[&si(1), &a(r), &si(1), &a(r)]);
        let rhs = prod(&[&a(r), &si(1), &a(r), &s(1)]);
        bld.relation("(R2)", lhs, rhs);
    }
    for sidx in 1..=g {
        for r in (sidx + 1)..=g {
            let lhs = prod(&[&conj1(&a(sidx)), &a(r)]);
            let rhs = prod(&[&a(r), &conj1(&a(sidx))]);
            bld.relation("(R3)", lhs, rhs);
        }
    }
}

pub(super) fn punctured_nonorientable(bld: &mut Builder, opts: BuildOptions) {
    let (g, p) = (bld.params.g, bld.params.p);
    sigma_gens(bld);
    bld.gens((1..=g).map(GenSym::A));
    bld.gens((1..p).map(GenSym::Z));
    braid_relations(bld);
    nonorientable_handle_relations(bld);
    boundary_relations(bld, ["(R4)", "(R5)", "(R7)", "(R8)"], &[a], opts.z_convention);
}

pub(super) fn closed_nonorientable(bld: &mut Builder) {
    let (n, g) = (bld.params.n, bld.params.g);
    sigma_gens(bld);
    bld.gens((1..=g).map(GenSym::A));
    braid_relations(bld);
    nonorientable_handle_relations(bld);
    // (R4) of this family mentions z_j, which do not exist on a closed
    // surface; it is not emitted.
    bld.notes.push("(R4): no boundary generators on a closed surface; omitted".into());
    let lhs: Vec<Word> = (1..=g).map(a).collect();
    bld.relation("(TR)", Word::product(lhs.iter()), tre(n));
}

pub(super) fn closed_orientable_b(bld: &mut Builder) {
    let (n, g) = (bld.params.n, bld.params.g);
    let h = 2 * g;
    sigma_gens(bld);
    bld.gens((1..=h).map(GenSym::B));
    braid_relations(bld);
    for r in 1..=h {
        for i in off_first(n) {
            bld.relation("(R1)", prod(&[&b(r), &s(i)]), prod(&[&s(i), &b(r)]));
        }
    }
    if n >= 2 {
        for sidx in 1..=h {
            for r in (sidx + 1)..=h {
                let lhs = prod(&[&b(sidx), &si(1), &b(r), &si(1)]);
                let rhs = prod(&[&s(1), &b(r), &si(1), &b(sidx)]);
                bld.relation("(R2)", lhs, rhs);
            }
        }
        for r in 1..=h {
            let lhs = prod(&[&b(r), &si(1), &b(r), &si(1)]);
            let rhs = prod(&[&si(1), &b(r), &si(1), &b(r)]);
            bld.relation("(R3)", lhs, rhs);
        }
    }
    bld.relation("(TR)", closed_b_boundary_word(g), tre(n));
}

/// `b₁b₂⁻¹⋯b_{2g−1}b_{2g}⁻¹ b₁⁻¹b₂⋯b_{2g−1}⁻¹b_{2g}`.
pub(crate) fn closed_b_boundary_word(g: u32) -> Word {
    let h = 2 * g;
    let first: Vec<Word> = (1..=h).map(|r| if r % 2 == 1 { b(r) } else { b(r).inverse() }).collect();
    let second: Vec<Word> = (1..=h).map(|r| if r % 2 == 1 { b(r).inverse() } else { b(r) }).collect();
    Word::product(first.iter().chain(second.iter()))
}

/// `A_{2,r} = σ₁⁻¹(a₁⋯a_{r−1} a_{r+1}⁻¹⋯a_{2g}⁻¹)σ₁⁻¹` over generators `gen`.
pub(crate) fn gm_a2(g: u32, r: u32, gen: &dyn Fn(u32) -> Word) -> Word {
    let h = 2 * g;
    let mut parts: Vec<Word> = vec![si(1)];
    parts.extend((1..r).map(gen));
    parts.extend(((r + 1)..=h).map(|k| gen(k).inverse()));
    parts.push(si(1));
    Word::product(parts.iter())
}

/// `a₁⋯a_r` over generators `gen`.
pub(crate) fn gm_prefix(r: u32, gen: &dyn Fn(u32) -> Word) -> Word {
    let parts: Vec<Word> = (1..=r).map(gen).collect();
    Word::product(parts.iter())
}

pub(super) fn closed_gm(bld: &mut Builder) {
    let (n, g) = (bld.params.n, bld.params.g);
    let h = 2 * g;
    sigma_gens(bld);
    bld.gens((1..=h).map(GenSym::A));
    braid_relations(bld);
    if n >= 2 {
        for r in 1..=h {
            for sidx in (1..=h).filter(|&x| x != r) {
                let c = Word::commutator(&a(r), &gm_a2(g, sidx, &a));
                bld.relation("(3)", c, Word::identity());
            }
        }
    }
    for r in 1..=h {
        for i in off_first(n) {
            bld.relation("(4)", Word::commutator(&a(r), &s(i)), Word::identity());
        }
    }
    if n >= 2 {
        for r in 1..=h {
            let c = Word::commutator(&gm_prefix(r, &a), &gm_a2(g, r, &a));
            bld.relation("(5)", c, s(1).pow(2));
        }
    }
    let first: Vec<Word> = (1..=h).map(a).collect();
    let second: Vec<Word> = (1..=h).map(|k| a(k).inverse()).collect();
    bld.relation("(6)", Word::product(first.iter().chain(second.iter())), tre(n));
}
