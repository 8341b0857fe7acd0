use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sbk_bench::{random_matrix, random_surface_word};
use sbk_core::morphisms::canonical_permutation_hom;
use sbk_core::solvers::{abelian_invariants_from_relators, smith_normal_form, Dehn};
use sbk_core::{build, Family};

fn snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith normal form");
    for size in [5, 10, 20] {
        let m = random_matrix(size as u64, size, size, 9);
        group.bench_with_input(BenchmarkId::from_parameter(size), &m, |b, m| {
            b.iter(|| smith_normal_form(m, size))
        });
    }
    group.finish();

    let pres = build(Family::PurePunctured, 4, 2, 2).unwrap();
    let rows = pres.relation_matrix();
    c.bench_function("abelianize pure-punctured(4,2,2)", |b| {
        b.iter(|| abelian_invariants_from_relators(pres.generator_count(), &rows))
    });
}

fn dehn(c: &mut Criterion) {
    let mut group = c.benchmark_group("dehn reduce");
    for g in [2, 3] {
        let solver = Dehn::surface(g);
        let words: Vec<_> = (0..64).map(|k| random_surface_word(k, g, 40)).collect();
        group.bench_with_input(BenchmarkId::new("genus", g), &words, |b, words| {
            b.iter(|| words.iter().filter(|w| solver.is_trivial(w).unwrap()).count())
        });
    }
    group.finish();
}

fn permutation_check(c: &mut Criterion) {
    let pres = build(Family::BraidPuncturedOrientable, 5, 3, 3).unwrap();
    c.bench_function("symmetric check braid-punctured(5,3,3)", |b| {
        b.iter(|| canonical_permutation_hom(&pres).unwrap().verify().overall)
    });
}

criterion_group!(benches, snf, dehn, permutation_check);
criterion_main!(benches);
