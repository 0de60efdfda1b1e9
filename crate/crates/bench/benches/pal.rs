use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use freepal::braid::{is_trivial, BraidWord};
use freepal::freegroup::FreeWord;
use freepal::pal::{in_image, pal, pal_recursive, preimage};
use freepal::quotient::{continuity_certificate, orbit_table, FiniteHom, Permutation};
use freepal::sample::{random_braid, random_pairs, random_word, seeded};

fn bench_pal(c: &mut Criterion) {
    let mut group = c.benchmark_group("pal");
    for len in [6usize, 12, 18] {
        let mut rng = seeded(len as u64);
        let words: Vec<FreeWord> = (0..64).map(|_| random_word(&mut rng, len)).collect();
        group.bench_with_input(BenchmarkId::new("direct", len), &words, |b, ws| {
            b.iter(|| ws.iter().map(|w| pal(black_box(w)).len()).sum::<usize>())
        });
        group.bench_with_input(BenchmarkId::new("recursive", len), &words, |b, ws| {
            b.iter(|| ws.iter().map(|w| pal_recursive(black_box(w)).len()).sum::<usize>())
        });
    }
    group.finish();
}

fn bench_image(c: &mut Criterion) {
    let words = FreeWord::all_up_to(6);
    c.bench_function("in_image/all_len_le_6", |b| {
        b.iter(|| words.iter().filter(|g| in_image(black_box(g))).count())
    });
    let values: Vec<FreeWord> = words.iter().map(pal).filter(|g| g.len() <= 12).collect();
    c.bench_function("preimage/pal_values_len_le_6", |b| {
        b.iter(|| values.iter().filter(|g| preimage(black_box(g)).is_ok()).count())
    });
}

fn bench_braid(c: &mut Criterion) {
    let mut rng = seeded(3);
    let braids: Vec<BraidWord> = (0..256).map(|_| random_braid(&mut rng, 10)).collect();
    c.bench_function("braid/is_trivial_len_le_10", |b| {
        b.iter(|| braids.iter().filter(|x| is_trivial(black_box(x))).count())
    });
}

fn bench_quotient(c: &mut Criterion) {
    let mut group = c.benchmark_group("orbit_table");
    group.sample_size(10);
    for n in [3usize, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| orbit_table(black_box(n)).unwrap().orbits.len())
        });
    }
    group.finish();

    let phi = FiniteHom::new(
        Permutation::from_cycles(4, "(0 1 2 3)").unwrap(),
        Permutation::from_cycles(4, "(0 1)").unwrap(),
    )
    .unwrap();
    let pairs = random_pairs(&mut seeded(11), 100, 12);
    c.bench_function("certificate/s4_100_pairs", |b| {
        b.iter(|| continuity_certificate(black_box(&phi), black_box(&pairs)))
    });
}

criterion_group!(benches, bench_pal, bench_image, bench_braid, bench_quotient);
criterion_main!(benches);
