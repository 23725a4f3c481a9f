use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use isodual_bench::{cyclotomic_code, length_22_code, ring, self_dual_length_31};
use isodual_core::constructions::thm510_isodual;
use isodual_core::fq_poly::factor_xn_minus_1;
use isodual_core::{basic_irreducible_factors, find_splittings, DEFAULT_BUDGET};

fn factorization(c: &mut Criterion) {
    c.bench_function("factor x^31-1 over F_2", |b| b.iter(|| factor_xn_minus_1(black_box(31), 2)));
    c.bench_function("hensel lift x^31-1 to Z/4", |b| b.iter(|| basic_irreducible_factors(black_box(31), ring(2, 2))));
    c.bench_function("hensel lift x^11-1 to Z/5^4", |b| {
        b.iter(|| basic_irreducible_factors(black_box(11), ring(5, 4)))
    });
    c.bench_function("splittings mod 73 over F_3", |b| b.iter(|| find_splittings(black_box(73), 3)));
}

fn duality(c: &mut Criterion) {
    let code = self_dual_length_31();
    c.bench_function("dual of self-dual length 31", |b| b.iter(|| black_box(&code).dual()));
    let small = cyclotomic_code();
    c.bench_function("isodual certificate length 10", |b| b.iter(|| black_box(&small).certify_isodual()));
    let split = find_splittings(11, 5).unwrap().remove(0);
    c.bench_function("construct duadic isodual Z/25 length 22", |b| {
        b.iter(|| thm510_isodual(11, 1, ring(5, 2), black_box(&split)))
    });
}

fn weights(c: &mut Criterion) {
    let mut group = c.benchmark_group("min weight");
    group.sample_size(10);
    let small = cyclotomic_code();
    group.bench_function("direct 9^5 words", |b| b.iter(|| black_box(&small).min_weight_direct(DEFAULT_BUDGET)));
    let big = length_22_code();
    group.bench_function("residue 3^11 words", |b| b.iter(|| black_box(&big).min_weight_residue()));
    group.finish();
}

criterion_group!(benches, factorization, duality, weights);
criterion_main!(benches);
