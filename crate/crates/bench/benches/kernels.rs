use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cotensor_core::cotensor::{cobar_bicomplex, cotensor, cotor};
use cotensor_core::postnikov::{factorize, postnikov_tower};
use cotensor_core::{e2_page, fixtures, gen, run_to_einfty, Field, Matrix};

fn comodule(name: &str, maxdeg: usize) -> cotensor_core::DGComodule {
    fixtures::comodule_by_name(name, Field::gf(2), maxdeg).unwrap().unwrap().comodule
}

fn rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    for (label, field) in [("gf2", Field::gf(2)), ("gf3", Field::gf(3)), ("q", Field::rationals())] {
        for n in [16, 48] {
            let m = Matrix::random(field, n, n, &mut gen::rng(7));
            group.bench_with_input(BenchmarkId::new(label, n), &m, |b, m| b.iter(|| black_box(m).rank()));
        }
    }
    group.finish();
}

fn split(c: &mut Criterion) {
    let x = gen::random_complex(Field::gf(3), 10, 8, &mut gen::rng(11));
    c.bench_function("split/gf3-n10", |b| b.iter(|| black_box(&x).split()));
}

fn cotensor_products(c: &mut Criterion) {
    let mut group = c.benchmark_group("cotensor");
    for maxdeg in [8, 12] {
        let (x, y) = (comodule("regular-f4", maxdeg), comodule("cofree-s1-f4", maxdeg));
        group.bench_with_input(BenchmarkId::new("f4", maxdeg), &maxdeg, |b, _| b.iter(|| cotensor(&x, &y).unwrap()));
    }
    group.finish();
}

fn cobar(c: &mut Criterion) {
    let k = comodule("triv-k", 10);
    c.bench_function("cobar/f2-n10-q4", |b| b.iter(|| cobar_bicomplex(&k, &k, 4).unwrap()));
    c.bench_function("cotor/f2-n10-q3", |b| b.iter(|| cotor(&k, &k, 3).unwrap()));
    c.bench_function("emss/f2-n10-q3", |b| b.iter(|| run_to_einfty(&e2_page(&k, &k, 3).unwrap())));
}

fn towers(c: &mut Criterion) {
    let k = comodule("triv-k", 8);
    c.bench_function("postnikov/triv-k-n8-t5", |b| b.iter(|| postnikov_tower(&k, 5).unwrap()));
    let j = fixtures::coaugmentation_f2(Field::gf(2), 8).unwrap();
    c.bench_function("factorize/coaug-n8-t5", |b| b.iter(|| factorize(&j, 5).unwrap()));
}

criterion_group!(benches, rank, split, cotensor_products, cobar, towers);
criterion_main!(benches);
