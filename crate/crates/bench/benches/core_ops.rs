use criterion::{black_box, criterion_group, criterion_main, Criterion};
use szk_core::classes::conjugacy_classes;
use szk_core::group::{closure, Group};
use szk_core::{build_spec, character_degrees, F2m};

fn field_mul(c: &mut Criterion) {
    let f = F2m::with_default_poly(16).unwrap();
    c.bench_function("gf2m mul (m=16)", |b| {
        b.iter(|| {
            let mut acc = 1u32;
            for a in 1..512u32 {
                acc = f.mul(black_box(acc | 1), black_box(a));
            }
            acc
        })
    });
}

fn group_mul(c: &mut Criterion) {
    let built = build_spec("B(m=3,l=1,eps=auto)", None).unwrap();
    let g = built.group().unwrap();
    let n = g.order();
    c.bench_function("triple group law (order 512)", |b| {
        b.iter(|| {
            let mut acc = 1usize;
            for x in 0..n {
                acc = g.mul(black_box(acc), black_box(x));
            }
            acc
        })
    });
}

fn generator_closure(c: &mut Criterion) {
    let built = build_spec("B(m=3,l=1,eps=auto)", None).unwrap();
    let g = built.group().unwrap();
    let gens: Vec<usize> = g.generators();
    c.bench_function("closure from generators (order 512)", |b| {
        b.iter(|| closure(g, black_box(&gens)).len())
    });
}

fn class_enumeration(c: &mut Criterion) {
    let built = build_spec("A(m=6,l=2)", None).unwrap();
    let g = built.group().unwrap();
    c.bench_function("conjugacy classes (order 4096)", |b| {
        b.iter(|| conjugacy_classes(black_box(g)).reps.len())
    });
}

fn dixon_table(c: &mut Criterion) {
    let built = build_spec("A(m=3,l=1)", None).unwrap();
    let g = built.group().unwrap();
    c.bench_function("character degrees (order 64)", |b| {
        b.iter(|| character_degrees(black_box(g)).unwrap().degrees.len())
    });
}

criterion_group!(
    benches,
    field_mul,
    group_mul,
    generator_closure,
    class_enumeration,
    dixon_table
);
criterion_main!(benches);
