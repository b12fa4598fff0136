use std::hint::black_box;

use chroma_skein::fixtures;
use chroma_skein::fuzz::{run_fuzz, FuzzConfig};
use chroma_skein::oracle::kauffman_bracket;
use chroma_skein::par::Exec;
use chroma_skein::skein::{all_colorations_f, evaluate_f, DEFAULT_COLORATION_LIMIT};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn fuzz(c: &mut Criterion) {
    let mut g = c.benchmark_group("fuzz_40_cases");
    g.sample_size(10);
    for (name, exec) in MODES {
        let cfg = FuzzConfig {
            cases: 40,
            exec,
            ..FuzzConfig::default()
        };
        g.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| run_fuzz(black_box(cfg)))
        });
    }
    g.finish();
}

fn colorations(c: &mut Criterion) {
    let d = fixtures::braid("s1 s2^-1 s3 s1 s2^-1 s3 s1 s3", &["a", "a", "a", "a"]);
    let mut g = c.benchmark_group("all_colorations");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &d, |b, d| {
            b.iter(|| all_colorations_f(black_box(d), DEFAULT_COLORATION_LIMIT, exec).unwrap())
        });
    }
    g.finish();
}

fn bracket(c: &mut Criterion) {
    let d = fixtures::braid(
        "s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2^-1",
        &["a", "a", "a"],
    );
    let mut g = c.benchmark_group("kauffman_bracket_16");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &d, |b, d| {
            b.iter(|| kauffman_bracket(black_box(d), exec))
        });
    }
    g.finish();
}

fn single(c: &mut Criterion) {
    let d = fixtures::braid("s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s1 s2 s2", &["a", "b", "c"]);
    c.bench_function("evaluate_f_10_crossings", |b| {
        b.iter(|| evaluate_f(black_box(&d)))
    });
}

criterion_group!(benches, fuzz, colorations, bracket, single);
criterion_main!(benches);
