use criterion::{criterion_group, criterion_main, Criterion};
use partlog::formula::parse;
use partlog::semantics::{check_partition_tautology, check_weak};

fn check(c: &mut Criterion) {
    let mp = parse("(s /\\ (s => p)) => p").unwrap();
    let nand = parse("(s | t) | (s /\\ t)").unwrap();
    let em = parse("s \\/ ~s").unwrap();
    let mut g = c.benchmark_group("check");
    g.sample_size(10);
    g.bench_function("modus-ponens/4", |b| {
        b.iter(|| check_partition_tautology(&mp, 4).unwrap())
    });
    g.bench_function("nand-identity/4", |b| {
        b.iter(|| check_partition_tautology(&nand, 4).unwrap())
    });
    g.bench_function("excluded-middle-weak/5", |b| b.iter(|| check_weak(&em, 5).unwrap()));
    g.finish();
}

criterion_group!(benches, check);
criterion_main!(benches);
