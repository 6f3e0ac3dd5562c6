use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use goto_semigroup::harness::{map_semigroups, verify, EnumSpec, Execution};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariant_report_genus_12");
    group.sample_size(10);
    let spec = EnumSpec::by_genus(12);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                let reports = map_semigroups(&spec, exec, |s| s.invariant_report().map(|r| r.chain()));
                black_box(reports.unwrap().len())
            })
        });
    }
    group.finish();
}

fn properties(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for id in ["chain_star", "theorem_except"] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(id, name), &exec, |b, &exec| {
                b.iter(|| black_box(verify(id, None, exec).unwrap().checked))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, invariants, properties);
criterion_main!(benches);
