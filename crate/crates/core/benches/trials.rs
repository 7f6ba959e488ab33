//! Suite throughput with and without the rayon pool. Without the `parallel`
//! feature both variants run sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jspec::verify::{run_suite, Suite};
use jspec::TrialConfig;

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_suite");
    group.sample_size(10);
    for (suite, n, k) in [(Suite::MapPreserve, 3, 3), (Suite::Pairs, 4, 2), (Suite::RankOneK, 3, 4)] {
        let cfg = TrialConfig::new(n, k, 32, 1);
        for (label, parallel) in [("parallel", true), ("sequential", false)] {
            let mut cfg = cfg.clone();
            cfg.parallel = parallel;
            group.bench_with_input(BenchmarkId::new(label, suite.name()), &cfg, |b, cfg| {
                b.iter(|| run_suite(suite, cfg, None).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, suites);
criterion_main!(benches);
